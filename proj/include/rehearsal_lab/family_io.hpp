#pragma once

// Text exchange format for set families:
//
//   # sharing-family v1 n=<n> l=<l> gamma=<gamma>
//   0,9,19,30
//   1,10,20,31
//   ...

#include "rehearsal_lab/designs.hpp"
#include "rehearsal_lab/errors.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace rehearsal_lab {

inline void write_family(std::ostream& out, const SharingFamily& family)
{
    out << "# sharing-family v1 n=" << family.universe_size << " l=" << family.set_size
        << " gamma=" << family.overlap_bound << '\n';
    for (const auto& s : family.sets) {
        for (std::size_t i = 0; i < s.size(); ++i)
            out << (i ? "," : "") << s[i];
        out << '\n';
    }
}

namespace detail {

inline std::size_t parse_header_field(const std::string& header, const std::string& key)
{
    const std::string tag = " " + key + "=";
    const auto pos = header.find(tag);
    if (pos == std::string::npos)
        throw ConfigError("family header is missing '" + key + "='", 1, key);
    std::size_t consumed = 0;
    try {
        const auto value = std::stoull(header.substr(pos + tag.size()), &consumed);
        return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
        throw ConfigError("family header field '" + key + "' is not an integer", 1, key);
    }
}

} // namespace detail

inline SharingFamily read_family(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line.rfind("# sharing-family v1", 0) != 0)
        throw ConfigError("expected '# sharing-family v1' header", 1);

    SharingFamily family;
    family.universe_size = detail::parse_header_field(line, "n");
    family.set_size = detail::parse_header_field(line, "l");
    family.overlap_bound = detail::parse_header_field(line, "gamma");

    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#')
            continue;
        CueSet s;
        std::stringstream fields(line);
        std::string item;
        while (std::getline(fields, item, ',')) {
            try {
                std::size_t used = 0;
                const auto value = std::stoull(item, &used);
                if (used != item.size() && item.find_first_not_of(" \t\r", used) != std::string::npos)
                    throw ConfigError("trailing characters in '" + item + "'", line_no);
                if (value >= family.universe_size)
                    throw ConfigError("cue " + item + " outside universe", line_no);
                s.push_back(static_cast<CueId>(value));
            } catch (const ConfigError&) {
                throw;
            } catch (const std::exception&) {
                throw ConfigError("cannot parse cue '" + item + "'", line_no);
            }
        }
        if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
            throw ConfigError("set is not strictly ascending", line_no);
        family.sets.push_back(std::move(s));
    }
    detail::finalize_coverage(family);
    return family;
}

} // namespace rehearsal_lab
