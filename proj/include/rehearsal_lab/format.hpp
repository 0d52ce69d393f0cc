#pragma once

// Plain tables rendered as markdown or CSV. Numbers use 6 significant digits.

#include "rehearsal_lab/errors.hpp"

#include <cstdio>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace rehearsal_lab {

enum class OutputFormat { Markdown, Csv };

inline OutputFormat parse_output_format(std::string_view text)
{
    if (text == "markdown" || text == "md")
        return OutputFormat::Markdown;
    if (text == "csv")
        return OutputFormat::Csv;
    throw ConfigError("unknown output format '" + std::string(text) + "' (expected markdown or csv)");
}

inline std::string format_number(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

struct Table
{
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> footer; // conventions and notes

    void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

namespace detail {

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

} // namespace detail

inline void render(std::ostream& out, const Table& table, OutputFormat format)
{
    if (format == OutputFormat::Csv) {
        if (!table.title.empty())
            out << "# " << table.title << '\n';
        for (std::size_t i = 0; i < table.columns.size(); ++i)
            out << (i ? "," : "") << detail::csv_field(table.columns[i]);
        out << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << detail::csv_field(row[i]);
            out << '\n';
        }
        for (const auto& line : table.footer)
            out << "# " << line << '\n';
        return;
    }

    if (!table.title.empty())
        out << "### " << table.title << "\n\n";
    out << '|';
    for (const auto& c : table.columns)
        out << ' ' << c << " |";
    out << "\n|";
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        out << "---|";
    out << '\n';
    for (const auto& row : table.rows) {
        out << '|';
        for (const auto& cell : row)
            out << ' ' << cell << " |";
        out << '\n';
    }
    if (!table.footer.empty()) {
        out << '\n';
        for (const auto& line : table.footer)
            out << "- " << line << '\n';
    }
}

} // namespace rehearsal_lab
