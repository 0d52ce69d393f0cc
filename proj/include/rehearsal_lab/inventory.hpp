#pragma once

// Word, action, object, person and image inventories. The models depend only
// on the inventory sizes; the contents ship as plain text files, one entry per
// line, in the data directory.

#include "rehearsal_lab/errors.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <unordered_set>
#include <vector>

#ifndef REHEARSAL_LAB_DATA_DIR
#define REHEARSAL_LAB_DATA_DIR "data"
#endif

namespace rehearsal_lab {

inline constexpr std::size_t default_dictionary_size = 20'000;
inline constexpr std::size_t default_action_count = 140;
inline constexpr std::size_t default_object_count = 140;

class Dictionary
{
public:
    Dictionary() = default;
    explicit Dictionary(std::vector<std::string> words) : words_(std::move(words))
    {
        std::unordered_set<std::string> seen;
        for (const auto& w : words_)
            if (!seen.insert(w).second)
                throw ConfigError("dictionary contains duplicate entry '" + w + "'");
    }

    std::size_t size() const noexcept { return words_.size(); }
    bool empty() const noexcept { return words_.empty(); }
    const std::string& operator[](std::size_t i) const { return words_.at(i); }
    const std::vector<std::string>& words() const noexcept { return words_; }

private:
    std::vector<std::string> words_;
};

struct Inventory
{
    Dictionary words;
    std::vector<std::string> actions;
    std::vector<std::string> objects;
    std::vector<std::string> names;
    std::vector<std::string> images;
};

/// REHEARSAL_LAB_DATA if set, otherwise the directory configured at build time.
inline std::filesystem::path default_data_dir()
{
    if (const char* env = std::getenv("REHEARSAL_LAB_DATA"); env != nullptr && *env != '\0')
        return env;
    return REHEARSAL_LAB_DATA_DIR;
}

inline std::vector<std::string> read_lines(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open inventory file " + path.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (!line.empty())
            lines.push_back(line);
    }
    return lines;
}

inline Inventory load_inventory(const std::filesystem::path& dir = default_data_dir())
{
    Inventory inv;
    inv.words = Dictionary(read_lines(dir / "words.txt"));
    inv.actions = read_lines(dir / "actions.txt");
    inv.objects = read_lines(dir / "objects.txt");
    inv.names = read_lines(dir / "names.txt");
    inv.images = read_lines(dir / "images.txt");
    return inv;
}

} // namespace rehearsal_lab
