#pragma once

#include "tsurf/appendix.hpp"

#include <filesystem>

namespace tsurf {

// One canonical JSON record per line: {family, notation, params, zcf},
// keys sorted, no whitespace. Grid order, then P-resolution order.
std::vector<std::string> corpus_lines(const AppendixFamily& fam);
std::string corpus_file_name(const std::string& family);

// Writes one file per family; returns the number of records written.
std::size_t corpus_regen(const std::filesystem::path& dir);

struct DiffEntry {
    std::string family;
    // 1-based line number.
    std::size_t line = 0;
    std::string expected;
    std::string actual;
};

struct DiffReport {
    std::size_t records = 0;
    std::vector<DiffEntry> entries;

    bool empty() const { return entries.empty(); }
};

// Throws ValidationError when a file is missing or a line is not JSON.
DiffReport corpus_check(const std::filesystem::path& dir);

}  // namespace tsurf
