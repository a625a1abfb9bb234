#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "qtknots/symfunc.hpp"

namespace qtknots::cli {

constexpr int kCacheVersion = 1;

std::filesystem::path cache_file(const std::filesystem::path& dir, int n);

// Serialized form: {"version": 1, "degree": n, "entries": {lambda: {mu: coeff}}}.
std::string cache_dump(int n, const std::map<Partition, SymF>& table);
// Parses a cache document; throws ParseError on any schema or content problem.
std::map<Partition, SymF> cache_parse(const std::string& text, int n);

// Loads a cache file into the in-memory Macdonald table. Returns false when
// the file is missing; a malformed file is reported and ignored.
bool cache_load(const std::filesystem::path& dir, int n);
// Writes the full degree-n table through a temporary file and a rename.
void cache_store(const std::filesystem::path& dir, int n);

}  // namespace qtknots::cli
