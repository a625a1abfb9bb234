#include "cache.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include "json.hpp"
#include "qtknots/errors.hpp"

namespace qtknots::cli {

using nlohmann::json;

std::filesystem::path cache_file(const std::filesystem::path& dir, int n) {
    return dir / ("macdonald_n" + std::to_string(n) + ".json");
}

std::string cache_dump(int n, const std::map<Partition, SymF>& table) {
    json entries = json::object();
    for (const auto& [lam, f] : table) {
        json row = json::object();
        for (const auto& [mu, c] : f.coeffs()) row[mu.key()] = c.to_laurent().str();
        entries[lam.key()] = row;
    }
    json doc = {{"version", kCacheVersion}, {"degree", n}, {"entries", entries}};
    return doc.dump(1) + "\n";
}

std::map<Partition, SymF> cache_parse(const std::string& text, int n) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("cache is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || doc.value("version", -1) != kCacheVersion) throw ParseError("cache version mismatch");
    if (doc.value("degree", -1) != n) throw ParseError("cache degree mismatch");
    const json& entries = doc.at("entries");
    std::map<Partition, SymF> out;
    for (auto it = entries.begin(); it != entries.end(); ++it) {
        Partition lam = Partition::parse(it.key());
        if (lam.size() != n) throw ParseError("cache entry of wrong degree");
        SymF f(n, Basis::schur);
        for (auto jt = it.value().begin(); jt != it.value().end(); ++jt) {
            Partition mu = Partition::parse(jt.key());
            if (mu.size() != n) throw ParseError("cache coefficient of wrong degree");
            f.add(mu, QTRat(Laurent::parse(jt.value().get<std::string>())));
        }
        out.emplace(lam, std::move(f));
    }
    if (out.size() != partitions_of(n).size()) throw ParseError("cache is missing partitions");
    return out;
}

bool cache_load(const std::filesystem::path& dir, int n) {
    const auto path = cache_file(dir, n);
    std::ifstream in(path);
    if (!in) return false;
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        preload_macdonald(n, cache_parse(ss.str(), n));
        return true;
    } catch (const Error& e) {
        std::cerr << "warning: ignoring cache " << path.string() << ": " << e.what() << "\n";
        return false;
    }
}

void cache_store(const std::filesystem::path& dir, int n) {
    std::filesystem::create_directories(dir);
    const auto path = cache_file(dir, n);
    const auto tmp = path.string() + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << cache_dump(n, macdonald_table(n));
        if (!out) throw std::runtime_error("cannot write cache file " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace qtknots::cli
