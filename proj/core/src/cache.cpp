#include "symcount/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "symcount/report.hpp"

namespace symcount {

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

std::uint64_t CacheEntry::compute_checksum() const {
    return fnv1a(ptype_key + "|" + count + "|" + method + "|" + version);
}

ResultCache::ResultCache(std::string dir) {
    std::filesystem::create_directories(dir);
    path_ = (std::filesystem::path(dir) / "counts.jsonl").string();
}

std::optional<CacheEntry> ResultCache::lookup(const PolarizationType& ptype) const {
    std::ifstream in(path_);
    if (!in) return std::nullopt;
    std::optional<CacheEntry> found;
    std::string line;
    while (std::getline(in, line)) {
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) continue;
        CacheEntry e;
        try {
            e.ptype_key = j.at("ptype").get<std::string>();
            e.count = j.at("count").get<std::string>();
            e.method = j.at("method").get<std::string>();
            e.version = j.at("version").get<std::string>();
            e.checksum = j.at("checksum").get<std::uint64_t>();
        } catch (const nlohmann::json::exception&) {
            continue;
        }
        if (e.ptype_key != ptype.key()) continue;
        if (e.version != kToolVersion) continue;           // stale tool version
        if (e.checksum != e.compute_checksum()) continue;  // corrupted entry
        found = e;  // last valid entry wins
    }
    return found;
}

void ResultCache::store(const PolarizationType& ptype, const CountValue& count) {
    CacheEntry e;
    e.ptype_key = ptype.key();
    e.count = count.value.str();
    e.method = to_string(count.method);
    e.version = kToolVersion;
    e.checksum = e.compute_checksum();
    nlohmann::json j{{"ptype", e.ptype_key},
                     {"count", e.count},
                     {"method", e.method},
                     {"version", e.version},
                     {"checksum", e.checksum}};
    std::ofstream out(path_, std::ios::app);
    out << j.dump() << "\n";
}

std::optional<std::string> cache_dir_from_env() {
    if (const char* dir = std::getenv("SYMCOUNT_CACHE_DIR"); dir && *dir)
        return std::string(dir);
    return std::nullopt;
}

}  // namespace symcount
