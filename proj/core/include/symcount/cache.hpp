#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "symcount/formulas.hpp"

namespace symcount {

/// One cached count. Entries are keyed by (polarization type, tool version);
/// a checksum over the payload is re-verified on every hit, and entries from
/// other tool versions are ignored.
struct CacheEntry {
    std::string ptype_key;
    std::string count;   // decimal
    std::string method;
    std::string version;
    std::uint64_t checksum = 0;

    std::uint64_t compute_checksum() const;
};

/// Append-only line-delimited JSON cache under `dir` (typically from
/// SYMCOUNT_CACHE_DIR). A missing file is an empty cache; corrupted or
/// mismatching lines are skipped.
class ResultCache {
public:
    explicit ResultCache(std::string dir);

    std::optional<CacheEntry> lookup(const PolarizationType& ptype) const;
    void store(const PolarizationType& ptype, const CountValue& count);

    std::string path() const { return path_; }

private:
    std::string path_;
};

/// Cache directory from options/env, if any.
std::optional<std::string> cache_dir_from_env();

}  // namespace symcount
