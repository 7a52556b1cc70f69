#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spechtkl/hecke.hpp"
#include "spechtkl/parabolic.hpp"

namespace skl {

inline constexpr int kCacheSchemaVersion = 1;

struct CachedTables {
    KLTable kl;
    std::vector<ParabolicKLTable> pkls;
};

// Canonical JSON text of the cache payload (used for both persistence and
// the byte-equality roundtrip check).
std::string cache_to_string(const KLTable& kl, const std::vector<ParabolicKLTable>& pkls);

// Throws IOFailure if the path cannot be written.
void save_cache(const std::string& path, const KLTable& kl,
                const std::vector<ParabolicKLTable>& pkls);

// nullopt if the file does not exist. Throws SchemaMismatch on a version
// mismatch, a different n, or any corruption; callers rebuild on that.
std::optional<CachedTables> load_cache(const std::string& path, int expected_n);

struct CacheReport {
    bool ok;
    std::string detail;
};

// Builds the S_n tables plus every parabolic table, saves, reloads, and
// compares the canonical serializations byte for byte.
CacheReport cache_roundtrip(const std::string& path, int n);

}  // namespace skl
