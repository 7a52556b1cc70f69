#include "spechtkl/cache.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

#include "spechtkl/json_io.hpp"
#include "spechtkl/tableaux.hpp"

namespace skl {

std::string cache_to_string(const KLTable& kl, const std::vector<ParabolicKLTable>& pkls) {
    ojson j = ojson::object();
    j["schema_version"] = kCacheSchemaVersion;
    j["n"] = kl.n();
    j["kl_rows"] = kl_rows_to_json(kl);
    // emit the parabolic tables in sorted key order so the serialization does
    // not depend on the order tables were computed or reloaded in
    std::vector<std::pair<std::string, const ParabolicKLTable*>> sorted;
    for (const auto& t : pkls) sorted.emplace_back(comp_key(t.mu()), &t);
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    ojson tables = ojson::object();
    for (const auto& [key, t] : sorted) tables[key] = pkl_to_json(*t);
    j["pkl_tables"] = std::move(tables);
    return j.dump() + "\n";
}

void save_cache(const std::string& path, const KLTable& kl,
                const std::vector<ParabolicKLTable>& pkls) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IOFailure("cannot open cache file '" + path + "' for writing");
    f << cache_to_string(kl, pkls);
    f.flush();
    if (!f) throw IOFailure("failed writing cache file '" + path + "'");
}

std::optional<CachedTables> load_cache(const std::string& path, int expected_n) {
    std::ifstream f(path, std::ios::binary);
    if (!f) return std::nullopt;
    std::stringstream buf;
    buf << f.rdbuf();

    nlohmann::json j;
    try {
        j = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::exception&) {
        throw SchemaMismatch("cache file is not valid JSON");
    }
    if (!j.is_object() || !j.contains("schema_version") || !j["schema_version"].is_number_integer())
        throw SchemaMismatch("cache file misses its schema version");
    if (j["schema_version"].get<int>() != kCacheSchemaVersion)
        throw SchemaMismatch("cache schema version mismatch");
    if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<int>() != expected_n)
        throw SchemaMismatch("cache holds tables for a different n");
    if (!j.contains("kl_rows") || !j.contains("pkl_tables") || !j["pkl_tables"].is_object())
        throw SchemaMismatch("cache file misses its payload");

    try {
        CachedTables out{kl_rows_from_json(expected_n, j["kl_rows"]), {}};
        for (auto it = j["pkl_tables"].begin(); it != j["pkl_tables"].end(); ++it)
            out.pkls.push_back(pkl_from_json(it.value()));
        return out;
    } catch (const SchemaMismatch&) {
        throw;
    } catch (const Error& e) {
        throw SchemaMismatch(std::string("cache payload rejected: ") + e.what());
    }
}

CacheReport cache_roundtrip(const std::string& path, int n) {
    KLTable kl = KLTable::build(n);
    std::vector<ParabolicKLTable> pkls;
    for (const Composition& mu : compositions_of(n)) pkls.push_back(ParabolicKLTable::build(mu));

    const std::string before = cache_to_string(kl, pkls);
    save_cache(path, kl, pkls);
    auto loaded = load_cache(path, n);
    if (!loaded) return CacheReport{false, "cache file vanished between save and load"};
    const std::string after = cache_to_string(loaded->kl, loaded->pkls);
    if (before != after)
        return CacheReport{false, "canonical serialization changed across the roundtrip"};
    return CacheReport{true, "roundtrip reproduced " + std::to_string(before.size()) +
                                 " bytes exactly"};
}

}  // namespace skl
