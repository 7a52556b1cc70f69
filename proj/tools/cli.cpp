#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <map>
#include <optional>

#include "spechtkl/cache.hpp"
#include "spechtkl/cells.hpp"
#include "spechtkl/form.hpp"
#include "spechtkl/json_io.hpp"
#include "spechtkl/specht.hpp"

namespace skl::cli {

namespace {

// Lazily builds or cache-loads the tables a subcommand needs. A corrupted or
// stale cache is discarded and rebuilt; if anything new was computed the
// cache file is rewritten on flush.
class TableProvider {
public:
    TableProvider(int n, std::string cache_path) : n_(n), path_(std::move(cache_path)) {
        if (path_.empty()) return;
        try {
            if (auto cached = load_cache(path_, n_)) {
                kl_.emplace(std::move(cached->kl));
                for (auto& t : cached->pkls) {
                    std::string key = comp_key(t.mu());
                    pkls_.emplace(std::move(key), std::move(t));
                }
            }
        } catch (const SchemaMismatch&) {
            // unusable cache; fall through to a rebuild and overwrite on flush
            dirty_ = true;
        }
    }

    const KLTable& kl() {
        if (!kl_) {
            kl_.emplace(KLTable::build(n_));
            dirty_ = true;
        }
        return *kl_;
    }

    const CellPartition& cells() {
        if (!cells_) cells_ = right_cells(kl());
        return *cells_;
    }

    const ParabolicKLTable& pkl(const Composition& mu) {
        auto it = pkls_.find(comp_key(mu));
        if (it == pkls_.end()) {
            it = pkls_.emplace(comp_key(mu), ParabolicKLTable::build(mu)).first;
            dirty_ = true;
        }
        return it->second;
    }

    void flush() {
        if (path_.empty() || !dirty_) return;
        std::vector<ParabolicKLTable> tables;
        for (const auto& [key, t] : pkls_) tables.push_back(t);
        save_cache(path_, kl(), tables);
        dirty_ = false;
    }

private:
    int n_;
    std::string path_;
    bool dirty_ = false;
    std::optional<KLTable> kl_;
    std::optional<CellPartition> cells_;
    std::map<std::string, ParabolicKLTable> pkls_;
};

std::string effective_cache(const std::string& flag) {
    if (!flag.empty()) return flag;
    const char* env = std::getenv("SPECHT_CACHE");
    return env ? std::string(env) : std::string();
}

ojson matrix_to_json(const PolyMatrix& m, bool at_one) {
    ojson rows = ojson::array();
    for (const auto& row : m) {
        ojson r = ojson::array();
        for (const auto& x : row) {
            if (at_one)
                r.push_back(static_cast<long long>(x.eval_at_one()));
            else
                r.push_back(x.str());
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

void emit(std::ostream& out, const ojson& j) { out << j.dump() << "\n"; }

long long ms_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
        .count();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Kazhdan-Lusztig, cell and Specht-module computations"};
    app.require_subcommand(1);

    int n = 0, gen = 0, order = 10;
    std::string mu_str, x_str, y_str, w_str, basis = "projective", cache_flag, format = "json";
    bool at_one = false, inverse = false;

    auto add_common = [&](CLI::App* c, bool needs_n, bool needs_mu) {
        if (needs_n) c->add_option("--n", n, "rank of the symmetric group")->required();
        if (needs_mu) c->add_option("--mu", mu_str, "composition, comma separated")->required();
        c->add_option("--cache", cache_flag, "cache file path (SPECHT_CACHE works too)");
        c->add_option("--format", format, "output format")->check(CLI::IsMember({"json"}));
    };

    CLI::App* c_kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial h(x,y)");
    add_common(c_kl, true, false);
    c_kl->add_option("--x", x_str)->required();
    c_kl->add_option("--y", y_str)->required();

    CLI::App* c_mu = app.add_subcommand("mu", "KL mu-function");
    add_common(c_mu, true, false);
    c_mu->add_option("--x", x_str)->required();
    c_mu->add_option("--y", y_str)->required();

    CLI::App* c_cells = app.add_subcommand("cells", "right cells of S_n");
    add_common(c_cells, true, false);

    CLI::App* c_pkl = app.add_subcommand("pkl", "parabolic KL polynomial n(x,y)");
    add_common(c_pkl, false, true);
    c_pkl->add_option("--x", x_str)->required();
    c_pkl->add_option("--y", y_str)->required();

    CLI::App* c_specht = app.add_subcommand("specht", "Specht action matrix of one generator");
    add_common(c_specht, false, true);
    c_specht->add_option("--gen", gen, "generator index")->required();
    c_specht->add_option("--basis", basis, "projective or simple")
        ->check(CLI::IsMember({"projective", "simple"}));

    CLI::App* c_sverify = app.add_subcommand("specht-verify",
                                             "relations and identification for every composition");
    add_common(c_sverify, true, false);

    CLI::App* c_gram = app.add_subcommand("gram", "Gram matrix of the invariant form");
    add_common(c_gram, false, true);
    c_gram->add_flag("--inverse", inverse, "emit the inverse, expanded as series");
    c_gram->add_option("--order", order, "series truncation order for --inverse");
    c_gram->add_flag("--at-one", at_one, "evaluate entries at v = 1");

    CLI::App* c_char = app.add_subcommand("character", "character table row at v = 1");
    add_common(c_char, false, true);

    CLI::App* c_reg = app.add_subcommand("regular", "standard-basis matrix of H_s + v");
    add_common(c_reg, true, false);
    c_reg->add_option("--gen", gen, "generator index")->required();

    CLI::App* c_bench = app.add_subcommand("bench", "wall-clock timings of the pipeline phases");
    add_common(c_bench, true, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (*c_kl || *c_mu) {
            TableProvider tables(n, effective_cache(cache_flag));
            const SymmetricGroup& G = SymmetricGroup::get(n);
            Permutation x = parse_permutation(x_str, n);
            Permutation y = parse_permutation(y_str, n);
            ojson j;
            if (*c_kl)
                j["h"] = tables.kl().h(G.id_of(x), G.id_of(y)).str();
            else
                j["mu"] = tables.kl().mu(G.id_of(x), G.id_of(y));
            tables.flush();
            emit(out, j);
            return 0;
        }

        if (*c_cells) {
            TableProvider tables(n, effective_cache(cache_flag));
            const CellPartition& cp = tables.cells();
            const SymmetricGroup& G = SymmetricGroup::get(n);
            ojson j;
            j["n"] = n;
            ojson cells = ojson::array();
            for (const auto& cell : cp.cells) {
                ojson c = ojson::array();
                for (int id : cell) c.push_back(perm_to_json(G.perm(id)));
                cells.push_back(std::move(c));
            }
            j["cells"] = std::move(cells);
            tables.flush();
            emit(out, j);
            return 0;
        }

        if (*c_pkl) {
            Composition mu = parse_composition(mu_str);
            const int nn = comp_sum(mu);
            TableProvider tables(nn, effective_cache(cache_flag));
            Permutation x = parse_permutation(x_str, nn);
            Permutation y = parse_permutation(y_str, nn);
            ojson j = tables.pkl(mu).n_poly(x, y).str();
            tables.flush();
            emit(out, j);
            return 0;
        }

        if (*c_specht) {
            Composition mu = parse_composition(mu_str);
            TableProvider tables(comp_sum(mu), effective_cache(cache_flag));
            SpechtModel model = build_specht_model(mu, tables.kl(), tables.cells());
            if (gen < 1 || gen >= comp_sum(mu)) throw Error("generator index out of range");
            const PolyMatrix& M = basis == "simple" ? model.simple[gen - 1] : model.proj[gen - 1];
            tables.flush();
            emit(out, matrix_to_json(M, false));
            return 0;
        }

        if (*c_sverify) {
            TableProvider tables(n, effective_cache(cache_flag));
            ojson j;
            j["n"] = n;
            bool all_ok = true;
            ojson comps = ojson::array();
            for (const Composition& mu : compositions_of(n)) {
                ojson c;
                c["mu"] = ojson::array();
                for (int part : mu) c["mu"].push_back(part);
                SpechtModel model = build_specht_model(mu, tables.kl(), tables.cells());
                RelationReport rel = verify_relations(model);
                c["relations"] = rel.ok;
                if (!rel.ok) c["relations_detail"] = rel.detail;
                try {
                    IdentifyReport idr = identify_specht(model);
                    c["identified"] = comp_key(idr.lambda_prime);
                } catch (const IdentificationFailed& e) {
                    c["identified"] = false;
                    c["identification_detail"] = e.what();
                    all_ok = false;
                }
                all_ok = all_ok && rel.ok;
                comps.push_back(std::move(c));
            }
            j["compositions"] = std::move(comps);
            j["ok"] = all_ok;
            tables.flush();
            emit(out, j);
            return all_ok ? 0 : 2;
        }

        if (*c_gram) {
            Composition mu = parse_composition(mu_str);
            TableProvider tables(comp_sum(mu), effective_cache(cache_flag));
            GramMatrix g = gram(tables.pkl(mu), tables.cells());
            tables.flush();
            if (inverse) {
                emit(out, matrix_to_json(simple_form(g, order), at_one));
            } else {
                emit(out, matrix_to_json(g.entries, at_one));
            }
            return 0;
        }

        if (*c_char) {
            Composition mu = parse_composition(mu_str);
            const int nn = comp_sum(mu);
            TableProvider tables(nn, effective_cache(cache_flag));
            SpechtModel model = build_specht_model(mu, tables.kl(), tables.cells());
            ojson j;
            j["mu"] = ojson::array();
            for (int part : mu) j["mu"].push_back(part);
            j["lambda_prime"] = comp_key(model.lambda_prime);
            bool match = true;
            ojson values = ojson::object();
            for (const Partition& tau : partitions_of(nn)) {
                long long val = character_at_one(model, tau);
                values[comp_key(tau)] = val;
                match = match && val == mn_character(model.lambda_prime, tau);
            }
            j["values"] = std::move(values);
            j["matches_classical"] = match;
            tables.flush();
            emit(out, j);
            return match ? 0 : 2;
        }

        if (*c_reg) {
            TableProvider tables(n, effective_cache(cache_flag));
            if (gen < 1 || gen >= n) throw Error("generator index out of range");
            tables.kl();
            PolyMatrix M = tables.kl().regular_model(gen);
            tables.flush();
            emit(out, matrix_to_json(M, false));
            return 0;
        }

        if (*c_bench) {
            using clock = std::chrono::steady_clock;
            auto t0 = clock::now();
            KLTable kl = KLTable::build(n);
            long long kl_ms = ms_since(t0);

            t0 = clock::now();
            CellPartition cp = right_cells(kl);
            long long cells_ms = ms_since(t0);

            t0 = clock::now();
            bool all_ok = true;
            for (const Composition& mu : compositions_of(n)) {
                SpechtModel model = build_specht_model(mu, kl, cp);
                all_ok = all_ok && verify_relations(model).ok;
                identify_specht(model);
            }
            long long verify_ms = ms_since(t0);

            ojson j;
            j["n"] = n;
            ojson phases;
            phases["kl_table_ms"] = kl_ms;
            phases["cells_ms"] = cells_ms;
            phases["specht_all_mu_ms"] = verify_ms;
            j["phases"] = std::move(phases);
            j["sanity"] = all_ok ? "ok" : "verification failed";
            emit(out, j);
            return all_ok ? 0 : 2;
        }
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 1;
    }

    err << "no subcommand selected\n";
    return 1;
}

}  // namespace skl::cli
