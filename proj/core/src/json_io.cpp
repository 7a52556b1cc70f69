#include "spechtkl/json_io.hpp"

#include <sstream>

namespace skl {

ojson laurent_to_json(const LaurentPoly& p) {
    ojson j = ojson::object();
    for (const auto& t : p.terms()) j[std::to_string(t.exp)] = t.coeff.str();
    return j;
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw SchemaMismatch("Laurent polynomial must be a JSON object");
    LaurentPoly p;
    for (auto it = j.begin(); it != j.end(); ++it) {
        int exp;
        try {
            exp = std::stoi(it.key());
        } catch (const std::exception&) {
            throw SchemaMismatch("bad exponent key '" + it.key() + "'");
        }
        Integer coeff;
        if (it.value().is_number_integer()) {
            coeff = Integer(it.value().get<long long>());
        } else if (it.value().is_string()) {
            try {
                coeff = Integer(it.value().get<std::string>());
            } catch (const std::exception&) {
                throw SchemaMismatch("bad coefficient string");
            }
        } else {
            throw SchemaMismatch("coefficient must be an integer or a decimal string");
        }
        p.add_term(exp, coeff);
    }
    return p;
}

ojson perm_to_json(const Permutation& p) {
    ojson j = ojson::array();
    for (int v : p.oneline()) j.push_back(v);
    return j;
}

Permutation perm_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw SchemaMismatch("permutation must be a JSON array");
    std::vector<int> w;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw SchemaMismatch("permutation entries must be integers");
        w.push_back(v.get<int>());
    }
    try {
        return Permutation(std::move(w));
    } catch (const Error& e) {
        throw SchemaMismatch(e.what());
    }
}

ojson hecke_to_json(const HeckeElt& a) {
    ojson j = ojson::object();
    for (const auto& [id, c] : a.terms()) j[a.group().perm(id).str()] = laurent_to_json(c);
    return j;
}

ojson kl_rows_to_json(const KLTable& t) {
    ojson rows = ojson::array();
    for (const auto& row : t.rows()) {
        ojson r = ojson::object();
        for (const auto& [x, c] : row) r[std::to_string(x)] = laurent_to_json(c);
        rows.push_back(std::move(r));
    }
    return rows;
}

KLTable kl_rows_from_json(int n, const nlohmann::json& j) {
    if (!j.is_array()) throw SchemaMismatch("KL rows must be a JSON array");
    std::vector<KLTable::Row> rows;
    for (const auto& rj : j) {
        if (!rj.is_object()) throw SchemaMismatch("KL row must be a JSON object");
        KLTable::Row row;
        for (auto it = rj.begin(); it != rj.end(); ++it) {
            int x;
            try {
                x = std::stoi(it.key());
            } catch (const std::exception&) {
                throw SchemaMismatch("bad element id '" + it.key() + "'");
            }
            row[x] = laurent_from_json(it.value());
        }
        rows.push_back(std::move(row));
    }
    return KLTable::from_rows(n, std::move(rows));
}

ojson pkl_to_json(const ParabolicKLTable& t) {
    ojson j = ojson::object();
    ojson muj = ojson::array();
    for (int part : t.mu()) muj.push_back(part);
    j["mu"] = std::move(muj);
    ojson rows = ojson::array();
    for (const auto& row : t.rows()) {
        ojson r = ojson::object();
        for (const auto& [x, c] : row) r[std::to_string(x)] = laurent_to_json(c);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

ParabolicKLTable pkl_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("mu") || !j.contains("rows"))
        throw SchemaMismatch("parabolic table needs 'mu' and 'rows'");
    Composition mu;
    for (const auto& v : j["mu"]) {
        if (!v.is_number_integer()) throw SchemaMismatch("composition parts must be integers");
        mu.push_back(v.get<int>());
    }
    if (mu.empty() || !is_composition_of(mu, comp_sum(mu)))
        throw SchemaMismatch("bad composition in parabolic table");
    std::vector<ParabolicKLTable::Row> rows;
    for (const auto& rj : j["rows"]) {
        if (!rj.is_object()) throw SchemaMismatch("parabolic row must be a JSON object");
        ParabolicKLTable::Row row;
        for (auto it = rj.begin(); it != rj.end(); ++it) {
            int x;
            try {
                x = std::stoi(it.key());
            } catch (const std::exception&) {
                throw SchemaMismatch("bad element id '" + it.key() + "'");
            }
            row[x] = laurent_from_json(it.value());
        }
        rows.push_back(std::move(row));
    }
    return ParabolicKLTable::from_rows(mu, std::move(rows));
}

std::string comp_key(const Composition& mu) {
    std::ostringstream os;
    for (size_t k = 0; k < mu.size(); ++k) os << (k ? "," : "") << mu[k];
    return os.str();
}

Composition parse_composition(const std::string& s) {
    Composition mu;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            int part = std::stoi(tok, &used);
            if (used != tok.size() || part < 1) throw std::invalid_argument(tok);
            mu.push_back(part);
        } catch (const std::exception&) {
            throw Error("bad composition part '" + tok + "'");
        }
    }
    if (mu.empty()) throw Error("empty composition");
    return mu;
}

Permutation parse_permutation(const std::string& s, int n) {
    std::string text;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c)) || !text.empty()) text += c;
    while (!text.empty() && isspace(static_cast<unsigned char>(text.back()))) text.pop_back();

    if (text == "e") {
        if (n < 1) throw Error("cannot parse 'e' without knowing n");
        return Permutation::identity(n);
    }
    if (!text.empty() && text[0] == 's') {
        if (n < 1) throw Error("cannot parse a generator word without knowing n");
        Permutation w = Permutation::identity(n);
        std::string norm = text;
        for (char& c : norm)
            if (c == '*') c = ' ';
        std::stringstream ss(norm);
        std::string tok;
        while (ss >> tok) {
            if (tok.size() < 2 || tok[0] != 's') throw Error("bad generator token '" + tok + "'");
            int i;
            try {
                size_t used = 0;
                i = std::stoi(tok.substr(1), &used);
                if (used != tok.size() - 1) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw Error("bad generator token '" + tok + "'");
            }
            w = w * Permutation::simple(n, i);
        }
        return w;
    }
    std::vector<int> oneline;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            oneline.push_back(v);
        } catch (const std::exception&) {
            throw Error("bad one-line entry '" + tok + "'");
        }
    }
    if (n > 0 && static_cast<int>(oneline.size()) != n)
        throw Error("permutation has " + std::to_string(oneline.size()) + " entries, expected " +
                    std::to_string(n));
    return Permutation(std::move(oneline));
}

}  // namespace skl
