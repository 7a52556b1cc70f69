#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "spechtkl/hecke.hpp"
#include "spechtkl/parabolic.hpp"

namespace skl {

// All emission goes through ordered_json with canonical insertion order, so
// serialized output is byte-deterministic.
using ojson = nlohmann::ordered_json;

// Laurent polynomials serialize as {"exp": "coeff"} with ascending exponents;
// coefficients are decimal strings so arbitrarily large integers survive.
ojson laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

ojson perm_to_json(const Permutation& p);
Permutation perm_from_json(const nlohmann::json& j);

// {"one-line": laurent} with keys in canonical element order.
ojson hecke_to_json(const HeckeElt& a);

ojson kl_rows_to_json(const KLTable& t);
KLTable kl_rows_from_json(int n, const nlohmann::json& j);

ojson pkl_to_json(const ParabolicKLTable& t);
ParabolicKLTable pkl_from_json(const nlohmann::json& j);

std::string comp_key(const Composition& mu);  // "2,1"
Composition parse_composition(const std::string& s);

// Accepts "e", comma-separated one-line ("2,1,3"), or words in the
// generators ("s1 s2 s1", '*' also allowed as separator). n = 0 means
// "infer from the input", which works only for the one-line form.
Permutation parse_permutation(const std::string& s, int n);

}  // namespace skl
