#pragma once

#include <json.hpp>

#include "grmw/poly.hpp"
#include "grmw/spectrum.hpp"

namespace grmw {

using json = nlohmann::ordered_json;

// Polynomial wire format:
// { "p", "e", "modulus":[...], "m", "terms":[{"exps":[...], "coeff"}] }
// with reduced exponents and coefficients in [1, q).  Round-trips exactly.
json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);

// { "q","m","r","a","b","t","s","w1","w2","w3":{"value","status","provenance"} }
json weights_answer_json(int q, int m, int r);

json report_to_json(const Report& rep);

// CSV: weight,count,representative_hex — two hex digits per table entry.
std::string spectrum_to_csv(const SpectrumResult& res);

// CSV: q,m,d,t,s,rank,N,tags — one row per distinct N among the top three.
std::string top3_to_csv(int q, int m, int d);

}  // namespace grmw
