#include "grmw/json_io.hpp"

#include <sstream>

#include "grmw/arrangements.hpp"

namespace grmw {

json poly_to_json(const Poly& p) {
  const Field& f = *p.field();
  json j;
  j["p"] = f.p();
  j["e"] = f.e();
  j["modulus"] = f.modulus();
  j["m"] = p.m();
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    json t;
    t["exps"] = std::vector<int>(e.begin(), e.end());
    t["coeff"] = c;
    terms.push_back(t);
  }
  j["terms"] = std::move(terms);
  return j;
}

Poly poly_from_json(const json& j) {
  int p = j.at("p"), e = j.at("e"), m = j.at("m");
  std::vector<int> modulus = j.at("modulus");
  FieldPtr field = (e == 1) ? field_make(p, 1) : field_make(p, e, &modulus);
  std::vector<std::pair<std::vector<int>, int>> raw;
  for (const auto& t : j.at("terms"))
    raw.push_back({t.at("exps").get<std::vector<int>>(), t.at("coeff")});
  return Poly::from_terms(field, m, raw);
}

json weights_answer_json(int q, int m, int r) {
  auto p = decompose_r(q, m, r);
  json j;
  j["q"] = p.q;
  j["m"] = p.m;
  j["r"] = p.r;
  j["a"] = p.a;
  j["b"] = p.b;
  j["t"] = p.t;
  j["s"] = p.s;
  j["w1"] = min_weight(p).value;
  try {
    j["w2"] = second_weight(p).value;
  } catch (const Error& err) {
    if (std::string(err.code()) != "UncoveredCase") throw;
    j["w2"] = nullptr;
  }
  auto w3 = third_weight(p);
  json jw3;
  if (w3.status == Status::Undefined)
    jw3["value"] = nullptr;
  else
    jw3["value"] = w3.value;
  jw3["status"] = to_string(w3.status);
  jw3["provenance"] = w3.provenance;
  j["w3"] = std::move(jw3);
  return j;
}

json report_to_json(const Report& rep) {
  json j;
  j["suite"] = rep.suite;
  json claims = json::array();
  for (const auto& c : rep.claims) {
    json jc;
    jc["id"] = c.id;
    jc["provenance"] = c.provenance;
    jc["expected"] = c.expected;
    jc["measured"] = c.measured;
    jc["pass"] = c.pass;
    claims.push_back(jc);
  }
  j["claims"] = std::move(claims);
  j["elapsed_ms"] = rep.elapsed_ms;
  return j;
}

std::string spectrum_to_csv(const SpectrumResult& res) {
  static const char* hex = "0123456789abcdef";
  std::ostringstream os;
  os << "weight,count,representative_hex\n";
  for (const auto& [w, count] : res.distinct_weights) {
    os << w << "," << count << ",";
    auto it = res.representatives.find(w);
    if (it != res.representatives.end())
      for (uint8_t v : it->second) os << hex[v >> 4] << hex[v & 15];
    os << "\n";
  }
  return os.str();
}

std::string top3_to_csv(int q, int m, int d) {
  std::ostringstream os;
  os << "q,m,d,t,s,rank,N,tags\n";
  auto rep = verify_top3(q, m, d);
  if (!rep.covered) return os.str();
  const int t = d / (q - 1), s = d % (q - 1);
  for (int i = 0; i < 3; ++i)
    os << q << "," << m << "," << d << "," << t << "," << s << "," << (i + 1)
       << "," << rep.top[i] << "," << rep.tags[i] << "\n";
  return os.str();
}

}  // namespace grmw
