#pragma once

// JSON forms of polynomials, symmetric functions and e-expansion reports.
//
//   QPoly          ["0","-1","1"]                  (coefficient of q^i at i)
//   GradedSym      {"basis":"p","terms":{"[2,1]":"-1/2", ...}}
//   EExpansion     {"basis":"e","terms":{"[3,1]":"q", ...}}
//   report         {"n":4,"e":{"[3,1]":"q","[4]":"q^2-q"},
//                   "e_at_q_plus_1":{...},"qminus1":{"[4]":[0,1,1]},
//                   "e_positive":true}

#include "vsllt/qpoly.hpp"
#include "vsllt/rewrite.hpp"
#include "vsllt/symfunc.hpp"

#include "json.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace vsllt {

using Json = nlohmann::ordered_json;

inline Json to_json(const QPoly& a) { return Json(coeff_strings(a)); }

inline QPoly qpoly_from_json(const Json& j) {
  return from_coeff_strings(j.get<std::vector<std::string>>());
}

/// Inverse of Partition::str.
inline Partition parse_partition_key(const std::string& key) {
  if (key.size() < 2 || key.front() != '[' || key.back() != ']')
    throw std::invalid_argument("bad partition key '" + key + "'");
  std::vector<int> parts;
  std::size_t i = 1;
  while (i + 1 < key.size()) {
    std::size_t start = i;
    while (i + 1 < key.size() && std::isdigit(static_cast<unsigned char>(key[i]))) ++i;
    if (start == i) throw std::invalid_argument("bad partition key '" + key + "'");
    parts.push_back(std::stoi(key.substr(start, i - start)));
    if (key[i] == ',') ++i;
  }
  return Partition(std::move(parts));
}

inline Json terms_json(const std::map<Partition, QPoly>& terms) {
  Json j = Json::object();
  for (const auto& [mu, c] : terms) j[mu.str()] = c.str(false);
  return j;
}

inline std::map<Partition, QPoly> terms_from_json(const Json& j) {
  std::map<Partition, QPoly> out;
  for (const auto& [key, value] : j.items()) {
    QPoly c = parse_qpoly(value.get<std::string>());
    if (!c.is_zero()) out.emplace(parse_partition_key(key), std::move(c));
  }
  return out;
}

inline Json to_json(const GradedSym& f) {
  return Json{{"basis", "p"}, {"terms", terms_json(f.terms())}};
}

inline GradedSym graded_sym_from_json(const Json& j, int truncation) {
  if (j.at("basis") != "p") throw std::invalid_argument("expected basis \"p\"");
  GradedSym f(truncation);
  for (const auto& [mu, c] : terms_from_json(j.at("terms"))) f.add_term(mu, c);
  return f;
}

inline Json to_json(const EExpansion& ex) {
  return Json{{"basis", "e"}, {"terms", terms_json(ex.terms)}};
}

namespace detail {

inline Json rational_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return Json(r.get_num().get_si());
  return Json(rational_str(r));
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parse_rational(j.get<std::string>());
}

}  // namespace detail

inline Json to_json(const PositivityReport& r) {
  Json qm1 = Json::object();
  for (const auto& [mu, cs] : r.q_minus_one_coeffs) {
    Json arr = Json::array();
    for (const auto& c : cs) arr.push_back(detail::rational_json(c));
    qm1[mu.str()] = std::move(arr);
  }
  return Json{{"n", r.at_q.n},
              {"e", terms_json(r.at_q.terms)},
              {"e_at_q_plus_1", terms_json(r.at_q_plus_one.terms)},
              {"qminus1", std::move(qm1)},
              {"e_positive", r.e_positive}};
}

inline PositivityReport positivity_report_from_json(const Json& j) {
  PositivityReport r;
  r.at_q.n = j.at("n").get<int>();
  r.at_q.terms = terms_from_json(j.at("e"));
  r.at_q_plus_one.n = r.at_q.n;
  r.at_q_plus_one.terms = terms_from_json(j.at("e_at_q_plus_1"));
  r.q_minus_one_nonneg = true;
  for (const auto& [key, arr] : j.at("qminus1").items()) {
    std::vector<Rational> cs;
    for (const auto& c : arr) cs.push_back(detail::rational_from_json(c));
    r.q_minus_one_nonneg = r.q_minus_one_nonneg && is_nonneg_integer_sequence(cs);
    r.q_minus_one_coeffs.emplace(parse_partition_key(key), std::move(cs));
  }
  r.e_positive = j.at("e_positive").get<bool>();
  return r;
}

}  // namespace vsllt
