#pragma once

// The four command-line operations, each returning a rendered report and a
// pass/fail verdict. Parse errors propagate as ParseError.

#include "vsllt/json_io.hpp"
#include "vsllt/llt.hpp"
#include "vsllt/path_word.hpp"
#include "vsllt/rewrite.hpp"
#include "vsllt/verify.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace vsllt {

enum class Command { Expand, Path, Oracle, Verify };
enum class OutputFormat { Text, Json };

struct RunConfig {
  Command command = Command::Expand;
  std::optional<std::string> word;
  std::optional<std::string> strips;
  std::optional<int> nvars;
  int max_semilength = 0;
  OutputFormat format = OutputFormat::Text;
  unsigned jobs = 1;
};

struct CommandOutput {
  bool ok = false;
  std::string text;
};

/// "q*e[3,1] + (q^2 - q)*e[4]"; ascending partition order.
inline std::string e_expansion_text(const EExpansion& ex) {
  if (ex.terms.empty()) return "0";
  std::string s;
  for (const auto& [mu, c] : ex.terms) {
    if (!s.empty()) s += " + ";
    const bool simple = c.is_zero() || std::count_if(c.coeffs().begin(), c.coeffs().end(),
                                                     [](const Rational& x) { return x != 0; }) == 1;
    const std::string cs = simple ? c.str() : "(" + c.str() + ")";
    if (mu.length() == 0)
      s += cs;
    else if (c == QPoly(1))
      s += "e" + mu.str();
    else
      s += cs + "*e" + mu.str();
  }
  return s;
}

inline std::string rationals_text(const std::vector<Rational>& cs) {
  std::string s = "[";
  for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? ", " : "") + rational_str(cs[i]);
  return s + "]";
}

struct ExpandResult {
  PathWord word;
  LinComb normal_form;
  PositivityReport report;
};

inline ExpandResult expand_word(const PathWord& w) {
  ExpandResult r;
  r.word = w;
  r.normal_form = normalize(w);
  r.report = e_positivity_report(lincomb_to_e(r.normal_form));
  r.report.at_q.n = r.report.at_q_plus_one.n = semilength(w);
  return r;
}

inline PathWord input_word(const RunConfig& cfg) {
  if (cfg.word.has_value() == cfg.strips.has_value())
    throw std::invalid_argument("exactly one of --word and --strips is required");
  if (cfg.word) return parse_path_word(*cfg.word);
  return to_schroeder_word(parse_strip_tuple(*cfg.strips));
}

inline CommandOutput cmd_expand(const RunConfig& cfg) {
  const ExpandResult r = expand_word(input_word(cfg));
  const auto& rep = r.report;
  CommandOutput out;
  out.ok = rep.e_positive && rep.q_minus_one_nonneg;
  if (cfg.format == OutputFormat::Json) {
    Json j = to_json(rep);
    j["word"] = compact_str(r.word);
    out.text = j.dump(2) + "\n";
    return out;
  }
  std::ostringstream os;
  os << "word: " << compact_str(r.word) << "\n";
  os << "semilength: " << semilength(r.word) << "\n";
  os << "e-expansion: " << e_expansion_text(rep.at_q) << "\n";
  os << "at q -> q+1: " << e_expansion_text(rep.at_q_plus_one) << "\n";
  os << "(q-1)-coefficients:\n";
  for (const auto& [mu, cs] : rep.q_minus_one_coeffs)
    os << "  e" << mu.str() << ": " << rationals_text(cs) << "\n";
  os << "e-positive: " << (rep.e_positive ? "yes" : "no") << "\n";
  os << "coefficients in N[q-1]: " << (rep.q_minus_one_nonneg ? "yes" : "no") << "\n";
  out.text = os.str();
  return out;
}

inline CommandOutput cmd_path(const RunConfig& cfg) {
  if (!cfg.strips) throw std::invalid_argument("--strips is required");
  const StripTuple t = parse_strip_tuple(*cfg.strips);
  const AreaData data = dyck_area_and_crosses(t);
  const PathWord w = to_schroeder_word(t);
  CommandOutput out;
  out.ok = true;
  if (cfg.format == OutputFormat::Json) {
    Json crosses = Json::array();
    for (const auto& [p, r] : data.crosses) crosses.push_back({p, r});
    out.text = Json{{"strips", strip_tuple_str(t)},
                    {"word", comma_str(w)},
                    {"area", data.area},
                    {"crosses", crosses}}
                   .dump(2) +
               "\n";
    return out;
  }
  std::ostringstream os;
  os << "word: " << comma_str(w) << "\n";
  os << "area: (";
  for (std::size_t i = 0; i < data.area.size(); ++i) os << (i ? "," : "") << data.area[i];
  os << ")\n";
  os << "crosses: " << data.crosses.size();
  for (const auto& [p, r] : data.crosses) os << " (" << p << "," << r << ")";
  os << "\n";
  out.text = os.str();
  return out;
}

inline CommandOutput cmd_oracle(const RunConfig& cfg) {
  if (!cfg.strips) throw std::invalid_argument("--strips is required");
  if (cfg.nvars && *cfg.nvars < 1) throw std::invalid_argument("--nvars must be positive");
  const StripTuple t = parse_strip_tuple(*cfg.strips);
  const OracleResult r = oracle_compare(t, cfg.nvars);
  CommandOutput out;
  out.ok = r.match;
  if (cfg.format == OutputFormat::Json) {
    out.text = Json{{"strips", strip_tuple_str(t)},
                    {"nvars", r.nvars},
                    {"dominant_only", r.dominant_only},
                    {"e", terms_json(r.expansion.terms)},
                    {"operator_side", varpoly_str(r.operator_side)},
                    {"tableau_side", varpoly_str(r.tableau_side)},
                    {"match", r.match}}
                   .dump(2) +
               "\n";
    return out;
  }
  std::ostringstream os;
  os << "strips: " << strip_tuple_str(t) << "\n";
  os << "e-expansion: " << e_expansion_text(r.expansion) << "\n";
  os << "variables: " << r.nvars << (r.dominant_only ? " (dominant monomials only)" : "") << "\n";
  os << "operator side: " << varpoly_str(r.operator_side) << "\n";
  os << "tableau side:  " << varpoly_str(r.tableau_side) << "\n";
  os << "match: " << (r.match ? "true" : "false") << "\n";
  out.text = os.str();
  return out;
}

inline CommandOutput cmd_verify(const RunConfig& cfg) {
  if (cfg.max_semilength < 1) throw std::invalid_argument("--max-semilength must be at least 1");
  const VerifySummary s = run_verify(cfg.max_semilength, cfg.jobs);
  CommandOutput out;
  out.ok = s.ok();
  if (cfg.format == OutputFormat::Json) {
    Json failures = Json::array();
    for (const auto& f : s.failures)
      failures.push_back({{"word", f.word},
                          {"agrees", f.check.agrees},
                          {"qminus1_nonneg", f.check.q_minus_one_nonneg},
                          {"e_positive", f.check.e_positive},
                          {"error", f.check.error}});
    out.text = Json{{"max_semilength", s.max_semilength},
                    {"paths_per_semilength", s.paths_per_semilength},
                    {"total", s.total},
                    {"passed", s.passed},
                    {"failures", failures},
                    {"seconds", s.seconds},
                    {"jobs", s.jobs}}
                   .dump(2) +
               "\n";
    return out;
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < s.paths_per_semilength.size(); ++i)
    os << "semilength " << i + 1 << ": " << s.paths_per_semilength[i] << " paths\n";
  os << "checked: " << s.total << ", passed: " << s.passed << "/" << s.total << "\n";
  os << "agreement failures: " << s.agree_failures << "\n";
  os << "N[q-1] failures: " << s.q_minus_one_failures << "\n";
  os << "positivity failures: " << s.positivity_failures << "\n";
  for (const auto& f : s.failures)
    os << "  FAILED " << f.word << (f.check.error.empty() ? "" : ": " + f.check.error) << "\n";
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "time: " << s.seconds << " s with " << s.jobs << " job(s)\n";
  os << "result: " << (s.ok() ? "all checks passed" : "FAILURES") << "\n";
  out.text = os.str();
  return out;
}

inline CommandOutput run_command(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::Expand: return cmd_expand(cfg);
    case Command::Path: return cmd_path(cfg);
    case Command::Oracle: return cmd_oracle(cfg);
    case Command::Verify: return cmd_verify(cfg);
  }
  throw std::logic_error("unknown command");
}

}  // namespace vsllt
