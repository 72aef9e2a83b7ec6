#pragma once

// Exhaustive check over every path word up to a given semilength: rewriting
// agrees with direct operator evaluation, coefficients lie in N[q-1], and the
// expansion is e-positive at q -> q+1.

#include "vsllt/dyck_algebra.hpp"
#include "vsllt/path_word.hpp"
#include "vsllt/rewrite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace vsllt {

struct WordCheck {
  bool agrees = false;         // normalize vs eval_word in the p-basis
  bool q_minus_one_nonneg = false;
  bool e_positive = false;
  std::string error;           // set if a stage threw

  bool ok() const { return agrees && q_minus_one_nonneg && e_positive && error.empty(); }
};

inline WordCheck check_word(const PathWord& w) {
  WordCheck c;
  try {
    const int n = semilength(w);
    const EExpansion ex = e_expansion(w);
    const PositivityReport rep = e_positivity_report(ex);
    c.q_minus_one_nonneg = rep.q_minus_one_nonneg;
    c.e_positive = rep.e_positive;
    c.agrees = e_to_p(ex, n) == eval_word(w);
  } catch (const std::exception& e) {
    c.error = e.what();
  }
  return c;
}

struct VerifyFailure {
  std::string word;
  WordCheck check;
};

struct VerifySummary {
  int max_semilength = 0;
  unsigned jobs = 1;
  std::vector<std::size_t> paths_per_semilength;  // index n-1
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t agree_failures = 0;
  std::size_t q_minus_one_failures = 0;
  std::size_t positivity_failures = 0;
  std::vector<VerifyFailure> failures;  // in enumeration order
  double seconds = 0;

  bool ok() const { return passed == total; }
};

/// Runs check_word on every path of semilength 1..max_semilength using
/// `jobs` worker threads. Results are aggregated in enumeration order.
inline VerifySummary run_verify(int max_semilength, unsigned jobs = 1) {
  const auto start = std::chrono::steady_clock::now();
  VerifySummary s;
  s.max_semilength = max_semilength;
  s.jobs = std::max(1u, jobs);
  std::vector<PathWord> words;
  for (int n = 1; n <= max_semilength; ++n) {
    auto level = enumerate_paths(n);
    s.paths_per_semilength.push_back(level.size());
    words.insert(words.end(), level.begin(), level.end());
  }
  std::vector<WordCheck> results(words.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < words.size();) results[i] = check_word(words[i]);
  };
  if (s.jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < s.jobs; ++j) pool.emplace_back(worker);
  }
  s.total = words.size();
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto& r = results[i];
    if (r.ok()) {
      ++s.passed;
      continue;
    }
    s.agree_failures += !r.agrees;
    s.q_minus_one_failures += !r.q_minus_one_nonneg;
    s.positivity_failures += !r.e_positive;
    s.failures.push_back({compact_str(words[i]), r});
  }
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

}  // namespace vsllt
