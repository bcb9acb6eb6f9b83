// Copyright 2026 The vmu Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Probability bounds for random bipartite hosts.
//
// A host with |L| = l, |R| = r and independent fair edges is k-VMU with
// probability at least
//
//   1 - (k / 2^(l-k+1) + rank_term) * C(l+r, k)
//
// where rank_term bounds the chance that the greedy rank scan over R fails
// to reach rank m = C(k,2). Two rank terms are offered: the closed Chernoff
// form exp(-(r/4 - m + 1)^2 / (7(r-k)/4 - m + 1)) and the exact tail
// P(Bin(r, 1 - p_step) >= r - m + 1) of the per-vertex failure count.
//
// Everything is evaluated in natural-log space. Binomial multipliers are
// exact big integers; exact rational counterparts exist for cross-checks.

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "vmu/error.hpp"

namespace vmu {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_dec_float_50;

enum class Evaluator { Chernoff, ExactTail };

inline std::string evaluator_name(Evaluator e) { return e == Evaluator::Chernoff ? "chernoff" : "exact"; }

inline Evaluator parse_evaluator(const std::string& s) {
  if (s == "chernoff") return Evaluator::Chernoff;
  if (s == "exact") return Evaluator::ExactTail;
  throw InputError("unknown evaluator '" + s + "' (expected chernoff or exact)");
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

/// Natural log of a positive big integer, accurate to double precision.
inline double log_big(const BigInt& x) {
  if (x <= 0) throw InputError("log of a non-positive integer");
  const std::size_t bits = boost::multiprecision::msb(x) + 1;
  if (bits <= 60) return std::log(x.convert_to<double>());
  const std::size_t shift = bits - 60;
  const BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

/// log(exp(a) + exp(b)) with -inf handled.
inline double log_add(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double hi = std::max(a, b), lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

/// H(x) = -x log2 x - (1-x) log2 (1-x).
inline double binary_entropy(double x) {
  if (x < 0.0 || x > 1.0) throw InputError("binary entropy argument outside [0,1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

struct BoundParams {
  std::int64_t k = 0;
  std::int64_t l = 0;
  std::int64_t r = 0;
  double p_step = 0.25;  // per-vertex rank-increase probability (exact tail only)

  std::int64_t pairs() const { return k * (k - 1) / 2; }
  double mu() const { return 0.75 * static_cast<double>(r); }
  double delta() const { return (static_cast<double>(r - pairs() + 1) - mu()) / mu(); }

  /// Throws PreconditionError unless k >= 2, l >= k and r >= 4 C(k,2) + 5.
  void validate() const {
    if (k < 2) throw PreconditionError("k must be at least 2");
    if (l < k) throw PreconditionError("|L| = " + std::to_string(l) + " is below k = " + std::to_string(k));
    if (r < 4 * pairs() + 5)
      throw PreconditionError("|R| = " + std::to_string(r) + " is below 4*C(k,2)+5 = " +
                              std::to_string(4 * pairs() + 5));
    if (!(p_step > 0.0 && p_step <= 1.0)) throw PreconditionError("p_step must lie in (0, 1]");
  }
};

/// Constants of the asymptotic parameter family l = floor(c' k ln k),
/// r = floor(c k^2), with target failure exponent epsilon.
struct FamilyConstants {
  double c = 0;
  double c_prime = 0;
  double epsilon = 0;
};

struct BoundReport {
  BoundParams params;
  Evaluator evaluator = Evaluator::Chernoff;
  double mu = 0;
  double delta = 0;
  double log_rank_term = 0;   // ln of the rank-failure term
  double log_pivot_term = 0;  // ln(k / 2^(l-k+1))
  BigInt union_multiplier;    // C(l+r, k), exact
  double log_union = 0;
  double log2_entropy_bound = 0;  // n H(k/n), so C(n,k) <= 2^this
  double log_failure = 0;         // ln((pivot + rank) * C(l+r, k))
  double lower_bound = 0;         // 1 - exp(log_failure); may be very negative
  std::optional<FamilyConstants> family;

  double rank_term() const { return std::exp(log_rank_term); }
  double pivot_term() const { return std::exp(log_pivot_term); }
  bool certifies_existence() const { return log_failure < 0.0; }
};

/// Chernoff exponent (r/4 - m + 1)^2 / (7(r-k)/4 - m + 1) as an exact
/// rational; the rank term is exp of its negation.
inline BigRational chernoff_exponent_exact(std::int64_t k, std::int64_t r) {
  const std::int64_t m = k * (k - 1) / 2;
  const BigInt num = BigInt(r - 4 * m + 4) * BigInt(r - 4 * m + 4);
  const BigInt den = BigInt(4) * BigInt(7 * (r - k) - 4 * m + 4);
  return BigRational(num, den);
}

inline double chernoff_exponent(std::int64_t k, std::int64_t r) {
  const double m = static_cast<double>(k * (k - 1) / 2);
  const double a = static_cast<double>(r) / 4.0 - m + 1.0;
  const double b = 7.0 * static_cast<double>(r - k) / 4.0 - m + 1.0;
  return a * a / b;
}

/// exp(-exponent) evaluated with 50 significant digits.
inline BigFloat chernoff_term_high_precision(std::int64_t k, std::int64_t r) {
  const BigRational e = chernoff_exponent_exact(k, r);
  BigFloat x = BigFloat(boost::multiprecision::numerator(e)) / BigFloat(boost::multiprecision::denominator(e));
  return boost::multiprecision::exp(-x);
}

/// ln P(Bin(r, 1 - p) >= r - m + 1), i.e. fewer than m successes in r
/// trials of success probability p.
inline double log_exact_tail(std::int64_t r, std::int64_t m, double p) {
  const double ninf = -std::numeric_limits<double>::infinity();
  if (m <= 0) return ninf;
  if (m > r) return 0.0;
  if (p >= 1.0) return ninf;
  const double lp = std::log(p), lq = std::log1p(-p);
  const double lr = std::lgamma(static_cast<double>(r) + 1.0);
  double acc = ninf;
  for (std::int64_t s = 0; s < m; ++s) {  // s successes, r - s failures
    const double lc = lr - std::lgamma(static_cast<double>(s) + 1.0) - std::lgamma(static_cast<double>(r - s) + 1.0);
    acc = log_add(acc, lc + static_cast<double>(s) * lp + static_cast<double>(r - s) * lq);
  }
  return std::min(acc, 0.0);
}

/// Exact counterpart of log_exact_tail for p = num/den.
inline BigRational exact_tail_rational(std::int64_t r, std::int64_t m, std::int64_t num, std::int64_t den) {
  if (den <= 0 || num <= 0 || num > den) throw InputError("p must be a rational in (0, 1]");
  BigInt sum = 0;
  for (std::int64_t s = 0; s < std::min(m, r + 1); ++s)
    sum += binomial(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(s)) *
           boost::multiprecision::pow(BigInt(num), static_cast<unsigned>(s)) *
           boost::multiprecision::pow(BigInt(den - num), static_cast<unsigned>(r - s));
  return BigRational(sum, boost::multiprecision::pow(BigInt(den), static_cast<unsigned>(r)));
}

namespace detail {

inline double log_pivot_term(std::int64_t k, std::int64_t l) {
  return std::log(static_cast<double>(k)) - static_cast<double>(l - k + 1) * std::log(2.0);
}

inline double log_rank_term(const BoundParams& bp, Evaluator e) {
  return e == Evaluator::Chernoff ? -chernoff_exponent(bp.k, bp.r) : log_exact_tail(bp.r, bp.pairs(), bp.p_step);
}

}  // namespace detail

inline BoundReport evaluate_bound(const BoundParams& bp, Evaluator e) {
  bp.validate();
  BoundReport rep;
  rep.params = bp;
  rep.evaluator = e;
  rep.mu = bp.mu();
  rep.delta = bp.delta();
  rep.log_rank_term = detail::log_rank_term(bp, e);
  rep.log_pivot_term = detail::log_pivot_term(bp.k, bp.l);
  const auto n = static_cast<std::uint64_t>(bp.l + bp.r);
  rep.union_multiplier = binomial(n, static_cast<std::uint64_t>(bp.k));
  rep.log_union = log_big(rep.union_multiplier);
  rep.log2_entropy_bound = static_cast<double>(n) * binary_entropy(static_cast<double>(bp.k) / static_cast<double>(n));
  rep.log_failure = log_add(rep.log_pivot_term, rep.log_rank_term) + rep.log_union;
  rep.lower_bound = -std::expm1(rep.log_failure);
  return rep;
}

inline BoundReport bound_chernoff(const BoundParams& bp) { return evaluate_bound(bp, Evaluator::Chernoff); }
inline BoundReport bound_exact_tail(const BoundParams& bp) { return evaluate_bound(bp, Evaluator::ExactTail); }

/// (floor(c' k ln k), floor(c k^2)).
inline std::pair<std::int64_t, std::int64_t> params_for_k(std::int64_t k, double c, double c_prime) {
  if (k < 2) throw InputError("k must be at least 2");
  if (!(c > 2.0)) throw InputError("c must exceed 2");
  if (!(c_prime > 1.0 / std::log(2.0))) throw InputError("c' must exceed 1/ln 2");
  const double kd = static_cast<double>(k);
  return {static_cast<std::int64_t>(std::floor(c_prime * kd * std::log(kd))),
          static_cast<std::int64_t>(std::floor(c * kd * kd))};
}

/// The two sufficient finite conditions of the asymptotic argument, each
/// asking one failure term times C(n,k) (via the entropy estimate) to stay
/// below 1/2.
struct FamilyConditions {
  bool pivot_half = false;  // log2 k + nH(k/n) - l + k - 1 < -1
  bool rank_half = false;   // nH(k/n) ln 2 - exponent < -ln 2
  bool meets_epsilon = false;  // lower bound >= 1 - exp(-eps k ln k)
};

inline FamilyConditions family_conditions(const BoundReport& rep) {
  const auto& p = rep.params;
  FamilyConditions out;
  const double kd = static_cast<double>(p.k);
  out.pivot_half = std::log2(kd) + rep.log2_entropy_bound - static_cast<double>(p.l) + kd - 1.0 < -1.0;
  out.rank_half = rep.log2_entropy_bound * std::log(2.0) - chernoff_exponent(p.k, p.r) < -std::log(2.0);
  if (rep.family) out.meets_epsilon = rep.lower_bound >= 1.0 - std::exp(-rep.family->epsilon * kd * std::log(kd));
  return out;
}

inline BoundReport bound_for_family(std::int64_t k, FamilyConstants fc, Evaluator e) {
  const auto [l, r] = params_for_k(k, fc.c, fc.c_prime);
  BoundParams bp{k, l, r, 0.25};
  BoundReport rep = evaluate_bound(bp, e);
  rep.family = fc;
  return rep;
}

// ---------------------------------------------------------------------------
// Parameter search

struct TableQuery {
  std::vector<std::int64_t> ks;
  std::optional<double> target_prob;  // none: existence (failure product < 1)
  Evaluator evaluator = Evaluator::Chernoff;
  double p_step = 0.25;
  std::int64_t max_total = 100000;
};

struct TableRow {
  std::int64_t k = 0;
  bool found = false;
  std::int64_t left = 0;
  std::int64_t right = 0;
  double lower_bound = 0;
  double log_failure = 0;
  std::int64_t total() const { return left + right; }
};

/// For each k, the valid (l, r) minimizing l + r and then l whose bound
/// meets the query. The rank term only shrinks as r grows and the pivot
/// term only shrinks as l grows, so for each total n the scan starts at
/// the smallest l the pivot term admits and stops once r is too small for
/// the rank term alone.
inline TableRow search_one(std::int64_t k, const TableQuery& q) {
  if (k < 2) throw InputError("table search needs k >= 2");
  if (q.target_prob && !(*q.target_prob > 0.0 && *q.target_prob < 1.0))
    throw InputError("target probability must lie in (0, 1)");
  const std::int64_t m = k * (k - 1) / 2;
  const std::int64_t r_min = 4 * m + 5;
  const double threshold = q.target_prob ? std::log1p(-*q.target_prob) : 0.0;
  // Existence is strict (< 1); probability targets are inclusive.
  auto passes = [&](double log_failure) { return q.target_prob ? log_failure <= threshold : log_failure < threshold; };
  TableRow row;
  row.k = k;
  std::int64_t n = r_min + k;
  BigInt cnk = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
  for (; n <= q.max_total; ++n) {
    if (n > r_min + k) {
      cnk *= n;
      cnk /= n - k;
    }
    const double lc = log_big(cnk);
    const double need = threshold - lc;  // ln budget for pivot + rank
    // pivot term < budget  <=>  l - k + 1 > (ln k - need) / ln 2
    const double lo = (std::log(static_cast<double>(k)) - need) / std::log(2.0) + k - 1.0;
    std::int64_t l = std::max<std::int64_t>(k, static_cast<std::int64_t>(std::floor(lo)));
    for (; n - l >= r_min; ++l) {
      BoundParams bp{k, l, n - l, q.p_step};
      const double lr = detail::log_rank_term(bp, q.evaluator);
      if (!passes(lr + lc)) break;
      const double lf = log_add(detail::log_pivot_term(k, l), lr) + lc;
      if (passes(lf)) {
        row.found = true;
        row.left = l;
        row.right = n - l;
        row.log_failure = lf;
        row.lower_bound = -std::expm1(lf);
        return row;
      }
    }
  }
  return row;
}

inline std::vector<TableRow> table_search(const TableQuery& q) {
  std::vector<TableRow> rows;
  for (auto k : q.ks) rows.push_back(search_one(k, q));
  return rows;
}

}  // namespace vmu
