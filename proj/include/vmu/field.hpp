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

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "vmu/error.hpp"

namespace vmu {

/// The finite field GF(q), q = p^e.
///
/// Elements are the integers 0..q-1; the base-p digits of an element are the
/// coefficients (lowest first) of a polynomial of degree < e, reduced modulo
/// a fixed monic irreducible. Fields with q <= 64 are fully tabulated; larger
/// prime fields use modular arithmetic directly.
class Gfq {
 public:
  using Elem = std::uint32_t;

  std::uint32_t order() const noexcept { return q_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return e_; }
  /// Monic modulus, coefficients lowest degree first (just {0, 1} for e = 1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Elem add(Elem a, Elem b) const {
    if (tabulated()) return add_[a * q_ + b];
    return static_cast<Elem>((std::uint64_t{a} + b) % q_);
  }
  Elem neg(Elem a) const {
    if (tabulated()) return neg_[a];
    return a == 0 ? 0 : q_ - a;
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (tabulated()) return mul_[a * q_ + b];
    return static_cast<Elem>((std::uint64_t{a} * b) % q_);
  }
  Elem inv(Elem a) const {
    if (a == 0) throw InputError("inverse of zero");
    if (tabulated()) return inv_[a];
    return pow(a, q_ - 2);
  }
  Elem pow(Elem a, std::uint64_t k) const {
    Elem r = 1;
    while (k) {
      if (k & 1) r = mul(r, a);
      a = mul(a, a);
      k >>= 1;
    }
    return r;
  }

  friend Gfq make_field(std::uint64_t q);

 private:
  bool tabulated() const noexcept { return !mul_.empty(); }

  Elem poly_mul(Elem a, Elem b) const {
    // Schoolbook product of digit vectors, then reduction by the modulus.
    std::vector<std::uint32_t> x = digits(a), y = digits(b), z(2 * e_, 0);
    for (std::uint32_t i = 0; i < e_; ++i)
      for (std::uint32_t j = 0; j < e_; ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % p_;
    for (std::uint32_t d = 2 * e_ - 1; d >= e_; --d) {
      const std::uint32_t c = z[d];
      if (c == 0) continue;
      for (std::uint32_t i = 0; i <= e_; ++i)
        z[d - e_ + i] = (z[d - e_ + i] + (p_ - c) * modulus_[i]) % p_;
    }
    Elem out = 0;
    for (std::uint32_t i = e_; i-- > 0;) out = out * p_ + z[i];
    return out;
  }
  Elem poly_add(Elem a, Elem b) const {
    auto x = digits(a), y = digits(b);
    Elem out = 0;
    for (std::uint32_t i = e_; i-- > 0;) out = out * p_ + (x[i] + y[i]) % p_;
    return out;
  }
  std::vector<std::uint32_t> digits(Elem a) const {
    std::vector<std::uint32_t> d(e_);
    for (std::uint32_t i = 0; i < e_; ++i, a /= p_) d[i] = a % p_;
    return d;
  }

  void tabulate() {
    add_.assign(std::size_t{q_} * q_, 0);
    mul_.assign(std::size_t{q_} * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    for (Elem a = 0; a < q_; ++a)
      for (Elem b = 0; b < q_; ++b) {
        add_[a * q_ + b] = poly_add(a, b);
        mul_[a * q_ + b] = poly_mul(a, b);
      }
    for (Elem a = 0; a < q_; ++a)
      for (Elem b = 0; b < q_; ++b) {
        if (add_[a * q_ + b] == 0) neg_[a] = b;
        if (mul_[a * q_ + b] == 1) inv_[a] = b;
      }
  }

  // Exhaustive check of the field axioms; cubic in q, so run for q <= 64.
  void verify_axioms() const {
    auto fail = [&](const char* what) {
      throw ConstructionError("GF(" + std::to_string(q_) + ") fails " + what);
    };
    for (Elem a = 0; a < q_; ++a) {
      if (add(a, 0) != a || mul(a, 1) != a) fail("identity laws");
      if (add(a, neg(a)) != 0) fail("additive inverse");
      if (a != 0 && mul(a, inv(a)) != 1) fail("multiplicative inverse");
      for (Elem b = 0; b < q_; ++b) {
        if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) fail("commutativity");
        if (a != 0 && b != 0 && mul(a, b) == 0) fail("no zero divisors");
        for (Elem c = 0; c < q_; ++c) {
          if (add(add(a, b), c) != add(a, add(b, c))) fail("additive associativity");
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("multiplicative associativity");
          if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributivity");
        }
      }
    }
  }

  std::uint32_t q_ = 0, p_ = 0, e_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> add_, mul_, neg_, inv_;
};

namespace detail {

struct IrreducibleEntry {
  std::uint32_t q, p, e;
  std::vector<std::uint32_t> coeffs;  // monic, lowest degree first
};

inline const std::vector<IrreducibleEntry>& irreducible_table() {
  static const std::vector<IrreducibleEntry> table = {
      {4, 2, 2, {1, 1, 1}},              // x^2 + x + 1
      {8, 2, 3, {1, 1, 0, 1}},           // x^3 + x + 1
      {9, 3, 2, {1, 0, 1}},              // x^2 + 1
      {16, 2, 4, {1, 1, 0, 0, 1}},       // x^4 + x + 1
      {25, 5, 2, {2, 0, 1}},             // x^2 + 2
      {27, 3, 3, {1, 2, 0, 1}},          // x^3 + 2x + 1
      {32, 2, 5, {1, 0, 1, 0, 0, 1}},    // x^5 + x^2 + 1
      {49, 7, 2, {1, 0, 1}},             // x^2 + 1
      {64, 2, 6, {1, 1, 0, 0, 0, 0, 1}}, // x^6 + x + 1
  };
  return table;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace detail

/// Builds GF(q). Accepts primes up to 2^16 and the prime powers listed in
/// the irreducible table; anything else is an InputError.
inline Gfq make_field(std::uint64_t q) {
  Gfq f;
  if (detail::is_prime(q)) {
    if (q > 65536) throw InputError("prime field order " + std::to_string(q) + " exceeds 65536");
    f.q_ = f.p_ = static_cast<std::uint32_t>(q);
    f.e_ = 1;
    f.modulus_ = {0, 1};
  } else {
    const detail::IrreducibleEntry* hit = nullptr;
    for (const auto& entry : detail::irreducible_table())
      if (entry.q == q) hit = &entry;
    if (!hit) throw InputError("unsupported field order " + std::to_string(q) +
                               " (need a prime, or one of 4 8 9 16 25 27 32 49 64)");
    f.q_ = hit->q;
    f.p_ = hit->p;
    f.e_ = hit->e;
    f.modulus_ = hit->coeffs;
  }
  if (f.q_ <= 64) {
    f.tabulate();
    f.verify_axioms();
  } else {
    // Large prime field: primality already makes Z/qZ a field, so only
    // spot-check the Fermat inverses.
    for (Gfq::Elem a = 1; a < std::min<std::uint32_t>(f.q_, 256); ++a)
      if (f.mul(a, f.inv(a)) != 1) throw ConstructionError("GF(" + std::to_string(q) + ") inverse check failed");
  }
  return f;
}

}  // namespace vmu
