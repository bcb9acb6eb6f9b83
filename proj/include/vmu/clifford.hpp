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


// The single-qubit Clifford group modulo global phase (24 elements).
//
// A word is a string over {H, S, X, Y, Z, I} read left to right in time
// order: "HS" applies H first, then S, so its matrix is S*H. Every element
// carries a canonical word, the shortest one found by breadth-first search
// with generators tried in the order H, S, X, Y, Z.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vmu/error.hpp"

namespace vmu {

using Complex = std::complex<double>;
using Mat2 = std::array<Complex, 4>;  // row-major a b / c d

inline Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

inline Mat2 dagger(const Mat2& m) { return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}; }

inline Mat2 gate_matrix(char g) {
  const double h = 1.0 / std::sqrt(2.0);
  const Complex i(0, 1);
  switch (g) {
    case 'I': return {1, 0, 0, 1};
    case 'H': return {h, h, h, -h};
    case 'S': return {1, 0, 0, i};
    case 'X': return {0, 1, 1, 0};
    case 'Y': return {0, -i, i, 0};
    case 'Z': return {1, 0, 0, -1};
    default: throw InputError(std::string("unknown gate '") + g + "' in Clifford word");
  }
}

/// (I + sign*i*P) / sqrt(2), a square root of sign*i*P.
inline Mat2 sqrt_pauli(char p, int sign) {
  const Mat2 m = gate_matrix(p);
  const double h = 1.0 / std::sqrt(2.0);
  const Complex c = Complex(0, sign) * h;
  return {h + c * m[0], c * m[1], c * m[2], h + c * m[3]};
}

/// Matrix of a word in time order.
inline Mat2 word_matrix(std::string_view word) {
  Mat2 m = gate_matrix('I');
  for (char g : word) m = mat_mul(gate_matrix(g), m);
  return m;
}

namespace detail {

// Phase-free key: scale so the first entry of non-negligible magnitude is
// real positive, then round each component.
inline std::array<std::int64_t, 8> phase_key(const Mat2& m) {
  Complex ref = 0;
  for (const auto& z : m)
    if (std::abs(z) > 1e-9) {
      ref = z;
      break;
    }
  const Complex scale = std::abs(ref) / ref;
  std::array<std::int64_t, 8> key{};
  for (int e = 0; e < 4; ++e) {
    const Complex z = m[e] * scale;
    key[2 * e] = static_cast<std::int64_t>(std::llround(z.real() * 1e6));
    key[2 * e + 1] = static_cast<std::int64_t>(std::llround(z.imag() * 1e6));
  }
  return key;
}

struct CliffordTable {
  std::vector<Mat2> matrix;
  std::vector<std::string> word;
  std::map<std::array<std::int64_t, 8>, int> index;
  std::vector<std::array<int, 24>> product;  // product[a][b]: apply a, then b

  CliffordTable() {
    auto add = [&](const Mat2& m, std::string w) {
      auto [it, fresh] = index.emplace(phase_key(m), static_cast<int>(matrix.size()));
      if (fresh) {
        matrix.push_back(m);
        word.push_back(std::move(w));
      }
      return fresh;
    };
    add(gate_matrix('I'), "");
    for (std::size_t head = 0; head < matrix.size(); ++head)
      for (char g : std::string_view("HSXYZ")) add(mat_mul(gate_matrix(g), matrix[head]), word[head] + g);
    if (matrix.size() != 24) throw Error("Clifford closure produced " + std::to_string(matrix.size()) + " elements");
    product.resize(24);
    for (int a = 0; a < 24; ++a)
      for (int b = 0; b < 24; ++b) product[a][b] = index.at(phase_key(mat_mul(matrix[b], matrix[a])));
  }
};

inline const CliffordTable& clifford_table() {
  static const CliffordTable table;
  return table;
}

}  // namespace detail

/// An element of the single-qubit Clifford group up to phase.
class Clifford {
 public:
  Clifford() = default;

  static Clifford from_word(std::string_view w) {
    const auto& t = detail::clifford_table();
    auto it = t.index.find(detail::phase_key(word_matrix(w)));
    if (it == t.index.end()) throw InputError("word '" + std::string(w) + "' is not a Clifford");
    return Clifford(it->second);
  }

  /// Any unitary that is Clifford up to phase; throws otherwise.
  static Clifford from_matrix(const Mat2& m) {
    const auto& t = detail::clifford_table();
    auto it = t.index.find(detail::phase_key(m));
    if (it == t.index.end()) throw InputError("matrix is not a single-qubit Clifford");
    return Clifford(it->second);
  }

  static Clifford from_index(int i) {
    if (i < 0 || i >= 24) throw InputError("Clifford index out of range");
    return Clifford(i);
  }

  int index() const noexcept { return id_; }
  const std::string& word() const { return detail::clifford_table().word[id_]; }
  const Mat2& matrix() const { return detail::clifford_table().matrix[id_]; }
  bool is_identity() const noexcept { return id_ == 0; }

  /// This element followed by `next`.
  Clifford then(const Clifford& next) const { return Clifford(detail::clifford_table().product[id_][next.id_]); }

  Clifford inverse() const { return Clifford(detail::clifford_table().index.at(detail::phase_key(dagger(matrix())))); }

  friend bool operator==(const Clifford&, const Clifford&) = default;

 private:
  explicit Clifford(int i) : id_(i) {}
  int id_ = 0;
};

}  // namespace vmu
