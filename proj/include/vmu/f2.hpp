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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vmu/error.hpp"
#include "vmu/graph.hpp"

namespace vmu {

/// Dense bit vector over GF(2).
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : n_(n), w_(bits::words_for(n), 0) {}

  std::size_t size() const noexcept { return n_; }
  bool get(std::size_t i) const { return bits::test(w_, i); }
  void set(std::size_t i, bool v = true) {
    if (v) bits::set(w_, i); else bits::clear(w_, i);
  }
  void flip(std::size_t i) { bits::flip(w_, i); }
  bool none() const {
    for (auto x : w_) if (x) return false;
    return true;
  }
  std::size_t count() const { return bits::count(w_); }
  /// Index of the lowest set bit, or size() when zero.
  std::size_t lowest() const {
    for (std::size_t w = 0; w < w_.size(); ++w)
      if (w_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(w_[w]));
    return n_;
  }
  BitVector& operator^=(const BitVector& o) {
    for (std::size_t w = 0; w < w_.size(); ++w) w_[w] ^= o.w_[w];
    return *this;
  }
  friend bool operator==(const BitVector&, const BitVector&) = default;
  std::span<const std::uint64_t> words() const { return w_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

class F2Matrix {
 public:
  F2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return rows_.at(r).get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_.at(r).set(c, v); }
  const BitVector& row(std::size_t r) const { return rows_.at(r); }
  BitVector& row(std::size_t r) { return rows_.at(r); }

  void append_row(BitVector v) {
    if (v.size() != cols_) throw InputError("row length mismatch");
    rows_.push_back(std::move(v));
  }

  F2Matrix transpose() const {
    F2Matrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c)) t.set(c, r);
    return t;
  }

 private:
  std::size_t cols_;
  std::vector<BitVector> rows_;
};

/// Row-echelon basis that remembers, for each stored vector, which inserted
/// rows were XORed together to produce it.
class F2Basis {
 public:
  explicit F2Basis(std::size_t cols) : cols_(cols), pivot_of_(cols, kNone) {}

  std::size_t rank() const noexcept { return reduced_.size(); }
  std::size_t inserted() const noexcept { return inserted_; }

  /// Inserts the next row. Returns true when the rank increased.
  bool insert(const BitVector& v) {
    if (v.size() != cols_) throw InputError("row length mismatch");
    const std::size_t id = inserted_++;
    BitVector r = v;
    std::vector<std::size_t> combo{id};
    reduce(r, combo);
    if (r.none()) return false;
    pivot_of_[r.lowest()] = reduced_.size();
    reduced_.push_back(std::move(r));
    combos_.push_back(std::move(combo));
    return true;
  }

  /// Indices of inserted rows summing to t, or nullopt.
  std::optional<std::vector<std::size_t>> express(const BitVector& t) const {
    if (t.size() != cols_) throw InputError("target length mismatch");
    BitVector r = t;
    std::vector<std::size_t> combo;
    reduce(r, combo);
    if (!r.none()) return std::nullopt;
    // combo lists row ids with multiplicity; keep those appearing an odd
    // number of times.
    std::sort(combo.begin(), combo.end());
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < combo.size();) {
      std::size_t j = i;
      while (j < combo.size() && combo[j] == combo[i]) ++j;
      if ((j - i) % 2) out.push_back(combo[i]);
      i = j;
    }
    return out;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  void reduce(BitVector& r, std::vector<std::size_t>& combo) const {
    while (!r.none()) {
      const std::size_t p = r.lowest();
      const std::size_t b = pivot_of_[p];
      if (b == kNone) return;
      r ^= reduced_[b];
      combo.insert(combo.end(), combos_[b].begin(), combos_[b].end());
    }
  }

  std::size_t cols_;
  std::size_t inserted_ = 0;
  std::vector<std::size_t> pivot_of_;
  std::vector<BitVector> reduced_;
  std::vector<std::vector<std::size_t>> combos_;
};

inline std::size_t f2_rank(const F2Matrix& m) {
  F2Basis b(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) b.insert(m.row(r));
  return b.rank();
}

/// Some x with xᵀM = tᵀ (a subset of rows XORing to t), or nullopt.
inline std::optional<BitVector> f2_solve(const F2Matrix& m, const BitVector& t) {
  if (t.size() != m.cols())
    throw InputError("f2_solve: target has " + std::to_string(t.size()) + " entries, matrix has " +
                     std::to_string(m.cols()) + " columns");
  F2Basis b(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) b.insert(m.row(r));
  auto rows = b.express(t);
  if (!rows) return std::nullopt;
  BitVector x(m.rows());
  for (auto r : *rows) x.set(r);
  return x;
}

}  // namespace vmu
