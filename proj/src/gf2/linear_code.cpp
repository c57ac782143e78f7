// Copyright 2026 The QRSS Authors
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

#include "qrss/gf2/linear_code.h"

#include <algorithm>
#include <bit>
#include <limits>

#include "qrss/error.h"

namespace qrss::gf2 {

int weight(Word w) { return std::popcount(w); }

std::string to_bit_string(Word w, int n) {
  std::string out(static_cast<size_t>(n), '0');
  for (int p = 1; p <= n; ++p) {
    if (w & position_mask(p, n)) out[p - 1] = '1';
  }
  return out;
}

Word from_bit_string(std::string_view bits) {
  if (bits.empty() || bits.size() > static_cast<size_t>(kMaxBlockLength)) {
    throw Error(ErrorCode::MalformedMatrix,
                "bit string length must be in [1, 64], got " +
                    std::to_string(bits.size()));
  }
  Word w = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') {
      throw Error(ErrorCode::MalformedMatrix,
                  "unexpected character '" + std::string(1, ch) +
                      "' in bit string \"" + std::string(bits) + "\"");
    }
    w = (w << 1) | static_cast<Word>(ch == '1');
  }
  return w;
}

BinaryMatrix::BinaryMatrix(int cols, std::vector<Word> rows)
    : cols_(cols), rows_(std::move(rows)) {
  if (cols_ < 1 || cols_ > kMaxBlockLength) {
    throw Error(ErrorCode::MalformedMatrix,
                "column count must be in [1, 64], got " + std::to_string(cols_));
  }
  if (rows_.empty()) {
    throw Error(ErrorCode::MalformedMatrix, "matrix needs at least one row");
  }
  const Word spill =
      cols_ == 64 ? Word{0} : ~((Word{1} << cols_) - 1);
  for (Word r : rows_) {
    if (r & spill) {
      throw Error(ErrorCode::MalformedMatrix, "row has bits beyond column count");
    }
  }
}

BinaryMatrix BinaryMatrix::from_strings(std::span<const std::string> rows) {
  if (rows.empty()) {
    throw Error(ErrorCode::MalformedMatrix, "matrix needs at least one row");
  }
  std::vector<Word> words;
  words.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) {
      throw Error(ErrorCode::MalformedMatrix,
                  "ragged matrix: row \"" + r + "\" has length " +
                      std::to_string(r.size()) + ", expected " +
                      std::to_string(rows.front().size()));
    }
    words.push_back(from_bit_string(r));
  }
  return BinaryMatrix(static_cast<int>(rows.front().size()), std::move(words));
}

BinaryMatrix BinaryMatrix::identity(int n) {
  std::vector<Word> rows;
  for (int p = 1; p <= n; ++p) rows.push_back(position_mask(p, n));
  return BinaryMatrix(n, std::move(rows));
}

int BinaryMatrix::rank() const {
  std::vector<Word> m = rows_;
  int rank = 0;
  for (int c = 0; c < cols_ && rank < rows(); ++c) {
    const Word pivot_bit = Word{1} << (cols_ - 1 - c);
    auto it = std::find_if(m.begin() + rank, m.end(),
                           [&](Word r) { return (r & pivot_bit) != 0; });
    if (it == m.end()) continue;
    std::iter_swap(m.begin() + rank, it);
    for (int r = 0; r < rows(); ++r) {
      if (r != rank && (m[r] & pivot_bit)) m[r] ^= m[rank];
    }
    ++rank;
  }
  return rank;
}

BinaryMatrix BinaryMatrix::permute_columns(std::span<const int> order) const {
  if (order.size() != static_cast<size_t>(cols_)) {
    throw Error(ErrorCode::DimensionMismatch,
                "column order has " + std::to_string(order.size()) +
                    " entries for " + std::to_string(cols_) + " columns");
  }
  std::vector<bool> seen(static_cast<size_t>(cols_) + 1, false);
  for (int src : order) {
    if (src < 1 || src > cols_ || seen[src]) {
      throw Error(ErrorCode::MalformedMatrix,
                  "column order is not a permutation of 1.." +
                      std::to_string(cols_));
    }
    seen[src] = true;
  }
  std::vector<Word> out;
  out.reserve(rows_.size());
  for (Word r : rows_) {
    Word w = 0;
    for (int q = 1; q <= cols_; ++q) {
      if (r & position_mask(order[q - 1], cols_)) w |= position_mask(q, cols_);
    }
    out.push_back(w);
  }
  return BinaryMatrix(cols_, std::move(out));
}

std::vector<std::string> BinaryMatrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows_.size());
  for (Word r : rows_) out.push_back(to_bit_string(r, cols_));
  return out;
}

LinearCode::LinearCode(BinaryMatrix generator) : generator_(std::move(generator)) {
  const int k = generator_.rows();
  if (generator_.rank() != k) {
    throw Error(ErrorCode::RankDeficient,
                "generator rows are linearly dependent (rank " +
                    std::to_string(generator_.rank()) + " < " +
                    std::to_string(k) + ")");
  }
  if (k > kMaxEnumerableDimension) {
    throw Error(ErrorCode::TooLarge,
                "dimension " + std::to_string(k) + " exceeds enumeration limit " +
                    std::to_string(kMaxEnumerableDimension));
  }
  // Gray-code walk: each step toggles exactly one generator row.
  const std::uint64_t total = std::uint64_t{1} << k;
  codewords_.reserve(total);
  Word w = 0;
  codewords_.push_back(w);
  for (std::uint64_t step = 1; step < total; ++step) {
    w ^= generator_.row(std::countr_zero(step));
    codewords_.push_back(w);
  }
  std::sort(codewords_.begin(), codewords_.end());

  min_distance_ = std::numeric_limits<int>::max();
  for (Word c : codewords_) {
    if (c != 0) min_distance_ = std::min(min_distance_, weight(c));
  }
}

bool LinearCode::contains(Word w) const {
  return std::binary_search(codewords_.begin(), codewords_.end(), w);
}

std::vector<Word> enumerate_codewords(const LinearCode& code) {
  return code.codewords();
}

int min_distance(const LinearCode& code) { return code.min_distance(); }

bool check_dual_containment(const LinearCode& c, const LinearCode& c1) {
  if (c.n() != c1.n()) {
    throw Error(ErrorCode::DimensionMismatch,
                "block lengths differ: " + std::to_string(c.n()) + " vs " +
                    std::to_string(c1.n()));
  }
  for (Word g : c.generator().row_words()) {
    for (Word h : c1.generator().row_words()) {
      if (weight(g & h) % 2 != 0) return false;
    }
  }
  if (c1.k() >= c.k()) return false;
  return std::all_of(c1.codewords().begin(), c1.codewords().end(),
                     [&](Word w) { return c.contains(w); });
}

}  // namespace qrss::gf2
