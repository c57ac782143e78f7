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

#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qrss::gf2 {

// A length-n binary word packed into an integer. Position 1 (the leftmost
// character of the printed bit string) is the most significant of the n
// low bits, so numeric order equals lexicographic order of the strings and a
// word doubles as a computational-basis index of an n-qubit register.
using Word = std::uint64_t;

inline constexpr int kMaxBlockLength = 64;
inline constexpr int kMaxEnumerableDimension = 20;

/// Mask selecting 1-based `position` inside an `n`-bit word.
constexpr Word position_mask(int position, int n) {
  return Word{1} << (n - position);
}

int weight(Word w);
std::string to_bit_string(Word w, int n);
/// Parses "1000011"-style strings. Throws MalformedMatrix on any character
/// other than '0'/'1', on empty input, or beyond kMaxBlockLength.
Word from_bit_string(std::string_view bits);

class BinaryMatrix {
 public:
  /// `rows` holds one packed word per row; only the low `cols` bits may be set.
  BinaryMatrix(int cols, std::vector<Word> rows);

  static BinaryMatrix from_strings(std::span<const std::string> rows);
  static BinaryMatrix from_strings(std::initializer_list<std::string> rows) {
    return from_strings(std::span<const std::string>(rows.begin(), rows.size()));
  }
  static BinaryMatrix identity(int n);

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  Word row(int r) const { return rows_[r]; }
  std::span<const Word> row_words() const { return rows_; }

  /// 0-based entry access.
  bool at(int r, int c) const {
    return (rows_[r] >> (cols_ - 1 - c)) & 1U;
  }

  int rank() const;

  /// Relabels columns: position q of the result carries column order[q-1] of
  /// this matrix. `order` is a 1-based permutation of 1..cols.
  BinaryMatrix permute_columns(std::span<const int> order) const;

  std::vector<std::string> to_strings() const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  int cols_;
  std::vector<Word> rows_;
};

/// Binary [n, k, d] code given by a full-rank generator matrix. The codeword
/// list and minimum distance are computed once at construction; the object
/// is immutable afterwards.
class LinearCode {
 public:
  /// Throws RankDeficient when generator rows are dependent and TooLarge when
  /// k exceeds kMaxEnumerableDimension.
  explicit LinearCode(BinaryMatrix generator);

  int n() const { return generator_.cols(); }
  int k() const { return generator_.rows(); }
  const BinaryMatrix& generator() const { return generator_; }

  /// All 2^k codewords in ascending (lexicographic) order.
  const std::vector<Word>& codewords() const { return codewords_; }
  bool contains(Word w) const;
  int min_distance() const { return min_distance_; }

  LinearCode permute_columns(std::span<const int> order) const {
    return LinearCode(generator_.permute_columns(order));
  }

 private:
  BinaryMatrix generator_;
  std::vector<Word> codewords_;
  int min_distance_ = 0;
};

std::vector<Word> enumerate_codewords(const LinearCode& code);

/// Minimum Hamming weight over nonzero codewords (exhaustive).
int min_distance(const LinearCode& code);

/// True iff G * G1^T = 0 over GF(2) and {0} < C1 < C strictly.
/// Throws DimensionMismatch if the block lengths differ.
bool check_dual_containment(const LinearCode& c, const LinearCode& c1);

}  // namespace qrss::gf2
