// Copyright 2026 The Toric QET Authors
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

#ifndef QET_BITVEC_H_
#define QET_BITVEC_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qet {

/// Fixed-length bit vector packed into 64-bit words. Bits past size() are
/// always zero so word-level comparisons and popcounts are exact.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(size_t num_bits);

  size_t size() const { return num_bits_; }
  size_t num_words() const { return words_.size(); }
  std::span<const uint64_t> words() const { return words_; }

  bool get(size_t index) const;
  void set(size_t index, bool value = true);
  void flip(size_t index);

  bool any() const;
  size_t popcount() const;
  /// popcount(*this & other) without materializing the intersection.
  size_t and_popcount(const BitVec &other) const;
  std::vector<size_t> ones() const;

  BitVec &operator^=(const BitVec &other);
  BitVec &operator&=(const BitVec &other);
  BitVec &operator|=(const BitVec &other);
  friend BitVec operator^(BitVec a, const BitVec &b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec &b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec &b) { return a |= b; }

  friend bool operator==(const BitVec &, const BitVec &) = default;
  friend std::strong_ordering operator<=>(const BitVec &, const BitVec &) = default;

  size_t hash() const;
  /// "0110..." with bit 0 first.
  std::string str() const;

 private:
  void check_same_size(const BitVec &other) const;

  size_t num_bits_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace qet

#endif  // QET_BITVEC_H_
