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

#include "qet/bitvec.h"

#include <bit>
#include <stdexcept>

namespace qet {

BitVec::BitVec(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {}

bool BitVec::get(size_t index) const {
  if (index >= num_bits_) {
    throw std::out_of_range("BitVec index " + std::to_string(index) + " out of range");
  }
  return (words_[index / 64] >> (index % 64)) & 1u;
}

void BitVec::set(size_t index, bool value) {
  if (index >= num_bits_) {
    throw std::out_of_range("BitVec index " + std::to_string(index) + " out of range");
  }
  uint64_t mask = uint64_t{1} << (index % 64);
  if (value) {
    words_[index / 64] |= mask;
  } else {
    words_[index / 64] &= ~mask;
  }
}

void BitVec::flip(size_t index) { set(index, !get(index)); }

bool BitVec::any() const {
  for (uint64_t w : words_) {
    if (w) return true;
  }
  return false;
}

size_t BitVec::popcount() const {
  size_t total = 0;
  for (uint64_t w : words_) total += std::popcount(w);
  return total;
}

size_t BitVec::and_popcount(const BitVec &other) const {
  check_same_size(other);
  size_t total = 0;
  for (size_t i = 0; i < words_.size(); ++i) total += std::popcount(words_[i] & other.words_[i]);
  return total;
}

std::vector<size_t> BitVec::ones() const {
  std::vector<size_t> out;
  for (size_t w = 0; w < words_.size(); ++w) {
    uint64_t bits = words_[w];
    while (bits) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

BitVec &BitVec::operator^=(const BitVec &other) {
  check_same_size(other);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVec &BitVec::operator&=(const BitVec &other) {
  check_same_size(other);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVec &BitVec::operator|=(const BitVec &other) {
  check_same_size(other);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

size_t BitVec::hash() const {
  // FNV-1a over words.
  uint64_t h = 1469598103934665603ull ^ num_bits_;
  for (uint64_t w : words_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

std::string BitVec::str() const {
  std::string out(num_bits_, '0');
  for (size_t i = 0; i < num_bits_; ++i) {
    if (get(i)) out[i] = '1';
  }
  return out;
}

void BitVec::check_same_size(const BitVec &other) const {
  if (other.num_bits_ != num_bits_) {
    throw std::invalid_argument("BitVec size mismatch: " + std::to_string(num_bits_) + " vs " +
                                std::to_string(other.num_bits_));
  }
}

}  // namespace qet
