// Copyright 2026 The Memento Filter Library Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstdint>
#include <limits>

namespace memento::bits {

inline constexpr uint64_t kAllOnes = ~uint64_t{0};

/// Mask with the low `n` bits set; `n` may be 0..64.
constexpr uint64_t low_mask(uint32_t n) {
  return n >= 64 ? kAllOnes : (uint64_t{1} << n) - 1;
}

/// Number of set bits at or below position `pos` (inclusive rank).
constexpr uint32_t rank(uint64_t word, uint32_t pos) {
  return static_cast<uint32_t>(std::popcount(word & low_mask(pos + 1)));
}

inline constexpr uint32_t kSelectNone = 64;

/// Position of the k-th (0-indexed) set bit, or kSelectNone if fewer than
/// k+1 bits are set.
inline uint32_t select(uint64_t word, uint32_t k) {
#if defined(__BMI2__)
  const uint64_t spread = _pdep_u64(uint64_t{1} << k, word);
  return spread ? static_cast<uint32_t>(std::countr_zero(spread)) : kSelectNone;
#else
  for (uint32_t i = 0; i < k; ++i) word &= word - 1;
  return word ? static_cast<uint32_t>(std::countr_zero(word)) : kSelectNone;
#endif
}

/// select() over `word` with the low `ignore` bits masked off.
inline uint32_t select_ignore_low(uint64_t word, uint32_t ignore, uint32_t k) {
  return select(word & ~low_mask(ignore), k);
}

/// popcount with the low `ignore` bits masked off.
constexpr uint32_t popcount_ignore_low(uint64_t word, uint32_t ignore) {
  return static_cast<uint32_t>(std::popcount(word & ~low_mask(ignore)));
}

/// Reads `len` (1..64) bits starting at absolute bit offset `bit` from a
/// word array holding a packed little-endian bit stream (bit i of the
/// stream is bit i%64 of word i/64).
inline uint64_t read_bits(const uint64_t* words, uint64_t bit, uint32_t len) {
  const uint64_t w = bit >> 6;
  const uint32_t off = static_cast<uint32_t>(bit & 63);
  uint64_t v = words[w] >> off;
  if (off + len > 64) v |= words[w + 1] << (64 - off);
  return v & low_mask(len);
}

/// Writes `len` (1..64) bits of `value` at absolute bit offset `bit`.
inline void write_bits(uint64_t* words, uint64_t bit, uint32_t len,
                       uint64_t value) {
  value &= low_mask(len);
  const uint64_t w = bit >> 6;
  const uint32_t off = static_cast<uint32_t>(bit & 63);
  words[w] = (words[w] & ~(low_mask(len) << off)) | (value << off);
  if (off + len > 64) {
    const uint32_t spill = off + len - 64;
    words[w + 1] = (words[w + 1] & ~low_mask(spill)) | (value >> (64 - off));
  }
}

}  // namespace memento::bits
