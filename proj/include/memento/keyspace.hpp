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
#include <string_view>

#include "memento/bits.hpp"

namespace memento {

/// A key split into its partition prefix (high bits) and memento (low r
/// bits). Reassembling (prefix << r) | memento reproduces the key.
struct KeyParts {
  uint64_t prefix;
  uint64_t memento;

  friend bool operator==(const KeyParts&, const KeyParts&) = default;
};

/// Where a prefix lands in the table: canonical slot plus fingerprint.
struct HashAddress {
  uint64_t canonical_slot;
  uint64_t fingerprint;

  friend bool operator==(const HashAddress&, const HashAddress&) = default;
};

/// Splits `key` into (key >> r, key & (2^r - 1)).
constexpr KeyParts split_key(uint64_t key, uint32_t memento_bits) {
  return {key >> memento_bits, key & bits::low_mask(memento_bits)};
}

constexpr uint64_t join_key(const KeyParts& parts, uint32_t memento_bits) {
  return (parts.prefix << memento_bits) | parts.memento;
}

/// Memento width for a maximum range-query length R: ceil(log2 R), floored
/// at one bit so every slot carries at least one memento bit.
constexpr uint32_t memento_bits_for(uint64_t max_range_len) {
  if (max_range_len <= 2) return 1;
  return static_cast<uint32_t>(std::bit_width(max_range_len - 1));
}

/// Seedable 64-bit avalanche mixer (Stafford variant 13 finalizer). The
/// map is a bijection for any fixed seed, so distinct prefixes never
/// collide in the full 64-bit hash.
constexpr uint64_t hash_prefix(uint64_t prefix, uint64_t seed) {
  uint64_t h = prefix ^ (seed * 0x9E3779B97F4A7C15ULL + 0x243F6A8885A308D3ULL);
  h ^= h >> 30;
  h *= 0xBF58476D1CE4E5B9ULL;
  h ^= h >> 27;
  h *= 0x94D049BB133111EBULL;
  h ^= h >> 31;
  return h;
}

/// Splits an already-computed 64-bit hash into a canonical slot (low
/// log2(n) bits) and an f-bit fingerprint (the next f bits). `n_slots`
/// must be a power of two.
constexpr HashAddress address_of_hash(uint64_t hash, uint64_t n_slots,
                                      uint32_t fingerprint_bits) {
  const uint32_t slot_bits =
      static_cast<uint32_t>(std::countr_zero(n_slots));
  return {hash & (n_slots - 1),
          (hash >> slot_bits) & bits::low_mask(fingerprint_bits)};
}

constexpr HashAddress address_of(uint64_t prefix, uint64_t n_slots,
                                 uint32_t fingerprint_bits, uint64_t seed) {
  return address_of_hash(hash_prefix(prefix, seed), n_slots,
                         fingerprint_bits);
}

/// Truncates a key to `width` low bits (64 is the identity).
constexpr uint64_t mask_key(uint64_t key, uint32_t width) {
  return key & bits::low_mask(width);
}

/// Convenience for byte-string inputs: interprets the first eight bytes
/// big-endian, zero-padding short strings and truncating long ones so that
/// lexicographic order of the originals is preserved for the retained
/// prefix. No l*-tuning; fixed-width integer keys are the primary citizens.
constexpr uint64_t fixed_width_key(std::string_view bytes) {
  uint64_t key = 0;
  for (int i = 0; i < 8; ++i) {
    key <<= 8;
    if (static_cast<size_t>(i) < bytes.size())
      key |= static_cast<uint8_t>(bytes[i]);
  }
  return key;
}

}  // namespace memento
