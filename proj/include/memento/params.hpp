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

#include "memento/errors.hpp"

namespace memento {

inline constexpr double kDefaultMaxLoadFactor = 0.95;

/// Tuning tuple governing all layout math.
///
/// `fingerprint_bits` is the full-length fingerprint f. In expandable mode
/// the stored fluid field is one bit wider (f+1) to hold the unary age
/// counter, so slots are f+r bits wide in static mode and f+r+1 in
/// expandable mode.
struct FilterParams {
  uint64_t n_slots = 1ULL << 16;
  uint32_t fingerprint_bits = 8;
  uint32_t memento_bits = 5;
  double max_load_factor = kDefaultMaxLoadFactor;
  uint64_t seed = 0;
  bool expandable = false;

  uint32_t fingerprint_field_bits() const {
    return fingerprint_bits + (expandable ? 1 : 0);
  }

  uint32_t slot_width() const {
    return fingerprint_field_bits() + memento_bits;
  }

  uint32_t slot_bits() const {
    return static_cast<uint32_t>(std::countr_zero(n_slots));
  }

  /// Physical slot budget the load-factor cap allows.
  uint64_t slot_capacity() const {
    return static_cast<uint64_t>(max_load_factor *
                                 static_cast<double>(n_slots));
  }

  void validate() const {
    if (n_slots == 0 || !std::has_single_bit(n_slots))
      throw Error("n_slots must be a nonzero power of two");
    if (fingerprint_bits < 1) throw Error("fingerprint_bits must be >= 1");
    if (memento_bits < 1) throw Error("memento_bits must be >= 1");
    if (slot_width() > 64)
      throw Error("slot width (fingerprint + memento bits) must be <= 64");
    if (slot_bits() + fingerprint_bits > 64)
      throw Error("log2(n_slots) + fingerprint_bits must be <= 64");
    if (!(max_load_factor > 0.0) || max_load_factor > kDefaultMaxLoadFactor)
      throw Error("max_load_factor must be in (0, 0.95]");
  }

  friend bool operator==(const FilterParams&, const FilterParams&) = default;
};

}  // namespace memento
