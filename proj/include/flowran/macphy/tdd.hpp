// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flowran/core/types.hpp"

namespace flowran::macphy {

enum class SlotType : std::uint8_t { D, U, S };

/// Repeating TDD slot pattern. The special slot carries downlink on all but
/// its last symbol.
struct TddPattern {
  std::vector<SlotType> slots;
  TimeUs slot_duration_us = 500;  // numerology 1

  [[nodiscard]] TimeUs period_us() const noexcept {
    return static_cast<TimeUs>(slots.size()) * slot_duration_us;
  }

  /// Nine published entries plus one trailing U to fill the 5 ms period.
  static TddPattern standard() {
    using enum SlotType;
    return {{D, D, D, S, U, U, U, U, U, U}, 500};
  }
  static TddPattern all_downlink() { return {{SlotType::D}, 500}; }

  /// Parses strings such as "DDDSUUUUUU" (case-insensitive, separators ignored).
  static TddPattern parse(const std::string& text, TimeUs slot_us = 500) {
    TddPattern p;
    p.slot_duration_us = slot_us;
    for (char c : text) {
      switch (c) {
        case 'D': case 'd': p.slots.push_back(SlotType::D); break;
        case 'U': case 'u': p.slots.push_back(SlotType::U); break;
        case 'S': case 's': p.slots.push_back(SlotType::S); break;
        case ',': case ' ': case '{': case '}': break;
        default: throw DomainError(std::string("invalid TDD slot symbol '") + c + "'");
      }
    }
    if (p.slots.empty()) throw DomainError("empty TDD pattern");
    return p;
  }

  [[nodiscard]] std::string to_string() const {
    std::string s;
    for (auto t : slots) s += t == SlotType::D ? 'D' : t == SlotType::U ? 'U' : 'S';
    return s;
  }
};

inline SlotType tdd_slot_type(std::int64_t slot_index, const TddPattern& pattern) {
  if (pattern.slots.empty()) throw DomainError("empty TDD pattern");
  const auto n = static_cast<std::int64_t>(pattern.slots.size());
  return pattern.slots[static_cast<std::size_t>(((slot_index % n) + n) % n)];
}

inline constexpr double kSpecialSlotDownlinkShare = 13.0 / 14.0;

/// Fraction of a slot's symbols usable in `dir`.
constexpr double slot_share(SlotType t, Direction dir) noexcept {
  switch (t) {
    case SlotType::D: return dir == Direction::Downlink ? 1.0 : 0.0;
    case SlotType::U: return dir == Direction::Uplink ? 1.0 : 0.0;
    case SlotType::S: return dir == Direction::Downlink ? kSpecialSlotDownlinkShare : 0.0;
  }
  return 0.0;
}

}  // namespace flowran::macphy
