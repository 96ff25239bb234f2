// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace flowran {

/// Integer identifier that does not convert implicitly to other identifiers.
template <typename Tag>
struct StrongId {
  std::uint32_t value{0};

  constexpr StrongId() = default;
  constexpr explicit StrongId(std::uint32_t v) : value(v) {}

  friend constexpr auto operator<=>(StrongId, StrongId) = default;
  friend std::ostream& operator<<(std::ostream& os, StrongId id) { return os << id.value; }
};

using UeId = StrongId<struct UeIdTag>;
using ApId = StrongId<struct ApIdTag>;
using PortId = StrongId<struct PortIdTag>;

/// Simulation time in integer microseconds.
using TimeUs = std::int64_t;

constexpr TimeUs kUsPerSecond = 1'000'000;

enum class Direction : std::uint8_t { Downlink, Uplink };
enum class Rat : std::uint8_t { Gnb = 0, Wifi = 1 };

inline const char* to_string(Direction d) { return d == Direction::Downlink ? "DL" : "UL"; }
inline const char* to_string(Rat r) { return r == Rat::Gnb ? "gnb" : "wifi"; }

/// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Invalid configuration; `path` names the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
  [[nodiscard]] const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace flowran

template <typename Tag>
struct std::hash<flowran::StrongId<Tag>> {
  std::size_t operator()(flowran::StrongId<Tag> id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};
