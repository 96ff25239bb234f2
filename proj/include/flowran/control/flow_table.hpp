// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "flowran/core/types.hpp"

namespace flowran::control {

/// Bearer-level match key. Unset optional fields are wildcards.
struct Match {
  PortId in_port;
  std::optional<UeId> ue;
  std::optional<std::uint32_t> session;

  friend bool operator==(const Match&, const Match&) = default;
};

struct PacketMeta {
  PortId in_port;
  std::optional<UeId> ue;
  std::optional<std::uint32_t> session;
};

struct Forward {
  PortId port;
  friend bool operator==(const Forward&, const Forward&) = default;
};
struct ToController {
  friend bool operator==(const ToController&, const ToController&) = default;
};
struct Drop {
  friend bool operator==(const Drop&, const Drop&) = default;
};

using Action = std::variant<Forward, ToController, Drop>;

struct FlowEntry {
  Match match;
  Action action = ToController{};
  int priority = 0;

  friend bool operator==(const FlowEntry&, const FlowEntry&) = default;
};

inline bool matches(const Match& m, const PacketMeta& pkt) {
  if (m.in_port != pkt.in_port) return false;
  if (m.ue && (!pkt.ue || *m.ue != *pkt.ue)) return false;
  if (m.session && (!pkt.session || *m.session != *pkt.session)) return false;
  return true;
}

/// Ordered match-action table. Entries keep insertion order, which breaks
/// priority ties in favour of the earlier entry.
class FlowTable {
 public:
  void append(FlowEntry e) { entries_.push_back(std::move(e)); }

  [[nodiscard]] const std::vector<FlowEntry>& entries() const noexcept { return entries_; }
  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }

  /// Highest-priority matching entry, if any.
  [[nodiscard]] const FlowEntry* lookup(const PacketMeta& pkt) const {
    const FlowEntry* best = nullptr;
    for (const auto& e : entries_) {
      if (matches(e.match, pkt) && (!best || e.priority > best->priority)) best = &e;
    }
    return best;
  }

 private:
  std::vector<FlowEntry> entries_;
};

/// Action for `pkt`; a table miss goes to the controller.
inline Action match_packet(const FlowTable& table, const PacketMeta& pkt) {
  const FlowEntry* e = table.lookup(pkt);
  return e ? e->action : Action{ToController{}};
}

}  // namespace flowran::control
