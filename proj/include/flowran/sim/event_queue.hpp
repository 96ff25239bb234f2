// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <queue>
#include <stdexcept>
#include <vector>

#include "flowran/core/types.hpp"

namespace flowran::sim {

enum class EventKind : std::uint8_t { PacketArrival, SlotBoundary, WifiTxEnd, ControlMsg, MeasurementTick };

struct SimEvent {
  TimeUs time = 0;
  std::uint64_t seq = 0;  // insertion order, breaks time ties
  EventKind kind = EventKind::PacketArrival;
  std::uint64_t ref = 0;  // kind-specific index
};

/// Min-queue on (time, seq). Scheduling into the past is a logic error.
class EventQueue {
 public:
  void push(TimeUs time, EventKind kind, std::uint64_t ref = 0) {
    if (time < now_) throw std::logic_error("event scheduled before current time");
    heap_.push({time, next_seq_++, kind, ref});
  }

  [[nodiscard]] bool empty() const noexcept { return heap_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return heap_.size(); }
  [[nodiscard]] TimeUs now() const noexcept { return now_; }
  [[nodiscard]] const SimEvent& top() const { return heap_.top(); }

  SimEvent pop() {
    SimEvent e = heap_.top();
    heap_.pop();
    now_ = e.time;
    return e;
  }

 private:
  struct Later {
    bool operator()(const SimEvent& a, const SimEvent& b) const noexcept {
      return a.time != b.time ? a.time > b.time : a.seq > b.seq;
    }
  };
  std::priority_queue<SimEvent, std::vector<SimEvent>, Later> heap_;
  std::uint64_t next_seq_ = 0;
  TimeUs now_ = 0;
};

}  // namespace flowran::sim
