// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "flowran/control/flow_table.hpp"
#include "flowran/control/ports.hpp"

namespace flowran::control {

/// Identifies the network-side switch or one UE's switch.
struct SwitchId {
  std::optional<UeId> ue;  // nullopt: the multi-RAT network switch

  static SwitchId mrn() { return {}; }
  static SwitchId of_ue(UeId u) { return {u}; }
  [[nodiscard]] bool is_mrn() const noexcept { return !ue.has_value(); }
  [[nodiscard]] std::string name() const { return ue ? "UE" + std::to_string(ue->value) : "MRN"; }

  friend bool operator==(const SwitchId&, const SwitchId&) = default;
};

enum class SwitchError : std::uint8_t { UnknownPort, DuplicateBinding, UnknownKind, MissingBinding };

inline const char* to_string(SwitchError e) {
  switch (e) {
    case SwitchError::UnknownPort: return "unknown-port";
    case SwitchError::DuplicateBinding: return "duplicate-binding";
    case SwitchError::UnknownKind: return "unknown-kind";
    case SwitchError::MissingBinding: return "missing-binding";
  }
  return "?";
}

struct PortSpec {
  PortKind kind = PortKind::Srb;
  Interface iface = Interface::Nr;
  std::optional<std::uint32_t> binding;
  std::optional<UeId> ue;
};

namespace msg {
struct PacketIn {
  SwitchId sw;
  PortId in_port;
  std::string summary;
};
struct FlowModAdd {
  SwitchId sw;
  FlowEntry entry;
};
/// OF-Config port creation. One message may configure several ports.
struct PortCreate {
  SwitchId sw;
  std::vector<PortSpec> ports;
};
struct PortCreated {
  std::vector<PortId> ports;
};
struct Notification {
  std::string event;
};
struct Hello {};
struct Error {
  SwitchId sw;
  SwitchError code;
};
}  // namespace msg

using ControllerMsg = std::variant<msg::PacketIn, msg::FlowModAdd, msg::PortCreate, msg::PortCreated,
                                   msg::Notification, msg::Hello, msg::Error>;

}  // namespace flowran::control
