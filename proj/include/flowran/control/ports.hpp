// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "flowran/core/types.hpp"

namespace flowran::control {

enum class PortKind : std::uint8_t { Srb, Drb, NgapAssoc, GtpTunnel, IpLocal, PhysNr, PhysWifi };

/// Physical interface a port hangs off.
enum class Interface : std::uint8_t { Nr, Wifi, N2, N3, Ip };

inline const char* to_string(PortKind k) {
  switch (k) {
    case PortKind::Srb: return "SRB";
    case PortKind::Drb: return "DRB";
    case PortKind::NgapAssoc: return "NGAP_ASSOC";
    case PortKind::GtpTunnel: return "GTP_TUNNEL";
    case PortKind::IpLocal: return "IP_LOCAL";
    case PortKind::PhysNr: return "PHYS_NR";
    case PortKind::PhysWifi: return "PHYS_WIFI";
  }
  return "?";
}

inline const char* to_string(Interface i) {
  switch (i) {
    case Interface::Nr: return "NR";
    case Interface::Wifi: return "WIFI";
    case Interface::N2: return "N2";
    case Interface::N3: return "N3";
    case Interface::Ip: return "IP";
  }
  return "?";
}

inline Interface radio_interface(Rat r) { return r == Rat::Wifi ? Interface::Wifi : Interface::Nr; }

struct LogicalPort {
  PortId id;
  PortKind kind = PortKind::Srb;
  Interface iface = Interface::Nr;
  // SRB/DRB id, RAN-UE-NGAP id, GTP TEID or PDU session id, by kind.
  std::optional<std::uint32_t> binding;
  std::optional<UeId> owner;
  bool physical = false;

  friend bool operator==(const LogicalPort&, const LogicalPort&) = default;
};

inline std::string describe(const LogicalPort& p) {
  std::string s = std::string(to_string(p.kind)) + "@" + to_string(p.iface);
  if (p.binding) s += "#" + std::to_string(*p.binding);
  return s;
}

}  // namespace flowran::control
