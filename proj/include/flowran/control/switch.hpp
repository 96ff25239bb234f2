// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "flowran/control/flow_table.hpp"
#include "flowran/control/messages.hpp"
#include "flowran/control/ports.hpp"
#include "flowran/core/result.hpp"

namespace flowran::control {

/// NAS or other end-to-end payload that switches carry without parsing.
/// Reading the content sets a taint flag so tests can prove nobody looked.
class OpaquePayload {
 public:
  OpaquePayload() = default;
  explicit OpaquePayload(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

  [[nodiscard]] std::size_t size() const noexcept { return bytes_.size(); }
  [[nodiscard]] const std::vector<std::uint8_t>& inspect() const {
    inspected_ = true;
    return bytes_;
  }
  [[nodiscard]] bool inspected() const noexcept { return inspected_; }

 private:
  std::vector<std::uint8_t> bytes_;
  mutable bool inspected_ = false;
};

struct Ack {};

/// Match-action switch with OF-Config style logical ports.
class FlowSwitch {
 public:
  explicit FlowSwitch(SwitchId id) : id_(id) {
    add_physical(PortKind::PhysNr, Interface::Nr);
    add_physical(PortKind::PhysWifi, Interface::Wifi);
    add_physical(PortKind::IpLocal, Interface::Ip);
  }

  [[nodiscard]] const SwitchId& id() const noexcept { return id_; }
  [[nodiscard]] const FlowTable& table() const noexcept { return table_; }
  [[nodiscard]] const std::map<PortId, LogicalPort>& ports() const noexcept { return ports_; }

  [[nodiscard]] const LogicalPort* port(PortId id) const {
    const auto it = ports_.find(id);
    return it == ports_.end() ? nullptr : &it->second;
  }

  [[nodiscard]] PortId physical_port(Interface iface) const {
    for (const auto& [id, p] : ports_) {
      if (p.physical && p.iface == iface) return id;
    }
    throw std::logic_error("no physical port on interface");
  }

  [[nodiscard]] std::optional<PortId> find_port(PortKind kind, Interface iface,
                                                std::optional<UeId> owner,
                                                std::optional<std::uint32_t> binding) const {
    for (const auto& [id, p] : ports_) {
      if (!p.physical && p.kind == kind && p.iface == iface && p.owner == owner &&
          p.binding == binding) {
        return id;
      }
    }
    return std::nullopt;
  }

  [[nodiscard]] std::size_t count_ports(PortKind kind, std::optional<UeId> owner = {}) const {
    std::size_t n = 0;
    for (const auto& [_, p] : ports_) {
      if (!p.physical && p.kind == kind && (!owner || p.owner == owner)) ++n;
    }
    return n;
  }

  Result<LogicalPort, SwitchError> create_logical_port(const PortSpec& spec) {
    if (!valid_placement(spec.kind, spec.iface)) return Result<LogicalPort, SwitchError>::failure(SwitchError::UnknownKind);
    if (!spec.binding) return Result<LogicalPort, SwitchError>::failure(SwitchError::MissingBinding);
    for (const auto& [_, p] : ports_) {
      if (!p.physical && collides(p, spec)) {
        return Result<LogicalPort, SwitchError>::failure(SwitchError::DuplicateBinding);
      }
    }
    LogicalPort p{PortId(next_port_++), spec.kind, spec.iface, spec.binding, spec.ue, false};
    ports_.emplace(p.id, p);
    return p;
  }

  Result<Ack, SwitchError> install_flow(const FlowEntry& entry) {
    if (!port(entry.match.in_port)) return Result<Ack, SwitchError>::failure(SwitchError::UnknownPort);
    if (const auto* f = std::get_if<Forward>(&entry.action); f && !port(f->port)) {
      return Result<Ack, SwitchError>::failure(SwitchError::UnknownPort);
    }
    table_.append(entry);
    return Ack{};
  }

  /// Forwarding decision; counts table misses.
  Action process(const PacketMeta& pkt) {
    ++lookups_;
    const Action a = match_packet(table_, pkt);
    if (std::holds_alternative<ToController>(a) && !table_.lookup(pkt)) ++misses_;
    return a;
  }

  /// Same as process(); the payload is carried, never parsed.
  Action forward_opaque(const PacketMeta& pkt, const OpaquePayload& /*payload*/) {
    return process(pkt);
  }

  [[nodiscard]] std::uint64_t lookups() const noexcept { return lookups_; }
  [[nodiscard]] std::uint64_t misses() const noexcept { return misses_; }

  std::uint32_t allocate_teid() { return next_teid_++; }
  std::uint32_t allocate_ngap_id() { return next_ngap_id_++; }

 private:
  static bool valid_placement(PortKind kind, Interface iface) {
    switch (kind) {
      case PortKind::Srb:
      case PortKind::Drb: return iface == Interface::Nr || iface == Interface::Wifi;
      case PortKind::NgapAssoc: return iface == Interface::N2;
      case PortKind::GtpTunnel: return iface == Interface::N3;
      case PortKind::IpLocal: return iface == Interface::Ip;
      default: return false;
    }
  }

  // Uniqueness scopes: bearers per (UE, interface), NGAP ids and TEIDs per
  // switch, IP session ports per UE.
  static bool collides(const LogicalPort& p, const PortSpec& s) {
    if (p.kind != s.kind || p.binding != s.binding) return false;
    switch (s.kind) {
      case PortKind::Srb:
      case PortKind::Drb: return p.owner == s.ue && p.iface == s.iface;
      case PortKind::NgapAssoc:
      case PortKind::GtpTunnel: return true;
      case PortKind::IpLocal: return p.owner == s.ue;
      default: return true;
    }
  }

  void add_physical(PortKind kind, Interface iface) {
    const PortId id(next_port_++);
    ports_.emplace(id, LogicalPort{id, kind, iface, std::nullopt, std::nullopt, true});
  }

  SwitchId id_;
  std::map<PortId, LogicalPort> ports_;
  FlowTable table_;
  std::uint32_t next_port_ = 1;
  std::uint32_t next_teid_ = 0x10;
  std::uint32_t next_ngap_id_ = 1;
  std::uint64_t lookups_ = 0;
  std::uint64_t misses_ = 0;
};

}  // namespace flowran::control
