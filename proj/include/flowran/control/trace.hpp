// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "flowran/core/types.hpp"

namespace flowran::control {

// Event names shared by the call flows and the conformance templates.
namespace ev {
inline constexpr const char* kRrcSetupRequest = "RRCSetupRequest";
inline constexpr const char* kAdmissionNotification = "AdmissionNotification";
inline constexpr const char* kPortCreate = "PortCreate";
inline constexpr const char* kRrcSetup = "RRCSetup";
inline constexpr const char* kRrcSetupComplete = "RRCSetupComplete";
inline constexpr const char* kPacketIn = "PacketIn";
inline constexpr const char* kFlowModAdd = "FlowModAdd";
inline constexpr const char* kRrcReconfiguration = "RRCReconfiguration";
inline constexpr const char* kWifiBearerConfig = "WifiBearerConfig";
inline constexpr const char* kHello = "Hello";
inline constexpr const char* kNgapAssociationCreated = "NgapAssociationCreated";
inline constexpr const char* kGtpTunnelCreated = "GtpTunnelCreated";
inline constexpr const char* kRegistrationRequest = "RegistrationRequest";
inline constexpr const char* kRegistrationAccept = "RegistrationAccept";
inline constexpr const char* kPduSessionEstablishmentRequest = "PDUSessionEstablishmentRequest";
inline constexpr const char* kPduSessionResourceSetupRequest = "PDUSessionResourceSetupRequest";
inline constexpr const char* kPduSessionEstablishmentAccept = "PDUSessionEstablishmentAccept";
inline constexpr const char* kPduSessionResourceSetupResponse = "PDUSessionResourceSetupResponse";
inline constexpr const char* kPduSessionSetupFailure = "PDUSessionSetupFailure";
inline constexpr const char* kPathEstablished = "PathEstablished";
inline constexpr const char* kMeasurementReport = "MeasurementReport";
}  // namespace ev

// Protocol families used to classify events, e.g. to assert that a
// direct-Internet setup never touches the core network.
inline bool is_core_network_event(const std::string& name) {
  return name == ev::kNgapAssociationCreated || name == ev::kGtpTunnelCreated ||
         name == ev::kPduSessionResourceSetupRequest ||
         name == ev::kPduSessionResourceSetupResponse || name == ev::kRegistrationRequest ||
         name == ev::kRegistrationAccept || name == ev::kPduSessionEstablishmentRequest ||
         name == ev::kPduSessionEstablishmentAccept;
}

struct TraceEvent {
  std::string name;
  TimeUs time_us = 0;
  std::string sender;
  std::string receiver;
  std::optional<UeId> ue;
  std::string summary;
};

/// Append-only, time-ordered event log of one procedure.
class CallFlowTrace {
 public:
  void append(TraceEvent e) {
    if (!events_.empty() && e.time_us < events_.back().time_us) {
      throw std::logic_error("trace events must be appended in time order");
    }
    events_.push_back(std::move(e));
  }

  [[nodiscard]] const std::vector<TraceEvent>& events() const noexcept { return events_; }
  [[nodiscard]] std::size_t size() const noexcept { return events_.size(); }
  [[nodiscard]] bool empty() const noexcept { return events_.empty(); }
  [[nodiscard]] const TraceEvent& operator[](std::size_t i) const { return events_.at(i); }

  [[nodiscard]] std::vector<std::string> names() const {
    std::vector<std::string> out;
    out.reserve(events_.size());
    for (const auto& e : events_) out.push_back(e.name);
    return out;
  }

 private:
  std::vector<TraceEvent> events_;
};

inline nlohmann::json to_json(const TraceEvent& e) {
  nlohmann::json j;
  j["event_name"] = e.name;
  j["time_us"] = e.time_us;
  j["sender"] = e.sender;
  j["receiver"] = e.receiver;
  j["ue_id"] = e.ue ? nlohmann::json(e.ue->value) : nlohmann::json(nullptr);
  if (!e.summary.empty()) j["summary"] = e.summary;
  return j;
}

/// Newline-delimited JSON, one event per line.
inline void write_ndjson(std::ostream& os, const CallFlowTrace& trace) {
  for (const auto& e : trace.events()) os << to_json(e).dump() << '\n';
}

}  // namespace flowran::control
