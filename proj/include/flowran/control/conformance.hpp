// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "flowran/control/trace.hpp"

namespace flowran::control {

enum class Presence { One, Optional, OneOrMore };

/// One position in a call-flow template. A step either matches a single event
/// (any of `names`, optionally constrained by receiver) or, when `group` is
/// non-empty, a whole sub-sequence.
struct Step {
  std::vector<std::string> names;
  std::optional<std::string> receiver;  // trailing '*' means prefix match
  Presence presence = Presence::One;
  std::vector<Step> group;

  static Step one(std::string name, std::optional<std::string> rx = std::nullopt) {
    return {{std::move(name)}, std::move(rx), Presence::One, {}};
  }
  static Step any_of(std::vector<std::string> names, std::optional<std::string> rx = std::nullopt) {
    return {std::move(names), std::move(rx), Presence::One, {}};
  }
  static Step optional_group(std::vector<Step> steps) {
    return {{}, std::nullopt, Presence::Optional, std::move(steps)};
  }
};

struct CallFlowTemplate {
  std::string name;
  std::vector<Step> steps;
  bool forbid_core_events = false;
};

struct ConformanceResult {
  bool ok = false;
  std::string reason;
};

namespace detail {

inline bool receiver_matches(const std::optional<std::string>& want, const std::string& got) {
  if (!want) return true;
  if (!want->empty() && want->back() == '*') {
    return got.compare(0, want->size() - 1, *want, 0, want->size() - 1) == 0;
  }
  return *want == got;
}

inline bool event_matches(const Step& s, const TraceEvent& e) {
  if (!receiver_matches(s.receiver, e.receiver)) return false;
  for (const auto& n : s.names) {
    if (n == e.name) return true;
  }
  return false;
}

// Matches steps[si..] against events[ei..] exactly to the end; on failure
// records the furthest event index reached.
inline bool match_from(const std::vector<Step>& steps, std::size_t si,
                       const std::vector<TraceEvent>& events, std::size_t ei, std::size_t& reached,
                       std::size_t* end_out) {
  reached = std::max(reached, ei);
  if (si == steps.size()) {
    if (end_out) {
      *end_out = ei;
      return true;
    }
    return ei == events.size();
  }
  const Step& s = steps[si];

  auto try_once = [&](std::size_t at, std::size_t& next) -> bool {
    if (!s.group.empty()) {
      std::size_t r = reached;
      const bool ok = match_from(s.group, 0, events, at, r, &next);
      reached = std::max(reached, r);
      return ok;
    }
    if (at < events.size() && event_matches(s, events[at])) {
      next = at + 1;
      return true;
    }
    return false;
  };

  std::size_t next = 0;
  switch (s.presence) {
    case Presence::One:
      return try_once(ei, next) && match_from(steps, si + 1, events, next, reached, end_out);
    case Presence::Optional:
      if (try_once(ei, next) && match_from(steps, si + 1, events, next, reached, end_out)) return true;
      return match_from(steps, si + 1, events, ei, reached, end_out);
    case Presence::OneOrMore: {
      std::size_t at = ei;
      std::vector<std::size_t> ends;
      while (try_once(at, next) && next > at) {
        ends.push_back(next);
        at = next;
      }
      for (auto it = ends.rbegin(); it != ends.rend(); ++it) {
        if (match_from(steps, si + 1, events, *it, reached, end_out)) return true;
      }
      return false;
    }
  }
  return false;
}

}  // namespace detail

/// Checks that `trace` is exactly one instance of `tmpl`.
inline ConformanceResult check_conformance(const CallFlowTrace& trace, const CallFlowTemplate& tmpl) {
  const auto& events = trace.events();
  if (tmpl.forbid_core_events) {
    for (const auto& e : events) {
      if (is_core_network_event(e.name)) {
        return {false, tmpl.name + ": unexpected core-network event " + e.name};
      }
    }
  }
  std::size_t reached = 0;
  if (detail::match_from(tmpl.steps, 0, events, 0, reached, nullptr)) return {true, {}};
  std::string where = reached < events.size() ? "event #" + std::to_string(reached) + " (" +
                                                    events[reached].name + ")"
                                              : "end of trace";
  return {false, tmpl.name + ": mismatch at " + where};
}

namespace templates {

inline CallFlowTemplate initial_connection() {
  return {"initial-connection",
          {Step::one(ev::kRrcSetupRequest), Step::one(ev::kAdmissionNotification),
           Step::one(ev::kPortCreate, "MRN"), Step::one(ev::kRrcSetup),
           Step::one(ev::kRrcSetupComplete), Step::one(ev::kPacketIn, "Controller"),
           Step::one(ev::kFlowModAdd, "MRN"), Step::one(ev::kPortCreate, "MRN"),
           Step::one(ev::kRrcReconfiguration), Step::one(ev::kPortCreate, "UE*"),
           Step::one(ev::kHello, "Controller")},
          false};
}

inline CallFlowTemplate admission_rejected() {
  return {"admission-rejected",
          {Step::one(ev::kRrcSetupRequest), Step::one(ev::kAdmissionNotification)},
          false};
}

enum class Registration { AlreadyRegistered, Proactive, Reactive };

inline std::vector<Step> radio_bearer_steps() {
  return {Step::one(ev::kPortCreate, "MRN"),
          Step::any_of({ev::kRrcReconfiguration, ev::kWifiBearerConfig})};
}

inline CallFlowTemplate pdu_session(Registration reg) {
  std::vector<Step> s;
  if (reg == Registration::Proactive) {
    s = {Step::one(ev::kPortCreate, "MRN"), Step::one(ev::kNgapAssociationCreated),
         Step::one(ev::kFlowModAdd, "MRN"), Step::one(ev::kFlowModAdd, "MRN"),
         Step::one(ev::kRegistrationRequest), Step::one(ev::kRegistrationAccept)};
  } else if (reg == Registration::Reactive) {
    s = {Step::one(ev::kRegistrationRequest), Step::one(ev::kPacketIn, "Controller"),
         Step::one(ev::kPortCreate, "MRN"), Step::one(ev::kNgapAssociationCreated),
         Step::one(ev::kFlowModAdd, "MRN"), Step::one(ev::kFlowModAdd, "MRN"),
         Step::one(ev::kRegistrationAccept)};
  }
  const std::vector<Step> core = {
      Step::one(ev::kPduSessionEstablishmentRequest),
      Step::one(ev::kPduSessionResourceSetupRequest),
      Step::one(ev::kPacketIn, "Controller"),
      Step::one(ev::kPduSessionEstablishmentAccept),
      Step::one(ev::kPortCreate, "MRN"),
      Step::any_of({ev::kRrcReconfiguration, ev::kWifiBearerConfig}),
      Step::optional_group(radio_bearer_steps()),
      Step::one(ev::kPortCreate, "MRN"),
      Step::one(ev::kGtpTunnelCreated),
      Step::one(ev::kPortCreate, "UE*"),
      Step::one(ev::kFlowModAdd, "MRN"),
      Step::one(ev::kFlowModAdd, "MRN"),
      Step::one(ev::kFlowModAdd, "UE*"),
      Step::one(ev::kFlowModAdd, "UE*"),
      Step::one(ev::kPduSessionResourceSetupResponse),
      Step::one(ev::kPathEstablished)};
  s.insert(s.end(), core.begin(), core.end());
  return {"pdu-session", std::move(s), false};
}

inline CallFlowTemplate pdu_session_failure() {
  return {"pdu-session-failure", {Step::one(ev::kPduSessionSetupFailure)}, false};
}

inline CallFlowTemplate direct_internet() {
  return {"direct-internet",
          {Step::one(ev::kPacketIn, "Controller"),
           Step::optional_group({Step::one(ev::kPortCreate, "MRN"), Step::one(ev::kRrcReconfiguration)}),
           Step::one(ev::kPortCreate, "UE*"), Step::one(ev::kFlowModAdd, "UE*"),
           Step::one(ev::kFlowModAdd, "UE*"), Step::one(ev::kFlowModAdd, "MRN"),
           Step::one(ev::kFlowModAdd, "MRN"), Step::one(ev::kPathEstablished)},
          true};
}

}  // namespace templates

}  // namespace flowran::control
