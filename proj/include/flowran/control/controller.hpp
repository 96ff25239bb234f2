// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flowran/control/messages.hpp"
#include "flowran/control/switch.hpp"
#include "flowran/control/trace.hpp"
#include "flowran/rat/selection.hpp"

namespace flowran::control {

/// One-way latencies used to timestamp control-plane events.
struct ControlTiming {
  TimeUs radio_hop_us = 500;    // one NR slot
  TimeUs wired_hop_us = 50;     // controller <-> co-located switch
  TimeUs core_latency_us = 5000;  // RAN <-> scripted core network
};

/// How the NAS path between a UE's SRB1 and its NGAP association is set up.
enum class NasPathMode { Proactive, Reactive };

enum class PathKind { CoreNetwork, DirectInternet };

struct UeCapabilities {
  bool wifi = false;
};

struct SessionState {
  std::uint32_t id = 0;
  PathKind path = PathKind::CoreNetwork;
  rat::RatPair rats;
  PortId mrn_dl_port;
  PortId mrn_ul_port;
  std::optional<PortId> mrn_gtp_port;
  std::optional<std::uint32_t> teid;
  PortId ue_dl_port;
  PortId ue_ul_port;
  PortId ue_ip_port;
};

struct SetupOutcome {
  CallFlowTrace trace;
  std::optional<std::uint32_t> session;

  [[nodiscard]] bool ok() const noexcept { return session.has_value(); }
};

struct TimedNotification {
  TimeUs time_us = 0;
  msg::Notification note;
};

/// Centralised flow controller owning the network-side switch and every UE
/// switch. All controller/switch exchanges go through an ordered in-process
/// queue; each exchange is recorded in the call-flow trace.
class FlowController {
 public:
  explicit FlowController(ControlTiming timing = {}, NasPathMode nas_mode = NasPathMode::Proactive)
      : timing_(timing), nas_mode_(nas_mode), mrn_(SwitchId::mrn()) {}

  void set_admission(std::function<bool(UeId)> admit) { admit_ = std::move(admit); }

  void add_ue(UeId ue, UeCapabilities caps) {
    auto [it, inserted] = ues_.try_emplace(ue, ue);
    it->second.caps = caps;
  }

  [[nodiscard]] FlowSwitch& mrn() noexcept { return mrn_; }
  [[nodiscard]] const FlowSwitch& mrn() const noexcept { return mrn_; }
  [[nodiscard]] FlowSwitch& ue_switch(UeId ue) { return ctx(ue).sw; }
  [[nodiscard]] const FlowSwitch& ue_switch(UeId ue) const { return ues_.at(ue).sw; }
  [[nodiscard]] const CallFlowTrace& trace() const noexcept { return trace_; }
  [[nodiscard]] TimeUs clock() const noexcept { return clock_; }

  [[nodiscard]] bool controller_channel_established(UeId ue) const {
    const auto it = ues_.find(ue);
    return it != ues_.end() && it->second.channel_up;
  }
  [[nodiscard]] bool registered(UeId ue) const {
    const auto it = ues_.find(ue);
    return it != ues_.end() && it->second.registered;
  }
  [[nodiscard]] const SessionState* session(UeId ue, std::uint32_t id) const {
    const auto it = ues_.find(ue);
    if (it == ues_.end()) return nullptr;
    const auto s = it->second.sessions.find(id);
    return s == it->second.sessions.end() ? nullptr : &s->second;
  }

  /// OF-Config port creation on one switch, including the interface-specific
  /// side effects (RRC signalling, tunnel or association creation).
  Result<LogicalPort, SwitchError> create_logical_port(SwitchId sw, const PortSpec& spec,
                                                       const std::string& piggyback = {}) {
    auto reply = deliver(msg::PortCreate{sw, {spec}}, piggyback);
    if (const auto* err = std::get_if<msg::Error>(&reply)) {
      return Result<LogicalPort, SwitchError>::failure(err->code);
    }
    const auto& created = std::get<msg::PortCreated>(reply);
    return *switch_for(sw).port(created.ports.front());
  }

  Result<Ack, SwitchError> install_flow(SwitchId sw, const FlowEntry& entry) {
    auto reply = deliver(msg::FlowModAdd{sw, entry});
    if (const auto* err = std::get_if<msg::Error>(&reply)) {
      return Result<Ack, SwitchError>::failure(err->code);
    }
    return Ack{};
  }

  /// Radio connection plus the UE-controller channel over a first DRB.
  CallFlowTrace run_initial_connection(UeId ue) {
    Procedure proc(*this);
    auto& c = ctx(ue);
    const std::string ue_name = "UE" + std::to_string(ue.value);

    emit(ev::kRrcSetupRequest, ue_name, "gNB-NR", ue, "SRB0", timing_.radio_hop_us);
    const bool admitted = admit_ ? admit_(ue) : true;
    emit(ev::kAdmissionNotification, "gNB-NR", "Controller", ue,
         admitted ? "admitted" : "rejected", timing_.wired_hop_us);
    if (!admitted) return proc.take();

    const auto srb1 = must(create_logical_port(SwitchId::mrn(), {PortKind::Srb, Interface::Nr, 1, ue}));
    c.mrn_srb1 = srb1.id;

    emit(ev::kRrcSetupComplete, ue_name, "gNB-NR", ue, "NAS: DHCP request", timing_.radio_hop_us);
    if (std::holds_alternative<ToController>(mrn_.process({srb1.id, ue, std::nullopt}))) {
      emit(ev::kPacketIn, "MRN", "Controller", ue, "DHCP request", timing_.wired_hop_us);
    }
    must(install_flow(SwitchId::mrn(), {{srb1.id, ue, std::nullopt}, ToController{}, 1}));

    const auto drb1 = must(create_logical_port(SwitchId::mrn(), {PortKind::Drb, Interface::Nr, 1, ue},
                                               "NAS: DHCP response"));
    c.mrn_drb1 = drb1.id;

    auto created = deliver(msg::PortCreate{SwitchId::of_ue(ue),
                                           {{PortKind::Srb, Interface::Nr, 1, ue},
                                            {PortKind::Drb, Interface::Nr, 1, ue}}});
    if (std::holds_alternative<msg::Error>(created)) throw std::logic_error("UE port creation failed");
    c.ue_drb1 = std::get<msg::PortCreated>(created).ports.at(1);

    emit(ev::kHello, ue_name, "Controller", ue, "over DRB1", timing_.radio_hop_us);
    c.channel_up = true;
    return proc.take();
  }

  /// Registration (once per UE) and PDU session setup through the core,
  /// placing downlink and uplink on the radios named in `rats`.
  SetupOutcome run_pdu_session_setup(UeId ue, rat::RatPair rats) {
    Procedure proc(*this);
    auto& c = ctx(ue);
    const std::string ue_name = "UE" + std::to_string(ue.value);
    if (!c.channel_up) throw std::logic_error("initial connection not complete");

    const bool needs_wifi = rats.downlink == Rat::Wifi || rats.uplink == Rat::Wifi;
    if (needs_wifi && !c.caps.wifi) {
      emit(ev::kPduSessionSetupFailure, "Controller", ue_name, ue, "no usable RAT",
           timing_.wired_hop_us);
      return {proc.take(), std::nullopt};
    }

    if (!c.registered) register_ue(ue, c, ue_name);

    const OpaquePayload nas_request(std::vector<std::uint8_t>(48, 0x2e));
    const OpaquePayload nas_accept(std::vector<std::uint8_t>(64, 0x2e));
    const std::uint32_t sid = c.next_session++;

    mrn_.forward_opaque({*c.mrn_srb1, ue, std::nullopt}, nas_request);
    emit(ev::kPduSessionEstablishmentRequest, ue_name, "AMF", ue, "NAS (opaque)",
         timing_.radio_hop_us + timing_.core_latency_us);
    const std::uint32_t teid = mrn_.allocate_teid();
    emit(ev::kPduSessionResourceSetupRequest, "AMF", "MRN", ue,
         "session=" + std::to_string(sid) + " teid=" + std::to_string(teid) + " qos=default",
         timing_.core_latency_us);
    emit(ev::kPacketIn, "MRN", "Controller", ue, "PDU session attributes", timing_.wired_hop_us);
    mrn_.forward_opaque({*c.mrn_ngap, ue, std::nullopt}, nas_accept);
    emit(ev::kPduSessionEstablishmentAccept, "MRN", ue_name, ue, "NAS (opaque)",
         timing_.radio_hop_us);

    SessionState s;
    s.id = sid;
    s.rats = rats;
    s.teid = teid;
    const std::uint32_t dl_drb = c.next_drb++;
    s.mrn_dl_port = must(create_logical_port(
        SwitchId::mrn(), {PortKind::Drb, radio_interface(rats.downlink), dl_drb, ue})).id;
    std::uint32_t ul_drb = dl_drb;
    if (rats.uplink != rats.downlink) {
      ul_drb = c.next_drb++;
      s.mrn_ul_port = must(create_logical_port(
          SwitchId::mrn(), {PortKind::Drb, radio_interface(rats.uplink), ul_drb, ue})).id;
    } else {
      s.mrn_ul_port = s.mrn_dl_port;
    }
    s.mrn_gtp_port =
        must(create_logical_port(SwitchId::mrn(), {PortKind::GtpTunnel, Interface::N3, teid, ue})).id;

    std::vector<PortSpec> ue_ports{{PortKind::Drb, radio_interface(rats.downlink), dl_drb, ue}};
    if (ul_drb != dl_drb) ue_ports.push_back({PortKind::Drb, radio_interface(rats.uplink), ul_drb, ue});
    ue_ports.push_back({PortKind::IpLocal, Interface::Ip, sid, ue});
    const auto ue_created = std::get<msg::PortCreated>(deliver(msg::PortCreate{SwitchId::of_ue(ue), ue_ports}));
    s.ue_dl_port = ue_created.ports.front();
    s.ue_ul_port = ul_drb != dl_drb ? ue_created.ports.at(1) : s.ue_dl_port;
    s.ue_ip_port = ue_created.ports.back();

    must(install_flow(SwitchId::mrn(), {{*s.mrn_gtp_port, ue, sid}, Forward{s.mrn_dl_port}, 10}));
    must(install_flow(SwitchId::mrn(), {{s.mrn_ul_port, ue, sid}, Forward{*s.mrn_gtp_port}, 10}));
    must(install_flow(SwitchId::of_ue(ue), {{s.ue_ip_port, ue, sid}, Forward{s.ue_ul_port}, 10}));
    must(install_flow(SwitchId::of_ue(ue), {{s.ue_dl_port, ue, sid}, Forward{s.ue_ip_port}, 10}));

    emit(ev::kPduSessionResourceSetupResponse, "MRN", "AMF", ue, "teid=" + std::to_string(teid),
         timing_.core_latency_us);
    emit(ev::kPathEstablished, "Controller", ue_name, ue, "core-network path", timing_.wired_hop_us);
    c.sessions.emplace(sid, s);
    return {proc.take(), sid};
  }

  /// Local breakout: the first uplink packet misses at the UE switch and the
  /// controller maps a DRB straight to the IP interface, bypassing the core.
  SetupOutcome run_direct_internet_setup(UeId ue, bool dedicated_drb = true) {
    Procedure proc(*this);
    auto& c = ctx(ue);
    const std::string ue_name = "UE" + std::to_string(ue.value);
    if (!c.channel_up) throw std::logic_error("initial connection not complete");

    const std::uint32_t sid = c.next_session++;
    const PortId ue_ip_phys = c.sw.physical_port(Interface::Ip);
    if (std::holds_alternative<ToController>(c.sw.process({ue_ip_phys, ue, sid}))) {
      emit(ev::kPacketIn, ue_name, "Controller", ue, "table-miss at IP interface",
           timing_.radio_hop_us);
    }

    SessionState s;
    s.id = sid;
    s.path = PathKind::DirectInternet;
    s.rats = {Rat::Gnb, Rat::Gnb};
    std::uint32_t drb = 1;
    if (dedicated_drb) {
      drb = c.next_drb++;
      s.mrn_dl_port = must(create_logical_port(SwitchId::mrn(), {PortKind::Drb, Interface::Nr, drb, ue})).id;
    } else {
      s.mrn_dl_port = *c.mrn_drb1;
    }
    s.mrn_ul_port = s.mrn_dl_port;

    std::vector<PortSpec> ue_ports;
    if (dedicated_drb) ue_ports.push_back({PortKind::Drb, Interface::Nr, drb, ue});
    ue_ports.push_back({PortKind::IpLocal, Interface::Ip, sid, ue});
    const auto created = std::get<msg::PortCreated>(deliver(msg::PortCreate{SwitchId::of_ue(ue), ue_ports}));
    s.ue_dl_port = dedicated_drb ? created.ports.front() : *c.ue_drb1;
    s.ue_ul_port = s.ue_dl_port;
    s.ue_ip_port = created.ports.back();

    const PortId mrn_ip = mrn_.physical_port(Interface::Ip);
    must(install_flow(SwitchId::of_ue(ue), {{s.ue_ip_port, ue, sid}, Forward{s.ue_ul_port}, 10}));
    must(install_flow(SwitchId::of_ue(ue), {{s.ue_dl_port, ue, sid}, Forward{s.ue_ip_port}, 10}));
    must(install_flow(SwitchId::mrn(), {{s.mrn_ul_port, ue, sid}, Forward{mrn_ip}, 10}));
    must(install_flow(SwitchId::mrn(), {{mrn_ip, ue, sid}, Forward{s.mrn_dl_port}, 10}));

    emit(ev::kPathEstablished, "Controller", ue_name, ue, "direct Internet path", timing_.wired_hop_us);
    c.sessions.emplace(sid, s);
    return {proc.take(), sid};
  }

  /// Uplink application packet for `session`; a table miss raises a PacketIn.
  Action send_uplink_packet(UeId ue, std::uint32_t session) {
    auto& c = ctx(ue);
    const auto it = c.sessions.find(session);
    const PortId in = it != c.sessions.end() ? it->second.ue_ip_port : c.sw.physical_port(Interface::Ip);
    const Action a = c.sw.process({in, ue, session});
    if (std::holds_alternative<ToController>(a)) {
      emit(ev::kPacketIn, "UE" + std::to_string(ue.value), "Controller", ue, "uplink table-miss",
           timing_.radio_hop_us);
    }
    return a;
  }

  /// Radio that carries `session` in `dir`, resolved through the flow tables.
  [[nodiscard]] std::optional<Rat> route(UeId ue, std::uint32_t session, Direction dir) {
    auto& c = ctx(ue);
    const auto it = c.sessions.find(session);
    if (it == c.sessions.end()) return std::nullopt;
    const SessionState& s = it->second;
    const FlowSwitch& sw = dir == Direction::Downlink ? mrn_ : c.sw;
    const PacketMeta pkt = dir == Direction::Downlink
                               ? PacketMeta{s.mrn_gtp_port.value_or(mrn_.physical_port(Interface::Ip)), ue, session}
                               : PacketMeta{s.ue_ip_port, ue, session};
    const Action a = match_packet(sw.table(), pkt);
    const auto* f = std::get_if<Forward>(&a);
    if (!f) return std::nullopt;
    const LogicalPort* p = sw.port(f->port);
    if (!p) return std::nullopt;
    if (p->iface == Interface::Wifi) return Rat::Wifi;
    if (p->iface == Interface::Nr) return Rat::Gnb;
    return std::nullopt;
  }

  /// Asynchronous notifications (measurement subscriptions).
  void subscribe(bool on) { subscribed_ = on; }
  [[nodiscard]] bool subscribed() const noexcept { return subscribed_; }
  void notify(TimeUs at, msg::Notification n) {
    if (subscribed_) notifications_.push_back({at, std::move(n)});
  }
  [[nodiscard]] const std::vector<TimedNotification>& notifications() const noexcept {
    return notifications_;
  }

 private:
  struct UeContext {
    explicit UeContext(UeId ue) : sw(SwitchId::of_ue(ue)) {}
    FlowSwitch sw;
    UeCapabilities caps;
    bool channel_up = false;
    bool registered = false;
    std::optional<PortId> mrn_srb1;
    std::optional<PortId> mrn_drb1;
    std::optional<PortId> ue_drb1;
    std::optional<PortId> mrn_ngap;
    std::map<std::uint32_t, SessionState> sessions;
    std::uint32_t next_session = 1;
    std::uint32_t next_drb = 2;
  };

  // Collects the events appended while a procedure runs.
  class Procedure {
   public:
    explicit Procedure(FlowController& c) : c_(c), prev_(c.current_) { c_.current_ = &local_; }
    ~Procedure() { c_.current_ = prev_; }
    Procedure(const Procedure&) = delete;
    Procedure& operator=(const Procedure&) = delete;
    CallFlowTrace take() { return local_; }

   private:
    FlowController& c_;
    CallFlowTrace* prev_;
    CallFlowTrace local_;
  };

  UeContext& ctx(UeId ue) {
    const auto it = ues_.find(ue);
    if (it == ues_.end()) throw std::out_of_range("unknown UE " + std::to_string(ue.value));
    return it->second;
  }

  FlowSwitch& switch_for(const SwitchId& sw) { return sw.is_mrn() ? mrn_ : ctx(*sw.ue).sw; }

  template <typename T>
  static T must(const Result<T, SwitchError>& r) {
    if (!r) throw std::logic_error(std::string("switch rejected request: ") + to_string(r.error()));
    return r.value();
  }

  void emit(const char* name, std::string sender, std::string receiver, std::optional<UeId> ue,
            std::string summary, TimeUs hop) {
    clock_ += hop;
    TraceEvent e{name, clock_, std::move(sender), std::move(receiver), ue, std::move(summary)};
    if (current_) current_->append(e);
    trace_.append(std::move(e));
  }

  void register_ue(UeId ue, UeContext& c, const std::string& ue_name) {
    const OpaquePayload nas_reg(std::vector<std::uint8_t>(32, 0x7e));
    auto install_nas_path = [&] {
      const std::uint32_t ngap_id = mrn_.allocate_ngap_id();
      c.mrn_ngap = must(create_logical_port(SwitchId::mrn(), {PortKind::NgapAssoc, Interface::N2, ngap_id, ue})).id;
      must(install_flow(SwitchId::mrn(), {{*c.mrn_srb1, ue, std::nullopt}, Forward{*c.mrn_ngap}, 10}));
      must(install_flow(SwitchId::mrn(), {{*c.mrn_ngap, ue, std::nullopt}, Forward{*c.mrn_srb1}, 10}));
    };

    if (nas_mode_ == NasPathMode::Proactive) {
      install_nas_path();
      mrn_.forward_opaque({*c.mrn_srb1, ue, std::nullopt}, nas_reg);
      emit(ev::kRegistrationRequest, ue_name, "AMF", ue, "NAS (opaque)",
           timing_.radio_hop_us + timing_.core_latency_us);
    } else {
      emit(ev::kRegistrationRequest, ue_name, "MRN", ue, "NAS (opaque)", timing_.radio_hop_us);
      if (std::holds_alternative<ToController>(mrn_.forward_opaque({*c.mrn_srb1, ue, std::nullopt}, nas_reg))) {
        emit(ev::kPacketIn, "MRN", "Controller", ue, "first NAS message", timing_.wired_hop_us);
      }
      install_nas_path();
    }
    mrn_.forward_opaque({*c.mrn_ngap, ue, std::nullopt}, nas_reg);
    emit(ev::kRegistrationAccept, "AMF", ue_name, ue, "NAS (opaque)",
         timing_.core_latency_us + timing_.radio_hop_us);
    c.registered = true;
  }

  // In-process ordered channel between the controller and the switches.
  ControllerMsg deliver(ControllerMsg m, const std::string& piggyback = {}) {
    queue_.push_back(std::move(m));
    ControllerMsg reply = msg::Hello{};
    while (!queue_.empty()) {
      ControllerMsg next = std::move(queue_.front());
      queue_.pop_front();
      reply = handle(next, piggyback);
    }
    return reply;
  }

  ControllerMsg handle(const ControllerMsg& m, const std::string& piggyback) {
    if (const auto* pc = std::get_if<msg::PortCreate>(&m)) return handle_port_create(*pc, piggyback);
    if (const auto* fm = std::get_if<msg::FlowModAdd>(&m)) {
      const TimeUs hop = fm->sw.is_mrn() ? timing_.wired_hop_us : timing_.radio_hop_us;
      emit(ev::kFlowModAdd, "Controller", fm->sw.name(), fm->sw.ue.has_value() ? fm->sw.ue : fm->entry.match.ue,
           "in_port=" + std::to_string(fm->entry.match.in_port.value), hop);
      auto r = switch_for(fm->sw).install_flow(fm->entry);
      if (!r) return msg::Error{fm->sw, r.error()};
      return msg::Hello{};
    }
    return msg::Hello{};
  }

  ControllerMsg handle_port_create(const msg::PortCreate& pc, const std::string& piggyback) {
    FlowSwitch& sw = switch_for(pc.sw);
    std::string summary;
    for (const auto& s : pc.ports) {
      if (!summary.empty()) summary += "+";
      summary += describe(LogicalPort{PortId{}, s.kind, s.iface, s.binding, s.ue, false});
    }
    const TimeUs hop = pc.sw.is_mrn() ? timing_.wired_hop_us : timing_.radio_hop_us;
    const std::optional<UeId> ue = pc.ports.empty() ? std::nullopt : pc.ports.front().ue;
    emit(ev::kPortCreate, "Controller", pc.sw.name(), ue, summary, hop);

    msg::PortCreated created;
    for (const auto& s : pc.ports) {
      auto r = sw.create_logical_port(s);
      if (!r) return msg::Error{pc.sw, r.error()};
      created.ports.push_back(r.value().id);
      if (pc.sw.is_mrn()) interface_side_effect(r.value(), piggyback);
    }
    return created;
  }

  // Each network-side interface turns a port creation into its own signalling.
  void interface_side_effect(const LogicalPort& p, const std::string& piggyback) {
    const std::string ue_name = p.owner ? "UE" + std::to_string(p.owner->value) : "UE";
    std::string what = describe(p);
    if (!piggyback.empty()) what += "; " + piggyback;
    switch (p.kind) {
      case PortKind::Srb:
      case PortKind::Drb:
        if (p.iface == Interface::Wifi) {
          emit(ev::kWifiBearerConfig, "Wi-Fi", ue_name, p.owner, what, timing_.radio_hop_us);
        } else if (p.kind == PortKind::Srb) {
          emit(ev::kRrcSetup, "gNB-NR", ue_name, p.owner, what, timing_.radio_hop_us);
        } else {
          emit(ev::kRrcReconfiguration, "gNB-NR", ue_name, p.owner, what, timing_.radio_hop_us);
        }
        break;
      case PortKind::NgapAssoc:
        emit(ev::kNgapAssociationCreated, "MRN", "AMF", p.owner, what, timing_.core_latency_us);
        break;
      case PortKind::GtpTunnel:
        emit(ev::kGtpTunnelCreated, "MRN", "UPF", p.owner, what, timing_.core_latency_us);
        break;
      default:
        break;
    }
  }

  ControlTiming timing_;
  NasPathMode nas_mode_;
  FlowSwitch mrn_;
  std::map<UeId, UeContext> ues_;
  std::function<bool(UeId)> admit_;
  std::deque<ControllerMsg> queue_;
  CallFlowTrace trace_;
  CallFlowTrace* current_ = nullptr;
  TimeUs clock_ = 0;
  bool subscribed_ = false;
  std::vector<TimedNotification> notifications_;
};

}  // namespace flowran::control
