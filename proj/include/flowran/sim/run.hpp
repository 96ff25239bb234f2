// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flowran/channel/deployment.hpp"
#include "flowran/channel/topology.hpp"
#include "flowran/control/controller.hpp"
#include "flowran/core/rng.hpp"
#include "flowran/macphy/dcf.hpp"
#include "flowran/macphy/nr_rate.hpp"
#include "flowran/macphy/nr_scheduler.hpp"
#include "flowran/macphy/tdd.hpp"
#include "flowran/macphy/wifi_rate.hpp"
#include "flowran/rat/selection.hpp"
#include "flowran/sim/config.hpp"
#include "flowran/sim/event_queue.hpp"
#include "flowran/traffic/flow.hpp"
#include "flowran/traffic/metrics.hpp"

namespace flowran::sim {

/// Snapshot pushed to the controller on each measurement tick.
struct MeasurementReport {
  TimeUs time_us = 0;
  rat::LoadLevel gnb_load = rat::LoadLevel::Low;
  std::map<ApId, rat::LoadLevel> wifi_load;
  int good_channel_ues = 0;
  int bad_channel_ues = 0;
  std::uint64_t queued_gnb = 0;
  std::uint64_t queued_wifi = 0;
  std::uint64_t delivered = 0;
};

/// One (seed, case, policy) result: named metrics in a fixed order.
struct RunRow {
  std::uint64_t seed = 0;
  std::string case_name;
  Policy policy = Policy::FlowControlled;
  std::uint64_t topology_hash = 0;
  std::vector<std::pair<std::string, double>> metrics;

  [[nodiscard]] double metric(const std::string& name) const {
    for (const auto& [k, v] : metrics) {
      if (k == name) return v;
    }
    throw std::out_of_range("no metric " + name);
  }
};

struct RunOptions {
  bool keep_trace = false;
};

/// Everything a run produced, for tests and tooling.
struct RunArtifacts {
  RunRow row;
  channel::Topology topology;
  std::vector<channel::UeLinks> links;
  std::vector<int> priorities;  // by UE index
  std::vector<bool> wifi_capable;
  rat::RatAssignment assignment;
  rat::RatLoadState load_state;
  std::vector<UeId> uplink_moved;
  control::CallFlowTrace trace;
  std::vector<MeasurementReport> reports;
  std::size_t controller_notifications = 0;
  traffic::MetricsAccumulator metrics;
  int max_slot_prbs = 0;
  TimeUs last_event_us = 0;
};

inline std::uint64_t topology_hash(const channel::Topology& t) {
  std::string s;
  char buf[64];
  auto put = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g;", v);
    s += buf;
  };
  for (const auto& p : t.ap_positions) {
    put(p.x);
    put(p.y);
  }
  s += '|';
  for (std::size_t i = 0; i < t.ue_count(); ++i) {
    put(t.ue_positions[i].x);
    put(t.ue_positions[i].y);
    s += t.ue_ap_association[i] ? std::to_string(t.ue_ap_association[i]->value) : "-";
    s += t.dual_connected[i] ? "D" : "S";
  }
  return fnv1a(s);
}

/// Service priority of every UE: the case mix, shuffled per seed. The shuffle
/// depends only on the seed, so both policies see the same priorities.
inline std::vector<int> assign_priorities(const CaseSpec& cs, Rng rng) {
  std::vector<int> p;
  for (int s = 0; s < 4; ++s) p.insert(p.end(), static_cast<std::size_t>(cs.mix[static_cast<std::size_t>(s)]), s + 1);
  for (std::size_t i = p.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform_int(i - 1));
    std::swap(p[i - 1], p[j]);
  }
  return p;
}

namespace detail {

class Engine {
 public:
  Engine(const RunConfig& cfg, const CaseSpec& cs, Policy policy, std::uint64_t seed, RunOptions opts)
      : cfg_(cfg), cs_(cs), policy_(policy), seed_(seed), opts_(opts), root_(seed),
        horizon_us_(static_cast<TimeUs>(std::llround(cfg.horizon_s * 1e6))) {}

  RunArtifacts run() {
    build_deployment();
    choose_rats();
    setup_control_plane();
    build_flows();
    schedule_initial_events();
    loop();
    finish();
    return std::move(out_);
  }

 private:
  struct FlowRt {
    traffic::FlowSpec spec;
    Rat rat = Rat::Gnb;
    std::size_t metric = 0;
    std::deque<TimeUs> queue;  // creation times, FIFO
    double head_left = 0.0;    // bytes of the head packet still to send over NR
    double nr_bytes_per_prb = 0.0;
    std::optional<ApId> ap;
    TimeUs wifi_frame_us = 0;
  };

  struct Bss {
    ApId ap;
    macphy::WifiContentionState dcf;
    Rng rng;
    std::vector<std::size_t> dl_flows{};
    std::vector<std::optional<std::size_t>> sta_flow{};  // station -> uplink flow; 0 is the AP
    bool busy = false;
    std::optional<std::size_t> ap_head{};  // DL flow whose head frame the AP is sending
    std::size_t rr_next = 0;
    macphy::TxopOutcome pending{};
    std::map<std::size_t, std::size_t> inflight{};  // station -> flow
  };

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  void build_deployment() {
    out_.topology = channel::place_topology(root_.split("placement"), cfg_.placement, cfg_.radio, cfg_.placement_mode);
    Rng los = root_.split("los");
    Rng shadow = root_.split("shadowing");
    out_.links = channel::compute_deployment_channels(out_.topology, cfg_.radio, los, shadow);
    out_.priorities = assign_priorities(cs_, root_.split("service"));
    if (out_.priorities.size() != out_.topology.ue_count()) {
      throw ConfigError("downlink_cases." + cs_.name + ".mix", "service mix does not match the UE count");
    }
    const std::size_t n = out_.topology.ue_count();
    out_.wifi_capable.assign(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& l = out_.links[i];
      out_.wifi_capable[i] = out_.topology.dual_connected[i] && out_.topology.ue_ap_association[i] &&
                             l.wifi_dl && l.wifi_ul && macphy::wifi_rate(l.wifi_dl->snr_db) &&
                             macphy::wifi_rate(l.wifi_ul->snr_db);
    }
  }

  [[nodiscard]] std::vector<rat::UeSelectionInput> selection_inputs() const {
    std::vector<rat::UeSelectionInput> in;
    for (std::size_t i = 0; i < out_.topology.ue_count(); ++i) {
      const UeId ue(static_cast<std::uint32_t>(i));
      rat::UeSelectionInput u;
      u.ue = ue;
      u.priority = out_.priorities[i];
      u.gnb_channel = out_.links[i].nr_dl.quality;
      u.dual_connected = out_.wifi_capable[i];
      if (out_.wifi_capable[i]) u.serving_ap = out_.topology.ue_ap_association[i];
      u.dist_to_gnb_m = out_.topology.distance_to_gnb(ue);
      in.push_back(u);
    }
    return in;
  }

  void choose_rats() {
    const auto inputs = selection_inputs();
    const auto fresh = rat::RatLoadState::fresh(cfg_.gnb_capacity, cfg_.wifi_capacity_per_ap,
                                                out_.topology.ap_count(), cfg_.load_thresholds);
    bool have_state = false;
    if (cs_.downlink_rule == DownlinkRule::Selection && policy_ == Policy::FlowControlled) {
      auto sel = rat::select_downlink(inputs, fresh, cfg_.decision_threshold, cfg_.weights);
      out_.assignment = std::move(sel.assignment);
      out_.load_state = std::move(sel.state);
      have_state = true;
    } else if (cs_.downlink_rule == DownlinkRule::Selection) {
      out_.assignment = rat::baseline_downlink(inputs);
    } else {
      for (const auto& u : inputs) {
        const Rat r = u.wifi_capable() ? Rat::Wifi : Rat::Gnb;
        out_.assignment[u.ue] = {r, r};
      }
    }
    if (!have_state) {
      // Same accounting as the downlink algorithm: Wi-Fi-capable UEs take
      // one unit on the RAT that carries their downlink.
      out_.load_state = fresh;
      for (const auto& u : inputs) {
        if (!u.wifi_capable()) continue;
        if (out_.assignment.at(u.ue).downlink == Rat::Wifi) {
          out_.load_state.take_wifi(*u.serving_ap);
        } else {
          out_.load_state.take_gnb();
        }
      }
    }
    if (cs_.decouple_uplink && policy_ == Policy::FlowControlled) {
      auto up = rat::select_uplink(inputs, out_.assignment, cfg_.gnb_capacity, cfg_.max_uplink_users_per_ap);
      out_.assignment = std::move(up.assignment);
      out_.uplink_moved = std::move(up.moved);
    } else {
      out_.assignment = rat::baseline_uplink(out_.assignment);
    }
  }

  // Every UE attaches and opens one core-network session; the data path is
  // then read back from the installed flow tables.
  void setup_control_plane() {
    control::ControlTiming timing;
    timing.core_latency_us = static_cast<TimeUs>(std::llround(cfg_.core_latency_ms * 1e3));
    core_latency_us_ = timing.core_latency_us;
    ctl_.emplace(timing, cfg_.nas_mode);
    for (std::size_t i = 0; i < out_.topology.ue_count(); ++i) {
      const UeId ue(static_cast<std::uint32_t>(i));
      ctl_->add_ue(ue, {static_cast<bool>(out_.wifi_capable[i])});
      ctl_->run_initial_connection(ue);
      const auto setup = ctl_->run_pdu_session_setup(ue, out_.assignment.at(ue));
      if (!setup.ok()) throw std::logic_error("session setup failed for UE " + std::to_string(i));
      const auto dl = ctl_->route(ue, *setup.session, Direction::Downlink);
      const auto ul = ctl_->route(ue, *setup.session, Direction::Uplink);
      if (!dl || !ul) throw std::logic_error("no data path for UE " + std::to_string(i));
      routes_.push_back({*dl, *ul});
    }
    ctl_->subscribe(cfg_.measurements);
    if (opts_.keep_trace) out_.trace = ctl_->trace();
  }

  void add_flow(UeId ue, Direction dir, double rate, Rat rat) {
    const std::size_t i = ue.value;
    FlowRt f;
    f.spec.ue = ue;
    f.spec.direction = dir;
    f.spec.rate_pps = rate;
    f.spec.payload_bytes = cfg_.payload_bytes;
    f.spec.header_bytes = cfg_.header_bytes;
    f.spec.service = out_.priorities[i];
    f.rat = rat;
    f.metric = out_.metrics.add_flow(f.spec, rat);
    f.head_left = f.spec.pdu_bytes();
    const auto& l = out_.links[i];
    if (rat == Rat::Gnb) {
      f.nr_bytes_per_prb = macphy::link_rate_nr(dir == Direction::Downlink ? l.nr_dl.snr_db : l.nr_ul.snr_db);
    } else {
      f.ap = out_.topology.ue_ap_association[i];
      const auto mcs = macphy::wifi_rate(dir == Direction::Downlink ? l.wifi_dl->snr_db : l.wifi_ul->snr_db);
      f.wifi_frame_us =
          macphy::ppdu_duration_us(f.spec.pdu_bytes() + cfg_.dcf.mac_overhead_bytes, mcs->rate_mbps, cfg_.dcf);
    }
    const std::size_t idx = flows_.size();
    flows_.push_back(std::move(f));

    // Arrival streams are keyed by UE and direction, never by RAT or policy.
    Rng rng = traffic_rng_.split(dir == Direction::Downlink ? "dl" : "ul", ue.value);
    for (const auto& rec : traffic::poisson_arrivals(flows_.back().spec, idx, cfg_.horizon_s, rng)) {
      arrivals_.push_back(rec);
    }
  }

  void build_flows() {
    traffic_rng_ = root_.split("traffic");
    for (std::size_t i = 0; i < out_.topology.ue_count(); ++i) {
      const UeId ue(static_cast<std::uint32_t>(i));
      if (cs_.dl_rate_pps > 0.0) add_flow(ue, Direction::Downlink, cs_.dl_rate_pps, routes_[i].downlink);
      if (cs_.ul_rate_pps > 0.0) add_flow(ue, Direction::Uplink, cs_.ul_rate_pps, routes_[i].uplink);
    }
    // One BSS per AP; station 0 is the AP, then one station per uplink flow.
    const Rng backoff = root_.split("backoff");
    for (std::size_t a = 0; a < out_.topology.ap_count(); ++a) {
      Bss b{ApId(static_cast<std::uint32_t>(a)), macphy::WifiContentionState(0, cfg_.dcf), backoff.split("ap", a)};
      b.sta_flow.push_back(std::nullopt);
      bss_.push_back(std::move(b));
    }
    for (std::size_t f = 0; f < flows_.size(); ++f) {
      if (flows_[f].rat != Rat::Wifi) continue;
      Bss& b = bss_.at(flows_[f].ap->value);
      flow_bss_[f] = flows_[f].ap->value;
      if (flows_[f].spec.direction == Direction::Downlink) {
        b.dl_flows.push_back(f);
      } else {
        b.sta_flow.push_back(f);
      }
    }
    for (auto& b : bss_) b.dcf = macphy::WifiContentionState(b.sta_flow.size(), cfg_.dcf);
  }

  void schedule_initial_events() {
    for (std::size_t k = 0; k < arrivals_.size(); ++k) q_.push(arrivals_[k].created_at, EventKind::PacketArrival, k);
    if (cs_.tdd.slot_duration_us <= horizon_us_) q_.push(0, EventKind::SlotBoundary, 0);
    if (cfg_.measurements) {
      const auto period = static_cast<TimeUs>(std::llround(cfg_.measurement_period_ms * 1e3));
      for (TimeUs t = 0; t < horizon_us_; t += period) q_.push(t, EventKind::MeasurementTick, 0);
    }
  }

  void loop() {
    while (!q_.empty() && q_.top().time <= horizon_us_) {
      const SimEvent e = q_.pop();
      out_.last_event_us = e.time;
      switch (e.kind) {
        case EventKind::PacketArrival: on_arrival(e); break;
        case EventKind::SlotBoundary: on_slot(e); break;
        case EventKind::WifiTxEnd: on_tx_end(e); break;
        case EventKind::MeasurementTick: on_tick(e); break;
        case EventKind::ControlMsg: on_control(e); break;
      }
    }
  }

  void on_arrival(const SimEvent& e) {
    const auto& rec = arrivals_[e.ref];
    FlowRt& f = flows_[rec.flow];
    f.queue.push_back(rec.created_at);
    out_.metrics.on_created(f.metric);
    if (f.rat == Rat::Wifi) try_start(bss_[flow_bss_.at(rec.flow)], e.time);
  }

  void deliver_head(FlowRt& f, TimeUs at) {
    out_.metrics.on_delivered(f.metric, f.queue.front(), at, core_latency_us_);
    f.queue.pop_front();
    f.head_left = f.spec.pdu_bytes();
  }

  void on_slot(const SimEvent& e) {
    const auto k = static_cast<std::int64_t>(e.ref);
    const auto type = macphy::tdd_slot_type(k, cs_.tdd);
    const TimeUs end = e.time + cs_.tdd.slot_duration_us;
    for (const Direction dir : {Direction::Downlink, Direction::Uplink}) {
      const double share = macphy::slot_share(type, dir);
      if (share <= 0.0) continue;
      std::vector<macphy::SchedulingRequest> reqs;
      std::map<UeId, std::size_t> by_ue;
      for (std::size_t i = 0; i < flows_.size(); ++i) {
        const FlowRt& f = flows_[i];
        if (f.rat != Rat::Gnb || f.spec.direction != dir || f.queue.empty() || f.nr_bytes_per_prb <= 0.0) continue;
        const double backlog = f.head_left + static_cast<double>(f.queue.size() - 1) * f.spec.pdu_bytes();
        reqs.push_back({f.spec.ue, backlog, f.spec.service, f.nr_bytes_per_prb * share});
        by_ue[f.spec.ue] = i;
      }
      if (reqs.empty()) continue;
      const auto alloc = macphy::nr_schedule_slot(reqs, cfg_.radio.nr_prbs, cs_.scheduler);
      out_.max_slot_prbs = std::max(out_.max_slot_prbs, macphy::total_prbs(alloc));
      for (const auto& g : alloc) {
        FlowRt& f = flows_[by_ue.at(g.ue)];
        double budget = g.prbs * f.nr_bytes_per_prb * share;
        while (!f.queue.empty() && budget + 1e-9 >= f.head_left) {
          budget -= f.head_left;
          deliver_head(f, end);
        }
        if (!f.queue.empty()) f.head_left -= budget;
      }
    }
    if (end + cs_.tdd.slot_duration_us <= horizon_us_) q_.push(end, EventKind::SlotBoundary, e.ref + 1);
  }

  std::optional<std::size_t> next_ap_flow(Bss& b) {
    if (b.ap_head) return b.ap_head;
    const std::size_t n = b.dl_flows.size();
    for (std::size_t step = 0; step < n; ++step) {
      const std::size_t pos = (b.rr_next + step) % n;
      if (!flows_[b.dl_flows[pos]].queue.empty()) {
        b.ap_head = b.dl_flows[pos];
        b.rr_next = (pos + 1) % n;
        return b.ap_head;
      }
    }
    return std::nullopt;
  }

  void try_start(Bss& b, TimeUs now) {
    if (b.busy) return;
    std::vector<macphy::Contender> contenders;
    b.inflight.clear();
    if (const auto f = next_ap_flow(b)) {
      contenders.push_back({0, flows_[*f].wifi_frame_us});
      b.inflight[0] = *f;
    }
    for (std::size_t s = 1; s < b.sta_flow.size(); ++s) {
      const std::size_t f = *b.sta_flow[s];
      if (flows_[f].queue.empty()) continue;
      contenders.push_back({s, flows_[f].wifi_frame_us});
      b.inflight[s] = f;
    }
    if (contenders.empty()) return;
    b.pending = macphy::wifi_txop(b.dcf, contenders, b.rng);
    b.busy = true;
    q_.push(now + b.pending.airtime_us, EventKind::WifiTxEnd, b.ap.value);
  }

  void on_tx_end(const SimEvent& e) {
    Bss& b = bss_[e.ref];
    b.busy = false;
    if (b.pending.winner) {
      const std::size_t sta = *b.pending.winner;
      deliver_head(flows_[b.inflight.at(sta)], e.time);
      if (sta == 0) b.ap_head.reset();
    }
    for (const std::size_t sta : b.pending.dropped) {
      FlowRt& f = flows_[b.inflight.at(sta)];
      out_.metrics.on_dropped(f.metric);
      f.queue.pop_front();
      if (sta == 0) b.ap_head.reset();
    }
    try_start(b, e.time);
  }

  void on_tick(const SimEvent& e) {
    MeasurementReport r;
    r.time_us = e.time;
    r.gnb_load = out_.load_state.gnb_load;
    r.wifi_load = out_.load_state.wifi_load;
    for (const auto& l : out_.links) {
      (l.nr_dl.quality == channel::ChannelQuality::Good ? r.good_channel_ues : r.bad_channel_ues)++;
    }
    for (const auto& f : flows_) (f.rat == Rat::Gnb ? r.queued_gnb : r.queued_wifi) += f.queue.size();
    r.delivered = out_.metrics.count(&traffic::FlowCounters::delivered);
    out_.reports.push_back(r);
    // The report reaches the co-located controller one wired hop later.
    q_.push(e.time + control::ControlTiming{}.wired_hop_us, EventKind::ControlMsg, out_.reports.size() - 1);
  }

  void on_control(const SimEvent& e) {
    const auto& r = out_.reports[e.ref];
    ctl_->notify(e.time, {std::string(control::ev::kMeasurementReport) + " gnb_load=" +
                              std::to_string(rat::value(r.gnb_load)) +
                              " queued_gnb=" + std::to_string(r.queued_gnb) +
                              " queued_wifi=" + std::to_string(r.queued_wifi)});
  }

  void finish() {
    for (const auto& f : flows_) out_.metrics.set_queued(f.metric, f.queue.size());
    out_.controller_notifications = ctl_->notifications().size();

    const auto& m = out_.metrics;
    const double h = cfg_.horizon_s;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    auto delay = [&](const traffic::Scope& s) {
      const auto d = m.avg_delay(s);
      return d.mean_ms ? *d.mean_ms : nan;
    };
    auto& rows = out_.row.metrics;
    auto put = [&](const char* k, double v) { rows.emplace_back(k, v); };
    const double total = m.throughput_mbps(h);
    const double wifi = m.throughput_mbps(h, {.rat = Rat::Wifi});
    put("throughput_total_mbps", total);
    put("throughput_gnb_mbps", m.throughput_mbps(h, {.rat = Rat::Gnb}));
    put("throughput_wifi_mbps", wifi);
    put("throughput_dl_mbps", m.throughput_mbps(h, {.direction = Direction::Downlink}));
    put("throughput_ul_mbps", m.throughput_mbps(h, {.direction = Direction::Uplink}));
    put("throughput_wifi_dl_mbps", m.throughput_mbps(h, {.rat = Rat::Wifi, .direction = Direction::Downlink}));
    put("throughput_wifi_ul_mbps", m.throughput_mbps(h, {.rat = Rat::Wifi, .direction = Direction::Uplink}));
    static constexpr const char* kThr[] = {"throughput_s1_mbps", "throughput_s2_mbps", "throughput_s3_mbps",
                                           "throughput_s4_mbps"};
    static constexpr const char* kDelay[] = {"delay_s1_ms", "delay_s2_ms", "delay_s3_ms", "delay_s4_ms"};
    for (int s = 1; s <= 4; ++s) put(kThr[s - 1], m.throughput_mbps(h, {.service = s}));
    put("delay_total_ms", delay({}));
    put("delay_gnb_ms", delay({.rat = Rat::Gnb}));
    put("delay_wifi_ms", delay({.rat = Rat::Wifi}));
    put("delay_dl_ms", delay({.direction = Direction::Downlink}));
    put("delay_ul_ms", delay({.direction = Direction::Uplink}));
    for (int s = 1; s <= 4; ++s) put(kDelay[s - 1], delay({.service = s}));
    put("load_share_wifi", total > 0.0 ? wifi / total : 0.0);
    put("offered_mbps", m.offered_mbps());

    int users[2][2] = {{0, 0}, {0, 0}};  // [direction][rat]
    for (const auto& [ue, pair] : out_.assignment) {
      ++users[0][static_cast<int>(pair.downlink)];
      ++users[1][static_cast<int>(pair.uplink)];
    }
    put("users_dl_gnb", users[0][0]);
    put("users_dl_wifi", users[0][1]);
    put("users_ul_gnb", users[1][0]);
    put("users_ul_wifi", users[1][1]);
    put("uplink_moved", static_cast<double>(out_.uplink_moved.size()));
    put("packets_created", static_cast<double>(m.count(&traffic::FlowCounters::created)));
    put("packets_delivered", static_cast<double>(m.count(&traffic::FlowCounters::delivered)));
    put("packets_dropped", static_cast<double>(m.count(&traffic::FlowCounters::dropped)));
    put("packets_queued", static_cast<double>(m.count(&traffic::FlowCounters::queued)));
    put("packets_lost", static_cast<double>(m.count(&traffic::FlowCounters::created) -
                                            m.count(&traffic::FlowCounters::delivered)));
    put("dual_connected_ues", out_.topology.dual_connected_count());
    put("wifi_capable_ues", static_cast<double>(std::count(out_.wifi_capable.begin(), out_.wifi_capable.end(), true)));
    put("coverage_deficit", out_.topology.coverage_deficit);
    put("max_slot_prbs", out_.max_slot_prbs);

    out_.row.seed = seed_;
    out_.row.case_name = cs_.name;
    out_.row.policy = policy_;
    out_.row.topology_hash = topology_hash(out_.topology);
  }

  const RunConfig& cfg_;
  const CaseSpec& cs_;
  Policy policy_;
  std::uint64_t seed_;
  RunOptions opts_;
  Rng root_;
  Rng traffic_rng_{0};
  TimeUs horizon_us_;
  TimeUs core_latency_us_ = 0;
  RunArtifacts out_;
  std::optional<control::FlowController> ctl_;
  std::vector<rat::RatPair> routes_;
  std::vector<FlowRt> flows_;
  std::vector<traffic::PacketRecord> arrivals_;
  std::vector<Bss> bss_;
  std::map<std::size_t, std::size_t> flow_bss_;
  EventQueue q_;
};

}  // namespace detail

/// Validates the configuration; throws the first violation.
inline void require_valid(const RunConfig& cfg) {
  const auto errs = validate(cfg);
  if (!errs.empty()) throw errs.front();
}

/// Full run with all intermediate state.
inline RunArtifacts run_single_detailed(const RunConfig& cfg, const CaseSpec& cs, Policy policy,
                                        std::uint64_t seed, RunOptions opts = {}) {
  require_valid(cfg);
  if (cs.users() != cfg.placement.ues) {
    throw ConfigError("cases." + cs.name, "service mix sums to " + std::to_string(cs.users()) + ", expected " +
                                              std::to_string(cfg.placement.ues));
  }
  return detail::Engine(cfg, cs, policy, seed, opts).run();
}

/// One deployment, one policy: bit-deterministic in (config, case, policy, seed).
inline RunRow run_single(const RunConfig& cfg, const CaseSpec& cs, Policy policy, std::uint64_t seed) {
  return run_single_detailed(cfg, cs, policy, seed).row;
}

}  // namespace flowran::sim
