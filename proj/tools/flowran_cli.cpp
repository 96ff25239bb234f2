// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "flowran/cli/commands.hpp"

namespace {

void add_common(CLI::App* sub, flowran::cli::Options& o) {
  sub->add_option("--config", o.config_file, "YAML config file (defaults apply for omitted keys)");
  sub->add_option("--set", o.overrides, "Override one parameter, key=value (repeatable)");
  sub->add_flag("-v,--verbose", o.verbosity, "Progress output on stderr");
}

void add_batch(CLI::App* sub, flowran::cli::Options& o) {
  add_common(sub, o);
  sub->add_option("--out", o.out_dir, "Output directory")->capture_default_str();
  sub->add_option("--seeds", o.seeds, "Number of deployments (overrides the config)");
  sub->add_option("--seed-base", o.seed_base, "First deployment seed");
  sub->add_option("--policy", o.policy, "flow-controlled, baseline or both")->capture_default_str();
  sub->add_option("--jobs", o.jobs, "Parallel runs (0: all cores)")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace flowran::cli;
  CLI::App app{"Multi-RAT flow-controlled RAN simulator"};
  app.require_subcommand(1);
  Options o;

  auto* dl = app.add_subcommand("downlink-cases", "Cases a-e under both policies");
  add_batch(dl, o);
  dl->add_option("--case", o.cases, "Restrict to these cases");

  auto* ul = app.add_subcommand("uplink-decoupling", "Uplink offload scenario under both policies");
  add_batch(ul, o);

  auto* single = app.add_subcommand("single", "One deployment, printed metrics");
  add_common(single, o);
  single->add_option("--case", o.cases, "Case name (a-e or uplink)");
  single->add_option("--seed", o.seed, "Deployment seed")->capture_default_str();
  single->add_option("--policy", o.policy, "flow-controlled, baseline or both")->capture_default_str();
  single->add_option("--trace", o.trace_file, "Write the call-flow trace as NDJSON");

  auto* validate = app.add_subcommand("validate", "Check a config and list effective parameters");
  add_common(validate, o);

  auto* topo = app.add_subcommand("dump-topology", "Write one deployment as CSV");
  add_common(topo, o);
  topo->add_option("--seed", o.seed, "Deployment seed")->capture_default_str();
  topo->add_option("--out", o.topology_file, "Output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kConfigError;
  }

  try {
    if (*dl) return cmd_downlink_cases(o, std::cout);
    if (*ul) return cmd_uplink_decoupling(o, std::cout);
    if (*single) return cmd_single(o, std::cout);
    if (*validate) return cmd_validate(o, std::cout, std::cerr);
    if (*topo) return cmd_dump_topology(o, std::cout);
  } catch (const flowran::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kRuntimeError;
}
