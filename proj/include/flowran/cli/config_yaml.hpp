// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include <yaml-cpp/yaml.h>

#include "flowran/sim/config.hpp"

namespace flowran::cli {

namespace detail {

inline void apply_node(sim::RunConfig& cfg, const YAML::Node& node, const std::string& path) {
  switch (node.Type()) {
    case YAML::NodeType::Map:
      for (const auto& kv : node) {
        const std::string key = kv.first.as<std::string>();
        apply_node(cfg, kv.second, path.empty() ? key : path + "." + key);
      }
      break;
    case YAML::NodeType::Sequence: {
      std::string joined;
      for (const auto& item : node) {
        if (!item.IsScalar()) throw ConfigError(path, "expected a list of scalars");
        if (!joined.empty()) joined += ",";
        joined += item.as<std::string>();
      }
      sim::set_parameter(cfg, path, joined);
      break;
    }
    case YAML::NodeType::Scalar:
      sim::set_parameter(cfg, path, node.as<std::string>());
      break;
    case YAML::NodeType::Null:
      if (!path.empty()) throw ConfigError(path, "missing value");
      break;
    case YAML::NodeType::Undefined:
      throw ConfigError(path, "undefined node");
  }
}

}  // namespace detail

/// Applies a YAML document on top of `cfg`. Every leaf must name a known
/// parameter; unknown keys are errors that carry the full dotted path.
inline void apply_yaml(sim::RunConfig& cfg, const std::string& text, const std::string& source = "<config>") {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ConfigError(source, std::string("parse error: ") + e.what());
  }
  if (!root.IsNull() && !root.IsMap()) throw ConfigError(source, "top level must be a mapping");
  detail::apply_node(cfg, root, "");
}

inline sim::RunConfig load_config_file(const std::string& file) {
  sim::RunConfig cfg = sim::default_config();
  YAML::Node root;
  try {
    root = YAML::LoadFile(file);
  } catch (const YAML::BadFile&) {
    throw ConfigError(file, "cannot read config file");
  } catch (const YAML::Exception& e) {
    throw ConfigError(file, std::string("parse error: ") + e.what());
  }
  if (!root.IsNull() && !root.IsMap()) throw ConfigError(file, "top level must be a mapping");
  detail::apply_node(cfg, root, "");
  return cfg;
}

}  // namespace flowran::cli
