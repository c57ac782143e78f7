// Copyright 2026 The QRSS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON run configuration. See README.md for the schema.

#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qrss/css/css_code.h"
#include "qrss/game/utility.h"
#include "qrss/protocol/dealer.h"
#include "qrss/protocol/engine.h"

namespace qrss::io {

struct CodeSpec {
  std::vector<std::string> generator;
  std::vector<std::string> subcode_generator;
  std::vector<int> column_order;  // qubit q carries generator column order[q - 1]
  bool ancilla_expansion = true;
};

struct SweepSpec {
  std::vector<double> gammas{0.1, 0.25, 0.4};
  std::vector<int> rounds{1, 2, 3};
  int player = 1;
};

struct RunConfig {
  CodeSpec code;
  quantum::SecretQubit secret;
  std::optional<css::Positions> designated_positions;
  protocol::Variant variant = protocol::Variant::SemiOffline;
  std::optional<double> gamma;
  double gamma_fraction = 0.5;
  game::UtilityProfile utilities;
  std::vector<protocol::Strategy> strategies;  // empty: everyone honest
  long trials = 10000;
  std::uint64_t seed = 0;
  shamir::FieldElement field_prime = shamir::kDefaultPrime;
  std::optional<int> fixed_r;
  std::optional<int> fixed_w;
  std::optional<std::vector<css::Positions>> expected_access_structure;
  int access_trials = 20;
  int j_max = 0;  // 0: default_j_max(gamma)
  int corroborate_j_max = 3;
  int correctness_rounds = 6;
  SweepSpec sweep;
};

/// Throws Error(ConfigInvalid) on any schema violation.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::filesystem::path& path);
nlohmann::json read_json_file(const std::filesystem::path& path);

/// Applies column_order, then builds the CSS code.
std::shared_ptr<const css::CssCode> build_code(const CodeSpec& spec);

/// Explicit gamma, else gamma_fraction * gamma_threshold(utilities).
double resolve_gamma(const RunConfig& config);

/// Designated positions from the config, else the first authorized d-subset.
css::Positions resolve_positions(const RunConfig& config, const css::CssCode& code);

protocol::DealerConfig make_dealer_config(const RunConfig& config,
                                          std::shared_ptr<const css::CssCode> code);

/// Configured strategies, or all honest when none were given.
std::vector<protocol::Strategy> resolve_strategies(const RunConfig& config, int t);

/// Parses [[1,2,5], ...] or {"authorized": [[...]]}.
std::vector<css::Positions> parse_position_sets(const nlohmann::json& j);

}  // namespace qrss::io
