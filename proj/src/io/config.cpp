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

#include "qrss/io/config.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "qrss/error.h"

namespace qrss::io {
namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::ConfigInvalid, what);
}

void check_keys(const json& obj, const std::set<std::string>& allowed,
                const std::string& where) {
  if (!obj.is_object()) invalid(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) invalid("unknown key \"" + key + "\" in " + where);
  }
}

double number(const json& v, const std::string& what) {
  if (!v.is_number()) invalid(what + " must be a number");
  return v.get<double>();
}

long integer(const json& v, const std::string& what) {
  if (!v.is_number_integer()) invalid(what + " must be an integer");
  return v.get<long>();
}

quantum::Amplitude complex_value(const json& v, const std::string& what) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  invalid(what + " must be a number or a [re, im] pair");
}

std::vector<std::string> string_rows(const json& v, const std::string& what) {
  if (!v.is_array() || v.empty()) invalid(what + " must be a non-empty array of bit strings");
  std::vector<std::string> rows;
  for (const auto& row : v) {
    if (!row.is_string()) invalid(what + " rows must be strings");
    rows.push_back(row.get<std::string>());
  }
  return rows;
}

css::Positions positions(const json& v, const std::string& what) {
  if (!v.is_array() || v.empty()) invalid(what + " must be a non-empty array");
  css::Positions out;
  for (const auto& p : v) out.push_back(static_cast<int>(integer(p, what)));
  return out;
}

game::Utilities utilities(const json& v) {
  check_keys(v, {"U_TN", "U_TT", "U_NN", "U_NT", "U_NF", "U_FN"}, "utilities");
  for (const char* key : {"U_TN", "U_TT", "U_NN", "U_NT"}) {
    if (!v.contains(key)) invalid(std::string("utilities need ") + key);
  }
  game::Utilities u;
  u.tn = number(v["U_TN"], "U_TN");
  u.tt = number(v["U_TT"], "U_TT");
  u.nn = number(v["U_NN"], "U_NN");
  u.nt = number(v["U_NT"], "U_NT");
  // Without explicit fake payoffs, believing a fake is worth the same as
  // learning nothing.
  u.nf = v.contains("U_NF") ? number(v["U_NF"], "U_NF") : u.nn;
  u.fn = v.contains("U_FN") ? number(v["U_FN"], "U_FN") : u.nt;
  return u;
}

protocol::Strategy strategy(const json& v, int player) {
  if (v.is_string()) {
    if (v.get<std::string>() == "honest") return protocol::Honest{};
    invalid("unknown strategy \"" + v.get<std::string>() + "\"");
  }
  if (!v.is_object() || v.size() != 1) invalid("strategy must be \"honest\" or a one-key object");
  const std::string key = v.begin().key();
  const json& arg = v.begin().value();
  if (key == "deviate_at") {
    return protocol::quit_after_own_subround(player, static_cast<int>(integer(arg, key)));
  }
  if (key == "quit_at") {
    if (arg.is_array() && arg.size() == 2) {
      return protocol::QuitAt{static_cast<int>(integer(arg[0], key)),
                              static_cast<int>(integer(arg[1], key))};
    }
    check_keys(arg, {"round", "sub_round"}, key);
    return protocol::QuitAt{static_cast<int>(integer(arg.at("round"), key)),
                            static_cast<int>(integer(arg.at("sub_round"), key))};
  }
  if (key == "guess_and_quit") return protocol::GuessAndQuit{number(arg, key)};
  invalid("unknown strategy \"" + key + "\"");
}

}  // namespace

std::vector<css::Positions> parse_position_sets(const json& j) {
  const json& list = j.is_object() && j.contains("authorized") ? j["authorized"] : j;
  if (!list.is_array()) invalid("expected a list of position tuples");
  std::vector<css::Positions> out;
  for (const auto& item : list) out.push_back(positions(item, "position tuple"));
  return out;
}

RunConfig parse_config(const json& j) {
  check_keys(j,
             {"code", "secret", "designated_positions", "variant", "gamma",
              "gamma_fraction", "utilities", "strategies", "trials", "seed",
              "field_prime", "fixed_r", "fixed_w", "expected_access_structure",
              "access_trials", "j_max", "corroborate_j_max", "correctness_rounds",
              "sweep", "comment"},
             "config");
  RunConfig c;
  if (!j.contains("code")) invalid("config needs a \"code\" section");
  const json& code = j["code"];
  check_keys(code, {"generator", "subcode_generator", "column_order", "ancilla_expansion"},
             "code");
  if (!code.contains("generator") || !code.contains("subcode_generator")) {
    invalid("code needs generator and subcode_generator");
  }
  c.code.generator = string_rows(code["generator"], "generator");
  c.code.subcode_generator = string_rows(code["subcode_generator"], "subcode_generator");
  if (code.contains("column_order")) c.code.column_order = positions(code["column_order"], "column_order");
  if (code.contains("ancilla_expansion")) {
    if (!code["ancilla_expansion"].is_boolean()) invalid("ancilla_expansion must be a boolean");
    c.code.ancilla_expansion = code["ancilla_expansion"].get<bool>();
  }

  if (j.contains("secret")) {
    const json& s = j["secret"];
    check_keys(s, {"alpha", "beta"}, "secret");
    if (!s.contains("alpha") || !s.contains("beta")) invalid("secret needs alpha and beta");
    const auto a = complex_value(s["alpha"], "alpha");
    const auto b = complex_value(s["beta"], "beta");
    const double norm = std::norm(a) + std::norm(b);
    if (std::abs(norm - 1.0) > 1e-9) {
      invalid("secret is not normalized: |alpha|^2 + |beta|^2 = " + std::to_string(norm));
    }
    c.secret = quantum::SecretQubit::normalized(a, b);
  }
  if (j.contains("designated_positions")) {
    c.designated_positions = positions(j["designated_positions"], "designated_positions");
  }
  if (j.contains("variant")) {
    if (!j["variant"].is_string()) invalid("variant must be a string");
    c.variant = protocol::parse_variant(j["variant"].get<std::string>());
  }
  if (j.contains("gamma")) c.gamma = number(j["gamma"], "gamma");
  if (j.contains("gamma_fraction")) c.gamma_fraction = number(j["gamma_fraction"], "gamma_fraction");
  if (j.contains("utilities")) {
    const json& u = j["utilities"];
    c.utilities.players.clear();
    if (u.is_array()) {
      for (const auto& entry : u) c.utilities.players.push_back(utilities(entry));
      if (c.utilities.players.empty()) invalid("utilities array is empty");
    } else {
      c.utilities.players.push_back(utilities(u));
    }
  }
  if (j.contains("strategies")) {
    const json& s = j["strategies"];
    if (!s.is_array()) invalid("strategies must be an array");
    for (std::size_t i = 0; i < s.size(); ++i) {
      c.strategies.push_back(strategy(s[i], static_cast<int>(i) + 1));
    }
  }
  if (j.contains("trials")) c.trials = integer(j["trials"], "trials");
  if (c.trials < 1) invalid("trials must be >= 1");
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) invalid("seed must be a non-negative integer");
    c.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("field_prime")) {
    const long p = integer(j["field_prime"], "field_prime");
    if (p < 2 || p > 0xffffffffL) invalid("field_prime out of range");
    c.field_prime = static_cast<shamir::FieldElement>(p);
  }
  if (j.contains("fixed_r")) c.fixed_r = static_cast<int>(integer(j["fixed_r"], "fixed_r"));
  if (j.contains("fixed_w")) c.fixed_w = static_cast<int>(integer(j["fixed_w"], "fixed_w"));
  if (j.contains("expected_access_structure")) {
    c.expected_access_structure = parse_position_sets(j["expected_access_structure"]);
  }
  if (j.contains("access_trials")) c.access_trials = static_cast<int>(integer(j["access_trials"], "access_trials"));
  if (j.contains("j_max")) c.j_max = static_cast<int>(integer(j["j_max"], "j_max"));
  if (j.contains("corroborate_j_max")) {
    c.corroborate_j_max = static_cast<int>(integer(j["corroborate_j_max"], "corroborate_j_max"));
  }
  if (j.contains("correctness_rounds")) {
    c.correctness_rounds = static_cast<int>(integer(j["correctness_rounds"], "correctness_rounds"));
  }
  if (j.contains("sweep")) {
    const json& s = j["sweep"];
    check_keys(s, {"gammas", "rounds", "player"}, "sweep");
    if (s.contains("gammas")) {
      c.sweep.gammas.clear();
      for (const auto& g : s["gammas"]) c.sweep.gammas.push_back(number(g, "sweep gamma"));
    }
    if (s.contains("rounds")) c.sweep.rounds = positions(s["rounds"], "sweep rounds");
    if (s.contains("player")) c.sweep.player = static_cast<int>(integer(s["player"], "sweep player"));
  }
  return c;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) invalid("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    invalid(path.string() + ": " + e.what());
  }
}

RunConfig load_config(const std::filesystem::path& path) {
  return parse_config(read_json_file(path));
}

std::shared_ptr<const css::CssCode> build_code(const CodeSpec& spec) {
  gf2::BinaryMatrix g = gf2::BinaryMatrix::from_strings(spec.generator);
  gf2::BinaryMatrix g1 = gf2::BinaryMatrix::from_strings(spec.subcode_generator);
  if (!spec.column_order.empty()) {
    g = g.permute_columns(spec.column_order);
    g1 = g1.permute_columns(spec.column_order);
  }
  return std::make_shared<const css::CssCode>(css::build_css(
      gf2::LinearCode(g), gf2::LinearCode(g1), {.ancilla_expansion = spec.ancilla_expansion}));
}

double resolve_gamma(const RunConfig& config) {
  if (config.gamma) return *config.gamma;
  return game::choose_gamma(config.utilities, config.gamma_fraction);
}

css::Positions resolve_positions(const RunConfig& config, const css::CssCode& code) {
  if (config.designated_positions) return *config.designated_positions;
  Rng rng = make_rng(config.seed, 0);
  const auto found = css::enumerate_access_structure(code, config.access_trials, rng);
  if (found.authorized_sets.empty()) {
    invalid("the code has no authorized subset of size d = " + std::to_string(code.d()));
  }
  return found.authorized_sets.front();
}

protocol::DealerConfig make_dealer_config(const RunConfig& config,
                                          std::shared_ptr<const css::CssCode> code) {
  protocol::DealerConfig d;
  d.gamma = resolve_gamma(config);
  d.secret = config.secret;
  d.designated_positions = resolve_positions(config, *code);
  d.css = std::move(code);
  d.variant = config.variant;
  d.field_prime = config.field_prime;
  d.fixed_r = config.fixed_r;
  d.fixed_w = config.fixed_w;
  return d;
}

std::vector<protocol::Strategy> resolve_strategies(const RunConfig& config, int t) {
  if (config.strategies.empty()) return std::vector<protocol::Strategy>(t, protocol::Honest{});
  if (static_cast<int>(config.strategies.size()) != t) {
    invalid("expected " + std::to_string(t) + " strategies, got " +
            std::to_string(config.strategies.size()));
  }
  return config.strategies;
}

}  // namespace qrss::io
