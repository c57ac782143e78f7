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

// JSON and CSV writers. Reals are rounded to 12 significant digits and keys
// keep insertion order, so equal inputs give byte-identical output.

#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "qrss/css/css_code.h"
#include "qrss/game/checks.h"
#include "qrss/protocol/engine.h"

namespace qrss::io {

using Json = nlohmann::ordered_json;

double round12(double x);
Json complex_json(quantum::Amplitude z);
Json secret_json(const quantum::SecretQubit& s);
Json positions_json(std::span<const css::Positions> sets);

Json transcript_json(const protocol::Transcript& tx);
Json outcomes_json(std::span<const protocol::Outcome> outcomes);
Json fairness_json(const game::FairnessVerdict& v);
Json probability_rows_json(std::span<const game::ProbabilityRow> rows);
Json nash_json(const game::NashVerdict& v);
Json sweep_json(const game::CorrectnessSweep& s);
Json argmax_json(const game::ArgmaxReport& r);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

/// Shortest decimal that round-trips the 12-digit rounding of x.
std::string format_real(double x);

}  // namespace qrss::io
