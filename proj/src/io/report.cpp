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

#include "qrss/io/report.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace qrss::io {

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // drop negative zero
}

std::string format_real(double x) { return Json(round12(x)).dump(); }

Json complex_json(quantum::Amplitude z) {
  return Json::array({round12(z.real()), round12(z.imag())});
}

Json secret_json(const quantum::SecretQubit& s) {
  return Json{{"alpha", complex_json(s.alpha)}, {"beta", complex_json(s.beta)}};
}

Json positions_json(std::span<const css::Positions> sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(s);
  return out;
}

Json transcript_json(const protocol::Transcript& tx) {
  Json j;
  j["variant"] = protocol::to_string(tx.variant);
  j["t"] = tx.t;
  j["r"] = tx.r;
  j["w"] = tx.w;
  j["last_round"] = tx.last_round;
  j["end"] = protocol::to_string(tx.end);

  Json rounds = Json::array();
  for (const auto& d : tx.deliveries) {
    if (rounds.empty() || rounds.back()["round"] != d.round) {
      rounds.push_back(Json{{"round", d.round}, {"sub_rounds", Json::array()}});
    }
    Json& subs = rounds.back()["sub_rounds"];
    if (subs.empty() || subs.back()["receiver"] != d.to) {
      subs.push_back(Json{{"sub_round", d.sub_round},
                          {"receiver", d.to},
                          {"delivered_by", Json::array()},
                          {"withheld_by", Json::array()}});
    }
    subs.back()[d.delivered ? "delivered_by" : "withheld_by"].push_back(d.from);
  }
  j["rounds"] = std::move(rounds);

  Json recs = Json::array();
  for (const auto& r : tx.reconstructions) {
    recs.push_back(Json{{"player", r.player},
                        {"round", r.round},
                        {"copy", r.copy},
                        {"kind", r.kind == protocol::ShareKind::Secret ? "secret" : "indicator"},
                        {"outcome", r.outcome},
                        {"correction", r.correction},
                        {"probability", round12(r.probability)},
                        {"fidelity", round12(r.fidelity)},
                        {"recovered", secret_json(r.recovered)}});
  }
  j["reconstructions"] = std::move(recs);

  Json ind = Json::array();
  for (const auto& i : tx.indicators) {
    Json e{{"player", i.player}, {"round", i.round}, {"b", i.value}};
    if (!i.shares.empty()) {
      Json shares = Json::array();
      for (const auto& s : i.shares) shares.push_back(Json{{"holder", s.holder}, {"x", s.x}, {"y", s.y}});
      e["shares"] = std::move(shares);
    }
    ind.push_back(std::move(e));
  }
  j["indicators"] = std::move(ind);

  Json quits = Json::array();
  for (const auto& q : tx.quits) {
    quits.push_back(Json{{"player", q.player},
                         {"round", q.round},
                         {"sub_round", q.sub_round},
                         {"by_protocol", q.by_protocol}});
  }
  j["quits"] = std::move(quits);

  Json sig = Json::array();
  for (const auto& s : tx.signals) sig.push_back(s ? Json(*s) : Json(nullptr));
  j["signals"] = std::move(sig);
  switch (tx.announcement) {
    case protocol::Announcement::None: j["announcement"] = nullptr; break;
    case protocol::Announcement::RevealR: j["announcement"] = Json{{"r", *tx.announced_r}}; break;
    case protocol::Announcement::Abort: j["announcement"] = "abort"; break;
  }

  Json outs = Json::array();
  for (std::size_t i = 0; i < tx.outputs.size(); ++i) {
    const auto& o = tx.outputs[i];
    Json e{{"player", static_cast<int>(i) + 1}, {"kind", protocol::to_string(o.kind)}};
    if (o.kind != protocol::OutputKind::None) {
      e["round"] = o.round;
      e["state"] = secret_json(o.state);
    }
    outs.push_back(std::move(e));
  }
  j["outputs"] = std::move(outs);
  return j;
}

Json outcomes_json(std::span<const protocol::Outcome> outcomes) {
  Json out = Json::array();
  for (auto o : outcomes) out.push_back(protocol::to_string(o));
  return out;
}

Json fairness_json(const game::FairnessVerdict& v) {
  Json th = Json::array();
  for (double t : v.player_thresholds) th.push_back(round12(t));
  return Json{{"gamma", round12(v.gamma)},
              {"threshold", round12(v.threshold)},
              {"player_thresholds", std::move(th)},
              {"margin", round12(v.margin)},
              {"fair", v.fair}};
}

Json probability_rows_json(std::span<const game::ProbabilityRow> rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back(Json{{"player", r.player},
                       {"j", r.j},
                       {"p_deviator", round12(r.p_deviator)},
                       {"p_others", round12(r.p_others)},
                       {"holds", r.holds}});
  }
  return out;
}

Json nash_json(const game::NashVerdict& v) {
  Json rows = Json::array();
  for (const auto& r : v.rows) {
    Json e{{"player", r.player},
           {"j", r.j},
           {"closed_form", round12(r.closed_form)},
           {"exact", round12(r.exact)},
           {"honest", round12(r.honest)},
           {"below", r.below}};
    if (r.has_empirical) {
      e["empirical_mean"] = round12(r.empirical.mean);
      e["stderr"] = round12(r.empirical.std_error);
      e["tolerance"] = round12(r.tolerance);
      e["corroborated"] = r.corroborated;
    }
    rows.push_back(std::move(e));
  }
  return Json{{"variant", protocol::to_string(v.variant)},
              {"gamma", round12(v.gamma)},
              {"j_max", v.j_max},
              {"strict_nash", v.strict_nash},
              {"corroborated", v.corroborated},
              {"rows", std::move(rows)}};
}

Json sweep_json(const game::CorrectnessSweep& s) {
  return Json{{"games", s.games}, {"fakes", s.fakes}, {"violations", s.violations}};
}

Json argmax_json(const game::ArgmaxReport& r) {
  Json honest = Json::array();
  for (double u : r.honest) honest.push_back(round12(u));
  Json best = Json::array();
  for (const auto& b : r.best) {
    best.push_back(Json{{"player", b.player},
                        {"j", b.j},
                        {"sub_round", b.sub_round},
                        {"utility", round12(b.utility)}});
  }
  return Json{{"honest_strict_argmax", r.honest_strict_argmax},
              {"honest", std::move(honest)},
              {"best_deviation", std::move(best)},
              {"deviations_checked", r.rows.size()}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qrss::io
