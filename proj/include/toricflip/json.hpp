// SPDX-License-Identifier: Apache-2.0
#pragma once

// JSON renderings of the domain types. Key order is fixed; integers that
// fit in int64 are numbers, larger ones are decimal strings.

#include "toricflip/fiber.hpp"

#include <json.hpp>

#include <string>

namespace toricflip {

using Json = nlohmann::ordered_json;

inline constexpr const char *kSchemaVersion = "1";

inline Json json_int(const BigInt &v) {
  if (fits_int64(v)) return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

inline Json json_rational(const Rational &v) { return Json(to_string(v)); }

inline Json json_entries(const ChainEntries &e) {
  Json out = Json::array();
  for (const auto &b : e) out.push_back(json_int(b));
  return out;
}

inline Json json_of(const SurfaceCQS &s) {
  return {{"m", json_int(s.m)}, {"q1", json_int(s.q1)}, {"q2", json_int(s.q2)},
          {"display", s.str()}};
}

inline Json json_of(const ThreefoldCQS &t) {
  return {{"r", json_int(t.r)},
          {"weights", Json::array({json_int(t.w[0]), json_int(t.w[1]), json_int(t.w[2])})},
          {"display", t.str()}};
}

inline Json json_of(const ReidTaiResult &r) {
  return {{"kind", std::string(to_string(r.kind))},
          {"non_isolated", r.non_isolated},
          {"min_age", json_rational(r.min_age)}};
}

inline Json json_of(const MarkedChain &c) {
  return {{"left", json_entries(c.left)},
          {"mark", json_int(c.mark)},
          {"right", json_entries(c.right)},
          {"display", format_marked(c)}};
}

inline Json json_of(const ExtremalPRes &p) {
  return {{"m1p", json_int(p.m1())}, {"a1p", json_int(p.a1())},
          {"m2p", json_int(p.m2())}, {"a2p", json_int(p.a2())},
          {"c", json_int(p.c)},      {"display", p.str()}};
}

inline Json json_of(const FPPair &fp) {
  return {{"f", json_int(fp.f)}, {"p", json_int(fp.p)}};
}

inline Json json_of(const MoriData &m) {
  Json d = Json::array(), c = Json::array();
  for (int i = 1; i <= m.k; ++i) {
    d.push_back(json_int(m.d(i)));
    c.push_back(json_int(m.c(i)));
  }
  return {{"initial", {{"m1", json_int(m.init.m1)}, {"a1", json_int(m.init.a1)},
                       {"m2", json_int(m.init.m2)}, {"a2", json_int(m.init.a2)}}},
          {"k", m.k},
          {"d", d},
          {"c", c}};
}

inline Json json_of(const FanData &f) {
  Json rays = Json::array();
  for (const auto &w : f.w)
    rays.push_back(Json::array({json_int(w[0]), json_int(w[1]), json_int(w[2])}));
  auto cone = [](const FanData::Cone &c) {
    return Json::array({c[0] + 1, c[1] + 1, c[2] + 1});
  };
  return {{"rays", rays},
          {"x_plus", Json::array({cone(FanData::sigma1), cone(FanData::sigma2)})},
          {"x_minus", Json::array({cone(FanData::sigma3), cone(FanData::sigma4)})}};
}

inline Json json_of(const AntiflipCharts &a) {
  Json out = {{"delta", json_int(a.delta)},
              {"rho", json_int(a.rho)},
              {"lambda", json_int(a.lambda)},
              {"F", json_int(a.f)},
              {"W1", json_of(a.w1)},
              {"W2", json_of(a.w2)},
              {"W1_reid_tai", json_of(reid_tai_classify(a.w1))},
              {"W2_reid_tai", json_of(reid_tai_classify(a.w2))}};
  if (a.bezout)
    out["bezout"] = {{"r", json_int((*a.bezout)[0])}, {"s", json_int((*a.bezout)[1])}};
  out["mori"] = json_of(a.mori);
  out["fan"] = json_of(a.fan);
  return out;
}

inline Json json_of(const ONCData &o) {
  return {{"ambient", json_of(o.ambient)},
          {"m", json_int(o.m)},
          {"a", json_int(o.a)},
          {"first", json_of(o.first)},
          {"second", json_of(o.second)}};
}

inline Json json_of(const FiberDescription &f) {
  Json out = {{"delta", json_int(f.delta)},
              {"transversal_slice", f.transversal_slice},
              {"local_eq_W1", f.local_eq_w1},
              {"onc", json_of(f.onc)},
              {"t1nu", f.t1nu ? json_of(*f.t1nu) : Json()},
              {"s1nu", f.s1nu ? json_of(*f.s1nu) : Json()},
              {"chain", f.chain_str()},
              {"xnu", f.xnu ? json_of(*f.xnu) : Json()},
              {"fp", f.fp ? json_of(*f.fp) : Json()},
              {"normalization_smooth", f.normalization_smooth},
              {"pinch_points", f.pinch_points},
              {"notes", f.notes}};
  return out;
}

inline Json json_of(const TableRow &r) {
  return {{"f", json_int(r.fp.f)},
          {"p", json_int(r.fp.p)},
          {"xplus_1", json_of(r.xplus_1)},
          {"xplus_2", json_of(r.xplus_2)},
          {"xnu", json_of(r.xnu)}};
}

inline Json envelope(const std::string &command, Json inputs, Json result,
                     Json diagnostics = Json::array()) {
  return {{"schema_version", kSchemaVersion},
          {"command", command},
          {"inputs", std::move(inputs)},
          {"result", std::move(result)},
          {"diagnostics", std::move(diagnostics)}};
}

} // namespace toricflip
