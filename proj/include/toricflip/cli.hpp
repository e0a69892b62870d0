// SPDX-License-Identifier: Apache-2.0
#pragma once

// Command-line front end. `run_cli` takes the arguments after the program
// name and returns the exit code: 0 success, 2 bad input, 1 internal error.

#include "toricflip/json.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

namespace toricflip {

namespace cli_detail {

inline BigInt parse_arg(const std::string &name, const std::string &text) {
  const auto v = parse_bigint(text);
  if (!v) throw Error(ErrorCode::InvalidInput, name + " is not an integer: '" + text + "'");
  return *v;
}

inline ExtremalPRes parse_presolution(const std::vector<std::string> &a) {
  return make_presolution(parse_arg("m1p", a[0]), parse_arg("a1p", a[1]),
                          parse_arg("m2p", a[2]), parse_arg("a2p", a[3]),
                          parse_arg("c", a[4]));
}

inline Json presolution_inputs(const ExtremalPRes &p) {
  return {{"m1p", json_int(p.m1())}, {"a1p", json_int(p.a1())}, {"m2p", json_int(p.m2())},
          {"a2p", json_int(p.a2())}, {"c", json_int(p.c)}};
}

inline std::string vec_str(const LatticeVector &v) {
  return "(" + v[0].str() + "," + v[1].str() + "," + v[2].str() + ")";
}

inline std::string csv_quote(const std::string &s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline void print_json(std::ostream &out, const Json &j) { out << j.dump(2) << "\n"; }

struct Options {
  std::vector<std::string> pair;
  std::vector<std::string> five;
  bool conjugate = false;
  bool reverse = false;
  bool json = false;
  std::string fmax = "7";
  std::string format = "text";
};

inline int cmd_hj(const Options &o, std::ostream &out) {
  const BigInt m = parse_arg("m", o.pair[0]), q = parse_arg("q", o.pair[1]);
  require_cqs_pair(m, q);
  const BigInt qq = o.conjugate ? conjugate(m, q).den : q;
  HJChain chain = hj_expand(m, qq);
  if (o.reverse) chain = reverse(chain);
  if (o.json) {
    print_json(out, envelope("hj",
                             {{"m", json_int(m)}, {"q", json_int(q)},
                              {"conjugate", o.conjugate}, {"reverse", o.reverse}},
                             {{"chain", json_entries(chain.entries())},
                              {"display", format_chain(chain)}}));
  } else {
    out << format_chain(chain) << "\n";
  }
  return 0;
}

inline int cmd_wahl(const Options &o, std::ostream &out) {
  const WahlData w = make_wahl(parse_arg("m", o.pair[0]), parse_arg("a", o.pair[1]));
  if (w.is_smooth()) throw Error(ErrorCode::SmoothPoint, "(1,1) marks a smooth point");
  const SurfaceCQS s = wahl_surface(w);
  const HJChain chain = wahl_chain(w);
  if (o.json) {
    print_json(out, envelope("wahl", {{"m", json_int(w.m)}, {"a", json_int(w.a)}},
                             {{"singularity", json_of(s)},
                              {"chain", json_entries(chain.entries())},
                              {"display", format_chain(chain)}}));
  } else {
    out << s.str() << " " << format_chain(chain) << "\n";
  }
  return 0;
}

inline int cmd_antiflip(const Options &o, std::ostream &out) {
  const ExtremalPRes p = parse_presolution(o.five);
  const AntiflipCharts a = antiflip_charts(p);
  const ReidTaiResult rt1 = reid_tai_classify(a.w1), rt2 = reid_tai_classify(a.w2);
  Json diag = Json::array();
  if (rt1.non_isolated) diag.push_back("W1 NonIsolated");
  if (rt2.non_isolated) diag.push_back("W2 NonIsolated");
  if (o.json) {
    print_json(out, envelope("antiflip", presolution_inputs(p), json_of(a), diag));
    return 0;
  }
  out << "presolution: " << p.str() << "\n";
  out << "delta: " << a.delta << "\n";
  out << "rho: " << a.rho << "\n";
  out << "lambda: " << a.lambda << "\n";
  out << "F: " << a.f << "\n";
  out << "W1: " << a.w1.str() << " " << to_string(rt1.kind) << "\n";
  out << "W2: " << a.w2.str() << " " << to_string(rt2.kind) << "\n";
  out << "mori: k=" << a.mori.k << " (m1,a1,m2,a2)=(" << a.mori.init.m1 << ","
      << a.mori.init.a1 << "," << a.mori.init.m2 << "," << a.mori.init.a2 << ")\n";
  for (std::size_t i = 0; i < 5; ++i)
    out << "w" << i + 1 << ": " << vec_str(a.fan.w[i]) << "\n";
  for (const auto &d : diag) out << "diagnostic: " << d.get<std::string>() << "\n";
  return 0;
}

inline int cmd_fiber(const Options &o, std::ostream &out) {
  const ExtremalPRes p = parse_presolution(o.five);
  const AntiflipCharts a = antiflip_charts(p);
  const FiberDescription f = fiber_description(p, a);
  const ChartEquations eq = chart_equations(a);
  if (o.json) {
    Json result = json_of(f);
    result["chart_equations"] = {{"S1", eq.s1}, {"S2", eq.s2}, {"gluing", eq.gluing}};
    print_json(out, envelope("fiber", presolution_inputs(p), result));
    return 0;
  }
  out << "presolution: " << p.str() << "\n";
  out << "delta: " << f.delta << "\n";
  out << "transversal slice: " << f.transversal_slice << "\n";
  out << "local equation at W1: " << f.local_eq_w1 << "\n";
  out << "ONC at W2: " << f.onc.ambient.str() << " branches " << f.onc.first.str()
      << " and " << f.onc.second.str() << "\n";
  if (f.t1nu) out << "T1 normalization: " << f.t1nu->str() << "\n";
  if (f.s1nu) out << "S1 normalization: " << f.s1nu->str() << "\n";
  if (f.fp) out << "(f,p): " << f.fp->str() << "\n";
  if (f.normalization_smooth) out << "normalization: smooth\n";
  out << "chain: " << f.chain_str() << "\n";
  out << "pinch points: " << f.pinch_points << "\n";
  out << "S1: " << eq.s1 << "\n";
  out << "S2: " << eq.s2 << "\n";
  out << "gluing: " << eq.gluing << "\n";
  for (const auto &n : f.notes) out << "note: " << n << "\n";
  return 0;
}

inline int cmd_fp(const Options &o, std::ostream &out) {
  const FPPair fp{parse_arg("f", o.pair[0]), parse_arg("p", o.pair[1])};
  auto [a, b] = presolutions_of(fp);
  if (format_marked(xplus_chain(b)) < format_marked(xplus_chain(a))) std::swap(a, b);
  const MarkedChain xnu = xnu_chain(fp);
  if (o.json) {
    Json res = Json::array();
    for (const ExtremalPRes *p : {&a, &b}) {
      Json j = json_of(*p);
      j["xplus"] = json_of(xplus_chain(*p));
      res.push_back(j);
    }
    print_json(out, envelope("fp", json_of(fp),
                             {{"presolutions", res}, {"xnu", json_of(xnu)}}));
    return 0;
  }
  out << "xplus_1: " << format_marked(xplus_chain(a)) << " " << a.str() << "\n";
  out << "xplus_2: " << format_marked(xplus_chain(b)) << " " << b.str() << "\n";
  out << "xnu: " << format_marked(xnu) << "\n";
  return 0;
}

inline int cmd_table(const Options &o, std::ostream &out) {
  const BigInt fmax = parse_arg("fmax", o.fmax);
  const std::vector<TableRow> rows = table_rows(fmax);
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto &r : rows) arr.push_back(json_of(r));
    print_json(out, envelope("table", {{"fmax", json_int(fmax)}}, {{"rows", arr}}));
  } else if (o.format == "csv") {
    out << "f,p,xplus_1,xplus_2,xnu\n";
    for (const auto &r : rows)
      out << r.fp.f << "," << r.fp.p << "," << csv_quote(format_marked(r.xplus_1)) << ","
          << csv_quote(format_marked(r.xplus_2)) << "," << csv_quote(format_marked(r.xnu))
          << "\n";
  } else {
    for (const auto &r : rows) out << format_row(r) << "\n";
  }
  return 0;
}

} // namespace cli_detail

inline int run_cli(const std::vector<std::string> &args, std::ostream &out,
                   std::ostream &err) {
  using namespace cli_detail;
  CLI::App app{"Toric antiflips of extremal P-resolutions", "toricflip"};
  app.require_subcommand(1);
  Options o;

  auto *hj = app.add_subcommand("hj", "Hirzebruch-Jung continued fraction of m/q");
  hj->add_option("m_q", o.pair, "m q")->expected(2)->required();
  hj->add_flag("--conjugate", o.conjugate, "expand m/(m-q) instead");
  hj->add_flag("--reverse", o.reverse, "reverse the chain");
  hj->add_flag("--json", o.json);

  auto *wahl = app.add_subcommand("wahl", "Wahl singularity 1/m^2(1,ma-1) and its chain");
  wahl->add_option("m_a", o.pair, "m a")->expected(2)->required();
  wahl->add_flag("--json", o.json);

  auto *anti = app.add_subcommand("antiflip", "antiflip charts of (m1',a1',m2',a2',c)");
  anti->add_option("params", o.five, "m1p a1p m2p a2p c")->expected(5)->required();
  anti->add_flag("--json", o.json);

  auto *fib = app.add_subcommand("fiber", "special fiber of the antiflip");
  fib->add_option("params", o.five, "m1p a1p m2p a2p c")->expected(5)->required();
  fib->add_flag("--json", o.json);

  auto *fp = app.add_subcommand("fp", "both extremal P-resolutions for a pair (f,p)");
  fp->add_option("f_p", o.pair, "f p")->expected(2)->required();
  fp->add_flag("--json", o.json);

  auto *table = app.add_subcommand("table", "the (f,p) table for 2 <= f <= fmax");
  table->add_option("--fmax", o.fmax, "largest f")->capture_default_str();
  table->add_option("--format", o.format)
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "error: Usage: " << e.what() << "\n";
    return 2;
  }

  try {
    if (hj->parsed()) return cmd_hj(o, out);
    if (wahl->parsed()) return cmd_wahl(o, out);
    if (anti->parsed()) return cmd_antiflip(o, out);
    if (fib->parsed()) return cmd_fiber(o, out);
    if (fp->parsed()) return cmd_fp(o, out);
    return cmd_table(o, out);
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return is_usage_error(e.code()) ? 2 : 1;
  } catch (const std::exception &e) {
    err << "error: InternalInvariant: " << e.what() << "\n";
    return 1;
  }
}

} // namespace toricflip
