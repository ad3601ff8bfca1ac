#include "k3bn/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ostream>
#include <sstream>

namespace k3bn {

namespace {

using nlohmann::json;

json vector_json(const MukaiVector& v) { return json::array({v.r, v.c, v.s}); }

json radical_json(const RadicalExpr& e) {
  json terms = json::array();
  for (const auto& t : e.terms())
    terms.push_back(json::array({t.coeff.get_str(), t.radicand.get_str()}));
  return json{{"terms", terms}, {"approx", e.decimal(30)}, {"approx_flag", "approx"}};
}

json report_json(const CriterionReport& rep) {
  json conds = json::array();
  for (const auto& c : rep.conditions) {
    conds.push_back(json{{"name", c.name},
                         {"anchor", c.anchor},
                         {"status", to_string(c.status)},
                         {"witness", c.witness}});
  }
  return json{{"input", json{{"g", rep.g}, {"m", rep.m}, {"v", vector_json(rep.v)}}},
              {"verdict", to_string(rep.verdict)},
              {"route", rep.route},
              {"conditions", conds}};
}

Verdict combine(std::initializer_list<Verdict> verdicts) {
  bool any_fail = false, any_inconclusive = false;
  for (Verdict v : verdicts) {
    if (v == Verdict::Fail) any_fail = true;
    if (v == Verdict::Inconclusive) any_inconclusive = true;
  }
  return any_fail ? Verdict::Fail : (any_inconclusive ? Verdict::Inconclusive : Verdict::Pass);
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return 0;
    case Verdict::Fail:
      return 1;
    case Verdict::Inconclusive:
      return 2;
  }
  return 3;
}

std::string verdict_cell(const ScanRow& row, Verdict v) {
  return row.has_candidate ? to_string(v) : "-";
}

int run_check(const Invocation& inv, std::ostream& out) {
  SurfaceContext ctx(inv.g);
  RadicalOptions opt{64, inv.precision_cap_bits};
  CriterionReport inj = check_injectivity(ctx, inv.m, inv.v);
  CriterionReport surj = check_surjectivity(ctx, inv.m, inv.v, opt);
  CriterionReport iso = check_isomorphism(ctx, inv.m, inv.v, opt);
  Verdict overall = combine({inj.verdict, surj.verdict, iso.verdict});
  if (inv.format == "text") {
    out << "check g=" << inv.g << " m=" << inv.m << " v=" << inv.v.to_string() << "\n";
    for (const auto* rep : {&inj, &surj, &iso}) {
      out << "  " << rep->route << ": " << to_string(rep->verdict) << "\n";
      for (const auto& c : rep->conditions)
        out << "    [" << to_string(c.status) << "] " << c.name << " (" << c.witness << ")\n";
    }
    out << "overall: " << to_string(overall) << "\n";
    return exit_code(overall);
  }
  json doc{{"input", json{{"g", inv.g}, {"m", inv.m}, {"v", vector_json(inv.v)}}},
           {"verdict", to_string(overall)},
           {"route", surj.route},
           {"reports", json{{"injectivity", report_json(inj)},
                            {"surjectivity", report_json(surj)},
                            {"isomorphism", report_json(iso)}}}};
  try {
    DerivedVectors der = derived_vectors(ctx, inv.m, inv.v);
    json derived{{"vm", vector_json(der.vm)},
                 {"vc", vector_json(der.vc)},
                 {"vk", vector_json(der.vk)},
                 {"chi", der.chi}};
    if (der.gamma) derived["gamma"] = der.gamma->get_str();
    if (der.sigma_v)
      derived["sigma_v"] = json::array({der.sigma_v->x.get_str(), der.sigma_v->y.get_str()});
    if (inv.v.c > 0 && inv.m * inv.v.r != inv.v.c) {
      PolygonData pd = polygon_data(ctx, inv.m, inv.v, 1);
      derived["hbar"] = radical_json(pd.hbar);
      derived["sharpness"] = sharpness(ctx, inv.m, inv.v);
    }
    doc["derived"] = derived;
  } catch (const std::exception&) {
    // degenerate inputs simply omit the derived block
  }
  out << doc.dump(2) << "\n";
  return exit_code(overall);
}

int run_suggest(const Invocation& inv, std::ostream& out) {
  RadicalOptions opt{64, inv.precision_cap_bits};
  auto suggestion = suggest_vector(inv.g, inv.m, opt);
  if (inv.format == "text") {
    if (!suggestion) {
      out << "suggest g=" << inv.g << " m=" << inv.m << ": none\n";
      return 1;
    }
    out << "suggest g=" << inv.g << " m=" << inv.m << ": v=" << suggestion->v.to_string()
        << " route=" << suggestion->route << "\n";
    return 0;
  }
  json doc{{"input", json{{"g", inv.g}, {"m", inv.m}}}};
  if (suggestion) {
    doc["result"] = json{{"v", vector_json(suggestion->v)},
                         {"route", suggestion->route},
                         {"reports", json{{"injectivity", report_json(suggestion->injectivity)},
                                          {"surjectivity", report_json(suggestion->surjectivity)},
                                          {"isomorphism", report_json(suggestion->isomorphism)}}}};
  } else {
    doc["result"] = nullptr;
  }
  out << doc.dump(2) << "\n";
  return suggestion ? 0 : 1;
}

int run_scan(const Invocation& inv, std::ostream& out) {
  RadicalOptions opt{64, inv.precision_cap_bits};
  auto rows = scan(inv.g0, inv.g1, inv.m0, inv.m1, opt);
  if (inv.format == "csv" || inv.format == "text") {
    out << "g,m,r,c,s,inj,surj,iso,route\n";
    for (const auto& row : rows) {
      out << row.g << "," << row.m << ",";
      if (row.has_candidate)
        out << row.v.r << "," << row.v.c << "," << row.v.s;
      else
        out << ",,";
      out << "," << verdict_cell(row, row.injectivity) << ","
          << verdict_cell(row, row.surjectivity) << "," << verdict_cell(row, row.isomorphism)
          << "," << (row.has_candidate ? row.route : "none") << "\n";
    }
  } else {
    json arr = json::array();
    for (const auto& row : rows) {
      json r{{"g", row.g}, {"m", row.m}, {"suggested", row.suggested}};
      if (row.has_candidate) {
        r["v"] = vector_json(row.v);
        r["route"] = row.route;
        r["inj"] = to_string(row.injectivity);
        r["surj"] = to_string(row.surjectivity);
        r["iso"] = to_string(row.isomorphism);
      }
      arr.push_back(r);
    }
    out << arr.dump(2) << "\n";
  }
  bool any = false;
  for (const auto& row : rows) any = any || row.suggested;
  return any ? 0 : 1;
}

int run_hk(const Invocation& inv, std::ostream& out) {
  auto hk = find_hk_vector(inv.n, inv.g);
  if (inv.format == "text") {
    if (!hk) {
      out << "hk n=" << inv.n << " g=" << inv.g << ": none\n";
      return 1;
    }
    out << "hk n=" << inv.n << " g=" << inv.g << ": p=" << hk->p << " c=" << hk->c
        << " v=" << hk->v.to_string() << "\n";
    return 0;
  }
  json doc{{"input", json{{"n", inv.n}, {"g", inv.g}}}};
  if (hk) {
    doc["result"] = json{{"p", hk->p}, {"c", hk->c}, {"v", vector_json(hk->v)}};
  } else {
    doc["result"] = nullptr;
  }
  out << doc.dump(2) << "\n";
  return hk ? 0 : 1;
}

int run_oracle(const Invocation& inv, std::ostream& out, std::ostream& err) {
  SurfaceContext ctx(inv.g);
  DerivedVectors der = derived_vectors(ctx, inv.m, inv.v);
  if (!der.sigma_v) {
    err << "oracle: sigma_v undefined (" << der.degenerate.front() << ")\n";
    return 3;
  }
  if (!(der.sigma_v->x > 0 && der.sigma_v->x < 1)) {
    err << "oracle: sigma_v = (" << der.sigma_v->x.get_str() << ", 0) outside V\n";
    return 3;
  }
  Segment seg({Rational(0), Rational(0)}, *der.sigma_v, false, true);
  OmegaQuery query{inv.v, seg, OmegaBounds{inv.y_max, 0, 0, inv.root_bound}};
  WallVerdict verdict = admits_no_wall(ctx, query, !inv.non_strict);
  const char* status = verdict.status == WallStatus::NoWall          ? "no-wall"
                       : verdict.status == WallStatus::WallCandidates ? "wall-candidates"
                                                                      : "inconclusive";
  if (inv.format == "text") {
    out << "oracle no-wall g=" << inv.g << " v=" << inv.v.to_string() << " m=" << inv.m << ": "
        << status << " (" << verdict.note << ")\n";
    for (const auto& w : verdict.witnesses) out << "  witness " << w.to_string() << "\n";
  } else {
    json wit = json::array();
    for (const auto& w : verdict.witnesses) wit.push_back(vector_json(w));
    json doc{{"input", json{{"g", inv.g}, {"m", inv.m}, {"v", vector_json(inv.v)}}},
             {"status", status},
             {"note", verdict.note},
             {"witnesses", wit}};
    out << doc.dump(2) << "\n";
  }
  switch (verdict.status) {
    case WallStatus::NoWall:
      return 0;
    case WallStatus::WallCandidates:
      return 1;
    case WallStatus::Inconclusive:
      return 2;
  }
  return 2;
}

}  // namespace

int run(const Invocation& inv, std::ostream& out, std::ostream& err) {
  auto started = std::chrono::steady_clock::now();
  int code = 3;
  try {
    switch (inv.command) {
      case Invocation::Command::Check:
        code = run_check(inv, out);
        break;
      case Invocation::Command::Suggest:
        code = run_suggest(inv, out);
        break;
      case Invocation::Command::Scan:
        code = run_scan(inv, out);
        break;
      case Invocation::Command::Hk:
        code = run_hk(inv, out);
        break;
      case Invocation::Command::OracleNoWall:
        code = run_oracle(inv, out, err);
        break;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 3;
  } catch (const PrecisionExhausted& e) {
    err << "inconclusive: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  if (inv.timings) {
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    err << "timings_ms: " << elapsed << "\n";
  }
  return code;
}

namespace {

bool parse_range(const std::string& text, std::int64_t& lo, std::int64_t& hi) {
  auto pos = text.find("..");
  try {
    if (pos == std::string::npos) {
      lo = hi = std::stoll(text);
    } else {
      lo = std::stoll(text.substr(0, pos));
      hi = std::stoll(text.substr(pos + 2));
    }
  } catch (const std::exception&) {
    return false;
  }
  return lo <= hi;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact verification of restriction-map criteria on polarised K3 surfaces"};
  app.require_subcommand(1);
  Invocation inv;
  std::string g_range, m_range;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", inv.format, "output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--precision-cap-bits", inv.precision_cap_bits,
                    "interval refinement cap in fractional bits");
    cmd->add_flag("--timings", inv.timings, "report wall time on the diagnostic stream");
  };

  auto* check = app.add_subcommand("check", "full criterion report for (g, m, r, c, s)");
  check->add_option("g", inv.g)->required();
  check->add_option("m", inv.m)->required();
  check->add_option("r", inv.v.r)->required();
  check->add_option("c", inv.v.c)->required();
  check->add_option("s", inv.v.s)->required();
  add_common(check);

  auto* suggest = app.add_subcommand("suggest", "table-based vector suggestion for (g, m)");
  suggest->add_option("g", inv.g)->required();
  suggest->add_option("m", inv.m)->required();
  add_common(suggest);

  auto* scan_cmd = app.add_subcommand("scan", "grid of suggestions over g and m ranges");
  scan_cmd->add_option("g-range", g_range, "e.g. 3..7")->required();
  scan_cmd->add_option("m-range", m_range, "e.g. 2..6")->required();
  add_common(scan_cmd);

  auto* hk = app.add_subcommand("hk", "prime-window search for v with v^2 = 2n at genus g");
  hk->add_option("n", inv.n)->required();
  hk->add_option("g", inv.g)->required();
  add_common(hk);

  auto* oracle = app.add_subcommand("oracle", "destabilising-region oracles");
  auto* nowall = oracle->add_subcommand("no-wall", "no-wall certificate over L_(o, sigma_v]");
  nowall->add_option("g", inv.g)->required();
  nowall->add_option("r", inv.v.r)->required();
  nowall->add_option("c", inv.v.c)->required();
  nowall->add_option("s", inv.v.s)->required();
  nowall->add_option("--m", inv.m, "curve multiplicity used for sigma_v (default 1)");
  nowall->add_option("--y-max", inv.y_max, "slice bound for the integer enumeration");
  nowall->add_option("--root-bound", inv.root_bound, "bound on |c'| for the root search");
  nowall->add_flag("--non-strict", inv.non_strict, "also report semistable-locus points");
  add_common(nowall);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 3;
  }

  if (check->parsed()) inv.command = Invocation::Command::Check;
  if (suggest->parsed()) inv.command = Invocation::Command::Suggest;
  if (scan_cmd->parsed()) {
    inv.command = Invocation::Command::Scan;
    if (!parse_range(g_range, inv.g0, inv.g1) || !parse_range(m_range, inv.m0, inv.m1)) {
      err << "usage error: ranges must be N or N..M with N <= M\n";
      return 3;
    }
  }
  if (hk->parsed()) inv.command = Invocation::Command::Hk;
  if (oracle->parsed()) {
    if (!nowall->parsed()) {
      err << "usage error: oracle requires the no-wall subcommand\n";
      return 3;
    }
    inv.command = Invocation::Command::OracleNoWall;
  }
  return run(inv, out, err);
}

}  // namespace k3bn
