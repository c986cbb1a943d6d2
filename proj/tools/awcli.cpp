#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aw/json_io.hpp"
#include "aw/verify.hpp"

namespace {

using namespace aw;

struct RunConfig {
  std::string params = "1/2,3/5,2/3,5/7,3/4";
  std::string backend = "exact";
  unsigned precision = 256;
  std::string tol;
  long max_degree = 6;
  bool json = false;
};

Params<Rat> parse_params(const std::string& csv) {
  std::vector<Rat> vals;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) vals.push_back(rat_from_string(item));
  if (vals.size() != 5)
    throw Error(Err::ParseError, "--params expects five rationals p,k0,k1,u0,u1");
  return Params<Rat>::make(vals[0], vals[1], vals[2], vals[3], vals[4]);
}

QuadSettings quad_settings(const RunConfig& cfg) {
  QuadSettings qs = QuadSettings::defaults();
  if (!cfg.tol.empty()) qs.tol = Real(cfg.tol);
  if (!(qs.tol > 0)) throw Error(Err::InvalidParameter, "--tol must be positive");
  return qs;
}

int emit_report(const Report& rep, const RunConfig& cfg, const Json& config_echo) {
  if (cfg.json) {
    Json j = report_json(rep);
    j["schema"] = 1;
    j["config"] = config_echo;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << report_text(rep);
  }
  return rep.passed() ? 0 : 1;
}

Json config_json(const RunConfig& cfg, const std::string& command) {
  return Json{{"command", command},       {"params", cfg.params},   {"backend", cfg.backend},
              {"precision", cfg.precision}, {"tol", cfg.tol.empty() ? Json() : Json(cfg.tol)},
              {"max_degree", cfg.max_degree}};
}

template <class K>
int run_poly(const RunConfig& cfg, const Params<K>& t, const std::string& kind, long m,
             const std::string& method) {
  AWPoly<K> p;
  if (kind == "nonsym") {
    if (method == "rodrigues")
      p = nonsym_rodrigues(t, m);
    else if (method == "series")
      p = nonsym_series(t, m);
    else
      p = nonsym_triangular(t, m);
  } else if (kind == "sym") {
    p = method == "series" ? sym_series(t, m) : symmetrize(t, m, +1);
  } else if (kind == "antisym") {
    p = symmetrize(t, m, -1);
  } else if (kind == "E") {
    p = renormalize(t, m, false);
  } else if (kind == "Eplus") {
    p = renormalize(t, m, true);
  } else {
    throw Error(Err::ParseError, "unknown kind " + kind);
  }
  if (cfg.json)
    std::cout << awpoly_json(p).dump(2) << "\n";
  else
    std::cout << to_text(p.poly) << "\n";
  return 0;
}

int run_verify(const RunConfig& cfg, const std::string& suite) {
  Params<Rat> t = parse_params(cfg.params);
  Report rep;
  if (suite == "hecke" || suite == "all") {
    long M = std::max<long>(cfg.max_degree, 1);
    rep.merge(verify_hecke(t, M));
  }
  if (suite == "polys" || suite == "all") rep.merge(verify_polys(t, cfg.max_degree));
  if (suite == "forms" || suite == "all")
    rep.merge(verify_forms(t, quad_settings(cfg), cfg.max_degree));
  if (suite == "transform" || suite == "all")
    rep.merge(verify_transform(t, quad_settings(cfg), cfg.max_degree));
  if (rep.checks.empty()) throw Error(Err::ParseError, "unknown suite " + suite);
  return emit_report(rep, cfg, config_json(cfg, "verify --suite " + suite));
}

int run_norms(const RunConfig& cfg) {
  Params<Rat> t = parse_params(cfg.params);
  Params<Complex> tf = to_float(t);
  QuadSettings qs = quad_settings(cfg);
  PairEngine eng(tf, qs);
  Json rows = Json::array();
  for (long m = 0; m <= cfg.max_degree; ++m) {
    Json row{{"m", m}};
    row["sym_closed"] = scalar_json(diagonal_closed(tf, m, DiagKind::sym, qs.product_tol));
    row["nonsym_pos_closed"] =
        scalar_json(diagonal_closed(tf, m, DiagKind::nonsym_pos, qs.product_tol));
    if (m >= 1) {
      row["nonsym_neg_closed"] =
          scalar_json(diagonal_closed(tf, m, DiagKind::nonsym_neg, qs.product_tol));
      row["antisym_closed"] = scalar_json(diagonal_closed(tf, m, DiagKind::antisym, qs.product_tol));
    }
    auto Pp = to_float(symmetrize(t, m, +1).poly);
    FormValue fv = eng.pair(Pp, Pp, PairVariant::round);
    row["sym_quadrature"] = scalar_json(fv.value);
    row["quadrature_err"] = static_cast<double>(fv.err);
    row["nodes"] = fv.nodes;
    rows.push_back(std::move(row));
  }
  if (cfg.json) {
    Json out{{"schema", 1}, {"config", config_json(cfg, "norms")}, {"norms", rows}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& row : rows) {
      std::cout << "m=" << row.at("m") << "\n  (P_m^+, P_m^+) closed     = "
                << row.at("sym_closed").at("re").get<std::string>().substr(0, 40)
                << "\n  (P_m^+, P_m^+) quadrature = "
                << row.at("sym_quadrature").at("re").get<std::string>().substr(0, 40) << "\n";
    }
  }
  return 0;
}

int run_transform_cmd(const RunConfig& cfg, const std::string& input, const std::string& direction) {
  Params<Rat> t = parse_params(cfg.params);
  std::ifstream in(input);
  if (!in) throw Error(Err::ParseError, "cannot open " + input);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error(Err::ParseError, std::string("bad JSON input: ") + e.what());
  }
  QuadSettings qs = quad_settings(cfg);
  if (direction == "fwd") {
    Laurent<Complex> f = laurent_from_json<Complex>(j);
    PairEngine eng(to_float(t), qs);
    SpectralFn F = forward(f, t, cfg.max_degree, eng);
    std::cout << spectral_json(F, t).dump(2) << "\n";
    return 0;
  }
  if (direction == "inv") {
    SpectralFn g = spectral_from_json(j);
    Laurent<Complex> f = inverse_transform(g, t, qs.product_tol);
    if (cfg.json)
      std::cout << laurent_json(f).dump(2) << "\n";
    else
      std::cout << to_text(f) << "\n";
    return 0;
  }
  throw Error(Err::ParseError, "direction must be fwd or inv");
}

int run_constant_term(const RunConfig& cfg) {
  Params<Rat> t = parse_params(cfg.params);
  QuadSettings qs = quad_settings(cfg);
  Params<Complex> tf = to_float(t);
  PairEngine eng(tf, qs);
  Complex closed = constant_term_closed(tf, qs.product_tol);
  FormValue quad = eng.pair(Laurent<Complex>::one(), Laurent<Complex>::one(), PairVariant::round);
  Real rel = abs(quad.value - closed) / abs(closed);
  if (cfg.json) {
    Json out{{"schema", 1},
             {"config", config_json(cfg, "constant-term")},
             {"closed", scalar_json(closed)},
             {"quadrature", scalar_json(quad.value)},
             {"nodes", quad.nodes},
             {"rel_diff", static_cast<double>(rel)}};
    std::cout << out.dump(2) << "\n";
  } else {
    unsigned d = bits_to_digits10(float_precision_bits());
    std::cout << "closed     = " << closed.re.str(d) << "\n";
    std::cout << "quadrature = " << quad.value.re.str(d) << " (" << quad.nodes << " nodes)\n";
    std::cout << "rel diff   = " << rel.str(6) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"rank-one double affine Hecke algebra / Askey-Wilson polynomial engine"};
  app.require_subcommand(1);
  app.add_option("--params", cfg.params, "five rationals p,k0,k1,u0,u1");
  app.add_option("--backend", cfg.backend, "exact or float")
      ->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--precision", cfg.precision, "float precision in bits (>= 53)");
  app.add_option("--tol", cfg.tol, "quadrature tolerance, e.g. 1e-25");
  app.add_option("--max-degree", cfg.max_degree, "degree / spectrum window");
  app.add_flag("--json", cfg.json, "machine-readable output");

  auto* poly = app.add_subcommand("poly", "construct a polynomial");
  std::string kind = "nonsym", method = "triangular";
  long m = 0;
  poly->add_option("--kind", kind, "nonsym|sym|antisym|E|Eplus")
      ->check(CLI::IsMember({"nonsym", "sym", "antisym", "E", "Eplus"}));
  poly->add_option("--m", m, "degree index")->required();
  poly->add_option("--method", method, "triangular|rodrigues|series")
      ->check(CLI::IsMember({"triangular", "rodrigues", "series"}));

  auto* verify = app.add_subcommand("verify", "run identity suites");
  std::string suite = "all";
  verify->add_option("--suite", suite, "hecke|polys|forms|transform|all")
      ->check(CLI::IsMember({"hecke", "polys", "forms", "transform", "all"}));

  auto* norms = app.add_subcommand("norms", "diagonal terms: closed forms and quadrature");
  auto* transform = app.add_subcommand("transform", "apply the transform to a JSON input");
  std::string input, direction = "fwd";
  transform->add_option("--input", input, "input file (polynomial or spectral JSON)")->required();
  transform->add_option("--direction", direction, "fwd|inv")
      ->check(CLI::IsMember({"fwd", "inv"}));
  auto* cterm = app.add_subcommand("constant-term", "Askey-Wilson integral, both routes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (cfg.precision < 53) throw Error(Err::InvalidParameter, "--precision must be >= 53");
    set_float_precision_bits(cfg.precision);
    if (poly->parsed()) {
      Params<Rat> t = parse_params(cfg.params);
      if (cfg.backend == "float") return run_poly(cfg, to_float(t), kind, m, method);
      return run_poly(cfg, t, kind, m, method);
    }
    if (verify->parsed()) return run_verify(cfg, suite);
    if (norms->parsed()) return run_norms(cfg);
    if (transform->parsed()) return run_transform_cmd(cfg, input, direction);
    if (cterm->parsed()) return run_constant_term(cfg);
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == Err::ParseError || e.kind() == Err::InvalidParameter ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
