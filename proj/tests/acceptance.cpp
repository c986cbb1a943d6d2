// Acceptance suite: every criterion runs at its stated tolerance against the
// canonical fixture (p, k0, k1, u0, u1) = (1/2, 3/5, 2/3, 5/7, 3/4); exact
// checks use the rational backend, numeric checks 256-bit floats. One
// pass/fail line per criterion; exit code 0 iff all pass.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "aw/verify.hpp"

using namespace aw;

namespace {

int g_failures = 0;

void report_criterion(int idx, const std::string& label, const Report& rep, double elapsed,
                      double time_limit) {
  bool ok = rep.passed();
  if (time_limit > 0 && elapsed >= time_limit) ok = false;
  if (!ok) ++g_failures;
  std::printf("[%s] criterion %2d: %-58s (%.2fs%s)\n", ok ? "PASS" : "FAIL", idx, label.c_str(),
              elapsed, time_limit > 0 ? (", limit " + std::to_string((int)time_limit) + "s").c_str()
                                      : "");
  if (!ok) {
    for (const auto& c : rep.checks)
      if (c.status != CheckStatus::pass) {
        std::printf("       failed: %s  residual=%.3g  %s\n", c.name.c_str(), c.residual,
                    c.note.c_str());
      }
    if (time_limit > 0 && elapsed >= time_limit) std::printf("       over time limit\n");
  }
}

template <class Body>
void criterion(int idx, const std::string& label, double time_limit, Body&& body) {
  Report rep;
  CheckTimer timer;
  try {
    body(rep);
  } catch (const std::exception& e) {
    CheckRecord rec;
    rec.name = "criterion " + std::to_string(idx);
    rec.status = CheckStatus::fail;
    rec.note = e.what();
    rep.add(std::move(rec));
  }
  report_criterion(idx, label, rep, timer.seconds(), time_limit);
}

}  // namespace

int main() {
  set_float_precision_bits(256);
  const Params<Rat> t =
      Params<Rat>::make(Rat("1/2"), Rat("3/5"), Rat("2/3"), Rat("5/7"), Rat("3/4"));

  QuadSettings qs = QuadSettings::defaults();
  qs.tol = Real("1e-24");
  qs.product_tol = Real("1e-30");

  CheckTimer total;

  criterion(1, "Hecke relations, intertwiners, compatibility (|m| <= 10, exact)", 30,
            [&](Report& rep) { hecke_suite(rep, t, 10); });

  criterion(2, "eigen-equation Y P_m = gamma_m P_m (|m| <= 8, exact)", 0,
            [&](Report& rep) { polys_eigen_checks(rep, t, 8); });

  criterion(3, "triple construction agreement (|m| <= 8, exact)", 0,
            [&](Report& rep) { polys_triple_checks(rep, t, 8); });

  criterion(4, "T1 action, intertwiner ladders, Weyl character, shifts (m <= 6)", 0,
            [&](Report& rep) { polys_structure_checks(rep, t, 6); });

  criterion(5, "duality, nonsymmetric and symmetric (|m|,|n| <= 6, exact)", 0,
            [&](Report& rep) { polys_duality_checks(rep, t, 6); });

  criterion(6, "evaluation closed forms (|m| <= 8, exact)", 0,
            [&](Report& rep) { polys_evaluation_checks(rep, t, 8); });

  // The numeric criteria share one quadrature engine at the fixture.
  FormsContext ctx(t, qs);

  criterion(7, "constant term: quadrature vs closed form (rel 1e-20 at 256 bits)", 10,
            [&](Report& rep) {
              forms_constant_term_checks(rep, ctx, 1e-20);
              // near the degenerate proof point: (a,b,c,d) = 0.99*(1,-1,sqrt(q),-sqrt(q))
              Params<Rat> tp = Params<Rat>::make(Rat("1/2"), Rat("99/100"), Rat("99/100"),
                                                 Rat(1), Rat(1));
              FormsContext pctx(tp, qs);
              forms_constant_term_checks(rep, pctx, 1e-20);
            });

  criterion(8, "bi-orthogonality and the four diagonal closed forms (|m| <= 6)", 0,
            [&](Report& rep) { forms_biorth_checks(rep, ctx, 6, 1e-20, 1e-10); });

  criterion(9, "norm ratios via residue weights, with contour oracle (|m| <= 5)", 0,
            [&](Report& rep) {
              forms_residue_checks(rep, ctx, 5, 1e-8);
              forms_norm_ratio_checks(rep, ctx, 5, 1e-8);
            });

  criterion(10, "transform round trip and inversion constant (rel 1e-8)", 0,
            [&](Report& rep) { transform_roundtrip_checks(rep, ctx, 6, 1e-8); });

  criterion(11, "norm recursions: single-step and k+l+m+n <= 3 (rel 1e-8)", 0,
            [&](Report& rep) { forms_recursion_checks(rep, ctx, 4, 3, 1e-8); });

  criterion(12, "adjointness of T0, T1 (monomials |m| <= 5, tol 1e-15)", 0,
            [&](Report& rep) { forms_adjoint_checks(rep, ctx, 5, 1e-15); });

  double elapsed = total.seconds();
  std::printf("----\n");
  if (elapsed >= 300.0) {
    ++g_failures;
    std::printf("[FAIL] total wall clock %.1fs exceeds the 300s budget\n", elapsed);
  }
  std::printf("%s: %d criterion failure(s), %.1fs total\n", g_failures == 0 ? "PASS" : "FAIL",
              g_failures, elapsed);
  return g_failures == 0 ? 0 : 1;
}
