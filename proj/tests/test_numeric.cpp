#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aw/forms.hpp"
#include "aw/json_io.hpp"
#include "aw/transform.hpp"
#include "aw/verify.hpp"

using namespace aw;

namespace {

Params<Rat> fixture() {
  return Params<Rat>::make(Rat("1/2"), Rat("3/5"), Rat("2/3"), Rat("5/7"), Rat("3/4"));
}

struct NumericEnv {
  Params<Rat> t;
  QuadSettings qs;
  PairEngine engine;

  NumericEnv()
      : t(fixture()), qs(make_settings()), engine(to_float(t), qs) {}

  static QuadSettings make_settings() {
    set_float_precision_bits(192);
    QuadSettings qs = QuadSettings::defaults();
    qs.tol = Real("1e-24");
    qs.product_tol = Real("1e-30");
    return qs;
  }
};

NumericEnv& env() {
  static NumericEnv e;
  return e;
}

double rel(const Complex& got, const Complex& want) {
  Real d = abs(want);
  if (d.is_zero()) d = 1;
  return static_cast<double>(Real(abs(got - want) / d));
}

}  // namespace

TEST_CASE("weight identities at scattered points") {
  auto& e = env();
  Params<Complex> tf = to_float(e.t);
  const Real ptol = e.qs.product_tol;
  Complex x(Real("0.6"), Real("0.8"));

  Complex s = weight_alpha(tf, x) + weight_alpha(tf, ScalarOps<Complex>::inv(x));
  CHECK(rel(s, Complex(1) - tf.a * tf.b) < 1e-40);

  Complex dp = weight_delta_plus(tf, x, ptol);
  CHECK(rel(dp, weight_delta_plus(tf, ScalarOps<Complex>::inv(x), ptol)) < 1e-40);
  CHECK(rel(weight_delta(tf, x, ptol), weight_alpha(tf, x) * dp) < 1e-40);

  CHECK_THROWS_AS(weight_alpha(tf, Complex(1)), Error);
  CHECK_THROWS_AS(weight(tf, Complex(0), WeightVariant::delta_plus, ptol), Error);
}

TEST_CASE("quadrature engine basics") {
  auto& e = env();
  auto one = Laurent<Complex>::one();
  FormValue v = e.engine.pair(one, one, PairVariant::round);
  CHECK(v.nodes >= 128);
  CHECK(v.err < e.qs.tol);

  Complex closed = constant_term_closed(to_float(e.t), e.qs.product_tol);
  CHECK(rel(v.value, closed) < 1e-20);

  // <f,g> = (1-ab)/2 (f,g) on W-invariants
  auto f = to_float(Laurent<Rat>::monomial(1) + Laurent<Rat>::monomial(-1));
  Complex lhs = e.engine.pair(f, f, PairVariant::angle).value;
  Complex rhs = (Complex(1) - Complex(e.t.a) * Complex(e.t.b)) / Complex(2) *
                e.engine.pair(f, f, PairVariant::round).value;
  CHECK(rel(lhs, rhs) < 1e-20);
}

TEST_CASE("out-of-regime parameters are rejected") {
  set_float_precision_bits(192);
  // u1 = 1/4 makes |b| = |k1/u1| = 8/3 > 1
  auto bad = Params<Rat>::make(Rat("1/2"), Rat("3/5"), Rat("2/3"), Rat("5/7"), Rat("1/4"));
  QuadSettings qs = QuadSettings::defaults();
  CHECK_THROWS_AS(PairEngine(to_float(bad), qs), Error);
  try {
    PairEngine eng(to_float(bad), qs);
  } catch (const Error& err) {
    CHECK(err.kind() == Err::ContourUnsupported);
  }
}

TEST_CASE("quadrature reports non-convergence honestly") {
  auto& e = env();
  QuadSettings qs = e.qs;
  qs.tol = pow2(-5000);
  qs.max_doublings = 2;
  PairEngine eng(to_float(e.t), qs);
  CHECK_THROWS_AS(eng.pair(Laurent<Complex>::one(), Laurent<Complex>::one(), PairVariant::round),
                  Error);
}

TEST_CASE("bi-orthogonality on a small window") {
  auto& e = env();
  Params<Rat> ti = e.t.inverse();
  for (long m = -2; m <= 2; ++m) {
    auto Pm = to_float(nonsym_triangular(e.t, m).poly);
    for (long n = -2; n <= 2; ++n) {
      auto Pn = to_float(nonsym_triangular(ti, n).poly);
      Complex v = e.engine.pair(Pm, Pn, PairVariant::angle).value;
      if (m != n)
        CHECK(abs(v) < Real("1e-20"));
      else
        CHECK(abs(v) > Real("1e-10"));
    }
  }
}

TEST_CASE("diagonal closed forms against quadrature") {
  auto& e = env();
  Params<Rat> ti = e.t.inverse();
  Params<Complex> tf = to_float(e.t);
  const Real ptol = e.qs.product_tol;
  for (long m = 0; m <= 2; ++m) {
    auto Pp = to_float(symmetrize(e.t, m, +1).poly);
    CHECK(rel(e.engine.pair(Pp, Pp, PairVariant::round).value,
              diagonal_closed(tf, m, DiagKind::sym, ptol)) < 1e-12);
    auto Pm = to_float(nonsym_triangular(e.t, m).poly);
    auto Pmp = to_float(nonsym_triangular(ti, m).poly);
    CHECK(rel(e.engine.pair(Pm, Pmp, PairVariant::angle).value,
              diagonal_closed(tf, m, DiagKind::nonsym_pos, ptol)) < 1e-12);
  }
  auto Pn = to_float(nonsym_triangular(e.t, -1).poly);
  auto Pnp = to_float(nonsym_triangular(ti, -1).poly);
  CHECK(rel(e.engine.pair(Pn, Pnp, PairVariant::angle).value,
            diagonal_closed(tf, 1, DiagKind::nonsym_neg, ptol)) < 1e-12);
  auto Am = to_float(symmetrize(e.t, 1, -1).poly);
  auto Amp = to_float(symmetrize(ti, 1, -1).poly);
  CHECK(rel(e.engine.pair(Am, Amp, PairVariant::angle).value,
            diagonal_closed(tf, 1, DiagKind::antisym, ptol)) < 1e-12);

  // m = 0 reduction to the constant term
  CHECK(rel(diagonal_closed(tf, 0, DiagKind::sym, ptol), constant_term_closed(tf, ptol)) < 1e-40);
}

TEST_CASE("adjointness of the difference-reflection operators") {
  auto& e = env();
  Params<Rat> ti = e.t.inverse();
  double worst = 0;
  for (int i : {0, 1})
    for (long mf = -2; mf <= 2; ++mf)
      for (long mg = -2; mg <= 2; ++mg) {
        Laurent<Rat> f = Laurent<Rat>::monomial(mf);
        Laurent<Rat> g = Laurent<Rat>::monomial(mg);
        Laurent<Rat> Tf = i == 0 ? apply_T0(f, e.t) : apply_T1(f, e.t);
        Laurent<Rat> Tg = i == 0 ? apply_T0_inv(g, ti) : apply_T1_inv(g, ti);
        Complex lhs = e.engine.pair(to_float(Tf), to_float(g), PairVariant::angle).value;
        Complex rhs = e.engine.pair(to_float(f), to_float(Tg), PairVariant::angle).value;
        worst = std::max(worst, rel(lhs, rhs));
      }
  CHECK(worst < 1e-15);
}

TEST_CASE("residue weights against the contour oracle") {
  auto& e = env();
  Params<Complex> td = to_float(e.t.dual());
  QuadSettings cs = e.qs;
  cs.tol = Real("1e-12");
  for (long m : {0L, 1L, -1L, 2L}) {
    for (ResidueVariant v : {ResidueVariant::w_plus, ResidueVariant::w}) {
      Complex closed = residue_weight(td, m, v, e.qs.product_tol);
      Complex contour = residue_weight_contour(td, m, v, cs);
      CHECK(rel(contour, closed) < 1e-10);
    }
    // pole location for m = 0 is 1/(k0 k1)
    Complex w = residue_weight(td, m, ResidueVariant::w, e.qs.product_tol);
    Complex wp = residue_weight(td, m, ResidueVariant::w_plus, e.qs.product_tol);
    Complex gamma = pow_int(td.a, -eps_sign(m)) * pow_int(td.q, -m);
    CHECK(rel(w, weight_alpha(td, gamma) * wp) < 1e-30);
  }
}

TEST_CASE("norm ratios through residues") {
  auto& e = env();
  Params<Rat> ti = e.t.inverse();
  Params<Complex> td = to_float(e.t.dual());
  const Real ptol = e.qs.product_tol;
  Complex ct = e.engine.pair(Laurent<Complex>::one(), Laurent<Complex>::one(), PairVariant::angle)
                   .value;
  Complex w0 = residue_weight(td, 0, ResidueVariant::w, ptol);
  for (long m : {1L, -2L}) {
    auto E = to_float(renormalize(e.t, m, false).poly);
    auto Ep = to_float(renormalize(ti, m, false).poly);
    Complex lhs = e.engine.pair(E, Ep, PairVariant::angle).value / ct;
    Complex rhs = w0 / residue_weight(td, m, ResidueVariant::w, ptol);
    CHECK(rel(lhs, rhs) < 1e-10);
  }
}

TEST_CASE("transform: delta property and unit image") {
  auto& e = env();
  SpectralFn F = forward(Laurent<Complex>::one(), e.t, 3, e.engine);
  Complex ct = e.engine.pair(Laurent<Complex>::one(), Laurent<Complex>::one(), PairVariant::angle)
                   .value;
  CHECK(rel(F.at(0), ct) < 1e-15);
  for (const auto& [m, v] : F.values)
    if (m != 0) CHECK(abs(v) < Real("1e-18"));

  auto P2 = to_float(nonsym_triangular(e.t, 2).poly);
  SpectralFn F2 = forward(P2, e.t, 3, e.engine);
  for (const auto& [m, v] : F2.values)
    if (m != 2) CHECK(abs(v) / abs(F2.at(2)) < Real("1e-15"));
}

TEST_CASE("transform: round trip and inversion constant") {
  auto& e = env();
  Complex c1 = inversion_constant(e.t, e.engine);
  Complex c2 = inversion_constant_sym(e.t, e.engine);
  CHECK(rel(c1, c2) < 1e-12);

  Laurent<Rat> f;
  f.add_term(2, Rat(3));
  f.add_term(0, Rat(-1));
  f.add_term(-1, Rat(2));
  Laurent<Complex> ff = to_float(f);
  SpectralFn F = forward(ff, e.t, 3, e.engine);
  Laurent<Complex> back = inverse_transform(F, e.t, e.qs.product_tol);
  Laurent<Complex> want = ff.scaled(c1);
  CHECK(static_cast<double>(Real(sup_norm(back - want) / sup_norm(want))) < 1e-10);

  // symmetric round trip
  Laurent<Rat> g = Laurent<Rat>::monomial(1) + Laurent<Rat>::monomial(-1);
  SpectralFn Fg = forward_sym(to_float(g), e.t, 3, e.engine);
  Laurent<Complex> back_g = inverse_sym(Fg, e.t, e.qs.product_tol, default_atol());
  Laurent<Complex> want_g = to_float(g).scaled(c1);
  CHECK(static_cast<double>(Real(sup_norm(back_g - want_g) / sup_norm(want_g))) < 1e-10);

  CHECK_THROWS_AS(forward_sym(to_float(Laurent<Rat>::monomial(1)), e.t, 3, e.engine), Error);
}

TEST_CASE("transform: spectral-side intertwining") {
  auto& e = env();
  const long M = 3;
  for (long deg : {0L, 1L}) {
    Laurent<Rat> f = Laurent<Rat>::monomial(deg);
    SpectralFn Ff = forward(to_float(f), e.t, M, e.engine);
    Real scale = Ff.sup_norm();

    SpectralFn FYf = forward(to_float(apply_named(NamedOp::Y, f, e.t)), e.t, M, e.engine);
    SpectralFn lhs = apply_spectral(SpectralOp::mult_z, FYf, e.t);
    for (const auto& [m, v] : lhs.values)
      CHECK(static_cast<double>(Real(abs(v - Ff.at(m)) / scale)) < 1e-12);

    SpectralFn FT1f = forward(to_float(apply_T1(f, e.t)), e.t, M, e.engine);
    SpectralFn rhs1 = apply_spectral(SpectralOp::T1tilde, Ff, e.t);
    for (const auto& [m, v] : rhs1.values)
      CHECK(static_cast<double>(Real(abs(v - FT1f.at(m)) / scale)) < 1e-12);

    SpectralFn FT1vf = forward(to_float(apply_T1v(f, e.t)), e.t, M, e.engine);
    SpectralFn rhs0 = apply_spectral(SpectralOp::T0tilde, Ff, e.t);
    for (const auto& [m, v] : rhs0.values)
      CHECK(static_cast<double>(Real(abs(v - FT1vf.at(m)) / scale)) < 1e-12);
  }
}

TEST_CASE("spectral function JSON round trip") {
  auto& e = env();
  SpectralFn g;
  g.values.emplace(-1, Complex(Real("0.5"), Real("0.25")));
  g.values.emplace(2, Complex(Real(3), Real(0)));
  Json j = spectral_json(g, e.t);
  SpectralFn g2 = spectral_from_json(j);
  CHECK(g2.values.size() == 2);
  CHECK(abs(g2.at(-1) - g.at(-1)).is_zero());

  // W-invariance flag
  SpectralFn h;
  h.values.emplace(1, Complex(2));
  h.values.emplace(-1, Complex(2));
  CHECK(h.w_invariant(default_atol()));
  h.values[1] = Complex(3);
  CHECK(!h.w_invariant(default_atol()));
}

TEST_CASE("report JSON is deterministic for identical runs") {
  auto t = fixture();
  Report r1 = verify_hecke(t, 2);
  Report r2 = verify_hecke(t, 2);
  CHECK(report_json(r1).dump() == report_json(r2).dump());
  CHECK(r1.passed());
}
