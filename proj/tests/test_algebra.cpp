#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aw/json_io.hpp"
#include "aw/polys.hpp"
#include "aw/verify.hpp"

using namespace aw;

namespace {

Params<Rat> fixture() {
  return Params<Rat>::make(Rat("1/2"), Rat("3/5"), Rat("2/3"), Rat("5/7"), Rat("3/4"));
}

const Rat kOne(1);

}  // namespace

TEST_CASE("difference-reflection operators on low monomials") {
  auto t = fixture();
  using S = ScalarOps<Rat>;
  auto one = Laurent<Rat>::one();
  auto x = Laurent<Rat>::monomial(1);

  CHECK(apply_T1(one, t) == one.scaled(t.k1));
  CHECK(apply_T0(one, t) == one.scaled(t.k0));

  // T1 x = k1^-1 x^-1 + (u1^-1 - u1)
  Laurent<Rat> t1x;
  t1x.add_term(-1, S::inv(t.k1));
  t1x.add_term(0, S::inv(t.u1) - t.u1);
  CHECK(apply_T1(x, t) == t1x);

  // T0 x = q k0 x^-1 + p (u0 - u0^-1) + (k0 - k0^-1) x
  Laurent<Rat> t0x;
  t0x.add_term(-1, t.q * t.k0);
  t0x.add_term(0, t.p * (t.u0 - S::inv(t.u0)));
  t0x.add_term(1, t.k0 - S::inv(t.k0));
  CHECK(apply_T0(x, t) == t0x);
}

TEST_CASE("named operator expressions") {
  auto t = fixture();
  auto one = Laurent<Rat>::one();

  CHECK(apply_named(NamedOp::Y, one, t) == one.scaled(t.gamma(0)));
  CHECK(apply_named(NamedOp::Hplus, one, t).is_zero());

  for (long m : {-3L, 0L, 2L, 5L}) {
    auto f = Laurent<Rat>::monomial(m);
    CHECK(apply_named(NamedOp::Cplus, f, t) + apply_named(NamedOp::Cminus, f, t) == f);
    CHECK(apply_named(NamedOp::Y, apply_named(NamedOp::Yinv, f, t), t) == f);
  }

  CHECK_THROWS_AS(named_op_from_string("bogus"), Error);
  CHECK(named_op_from_string("hplus") == NamedOp::Hplus);

  auto j = opexpr_json(named_expr(NamedOp::S1, t));
  CHECK(j.at("terms").size() == 2);
  CHECK(j.at("terms")[0].at("word")[0] == "T1");
}

TEST_CASE("operator expression tokens round-trip by name") {
  for (const char* name :
       {"T0", "T1", "T0v", "T1v", "T0inv", "T1inv", "T0vinv", "T1vinv", "Z(-3)"}) {
    Token tok = token_from_name(name);
    CHECK(token_name(tok) == name);
  }
  CHECK_THROWS_AS(token_from_name("Q7"), Error);

  // a hand-built word: Z(2) after T1, with coefficient 3/2
  auto t = fixture();
  OpExpr<Rat> e = OpExpr<Rat>::single(Rat("3/2"), {Token::z(2), Token{Tok::T1}});
  auto out = apply_expr(e, Laurent<Rat>::one(), t);
  CHECK(out == Laurent<Rat>::monomial(2, Rat("3/2") * t.k1));
}

TEST_CASE("Askey-Wilson operator L") {
  auto t = fixture();
  using S = ScalarOps<Rat>;
  auto one = Laurent<Rat>::one();
  Rat kk = t.k0 * t.k1;
  CHECK(apply_L(one, t) == one.scaled(kk + S::inv(kk)));

  // oracle: L agrees with Y + Y^-1 on W-invariants
  for (long m = 1; m <= 5; ++m) {
    auto f = Laurent<Rat>::monomial(m) + Laurent<Rat>::monomial(-m);
    CHECK(apply_L(f, t) ==
          apply_named(NamedOp::Y, f, t) + apply_named(NamedOp::Yinv, f, t));
  }

  CHECK_THROWS_AS(apply_L(Laurent<Rat>::monomial(1), t), Error);
  try {
    apply_L(Laurent<Rat>::monomial(1), t);
  } catch (const Error& e) {
    CHECK(e.kind() == Err::NotSymmetric);
  }
}

TEST_CASE("shift operators") {
  auto t = fixture();
  CHECK(apply_shift(ShiftDir::plus, Laurent<Rat>::one(), t).is_zero());
  auto ts = t.with_k1_scaled(t.q);
  for (long m = 1; m <= 4; ++m) {
    auto Pp = symmetrize(t, m, +1).poly;
    auto Ps = symmetrize(ts, m - 1, +1).poly;
    CHECK(apply_shift(ShiftDir::plus, Pp, t) == Ps.scaled(hplus_value(t.gamma(m), t)));
    CHECK(apply_shift(ShiftDir::minus, Ps, t) == Pp.scaled(hminus_value(t.gamma(m), t)));
  }
}

TEST_CASE("nonsymmetric polynomials: eigenvectors, monicity, uniqueness") {
  auto t = fixture();
  CHECK(nonsym_triangular(t, 0).poly == Laurent<Rat>::one());
  for (long m = -5; m <= 5; ++m) {
    auto P = nonsym_triangular(t, m);
    CHECK(apply_named(NamedOp::Y, P.poly, t) == P.poly.scaled(t.gamma(m)));
    auto [e, c] = P.poly.leading_term();
    CHECK(e == m);
    CHECK(c == kOne);
  }
}

TEST_CASE("degenerate spectrum is detected") {
  // k0 k1 = q^-1 forces gamma_1 = gamma_-1
  auto bad = Params<Rat>::make(Rat("1/2"), Rat(4), Rat(1), Rat("5/7"), Rat("3/4"));
  CHECK(bad.gamma(1) == bad.gamma(-1));
  CHECK_THROWS_AS(nonsym_triangular(bad, 1), Error);
  try {
    nonsym_triangular(bad, 1);
  } catch (const Error& e) {
    CHECK(e.kind() == Err::DegenerateSpectrum);
  }
}

TEST_CASE("Rodrigues construction and its constants") {
  auto t = fixture();
  using S = ScalarOps<Rat>;
  CHECK(rodrigues_dm(t, 0) == kOne);
  Rat kk2 = t.k0 * t.k0 * t.k1 * t.k1;
  CHECK(rodrigues_dm(t, -1) ==
        S::div(kOne, t.q * t.k0 * t.k1 * t.k1) * (kOne - t.q * kk2));
  for (long m = -4; m <= 4; ++m)
    CHECK(nonsym_rodrigues(t, m).poly == nonsym_triangular(t, m).poly);
}

TEST_CASE("series constructions") {
  auto t = fixture();
  CHECK(sym_series(t, 0).poly == Laurent<Rat>::one());
  CHECK(nonsym_series(t, 0).poly == Laurent<Rat>::one());
  for (long m = -4; m <= 4; ++m)
    CHECK(nonsym_series(t, m).poly == nonsym_triangular(t, m).poly);
  for (long m = 0; m <= 4; ++m) CHECK(sym_series(t, m).poly == symmetrize(t, m, +1).poly);
  // parameter symmetry of the symmetric family
  for (long m = 0; m <= 3; ++m) {
    auto base = sym_series_abcd(t.a, t.b, t.c, t.d, t.q, m);
    CHECK(sym_series_abcd(t.d, t.c, t.b, t.a, t.q, m) == base);
  }
}

TEST_CASE("symmetrization") {
  auto t = fixture();
  using S = ScalarOps<Rat>;
  CHECK(symmetrize(t, 0, +1).poly == Laurent<Rat>::one());
  CHECK_THROWS_AS(symmetrize(t, 0, -1), Error);
  try {
    symmetrize(t, 0, -1);
  } catch (const Error& e) {
    CHECK(e.kind() == Err::EmptyIsotype);
  }
  for (long m = 1; m <= 5; ++m) {
    auto Pp = symmetrize(t, m, +1).poly;
    auto Pm = symmetrize(t, m, -1).poly;
    CHECK(apply_T1(Pp, t) == Pp.scaled(t.k1));
    CHECK(apply_T1(Pm, t) == Pm.scaled(-S::inv(t.k1)));
    CHECK(is_symmetric(Pp));
    CHECK(is_antisymmetric(Pm, t));
    CHECK(apply_L(Pp, t) == Pp.scaled(t.gamma(m) + S::inv(t.gamma(m))));
  }
}

TEST_CASE("T1 action constants") {
  auto t = fixture();
  using S = ScalarOps<Rat>;
  CHECK(t1_action_constants(t, -3).second == t.k1);
  for (long m : {1L, 2L, 4L}) {
    auto [al, be] = t1_action_constants(t, m);
    auto [aln, ben] = t1_action_constants(t, -m);
    (void)aln;
    CHECK(be * ben == (t.k1 - al) * (S::inv(t.k1) + al));
  }
  CHECK_THROWS_AS(t1_action_constants(t, 0), Error);
}

TEST_CASE("evaluation formulas") {
  auto t = fixture();
  CHECK(ev_closed(t, 0, EvKind::nonsym) == kOne);
  for (long m = -4; m <= 4; ++m)
    CHECK(ev_value(nonsym_triangular(t, m).poly, t) == ev_closed(t, m, EvKind::nonsym));
  for (long m = 0; m <= 4; ++m) {
    auto P = symmetrize(t, m, +1).poly;
    CHECK(P.evaluate(t.a) == ev_closed(t, m, EvKind::sym));
  }
}

TEST_CASE("renormalized families") {
  auto t = fixture();
  CHECK(renormalize(t, 0, false).poly == Laurent<Rat>::one());
  for (long m = -4; m <= 4; ++m) {
    auto E = renormalize(t, m, false).poly;
    CHECK(ev_value(E, t) == kOne);
    auto Ep = renormalize(t, m >= 0 ? m : -m, true).poly;
    CHECK(apply_named(NamedOp::Cplus, E, t) == Ep);
  }
}

TEST_CASE("duality at mixed indices") {
  auto t = fixture();
  auto td = t.dual();
  using S = ScalarOps<Rat>;
  for (long m : {-4L, -1L, 0L, 2L, 4L})
    for (long n : {-3L, 0L, 1L, 4L}) {
      auto E = renormalize(t, m, false).poly;
      auto Ed = renormalize(td, n, false).poly;
      CHECK(E.evaluate(S::inv(t.xval(n))) == Ed.evaluate(S::inv(t.gamma(m))));
    }
}

TEST_CASE("relation verifier passes on a small window") {
  auto t = fixture();
  Report rep = verify_hecke(t, 4);
  CHECK(rep.passed());
  CHECK(rep.count(CheckStatus::pass) == rep.checks.size());
}

TEST_CASE("relation verifier flags a broken parameter set") {
  // Degenerate spectrum breaks the triangular diagonal distinctness but the
  // operator relations themselves still hold; the genericity scan must flag it.
  auto bad = Params<Rat>::make(Rat("1/2"), Rat(4), Rat(1), Rat("5/7"), Rat("3/4"));
  auto violations = check_genericity(bad, 10);
  CHECK(!violations.empty());
}

TEST_CASE("verify_polys suite is green at the fixture") {
  auto t = fixture();
  Report rep = verify_polys(t, 4);
  INFO(report_text(rep));
  CHECK(rep.passed());
}
