#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aw/json_io.hpp"
#include "aw/laurent.hpp"
#include "aw/params.hpp"

using namespace aw;

namespace {

Params<Rat> fixture() {
  return Params<Rat>::make(Rat("1/2"), Rat("3/5"), Rat("2/3"), Rat("5/7"), Rat("3/4"));
}

Laurent<Rat> sparse_poly(std::uint64_t seed, long span) {
  // deterministic xorshift; coefficients in [-5,5]
  std::uint64_t s = seed ? seed : 1;
  Laurent<Rat> f;
  for (long e = -span; e <= span; ++e) {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    long c = static_cast<long>(s % 11) - 5;
    if (c != 0) f.add_term(e, Rat(c));
  }
  if (f.is_zero()) f.add_term(0, Rat(1));
  return f;
}

}  // namespace

TEST_CASE("parameter set: derived values at the standard fixture") {
  auto t = fixture();
  CHECK(t.q == Rat("1/4"));
  CHECK(t.a == Rat("1/2"));
  CHECK(t.b == Rat("-8/9"));
  CHECK(t.c == Rat("3/14"));
  CHECK(t.d == Rat("-21/50"));
  CHECK(t.a * t.b == -(t.k1 * t.k1));
  CHECK(t.c * t.d == -(t.q * t.k0 * t.k0));
}

TEST_CASE("parameter set: unit multiplicities and rejection of zeros") {
  auto t = Params<Rat>::make(Rat("1/3"), Rat(1), Rat(1), Rat(1), Rat(1));
  CHECK(t.a == Rat(1));
  CHECK(t.b == Rat(-1));
  CHECK(t.c == t.p);
  CHECK(t.d == -t.p);
  CHECK_THROWS_AS(Params<Rat>::make(Rat("1/2"), Rat("3/5"), Rat(0), Rat("5/7"), Rat("3/4")), Error);
  try {
    Params<Rat>::make(Rat("1/2"), Rat("3/5"), Rat(0), Rat("5/7"), Rat("3/4"));
  } catch (const Error& e) {
    CHECK(e.kind() == Err::InvalidParameter);
  }
  CHECK_THROWS_AS(Params<Rat>::make(Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)), Error);  // q = 1
}

TEST_CASE("parameter set: dual and inverse maps are involutions") {
  auto t = fixture();
  auto d = t.dual();
  CHECK(d.k0 == Rat("3/4"));
  CHECK(d.u1 == Rat("3/5"));
  CHECK(d.k1 == t.k1);
  CHECK(d.a == Rat("2/5"));
  CHECK(d.a == t.k0 * t.k1);
  auto dd = d.dual();
  CHECK(dd.k0 == t.k0);
  CHECK(dd.u1 == t.u1);

  auto i = t.inverse();
  CHECK(i.p == Rat(2));
  CHECK(i.k0 == Rat("5/3"));
  CHECK(i.k1 == Rat("3/2"));
  CHECK(i.u0 == Rat("7/5"));
  CHECK(i.u1 == Rat("4/3"));
  CHECK(i.a == Rat(2));
  CHECK(i.a * t.a == Rat(1));
  auto ii = i.inverse();
  CHECK(ii.p == t.p);
  CHECK(ii.u0 == t.u0);

  // fixed point of the swap
  auto s = Params<Rat>::make(Rat("1/2"), Rat("3/4"), Rat("2/3"), Rat("5/7"), Rat("3/4"));
  auto sd = s.dual();
  CHECK(sd.k0 == s.k0);
  CHECK(sd.u1 == s.u1);
}

TEST_CASE("spectral points") {
  auto t = fixture();
  auto p0 = spectral_point(t, 0);
  CHECK(p0.gamma == Rat("2/5"));
  CHECK(p0.xval == Rat("1/2"));
  CHECK(p0.eps == 1);
  CHECK(spectral_point(t, -1).gamma == Rat(10));
  CHECK(spectral_point(t, 2).xval == Rat("1/32"));
  CHECK(spectral_point(t, -3).eps == -1);

  // gamma of the inverse parameters is the reciprocal
  auto ti = t.inverse();
  for (long m = -6; m <= 6; ++m) CHECK(ti.gamma(m) * t.gamma(m) == Rat(1));
  // dual gamma at m >= 0 is k0 k1 q^m
  auto td = t.dual();
  for (long m = 0; m <= 6; ++m) CHECK(td.gamma(m) == t.xval(m));
}

TEST_CASE("genericity scan") {
  auto t = fixture();
  CHECK(check_genericity(t, 50).empty());

  // k1^2 = q at (k1 = 1/2, q = 1/4)
  auto bad = Params<Rat>::make(Rat("1/2"), Rat("3/5"), Rat("1/2"), Rat("5/7"), Rat("3/4"));
  auto v = check_genericity(bad, 5);
  bool found = false;
  for (const auto& s : v) found = found || s == "k1^2 = q^1";
  CHECK(found);

  // a = 1 (so a*a = q^0) at unit multiplicities
  auto unit = Params<Rat>::make(Rat("1/3"), Rat(1), Rat(1), Rat(1), Rat(1));
  auto v2 = check_genericity(unit, 3);
  found = false;
  for (const auto& s : v2) found = found || s == "a*a = q^0";
  CHECK(found);
}

TEST_CASE("q-shifted factorials") {
  CHECK(qpoch(Rat("7/3"), Rat("1/4"), 0) == Rat(1));
  CHECK(qpoch(Rat("1/4"), Rat("1/4"), 2) == Rat("45/64"));
  // recurrence (z;q)_{n+1} = (z;q)_n (1 - z q^n)
  Rat z("3/7"), q("2/5");
  for (long n = 0; n < 8; ++n)
    CHECK(qpoch(z, q, n + 1) == qpoch(z, q, n) * (Rat(1) - z * pow_int(q, n)));

  set_float_precision_bits(192);
  Real tol = Real("1e-30");
  Complex zc(Rat("1/2")), qc(Rat("1/4"));
  Complex p1 = qpoch_inf(zc, qc, tol);
  // oracle: recompute with the truncation pushed twice as far
  Complex p2 = qpoch_inf(zc, qc, Real(tol * tol));
  CHECK(abs(p1 - p2) < tol * 4);

  CHECK_THROWS_AS(qpoch_inf(Rat("1/2"), Rat("1/4"), tol), Error);
  try {
    qpoch_inf(Rat("1/2"), Rat("1/4"), tol);
  } catch (const Error& e) {
    CHECK(e.kind() == Err::BackendUnsupported);
  }
  CHECK_THROWS_AS(qpoch_inf(zc, Complex(Rat(4)), tol), Error);
  try {
    qpoch_inf(zc, Complex(Rat(4)), tol);
  } catch (const Error& e) {
    CHECK(e.kind() == Err::DivergentProduct);
  }
}

TEST_CASE("laurent ring operations") {
  auto x = Laurent<Rat>::monomial(1);
  auto xi = Laurent<Rat>::monomial(-1);
  auto f = (x + xi) * (x + xi);
  CHECK(f == Laurent<Rat>::monomial(2) + Laurent<Rat>::monomial(0, Rat(2)) +
                 Laurent<Rat>::monomial(-2));
  auto g = sparse_poly(42, 4);
  CHECK(g * Laurent<Rat>::one() == g);
  CHECK((x - Laurent<Rat>::one()) * (x + Laurent<Rat>::one()) ==
        Laurent<Rat>::monomial(2) - Laurent<Rat>::one());
  CHECK((g - g).is_zero());
}

TEST_CASE("affine Weyl action on monomials") {
  Rat q("1/4");
  auto x = Laurent<Rat>::monomial(1);
  CHECK(act_s0(x, q) == Laurent<Rat>::monomial(-1, q));
  auto h = Laurent<Rat>::monomial(2) + Laurent<Rat>::monomial(0, Rat(3));
  CHECK(act_s1(h) == Laurent<Rat>::monomial(-2) + Laurent<Rat>::monomial(0, Rat(3)));
  CHECK(act_tau(1, Laurent<Rat>::monomial(-3), q) ==
        Laurent<Rat>::monomial(-3, pow_int(q, -3)));
  for (std::uint64_t seed : {7u, 19u, 23u}) {
    auto f = sparse_poly(seed, 5);
    CHECK(act_s0(act_s0(f, q), q) == f);
    CHECK(act_s1(act_s1(f)) == f);
    CHECK(act_s1(act_s0(f, q)) == act_tau(1, f, q));
  }
}

TEST_CASE("exact division") {
  auto one = Laurent<Rat>::one();
  auto x = Laurent<Rat>::monomial(1);
  CHECK(exact_div(one - x * x, one - x) == one + x);
  CHECK(exact_div(Laurent<Rat>::monomial(-2) - Laurent<Rat>::monomial(2), one - x * x) ==
        Laurent<Rat>::monomial(-2) + one);
  CHECK_THROWS_AS(exact_div(x, one - x), Error);
  try {
    exact_div(x, one - x);
  } catch (const Error& e) {
    CHECK(e.kind() == Err::NotDivisible);
  }

  // round-trip property on random sparse inputs
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    auto f = sparse_poly(seed, 4);
    auto g = sparse_poly(seed * 131, 3);
    CHECK(exact_div(f * g, g) == f);
  }

  // (s1 f - f) divisible by 1 - x^2, (s0 f - f) divisible by 1 - q x^-2
  Rat q("1/4");
  Laurent<Rat> d1 = one - Laurent<Rat>::monomial(2);
  Laurent<Rat> d0 = one - Laurent<Rat>::monomial(-2, q);
  for (std::uint64_t seed : {3u, 11u, 31u}) {
    auto f = sparse_poly(seed, 5);
    CHECK(exact_div(act_s1(f) - f, d1) * d1 == act_s1(f) - f);
    CHECK(exact_div(act_s0(f, q) - f, d0) * d0 == act_s0(f, q) - f);
  }
}

TEST_CASE("order rank and leading terms") {
  CHECK(order_rank(0) == 0);
  CHECK(order_rank(-1) == 1);
  CHECK(order_rank(1) == 2);
  CHECK(order_rank(-2) == 3);
  CHECK(order_rank(2) == 4);
  for (long r = 0; r <= 20; ++r) CHECK(order_rank(exponent_at_rank(r)) == r);

  auto f = Laurent<Rat>::one() + Laurent<Rat>::monomial(1) - Laurent<Rat>::monomial(-2);
  auto [e, c] = f.leading_term();
  CHECK(e == -2);
  CHECK(c == Rat(-1));
  auto [e2, c2] = Laurent<Rat>::monomial(0, Rat(5)).leading_term();
  CHECK(e2 == 0);
  CHECK(c2 == Rat(5));
  CHECK_THROWS_AS(Laurent<Rat>::zero().leading_term(), Error);
}

TEST_CASE("evaluation") {
  auto f = Laurent<Rat>::monomial(1) + Laurent<Rat>::monomial(-1);
  CHECK(f.evaluate(Rat(2)) == Rat("5/2"));
  auto g = sparse_poly(5, 4);
  Rat sum(0);
  for (const auto& [e, c] : g.terms()) sum += c;
  CHECK(g.evaluate(Rat(1)) == sum);
  CHECK_THROWS_AS(f.evaluate(Rat(0)), Error);
  try {
    f.evaluate(Rat(0));
  } catch (const Error& e) {
    CHECK(e.kind() == Err::PoleAtZero);
  }
}

TEST_CASE("text and JSON round trips") {
  auto t = fixture();
  Laurent<Rat> f;
  f.add_term(-1, Rat("-9/4"));
  f.add_term(0, Rat("-7/8"));
  f.add_term(1, Rat(1));
  CHECK(to_text(f) == "-9/4*x^-1 + -7/8*x^0 + 1*x^1");

  auto j = laurent_json(f);
  CHECK(laurent_from_json<Rat>(j) == f);

  auto jt = params_json(t);
  auto t2 = params_from_json(jt);
  CHECK(t2.p == t.p);
  CHECK(t2.u1 == t.u1);
  CHECK(t2.d == t.d);

  set_float_precision_bits(192);
  auto fc = to_float(f);
  auto jc = laurent_json(fc);
  auto fc2 = laurent_from_json<Complex>(jc);
  CHECK(approx_equal(fc, fc2));
}

TEST_CASE("float comparison thresholds scale with precision") {
  set_float_precision_bits(256);
  CHECK(default_atol() == pow2(-180));
  CHECK(default_rtol() == pow2(-160));
  Complex tiny(pow2(-200), Real(0));
  CHECK(approx_zero(tiny, default_atol()));
}
