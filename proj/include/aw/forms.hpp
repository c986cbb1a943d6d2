#pragma once

#include <map>
#include <utility>
#include <vector>

#include "aw/laurent.hpp"
#include "aw/params.hpp"

namespace aw {

// ---------------------------------------------------------------------------
// Weight functions on and off the unit circle:
//   Delta_+(x) = (x^2, x^-2; q)_inf / prod_{e in {a,b,c,d}} (ex, e/x; q)_inf
//   alpha(x)   = (1 - a/x)(1 - b/x) / (1 - x^-2)
//   Delta(x)   = alpha(x) Delta_+(x)
// ---------------------------------------------------------------------------

enum class WeightVariant { delta_plus, delta, alpha };

inline Complex weight_alpha(const Params<Complex>& t, const Complex& x) {
  if (ScalarOps<Complex>::is_zero(x)) throw Error(Err::PoleEvaluation, "alpha at x = 0");
  Complex xi = ScalarOps<Complex>::inv(x);
  Complex den = Complex(1) - xi * xi;
  if (ScalarOps<Complex>::is_zero(den)) throw Error(Err::PoleEvaluation, "alpha has a pole at x = +-1");
  return (Complex(1) - t.a * xi) * (Complex(1) - t.b * xi) / den;
}

inline Complex weight_delta_plus(const Params<Complex>& t, const Complex& x, const Real& tol) {
  if (ScalarOps<Complex>::is_zero(x)) throw Error(Err::PoleEvaluation, "weight at x = 0");
  Complex xi = ScalarOps<Complex>::inv(x);
  Complex num = qpoch_inf(x * x, t.q, tol) * qpoch_inf(xi * xi, t.q, tol);
  Complex den(1);
  for (const Complex& e : {t.a, t.b, t.c, t.d}) den *= qpoch_inf(e * x, t.q, tol) * qpoch_inf(e * xi, t.q, tol);
  if (ScalarOps<Complex>::is_zero(den)) throw Error(Err::PoleEvaluation, "pole of Delta_+");
  return num / den;
}

// Delta in the pole-free form (1-a/x)(1-b/x)(1-x^2)(qx^2, qx^-2; q)_inf / denom,
// regular at x = +-1.
inline Complex weight_delta(const Params<Complex>& t, const Complex& x, const Real& tol) {
  if (ScalarOps<Complex>::is_zero(x)) throw Error(Err::PoleEvaluation, "weight at x = 0");
  Complex xi = ScalarOps<Complex>::inv(x);
  Complex num = (Complex(1) - t.a * xi) * (Complex(1) - t.b * xi) * (Complex(1) - x * x) *
                qpoch_inf(t.q * x * x, t.q, tol) * qpoch_inf(t.q * xi * xi, t.q, tol);
  Complex den(1);
  for (const Complex& e : {t.a, t.b, t.c, t.d}) den *= qpoch_inf(e * x, t.q, tol) * qpoch_inf(e * xi, t.q, tol);
  if (ScalarOps<Complex>::is_zero(den)) throw Error(Err::PoleEvaluation, "pole of Delta");
  return num / den;
}

inline Complex weight(const Params<Complex>& t, const Complex& x, WeightVariant v, const Real& tol) {
  switch (v) {
    case WeightVariant::alpha: return weight_alpha(t, x);
    case WeightVariant::delta_plus: return weight_delta_plus(t, x, tol);
    case WeightVariant::delta: return weight_delta(t, x, tol);
  }
  throw Error(Err::InvalidParameter, "bad weight variant");
}

// ---------------------------------------------------------------------------
// Quadrature of the bilinear forms over the unit circle
// ---------------------------------------------------------------------------

struct QuadSettings {
  unsigned initial_nodes = 64;  // power of two, >= 16
  unsigned max_doublings = 12;
  Real tol;          // absolute error target for the integral
  Real product_tol;  // truncation tolerance for the infinite products

  static QuadSettings defaults() {
    QuadSettings s;
    unsigned bits = float_precision_bits();
    s.tol = pow2(-static_cast<long>(bits * 180u / 256u));
    s.product_tol = pow2(-static_cast<long>(bits * 200u / 256u));
    return s;
  }

  QuadSettings with_tol(Real t) const {
    QuadSettings s = *this;
    s.tol = std::move(t);
    return s;
  }
};

struct FormValue {
  Complex value;
  Real err;        // |value at N nodes - value at N/2 nodes|
  unsigned nodes;  // nodes of the final level
};

enum class PairVariant { angle, round };  // angle uses Delta, round uses Delta_+

// Trapezoid rule on equispaced angles with node doubling. The integrand is
// analytic in an annulus around |x| = 1, so convergence is geometric. Weight
// values are cached per level; on the circle both (x^2, x^-2; q)_inf and the
// denominator factors pair into real products in s = 2cos(theta), so the
// tables below reduce each node to a handful of real multiplies.
class PairEngine {
 public:
  PairEngine(Params<Complex> t, QuadSettings s) : t_(std::move(t)), s_(std::move(s)) {
    if (s_.initial_nodes < 16 || (s_.initial_nodes & (s_.initial_nodes - 1)) != 0)
      throw Error(Err::InvalidParameter, "initial node count must be a power of two >= 16");
    if (s_.max_doublings < 1) throw Error(Err::InvalidParameter, "need at least one doubling");
    if (!(s_.tol > 0) || !(s_.product_tol > 0)) throw Error(Err::InvalidParameter, "tolerances must be positive");
    check_regime();
    build_tables();
  }

  const Params<Complex>& params() const { return t_; }
  const QuadSettings& settings() const { return s_; }

  FormValue pair(const Laurent<Complex>& f, const Laurent<Complex>& g, PairVariant v) const {
    return pair(f, g, v, s_.tol);
  }

  FormValue pair(const Laurent<Complex>& f, const Laurent<Complex>& g, PairVariant v,
                 const Real& tol) const {
    unsigned n = s_.initial_nodes;
    Complex prev = integral(f, g, v, n);
    for (unsigned d = 1; d <= s_.max_doublings; ++d) {
      n *= 2;
      Complex cur = integral(f, g, v, n);
      Real err = abs(cur - prev);
      if (err < tol) return FormValue{cur, err, n};
      prev = cur;
    }
    throw Error(Err::QuadratureNotConverged, "node doubling budget exhausted");
  }

 private:
  struct Node {
    Complex x;       // e^(i theta)
    Real w_plus;     // Delta_+(x), real on the circle
    Complex w_full;  // Delta(x)
  };

  void check_regime() const {
    if (!t_.q.is_real() || !(t_.q.re > 0) || !(t_.q.re < 1))
      throw Error(Err::ContourUnsupported, "need 0 < q < 1");
    for (const Complex& e : {t_.a, t_.b, t_.c, t_.d}) {
      if (!e.is_real())
        throw Error(Err::ContourUnsupported, "unit-circle quadrature expects real parameters");
      if (!(abs(e) < 1))
        throw Error(Err::ContourUnsupported, "need max(|a|,|b|,|c|,|d|) < 1");
    }
  }

  // Factor tables: a pair (e x; q)_j-factor and its x -> 1/x partner combine to
  // 1 + e^2 q^2j - e q^j s with s = x + 1/x; store A_j = e q^j, C_j = 1 + A_j^2.
  void build_tables() {
    const Real q = t_.q.re;
    auto build = [&](const Real& e, bool from_j1) {
      std::vector<std::pair<Real, Real>> tab;  // (A_j, C_j)
      Real a = from_j1 ? Real(e * q) : e;
      using boost::multiprecision::abs;
      while (abs(a) * (2 + abs(a)) >= s_.product_tol) {
        tab.emplace_back(a, Real(1 + a * a));
        a *= q;
      }
      return tab;
    };
    num_tab_ = build(Real(1), true);  // j >= 1; the j = 0 factor folds into 2 - s2
    den_tabs_.clear();
    for (const Complex& e : {t_.a, t_.b, t_.c, t_.d}) den_tabs_.push_back(build(e.re, false));
  }

  const std::vector<Node>& level(unsigned n) const {
    auto it = levels_.find(n);
    if (it != levels_.end()) return it->second;
    std::vector<Node> nodes(n / 2 + 1);
    const Real two_pi = 2 * const_pi();
    for (unsigned j = 0; j <= n / 2; ++j) {
      Real theta = two_pi * j / n;
      Real c = cos(theta), si = sin(theta);
      Complex x(c, si);
      Real s1 = 2 * c;
      Real s2 = 2 * (2 * c * c - 1);
      Real r(1);
      for (const auto& [A, C] : num_tab_) r *= (C - A * s2);
      Real den(1);
      for (const auto& tab : den_tabs_)
        for (const auto& [A, C] : tab) den *= (C - A * s1);
      Real base = r / den;
      Node nd;
      nd.x = x;
      nd.w_plus = (2 - s2) * base;
      Complex xbar = conj(x);
      nd.w_full = (Complex(1) - t_.a * xbar) * (Complex(1) - t_.b * xbar) * (Complex(1) - x * x);
      nd.w_full.re *= base;
      nd.w_full.im *= base;
      nodes[j] = std::move(nd);
    }
    return levels_.emplace(n, std::move(nodes)).first->second;
  }

  static bool real_coeffs(const Laurent<Complex>& f) {
    for (const auto& [e, c] : f.terms()) {
      (void)e;
      if (!c.is_real()) return false;
    }
    return true;
  }

  Complex integral(const Laurent<Complex>& f, const Laurent<Complex>& g, PairVariant v,
                   unsigned n) const {
    const std::vector<Node>& nodes = level(n);
    const bool mirror = real_coeffs(f) && real_coeffs(g);
    auto eval = [&](const Node& nd) -> Complex {
      Complex w = v == PairVariant::round ? Complex(nd.w_plus) : nd.w_full;
      return f.evaluate(nd.x) * g.evaluate(conj(nd.x)) * w;
    };
    Complex sum = eval(nodes.front()) + eval(nodes.back());
    for (unsigned j = 1; j < n / 2; ++j) {
      Complex fx = eval(nodes[j]);
      if (mirror) {
        sum.re += 2 * fx.re;
      } else {
        const Node& nd = nodes[j];
        Node m;
        m.x = conj(nd.x);
        m.w_plus = nd.w_plus;
        m.w_full = conj(nd.w_full);
        sum += fx + eval(m);
      }
    }
    Real invn = Real(1) / n;
    return Complex(sum.re * invn, sum.im * invn);
  }

  Params<Complex> t_;
  QuadSettings s_;
  std::vector<std::pair<Real, Real>> num_tab_;
  std::vector<std::vector<std::pair<Real, Real>>> den_tabs_;
  mutable std::map<unsigned, std::vector<Node>> levels_;
};

// ---------------------------------------------------------------------------
// Closed forms: the constant term (the Askey-Wilson integral) and the four
// diagonal-term formulas.
// ---------------------------------------------------------------------------

inline Complex constant_term_closed(const Params<Complex>& t, const Real& ptol) {
  const Complex abcd = t.a * t.b * t.c * t.d;
  Complex den = qpoch_inf(t.q, t.q, ptol);
  for (const Complex& v :
       {Complex(t.a * t.b), Complex(t.a * t.c), Complex(t.a * t.d), Complex(t.b * t.c),
        Complex(t.b * t.d), Complex(t.c * t.d)})
    den *= qpoch_inf(v, t.q, ptol);
  if (ScalarOps<Complex>::is_zero(den))
    throw Error(Err::DegenerateParameters, "vanishing factor in constant term");
  return Complex(2) * qpoch_inf(abcd, t.q, ptol) / den;
}

enum class DiagKind { sym, nonsym_pos, nonsym_neg, antisym };

inline Complex diagonal_closed(const Params<Complex>& t, long m, DiagKind kind, const Real& ptol) {
  using S = ScalarOps<Complex>;
  if ((kind == DiagKind::sym || kind == DiagKind::nonsym_pos) && m < 0)
    throw Error(Err::InvalidParameter, "diagonal term needs m >= 0");
  if ((kind == DiagKind::nonsym_neg || kind == DiagKind::antisym) && m < 1)
    throw Error(Err::InvalidParameter, "diagonal term needs m >= 1");

  const Complex qv = t.q;
  const Complex ab = t.a * t.b, ac = t.a * t.c, ad = t.a * t.d;
  const Complex bc = t.b * t.c, bd = t.b * t.d, cd = t.c * t.d;
  const Complex abcd = ab * cd;
  auto qp = [&](const Complex& z, long shift) {
    return qpoch_inf(Complex(z * pow_int(qv, shift)), qv, ptol);
  };

  Complex num, den;
  switch (kind) {
    case DiagKind::sym:
      num = Complex(2) * qp(abcd, 2 * m - 1) * qp(abcd, 2 * m);
      den = qp(Complex(1), m + 1) * qp(ab, m) * qp(ac, m) * qp(ad, m) * qp(bc, m) * qp(bd, m) *
            qp(cd, m) * qp(abcd, m - 1);
      break;
    case DiagKind::nonsym_pos:
      num = qp(abcd, 2 * m) * qp(abcd, 2 * m);
      den = qp(Complex(1), m + 1) * qp(ab, m + 1) * qp(ac, m) * qp(ad, m) * qp(bc, m) * qp(bd, m) *
            qp(cd, m) * qp(abcd, m);
      break;
    case DiagKind::nonsym_neg:
      num = qp(abcd, 2 * m - 1) * qp(abcd, 2 * m - 1);
      den = qp(Complex(1), m) * qp(ab, m) * qp(ac, m) * qp(ad, m) * qp(bc, m) * qp(bd, m) *
            qp(cd, m - 1) * qp(abcd, m - 1);
      break;
    case DiagKind::antisym:
      num = S::div(ab - Complex(1), ab) * qp(abcd, 2 * m - 1) * qp(abcd, 2 * m);
      den = qp(Complex(1), m) * qp(ab, m + 1) * qp(ac, m) * qp(ad, m) * qp(bc, m) * qp(bd, m) *
            qp(cd, m - 1) * qp(abcd, m);
      break;
  }
  if (S::is_zero(den)) throw Error(Err::DegenerateParameters, "vanishing diagonal denominator");
  return num / den;
}

// ---------------------------------------------------------------------------
// Residue weights on the spectrum sigma' = {gamma'_m = gamma_m^-1}:
//   w_+(gamma) = sgn(gamma) Res_{y=gamma} (Delta_+(y; t~; q)/y)
//   w(gamma)   = alpha(gamma; t~) w_+(gamma)
// computed by cancelling the unique vanishing denominator factor. The caller
// passes the dual parameter set t~ (whose a-parameter is k0 k1).
// ---------------------------------------------------------------------------

enum class ResidueVariant { w, w_plus };

namespace detail {

struct PoleFactor {
  int base;   // 0..3 for a,b,c,d
  int side;   // +1: factor (1 - e q^j y), -1: factor (1 - e q^j / y)
  long j;
};

// Scan all denominator factors of Delta_+ at y and require exactly one
// vanishing factor (relative threshold 2^-(bits/2)).
inline PoleFactor locate_vanishing_factor(const Params<Complex>& td, const Complex& y,
                                          const Real& ptol) {
  const Complex bases[4] = {td.a, td.b, td.c, td.d};
  const Real thresh = pow2(-static_cast<long>(float_precision_bits() / 2));
  std::vector<PoleFactor> found;
  for (int b = 0; b < 4; ++b) {
    for (int side : {+1, -1}) {
      Complex z = side > 0 ? Complex(bases[b] * y) : bases[b] / y;
      long j = 0;
      while (abs(z) >= ptol) {
        if (abs(Complex(1) - z) < thresh) found.push_back(PoleFactor{b, side, j});
        z *= td.q;
        ++j;
      }
    }
  }
  if (found.size() != 1)
    throw Error(Err::PoleIdentificationFailure,
                found.empty() ? "no vanishing factor at the spectral point"
                              : "multiple vanishing factors at the spectral point");
  return found.front();
}

}  // namespace detail

inline Complex residue_weight(const Params<Complex>& td, long m, ResidueVariant v,
                              const Real& ptol) {
  using S = ScalarOps<Complex>;
  const Complex atil = td.a;  // equals k0 k1 of the primal parameters
  const Complex gamma = pow_int(atil, -eps_sign(m)) * pow_int(td.q, -m);
  const Complex gi = S::inv(gamma);

  detail::PoleFactor pf = detail::locate_vanishing_factor(td, gamma, ptol);
  const int expected_base = 0;
  const int expected_side = m >= 0 ? +1 : -1;
  const long expected_j = m >= 0 ? m : -m;
  if (pf.base != expected_base || pf.side != expected_side || pf.j != expected_j)
    throw Error(Err::PoleIdentificationFailure, "vanishing factor at unexpected location");

  const Complex bases[4] = {td.a, td.b, td.c, td.d};
  Complex num = qpoch_inf(gamma * gamma, td.q, ptol) * qpoch_inf(gi * gi, td.q, ptol);
  Complex den(1);
  for (int b = 0; b < 4; ++b) {
    Complex zp = bases[b] * gamma;
    Complex zm = bases[b] * gi;
    den *= (pf.base == b && pf.side > 0) ? qpoch_inf_skip(zp, td.q, pf.j, ptol)
                                         : qpoch_inf(zp, td.q, ptol);
    den *= (pf.base == b && pf.side < 0) ? qpoch_inf_skip(zm, td.q, pf.j, ptol)
                                         : qpoch_inf(zm, td.q, ptol);
  }
  Complex reduced = num / den;

  // Residue contribution 1/F'(gamma) of the removed factor.
  Complex contrib;
  if (pf.side > 0) {
    contrib = -S::inv(Complex(atil * pow_int(td.q, pf.j)));  // F = 1 - atil q^j y
  } else {
    Complex eq = atil * pow_int(td.q, pf.j);  // F = 1 - atil q^j / y
    contrib = gamma * gamma / eq;
  }
  Complex wplus = Complex(eps_sign(m)) * reduced * gi * contrib;
  if (v == ResidueVariant::w_plus) return wplus;
  return weight_alpha(td, gamma) * wplus;
}

// Independent cross-check: small-circle contour integral around gamma'_m with
// radius half the distance to the nearest other pole.
inline Complex residue_weight_contour(const Params<Complex>& td, long m, ResidueVariant v,
                                      const QuadSettings& s) {
  using S = ScalarOps<Complex>;
  const Complex atil = td.a;
  const Complex gamma = pow_int(atil, -eps_sign(m)) * pow_int(td.q, -m);
  const Real ag = abs(gamma);

  Real rmin = ag / 2;  // guard against the accumulation point y = 0
  const Complex bases[4] = {td.a, td.b, td.c, td.d};
  const long jmax = (m >= 0 ? m : -m) + 64;
  for (int b = 0; b < 4; ++b) {
    Complex inner = bases[b];
    for (long j = 0; j <= jmax; ++j) {
      for (const Complex& cand : {inner, S::inv(inner)}) {
        Real dist = abs(cand - gamma);
        if (dist > ag * Real("1e-6") && dist / 2 < rmin) rmin = dist / 2;
      }
      inner *= td.q;
    }
  }

  const Real two_pi = 2 * const_pi();
  auto integral = [&](unsigned n) {
    Complex sum(0);
    for (unsigned j = 0; j < n; ++j) {
      Real theta = two_pi * j / n;
      Complex offset(rmin * cos(theta), rmin * sin(theta));
      Complex y = gamma + offset;
      Complex val = v == ResidueVariant::w ? weight_delta(td, y, s.product_tol)
                                           : weight_delta_plus(td, y, s.product_tol);
      sum += val / y * offset;
    }
    return Complex(sum.re / n, sum.im / n);
  };

  unsigned n = s.initial_nodes;
  Complex prev = integral(n);
  for (unsigned d = 1; d <= s.max_doublings; ++d) {
    n *= 2;
    Complex cur = integral(n);
    Real err = abs(cur - prev);
    if (err <= s.tol * abs(cur)) return Complex(eps_sign(m)) * cur;
    prev = cur;
  }
  throw Error(Err::QuadratureNotConverged, "contour oracle did not converge");
}

}  // namespace aw
