#pragma once

#include <map>

#include "aw/forms.hpp"
#include "aw/polys.hpp"

namespace aw {

// Finitely supported function on the spectrum sigma' = {gamma'_m = gamma_m^-1},
// stored by index m.
struct SpectralFn {
  std::map<long, Complex> values;

  bool has(long m) const { return values.count(m) != 0; }
  Complex at(long m) const {
    auto it = values.find(m);
    if (it == values.end()) throw Error(Err::InvalidParameter, "index outside stored support");
    return it->second;
  }
  bool w_invariant(const Real& atol) const {
    for (const auto& [m, v] : values) {
      auto it = values.find(-m);
      Complex other = it == values.end() ? Complex(0) : it->second;
      if (!approx_zero(v - other, atol)) return false;
    }
    return true;
  }
  Real sup_norm() const {
    Real s(0);
    for (const auto& [m, v] : values) {
      (void)m;
      Real a = abs(v);
      if (a > s) s = a;
    }
    return s;
  }
  SpectralFn pruned(const Real& cutoff) const {
    SpectralFn out;
    for (const auto& [m, v] : values)
      if (abs(v) > cutoff) out.values.emplace(m, v);
    return out;
  }
};

// Renormalized nonsymmetric polynomials at inverse parameters, E'_gamma'_m,
// built exactly and converted to the float backend.
inline Laurent<Complex> renorm_inverse_float(const Params<Rat>& t, long m) {
  return to_float(renormalize(t.inverse(), m, false).poly);
}

inline Laurent<Complex> renorm_float(const Params<Rat>& t, long m, bool symmetric) {
  return to_float(renormalize(t, m, symmetric).poly);
}

// ---------------------------------------------------------------------------
// Forward transform F(f)(gamma'_m) = <f, E'_gamma'_m> for |m| <= M. Support
// entries below prune_rel * max are dropped; pass 0 to keep everything.
// ---------------------------------------------------------------------------

inline SpectralFn forward(const Laurent<Complex>& f, const Params<Rat>& t, long M,
                          const PairEngine& eng, const Real& prune_rel = Real(0)) {
  if (M < 0) throw Error(Err::InvalidParameter, "support bound must be >= 0");
  SpectralFn out;
  for (long m = -M; m <= M; ++m)
    out.values.emplace(m, eng.pair(f, renorm_inverse_float(t, m), PairVariant::angle).value);
  if (prune_rel > 0) out = out.pruned(prune_rel * out.sup_norm());
  return out;
}

// Inverse transform G(g)(x) = sum_m g(gamma'_m) E_gamma_m(x) w(gamma'_m; t~).
inline Laurent<Complex> inverse_transform(const SpectralFn& g, const Params<Rat>& t,
                                          const Real& ptol) {
  Params<Complex> td = to_float(t.dual());
  Laurent<Complex> out;
  for (const auto& [m, v] : g.values) {
    Complex w = residue_weight(td, m, ResidueVariant::w, ptol);
    out += renorm_float(t, m, false).scaled(v * w);
  }
  return out;
}

// Inversion constant c = w(gamma'_0; t~) <1,1>.
inline Complex inversion_constant(const Params<Rat>& t, const PairEngine& eng) {
  Params<Complex> td = to_float(t.dual());
  Complex w0 = residue_weight(td, 0, ResidueVariant::w, eng.settings().product_tol);
  Complex ct = eng.pair(Laurent<Complex>::one(), Laurent<Complex>::one(), PairVariant::angle).value;
  return w0 * ct;
}

// Same constant through the symmetric route, c = (1+k1^2)^2/2 w_+(gamma'_0; t~) (1,1).
inline Complex inversion_constant_sym(const Params<Rat>& t, const PairEngine& eng) {
  Params<Complex> td = to_float(t.dual());
  Complex k1(t.k1);
  Complex factor = (Complex(1) + k1 * k1);
  factor = factor * factor / Complex(2);
  Complex w0 = residue_weight(td, 0, ResidueVariant::w_plus, eng.settings().product_tol);
  Complex ct = eng.pair(Laurent<Complex>::one(), Laurent<Complex>::one(), PairVariant::round).value;
  return factor * w0 * ct;
}

// ---------------------------------------------------------------------------
// Symmetric transform pair: F+(f)(gamma'_m) = (1+k1^2)/2 (f, E+_s(gamma_m)),
// G+(g) = (1+k1^2) sum_{m>=0} g(gamma'_m) E+_s(gamma_m) w_+(gamma'_m; t~).
// ---------------------------------------------------------------------------

inline SpectralFn forward_sym(const Laurent<Complex>& f, const Params<Rat>& t, long M,
                              const PairEngine& eng) {
  if (!is_symmetric(f)) throw Error(Err::NotSymmetric, "symmetric transform needs W-invariant input");
  Complex k1(t.k1);
  Complex half_factor = (Complex(1) + k1 * k1) / Complex(2);
  SpectralFn out;
  for (long m = 0; m <= M; ++m) {
    Complex v = half_factor * eng.pair(f, renorm_float(t, m, true), PairVariant::round).value;
    out.values.emplace(m, v);
    if (m > 0) out.values.emplace(-m, v);  // W-invariant extension to sigma'
  }
  return out;
}

inline Laurent<Complex> inverse_sym(const SpectralFn& g, const Params<Rat>& t, const Real& ptol,
                                    const Real& atol) {
  if (!g.w_invariant(atol)) throw Error(Err::NotSymmetric, "spectral function is not W-invariant");
  Params<Complex> td = to_float(t.dual());
  Complex k1(t.k1);
  Complex factor = Complex(1) + k1 * k1;
  Laurent<Complex> out;
  for (const auto& [m, v] : g.values) {
    if (m < 0) continue;
    Complex wp = residue_weight(td, m, ResidueVariant::w_plus, ptol);
    out += renorm_float(t, m, true).scaled(factor * v * wp);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Spectral-side generators (the images of T1, T1v, Y under the duality
// isomorphism): z~ multiplies by gamma, and
//   (T1~ g)(gamma) = k1 g + phi1~(gamma) (g(s1 gamma) - g(gamma))
//   (T0~ g)(gamma) = u1 g + phi0~(gamma) (g(s0 gamma) - g(gamma))
// with s1: m -> -m and s0: m -> -m-1 on indices. Indices whose reflected
// partner lies outside the stored support are omitted from the result.
// ---------------------------------------------------------------------------

inline Complex spectral_gamma(const Params<Rat>& t, long m) {
  return ScalarOps<Complex>::inv(Complex(t.gamma(m)));
}

enum class SpectralOp { mult_z, T1tilde, T0tilde };

inline SpectralFn apply_spectral(SpectralOp op, const SpectralFn& g, const Params<Rat>& t) {
  using S = ScalarOps<Complex>;
  Params<Complex> tf = to_float(t);
  SpectralFn out;
  for (const auto& [m, v] : g.values) {
    Complex gamma = spectral_gamma(t, m);
    if (op == SpectralOp::mult_z) {
      out.values.emplace(m, gamma * v);
      continue;
    }
    long reflected = op == SpectralOp::T1tilde ? -m : -m - 1;
    if (!g.has(reflected)) continue;  // outside stored support: inapplicable
    Complex phi, base;
    if (op == SpectralOp::T1tilde) {
      Complex num = (Complex(1) - tf.k0 * tf.k1 * gamma) *
                    (Complex(1) + S::div(tf.k1, tf.k0) * gamma);
      phi = S::div(num, Complex(1) - gamma * gamma) * S::inv(tf.k1);
      base = tf.k1;
    } else {
      Complex gi = S::inv(gamma);
      Complex num = (Complex(1) - tf.u0 * tf.u1 * tf.p * gi) *
                    (Complex(1) + S::div(tf.u1, tf.u0) * tf.p * gi);
      phi = S::div(num, Complex(1) - tf.q * gi * gi) * S::inv(tf.u1);
      base = tf.u1;
    }
    out.values.emplace(m, base * v + phi * (g.at(reflected) - v));
  }
  return out;
}

}  // namespace aw
