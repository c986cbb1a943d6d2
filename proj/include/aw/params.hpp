#pragma once

#include <string>
#include <vector>

#include "aw/scalar.hpp"

namespace aw {

inline int eps_sign(long m) { return m >= 0 ? 1 : -1; }

// Multiplicity data (p, k0, k1, u0, u1) with the derived Askey-Wilson
// parameters q = p^2, a = k1*u1, b = -k1/u1, c = p*k0*u0, d = -p*k0/u0.
// Keeping p (rather than q) as the base parameter keeps c, d and the
// compatibility constant p^-1 inside the scalar field.
template <class K>
struct Params {
  K p, k0, k1, u0, u1;
  K q, a, b, c, d;

  static Params make(const K& p, const K& k0, const K& k1, const K& u0, const K& u1) {
    using S = ScalarOps<K>;
    if (S::is_zero(p) || S::is_zero(k0) || S::is_zero(k1) || S::is_zero(u0) || S::is_zero(u1))
      throw Error(Err::InvalidParameter, "parameters must be nonzero");
    Params t;
    t.p = p;
    t.k0 = k0;
    t.k1 = k1;
    t.u0 = u0;
    t.u1 = u1;
    t.q = p * p;
    if (t.q == S::one()) throw Error(Err::InvalidParameter, "q = p^2 must differ from 1");
    t.a = k1 * u1;
    t.b = -S::div(k1, u1);
    t.c = p * k0 * u0;
    t.d = -S::div(p * k0, u0);
    return t;
  }

  // Interchange k0 and u1.
  Params dual() const { return make(p, u1, k1, u0, k0); }

  // Entrywise reciprocal (so q -> 1/q).
  Params inverse() const {
    using S = ScalarOps<K>;
    return make(S::inv(p), S::inv(k0), S::inv(k1), S::inv(u0), S::inv(u1));
  }

  // (k0, k1, u0, u1) -> (k0, s*k1, u0, u1); s = q gives the shift-operator
  // companion family with (a, b, c, d) -> (qa, qb, c, d).
  Params with_k1_scaled(const K& s) const { return make(p, k0, k1 * s, u0, u1); }

  // Realizes (a, b, c, d) -> (q^2k a, q^2l b, q^2m c, q^2n d).
  Params geometric_shift(long k, long l, long m, long n) const {
    return make(p, k0 * pow_int(q, m + n), k1 * pow_int(q, k + l), u0 * pow_int(q, m - n),
                u1 * pow_int(q, k - l));
  }

  K gamma(long m) const {
    K kk = k0 * k1;
    return pow_int(kk, eps_sign(m)) * pow_int(q, m);
  }
  K xval(long m) const {
    K ku = k1 * u1;
    return pow_int(ku, eps_sign(m)) * pow_int(q, m);
  }
};

template <class K>
struct SpectralPoint {
  long m;
  K gamma;
  K xval;
  int eps;
};

template <class K>
SpectralPoint<K> spectral_point(const Params<K>& t, long m) {
  return SpectralPoint<K>{m, t.gamma(m), t.xval(m), eps_sign(m)};
}

inline Params<Complex> to_float(const Params<Rat>& t) {
  return Params<Complex>::make(Complex(t.p), Complex(t.k0), Complex(t.k1), Complex(t.u0),
                               Complex(t.u1));
}

// ---------------------------------------------------------------------------
// Genericity scan: |q| != 1; k0^2, k1^2, u1^2 not in +-q^j for |j| <= N;
// e*f not in q^j for all ordered pairs e, f in {a,b,c,d} (including e = f)
// and |j| <= N. Violations are returned as data.
// ---------------------------------------------------------------------------

inline std::vector<std::string> check_genericity(const Params<Rat>& t, int N) {
  std::vector<std::string> out;
  if (t.q == 1 || t.q == -1) out.push_back("|q| = 1");

  std::vector<Rat> qpow(static_cast<std::size_t>(2 * N + 1));
  for (int j = -N; j <= N; ++j) qpow[static_cast<std::size_t>(j + N)] = pow_int(t.q, j);

  const std::pair<const char*, Rat> squares[] = {
      {"k0^2", t.k0 * t.k0}, {"k1^2", t.k1 * t.k1}, {"u1^2", t.u1 * t.u1}};
  for (const auto& [name, v] : squares) {
    for (int j = -N; j <= N; ++j) {
      const Rat& qj = qpow[static_cast<std::size_t>(j + N)];
      if (v == qj) out.push_back(std::string(name) + " = q^" + std::to_string(j));
      if (v == -qj) out.push_back(std::string(name) + " = -q^" + std::to_string(j));
    }
  }

  // For e != f every exponent in the window is scanned. For e = f only
  // j <= 0 is damaging: a square coincidence e^2 = q^j collides the pole
  // families e q^k and e^-1 q^-k' exactly when j = -(k + k') <= 0, while
  // positive j never produces a collision (the canonical fixture itself
  // has a^2 = q).
  const std::pair<const char*, Rat> abcd[] = {{"a", t.a}, {"b", t.b}, {"c", t.c}, {"d", t.d}};
  for (int ei = 0; ei < 4; ++ei)
    for (int fi = 0; fi < 4; ++fi) {
      Rat prod = abcd[ei].second * abcd[fi].second;
      const int hi = ei == fi ? 0 : N;
      for (int j = -N; j <= hi; ++j)
        if (prod == qpow[static_cast<std::size_t>(j + N)])
          out.push_back(std::string(abcd[ei].first) + "*" + abcd[fi].first + " = q^" +
                        std::to_string(j));
    }
  return out;
}

// ---------------------------------------------------------------------------
// q-shifted factorials
// ---------------------------------------------------------------------------

// (z; q)_n = prod_{j=0}^{n-1} (1 - z q^j), exact in either backend.
// The first argument deduces separately so that unevaluated boost expression
// templates are materialized into K.
template <class K, class Z>
K qpoch(const Z& z, const K& q, long n) {
  if (n < 0) throw Error(Err::InvalidParameter, "qpoch requires n >= 0");
  K acc = ScalarOps<K>::one();
  K zq(z);
  for (long j = 0; j < n; ++j) {
    acc = acc * (ScalarOps<K>::one() - zq);
    zq = zq * q;
  }
  return acc;
}

// (z; q)_infinity truncated at the smallest J with |z| |q|^J < tol.
inline Complex qpoch_inf(const Complex& z, const Complex& q, const Real& tol) {
  if (tol <= 0) throw Error(Err::InvalidParameter, "qpoch_inf requires tol > 0");
  if (abs(q) >= 1) throw Error(Err::DivergentProduct, "infinite product requires |q| < 1");
  Complex acc(1);
  Complex zq = z;
  while (abs(zq) >= tol) {
    acc *= (Complex(1) - zq);
    zq *= q;
  }
  return acc;
}

inline Rat qpoch_inf(const Rat&, const Rat&, const Real&) {
  throw Error(Err::BackendUnsupported, "infinite q-shifted factorial on the exact backend");
}

// (z; q)_infinity with the factor at index `skip` omitted (for residues of the
// weight function at a simple pole).
inline Complex qpoch_inf_skip(const Complex& z, const Complex& q, long skip, const Real& tol) {
  if (tol <= 0) throw Error(Err::InvalidParameter, "qpoch_inf_skip requires tol > 0");
  if (abs(q) >= 1) throw Error(Err::DivergentProduct, "infinite product requires |q| < 1");
  Complex acc(1);
  Complex zq = z;
  long j = 0;
  while (abs(zq) >= tol || j <= skip) {
    if (j != skip) acc *= (Complex(1) - zq);
    zq *= q;
    ++j;
  }
  return acc;
}

}  // namespace aw
