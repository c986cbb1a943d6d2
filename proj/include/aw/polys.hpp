#pragma once

#include <string>
#include <vector>

#include "aw/operators.hpp"

namespace aw {

enum class PolyKind { nonsym, sym, antisym, renorm_nonsym, renorm_sym };
enum class Method { triangular, rodrigues, series, symmetrized };

inline const char* poly_kind_name(PolyKind k) {
  switch (k) {
    case PolyKind::nonsym: return "nonsym";
    case PolyKind::sym: return "sym";
    case PolyKind::antisym: return "antisym";
    case PolyKind::renorm_nonsym: return "renorm_nonsym";
    case PolyKind::renorm_sym: return "renorm_sym";
  }
  return "?";
}

inline const char* method_name(Method m) {
  switch (m) {
    case Method::triangular: return "triangular";
    case Method::rodrigues: return "rodrigues";
    case Method::series: return "series";
    case Method::symmetrized: return "symmetrized";
  }
  return "?";
}

template <class K>
struct AWPoly {
  Laurent<K> poly;
  PolyKind kind = PolyKind::nonsym;
  long m = 0;
  Method method = Method::triangular;
};

// ---------------------------------------------------------------------------
// Triangular construction: Y is triangular on the monomial basis ordered by
// order_rank with diagonal gamma_m, so the unique monic eigenvector is found
// by back-substitution.
// ---------------------------------------------------------------------------

template <class K>
AWPoly<K> nonsym_triangular(const Params<K>& t, long m) {
  using S = ScalarOps<K>;
  const long R = order_rank(m);
  const K gm = t.gamma(m);

  // Columns of Y on the ordered monomial basis up to rank R.
  std::vector<Laurent<K>> col(static_cast<std::size_t>(R) + 1);
  for (long s = 0; s <= R; ++s) {
    col[static_cast<std::size_t>(s)] =
        apply_named(NamedOp::Y, Laurent<K>::monomial(exponent_at_rank(s)), t);
    if (col[static_cast<std::size_t>(s)].max_rank() > s)
      throw Error(Err::DegenerateSpectrum, "triangularity violated");
  }
  for (long r = 0; r < R; ++r) {
    K diag = t.gamma(exponent_at_rank(r));
    if (diag == gm) throw Error(Err::DegenerateSpectrum, "repeated eigenvalue in window");
  }

  std::vector<K> v(static_cast<std::size_t>(R) + 1, S::zero());
  v[static_cast<std::size_t>(R)] = S::one();
  for (long r = R - 1; r >= 0; --r) {
    K acc = S::zero();
    const long er = exponent_at_rank(r);
    for (long s = r + 1; s <= R; ++s) {
      const K& vs = v[static_cast<std::size_t>(s)];
      if (S::is_zero(vs)) continue;
      acc = acc + col[static_cast<std::size_t>(s)].coeff(er) * vs;
    }
    v[static_cast<std::size_t>(r)] = S::div(acc, gm - t.gamma(er));
  }

  Laurent<K> P;
  for (long r = 0; r <= R; ++r) P.add_term(exponent_at_rank(r), v[static_cast<std::size_t>(r)]);
  return AWPoly<K>{P, PolyKind::nonsym, m, Method::triangular};
}

// ---------------------------------------------------------------------------
// Rodrigues construction: (S1 S0)^m (1) = d_m P_m for m >= 0 and
// S0 (S1 S0)^(m-1) (1) = d_-m P_-m for m >= 1, with
//   d_m  = q^(-(m+1)m) (k0 k1)^(-2m) (q k0^2 k1^2; q)_2m
//   d_-m = q^(-m^2) k0^(1-2m) k1^(-2m) (q k0^2 k1^2; q)_(2m-1)
// ---------------------------------------------------------------------------

template <class K>
K rodrigues_dm(const Params<K>& t, long m) {
  K kk2 = t.k0 * t.k0 * t.k1 * t.k1;
  K arg = t.q * kk2;
  if (m >= 0)
    return pow_int(t.q, -(m + 1) * m) * pow_int(t.k0, -2 * m) * pow_int(t.k1, -2 * m) *
           qpoch(arg, t.q, 2 * m);
  long mm = -m;
  return pow_int(t.q, -mm * mm) * pow_int(t.k0, 1 - 2 * mm) * pow_int(t.k1, -2 * mm) *
         qpoch(arg, t.q, 2 * mm - 1);
}

template <class K>
AWPoly<K> nonsym_rodrigues(const Params<K>& t, long m) {
  using S = ScalarOps<K>;
  K dm = rodrigues_dm(t, m);
  if (S::is_zero(dm)) throw Error(Err::DegenerateParameters, "vanishing Rodrigues constant");

  const OpExpr<K> S0 = named_expr(NamedOp::S0, t);
  const OpExpr<K> S1 = named_expr(NamedOp::S1, t);
  Laurent<K> f = Laurent<K>::one();
  const long steps = m >= 0 ? m : -m;
  for (long i = 0; i < steps; ++i) {
    f = apply_expr(S0, f, t);
    if (m < 0 && i == steps - 1) break;
    f = apply_expr(S1, f, t);
  }
  return AWPoly<K>{f.scaled(S::inv(dm)), PolyKind::nonsym, m, Method::rodrigues};
}

// ---------------------------------------------------------------------------
// Symmetrization: P_m^+ = P_m + coef * P_-m and P_m^- = P_m - coef' * P_-m
// with the explicit rational coefficients in gamma_m.
// ---------------------------------------------------------------------------

template <class K>
AWPoly<K> symmetrize(const Params<K>& t, long m, int sign) {
  using S = ScalarOps<K>;
  if (sign != 1 && sign != -1) throw Error(Err::InvalidParameter, "sign must be +-1");
  if (m < 0) throw Error(Err::InvalidParameter, "symmetrize needs m >= 0");
  if (sign == -1 && m == 0) throw Error(Err::EmptyIsotype, "no anti-symmetric component at m = 0");
  if (m == 0)
    return AWPoly<K>{Laurent<K>::one(), PolyKind::sym, 0, Method::symmetrized};

  const K one = S::one();
  const K kratio = S::div(t.k0, t.k1);
  const K kk_inv = S::inv(t.k0 * t.k1);
  K g = sign == 1 ? t.gamma(m) : S::inv(t.gamma(m));
  K den = one - g * g;
  if (S::is_zero(den)) throw Error(Err::DegenerateParameters, "gamma_m^2 = 1");
  K coef = S::div((one + kratio * g) * (one - kk_inv * g), den);

  Laurent<K> P = nonsym_triangular(t, m).poly;
  Laurent<K> Pn = nonsym_triangular(t, -m).poly;
  if (sign == 1)
    return AWPoly<K>{P + Pn.scaled(coef), PolyKind::sym, m, Method::symmetrized};
  return AWPoly<K>{P - Pn.scaled(coef), PolyKind::antisym, m, Method::symmetrized};
}

// ---------------------------------------------------------------------------
// Series constructions: the terminating balanced 4phi3 for the monic
// symmetric polynomial, and the two-term combinations for P_m, P_-m.
// ---------------------------------------------------------------------------

// Monic symmetric Askey-Wilson polynomial directly from parameter values
// (a, b, c, d, q); exact in either backend.
template <class K>
Laurent<K> sym_series_abcd(const K& a, const K& b, const K& c, const K& d, const K& q, long m) {
  using S = ScalarOps<K>;
  if (m < 0) throw Error(Err::InvalidParameter, "sym series needs m >= 0");
  const K one = S::one();
  const K abcd = a * b * c * d;

  K pref_den_poch = qpoch(K(abcd * pow_int(q, m - 1)), q, m);
  K pref_num = qpoch(a * b, q, m) * qpoch(a * c, q, m) * qpoch(a * d, q, m);
  if (S::is_zero(pref_den_poch) || S::is_zero(pref_num))
    throw Error(Err::DegenerateParameters, "vanishing q-factorial in series normalization");
  K pref = S::div(pref_num, pow_int(a, m) * pref_den_poch);

  Laurent<K> sum;
  Laurent<K> axpair = Laurent<K>::one();  // prod_{i<j} (1 - a q^i x)(1 - a q^i / x)
  K cj = one;                             // series coefficient at index j
  K qj = one;                             // q^j
  for (long j = 0; j <= m; ++j) {
    sum += axpair.scaled(cj);
    if (j == m) break;
    // update running term coefficient to index j+1
    K num = (one - pow_int(q, -m) * qj) * (one - abcd * pow_int(q, m - 1) * qj) * q;
    K den = (one - a * b * qj) * (one - a * c * qj) * (one - a * d * qj) * (one - q * qj);
    if (S::is_zero(den)) throw Error(Err::DegenerateParameters, "vanishing q-factorial in series");
    cj = cj * S::div(num, den);
    // (1 - aq^j x)(1 - aq^j / x) = 1 + (aq^j)^2 - aq^j (x + 1/x)
    K aq = a * qj;
    Laurent<K> lin;
    lin.set(0, one + aq * aq);
    lin.set(1, -aq);
    lin.set(-1, -aq);
    axpair = axpair * lin;
    qj = qj * q;
  }
  return sum.scaled(pref);
}

template <class K>
AWPoly<K> sym_series(const Params<K>& t, long m) {
  Laurent<K> P = sym_series_abcd(t.a, t.b, t.c, t.d, t.q, m);
  if constexpr (ScalarOps<K>::exact) {
    auto [e, c] = P.leading_term();
    if (e != m || c != ScalarOps<K>::one())
      throw Error(Err::DegenerateParameters, "series normalization is not monic");
  }
  return AWPoly<K>{P, PolyKind::sym, m, Method::series};
}

template <class K>
AWPoly<K> nonsym_series(const Params<K>& t, long m) {
  using S = ScalarOps<K>;
  const K one = S::one();
  const K abcd = t.a * t.b * t.c * t.d;
  const long n = m >= 0 ? m : -m;

  // (1 - c/x)(1 - d/x) x = x - (c + d) + cd/x
  Laurent<K> cdfac;
  cdfac.set(1, one);
  cdfac.set(0, -(t.c + t.d));
  cdfac.set(-1, t.c * t.d);

  Laurent<K> lead = sym_series_abcd(t.a, t.b, t.c, t.d, t.q, n);
  Laurent<K> small;  // P_{n-1}^+(x/p; pa, pb, pc, pd) when n >= 1
  if (n >= 1) {
    K pa = t.p * t.a, pb = t.p * t.b, pc = t.p * t.c, pd = t.p * t.d;
    small = sym_series_abcd(pa, pb, pc, pd, t.q, n - 1).arg_scaled(S::inv(t.p));
  }

  Laurent<K> P;
  if (m >= 0) {
    K den = one - abcd * pow_int(t.q, 2 * m - 1);
    if (S::is_zero(den)) throw Error(Err::DegenerateParameters, "vanishing series denominator");
    K c1 = S::div(pow_int(t.q, m) * (one - abcd * pow_int(t.q, m - 1)), den);
    P = lead.scaled(c1);
    if (m >= 1) {
      K c2 = S::div(pow_int(t.p, m - 1) * (one - pow_int(t.q, m)), den);
      P += (cdfac * small).scaled(c2);
    }
  } else {
    K den = one - t.c * t.d * pow_int(t.q, n - 1);
    if (S::is_zero(den)) throw Error(Err::DegenerateParameters, "vanishing series denominator");
    P = lead.scaled(S::inv(den));
    P -= (cdfac * small).scaled(S::div(pow_int(t.p, n - 1), den));
  }
  return AWPoly<K>{P, PolyKind::nonsym, m, Method::series};
}

// ---------------------------------------------------------------------------
// T1 action on the nonsymmetric family: T1 P_m = alpha_m P_m + beta_m P_-m.
// ---------------------------------------------------------------------------

template <class K>
std::pair<K, K> t1_action_constants(const Params<K>& t, long m) {
  using S = ScalarOps<K>;
  if (m == 0) throw Error(Err::InvalidParameter, "constants need m != 0");
  const K one = S::one();
  K g = t.gamma(m);
  K g2 = g * g;
  if (g2 == one) throw Error(Err::DegenerateParameters, "gamma_m^2 = 1");
  K alpha = S::div((S::inv(t.k1) - t.k1) * g2 + (S::inv(t.k0) - t.k0) * g, one - g2);
  K beta;
  if (m < 0) {
    beta = t.k1;
  } else {
    const K kratio = S::div(t.k0, t.k1);
    const K kk_inv = S::inv(t.k0 * t.k1);
    beta = t.k1;
    for (int xi : {1, -1}) {
      K gx = pow_int(g, xi);
      K den = one - gx * gx;
      if (S::is_zero(den)) throw Error(Err::DegenerateParameters, "gamma_m^2 = 1");
      beta = beta * S::div((one + kratio * gx) * (one - kk_inv * gx), den);
    }
  }
  return {alpha, beta};
}

// ---------------------------------------------------------------------------
// Evaluation map Ev(f) = f(a^-1) and its closed forms.
// ---------------------------------------------------------------------------

template <class K>
K ev_value(const Laurent<K>& f, const Params<K>& t) {
  return f.evaluate(ScalarOps<K>::inv(t.a));
}

enum class EvKind { nonsym, sym };

template <class K>
K ev_closed(const Params<K>& t, long m, EvKind kind) {
  using S = ScalarOps<K>;
  const K one = S::one();
  const K abcd = t.a * t.b * t.c * t.d;
  const long n = m >= 0 ? m : -m;

  K num, den;
  if (kind == EvKind::sym) {
    if (m < 0) throw Error(Err::InvalidParameter, "symmetric evaluation needs m >= 0");
    num = qpoch(t.a * t.b, t.q, m) * qpoch(t.a * t.c, t.q, m) * qpoch(t.a * t.d, t.q, m);
    den = qpoch(K(abcd * pow_int(t.q, m - 1)), t.q, m);
  } else if (m >= 0) {
    num = qpoch(t.q * t.a * t.b, t.q, m) * qpoch(t.a * t.c, t.q, m) * qpoch(t.a * t.d, t.q, m);
    den = qpoch(K(abcd * pow_int(t.q, m)), t.q, m);
  } else {
    num = qpoch(t.a * t.b, t.q, n) * qpoch(t.a * t.c, t.q, n) * qpoch(t.a * t.d, t.q, n);
    den = qpoch(K(abcd * pow_int(t.q, n - 1)), t.q, n) * (one - S::div(one, t.a * t.b));
  }
  if (S::is_zero(den)) throw Error(Err::DegenerateParameters, "vanishing evaluation denominator");
  return S::div(pow_int(t.a, -n) * num, den);
}

// ---------------------------------------------------------------------------
// Renormalized polynomials: E_gamma_m takes the value one at x = a^-1,
// E+_s(gamma_m) takes the value one at x = a; C+ E = E+.
// ---------------------------------------------------------------------------

template <class K>
AWPoly<K> renormalize(const Params<K>& t, long m, bool symmetric) {
  using S = ScalarOps<K>;
  if (symmetric) {
    if (m < 0) throw Error(Err::InvalidParameter, "symmetric renormalization needs m >= 0");
    AWPoly<K> P = symmetrize(t, m, +1);
    K v = P.poly.evaluate(t.a);
    if (S::is_zero(v)) throw Error(Err::NormalizationFailure, "P_m^+ vanishes at x0");
    return AWPoly<K>{P.poly.scaled(S::inv(v)), PolyKind::renorm_sym, m, Method::symmetrized};
  }
  AWPoly<K> P = nonsym_triangular(t, m);
  K v = ev_value(P.poly, t);
  if (S::is_zero(v)) throw Error(Err::NormalizationFailure, "P_m vanishes at x0^-1");
  return AWPoly<K>{P.poly.scaled(S::inv(v)), PolyKind::renorm_nonsym, m, Method::triangular};
}

}  // namespace aw
