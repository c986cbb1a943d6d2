#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aw/forms.hpp"
#include "aw/json_io.hpp"
#include "aw/polys.hpp"
#include "aw/report.hpp"
#include "aw/transform.hpp"

namespace aw {

// Deterministic generator for random test polynomials (integer coefficients).
class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
  }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Laurent<Rat> poly(long max_deg) {
    Laurent<Rat> f;
    for (long e = -max_deg; e <= max_deg; ++e) f.add_term(e, Rat(range(-9, 9)));
    if (f.is_zero()) f.add_term(0, Rat(1));
    return f;
  }

 private:
  std::uint64_t state_;
};

namespace detail {

inline double rel_diff(const Complex& got, const Complex& want) {
  Real denom = abs(want);
  if (denom.is_zero()) denom = 1;
  return static_cast<double>(Real(abs(got - want) / denom));
}

inline double scaled_diff(const Complex& lhs, const Complex& rhs) {
  Real scale(1);
  Real al = abs(lhs), ar = abs(rhs);
  if (al > scale) scale = al;
  if (ar > scale) scale = ar;
  return static_cast<double>(Real(abs(lhs - rhs) / scale));
}

}  // namespace detail

// ===========================================================================
// Hecke relation suite (exact, on monomials |m| <= M)
// ===========================================================================

inline void hecke_suite(Report& rep, const Params<Rat>& t, long M) {
  using L = Laurent<Rat>;
  using S = ScalarOps<Rat>;
  const Rat one(1);

  auto for_monomials = [&](auto&& body) {
    for (long m = -M; m <= M; ++m)
      if (!body(L::monomial(m))) return false;
    return true;
  };

  run_check(rep, "hecke.quadratic_T0", "Hecke quadratic relation for T0", true, [&](CheckRecord&) {
    return for_monomials([&](const L& f) {
      L g = apply_T0(f, t) - f.scaled(t.k0);
      return apply_T0(g, t) + g.scaled(S::inv(t.k0)) == L::zero();
    });
  });
  run_check(rep, "hecke.quadratic_T1", "Hecke quadratic relation for T1", true, [&](CheckRecord&) {
    return for_monomials([&](const L& f) {
      L g = apply_T1(f, t) - f.scaled(t.k1);
      return apply_T1(g, t) + g.scaled(S::inv(t.k1)) == L::zero();
    });
  });
  run_check(rep, "hecke.quadratic_T0v", "Hecke quadratic relation for T0v", true, [&](CheckRecord&) {
    return for_monomials([&](const L& f) {
      L g = apply_T0v(f, t) - f.scaled(t.u0);
      return apply_T0v(g, t) + g.scaled(S::inv(t.u0)) == L::zero();
    });
  });
  run_check(rep, "hecke.quadratic_T1v", "Hecke quadratic relation for T1v", true, [&](CheckRecord&) {
    return for_monomials([&](const L& f) {
      L g = apply_T1v(f, t) - f.scaled(t.u1);
      return apply_T1v(g, t) + g.scaled(S::inv(t.u1)) == L::zero();
    });
  });

  run_check(rep, "hecke.inverses", "T_i T_i^-1 = id", true, [&](CheckRecord&) {
    return for_monomials([&](const L& f) {
      return apply_T0(apply_T0_inv(f, t), t) == f && apply_T1(apply_T1_inv(f, t), t) == f &&
             apply_T0v(apply_T0v_inv(f, t), t) == f && apply_T1v(apply_T1v_inv(f, t), t) == f;
    });
  });

  // Lusztig commutation for f(Y) = Y^{+-1}:
  //   T1 Y - Y^-1 T1 = (k1 - 1/k1) Y + (k0 - 1/k0)
  //   T1 Y^-1 - Y T1 = -(k1 - 1/k1) Y - (k0 - 1/k0)
  run_check(rep, "hecke.lusztig_commutation", "Lusztig commutation with Y^+-1", true,
            [&](CheckRecord&) {
              const Rat ck1 = t.k1 - S::inv(t.k1);
              const Rat ck0 = t.k0 - S::inv(t.k0);
              return for_monomials([&](const L& f) {
                L Yf = apply_named(NamedOp::Y, f, t);
                L Yif = apply_named(NamedOp::Yinv, f, t);
                L T1f = apply_T1(f, t);
                L rhs = Yf.scaled(ck1) + f.scaled(ck0);
                L lhs1 = apply_T1(Yf, t) - apply_named(NamedOp::Yinv, T1f, t);
                L lhs2 = apply_T1(Yif, t) - apply_named(NamedOp::Y, T1f, t);
                return lhs1 == rhs && lhs2 == -rhs;
              });
            });

  run_check(rep, "hecke.compatibility", "T1v T1 T0 T0v = p^-1", true, [&](CheckRecord&) {
    return for_monomials([&](const L& f) {
      L w = apply_T1v(apply_T1(apply_T0(apply_T0v(f, t), t), t), t);
      return w == f.scaled(S::inv(t.p));
    });
  });

  // Cross relations f(z) T_i - T_i (s_i f)(z) for f = x^{+-1}.
  run_check(rep, "hecke.cross_commutation", "multiplication/T_i cross relation", true,
            [&](CheckRecord&) {
              for (int i : {0, 1}) {
                const Rat ck = (i == 0 ? t.k0 - S::inv(t.k0) : t.k1 - S::inv(t.k1));
                const Rat cu = (i == 0 ? t.u0 - S::inv(t.u0) : t.u1 - S::inv(t.u1));
                for (long fe : {1L, -1L}) {
                  L f = L::monomial(fe);
                  L sif = i == 0 ? act_s0(f, t.q) : act_s1(f);
                  // x^{a_i^vee} and x^{a_i} as Laurent polynomials
                  L xav = i == 0 ? L::monomial(-1, t.p) : L::monomial(1);
                  L xa = i == 0 ? L::monomial(-2, t.q) : L::monomial(2);
                  L mult = (L::one().scaled(ck) + xav.scaled(cu)) *
                           exact_div(f - sif, L::one() - xa);
                  bool ok = for_monomials([&](const L& g) {
                    L Tg = i == 0 ? apply_T0(g, t) : apply_T1(g, t);
                    L Tsg = i == 0 ? apply_T0(sif * g, t) : apply_T1(sif * g, t);
                    return f * Tg - Tsg == mult * g;
                  });
                  if (!ok) return false;
                }
              }
              return true;
            });

  // Squared intertwiners as polynomials in Y.
  run_check(rep, "hecke.squared_S1", "S1^2 as a polynomial in Y", true, [&](CheckRecord&) {
    const OpExpr<Rat> S1 = named_expr(NamedOp::S1, t);
    const Rat c1 = S::div(one, t.k0 * t.k1);   // k0^-1 k1^-1
    const Rat c2 = S::div(t.k0, t.k1);         // k0 k1^-1
    return for_monomials([&](const L& f) {
      L lhs = apply_expr(S1, apply_expr(S1, f, t), t);
      L r = f;
      for (int xi : {+1, -1}) {
        NamedOp Ypow = xi > 0 ? NamedOp::Y : NamedOp::Yinv;
        r = r - apply_named(Ypow, r, t).scaled(c1);
        L tmp = r + apply_named(Ypow, r, t).scaled(c2);
        r = tmp;
      }
      return lhs == r.scaled(t.k1 * t.k1);
    });
  });
  run_check(rep, "hecke.squared_S0", "S0^2 as a polynomial in Y", true, [&](CheckRecord&) {
    const OpExpr<Rat> S0 = named_expr(NamedOp::S0, t);
    const Rat cu1 = S::div(one, t.u0 * t.u1);  // u0^-1 u1^-1
    const Rat cu2 = S::div(t.u0, t.u1);        // u0 u1^-1
    return for_monomials([&](const L& f) {
      L lhs = apply_expr(S0, apply_expr(S0, f, t), t);
      L r = f;
      for (int xi : {+1, -1}) {
        NamedOp Ypow = xi > 0 ? NamedOp::Y : NamedOp::Yinv;
        Rat ph = xi > 0 ? t.p : S::inv(t.p);  // q^{xi/2}
        r = r - apply_named(Ypow, r, t).scaled(cu1 * ph);
        L tmp = r + apply_named(Ypow, r, t).scaled(cu2 * ph);
        r = tmp;
      }
      return lhs == r.scaled(S::div(t.u1 * t.u1, t.q));
    });
  });

  // Intertwining laws with f(Y) = Y^{+-1}.
  run_check(rep, "hecke.intertwine_S1", "f(Y) S1 = S1 f(Y^-1)", true, [&](CheckRecord&) {
    const OpExpr<Rat> S1 = named_expr(NamedOp::S1, t);
    return for_monomials([&](const L& f) {
      L Sf = apply_expr(S1, f, t);
      return apply_named(NamedOp::Y, Sf, t) == apply_expr(S1, apply_named(NamedOp::Yinv, f, t), t) &&
             apply_named(NamedOp::Yinv, Sf, t) == apply_expr(S1, apply_named(NamedOp::Y, f, t), t);
    });
  });
  run_check(rep, "hecke.intertwine_S0", "g(Y) S0 = S0 g(q^-1 Y^-1)", true, [&](CheckRecord&) {
    const OpExpr<Rat> S0 = named_expr(NamedOp::S0, t);
    return for_monomials([&](const L& f) {
      L Sf = apply_expr(S0, f, t);
      L lhs1 = apply_named(NamedOp::Y, Sf, t);
      L rhs1 = apply_expr(S0, apply_named(NamedOp::Yinv, f, t), t).scaled(S::inv(t.q));
      L lhs2 = apply_named(NamedOp::Yinv, Sf, t);
      L rhs2 = apply_expr(S0, apply_named(NamedOp::Y, f, t), t).scaled(t.q);
      return lhs1 == rhs1 && lhs2 == rhs2;
    });
  });

  run_check(rep, "hecke.idempotents", "C+- are orthogonal idempotents summing to 1", true,
            [&](CheckRecord&) {
              return for_monomials([&](const L& f) {
                L cp = apply_named(NamedOp::Cplus, f, t);
                L cm = apply_named(NamedOp::Cminus, f, t);
                return cp + cm == f && apply_named(NamedOp::Cplus, cp, t) == cp &&
                       apply_named(NamedOp::Cminus, cm, t) == cm &&
                       apply_named(NamedOp::Cplus, cm, t) == L::zero();
              });
            });

  run_check(rep, "hecke.triangularity", "Y is triangular with diagonal gamma_m", true,
            [&](CheckRecord&) {
              for (long m = -M; m <= M; ++m) {
                L f = apply_named(NamedOp::Y, L::monomial(m), t);
                if (f.coeff(m) != t.gamma(m)) return false;
                if (f.max_rank() > order_rank(m)) return false;
              }
              return true;
            });

  run_check(rep, "hecke.L_equals_Y_plus_Yinv", "L = Y + Y^-1 on W-invariants", true,
            [&](CheckRecord&) {
              for (long m = 0; m <= M; ++m) {
                L f = L::monomial(m) + L::monomial(-m);
                if (m == 0) f = L::one();
                if (apply_L(f, t) !=
                    apply_named(NamedOp::Y, f, t) + apply_named(NamedOp::Yinv, f, t))
                  return false;
              }
              return true;
            });

  run_check(rep, "hecke.h_isotype", "h+-(Y) swap the symmetric and anti-symmetric parts", true,
            [&](CheckRecord&) {
              const L delta = weyl_denominator(t);
              for (long m = 0; m <= M; ++m) {
                L sym = m == 0 ? L::one() : L::monomial(m) + L::monomial(-m);
                if (apply_named(NamedOp::Cplus, apply_named(NamedOp::Hplus, sym, t), t) != L::zero())
                  return false;
                L anti = delta * sym;
                if (apply_named(NamedOp::Cminus, apply_named(NamedOp::Hminus, anti, t), t) !=
                    L::zero())
                  return false;
              }
              return true;
            });

  run_check(rep, "hecke.weyl_action", "s0^2 = s1^2 = id and s1 s0 = tau(1)", true,
            [&](CheckRecord&) {
              return for_monomials([&](const L& f) {
                return act_s0(act_s0(f, t.q), t.q) == f && act_s1(act_s1(f)) == f &&
                       act_s1(act_s0(f, t.q)) == act_tau(1, f, t.q);
              });
            });
}

// ===========================================================================
// Polynomial family suites (exact)
// ===========================================================================

inline void polys_eigen_checks(Report& rep, const Params<Rat>& t, long maxm) {
  run_check(rep, "polys.eigen_equation", "Y P_m = gamma_m P_m", true, [&](CheckRecord&) {
    for (long m = -maxm; m <= maxm; ++m) {
      auto P = nonsym_triangular(t, m);
      if (apply_named(NamedOp::Y, P.poly, t) != P.poly.scaled(t.gamma(m))) return false;
      auto [e, c] = P.poly.leading_term();
      if (e != m || c != Rat(1)) return false;
    }
    return true;
  });
}

inline void polys_triple_checks(Report& rep, const Params<Rat>& t, long maxm) {
  run_check(rep, "polys.triple_agreement", "triangular = Rodrigues = series construction", true,
            [&](CheckRecord&) {
              for (long m = -maxm; m <= maxm; ++m) {
                auto tri = nonsym_triangular(t, m);
                if (nonsym_rodrigues(t, m).poly != tri.poly) return false;
                if (nonsym_series(t, m).poly != tri.poly) return false;
              }
              return true;
            });
  run_check(rep, "polys.sym_series_agreement", "symmetrized and 4phi3 series coincide", true,
            [&](CheckRecord&) {
              for (long m = 0; m <= maxm; ++m)
                if (sym_series(t, m).poly != symmetrize(t, m, +1).poly) return false;
              return true;
            });
  run_check(rep, "polys.sym_series_parameter_symmetry", "series symmetric in (a,b,c,d)", true,
            [&](CheckRecord&) {
              for (long m = 0; m <= 5; ++m) {
                Laurent<Rat> base = sym_series_abcd(t.a, t.b, t.c, t.d, t.q, m);
                if (sym_series_abcd(t.b, t.a, t.c, t.d, t.q, m) != base) return false;
                if (sym_series_abcd(t.c, t.b, t.a, t.d, t.q, m) != base) return false;
                if (sym_series_abcd(t.d, t.b, t.c, t.a, t.q, m) != base) return false;
                if (sym_series_abcd(t.a, t.c, t.b, t.d, t.q, m) != base) return false;
              }
              return true;
            });
}

inline void polys_structure_checks(Report& rep, const Params<Rat>& t, long maxm) {
  using S = ScalarOps<Rat>;
  const Rat one(1);

  run_check(rep, "polys.t1_action", "T1 P_m = alpha_m P_m + beta_m P_-m", true, [&](CheckRecord&) {
    for (long m = -maxm; m <= maxm; ++m) {
      if (m == 0) continue;
      auto [al, be] = t1_action_constants(t, m);
      auto Pm = nonsym_triangular(t, m).poly;
      auto Pn = nonsym_triangular(t, -m).poly;
      if (apply_T1(Pm, t) != Pm.scaled(al) + Pn.scaled(be)) return false;
      auto [aln, ben] = t1_action_constants(t, -m);
      if (be * ben != (t.k1 - al) * (S::inv(t.k1) + al)) return false;
      if (m < 0 && be != t.k1) return false;
    }
    return true;
  });

  run_check(rep, "polys.intertwiner_S1", "S1 P_m = (gamma_m - gamma_-m) beta_m P_-m", true,
            [&](CheckRecord&) {
              const OpExpr<Rat> S1 = named_expr(NamedOp::S1, t);
              for (long m = -maxm; m <= maxm; ++m) {
                if (m == 0) continue;
                auto [al, be] = t1_action_constants(t, m);
                (void)al;
                auto Pm = nonsym_triangular(t, m).poly;
                auto Pn = nonsym_triangular(t, -m).poly;
                if (apply_expr(S1, Pm, t) != Pn.scaled((t.gamma(m) - t.gamma(-m)) * be))
                  return false;
              }
              return true;
            });

  run_check(rep, "polys.intertwiner_S0", "S0 P_m = (gamma_-m-1 - gamma_m) k1^-1 P_-m-1", true,
            [&](CheckRecord&) {
              const OpExpr<Rat> S0 = named_expr(NamedOp::S0, t);
              for (long m = 0; m <= maxm; ++m) {
                auto Pm = nonsym_triangular(t, m).poly;
                auto Pn = nonsym_triangular(t, -m - 1).poly;
                if (apply_expr(S0, Pm, t) !=
                    Pn.scaled((t.gamma(-m - 1) - t.gamma(m)) * S::inv(t.k1)))
                  return false;
              }
              return true;
            });

  run_check(rep, "polys.symmetrizer_eigen", "(T1 -+ k1^+-1) P_m^+- = 0", true, [&](CheckRecord&) {
    for (long m = 0; m <= maxm; ++m) {
      auto Pp = symmetrize(t, m, +1).poly;
      if (apply_T1(Pp, t) != Pp.scaled(t.k1)) return false;
      if (m >= 1) {
        auto Pm = symmetrize(t, m, -1).poly;
        if (apply_T1(Pm, t) != Pm.scaled(-S::inv(t.k1))) return false;
      }
    }
    return true;
  });

  run_check(rep, "polys.lemma_reconstruction", "P_+-m recovered from P_m^+ through Y", true,
            [&](CheckRecord&) {
              for (long m = 1; m <= maxm; ++m) {
                auto Pp = symmetrize(t, m, +1).poly;
                Rat gm = t.gamma(m), gn = t.gamma(-m);
                Laurent<Rat> lhs1 =
                    (apply_named(NamedOp::Y, Pp, t) - Pp.scaled(gn)).scaled(S::inv(gm - gn));
                if (lhs1 != nonsym_triangular(t, m).poly) return false;
                Rat kr = S::div(t.k0, t.k1), ki = S::inv(t.k0 * t.k1);
                Rat den = (one + kr * gm) * (one - ki * gm);
                Laurent<Rat> lhs2 =
                    (apply_named(NamedOp::Y, Pp, t) - Pp.scaled(gm)).scaled(S::div(gm, den));
                if (lhs2 != nonsym_triangular(t, -m).poly) return false;
              }
              return true;
            });

  run_check(rep, "polys.weyl_character", "P_m^- = delta P_m-1^+ at (k0, qk1, u0, u1)", true,
            [&](CheckRecord&) {
              Params<Rat> ts = t.with_k1_scaled(t.q);
              for (long m = 1; m <= maxm; ++m) {
                if (symmetrize(t, m, -1).poly !=
                    weyl_denominator(t) * symmetrize(ts, m - 1, +1).poly)
                  return false;
              }
              return true;
            });

  run_check(rep, "polys.shift_relations", "G+- ladder between k1 and qk1 families", true,
            [&](CheckRecord&) {
              Params<Rat> ts = t.with_k1_scaled(t.q);
              for (long m = 1; m <= maxm; ++m) {
                auto Pp = symmetrize(t, m, +1).poly;
                auto Ps = symmetrize(ts, m - 1, +1).poly;
                if (apply_shift(ShiftDir::plus, Pp, t) != Ps.scaled(hplus_value(t.gamma(m), t)))
                  return false;
                if (apply_shift(ShiftDir::minus, Ps, t) != Pp.scaled(hminus_value(t.gamma(m), t)))
                  return false;
              }
              return true;
            });

  run_check(rep, "polys.rodrigues_constants", "d_m recursion against intertwiner ladder", true,
            [&](CheckRecord&) {
              if (rodrigues_dm(t, 0) != Rat(1)) return false;
              for (long m = 0; m <= maxm; ++m) {
                if (rodrigues_dm(t, -m - 1) !=
                    (t.gamma(-m - 1) - t.gamma(m)) * S::inv(t.k1) * rodrigues_dm(t, m))
                  return false;
                if (m >= 1 &&
                    rodrigues_dm(t, m) != (t.gamma(-m) - t.gamma(m)) * t.k1 * rodrigues_dm(t, -m))
                  return false;
              }
              return true;
            });

  run_check(rep, "polys.genericity_window", "generic parameter scan over the degree window", true,
            [&](CheckRecord& rec) {
              auto v = check_genericity(t, 100);
              if (!v.empty()) {
                rec.note = v.front();
                return false;
              }
              for (long m = -maxm; m <= maxm; ++m)
                for (long n = m + 1; n <= maxm; ++n)
                  if (t.gamma(m) == t.gamma(n)) return false;
              return true;
            });
}

inline void polys_duality_checks(Report& rep, const Params<Rat>& t, long maxm) {
  using S = ScalarOps<Rat>;
  run_check(rep, "polys.duality_nonsym", "E_gamma_m(x_n^-1; t) = E_x_n(gamma_m^-1; t~)", true,
            [&](CheckRecord&) {
              Params<Rat> td = t.dual();
              for (long m = -maxm; m <= maxm; ++m) {
                auto E = renormalize(t, m, false).poly;
                for (long n = -maxm; n <= maxm; ++n) {
                  auto Ed = renormalize(td, n, false).poly;
                  if (E.evaluate(S::inv(t.xval(n))) != Ed.evaluate(S::inv(t.gamma(m))))
                    return false;
                }
              }
              return true;
            });
  run_check(rep, "polys.duality_sym", "E+_s(gamma_m)(x_n; t) = E+_s(x_n)(gamma_m; t~)", true,
            [&](CheckRecord&) {
              Params<Rat> td = t.dual();
              for (long m = 0; m <= maxm; ++m) {
                auto E = renormalize(t, m, true).poly;
                for (long n = 0; n <= maxm; ++n) {
                  auto Ed = renormalize(td, n, true).poly;
                  if (E.evaluate(t.xval(n)) != Ed.evaluate(t.gamma(m))) return false;
                }
              }
              return true;
            });
  run_check(rep, "polys.renorm_projection", "C+ E_gamma_m = E+_s(gamma_m)", true,
            [&](CheckRecord&) {
              for (long m = -maxm; m <= maxm; ++m) {
                auto E = renormalize(t, m, false).poly;
                auto Ep = renormalize(t, m >= 0 ? m : -m, true).poly;
                if (apply_named(NamedOp::Cplus, E, t) != Ep) return false;
                if (ev_value(E, t) != Rat(1)) return false;
              }
              return true;
            });
  run_check(rep, "polys.renorm_T1_action", "T1 and T1v on E_gamma in renormalized form", true,
            [&](CheckRecord&) {
              const Rat one(1);
              for (long m = -maxm; m <= maxm; ++m) {
                Rat g = t.gamma(m), gi = S::inv(g);
                auto E = renormalize(t, m, false).poly;
                auto Es1 = renormalize(t, -m, false).poly;
                auto Es0 = renormalize(t, -m - 1, false).poly;
                Rat c1 = S::div((one - t.k0 * t.k1 * gi) * (one + S::div(t.k1, t.k0) * gi),
                                (one - gi * gi) * t.k1);
                if (apply_T1(E, t) != E.scaled(t.k1) + (Es1 - E).scaled(c1)) return false;
                Rat c0 = S::div(
                    (one - t.u0 * t.u1 * t.p * g) * (one + S::div(t.u1, t.u0) * t.p * g),
                    (one - t.q * g * g) * t.u1);
                if (apply_T1v(E, t) != E.scaled(t.u1) + (Es0 - E).scaled(c0)) return false;
              }
              return true;
            });
}

inline void polys_evaluation_checks(Report& rep, const Params<Rat>& t, long maxm) {
  run_check(rep, "polys.evaluation_nonsym", "closed form for P_m(a^-1)", true, [&](CheckRecord&) {
    for (long m = -maxm; m <= maxm; ++m) {
      auto P = nonsym_triangular(t, m).poly;
      if (ev_value(P, t) != ev_closed(t, m, EvKind::nonsym)) return false;
    }
    return true;
  });
  run_check(rep, "polys.evaluation_sym", "closed form for P_m^+(a)", true, [&](CheckRecord&) {
    for (long m = 0; m <= maxm; ++m) {
      auto P = symmetrize(t, m, +1).poly;
      if (P.evaluate(t.a) != ev_closed(t, m, EvKind::sym)) return false;
      if (ev_value(P, t) != ev_closed(t, m, EvKind::sym)) return false;
    }
    return true;
  });
}

// ===========================================================================
// Forms suites (float backend)
// ===========================================================================

struct FormsContext {
  Params<Rat> t;
  QuadSettings qs;
  PairEngine engine;

  FormsContext(const Params<Rat>& t_, QuadSettings qs_)
      : t(t_), qs(qs_), engine(to_float(t_), qs_) {}
};

inline void forms_weight_checks(Report& rep, FormsContext& ctx) {
  const Params<Complex> tf = to_float(ctx.t);
  const Real ptol = ctx.qs.product_tol;
  std::vector<Complex> points = {Complex(Real("0.6"), Real("0.8")),
                                 Complex(Real("-0.38461538461538461538"), Real("0.92307692307692307692")),
                                 Complex(Real("1.36"), Real("0.49")), Complex(Real("0.5"), Real("-0.25"))};

  run_check(rep, "forms.alpha_sum", "alpha(x) + alpha(1/x) = 1 - ab", false, [&](CheckRecord& rec) {
    double worst = 0;
    Complex want = Complex(1) - tf.a * tf.b;
    for (const Complex& x : points) {
      Complex got = weight_alpha(tf, x) + weight_alpha(tf, ScalarOps<Complex>::inv(x));
      worst = std::max(worst, detail::rel_diff(got, want));
    }
    rec.residual = worst;
    return worst < 1e-30;
  });

  run_check(rep, "forms.delta_factorization", "Delta = alpha Delta_+", false, [&](CheckRecord& rec) {
    double worst = 0;
    for (const Complex& x : points) {
      Complex lhs = weight(tf, x, WeightVariant::delta, ptol);
      Complex rhs = weight_alpha(tf, x) * weight_delta_plus(tf, x, ptol);
      worst = std::max(worst, detail::rel_diff(lhs, rhs));
    }
    rec.residual = worst;
    return worst < 1e-30;
  });

  run_check(rep, "forms.delta_plus_symmetry", "Delta_+(x) = Delta_+(1/x)", false,
            [&](CheckRecord& rec) {
              double worst = 0;
              for (const Complex& x : points) {
                Complex lhs = weight_delta_plus(tf, x, ptol);
                Complex rhs = weight_delta_plus(tf, ScalarOps<Complex>::inv(x), ptol);
                worst = std::max(worst, detail::rel_diff(lhs, rhs));
              }
              rec.residual = worst;
              return worst < 1e-30;
            });

  run_check(rep, "forms.lemma_symmetric_restriction", "<f,g> = (1-ab)/2 (f,g) on W-invariants",
            false, [&](CheckRecord& rec) {
              Laurent<Complex> f = to_float(Laurent<Rat>::monomial(1) + Laurent<Rat>::monomial(-1) +
                                            Laurent<Rat>::monomial(0, Rat(2)));
              Laurent<Complex> g = to_float(Laurent<Rat>::monomial(2) + Laurent<Rat>::monomial(-2));
              Complex lhs = ctx.engine.pair(f, g, PairVariant::angle).value;
              Complex rhs = (Complex(1) - tf.a * tf.b) / Complex(2) *
                            ctx.engine.pair(f, g, PairVariant::round).value;
              rec.residual = detail::rel_diff(lhs, rhs);
              return rec.residual < 1e-20;
            });
}

inline void forms_adjoint_checks(Report& rep, FormsContext& ctx, long maxdeg, double tol) {
  run_check(rep, "forms.adjoint_T", "adjoint of T_i is (T_i')^-1 at inverse parameters", false,
            [&](CheckRecord& rec) {
              Params<Rat> ti = ctx.t.inverse();
              double worst = 0;
              for (int i : {0, 1}) {
                for (long mf = -maxdeg; mf <= maxdeg; ++mf) {
                  Laurent<Rat> f = Laurent<Rat>::monomial(mf);
                  Laurent<Rat> Tf = i == 0 ? apply_T0(f, ctx.t) : apply_T1(f, ctx.t);
                  for (long mg = -maxdeg; mg <= maxdeg; ++mg) {
                    Laurent<Rat> g = Laurent<Rat>::monomial(mg);
                    Laurent<Rat> Tg = i == 0 ? apply_T0_inv(g, ti) : apply_T1_inv(g, ti);
                    Complex lhs = ctx.engine.pair(to_float(Tf), to_float(g), PairVariant::angle).value;
                    Complex rhs = ctx.engine.pair(to_float(f), to_float(Tg), PairVariant::angle).value;
                    worst = std::max(worst, detail::scaled_diff(lhs, rhs));
                  }
                }
              }
              rec.residual = worst;
              return worst <= tol;
            });
}

inline void forms_biorth_checks(Report& rep, FormsContext& ctx, long maxm, double off_factor,
                                double diag_rel) {
  const long n = maxm;

  run_check(rep, "forms.biorthogonality", "<P_m, P'_n> = 0 for m != n", false, [&](CheckRecord& rec) {
    Params<Rat> ti = ctx.t.inverse();
    std::vector<Laurent<Complex>> P, Pp;
    for (long m = -n; m <= n; ++m) {
      P.push_back(to_float(nonsym_triangular(ctx.t, m).poly));
      Pp.push_back(to_float(nonsym_triangular(ti, m).poly));
    }
    std::vector<std::vector<Complex>> vals(P.size(), std::vector<Complex>(P.size()));
    Real maxdiag(0);
    for (std::size_t i = 0; i < P.size(); ++i)
      for (std::size_t j = 0; j < P.size(); ++j) {
        vals[i][j] = ctx.engine.pair(P[i], Pp[j], PairVariant::angle).value;
        if (i == j && abs(vals[i][j]) > maxdiag) maxdiag = abs(vals[i][j]);
      }
    double worst = 0;
    for (std::size_t i = 0; i < P.size(); ++i)
      for (std::size_t j = 0; j < P.size(); ++j) {
        if (i == j) continue;
        worst = std::max(worst, static_cast<double>(Real(abs(vals[i][j]) / maxdiag)));
      }
    rec.residual = worst;
    return worst <= off_factor;
  });

  run_check(rep, "forms.diagonal_terms", "diagonal terms match the closed q-factorial forms",
            false, [&](CheckRecord& rec) {
              Params<Rat> ti = ctx.t.inverse();
              Params<Complex> tf = to_float(ctx.t);
              const Real ptol = ctx.qs.product_tol;
              double worst = 0;
              for (long m = 0; m <= n; ++m) {
                // symmetric
                auto Pp = to_float(symmetrize(ctx.t, m, +1).poly);
                Complex got = ctx.engine.pair(Pp, Pp, PairVariant::round).value;
                worst = std::max(
                    worst, detail::rel_diff(got, diagonal_closed(tf, m, DiagKind::sym, ptol)));
                // nonsymmetric, positive
                auto Pm = to_float(nonsym_triangular(ctx.t, m).poly);
                auto Pmp = to_float(nonsym_triangular(ti, m).poly);
                got = ctx.engine.pair(Pm, Pmp, PairVariant::angle).value;
                worst = std::max(
                    worst, detail::rel_diff(got, diagonal_closed(tf, m, DiagKind::nonsym_pos, ptol)));
                if (m >= 1) {
                  auto Pn = to_float(nonsym_triangular(ctx.t, -m).poly);
                  auto Pnp = to_float(nonsym_triangular(ti, -m).poly);
                  got = ctx.engine.pair(Pn, Pnp, PairVariant::angle).value;
                  worst = std::max(worst, detail::rel_diff(
                                              got, diagonal_closed(tf, m, DiagKind::nonsym_neg, ptol)));
                  auto Am = to_float(symmetrize(ctx.t, m, -1).poly);
                  auto Amp = to_float(symmetrize(ti, m, -1).poly);
                  got = ctx.engine.pair(Am, Amp, PairVariant::angle).value;
                  worst = std::max(
                      worst, detail::rel_diff(got, diagonal_closed(tf, m, DiagKind::antisym, ptol)));
                }
              }
              rec.residual = worst;
              return worst <= diag_rel;
            });

  run_check(rep, "forms.diagonal_antisym_relation",
            "<P_-m, P'_-m> against <P_m^-, P_m^-'> in closed form", false, [&](CheckRecord& rec) {
              using S = ScalarOps<Complex>;
              Params<Complex> tf = to_float(ctx.t);
              const Real ptol = ctx.qs.product_tol;
              const Complex one(1);
              double worst = 0;
              for (long m = 1; m <= n; ++m) {
                Complex gi = S::inv(Complex(ctx.t.gamma(m)));
                Complex kr = S::div(tf.k0, tf.k1), ki = S::inv(tf.k0 * tf.k1);
                Complex factor = S::div((one + tf.k1 * tf.k1) * (one - gi * gi),
                                        (one + kr * gi) * (one - ki * gi));
                Complex lhs = diagonal_closed(tf, m, DiagKind::nonsym_neg, ptol);
                Complex rhs = factor * diagonal_closed(tf, m, DiagKind::antisym, ptol);
                worst = std::max(worst, detail::rel_diff(lhs, rhs));
              }
              rec.residual = worst;
              return worst < 1e-20;
            });
}

inline void forms_constant_term_checks(Report& rep, FormsContext& ctx, double rel_tol) {
  run_check(rep, "forms.constant_term", "quadrature (1,1) against the closed product formula",
            false, [&](CheckRecord& rec) {
              Complex got =
                  ctx.engine.pair(Laurent<Complex>::one(), Laurent<Complex>::one(), PairVariant::round)
                      .value;
              Complex want = constant_term_closed(to_float(ctx.t), ctx.qs.product_tol);
              rec.residual = detail::rel_diff(got, want);
              return rec.residual <= rel_tol;
            });

  run_check(rep, "forms.constant_term_symmetric", "closed constant term symmetric in (a,b,c,d)",
            false, [&](CheckRecord& rec) {
              Params<Complex> tf = to_float(ctx.t);
              const Real ptol = ctx.qs.product_tol;
              Complex base = constant_term_closed(tf, ptol);
              Params<Complex> swapped = tf;
              std::swap(swapped.a, swapped.c);
              Complex other = constant_term_closed(swapped, ptol);
              std::swap(swapped.b, swapped.d);
              Complex third = constant_term_closed(swapped, ptol);
              rec.residual =
                  std::max(detail::rel_diff(other, base), detail::rel_diff(third, base));
              return rec.residual < 1e-30;
            });
}

inline void forms_lemma72_checks(Report& rep, FormsContext& ctx) {
  run_check(rep, "forms.antisym_pairing_shift",
            "<delta f, delta' g> = (1+k1^-2)/2 (f,g) at (k0,qk1,u0,u1)", false,
            [&](CheckRecord& rec) {
              using S = ScalarOps<Rat>;
              Params<Rat> ts = ctx.t.with_k1_scaled(ctx.t.q);
              PairEngine eng_s(to_float(ts), ctx.qs);
              Laurent<Rat> delta = weyl_denominator(ctx.t);
              Laurent<Rat> delta_p = weyl_denominator(ctx.t.inverse());
              double worst = 0;
              for (long mf = 0; mf <= 4; mf += 2)
                for (long mg = 0; mg <= 4; mg += 2) {
                  Laurent<Rat> f = mf == 0 ? Laurent<Rat>::one()
                                           : Laurent<Rat>::monomial(mf) + Laurent<Rat>::monomial(-mf);
                  Laurent<Rat> g = mg == 0 ? Laurent<Rat>::one()
                                           : Laurent<Rat>::monomial(mg) + Laurent<Rat>::monomial(-mg);
                  Complex lhs = ctx.engine
                                    .pair(to_float(delta * f), to_float(delta_p * g),
                                          PairVariant::angle)
                                    .value;
                  Complex rhs = Complex(Rat(1, 2) * (Rat(1) + S::inv(ctx.t.k1 * ctx.t.k1))) *
                                eng_s.pair(to_float(f), to_float(g), PairVariant::round).value;
                  worst = std::max(worst, detail::scaled_diff(lhs, rhs));
                }
              rec.residual = worst;
              return worst < 1e-18;
            });
}

inline void forms_shift_adjoint_checks(Report& rep, FormsContext& ctx) {
  run_check(rep, "forms.shift_adjointness", "G- and G+' are adjoint across the k1 -> qk1 shift",
            false, [&](CheckRecord& rec) {
              Params<Rat> ts = ctx.t.with_k1_scaled(ctx.t.q);
              Params<Rat> ti = ctx.t.inverse();
              PairEngine eng_s(to_float(ts), ctx.qs);
              double worst = 0;
              Rat k14 = ctx.t.k1 * ctx.t.k1 * ctx.t.k1 * ctx.t.k1;
              for (long mf = 0; mf <= 3; ++mf)
                for (long mg = 0; mg <= 3; ++mg) {
                  Laurent<Rat> f = mf == 0 ? Laurent<Rat>::one()
                                           : Laurent<Rat>::monomial(mf) + Laurent<Rat>::monomial(-mf);
                  Laurent<Rat> g = mg == 0 ? Laurent<Rat>::one()
                                           : Laurent<Rat>::monomial(mg) + Laurent<Rat>::monomial(-mg);
                  Complex lhs = ctx.engine
                                    .pair(to_float(apply_shift(ShiftDir::minus, f, ctx.t)),
                                          to_float(g), PairVariant::round)
                                    .value;
                  Complex rhs = eng_s
                                    .pair(to_float(f), to_float(apply_shift(ShiftDir::plus, g, ti)),
                                          PairVariant::round)
                                    .value;
                  worst = std::max(worst, detail::scaled_diff(lhs, rhs));

                  Complex lhs2 = eng_s
                                     .pair(to_float(apply_shift(ShiftDir::plus, f, ctx.t)),
                                           to_float(g), PairVariant::round)
                                     .value;
                  Complex rhs2 = Complex(k14) *
                                 ctx.engine
                                     .pair(to_float(f), to_float(apply_shift(ShiftDir::minus, g, ti)),
                                           PairVariant::round)
                                     .value;
                  worst = std::max(worst, detail::scaled_diff(lhs2, rhs2));
                }
              rec.residual = worst;
              return worst < 1e-18;
            });

  run_check(rep, "forms.intertwiner_adjoints", "S1* = S1' and S0* = q^-1 S0'", false,
            [&](CheckRecord& rec) {
              Params<Rat> ti = ctx.t.inverse();
              const OpExpr<Rat> S1 = named_expr(NamedOp::S1, ctx.t);
              const OpExpr<Rat> S0 = named_expr(NamedOp::S0, ctx.t);
              const OpExpr<Rat> S1p = named_expr(NamedOp::S1, ti);
              const OpExpr<Rat> S0p = named_expr(NamedOp::S0, ti);
              double worst = 0;
              for (long mf = -3; mf <= 3; ++mf)
                for (long mg = -3; mg <= 3; ++mg) {
                  Laurent<Rat> f = Laurent<Rat>::monomial(mf);
                  Laurent<Rat> g = Laurent<Rat>::monomial(mg);
                  Complex lhs = ctx.engine
                                    .pair(to_float(apply_expr(S1, f, ctx.t)), to_float(g),
                                          PairVariant::angle)
                                    .value;
                  Complex rhs = ctx.engine
                                    .pair(to_float(f), to_float(apply_expr(S1p, g, ti)),
                                          PairVariant::angle)
                                    .value;
                  worst = std::max(worst, detail::scaled_diff(lhs, rhs));
                  lhs = ctx.engine
                            .pair(to_float(apply_expr(S0, f, ctx.t)), to_float(g), PairVariant::angle)
                            .value;
                  rhs = Complex(ScalarOps<Rat>::inv(ctx.t.q)) *
                        ctx.engine
                            .pair(to_float(f), to_float(apply_expr(S0p, g, ti)), PairVariant::angle)
                            .value;
                  worst = std::max(worst, detail::scaled_diff(lhs, rhs));
                }
              rec.residual = worst;
              return worst < 1e-15;
            });
}

inline void forms_residue_checks(Report& rep, FormsContext& ctx, long maxm, double rel_tol) {
  run_check(rep, "forms.residue_contour_oracle",
            "factor-cancellation residues against contour integrals", false, [&](CheckRecord& rec) {
              Params<Complex> td = to_float(ctx.t.dual());
              QuadSettings cs = ctx.qs;
              cs.tol = Real("1e-12");
              double worst = 0;
              for (long m = -maxm; m <= maxm; ++m) {
                for (ResidueVariant v : {ResidueVariant::w_plus, ResidueVariant::w}) {
                  Complex closed = residue_weight(td, m, v, ctx.qs.product_tol);
                  Complex contour = residue_weight_contour(td, m, v, cs);
                  worst = std::max(worst, detail::rel_diff(contour, closed));
                }
              }
              rec.residual = worst;
              return worst <= rel_tol;
            });

  run_check(rep, "forms.residue_alpha_factor", "w = alpha(gamma; t~) w_+", false,
            [&](CheckRecord& rec) {
              Params<Complex> td = to_float(ctx.t.dual());
              double worst = 0;
              for (long m = -maxm; m <= maxm; ++m) {
                Complex w = residue_weight(td, m, ResidueVariant::w, ctx.qs.product_tol);
                Complex wp = residue_weight(td, m, ResidueVariant::w_plus, ctx.qs.product_tol);
                Complex gamma = pow_int(td.a, -eps_sign(m)) * pow_int(td.q, -m);
                worst = std::max(worst, detail::rel_diff(w, weight_alpha(td, gamma) * wp));
              }
              rec.residual = worst;
              return worst < 1e-25;
            });
}

inline void forms_norm_ratio_checks(Report& rep, FormsContext& ctx, long maxm, double rel_tol) {
  run_check(rep, "forms.norm_ratio_nonsym", "<E_g, E'_g^-1>/<1,1> = w(g0^-1)/w(g^-1)", false,
            [&](CheckRecord& rec) {
              Params<Rat> ti = ctx.t.inverse();
              Params<Complex> td = to_float(ctx.t.dual());
              const Real ptol = ctx.qs.product_tol;
              Complex ct =
                  ctx.engine.pair(Laurent<Complex>::one(), Laurent<Complex>::one(), PairVariant::angle)
                      .value;
              Complex w0 = residue_weight(td, 0, ResidueVariant::w, ptol);
              double worst = 0;
              for (long m = -maxm; m <= maxm; ++m) {
                auto E = to_float(renormalize(ctx.t, m, false).poly);
                auto Ep = to_float(renormalize(ti, m, false).poly);
                Complex lhs = ctx.engine.pair(E, Ep, PairVariant::angle).value / ct;
                Complex rhs = w0 / residue_weight(td, m, ResidueVariant::w, ptol);
                worst = std::max(worst, detail::rel_diff(lhs, rhs));
              }
              rec.residual = worst;
              return worst <= rel_tol;
            });

  run_check(rep, "forms.norm_ratio_sym", "(E+,E+)/(1,1) = w+(g0^-1)/w+(g^-1)", false,
            [&](CheckRecord& rec) {
              Params<Complex> td = to_float(ctx.t.dual());
              const Real ptol = ctx.qs.product_tol;
              Complex ct =
                  ctx.engine.pair(Laurent<Complex>::one(), Laurent<Complex>::one(), PairVariant::round)
                      .value;
              Complex w0 = residue_weight(td, 0, ResidueVariant::w_plus, ptol);
              double worst = 0;
              for (long m = 0; m <= maxm; ++m) {
                auto E = to_float(renormalize(ctx.t, m, true).poly);
                Complex lhs = ctx.engine.pair(E, E, PairVariant::round).value / ct;
                Complex rhs = w0 / residue_weight(td, m, ResidueVariant::w_plus, ptol);
                worst = std::max(worst, detail::rel_diff(lhs, rhs));
              }
              rec.residual = worst;
              return worst <= rel_tol;
            });
}

inline void forms_recursion_checks(Report& rep, FormsContext& ctx, long maxm, long budget,
                                   double rel_tol) {
  run_check(rep, "forms.norm_recursion_single", "one-step norm ratio under (a,b) -> (qa,qb)",
            false, [&](CheckRecord& rec) {
              using S = ScalarOps<Rat>;
              const Rat one(1);
              Params<Rat> ts = ctx.t.with_k1_scaled(ctx.t.q);
              PairEngine eng_s(to_float(ts), ctx.qs);
              double worst = 0;
              for (long m = 1; m <= maxm; ++m) {
                auto Pm = to_float(symmetrize(ctx.t, m, +1).poly);
                auto Ps = to_float(symmetrize(ts, m - 1, +1).poly);
                Complex lhs = ctx.engine.pair(Pm, Pm, PairVariant::round).value;
                Complex rhs = eng_s.pair(Ps, Ps, PairVariant::round).value;
                Rat qa = pow_int(ctx.t.q, m);
                Rat factor = S::div((one - qa) * (one - pow_int(ctx.t.q, m - 1) * ctx.t.c * ctx.t.d),
                                    (one - qa * ctx.t.a * ctx.t.b) *
                                        (one - pow_int(ctx.t.q, m - 1) * ctx.t.a * ctx.t.b *
                                                   ctx.t.c * ctx.t.d));
                worst = std::max(worst, detail::rel_diff(lhs, Complex(factor) * rhs));
              }
              rec.residual = worst;
              return worst <= rel_tol;
            });

  run_check(rep, "forms.norm_recursion_grand", "norm against shifted constant term, k+l+m+n <= 3",
            false, [&](CheckRecord& rec) {
              Params<Complex> tf = to_float(ctx.t);
              const Real ptol = ctx.qs.product_tol;
              const Complex qv = tf.q;
              auto qp = [&](const Complex& z, long s) {
                return qpoch_inf(Complex(z * pow_int(qv, s)), qv, ptol);
              };
              double worst = 0;
              for (long k = 0; k <= budget; ++k)
                for (long l = 0; k + l <= budget; ++l)
                  for (long m = 0; k + l + m <= budget; ++m)
                    for (long n = 0; k + l + m + n <= budget; ++n) {
                      long tt = k + l + m + n;
                      auto Pt = to_float(symmetrize(ctx.t, tt, +1).poly);
                      Complex num = ctx.engine.pair(Pt, Pt, PairVariant::round).value;
                      Params<Rat> shifted = ctx.t.geometric_shift(k, l, m, n);
                      PairEngine eng_s(to_float(shifted), ctx.qs);
                      Complex den = eng_s
                                        .pair(Laurent<Complex>::one(), Laurent<Complex>::one(),
                                              PairVariant::round)
                                        .value;
                      Complex lhs = num / den;

                      const Complex ab = tf.a * tf.b, ac = tf.a * tf.c, ad = tf.a * tf.d;
                      const Complex bc = tf.b * tf.c, bd = tf.b * tf.d, cd = tf.c * tf.d;
                      const Complex abcd = ab * cd;
                      Complex rnum = qp(Complex(1), 1) * qp(abcd, 2 * tt - 1) *
                                     qp(ab, 2 * (k + l)) * qp(ac, 2 * (k + m)) *
                                     qp(ad, 2 * (k + n)) * qp(bc, 2 * (l + m)) *
                                     qp(bd, 2 * (l + n)) * qp(cd, 2 * (m + n));
                      Complex rden = qp(Complex(1), tt + 1) * qp(abcd, tt - 1) * qp(ab, tt) *
                                     qp(ac, tt) * qp(ad, tt) * qp(bc, tt) * qp(bd, tt) *
                                     qp(cd, tt);
                      Complex rhs = rnum / rden;
                      worst = std::max(worst, detail::rel_diff(lhs, rhs));
                    }
              rec.residual = worst;
              return worst <= rel_tol;
            });
}

// ===========================================================================
// Transform suites (float backend)
// ===========================================================================

inline void transform_support_checks(Report& rep, FormsContext& ctx, long M, double rel_tol) {
  run_check(rep, "transform.delta_support", "F(P_n) is supported at index n alone", false,
            [&](CheckRecord& rec) {
              double worst = 0;
              for (long nn : {0L, 2L, -3L, 5L}) {
                auto f = to_float(nonsym_triangular(ctx.t, nn).poly);
                SpectralFn F = forward(f, ctx.t, M, ctx.engine);
                Real scale = F.sup_norm();
                for (const auto& [m, v] : F.values) {
                  if (m == nn) continue;
                  worst = std::max(worst, static_cast<double>(Real(abs(v) / scale)));
                }
              }
              rec.residual = worst;
              return worst <= rel_tol;
            });

  run_check(rep, "transform.unit_image", "F(1) sits at index 0 with value <1,1>", false,
            [&](CheckRecord& rec) {
              SpectralFn F = forward(Laurent<Complex>::one(), ctx.t, 3, ctx.engine);
              Complex ct = ctx.engine
                               .pair(Laurent<Complex>::one(), Laurent<Complex>::one(),
                                     PairVariant::angle)
                               .value;
              double worst = detail::rel_diff(F.at(0), ct);
              for (const auto& [m, v] : F.values)
                if (m != 0)
                  worst = std::max(worst, static_cast<double>(Real(abs(v) / abs(ct))));
              rec.residual = worst;
              return worst <= rel_tol;
            });
}

inline void transform_intertwine_checks(Report& rep, FormsContext& ctx, long maxdeg, long M,
                                        double rel_tol) {
  run_check(rep, "transform.intertwine", "F carries Y, T1, T1v to the spectral-side generators",
            false, [&](CheckRecord& rec) {
              double worst = 0;
              for (long e = -maxdeg; e <= maxdeg; ++e) {
                Laurent<Rat> f = Laurent<Rat>::monomial(e);
                SpectralFn Ff = forward(to_float(f), ctx.t, M, ctx.engine);
                Real scale = Ff.sup_norm();

                // z~ F(Y f) = F(f)
                SpectralFn FYf =
                    forward(to_float(apply_named(NamedOp::Y, f, ctx.t)), ctx.t, M, ctx.engine);
                SpectralFn lhs = apply_spectral(SpectralOp::mult_z, FYf, ctx.t);
                for (const auto& [m, v] : lhs.values)
                  worst = std::max(worst,
                                   static_cast<double>(Real(abs(v - Ff.at(m)) / scale)));

                // F(T1 f) = T1~ F(f)
                SpectralFn FT1f = forward(to_float(apply_T1(f, ctx.t)), ctx.t, M, ctx.engine);
                SpectralFn rhs1 = apply_spectral(SpectralOp::T1tilde, Ff, ctx.t);
                for (const auto& [m, v] : rhs1.values)
                  worst = std::max(worst,
                                   static_cast<double>(Real(abs(v - FT1f.at(m)) / scale)));

                // F(T1v f) = T0~ F(f)
                SpectralFn FT1vf = forward(to_float(apply_T1v(f, ctx.t)), ctx.t, M, ctx.engine);
                SpectralFn rhs0 = apply_spectral(SpectralOp::T0tilde, Ff, ctx.t);
                for (const auto& [m, v] : rhs0.values)
                  worst = std::max(worst,
                                   static_cast<double>(Real(abs(v - FT1vf.at(m)) / scale)));
              }
              rec.residual = worst;
              return worst <= rel_tol;
            });
}

inline void transform_roundtrip_checks(Report& rep, FormsContext& ctx, long M, double rel_tol) {
  const Real ptol = ctx.qs.product_tol;

  run_check(rep, "transform.inversion_constant", "the two closed forms of c agree", false,
            [&](CheckRecord& rec) {
              Complex c1 = inversion_constant(ctx.t, ctx.engine);
              Complex c2 = inversion_constant_sym(ctx.t, ctx.engine);
              rec.residual = detail::rel_diff(c1, c2);
              return rec.residual <= rel_tol;
            });

  run_check(rep, "transform.roundtrip_poly", "G(F(f)) = c f for random integer polynomials",
            false, [&](CheckRecord& rec) {
              Complex c = inversion_constant(ctx.t, ctx.engine);
              TestRng rng(20240613);
              double worst = 0;
              for (int trial = 0; trial < 5; ++trial) {
                Laurent<Rat> f = rng.poly(5);
                Laurent<Complex> ff = to_float(f);
                SpectralFn F = forward(ff, ctx.t, M, ctx.engine);
                Laurent<Complex> back = inverse_transform(F, ctx.t, ptol);
                Laurent<Complex> want = ff.scaled(c);
                Real scale = sup_norm(want);
                worst = std::max(worst,
                                 static_cast<double>(Real(sup_norm(back - want) / scale)));
              }
              rec.residual = worst;
              return worst <= rel_tol;
            });

  run_check(rep, "transform.roundtrip_spectral", "F(G(g)) = c g on finitely supported g", false,
            [&](CheckRecord& rec) {
              Complex c = inversion_constant(ctx.t, ctx.engine);
              TestRng rng(777);
              SpectralFn g;
              for (long m = -4; m <= 4; ++m) g.values.emplace(m, Complex(rng.range(-9, 9)));
              Laurent<Complex> Gg = inverse_transform(g, ctx.t, ptol);
              SpectralFn back = forward(Gg, ctx.t, M, ctx.engine);
              double worst = 0;
              Real scale = g.sup_norm();
              for (const auto& [m, v] : g.values)
                worst = std::max(
                    worst, static_cast<double>(Real(abs(back.at(m) - c * v) / (abs(c) * scale))));
              rec.residual = worst;
              return worst <= rel_tol;
            });

  run_check(rep, "transform.roundtrip_sym", "G+(F+(f)) = c f on W-invariants", false,
            [&](CheckRecord& rec) {
              Complex c = inversion_constant(ctx.t, ctx.engine);
              Laurent<Rat> f = Laurent<Rat>::monomial(2) + Laurent<Rat>::monomial(-2) +
                               Laurent<Rat>::monomial(0, Rat(3));
              Laurent<Complex> ff = to_float(f);
              SpectralFn F = forward_sym(ff, ctx.t, M, ctx.engine);
              Laurent<Complex> back = inverse_sym(F, ctx.t, ptol, default_atol());
              Laurent<Complex> want = ff.scaled(c);
              rec.residual = static_cast<double>(Real(sup_norm(back - want) / sup_norm(want)));
              return rec.residual <= rel_tol;
            });

  run_check(rep, "transform.forward_sym_unit", "F+(1) = (1+k1^2)/2 (1,1) at index 0", false,
            [&](CheckRecord& rec) {
              SpectralFn F = forward_sym(Laurent<Complex>::one(), ctx.t, 3, ctx.engine);
              Complex ct = ctx.engine
                               .pair(Laurent<Complex>::one(), Laurent<Complex>::one(),
                                     PairVariant::round)
                               .value;
              Complex k1(ctx.t.k1);
              Complex want = (Complex(1) + k1 * k1) / Complex(2) * ct;
              double worst = detail::rel_diff(F.at(0), want);
              for (const auto& [m, v] : F.values)
                if (m != 0) worst = std::max(worst, static_cast<double>(Real(abs(v) / abs(want))));
              rec.residual = worst;
              return worst <= rel_tol;
            });

  run_check(rep, "transform.diagonal_ratio", "F(E_g)(g) w(g^-1) is independent of g", false,
            [&](CheckRecord& rec) {
              Params<Complex> td = to_float(ctx.t.dual());
              Complex ref;
              double worst = 0;
              for (long m = -4; m <= 4; ++m) {
                auto E = to_float(renormalize(ctx.t, m, false).poly);
                Complex val = ctx.engine.pair(E, renorm_inverse_float(ctx.t, m), PairVariant::angle)
                                  .value *
                              residue_weight(td, m, ResidueVariant::w, ptol);
                if (m == -4)
                  ref = val;
                else
                  worst = std::max(worst, detail::rel_diff(val, ref));
              }
              rec.residual = worst;
              return worst <= rel_tol;
            });
}

// ===========================================================================
// Suite drivers
// ===========================================================================

inline Report verify_hecke(const Params<Rat>& t, long M) {
  Report rep;
  hecke_suite(rep, t, M);
  rep.sort_by_name();
  return rep;
}

inline Report verify_polys(const Params<Rat>& t, long M) {
  Report rep;
  const long deep = std::min<long>(M + 2, 8);   // eigen/triple/evaluation window
  const long mid = std::min<long>(M, 6);        // structure/duality window
  polys_eigen_checks(rep, t, deep);
  polys_triple_checks(rep, t, deep);
  polys_structure_checks(rep, t, mid);
  polys_duality_checks(rep, t, mid);
  polys_evaluation_checks(rep, t, deep);
  rep.sort_by_name();
  return rep;
}

inline Report verify_forms(const Params<Rat>& t, const QuadSettings& qs, long M) {
  Report rep;
  FormsContext ctx(t, qs);
  const long mid = std::min<long>(M, 6);
  const long small = std::min<long>(M, 5);
  unsigned bits = float_precision_bits();
  double ct_tol = bits >= 256 ? 1e-20 : 1e-10;
  double off_factor = bits >= 256 ? 1e-20 : 1e-10;
  forms_weight_checks(rep, ctx);
  forms_constant_term_checks(rep, ctx, ct_tol);
  forms_adjoint_checks(rep, ctx, small, 1e-15);
  forms_biorth_checks(rep, ctx, mid, off_factor, 1e-10);
  forms_lemma72_checks(rep, ctx);
  forms_shift_adjoint_checks(rep, ctx);
  forms_residue_checks(rep, ctx, small, 1e-8);
  forms_norm_ratio_checks(rep, ctx, small, 1e-8);
  forms_recursion_checks(rep, ctx, 4, 3, 1e-8);
  rep.sort_by_name();
  return rep;
}

inline Report verify_transform(const Params<Rat>& t, const QuadSettings& qs, long M) {
  Report rep;
  FormsContext ctx(t, qs);
  const long bound = std::max<long>(M, 6);
  transform_support_checks(rep, ctx, bound, 1e-12);
  transform_intertwine_checks(rep, ctx, 4, bound, 1e-8);
  transform_roundtrip_checks(rep, ctx, bound, 1e-8);
  rep.sort_by_name();
  return rep;
}

}  // namespace aw
