#pragma once

#include <string>
#include <vector>

#include "aw/laurent.hpp"
#include "aw/params.hpp"
#include "aw/report.hpp"

namespace aw {

// ---------------------------------------------------------------------------
// Difference-reflection operators of the fundamental representation.
// T1 f = k1 f + phi1 (s1 f - f),  phi1 = k1^-1 (1-ax)(1-bx)/(1-x^2)
// T0 f = k0 f + phi0 (s0 f - f),  phi0 = k0^-1 (1-c/x)(1-d/x)/(1-q/x^2)
// The rational factors act by numerator multiplication followed by exact
// division, so a violated identity surfaces as NotDivisible.
// ---------------------------------------------------------------------------

template <class K>
Laurent<K> apply_T1(const Laurent<K>& f, const Params<K>& t) {
  using S = ScalarOps<K>;
  Laurent<K> diff = act_s1(f) - f;
  Laurent<K> out = f.scaled(t.k1);
  if (diff.is_zero()) return out;
  Laurent<K> num;  // (1-ax)(1-bx)
  num.set(0, S::one());
  num.set(1, -(t.a + t.b));
  num.set(2, t.a * t.b);
  Laurent<K> den;  // 1-x^2
  den.set(0, S::one());
  den.set(2, -S::one());
  out += exact_div(num * diff, den).scaled(S::inv(t.k1));
  return out;
}

template <class K>
Laurent<K> apply_T0(const Laurent<K>& f, const Params<K>& t) {
  using S = ScalarOps<K>;
  Laurent<K> diff = act_s0(f, t.q) - f;
  Laurent<K> out = f.scaled(t.k0);
  if (diff.is_zero()) return out;
  Laurent<K> num;  // (1-c/x)(1-d/x)
  num.set(0, S::one());
  num.set(-1, -(t.c + t.d));
  num.set(-2, t.c * t.d);
  Laurent<K> den;  // 1-q/x^2
  den.set(0, S::one());
  den.set(-2, -t.q);
  out += exact_div(num * diff, den).scaled(S::inv(t.k0));
  return out;
}

template <class K>
Laurent<K> apply_T1_inv(const Laurent<K>& f, const Params<K>& t) {
  using S = ScalarOps<K>;
  return apply_T1(f, t) + f.scaled(S::inv(t.k1) - t.k1);
}

template <class K>
Laurent<K> apply_T0_inv(const Laurent<K>& f, const Params<K>& t) {
  using S = ScalarOps<K>;
  return apply_T0(f, t) + f.scaled(S::inv(t.k0) - t.k0);
}

// T1v = x^-1 T1^-1, T0v = p^-1 T0^-1 x, and their inverses.
template <class K>
Laurent<K> apply_T1v(const Laurent<K>& f, const Params<K>& t) {
  return apply_T1_inv(f, t).shifted(-1);
}

template <class K>
Laurent<K> apply_T0v(const Laurent<K>& f, const Params<K>& t) {
  using S = ScalarOps<K>;
  return apply_T0_inv(f.shifted(1), t).scaled(S::inv(t.p));
}

template <class K>
Laurent<K> apply_T1v_inv(const Laurent<K>& f, const Params<K>& t) {
  return apply_T1(f.shifted(1), t);
}

template <class K>
Laurent<K> apply_T0v_inv(const Laurent<K>& f, const Params<K>& t) {
  return apply_T0(f, t).shifted(-1).scaled(t.p);
}

// ---------------------------------------------------------------------------
// Operator expressions: formal linear combinations of words in the generators
// plus monomial multiplications Z(k). Words act right-to-left.
// ---------------------------------------------------------------------------

enum class Tok { T0, T1, T0v, T1v, T0i, T1i, T0vi, T1vi, Z };

struct Token {
  Tok kind;
  long zexp = 0;

  static Token z(long k) { return Token{Tok::Z, k}; }
};

inline std::string token_name(const Token& t) {
  switch (t.kind) {
    case Tok::T0: return "T0";
    case Tok::T1: return "T1";
    case Tok::T0v: return "T0v";
    case Tok::T1v: return "T1v";
    case Tok::T0i: return "T0inv";
    case Tok::T1i: return "T1inv";
    case Tok::T0vi: return "T0vinv";
    case Tok::T1vi: return "T1vinv";
    case Tok::Z: return "Z(" + std::to_string(t.zexp) + ")";
  }
  return "?";
}

inline Token token_from_name(const std::string& s) {
  if (s == "T0") return Token{Tok::T0, 0};
  if (s == "T1") return Token{Tok::T1, 0};
  if (s == "T0v") return Token{Tok::T0v, 0};
  if (s == "T1v") return Token{Tok::T1v, 0};
  if (s == "T0inv") return Token{Tok::T0i, 0};
  if (s == "T1inv") return Token{Tok::T1i, 0};
  if (s == "T0vinv") return Token{Tok::T0vi, 0};
  if (s == "T1vinv") return Token{Tok::T1vi, 0};
  if (s.rfind("Z(", 0) == 0 && s.back() == ')') {
    try {
      return Token::z(std::stol(s.substr(2, s.size() - 3)));
    } catch (const std::exception&) {
      throw Error(Err::ParseError, "bad token " + s);
    }
  }
  throw Error(Err::UnknownOperator, "unknown token " + s);
}

template <class K>
struct OpExpr {
  struct Term {
    K coeff;
    std::vector<Token> word;
  };
  std::vector<Term> terms;

  static OpExpr identity() { return single(ScalarOps<K>::one(), {}); }
  static OpExpr single(K coeff, std::vector<Token> word) {
    OpExpr e;
    e.terms.push_back(Term{std::move(coeff), std::move(word)});
    return e;
  }
  OpExpr& add(K coeff, std::vector<Token> word) {
    terms.push_back(Term{std::move(coeff), std::move(word)});
    return *this;
  }
};

template <class K>
Laurent<K> apply_token(const Token& tok, const Laurent<K>& f, const Params<K>& t) {
  switch (tok.kind) {
    case Tok::T0: return apply_T0(f, t);
    case Tok::T1: return apply_T1(f, t);
    case Tok::T0v: return apply_T0v(f, t);
    case Tok::T1v: return apply_T1v(f, t);
    case Tok::T0i: return apply_T0_inv(f, t);
    case Tok::T1i: return apply_T1_inv(f, t);
    case Tok::T0vi: return apply_T0v_inv(f, t);
    case Tok::T1vi: return apply_T1v_inv(f, t);
    case Tok::Z: return f.shifted(tok.zexp);
  }
  throw Error(Err::UnknownOperator, "bad token");
}

template <class K>
Laurent<K> apply_word(const std::vector<Token>& word, Laurent<K> f, const Params<K>& t) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = apply_token(*it, f, t);
  return f;
}

template <class K>
Laurent<K> apply_expr(const OpExpr<K>& expr, const Laurent<K>& f, const Params<K>& t) {
  Laurent<K> out;
  for (const auto& term : expr.terms) out += apply_word(term.word, f, t).scaled(term.coeff);
  return out;
}

// ---------------------------------------------------------------------------
// Named elements: the Cherednik-Dunkl operator Y = T1 T0, the intertwiners
// S1 = [T1, Y] and S0 = [Y, T1v], the idempotents C+-, and the cubic factors
// h+-(Y) = Y^-+1 (Y^+-1 - k0 k1)(Y^+-1 + k0^-1 k1) driving the shifts.
// ---------------------------------------------------------------------------

enum class NamedOp { Y, Yinv, S0, S1, Cplus, Cminus, Hplus, Hminus };

inline NamedOp named_op_from_string(const std::string& s) {
  if (s == "Y") return NamedOp::Y;
  if (s == "Yinv") return NamedOp::Yinv;
  if (s == "S0") return NamedOp::S0;
  if (s == "S1") return NamedOp::S1;
  if (s == "Cplus") return NamedOp::Cplus;
  if (s == "Cminus") return NamedOp::Cminus;
  if (s == "hplus") return NamedOp::Hplus;
  if (s == "hminus") return NamedOp::Hminus;
  throw Error(Err::UnknownOperator, "unknown operator name " + s);
}

template <class K>
OpExpr<K> named_expr(NamedOp name, const Params<K>& t) {
  using S = ScalarOps<K>;
  const K one = S::one();
  const std::vector<Token> Y{Token{Tok::T1}, Token{Tok::T0}};
  const std::vector<Token> Yi{Token{Tok::T0i}, Token{Tok::T1i}};
  switch (name) {
    case NamedOp::Y: return OpExpr<K>::single(one, Y);
    case NamedOp::Yinv: return OpExpr<K>::single(one, Yi);
    case NamedOp::S1: {
      OpExpr<K> e;
      e.add(one, {Token{Tok::T1}, Token{Tok::T1}, Token{Tok::T0}});
      e.add(-one, {Token{Tok::T1}, Token{Tok::T0}, Token{Tok::T1}});
      return e;
    }
    case NamedOp::S0: {
      OpExpr<K> e;
      e.add(one, {Token{Tok::T1}, Token{Tok::T0}, Token{Tok::T1v}});
      e.add(-one, {Token{Tok::T1v}, Token{Tok::T1}, Token{Tok::T0}});
      return e;
    }
    case NamedOp::Cplus: {
      K norm = S::inv(one + t.k1 * t.k1);
      OpExpr<K> e;
      e.add(norm, {});
      e.add(norm * t.k1, {Token{Tok::T1}});
      return e;
    }
    case NamedOp::Cminus: {
      K k1i = S::inv(t.k1);
      K norm = S::inv(one + k1i * k1i);
      OpExpr<K> e;
      e.add(norm, {});
      e.add(-norm * k1i, {Token{Tok::T1}});
      return e;
    }
    case NamedOp::Hplus: {
      // Y + (k0^-1 - k0) k1 - k1^2 Y^-1
      OpExpr<K> e;
      e.add(one, Y);
      e.add((S::inv(t.k0) - t.k0) * t.k1, {});
      e.add(-(t.k1 * t.k1), Yi);
      return e;
    }
    case NamedOp::Hminus: {
      // Y^-1 + (k0^-1 - k0) k1 - k1^2 Y
      OpExpr<K> e;
      e.add(one, Yi);
      e.add((S::inv(t.k0) - t.k0) * t.k1, {});
      e.add(-(t.k1 * t.k1), Y);
      return e;
    }
  }
  throw Error(Err::UnknownOperator, "bad named operator");
}

template <class K>
Laurent<K> apply_named(NamedOp name, const Laurent<K>& f, const Params<K>& t) {
  return apply_expr(named_expr(name, t), f, t);
}

// Scalar values h+-(gamma).
template <class K>
K hplus_value(const K& gamma, const Params<K>& t) {
  using S = ScalarOps<K>;
  return S::div((gamma - t.k0 * t.k1) * (gamma + S::div(t.k1, t.k0)), gamma);
}

template <class K>
K hminus_value(const K& gamma, const Params<K>& t) {
  using S = ScalarOps<K>;
  K gi = S::inv(gamma);
  return gamma * (gi - t.k0 * t.k1) * (gi + S::div(t.k1, t.k0));
}

// ---------------------------------------------------------------------------
// Generalized Weyl denominator delta = x^-1 (x - a^-1)(x - b^-1); multiplies
// W-invariant polynomials onto the anti-symmetric isotype.
// ---------------------------------------------------------------------------

template <class K>
Laurent<K> weyl_denominator(const Params<K>& t) {
  using S = ScalarOps<K>;
  K ai = S::inv(t.a), bi = S::inv(t.b);
  Laurent<K> d;
  d.set(1, S::one());
  d.set(0, -(ai + bi));
  d.set(-1, ai * bi);
  return d;
}

template <class K>
bool is_antisymmetric(const Laurent<K>& f, const Params<K>& t) {
  return poly_equal(apply_named(NamedOp::Cplus, f, t), Laurent<K>::zero());
}

// ---------------------------------------------------------------------------
// The symmetrized Askey-Wilson second-order q-difference operator
// L f = A(x)(f(qx) - f(x)) + A(1/x)(f(x/q) - f(x)) + (k0 k1 + 1/(k0 k1)) f,
// A(x) = (k0 k1)^-1 (1-ax)(1-bx)(1-cx)(1-dx) / ((1-x^2)(1-qx^2)),
// evaluated over a common denominator with a final exact division.
// ---------------------------------------------------------------------------

template <class K>
Laurent<K> apply_L(const Laurent<K>& f, const Params<K>& t) {
  using S = ScalarOps<K>;
  if (!is_symmetric(f)) throw Error(Err::NotSymmetric, "L needs a W-invariant input");

  Laurent<K> n1 = Laurent<K>::one();
  for (const K& e : {t.a, t.b, t.c, t.d}) {
    Laurent<K> lin;
    lin.set(0, S::one());
    lin.set(1, -e);
    n1 = n1 * lin;
  }
  Laurent<K> d1;
  {
    Laurent<K> f1, f2;
    f1.set(0, S::one());
    f1.set(2, -S::one());
    f2.set(0, S::one());
    f2.set(2, -t.q);
    d1 = f1 * f2;
  }
  Laurent<K> n2 = n1.reversed();
  Laurent<K> d2 = d1.reversed();

  Laurent<K> g1 = n1 * (act_tau(1, f, t.q) - f);
  Laurent<K> g2 = n2 * (act_tau(-1, f, t.q) - f);
  Laurent<K> core = exact_div(g1 * d2 + g2 * d1, d1 * d2);

  K kk = t.k0 * t.k1;
  return core.scaled(S::inv(kk)) + f.scaled(kk + S::inv(kk));
}

// ---------------------------------------------------------------------------
// Shift operators between the families at (k0,k1,u0,u1) and (k0,qk1,u0,u1):
// G+ f = delta^-1 (h+(Y) f),  G- f = h-(Y)(delta f).
// ---------------------------------------------------------------------------

enum class ShiftDir { plus, minus };

template <class K>
Laurent<K> apply_shift(ShiftDir dir, const Laurent<K>& f, const Params<K>& t) {
  if (!is_symmetric(f)) throw Error(Err::NotSymmetric, "shift operators need W-invariant input");
  if (dir == ShiftDir::plus) return exact_div(apply_named(NamedOp::Hplus, f, t), weyl_denominator(t));
  return apply_named(NamedOp::Hminus, weyl_denominator(t) * f, t);
}

}  // namespace aw
