#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "aw/scalar.hpp"

namespace aw {

// Position of x^e in the total order 1 < x^-1 < x < x^-2 < x^2 < ...
inline long order_rank(long e) {
  if (e == 0) return 0;
  if (e > 0) return 2 * e;
  return -2 * e - 1;
}

// Exponent at a given order rank (inverse of order_rank).
inline long exponent_at_rank(long r) {
  if (r == 0) return 0;
  if (r % 2 == 0) return r / 2;
  return -(r + 1) / 2;
}

// Sparse Laurent polynomial over a scalar backend. No zero coefficients are
// stored; the zero polynomial has empty support.
template <class K>
class Laurent {
 public:
  using Terms = std::map<long, K>;

  Laurent() = default;

  static Laurent zero() { return Laurent(); }
  static Laurent one() { return monomial(0); }
  static Laurent monomial(long e, K c = ScalarOps<K>::one()) {
    Laurent f;
    f.set(e, std::move(c));
    return f;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  long min_exp() const {
    if (is_zero()) throw Error(Err::EmptyPolynomial, "min_exp of zero polynomial");
    return terms_.begin()->first;
  }
  long max_exp() const {
    if (is_zero()) throw Error(Err::EmptyPolynomial, "max_exp of zero polynomial");
    return terms_.rbegin()->first;
  }

  K coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ScalarOps<K>::zero() : it->second;
  }

  void set(long e, K c) {
    if (ScalarOps<K>::is_zero(c))
      terms_.erase(e);
    else
      terms_[e] = std::move(c);
  }

  void add_term(long e, const K& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!ScalarOps<K>::is_zero(c)) terms_.emplace(e, c);
      return;
    }
    it->second = it->second + c;
    if (ScalarOps<K>::is_zero(it->second)) terms_.erase(it);
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(const Laurent& a) {
    Laurent r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  Laurent scaled(const K& s) const {
    Laurent r;
    if (ScalarOps<K>::is_zero(s)) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, s * c);
    return r;
  }

  // f(x) -> x^k f(x)
  Laurent shifted(long k) const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
  }

  // f(x) -> f(s*x)
  Laurent arg_scaled(const K& s) const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.add_term(e, pow_int(s, e) * c);
    return r;
  }

  // f(x) -> f(x^-1)
  Laurent reversed() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
  }

  K evaluate(const K& x0) const {
    if (is_zero()) return ScalarOps<K>::zero();
    if (ScalarOps<K>::is_zero(x0)) {
      if (min_exp() < 0) throw Error(Err::PoleAtZero, "evaluation at 0 with negative exponents");
      return coeff(0);
    }
    // Horner over the contiguous exponent range, then restore the offset.
    long lo = min_exp(), hi = max_exp();
    K acc = ScalarOps<K>::zero();
    for (long e = hi; e >= lo; --e) {
      acc = acc * x0;
      auto it = terms_.find(e);
      if (it != terms_.end()) acc = acc + it->second;
    }
    return acc * pow_int(x0, lo);
  }

  // Term of maximal order_rank.
  std::pair<long, K> leading_term() const {
    if (is_zero()) throw Error(Err::EmptyPolynomial, "leading term of zero polynomial");
    long best = terms_.begin()->first;
    long best_rank = order_rank(best);
    for (const auto& [e, c] : terms_) {
      long r = order_rank(e);
      if (r > best_rank) {
        best_rank = r;
        best = e;
      }
    }
    return {best, coeff(best)};
  }

  long max_rank() const { return order_rank(leading_term().first); }

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

 private:
  Terms terms_;
};

template <class K>
Laurent<K> operator*(const K& s, const Laurent<K>& f) {
  return f.scaled(s);
}

inline Real sup_norm(const Laurent<Complex>& f) {
  Real m(0);
  for (const auto& [e, c] : f.terms()) {
    (void)e;
    Real a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

inline bool approx_equal(const Laurent<Complex>& f, const Laurent<Complex>& g, const Real& atol,
                         const Real& rtol) {
  Laurent<Complex> d = f - g;
  Real scale = sup_norm(f);
  Real sg = sup_norm(g);
  if (sg > scale) scale = sg;
  Real tol = rtol * scale;
  if (atol > tol) tol = atol;
  for (const auto& [e, c] : d.terms()) {
    (void)e;
    if (abs(c) > tol) return false;
  }
  return true;
}

inline bool approx_equal(const Laurent<Complex>& f, const Laurent<Complex>& g) {
  return approx_equal(f, g, default_atol(), default_rtol());
}

template <class K>
bool poly_equal(const Laurent<K>& f, const Laurent<K>& g) {
  if constexpr (ScalarOps<K>::exact)
    return f == g;
  else
    return approx_equal(f, g);
}

// Exact division in the Laurent ring: returns h with f = g*h, or throws
// NotDivisible. On the float backend the remainder is compared against the
// default tolerances.
template <class K>
Laurent<K> exact_div(const Laurent<K>& f, const Laurent<K>& g) {
  if (g.is_zero()) throw Error(Err::DivideByZero, "division by the zero polynomial");
  if (f.is_zero()) return Laurent<K>::zero();

  long mf = f.min_exp(), mg = g.min_exp();
  long df = f.max_exp() - mf, dg = g.max_exp() - mg;
  if (df < dg) throw Error(Err::NotDivisible, "degree too small");

  std::vector<K> F(static_cast<std::size_t>(df) + 1, ScalarOps<K>::zero());
  std::vector<K> G(static_cast<std::size_t>(dg) + 1, ScalarOps<K>::zero());
  for (const auto& [e, c] : f.terms()) F[static_cast<std::size_t>(e - mf)] = c;
  for (const auto& [e, c] : g.terms()) G[static_cast<std::size_t>(e - mg)] = c;

  const K lead = G[static_cast<std::size_t>(dg)];
  std::vector<K> Q(static_cast<std::size_t>(df - dg) + 1, ScalarOps<K>::zero());
  for (long i = df - dg; i >= 0; --i) {
    K qc = ScalarOps<K>::div(F[static_cast<std::size_t>(i + dg)], lead);
    Q[static_cast<std::size_t>(i)] = qc;
    if (ScalarOps<K>::is_zero(qc)) continue;
    for (long j = 0; j <= dg; ++j)
      F[static_cast<std::size_t>(i + j)] = F[static_cast<std::size_t>(i + j)] - qc * G[static_cast<std::size_t>(j)];
  }

  if constexpr (ScalarOps<K>::exact) {
    for (const K& c : F)
      if (!ScalarOps<K>::is_zero(c)) throw Error(Err::NotDivisible, "nonzero remainder");
  } else {
    Real scale = sup_norm(f);
    Real tol = default_rtol() * scale;
    Real atol = default_atol();
    if (atol > tol) tol = atol;
    for (const K& c : F)
      if (abs(c) > tol) throw Error(Err::NotDivisible, "remainder above tolerance");
  }

  Laurent<K> h;
  for (long i = 0; i <= df - dg; ++i) h.add_term(i + mf - mg, Q[static_cast<std::size_t>(i)]);
  return h;
}

// ---------------------------------------------------------------------------
// Affine Weyl group action: s1(x^m) = x^-m, s0(x^m) = q^m x^-m,
// tau(mu)(x^m) = q^(mu*m) x^m.
// ---------------------------------------------------------------------------

template <class K>
Laurent<K> act_s1(const Laurent<K>& f) {
  return f.reversed();
}

template <class K>
Laurent<K> act_s0(const Laurent<K>& f, const K& q) {
  Laurent<K> r;
  for (const auto& [e, c] : f.terms()) r.add_term(-e, pow_int(q, e) * c);
  return r;
}

template <class K>
Laurent<K> act_tau(long mu, const Laurent<K>& f, const K& q) {
  Laurent<K> r;
  for (const auto& [e, c] : f.terms()) r.add_term(e, pow_int(q, mu * e) * c);
  return r;
}

template <class K>
bool is_symmetric(const Laurent<K>& f) {
  return poly_equal(act_s1(f), f);
}

// ---------------------------------------------------------------------------
// Text format: terms "coeff*x^e" ascending in e, joined by " + ".
// ---------------------------------------------------------------------------

template <class K>
std::string to_text(const Laurent<K>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    out += ScalarOps<K>::text(c) + "*x^" + std::to_string(e);
  }
  return out;
}

template <class K>
Laurent<Complex> to_float(const Laurent<K>& f) {
  Laurent<Complex> r;
  if constexpr (ScalarOps<K>::exact) {
    for (const auto& [e, c] : f.terms()) r.set(e, Complex(c));
    return r;
  } else {
    return f;
  }
}

}  // namespace aw
