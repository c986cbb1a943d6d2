#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace aw {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

enum class Err {
  InvalidParameter,
  BackendUnsupported,
  BackendMismatch,
  DivergentProduct,
  NotDivisible,
  EmptyPolynomial,
  PoleAtZero,
  NotSymmetric,
  UnknownOperator,
  DegenerateSpectrum,
  DegenerateParameters,
  EmptyIsotype,
  NormalizationFailure,
  PoleEvaluation,
  ContourUnsupported,
  QuadratureNotConverged,
  PoleIdentificationFailure,
  DivideByZero,
  ParseError,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::InvalidParameter: return "InvalidParameter";
    case Err::BackendUnsupported: return "BackendUnsupported";
    case Err::BackendMismatch: return "BackendMismatch";
    case Err::DivergentProduct: return "DivergentProduct";
    case Err::NotDivisible: return "NotDivisible";
    case Err::EmptyPolynomial: return "EmptyPolynomial";
    case Err::PoleAtZero: return "PoleAtZero";
    case Err::NotSymmetric: return "NotSymmetric";
    case Err::UnknownOperator: return "UnknownOperator";
    case Err::DegenerateSpectrum: return "DegenerateSpectrum";
    case Err::DegenerateParameters: return "DegenerateParameters";
    case Err::EmptyIsotype: return "EmptyIsotype";
    case Err::NormalizationFailure: return "NormalizationFailure";
    case Err::PoleEvaluation: return "PoleEvaluation";
    case Err::ContourUnsupported: return "ContourUnsupported";
    case Err::QuadratureNotConverged: return "QuadratureNotConverged";
    case Err::PoleIdentificationFailure: return "PoleIdentificationFailure";
    case Err::DivideByZero: return "DivideByZero";
    case Err::ParseError: return "ParseError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& what)
      : std::runtime_error(std::string(err_name(kind)) + ": " + what), kind_(kind) {}
  Err kind() const noexcept { return kind_; }

 private:
  Err kind_;
};

// ---------------------------------------------------------------------------
// Scalar backends: exact rationals and complex floats of configurable precision
// ---------------------------------------------------------------------------

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::mpfr_float;  // runtime-variable precision

inline unsigned bits_to_digits10(unsigned bits) {
  // ceil(bits*log10(2)) plus slack so the mantissa covers the requested bits
  return static_cast<unsigned>((static_cast<std::uint64_t>(bits) * 30103u + 99999u) / 100000u) + 3u;
}

namespace detail {
inline unsigned& float_bits_storage() {
  static thread_local unsigned bits = 0;
  return bits;
}
}  // namespace detail

inline void set_float_precision_bits(unsigned bits) {
  if (bits < 53) throw Error(Err::InvalidParameter, "float precision must be >= 53 bits");
  detail::float_bits_storage() = bits;
  Real::default_precision(bits_to_digits10(bits));
}

inline unsigned float_precision_bits() {
  if (detail::float_bits_storage() == 0) set_float_precision_bits(256);
  return detail::float_bits_storage();
}

// 2^-e at the working precision
inline Real pow2(long e) {
  (void)float_precision_bits();
  return boost::multiprecision::ldexp(Real(1), static_cast<int>(e));
}

inline Real const_pi() {
  (void)float_precision_bits();
  return 4 * atan(Real(1));
}

struct Complex {
  Real re, im;

  Complex() : re(0), im(0) {}
  Complex(long v) : re(v), im(0) {}  // NOLINT: implicit by design, mirrors numeric literals
  explicit Complex(Real r) : re(std::move(r)), im(0) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(const Rat& r) : re(Real(numerator(r)) / Real(denominator(r))), im(0) {}

  bool is_real() const { return im.is_zero(); }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator/=(const Complex& o);
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
inline bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
inline bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

inline Real abs(const Complex& z) {
  using boost::multiprecision::sqrt;
  if (z.im.is_zero()) return boost::multiprecision::abs(z.re);
  if (z.re.is_zero()) return boost::multiprecision::abs(z.im);
  return sqrt(z.re * z.re + z.im * z.im);
}

inline Complex conj(const Complex& z) { return Complex(z.re, -z.im); }

inline Complex& Complex::operator/=(const Complex& o) {
  Real den = o.re * o.re + o.im * o.im;
  if (den.is_zero()) throw Error(Err::DivideByZero, "complex division by zero");
  Real r = (re * o.re + im * o.im) / den;
  im = (im * o.re - re * o.im) / den;
  re = std::move(r);
  return *this;
}
inline Complex operator/(Complex a, const Complex& b) { return a /= b; }

// ---------------------------------------------------------------------------
// Uniform scalar operations over the two backends
// ---------------------------------------------------------------------------

template <class K>
struct ScalarOps;

template <>
struct ScalarOps<Rat> {
  static constexpr bool exact = true;
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static Rat from_rat(const Rat& r) { return r; }
  static Rat from_long(long v) { return Rat(v); }
  static bool is_zero(const Rat& v) { return v.is_zero(); }
  static Rat div(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw Error(Err::DivideByZero, "rational division by zero");
    return a / b;
  }
  static Rat inv(const Rat& a) { return div(Rat(1), a); }
  static std::string text(const Rat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
  }
};

template <>
struct ScalarOps<Complex> {
  static constexpr bool exact = false;
  static Complex zero() { return Complex(); }
  static Complex one() { return Complex(1); }
  static Complex from_rat(const Rat& r) { return Complex(r); }
  static Complex from_long(long v) { return Complex(v); }
  static bool is_zero(const Complex& v) { return v.re.is_zero() && v.im.is_zero(); }
  static Complex div(const Complex& a, const Complex& b) {
    if (is_zero(b)) throw Error(Err::DivideByZero, "complex division by zero");
    return a / b;
  }
  static Complex inv(const Complex& a) { return div(Complex(1), a); }
  static std::string text(const Complex& v) {
    unsigned d = bits_to_digits10(float_precision_bits());
    std::string s = v.re.str(d);
    if (!v.im.is_zero()) s += (v.im < 0 ? " - " : " + ") + Real(boost::multiprecision::abs(v.im)).str(d) + "*i";
    return s;
  }
};

template <class K>
K pow_int(K base, long e) {
  if (e < 0) {
    base = ScalarOps<K>::inv(base);
    e = -e;
  }
  K acc = ScalarOps<K>::one();
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

inline Complex to_float(const Rat& r) { return Complex(r); }

// Default comparison thresholds for the float backend, scaled with the working
// precision (at 256 bits these are 2^-180 and 2^-160).
inline Real default_atol() { return pow2(-static_cast<long>(float_precision_bits() * 180u / 256u)); }
inline Real default_rtol() { return pow2(-static_cast<long>(float_precision_bits() * 160u / 256u)); }

inline bool approx_zero(const Complex& v, const Real& atol) { return abs(v) <= atol; }

inline bool approx_equal(const Complex& x, const Complex& y, const Real& atol, const Real& rtol) {
  Real scale = abs(x);
  Real ay = abs(y);
  if (ay > scale) scale = ay;
  Real tol = rtol * scale;
  if (atol > tol) tol = atol;
  return abs(x - y) <= tol;
}

inline bool approx_equal(const Complex& x, const Complex& y) {
  return approx_equal(x, y, default_atol(), default_rtol());
}

}  // namespace aw
