#ifndef LEIBNIZ_SCALAR_HPP
#define LEIBNIZ_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <string>

#include <Eigen/Core>

namespace leibniz {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact Gaussian rational a + b*i with a, b in Q.
///
/// This is the ground field of the whole toolkit.  Components are
/// arbitrary-precision rationals kept reduced with positive denominator
/// (the backend normalizes on every operation), so equality is exact and
/// decidable.
class Scalar {
public:
  Scalar() = default;
  Scalar(int v) : re_(v) {}                     // NOLINT: implicit by design
  Scalar(long v) : re_(v) {}                    // NOLINT
  Scalar(long long v) : re_(v) {}               // NOLINT
  Scalar(const Rational& re) : re_(re) {}       // NOLINT
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }
  static Scalar fraction(long num, long den);

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar conj() const { return Scalar(re_, -im_); }
  /// Norm a^2 + b^2 (a nonnegative rational, zero iff the scalar is zero).
  Rational norm() const { return re_ * re_ + im_ * im_; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);  // throws std::domain_error on /0

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Text format: "a/b", "a/b+c/d*i", with "1*i" written "i".
  std::string str() const;
  static Scalar parse(const std::string& text);  // throws std::invalid_argument

private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Component-wise ordering (re, then im) for use in ordered containers;
/// carries no field semantics.
int scalar_cmp(const Scalar& a, const Scalar& b);

std::string rational_str(const Rational& r);
Rational parse_rational(const std::string& text);

}  // namespace leibniz

namespace Eigen {

// Exact field scalar: no epsilon, no precision loss.  Declared as a "real"
// scalar so products stay plain ring operations (no conjugation paths).
template <>
struct NumTraits<leibniz::Scalar> : GenericNumTraits<leibniz::Scalar> {
  typedef leibniz::Scalar Real;
  typedef leibniz::Scalar NonInteger;
  typedef leibniz::Scalar Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 10,
    MulCost = 20
  };
  static inline Real epsilon() { return leibniz::Scalar(0); }
  static inline Real dummy_precision() { return leibniz::Scalar(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif
