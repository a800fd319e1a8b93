#ifndef LEIBNIZ_POLY_HPP
#define LEIBNIZ_POLY_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "leibniz/scalar.hpp"

namespace leibniz {

/// Shared variable context for a family of polynomials.  All polys built
/// over the same ring are arithmetic-compatible.
class PolyRing {
public:
  int add_var(const std::string& name);           // idempotent, returns index
  int var_index(const std::string& name) const;   // -1 if absent
  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int k) const { return names_[k]; }
  const std::vector<std::string>& names() const { return names_; }

private:
  std::vector<std::string> names_;
};

using PolyRingPtr = std::shared_ptr<PolyRing>;

/// Sparse multivariate polynomial over Q(i): exponent vector -> coefficient,
/// zero coefficients never stored, terms ordered by the map (canonical).
class Poly {
public:
  Poly() = default;
  explicit Poly(PolyRingPtr ring) : ring_(std::move(ring)) {}
  Poly(PolyRingPtr ring, const Scalar& constant);

  static Poly variable(const PolyRingPtr& ring, const std::string& name);
  static Poly constant(const PolyRingPtr& ring, const Scalar& c);

  const PolyRingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int total_degree() const;
  std::size_t term_count() const { return terms_.size(); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly operator*(const Scalar& c) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  /// Arbitrary total order for ordered containers.
  friend bool operator<(const Poly& a, const Poly& b);

  /// Simultaneous substitution var -> poly for the listed variables.
  Poly substitute(const std::map<int, Poly>& assignment) const;
  /// Full evaluation; `point` must cover every variable that occurs.
  Scalar eval(const std::vector<Scalar>& point) const;

  /// Leading coefficient in the canonical term order.
  Scalar leading_coeff() const;
  /// Divides by the leading coefficient (canonical representative up to scale).
  Poly monic() const;

  bool depends_on(int var) const;
  std::string str() const;

  const std::map<std::vector<std::uint16_t>, Scalar>& terms() const { return terms_; }
  void add_term(const std::vector<std::uint16_t>& expo, const Scalar& c);

private:
  PolyRingPtr ring_;
  std::map<std::vector<std::uint16_t>, Scalar> terms_;
};

}  // namespace leibniz

#endif
