#include "leibniz/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace leibniz {

int PolyRing::add_var(const std::string& name) {
  int idx = var_index(name);
  if (idx >= 0) return idx;
  names_.push_back(name);
  return static_cast<int>(names_.size()) - 1;
}

int PolyRing::var_index(const std::string& name) const {
  for (std::size_t k = 0; k < names_.size(); ++k)
    if (names_[k] == name) return static_cast<int>(k);
  return -1;
}

Poly::Poly(PolyRingPtr ring, const Scalar& constant) : ring_(std::move(ring)) {
  if (!constant.is_zero()) terms_[{}] = constant;
}

Poly Poly::variable(const PolyRingPtr& ring, const std::string& name) {
  int idx = ring->var_index(name);
  if (idx < 0) throw std::invalid_argument("Poly::variable: unknown variable " + name);
  Poly p(ring);
  std::vector<std::uint16_t> expo(idx + 1, 0);
  expo[idx] = 1;
  p.terms_[expo] = Scalar(1);
  return p;
}

Poly Poly::constant(const PolyRingPtr& ring, const Scalar& c) { return Poly(ring, c); }

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

int Poly::total_degree() const {
  int deg = terms_.empty() ? -1 : 0;
  for (const auto& [expo, c] : terms_) {
    int d = 0;
    for (auto e : expo) d += e;
    deg = std::max(deg, d);
  }
  return deg;
}

void Poly::add_term(const std::vector<std::uint16_t>& expo, const Scalar& c) {
  if (c.is_zero()) return;
  // normalize: strip trailing zero exponents so equal monomials collide
  std::vector<std::uint16_t> key = expo;
  while (!key.empty() && key.back() == 0) key.pop_back();
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_[key] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool operator<(const Poly& a, const Poly& b) {
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    int c = scalar_cmp(ia->second, ib->second);
    if (c != 0) return c < 0;
  }
  return ia == a.terms_.end() && ib != b.terms_.end();
}

Poly Poly::operator-() const {
  Poly out(ring_);
  for (const auto& [expo, c] : terms_) out.terms_[expo] = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (!ring_) ring_ = o.ring_;
  for (const auto& [expo, c] : o.terms_) add_term(expo, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (!ring_) ring_ = o.ring_;
  for (const auto& [expo, c] : o.terms_) add_term(expo, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out(a.ring_ ? a.ring_ : b.ring_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<std::uint16_t> expo(std::max(ea.size(), eb.size()), 0);
      for (std::size_t k = 0; k < ea.size(); ++k) expo[k] += ea[k];
      for (std::size_t k = 0; k < eb.size(); ++k) expo[k] += eb[k];
      out.add_term(expo, ca * cb);
    }
  return out;
}

Poly Poly::operator*(const Scalar& c) const {
  Poly out(ring_);
  if (c.is_zero()) return out;
  for (const auto& [expo, coeff] : terms_) out.terms_[expo] = coeff * c;
  return out;
}

Poly Poly::substitute(const std::map<int, Poly>& assignment) const {
  Poly out(ring_);
  for (const auto& [expo, c] : terms_) {
    Poly term = Poly::constant(ring_, c);
    std::vector<std::uint16_t> fixed(expo.size(), 0);
    for (std::size_t v = 0; v < expo.size(); ++v) {
      if (expo[v] == 0) continue;
      auto it = assignment.find(static_cast<int>(v));
      if (it == assignment.end()) {
        fixed[v] = expo[v];
      } else {
        for (int rep = 0; rep < expo[v]; ++rep) term = term * it->second;
      }
    }
    Poly monomial(ring_);
    monomial.add_term(fixed, Scalar(1));
    out += term * monomial;
  }
  return out;
}

Scalar Poly::eval(const std::vector<Scalar>& point) const {
  Scalar out(0);
  for (const auto& [expo, c] : terms_) {
    Scalar term = c;
    for (std::size_t v = 0; v < expo.size(); ++v) {
      if (expo[v] == 0) continue;
      if (v >= point.size()) throw std::invalid_argument("Poly::eval: point too short");
      for (int rep = 0; rep < expo[v]; ++rep) term *= point[v];
    }
    out += term;
  }
  return out;
}

Scalar Poly::leading_coeff() const {
  if (terms_.empty()) return Scalar(0);
  return terms_.rbegin()->second;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  Scalar lead = leading_coeff();
  Poly out(ring_);
  for (const auto& [expo, c] : terms_) out.terms_[expo] = c / lead;
  return out;
}

bool Poly::depends_on(int var) const {
  for (const auto& [expo, c] : terms_)
    if (static_cast<std::size_t>(var) < expo.size() && expo[var] > 0) return true;
  return false;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [expo, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (std::size_t v = 0; v < expo.size(); ++v) {
      if (expo[v] == 0) continue;
      os << "*" << ring_->name(static_cast<int>(v));
      if (expo[v] > 1) os << "^" << static_cast<int>(expo[v]);
    }
  }
  return os.str();
}

}  // namespace leibniz
