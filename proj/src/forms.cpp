#include "leibniz/forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace leibniz {

UniPoly uni_trim(UniPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

int uni_degree(const UniPoly& p) {
  for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k)
    if (!p[k].is_zero()) return k;
  return -1;
}

UniPoly uni_derivative(const UniPoly& p) {
  UniPoly d;
  for (std::size_t k = 1; k < p.size(); ++k)
    d.push_back(Scalar(static_cast<long>(k)) * p[k]);
  return uni_trim(std::move(d));
}

UniPoly uni_mod(UniPoly a, const UniPoly& b) {
  int db = uni_degree(b);
  if (db < 0) throw std::domain_error("uni_mod: division by zero polynomial");
  a = uni_trim(std::move(a));
  while (uni_degree(a) >= db) {
    int da = uni_degree(a);
    Scalar f = a[da] / b[db];
    for (int k = 0; k <= db; ++k) a[da - db + k] -= f * b[k];
    a = uni_trim(std::move(a));
  }
  return a;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  a = uni_trim(std::move(a));
  b = uni_trim(std::move(b));
  while (!b.empty()) {
    UniPoly r = uni_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Scalar lead = a[uni_degree(a)];
    for (Scalar& c : a) c /= lead;
  }
  return a;
}

std::vector<int> binary_form_root_pattern(const std::vector<Scalar>& coeffs) {
  const int d = static_cast<int>(coeffs.size()) - 1;
  bool all_zero = true;
  for (const Scalar& c : coeffs)
    if (!c.is_zero()) all_zero = false;
  if (all_zero || d < 0) return {};

  // Dehomogenize at v = 1: f(t) = sum coeffs[k] t^{d-k}.
  UniPoly f(d + 1, Scalar(0));
  for (int k = 0; k <= d; ++k) f[d - k] = coeffs[k];
  f = uni_trim(std::move(f));

  // Iterated gcd with the derivative: the degree drops count roots with
  // multiplicity >= j+1, exactly like rank drops count Jordan blocks.
  std::vector<int> degs;
  UniPoly g = f;
  while (uni_degree(g) > 0) {
    degs.push_back(uni_degree(g));
    g = uni_gcd(g, uni_derivative(g));
  }
  degs.push_back(0);

  std::vector<int> pattern;
  for (std::size_t j = 0; j + 1 < degs.size(); ++j) {
    int ge_j1 = degs[j] - degs[j + 1];
    int ge_j2 = j + 2 < degs.size() ? degs[j + 1] - degs[j + 2] : 0;
    for (int c = 0; c < ge_j1 - ge_j2; ++c) pattern.push_back(static_cast<int>(j) + 1);
  }
  int at_infinity = d - uni_degree(f);
  if (at_infinity > 0) pattern.push_back(at_infinity);
  std::sort(pattern.begin(), pattern.end(), std::greater<int>());
  return pattern;
}

}  // namespace leibniz
