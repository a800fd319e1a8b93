#ifndef LEIBNIZ_FORMS_HPP
#define LEIBNIZ_FORMS_HPP

#include <vector>

#include "leibniz/scalar.hpp"

namespace leibniz {

/// Dense univariate polynomial over Q(i), coefficients low-to-high.
using UniPoly = std::vector<Scalar>;

UniPoly uni_trim(UniPoly p);
int uni_degree(const UniPoly& p);  // -1 for the zero polynomial
UniPoly uni_derivative(const UniPoly& p);
UniPoly uni_mod(UniPoly a, const UniPoly& b);
/// Monic gcd via the Euclidean algorithm (exact field arithmetic).
UniPoly uni_gcd(UniPoly a, UniPoly b);

/// Root multiplicity pattern over the algebraic closure of a binary form
/// of degree d given by coefficients c[k] of u^{d-k} v^k.  The root at
/// (1:0) is counted through the degree drop of c(t, 1).  Returns the
/// multiplicities sorted decreasing; empty pattern for the zero form.
std::vector<int> binary_form_root_pattern(const std::vector<Scalar>& coeffs);

}  // namespace leibniz

#endif
