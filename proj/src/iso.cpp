#include "leibniz/iso.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "leibniz/forms.hpp"

namespace leibniz {

AlgebraLaw change_of_basis(const AlgebraLaw& law, const BasisChange& p) {
  const Eigen::Index n = law.dim();
  if (p.matrix.rows() != n || p.matrix.cols() != n)
    throw std::invalid_argument("change_of_basis: matrix size mismatch");
  MatrixQ pinv_t;
  try {
    pinv_t = inverse(p.matrix).transpose();
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("change_of_basis: singular matrix");
  }
  AlgebraLaw out(n, law.labels());
  for (Eigen::Index i = 0; i < n; ++i) {
    VectorQ vi = p.matrix.row(i).transpose();
    for (Eigen::Index j = 0; j < n; ++j) {
      VectorQ w = bracket(law, vi, p.matrix.row(j).transpose());
      if (is_zero(w)) continue;
      out.set_product(i, j, pinv_t * w);
    }
  }
  return out;
}

bool verify_isomorphism(const AlgebraLaw& a, const AlgebraLaw& b, const BasisChange& p) {
  if (a.dim() != b.dim()) return false;
  if (!is_invertible(p.matrix)) return false;
  return change_of_basis(a, p) == b;
}

namespace {

struct GrData {
  AlgebraLaw law;              // graded structure constants
  std::vector<int> layer_dims;
  MatrixQ reps;                // all layer representatives stacked (rows)
};

GrData gr_data(const AlgebraLaw& law) {
  const Eigen::Index n = law.dim();
  Gradation g = natural_gradation(law);
  SeriesReport series = lower_central_series(law);

  GrData out;
  out.layer_dims = g.layer_dims;
  out.reps = MatrixQ(n, n);
  std::vector<int> layer_of;
  Eigen::Index row = 0;
  for (std::size_t d = 0; d < g.layers.size(); ++d)
    for (Eigen::Index k = 0; k < g.layers[d].dim(); ++k) {
      out.reps.row(row++) = g.layers[d].basis_vector(k).transpose();
      layer_of.push_back(static_cast<int>(d) + 1);
    }
  if (row != n) throw std::logic_error("gr_law: layer dimensions do not fill the algebra");

  // offsets of each layer block in the new basis
  std::vector<int> offset(g.layers.size() + 1, 0);
  for (std::size_t d = 0; d < g.layers.size(); ++d)
    offset[d + 1] = offset[d] + g.layer_dims[d];

  AlgebraLaw gr(n, default_labels(n));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      int target = layer_of[i] + layer_of[j];
      if (target > static_cast<int>(g.layers.size())) continue;
      VectorQ w = bracket(law, out.reps.row(i).transpose(), out.reps.row(j).transpose());
      if (is_zero(w)) continue;
      // project w (which lies in L^target) onto the layer-target component
      const Subspace next = static_cast<std::size_t>(target) < series.subspaces.size()
                                ? series.subspaces[target]
                                : Subspace::zero(n);
      const Subspace& layer = g.layers[target - 1];
      MatrixQ span_rows(layer.dim() + next.dim(), n);
      span_rows << layer.basis(), next.basis();
      VectorQ coords;
      if (!solve_in_rowspace(span_rows, w, coords))
        throw std::logic_error("gr_law: product escapes its graded component");
      VectorQ v = VectorQ::Zero(n);
      bool nonzero = false;
      for (Eigen::Index k = 0; k < layer.dim(); ++k) {
        v[offset[target - 1] + k] = coords[k];
        if (!coords[k].is_zero()) nonzero = true;
      }
      if (nonzero) gr.set_product(i, j, v);
    }
  out.law = std::move(gr);
  return out;
}

}  // namespace

AlgebraLaw gr_law(const AlgebraLaw& law) { return gr_data(law).law; }

std::vector<int> cube_form_pattern(const AlgebraLaw& law) {
  GrData gr = gr_data(law);
  if (gr.layer_dims.empty() || gr.layer_dims[0] != 2) return {-1};
  const Eigen::Index n = law.dim();
  int q = gr.layer_dims.size() >= 3 ? gr.layer_dims[2] : 0;
  if (q > 1) return {-1};

  VectorQ r1 = unit_vector(n, 0), r2 = unit_vector(n, 1);
  Eigen::Index slot = gr.layer_dims[0] + (gr.layer_dims.size() >= 2 ? gr.layer_dims[1] : 0);

  auto cube = [&](const Scalar& u, const Scalar& v) -> Scalar {
    if (q == 0) return Scalar(0);
    VectorQ y = r1 * u + r2 * v;
    VectorQ c = bracket(gr.law, bracket(gr.law, y, y), y);
    return c[slot];
  };

  // c(u,v) = C0 u^3 + C1 u^2 v + C2 u v^2 + C3 v^3, recovered from four
  // exact evaluations.
  Scalar c10 = cube(Scalar(1), Scalar(0));   // C0
  Scalar c01 = cube(Scalar(0), Scalar(1));   // C3
  Scalar c11 = cube(Scalar(1), Scalar(1));   // C0+C1+C2+C3
  Scalar c12 = cube(Scalar(1), Scalar(2));   // C0+2C1+4C2+8C3
  Scalar s1 = c11 - c10 - c01;               // C1+C2
  Scalar s2 = c12 - c10 - Scalar(8) * c01;   // 2C1+4C2
  Scalar c2 = (s2 - Scalar(2) * s1) / Scalar(2);
  Scalar c1 = s1 - c2;
  return binary_form_root_pattern({c10, c1, c2, c01});
}

RankDropProfile rank_drop_profile(const AlgebraLaw& law) {
  GrData gr = gr_data(law);
  RankDropProfile out;
  if (gr.layer_dims.empty() || gr.layer_dims[0] != 2) {
    out.drop_pattern = {-1};
    return out;
  }
  const Eigen::Index n = law.dim();
  MatrixQ a = right_mult_matrix(gr.law, unit_vector(n, 0));
  MatrixQ b = right_mult_matrix(gr.law, unit_vector(n, 1));

  // generic rank: max over a deterministic sample of the projective line
  static const std::vector<std::pair<Scalar, Scalar>> samples = {
      {1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}, {2, 1},
      {1, -2}, {1, 3}, {3, 1}, {1, Scalar::i()}, {Scalar::i(), 1}, {2, 3}};
  int g = 0;
  for (const auto& [u, v] : samples) g = std::max(g, rank(a * u + b * v));
  out.generic_rank = g;
  if (g == 0) return out;  // zero pencil, no drop divisor

  // gcd of all g x g minors of u*A + v*B via interpolation of each minor
  // as a degree-g binary form; early exit once the gcd is trivial.
  std::vector<Eigen::Index> rows(g), cols(g);
  UniPoly gcd_fin;        // finite part, monic
  int gcd_inf = -1;       // multiplicity of (1:0); -1 = gcd still "zero"
  bool trivial = false;

  std::vector<Scalar> ts;
  for (int k = 0; k <= g; ++k) ts.push_back(Scalar(k - g / 2));

  auto consider_minor = [&](const std::vector<Eigen::Index>& rr,
                            const std::vector<Eigen::Index>& cc) {
    if (trivial) return;
    // evaluate det(t*A + B) on the submatrix at g+1 points, interpolate
    MatrixQ sub(g, g);
    std::vector<Scalar> vals;
    for (const Scalar& t : ts) {
      for (int x = 0; x < g; ++x)
        for (int y = 0; y < g; ++y) sub(x, y) = a(rr[x], cc[y]) * t + b(rr[x], cc[y]);
      vals.push_back(determinant(sub));
    }
    // Newton/Lagrange solve for coefficients of f(t) = minor(t, 1)
    const int m = g + 1;
    MatrixQ vand(m, m);
    VectorQ rhs(m);
    for (int r = 0; r < m; ++r) {
      Scalar pw(1);
      for (int c = 0; c < m; ++c) {
        vand(r, c) = pw;
        pw *= ts[r];
      }
      rhs[r] = vals[r];
    }
    VectorQ coeffs = inverse(vand) * rhs;  // low-to-high in t
    UniPoly f;
    for (int k = 0; k < m; ++k) f.push_back(coeffs[k]);
    f = uni_trim(std::move(f));
    if (f.empty()) return;  // identically zero minor
    int inf_mult = g - uni_degree(f);
    if (gcd_inf < 0) {
      gcd_fin = uni_gcd(f, f);  // monic normalization
      gcd_inf = inf_mult;
    } else {
      gcd_fin = uni_gcd(gcd_fin, f);
      gcd_inf = std::min(gcd_inf, inf_mult);
    }
    if (uni_degree(gcd_fin) <= 0 && gcd_inf == 0) trivial = true;
  };

  // iterate all g-subsets of rows and columns, lexicographically
  std::vector<Eigen::Index> rsel(g), csel(g);
  std::function<void(int, Eigen::Index)> pick_cols = [&](int depth, Eigen::Index start) {
    if (trivial) return;
    if (depth == g) {
      consider_minor(rsel, csel);
      return;
    }
    for (Eigen::Index c = start; c < n; ++c) {
      csel[depth] = c;
      pick_cols(depth + 1, c + 1);
    }
  };
  std::function<void(int, Eigen::Index)> pick_rows = [&](int depth, Eigen::Index start) {
    if (trivial) return;
    if (depth == g) {
      pick_cols(0, 0);
      return;
    }
    for (Eigen::Index r = start; r < n; ++r) {
      rsel[depth] = r;
      pick_rows(depth + 1, r + 1);
    }
  };
  pick_rows(0, 0);

  if (trivial || gcd_inf < 0) return out;  // pattern empty: no common divisor
  std::vector<Scalar> form;  // re-homogenize gcd_fin with gcd_inf extra v powers
  int d = uni_degree(gcd_fin);
  for (int k = d; k >= 0; --k) form.push_back(gcd_fin[k]);
  for (int k = 0; k < gcd_inf; ++k) form.insert(form.begin(), Scalar(0));
  out.drop_pattern = binary_form_root_pattern(form);
  return out;
}

std::string InvariantVector::str() const {
  auto vec = [](const std::vector<int>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
    os << ")";
    return os.str();
  };
  std::ostringstream os;
  os << "dim=" << dim << " lc=" << vec(lc_dims) << " nilindex=" << nilindex
     << " ann=" << left_dim << "/" << right_dim << "/" << center_dim
     << " split=" << split_rank << " C=" << vec(char_seq) << " layers=" << vec(layer_dims)
     << " lie=" << lie << " p=" << p << " type=" << to_string(type)
     << " pos=" << vec(positions) << " cube=" << vec(cube_pattern)
     << " grank=" << generic_rank << " drop=" << vec(rank_drop_pattern);
  return os.str();
}

InvariantVector invariant_vector(const AlgebraLaw& law) {
  InvariantVector v;
  v.dim = static_cast<int>(law.dim());
  SeriesReport series = lower_central_series(law);
  v.lc_dims = series.dims;
  v.nilindex = series.nilindex.value_or(-1);
  if (!series.nilpotent())
    throw std::invalid_argument("invariant_vector: law is not nilpotent");
  Annihilators ann = annihilators(law);
  v.left_dim = ann.left.dim();
  v.right_dim = ann.right.dim();
  v.center_dim = ann.center.dim();
  v.split_rank = split_abelian_rank(law);
  FiliformProfile prof = filiform_profile(law);
  v.char_seq = prof.char_seq.parts;
  v.p = prof.p;
  v.type = prof.algebra_type;
  v.positions = prof.positions;
  Gradation g = natural_gradation(law);
  v.layer_dims = g.layer_dims;
  v.lie = is_lie(law);
  v.cube_pattern = cube_form_pattern(law);
  RankDropProfile drop = rank_drop_profile(law);
  v.generic_rank = drop.generic_rank;
  v.rank_drop_pattern = drop.drop_pattern;
  return v;
}

namespace {

// words in the degree-1 generators paired across the two algebras
struct WordPairs {
  std::vector<VectorQ> a_side, b_side;
  bool a_generates = false;
};

WordPairs extend_by_products(const AlgebraLaw& a, const AlgebraLaw& b,
                             const std::vector<VectorQ>& gens_a,
                             const std::vector<VectorQ>& gens_b) {
  const Eigen::Index n = a.dim();
  WordPairs w;
  w.a_side = gens_a;
  w.b_side = gens_b;
  std::size_t head = 0;
  while (w.a_side.size() < static_cast<std::size_t>(n * n) &&
         head < w.a_side.size()) {
    for (std::size_t g = 0; g < gens_a.size(); ++g) {
      VectorQ pa = bracket(a, w.a_side[head], gens_a[g]);
      if (is_zero(pa)) continue;
      w.a_side.push_back(pa);
      w.b_side.push_back(bracket(b, w.b_side[head], gens_b[g]));
    }
    ++head;
  }
  MatrixQ stack(static_cast<Eigen::Index>(w.a_side.size()), n);
  for (std::size_t k = 0; k < w.a_side.size(); ++k) stack.row(k) = w.a_side[k].transpose();
  w.a_generates = rank(stack) == n;
  return w;
}

}  // namespace

GradedIsoResult graded_iso_search(const AlgebraLaw& a, const AlgebraLaw& b, long budget) {
  GradedIsoResult result;
  Gradation ga = natural_gradation(a);
  Gradation gb = natural_gradation(b);
  if (ga.layer_dims != gb.layer_dims) {
    result.verdict = IsoVerdict::NotIsomorphic;
    return result;
  }
  if (ga.layer_dims.empty() || ga.layer_dims[0] != 2)
    throw std::invalid_argument("graded_iso_search: degree-1 layer must be 2-dimensional");

  const Eigen::Index n = a.dim();
  std::vector<VectorQ> gens_a = {ga.layers[0].basis_vector(0), ga.layers[0].basis_vector(1)};
  std::vector<VectorQ> gens_b = {gb.layers[0].basis_vector(0), gb.layers[0].basis_vector(1)};

  {  // precondition: degree-1 layers generate
    WordPairs wa = extend_by_products(a, a, gens_a, gens_a);
    WordPairs wb = extend_by_products(b, b, gens_b, gens_b);
    if (!wa.a_generates || !wb.a_generates)
      throw std::invalid_argument("graded_iso_search: algebras not generated in degree 1");
  }

  const std::vector<Scalar>& grid = [] {
    static const std::vector<Scalar> g = {
        Scalar(0),  Scalar(1),  Scalar(-1), Scalar(2), Scalar(-2),
        Scalar::fraction(1, 2), Scalar::fraction(-1, 2),
        Scalar::i(), -Scalar::i(), Scalar(Rational(1), Rational(1)),
        Scalar(Rational(1), Rational(-1))};
    return g;
  }();

  const long m = static_cast<long>(grid.size());
  long total = m * m * m * m;
  for (long idx = 0; idx < total && result.candidates_tried < budget; ++idx) {
    long t = idx;
    Scalar c11 = grid[t % m]; t /= m;
    Scalar c12 = grid[t % m]; t /= m;
    Scalar c21 = grid[t % m]; t /= m;
    Scalar c22 = grid[t % m];
    if ((c11 * c22 - c12 * c21).is_zero()) continue;
    ++result.candidates_tried;

    std::vector<VectorQ> img = {gens_b[0] * c11 + gens_b[1] * c12,
                                gens_b[0] * c21 + gens_b[1] * c22};
    WordPairs words = extend_by_products(a, b, gens_a, img);

    // pick independent a-side words, mirror them on the b side
    MatrixQ wa = MatrixQ::Zero(n, n), wb = MatrixQ::Zero(n, n);
    Subspace acc = Subspace::zero(n);
    Eigen::Index got = 0;
    for (std::size_t k = 0; k < words.a_side.size() && got < n; ++k) {
      if (acc.contains(words.a_side[k])) continue;
      wa.row(got) = words.a_side[k].transpose();
      wb.row(got) = words.b_side[k].transpose();
      MatrixQ ext(acc.basis().rows() + 1, n);
      ext << acc.basis(), wa.row(got);
      acc = Subspace::span(n, ext);
      ++got;
    }
    if (got < n) continue;
    // phi: old a-coords -> b-coords; witness rows express b's basis in a.
    MatrixQ f = wb.transpose() * inverse(wa.transpose());
    if (!is_invertible(f)) continue;
    BasisChange p{inverse(f).transpose()};
    if (verify_isomorphism(a, b, p)) {
      result.verdict = IsoVerdict::Found;
      result.witness = p;
      return result;
    }
  }
  return result;
}

}  // namespace leibniz
