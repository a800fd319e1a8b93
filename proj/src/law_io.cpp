#include "leibniz/law_io.hpp"

#include <stdexcept>

namespace leibniz {

Json law_to_json(const AlgebraLaw& law) {
  Json j;
  j["dim"] = law.dim();
  j["basis"] = law.labels();
  Json products = Json::array();
  for (const auto& [key, value] : law.table()) {
    Json entry;
    entry["left"] = law.labels()[key.first];
    entry["right"] = law.labels()[key.second];
    Json val = Json::object();
    for (Eigen::Index k = 0; k < law.dim(); ++k)
      if (!value[k].is_zero()) val[law.labels()[k]] = value[k].str();
    entry["value"] = val;
    products.push_back(entry);
  }
  j["products"] = products;
  return j;
}

AlgebraLaw law_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim"))
    throw std::invalid_argument("law JSON: missing \"dim\"");
  Eigen::Index dim = j.at("dim").get<Eigen::Index>();
  std::vector<std::string> labels;
  if (j.contains("basis"))
    labels = j.at("basis").get<std::vector<std::string>>();
  else
    labels = default_labels(dim);
  AlgebraLaw law(dim, labels);
  if (!j.contains("products")) return law;
  for (const auto& entry : j.at("products")) {
    const std::string left = entry.at("left").get<std::string>();
    const std::string right = entry.at("right").get<std::string>();
    int i = law.label_index(left), k = law.label_index(right);
    if (i < 0 || k < 0)
      throw std::invalid_argument("law JSON: unknown basis name in product (" + left +
                                  ", " + right + ")");
    VectorQ v = law.product(i, k);
    for (const auto& [name, text] : entry.at("value").items()) {
      int t = law.label_index(name);
      if (t < 0) throw std::invalid_argument("law JSON: unknown basis name " + name);
      v[t] += Scalar::parse(text.get<std::string>());
    }
    law.set_product(i, k, v);
  }
  return law;
}

Json witness_to_json(const BasisChange& p) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < p.matrix.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < p.matrix.cols(); ++c) row.push_back(p.matrix(r, c).str());
    rows.push_back(row);
  }
  return Json{{"matrix", rows}};
}

BasisChange witness_from_json(const Json& j) {
  const auto& rows = j.at("matrix");
  const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
  MatrixQ m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto& row = rows.at(r);
    if (static_cast<Eigen::Index>(row.size()) != n)
      throw std::invalid_argument("witness JSON: matrix is not square");
    for (Eigen::Index c = 0; c < n; ++c)
      m(r, c) = Scalar::parse(row.at(c).get<std::string>());
  }
  return BasisChange{m};
}

Json invariants_to_json(const InvariantVector& v) {
  return Json{{"dim", v.dim},
              {"lower_central_dims", v.lc_dims},
              {"nilindex", v.nilindex},
              {"left_annihilator_dim", v.left_dim},
              {"right_annihilator_dim", v.right_dim},
              {"center_dim", v.center_dim},
              {"split_abelian_rank", v.split_rank},
              {"char_seq", v.char_seq},
              {"layer_dims", v.layer_dims},
              {"is_lie", v.lie},
              {"p", v.p},
              {"type", to_string(v.type)},
              {"positions", v.positions},
              {"cube_pattern", v.cube_pattern},
              {"generic_rank", v.generic_rank},
              {"rank_drop_pattern", v.rank_drop_pattern}};
}

}  // namespace leibniz
