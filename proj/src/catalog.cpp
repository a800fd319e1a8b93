#include "leibniz/catalog.hpp"

#include <sstream>
#include <stdexcept>

namespace leibniz {

namespace {

std::vector<std::string> family_labels(int n) {
  // X0..X{n-2}, Y
  std::vector<std::string> labels;
  for (int k = 0; k <= n - 2; ++k) labels.push_back("X" + std::to_string(k));
  labels.push_back("Y");
  return labels;
}

std::vector<std::string> chain_labels(int n) {
  // X0..X{n-1}
  std::vector<std::string> labels;
  for (int k = 0; k <= n - 1; ++k) labels.push_back("X" + std::to_string(k));
  return labels;
}

// [a, b] = c * e_target, stored with its antisymmetric partner.
void set_pair(AlgebraLaw& law, int a, int b, int target, const Scalar& c) {
  law.add_to_product(a, b, target, c);
  law.add_to_product(b, a, target, -c);
}

void gate(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

AlgebraLaw checked(AlgebraLaw law, const std::string& name) {
  LeibnizReport rep = leibniz_check(law);
  if (!rep.pass) {
    const auto& v = rep.violations.front();
    std::ostringstream os;
    os << name << ": structure constants violate the defining identity at triple ("
       << v.i + 1 << "," << v.j + 1 << "," << v.k + 1 << ")";
    throw std::logic_error(os.str());
  }
  law.mark_leibniz_verified();
  return law;
}

Scalar half(long num) { return Scalar::fraction(num, 2); }

}  // namespace

AlgebraLaw build_Ln(int n) {
  gate(n >= 3, "Ln requires n >= 3");
  AlgebraLaw law(n, chain_labels(n));
  for (int i = 1; i <= n - 2; ++i) set_pair(law, 0, i, i + 1, Scalar(1));
  return checked(std::move(law), "Ln(" + std::to_string(n) + ")");
}

AlgebraLaw build_Qn(int n) {
  gate(n >= 6, "Qn requires n >= 6");
  gate(n % 2 == 0, "Qn requires n even");
  AlgebraLaw law(n, chain_labels(n));
  for (int i = 1; i <= n - 2; ++i) set_pair(law, 0, i, i + 1, Scalar(1));
  for (int i = 1; 2 * i <= n - 2; ++i)
    set_pair(law, i, n - 1 - i, n - 1, (i - 1) % 2 == 0 ? Scalar(1) : Scalar(-1));
  return checked(std::move(law), "Qn(" + std::to_string(n) + ")");
}

AlgebraLaw build_L_nr(int n, int r) {
  gate(n >= 5, "L(n,r) requires n >= 5");
  gate(r % 2 == 1, "L(n,r) requires r odd");
  gate(3 <= r && r <= 2 * ((n - 1) / 2) - 1, "L(n,r): r out of range");
  AlgebraLaw law(n, family_labels(n));
  const int y = n - 1;
  for (int i = 1; i <= n - 3; ++i) set_pair(law, 0, i, i + 1, Scalar(1));
  for (int i = 1; 2 * i <= r - 1; ++i)
    set_pair(law, i, r - i, y, (i - 1) % 2 == 0 ? Scalar(1) : Scalar(-1));
  return checked(std::move(law), "L(" + std::to_string(n) + "," + std::to_string(r) + ")");
}

AlgebraLaw build_Q_nr(int n, int r) {
  gate(n >= 7, "Q(n,r) requires n >= 7");
  gate(n % 2 == 1, "Q(n,r) requires n odd");
  gate(r % 2 == 1, "Q(n,r) requires r odd");
  gate(3 <= r && r <= n - 4, "Q(n,r): r out of range");
  AlgebraLaw law(n, family_labels(n));
  const int y = n - 1;
  for (int i = 1; i <= n - 3; ++i) set_pair(law, 0, i, i + 1, Scalar(1));
  for (int i = 1; 2 * i <= r - 1; ++i)
    set_pair(law, i, r - i, y, (i - 1) % 2 == 0 ? Scalar(1) : Scalar(-1));
  for (int i = 1; 2 * i <= n - 3; ++i)
    set_pair(law, i, n - 2 - i, n - 2, (i - 1) % 2 == 0 ? Scalar(1) : Scalar(-1));
  return checked(std::move(law), "Q(" + std::to_string(n) + "," + std::to_string(r) + ")");
}

AlgebraLaw build_tau_n4(int n) {
  gate(n >= 7, "tau(n,n-4) requires n >= 7");
  gate(n % 2 == 1, "tau(n,n-4) requires n odd");
  AlgebraLaw law(n, family_labels(n));
  const int y = n - 1;
  for (int i = 1; i <= n - 3; ++i) set_pair(law, 0, i, i + 1, Scalar(1));
  for (int i = 1; 2 * i <= n - 5; ++i) {
    Scalar sign = (i - 1) % 2 == 0 ? Scalar(1) : Scalar(-1);
    set_pair(law, i, n - 4 - i, n - 4, sign);
    set_pair(law, i, n - 4 - i, y, sign);
    set_pair(law, i, n - 3 - i, n - 3, sign * half(n - 3 - 2 * i));
  }
  for (int i = 2; 2 * i <= n - 3; ++i) {
    Scalar sign = i % 2 == 0 ? Scalar(1) : Scalar(-1);
    set_pair(law, i, n - 2 - i, n - 2, sign * Scalar(i - 1) * half(n - 3 - i));
  }
  for (int i = 1; i <= 2; ++i) set_pair(law, i, y, n - 4 + i, half(5 - n));
  return checked(std::move(law), "tau(" + std::to_string(n) + "," + std::to_string(n - 4) + ")");
}

AlgebraLaw build_tau_n3(int n) {
  gate(n >= 6, "tau(n,n-3) requires n >= 6");
  gate(n % 2 == 0, "tau(n,n-3) requires n even");
  AlgebraLaw law(n, family_labels(n));
  const int y = n - 1;
  for (int i = 1; i <= n - 3; ++i) set_pair(law, 0, i, i + 1, Scalar(1));
  for (int i = 1; 2 * i <= n - 4; ++i) {
    Scalar sign = (i - 1) % 2 == 0 ? Scalar(1) : Scalar(-1);
    set_pair(law, i, n - 3 - i, n - 3, sign);
    set_pair(law, i, n - 3 - i, y, sign);
    set_pair(law, i, n - 2 - i, n - 2, sign * half(n - 2 - 2 * i));
  }
  set_pair(law, 1, y, n - 2, half(4 - n));
  return checked(std::move(law), "tau(" + std::to_string(n) + "," + std::to_string(n - 3) + ")");
}

AlgebraLaw build_nullfiliform(int n) {
  gate(n >= 1, "NF requires n >= 1");
  AlgebraLaw law(n);
  for (int i = 1; i <= n - 1; ++i)
    law.add_to_product(i - 1, 0, i, Scalar(1));  // [e_i, e_1] = e_{i+1}
  return checked(std::move(law), "NF(" + std::to_string(n) + ")");
}

AlgebraLaw build_filiform_typeI(int m) {
  gate(m >= 3, "F1 requires m >= 3");
  std::vector<std::string> labels = default_labels(m - 1);
  labels.push_back("f");
  AlgebraLaw law(m, labels);
  for (int i = 1; i <= m - 2; ++i) {
    law.add_to_product(i - 1, 0, i, Scalar(1));      // [e_i, e_1] = e_{i+1}
    law.add_to_product(i - 1, m - 1, i, Scalar(1));  // [e_i, f]   = e_{i+1}
  }
  return checked(std::move(law), "F1(" + std::to_string(m) + ")");
}

AlgebraLaw build_dim4() {
  AlgebraLaw law(4);
  law.add_to_product(0, 0, 1, Scalar(1));  // [e1,e1] = e2
  law.add_to_product(0, 2, 3, Scalar(1));  // [e1,e3] = e4
  return checked(std::move(law), "dim4");
}

AlgebraLaw build_L_alpha_eps(const Scalar& alpha, int eps) {
  gate(eps == 0 || eps == 1, "Lalpha: eps must be 0 or 1");
  AlgebraLaw law(5);
  law.add_to_product(0, 0, 1, Scalar(1));  // [e1,e1] = e2
  law.add_to_product(1, 0, 2, Scalar(1));  // [e2,e1] = e3
  law.add_to_product(0, 3, 1, alpha);      // [e1,e4] = a*e2 + e5
  law.add_to_product(0, 3, 4, Scalar(1));
  law.add_to_product(1, 3, 2, alpha);      // [e2,e4] = a*e3
  if (eps == 1) law.add_to_product(4, 3, 2, Scalar(1));  // [e5,e4] = e3
  return checked(std::move(law), "Lalpha(" + alpha.str() + "," + std::to_string(eps) + ")");
}

AlgebraLaw build_mu(int k) {
  switch (k) {
    case 1: return build_L_alpha_eps(Scalar(1), 0);
    case 2: return build_L_alpha_eps(Scalar(0), 0);
    case 3: return build_L_alpha_eps(Scalar::i(), 1);
    case 4: return build_L_alpha_eps(Scalar(0), 1);
    default: throw std::invalid_argument("mu index must be 1..4");
  }
}

AlgebraLaw build_thm_I12(int n, int variant) {
  gate(n >= 6, "thmI12 requires n >= 6");
  gate(variant == 1 || variant == 2, "thmI12 variant must be 1 or 2");
  AlgebraLaw law(n);
  for (int i = 1; i <= n - 3; ++i) law.add_to_product(i - 1, 0, i, Scalar(1));
  if (variant == 1) {
    law.add_to_product(0, n - 2, 1, Scalar(1));  // [e1,e_{n-1}] = e2 + en
    law.add_to_product(0, n - 2, n - 1, Scalar(1));
    for (int i = 2; i <= n - 3; ++i) law.add_to_product(i - 1, n - 2, i, Scalar(1));
  } else {
    law.add_to_product(0, n - 2, n - 1, Scalar(1));  // [e1,e_{n-1}] = en
  }
  return checked(std::move(law),
                 "thmI12(" + std::to_string(n) + "," + std::to_string(variant) + ")");
}

std::vector<CatalogEntry> classify_graded_2filiform(int n) {
  gate(n >= 4, "classification list requires n >= 4");
  std::vector<CatalogEntry> out;
  auto add = [&](std::string name, std::string prov, AlgebraLaw law) {
    out.push_back({std::move(name), std::move(prov), std::move(law)});
  };

  if (n == 4) add("dim4", "nonlie_nonsplit", build_dim4());
  if (n == 5)
    for (int k = 1; k <= 4; ++k)
      add("mu" + std::to_string(k), "nonlie_nonsplit", build_mu(k));
  if (n >= 6)
    for (int variant = 1; variant <= 2; ++variant)
      add("thmI12(" + std::to_string(n) + "," + std::to_string(variant) + ")",
          "nonlie_nonsplit", build_thm_I12(n, variant));

  add("NF(" + std::to_string(n - 2) + ")+C^2", "split_typeI",
      direct_sum(build_nullfiliform(n - 2), abelian_law(2)));
  add("F1(" + std::to_string(n - 1) + ")+C", "split_typeI",
      direct_sum(build_filiform_typeI(n - 1), abelian_law(1)));

  for (int r = 3; r <= 2 * ((n - 1) / 2) - 1 && n >= 5; r += 2)
    add("L(" + std::to_string(n) + "," + std::to_string(r) + ")", "lie_family",
        build_L_nr(n, r));
  if (n >= 7 && n % 2 == 1)
    for (int r = 3; r <= n - 4; r += 2)
      add("Q(" + std::to_string(n) + "," + std::to_string(r) + ")", "lie_family",
          build_Q_nr(n, r));
  if (n >= 7 && n % 2 == 1)
    add("tau(" + std::to_string(n) + "," + std::to_string(n - 4) + ")", "lie_family",
        build_tau_n4(n));
  if (n >= 6 && n % 2 == 0)
    add("tau(" + std::to_string(n) + "," + std::to_string(n - 3) + ")", "lie_family",
        build_tau_n3(n));
  return out;
}

std::vector<CatalogEntry> all_catalog_laws(int max_dim) {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string name, std::string prov, AlgebraLaw law) {
    if (law.dim() <= max_dim)
      out.push_back({std::move(name), std::move(prov), std::move(law)});
  };
  for (int n = 3; n <= max_dim; ++n) add("Ln(" + std::to_string(n) + ")", "lie_family", build_Ln(n));
  for (int n = 6; n <= max_dim; n += 2)
    add("Qn(" + std::to_string(n) + ")", "lie_family", build_Qn(n));
  for (int n = 5; n <= max_dim; ++n)
    for (int r = 3; r <= 2 * ((n - 1) / 2) - 1; r += 2)
      add("L(" + std::to_string(n) + "," + std::to_string(r) + ")", "lie_family",
          build_L_nr(n, r));
  for (int n = 7; n <= max_dim; n += 2)
    for (int r = 3; r <= n - 4; r += 2)
      add("Q(" + std::to_string(n) + "," + std::to_string(r) + ")", "lie_family",
          build_Q_nr(n, r));
  for (int n = 7; n <= max_dim; n += 2)
    add("tau(" + std::to_string(n) + "," + std::to_string(n - 4) + ")", "lie_family",
        build_tau_n4(n));
  for (int n = 6; n <= max_dim; n += 2)
    add("tau(" + std::to_string(n) + "," + std::to_string(n - 3) + ")", "lie_family",
        build_tau_n3(n));
  for (int n = 1; n <= max_dim; ++n)
    add("NF(" + std::to_string(n) + ")", "nonlie", build_nullfiliform(n));
  for (int m = 3; m <= max_dim; ++m)
    add("F1(" + std::to_string(m) + ")", "nonlie", build_filiform_typeI(m));
  add("dim4", "nonlie_nonsplit", build_dim4());
  for (int k = 1; k <= 4; ++k)
    add("mu" + std::to_string(k), "nonlie_nonsplit", build_mu(k));
  for (int n = 6; n <= max_dim; ++n)
    for (int variant = 1; variant <= 2; ++variant)
      add("thmI12(" + std::to_string(n) + "," + std::to_string(variant) + ")",
          "nonlie_nonsplit", build_thm_I12(n, variant));
  return out;
}

namespace {

// name(arg1,arg2,...) -> (name, args); plain names get no args.
struct ParsedName {
  std::string head;
  std::vector<std::string> args;
};

ParsedName parse_name(const std::string& text) {
  ParsedName p;
  auto open = text.find('(');
  if (open == std::string::npos) {
    p.head = text;
    return p;
  }
  if (text.back() != ')')
    throw std::invalid_argument("catalog name: missing ')' in " + text);
  p.head = text.substr(0, open);
  std::string inner = text.substr(open + 1, text.size() - open - 2);
  std::string cur;
  int depth = 0;
  for (char c : inner) {
    if (c == ',' && depth == 0) {
      p.args.push_back(cur);
      cur.clear();
    } else {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      cur += c;
    }
  }
  if (!cur.empty() || !p.args.empty()) p.args.push_back(cur);
  return p;
}

int int_arg(const ParsedName& p, std::size_t k) {
  if (k >= p.args.size())
    throw std::invalid_argument("catalog name " + p.head + ": missing argument");
  return std::stoi(p.args[k]);
}

}  // namespace

AlgebraLaw catalog_law(const std::string& name) {
  ParsedName p = parse_name(name);
  const std::size_t argc = p.args.size();
  if (p.head == "dim4" && argc == 0) return build_dim4();
  if (p.head == "mu1" && argc == 0) return build_mu(1);
  if (p.head == "mu2" && argc == 0) return build_mu(2);
  if (p.head == "mu3" && argc == 0) return build_mu(3);
  if (p.head == "mu4" && argc == 0) return build_mu(4);
  if (p.head == "Ln" && argc == 1) return build_Ln(int_arg(p, 0));
  if (p.head == "Qn" && argc == 1) return build_Qn(int_arg(p, 0));
  if (p.head == "L" && argc == 2) return build_L_nr(int_arg(p, 0), int_arg(p, 1));
  if (p.head == "Q" && argc == 2) return build_Q_nr(int_arg(p, 0), int_arg(p, 1));
  if (p.head == "tau" && argc == 2) {
    int n = int_arg(p, 0), r = int_arg(p, 1);
    if (r == n - 4) return build_tau_n4(n);
    if (r == n - 3) return build_tau_n3(n);
    throw std::invalid_argument("tau(n,r): r must be n-4 or n-3");
  }
  if (p.head == "NF" && argc == 1) return build_nullfiliform(int_arg(p, 0));
  if (p.head == "F1" && argc == 1) return build_filiform_typeI(int_arg(p, 0));
  if (p.head == "Lalpha" && argc == 2)
    return build_L_alpha_eps(Scalar::parse(p.args[0]), std::stoi(p.args[1]));
  if (p.head == "thmI12" && argc == 2)
    return build_thm_I12(int_arg(p, 0), int_arg(p, 1));
  if (p.head == "abelian" && argc == 1) return abelian_law(int_arg(p, 0));
  throw std::invalid_argument("unknown catalog name: " + name);
}

std::vector<std::string> catalog_name_patterns() {
  return {"Ln(n)",       "Qn(n)",   "L(n,r)",        "Q(n,r)",       "tau(n,n-4)",
          "tau(n,n-3)",  "NF(n)",   "F1(m)",         "dim4",         "mu1",
          "mu2",         "mu3",     "mu4",           "Lalpha(a,eps)", "thmI12(n,1|2)",
          "abelian(n)"};
}

}  // namespace leibniz
