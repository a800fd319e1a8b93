#include "leibniz/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "leibniz/catalog.hpp"
#include "leibniz/law_io.hpp"
#include "leibniz/templates.hpp"

namespace leibniz {

namespace {

AlgebraLaw resolve_law(const std::string& spec) {
  if (std::filesystem::exists(spec)) {
    std::ifstream in(spec);
    Json j;
    in >> j;
    return law_from_json(j);
  }
  return catalog_law(spec);
}

Json series_json(const SeriesReport& s) {
  Json j;
  j["dims"] = s.dims;
  if (s.nilindex)
    j["nilindex"] = *s.nilindex;
  else
    j["nilindex"] = nullptr;
  return j;
}

Json restriction_report_json(const RestrictionReport& r) {
  Json nec = Json::array();
  for (const auto& e : r.necessity)
    nec.push_back({{"equation", e.equation},
                   {"samples", e.samples},
                   {"detected", e.detected},
                   {"side_relaxed", e.side_relaxed}});
  return Json{{"set", r.set_name},
              {"sufficiency_all_zero", r.sufficiency_all_zero},
              {"nonzero_residuals", r.nonzero_residuals},
              {"equations_vanish", r.equations_vanish},
              {"empty_branch", r.empty_branch},
              {"necessity", nec}};
}

Json typeII_json(const TypeIIReport& r) {
  return Json{{"n", r.n},
              {"r", r.r},
              {"branch_alpha", r.branch_alpha},
              {"grid_points", r.grid_points},
              {"leibniz_valid", r.leibniz_valid},
              {"lie", r.lie},
              {"split", r.split},
              {"type_I_like", r.type_I_like},
              {"excluded_char_seq", r.excluded_char_seq},
              {"counterexamples", r.counterexamples},
              {"type_I_conversion_verified", r.type_I_conversion_verified}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact structure-constant computations for finite-dimensional Leibniz algebras"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name

  std::uint64_t seed = 12345;
  int samples = 25;
  long grid_budget = 20000;
  app.add_option("--seed", seed, "seed for the deterministic samplers");
  app.add_option("--samples", samples, "extra pseudo-random samples per search");
  app.add_option("--grid-budget", grid_budget, "cap on enumerated grid points");

  std::string law_name, law_b, witness_file, template_name, experiment;
  int opt_n = 6, opt_r = 3, opt_dim = 0;

  auto* c_check = app.add_subcommand("check", "identity, Lie, annihilator and series report");
  c_check->add_option("law", law_name)->required();

  auto* c_profile = app.add_subcommand("profile", "characteristic sequence and filiform profile");
  c_profile->add_option("law", law_name)->required();

  auto* c_series = app.add_subcommand("series", "lower central series");
  c_series->add_option("law", law_name)->required();

  auto* c_inv = app.add_subcommand("invariants", "isomorphism-invariant battery");
  c_inv->add_option("law", law_name)->required();

  auto* c_catalog = app.add_subcommand("catalog", "named laws");
  auto* c_list = c_catalog->add_subcommand("list", "name patterns, or the laws at --dim");
  c_list->add_option("--dim", opt_dim, "classification list for this dimension");
  auto* c_emit = c_catalog->add_subcommand("emit", "law JSON for a catalog name");
  c_emit->add_option("name", law_name)->required();

  auto* c_template = app.add_subcommand("template", "parameterized multiplication tables");
  auto* c_resid = c_template->add_subcommand("residuals", "symbolic Leibniz residuals");
  c_resid->add_option("name", template_name)->required();

  auto* c_iso = app.add_subcommand("iso", "isomorphism witness check / graded search");
  c_iso->add_option("a", law_name)->required();
  c_iso->add_option("b", law_b)->required();
  c_iso->add_option("--witness", witness_file, "witness JSON file to verify");

  auto* c_repro = app.add_subcommand("reproduce", "classification experiments");
  c_repro->add_option("experiment", experiment, "dim4|dim5|thmI12|typeII|theorem1|restrictions")
      ->required();
  c_repro->add_option("--n", opt_n);
  c_repro->add_option("--r", opt_r);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (c_check->parsed()) {
      AlgebraLaw law = resolve_law(law_name);
      LeibnizReport rep = leibniz_check(law);
      LieReport lie = lie_check(law);
      Annihilators ann = annihilators(law);
      SeriesReport series = lower_central_series(law);
      Json j;
      j["name"] = law_name;
      j["dim"] = law.dim();
      j["leibniz"] = {{"pass", rep.pass}, {"violations", rep.violations.size()}};
      if (!rep.pass) {
        const auto& v = rep.violations.front();
        j["leibniz"]["first_violation"] = {v.i + 1, v.j + 1, v.k + 1};
      }
      j["is_lie"] = lie.is_lie;
      if (!lie.is_lie) j["lie_offending_pair"] = {lie.i + 1, lie.j + 1};
      j["annihilators"] = {{"left", ann.left.dim()},
                           {"right", ann.right.dim()},
                           {"center", ann.center.dim()}};
      j["split_abelian_rank"] = split_abelian_rank(law);
      j["series"] = series_json(series);
      out << j.dump(2) << "\n";
      if (!rep.pass) {
        const auto& v = rep.violations.front();
        err << "leibniz identity fails at triple (" << v.i + 1 << "," << v.j + 1 << ","
            << v.k + 1 << ")\n";
        return 1;
      }
      err << "leibniz pass; " << (lie.is_lie ? "Lie" : "non-Lie") << "\n";
      return 0;
    }

    if (c_profile->parsed()) {
      AlgebraLaw law = resolve_law(law_name);
      FiliformProfile prof = filiform_profile(law, samples, seed);
      Gradation g = natural_gradation(law);
      Json j;
      j["name"] = law_name;
      j["char_seq"] = prof.char_seq.parts;
      j["p"] = prof.p;
      j["type"] = to_string(prof.algebra_type);
      j["positions"] = prof.positions;
      j["layer_dims"] = g.layer_dims;
      Json w = Json::array();
      for (Eigen::Index k = 0; k < prof.witness.size(); ++k)
        w.push_back(prof.witness[k].str());
      j["witness"] = w;
      out << j.dump(2) << "\n";
      err << "C=" << prof.char_seq.str() << " " << to_string(prof.algebra_type) << "\n";
      return 0;
    }

    if (c_series->parsed()) {
      AlgebraLaw law = resolve_law(law_name);
      out << series_json(lower_central_series(law)).dump(2) << "\n";
      return 0;
    }

    if (c_inv->parsed()) {
      AlgebraLaw law = resolve_law(law_name);
      InvariantVector v = invariant_vector(law);
      out << invariants_to_json(v).dump(2) << "\n";
      err << v.str() << "\n";
      return 0;
    }

    if (c_list->parsed()) {
      Json j;
      if (opt_dim >= 4) {
        Json entries = Json::array();
        for (const CatalogEntry& e : classify_graded_2filiform(opt_dim))
          entries.push_back({{"name", e.name}, {"provenance", e.provenance}});
        j["dim"] = opt_dim;
        j["laws"] = entries;
      } else {
        j["patterns"] = catalog_name_patterns();
      }
      out << j.dump(2) << "\n";
      return 0;
    }

    if (c_emit->parsed()) {
      out << law_to_json(catalog_law(law_name)).dump(2) << "\n";
      return 0;
    }

    if (c_resid->parsed()) {
      ParamLaw t = make_template(template_name);
      std::vector<Poly> residuals = leibniz_residuals(t);
      Json j;
      j["template"] = template_name;
      j["count"] = residuals.size();
      Json list = Json::array();
      for (const Poly& p : residuals) list.push_back(p.str());
      j["residuals"] = list;
      out << j.dump(2) << "\n";
      err << residuals.size() << " residuals\n";
      return 0;
    }

    if (c_iso->parsed()) {
      AlgebraLaw a = resolve_law(law_name), b = resolve_law(law_b);
      Json j;
      if (!witness_file.empty()) {
        std::ifstream in(witness_file);
        Json wj;
        in >> wj;
        BasisChange p = witness_from_json(wj);
        bool ok = verify_isomorphism(a, b, p);
        j["witness_verified"] = ok;
        out << j.dump(2) << "\n";
        err << (ok ? "witness verified" : "witness rejected") << "\n";
        return ok ? 0 : 1;
      }
      GradedIsoResult res = graded_iso_search(a, b, grid_budget);
      j["verdict"] = res.verdict == IsoVerdict::Found            ? "Found"
                     : res.verdict == IsoVerdict::NotIsomorphic ? "NotIsomorphic"
                                                                : "NotFoundWithinGrid";
      j["candidates_tried"] = res.candidates_tried;
      if (res.witness) j["witness"] = witness_to_json(*res.witness);
      out << j.dump(2) << "\n";
      err << j["verdict"].get<std::string>() << "\n";
      return res.verdict == IsoVerdict::Found ? 0 : 1;
    }

    if (c_repro->parsed()) {
      Json j;
      bool ok = false;
      if (experiment == "dim4") {
        Dim4Report r = reproduce_dim4();
        ok = r.ok();
        j = {{"experiment", "dim4"},
             {"survivors", r.survivors},
             {"rejected_rank", r.rejected_rank},
             {"rejected_split", r.rejected_split},
             {"all_survivors_verified", r.all_survivors_verified},
             {"rejections_as_stated", r.rejections_as_stated}};
      } else if (experiment == "dim5") {
        Dim5Report r = reproduce_dim5();
        ok = r.ok();
        j = {{"experiment", "dim5"},
             {"annihilator_separation", r.annihilator_separation},
             {"eps0_normalizations", r.eps0_normalizations},
             {"case1_to_mu4", r.case1_to_mu4},
             {"case2_samples", r.case2_samples},
             {"case2_preserved", r.case2_preserved},
             {"case2_witnesses", r.case2_witnesses},
             {"b1_forced_zero", r.b1_forced_zero},
             {"transform_formula", r.transform_formula}};
      } else if (experiment == "thmI12") {
        ThmI12Report r = reproduce_thm_I12(opt_n);
        ok = r.ok();
        j = {{"experiment", "thmI12"},
             {"n", r.n},
             {"minor_factor_found", r.minor_factor_found},
             {"minors_vanish_at_gamma0", r.minors_vanish_at_gamma0},
             {"gamma_nonzero_excluded", r.gamma_nonzero_excluded},
             {"grid_points", r.grid_points},
             {"verified_variant1", r.verified_variant1},
             {"verified_variant2", r.verified_variant2},
             {"failed", r.failed}};
      } else if (experiment == "typeII") {
        Json list = Json::array();
        ok = true;
        for (int branch : {0, -1}) {
          TypeIIReport r = verify_typeII_lemma(opt_n, opt_r, branch, grid_budget);
          ok = ok && r.ok();
          list.push_back(typeII_json(r));
        }
        j = {{"experiment", "typeII"}, {"reports", list}};
      } else if (experiment == "theorem1") {
        Theorem1Report r = verify_theorem1(5, 9, grid_budget);
        ok = r.ok();
        j = {{"experiment", "theorem1"},
             {"catalog_laws_checked", r.catalog_laws_checked},
             {"template_points_checked", r.template_points_checked},
             {"type_I_profiles", r.type_I_profiles},
             {"violations", r.violations}};
      } else if (experiment == "restrictions") {
        Json list = Json::array();
        ok = true;
        {
          ParamLaw t = make_T_I11(opt_n);
          RestrictionReport r = verify_restrictions(t, restrictions_I11(t, opt_n), 100);
          ok = ok && r.sufficiency_all_zero;
          list.push_back(restriction_report_json(r));
        }
        if (opt_n >= 6) {
          ParamLaw t = make_T_I12(opt_n);
          RestrictionReport r = verify_restrictions(t, restrictions_I12(t, opt_n), 100);
          ok = ok && r.sufficiency_all_zero;
          list.push_back(restriction_report_json(r));
        }
        j = {{"experiment", "restrictions"}, {"n", opt_n}, {"reports", list}};
      } else {
        err << "unknown experiment: " << experiment << "\n";
        return 2;
      }
      j["pass"] = ok;
      out << j.dump(2) << "\n";
      err << "experiment " << experiment << ": " << (ok ? "pass" : "FAIL") << "\n";
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace leibniz
