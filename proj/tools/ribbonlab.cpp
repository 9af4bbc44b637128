#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ribbon/json_io.hpp"
#include "ribbon/random_gen.hpp"
#include "ribbon/selftest.hpp"
#include "ribbon/surface.hpp"

namespace {

using namespace ribbon;

constexpr int kExitValidation = 1;
constexpr int kExitMalformed = 2;

[[noreturn]] void die(int code, const std::string& kind, const std::string& msg) {
  std::cerr << Json{{"error", kind}, {"message", msg}}.dump() << "\n";
  std::exit(code);
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) die(kExitMalformed, "io", "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    die(kExitMalformed, "parse", std::string("invalid JSON in ") + path + ": " + e.what());
  }
}

std::vector<Rational> parse_vector(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(rational_parse(tok));
  }
  return out;
}

Json report_issues(const ValidationReport& rep) {
  Json issues = Json::array();
  for (const auto& m : rep.issues) issues.push_back(m);
  return issues;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::uint64_t default_seed() {
  if (const char* env = std::getenv("RIBBONLAB_SEED")) return std::strtoull(env, nullptr, 10);
  return 20260826ull;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ribbonlab: exact computations on multiple schemes over P^1"};
  app.require_subcommand(1);

  // validate <scheme.json>
  std::string validate_path;
  auto* cmd_validate = app.add_subcommand("validate", "validate a scheme file");
  cmd_validate->add_option("scheme", validate_path, "scheme JSON file")->required();

  // classify-double --ldeg L [--d-cochain file]
  int cd_ldeg = 0;
  std::string cd_cochain;
  auto* cmd_cd = app.add_subcommand("classify-double", "class of a double structure");
  cmd_cd->add_option("--ldeg", cd_ldeg, "degree of the conormal line bundle")->required();
  cmd_cd->add_option("--d-cochain", cd_cochain, "1-cocycle JSON file (default: zero)");

  // extend --scheme file --ideal-class vector
  std::string ex_scheme, ex_class;
  auto* cmd_ex = app.add_subcommand("extend", "extend a scheme one multiplicity step");
  cmd_ex->add_option("--scheme", ex_scheme, "scheme JSON file")->required();
  cmd_ex->add_option("--ideal-class", ex_class, "comma-separated class coefficients")
      ->required();

  // obstruct-diff --scheme file --eta vector
  std::string ob_scheme, ob_eta;
  auto* cmd_ob = app.add_subcommand("obstruct-diff", "obstruction difference vs cup product");
  cmd_ob->add_option("--scheme", ob_scheme, "scheme JSON file")->required();
  cmd_ob->add_option("--eta", ob_eta, "comma-separated class coefficients")->required();

  // picard-ledger --ldeg L --nmax N
  int pl_ldeg = 0, pl_nmax = 2;
  auto* cmd_pl = app.add_subcommand("picard-ledger", "restriction fiber dimensions");
  cmd_pl->add_option("--ldeg", pl_ldeg)->required();
  cmd_pl->add_option("--nmax", pl_nmax)->required();

  // ext-classes --bundle file --scheme file
  std::string ec_bundle, ec_scheme;
  auto* cmd_ec = app.add_subcommand("ext-classes", "extension classes of a line bundle");
  cmd_ec->add_option("--bundle", ec_bundle, "bundle JSON file")->required();
  cmd_ec->add_option("--scheme", ec_scheme, "ambient scheme JSON file")->required();

  // k3 --eta1 q --eta4 q --gc g --gd g
  std::string k3_eta1 = "0", k3_eta4 = "0";
  int k3_gc = 2, k3_gd = 2;
  bool k3_irrational = false;
  auto* cmd_k3 = app.add_subcommand("k3", "K3-carpet style classification");
  cmd_k3->add_option("--eta1", k3_eta1)->required();
  cmd_k3->add_option("--eta4", k3_eta4)->required();
  cmd_k3->add_option("--gc", k3_gc)->required();
  cmd_k3->add_option("--gd", k3_gd)->required();
  cmd_k3->add_flag("--irrational-ratio", k3_irrational, "declare eta1/eta4 irrational");

  // kunneth --profiles file --lc name --ld name
  std::string ku_profiles, ku_lc, ku_ld;
  auto* cmd_ku = app.add_subcommand("kunneth", "Kunneth cohomology dimensions");
  cmd_ku->add_option("--profiles", ku_profiles, "profiles JSON file {\"C\":...,\"D\":...}")
      ->required();
  cmd_ku->add_option("--lc", ku_lc, "bundle name on the first factor")->required();
  cmd_ku->add_option("--ld", ku_ld, "bundle name on the second factor")->required();

  // predicates --g g --degl l [--hyperelliptic] [--canonical]
  int pr_g = 2, pr_degl = 0;
  bool pr_hyper = false, pr_canonical = false;
  auto* cmd_pr = app.add_subcommand("predicates", "non-degeneracy predicates for ribbons");
  cmd_pr->add_option("--g", pr_g)->required();
  cmd_pr->add_option("--degl", pr_degl)->required();
  cmd_pr->add_flag("--hyperelliptic", pr_hyper);
  cmd_pr->add_flag("--canonical", pr_canonical);

  // selftest [--seed s]
  std::uint64_t st_seed = default_seed();
  auto* cmd_st = app.add_subcommand("selftest", "run the deterministic property corpus");
  cmd_st->add_option("--seed", st_seed, "random seed (env RIBBONLAB_SEED overrides default)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_validate) {
      MultiScheme X = scheme_from_json(load_json(validate_path));
      ValidationReport rep = validate_gluing(X);
      emit(Json{{"criterion", "gluing-cocycle"},
                {"ok", rep.ok},
                {"n", X.n},
                {"l_degree", X.l_degree},
                {"issues", report_issues(rep)}});
      return rep.ok ? 0 : kExitValidation;
    }
    if (*cmd_cd) {
      Cochain D = cd_cochain.empty()
                      ? Cochain::zero(1, Cover::three_charts, Twist{cd_ldeg, 2})
                      : cochain_from_json(load_json(cd_cochain));
      if (!(D.twist == Twist{cd_ldeg, 2}))
        die(kExitMalformed, "input", "cochain twist must be {d: ldeg, shift1: 2}");
      if (!is_cocycle(D)) die(kExitValidation, "input", "d-cochain is not a cocycle");
      MultiScheme X = make_double(cd_ldeg, D);
      emit(Json{{"criterion", "double-class"},
                {"scheme", scheme_to_json(X)},
                {"class", class_to_json(double_class(X))}});
      return 0;
    }
    if (*cmd_ex) {
      MultiScheme X = scheme_from_json(load_json(ex_scheme));
      ValidationReport rep = validate_gluing(X);
      if (!rep.ok) die(kExitValidation, "input", "scheme fails validation");
      IdealExtensions ext = ideal_extensions(X);
      std::vector<Rational> coeffs = parse_vector(ex_class);
      if (static_cast<int>(coeffs.size()) != ext.dim)
        die(kExitMalformed, "input",
            "ideal-class needs " + std::to_string(ext.dim) + " coefficients");
      MultiScheme Y = extend_scheme(X, ideal_extension_cocycle(X, ext, coeffs));
      emit(Json{{"criterion", "scheme-extension"},
                {"torsor_dim", ext.dim},
                {"scheme", scheme_to_json(Y)}});
      return 0;
    }
    if (*cmd_ob) {
      MultiScheme X = scheme_from_json(load_json(ob_scheme));
      if (X.cover != Cover::three_charts)
        die(kExitMalformed, "input", "obstruct-diff needs the three-chart cover");
      ValidationReport rep = validate_gluing(X);
      if (!rep.ok) die(kExitValidation, "input", "scheme fails validation");
      std::vector<Rational> coeffs = parse_vector(ob_eta);
      CohClass cls = zero_class(Twist{X.l_degree * (X.n - 1), 0}, 1);
      if (static_cast<int>(coeffs.size()) != cls.dim())
        die(kExitMalformed, "input",
            "eta needs " + std::to_string(cls.dim()) + " coefficients");
      cls.coeffs = coeffs;
      ObstructionDifference od =
          obstruction_difference(X, class_representative(cls, X.cover));
      emit(Json{{"criterion", "obstruction-shift"},
                {"cup", cochain_to_json(od.cup_cochain)},
                {"difference", cochain_to_json(od.defect_difference)},
                {"matches_cup_mod_coboundary", od.matches_cup_mod_coboundary}});
      return od.matches_cup_mod_coboundary ? 0 : kExitValidation;
    }
    if (*cmd_pl) {
      auto led = picard_ledger(pl_ldeg, pl_nmax);
      emit(Json{{"criterion", "picard-restriction-fibers"},
                {"l_degree", pl_ldeg},
                {"nmax", pl_nmax},
                {"fiber_dims", led}});
      return 0;
    }
    if (*cmd_ec) {
      BundleCocycle E = bundle_from_json(load_json(ec_bundle));
      MultiScheme ambient = scheme_from_json(load_json(ec_scheme));
      if (!validate_bundle(E).ok) die(kExitValidation, "input", "bundle fails validation");
      if (!validate_gluing(ambient).ok)
        die(kExitValidation, "input", "ambient scheme fails validation");
      ExtensionTorsor tor = extension_classes(E, ambient);
      emit(Json{{"criterion", "extension-classes"},
                {"torsor_dim", tor.torsor_dim},
                {"delta0_image_dim", tor.delta0_image_dim},
                {"quotient_dim", tor.quotient_dim}});
      return 0;
    }
    if (*cmd_k3) {
      K3Report rep = k3_classify(rational_parse(k3_eta1), rational_parse(k3_eta4),
                                 k3_irrational, k3_gc, k3_gd);
      const char* lattice = rep.lattice == K3Report::Lattice::all    ? "all"
                            : rep.lattice == K3Report::Lattice::line ? "line"
                                                                     : "only_zero";
      emit(Json{{"criterion", "k3-classification"},
                {"eta_zero", rep.eta_zero},
                {"lattice", lattice},
                {"lattice_generator", Json::array({rep.generator.first, rep.generator.second})},
                {"projective", rep.projective},
                {"extends_to_x3", rep.extends_to_x3}});
      return 0;
    }
    if (*cmd_ku) {
      Json j = load_json(ku_profiles);
      if (!j.contains("C") || !j.contains("D"))
        die(kExitMalformed, "input", "profiles file needs objects C and D");
      CurveProfile C = profile_from_json(j["C"]), D = profile_from_json(j["D"]);
      std::array<int, 3> kd = kunneth_dims(C, D, ku_lc, ku_ld);
      emit(Json{{"criterion", "kunneth-dimensions"},
                {"h0", kd[0]},
                {"h1", kd[1]},
                {"h2", kd[2]},
                {"euler", kd[0] - kd[1] + kd[2]}});
      return 0;
    }
    if (*cmd_pr) {
      NonbanalReport rep = nonbanal_predicates(pr_g, pr_degl, pr_hyper, pr_canonical);
      emit(Json{{"criterion", "nonbanal-predicates"},
                {"ok", rep.ok},
                {"issue", rep.issue},
                {"pic_nonbanal", rep.pic_nonbanal},
                {"moduli_nonbanal", rep.moduli_nonbanal}});
      return 0;
    }
    if (*cmd_st) {
      int failures = run_selftest(st_seed, std::cout);
      return failures == 0 ? 0 : kExitValidation;
    }
  } catch (const std::invalid_argument& e) {
    die(kExitMalformed, "input", e.what());
  } catch (const std::exception& e) {
    die(kExitValidation, "internal", e.what());
  }
  return 0;
}
