// weilab command-line front end; talks to the shared library through the C
// API only.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weilab.h"

namespace {

struct AlgebraHandle {
  weilab_algebra* a = nullptr;
  ~AlgebraHandle() { weilab_algebra_close(a); }
};

int fail(weilab_status status) {
  std::cerr << "weilab: " << weilab_last_error() << "\n";
  return status == WEILAB_ERR_USAGE ? 2 : 1;
}

int emit(weilab_status status, char* text, const std::string& out_file = "") {
  if (status != WEILAB_OK) return fail(status);
  if (out_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_file);
    if (!out) {
      std::cerr << "weilab: cannot write '" << out_file << "'\n";
      weilab_string_free(text);
      return 1;
    }
    out << text;
  }
  weilab_string_free(text);
  return 0;
}

// "2" or "2:4"
bool parse_range(const std::string& text, uint32_t& lo, uint32_t& hi) {
  auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      lo = hi = static_cast<uint32_t>(std::stoul(text));
    } else {
      lo = static_cast<uint32_t>(std::stoul(text.substr(0, colon)));
      hi = static_cast<uint32_t>(std::stoul(text.substr(colon + 1)));
    }
  } catch (...) {
    return false;
  }
  return lo >= 1 && hi >= lo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation with Weil algebras D^r_k/I: invariants, "
               "triviality certificates for the fixed-point subalgebra, "
               "automorphism tools, and a seeded scan harness."};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  std::string spec_path, poly_text, map_text, export_file, out_file;
  uint32_t weight_bound = 0;
  bool no_prop4 = false;

  auto add_spec = [&](CLI::App* cmd) {
    cmd->add_option("spec", spec_path, "algebra spec file")->required();
  };

  CLI::App* c_info = app.add_subcommand("info", "dimension, order, width, socle");
  add_spec(c_info);
  CLI::App* c_basis = app.add_subcommand("basis", "standard monomial basis");
  add_spec(c_basis);
  CLI::App* c_multable =
      app.add_subcommand("multable", "multiplication table of basis classes");
  add_spec(c_multable);
  CLI::App* c_nf = app.add_subcommand("nf", "normal form of a polynomial");
  add_spec(c_nf);
  c_nf->add_option("poly", poly_text, "polynomial")->required();
  CLI::App* c_socle = app.add_subcommand("socle", "socle and MA subalgebra");
  add_spec(c_socle);
  CLI::App* c_classify =
      app.add_subcommand("classify", "triviality certificates for SA");
  add_spec(c_classify);
  c_classify->add_option("--weight-bound", weight_bound,
                         "max weight entry for the grading search");
  c_classify->add_flag("--no-prop4", no_prop4,
                       "skip the order-theorem certificate");
  CLI::App* c_weights =
      app.add_subcommand("weights", "search for ideal grading weights");
  add_spec(c_weights);
  c_weights->add_option("--weight-bound", weight_bound,
                        "max weight entry for the grading search");
  CLI::App* c_derivations =
      app.add_subcommand("derivations", "basis of the derivation Lie algebra");
  add_spec(c_derivations);
  CLI::App* c_fixed = app.add_subcommand(
      "fixed", "certified upper bound K' on the fixed-point subalgebra");
  add_spec(c_fixed);
  CLI::App* c_aut_verify =
      app.add_subcommand("aut-verify", "check a concrete endomorphism");
  add_spec(c_aut_verify);
  c_aut_verify
      ->add_option("--map", map_text, "images, e.g. \"x -> -x; y -> y\"")
      ->required();
  CLI::App* c_aut_constraints = app.add_subcommand(
      "aut-constraints", "constraint system on automorphism coefficients");
  add_spec(c_aut_constraints);
  c_aut_constraints->add_option("--export", export_file,
                                "write equations to a file");
  CLI::App* c_conjecture =
      app.add_subcommand("conjecture", "check K' against MA");
  add_spec(c_conjecture);

  weilab_scan_config scan_cfg;
  weilab_scan_config_init(&scan_cfg);
  std::string k_range = "2", r_range = "4", gens_range = "1:3",
              terms_range = "1:3";
  std::vector<int64_t> pool;
  std::string json_out;
  bool homogeneous = false, timing = false;
  CLI::App* c_scan =
      app.add_subcommand("scan", "seeded batch classification harness");
  c_scan->add_option("--seed", scan_cfg.seed, "rng seed")->required();
  c_scan->add_option("--k", k_range, "variable count (N or LO:HI)");
  c_scan->add_option("--r", r_range, "truncation order (N or LO:HI)");
  c_scan->add_option("--gens", gens_range, "generators per instance");
  c_scan->add_option("--terms", terms_range, "terms per generator");
  c_scan->add_option("--count", scan_cfg.count, "number of instances");
  c_scan->add_option("--pool", pool, "coefficient pool");
  c_scan->add_option("--weight-bound", scan_cfg.weight_bound,
                     "grading search bound");
  c_scan->add_option("--dim-cap", scan_cfg.dim_cap, "skip larger algebras");
  c_scan->add_option("--min-degree", scan_cfg.min_degree,
                     "minimum term degree");
  c_scan->add_flag("--homogeneous", homogeneous,
                   "degree-homogeneous generators");
  c_scan->add_flag("--timing", timing, "include per-instance timing");
  c_scan->add_option("--json-out", json_out, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (c_scan->parsed()) {
    if (!parse_range(k_range, scan_cfg.k_min, scan_cfg.k_max) ||
        !parse_range(r_range, scan_cfg.r_min, scan_cfg.r_max) ||
        !parse_range(gens_range, scan_cfg.gens_min, scan_cfg.gens_max) ||
        !parse_range(terms_range, scan_cfg.terms_min, scan_cfg.terms_max)) {
      std::cerr << "weilab: bad range (use N or LO:HI with LO >= 1)\n";
      return 2;
    }
    scan_cfg.homogeneous = homogeneous ? 1 : 0;
    scan_cfg.include_timing = timing ? 1 : 0;
    if (!pool.empty()) {
      scan_cfg.pool = pool.data();
      scan_cfg.pool_len = pool.size();
    }
    char* text = nullptr;
    if (!json_out.empty()) {
      weilab_status st = weilab_scan(&scan_cfg, 1, &text);
      int rc = emit(st, text, json_out);
      if (rc != 0) return rc;
      if (json) return 0;
      // also print the human table when writing JSON to a file
    }
    weilab_status st = weilab_scan(&scan_cfg, json ? 1 : 0, &text);
    return emit(st, text);
  }

  AlgebraHandle h;
  weilab_status st = weilab_algebra_open(spec_path.c_str(), &h.a);
  if (st != WEILAB_OK) return fail(st);

  char* text = nullptr;
  int j = json ? 1 : 0;
  if (c_info->parsed()) st = weilab_info(h.a, j, &text);
  else if (c_basis->parsed()) st = weilab_basis(h.a, j, &text);
  else if (c_multable->parsed()) st = weilab_multable(h.a, j, &text);
  else if (c_nf->parsed()) st = weilab_nf(h.a, poly_text.c_str(), j, &text);
  else if (c_socle->parsed()) st = weilab_socle(h.a, j, &text);
  else if (c_classify->parsed())
    st = weilab_classify(h.a, weight_bound, no_prop4 ? 0 : 1, j, &text);
  else if (c_weights->parsed()) st = weilab_weights(h.a, weight_bound, j, &text);
  else if (c_derivations->parsed()) st = weilab_derivations(h.a, j, &text);
  else if (c_fixed->parsed()) st = weilab_fixed(h.a, j, &text);
  else if (c_aut_verify->parsed())
    st = weilab_aut_verify(h.a, map_text.c_str(), j, &text);
  else if (c_aut_constraints->parsed()) {
    if (!export_file.empty()) {
      char* eq = nullptr;
      weilab_status est = weilab_aut_constraints_export(h.a, &eq);
      int rc = emit(est, eq, export_file);
      if (rc != 0) return rc;
    }
    st = weilab_aut_constraints(h.a, j, &text);
  } else if (c_conjecture->parsed())
    st = weilab_conjecture(h.a, j, &text);
  else {
    std::cerr << "weilab: no subcommand\n";
    return 2;
  }
  return emit(st, text);
}
