#include "render.hpp"

#include <sstream>

#include <json.hpp>

#include "aut_constraints.hpp"
#include "classify.hpp"
#include "derivations.hpp"
#include "errors.hpp"

namespace weilab {

using Json = nlohmann::ordered_json;

std::vector<std::string> span_strings(const WeilAlgebra& a, const Subspace& s) {
  std::vector<std::string> out;
  for (const auto& row : s.basis)
    out.push_back(a.render(a.from_coords(row)));
  return out;
}

static std::string join(const std::vector<std::string>& parts,
                        const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

static std::string span_text(const std::vector<std::string>& basis) {
  return "span{" + join(basis, ", ") + "}";
}

std::string info_report(const WeilAlgebra& a, bool json) {
  std::size_t socle_dim = a.socle().dim();
  if (json) {
    Json j;
    j["algebra"] = a.spec().name;
    j["dim"] = a.dim();
    j["order"] = a.order();
    j["width"] = a.width();
    j["socle_dim"] = socle_dim;
    j["ideal_dim"] = a.ideal().dim();
    j["ideal_in_m2"] = a.ideal_in_m_squared();
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "algebra=" << a.spec().name << " dim=" << a.dim()
      << " order=" << a.order() << " width=" << a.width()
      << " socle_dim=" << socle_dim << " ideal_dim=" << a.ideal().dim();
  if (!a.ideal_in_m_squared())
    out << " (warning: ideal not inside m^2, effective width below k)";
  out << "\n";
  return out.str();
}

std::string basis_report(const WeilAlgebra& a, bool json) {
  std::vector<std::string> basis;
  for (const auto& m : a.basis())
    basis.push_back(render_monomial(*a.context(), m));
  if (json) {
    Json j;
    j["algebra"] = a.spec().name;
    j["dim"] = a.dim();
    j["basis"] = basis;
    return j.dump(2) + "\n";
  }
  return "dim=" + std::to_string(a.dim()) + " basis: " + join(basis, " ") +
         "\n";
}

std::string multable_report(const WeilAlgebra& a, bool json) {
  const RingContext& ctx = *a.context();
  Json rows = Json::array();
  std::ostringstream out;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) {
      Element bi = a.zero(), bj = a.zero();
      bi.coords[i] = 1;
      bj.coords[j] = 1;
      std::string prod = a.render(a.multiply(bi, bj));
      std::string left = render_monomial(ctx, a.basis()[i]);
      std::string right = render_monomial(ctx, a.basis()[j]);
      if (json) {
        Json entry;
        entry["left"] = left;
        entry["right"] = right;
        entry["product"] = prod;
        rows.push_back(entry);
      } else {
        out << left << " * " << right << " = " << prod << "\n";
      }
    }
  if (json) {
    Json j;
    j["algebra"] = a.spec().name;
    j["dim"] = a.dim();
    j["products"] = rows;
    return j.dump(2) + "\n";
  }
  return out.str();
}

std::string nf_report(const WeilAlgebra& a, const std::string& poly_text,
                      bool json) {
  TruncPoly p = parse_poly(poly_text, a.context());
  std::string nf = a.render(a.normal_form(p));
  if (json) {
    Json j;
    j["algebra"] = a.spec().name;
    j["input"] = poly_text;
    j["normal_form"] = nf;
    return j.dump(2) + "\n";
  }
  return nf + "\n";
}

std::string socle_report(const WeilAlgebra& a, bool json) {
  Subspace soc = a.socle();
  Subspace ma = a.ma_subalgebra();
  auto soc_basis = span_strings(a, soc);
  auto ma_basis = span_strings(a, ma);
  if (json) {
    Json j;
    j["algebra"] = a.spec().name;
    j["socle_dim"] = soc.dim();
    j["socle"] = soc_basis;
    j["ma_dim"] = ma.dim();
    j["ma"] = ma_basis;
    return j.dump(2) + "\n";
  }
  return "socle = " + span_text(soc_basis) + " (dim " +
         std::to_string(soc.dim()) + ")\nMA = " + span_text(ma_basis) +
         " (dim " + std::to_string(ma.dim()) + ")\n";
}

static std::string outcome_name(CertOutcome o) {
  switch (o) {
    case CertOutcome::Granted: return "granted";
    case CertOutcome::NotApplicable: return "not applicable";
    case CertOutcome::Failed: return "failed";
  }
  return "?";
}

std::string classify_report(const WeilAlgebra& a,
                            std::optional<uint32_t> weight_bound,
                            bool use_order_theorem, bool json) {
  FixedPointEstimate est = fixed_subalgebra_estimate(a);
  TrivialityOptions opts;
  opts.weight_bound = weight_bound;
  opts.use_order_theorem = use_order_theorem;
  opts.derivation_kernel_trivial =
      est.status == FixedStatus::TrivialCertified;
  TrivialityReport report = triviality_report(a, opts);

  if (json) {
    Json j;
    j["algebra"] = report.algebra_name;
    j["verdict"] = report.trivial_certified ? "trivial" : "unknown";
    Json entries = Json::array();
    for (const auto& e : report.entries) {
      Json entry;
      entry["certificate"] = certificate_kind_name(e.kind);
      entry["outcome"] = outcome_name(e.outcome);
      if (e.certificate && !e.certificate->weights.empty())
        entry["weights"] = e.certificate->weights;
      if (e.certificate && e.kind == CertificateKind::OrderTheorem) {
        entry["width"] = e.certificate->width;
        entry["order"] = e.certificate->order;
      }
      entries.push_back(entry);
    }
    j["certificates"] = entries;
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "algebra " << report.algebra_name << ": verdict "
      << (report.trivial_certified ? "Trivial (certified)" : "Unknown")
      << "\n";
  for (const auto& e : report.entries) {
    out << "  " << certificate_kind_name(e.kind) << ": "
        << outcome_name(e.outcome);
    if (e.certificate && !e.certificate->weights.empty()) {
      out << " (weights";
      for (uint32_t w : e.certificate->weights) out << " " << w;
      out << ")";
    }
    if (e.certificate && e.kind == CertificateKind::OrderTheorem)
      out << " (width " << e.certificate->width << ", order "
          << e.certificate->order << ")";
    out << "\n";
  }
  return out.str();
}

std::string weights_report(const WeilAlgebra& a,
                           std::optional<uint32_t> weight_bound, bool json) {
  uint32_t bound = weight_bound ? *weight_bound : default_weight_bound(a);
  auto w = find_grading_weights(a, bound);
  if (json) {
    Json j;
    j["algebra"] = a.spec().name;
    j["bound"] = bound;
    j["found"] = w.has_value();
    if (w) j["weights"] = *w;
    return j.dump(2) + "\n";
  }
  if (!w) return "no grading weights up to bound " + std::to_string(bound) + "\n";
  std::ostringstream out;
  out << "weights:";
  for (uint32_t wi : *w) out << " " << wi;
  out << "\n";
  return out.str();
}

std::string derivations_report(const WeilAlgebra& a, bool json) {
  std::vector<Derivation> basis = derivation_space(a);
  const auto& names = a.context()->var_names();
  if (json) {
    Json j;
    j["algebra"] = a.spec().name;
    j["dim"] = basis.size();
    Json list = Json::array();
    for (const auto& d : basis) {
      Json images;
      for (std::size_t i = 0; i < d.images.size(); ++i)
        images[names[i]] = a.render(d.images[i]);
      list.push_back(images);
    }
    j["basis"] = list;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "Der(A) dim " << basis.size() << "\n";
  for (std::size_t n = 0; n < basis.size(); ++n) {
    out << "D" << (n + 1) << ":";
    for (std::size_t i = 0; i < basis[n].images.size(); ++i)
      out << " " << names[i] << " -> " << a.render(basis[n].images[i]) << ";";
    out << "\n";
  }
  return out.str();
}

std::string fixed_report(const WeilAlgebra& a, bool json) {
  FixedPointEstimate est = fixed_subalgebra_estimate(a);
  auto k_basis = span_strings(a, est.kernel);
  auto kp_basis = span_strings(a, est.refined);
  bool trivial = est.status == FixedStatus::TrivialCertified;
  if (json) {
    Json j;
    j["algebra"] = a.spec().name;
    j["kernel_dim"] = est.kernel.dim();
    j["kernel"] = k_basis;
    j["refined_dim"] = est.refined.dim();
    j["refined"] = kp_basis;
    j["status"] = trivial ? "trivial certified" : "upper bound";
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "K  = " << span_text(k_basis) << " (dim " << est.kernel.dim()
      << ")\n";
  out << "K' = " << span_text(kp_basis) << " (dim " << est.refined.dim()
      << "), status: " << (trivial ? "trivial certified" : "upper bound")
      << "\n";
  return out.str();
}

Endo parse_endo_map(const WeilAlgebra& a, const std::string& map_text) {
  const auto& names = a.context()->var_names();
  std::vector<std::optional<Element>> images(names.size());
  std::istringstream in(map_text);
  std::string clause;
  while (std::getline(in, clause, ';')) {
    if (clause.find_first_not_of(" \t") == std::string::npos) continue;
    auto arrow = clause.find("->");
    if (arrow == std::string::npos)
      throw UsageError("map clause '" + clause + "' missing '->'");
    std::string var = clause.substr(0, arrow);
    var.erase(0, var.find_first_not_of(" \t"));
    var.erase(var.find_last_not_of(" \t") + 1);
    std::size_t vi = names.size();
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == var) vi = i;
    if (vi == names.size())
      throw UsageError("unknown variable '" + var + "' in map");
    if (images[vi])
      throw UsageError("variable '" + var + "' mapped twice");
    TruncPoly p = parse_poly(clause.substr(arrow + 2), a.context());
    images[vi] = a.normal_form(p);
  }
  std::vector<Element> final_images;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!images[i])
      throw UsageError("map does not cover variable '" + names[i] + "'");
    final_images.push_back(std::move(*images[i]));
  }
  return Endo(a, std::move(final_images));
}

std::string aut_verify_report(const WeilAlgebra& a,
                              const std::string& map_text, bool json) {
  Endo e = parse_endo_map(a, map_text);
  bool wd = e.is_well_defined();
  bool aut = wd && e.is_automorphism();
  std::optional<bool> orient, unip;
  QMatrix lin;
  if (wd) lin = e.linear_part();
  if (aut) {
    orient = e.is_orientation_preserving();
    unip = e.is_unipotent();
  }
  auto det = aut ? std::optional<Rational>(mat_det(lin)) : std::nullopt;

  if (json) {
    Json j;
    j["algebra"] = a.spec().name;
    j["well_defined"] = wd;
    j["automorphism"] = aut;
    if (wd) {
      Json rows = Json::array();
      for (const auto& row : lin) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(to_string(x));
        rows.push_back(r);
      }
      j["linear_part"] = rows;
    }
    if (det) j["det"] = to_string(*det);
    if (orient) j["orientation_preserving"] = *orient;
    if (unip) j["unipotent"] = *unip;
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "well-defined: " << (wd ? "yes" : "no") << "\n";
  out << "automorphism: " << (aut ? "yes" : "no") << "\n";
  if (wd) {
    out << "linear part:\n";
    for (const auto& row : lin) {
      out << " ";
      for (const auto& x : row) out << " " << to_string(x);
      out << "\n";
    }
  }
  if (det) out << "det: " << to_string(*det) << "\n";
  if (orient)
    out << "orientation-preserving: " << (*orient ? "yes" : "no") << "\n";
  if (unip) out << "unipotent: " << (*unip ? "yes" : "no") << "\n";
  return out.str();
}

std::string aut_constraints_report(const WeilAlgebra& a, bool json) {
  ConstraintSystem cs = generate_constraints(a);
  if (json) {
    Json j;
    j["algebra"] = a.spec().name;
    j["unknowns"] = Json::array();
    for (uint32_t id = 0; id < cs.ansatz.symbols.size(); ++id)
      j["unknowns"].push_back(cs.ansatz.symbols.name(id));
    Json eqs = Json::array();
    for (const auto& eq : cs.equations)
      eqs.push_back(eq.render(cs.ansatz.symbols));
    j["equations"] = eqs;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "unknowns: " << cs.ansatz.symbols.size() << ", equations: "
      << cs.equations.size() << "\n";
  out << export_constraints(cs);
  return out.str();
}

std::string conjecture_report(const WeilAlgebra& a, bool json) {
  FixedPointEstimate est = fixed_subalgebra_estimate(a);
  Subspace ma = a.ma_subalgebra();
  bool yes = subspace_leq(est.refined, ma);
  if (json) {
    Json j;
    j["algebra"] = a.spec().name;
    j["refined_dim"] = est.refined.dim();
    j["ma_dim"] = ma.dim();
    j["conjecture"] = yes ? "certified-yes" : "inconclusive";
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "K' dim " << est.refined.dim() << ", MA dim " << ma.dim()
      << ", conjecture: " << (yes ? "CertifiedYes" : "Inconclusive")
      << (yes ? " (K' inside MA, so SA inside MA)" : " (K' exceeds MA)")
      << "\n";
  return out.str();
}

std::string scan_report(const ScanResult& result, bool json) {
  bool timing = result.config.include_timing;
  if (json) {
    Json j;
    j["seed"] = result.config.seed;
    j["count"] = result.config.count;
    Json recs = Json::array();
    for (const auto& r : result.records) {
      Json rec;
      rec["index"] = r.index;
      rec["spec"] = r.spec_text;
      if (r.skipped) {
        rec["status"] = "skipped";
      } else if (r.failed) {
        rec["status"] = "failed";
        rec["error"] = r.error;
      } else {
        rec["status"] = "ok";
        rec["dim"] = r.dim;
        rec["order"] = r.order;
        rec["width"] = r.width;
        rec["verdict"] = r.trivial_certified ? "trivial" : "unknown";
        rec["certificates"] = r.granted_certificates;
        rec["refined_dim"] = r.refined_dim;
        rec["fixed_status"] = r.fixed_status == FixedStatus::TrivialCertified
                                  ? "trivial certified"
                                  : "upper bound";
        rec["ma_dim"] = r.ma_dim;
        rec["conjecture"] = r.conjecture == ConjectureStatus::CertifiedYes
                                ? "certified-yes"
                                : "inconclusive";
        rec["overshoot"] = r.overshoot;
        if (timing) rec["ms"] = r.millis;
      }
      recs.push_back(rec);
    }
    j["records"] = recs;
    Json s;
    s["instances"] = result.summary.instances;
    s["skipped"] = result.summary.skipped;
    s["failed"] = result.summary.failed;
    s["trivial_certified"] = result.summary.trivial_certified;
    s["fixed_trivial"] = result.summary.fixed_trivial;
    s["conjecture_yes"] = result.summary.conjecture_yes;
    s["overshoot"] = result.summary.overshoot;
    j["summary"] = s;
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "idx\tdim\tord\twid\tverdict\tcerts\tdimK'\tstatus\tdimMA\tconjecture";
  if (timing) out << "\tms";
  out << "\n";
  for (const auto& r : result.records) {
    out << r.index << "\t";
    if (r.skipped) {
      out << "-\t-\t-\tskipped\t-\t-\t-\t-\t-";
    } else if (r.failed) {
      out << "-\t-\t-\tfailed\t-\t-\t-\t-\t-";
    } else {
      out << r.dim << "\t" << r.order << "\t" << r.width << "\t"
          << (r.trivial_certified ? "trivial" : "unknown") << "\t"
          << (r.granted_certificates.empty()
                  ? "-"
                  : join(r.granted_certificates, ","))
          << "\t" << r.refined_dim << "\t"
          << (r.fixed_status == FixedStatus::TrivialCertified ? "trivial"
                                                              : "upper-bound")
          << "\t" << r.ma_dim << "\t"
          << (r.conjecture == ConjectureStatus::CertifiedYes ? "yes"
                                                             : "inconclusive");
    }
    if (timing) out << "\t" << (r.skipped || r.failed ? 0 : r.millis);
    out << "\n";
  }
  out << "summary: instances=" << result.summary.instances
      << " skipped=" << result.summary.skipped
      << " failed=" << result.summary.failed
      << " trivial=" << result.summary.trivial_certified
      << " fixed_trivial=" << result.summary.fixed_trivial
      << " conjecture_yes=" << result.summary.conjecture_yes
      << " overshoot=" << result.summary.overshoot << " seed="
      << result.config.seed << "\n";
  return out.str();
}

}  // namespace weilab
