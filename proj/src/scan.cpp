#include "scan.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "errors.hpp"

namespace weilab {

namespace {

uint64_t pick(std::mt19937_64& rng, uint64_t lo, uint64_t hi) {
  if (hi <= lo) return lo;
  return lo + rng() % (hi - lo + 1);
}

std::vector<std::string> default_var_names(uint32_t k) {
  static const char* base[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  for (uint32_t i = 0; i < k; ++i)
    names.push_back(i < 4 ? base[i] : "x" + std::to_string(i + 1));
  return names;
}

std::string spec_text_for(const AlgebraSpec& spec) {
  std::ostringstream out;
  out << "vars:";
  for (const auto& v : spec.ctx->var_names()) out << " " << v;
  out << "\norder: " << spec.ctx->order() << "\n";
  for (const auto& g : spec.generators) out << "gen: " << render_poly(g) << "\n";
  return out.str();
}

}  // namespace

std::vector<AlgebraSpec> generate_instances(const ScanConfig& config) {
  if (config.count < 1) throw UsageError("instance count must be >= 1");
  if (config.k_min < 1 || config.k_max < config.k_min ||
      config.r_min < 1 || config.r_max < config.r_min ||
      config.gens_max < config.gens_min || config.terms_max < config.terms_min)
    throw UsageError("scan config has an empty range");
  if (config.coefficient_pool.empty())
    throw UsageError("coefficient pool is empty");

  std::mt19937_64 rng(config.seed);
  std::vector<AlgebraSpec> specs;
  for (uint32_t idx = 0; idx < config.count; ++idx) {
    uint32_t k = static_cast<uint32_t>(pick(rng, config.k_min, config.k_max));
    uint32_t r = static_cast<uint32_t>(pick(rng, config.r_min, config.r_max));
    AlgebraSpec spec;
    spec.name = "scan-" + std::to_string(config.seed) + "-" +
                std::to_string(idx);
    spec.ctx = std::make_shared<RingContext>(k, r, default_var_names(k));
    uint32_t ngens =
        static_cast<uint32_t>(pick(rng, config.gens_min, config.gens_max));
    uint32_t dmin = std::min(std::max(config.min_degree, 1u), r);
    for (uint32_t g = 0; g < ngens; ++g) {
      TruncPoly gen(spec.ctx);
      for (int attempt = 0; attempt < 16 && gen.is_zero(); ++attempt) {
        gen = TruncPoly(spec.ctx);
        uint32_t nterms =
            static_cast<uint32_t>(pick(rng, config.terms_min, config.terms_max));
        uint32_t fixed_deg = static_cast<uint32_t>(pick(rng, dmin, r));
        for (uint32_t t = 0; t < nterms; ++t) {
          uint32_t deg = config.homogeneous
                             ? fixed_deg
                             : static_cast<uint32_t>(pick(rng, dmin, r));
          auto monos = monomials_of_degree(k, deg);
          const Monomial& m = monos[pick(rng, 0, monos.size() - 1)];
          int64_t c = config.coefficient_pool[pick(
              rng, 0, config.coefficient_pool.size() - 1)];
          gen.add_term(m, Rational(c));
        }
      }
      if (!gen.is_zero()) spec.generators.push_back(std::move(gen));
    }
    specs.push_back(std::move(spec));
  }
  return specs;
}

void scan_one(const WeilAlgebra& A, std::optional<uint32_t> weight_bound,
              ScanRecord& rec) {
  rec.dim = A.dim();
  rec.order = A.order();
  rec.width = A.width();

  FixedPointEstimate est = fixed_subalgebra_estimate(A);
  rec.refined_dim = est.refined.dim();
  rec.fixed_status = est.status;

  TrivialityOptions opts;
  opts.weight_bound = weight_bound;
  opts.derivation_kernel_trivial =
      est.status == FixedStatus::TrivialCertified;
  TrivialityReport report = triviality_report(A, opts);
  rec.trivial_certified = report.trivial_certified;
  for (const auto& entry : report.entries)
    if (entry.outcome == CertOutcome::Granted)
      rec.granted_certificates.push_back(certificate_kind_name(entry.kind));

  Subspace ma = A.ma_subalgebra();
  rec.ma_dim = ma.dim();
  rec.conjecture = subspace_leq(est.refined, ma)
                       ? ConjectureStatus::CertifiedYes
                       : ConjectureStatus::Inconclusive;
  rec.overshoot = rec.trivial_certified && rec.refined_dim > 1;
}

ScanResult scan_run(const ScanConfig& config) {
  ScanResult result;
  result.config = config;
  std::size_t cap =
      config.dim_cap ? config.dim_cap : WeilAlgebra::default_dim_cap();
  std::vector<AlgebraSpec> specs = generate_instances(config);
  for (uint32_t idx = 0; idx < specs.size(); ++idx) {
    ScanRecord rec;
    rec.index = idx;
    rec.spec_text = spec_text_for(specs[idx]);
    auto start = std::chrono::steady_clock::now();
    try {
      Subspace ideal = ideal_closure(specs[idx]);
      std::size_t dim = specs[idx].ctx->num_monomials() - ideal.dim();
      if (dim > cap) {
        rec.skipped = true;
      } else {
        WeilAlgebra A = WeilAlgebra::build(specs[idx], cap);
        scan_one(A, config.weight_bound, rec);
      }
    } catch (const Error& e) {
      rec.failed = true;
      rec.error = e.what();
    }
    rec.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    result.records.push_back(std::move(rec));
  }

  ScanSummary& s = result.summary;
  for (const auto& rec : result.records) {
    ++s.instances;
    if (rec.skipped) ++s.skipped;
    if (rec.failed) ++s.failed;
    if (rec.skipped || rec.failed) continue;
    if (rec.trivial_certified) ++s.trivial_certified;
    if (rec.fixed_status == FixedStatus::TrivialCertified) ++s.fixed_trivial;
    if (rec.conjecture == ConjectureStatus::CertifiedYes) ++s.conjecture_yes;
    if (rec.overshoot) ++s.overshoot;
  }
  return result;
}

}  // namespace weilab
