#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weil.hpp"

namespace weilab {

enum class CertificateKind {
  Monomial,
  Homogeneous,
  WeightGrading,
  OrderTheorem,
  DerivationKernelTrivial,
};

std::string certificate_kind_name(CertificateKind kind);

// A re-checkable witness that SA is trivial.
struct Certificate {
  CertificateKind kind;
  // weight vector for WeightGrading (and the dwindlability family); empty
  // otherwise
  std::vector<uint32_t> weights;
  // (width, order) for OrderTheorem
  uint32_t width = 0;
  uint32_t order = 0;
};

// Recomputes the granting condition of a certificate from scratch.
bool verify_certificate(const WeilAlgebra& algebra, const Certificate& cert);

enum class CertOutcome { Granted, NotApplicable, Failed };

struct TrivialityReport {
  std::string algebra_name;
  struct Entry {
    CertificateKind kind;
    CertOutcome outcome;
    std::optional<Certificate> certificate;
  };
  std::vector<Entry> entries;
  bool trivial_certified = false;  // verdict: Trivial iff any grant
};

bool is_monomial_ideal(const WeilAlgebra& algebra);
bool is_homogeneous_ideal(const WeilAlgebra& algebra);

// Smallest (lexicographically) vector of positive integer weights, bounded
// by `bound`, under which the ideal splits into its weighted-homogeneous
// slices; such weights give a one-parameter diagonal automorphism family.
std::optional<std::vector<uint32_t>> find_grading_weights(
    const WeilAlgebra& algebra, uint32_t bound);

std::optional<Certificate> dwindlable_certificate(const WeilAlgebra& algebra,
                                                  uint32_t bound);

// Width/order thresholds below which no algebra has nontrivial SA.
std::optional<Certificate> order_theorem_precheck(const WeilAlgebra& algebra);

uint32_t default_weight_bound(const WeilAlgebra& algebra);

struct TrivialityOptions {
  std::optional<uint32_t> weight_bound;  // default: 4 * r
  bool use_order_theorem = true;
  // outcome of the derivation-kernel route, supplied by the caller when the
  // derivation solve has been run (kernel bound equal to span{1})
  std::optional<bool> derivation_kernel_trivial;
};

TrivialityReport triviality_report(const WeilAlgebra& algebra,
                                   const TrivialityOptions& options = {});

}  // namespace weilab
