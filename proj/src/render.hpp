#pragma once

#include <optional>
#include <string>

#include "scan.hpp"
#include "weil.hpp"

namespace weilab {

// Rendered reports behind the CLI subcommands. Each comes in a human layout
// and a machine layout (stable-field-order JSON); both carry the same
// numeric content.

std::string info_report(const WeilAlgebra& a, bool json);
std::string basis_report(const WeilAlgebra& a, bool json);
std::string multable_report(const WeilAlgebra& a, bool json);
std::string nf_report(const WeilAlgebra& a, const std::string& poly_text,
                      bool json);
std::string socle_report(const WeilAlgebra& a, bool json);
std::string classify_report(const WeilAlgebra& a,
                            std::optional<uint32_t> weight_bound,
                            bool use_order_theorem, bool json);
std::string weights_report(const WeilAlgebra& a,
                           std::optional<uint32_t> weight_bound, bool json);
std::string derivations_report(const WeilAlgebra& a, bool json);
std::string fixed_report(const WeilAlgebra& a, bool json);
std::string aut_verify_report(const WeilAlgebra& a, const std::string& map_text,
                              bool json);
std::string aut_constraints_report(const WeilAlgebra& a, bool json);
std::string conjecture_report(const WeilAlgebra& a, bool json);
std::string scan_report(const ScanResult& result, bool json);

// Parses "x -> -x; y -> y" into an endomorphism of a.
Endo parse_endo_map(const WeilAlgebra& a, const std::string& map_text);

// Basis of a subspace of a's coordinate space as polynomial strings.
std::vector<std::string> span_strings(const WeilAlgebra& a, const Subspace& s);

}  // namespace weilab
