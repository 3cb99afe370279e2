#ifndef RLCM_ARTIN_HPP_
#define RLCM_ARTIN_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rlcm/coxeter.hpp"
#include "rlcm/presentation.hpp"
#include "rlcm/verdict.hpp"

namespace rlcm {

struct OffendingEntry {
  std::size_t i;
  std::size_t j;
  std::uint32_t m;
};

struct ArtinClass {
  bool right_angled = false;
  bool spherical = false;
  bool abelian = false;
  // The first (i, j), i < j, in row-major order with m(i, j) not in
  // {2, inf}; present exactly when the matrix is not right-angled.
  std::optional<OffendingEntry> offending_entry;
  // Finite types of the diagram components when spherical.
  std::vector<std::string> component_types;
};

ArtinClass classify(const CoxeterMatrix& m);

struct AmenabilityVerdict {
  enum class Kind { NicaAmenable, NotNicaAmenable, Unknown };

  Kind kind = Kind::Unknown;
  std::string reason;
  std::string citation;
  // For NotNicaAmenable: what exhibits the failure (a dihedral generator
  // pair, or a graph-product factor).
  std::optional<OffendingEntry> dihedral;
  std::optional<std::size_t> factor;
};

std::string_view to_string(AmenabilityVerdict::Kind k);

// Nica amenable exactly when right-angled. Otherwise the witness is the
// dihedral submonoid on the offending generator pair.
AmenabilityVerdict amenability_verdict(const CoxeterMatrix& m);

inline constexpr std::string_view kQuasiLatticeCaveat =
    "it is not known whether Artin monoids that are neither spherical nor "
    "right-angled give quasi-lattice orders in their Artin groups";

struct DihedralWitnessReport {
  OffendingEntry pair;
  std::size_t radius = 0;
  Verdict closed_under_factorization = Verdict::inconclusive(0, "not run");
  Verdict preserves_orthogonality = Verdict::inconclusive(0, "not run");
  Verdict respects_lcm = Verdict::inconclusive(0, "not run");
  std::string caveat;
};

// Builds the parabolic inclusion on the offending pair of a non
// right-angled matrix and runs the three inclusion checks at radius L.
// Throws ValidationError on right-angled input, and on rank-2 input where
// the monoid is already dihedral.
DihedralWitnessReport dihedral_witness_report(const CoxeterMatrix& m,
                                              std::size_t radius,
                                              std::size_t cap = kDefaultClassCap);

// Verdict for a graph product from the verdicts of its factors. Any
// factor that is not Nica amenable makes the product not Nica amenable. A
// graph product of copies of N is a right-angled Artin monoid and so is
// Nica amenable. Everything else is Unknown.
AmenabilityVerdict propagate_graph_product(
    const SimplicialGraph& graph, std::span<const AmenabilityVerdict> factor_verdicts,
    std::span<const HomogeneousPresentation> factors);

}  // namespace rlcm

#endif  // RLCM_ARTIN_HPP_
