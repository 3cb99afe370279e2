#include "rlcm/artin.hpp"

#include <algorithm>

#include "rlcm/ball.hpp"
#include "rlcm/error.hpp"
#include "rlcm/inclusions.hpp"

namespace rlcm {

namespace {

constexpr const char* kRightAngledCitation =
    "right-angled Artin monoids are quasi-lattice ordered and amenable "
    "(Crisp and Laca 2002, Theorem 20)";
constexpr const char* kDihedralCitation =
    "a non right-angled Artin monoid contains a dihedral parabolic "
    "submonoid on a pair with 2 < m < inf; the parabolic inclusion is "
    "closed under factorization, preserves orthogonality and respects lcm "
    "(Crisp 1999), and dihedral Artin monoids are not Nica amenable "
    "(Crisp and Laca 2002, Proposition 28)";
constexpr const char* kGraphProductFactorCitation =
    "each vertex monoid is a parabolic submonoid of a graph product with an "
    "inclusion satisfying the hypotheses of the extension-by-zero theorem; "
    "Nica amenability of the product passes to every factor";
constexpr const char* kOpenCitation =
    "Nica amenability of a graph product of Nica amenable monoids is an "
    "open problem outside the right-angled Artin case";

}  // namespace

ArtinClass classify(const CoxeterMatrix& m) {
  ArtinClass out;
  out.right_angled = true;
  out.abelian = true;
  for (std::size_t i = 0; i < m.rank(); ++i) {
    for (std::size_t j = i + 1; j < m.rank(); ++j) {
      auto e = m(i, j);
      if (e != 2) {
        out.abelian = false;
      }
      if (e != 2 && e != CoxeterMatrix::infinity && !out.offending_entry) {
        out.right_angled = false;
        out.offending_entry = OffendingEntry{i, j, e};
      }
    }
  }
  out.spherical = true;
  for (const auto& component : coxeter_components(m)) {
    auto type = finite_type(m, component);
    if (!type) {
      out.spherical = false;
      out.component_types.clear();
      break;
    }
    out.component_types.push_back(*type);
  }
  return out;
}

std::string_view to_string(AmenabilityVerdict::Kind k) {
  switch (k) {
    case AmenabilityVerdict::Kind::NicaAmenable:
      return "NicaAmenable";
    case AmenabilityVerdict::Kind::NotNicaAmenable:
      return "NotNicaAmenable";
    case AmenabilityVerdict::Kind::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

AmenabilityVerdict amenability_verdict(const CoxeterMatrix& m) {
  auto cls = classify(m);
  AmenabilityVerdict v;
  if (cls.right_angled) {
    v.kind = AmenabilityVerdict::Kind::NicaAmenable;
    v.reason = "every off-diagonal entry is 2 or inf";
    v.citation = kRightAngledCitation;
    return v;
  }
  const auto& e = *cls.offending_entry;
  v.kind = AmenabilityVerdict::Kind::NotNicaAmenable;
  v.reason = "m(" + std::to_string(e.i + 1) + ", " + std::to_string(e.j + 1) +
             ") = " + format_coxeter_entry(e.m) +
             " gives a dihedral parabolic submonoid";
  v.citation = kDihedralCitation;
  v.dihedral = e;
  return v;
}

DihedralWitnessReport dihedral_witness_report(const CoxeterMatrix& m,
                                              std::size_t radius,
                                              std::size_t cap) {
  auto cls = classify(m);
  if (cls.right_angled) {
    throw ValidationError(
        "dihedral witness report needs a matrix that is not right-angled");
  }
  if (m.rank() == 2) {
    throw ValidationError("already dihedral; the witness is the whole monoid");
  }
  DihedralWitnessReport report;
  report.pair = *cls.offending_entry;
  report.radius = radius;
  if (!cls.spherical) {
    report.caveat = std::string(kQuasiLatticeCaveat);
  }
  auto pres = artin_presentation(m);
  auto ball = enumerate_ball(pres, radius, cap);
  ParabolicInclusion inc(ball, {static_cast<letter_type>(report.pair.i),
                                static_cast<letter_type>(report.pair.j)});
  report.closed_under_factorization = check_closed_under_factorization(inc);
  report.preserves_orthogonality = check_preserves_orthogonality(inc);
  report.respects_lcm = check_respects_lcm(inc);
  return report;
}

AmenabilityVerdict propagate_graph_product(
    const SimplicialGraph& graph, std::span<const AmenabilityVerdict> factor_verdicts,
    std::span<const HomogeneousPresentation> factors) {
  if (factor_verdicts.size() != graph.vertex_count() ||
      factors.size() != graph.vertex_count()) {
    throw ValidationError("graph product needs one verdict and one factor per vertex");
  }
  AmenabilityVerdict v;
  for (std::size_t i = 0; i < factor_verdicts.size(); ++i) {
    if (factor_verdicts[i].kind == AmenabilityVerdict::Kind::NotNicaAmenable) {
      v.kind = AmenabilityVerdict::Kind::NotNicaAmenable;
      v.reason = "factor " + std::to_string(i + 1) + " is not Nica amenable";
      v.citation = kGraphProductFactorCitation;
      v.factor = i;
      v.dihedral = factor_verdicts[i].dihedral;
      return v;
    }
  }
  bool all_amenable = std::all_of(
      factor_verdicts.begin(), factor_verdicts.end(), [](const AmenabilityVerdict& f) {
        return f.kind == AmenabilityVerdict::Kind::NicaAmenable;
      });
  bool all_naturals = std::all_of(factors.begin(), factors.end(),
                                  [](const HomogeneousPresentation& p) {
                                    return p.alphabet_size() == 1 && p.relations().empty();
                                  });
  if (all_amenable && all_naturals) {
    v.kind = AmenabilityVerdict::Kind::NicaAmenable;
    v.reason = "a graph product of copies of N is a right-angled Artin monoid";
    v.citation = kRightAngledCitation;
    return v;
  }
  v.kind = AmenabilityVerdict::Kind::Unknown;
  v.reason = all_amenable ? "every factor is Nica amenable"
                          : "some factor has an unknown verdict";
  v.citation = kOpenCitation;
  return v;
}

}  // namespace rlcm
