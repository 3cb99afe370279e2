#ifndef RLCM_INCLUSIONS_HPP_
#define RLCM_INCLUSIONS_HPP_

#include <span>
#include <vector>

#include "rlcm/ball.hpp"
#include "rlcm/lcm.hpp"
#include "rlcm/verdict.hpp"

namespace rlcm {

// The submonoid generated by a subset of the standard generators, viewed
// inside a ball of the ambient monoid. The ambient ball must outlive the
// inclusion. An empty subset gives the trivial submonoid {e}.
class ParabolicInclusion {
 public:
  ParabolicInclusion(const Ball& ambient, std::vector<letter_type> subset);

  const Ball& ambient() const noexcept { return *ambient_; }
  // The parabolic restriction of the ambient ball.
  const Ball& sub() const noexcept { return sub_; }
  const std::vector<letter_type>& subset() const noexcept { return subset_; }

  // Ambient element ids of the submonoid, or the local id of an ambient
  // element if it is a member.
  std::optional<element_id> local_id(element_id ambient) const;
  bool member(element_id ambient) const { return local_id(ambient).has_value(); }

 private:
  const Ball* ambient_;
  std::vector<letter_type> subset_;
  Ball sub_;
  std::vector<element_id> local_;
};

// Emptiness of xP intersected with yP, certified where possible.
enum class Emptiness { NonEmpty, Empty, Unknown };

// NonEmpty if a common multiple lies in the ball or the monoid is a
// semilattice; Empty if proven_disjoint applies; Unknown otherwise.
Emptiness emptiness(const Ball& ball, element_id x, element_id y);

// For every member w and every ambient factorization w = x * y, both x
// and y are members.
Verdict check_closed_under_factorization(const ParabolicInclusion& inc);

// For all members x, y: xP1 and yP1 are disjoint iff xP and yP are.
// Pairs where either side is Unknown make the result Inconclusive.
Verdict check_preserves_orthogonality(const ParabolicInclusion& inc);

// For all members x, y whose least common multiple z in the submonoid is
// resolved: zP and xP intersected with yP agree on the ball, and are
// empty together when x, y have no common multiple in the submonoid.
Verdict check_respects_lcm(const ParabolicInclusion& inc);

}  // namespace rlcm

#endif  // RLCM_INCLUSIONS_HPP_
