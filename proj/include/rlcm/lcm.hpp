#ifndef RLCM_LCM_HPP_
#define RLCM_LCM_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rlcm/ball.hpp"
#include "rlcm/verdict.hpp"

namespace rlcm {

// r generates the intersection: it is a common multiple and every common
// multiple in the ball is a multiple of r.
struct Lcm {
  element_id r;
};

// No common multiple of length <= radius.
struct EmptyUpTo {
  std::size_t radius;
};

// No common multiple exists at all, with the rule that proves it.
struct ProvenEmpty {
  std::string reason;
};

// Common multiples exist in the ball but no single one divides all of
// them; `minimal` lists the divisibility-minimal ones.
struct InconclusiveUpTo {
  std::size_t radius;
  std::vector<element_id> minimal;
};

using LcmResult = std::variant<Lcm, EmptyUpTo, ProvenEmpty, InconclusiveUpTo>;

std::string_view kind_name(const LcmResult& r);

// Lcm or ProvenEmpty.
bool resolved(const LcmResult& r);

// Elements of the ball divisible on the left by every x in xs.
std::vector<element_id> ideal_intersection(const Ball& ball,
                                           std::span<const element_id> xs);

// A proof that xP and yP are disjoint, if one is available: after
// cancelling a common left factor, x and y are divisible by an orthogonal
// generator pair of the presentation.
std::optional<std::string> proven_disjoint(const Ball& ball, element_id x,
                                           element_id y);

LcmResult lcm(const Ball& ball, element_id x, element_id y);

// Least common multiple of a nonempty set; lcm_set({x}) = Lcm{x}.
LcmResult lcm_set(const Ball& ball, std::span<const element_id> elements);

// Every pair resolves to Lcm, ProvenEmpty or EmptyUpTo. Fails only when a
// pair has two divisibility-minimal common multiples whose own ideals are
// provably disjoint.
Verdict verify_right_lcm(const Ball& ball);

}  // namespace rlcm

#endif  // RLCM_LCM_HPP_
