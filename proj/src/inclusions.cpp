#include "rlcm/inclusions.hpp"

#include <algorithm>

#include "rlcm/error.hpp"

namespace rlcm {

namespace {

// Below the longest relation length the ball cannot tell the monoid from
// a free one, so no inclusion property is observable yet.
std::optional<Verdict> radius_guard(const ParabolicInclusion& inc) {
  const auto& ball = inc.ambient();
  auto needed = ball.presentation().max_relation_length();
  if (ball.radius() < needed) {
    return Verdict::inconclusive(
        ball.radius(), "radius " + std::to_string(ball.radius()) +
                           " is below the longest relation length " +
                           std::to_string(needed));
  }
  return std::nullopt;
}

std::string_view emptiness_name(Emptiness e) {
  switch (e) {
    case Emptiness::NonEmpty:
      return "nonempty";
    case Emptiness::Empty:
      return "empty";
    case Emptiness::Unknown:
      return "unknown";
  }
  return "?";
}

}  // namespace

ParabolicInclusion::ParabolicInclusion(const Ball& ambient,
                                       std::vector<letter_type> subset)
    : ambient_(&ambient),
      subset_(std::move(subset)),
      sub_(parabolic_restriction(ambient, subset_)),
      local_(ambient.size(), kNoElement) {
  std::sort(subset_.begin(), subset_.end());
  subset_.erase(std::unique(subset_.begin(), subset_.end()), subset_.end());
  for (element_id x = 0; x < sub_.size(); ++x) {
    local_[sub_.ambient_id(x)] = x;
  }
}

std::optional<element_id> ParabolicInclusion::local_id(element_id ambient) const {
  auto x = local_.at(ambient);
  if (x == kNoElement) {
    return std::nullopt;
  }
  return x;
}

Emptiness emptiness(const Ball& ball, element_id x, element_id y) {
  element_id pair[] = {x, y};
  if (!ideal_intersection(ball, pair).empty()) {
    return Emptiness::NonEmpty;
  }
  if (proven_disjoint(ball, x, y)) {
    return Emptiness::Empty;
  }
  if (ball.semilattice()) {
    return Emptiness::NonEmpty;
  }
  return Emptiness::Unknown;
}

Verdict check_closed_under_factorization(const ParabolicInclusion& inc) {
  if (auto guard = radius_guard(inc)) {
    return *guard;
  }
  const auto& ball = inc.ambient();
  for (element_id w = 0; w < ball.size(); ++w) {
    if (!inc.member(w)) {
      continue;
    }
    for (element_id x = 0; x < ball.size(); ++x) {
      auto y = ball.quotient(x, w);
      if (!y) {
        continue;
      }
      if (!inc.member(x) || !inc.member(*y)) {
        return Verdict::fails(
            ball.radius(),
            Witness{"closed-under-factorization",
                    {{"w", ball.word(w)}, {"x", ball.word(x)}, {"y", ball.word(*y)}},
                    "w = x*y lies in the submonoid but " +
                        std::string(inc.member(x) ? "y" : "x") +
                        " does not"});
      }
    }
  }
  return Verdict::holds(ball.radius());
}

Verdict check_preserves_orthogonality(const ParabolicInclusion& inc) {
  if (auto guard = radius_guard(inc)) {
    return *guard;
  }
  const auto& ball = inc.ambient();
  const auto& sub = inc.sub();
  const auto& alpha = ball.presentation().alphabet();
  auto verdict = Verdict::holds(ball.radius());
  std::size_t unknown = 0;
  std::string first;
  for (element_id x = 0; x < sub.size(); ++x) {
    for (element_id y = x + 1; y < sub.size(); ++y) {
      auto inner = emptiness(sub, x, y);
      auto outer = emptiness(ball, sub.ambient_id(x), sub.ambient_id(y));
      if (inner == Emptiness::Unknown || outer == Emptiness::Unknown) {
        if (unknown++ == 0) {
          first = alpha.format(sub.word(x)) + ", " + alpha.format(sub.word(y));
        }
        continue;
      }
      if (inner != outer) {
        return Verdict::fails(
            ball.radius(),
            Witness{"preserves-orthogonality",
                    {{"x", sub.word(x)}, {"y", sub.word(y)}},
                    "common multiples in the submonoid: " +
                        std::string(emptiness_name(inner)) +
                        "; in the ambient monoid: " +
                        std::string(emptiness_name(outer))});
      }
    }
  }
  if (unknown > 0) {
    verdict.absorb(Verdict::inconclusive(
        ball.radius(), std::to_string(unknown) +
                           " pair(s) with emptiness not certified at this "
                           "radius, first (" +
                           first + ")"));
  }
  return verdict;
}

Verdict check_respects_lcm(const ParabolicInclusion& inc) {
  if (auto guard = radius_guard(inc)) {
    return *guard;
  }
  const auto& ball = inc.ambient();
  const auto& sub = inc.sub();
  for (element_id x = 0; x < sub.size(); ++x) {
    for (element_id y = x + 1; y < sub.size(); ++y) {
      auto inner = lcm(sub, x, y);
      element_id pair[] = {sub.ambient_id(x), sub.ambient_id(y)};
      auto outer = ideal_intersection(ball, pair);
      if (const auto* l = std::get_if<Lcm>(&inner)) {
        element_id z[] = {sub.ambient_id(l->r)};
        auto generated = ideal_intersection(ball, z);
        if (generated != outer) {
          std::vector<element_id> diff;
          std::set_symmetric_difference(generated.begin(), generated.end(),
                                        outer.begin(), outer.end(),
                                        std::back_inserter(diff));
          return Verdict::fails(
              ball.radius(),
              Witness{"respects-lcm",
                      {{"x", sub.word(x)},
                       {"y", sub.word(y)},
                       {"z", sub.word(l->r)},
                       {"q", ball.word(diff.front())}},
                      "q lies in exactly one of zP and xP intersected with yP"});
        }
      } else if (std::holds_alternative<ProvenEmpty>(inner)) {
        if (!outer.empty()) {
          return Verdict::fails(
              ball.radius(),
              Witness{"respects-lcm",
                      {{"x", sub.word(x)},
                       {"y", sub.word(y)},
                       {"q", ball.word(outer.front())}},
                      "x and y have no common multiple in the submonoid but q "
                      "is a common multiple in the ambient monoid"});
        }
      }
    }
  }
  return Verdict::holds(ball.radius());
}

}  // namespace rlcm
