#include "rlcm/lcm.hpp"

#include <algorithm>

#include "rlcm/error.hpp"

namespace rlcm {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<letter_type> left_generators(const Ball& ball, element_id x) {
  std::vector<letter_type> out;
  for (auto s : ball.generators()) {
    auto g = ball.generator(s);
    if (g && ball.quotient(*g, x)) {
      out.push_back(s);
    }
  }
  return out;
}

std::optional<std::string> disjoint_after(const Ball& ball, element_id x,
                                          element_id y, word_type& prefix) {
  const auto& pres = ball.presentation();
  auto gx = left_generators(ball, x);
  auto gy = left_generators(ball, y);
  for (auto s : gx) {
    for (auto t : gy) {
      if (s != t && pres.orthogonal(s, t)) {
        const auto& alpha = pres.alphabet();
        std::string out;
        if (!prefix.empty()) {
          out = "after cancelling the common left factor " +
                alpha.format(prefix) + ", ";
        }
        return out + alpha.name(s) + " and " + alpha.name(t) +
               " left-divide the two sides and have no common right multiple";
      }
    }
  }
  for (auto g : gx) {
    if (std::find(gy.begin(), gy.end(), g) == gy.end()) {
      continue;
    }
    auto ge = *ball.generator(g);
    prefix.push_back(g);
    auto reason = disjoint_after(ball, *ball.quotient(ge, x),
                                 *ball.quotient(ge, y), prefix);
    prefix.pop_back();
    if (reason) {
      return reason;
    }
  }
  return std::nullopt;
}

std::vector<element_id> divisibility_minimal(const Ball& ball,
                                             const std::vector<element_id>& set) {
  std::vector<element_id> out;
  for (auto m : set) {
    bool minimal = std::none_of(set.begin(), set.end(), [&](element_id d) {
      return d != m && ball.quotient(d, m).has_value();
    });
    if (minimal) {
      out.push_back(m);
    }
  }
  return out;
}

}  // namespace

std::string_view kind_name(const LcmResult& r) {
  return std::visit(overloaded{[](const Lcm&) { return "Lcm"; },
                               [](const EmptyUpTo&) { return "EmptyUpTo"; },
                               [](const ProvenEmpty&) { return "ProvenEmpty"; },
                               [](const InconclusiveUpTo&) {
                                 return "InconclusiveUpTo";
                               }},
                    r);
}

bool resolved(const LcmResult& r) {
  return std::holds_alternative<Lcm>(r) || std::holds_alternative<ProvenEmpty>(r);
}

std::vector<element_id> ideal_intersection(const Ball& ball,
                                           std::span<const element_id> xs) {
  std::vector<element_id> out;
  for (element_id q = 0; q < ball.size(); ++q) {
    bool all = std::all_of(xs.begin(), xs.end(), [&](element_id x) {
      return ball.quotient(x, q).has_value();
    });
    if (all) {
      out.push_back(q);
    }
  }
  return out;
}

std::optional<std::string> proven_disjoint(const Ball& ball, element_id x,
                                           element_id y) {
  word_type prefix;
  return disjoint_after(ball, x, y, prefix);
}

LcmResult lcm(const Ball& ball, element_id x, element_id y) {
  element_id pair[] = {x, y};
  return lcm_set(ball, pair);
}

LcmResult lcm_set(const Ball& ball, std::span<const element_id> elements) {
  if (elements.empty()) {
    throw ValidationError("lcm of an empty set is not defined");
  }
  auto common = ideal_intersection(ball, elements);
  if (common.empty()) {
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (std::size_t j = i + 1; j < elements.size(); ++j) {
        if (auto reason = proven_disjoint(ball, elements[i], elements[j])) {
          return ProvenEmpty{*reason};
        }
      }
    }
    return EmptyUpTo{ball.radius()};
  }
  // Ids are ordered by length, so common.front() has minimal length.
  auto r = common.front();
  bool unique_min = common.size() == 1 || ball.length(common[1]) > ball.length(r);
  bool divides_all = unique_min && std::all_of(common.begin(), common.end(),
                                               [&](element_id q) {
                                                 return ball.quotient(r, q).has_value();
                                               });
  if (!divides_all) {
    return InconclusiveUpTo{ball.radius(), divisibility_minimal(ball, common)};
  }
  return Lcm{r};
}

Verdict verify_right_lcm(const Ball& ball) {
  const auto& alpha = ball.presentation().alphabet();
  auto verdict = Verdict::holds(ball.radius());
  std::size_t unresolved = 0;
  std::string first;
  for (element_id x = 0; x < ball.size(); ++x) {
    for (element_id y = x + 1; y < ball.size(); ++y) {
      auto result = lcm(ball, x, y);
      const auto* inc = std::get_if<InconclusiveUpTo>(&result);
      if (inc == nullptr) {
        continue;
      }
      const auto& mins = inc->minimal;
      for (std::size_t i = 0; i < mins.size(); ++i) {
        for (std::size_t j = i + 1; j < mins.size(); ++j) {
          if (auto reason = proven_disjoint(ball, mins[i], mins[j])) {
            return Verdict::fails(
                ball.radius(),
                Witness{"right-LCM",
                        {{"x", ball.word(x)},
                         {"y", ball.word(y)},
                         {"m1", ball.word(mins[i])},
                         {"m2", ball.word(mins[j])}},
                        "m1 and m2 are minimal common multiples of x and y; " +
                            *reason});
          }
        }
      }
      if (unresolved++ == 0) {
        first = alpha.format(ball.word(x)) + ", " + alpha.format(ball.word(y));
      }
    }
  }
  if (unresolved > 0) {
    verdict.absorb(Verdict::inconclusive(
        ball.radius(), std::to_string(unresolved) +
                           " pair(s) with several minimal common multiples "
                           "in the ball, first (" +
                           first + ")"));
  }
  return verdict;
}

}  // namespace rlcm
