#include "rlcm/ball.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rlcm/error.hpp"

namespace rlcm {

std::vector<std::size_t> Ball::sizes_by_length() const {
  std::vector<std::size_t> out(radius_ + 1, 0);
  for (const auto& e : elements_) {
    ++out[e.canonical.size()];
  }
  return out;
}

std::optional<element_id> Ball::find(const word_type& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<element_id> Ball::product(element_id x, element_id y) const {
  auto p = product_.at(cell(x, y));
  if (p == kNoElement) {
    return std::nullopt;
  }
  return p;
}

std::optional<element_id> Ball::quotient(element_id a, element_id b) const {
  auto q = quotient_.at(cell(a, b));
  if (q == kNoElement) {
    return std::nullopt;
  }
  return q;
}

std::optional<element_id> Ball::generator(letter_type s) const {
  if (s >= generator_id_.size() || generator_id_[s] == kNoElement) {
    return std::nullopt;
  }
  return generator_id_[s];
}

void Ball::index_words() {
  index_.clear();
  for (element_id x = 0; x < elements_.size(); ++x) {
    for (const auto& w : class_words_[x]) {
      index_.emplace(w, x);
    }
  }
  generator_id_.assign(pres_.alphabet_size(), kNoElement);
  for (auto s : generators_) {
    if (auto g = find(word_type{s})) {
      generator_id_[s] = *g;
    }
  }
}

void Ball::build_tables(bool restricted_quotients, const Ball* ambient) {
  std::size_t n = elements_.size();
  quotient_.assign(n * n, kNoElement);
  product_.assign(n * n, kNoElement);
  if (!restricted_quotients) {
    // a | b iff some word of b's class has a prefix in a's class; the
    // remaining suffix names the quotient.
    for (element_id b = 0; b < n; ++b) {
      for (const auto& w : class_words_[b]) {
        for (std::size_t k = 0; k <= w.size(); ++k) {
          auto a = find(word_type(w.begin(), w.begin() + k));
          auto x = find(word_type(w.begin() + k, w.end()));
          if (!a || !x) {
            continue;
          }
          auto& q = quotient_[cell(*a, b)];
          if (q == kNoElement) {
            q = *x;
          }
        }
      }
    }
  } else {
    std::vector<element_id> local(ambient->size(), kNoElement);
    for (element_id x = 0; x < n; ++x) {
      local[ambient_[x]] = x;
    }
    for (element_id a = 0; a < n; ++a) {
      for (element_id b = 0; b < n; ++b) {
        auto q = ambient->quotient(ambient_[a], ambient_[b]);
        if (!q) {
          continue;
        }
        // Quotient must itself lie in the submonoid.
        quotient_[cell(a, b)] = local[*q];
      }
    }
  }
  for (element_id x = 0; x < n; ++x) {
    for (element_id y = 0; y < n; ++y) {
      if (length(x) + length(y) > radius_) {
        continue;
      }
      if (auto p = find(concat(word(x), word(y)))) {
        product_[cell(x, y)] = *p;
      }
    }
  }
  if (auto cox = pres_.coxeter()) {
    semilattice_ = is_spherical(cox->submatrix(generators_));
  }
}

Ball enumerate_ball(const HomogeneousPresentation& pres, std::size_t radius,
                    std::size_t cap) {
  Ball ball;
  ball.pres_ = pres;
  ball.radius_ = radius;
  ball.generators_.resize(pres.alphabet_size());
  std::iota(ball.generators_.begin(), ball.generators_.end(), letter_type{0});
  ball.elements_.push_back({word_type{}, 1});
  ball.class_words_.push_back({word_type{}});
  ball.index_.emplace(word_type{}, 0);

  std::size_t level_begin = 0;
  for (std::size_t k = 0; k < radius; ++k) {
    std::size_t level_end = ball.elements_.size();
    // Classes of length k + 1, keyed by canonical word.
    std::map<word_type, std::vector<word_type>> next;
    std::unordered_map<word_type, bool, WordHash> seen;
    for (std::size_t c = level_begin; c < level_end; ++c) {
      for (auto s : ball.generators_) {
        word_type w = ball.elements_[c].canonical;
        w.push_back(s);
        if (seen.count(w)) {
          continue;
        }
        auto cls = saturate(pres, w, cap);
        for (const auto& u : cls) {
          seen.emplace(u, true);
        }
        word_type canonical = cls.front();
        next.emplace(std::move(canonical), std::move(cls));
      }
    }
    if (ball.elements_.size() + next.size() > kMaxBallElements) {
      throw ResourceError("ball of radius " + std::to_string(radius) +
                          " has more than " + std::to_string(kMaxBallElements) +
                          " elements");
    }
    for (auto& [canonical, cls] : next) {
      auto id = static_cast<element_id>(ball.elements_.size());
      ball.elements_.push_back({canonical, cls.size()});
      for (const auto& u : cls) {
        ball.index_.emplace(u, id);
      }
      ball.class_words_.push_back(std::move(cls));
    }
    level_begin = level_end;
  }
  ball.ambient_.resize(ball.elements_.size());
  std::iota(ball.ambient_.begin(), ball.ambient_.end(), element_id{0});
  ball.index_words();
  ball.build_tables(false, nullptr);
  return ball;
}

std::optional<element_id> left_divides(const Ball& ball, element_id a,
                                       element_id b) {
  return ball.quotient(a, b);
}

Verdict check_cancellativity(const Ball& ball) {
  if (ball.radius() < 2) {
    return Verdict::inconclusive(ball.radius(),
                                 "radius below 2 admits no nontrivial products");
  }
  const auto& alpha = ball.presentation().alphabet();
  for (int side = 0; side < 2; ++side) {
    for (element_id p = 0; p < ball.size(); ++p) {
      std::map<element_id, element_id> seen;
      for (element_id x = 0; x < ball.size(); ++x) {
        auto prod = side == 0 ? ball.product(p, x) : ball.product(x, p);
        if (!prod) {
          continue;
        }
        auto [it, inserted] = seen.emplace(*prod, x);
        if (!inserted) {
          std::string kind = side == 0 ? "left" : "right";
          Witness w{kind + "-cancellation",
                    {{"p", ball.word(p)},
                     {"x", ball.word(it->second)},
                     {"y", ball.word(x)}},
                    kind == "left"
                        ? "p*x = p*y = " + alpha.format(ball.word(*prod))
                        : "x*p = y*p = " + alpha.format(ball.word(*prod))};
          return Verdict::fails(ball.radius(), std::move(w));
        }
      }
    }
  }
  return Verdict::holds(ball.radius());
}

bool parabolic_member(const Ball& ball, std::span<const letter_type> subset,
                      element_id x) {
  for (const auto& w : ball.class_words(x)) {
    bool inside = std::all_of(w.begin(), w.end(), [&](letter_type s) {
      return std::find(subset.begin(), subset.end(), s) != subset.end();
    });
    if (inside) {
      return true;
    }
  }
  return false;
}

Ball parabolic_restriction(const Ball& ambient,
                           std::span<const letter_type> subset) {
  for (auto s : subset) {
    if (s >= ambient.presentation().alphabet_size()) {
      throw ValidationError("subset letter outside the alphabet");
    }
  }
  if (ambient.is_restriction()) {
    throw ValidationError("cannot restrict a parabolic restriction");
  }
  auto in_subset = [&](const word_type& w) {
    return std::all_of(w.begin(), w.end(), [&](letter_type s) {
      return std::find(subset.begin(), subset.end(), s) != subset.end();
    });
  };

  Ball ball;
  ball.pres_ = ambient.pres_;
  ball.radius_ = ambient.radius_;
  ball.restriction_ = true;
  ball.generators_.assign(subset.begin(), subset.end());
  std::sort(ball.generators_.begin(), ball.generators_.end());
  ball.generators_.erase(
      std::unique(ball.generators_.begin(), ball.generators_.end()),
      ball.generators_.end());

  // Ambient ids are ordered by length then canonical word; keep that order
  // by sorting on (length, least in-subset word).
  std::vector<std::pair<word_type, element_id>> members;
  for (element_id x = 0; x < ambient.size(); ++x) {
    for (const auto& w : ambient.class_words(x)) {
      if (in_subset(w)) {
        members.emplace_back(w, x);
        break;  // class words are sorted, so this is the least one
      }
    }
  }
  std::stable_sort(members.begin(), members.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) {
      return a.first.size() < b.first.size();
    }
    return a.first < b.first;
  });
  for (auto& [w, x] : members) {
    ball.elements_.push_back({w, ambient.element(x).class_size});
    auto cls = ambient.class_words(x);
    ball.class_words_.emplace_back(cls.begin(), cls.end());
    ball.ambient_.push_back(x);
  }
  ball.index_words();
  ball.build_tables(true, &ambient);
  return ball;
}

}  // namespace rlcm
