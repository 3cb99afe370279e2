#ifndef RLCM_BALL_HPP_
#define RLCM_BALL_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "rlcm/presentation.hpp"
#include "rlcm/verdict.hpp"
#include "rlcm/word.hpp"

namespace rlcm {

using element_id = std::uint32_t;
inline constexpr element_id kNoElement = std::numeric_limits<element_id>::max();

// Balls keep n x n product and quotient tables, so their size is capped.
inline constexpr std::size_t kMaxBallElements = 8192;

// A member of the monoid: its lexicographically least word and the number
// of words in its class.
struct Element {
  word_type canonical;
  std::size_t class_size = 0;
};

// All elements of length at most `radius`, ordered by length and then by
// canonical word (so the identity has id 0), together with exact
// divisibility and product tables.
//
// A Ball is either the full ball of a presentation or the parabolic
// restriction of one to a generator subset (see parabolic_restriction).
// Completed balls are immutable.
class Ball {
 public:
  const HomogeneousPresentation& presentation() const noexcept { return pres_; }
  std::size_t radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return elements_.size(); }

  const Element& element(element_id x) const { return elements_.at(x); }
  const word_type& word(element_id x) const { return elements_.at(x).canonical; }
  std::size_t length(element_id x) const { return word(x).size(); }
  std::span<const word_type> class_words(element_id x) const {
    return class_words_.at(x);
  }
  std::vector<std::size_t> sizes_by_length() const;

  static constexpr element_id identity() noexcept { return 0; }

  // The element represented by w, if it lies in this ball.
  std::optional<element_id> find(const word_type& w) const;

  // x * y when it lies in the ball.
  std::optional<element_id> product(element_id x, element_id y) const;

  // The q with b = a * q, if a left-divides b (within this ball's monoid).
  std::optional<element_id> quotient(element_id a, element_id b) const;

  // Generators of the monoid this ball lives in, and their element ids.
  std::span<const letter_type> generators() const noexcept { return generators_; }
  std::optional<element_id> generator(letter_type s) const;

  // For a parabolic restriction, the id of the same element in the
  // ambient ball; identity map otherwise.
  element_id ambient_id(element_id x) const { return ambient_.at(x); }
  bool is_restriction() const noexcept { return restriction_; }

  // True when every pair of elements of the monoid is known to have a
  // common right multiple: the Artin monoid of a spherical Coxeter
  // matrix.
  bool semilattice() const noexcept { return semilattice_; }

  friend Ball enumerate_ball(const HomogeneousPresentation&, std::size_t,
                             std::size_t);
  friend Ball parabolic_restriction(const Ball&, std::span<const letter_type>);

 private:
  Ball() = default;
  void index_words();
  void build_tables(bool restricted_quotients, const Ball* ambient);
  std::size_t cell(element_id a, element_id b) const {
    return static_cast<std::size_t>(a) * elements_.size() + b;
  }

  HomogeneousPresentation pres_;
  std::size_t radius_ = 0;
  std::vector<Element> elements_;
  std::vector<std::vector<word_type>> class_words_;
  std::unordered_map<word_type, element_id, WordHash> index_;
  std::vector<element_id> quotient_;
  std::vector<element_id> product_;
  std::vector<letter_type> generators_;
  std::vector<element_id> generator_id_;
  std::vector<element_id> ambient_;
  bool restriction_ = false;
  bool semilattice_ = false;
};

// Enumerates the ball of radius L by extending each canonical word of
// length k by every generator and saturating the results.
Ball enumerate_ball(const HomogeneousPresentation& pres, std::size_t radius,
                    std::size_t cap = kDefaultClassCap);

// The quotient x with b = a * x, or nullopt if a does not left-divide b.
std::optional<element_id> left_divides(const Ball& ball, element_id a,
                                       element_id b);

// Left and right cancellation among all products inside the ball.
Verdict check_cancellativity(const Ball& ball);

// True iff some word in the class of x uses only letters from `subset`.
bool parabolic_member(const Ball& ball, std::span<const letter_type> subset,
                      element_id x);

// The submonoid generated by `subset`, restricted to the ball: its
// elements are the parabolic members, and a divides b when b = a * x with
// x also a parabolic member.
Ball parabolic_restriction(const Ball& ambient,
                           std::span<const letter_type> subset);

}  // namespace rlcm

#endif  // RLCM_BALL_HPP_
