#ifndef RLCM_VERDICT_HPP_
#define RLCM_VERDICT_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rlcm/word.hpp"

namespace rlcm {

// A counterexample, stated in words so it can be replayed against the
// presentation without reference to any particular ball.
struct Witness {
  std::string property;
  std::vector<std::pair<std::string, word_type>> elements;
  std::string note;

  const word_type& at(std::string_view role) const;
};

// Outcome of a bounded check. Every result is relative to the radius of
// the ball it was computed in.
class Verdict {
 public:
  enum class Status { Holds, Fails, Inconclusive };

  static Verdict holds(std::size_t radius);
  static Verdict fails(std::size_t radius, Witness witness);
  static Verdict inconclusive(std::size_t radius, std::string reason);

  Status status() const noexcept { return status_; }
  std::size_t radius() const noexcept { return radius_; }
  bool is_holds() const noexcept { return status_ == Status::Holds; }
  bool is_fails() const noexcept { return status_ == Status::Fails; }
  bool is_inconclusive() const noexcept {
    return status_ == Status::Inconclusive;
  }
  const Witness& witness() const { return witness_.value(); }
  const std::string& reason() const noexcept { return reason_; }

  // Aggregation: Fails dominates Inconclusive, which dominates Holds.
  // The first Fails witness (or Inconclusive reason) is kept.
  Verdict& absorb(const Verdict& other);

 private:
  Verdict(Status s, std::size_t radius) : status_(s), radius_(radius) {}

  Status status_;
  std::size_t radius_;
  std::optional<Witness> witness_;
  std::string reason_;
};

std::string_view to_string(Verdict::Status s);

}  // namespace rlcm

#endif  // RLCM_VERDICT_HPP_
