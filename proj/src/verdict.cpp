#include "rlcm/verdict.hpp"

#include "rlcm/error.hpp"

namespace rlcm {

const word_type& Witness::at(std::string_view role) const {
  for (const auto& [name, w] : elements) {
    if (name == role) {
      return w;
    }
  }
  throw Error("witness has no element named '" + std::string(role) + "'");
}

Verdict Verdict::holds(std::size_t radius) {
  return Verdict(Status::Holds, radius);
}

Verdict Verdict::fails(std::size_t radius, Witness witness) {
  Verdict v(Status::Fails, radius);
  v.witness_ = std::move(witness);
  return v;
}

Verdict Verdict::inconclusive(std::size_t radius, std::string reason) {
  Verdict v(Status::Inconclusive, radius);
  v.reason_ = std::move(reason);
  return v;
}

Verdict& Verdict::absorb(const Verdict& other) {
  if (status_ == Status::Fails) {
    return *this;
  }
  if (other.status_ == Status::Fails ||
      (other.status_ == Status::Inconclusive && status_ == Status::Holds)) {
    auto radius = radius_;
    *this = other;
    radius_ = radius;
  }
  return *this;
}

std::string_view to_string(Verdict::Status s) {
  switch (s) {
    case Verdict::Status::Holds:
      return "Holds";
    case Verdict::Status::Fails:
      return "Fails";
    case Verdict::Status::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

}  // namespace rlcm
