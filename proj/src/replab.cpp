#include "rlcm/replab.hpp"

namespace rlcm {

std::vector<element_pair> resolved_pairs(const Ball& ball) {
  std::vector<element_pair> out;
  for (element_id x = 0; x < ball.size(); ++x) {
    for (element_id y = 0; y < ball.size(); ++y) {
      if (resolved(lcm(ball, x, y))) {
        out.emplace_back(x, y);
      }
    }
  }
  return out;
}

}  // namespace rlcm
