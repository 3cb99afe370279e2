#ifndef RLCM_COXETER_HPP_
#define RLCM_COXETER_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rlcm/word.hpp"

namespace rlcm {

// Symmetric matrix with m(i, i) = 1 and m(i, j) in {2, 3, ...} or infinity
// off the diagonal.
class CoxeterMatrix {
 public:
  static constexpr std::uint32_t infinity =
      std::numeric_limits<std::uint32_t>::max();

  CoxeterMatrix() = default;

  // Row-major entries; throws ValidationError unless the matrix is a valid
  // Coxeter matrix.
  CoxeterMatrix(std::size_t rank, std::vector<std::uint32_t> entries);

  static CoxeterMatrix from_rows(
      const std::vector<std::vector<std::uint32_t>>& rows);

  // Braid monoid on rank + 1 strands: 3 on neighbours, 2 elsewhere.
  static CoxeterMatrix braid(std::size_t rank);

  // Rank-2 matrix [[1, m], [m, 1]].
  static CoxeterMatrix dihedral(std::uint32_t m);

  // Every off-diagonal entry equal to m.
  static CoxeterMatrix uniform(std::size_t rank, std::uint32_t m);

  std::size_t rank() const noexcept { return rank_; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const {
    return entries_[i * rank_ + j];
  }

  // Rows and columns restricted to `subset`, in the given order.
  CoxeterMatrix submatrix(std::span<const letter_type> subset) const;

  // Simultaneous row/column relabeling: new index k is old index perm[k].
  CoxeterMatrix permuted(std::span<const std::size_t> perm) const;

  bool operator==(const CoxeterMatrix&) const = default;

 private:
  std::size_t rank_ = 0;
  std::vector<std::uint32_t> entries_;
};

std::string format_coxeter_entry(std::uint32_t m);

// Connected components of the Coxeter diagram (edge i - j whenever
// m(i, j) >= 3, including infinity). Each component is sorted.
std::vector<std::vector<letter_type>> coxeter_components(const CoxeterMatrix& m);

// Finite-type name of one connected component ("A3", "B4", "D5", "E6",
// "F4", "H3", "I2(6)", ...), or nullopt if the component is not in the
// catalogue of finite Coxeter groups.
std::optional<std::string> finite_type(const CoxeterMatrix& m,
                                       std::span<const letter_type> component);

// True iff every component of the diagram is of finite type.
bool is_spherical(const CoxeterMatrix& m);

// Simple graph without loops.
class SimplicialGraph {
 public:
  SimplicialGraph() = default;
  SimplicialGraph(std::size_t vertex_count,
                  const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  static SimplicialGraph complete(std::size_t n);
  static SimplicialGraph edgeless(std::size_t n);
  static SimplicialGraph path(std::size_t n);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  const std::set<std::pair<std::size_t, std::size_t>>& edges() const noexcept {
    return edges_;
  }
  bool adjacent(std::size_t i, std::size_t j) const;

 private:
  std::size_t vertex_count_ = 0;
  std::set<std::pair<std::size_t, std::size_t>> edges_;
};

}  // namespace rlcm

#endif  // RLCM_COXETER_HPP_
