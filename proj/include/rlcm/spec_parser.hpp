#ifndef RLCM_SPEC_PARSER_HPP_
#define RLCM_SPEC_PARSER_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rlcm/coxeter.hpp"
#include "rlcm/presentation.hpp"

namespace rlcm {

// A parsed monoid description. Line-based grammar, '#' starts a comment:
//
//   free N
//   coxeter N            followed by N rows of N entries (integers or inf)
//   presentation N       followed by "relation u = v" lines and "end"
//   graphproduct K       followed by "edge i j" lines (1-based vertices),
//                        K nested monoid descriptions, and "end"
//
// Any header except graphproduct may be followed by "names g1 ... gN".
struct MonoidSpec {
  enum class Kind { Free, Coxeter, Presentation, GraphProduct };

  Kind kind = Kind::Free;
  HomogeneousPresentation presentation;
  // The Coxeter matrix when the monoid is an Artin monoid: always for free
  // and coxeter descriptions, for graph products of Artin factors.
  std::optional<CoxeterMatrix> coxeter;
  SimplicialGraph graph;
  std::vector<MonoidSpec> factors;
};

std::string_view to_string(MonoidSpec::Kind k);

MonoidSpec parse_spec(std::string_view text);

// Reads and parses a file; throws Error if it cannot be read.
MonoidSpec load_spec(const std::filesystem::path& path);

// Reads a whole file into a string; throws Error if it cannot be read.
std::string read_file(const std::filesystem::path& path);

}  // namespace rlcm

#endif  // RLCM_SPEC_PARSER_HPP_
