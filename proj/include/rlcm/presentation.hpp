#ifndef RLCM_PRESENTATION_HPP_
#define RLCM_PRESENTATION_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rlcm/coxeter.hpp"
#include "rlcm/word.hpp"

namespace rlcm {

inline constexpr std::size_t kDefaultClassCap = 1'000'000;

// Unordered pair of distinct words of equal length; stored with lhs < rhs.
struct Relation {
  word_type lhs;
  word_type rhs;

  auto operator<=>(const Relation&) const = default;
};

// Finitely presented monoid whose relations all preserve length. Every
// class of equivalent words is finite and the only unit is the identity.
class HomogeneousPresentation {
 public:
  HomogeneousPresentation() = default;

  // Throws ValidationError for out-of-range letters, relations with sides
  // of different length, or a side related to itself.
  HomogeneousPresentation(Alphabet alphabet, std::vector<Relation> relations,
                          std::string label);

  std::size_t alphabet_size() const noexcept { return alphabet_.size(); }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t max_relation_length() const noexcept;

  // Generator pairs s, t with sP and tP known to be disjoint, e.g. m = inf
  // in an Artin monoid. Empty-intersection certificates are built from
  // these pairs only.
  void add_orthogonal_pair(letter_type s, letter_type t);
  bool orthogonal(letter_type s, letter_type t) const;
  const std::set<std::pair<letter_type, letter_type>>& orthogonal_pairs()
      const noexcept {
    return orthogonal_;
  }

  // Present when this is the Artin presentation of a Coxeter matrix.
  const std::optional<CoxeterMatrix>& coxeter() const noexcept {
    return coxeter_;
  }
  void set_coxeter(CoxeterMatrix m) { coxeter_ = std::move(m); }

 private:
  Alphabet alphabet_;
  std::vector<Relation> relations_;
  std::string label_;
  std::set<std::pair<letter_type, letter_type>> orthogonal_;
  std::optional<CoxeterMatrix> coxeter_;
};

// sts... with m letters, starting with s.
word_type alternating_product(letter_type s, letter_type t, std::size_t m);

HomogeneousPresentation artin_presentation(const CoxeterMatrix& m);
HomogeneousPresentation artin_presentation(const CoxeterMatrix& m,
                                           Alphabet alphabet);

// Free monoid on n generators (the Artin monoid with every m = inf).
HomogeneousPresentation free_presentation(std::size_t n);
HomogeneousPresentation free_presentation(Alphabet alphabet);

// Free product of the factors modulo commutation of generators sitting on
// adjacent vertices. Factor alphabets are concatenated in vertex order;
// clashing names get a "_<vertex>" suffix (1-based).
HomogeneousPresentation graph_product(
    const SimplicialGraph& graph,
    std::span<const HomogeneousPresentation> factors);

// All words equivalent to w, sorted lexicographically. Throws
// ResourceError if the class has more than `cap` words.
std::vector<word_type> saturate(const HomogeneousPresentation& pres,
                                const word_type& w,
                                std::size_t cap = kDefaultClassCap);

bool equal(const HomogeneousPresentation& pres, const word_type& u,
           const word_type& v, std::size_t cap = kDefaultClassCap);

}  // namespace rlcm

#endif  // RLCM_PRESENTATION_HPP_
