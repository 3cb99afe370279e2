#include "rlcm/presentation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

#include "rlcm/error.hpp"

namespace rlcm {

HomogeneousPresentation::HomogeneousPresentation(Alphabet alphabet,
                                                 std::vector<Relation> relations,
                                                 std::string label)
    : alphabet_(std::move(alphabet)), label_(std::move(label)) {
  std::set<Relation> unique;
  for (auto& r : relations) {
    for (const auto* side : {&r.lhs, &r.rhs}) {
      for (auto s : *side) {
        if (s >= alphabet_.size()) {
          throw ValidationError("relation letter " + std::to_string(s) +
                                " is outside the alphabet of size " +
                                std::to_string(alphabet_.size()));
        }
      }
    }
    if (r.lhs.size() != r.rhs.size()) {
      throw ValidationError("relation " + alphabet_.format(r.lhs) + " = " +
                            alphabet_.format(r.rhs) +
                            " does not preserve length");
    }
    if (r.lhs == r.rhs) {
      throw ValidationError("relation " + alphabet_.format(r.lhs) + " = " +
                            alphabet_.format(r.rhs) +
                            " relates a word to itself");
    }
    if (r.rhs < r.lhs) {
      std::swap(r.lhs, r.rhs);
    }
    unique.insert(std::move(r));
  }
  relations_.assign(unique.begin(), unique.end());
}

std::size_t HomogeneousPresentation::max_relation_length() const noexcept {
  std::size_t out = 0;
  for (const auto& r : relations_) {
    out = std::max(out, r.lhs.size());
  }
  return out;
}

void HomogeneousPresentation::add_orthogonal_pair(letter_type s, letter_type t) {
  if (s >= alphabet_size() || t >= alphabet_size() || s == t) {
    throw ValidationError("invalid orthogonal generator pair");
  }
  orthogonal_.emplace(std::min(s, t), std::max(s, t));
}

bool HomogeneousPresentation::orthogonal(letter_type s, letter_type t) const {
  return orthogonal_.count({std::min(s, t), std::max(s, t)}) > 0;
}

word_type alternating_product(letter_type s, letter_type t, std::size_t m) {
  word_type w(m);
  for (std::size_t i = 0; i < m; ++i) {
    w[i] = i % 2 == 0 ? s : t;
  }
  return w;
}

HomogeneousPresentation artin_presentation(const CoxeterMatrix& m) {
  return artin_presentation(m, Alphabet::standard(m.rank()));
}

HomogeneousPresentation artin_presentation(const CoxeterMatrix& m,
                                           Alphabet alphabet) {
  if (alphabet.size() != m.rank()) {
    throw ValidationError("alphabet size does not match Coxeter rank");
  }
  std::vector<Relation> relations;
  std::vector<std::pair<letter_type, letter_type>> orthogonal;
  for (letter_type i = 0; i < m.rank(); ++i) {
    for (letter_type j = i + 1; j < m.rank(); ++j) {
      auto mij = m(i, j);
      if (mij == CoxeterMatrix::infinity) {
        orthogonal.emplace_back(i, j);
        continue;
      }
      relations.push_back(
          {alternating_product(i, j, mij), alternating_product(j, i, mij)});
    }
  }
  HomogeneousPresentation pres(std::move(alphabet), std::move(relations),
                               "Artin(" + std::to_string(m.rank()) + ")");
  for (auto [s, t] : orthogonal) {
    pres.add_orthogonal_pair(s, t);
  }
  pres.set_coxeter(m);
  return pres;
}

HomogeneousPresentation free_presentation(std::size_t n) {
  return free_presentation(Alphabet::standard(n));
}

HomogeneousPresentation free_presentation(Alphabet alphabet) {
  std::size_t n = alphabet.size();
  HomogeneousPresentation pres(std::move(alphabet), {},
                               "Free(" + std::to_string(n) + ")");
  for (letter_type s = 0; s < n; ++s) {
    for (letter_type t = s + 1; t < n; ++t) {
      pres.add_orthogonal_pair(s, t);
    }
  }
  pres.set_coxeter(CoxeterMatrix::uniform(n, CoxeterMatrix::infinity));
  return pres;
}

HomogeneousPresentation graph_product(
    const SimplicialGraph& graph,
    std::span<const HomogeneousPresentation> factors) {
  if (graph.vertex_count() != factors.size()) {
    throw ValidationError("graph product has " +
                          std::to_string(graph.vertex_count()) +
                          " vertices but " + std::to_string(factors.size()) +
                          " factors");
  }
  std::vector<letter_type> offset(factors.size() + 1, 0);
  std::map<std::string, std::size_t> name_count;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    offset[i + 1] = offset[i] + static_cast<letter_type>(factors[i].alphabet_size());
    for (const auto& n : factors[i].alphabet().names()) {
      ++name_count[n];
    }
  }
  bool clash = std::any_of(name_count.begin(), name_count.end(),
                           [](const auto& kv) { return kv.second > 1; });
  std::vector<std::string> names;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (const auto& n : factors[i].alphabet().names()) {
      names.push_back(clash ? n + "_" + std::to_string(i + 1) : n);
    }
  }

  auto shift = [](const word_type& w, letter_type by) {
    word_type out(w);
    for (auto& s : out) {
      s += by;
    }
    return out;
  };

  std::vector<Relation> relations;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (const auto& r : factors[i].relations()) {
      relations.push_back({shift(r.lhs, offset[i]), shift(r.rhs, offset[i])});
    }
  }
  for (auto [i, j] : graph.edges()) {
    for (letter_type x = offset[i]; x < offset[i + 1]; ++x) {
      for (letter_type y = offset[j]; y < offset[j + 1]; ++y) {
        relations.push_back({{x, y}, {y, x}});
      }
    }
  }

  std::string label = "GraphProduct(" + std::to_string(graph.vertex_count()) +
                      " vertices, " + std::to_string(graph.edges().size()) +
                      " edges;";
  for (const auto& f : factors) {
    label += " " + f.label();
  }
  label += ")";
  HomogeneousPresentation pres(Alphabet(std::move(names)), std::move(relations),
                               std::move(label));

  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (auto [s, t] : factors[i].orthogonal_pairs()) {
      pres.add_orthogonal_pair(s + offset[i], t + offset[i]);
    }
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      if (graph.adjacent(i, j)) {
        continue;
      }
      for (letter_type x = offset[i]; x < offset[i + 1]; ++x) {
        for (letter_type y = offset[j]; y < offset[j + 1]; ++y) {
          pres.add_orthogonal_pair(x, y);
        }
      }
    }
  }

  // A graph product of Artin monoids is the Artin monoid of the block
  // matrix with 2 between adjacent factors and inf between the others.
  bool all_artin = std::all_of(factors.begin(), factors.end(), [](const auto& f) {
    return f.coxeter().has_value();
  });
  if (all_artin) {
    std::size_t n = offset.back();
    std::vector<std::uint32_t> entries(n * n, CoxeterMatrix::infinity);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      for (std::size_t j = 0; j < factors.size(); ++j) {
        for (letter_type x = offset[i]; x < offset[i + 1]; ++x) {
          for (letter_type y = offset[j]; y < offset[j + 1]; ++y) {
            std::uint32_t m;
            if (i == j) {
              m = (*factors[i].coxeter())(x - offset[i], y - offset[i]);
            } else {
              m = graph.adjacent(i, j) ? 2 : CoxeterMatrix::infinity;
            }
            entries[x * n + y] = m;
          }
        }
      }
    }
    pres.set_coxeter(CoxeterMatrix(n, std::move(entries)));
  }
  return pres;
}

std::vector<word_type> saturate(const HomogeneousPresentation& pres,
                                const word_type& w, std::size_t cap) {
  std::unordered_set<word_type, WordHash> seen{w};
  std::deque<word_type> queue{w};
  const auto& rels = pres.relations();
  while (!queue.empty()) {
    word_type cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& r : rels) {
      std::size_t len = r.lhs.size();
      if (len > cur.size()) {
        continue;
      }
      for (std::size_t pos = 0; pos + len <= cur.size(); ++pos) {
        for (int dir = 0; dir < 2; ++dir) {
          const auto& from = dir == 0 ? r.lhs : r.rhs;
          const auto& to = dir == 0 ? r.rhs : r.lhs;
          if (!std::equal(from.begin(), from.end(), cur.begin() + pos)) {
            continue;
          }
          word_type next(cur);
          std::copy(to.begin(), to.end(), next.begin() + pos);
          if (seen.insert(next).second) {
            if (seen.size() > cap) {
              throw ResourceError("equivalence class of " +
                                  pres.alphabet().format(w) + " exceeds cap of " +
                                  std::to_string(cap) + " words");
            }
            queue.push_back(std::move(next));
          }
        }
      }
    }
  }
  std::vector<word_type> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool equal(const HomogeneousPresentation& pres, const word_type& u,
           const word_type& v, std::size_t cap) {
  if (u.size() != v.size()) {
    return false;
  }
  if (u == v) {
    return true;
  }
  auto cls = saturate(pres, u, cap);
  return std::binary_search(cls.begin(), cls.end(), v);
}

}  // namespace rlcm
