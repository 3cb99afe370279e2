#include "rlcm/coxeter.hpp"

#include <algorithm>
#include <functional>

#include "rlcm/error.hpp"

namespace rlcm {

CoxeterMatrix::CoxeterMatrix(std::size_t rank, std::vector<std::uint32_t> entries)
    : rank_(rank), entries_(std::move(entries)) {
  if (entries_.size() != rank_ * rank_) {
    throw ValidationError("Coxeter matrix of rank " + std::to_string(rank_) +
                          " needs " + std::to_string(rank_ * rank_) +
                          " entries, got " + std::to_string(entries_.size()));
  }
  for (std::size_t i = 0; i < rank_; ++i) {
    if ((*this)(i, i) != 1) {
      throw ValidationError("Coxeter matrix diagonal entry (" +
                            std::to_string(i + 1) + ", " +
                            std::to_string(i + 1) + ") must be 1");
    }
    for (std::size_t j = 0; j < rank_; ++j) {
      if (i == j) {
        continue;
      }
      auto m = (*this)(i, j);
      if (m < 2) {
        throw ValidationError("Coxeter matrix entry (" + std::to_string(i + 1) +
                              ", " + std::to_string(j + 1) +
                              ") must be at least 2");
      }
      if (m != (*this)(j, i)) {
        throw ValidationError("Coxeter matrix is not symmetric at (" +
                              std::to_string(i + 1) + ", " +
                              std::to_string(j + 1) + ")");
      }
    }
  }
}

CoxeterMatrix CoxeterMatrix::from_rows(
    const std::vector<std::vector<std::uint32_t>>& rows) {
  std::vector<std::uint32_t> entries;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) {
      throw ValidationError("Coxeter matrix must be square");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return CoxeterMatrix(rows.size(), std::move(entries));
}

CoxeterMatrix CoxeterMatrix::braid(std::size_t rank) {
  std::vector<std::uint32_t> entries(rank * rank, 2);
  for (std::size_t i = 0; i < rank; ++i) {
    entries[i * rank + i] = 1;
    if (i + 1 < rank) {
      entries[i * rank + i + 1] = 3;
      entries[(i + 1) * rank + i] = 3;
    }
  }
  return CoxeterMatrix(rank, std::move(entries));
}

CoxeterMatrix CoxeterMatrix::dihedral(std::uint32_t m) {
  return CoxeterMatrix(2, {1, m, m, 1});
}

CoxeterMatrix CoxeterMatrix::uniform(std::size_t rank, std::uint32_t m) {
  std::vector<std::uint32_t> entries(rank * rank, m);
  for (std::size_t i = 0; i < rank; ++i) {
    entries[i * rank + i] = 1;
  }
  return CoxeterMatrix(rank, std::move(entries));
}

CoxeterMatrix CoxeterMatrix::submatrix(std::span<const letter_type> subset) const {
  std::vector<std::uint32_t> entries;
  entries.reserve(subset.size() * subset.size());
  for (auto i : subset) {
    for (auto j : subset) {
      entries.push_back((*this)(i, j));
    }
  }
  return CoxeterMatrix(subset.size(), std::move(entries));
}

CoxeterMatrix CoxeterMatrix::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != rank_) {
    throw ValidationError("permutation size does not match Coxeter rank");
  }
  std::vector<std::uint32_t> entries;
  entries.reserve(rank_ * rank_);
  for (auto i : perm) {
    for (auto j : perm) {
      entries.push_back((*this)(i, j));
    }
  }
  return CoxeterMatrix(rank_, std::move(entries));
}

std::string format_coxeter_entry(std::uint32_t m) {
  return m == CoxeterMatrix::infinity ? "inf" : std::to_string(m);
}

std::vector<std::vector<letter_type>> coxeter_components(const CoxeterMatrix& m) {
  std::size_t n = m.rank();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<letter_type>> out;
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) {
      continue;
    }
    std::vector<letter_type> comp;
    std::vector<std::size_t> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      comp.push_back(static_cast<letter_type>(v));
      for (std::size_t w = 0; w < n; ++w) {
        if (!seen[w] && w != v && m(v, w) >= 3) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

// Walks a path in the diagram starting at `start`, returning the vertices
// in order. Assumes the component is a path and `start` is an endpoint.
std::vector<letter_type> walk_path(
    const std::vector<std::vector<letter_type>>& adj, letter_type start,
    std::span<const letter_type> comp) {
  std::vector<letter_type> order{start};
  letter_type prev = start;
  letter_type cur = start;
  while (order.size() < comp.size()) {
    letter_type next = cur;
    for (auto w : adj[cur]) {
      if (w != prev) {
        next = w;
      }
    }
    if (next == cur) {
      break;
    }
    prev = cur;
    cur = next;
    order.push_back(cur);
  }
  return order;
}

}  // namespace

std::optional<std::string> finite_type(const CoxeterMatrix& m,
                                       std::span<const letter_type> comp) {
  std::size_t k = comp.size();
  if (k == 0) {
    return std::nullopt;
  }
  if (k == 1) {
    return "A1";
  }
  std::vector<std::vector<letter_type>> adj(m.rank());
  std::size_t edge_count = 0;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      auto label = m(comp[a], comp[b]);
      if (label == CoxeterMatrix::infinity) {
        return std::nullopt;
      }
      if (label >= 3) {
        adj[comp[a]].push_back(comp[b]);
        adj[comp[b]].push_back(comp[a]);
        ++edge_count;
      }
    }
  }
  if (k == 2) {
    auto label = m(comp[0], comp[1]);
    return "I2(" + std::to_string(label) + ")";
  }
  // A connected graph with k - 1 edges is a tree.
  if (edge_count != k - 1) {
    return std::nullopt;
  }
  std::vector<letter_type> branch;
  std::vector<letter_type> ends;
  for (auto v : comp) {
    if (adj[v].size() >= 4) {
      return std::nullopt;
    }
    if (adj[v].size() == 3) {
      branch.push_back(v);
    }
    if (adj[v].size() == 1) {
      ends.push_back(v);
    }
  }
  if (branch.empty()) {
    auto order = walk_path(adj, ends.front(), comp);
    std::vector<std::uint32_t> labels;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
      labels.push_back(m(order[i], order[i + 1]));
    }
    auto count = [&](std::uint32_t x) {
      return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), x));
    };
    auto ks = std::to_string(k);
    if (count(3) == labels.size()) {
      return "A" + ks;
    }
    if (count(3) == labels.size() - 1 && count(4) == 1 &&
        (labels.front() == 4 || labels.back() == 4)) {
      return "B" + ks;
    }
    if (k == 4 && labels == std::vector<std::uint32_t>{3, 4, 3}) {
      return "F4";
    }
    if (count(3) == labels.size() - 1 && count(5) == 1 &&
        (labels.front() == 5 || labels.back() == 5) && (k == 3 || k == 4)) {
      return "H" + ks;
    }
    return std::nullopt;
  }
  if (branch.size() != 1) {
    return std::nullopt;
  }
  for (auto v : comp) {
    for (auto w : adj[v]) {
      if (m(v, w) != 3) {
        return std::nullopt;
      }
    }
  }
  // Leg lengths from the branch vertex.
  auto center = branch.front();
  std::vector<std::size_t> legs;
  for (auto first : adj[center]) {
    std::size_t len = 1;
    letter_type prev = center;
    letter_type cur = first;
    while (adj[cur].size() == 2) {
      letter_type next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    legs.push_back(len);
  }
  std::sort(legs.begin(), legs.end());
  if (legs[0] == 1 && legs[1] == 1) {
    return "D" + std::to_string(k);
  }
  if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4) {
    return "E" + std::to_string(k);
  }
  return std::nullopt;
}

bool is_spherical(const CoxeterMatrix& m) {
  for (const auto& comp : coxeter_components(m)) {
    if (!finite_type(m, comp)) {
      return false;
    }
  }
  return true;
}

SimplicialGraph::SimplicialGraph(
    std::size_t vertex_count,
    const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : vertex_count_(vertex_count) {
  for (auto [i, j] : edges) {
    if (i >= vertex_count || j >= vertex_count) {
      throw ValidationError("graph edge {" + std::to_string(i + 1) + ", " +
                            std::to_string(j + 1) + "} is out of range");
    }
    if (i == j) {
      throw ValidationError("graph loop at vertex " + std::to_string(i + 1));
    }
    edges_.emplace(std::min(i, j), std::max(i, j));
  }
}

SimplicialGraph SimplicialGraph::complete(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      edges.emplace_back(i, j);
    }
  }
  return SimplicialGraph(n, edges);
}

SimplicialGraph SimplicialGraph::edgeless(std::size_t n) {
  return SimplicialGraph(n, {});
}

SimplicialGraph SimplicialGraph::path(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.emplace_back(i, i + 1);
  }
  return SimplicialGraph(n, edges);
}

bool SimplicialGraph::adjacent(std::size_t i, std::size_t j) const {
  return edges_.count({std::min(i, j), std::max(i, j)}) > 0;
}

}  // namespace rlcm
