#ifndef RLCM_REPLAB_HPP_
#define RLCM_REPLAB_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rlcm/ball.hpp"
#include "rlcm/error.hpp"
#include "rlcm/inclusions.hpp"
#include "rlcm/lcm.hpp"
#include "rlcm/presentation.hpp"
#include "rlcm/rational.hpp"
#include "rlcm/verdict.hpp"

namespace rlcm {

using element_pair = std::pair<element_id, element_id>;

namespace detail {

template <typename Scalar>
void drop_zeros(SparseMatrix<Scalar>& m) {
  m.prune([](Eigen::Index, Eigen::Index, const Scalar& v) { return v != Scalar(0); });
}

template <typename Derived>
SparseMatrix<typename Derived::Scalar> to_sparse(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  std::vector<Eigen::Triplet<Scalar>> entries;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (a(i, j) != Scalar(0)) {
        entries.emplace_back(i, j, a(i, j));
      }
    }
  }
  SparseMatrix<Scalar> out(a.rows(), a.cols());
  out.setFromTriplets(entries.begin(), entries.end());
  return out;
}

// First entry, in column-major order, where a and b differ, looking only
// at columns accepted by `keep`.
template <typename Scalar, typename ColumnFilter>
std::optional<std::pair<Eigen::Index, Eigen::Index>> first_difference(
    const SparseMatrix<Scalar>& a, const SparseMatrix<Scalar>& b,
    ColumnFilter keep) {
  SparseMatrix<Scalar> d = a - b;
  for (Eigen::Index k = 0; k < d.outerSize(); ++k) {
    if (!keep(k)) {
      continue;
    }
    for (typename SparseMatrix<Scalar>::InnerIterator it(d, k); it; ++it) {
      if (it.value() != Scalar(0)) {
        return std::make_pair(it.row(), it.col());
      }
    }
  }
  return std::nullopt;
}

template <typename Scalar>
bool sparse_equal(const SparseMatrix<Scalar>& a, const SparseMatrix<Scalar>& b) {
  return !first_difference(a, b, [](Eigen::Index) { return true; });
}

}  // namespace detail

template <typename Scalar = Rational>
SparseMatrix<Scalar> sparse_identity(Eigen::Index n) {
  SparseMatrix<Scalar> id(n, n);
  id.setIdentity();
  return id;
}

// Matrices for some generators of a presentation, satisfying every
// defining relation whose letters are all assigned. The adjoint is the
// transpose.
template <typename Scalar = Rational>
class Representation {
 public:
  Representation(HomogeneousPresentation pres, std::vector<letter_type> generators,
                 std::vector<SparseMatrix<Scalar>> matrices)
      : pres_(std::move(pres)) {
    if (generators.size() != matrices.size()) {
      throw ValidationError("representation needs one matrix per generator");
    }
    slot_.assign(pres_.alphabet_size(), npos);
    for (std::size_t i = 0; i < generators.size(); ++i) {
      auto s = generators[i];
      if (s >= pres_.alphabet_size()) {
        throw ValidationError("representation generator outside the alphabet");
      }
      if (slot_[s] != npos) {
        throw ValidationError("generator " + pres_.alphabet().name(s) +
                              " is assigned twice");
      }
      auto& m = matrices[i];
      if (m.rows() != m.cols()) {
        throw ValidationError("matrix for " + pres_.alphabet().name(s) +
                              " is not square");
      }
      if (i == 0) {
        dim_ = static_cast<std::size_t>(m.rows());
      } else if (static_cast<std::size_t>(m.rows()) != dim_) {
        throw ValidationError("matrix for " + pres_.alphabet().name(s) +
                              " has dimension " + std::to_string(m.rows()) +
                              ", expected " + std::to_string(dim_));
      }
      detail::drop_zeros(m);
      slot_[s] = matrices_.size();
      generators_.push_back(s);
      matrices_.push_back(std::move(m));
    }
    validate_relations();
  }

  Representation(HomogeneousPresentation pres, std::vector<letter_type> generators,
                 const std::vector<DenseMatrix<Scalar>>& matrices)
      : Representation(std::move(pres), std::move(generators), sparsify(matrices)) {}

  const HomogeneousPresentation& presentation() const noexcept { return pres_; }
  std::size_t dim() const noexcept { return dim_; }
  std::span<const letter_type> generators() const noexcept { return generators_; }
  bool assigns(letter_type s) const { return s < slot_.size() && slot_[s] != npos; }

  const SparseMatrix<Scalar>& matrix(letter_type s) const {
    if (!assigns(s)) {
      throw ValidationError("generator " + pres_.alphabet().name(s) +
                            " has no matrix");
    }
    return matrices_[slot_[s]];
  }

  // V(w) = V(w_1) ... V(w_k); the identity for the empty word.
  SparseMatrix<Scalar> evaluate(const word_type& w) const {
    auto out = sparse_identity<Scalar>(static_cast<Eigen::Index>(dim_));
    for (auto s : w) {
      SparseMatrix<Scalar> next = out * matrix(s);
      out = std::move(next);
    }
    detail::drop_zeros(out);
    return out;
  }

  bool isometric(letter_type s) const {
    SparseMatrix<Scalar> g = SparseMatrix<Scalar>(matrix(s).transpose()) * matrix(s);
    return detail::sparse_equal(g, sparse_identity<Scalar>(g.rows()));
  }

  bool unitary(letter_type s) const {
    SparseMatrix<Scalar> g = matrix(s) * SparseMatrix<Scalar>(matrix(s).transpose());
    return isometric(s) && detail::sparse_equal(g, sparse_identity<Scalar>(g.rows()));
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  static std::vector<SparseMatrix<Scalar>> sparsify(
      const std::vector<DenseMatrix<Scalar>>& dense) {
    std::vector<SparseMatrix<Scalar>> out;
    out.reserve(dense.size());
    for (const auto& d : dense) {
      out.push_back(detail::to_sparse(d));
    }
    return out;
  }

  void validate_relations() const {
    for (const auto& r : pres_.relations()) {
      auto assigned = [&](const word_type& w) {
        return std::all_of(w.begin(), w.end(), [&](letter_type s) { return assigns(s); });
      };
      if (!assigned(r.lhs) || !assigned(r.rhs)) {
        continue;
      }
      if (!detail::sparse_equal(evaluate(r.lhs), evaluate(r.rhs))) {
        const auto& a = pres_.alphabet();
        throw ValidationError("representation violates relation " +
                              a.format(r.lhs) + " = " + a.format(r.rhs));
      }
    }
  }

  HomogeneousPresentation pres_;
  std::size_t dim_ = 0;
  std::vector<letter_type> generators_;
  std::vector<std::size_t> slot_;
  std::vector<SparseMatrix<Scalar>> matrices_;
};

// One operator per element of a ball, T(x) for element id x.
//
// When `basis_length` is set the basis vectors are themselves indexed by
// ball elements (the truncated regular representation) and an identity
// involving positive words of length up to D is only meaningful on basis
// vectors q with |q| + D <= window_radius.
template <typename Scalar = Rational>
struct OperatorFamily {
  std::size_t dim = 0;
  std::vector<SparseMatrix<Scalar>> ops;
  std::optional<std::vector<std::size_t>> basis_length;
  std::size_t window_radius = 0;

  const SparseMatrix<Scalar>& operator[](element_id x) const { return ops.at(x); }

  bool safe_column(Eigen::Index col, std::size_t depth) const {
    return !basis_length ||
           (*basis_length)[static_cast<std::size_t>(col)] + depth <= window_radius;
  }
};

// T(x) = V(canonical word of x) for every element of the ball.
template <typename Scalar>
OperatorFamily<Scalar> evaluate_on_ball(const Representation<Scalar>& rep,
                                        const Ball& ball) {
  OperatorFamily<Scalar> fam;
  fam.dim = rep.dim();
  fam.ops.reserve(ball.size());
  fam.ops.push_back(sparse_identity<Scalar>(static_cast<Eigen::Index>(rep.dim())));
  for (element_id x = 1; x < ball.size(); ++x) {
    const auto& w = ball.word(x);
    auto prefix = *ball.find(word_type(w.begin(), w.end() - 1));
    SparseMatrix<Scalar> op = fam.ops[prefix] * rep.matrix(w.back());
    detail::drop_zeros(op);
    fam.ops.push_back(std::move(op));
  }
  return fam;
}

// Left regular representation truncated to a ball: lambda(s) sends the
// basis vector of q to that of s*q when |s| + |q| <= radius, and to 0
// otherwise.
template <typename Scalar = Rational>
struct TruncatedRegularRep {
  Representation<Scalar> rep;
  OperatorFamily<Scalar> family;
};

template <typename Scalar = Rational>
TruncatedRegularRep<Scalar> build_regular_rep(const Ball& ball) {
  if (ball.is_restriction()) {
    throw ValidationError("the regular representation needs a full ball");
  }
  const auto& pres = ball.presentation();
  auto n = static_cast<Eigen::Index>(ball.size());
  std::vector<letter_type> gens;
  std::vector<SparseMatrix<Scalar>> mats;
  for (auto s : ball.generators()) {
    std::vector<Eigen::Triplet<Scalar>> entries;
    auto g = ball.generator(s);
    if (g) {
      for (element_id q = 0; q < ball.size(); ++q) {
        if (auto sq = ball.product(*g, q)) {
          entries.emplace_back(*sq, q, Scalar(1));
        }
      }
    }
    SparseMatrix<Scalar> m(n, n);
    m.setFromTriplets(entries.begin(), entries.end());
    gens.push_back(s);
    mats.push_back(std::move(m));
  }
  TruncatedRegularRep<Scalar> out{Representation<Scalar>(pres, gens, std::move(mats)),
                                  {}};
  out.family = evaluate_on_ball(out.rep, ball);
  std::vector<std::size_t> lengths(ball.size());
  for (element_id q = 0; q < ball.size(); ++q) {
    lengths[q] = ball.length(q);
  }
  out.family.basis_length = std::move(lengths);
  out.family.window_radius = ball.radius();

  // lambda(s)^T lambda(s) projects onto {q : |s q| <= L} and
  // lambda(s) lambda(s)^T projects onto sP within the ball.
  for (auto s : ball.generators()) {
    auto g = ball.generator(s);
    if (!g) {
      continue;
    }
    const auto& m = out.rep.matrix(s);
    SparseMatrix<Scalar> mt = m.transpose();
    SparseMatrix<Scalar> source = mt * m;
    SparseMatrix<Scalar> range = m * mt;
    std::vector<Eigen::Triplet<Scalar>> src, rng;
    for (element_id q = 0; q < ball.size(); ++q) {
      if (ball.length(q) + 1 <= ball.radius()) {
        src.emplace_back(q, q, Scalar(1));
      }
      if (ball.quotient(*g, q)) {
        rng.emplace_back(q, q, Scalar(1));
      }
    }
    SparseMatrix<Scalar> want_src(n, n), want_rng(n, n);
    want_src.setFromTriplets(src.begin(), src.end());
    want_rng.setFromTriplets(rng.begin(), rng.end());
    if (!detail::sparse_equal(source, want_src) || !detail::sparse_equal(range, want_rng)) {
      throw HypothesisError("truncated regular representation of " +
                  pres.alphabet().name(s) +
                  " is not a partial isometry with the expected projections "
                  "(is the monoid left-cancellative?)");
    }
  }
  return out;
}

namespace detail {

template <typename Scalar>
class ProjectionCache {
 public:
  explicit ProjectionCache(const OperatorFamily<Scalar>& fam)
      : fam_(fam), cache_(fam.ops.size()) {}

  const SparseMatrix<Scalar>& operator()(element_id x) {
    auto& slot = cache_.at(x);
    if (!slot) {
      SparseMatrix<Scalar> p = fam_[x] * SparseMatrix<Scalar>(fam_[x].transpose());
      drop_zeros(p);
      slot = std::move(p);
    }
    return *slot;
  }

 private:
  const OperatorFamily<Scalar>& fam_;
  std::vector<std::optional<SparseMatrix<Scalar>>> cache_;
};

inline std::string entry_note(const Ball& ball, const std::optional<std::vector<std::size_t>>& by_element,
                              std::pair<Eigen::Index, Eigen::Index> entry) {
  if (by_element) {
    const auto& a = ball.presentation().alphabet();
    return "matrices differ at entry (" +
           a.format(ball.word(static_cast<element_id>(entry.first))) + ", " +
           a.format(ball.word(static_cast<element_id>(entry.second))) + ")";
  }
  return "matrices differ at entry (" + std::to_string(entry.first) + ", " +
         std::to_string(entry.second) + ")";
}

inline Verdict unresolved_verdict(const Ball& ball, std::size_t count,
                                  const std::string& first) {
  return Verdict::inconclusive(ball.radius(), std::to_string(count) +
                                                  " pair(s) with unresolved lcm, first (" +
                                                  first + ")");
}

}  // namespace detail

// Nica covariance: T(x)T(x)^T T(y)T(y)^T = T(r)T(r)^T when r = lcm(x, y),
// and 0 when x and y have no common multiple. Checked on every column.
template <typename Scalar>
Verdict check_covariance(const OperatorFamily<Scalar>& fam, const Ball& ball,
                         std::span<const element_pair> pairs) {
  const auto& alpha = ball.presentation().alphabet();
  detail::ProjectionCache<Scalar> proj(fam);
  auto verdict = Verdict::holds(ball.radius());
  std::size_t unresolved = 0;
  std::string first;
  auto n = static_cast<Eigen::Index>(fam.dim);
  for (auto [x, y] : pairs) {
    auto result = lcm(ball, x, y);
    SparseMatrix<Scalar> rhs(n, n);
    if (const auto* l = std::get_if<Lcm>(&result)) {
      rhs = proj(l->r);
    } else if (!std::holds_alternative<ProvenEmpty>(result)) {
      if (unresolved++ == 0) {
        first = alpha.format(ball.word(x)) + ", " + alpha.format(ball.word(y));
      }
      continue;
    }
    SparseMatrix<Scalar> lhs = proj(x) * proj(y);
    detail::drop_zeros(lhs);
    auto diff = detail::first_difference(lhs, rhs, [](Eigen::Index) { return true; });
    if (diff) {
      return Verdict::fails(ball.radius(),
                            Witness{"nica-covariance",
                                    {{"x", ball.word(x)}, {"y", ball.word(y)}},
                                    detail::entry_note(ball, fam.basis_length, *diff)});
    }
  }
  if (unresolved > 0) {
    verdict.absorb(detail::unresolved_verdict(ball, unresolved, first));
  }
  return verdict;
}

// T(x)^T T(y) = T(z1) T(z2)^T where lcm(x, y) = x z1 = y z2, and 0 when x
// and y have no common multiple. Restricted to safe columns.
template <typename Scalar>
Verdict check_wick(const OperatorFamily<Scalar>& fam, const Ball& ball,
                   std::span<const element_pair> pairs) {
  const auto& alpha = ball.presentation().alphabet();
  auto verdict = Verdict::holds(ball.radius());
  std::size_t unresolved = 0;
  std::string first;
  auto n = static_cast<Eigen::Index>(fam.dim);
  for (auto [x, y] : pairs) {
    auto result = lcm(ball, x, y);
    SparseMatrix<Scalar> rhs(n, n);
    std::size_t depth = std::max(ball.length(x), ball.length(y));
    if (const auto* l = std::get_if<Lcm>(&result)) {
      auto z1 = *ball.quotient(x, l->r);
      auto z2 = *ball.quotient(y, l->r);
      rhs = fam[z1] * SparseMatrix<Scalar>(fam[z2].transpose());
      detail::drop_zeros(rhs);
      depth = std::max({depth, ball.length(z1), ball.length(z2)});
    } else if (!std::holds_alternative<ProvenEmpty>(result)) {
      if (unresolved++ == 0) {
        first = alpha.format(ball.word(x)) + ", " + alpha.format(ball.word(y));
      }
      continue;
    }
    SparseMatrix<Scalar> lhs = SparseMatrix<Scalar>(fam[x].transpose()) * fam[y];
    detail::drop_zeros(lhs);
    auto diff = detail::first_difference(
        lhs, rhs, [&](Eigen::Index col) { return fam.safe_column(col, depth); });
    if (diff) {
      return Verdict::fails(ball.radius(),
                            Witness{"wick-ordering",
                                    {{"x", ball.word(x)}, {"y", ball.word(y)}},
                                    detail::entry_note(ball, fam.basis_length, *diff)});
    }
  }
  if (unresolved > 0) {
    verdict.absorb(detail::unresolved_verdict(ball, unresolved, first));
  }
  return verdict;
}

// All ordered pairs of the ball whose lcm is resolved (Lcm or
// ProvenEmpty).
std::vector<element_pair> resolved_pairs(const Ball& ball);

// Compression to the diagonal: keeps A(i, i), zeroes everything else.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> diagonal_expectation(
    const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) {
    throw ValidationError("diagonal expectation needs a square matrix");
  }
  DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Zero(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    out(i, i) = a(i, i);
  }
  return out;
}

template <typename Scalar>
SparseMatrix<Scalar> diagonal_expectation(const SparseMatrix<Scalar>& a) {
  if (a.rows() != a.cols()) {
    throw ValidationError("diagonal expectation needs a square matrix");
  }
  std::vector<Eigen::Triplet<Scalar>> diag;
  for (Eigen::Index k = 0; k < a.outerSize(); ++k) {
    for (typename SparseMatrix<Scalar>::InnerIterator it(a, k); it; ++it) {
      if (it.row() == it.col() && it.value() != Scalar(0)) {
        diag.emplace_back(it.row(), it.col(), it.value());
      }
    }
  }
  SparseMatrix<Scalar> out(a.rows(), a.cols());
  out.setFromTriplets(diag.begin(), diag.end());
  return out;
}

// Exact positive semidefiniteness of a symmetric matrix by symmetric
// elimination, pivoting on the largest remaining diagonal entry. Throws
// ValidationError if the input is not symmetric.
template <typename Derived>
bool psd(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  if (input.rows() != input.cols()) {
    throw ValidationError("psd needs a square matrix");
  }
  DenseMatrix<Scalar> a = input;
  const Eigen::Index n = a.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (a(i, j) != a(j, i)) {
        throw ValidationError("psd needs a symmetric matrix");
      }
    }
  }
  std::vector<Eigen::Index> live(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    live[static_cast<std::size_t>(i)] = i;
  }
  const Scalar zero(0);
  while (!live.empty()) {
    auto pivot_at = live.begin();
    for (auto it = live.begin(); it != live.end(); ++it) {
      if (a(*it, *it) < zero) {
        return false;
      }
      if (a(*it, *it) > a(*pivot_at, *pivot_at)) {
        pivot_at = it;
      }
    }
    const Eigen::Index p = *pivot_at;
    if (a(p, p) == zero) {
      // Every remaining diagonal entry is zero; a PSD matrix then has no
      // nonzero entry left at all.
      for (auto i : live) {
        for (auto j : live) {
          if (a(i, j) != zero) {
            return false;
          }
        }
      }
      return true;
    }
    live.erase(pivot_at);
    std::vector<Eigen::Index> touched;
    for (auto i : live) {
      if (a(i, p) != zero) {
        touched.push_back(i);
      }
    }
    const Scalar pivot = a(p, p);
    for (auto i : touched) {
      const Scalar factor = a(i, p) / pivot;
      for (auto j : touched) {
        a(i, j) -= factor * a(p, j);
      }
    }
  }
  return true;
}

// Contractivity: I - T(s)^T T(s) is PSD for every generator s of the ball.
template <typename Scalar>
bool contractive(const OperatorFamily<Scalar>& fam, const Ball& ball) {
  auto id = sparse_identity<Scalar>(static_cast<Eigen::Index>(fam.dim));
  for (auto s : ball.generators()) {
    auto g = ball.generator(s);
    if (!g) {
      continue;
    }
    SparseMatrix<Scalar> defect = id - SparseMatrix<Scalar>(fam[*g].transpose()) * fam[*g];
    if (!psd(DenseMatrix<Scalar>(defect))) {
      return false;
    }
  }
  return true;
}

// Z(F) = sum over subsets U of F of (-1)^|U| T(s_U) T(s_U)^T, where s_U is
// the least common multiple of U (the identity for the empty set) and
// terms with no common multiple vanish. Throws HypothesisError if the
// family is not contractive on generators and InconclusiveError if some
// lcm is unresolved in the ball.
template <typename Scalar>
DenseMatrix<Scalar> z_functional(const OperatorFamily<Scalar>& fam, const Ball& ball,
                                 std::span<const element_id> elements) {
  if (elements.size() > 20) {
    throw ResourceError("Z(F) with more than 20 elements is not supported");
  }
  if (!contractive(fam, ball)) {
    throw HypothesisError("Z(F) needs a contractive representation");
  }
  const auto& alpha = ball.presentation().alphabet();
  auto n = static_cast<Eigen::Index>(fam.dim);
  DenseMatrix<Scalar> z = DenseMatrix<Scalar>::Identity(n, n);
  std::vector<element_id> subset;
  for (std::size_t mask = 1; mask < (std::size_t{1} << elements.size()); ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (mask & (std::size_t{1} << i)) {
        subset.push_back(elements[i]);
      }
    }
    auto result = lcm_set(ball, subset);
    if (std::holds_alternative<ProvenEmpty>(result)) {
      continue;
    }
    const auto* l = std::get_if<Lcm>(&result);
    if (l == nullptr) {
      std::string names;
      for (auto x : subset) {
        names += (names.empty() ? "" : ", ") + alpha.format(ball.word(x));
      }
      throw InconclusiveError("lcm of {" + names + "} is " +
                              std::string(kind_name(result)) + " at radius " +
                              std::to_string(ball.radius()));
    }
    SparseMatrix<Scalar> term = fam[l->r] * SparseMatrix<Scalar>(fam[l->r].transpose());
    const bool odd = subset.size() % 2 == 1;
    for (Eigen::Index k = 0; k < term.outerSize(); ++k) {
      for (typename SparseMatrix<Scalar>::InnerIterator it(term, k); it; ++it) {
        if (odd) {
          z(it.row(), it.col()) -= it.value();
        } else {
          z(it.row(), it.col()) += it.value();
        }
      }
    }
  }
  return z;
}

// T(p) = V(p) on members of the submonoid and 0 elsewhere, for a
// representation V assigning matrices to the generators of the inclusion.
// Requires check_closed_under_factorization to Hold; verifies that T is
// well defined and multiplicative on every product inside the ball.
template <typename Scalar>
OperatorFamily<Scalar> extend_by_zero(const ParabolicInclusion& inc,
                                      const Representation<Scalar>& v) {
  auto closed = check_closed_under_factorization(inc);
  if (!closed.is_holds()) {
    throw HypothesisError("extension by zero needs an inclusion closed under "
                          "factorization; the check returned " +
                          std::string(to_string(closed.status())));
  }
  for (auto s : inc.subset()) {
    if (!v.assigns(s)) {
      throw ValidationError("representation has no matrix for generator " +
                            v.presentation().alphabet().name(s));
    }
  }
  const auto& ball = inc.ambient();
  const auto& alpha = ball.presentation().alphabet();
  const auto& subset = inc.subset();
  auto n = static_cast<Eigen::Index>(v.dim());
  OperatorFamily<Scalar> fam;
  fam.dim = v.dim();
  fam.ops.reserve(ball.size());
  for (element_id p = 0; p < ball.size(); ++p) {
    if (!inc.member(p)) {
      fam.ops.emplace_back(n, n);
      continue;
    }
    std::optional<SparseMatrix<Scalar>> value;
    for (const auto& w : ball.class_words(p)) {
      bool inside = std::all_of(w.begin(), w.end(), [&](letter_type s) {
        return std::binary_search(subset.begin(), subset.end(), s);
      });
      if (!inside) {
        continue;
      }
      auto m = v.evaluate(w);
      if (!value) {
        value = std::move(m);
      } else if (!detail::sparse_equal(*value, m)) {
        throw ValidationError("representation is not well defined on " +
                              alpha.format(ball.word(p)) + ": words " +
                              alpha.format(ball.word(p)) + " and " +
                              alpha.format(w) + " give different matrices");
      }
    }
    fam.ops.push_back(std::move(*value));
  }
  for (element_id p = 0; p < ball.size(); ++p) {
    for (element_id q = 0; q < ball.size(); ++q) {
      auto pq = ball.product(p, q);
      if (!pq) {
        continue;
      }
      SparseMatrix<Scalar> prod = fam.ops[p] * fam.ops[q];
      if (!detail::sparse_equal(prod, fam.ops[*pq])) {
        throw HypothesisError("extension by zero is not multiplicative at (" +
                              alpha.format(ball.word(p)) + ", " +
                              alpha.format(ball.word(q)) + ")");
      }
    }
  }
  return fam;
}

}  // namespace rlcm

#endif  // RLCM_REPLAB_HPP_
