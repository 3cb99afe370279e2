// Acceptance suite: one PASS/FAIL line per criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "monoids.hpp"
#include "oracles.hpp"
#include "rlcm/artin.hpp"
#include "rlcm/ball.hpp"
#include "rlcm/inclusions.hpp"
#include "rlcm/lcm.hpp"
#include "rlcm/replab.hpp"

using namespace rlcm;
using testing::inf;

namespace {

using Dense = RationalMatrix;
using Sparse = SparseMatrix<Rational>;

// Collects the first few failure messages of a criterion.
class Failures {
 public:
  void add(const std::string& message) {
    if (count_++ < 5) {
      messages_.push_back(message);
    }
  }
  bool ok() const { return count_ == 0; }
  std::string summary() const {
    std::string out;
    for (const auto& m : messages_) {
      out += "\n    " + m;
    }
    if (count_ > messages_.size()) {
      out += "\n    ... " + std::to_string(count_ - messages_.size()) + " more";
    }
    return out;
  }

 private:
  std::size_t count_ = 0;
  std::vector<std::string> messages_;
};

std::string fmt(const Ball& ball, element_id x) {
  return ball.presentation().alphabet().format(ball.word(x));
}

Sparse adj(const Sparse& m) { return Sparse(m.transpose()); }

element_id at(const Ball& ball, const std::string& w) {
  return *ball.find(ball.presentation().alphabet().parse(w));
}

// 1. LCM oracle suite.
void lcm_oracle_suite(Failures& f, std::string& info) {
  auto start = std::chrono::steady_clock::now();
  std::size_t pairs = 0;
  for (const auto& [name, pres] : testing::corpus()) {
    auto ball = enumerate_ball(pres, 5);
    oracle::WordClasses classes(pres, 5);
    const auto& cls = classes.classes();
    auto n = ball.size();
    if (cls.size() != n) {
      f.add(name + ": ball has " + std::to_string(n) + " elements, oracle " +
            std::to_string(cls.size()));
      continue;
    }
    std::vector<char> div(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      if (ball.word(static_cast<element_id>(a)) != classes.canonical(cls[a])) {
        f.add(name + ": element order differs from the oracle at " + std::to_string(a));
      }
      for (std::size_t b = 0; b < n; ++b) {
        div[a * n + b] = classes.divides(cls[a], cls[b]) ? 1 : 0;
      }
    }
    for (element_id x = 0; x < n; ++x) {
      for (element_id y = 0; y < n; ++y) {
        ++pairs;
        std::vector<element_id> common;
        for (element_id q = 0; q < n; ++q) {
          if (div[x * n + q] && div[y * n + q]) {
            common.push_back(q);
          }
        }
        element_id pair[] = {x, y};
        if (ideal_intersection(ball, pair) != common) {
          f.add(name + ": ideal intersection of (" + fmt(ball, x) + ", " + fmt(ball, y) +
                ") differs from the oracle");
        }
        std::optional<element_id> oracle_lcm;
        for (auto r : common) {
          bool all = std::all_of(common.begin(), common.end(),
                                 [&](element_id q) { return div[r * n + q] != 0; });
          if (all) {
            oracle_lcm = r;
            break;
          }
        }
        auto result = lcm(ball, x, y);
        std::string where = name + ": lcm(" + fmt(ball, x) + ", " + fmt(ball, y) + ") ";
        if (const auto* l = std::get_if<Lcm>(&result)) {
          if (oracle_lcm != l->r) {
            f.add(where + "= " + fmt(ball, l->r) + " disagrees with the oracle");
          }
        } else if (std::holds_alternative<InconclusiveUpTo>(result)) {
          if (oracle_lcm) {
            f.add(where + "is inconclusive but the oracle finds " + fmt(ball, *oracle_lcm));
          }
        } else if (!common.empty()) {
          f.add(where + "reports no common multiple but the oracle finds one");
        }
      }
    }
    // The generator formula: s v t = <st>^m, or no common multiple at all.
    const auto& m = *pres.coxeter();
    for (letter_type s = 0; s < m.rank(); ++s) {
      for (letter_type t = s + 1; t < m.rank(); ++t) {
        auto result = lcm(ball, *ball.generator(s), *ball.generator(t));
        std::string where = name + ": lcm of generators " + std::to_string(s + 1) + ", " +
                            std::to_string(t + 1) + " ";
        if (m(s, t) == CoxeterMatrix::infinity) {
          if (!std::holds_alternative<ProvenEmpty>(result)) {
            f.add(where + "is " + std::string(kind_name(result)) + ", expected ProvenEmpty");
          }
        } else if (const auto* l = std::get_if<Lcm>(&result)) {
          if (!equal(pres, ball.word(l->r), alternating_product(s, t, m(s, t)))) {
            f.add(where + "is " + fmt(ball, l->r) + ", not <st>^m");
          }
        } else {
          f.add(where + "is " + std::string(kind_name(result)) + ", expected Lcm");
        }
      }
    }
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= 60.0) {
    f.add("runtime " + std::to_string(seconds) + " s exceeds 60 s");
  }
  std::ostringstream s;
  s << pairs << " pairs, " << std::fixed << std::setprecision(2) << seconds << " s";
  info = s.str();
}

// 2. Ball-census suite.
void census_suite(Failures& f, std::string& info) {
  auto expect = [&](const std::string& name, const HomogeneousPresentation& p, std::size_t radius,
                    const std::vector<std::size_t>& sizes) {
    auto got = enumerate_ball(p, radius).sizes_by_length();
    auto oracle_sizes = oracle::WordClasses(p, radius).census();
    if (got != sizes || oracle_sizes != sizes) {
      f.add(name + ": census does not match");
    }
  };
  expect("I2(3)", testing::i2(3), 3, {1, 2, 4, 7});
  expect("F2+", testing::free2(), 3, {1, 2, 4, 8});
  std::size_t checked = 2;
  for (std::size_t k = 1; k <= 5; ++k) {
    for (std::size_t radius : {3, 5}) {
      std::vector<std::size_t> sizes;
      for (std::size_t l = 0; l <= radius; ++l) {
        // Multiset coefficient ((k, l)) = C(l + k - 1, l).
        std::size_t c = 1;
        for (std::size_t i = 1; i <= l; ++i) {
          c = c * (k - 1 + i) / i;
        }
        sizes.push_back(c);
      }
      if (enumerate_ball(artin_presentation(CoxeterMatrix::uniform(k, 2)), radius)
              .sizes_by_length() != sizes) {
        f.add("N^" + std::to_string(k) + " at radius " + std::to_string(radius) +
              ": census does not match the multiset coefficients");
      }
      ++checked;
    }
  }
  info = std::to_string(checked) + " censuses";
}

// 3. Covariance suite.
void covariance_suite(Failures& f, std::string& info) {
  std::size_t total = 0;
  for (const auto& [name, pres] : testing::corpus()) {
    auto ball = enumerate_ball(pres, 5);
    auto reg = build_regular_rep<Rational>(ball);
    auto pairs = resolved_pairs(ball);
    total += pairs.size();
    auto cov = check_covariance(reg.family, ball, pairs);
    auto wick = check_wick(reg.family, ball, pairs);
    if (!cov.is_holds()) {
      f.add(name + ": covariance " + std::string(to_string(cov.status())));
    }
    if (!wick.is_holds()) {
      f.add(name + ": Wick ordering " + std::string(to_string(wick.status())));
    }
  }
  auto p = testing::n2();
  Dense v = Dense::Zero(6, 6);
  v.block(2, 0, 4, 4) = Dense::Identity(4, 4);
  Representation<Rational> same(p, {0, 1}, std::vector<Dense>{v, v});
  auto ball = enumerate_ball(p, 5);
  auto fam = evaluate_on_ball(same, ball);
  auto bad = check_covariance(fam, ball, resolved_pairs(ball));
  if (!bad.is_fails()) {
    f.add("S = T on N^2: covariance " + std::string(to_string(bad.status())) +
          ", expected Fails");
  }
  info = std::to_string(total) + " resolved pairs";
}

// 4. Expectation suite.
void expectation_suite(Failures& f, std::string& info) {
  std::size_t checked = 0;
  for (const auto& [name, pres] : testing::corpus()) {
    auto ball = enumerate_ball(pres, 5);
    auto reg = build_regular_rep<Rational>(ball);
    for (element_id p = 0; p < ball.size() && ball.length(p) <= 2; ++p) {
      for (element_id q = 0; q < ball.size() && ball.length(q) <= 2; ++q) {
        Sparse pq = reg.family[p] * adj(reg.family[q]);
        Sparse expected(pq.rows(), pq.cols());
        if (p == q) {
          expected = pq;
        }
        if (Dense(diagonal_expectation(pq)) != Dense(expected)) {
          f.add(name + ": expectation of T(" + fmt(ball, p) + ")T(" + fmt(ball, q) +
                ")^T is wrong");
        }
        ++checked;
      }
    }
    auto canc = check_cancellativity(ball);
    if (!canc.is_holds()) {
      f.add(name + ": cancellativity " + std::string(to_string(canc.status())));
    }
  }
  info = std::to_string(checked) + " pairs";
}

void add_psd_case(std::vector<Dense>& corpus, const Dense& m) {
  if (m.rows() <= 6) {
    corpus.push_back(m);
  }
}

// 5. Z(F) suite.
void zf_suite(Failures& f, std::string& info) {
  {
    auto ball = enumerate_ball(testing::i2(3), 4);
    auto reg = build_regular_rep<Rational>(ball);
    element_id set[] = {at(ball, "a"), at(ball, "b")};
    auto z = z_functional(reg.family, ball, set);
    auto n = static_cast<Eigen::Index>(ball.size());
    Dense id = Dense::Identity(n, n);
    Dense pa(reg.family[set[0]] * adj(reg.family[set[0]]));
    Dense pb(reg.family[set[1]] * adj(reg.family[set[1]]));
    if (!psd(z)) {
      f.add("(a) Z({a, b}) is not PSD");
    }
    if (z != (id - pa) * (id - pb)) {
      f.add("(a) Z({a, b}) differs from (I - P_a)(I - P_b)");
    }
  }
  {
    auto ball = enumerate_ball(testing::i2(3), 5);
    ParabolicInclusion inc(ball, {0});
    Dense c = Dense::Zero(4, 4);
    for (int i = 0; i < 4; ++i) {
      c((i + 1) % 4, i) = 1;
    }
    Representation<Rational> v(testing::i2(3), {0}, std::vector<Dense>{c});
    if (!v.unitary(0)) {
      f.add("(b) the cyclic permutation is not unitary");
    }
    auto fam = extend_by_zero(inc, v);
    element_id both[] = {at(ball, "a"), at(ball, "b")};
    element_id single[] = {at(ball, "a")};
    auto zab = z_functional(fam, ball, both);
    auto za = z_functional(fam, ball, single);
    if (!zab.isZero() || !za.isZero() || zab != za) {
      f.add("(b) Z({a, b}) = Z({a}) = 0 does not hold");
    }
  }
  // (c) psd against the principal-minor oracle.
  std::vector<Dense> corpus;
  Dense flip(2, 2);
  flip << 0, 1, 1, 0;
  add_psd_case(corpus, flip);
  for (std::size_t radius = 1; radius <= 5; ++radius) {
    auto ball = enumerate_ball(free_presentation(1), radius);
    auto reg = build_regular_rep<Rational>(ball);
    Dense s(reg.rep.matrix(0));
    auto n = s.rows();
    add_psd_case(corpus, Dense(Dense::Identity(n, n) - s * s.transpose()));
    add_psd_case(corpus, Dense(Dense::Identity(n, n) - s.transpose() * s));
    add_psd_case(corpus, Dense(s + s.transpose()));
    element_id set[] = {1};
    add_psd_case(corpus, z_functional(reg.family, ball, set));
  }
  for (const auto& [name, pres] : testing::corpus()) {
    for (std::size_t radius = 1; radius <= 2; ++radius) {
      auto ball = enumerate_ball(pres, radius);
      if (ball.size() > 6) {
        continue;
      }
      auto reg = build_regular_rep<Rational>(ball);
      for (auto s : ball.generators()) {
        element_id set[] = {*ball.generator(s)};
        add_psd_case(corpus, z_functional(reg.family, ball, set));
        Dense m(reg.rep.matrix(s));
        add_psd_case(corpus, Dense(m + m.transpose()));
      }
    }
  }
  std::mt19937 rng(1987);
  std::uniform_int_distribution<int> entry(-4, 4);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int trial = 0; trial < 400; ++trial) {
    auto n = dim(rng);
    Dense a(n, n);
    if (trial % 2 == 0) {
      Dense b(n, 1 + trial % 3);
      for (Eigen::Index i = 0; i < b.rows(); ++i) {
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
          b(i, j) = Rational(entry(rng), 1 + std::abs(entry(rng)));
        }
      }
      a = b * b.transpose();
      if (trial % 4 == 0) {
        a(n - 1, n - 1) -= Rational(1, 9);
      }
    } else {
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
          a(i, j) = a(j, i) = Rational(entry(rng), 1 + std::abs(entry(rng)));
        }
      }
    }
    corpus.push_back(a);
  }
  std::size_t positive = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    bool decided = psd(corpus[i]);
    positive += decided ? 1 : 0;
    if (decided != oracle::psd_by_minors(corpus[i])) {
      f.add("(c) psd disagrees with the principal-minor oracle on corpus matrix " +
            std::to_string(i));
    }
  }
  info = std::to_string(corpus.size()) + " matrices, " + std::to_string(positive) + " PSD";
}

CoxeterMatrix random_right_angled(std::mt19937& rng, std::size_t rank) {
  std::bernoulli_distribution coin(0.5);
  std::vector<std::uint32_t> e(rank * rank, 1);
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = i + 1; j < rank; ++j) {
      e[i * rank + j] = e[j * rank + i] = coin(rng) ? 2 : inf;
    }
  }
  return CoxeterMatrix(rank, e);
}

void inclusion_meta(const std::string& name, const ParabolicInclusion& inc, Failures& f,
                    std::size_t& chains) {
  auto closed = check_closed_under_factorization(inc);
  auto orth = check_preserves_orthogonality(inc);
  auto respects = check_respects_lcm(inc);
  if (closed.is_holds()) {
    ++chains;
    if (verify_right_lcm(inc.sub()).is_fails()) {
      f.add(name + ": closed under factorization but the submonoid is not right-LCM");
    }
    if (orth.is_holds() && respects.is_fails()) {
      f.add(name + ": closed and orthogonality-preserving but respects-lcm Fails");
    }
  }
}

// 6. Inclusion suite.
void inclusion_suite(Failures& f, std::string& info) {
  auto braid = enumerate_ball(testing::braid4(), 5);
  ParabolicInclusion dihedral(braid, {0, 1});
  for (const auto& [check, v] :
       {std::pair{"closed-under-factorization", check_closed_under_factorization(dihedral)},
        std::pair{"preserves-orthogonality", check_preserves_orthogonality(dihedral)},
        std::pair{"respects-lcm", check_respects_lcm(dihedral)}}) {
    if (!v.is_holds()) {
      f.add(std::string("{s1, s2} in B4+: ") + check + " " + std::string(to_string(v.status())));
    }
  }
  std::size_t inclusions = 0;
  std::size_t chains = 0;
  for (const auto& [name, pres] : testing::corpus()) {
    auto ball = enumerate_ball(pres, 5);
    auto n = pres.alphabet_size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<letter_type> subset;
      for (letter_type s = 0; s < n; ++s) {
        if (mask & (std::size_t{1} << s)) {
          subset.push_back(s);
        }
      }
      inclusion_meta(name, ParabolicInclusion(ball, subset), f, chains);
      ++inclusions;
    }
  }
  std::mt19937 rng(20020101);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t rank = trial % 2 == 0 ? 3 : 4;
    auto m = random_right_angled(rng, rank);
    std::vector<letter_type> subset;
    while (subset.empty()) {
      for (letter_type s = 0; s < rank; ++s) {
        if (std::bernoulli_distribution(0.5)(rng)) {
          subset.push_back(s);
        }
      }
    }
    auto ball = enumerate_ball(artin_presentation(m), rank == 3 ? 5 : 4);
    inclusion_meta("random right-angled #" + std::to_string(trial), ParabolicInclusion(ball, subset),
                   f, chains);
    ++inclusions;
  }
  info = std::to_string(inclusions) + " inclusions, " + std::to_string(chains) +
         " with closure holding";
}

std::vector<CoxeterMatrix> all_matrices(std::size_t rank) {
  const std::uint32_t values[] = {2, 3, 4, 6, inf};
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = i + 1; j < rank; ++j) {
      cells.emplace_back(i, j);
    }
  }
  std::vector<CoxeterMatrix> out;
  std::size_t combos = 1;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    combos *= 5;
  }
  for (std::size_t code = 0; code < combos; ++code) {
    std::vector<std::uint32_t> e(rank * rank, 1);
    auto rest = code;
    for (auto [i, j] : cells) {
      e[i * rank + j] = e[j * rank + i] = values[rest % 5];
      rest /= 5;
    }
    out.emplace_back(rank, e);
  }
  return out;
}

// 7. Classifier suite.
void classifier_suite(Failures& f, std::string& info) {
  std::size_t count = 0;
  for (std::size_t rank : {2, 3}) {
    for (const auto& m : all_matrices(rank)) {
      ++count;
      auto cls = classify(m);
      auto v = amenability_verdict(m);
      if ((v.kind == AmenabilityVerdict::Kind::NicaAmenable) != cls.right_angled) {
        f.add("dichotomy broken for a rank " + std::to_string(rank) + " matrix");
      }
      if (v.citation.empty()) {
        f.add("verdict without a citation");
      }
      if (cls.spherical != oracle::coxeter_group_order(m).has_value()) {
        f.add("spherical detection disagrees with the group oracle");
      }
    }
  }
  if (oracle::coxeter_group_order(CoxeterMatrix::dihedral(3)) != 6u ||
      oracle::coxeter_group_order(CoxeterMatrix::dihedral(4)) != 8u ||
      oracle::coxeter_group_order(CoxeterMatrix::braid(3)) != 24u) {
    f.add("group orders of I2(3), I2(4), A3 are not 6, 8, 24");
  }
  auto n = free_presentation(1);
  auto amenable = amenability_verdict(CoxeterMatrix::braid(1));
  std::vector<AmenabilityVerdict> with_braid{amenable,
                                             amenability_verdict(CoxeterMatrix::braid(2))};
  std::vector<HomogeneousPresentation> braid_factors{n, artin_presentation(CoxeterMatrix::braid(2))};
  if (propagate_graph_product(SimplicialGraph::path(2), with_braid, braid_factors).kind !=
      AmenabilityVerdict::Kind::NotNicaAmenable) {
    f.add("a braid factor does not make the graph product NotNicaAmenable");
  }
  std::vector<AmenabilityVerdict> naturals(3, amenable);
  std::vector<HomogeneousPresentation> n_factors(3, n);
  if (propagate_graph_product(SimplicialGraph::path(3), naturals, n_factors).kind !=
      AmenabilityVerdict::Kind::NicaAmenable) {
    f.add("a graph product of copies of N is not NicaAmenable");
  }
  auto n2v = amenability_verdict(CoxeterMatrix::dihedral(2));
  std::vector<AmenabilityVerdict> open(3, n2v);
  std::vector<HomogeneousPresentation> n2_factors(3, testing::n2());
  if (propagate_graph_product(SimplicialGraph::complete(3), open, n2_factors).kind !=
      AmenabilityVerdict::Kind::Unknown) {
    f.add("the open case is not reported as Unknown");
  }
  info = std::to_string(count) + " matrices";
}

struct Run {
  int status;
  std::string out;
};

Run run_cli(const std::string& args) {
  std::string cmd = std::string(RLCM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    return {-1, ""};
  }
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = std::fread(buf.data(), 1, buf.size(), pipe)) {
    out.append(buf.data(), n);
  }
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// 8. Determinism.
void determinism_suite(Failures& f, std::string& info) {
  const std::string dir = RLCM_FIXTURE_DIR;
  std::vector<std::string> invocations;
  const char* cancellative[] = {"n2", "free2", "dihedral3", "dihedral4", "braid4",
                                "ra_path", "gp_braid_factor", "gp_naturals", "squares"};
  for (const auto* name : cancellative) {
    for (const auto* check : {"covariance", "wick", "rightlcm", "cancellativity"}) {
      invocations.push_back(dir + "/" + name + ".rlcm --check " + check);
    }
  }
  invocations.push_back(dir + "/left_noncancellative.rlcm --check rightlcm");
  invocations.push_back(dir + "/left_noncancellative.rlcm --check cancellativity");
  invocations.push_back(dir + "/braid4.rlcm --check inclusion --subset s1,s2");
  invocations.push_back(dir + "/squares.rlcm --check inclusion --subset a");
  invocations.push_back(dir + "/dihedral3.rlcm --check zf --set a,b --rep regular --radius 4");
  invocations.push_back(dir + "/dihedral3.rlcm --check zf --set a,b --subset a --rep " + dir +
                        "/cyclic4_a.rep");
  invocations.push_back(dir + "/n2.rlcm --check covariance --rep " + dir + "/n2_equal_shifts.rep");
  for (const auto& args : invocations) {
    auto first = run_cli("check " + args + " --json");
    if (first.status != 0 || first.out.empty()) {
      f.add("check " + args + " exited with " + std::to_string(first.status));
      continue;
    }
    for (int i = 0; i < 2; ++i) {
      auto again = run_cli("check " + args + " --json");
      if (again.out != first.out || again.status != first.status) {
        f.add("check " + args + " is not byte-identical across runs");
        break;
      }
    }
  }
  info = std::to_string(invocations.size()) + " invocations x 3";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Failures&, std::string&)> run;
  };
  const Criterion criteria[] = {
      {"LCM oracle suite", lcm_oracle_suite},
      {"ball-census suite", census_suite},
      {"covariance suite", covariance_suite},
      {"expectation suite", expectation_suite},
      {"Z(F) suite", zf_suite},
      {"inclusion suite", inclusion_suite},
      {"classifier suite", classifier_suite},
      {"determinism", determinism_suite},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Failures f;
    std::string info;
    try {
      c.run(f, info);
    } catch (const std::exception& e) {
      f.add(std::string("exception: ") + e.what());
    }
    std::cout << (f.ok() ? "PASS" : "FAIL") << " criterion " << index << ": " << c.name;
    if (!info.empty()) {
      std::cout << " (" << info << ")";
    }
    if (!f.ok()) {
      std::cout << f.summary();
      ++failed;
    }
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
