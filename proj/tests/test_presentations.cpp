#include <algorithm>

#include "doctest.h"
#include "monoids.hpp"
#include "oracles.hpp"
#include "rlcm/ball.hpp"
#include "rlcm/error.hpp"
#include "rlcm/presentation.hpp"

using namespace rlcm;
using testing::inf;

TEST_SUITE("presentations") {
  TEST_CASE("alphabet formats and parses words") {
    Alphabet ab({"a", "b"});
    CHECK(ab.format({}) == "e");
    CHECK(ab.format({0, 1, 0}) == "aba");
    CHECK(ab.parse("aba") == word_type{0, 1, 0});
    CHECK(ab.parse("a.b a") == word_type{0, 1, 0});
    CHECK(ab.parse("e").empty());
    auto std3 = Alphabet::standard(3);
    CHECK(std3.format({0, 2}) == "s1.s3");
    CHECK(std3.parse("s1s3") == word_type{0, 2});
    CHECK(std3.parse(std3.format({2, 1, 0})) == word_type{2, 1, 0});
  }

  TEST_CASE("alphabet parse errors carry the column") {
    Alphabet ab({"a", "b"});
    try {
      ab.parse("abx");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.column() == 3);
      CHECK(e.line() == 0);
    }
    CHECK_THROWS_AS(Alphabet({"a", "a"}), ValidationError);
    CHECK_THROWS_AS(Alphabet({"e"}), ValidationError);
    CHECK_THROWS_AS(Alphabet({""}), ValidationError);
  }

  TEST_CASE("parse_list reports columns within the whole list") {
    Alphabet ab({"a", "b"});
    auto list = ab.parse_list("a,ab,b");
    REQUIRE(list.size() == 3);
    CHECK(list[1] == word_type{0, 1});
    try {
      ab.parse_list("a,aq");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.column() == 4);
    }
  }

  TEST_CASE("alternating products") {
    CHECK(alternating_product(0, 1, 3) == word_type{0, 1, 0});
    CHECK(alternating_product(0, 1, 2) == word_type{0, 1});
    CHECK(alternating_product(1, 0, 4) == word_type{1, 0, 1, 0});
    CHECK(alternating_product(0, 1, 0).empty());
  }

  TEST_CASE("artin presentation relations") {
    auto p = artin_presentation(CoxeterMatrix::dihedral(3));
    REQUIRE(p.relations().size() == 1);
    CHECK(p.relations()[0].lhs == word_type{0, 1, 0});
    CHECK(p.relations()[0].rhs == word_type{1, 0, 1});
    auto f = artin_presentation(CoxeterMatrix::dihedral(inf));
    CHECK(f.relations().empty());
    CHECK(f.orthogonal(0, 1));
    CHECK(f.orthogonal(1, 0));
    auto b = artin_presentation(CoxeterMatrix::braid(3));
    CHECK(b.relations().size() == 3);
    CHECK(b.max_relation_length() == 3);
    CHECK(b.coxeter().has_value());
  }

  TEST_CASE("free presentation") {
    auto f = free_presentation(3);
    CHECK(f.relations().empty());
    CHECK(f.label() == "Free(3)");
    CHECK(f.orthogonal_pairs().size() == 3);
  }

  TEST_CASE("validation of relations") {
    Alphabet ab({"a", "b"});
    CHECK_THROWS_AS(HomogeneousPresentation(ab, {{{0}, {0, 1}}}, "x"), ValidationError);
    CHECK_THROWS_AS(HomogeneousPresentation(ab, {{{0, 1}, {0, 1}}}, "x"), ValidationError);
    CHECK_THROWS_AS(HomogeneousPresentation(ab, {{{0, 2}, {1, 0}}}, "x"), ValidationError);
    HomogeneousPresentation p(ab, {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}}, "x");
    CHECK(p.relations().size() == 1);
    CHECK(p.relations()[0].lhs < p.relations()[0].rhs);
  }

  TEST_CASE("saturation of braid words") {
    auto p = testing::i2(3);
    auto cls = saturate(p, {0, 1, 0});
    CHECK(cls == std::vector<word_type>{{0, 1, 0}, {1, 0, 1}});
    CHECK(equal(p, {0, 1, 0, 0}, {1, 0, 1, 0}));
    CHECK(!equal(p, {0, 1}, {1, 0}));
    // abab in I2(3): {abab, aaba, baab}
    CHECK(saturate(p, {0, 1, 0, 1}).size() == 3);
    CHECK_THROWS_AS(saturate(p, {0, 1, 0, 1, 0, 1, 0, 1}, 2), ResourceError);
  }

  TEST_CASE("graph product on a path of copies of N is the right-angled Artin monoid") {
    std::vector<HomogeneousPresentation> factors(3, free_presentation(1));
    auto g = graph_product(SimplicialGraph::path(3), factors);
    auto ra = artin_presentation(testing::ra_path_matrix());
    CHECK(g.relations() == ra.relations());
    CHECK(g.orthogonal_pairs() == ra.orthogonal_pairs());
    REQUIRE(g.coxeter().has_value());
    CHECK(*g.coxeter() == testing::ra_path_matrix());
    // Clashing names s1 are renamed by vertex.
    CHECK(g.alphabet().names() == std::vector<std::string>{"s1_1", "s1_2", "s1_3"});
  }

  TEST_CASE("graph product with a braid factor") {
    std::vector<HomogeneousPresentation> factors{testing::i2(3),
                                                 free_presentation(Alphabet({"c"}))};
    auto g = graph_product(SimplicialGraph::path(2), factors);
    CHECK(g.alphabet().names() == std::vector<std::string>{"a", "b", "c"});
    CHECK(g.relations().size() == 3);
    CHECK(equal(g, g.alphabet().parse("ac"), g.alphabet().parse("ca")));
    auto edgeless = graph_product(SimplicialGraph::edgeless(2), factors);
    CHECK(edgeless.orthogonal(0, 2));
    CHECK(edgeless.orthogonal(1, 2));
    CHECK(!edgeless.orthogonal(0, 1));
  }

  TEST_CASE("ball census against the word-class oracle") {
    for (const auto& [name, pres] : testing::corpus()) {
      CAPTURE(name);
      auto ball = enumerate_ball(pres, 4);
      oracle::WordClasses classes(pres, 4);
      CHECK(ball.sizes_by_length() == classes.census());
      for (element_id x = 0; x < ball.size(); ++x) {
        const auto& cls = classes.classes()[x];
        CHECK(ball.word(x) == classes.canonical(cls));
        CHECK(ball.element(x).class_size == classes.class_size(cls));
      }
    }
  }

  TEST_CASE("ball census examples") {
    CHECK(enumerate_ball(testing::i2(3), 3).sizes_by_length() ==
          std::vector<std::size_t>{1, 2, 4, 7});
    CHECK(enumerate_ball(testing::free2(), 3).sizes_by_length() ==
          std::vector<std::size_t>{1, 2, 4, 8});
    // N^k has C(l + k - 1, k - 1) elements of length l.
    for (std::size_t k = 1; k <= 4; ++k) {
      auto ball = enumerate_ball(artin_presentation(CoxeterMatrix::uniform(k, 2)), 5);
      auto sizes = ball.sizes_by_length();
      for (std::size_t l = 0; l <= 5; ++l) {
        std::size_t binom = 1;
        for (std::size_t i = 1; i < k; ++i) {
          binom = binom * (l + i) / i;
        }
        CHECK(sizes[l] == binom);
      }
    }
  }

  TEST_CASE("ball identity, lookup and tables") {
    auto ball = enumerate_ball(testing::i2(3), 4);
    CHECK(ball.identity() == 0);
    CHECK(ball.word(0).empty());
    auto a = *ball.find({0});
    auto b = *ball.find({1});
    auto aba = *ball.find({1, 0, 1});
    CHECK(ball.word(aba) == word_type{0, 1, 0});
    CHECK(ball.product(a, *ball.find({1, 0})) == aba);
    CHECK(ball.quotient(b, aba) == ball.find({0, 1}));
    CHECK(!ball.quotient(aba, a));
    CHECK(!ball.find({0, 0, 0, 0, 0}));
    CHECK(!ball.product(aba, aba));
  }

  TEST_CASE("divisibility table against the oracle") {
    for (const auto& [name, pres] : testing::corpus()) {
      CAPTURE(name);
      auto ball = enumerate_ball(pres, 4);
      oracle::WordClasses classes(pres, 4);
      const auto& cls = classes.classes();
      for (element_id x = 0; x < ball.size(); ++x) {
        for (element_id y = 0; y < ball.size(); ++y) {
          CHECK(left_divides(ball, x, y).has_value() == classes.divides(cls[x], cls[y]));
        }
      }
    }
  }

  TEST_CASE("ball enumeration is stable under growing the radius") {
    auto small = enumerate_ball(testing::braid4(), 3);
    auto large = enumerate_ball(testing::braid4(), 4);
    for (element_id x = 0; x < small.size(); ++x) {
      CHECK(large.word(x) == small.word(x));
    }
  }

  TEST_CASE("cancellativity") {
    for (const auto& [name, pres] : testing::corpus()) {
      CAPTURE(name);
      CHECK(check_cancellativity(enumerate_ball(pres, 4)).is_holds());
    }
    auto left = testing::synthetic({"a", "b", "c"}, {{"ab", "ac"}});
    auto v = check_cancellativity(enumerate_ball(left, 3));
    REQUIRE(v.is_fails());
    CHECK(v.witness().property == "left-cancellation");
    // Replay: p x = p y with x != y.
    const auto& w = v.witness();
    CHECK(equal(left, concat(w.at("p"), w.at("x")), concat(w.at("p"), w.at("y"))));
    CHECK(!equal(left, w.at("x"), w.at("y")));

    auto right = testing::synthetic({"a", "b", "c"}, {{"ba", "ca"}});
    auto r = check_cancellativity(enumerate_ball(right, 3));
    REQUIRE(r.is_fails());
    CHECK(r.witness().property == "right-cancellation");
    CHECK(check_cancellativity(enumerate_ball(testing::i2(3), 1)).is_inconclusive());
  }

  TEST_CASE("resource cap on ball enumeration") {
    CHECK_THROWS_AS(enumerate_ball(testing::i2(3), 6, 3), ResourceError);
    CHECK_THROWS_AS(enumerate_ball(free_presentation(4), 8), ResourceError);
  }

  TEST_CASE("parabolic restriction") {
    auto ball = enumerate_ball(testing::braid4(), 4);
    std::vector<letter_type> subset{0, 2};
    auto sub = parabolic_restriction(ball, subset);
    // s1 and s3 commute: N^2 census.
    CHECK(sub.sizes_by_length() == std::vector<std::size_t>{1, 2, 3, 4, 5});
    for (element_id x = 0; x < sub.size(); ++x) {
      CHECK(parabolic_member(ball, subset, sub.ambient_id(x)));
      CHECK(ball.word(sub.ambient_id(x)) == sub.word(x));
    }
    CHECK(sub.is_restriction());
  }
}
