#include "doctest.h"
#include "monoids.hpp"
#include "oracles.hpp"
#include "rlcm/coxeter.hpp"
#include "rlcm/error.hpp"

using namespace rlcm;
using testing::inf;
using testing::matrix;

TEST_SUITE("coxeter") {
  TEST_CASE("matrix validation") {
    CHECK_THROWS_AS(matrix({{1, 3}, {2, 1}}), ValidationError);
    CHECK_THROWS_AS(matrix({{2, 3}, {3, 1}}), ValidationError);
    CHECK_THROWS_AS(matrix({{1, 1}, {1, 1}}), ValidationError);
    CHECK_THROWS_AS(matrix({{1, 3}, {3}}), ValidationError);
    CHECK_NOTHROW(matrix({{1, inf}, {inf, 1}}));
    CHECK(CoxeterMatrix::braid(3) == matrix({{1, 3, 2}, {3, 1, 3}, {2, 3, 1}}));
  }

  TEST_CASE("finite type catalogue") {
    auto type_of = [](const CoxeterMatrix& m) {
      std::vector<letter_type> all(m.rank());
      for (std::size_t i = 0; i < m.rank(); ++i) {
        all[i] = static_cast<letter_type>(i);
      }
      return finite_type(m, all);
    };
    CHECK(type_of(CoxeterMatrix::braid(1)) == "A1");
    CHECK(type_of(CoxeterMatrix::braid(3)) == "A3");
    CHECK(type_of(CoxeterMatrix::braid(7)) == "A7");
    CHECK(type_of(CoxeterMatrix::dihedral(6)) == "I2(6)");
    CHECK(type_of(CoxeterMatrix::dihedral(4)) == "I2(4)");
    CHECK(type_of(CoxeterMatrix::braid(2)) == "I2(3)");
    CHECK(!type_of(CoxeterMatrix::dihedral(inf)));
    CHECK(type_of(matrix({{1, 4, 2}, {4, 1, 3}, {2, 3, 1}})) == "B3");
    CHECK(type_of(matrix({{1, 5, 2}, {5, 1, 3}, {2, 3, 1}})) == "H3");
    CHECK(type_of(matrix({{1, 3, 2, 2}, {3, 1, 4, 2}, {2, 4, 1, 3}, {2, 2, 3, 1}})) == "F4");
    CHECK(!type_of(matrix({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}})));  // affine A2
    CHECK(!type_of(matrix({{1, 4, 2}, {4, 1, 4}, {2, 4, 1}})));  // affine C2
    // D4: centre 1 joined to 0, 2, 3.
    CHECK(type_of(matrix({{1, 3, 2, 2}, {3, 1, 3, 3}, {2, 3, 1, 2}, {2, 3, 2, 1}})) == "D4");
    // E6: branch at the third vertex of a path of five.
    std::vector<std::vector<std::uint32_t>> e6(6, std::vector<std::uint32_t>(6, 2));
    for (std::size_t i = 0; i < 6; ++i) {
      e6[i][i] = 1;
    }
    auto link = [&](std::size_t i, std::size_t j) { e6[i][j] = e6[j][i] = 3; };
    link(0, 1);
    link(1, 2);
    link(2, 3);
    link(3, 4);
    link(2, 5);
    CHECK(type_of(matrix(e6)) == "E6");
  }

  TEST_CASE("components and spherical detection") {
    auto m = matrix({{1, 2, 2}, {2, 1, 2}, {2, 2, 1}});
    CHECK(coxeter_components(m).size() == 3);
    CHECK(is_spherical(m));
    CHECK(is_spherical(CoxeterMatrix::braid(3)));
    CHECK(!is_spherical(testing::ra_path_matrix()));
    CHECK(is_spherical(matrix({{1, 6, 2}, {6, 1, 2}, {2, 2, 1}})));
  }

  TEST_CASE("group order oracle on known groups") {
    CHECK(oracle::coxeter_group_order(CoxeterMatrix::dihedral(3)) == 6u);
    CHECK(oracle::coxeter_group_order(CoxeterMatrix::dihedral(4)) == 8u);
    CHECK(oracle::coxeter_group_order(CoxeterMatrix::dihedral(6)) == 12u);
    CHECK(oracle::coxeter_group_order(CoxeterMatrix::braid(3)) == 24u);
    CHECK(oracle::coxeter_group_order(matrix({{1, 4, 2}, {4, 1, 3}, {2, 3, 1}})) == 48u);
    CHECK(!oracle::coxeter_group_order(CoxeterMatrix::dihedral(inf)));
    CHECK(!oracle::coxeter_group_order(matrix({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}})));
  }

  TEST_CASE("spherical detection is invariant under relabeling") {
    auto m = matrix({{1, 4, 2}, {4, 1, 3}, {2, 3, 1}});
    std::vector<std::size_t> perm{2, 0, 1};
    auto p = m.permuted(perm);
    CHECK(p(0, 1) == m(2, 0));
    CHECK(is_spherical(p) == is_spherical(m));
  }

  TEST_CASE("simplicial graphs") {
    CHECK_THROWS_AS(SimplicialGraph(2, {{0, 0}}), ValidationError);
    CHECK_THROWS_AS(SimplicialGraph(2, {{0, 2}}), ValidationError);
    auto g = SimplicialGraph::path(3);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK(!g.adjacent(0, 2));
    CHECK(SimplicialGraph::complete(4).edges().size() == 6);
  }
}
