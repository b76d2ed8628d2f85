#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pnlab/analysis.hpp"
#include "pnlab/catalog.hpp"
#include "pnlab/errors.hpp"

using namespace pnlab;

TEST_SUITE("catalog") {
  TEST_CASE("orders of the named families") {
    CHECK(Group(catalog::sec2_ex1(7)).log_order() == 10);
    CHECK(Group(catalog::sec2_ex1(8)).log_order() == 11);
    for (int n = 2; n <= 5; ++n) {
      CHECK(Group(catalog::sec2_ex2(3, n)).log_order() == 2 * n);
    }
    CHECK(Group(catalog::sec4_ex1(3, 2)).log_order() == 4);
    CHECK(Group(catalog::sec4_ex1(3, 3)).log_order() == 7);
    CHECK(Group(catalog::sec4_ex1(3, 4)).log_order() == 11);
    CHECK(Group(catalog::sec4_ex2()).log_order() == 16);
    CHECK(Group(catalog::m27()).log_order() == 3);
    CHECK_THROWS_AS(catalog::sec2_ex1(6), DomainError);
    CHECK_THROWS_AS(catalog::sec4_ex1(2, 2), DomainError);
    CHECK_THROWS_AS(catalog::sec4_ex1(3, 5), DomainError);
  }

  TEST_CASE("all fixtures are consistent") {
    for (auto const& [name, pres] : catalog::fixtures()) {
      INFO(name);
      CHECK(check_consistency(pres).consistent);
    }
    CHECK(catalog::powerful_two_groups().size() >= 3);
  }

  TEST_CASE("semidirect oracle") {
    catalog::OracleModel f(3, 3, 1, 10);
    CHECK(f.twist_ok());
    CHECK(f.size() == 81);
    CHECK(f.associative());
    CHECK(f.multiply({1, 1}, {1, 0}) == std::pair<std::int64_t, std::int64_t>{11, 1});

    catalog::OracleModel bad(3, 3, 1, 4);
    CHECK_FALSE(bad.twist_ok());
    CHECK_FALSE(bad.associative());
    Group f2(catalog::f2());
    CHECK_FALSE(catalog::oracle_cross_check(f2, bad, {{1, 0}, {0, 1}}));
    CHECK(catalog::oracle_cross_check(f2, f, {{1, 0}, {0, 1}}));
    CHECK_FALSE(catalog::oracle_cross_check(f2, f, {{2, 0}, {0, 2}}));

    CHECK_THROWS_AS(catalog::OracleModel(3, 3, 1, 3), DomainError);
    CHECK_THROWS_AS(catalog::OracleModel(3, 6, 3, 10), ScaleLimit);
  }

  TEST_CASE("fixture files match the catalog") {
    std::filesystem::path dir(PNLAB_FIXTURE_DIR);
    for (auto const& [name, pres] : catalog::fixtures()) {
      INFO(name);
      std::ifstream in(dir / name);
      REQUIRE(in);
      std::stringstream ss;
      ss << in.rdbuf();
      CHECK(parse_presentation(ss.str()) == pres);
    }
  }
}
