#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "pnlab/catalog.hpp"
#include "pnlab/collector.hpp"
#include "pnlab/errors.hpp"
#include "pnlab/fp_linalg.hpp"
#include "pnlab/group.hpp"
#include "pnlab/properties.hpp"

using namespace pnlab;

TEST_SUITE("engine") {
  TEST_CASE("parse: cyclic group without comm lines") {
    auto p = parse_presentation("p 3\nrank 1\norders 2\n");
    CHECK(p.rank() == 1);
    CHECK(p.generator_order(0) == 9);
    CHECK(p.is_abelian());
  }

  TEST_CASE("parse: shape flags") {
    auto f2 = parse_presentation("p 3\nrank 2\norders 3 1\ncomm 2 1 1^9\n");
    CHECK(f2.has_powerful_shape());
    CHECK(f2.has_pn_shape());
    auto m = parse_presentation("p 3\nrank 2\norders 2 1\ncomm 2 1 1^3\n");
    CHECK(m.has_powerful_shape());
    CHECK_FALSE(m.has_pn_shape());
    auto two = parse_presentation("p 2\nrank 2\norders 3 1\ncomm 2 1 1^2\n");
    CHECK_FALSE(two.has_powerful_shape());
  }

  TEST_CASE("parse: comments, sidecar lines and round trip") {
    auto text = std::string("# F2\np 3\nrank 2\norders 3 1\ncomm 2 1 1^9  # [a,x]\nfingerprint (n=4)\n");
    auto p    = parse_presentation(text);
    auto q    = parse_presentation(format_presentation(p));
    CHECK(format_presentation(q) == format_presentation(p));
    CHECK(q.commutator(1, 0) == Exponents{9, 0});
  }

  TEST_CASE("parse: errors carry line numbers") {
    auto throws_at = [](std::string const& text, std::size_t line) {
      try {
        parse_presentation(text);
      } catch (ParseError const& e) {
        return e.line == line;
      }
      return false;
    };
    CHECK(throws_at("p 4\n", 1));
    CHECK(throws_at("p 3\nrank 2\norders 3\n", 3));
    CHECK(throws_at("p 3\nrank 2\norders 3 1\ncomm 1 2 1^9\n", 4));
    CHECK(throws_at("p 3\nrank 2\norders 3 1\ncomm 2 1 3^9\n", 4));
    CHECK(throws_at("p 3\nrank 2\norders 3 1\nfoo\n", 4));
    CHECK(throws_at("p 3\nrank 2\norders 3 1\ncomm 2 1 1^9\ncomm 2 1 1^9\n", 5));
  }

  TEST_CASE("parse: exponents reduce mod the generator order, large text allowed") {
    auto p = parse_presentation("p 3\nrank 2\norders 3 1\ncomm 2 1 1^100000000000000000000009\n");
    // 10^3 = 1 mod 27, so 10^23 = 10^2 = 19
    CHECK(p.commutator(1, 0)[0] == (19 + 9) % 27);
  }

  TEST_CASE("collect: F2 against the semidirect oracle") {
    Group g(catalog::f2());
    // a.x = x^10 a
    auto ax = g.multiply(g.generator(1), g.generator(0));
    CHECK(g.to_nf(ax).exponents == Exponents{10, 1});
    auto x20 = g.power(g.generator(0), 20), x10 = g.power(g.generator(0), 10);
    CHECK(g.to_nf(g.multiply(x20, x10)).exponents == Exponents{3, 0});
    Collector c(catalog::f2());
    CHECK(c.is_identity(c.collect({})));
    CHECK(c.to_nf(c.collect({{1, 1}, {0, 1}})).exponents == Exponents{10, 1});
    catalog::OracleModel m(3, 3, 1, 10);
    CHECK(catalog::oracle_cross_check(g, m, {{1, 0}, {0, 1}}));
  }

  TEST_CASE("collect: sec2 example 2 instances against the oracle") {
    // [b,a] = a^{p^2}: b acts by a -> a^u with u^{-1} = 1 - p^2 mod p^n
    for (int n = 2; n <= 3; ++n) {
      Group        g(catalog::sec2_ex2(3, n));
      std::int64_t q = ipow(3, n);
      std::int64_t w = ((1 - 9) % q + q) % q;
      std::int64_t u = 1;
      while (u * w % q != 1) {
        ++u;
      }
      catalog::OracleModel m(3, n, n, u);
      CHECK(m.twist_ok());
      CHECK(catalog::oracle_cross_check(g, m, {{1, 0}, {0, 1}}));
    }
  }

  TEST_CASE("consistency") {
    CHECK(check_consistency(Presentation(3, {2, 1, 3})).consistent);
    CHECK(check_consistency(catalog::f2()).consistent);
    auto bad = parse_presentation("p 3\nrank 2\norders 3 1\ncomm 2 1 1^3\n");
    auto rep = check_consistency(bad);
    CHECK_FALSE(rep.consistent);
    CHECK_FALSE(rep.failure.empty());
    CHECK_THROWS_AS(Group{bad}, DomainError);
    for (auto const& [name, pres] : catalog::fixtures()) {
      INFO(name);
      CHECK(check_consistency(pres).consistent);
    }
  }

  TEST_CASE("collect is idempotent on normal forms") {
    Group           g(catalog::sec4_ex1(3, 3));
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
      auto x  = random_element(g, rng);
      auto nf = g.to_nf(x);
      CHECK(g.to_nf(g.from_nf(nf)).exponents == nf.exponents);
    }
  }

  TEST_CASE("closure size and associativity on fixtures up to 3^7") {
    for (auto const& [name, pres] : catalog::fixtures()) {
      if (pres.log_order_bound() > 7 || pres.prime() != 3) {
        continue;
      }
      INFO(name);
      Group g(pres);
      CHECK(static_cast<std::int64_t>(oracle::all(g).size()) == ipow(3, pres.log_order_bound()));
    }
    Group g(catalog::sec4_ex2());
    std::mt19937_64 rng(3);
    for (int t = 0; t < 300; ++t) {
      auto x = random_element(g, rng), y = random_element(g, rng), z = random_element(g, rng);
      CHECK(g.multiply(g.multiply(x, y), z) == g.multiply(x, g.multiply(y, z)));
    }
  }

  TEST_CASE("sec4 example 2 has order 5^16 and its relations hold") {
    Group g(catalog::sec4_ex2());
    CHECK(g.log_order() == 16);
    auto x = g.generator(0), c = g.generator(3), d = g.generator(4);
    auto rhs = g.multiply(g.power(c, 25), g.power(d, 375));
    CHECK(g.commutator(c, d) == rhs);
    CHECK(g.element_order_log(x) == 6);
  }

  TEST_CASE("p = 2 powerful groups") {
    for (auto const& [name, pres] : catalog::powerful_two_groups()) {
      INFO(name);
      Group g(pres);
      CHECK(static_cast<std::int64_t>(oracle::all(g).size()) == ipow(2, g.log_order()));
    }
  }

  TEST_CASE("fp linear algebra") {
    fp::Subspace s(3, 5);
    CHECK(s.add({1, 2, 3}));
    CHECK_FALSE(s.add({2, 4, 6}));
    CHECK(s.contains({3, 1, 4}));
    auto t = fp::Subspace::whole(3, 5);
    CHECK(s.intersect(t).dim() == 1);
    fp::Mat a{{1, 2}, {3, 4}};
    auto    ai = fp::inverse(a, 5);
    REQUIRE(ai);
    CHECK(fp::multiply(a, *ai, 5) == fp::identity(2));
    CHECK(fp::left_null_space({{1}, {1}}, 1, 5).size() == 1);
  }
}
