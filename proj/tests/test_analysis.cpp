#include <doctest.h>

#include "oracle.hpp"
#include "pnlab/analysis.hpp"
#include "pnlab/catalog.hpp"
#include "pnlab/errors.hpp"
#include "pnlab/properties.hpp"

using namespace pnlab;

TEST_SUITE("analysis") {
  TEST_CASE("powerful predicates") {
    auto f = powerful_predicates(Group(catalog::f2()));
    CHECK(f.powerful);
    CHECK(f.strongly_powerful);
    auto m = powerful_predicates(Group(catalog::m27()));
    CHECK(m.powerful);
    CHECK_FALSE(m.strongly_powerful);
    auto e = powerful_predicates(Group(catalog::abelian(3, {1, 1})));
    CHECK(e.powerful);
    CHECK(e.strongly_powerful);
  }

  TEST_CASE("upper powerfully central series") {
    Group f2(catalog::f2());
    auto  s = upper_powerfully_central_series(f2);
    REQUIRE(s.terms.size() == 3);
    CHECK(s.reaches_group);
    CHECK(s.terms[1].log_order() == 2);
    CHECK(s.terms[1].contains(f2.power(f2.generator(0), 3)));

    Group m(catalog::m27());
    auto  sm = upper_powerfully_central_series(m);
    CHECK_FALSE(sm.reaches_group);
    CHECK(sm.terms.back().log_order() == 1);
    CHECK(sm.terms.back().contains(m.power(m.generator(0), 3)));
    CHECK_FALSE(class_and_coclass(m));

    Group ab(catalog::abelian(3, {2, 1}));
    auto  sa = upper_powerfully_central_series(ab);
    CHECK(sa.terms.size() == 2);
    auto cc = class_and_coclass(ab);
    REQUIRE(cc);
    CHECK(cc->c == 1);
    CHECK(cc->d == 2);
  }

  TEST_CASE("trivial group convention: class 0, coclass 0") {
    Group t(Presentation(3, {}));
    auto  cc = class_and_coclass(t);
    REQUIRE(cc);
    CHECK(cc->c == 0);
    CHECK(cc->d == 0);
  }

  TEST_CASE("F2 report") {
    auto a = analyze(Group(catalog::f2()));
    CHECK(a.n == 4);
    CHECK(a.r == 2);
    CHECK(a.e == 3);
    CHECK(a.pn);
    CHECK(a.c == 2);
    CHECK(a.d == 2);
    CHECK(a.s == 3);
    CHECK(a.t == 2);
    CHECK(a.maximal_tail);
    CHECK(a.counts == std::vector<int>{1, 0, 1});
  }

  TEST_CASE("analysis agrees with the element-set oracle on the corpus") {
    auto entries = corpus(5, false);
    for (auto const& [name, pres] : catalog::fixtures()) {
      if (pres.log_order_bound() <= 6) {
        entries.push_back({name, pres});
      }
    }
    for (auto const& e : entries) {
      INFO(e.name);
      Group g(e.presentation);
      auto  a = analyze(g);
      auto  o = oracle::invariants(g);
      CHECK(a.n == o.n);
      CHECK(a.r == o.r);
      CHECK(a.e == o.e);
      CHECK(a.powerful == o.powerful);
      CHECK(a.pn == o.pn);
      CHECK(a.upper_power_orders == o.upper_power_orders);
      if (a.pn) {
        CHECK(a.c == o.c);
        CHECK(a.t == o.t);
        CHECK(a.maximal_tail == o.maximal_tail);
        CHECK(a.s == a.n - a.r + 1);
      }
    }
  }

  TEST_CASE("p-th power length") {
    CHECK(pth_power_length(Group(catalog::abelian(3, {1, 1, 1}))) == 1);
    CHECK(pth_power_length(Group(catalog::cyclic(3, 3))) == 3);
    CHECK(pth_power_length(Group(catalog::f2())) == 3);
    CHECK_THROWS_AS(pth_power_length(Group(catalog::m27())), DomainError);
  }

  TEST_CASE("adapted generators") {
    Group f2(catalog::f2());
    auto  ag = adapted_generators(f2);
    REQUIRE(ag.gens.size() == 2);
    CHECK(ag.order_log == std::vector<int>{1, 3});
    CHECK(ag.counts == std::vector<int>{1, 0, 1});
    CHECK(check_consistency(ag.presentation).consistent);
    CHECK(ag.presentation.has_pn_shape());

    auto el = adapted_generators(Group(catalog::abelian(3, {1, 1, 1})));
    CHECK(el.counts == std::vector<int>{3});

    auto s2 = adapted_generators(Group(catalog::sec2_ex2(3, 3)));
    CHECK(s2.order_log == std::vector<int>{3, 3});
    CHECK(s2.counts == std::vector<int>{0, 0, 2});

    // the chain H_i = <a_{i+1..r}> G^p is powerfully centralized step by step
    Group g(catalog::sec4_ex1(3, 4));
    auto  a = adapted_generators(g);
    for (std::size_t i = 0; i + 1 < a.chain.size(); ++i) {
      CHECK(powerfully_centralized(a.chain[i], a.chain[i + 1]));
    }
    int n = 0;
    for (auto e : a.order_log) {
      n += e;
    }
    CHECK(n == g.log_order());
    for (std::size_t i = 1; i < a.order_log.size(); ++i) {
      // order-p generators first
      CHECK((a.order_log[i - 1] == 1 || a.order_log[i] != 1));
    }
  }

  TEST_CASE("powerfully central refinement") {
    auto c3 = powerfully_central_refinement(Group(catalog::cyclic(3, 1)));
    CHECK(c3.terms.size() == 2);
    auto c9 = powerfully_central_refinement(Group(catalog::cyclic(3, 2)));
    CHECK(c9.terms.size() == 3);
    Group f2(catalog::f2());
    auto  r = powerfully_central_refinement(f2);
    REQUIRE(r.terms.size() == 5);
    CHECK(is_powerfully_central(r.terms));
    for (std::size_t i = 0; i < r.terms.size(); ++i) {
      CHECK(r.terms[i].log_order() == static_cast<int>(i));
    }
    bool has_gp = false;
    for (auto const& t : r.terms) {
      has_gp = has_gp || t == group_power(f2, 1);
    }
    CHECK(has_gp);
  }

  TEST_CASE("tails") {
    auto el = tail_analysis(Group(catalog::abelian(3, {1, 1})));
    CHECK(el.length == 0);
    CHECK(el.tail.is_trivial());
    CHECK(el.maximal);
    Group f2(catalog::f2());
    auto  t = tail_analysis(f2);
    CHECK(t.length == 2);
    CHECK(t.maximal);
    CHECK(t.tail == group_power(f2, 1));
    for (int r = 2; r <= 4; ++r) {
      Group g(catalog::sec4_ex1(3, r));
      auto  ti = tail_analysis(g);
      CHECK(ti.length == 1 + r * (r - 1) / 2);
      CHECK(ti.length == g.log_order() - r);
      CHECK(ti.maximal);
    }
  }

  TEST_CASE("class bound witness") {
    int  b = 0;
    auto w = class_bound_witness(Group(catalog::f2()), &b);
    CHECK(b == 2);
    std::vector<Subgroup> asc(w.terms.rbegin(), w.terms.rend());
    CHECK(is_powerfully_central(asc));
    class_bound_witness(Group(catalog::abelian(3, {2, 2})), &b);
    CHECK(b == 2);
    class_bound_witness(Group(catalog::sec4_ex1(3, 3)), &b);
    CHECK(b == 4);
    CHECK_THROWS_AS(class_bound_witness(Group(catalog::cyclic(3, 2))), DomainError);
  }

  TEST_CASE("powerfully hypercentral subgroups") {
    Group f2(catalog::f2());
    CHECK(is_powerfully_hypercentral(trivial_subgroup(f2)));
    CHECK(is_powerfully_hypercentral(center(f2)));
    CHECK(is_powerfully_hypercentral(whole_group(f2)));
    Group big(catalog::sec4_ex1(3, 4));
    CHECK_THROWS_AS(is_powerfully_hypercentral(whole_group(big)), ScaleLimit);
  }

  TEST_CASE("M27 is powerful but not powerfully nilpotent") {
    auto a = analyze(Group(catalog::m27()));
    CHECK(a.powerful);
    CHECK_FALSE(a.strongly_powerful);
    CHECK_FALSE(a.pn);
  }

  TEST_CASE("powerful 2-groups are pn with class at most e-1") {
    for (auto const& [name, pres] : catalog::powerful_two_groups()) {
      INFO(name);
      auto a = analyze(Group(pres));
      CHECK(a.powerful);
      CHECK(a.pn);
      CHECK(a.c <= a.e - 1);
    }
  }

  TEST_CASE("sec4 example 2: maximal tail of length 11") {
    Group g(catalog::sec4_ex2());
    auto  a = analyze(g);
    CHECK(a.n == 16);
    CHECK(a.r == 5);
    CHECK(a.e == 6);
    CHECK(a.pn);
    CHECK(a.t == 11);
    CHECK(a.maximal_tail);
    CHECK(a.r == a.n - a.c);
    CHECK(a.e == a.n - a.c + 1);
  }
}
