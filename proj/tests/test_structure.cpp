#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "pnlab/catalog.hpp"
#include "pnlab/errors.hpp"
#include "pnlab/properties.hpp"
#include "pnlab/section.hpp"
#include "pnlab/subgroup.hpp"

using namespace pnlab;

namespace {
  // |H| from the element-set oracle
  int oracle_log(Subgroup const& h) {
    auto const& g = h.group();
    return oracle::log_size(g, oracle::closure(g, h.generators()));
  }

  Elem x_pow(Group const& g, std::int64_t k) { return g.power(g.generator(0), k); }
}  // namespace

TEST_SUITE("structure") {
  TEST_CASE("subgroup closure in F2") {
    Group g(catalog::f2());
    CHECK(subgroup_closure(g, {}).log_order() == 0);
    CHECK(subgroup_closure(g, {x_pow(g, 3)}).log_order() == 2);
    CHECK(subgroup_closure(g, {g.generator(0), g.generator(1)}).log_order() == 4);
    auto h = subgroup_closure(g, {x_pow(g, 3), g.generator(1)});
    CHECK(h.log_order() == oracle_log(h));
  }

  TEST_CASE("canonical form: membership matches the element oracle") {
    Group           g(catalog::sec4_ex1(3, 3));
    std::mt19937_64 rng(11);
    for (int t = 0; t < 10; ++t) {
      auto h   = subgroup_closure(g, {random_element(g, rng), random_element(g, rng)});
      auto set = oracle::closure(g, h.generators());
      CHECK(h.log_order() == oracle::log_size(g, set));
      for (int s = 0; s < 30; ++s) {
        auto x = random_element(g, rng);
        CHECK(h.contains(x) == (set.count(x) == 1));
      }
      auto const& piv = h.pivots();
      CHECK(std::is_sorted(piv.begin(), piv.end()));
      CHECK(std::adjacent_find(piv.begin(), piv.end()) == piv.end());
    }
  }

  TEST_CASE("normal closure and commutator subgroups") {
    Group f2(catalog::f2());
    auto  x9 = normal_closure(f2, {x_pow(f2, 9)});
    CHECK(x9.log_order() == 1);
    CHECK(normal_closure(f2, {f2.identity()}).is_trivial());
    Group m(catalog::m27());
    CHECK(normal_closure(m, {m.power(m.generator(0), 3)}).log_order() == 1);

    auto w = whole_group(f2);
    auto d = commutator_subgroup(w, w);
    CHECK(d == x9);
    CHECK(commutator_subgroup(w, center(f2)).is_trivial());
    Group ab(catalog::abelian(3, {2, 1}));
    CHECK(commutator_subgroup(whole_group(ab), whole_group(ab)).is_trivial());
  }

  TEST_CASE("commutator subgroup matches the element oracle on the corpus") {
    for (auto const& e : corpus(4, false)) {
      Group g(e.presentation);
      auto  w = whole_group(g);
      auto  a = oracle::all(g);
      CHECK(commutator_subgroup(w, w).log_order()
            == oracle::log_size(g, oracle::commutators(g, a, a)));
      CHECK(power_subgroup(w, 1).log_order() == oracle::log_size(g, oracle::powers(g, a, 1)));
    }
  }

  TEST_CASE("power subgroups") {
    Group f2(catalog::f2());
    auto  w = whole_group(f2);
    CHECK(power_subgroup(w, 1).log_order() == 2);
    CHECK(power_subgroup(w, 1).contains(x_pow(f2, 3)));
    CHECK(power_subgroup(w, 3).is_trivial());
    Group el(catalog::abelian(3, {1, 1, 1}));
    CHECK(power_subgroup(whole_group(el), 1).is_trivial());
    // fast path and exhaustive tier agree on powerfully embedded subgroups
    Group g(catalog::sec4_ex1(3, 3));
    auto  gw = whole_group(g);
    CHECK(generator_power_subgroup(gw, 1) == exhaustive_power_subgroup(gw, 1));
    // a subgroup that is not powerfully embedded still gets its true H^p
    Group m(catalog::m27());
    auto  h = subgroup_closure(m, {m.generator(1), m.power(m.generator(0), 3)});
    auto  hp = power_subgroup(h, 1);
    CHECK(hp.log_order()
          == oracle::log_size(m, oracle::powers(m, oracle::closure(m, h.generators()), 1)));
  }

  TEST_CASE("center against brute force") {
    Group f2(catalog::f2());
    auto  z = center(f2);
    CHECK(z.log_order() == 2);
    CHECK(z.contains(x_pow(f2, 3)));
    CHECK(z.log_order() == oracle::log_size(f2, oracle::center(f2)));
    Group m(catalog::m27());
    CHECK(center(m).log_order() == 1);
    CHECK(center(m).contains(m.power(m.generator(0), 3)));
    Group ab(catalog::abelian(5, {2, 1}));
    CHECK(center(ab).log_order() == 3);
    for (auto const& e : corpus(5, false)) {
      Group g(e.presentation);
      CHECK(center(g).log_order() == oracle::log_size(g, oracle::center(g)));
    }
  }

  TEST_CASE("center of the 5^16 example is computed without enumeration") {
    Group g(catalog::sec4_ex2());
    auto  z = center(g);
    for (auto const& y : z.generators()) {
      for (std::size_t i = 0; i < g.num_generators(); ++i) {
        CHECK(g.commutator(y, g.generator(i)) == g.identity());
      }
    }
    CHECK(z.log_order() >= 1);
  }

  TEST_CASE("quotients") {
    Group f2(catalog::f2());
    Quotient q(normal_closure(f2, {x_pow(f2, 9)}));
    auto const& qp = q.group().presentation();
    CHECK(q.group().log_order() == 3);
    CHECK(qp.is_abelian());
    auto orders = qp.orders();
    std::sort(orders.rbegin(), orders.rend());
    CHECK(orders == std::vector<int>{2, 1});

    Quotient all(whole_group(f2));
    CHECK(all.group().is_trivial());
    Quotient none(trivial_subgroup(f2));
    CHECK(none.group().log_order() == 4);

    // projection is a homomorphism
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
      auto a = random_element(f2, rng), b = random_element(f2, rng);
      CHECK(q.project(f2.multiply(a, b)) == q.group().multiply(q.project(a), q.project(b)));
    }
    auto h = subgroup_closure(f2, {x_pow(f2, 3)});
    CHECK(q.preimage(q.project(h)) == join(h, q.kernel()));
  }

  TEST_CASE("quotient order identity over the corpus") {
    for (auto const& e : corpus(5, false)) {
      Group g(e.presentation);
      for (auto const& n : {center(g), group_power(g, 1), frattini(whole_group(g))}) {
        Quotient q(n);
        CHECK(q.group().log_order() + n.log_order() == g.log_order());
        CHECK(check_consistency(q.group().presentation()).consistent);
      }
    }
  }

  TEST_CASE("quotient requires a normal subgroup") {
    Group m(catalog::m27());
    auto  h = subgroup_closure(m, {m.generator(1)});
    CHECK_FALSE(h.is_normal());
    CHECK_THROWS_AS(Quotient{h}, DomainError);
  }

  TEST_CASE("layer bases and adapted bases") {
    Group      f2(catalog::f2());
    auto       w = whole_group(f2);
    LayerBasis top(w, frattini(w));
    CHECK(top.dim() == 2);
    auto ab = adapted_basis(trivial_subgroup(f2));
    CHECK(ab.gens.size() == 2);
    int total = 0;
    for (std::size_t i = 0; i < ab.gens.size(); ++i) {
      CHECK(f2.element_order_log(ab.gens[i]) == ab.order_log[i]);
      total += ab.order_log[i];
    }
    CHECK(total == 4);
    auto filt = power_filtration(trivial_subgroup(f2));
    CHECK(filt.front().log_order() == 4);
    CHECK(filt.back().is_trivial());
    CHECK(filt.size() == 4);
  }
}
