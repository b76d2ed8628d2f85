#include <doctest.h>

#include "pnlab/catalog.hpp"
#include "pnlab/properties.hpp"

using namespace pnlab;

namespace {
  void no_violations(PropertyReport const& r) {
    for (auto const& v : r.violations) {
      FAIL_CHECK(v);
    }
    CHECK(r.checks > 0);
  }
}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("corpus composition") {
    auto c = corpus(4, false);
    CHECK_FALSE(c.empty());
    for (auto const& e : c) {
      CHECK(e.presentation.prime() == 3);
      CHECK(e.presentation.log_order_bound() <= 4);
    }
    auto all = corpus(4, true);
    int  twos = 0;
    for (auto const& e : all) {
      twos += e.presentation.prime() == 2;
    }
    CHECK(twos >= 3);
  }

  TEST_CASE("property suite on the corpus up to 3^5") {
    PropertyReport total;
    for (auto const& e : corpus(5, false)) {
      total.merge(check_properties(Group(e.presentation)));
    }
    no_violations(total);
  }

  TEST_CASE("property suite on the fixtures") {
    for (auto const& [name, pres] : catalog::fixtures()) {
      INFO(name);
      no_violations(check_properties(Group(pres)));
    }
  }

  TEST_CASE("engine checks") {
    for (auto const& e : corpus(4, false)) {
      no_violations(check_engine(Group(e.presentation), 200));
    }
  }

  TEST_CASE("report bookkeeping") {
    PropertyReport a;
    a.expect(true, "x");
    a.expect(false, "y");
    PropertyReport b;
    b.expect(false, "z");
    a.merge(b);
    CHECK(a.checks == 3);
    CHECK(a.violations == std::vector<std::string>{"y", "z"});
  }
}
