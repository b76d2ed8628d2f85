#include "pnlab/group.hpp"

#include <sstream>

#include "pnlab/errors.hpp"

namespace pnlab {

  namespace {
    std::string gen_name(std::size_t i) {
      return "a" + std::to_string(i + 1);
    }
    std::string ref_name(Collector const& c, std::size_t u) {
      auto g = c.refined()[u];
      return "a" + std::to_string(g.gen + 1) + "^(p^" + std::to_string(g.depth) + ")";
    }
  }  // namespace

  ConsistencyReport check_consistency(Collector const& c) {
    ConsistencyReport rep;
    rep.log_order = static_cast<int>(c.length());
    auto const& pres = c.presentation();
    auto const  r    = pres.rank();
    auto const  p    = c.prime();

    if (!c.converged() || !c.structure_ok()) {
      rep.failure = c.table_note();
      return rep;
    }
    auto fail = [&](std::string s) {
      rep.failure = std::move(s);
      return rep;
    };
    auto g = [&](std::size_t i) { return c.generator(i); };

    // overlaps on the presentation generators
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          auto left  = c.multiply(g(k), c.multiply(g(j), g(i)));
          auto right = c.multiply(c.multiply(g(k), g(j)), g(i));
          if (left != right) {
            return fail("overlap " + gen_name(k) + " " + gen_name(j) + " " + gen_name(i));
          }
        }
      }
    }
    for (std::size_t j = 0; j < r; ++j) {
      auto qj = pres.generator_order(j);
      for (std::size_t i = 0; i < j; ++i) {
        auto qi = pres.generator_order(i);
        auto l1 = c.multiply(c.power(g(j), qj), g(i));
        auto r1 = c.multiply(c.power(g(j), qj - 1), c.multiply(g(j), g(i)));
        if (l1 != r1) {
          return fail("overlap " + gen_name(j) + "^" + std::to_string(qj) + " " + gen_name(i));
        }
        auto l2 = c.multiply(g(j), c.power(g(i), qi));
        auto r2 = c.multiply(c.multiply(g(j), g(i)), c.power(g(i), qi - 1));
        if (l2 != r2) {
          return fail("overlap " + gen_name(j) + " " + gen_name(i) + "^" + std::to_string(qi));
        }
      }
      auto l3 = c.multiply(g(j), c.power(g(j), qj));
      auto r3 = c.multiply(c.power(g(j), qj), g(j));
      if (l3 != r3) {
        return fail("overlap " + gen_name(j) + " " + gen_name(j) + "^" + std::to_string(qj));
      }
    }

    // the refined polycyclic presentation must itself be consistent
    auto const n = c.length();
    for (std::size_t w = 0; w < n; ++w) {
      auto gw = c.unit(w);
      for (std::size_t v = 0; v < w; ++v) {
        auto gv = c.unit(v);
        for (std::size_t u = 0; u < v; ++u) {
          auto gu = c.unit(u);
          if (c.multiply(c.multiply(gw, gv), gu) != c.multiply(gw, c.multiply(gv, gu))) {
            return fail("refined overlap " + ref_name(c, w) + " " + ref_name(c, v) + " "
                        + ref_name(c, u));
          }
        }
        auto wp = c.power(gw, p - 1);
        if (c.multiply(c.multiply(wp, gw), gv) != c.multiply(wp, c.multiply(gw, gv))) {
          return fail("refined overlap " + ref_name(c, w) + "^p " + ref_name(c, v));
        }
        auto vp = c.power(gv, p - 1);
        if (c.multiply(gw, c.multiply(gv, vp)) != c.multiply(c.multiply(gw, gv), vp)) {
          return fail("refined overlap " + ref_name(c, w) + " " + ref_name(c, v) + "^p");
        }
      }
      auto wp = c.power(gw, p - 1);
      if (c.multiply(gw, c.multiply(wp, gw)) != c.multiply(c.multiply(gw, wp), gw)) {
        return fail("refined overlap " + ref_name(c, w) + " " + ref_name(c, w) + "^p");
      }
    }

    // the refined group satisfies the defining commutator relations
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (c.commutator(g(i), g(j)) != c.relation_value(i, j)) {
          return fail("relation [" + gen_name(i) + "," + gen_name(j) + "] fails");
        }
      }
    }
    rep.consistent = true;
    return rep;
  }

  ConsistencyReport check_consistency(Presentation const& pres) {
    if (!pres.has_powerful_shape()) {
      throw DomainError("consistency checking requires a powerful-shape presentation");
    }
    return check_consistency(Collector(pres));
  }

  Group::Group(Presentation pres) {
    if (!pres.has_powerful_shape()) {
      throw DomainError("presentation does not have powerful shape");
    }
    auto c   = std::make_shared<Collector>(std::move(pres));
    auto rep = check_consistency(*c);
    if (!rep.consistent) {
      throw DomainError("inconsistent presentation: " + rep.failure);
    }
    coll_ = std::move(c);
  }

  int Group::element_order_log(Elem const& x) const {
    int  k = 0;
    Elem y = x;
    while (!is_identity(y)) {
      y = power(y, prime());
      ++k;
    }
    return k;
  }

  ElementNF Group::multiply(ElementNF const& x, ElementNF const& y) const {
    return to_nf(multiply(from_nf(x), from_nf(y)));
  }

  std::vector<Elem> Group::elements(int max_log) const {
    if (log_order() > max_log) {
      throw ScaleLimit("element enumeration limited to p^" + std::to_string(max_log));
    }
    std::vector<Elem> out;
    Elem              e = identity();
    auto const        p = static_cast<std::int32_t>(prime());
    while (true) {
      out.push_back(e);
      std::size_t i = e.size();
      while (i > 0) {
        --i;
        if (++e[i] < p) {
          break;
        }
        e[i] = 0;
        if (i == 0) {
          return out;
        }
      }
      if (e.empty()) {
        return out;
      }
    }
  }

}  // namespace pnlab
