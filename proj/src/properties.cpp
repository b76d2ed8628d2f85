#include "pnlab/properties.hpp"

#include <algorithm>
#include <set>

#include "pnlab/analysis.hpp"
#include "pnlab/ancestry.hpp"
#include "pnlab/catalog.hpp"
#include "pnlab/enumeration.hpp"
#include "pnlab/errors.hpp"

namespace pnlab {

  void PropertyReport::expect(bool ok, std::string const& what) {
    ++checks;
    if (!ok) {
      violations.push_back(what);
    }
  }

  void PropertyReport::merge(PropertyReport const& other) {
    checks += other.checks;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }

  std::vector<CorpusEntry> corpus(int max_n, bool with_fixtures) {
    std::vector<CorpusEntry> out;
    for (int n = 1; n <= max_n; ++n) {
      for (int x = 0; 2 * x <= n; ++x) {
        std::int64_t idx = 0;
        for_each_presentation(3, n, x, [&](Presentation const& pres) {
          auto here = idx++;
          if (check_consistency(pres).consistent) {
            out.push_back({"P(3," + std::to_string(n) + "," + std::to_string(x) + ")#"
                               + std::to_string(here),
                           pres});
          }
        });
      }
    }
    if (with_fixtures) {
      for (auto& [name, pres] : catalog::fixtures()) {
        out.push_back({name, pres});
      }
    }
    return out;
  }

  Elem random_element(Group const& g, std::mt19937_64& rng) {
    auto const& pres = g.presentation();
    ElementNF   nf{Exponents(pres.rank(), 0)};
    for (std::size_t i = 0; i < pres.rank(); ++i) {
      nf.exponents[i] = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(
                                                              pres.generator_order(i)));
    }
    return g.from_nf(nf);
  }

  namespace {
    constexpr int element_scan_log = 6;

    bool leq(Subgroup const& a, Subgroup const& b) { return b.contains(a); }

    bool small(Group const& g) { return g.log_order() <= element_scan_log; }

    bool within_hyper_limit(Group const& g) {
      return g.log_order() <= 12 && ipow(g.prime(), g.log_order()) <= hypercentral_order_limit;
    }

    std::string tag(std::string const& what, int a, int b) {
      return what + " (" + std::to_string(a) + ", " + std::to_string(b) + ")";
    }

    // Power subgroups G^{p^k}, k = 0..e.
    std::vector<Subgroup> power_series(Group const& g, int e) {
      std::vector<Subgroup> out;
      for (int k = 0; k <= e; ++k) {
        out.push_back(group_power(g, k));
      }
      return out;
    }

    void structure_checks(Group const& g, std::vector<Subgroup> const& named,
                          std::vector<Subgroup> const& gpk, bool powerful,
                          std::mt19937_64& rng, PropertyReport& rep) {
      auto const p = g.prime();
      auto       w = whole_group(g);

      for (auto const& n : named) {
        if (!n.is_normal()) {
          continue;
        }
        Quotient q(n);
        rep.expect(q.group().log_order() + n.log_order() == g.log_order(),
                   "quotient order times kernel order equals |G|");
      }

      if (small(g)) {
        auto              elems = g.elements(element_scan_log);
        auto              z     = center(g);
        std::int64_t      count = 0;
        bool              inside = true;
        for (auto const& x : elems) {
          bool central = true;
          for (std::size_t i = 0; i < g.num_generators() && central; ++i) {
            central = g.commutator(x, g.generator(i)) == g.identity();
          }
          if (central) {
            ++count;
            inside = inside && z.contains(x);
          }
        }
        rep.expect(inside && count == ipow(p, z.log_order()), "center matches element scan");

        for (auto const& h : named) {
          if (is_powerfully_embedded(h)) {
            rep.expect(generator_power_subgroup(h, 1) == exhaustive_power_subgroup(h, 1),
                       "fast and exhaustive p-th power subgroups agree");
          }
        }
      }

      if (!powerful) {
        return;
      }

      for (std::size_t k = 0; k < gpk.size(); ++k) {
        if (gpk[k].rank() == 1) {
          rep.expect(commutator_subgroup(gpk[k], w).is_trivial(),
                     "cyclic power subgroup is central (k=" + std::to_string(k) + ")");
        }
      }

      for (int k = 0; k <= 2; ++k) {
        auto const q   = ipow(p, k);
        auto const mod = commutator_subgroup(group_power(g, k + 1), w);
        bool       ok  = true;
        for (int t = 0; t < 100 && ok; ++t) {
          auto a = random_element(g, rng), b = random_element(g, rng);
          auto x = g.commutator(g.power(a, q), b);
          auto y = g.power(g.commutator(a, b), q);
          auto z = g.commutator(a, g.power(b, q));
          ok     = mod.contains(g.multiply(g.inverse(x), y))
               && mod.contains(g.multiply(g.inverse(y), z));
        }
        rep.expect(ok, "power-commutator congruence modulo [G^{p^(k+1)},G] (k="
                           + std::to_string(k) + ")");
      }

      if (small(g) && p != 2) {
        std::vector<Subgroup> emb;
        for (auto const& h : named) {
          if (is_powerfully_embedded(h)) {
            emb.push_back(h);
          }
        }
        for (std::size_t a = 0; a < emb.size(); ++a) {
          for (std::size_t b = a; b < emb.size(); ++b) {
            auto mn = commutator_subgroup(emb[a], emb[b]);
            for (int i = 0; i <= 3; ++i) {
              for (int j = 0; i + j <= 3; ++j) {
                auto lhs = commutator_subgroup(power_subgroup(emb[a], i),
                                               power_subgroup(emb[b], j));
                rep.expect(lhs == power_subgroup(mn, i + j),
                           tag("interchange [M^{p^i},N^{p^j}] = [M,N]^{p^(i+j)}", i, j));
              }
            }
          }
        }
      }
    }

    // Ascending chain of the K_i^{p^q} below G^p, without repetitions.
    std::vector<Subgroup> lower_chain(Group const& g, AdaptedGenerators const& ag, int e) {
      std::vector<Subgroup> asc{trivial_subgroup(g)};
      for (int q = e - 1; q >= 1; --q) {
        for (std::size_t i = ag.chain.size(); i-- > 0;) {
          auto term = power_subgroup(ag.chain[i], q);
          if (term.log_order() != asc.back().log_order()) {
            asc.push_back(std::move(term));
          }
        }
      }
      return asc;
    }

    void pn_checks(Group const& g, AnalysisReport const& a, Series const& upper,
                   std::vector<Subgroup> const& gpk, PropertyReport& rep) {
      auto const p = g.prime();
      int const  n = a.n, r = a.r, e = a.e, c = a.c;
      auto       w = whole_group(g);

      rep.expect(r <= n - c + 1, "rank bound r <= n-c+1");
      rep.expect(e <= n - c + 1, "exponent bound e <= n-c+1");

      auto const& z = upper.terms;
      auto        derived = commutator_subgroup(w, w);
      if (c >= 1) {
        rep.expect(gpk[1].log_order() >= derived.log_order()
                       && derived.log_order() >= c - 1,
                   "|G^p| >= |[G,G]| >= p^(c-1)");
      }
      if (c >= 2) {
        bool strict = commutator_subgroup(z[1], w).is_trivial();
        for (int j = 2; j <= c; ++j) {
          strict = strict
                && commutator_subgroup(z[j], w).log_order()
                       > commutator_subgroup(z[j - 1], w).log_order();
        }
        rep.expect(strict, "[Z_j,G] strictly increasing for 2 <= j <= c");
        bool pw = true;
        for (int j = 1; j <= c - 1; ++j) {
          pw = pw && power_subgroup(z[j], 1).log_order() > power_subgroup(z[j - 1], 1).log_order();
        }
        rep.expect(pw, "Z_j^p strictly increasing for 0 <= j <= c-1");
      }

      try {
        rep.expect(pth_power_length(g) == n - r + 1, "p-th power length equals n-r+1");
      } catch (InternalError const&) {
        rep.expect(false, "p-th power length independent of the refinement");
      }

      auto ag = adapted_generators(g);
      int  sum = 0, weighted = 0;
      for (std::size_t i = 0; i < ag.counts.size(); ++i) {
        sum += ag.counts[i];
        weighted += static_cast<int>(i + 1) * ag.counts[i];
      }
      rep.expect(sum == r && weighted == n, "generator order counts match rank and order");
      for (std::size_t i = 0; i < ag.counts.size(); ++i) {
        auto lo = gpk[i].rank();
        auto hi = i + 1 < gpk.size() ? gpk[i + 1].rank() : 0;
        rep.expect(ag.counts[i] == lo - hi, "s(i) = rank G^{p^(i-1)} - rank G^{p^i}");
      }

      if (r >= 2) {
        int  bound   = 0;
        auto witness = class_bound_witness(g, &bound);
        std::vector<Subgroup> asc(witness.terms.rbegin(), witness.terms.rend());
        rep.expect(asc.front().is_trivial() && is_powerfully_central(asc) && c <= bound,
                   "class bound witness chain is powerfully central and bounds c");
      }

      if (e >= 2) {
        Quotient q(gpk[2]);
        auto     qc = class_and_coclass(q.group());
        if (qc && powerful_predicates(q.group()).powerful) {
          rep.expect(c <= (e - 1) * qc->c, "c <= (e-1) m for m the class of G/G^{p^2}");
        }
      }

      if (a.strongly_powerful) {
        rep.expect(a.pn, "strongly powerful implies powerfully nilpotent");
      }

      auto tail = tail_analysis(g, upper);
      rep.expect(tail.length <= 1 + r * (r - 1) / 2, "tail length <= 1 + r(r-1)/2");

      // lower chain below G^p against the upper series
      auto low = lower_chain(g, ag, e);
      rep.expect(low.back().log_order() == gpk[1].log_order(), "lower chain ends at G^p");
      for (std::size_t j = 0; j < low.size(); ++j) {
        // Z_j = G for j >= c
        auto zp = power_subgroup(z[std::min(j, z.size() - 1)], 1);
        bool ok = leq(low[j], zp);
        if (ok && static_cast<int>(j) <= tail.length) {
          ok = low[j] == zp;
        }
        rep.expect(ok, "M_j <= Z_j^p, equality up to the tail (j=" + std::to_string(j) + ")");
      }

      if (r >= 2) {
        int f = 0;
        while (f + 1 < static_cast<int>(gpk.size()) && gpk[f + 1].rank() >= 2) {
          ++f;
        }
        int i = 0;
        while (!leq(gpk[std::min<std::size_t>(i + 1, gpk.size() - 1)], tail.tail)) {
          ++i;
        }
        bool desc = true;
        for (int k = i; k <= f && k + 1 < static_cast<int>(gpk.size()); ++k) {
          desc = desc && gpk[k].rank() > gpk[k + 1].rank();
        }
        rep.expect(desc, "rank of G^{p^k} strictly descends from the tail index to f+1");
      }

      if (tail.maximal && r >= 2) {
        rep.expect(tail.length == n - r && c - 1 <= tail.length && tail.length <= c,
                   "maximal tail: t = n-r and c-1 <= t <= c");
        bool desc = true;
        for (int k = 0; k + 1 <= e - 2; ++k) {
          desc = desc && gpk[k].rank() > gpk[k + 1].rank();
        }
        rep.expect(desc, "maximal tail: ranks strictly descend through G^{p^(e-2)}");
        for (int j = 0; j <= c; ++j) {
          Quotient q(power_subgroup(z[j], 1));
          auto     qa = analyze(q.group());
          rep.expect(qa.pn && qa.maximal_tail,
                     "maximal tail passes to G/Z_j^p (j=" + std::to_string(j) + ")");
        }
        if (within_hyper_limit(g)) {
          std::vector<Subgroup> cands(z.begin(), z.end());
          for (auto const& s : gpk) {
            cands.push_back(s);
            for (auto const& zz : z) {
              cands.push_back(join(s, zz));
            }
          }
          for (std::size_t t = 0; t < g.num_generators(); ++t) {
            cands.push_back(normal_closure(g, {g.generator(t)}));
          }
          for (auto const& h : cands) {
            auto hp    = power_subgroup(h, 1);
            bool found = std::any_of(z.begin(), z.end(), [&](Subgroup const& zz) {
              return power_subgroup(zz, 1) == hp;
            });
            // only a miss needs the search
            rep.expect(found || !is_powerfully_hypercentral(h),
                       "powerfully hypercentral H has H^p = Z_i^p");
          }
        }
      }

      if (!derived.is_trivial()) {
        auto zp = power_subgroup(center(g), 1);
        auto h  = direct_descendant(g);
        auto hc = class_and_coclass(h->group());
        rep.expect(hc && hc->c == c - 1, "descendant class drops by one");
        if (hc) {
          rep.expect(hc->d <= a.d && ((hc->d == a.d) == (zp.log_order() == 1)),
                     "d(G) >= d(H), equality iff |Z(G)^p| = p");
        }
      }
      (void) p;
    }
  }  // namespace

  PropertyReport check_properties(Group const& g, std::uint64_t seed) {
    PropertyReport  rep;
    std::mt19937_64 rng(seed);
    auto const      p     = g.prime();
    auto const      a     = analyze(g);
    auto const      upper = upper_powerfully_central_series(g);
    auto const      gpk   = power_series(g, a.e);
    auto            w     = whole_group(g);

    std::vector<Subgroup> named(upper.terms.begin(), upper.terms.end());
    named.insert(named.end(), gpk.begin(), gpk.end());
    named.push_back(center(g));
    named.push_back(commutator_subgroup(w, w));

    structure_checks(g, named, gpk, a.powerful, rng, rep);

    if (a.powerful) {
      rep.expect(frattini(w) == gpk[1], "Frattini subgroup equals G^p");
      for (int i = 1; i <= a.e; ++i) {
        auto const& n  = gpk[i];
        rep.expect(leq(commutator_subgroup(n, n), power_subgroup(n, 2)),
                   "G^{p^i} strongly powerful (i=" + std::to_string(i) + ")");
        bool chain = true;
        for (int k = 0; k <= a.e; ++k) {
          chain = chain
               && leq(commutator_subgroup(power_subgroup(n, k), n),
                      power_subgroup(power_subgroup(n, k + 1), 1));
        }
        rep.expect(chain, "G^{p^i} powerfully nilpotent via its power series (i="
                              + std::to_string(i) + ")");
      }
      if (p == 2) {
        rep.expect(a.pn && (a.e < 2 || a.c <= a.e - 1), "powerful 2-group is pn with c <= e-1");
      }
    }
    if (a.pn) {
      pn_checks(g, a, upper, gpk, rep);
    }
    return rep;
  }

  PropertyReport check_engine(Group const& g, int triples, std::uint64_t seed) {
    PropertyReport rep;
    if (!small(g)) {
      return rep;
    }
    std::set<Elem>    seen{g.identity()};
    std::vector<Elem> frontier{g.identity()};
    while (!frontier.empty()) {
      std::vector<Elem> next;
      for (auto const& x : frontier) {
        for (std::size_t i = 0; i < g.num_generators(); ++i) {
          auto y = g.multiply(x, g.generator(i));
          if (seen.insert(y).second) {
            next.push_back(std::move(y));
          }
        }
      }
      frontier = std::move(next);
    }
    rep.expect(static_cast<std::int64_t>(seen.size()) == ipow(g.prime(), g.log_order()),
               "closure under multiplication has prod p^{e_i} elements");
    std::mt19937_64 rng(seed);
    bool            ok = true;
    for (int t = 0; t < triples && ok; ++t) {
      auto x = random_element(g, rng), y = random_element(g, rng), z = random_element(g, rng);
      ok     = g.multiply(g.multiply(x, y), z) == g.multiply(x, g.multiply(y, z));
    }
    rep.expect(ok, "random associativity triples");
    return rep;
  }

}  // namespace pnlab
