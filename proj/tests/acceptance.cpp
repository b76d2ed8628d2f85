// Acceptance runner: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "pnlab/ancestry.hpp"
#include "pnlab/catalog.hpp"
#include "pnlab/enumeration.hpp"
#include "pnlab/errors.hpp"
#include "pnlab/properties.hpp"

using namespace pnlab;

namespace {
  int failures = 0;

  // body returns true on success and may append details to `note`
  void criterion(int id, std::string const& title, double limit_s,
                 std::function<bool(std::ostringstream&)> const& body) {
    std::ostringstream note;
    auto               t0 = std::chrono::steady_clock::now();
    bool               ok = false;
    try {
      ok = body(note);
    } catch (std::exception const& e) {
      note << "exception: " << e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt > limit_s) {
      note << (note.tellp() > 0 ? "; " : "") << "time limit exceeded";
      ok = false;
    }
    failures += !ok;
    std::printf("%s %2d %s (%.2fs / %.0fs)%s%s\n", ok ? "PASS" : "FAIL", id, title.c_str(), dt,
                limit_s, note.tellp() > 0 ? " : " : "", note.str().c_str());
    std::fflush(stdout);
  }

  bool iso_yes(Group const& a, Group const& b) {
    auto r = are_isomorphic(a, b);
    return r.verdict == IsoVerdict::yes && verify_isomorphism(a, b, r);
  }

  bool abelian_with(CensusRecord const& r, std::vector<int> const& inv) {
    return r.fingerprint.derived == 0 && r.fingerprint.abelian_invariants == inv;
  }
}  // namespace

int main() {
  criterion(1, "h sum form equals closed form, n <= 200", 1, [](auto& note) {
    int cases = 0;
    for (std::int64_t n = 0; n <= 200; ++n) {
      for (std::int64_t x = 0; 2 * x <= n; ++x, ++cases) {
        if (h_sum_form(n, x) != h_closed_form(n, x)) {
          note << "mismatch at n=" << n << " x=" << x;
          return false;
        }
      }
    }
    note << cases << " cases";
    return true;
  });

  criterion(2, "|P(3,n,x)| = 3^h(x) for n <= 5, all consistent", 10, [](auto& note) {
    std::int64_t total = 0;
    for (std::int64_t n = 1; n <= 5; ++n) {
      for (std::int64_t x = 0; 2 * x <= n; ++x) {
        std::int64_t count = 0;
        bool         consistent = true;
        for_each_presentation(3, n, x, [&](Presentation const& p) {
          ++count;
          consistent = consistent && check_consistency(p).consistent;
        });
        total += count;
        if (count != ipow(3, static_cast<int>(h_value(n, x))) || !consistent) {
          note << "n=" << n << " x=" << x << " count=" << count;
          return false;
        }
      }
    }
    std::int64_t a = ipow(3, static_cast<int>(h_value(3, 1)));
    std::int64_t b = ipow(3, static_cast<int>(h_value(4, 1)));
    std::int64_t c = ipow(3, static_cast<int>(h_value(5, 1)));
    note << "streams (3,1),(4,1),(5,1) = " << a << "," << b << "," << c << "; " << total
         << " presentations";
    return a == 1 && b == 3 && c == 27;
  });

  criterion(3, "h(x(n))/n^3 at n = 10^5 within 2e-4 of alpha (294), not of 394", 1,
            [](auto& note) {
              auto   g = growth_report(100000, false);
              double a = std::abs(g.normalized - alpha_constant());
              double m = std::abs(g.normalized - alpha_misprint());
              note << "value=" << g.normalized << " |d294|=" << a << " |d394|=" << m;
              return a <= 2e-4 && m > 2e-4;
            });

  criterion(4, "x(n)/n at n = 10^5 within 1e-4 of (3-sqrt2)/7", 1, [](auto& note) {
    auto   g = growth_report(100000, false);
    double d = std::abs(g.ratio - ratio_constant());
    note << "ratio=" << g.ratio << " |d|=" << d;
    return d <= 1e-4;
  });

  criterion(5, "F2 invariants and 81x81 oracle agreement", 5, [](auto& note) {
    Group f2(catalog::f2());
    auto  a  = analyze(f2);
    bool  ok = a.n == 4 && a.r == 2 && a.e == 3 && a.powerful && a.strongly_powerful && a.pn &&
              a.c == 2 && a.d == 2 && a.s == 3 && a.t == 2 && a.maximal_tail;
    catalog::OracleModel m(3, 3, 1, 10);
    bool oracle = catalog::oracle_cross_check(f2, m, {{1, 0}, {0, 1}});
    note << "invariants " << (ok ? "ok" : "wrong") << ", oracle " << (oracle ? "ok" : "wrong");
    return ok && oracle;
  });

  criterion(6, "tail family sec4_ex1(3,r) and sec4_ex2 maximal tails", 120, [](auto& note) {
    bool ok = true;
    for (int r = 2; r <= 4; ++r) {
      Group g(catalog::sec4_ex1(3, r));
      auto  t = tail_analysis(g);
      note << "r=" << r << ":n=" << g.log_order() << ",t=" << t.length << " ";
      ok = ok && t.maximal && t.length == 1 + r * (r - 1) / 2 &&
           g.log_order() == r + 1 + r * (r - 1) / 2;
    }
    auto p2 = catalog::sec4_ex2();
    bool cons = check_consistency(p2).consistent;
    Group g(p2);
    auto  t = tail_analysis(g);
    note << "sec4_ex2:n=" << g.log_order() << ",t=" << t.length;
    return ok && cons && g.log_order() == 16 && t.maximal && t.length == 11;
  });

  criterion(7, "descendants: G(n)/Z^p = G(n-1) for n=3..5, F2 -> C9xC3", 30, [](auto& note) {
    bool ok = true;
    for (int n = 3; n <= 5; ++n) {
      auto q = direct_descendant(Group(catalog::sec2_ex2(3, n)));
      bool y = q && iso_yes(q->group(), Group(catalog::sec2_ex2(3, n - 1)));
      note << "n=" << n << (y ? " ok " : " FAILED ");
      ok = ok && y;
    }
    auto q = direct_descendant(Group(catalog::f2()));
    bool y = q && iso_yes(q->group(), Group(catalog::abelian(3, {2, 1})));
    note << "F2 " << (y ? "ok" : "FAILED");
    return ok && y;
  });

  criterion(8, "census(3,0) = {C3}, census(3,1) = {C9, C3xC3}, M27 not pn", 60, [](auto& note) {
    auto c0 = census(3, 0);
    auto c1 = census(3, 1);
    bool ok0 = c0.size() == 1 && abelian_with(c0[0], {1});
    bool ok1 = c1.size() == 2 &&
               ((abelian_with(c1[0], {2}) && abelian_with(c1[1], {1, 1})) ||
                (abelian_with(c1[1], {2}) && abelian_with(c1[0], {1, 1})));
    Group m(catalog::m27());
    auto  a = analyze(m);
    auto  s = upper_powerfully_central_series(m);
    bool  top = !s.reaches_group && s.terms.back().log_order() == 1 &&
               s.terms.back().contains(m.power(m.generator(0), 3));
    bool okm = a.powerful && !a.pn && top;
    note << "|census(3,0)|=" << c0.size() << " |census(3,1)|=" << c1.size()
         << " M27 " << (okm ? "ok" : "wrong");
    return ok0 && ok1 && okm;
  });

  criterion(9, "property suite over the corpus (p=3, n<=6, fixtures, 2-groups)", 600,
            [](auto& note) {
              PropertyReport total;
              auto           entries = corpus(6, true);
              for (auto const& e : entries) {
                auto r = check_properties(Group(e.presentation));
                for (auto& v : r.violations) {
                  v = e.name + ": " + v;
                }
                total.merge(r);
              }
              note << entries.size() << " groups, " << total.checks << " checks, "
                   << total.violations.size() << " violations";
              for (std::size_t i = 0; i < total.violations.size() && i < 5; ++i) {
                note << "; " << total.violations[i];
              }
              return total.violations.empty();
            });

  criterion(10, "orbit dedup at (3,4,1) and (3,5,1) agrees with isomorphism testing", 60,
            [](auto& note) {
              bool ok = true;
              for (std::int64_t n : {4, 5}) {
                auto o  = orbit_dedup(3, n, 1);
                auto ps = enumerate_presentations(3, n, 1);
                std::vector<Group>     reps;
                std::vector<std::size_t> rep_of;
                for (auto const& p : ps) {
                  Group       g(p);
                  std::size_t k = 0;
                  for (; k < reps.size(); ++k) {
                    auto v = are_isomorphic(g, reps[k]).verdict;
                    if (v == IsoVerdict::unknown) {
                      throw InternalError("isomorphism test inconclusive");
                    }
                    if (v == IsoVerdict::yes) {
                      break;
                    }
                  }
                  if (k == reps.size()) {
                    reps.push_back(g);
                  }
                  rep_of.push_back(k);
                }
                // same partition
                for (std::size_t i = 0; i < ps.size(); ++i) {
                  for (std::size_t j = 0; j < ps.size(); ++j) {
                    ok = ok && ((o.class_of[i] == o.class_of[j]) == (rep_of[i] == rep_of[j]));
                  }
                }
                note << "(3," << n << ",1): orbits=" << o.classes << " iso=" << reps.size()
                     << " ";
                ok = ok && o.classes == static_cast<std::int64_t>(reps.size());
                if (n == 4) {
                  ok = ok && o.classes == 2;
                }
              }
              return ok;
            });

  criterion(11, "engine closure sizes and 1000 associativity triples, |G| <= 3^6", 300,
            [](auto& note) {
              PropertyReport total;
              int            groups = 0;
              for (auto const& e : corpus(6, true)) {
                if (e.presentation.log_order_bound() > 6) {
                  continue;
                }
                ++groups;
                auto r = check_engine(Group(e.presentation), 1000);
                for (auto& v : r.violations) {
                  v = e.name + ": " + v;
                }
                total.merge(r);
              }
              note << groups << " groups, " << total.checks << " checks, "
                   << total.violations.size() << " violations";
              return total.violations.empty();
            });

  std::printf("%s: %d failing\n", failures == 0 ? "ALL PASS" : "SOME FAIL", failures);
  return failures == 0 ? 0 : 1;
}
