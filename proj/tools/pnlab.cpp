// pnlab: command-line front end for the group library.
#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "pnlab/analysis.hpp"
#include "pnlab/ancestry.hpp"
#include "pnlab/catalog.hpp"
#include "pnlab/enumeration.hpp"
#include "pnlab/errors.hpp"
#include "pnlab/properties.hpp"

using namespace pnlab;

namespace {

  enum Exit { ok = 0, negative = 1, usage = 2, internal = 3 };

  struct UsageError : Error {
    using Error::Error;
  };

  Presentation load(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw UsageError("cannot read '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
  }

  char const* yn(bool b) { return b ? "true" : "false"; }

  std::string dash(int v) { return v < 0 ? "-" : std::to_string(v); }

  std::string join(std::vector<int> const& v, char sep = ',') {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
    }
    return s;
  }

  // "3^10" or "59049"; returns log_p of the bound.
  int parse_bound(std::string const& text, std::int64_t p) {
    auto caret = text.find('^');
    if (caret != std::string::npos) {
      if (std::stoll(text.substr(0, caret)) != p) {
        throw UsageError("--bound must be a power of the group prime");
      }
      return std::stoi(text.substr(caret + 1));
    }
    auto v = std::stoll(text);
    int  k = 0;
    while (v % p == 0) {
      v /= p;
      ++k;
    }
    if (v != 1) {
      throw UsageError("--bound must be a power of the group prime");
    }
    return k;
  }

  int cmd_analyze(std::string const& file, bool porcelain) {
    Group g(load(file));
    auto  a = analyze(g);
    if (porcelain) {
      std::cout << "n=" << a.n << " r=" << a.r << " e=" << a.e << " c=" << dash(a.c)
                << " d=" << dash(a.d) << " s=" << dash(a.s) << " t=" << dash(a.t)
                << " maximal_tail=" << yn(a.maximal_tail) << " pn=" << yn(a.pn)
                << " powerful=" << yn(a.powerful)
                << " strongly_powerful=" << yn(a.strongly_powerful) << "\n";
      return a.pn ? ok : negative;
    }
    std::cout << "order          p^" << a.n << " (p = " << g.prime() << ")\n"
              << "rank           " << a.r << "\n"
              << "exponent       p^" << a.e << "\n"
              << "powerful       " << yn(a.powerful) << "\n"
              << "strongly pow.  " << yn(a.strongly_powerful) << "\n"
              << "pn             " << yn(a.pn) << "\n";
    std::cout << "upper series   |Z_i^p| = p^{" << join(a.upper_power_orders) << "}\n";
    if (!a.pn) {
      std::cout << "upper powerfully central series stops below G\n";
      return negative;
    }
    auto check = [](bool b) { return b ? "holds" : "VIOLATED"; };
    std::cout << "class c        " << a.c << "\n"
              << "coclass d      " << a.d << "\n"
              << "power length s " << a.s << "   s = n - r + 1: " << check(a.s == a.n - a.r + 1)
              << "\n"
              << "tail t         " << a.t << (a.maximal_tail ? " (maximal)" : "") << "\n"
              << "order counts   s(1..e) = " << join(a.counts) << "\n"
              << "bounds\n"
              << "  r <= n - c + 1        " << a.r << " <= " << a.n - a.c + 1 << "  "
              << check(a.r <= a.n - a.c + 1) << " (rank bound)\n"
              << "  e <= n - c + 1        " << a.e << " <= " << a.n - a.c + 1 << "  "
              << check(a.e <= a.n - a.c + 1) << " (exponent bound)\n"
              << "  n <= (d + 1)^2        " << a.n << " <= " << (a.d + 1) * (a.d + 1) << "  "
              << check(a.n <= (a.d + 1) * (a.d + 1)) << " (finiteness of a coclass)\n"
              << "  t <= 1 + r(r - 1)/2   " << a.t << " <= " << 1 + a.r * (a.r - 1) / 2 << "  "
              << check(a.t <= 1 + a.r * (a.r - 1) / 2) << " (tail bound)\n";
    return ok;
  }

  int cmd_consistency(std::string const& file, bool porcelain) {
    auto pres = load(file);
    auto rep  = check_consistency(pres);
    if (porcelain) {
      std::cout << "consistent=" << yn(rep.consistent) << " n=" << rep.log_order << "\n";
    } else {
      std::cout << (rep.consistent ? "consistent" : "inconsistent") << ", order p^"
                << rep.log_order << "\n";
      if (!rep.consistent) {
        std::cout << "first failure: " << rep.failure << "\n";
      }
    }
    return rep.consistent ? ok : negative;
  }

  int cmd_series(std::string const& file, bool porcelain) {
    Group g(load(file));
    auto  s = upper_powerfully_central_series(g);
    for (std::size_t i = 0; i < s.terms.size(); ++i) {
      auto zo = s.terms[i].log_order();
      auto po = power_subgroup(s.terms[i], 1).log_order();
      if (porcelain) {
        std::cout << "i=" << i << " z=" << zo << " zp=" << po << "\n";
      } else {
        std::cout << "Z_" << i << "  order p^" << zo << "  p-th powers p^" << po << "\n";
      }
    }
    if (porcelain) {
      std::cout << "reaches_group=" << yn(s.reaches_group) << "\n";
    } else if (!s.reaches_group) {
      std::cout << "series stabilizes below G: not powerfully nilpotent\n";
    }
    return s.reaches_group ? ok : negative;
  }

  int cmd_tail(std::string const& file, bool porcelain) {
    Group g(load(file));
    if (!is_powerfully_nilpotent(g)) {
      std::cout << (porcelain ? "pn=false\n" : "not powerfully nilpotent\n");
      return negative;
    }
    auto t = tail_analysis(g);
    if (porcelain) {
      std::cout << "t=" << t.length << " tail_order=" << t.tail.log_order()
                << " maximal_tail=" << yn(t.maximal) << "\n";
    } else {
      std::cout << "tail length " << t.length << ", tail order p^" << t.tail.log_order()
                << (t.maximal ? ", maximal (tail = G^p)" : "") << "\n";
    }
    return ok;
  }

  int cmd_descendant(std::string const& file, bool porcelain) {
    Group g(load(file));
    auto  q = direct_descendant(g);
    if (!q) {
      std::cout << (porcelain ? "abelian_leaf=true\n" : "abelian: no direct descendant\n");
      return ok;
    }
    if (porcelain) {
      std::cout << "abelian_leaf=false\n";
    } else {
      std::cout << "# G / Z(G)^p\n";
    }
    std::cout << format_presentation(q->group().presentation());
    return ok;
  }

  int cmd_ancestors(std::string const& file, std::string const& bound,
                    std::vector<std::string> const& extra, bool no_scan, bool porcelain) {
    Group                     h(load(file));
    std::vector<Presentation> ex;
    for (auto const& f : extra) {
      ex.push_back(load(f));
    }
    auto res = ancestors(h, parse_bound(bound, h.prime()), ex, !no_scan);
    if (porcelain) {
      std::cout << "count=" << res.size() << "\n";
    }
    for (auto const& r : res) {
      std::cout << export_record(r);
    }
    if (!porcelain) {
      std::cout << res.size() << " direct ancestor(s) found\n";
    }
    return ok;
  }

  int cmd_iso(std::string const& a, std::string const& b, bool porcelain) {
    Group g(load(a)), h(load(b));
    auto  r = are_isomorphic(g, h);
    char const* v = r.verdict == IsoVerdict::yes ? "yes"
                    : r.verdict == IsoVerdict::no ? "no"
                                                  : "unknown";
    if (porcelain) {
      std::cout << "isomorphic=" << v << " nodes=" << r.nodes << "\n";
    } else {
      std::cout << "isomorphic: " << v << " (" << r.nodes << " search nodes)\n";
      if (r.verdict == IsoVerdict::yes) {
        for (std::size_t i = 0; i < r.sources.size(); ++i) {
          std::cout << "  " << format_element(g.to_nf(r.sources[i])) << " -> "
                    << format_element(h.to_nf(r.images[i])) << "\n";
        }
      }
    }
    return r.verdict == IsoVerdict::yes ? ok : negative;
  }

  int cmd_census(std::int64_t p, int d, bool porcelain) {
    auto res = census(p, d);
    if (porcelain) {
      std::cout << "count=" << res.size() << "\n";
      for (auto const& r : res) {
        std::cout << "fingerprint " << r.fingerprint.str() << "\n";
      }
      return ok;
    }
    for (auto const& r : res) {
      std::cout << export_record(r) << "\n";
    }
    std::cout << res.size() << " isomorphism class(es) of powerful coclass " << d << "\n";
    return ok;
  }

  int cmd_count(std::int64_t p, std::int64_t n, std::optional<std::int64_t> x) {
    if (x) {
      std::cout << count_line(p, n, *x) << "\n";
      return ok;
    }
    for (std::int64_t k = 0; 2 * k <= n; ++k) {
      std::cout << count_line(p, n, k) << "\n";
    }
    return ok;
  }

  int cmd_growth(std::int64_t n, bool porcelain) {
    auto r = growth_report(n, n <= 2000);
    if (!porcelain && !r.h.empty()) {
      std::cout << "   x  h(x)\n";
      for (std::size_t x = 0; x < r.h.size(); ++x) {
        std::cout << std::setw(4) << x << "  " << r.h[x] << "\n";
      }
    }
    std::cout << std::setprecision(10) << "n=" << r.n << " x_n=" << r.x_n
              << " x_max=" << r.x_max << " h=" << r.h_max << " normalized=" << r.num << "/"
              << r.den << " normalized_decimal=" << r.normalized << " ratio=" << r.ratio
              << " alpha=" << alpha_constant() << " ratio_limit=" << ratio_constant() << "\n";
    return ok;
  }

  int cmd_selftest(int corpus_n, bool porcelain) {
    PropertyReport total;
    int            groups = 0;
    for (auto const& e : corpus(corpus_n)) {
      Group g(e.presentation);
      auto  r = check_properties(g);
      r.merge(check_engine(g));
      for (auto const& v : r.violations) {
        std::cout << "violation: " << e.name << ": " << v << "\n";
      }
      total.merge(r);
      ++groups;
    }
    if (porcelain) {
      std::cout << "groups=" << groups << " checks=" << total.checks
                << " violations=" << total.violations.size() << "\n";
    } else {
      std::cout << groups << " groups, " << total.checks << " checks, "
                << total.violations.size() << " violation(s)\n";
    }
    return total.violations.empty() ? ok : negative;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pnlab: powerful p-group laboratory"};
  app.require_subcommand(1);
  app.fallthrough();
  bool porcelain = false;
  app.add_flag("--porcelain", porcelain, "stable key=value output");

  std::string file, file_b, bound = "3^7";
  std::vector<std::string> extra;
  bool                     no_scan = false;
  std::int64_t             p = 3, n = 0;
  int                      coclass = 0, corpus_n = 6;
  std::optional<std::int64_t> x;

  auto* analyze_cmd = app.add_subcommand("analyze", "invariants of a presentation file");
  analyze_cmd->add_option("file", file)->required();
  auto* cons_cmd = app.add_subcommand("consistency", "check a presentation for consistency");
  cons_cmd->add_option("file", file)->required();
  auto* series_cmd = app.add_subcommand("series", "upper powerfully central series");
  series_cmd->add_option("file", file)->required();
  auto* tail_cmd = app.add_subcommand("tail", "tail length and maximality");
  tail_cmd->add_option("file", file)->required();
  auto* desc_cmd = app.add_subcommand("descendant", "direct descendant G/Z(G)^p");
  desc_cmd->add_option("file", file)->required();
  auto* anc_cmd = app.add_subcommand("ancestors", "direct ancestors up to an order bound");
  anc_cmd->add_option("file", file)->required();
  anc_cmd->add_option("--bound", bound, "order bound, e.g. 3^7");
  anc_cmd->add_option("--extra", extra, "additional candidate presentation files");
  anc_cmd->add_flag("--no-scan", no_scan, "test only the --extra candidates");
  auto* iso_cmd = app.add_subcommand("iso", "isomorphism test");
  iso_cmd->add_option("a", file)->required();
  iso_cmd->add_option("b", file_b)->required();
  auto* census_cmd = app.add_subcommand("census", "pn groups of a given powerful coclass");
  census_cmd->add_option("--p", p)->required();
  census_cmd->add_option("--coclass", coclass)->required();
  auto* count_cmd = app.add_subcommand("count", "exponent-p^2 presentation counts");
  count_cmd->add_option("--p", p)->required();
  count_cmd->add_option("--n", n)->required();
  count_cmd->add_option("--x", x);
  auto* growth_cmd = app.add_subcommand("growth", "h(x) table and maximizer");
  growth_cmd->add_option("--n", n)->required();
  auto* self_cmd = app.add_subcommand("selftest", "property suites over the corpus");
  self_cmd->add_option("--corpus-n", corpus_n, "largest n of the enumerated corpus");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return usage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(file, porcelain);
    if (*cons_cmd) return cmd_consistency(file, porcelain);
    if (*series_cmd) return cmd_series(file, porcelain);
    if (*tail_cmd) return cmd_tail(file, porcelain);
    if (*desc_cmd) return cmd_descendant(file, porcelain);
    if (*anc_cmd) return cmd_ancestors(file, bound, extra, no_scan, porcelain);
    if (*iso_cmd) return cmd_iso(file, file_b, porcelain);
    if (*census_cmd) return cmd_census(p, coclass, porcelain);
    if (*count_cmd) return cmd_count(p, n, x);
    if (*growth_cmd) return cmd_growth(n, porcelain);
    if (*self_cmd) return cmd_selftest(corpus_n, porcelain);
  } catch (UsageError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (ParseError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (ScaleLimit const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (DomainError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return negative;
  } catch (std::invalid_argument const& e) {
    std::cerr << "error: bad number\n";
    return usage;
  } catch (std::exception const& e) {
    std::cerr << "internal failure: " << e.what() << "\n";
    return internal;
  }
  return usage;
}
