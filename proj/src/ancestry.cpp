#include "pnlab/ancestry.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "pnlab/enumeration.hpp"
#include "pnlab/errors.hpp"

namespace pnlab {

  namespace {
    std::string join_ints(std::vector<int> const& v) {
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
      }
      return s + "]";
    }

    bool is_abelian_group(Group const& g) {
      auto w = whole_group(g);
      return commutator_subgroup(w, w).is_trivial();
    }

    // Order tuples in [1, emax]^r with the given total (or total <= cap when exact = false).
    void for_each_orders(int r, int emax, int lo, int hi,
                         std::function<void(std::vector<int> const&)> const& f) {
      std::vector<int>                cur;
      std::function<void(int)> rec = [&](int sum) {
        if (static_cast<int>(cur.size()) == r) {
          if (sum >= lo && sum <= hi) {
            f(cur);
          }
          return;
        }
        for (int e = 1; e <= emax && sum + e <= hi; ++e) {
          cur.push_back(e);
          rec(sum + e);
          cur.pop_back();
        }
      };
      rec(0);
    }

    std::string provenance_of(std::vector<int> const& orders, std::int64_t idx) {
      std::string s = "orders";
      for (auto e : orders) {
        s += " " + std::to_string(e);
      }
      return s + " table " + std::to_string(idx);
    }

    // Adds rec unless an isomorphic group is present.
    void merge(std::vector<CensusRecord>& out, std::vector<Group>& groups, Group const& g,
               CensusRecord rec) {
      for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].fingerprint != rec.fingerprint) {
          continue;
        }
        auto v = are_isomorphic(groups[i], g).verdict;
        if (v == IsoVerdict::yes) {
          return;
        }
        if (v == IsoVerdict::unknown) {
          throw InternalError("isomorphism test exhausted its budget while merging records");
        }
      }
      out.push_back(std::move(rec));
      groups.push_back(g);
    }

    void sort_records(std::vector<CensusRecord>& out) {
      std::stable_sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
        return a.fingerprint < b.fingerprint;
      });
    }
  }  // namespace

  std::string Fingerprint::str() const {
    std::ostringstream o;
    o << "(n=" << n << ",r=" << r << ",e=" << e << ",c=" << c << ",d=" << d << ",s=" << s
      << ",t=" << t << ",ab=" << join_ints(abelian_invariants) << ",orders="
      << join_ints(counts) << ",zp=" << join_ints(upper_power_orders) << ",z=" << center
      << ",dg=" << derived << ")";
    return o.str();
  }

  Fingerprint fingerprint(Group const& g) {
    auto        rep = analyze(g);
    Fingerprint f;
    f.n                  = rep.n;
    f.r                  = rep.r;
    f.e                  = rep.e;
    f.c                  = rep.c;
    f.d                  = rep.d;
    f.s                  = rep.s;
    f.t                  = rep.t;
    f.counts             = rep.counts;
    f.upper_power_orders = rep.upper_power_orders;
    auto w               = whole_group(g);
    auto comm            = commutator_subgroup(w, w);
    f.derived            = comm.log_order();
    f.center             = center(g).log_order();
    f.abelian_invariants = adapted_basis(comm).order_log;
    std::sort(f.abelian_invariants.rbegin(), f.abelian_invariants.rend());
    return f;
  }

  std::optional<Quotient> direct_descendant(Group const& g) {
    if (is_abelian_group(g)) {
      return std::nullopt;
    }
    return Quotient(power_subgroup(center(g), 1));
  }

  std::vector<Group> descendant_chain(Group const& g) {
    std::vector<Group> out{g};
    while (auto q = direct_descendant(out.back())) {
      out.push_back(q->group());
    }
    return out;
  }

  namespace {
    // Characteristic subgroups used to split candidate images.
    struct Profile {
      std::vector<Subgroup> chars;
      bool                  centralizers = false;
    };

    Profile profile_of(Group const& g) {
      Profile pr;
      auto    w = whole_group(g);
      for (auto const& z : upper_powerfully_central_series(g).terms) {
        pr.chars.push_back(z);
      }
      for (int k = 1; k < exponent_log(g); ++k) {
        pr.chars.push_back(power_subgroup(w, k));
      }
      pr.chars.push_back(center(g));
      pr.chars.push_back(commutator_subgroup(w, w));
      pr.centralizers = g.log_order() <= 10;
      return pr;
    }

    std::vector<int> signature(Group const& g, Profile const& pr, Elem const& x) {
      std::vector<int> sig{g.element_order_log(x)};
      auto             xp = g.power(x, g.prime());
      for (auto const& c : pr.chars) {
        sig.push_back(c.contains(x) ? 1 : 0);
        sig.push_back(c.contains(xp) ? 1 : 0);
      }
      return sig;
    }

    // costlier second stage
    std::vector<int> deep_signature(Group const& g, Profile const& pr, Elem const& x) {
      std::vector<int> sig{normal_closure(g, {x}).log_order()};
      if (pr.centralizers) {
        sig.push_back(centralizer(g, {x}).log_order());
      }
      return sig;
    }

    struct Relation {
      std::size_t a, b, at;
      Exponents   m;
    };

    std::vector<Relation> relations_of(Presentation const& pres) {
      std::vector<Relation> rels;
      for (std::size_t a = 1; a < pres.rank(); ++a) {
        for (std::size_t b = 0; b < a; ++b) {
          auto        m  = pres.commutator(a, b);
          std::size_t at = a;
          for (std::size_t k = 0; k < m.size(); ++k) {
            if (m[k] != 0) {
              at = std::max(at, k);
            }
          }
          rels.push_back({a, b, at, std::move(m)});
        }
      }
      return rels;
    }

    bool relation_holds(Group const& h, std::vector<Elem> const& img, Relation const& rel) {
      Elem rhs = h.identity();
      for (std::size_t k = 0; k < rel.m.size(); ++k) {
        if (rel.m[k] != 0) {
          rhs = h.multiply(rhs, h.power(img[k], rel.m[k]));
        }
      }
      return h.commutator(img[rel.a], img[rel.b]) == rhs;
    }
  }  // namespace

  IsoResult are_isomorphic(Group const& g, Group const& h, std::int64_t budget) {
    IsoResult res;
    if (g.prime() != h.prime() || g.log_order() != h.log_order()) {
      res.verdict = IsoVerdict::no;
      return res;
    }
    if (fingerprint(g) != fingerprint(h)) {
      res.verdict = IsoVerdict::no;
      return res;
    }
    auto     ab = adapted_basis(trivial_subgroup(g));
    Quotient q(trivial_subgroup(g), ab);
    auto     rels = relations_of(q.group().presentation());
    auto     s    = ab.gens.size();
    res.sources   = ab.gens;
    if (s == 0) {
      res.verdict = IsoVerdict::yes;
      return res;
    }

    std::vector<Elem> elems;
    try {
      elems = h.elements(12);
    } catch (ScaleLimit const&) {
      return res;
    }
    auto const gp = profile_of(g), hp = profile_of(h);
    std::vector<std::vector<std::size_t>> cands(s);
    std::vector<std::optional<std::vector<int>>> sig(elems.size()), deep(elems.size());
    std::vector<int>                             order(elems.size());
    for (std::size_t t = 0; t < elems.size(); ++t) {
      order[t] = h.element_order_log(elems[t]);
    }
    auto       hw = whole_group(h);
    LayerBasis top(hw, frattini(hw));
    std::vector<std::vector<int>> want_deep(s);
    for (std::size_t i = 0; i < s; ++i) {
      auto want    = signature(g, gp, ab.gens[i]);
      want_deep[i] = deep_signature(g, gp, ab.gens[i]);
      for (std::size_t t = 0; t < elems.size(); ++t) {
        if (order[t] != ab.order_log[i] || top.coords(elems[t]) == fp::Vec(top.dim(), 0)) {
          continue;
        }
        if (!sig[t]) {
          sig[t] = signature(h, hp, elems[t]);
        }
        if (*sig[t] == want) {
          cands[i].push_back(t);
        }
      }
    }
    // deep signatures are costly; computed on first visit only
    auto deep_ok = [&](std::size_t i, std::size_t t) {
      if (!deep[t]) {
        deep[t] = deep_signature(h, hp, elems[t]);
      }
      return *deep[t] == want_deep[i];
    };

    std::vector<Elem> img(s);
    bool              exhausted = false;
    std::function<bool(std::size_t, fp::Subspace const&)> dfs =
        [&](std::size_t i, fp::Subspace const& span) -> bool {
      if (i == s) {
        return true;
      }
      for (auto t : cands[i]) {
        if (++res.nodes > budget) {
          exhausted = true;
          return false;
        }
        auto v = top.coords(elems[t]);
        if (span.contains(v) || !deep_ok(i, t)) {
          continue;
        }
        img[i] = elems[t];
        bool ok = true;
        for (auto const& rel : rels) {
          if (rel.at == i && !relation_holds(h, img, rel)) {
            ok = false;
            break;
          }
        }
        if (!ok) {
          continue;
        }
        auto next = span;
        next.add(v);
        if (dfs(i + 1, next)) {
          return true;
        }
        if (exhausted) {
          return false;
        }
      }
      return false;
    };
    if (dfs(0, fp::Subspace(top.dim(), h.prime()))) {
      res.verdict = IsoVerdict::yes;
      res.images  = img;
    } else {
      res.verdict = exhausted ? IsoVerdict::unknown : IsoVerdict::no;
    }
    return res;
  }

  bool verify_isomorphism(Group const& g, Group const& h, IsoResult const& r) {
    if (r.verdict != IsoVerdict::yes || g.log_order() != h.log_order()
        || r.sources.size() != r.images.size()) {
      return false;
    }
    if (r.sources.empty()) {
      return g.is_trivial() && h.is_trivial();
    }
    AdaptedBasis ab;
    ab.gens = r.sources;
    for (auto const& x : r.sources) {
      ab.order_log.push_back(g.element_order_log(x));
    }
    ab.flag_level.assign(r.sources.size(), 0);
    Quotient q(trivial_subgroup(g), ab);
    auto const& pres = q.group().presentation();
    for (std::size_t i = 0; i < r.images.size(); ++i) {
      if (h.element_order_log(r.images[i]) != pres.order_exponent(i)) {
        return false;
      }
    }
    for (auto const& rel : relations_of(pres)) {
      if (!relation_holds(h, r.images, rel)) {
        return false;
      }
    }
    return subgroup_closure(h, r.images).log_order() == h.log_order();
  }

  std::vector<CensusRecord> census(std::int64_t p, int d) {
    if (!is_prime(p)) {
      throw DomainError("census needs a prime");
    }
    int const D = d + 1;
    if (d < 0 || D * D > 9) {
      throw ScaleLimit("census is limited to (d+1)^2 <= 9");
    }
    std::vector<CensusRecord> out;
    std::vector<Group>        groups;
    for (int r = 1; r <= D; ++r) {
      for_each_orders(r, D, 1, D * D, [&](std::vector<int> const& orders) {
        std::int64_t idx = 0;
        for_each_pn_shape(p, orders, [&](Presentation const& pres) {
          auto here = idx++;
          if (pres.log_order_bound() - d < 1) {
            return;
          }
          std::optional<Group> g;
          try {
            g.emplace(pres);
          } catch (DomainError const&) {
            return;
          }
          auto cc = class_and_coclass(*g);
          if (!cc || cc->d != d || !powerful_predicates(*g).powerful) {
            return;
          }
          merge(out, groups, *g, {fingerprint(*g), pres, provenance_of(orders, here)});
        });
      });
    }
    sort_records(out);
    return out;
  }

  std::string export_record(CensusRecord const& rec) {
    return "# " + rec.provenance + "\n" + format_presentation(rec.representative)
           + "fingerprint " + rec.fingerprint.str() + "\n";
  }

  std::vector<CensusRecord> ancestors(Group const& h, int max_log,
                                      std::vector<Presentation> const& extra, bool exhaustive) {
    auto const p  = h.prime();
    auto       ch = class_and_coclass(h);
    if (!ch) {
      throw DomainError("ancestors: target is not powerfully nilpotent");
    }
    auto const fh = fingerprint(h);
    auto const nh = h.log_order();
    auto const rh = rank(h);

    std::vector<CensusRecord> out;
    std::vector<Group>        groups;
    auto consider = [&](Presentation const& pres, std::string const& prov) {
      if (pres.prime() != p || pres.log_order_bound() > max_log || pres.log_order_bound() <= nh) {
        return;
      }
      std::optional<Group> g;
      try {
        g.emplace(pres);
      } catch (DomainError const&) {
        return;
      }
      if (is_abelian_group(*g)) {
        return;
      }
      auto zp = power_subgroup(center(*g), 1);
      if (zp.log_order() != g->log_order() - nh) {
        return;
      }
      Quotient q(zp);
      if (fingerprint(q.group()) != fh) {
        return;
      }
      auto v = are_isomorphic(q.group(), h).verdict;
      if (v == IsoVerdict::unknown) {
        throw InternalError("ancestors: isomorphism test exhausted its budget");
      }
      if (v == IsoVerdict::yes) {
        merge(out, groups, *g, {fingerprint(*g), pres, prov});
      }
    };

    for (std::size_t i = 0; i < extra.size(); ++i) {
      consider(extra[i], "extra " + std::to_string(i));
    }
    if (exhaustive) {
      int const              cap = max_log - ch->c;  // r, e <= n - c(G) + 1 = n - c(H)
      std::int64_t           total = 0;
      std::vector<std::vector<int>> tuples;
      for (int r = std::max(2, rh); r <= max_log; ++r) {
        for_each_orders(r, std::max(cap, 1), nh + 1, max_log, [&](std::vector<int> const& o) {
          int n = 0;
          for (auto e : o) {
            n += e;
          }
          int lim = n - ch->c;
          if (r > lim || *std::max_element(o.begin(), o.end()) > lim) {
            return;
          }
          total += count_pn_shape(p, o);
          tuples.push_back(o);
        });
      }
      if (total > ancestor_presentation_limit) {
        throw ScaleLimit("ancestor search would scan " + std::to_string(total)
                         + " presentations");
      }
      for (auto const& o : tuples) {
        std::int64_t idx = 0;
        for_each_pn_shape(p, o, [&](Presentation const& pres) {
          consider(pres, provenance_of(o, idx++));
        });
      }
    }
    sort_records(out);
    return out;
  }

}  // namespace pnlab
