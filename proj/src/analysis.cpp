#include "pnlab/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pnlab/errors.hpp"

namespace pnlab {

  namespace {
    bool leq(Subgroup const& a, Subgroup const& b) {
      return b.contains(a);
    }

    Subgroup closure_with(std::vector<Elem> const& gens, Subgroup const& base) {
      Subgroup h = base;
      for (auto const& x : gens) {
        h.add(x);
      }
      return h;
    }

    // Reduced echelon generators; equal subgroups give equal keys.
    std::vector<std::int32_t> canonical_key(Subgroup const& h) {
      auto const& g    = h.group();
      auto const& gens = h.generators();
      auto const& piv  = h.pivots();
      std::vector<std::int32_t> key;
      for (std::size_t t = 0; t < gens.size(); ++t) {
        Elem y = gens[t];
        for (std::size_t u = t + 1; u < gens.size(); ++u) {
          auto d = y[piv[u]];
          if (d != 0) {
            y = g.multiply(y, g.power(gens[u], g.prime() - d));
          }
        }
        key.push_back(-1);
        key.insert(key.end(), y.begin(), y.end());
      }
      return key;
    }
  }  // namespace

  Subgroup embedding_power(Subgroup const& h) {
    return power_subgroup(h, h.group().prime() == 2 ? 2 : 1);
  }

  PowerfulFlags powerful_predicates(Group const& g) {
    auto          whole = whole_group(g);
    auto          comm  = commutator_subgroup(whole, whole);
    PowerfulFlags f;
    f.powerful          = leq(comm, g.prime() == 2 ? group_power(g, 2) : group_power(g, 1));
    f.strongly_powerful = leq(comm, group_power(g, 2));
    return f;
  }

  bool is_powerfully_embedded(Subgroup const& h) {
    return leq(commutator_subgroup(h, whole_group(h.group())), embedding_power(h));
  }

  bool powerfully_centralized(Subgroup const& h, Subgroup const& k) {
    return leq(commutator_subgroup(h, whole_group(h.group())), power_subgroup(k, 1));
  }

  bool is_powerfully_central(std::vector<Subgroup> const& asc) {
    for (std::size_t i = 1; i < asc.size(); ++i) {
      if (!leq(asc[i - 1], asc[i]) || !powerfully_centralized(asc[i], asc[i - 1])) {
        return false;
      }
    }
    return true;
  }

  Series upper_powerfully_central_series(Group const& g) {
    Series s;
    s.kind = SeriesKind::upper;
    s.terms.push_back(trivial_subgroup(g));
    while (true) {
      auto next = centralizer_mod(power_subgroup(s.terms.back(), 1));
      if (next.log_order() == s.terms.back().log_order()) {
        break;
      }
      s.terms.push_back(std::move(next));
    }
    s.reaches_group = s.terms.back().log_order() == g.log_order();
    return s;
  }

  std::optional<PowerfulClass> class_and_coclass(Group const& g, Series const& upper) {
    if (!upper.reaches_group) {
      return std::nullopt;
    }
    PowerfulClass pc;
    pc.c = static_cast<int>(upper.terms.size()) - 1;
    pc.d = g.log_order() - pc.c;
    return pc;
  }

  std::optional<PowerfulClass> class_and_coclass(Group const& g) {
    return class_and_coclass(g, upper_powerfully_central_series(g));
  }

  bool is_powerfully_nilpotent(Group const& g) {
    return powerful_predicates(g).powerful && upper_powerfully_central_series(g).reaches_group;
  }

  int exponent_log(Group const& g) {
    int e = 0;
    while (!group_power(g, e).is_trivial()) {
      ++e;
    }
    return e;
  }

  int rank(Group const& g) {
    return whole_group(g).rank();
  }

  namespace {
    std::vector<Subgroup> descending_chain(std::vector<Elem> const& gens,
                                           Subgroup const& gp) {
      std::vector<Subgroup> chain;
      for (std::size_t i = 0; i <= gens.size(); ++i) {
        chain.push_back(closure_with({gens.begin() + i, gens.end()}, gp));
      }
      return chain;
    }

    bool centralized_descending(std::vector<Subgroup> const& chain) {
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        if (!powerfully_centralized(chain[i], chain[i + 1])) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  AdaptedGenerators adapted_generators(Group const& g) {
    auto upper = upper_powerfully_central_series(g);
    if (!upper.reaches_group) {
      throw DomainError("adapted generators: group is not powerfully nilpotent");
    }
    auto                  gp = group_power(g, 1);
    std::vector<Subgroup> flag;
    for (std::size_t i = 1; i < upper.terms.size(); ++i) {
      flag.push_back(join(upper.terms[i], gp));
    }
    auto ab = adapted_basis(trivial_subgroup(g), flag);

    std::vector<std::size_t> plain(ab.gens.size());
    for (std::size_t i = 0; i < plain.size(); ++i) {
      plain[i] = i;
    }
    auto moved = plain;
    std::stable_partition(moved.begin(), moved.end(),
                          [&](std::size_t i) { return ab.order_log[i] == 1; });

    AdaptedGenerators out;
    bool              found = false;
    for (auto const& order : {moved, plain}) {
      std::vector<Elem> gens;
      for (auto i : order) {
        gens.push_back(ab.gens[i]);
      }
      auto chain = descending_chain(gens, gp);
      if (centralized_descending(chain)) {
        out.gens  = std::move(gens);
        out.chain = std::move(chain);
        for (auto i : order) {
          out.order_log.push_back(ab.order_log[i]);
        }
        found = true;
        break;
      }
    }
    if (!found) {
      throw InternalError("adapted generators: chain is not powerfully central");
    }

    int e = exponent_log(g);
    out.counts.assign(static_cast<std::size_t>(e), 0);
    for (auto m : out.order_log) {
      ++out.counts[static_cast<std::size_t>(m - 1)];
    }
    for (int i = 1; i <= e; ++i) {
      auto diff = group_power(g, i - 1).rank() - group_power(g, i).rank();
      if (diff != out.counts[static_cast<std::size_t>(i - 1)]) {
        throw InternalError("adapted generators: order counts disagree with power ranks");
      }
    }
    AdaptedBasis basis{out.gens, out.order_log, std::vector<int>(out.gens.size(), 0)};
    Quotient     q(trivial_subgroup(g), basis);
    out.presentation = q.group().presentation();
    return out;
  }

  Series refine_chain(std::vector<Subgroup> const& asc) {
    Series s;
    s.kind = SeriesKind::refinement;
    if (asc.empty()) {
      return s;
    }
    s.terms.push_back(asc.front());
    for (std::size_t i = 1; i < asc.size(); ++i) {
      auto const& top  = asc[i];
      auto        cur  = s.terms.back();
      auto const& gens = top.generators();
      for (std::size_t t = gens.size(); t-- > 0;) {
        if (!cur.contains(gens[t])) {
          cur.add(gens[t]);
          s.terms.push_back(cur);
        }
      }
    }
    return s;
  }

  Series powerfully_central_refinement(Group const& g, AdaptedGenerators const& ag) {
    auto const            p = g.prime();
    int                   e = static_cast<int>(ag.counts.size());
    std::vector<Subgroup> asc{trivial_subgroup(g)};
    for (int k = e - 1; k >= 0; --k) {
      auto below = group_power(g, k + 1);
      auto q     = ipow(p, k);
      for (std::size_t i = ag.gens.size() + 1; i-- > 0;) {
        std::vector<Elem> pw;
        for (std::size_t j = i; j < ag.gens.size(); ++j) {
          pw.push_back(g.power(ag.gens[j], q));
        }
        auto term = closure_with(pw, below);
        if (term.log_order() != asc.back().log_order()) {
          asc.push_back(std::move(term));
        }
      }
    }
    auto s = refine_chain(asc);
    s.reaches_group = s.terms.back().log_order() == g.log_order();
    return s;
  }

  Series powerfully_central_refinement(Group const& g) {
    return powerfully_central_refinement(g, adapted_generators(g));
  }

  int power_length_of(Series const& refinement) {
    int count = 0;
    int last  = -1;
    for (auto const& k : refinement.terms) {
      auto m = power_subgroup(k, 1).log_order();
      if (m != last) {
        ++count;
        last = m;
      }
    }
    return count;
  }

  int pth_power_length(Group const& g) {
    int  s0    = g.log_order() - rank(g) + 1;
    auto upper = upper_powerfully_central_series(g);
    if (!upper.reaches_group) {
      throw DomainError("p-th power length: group is not powerfully nilpotent");
    }
    int s1 = power_length_of(powerfully_central_refinement(g));
    int s2 = power_length_of(refine_chain(upper.terms));
    if (s1 != s0 || s2 != s0) {
      throw InternalError("p-th power length: refinements disagree with n - r + 1");
    }
    return s0;
  }

  TailInfo tail_analysis(Group const& g, Series const& upper) {
    std::vector<Subgroup> pw;
    for (auto const& z : upper.terms) {
      pw.push_back(power_subgroup(z, 1));
    }
    std::size_t t = 0;
    while (t + 1 < pw.size() && pw[t + 1].log_order() - pw[t].log_order() == 1) {
      ++t;
    }
    TailInfo info{pw[t], static_cast<int>(t), false};
    info.maximal = info.tail.log_order() == group_power(g, 1).log_order();
    return info;
  }

  TailInfo tail_analysis(Group const& g) {
    auto upper = upper_powerfully_central_series(g);
    if (!upper.reaches_group) {
      throw DomainError("tail: group is not powerfully nilpotent");
    }
    return tail_analysis(g, upper);
  }

  Series class_bound_witness(Group const& g, int* bound) {
    auto ag = adapted_generators(g);
    if (ag.gens.size() < 2) {
      throw DomainError("class bound witness: rank below 2");
    }
    int k = 0;
    while (group_power(g, k + 1).rank() >= 2) {
      ++k;
    }
    Series s;
    s.kind = SeriesKind::witness;
    for (int j = 0; j <= k; ++j) {
      auto                  below = group_power(g, j + 1);
      auto                  q     = ipow(g.prime(), j);
      std::vector<Subgroup> layer;
      for (std::size_t i = 0; i <= ag.gens.size(); ++i) {
        std::vector<Elem> pw;
        for (std::size_t t = i; t < ag.gens.size(); ++t) {
          pw.push_back(g.power(ag.gens[t], q));
        }
        auto term = closure_with(pw, below);
        if (layer.empty() || term.log_order() != layer.back().log_order()) {
          layer.push_back(std::move(term));
        }
      }
      // layer runs G^{p^j} > ... > G^{p^{j+1}} with r_j steps; drop the second
      if (layer.size() > 2) {
        layer.erase(layer.begin() + 1);
      }
      for (std::size_t i = s.terms.empty() ? 0 : 1; i < layer.size(); ++i) {
        s.terms.push_back(std::move(layer[i]));
      }
    }
    if (!s.terms.back().is_trivial()) {
      s.terms.push_back(trivial_subgroup(g));
    }
    if (!centralized_descending(s.terms)) {
      throw InternalError("class bound witness: chain is not powerfully centralized");
    }
    // one step per layer rank minus one, plus the central bottom when nontrivial
    if (bound) {
      *bound = static_cast<int>(s.terms.size()) - 1;
    }
    return s;
  }

  namespace {
    struct HyperSearch {
      Group const&                                g;
      Subgroup                                    whole;
      std::map<std::vector<std::int32_t>, bool>   memo;

      std::vector<Subgroup> maximal_normal(Subgroup const& k, Subgroup const& t) {
        auto const p   = g.prime();
        Subgroup   phi = t;
        for (auto const& x : k.generators()) {
          phi.add(g.power(x, p));
        }
        LayerBasis            layer(k, phi);
        auto const            d = layer.dim();
        std::vector<Subgroup> out;
        // hyperplanes: kernels of normalized functionals
        fp::Vec f(d, 0);
        std::int64_t total = ipow(p, static_cast<int>(d));
        for (std::int64_t code = 1; code < total; ++code) {
          std::int64_t c = code;
          for (std::size_t i = 0; i < d; ++i) {
            f[i] = c % p;
            c /= p;
          }
          auto lead = std::find_if(f.begin(), f.end(), [](auto v) { return v != 0; });
          if (*lead != 1) {
            continue;
          }
          fp::Mat col;
          for (auto v : f) {
            col.push_back({v});
          }
          Subgroup m = phi;
          for (auto const& v : fp::left_null_space(col, 1, p)) {
            Elem y = g.identity();
            for (std::size_t i = 0; i < d; ++i) {
              if (v[i] != 0) {
                y = g.multiply(y, g.power(layer.basis()[i], v[i]));
              }
            }
            m.add(y);
          }
          out.push_back(std::move(m));
        }
        return out;
      }

      bool run(Subgroup const& k) {
        if (k.is_trivial()) {
          return true;
        }
        auto key = canonical_key(k);
        if (auto it = memo.find(key); it != memo.end()) {
          return it->second;
        }
        memo[key] = false;
        auto t    = commutator_subgroup(k, whole);
        bool ok   = t.is_trivial();
        std::set<std::vector<std::int32_t>> seen;
        std::vector<Subgroup>               stack;
        auto push_children = [&](Subgroup const& m) {
          for (auto& c : maximal_normal(m, commutator_subgroup(m, whole))) {
            if (!t.is_trivial() && !leq(t, power_subgroup(c, 1))) {
              continue;
            }
            if (seen.insert(canonical_key(c)).second) {
              stack.push_back(std::move(c));
            }
          }
        };
        if (!ok) {
          push_children(k);
        }
        while (!ok && !stack.empty()) {
          auto m = std::move(stack.back());
          stack.pop_back();
          if (run(m)) {
            ok = true;
            break;
          }
          push_children(m);
        }
        memo[key] = ok;
        return ok;
      }
    };
  }  // namespace

  bool is_powerfully_hypercentral(Subgroup const& h) {
    auto const& g = h.group();
    if (g.log_order() > 62 || ipow(g.prime(), g.log_order()) > hypercentral_order_limit) {
      throw ScaleLimit("powerfully hypercentral search limited to |G| <= 3^7");
    }
    if (!h.is_normal()) {
      return h.is_trivial();
    }
    if (h.log_order() == g.log_order()) {
      return is_powerfully_nilpotent(g);
    }
    HyperSearch search{g, whole_group(g), {}};
    return search.run(h);
  }

  AnalysisReport analyze(Group const& g) {
    AnalysisReport rep;
    rep.n      = g.log_order();
    rep.r      = rank(g);
    rep.e      = exponent_log(g);
    auto flags = powerful_predicates(g);
    rep.powerful          = flags.powerful;
    rep.strongly_powerful = flags.strongly_powerful;
    auto upper            = upper_powerfully_central_series(g);
    for (auto const& z : upper.terms) {
      rep.upper_power_orders.push_back(power_subgroup(z, 1).log_order());
    }
    rep.pn = rep.powerful && upper.reaches_group;
    if (!rep.pn) {
      return rep;
    }
    auto pc = class_and_coclass(g, upper);
    rep.c   = pc->c;
    rep.d   = pc->d;
    rep.s   = pth_power_length(g);
    auto ti = tail_analysis(g, upper);
    rep.t            = ti.length;
    rep.maximal_tail = ti.maximal;
    rep.counts       = adapted_generators(g).counts;
    return rep;
  }

}  // namespace pnlab
