// Element-set oracles: everything here works on explicit sets of elements
// and never touches the subgroup or quotient machinery.
#pragma once

#include <set>
#include <vector>

#include "pnlab/group.hpp"

namespace oracle {

  using pnlab::Elem;
  using pnlab::Group;
  using Set = std::set<Elem>;

  inline Set closure(Group const& g, std::vector<Elem> const& gens) {
    Set               s{g.identity()};
    std::vector<Elem> todo{g.identity()};
    while (!todo.empty()) {
      auto x = todo.back();
      todo.pop_back();
      for (auto const& y : gens) {
        auto z = g.multiply(x, y);
        if (s.insert(z).second) {
          todo.push_back(z);
        }
      }
    }
    return s;
  }

  inline Set all(Group const& g) {
    std::vector<Elem> gens;
    for (std::size_t i = 0; i < g.num_generators(); ++i) {
      gens.push_back(g.generator(i));
    }
    return closure(g, gens);
  }

  inline Set powers(Group const& g, Set const& h, int k) {
    std::vector<Elem> gens;
    std::int64_t      q = 1;
    for (int i = 0; i < k; ++i) {
      q *= g.prime();
    }
    for (auto const& x : h) {
      gens.push_back(g.power(x, q));
    }
    return closure(g, gens);
  }

  inline Set commutators(Group const& g, Set const& a, Set const& b) {
    std::vector<Elem> gens;
    for (auto const& x : a) {
      for (auto const& y : b) {
        gens.push_back(g.commutator(x, y));
      }
    }
    // [A,B] is normal when A, B are; close under conjugation to be safe
    auto s   = closure(g, gens);
    auto all_ = all(g);
    std::vector<Elem> more(s.begin(), s.end());
    for (auto const& x : s) {
      for (auto const& y : all_) {
        more.push_back(g.conjugate(x, y));
      }
    }
    return closure(g, more);
  }

  inline bool subset(Set const& a, Set const& b) {
    for (auto const& x : a) {
      if (!b.count(x)) {
        return false;
      }
    }
    return true;
  }

  inline int log_size(Group const& g, Set const& s) {
    int          k = 0;
    std::size_t n = s.size();
    while (n > 1) {
      n /= static_cast<std::size_t>(g.prime());
      ++k;
    }
    return k;
  }

  inline Set center(Group const& g) {
    auto all_ = all(g);
    Set  z;
    for (auto const& x : all_) {
      bool c = true;
      for (auto const& y : all_) {
        if (g.commutator(x, y) != g.identity()) {
          c = false;
          break;
        }
      }
      if (c) {
        z.insert(x);
      }
    }
    return z;
  }

  struct Invariants {
    int  n = 0, r = 0, e = 0;
    bool powerful = false, pn = false;
    int  c = -1, t = -1;
    bool maximal_tail = false;
    std::vector<int> upper_power_orders;
  };

  // Upper series: Z_{i+1} = { x : [x,y] in Z_i^p for all y }.
  inline Invariants invariants(Group const& g) {
    Invariants inv;
    auto const all_ = all(g);
    inv.n           = log_size(g, all_);
    auto gp         = powers(g, all_, 1);
    auto comm       = commutators(g, all_, all_);
    std::vector<Elem> phi(gp.begin(), gp.end());
    phi.insert(phi.end(), comm.begin(), comm.end());
    inv.r = inv.n - log_size(g, closure(g, phi));
    for (auto const& x : all_) {
      inv.e = std::max(inv.e, g.element_order_log(x));
    }
    inv.powerful = subset(comm, g.prime() == 2 ? powers(g, all_, 2) : gp);

    std::vector<Set> z{Set{g.identity()}};
    while (true) {
      auto zp = powers(g, z.back(), 1);
      Set  next;
      for (auto const& x : all_) {
        bool ok = true;
        for (auto const& y : all_) {
          if (!zp.count(g.commutator(x, y))) {
            ok = false;
            break;
          }
        }
        if (ok) {
          next.insert(x);
        }
      }
      if (next.size() == z.back().size()) {
        break;
      }
      z.push_back(std::move(next));
    }
    for (auto const& s : z) {
      inv.upper_power_orders.push_back(log_size(g, powers(g, s, 1)));
    }
    inv.pn = inv.powerful && z.back().size() == all_.size();
    if (inv.pn) {
      inv.c  = static_cast<int>(z.size()) - 1;
      auto const& u = inv.upper_power_orders;
      int k = 0;
      while (k + 1 < static_cast<int>(u.size()) && u[k + 1] - u[k] == 1) {
        ++k;
      }
      inv.t            = k;
      inv.maximal_tail = u[k] == log_size(g, gp);
    }
    return inv;
  }

}  // namespace oracle
