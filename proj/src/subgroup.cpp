#include "pnlab/subgroup.hpp"

#include <algorithm>
#include <optional>

#include "pnlab/errors.hpp"
#include "pnlab/fp_linalg.hpp"

namespace pnlab {

  namespace {
    int lead(Elem const& x) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != 0) {
          return static_cast<int>(i);
        }
      }
      return -1;
    }

    std::vector<Elem> group_generators(Group const& g) {
      std::vector<Elem> out;
      for (std::size_t i = 0; i < g.num_generators(); ++i) {
        out.push_back(g.generator(i));
      }
      return out;
    }
  }  // namespace

  Elem Subgroup::sift(Elem x) const {
    auto const& c = group_.collector();
    auto const  p = group_.prime();
    for (std::size_t t = 0; t < gens_.size(); ++t) {
      auto d = x[pivots_[t]];
      if (d != 0) {
        x = c.multiply(x, c.power(gens_[t], p - d));
      }
    }
    return x;
  }

  bool Subgroup::contains(Elem const& x) const {
    return group_.is_identity(sift(x));
  }

  bool Subgroup::contains(Subgroup const& other) const {
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [this](Elem const& x) { return contains(x); });
  }

  bool Subgroup::operator==(Subgroup const& other) const {
    return log_order() == other.log_order() && contains(other);
  }

  bool Subgroup::insert(Elem x) {
    x      = sift(std::move(x));
    int pc = lead(x);
    if (pc < 0) {
      return false;
    }
    x       = group_.power(x, fp::inv(x[pc], group_.prime()));
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), pc);
    gens_.insert(gens_.begin() + (it - pivots_.begin()), std::move(x));
    pivots_.insert(it, pc);
    return true;
  }

  bool Subgroup::add(Elem const& x, std::vector<Elem> const& conjugators) {
    auto const&       c = group_.collector();
    std::vector<Elem> queue;
    auto              try_insert = [&](Elem const& y) {
      if (insert(y)) {
        queue.push_back(y);
        return true;
      }
      return false;
    };
    if (!try_insert(x)) {
      return false;
    }
    while (!queue.empty()) {
      auto y = std::move(queue.back());
      queue.pop_back();
      std::vector<Elem> todo;
      todo.push_back(c.power(y, group_.prime()));
      for (auto const& z : gens_) {
        todo.push_back(c.commutator(y, z));
      }
      for (auto const& a : conjugators) {
        todo.push_back(c.conjugate(y, a));
      }
      for (auto const& t : todo) {
        try_insert(t);
      }
    }
    return true;
  }

  bool Subgroup::is_normal() const {
    for (auto const& a : group_generators(group_)) {
      for (auto const& h : gens_) {
        if (!contains(group_.conjugate(h, a))) {
          return false;
        }
      }
    }
    return true;
  }

  int Subgroup::rank() const {
    return log_order() - frattini(*this).log_order();
  }

  std::vector<Elem> Subgroup::elements(int max_log) const {
    if (log_order() > max_log) {
      throw ScaleLimit("subgroup enumeration limited to p^" + std::to_string(max_log));
    }
    std::vector<Elem> out{group_.identity()};
    // products in pivot order: extend from the last generator backwards
    for (std::size_t t = gens_.size(); t-- > 0;) {
      std::vector<Elem> next;
      next.reserve(out.size() * group_.prime());
      Elem pw = group_.identity();
      for (std::int64_t c = 0; c < group_.prime(); ++c) {
        for (auto const& x : out) {
          next.push_back(group_.multiply(pw, x));
        }
        pw = group_.multiply(pw, gens_[t]);
      }
      out = std::move(next);
    }
    return out;
  }

  Subgroup trivial_subgroup(Group const& g) {
    return Subgroup(g);
  }

  Subgroup whole_group(Group const& g) {
    Subgroup h(g);
    for (std::size_t i = 0; i < g.num_generators(); ++i) {
      h.add(g.generator(i));
    }
    return h;
  }

  Subgroup subgroup_closure(Group const& g, std::vector<Elem> const& s) {
    Subgroup h(g);
    for (auto const& x : s) {
      h.add(x);
    }
    return h;
  }

  Subgroup normal_closure(Group const& g, std::vector<Elem> const& s) {
    Subgroup h(g);
    auto     conj = group_generators(g);
    for (auto const& x : s) {
      h.add(x, conj);
    }
    return h;
  }

  Subgroup join(Subgroup const& a, Subgroup const& b) {
    Subgroup h = a;
    for (auto const& x : b.generators()) {
      h.add(x);
    }
    return h;
  }

  Subgroup commutator_subgroup(Subgroup const& a, Subgroup const& b) {
    auto const&       g = a.group();
    std::vector<Elem> conj = a.generators();
    conj.insert(conj.end(), b.generators().begin(), b.generators().end());
    Subgroup h(g);
    for (auto const& x : a.generators()) {
      for (auto const& y : b.generators()) {
        h.add(g.commutator(x, y), conj);
      }
    }
    return h;
  }

  Subgroup frattini(Subgroup const& h) {
    auto const& g    = h.group();
    auto const& gens = h.generators();
    Subgroup    f(g);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      f.add(g.power(gens[i], g.prime()), gens);
      for (std::size_t j = 0; j < i; ++j) {
        f.add(g.commutator(gens[i], gens[j]), gens);
      }
    }
    return f;
  }

  Subgroup generator_power_subgroup(Subgroup const& h, int k) {
    auto const& g = h.group();
    auto        q = ipow(g.prime(), k);
    Subgroup    out(g);
    for (auto const& x : h.generators()) {
      out.add(g.power(x, q));
    }
    return out;
  }

  Subgroup exhaustive_power_subgroup(Subgroup const& h, int k) {
    auto const& g    = h.group();
    auto        q    = ipow(g.prime(), k);
    auto const& gens = h.generators();
    Subgroup    cand(g);
    for (auto const& x : gens) {
      cand.add(g.power(x, q), gens);
    }
    while (true) {
      auto index = h.log_order() - cand.log_order();
      if (ipow(g.prime(), index) > power_subgroup_coset_limit) {
        throw DomainError("cannot certify power subgroup: index p^"
                          + std::to_string(index) + " exceeds the coset limit");
      }
      // breadth-first scan of the cosets of cand in h by canonical residue
      std::vector<Elem> reps{g.identity()};
      std::vector<Elem> seen{g.identity()};
      bool              grew = false;
      for (std::size_t at = 0; at < reps.size() && !grew; ++at) {
        auto pw = g.power(reps[at], q);
        if (!cand.contains(pw)) {
          cand.add(pw, gens);
          grew = true;
          break;
        }
        for (auto const& x : gens) {
          auto y = cand.sift(g.multiply(reps[at], x));
          if (std::find(seen.begin(), seen.end(), y) == seen.end()) {
            seen.push_back(y);
            reps.push_back(y);
          }
        }
      }
      if (!grew) {
        return cand;
      }
    }
  }

  Subgroup power_subgroup(Subgroup const& h, int k) {
    if (k == 0) {
      return h;
    }
    auto const& g = h.group();
    // certificate: [H,G] <= <gens^p> (<gens^4> for p = 2) means H is
    // powerfully embedded, hence powerful, and H^{p^k} = <gens^{p^k}>.
    auto     base = generator_power_subgroup(h, g.prime() == 2 ? 2 : 1);
    Subgroup hg   = commutator_subgroup(h, whole_group(g));
    if (base.contains(hg)) {
      return generator_power_subgroup(h, k);
    }
    return exhaustive_power_subgroup(h, k);
  }

  Subgroup group_power(Group const& g, int k) {
    return power_subgroup(whole_group(g), k);
  }

  Subgroup centralizer_mod(Subgroup const& m) {
    return centralizer_mod(m, group_generators(m.group()));
  }

  Subgroup centralizer_mod(Subgroup const& m, std::vector<Elem> const& gens) {
    auto const& g    = m.group();
    auto const& coll = g.collector();
    auto const  n    = coll.length();
    auto const  p    = g.prime();
    Subgroup    c    = whole_group(g);
    for (std::size_t t = 0; t < n; ++t) {
      if (std::binary_search(m.pivots().begin(), m.pivots().end(), static_cast<int>(t))) {
        continue;  // g_t in M G_{t+1}: this layer imposes nothing
      }
      // B = M G_{t+1}; coordinates in (M G_t)/B read off at position t
      Subgroup b = m;
      for (std::size_t u = t + 1; u < n; ++u) {
        b.add(coll.unit(u));
      }
      auto const& cg = c.generators();
      fp::Mat     rows;
      bool        all_zero = true;
      for (auto const& x : cg) {
        fp::Vec row;
        for (auto const& a : gens) {
          auto res = b.sift(g.commutator(x, a));
          row.push_back(res[t]);
          all_zero = all_zero && res[t] == 0;
        }
        rows.push_back(std::move(row));
      }
      if (all_zero) {
        continue;
      }
      Subgroup kernel = frattini(c);
      for (auto const& lam : fp::left_null_space(rows, gens.size(), p)) {
        Elem y = g.identity();
        for (std::size_t i = 0; i < cg.size(); ++i) {
          if (lam[i] != 0) {
            y = g.multiply(y, g.power(cg[i], lam[i]));
          }
        }
        kernel.add(y);
      }
      c = std::move(kernel);
    }
    return c;
  }

  Subgroup centralizer(Group const& g, std::vector<Elem> const& elems) {
    return centralizer_mod(trivial_subgroup(g), elems);
  }

  Subgroup center(Group const& g) {
    return centralizer_mod(trivial_subgroup(g));
  }

}  // namespace pnlab
