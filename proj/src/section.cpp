#include "pnlab/section.hpp"

#include <algorithm>
#include <numeric>

#include "pnlab/errors.hpp"

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

    Elem combine(Group const& g, std::vector<Elem> const& basis, fp::Vec const& v) {
      Elem y = g.identity();
      for (std::size_t t = 0; t < basis.size(); ++t) {
        if (v[t] != 0) {
          y = g.multiply(y, g.power(basis[t], v[t]));
        }
      }
      return y;
    }

    // Largest k with x in levels[k].
    std::size_t depth_in(std::vector<Subgroup> const& levels, Elem const& x) {
      std::size_t k = 0;
      while (k + 1 < levels.size() && levels[k + 1].contains(x)) {
        ++k;
      }
      return k;
    }
  }  // namespace

  LayerBasis::LayerBasis(Subgroup const& a, Subgroup b) : bottom_(std::move(b)) {
    auto const& bp = bottom_.pivots();
    for (std::size_t t = 0; t < a.generators().size(); ++t) {
      if (!std::binary_search(bp.begin(), bp.end(), a.pivots()[t])) {
        basis_.push_back(a.generators()[t]);
        pos_.push_back(a.pivots()[t]);
      }
    }
  }

  fp::Vec LayerBasis::coords(Elem const& x) const {
    auto const& g = bottom_.group();
    auto const  p = g.prime();
    fp::Vec     c(basis_.size(), 0);
    Elem        r = bottom_.sift(x);
    for (int pc = lead(r); pc >= 0; pc = lead(r)) {
      auto it = std::find(pos_.begin(), pos_.end(), pc);
      if (it == pos_.end()) {
        throw InternalError("layer coordinates: element outside the section");
      }
      auto t = static_cast<std::size_t>(it - pos_.begin());
      auto d = r[pc];
      c[t]   = d;
      r      = bottom_.sift(g.multiply(r, g.power(basis_[t], p - d)));
    }
    return c;
  }

  fp::Subspace LayerBasis::span_of(std::vector<Elem> const& xs) const {
    fp::Subspace s(dim(), bottom_.group().prime());
    for (auto const& x : xs) {
      s.add(coords(x));
    }
    return s;
  }

  std::vector<Subgroup> power_filtration(Subgroup const& n) {
    auto const&           g = n.group();
    std::vector<Subgroup> levels{whole_group(g)};
    for (int k = 1; levels.back().log_order() > n.log_order(); ++k) {
      levels.push_back(join(group_power(g, k), n));
    }
    return levels;
  }

  AdaptedBasis adapted_basis(Subgroup const& n, std::vector<Subgroup> const& flag) {
    auto const& g      = n.group();
    auto const  p      = g.prime();
    auto        levels = power_filtration(n);
    auto const  e      = levels.size() - 1;
    AdaptedBasis out;
    if (e == 0) {
      return out;
    }
    std::vector<LayerBasis> layers;
    for (std::size_t k = 0; k < e; ++k) {
      layers.emplace_back(levels[k], levels[k + 1]);
    }
    auto const& l0 = layers[0];

    // kernel flag V_1 <= ... <= V_e of the power maps on G/G^pN
    std::vector<fp::Subspace> kernels;
    for (std::size_t k = 1; k <= e; ++k) {
      fp::Subspace v(l0.dim(), p);
      if (k == e) {
        v = fp::Subspace::whole(l0.dim(), p);
      } else {
        fp::Mat rows;
        auto    q = ipow(p, static_cast<int>(k));
        for (auto const& h : l0.basis()) {
          rows.push_back(layers[k].coords(g.power(h, q)));
        }
        for (auto const& r : fp::left_null_space(rows, layers[k].dim(), p)) {
          v.add(r);
        }
      }
      kernels.push_back(std::move(v));
    }
    std::vector<fp::Subspace> ws;
    for (auto const& f : flag) {
      ws.push_back(l0.span_of(f.generators()));
    }
    if (ws.empty() || ws.back().dim() != l0.dim()) {
      ws.push_back(fp::Subspace::whole(l0.dim(), p));
    }

    struct Pick {
      fp::Vec v;
      int     order;
      int     level;
    };
    std::vector<Pick> picks;
    fp::Subspace      span(l0.dim(), p);
    for (std::size_t k = 0; k < kernels.size(); ++k) {
      for (std::size_t i = 0; i < ws.size(); ++i) {
        auto meet = kernels[k].intersect(ws[i]);
        for (auto const& v : meet.basis()) {
          if (span.add(v)) {
            picks.push_back({v, static_cast<int>(k + 1), static_cast<int>(i)});
          }
        }
      }
    }
    std::stable_sort(picks.begin(), picks.end(), [](Pick const& a, Pick const& b) {
      return a.level != b.level ? a.level > b.level : a.order < b.order;
    });

    for (auto const& pk : picks) {
      Elem b = combine(g, l0.basis(), pk.v);
      auto q = ipow(p, pk.order);
      // correct b by elements of G^p N until b^{p^m} lies in N
      bool done = false;
      for (int it = 0; it < 4 * static_cast<int>(e) + 8 && !done; ++it) {
        Elem w = g.power(b, q);
        if (n.contains(w)) {
          done = true;
          break;
        }
        auto j = depth_in(levels, w);
        auto m = static_cast<std::size_t>(pk.order);
        if (j < m + 1 || j - m >= e) {
          break;
        }
        auto const& src = layers[j - m];
        fp::Mat     rows;
        for (auto const& h : src.basis()) {
          rows.push_back(layers[j].coords(g.power(h, q)));
        }
        auto u = fp::solve_rows(rows, layers[j].coords(w), p);
        if (!u) {
          break;
        }
        b = g.multiply(b, g.inverse(combine(g, src.basis(), *u)));
      }
      if (!done) {
        throw InternalError("adapted basis: cannot lift a generator to its exact order");
      }
      out.gens.push_back(std::move(b));
      out.order_log.push_back(pk.order);
      out.flag_level.push_back(pk.level);
    }
    auto total = std::accumulate(out.order_log.begin(), out.order_log.end(), 0);
    if (total != g.log_order() - n.log_order()) {
      throw InternalError("adapted basis: order product does not match the quotient order");
    }
    return out;
  }

  Quotient::Quotient(Subgroup n) : kernel_(std::move(n)) {
    if (!kernel_.is_normal()) {
      throw DomainError("quotient: subgroup is not normal");
    }
    basis_ = adapted_basis(kernel_);
    build();
  }

  Quotient::Quotient(Subgroup n, AdaptedBasis basis)
      : kernel_(std::move(n)), basis_(std::move(basis)) {
    if (!kernel_.is_normal()) {
      throw DomainError("quotient: subgroup is not normal");
    }
    build();
  }

  void Quotient::build() {
    auto const& g = kernel_.group();
    auto const  p = g.prime();
    levels_       = power_filtration(kernel_);
    auto const e  = levels_.size() - 1;
    for (std::size_t k = 0; k < e; ++k) {
      layers_.emplace_back(levels_[k], levels_[k + 1]);
      fp::Mat          rows;
      std::vector<int> idx;
      auto             q = ipow(p, static_cast<int>(k));
      for (std::size_t i = 0; i < basis_.gens.size(); ++i) {
        if (basis_.order_log[i] > static_cast<int>(k)) {
          idx.push_back(static_cast<int>(i));
          rows.push_back(layers_[k].coords(g.power(basis_.gens[i], q)));
        }
      }
      fp::Subspace s(layers_[k].dim(), p);
      for (auto const& r : rows) {
        s.add(r);
      }
      if (s.dim() != layers_[k].dim() || rows.size() != s.dim()) {
        throw InternalError("quotient: basis is not adapted to the power filtration");
      }
      layer_rows_.push_back(std::move(rows));
      layer_idx_.push_back(std::move(idx));
    }
    Presentation pres(p, basis_.order_log);
    auto const   s = basis_.gens.size();
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        auto c = coordinates(g.commutator(basis_.gens[i], basis_.gens[j]));
        pres.set_commutator(i, j, c.exponents);
      }
    }
    group_ = std::make_shared<Group>(std::move(pres));
  }

  ElementNF Quotient::coordinates(Elem const& x) const {
    auto const& g = kernel_.group();
    auto const  p = g.prime();
    auto const  s = basis_.gens.size();
    Exponents   l(s, 0);
    for (std::size_t it = 0; it <= levels_.size(); ++it) {
      Elem y = g.identity();
      for (std::size_t i = 0; i < s; ++i) {
        if (l[i] != 0) {
          y = g.multiply(y, g.power(basis_.gens[i], l[i]));
        }
      }
      Elem w = g.multiply(g.inverse(y), x);
      if (kernel_.contains(w)) {
        return ElementNF{l};
      }
      auto k   = depth_in(levels_, w);
      auto lam = fp::solve_rows(layer_rows_[k], layers_[k].coords(w), p);
      if (!lam) {
        throw InternalError("quotient coordinates: layer solve failed");
      }
      auto q = ipow(p, static_cast<int>(k));
      for (std::size_t t = 0; t < lam->size(); ++t) {
        auto i  = static_cast<std::size_t>(layer_idx_[k][t]);
        auto om = ipow(p, basis_.order_log[i]);
        l[i]    = ((l[i] + q * (*lam)[t]) % om + om) % om;
      }
    }
    throw InternalError("quotient coordinates: no convergence");
  }

  Elem Quotient::project(Elem const& x) const {
    return group_->from_nf(coordinates(x));
  }

  Subgroup Quotient::project(Subgroup const& h) const {
    std::vector<Elem> imgs;
    for (auto const& x : h.generators()) {
      imgs.push_back(project(x));
    }
    return subgroup_closure(*group_, imgs);
  }

  Elem Quotient::lift(Elem const& y) const {
    auto const& g  = kernel_.group();
    auto        nf = group_->to_nf(y);
    Elem        x  = g.identity();
    for (std::size_t i = 0; i < nf.exponents.size(); ++i) {
      if (nf.exponents[i] != 0) {
        x = g.multiply(x, g.power(basis_.gens[i], nf.exponents[i]));
      }
    }
    return x;
  }

  Subgroup Quotient::preimage(Subgroup const& h) const {
    Subgroup out = kernel_;
    for (auto const& y : h.generators()) {
      out.add(lift(y));
    }
    return out;
  }

}  // namespace pnlab
