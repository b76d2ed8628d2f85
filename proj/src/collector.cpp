#include "pnlab/collector.hpp"

#include <algorithm>

#include "pnlab/errors.hpp"

namespace pnlab {

  Collector::Collector(Presentation pres, std::uint64_t budget)
      : pres_(std::move(pres)), p_(pres_.prime()), budget_(budget) {
    auto r = pres_.rank();
    pos_.assign(r, {});
    for (std::size_t i = 0; i < r; ++i) {
      max_depth_ = std::max(max_depth_, pres_.order_exponent(i) - 1);
    }
    for (int j = 0; j <= max_depth_; ++j) {
      for (std::size_t i = 0; i < r; ++i) {
        if (j < pres_.order_exponent(i)) {
          pos_[i].push_back(static_cast<int>(gens_.size()));
          gens_.push_back({static_cast<int>(i), j});
        }
      }
    }
    build_tables();
  }

  int Collector::position(int gen, int depth) const {
    if (gen < 0 || gen >= static_cast<int>(pos_.size()) || depth < 0
        || depth >= static_cast<int>(pos_[gen].size())) {
      return -1;
    }
    return pos_[gen][depth];
  }

  std::size_t Collector::depth_start(int j) const {
    std::size_t u = 0;
    while (u < gens_.size() && gens_[u].depth < j) {
      ++u;
    }
    return u;
  }

  Elem Collector::unit(std::size_t pos) const {
    Elem e = identity();
    e.at(pos) = 1;
    return e;
  }

  Elem Collector::generator(std::size_t i) const {
    return unit(pos_.at(i).at(0));
  }

  bool Collector::is_identity(Elem const& x) const {
    return std::all_of(x.begin(), x.end(), [](auto d) { return d == 0; });
  }

  void Collector::push_elem(std::vector<RLetter>& stack, Elem const& w, int times) const {
    for (int t = 0; t < times; ++t) {
      for (std::size_t v = w.size(); v-- > 0;) {
        if (w[v] != 0) {
          stack.push_back({static_cast<std::int32_t>(v), w[v]});
        }
      }
    }
  }

  // Collection from the left: the stack holds the letters still to be
  // multiplied onto the collected prefix `s`, top of stack first.
  void Collector::collect_into(Elem& s, std::vector<RLetter>& stack) const {
    auto const    n     = s.size();
    auto const    p     = static_cast<std::int32_t>(p_);
    std::uint64_t steps = 0;
    while (!stack.empty()) {
      auto [u, c] = stack.back();
      stack.pop_back();
      if (c == 0) {
        continue;
      }
      if (++steps > budget_) {
        throw BudgetExceeded("collection exceeded " + std::to_string(budget_)
                             + " rewrites");
      }
      std::size_t v = u + 1;
      while (v < n && s[v] == 0) {
        ++v;
      }
      if (v == n) {
        auto t = s[u] + c;
        if (t >= p) {
          s[u] = t - p;
          push_elem(stack, pow_[u], 1);
        } else {
          s[u] = t;
        }
        continue;
      }
      // g_u moves left past the tail one copy at a time:
      // tail * g_u = g_u * tail^{g_u}
      if (c > 1) {
        stack.push_back({u, c - 1});
      }
      for (std::size_t w = n; w-- > static_cast<std::size_t>(u) + 1;) {
        if (s[w] != 0) {
          push_elem(stack, conj_[w][u], s[w]);
          s[w] = 0;
        }
      }
      if (s[u] + 1 == p) {
        s[u] = 0;
        push_elem(stack, pow_[u], 1);
      } else {
        ++s[u];
      }
    }
  }

  Elem Collector::multiply(Elem const& x, Elem const& y) const {
    Elem                 s = x;
    std::vector<RLetter> stack;
    push_elem(stack, y, 1);
    collect_into(s, stack);
    return s;
  }

  Elem Collector::inverse(Elem const& x) const {
    // right-multiply x by g_u^{p - d_u} position by position until trivial
    Elem y = identity(), z = x;
    for (std::size_t u = 0; u < z.size(); ++u) {
      if (z[u] != 0) {
        std::vector<RLetter> st{{static_cast<std::int32_t>(u),
                                 static_cast<std::int32_t>(p_ - z[u])}};
        auto                 st2 = st;
        collect_into(z, st);
        collect_into(y, st2);
      }
    }
    return y;
  }

  Elem Collector::power(Elem const& x, std::int64_t k) const {
    if (k < 0) {
      return power(inverse(x), -k);
    }
    Elem result = identity(), base = x;
    while (k > 0) {
      if (k & 1) {
        result = multiply(result, base);
      }
      k >>= 1;
      if (k > 0) {
        base = multiply(base, base);
      }
    }
    return result;
  }

  Elem Collector::commutator(Elem const& x, Elem const& y) const {
    return multiply(inverse(multiply(y, x)), multiply(x, y));
  }

  Elem Collector::conjugate(Elem const& x, Elem const& y) const {
    return multiply(inverse(y), multiply(x, y));
  }

  Elem Collector::collect(Word const& w) const {
    std::vector<RLetter> stack;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      if (it->gen < 0 || it->gen >= static_cast<int>(pres_.rank())) {
        throw DomainError("word letter index out of range");
      }
      auto q = pres_.generator_order(it->gen);
      auto m = ((it->exp % q) + q) % q;
      // a_i^m = prod_j (a_i^{p^j})^{digit_j}; these commute
      std::vector<RLetter> digits;
      for (int j = 0; m > 0; ++j, m /= p_) {
        if (m % p_ != 0) {
          digits.push_back({pos_[it->gen][j], static_cast<std::int32_t>(m % p_)});
        }
      }
      stack.insert(stack.end(), digits.rbegin(), digits.rend());
    }
    Elem s = identity();
    collect_into(s, stack);
    return s;
  }

  Elem Collector::from_nf(ElementNF const& x) const {
    Word w;
    for (std::size_t i = 0; i < x.exponents.size(); ++i) {
      if (x.exponents[i] != 0) {
        w.push_back({static_cast<int>(i), x.exponents[i]});
      }
    }
    return collect(w);
  }

  ElementNF Collector::to_nf(Elem const& x) const {
    auto      r = pres_.rank();
    ElementNF out{Exponents(r, 0)};
    std::int64_t scale = 1;
    for (int k = 0; k <= max_depth_ && !gens_.empty(); ++k, scale *= p_) {
      auto z = multiply(inverse(from_nf(out)), x);
      for (std::size_t i = 0; i < r; ++i) {
        auto pos = position(static_cast<int>(i), k);
        if (pos >= 0) {
          out.exponents[i] += z[pos] * scale;
        }
      }
    }
    if (from_nf(out) != x) {
      throw InternalError("normal form conversion failed; presentation is "
                          "not consistent");
    }
    return out;
  }

  Elem Collector::relation_value(std::size_t i, std::size_t j) const {
    return rel_.at(i * pres_.rank() + j);
  }

  Elem Collector::apply_images(std::vector<Elem> const&        images,
                               std::vector<std::vector<Elem>>& cache,
                               Elem const&                     x) const {
    Elem out = identity();
    for (std::size_t v = 0; v < x.size(); ++v) {
      if (x[v] == 0) {
        continue;
      }
      auto [k, l] = gens_[v];
      auto& c     = cache[k];
      while (static_cast<int>(c.size()) <= l) {
        c.push_back(c.empty() ? images[k] : power(c.back(), p_));
      }
      out = multiply(out, power(c[l], x[v]));
    }
    return out;
  }

  bool Collector::truncate_entry(Elem& e, std::size_t v) const {
    bool ok = e[v] == 1;
    for (std::size_t w = 0; w < e.size() && gens_[w].depth <= gens_[v].depth; ++w) {
      if (w != v && e[w] != 0) {
        ok   = false;
        e[w] = 0;
      }
    }
    e[v] = 1;
    return ok;
  }

  void Collector::build_tables() {
    auto const n = gens_.size();
    auto const r = pres_.rank();
    pow_.assign(n, identity());
    conj_.assign(n, std::vector<Elem>(n));
    for (std::size_t u = 0; u < n; ++u) {
      auto next = position(gens_[u].gen, gens_[u].depth + 1);
      if (next >= 0) {
        pow_[u] = unit(next);
      }
      for (std::size_t v = u + 1; v < n; ++v) {
        conj_[v][u] = unit(v);
      }
    }
    rel_.assign(r * r, identity());

    auto relation_word = [&](std::size_t i, std::size_t j) {
      Word w;
      auto m = pres_.commutator(i, j);
      for (std::size_t k = 0; k < r; ++k) {
        if (m[k] != 0) {
          w.push_back({static_cast<int>(k), m[k]});
        }
      }
      return w;
    };

    int const max_rounds = 3 * (max_depth_ + 2) + 4;
    for (int round = 0; round < max_rounds; ++round) {
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
          rel_[i * r + j] = collect(relation_word(i, j));
        }
      }
      auto next       = conj_;
      bool shape_held = true;
      for (std::size_t i = 0; i < r; ++i) {
        // images of a_1..a_r under conjugation by a_i
        std::vector<Elem> phi(r);
        for (std::size_t k = 0; k < r; ++k) {
          if (k > i) {
            phi[k] = multiply(generator(k), rel_[k * r + i]);
          } else if (k < i) {
            phi[k] = multiply(generator(k), inverse(rel_[i * r + k]));
          } else {
            phi[k] = generator(k);
          }
        }
        auto images = phi;
        for (int j = 0; j < pres_.order_exponent(i); ++j) {
          std::vector<std::vector<Elem>> cache(r);
          if (j > 0) {
            // images of conjugation by a_i^{p^j} = (previous)^p
            auto                           base = images;
            std::vector<std::vector<Elem>> base_cache(r);
            for (std::int64_t t = 1; t < p_; ++t) {
              for (std::size_t k = 0; k < r; ++k) {
                images[k] = apply_images(base, base_cache, images[k]);
              }
            }
          }
          auto u = static_cast<std::size_t>(pos_[i][j]);
          for (std::size_t v = u + 1; v < n; ++v) {
            auto [k, l] = gens_[v];
            auto& c     = cache[k];
            while (static_cast<int>(c.size()) <= l) {
              c.push_back(c.empty() ? images[k] : power(c.back(), p_));
            }
            Elem e = c[l];
            shape_held &= truncate_entry(e, v);
            next[v][u] = std::move(e);
          }
        }
      }
      structure_ok_ = shape_held;
      if (next == conj_) {
        converged_ = true;
        break;
      }
      conj_ = std::move(next);
    }
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        rel_[i * r + j] = collect(relation_word(i, j));
      }
    }
    if (!converged_) {
      note_ = "refined conjugation table did not stabilize";
    } else if (!structure_ok_) {
      note_ = "conjugation does not respect the power filtration";
    }
  }

}  // namespace pnlab
