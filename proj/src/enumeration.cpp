#include "pnlab/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "pnlab/errors.hpp"

namespace pnlab {

  namespace {
    void check_domain(std::int64_t n, std::int64_t x) {
      if (x < 0 || 2 * x > n) {
        throw DomainError("h(x) requires 0 <= 2x <= n");
      }
    }

    std::int64_t primitive_root(std::int64_t p) {
      for (std::int64_t g = 2; g < p; ++g) {
        std::int64_t v   = g;
        std::int64_t ord = 1;
        while (v != 1) {
          v = v * g % p;
          ++ord;
        }
        if (ord == p - 1) {
          return g;
        }
      }
      return 1;
    }
  }  // namespace

  double alpha_constant() {
    return (9.0 + 4.0 * std::sqrt(2.0)) / 294.0;
  }

  double alpha_misprint() {
    return (9.0 + 4.0 * std::sqrt(2.0)) / 394.0;
  }

  double ratio_constant() {
    return (3.0 - std::sqrt(2.0)) / 7.0;
  }

  std::int64_t h_sum_form(std::int64_t n, std::int64_t x) {
    check_domain(n, x);
    std::int64_t y   = n - 2 * x;
    std::int64_t sum = y * (y - 1) / 2 * x;
    for (std::int64_t t = 1; t <= x; ++t) {
      sum += (y + t - 1) * (x - t);
    }
    return sum;
  }

  std::int64_t h_closed_form(std::int64_t n, std::int64_t x) {
    check_domain(n, x);
    __int128 nn = n, xx = x;
    __int128 v  = xx * (7 * xx * xx - 9 * (nn - 1) * xx + 3 * nn * nn - 6 * nn + 2);
    if (v % 6 != 0) {
      throw InternalError("closed form of h(x) is not an integer");
    }
    return static_cast<std::int64_t>(v / 6);
  }

  std::int64_t h_value(std::int64_t n, std::int64_t x) {
    auto a = h_sum_form(n, x);
    auto b = h_closed_form(n, x);
    if (a != b) {
      throw InternalError("h(x): sum form " + std::to_string(a) + " != closed form "
                          + std::to_string(b));
    }
    return a;
  }

  GrowthReport growth_report(std::int64_t n, bool with_table) {
    if (n < 2) {
      throw DomainError("growth report requires n >= 2");
    }
    GrowthReport g;
    g.n          = n;
    double m     = static_cast<double>(n - 1);
    g.x_max      = 3.0 / 7.0 * m - std::sqrt(2.0 / 49.0 * m * m + 1.0 / 21.0);
    auto const hi = n / 2;
    std::vector<std::int64_t> cand;
    if (with_table) {
      for (std::int64_t x = 0; x <= hi; ++x) {
        g.h.push_back(h_value(n, x));
        cand.push_back(x);
      }
    } else {
      auto f = static_cast<std::int64_t>(std::floor(g.x_max));
      for (auto x : {std::int64_t{0}, f - 1, f, f + 1, f + 2, hi}) {
        if (x >= 0 && x <= hi) {
          cand.push_back(x);
        }
      }
      std::sort(cand.begin(), cand.end());
      cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    }
    g.x_n   = cand.front();
    g.h_max = h_value(n, g.x_n);
    for (auto x : cand) {
      auto v = with_table ? g.h[static_cast<std::size_t>(x)] : h_value(n, x);
      if (v > g.h_max) {
        g.h_max = v;
        g.x_n   = x;
      }
    }
    std::int64_t den = n * n * n;
    std::int64_t d   = std::gcd(g.h_max, den);
    g.num            = g.h_max / d;
    g.den            = den / d;
    g.normalized     = static_cast<double>(g.h_max) / static_cast<double>(den);
    g.ratio          = static_cast<double>(g.x_n) / static_cast<double>(n);
    return g;
  }

  std::vector<Slot> presentation_slots(std::int64_t n, std::int64_t x) {
    check_domain(n, x);
    int const         r = static_cast<int>(n - x);
    int const         y = static_cast<int>(n - 2 * x);
    std::vector<Slot> out;
    for (int i = 1; i < r; ++i) {
      for (int j = 0; j < i; ++j) {
        for (int k = std::max(i + 1, y); k < r; ++k) {
          out.push_back({i, j, k});
        }
      }
    }
    return out;
  }

  Presentation slot_presentation(std::int64_t p, std::int64_t n, std::int64_t x,
                                 std::vector<Slot> const& slots,
                                 std::vector<std::int64_t> const& alpha) {
    int const        r = static_cast<int>(n - x);
    int const        y = static_cast<int>(n - 2 * x);
    std::vector<int> orders(static_cast<std::size_t>(r), 1);
    for (int k = y; k < r; ++k) {
      orders[static_cast<std::size_t>(k)] = 2;
    }
    Presentation pres(p, orders);
    std::size_t  s = 0;
    while (s < slots.size()) {
      auto      i = slots[s].i, j = slots[s].j;
      Exponents m(static_cast<std::size_t>(r), 0);
      for (; s < slots.size() && slots[s].i == i && slots[s].j == j; ++s) {
        m[static_cast<std::size_t>(slots[s].k)] = p * alpha[s];
      }
      pres.set_commutator(static_cast<std::size_t>(i), static_cast<std::size_t>(j), m);
    }
    return pres;
  }

  void for_each_presentation(std::int64_t p, std::int64_t n, std::int64_t x,
                             std::function<void(Presentation const&)> const& f) {
    if (p == 2 || !is_prime(p)) {
      throw DomainError("presentation streams need an odd prime");
    }
    auto h = h_value(n, x);
    if (static_cast<double>(h) * std::log2(static_cast<double>(p)) > enumeration_bit_limit) {
      throw ScaleLimit("stream of p^" + std::to_string(h) + " presentations exceeds the guard");
    }
    auto                      slots = presentation_slots(n, x);
    std::vector<std::int64_t> alpha(slots.size(), 0);
    while (true) {
      f(slot_presentation(p, n, x, slots, alpha));
      std::size_t t = 0;
      while (t < alpha.size() && ++alpha[t] == p) {
        alpha[t++] = 0;
      }
      if (t == alpha.size()) {
        break;
      }
    }
  }

  std::vector<Presentation> enumerate_presentations(std::int64_t p, std::int64_t n,
                                                    std::int64_t x) {
    std::vector<Presentation> out;
    for_each_presentation(p, n, x, [&](Presentation const& pr) { out.push_back(pr); });
    return out;
  }

  std::string count_line(std::int64_t p, std::int64_t n, std::int64_t x) {
    std::ostringstream out;
    out << "P " << n << ' ' << x << ' ' << p << " = " << p << '^' << h_value(n, x);
    return out.str();
  }

  bool preserves_w(StabilizerMap const& phi, std::int64_t n, std::int64_t x) {
    auto const r = static_cast<std::size_t>(n - x);
    auto const y = static_cast<std::size_t>(n - 2 * x);
    if (phi.m.size() != r) {
      return false;
    }
    for (std::size_t i = 0; i < y; ++i) {
      for (std::size_t j = y; j < r; ++j) {
        if (phi.m[i][j] != 0) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    // alpha[(pair(i,j)) * x + u] = exponent of a_{y+u}^p in [a_i, a_j] (i > j)
    std::size_t pair_index(std::size_t i, std::size_t j) {
      return i * (i - 1) / 2 + j;
    }

    std::vector<std::int64_t> act(fp::Mat const& phi, fp::Mat const& dinv,
                                  std::vector<std::int64_t> const& alpha, std::size_t r,
                                  std::size_t x, std::int64_t p) {
      std::vector<std::int64_t> out(alpha.size(), 0);
      std::vector<std::int64_t> c(x);
      for (std::size_t i = 1; i < r; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
          std::fill(c.begin(), c.end(), 0);
          for (std::size_t k = 1; k < r; ++k) {
            for (std::size_t l = 0; l < k; ++l) {
              // B(k,l) = alpha, B(l,k) = -alpha
              auto w = (phi[i][k] * phi[j][l] - phi[i][l] * phi[j][k]) % p;
              if (w == 0) {
                continue;
              }
              auto base = pair_index(k, l) * x;
              for (std::size_t u = 0; u < x; ++u) {
                c[u] = (c[u] + w * alpha[base + u]) % p;
              }
            }
          }
          auto base = pair_index(i, j) * x;
          for (std::size_t s = 0; s < x; ++s) {
            std::int64_t g = 0;
            for (std::size_t u = 0; u < x; ++u) {
              g = (g + c[u] * dinv[u][s]) % p;
            }
            out[base + s] = fp::mod(g, p);
          }
        }
      }
      return out;
    }

    fp::Mat lower_block_inverse(fp::Mat const& phi, std::size_t y, std::size_t x,
                                std::int64_t p) {
      fp::Mat d(x, fp::Vec(x));
      for (std::size_t a = 0; a < x; ++a) {
        for (std::size_t b = 0; b < x; ++b) {
          d[a][b] = phi[y + a][y + b];
        }
      }
      auto inv = fp::inverse(d, p);
      if (!inv) {
        throw DomainError("stabilizer map is singular");
      }
      return *inv;
    }
  }  // namespace

  Presentation gl_action_apply(StabilizerMap const& phi, Presentation const& pres,
                               std::int64_t x) {
    auto const p = pres.prime();
    auto const r = pres.rank();
    auto const n = static_cast<std::int64_t>(r) + x;
    auto const y = r - static_cast<std::size_t>(x);
    if (!preserves_w(phi, n, x) || !fp::inverse(phi.m, p)) {
      throw DomainError("map does not preserve the order-p subspace");
    }
    auto const                xs = static_cast<std::size_t>(x);
    std::vector<std::int64_t> alpha(r * (r - 1) / 2 * xs, 0);
    for (auto const& [ij, m] : pres.commutator_table()) {
      for (std::size_t u = 0; u < xs; ++u) {
        alpha[pair_index(ij.first, ij.second) * xs + u] = m[y + u] / p % p;
      }
    }
    fp::Mat ph = phi.m;
    for (auto& row : ph) {
      for (auto& v : row) {
        v = fp::mod(v, p);
      }
    }
    auto out = act(ph, lower_block_inverse(ph, y, xs, p), alpha, r, xs, p);
    Presentation res(p, pres.orders());
    for (std::size_t i = 1; i < r; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        Exponents m(r, 0);
        for (std::size_t u = 0; u < xs; ++u) {
          m[y + u] = p * out[pair_index(i, j) * xs + u];
        }
        res.set_commutator(i, j, m);
      }
    }
    return res;
  }

  OrbitResult orbit_dedup(std::int64_t p, std::int64_t n, std::int64_t x,
                          std::int64_t budget) {
    if (p == 2 || !is_prime(p)) {
      throw DomainError("orbit counting needs an odd prime");
    }
    check_domain(n, x);
    auto const r   = static_cast<std::size_t>(n - x);
    auto const y   = static_cast<std::size_t>(n - 2 * x);
    auto const xs  = static_cast<std::size_t>(x);
    auto const len = r * (r - 1) / 2 * xs;
    if (static_cast<double>(len) * std::log2(static_cast<double>(p)) > 40
        || ipow(p, static_cast<int>(len)) > budget) {
      throw ScaleLimit("Q(n,x) is too large for orbit counting");
    }
    std::int64_t const qsize = ipow(p, static_cast<int>(len));

    // stabilizer generators: allowed transvections and diagonal scalings
    std::vector<fp::Mat> gens;
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t b = 0; b < r; ++b) {
        if (a != b && !(a < y && b >= y)) {
          auto m  = fp::identity(r);
          m[a][b] = 1;
          gens.push_back(std::move(m));
        }
      }
      auto m  = fp::identity(r);
      m[a][a] = primitive_root(p);
      if (m[a][a] != 1) {
        gens.push_back(std::move(m));
      }
    }
    std::vector<fp::Mat> dinvs;
    for (auto const& g : gens) {
      dinvs.push_back(lower_block_inverse(g, y, xs, p));
    }

    auto encode = [&](std::vector<std::int64_t> const& a) {
      std::int64_t c = 0;
      for (std::size_t t = len; t-- > 0;) {
        c = c * p + a[t];
      }
      return c;
    };
    auto decode = [&](std::int64_t c) {
      std::vector<std::int64_t> a(len);
      for (std::size_t t = 0; t < len; ++t) {
        a[t] = c % p;
        c /= p;
      }
      return a;
    };

    OrbitResult       res;
    std::vector<int>  orbit(static_cast<std::size_t>(qsize), -1);
    std::vector<int>  class_id;  // orbit id -> class index
    auto              slots = presentation_slots(n, x);
    std::vector<std::int64_t> alpha(slots.size(), 0);
    int               orbits = 0;
    while (true) {
      std::vector<std::int64_t> q(len, 0);
      for (std::size_t s = 0; s < slots.size(); ++s) {
        auto u = static_cast<std::size_t>(slots[s].k) - y;
        q[pair_index(static_cast<std::size_t>(slots[s].i),
                     static_cast<std::size_t>(slots[s].j)) * xs + u] = alpha[s];
      }
      auto code = encode(q);
      if (orbit[static_cast<std::size_t>(code)] < 0) {
        int                       id = orbits++;
        std::vector<std::int64_t> queue{code};
        orbit[static_cast<std::size_t>(code)] = id;
        for (std::size_t at = 0; at < queue.size(); ++at) {
          auto cur = decode(queue[at]);
          for (std::size_t g = 0; g < gens.size(); ++g) {
            auto nxt = encode(act(gens[g], dinvs[g], cur, r, xs, p));
            if (orbit[static_cast<std::size_t>(nxt)] < 0) {
              orbit[static_cast<std::size_t>(nxt)] = id;
              queue.push_back(nxt);
            }
          }
        }
        res.q_states_visited += static_cast<std::int64_t>(queue.size());
        class_id.push_back(-1);
      }
      auto  id = orbit[static_cast<std::size_t>(code)];
      auto& ci = class_id[static_cast<std::size_t>(id)];
      if (ci < 0) {
        ci = static_cast<int>(res.classes++);
      }
      res.class_of.push_back(ci);
      ++res.stream_size;

      std::size_t t = 0;
      while (t < alpha.size() && ++alpha[t] == p) {
        alpha[t++] = 0;
      }
      if (t == alpha.size()) {
        break;
      }
    }
    return res;
  }

  namespace {
    struct PnSlot {
      std::size_t  i, j, k;
      std::int64_t step, count;
    };

    std::vector<PnSlot> pn_slots(std::int64_t p, std::vector<int> const& orders) {
      std::vector<PnSlot> out;
      auto const          r = orders.size();
      std::int64_t const  q = p == 2 ? 4 : p;
      for (std::size_t i = 1; i < r; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
          for (std::size_t k = 0; k < r; ++k) {
            auto step  = k <= i ? std::max(q, p * p) : q;
            auto order = ipow(p, orders[k]);
            if (step < order) {
              out.push_back({i, j, k, step, order / step});
            }
          }
        }
      }
      return out;
    }
  }  // namespace

  std::int64_t count_pn_shape(std::int64_t p, std::vector<int> const& orders) {
    std::int64_t total = 1;
    for (auto const& s : pn_slots(p, orders)) {
      total *= s.count;
      if (total > (std::int64_t{1} << 40)) {
        return total;
      }
    }
    return total;
  }

  void for_each_pn_shape(std::int64_t p, std::vector<int> const& orders,
                         std::function<void(Presentation const&)> const& f) {
    auto                      slots = pn_slots(p, orders);
    std::vector<std::int64_t> digit(slots.size(), 0);
    while (true) {
      Presentation pres(p, orders);
      std::size_t  s = 0;
      while (s < slots.size()) {
        auto      i = slots[s].i, j = slots[s].j;
        Exponents m(orders.size(), 0);
        for (; s < slots.size() && slots[s].i == i && slots[s].j == j; ++s) {
          m[slots[s].k] = slots[s].step * digit[s];
        }
        pres.set_commutator(i, j, m);
      }
      f(pres);
      std::size_t t = 0;
      while (t < digit.size() && ++digit[t] == slots[t].count) {
        digit[t++] = 0;
      }
      if (t == digit.size()) {
        break;
      }
    }
  }

}  // namespace pnlab
