#include "pnlab/catalog.hpp"

#include <map>

#include "pnlab/errors.hpp"

namespace pnlab::catalog {

  namespace {
    Exponents word(std::size_t rank, std::vector<std::pair<std::size_t, std::int64_t>> letters) {
      Exponents m(rank, 0);
      for (auto [k, e] : letters) {
        m.at(k) = e;
      }
      return m;
    }

    std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t q) {
      return static_cast<std::int64_t>(static_cast<__int128>(a) * b % q);
    }

    std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t q) {
      std::int64_t r = 1 % q;
      a %= q;
      for (; e > 0; e >>= 1) {
        if (e & 1) {
          r = mulmod(r, a, q);
        }
        a = mulmod(a, a, q);
      }
      return r;
    }
  }  // namespace

  Presentation sec2_ex1(int n) {
    if (n < 7) {
      throw DomainError("sec2_ex1 needs n >= 7");
    }
    Presentation P(3, {n, 3});
    auto         q = ipow(3, n);
    // [b,a] = [a,b]^-1 = a^(-3^(n-3))
    P.set_commutator(1, 0, word(2, {{0, q - ipow(3, n - 3)}}));
    return P;
  }

  Presentation sec2_ex2(std::int64_t p, int n) {
    if (n < 2) {
      throw DomainError("sec2_ex2 needs n >= 2");
    }
    Presentation P(p, {n, n});
    P.set_commutator(1, 0, word(2, {{0, p * p}}));
    return P;
  }

  Presentation sec4_ex1(std::int64_t p, int r) {
    if (p == 2 || r < 2 || r > 4) {
      throw DomainError("sec4_ex1 needs odd p and 2 <= r <= 4");
    }
    std::vector<int> orders{r + 1};
    for (int i = 1; i < r; ++i) {
      orders.push_back(i);
    }
    Presentation P(p, orders);
    auto const   R = static_cast<std::size_t>(r);
    for (std::size_t i = 1; i < R; ++i) {
      if (i + 1 < R) {
        P.set_commutator(i, 0, word(R, {{i + 1, p}}));
      } else {
        P.set_commutator(i, 0, word(R, {{0, p * p}}));
      }
    }
    return P;
  }

  Presentation sec4_ex2() {
    Presentation P(5, {6, 1, 2, 3, 4});
    P.set_commutator(1, 0, word(5, {{2, 5}}));
    P.set_commutator(2, 0, word(5, {{3, 5}}));
    P.set_commutator(3, 0, word(5, {{4, 5}}));
    P.set_commutator(4, 0, word(5, {{0, 25}}));
    // [c,d] = c^25 d^375 rewritten as [d,c]; c, d commute with their commutator
    P.set_commutator(4, 3, word(5, {{3, 125 - 25}, {4, 625 - 375}}));
    return P;
  }

  Presentation m27() {
    Presentation P(3, {2, 1});
    P.set_commutator(1, 0, word(2, {{0, 3}}));
    return P;
  }

  Presentation f2() { return sec4_ex1(3, 2); }

  Presentation cyclic(std::int64_t p, int e) { return Presentation(p, {e}); }

  Presentation abelian(std::int64_t p, std::vector<int> const& orders) {
    return Presentation(p, orders);
  }

  std::vector<std::pair<std::string, Presentation>> powerful_two_groups() {
    std::vector<std::pair<std::string, Presentation>> out;
    Presentation                                      a(2, {3, 1});
    a.set_commutator(1, 0, word(2, {{0, 4}}));
    out.emplace_back("two_m16.pg", a);
    Presentation b(2, {4, 2});
    b.set_commutator(1, 0, word(2, {{0, 4}}));
    out.emplace_back("two_x16_a4.pg", b);
    Presentation c(2, {4, 1});
    c.set_commutator(1, 0, word(2, {{0, 8}}));
    out.emplace_back("two_x16_a2.pg", c);
    Presentation d(2, {3, 1, 1});
    d.set_commutator(1, 0, word(3, {{0, 4}}));
    d.set_commutator(2, 0, word(3, {{0, 4}}));
    out.emplace_back("two_x8_a2_b2.pg", d);
    return out;
  }

  std::vector<std::pair<std::string, Presentation>> fixtures() {
    std::vector<std::pair<std::string, Presentation>> out;
    out.emplace_back("sec2ex1_n7.pg", sec2_ex1(7));
    out.emplace_back("sec2ex1_n8.pg", sec2_ex1(8));
    for (int n = 2; n <= 5; ++n) {
      out.emplace_back("sec2ex2_p3_n" + std::to_string(n) + ".pg", sec2_ex2(3, n));
    }
    for (int r = 2; r <= 4; ++r) {
      out.emplace_back("sec4ex1_p3_r" + std::to_string(r) + ".pg", sec4_ex1(3, r));
    }
    out.emplace_back("sec4ex2.pg", sec4_ex2());
    out.emplace_back("m27.pg", m27());
    out.emplace_back("c81xc27.pg", abelian(3, {4, 3}));
    for (auto& f : powerful_two_groups()) {
      out.push_back(std::move(f));
    }
    return out;
  }

  OracleModel::OracleModel(std::int64_t p_, int m_, int k_, std::int64_t u_)
      : p(p_), m(m_), k(k_), u(u_) {
    auto pm = ipow(p, m);
    if (ipow(p, m + k) > oracle_size_limit) {
      throw ScaleLimit("oracle carrier exceeds 10^4 elements");
    }
    u = ((u % pm) + pm) % pm;
    if (u % p == 0) {
      throw DomainError("oracle twist must be a unit");
    }
  }

  bool OracleModel::twist_ok() const {
    return powmod(u, ipow(p, k), ipow(p, m)) == 1 % ipow(p, m);
  }

  std::int64_t OracleModel::size() const { return ipow(p, m + k); }

  std::pair<std::int64_t, std::int64_t> OracleModel::multiply(
      std::pair<std::int64_t, std::int64_t> a, std::pair<std::int64_t, std::int64_t> b) const {
    auto pm = ipow(p, m), pk = ipow(p, k);
    return {(a.first + mulmod(b.first, powmod(u, a.second, pm), pm)) % pm,
            (a.second + b.second) % pk};
  }

  bool OracleModel::associative() const {
    auto pm = ipow(p, m), pk = ipow(p, k);
    std::vector<std::pair<std::int64_t, std::int64_t>> all;
    for (std::int64_t i = 0; i < pm; ++i) {
      for (std::int64_t j = 0; j < pk; ++j) {
        all.emplace_back(i, j);
      }
    }
    // generators suffice: associativity for (x, y, g) over generators g of the carrier
    std::pair<std::int64_t, std::int64_t> gens[] = {{1 % pm, 0}, {0, 1 % pk}};
    for (auto const& x : all) {
      for (auto const& y : all) {
        for (auto const& g : gens) {
          if (multiply(multiply(x, y), g) != multiply(x, multiply(y, g))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool oracle_cross_check(Group const& g, OracleModel const& m,
                          std::vector<std::pair<std::int64_t, std::int64_t>> const& images) {
    auto const& pres = g.presentation();
    if (images.size() != pres.rank() || g.log_order() != m.m + m.k) {
      return false;
    }
    if (m.size() > oracle_size_limit) {
      throw ScaleLimit("oracle cross-check limited to 10^4 elements");
    }
    using Pt = std::pair<std::int64_t, std::int64_t>;
    auto power = [&](Pt x, std::int64_t e) {
      Pt r{0, 0};
      for (std::int64_t i = 0; i < e; ++i) {
        r = m.multiply(r, x);
      }
      return r;
    };
    auto elems = g.elements(12);
    std::vector<Pt>  img(elems.size());
    std::map<Pt, int> seen;
    std::map<Exponents, std::size_t> index;
    for (std::size_t t = 0; t < elems.size(); ++t) {
      auto nf = g.to_nf(elems[t]);
      Pt   r{0, 0};
      for (std::size_t i = 0; i < nf.exponents.size(); ++i) {
        r = m.multiply(r, power(images[i], nf.exponents[i]));
      }
      img[t] = r;
      if (seen[r]++) {
        return false;
      }
      index[nf.exponents] = t;
    }
    if (static_cast<std::int64_t>(seen.size()) != m.size()) {
      return false;
    }
    for (std::size_t a = 0; a < elems.size(); ++a) {
      for (std::size_t b = 0; b < elems.size(); ++b) {
        auto prod = index.at(g.to_nf(g.multiply(elems[a], elems[b])).exponents);
        if (img[prod] != m.multiply(img[a], img[b])) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace pnlab::catalog
