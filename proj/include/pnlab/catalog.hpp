#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pnlab/group.hpp"
#include "pnlab/presentation.hpp"

namespace pnlab::catalog {

  // <a, b : a^(3^n), b^27, [a,b] = a^(3^(n-3))>, n >= 7; a = gen 1, b = gen 2.
  Presentation sec2_ex1(int n);
  // <a, b : a^(p^n), b^(p^n), [b,a] = a^(p^2)>, n >= 2.
  Presentation sec2_ex2(std::int64_t p, int n);
  // x = gen 1 of order p^(r+1), a_i = gen i+1 of order p^i; [a_i,x] = a_{i+1}^p, [a_{r-1},x] = x^(p^2).
  Presentation sec4_ex1(std::int64_t p, int r);
  // p = 5, generators x, a, b, c, d of orders 5^6, 5, 5^2, 5^3, 5^4.
  Presentation sec4_ex2();
  // <x, a : x^9, a^3, [a,x] = x^3>: powerful, not powerfully nilpotent.
  Presentation m27();
  Presentation f2();
  Presentation cyclic(std::int64_t p, int e);
  Presentation abelian(std::int64_t p, std::vector<int> const& orders);

  // Powerful 2-groups used by the property suites.
  std::vector<std::pair<std::string, Presentation>> powerful_two_groups();
  // Every named example (fixed parameters) with its canonical file name.
  std::vector<std::pair<std::string, Presentation>> fixtures();

  // Z_{p^m} x| Z_{p^k}: (i,j)(i',j') = (i + i' u^j, j + j').
  struct OracleModel {
    std::int64_t p;
    int          m, k;
    std::int64_t u;

    OracleModel(std::int64_t p, int m, int k, std::int64_t u);
    std::int64_t                       size() const;
    std::pair<std::int64_t, std::int64_t> multiply(std::pair<std::int64_t, std::int64_t> a,
                                                   std::pair<std::int64_t, std::int64_t> b) const;
    // u^(p^k) = 1 mod p^m; otherwise the carrier is not a group and cross-checks fail
    bool                               twist_ok() const;
    bool                               associative() const;  // exhaustive, size <= 10^4
  };

  inline constexpr std::int64_t oracle_size_limit = 10'000;

  // images: oracle elements for the generators of g, in order. True iff the induced map
  // on normal forms is a bijective homomorphism.
  bool oracle_cross_check(Group const& g, OracleModel const& m,
                          std::vector<std::pair<std::int64_t, std::int64_t>> const& images);

}  // namespace pnlab::catalog
