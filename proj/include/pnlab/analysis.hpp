// Powerfully nilpotent invariants: predicates, series, class and coclass,
// p-th power length, adapted generators, tails.

#ifndef PNLAB_ANALYSIS_HPP_
#define PNLAB_ANALYSIS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "pnlab/section.hpp"

namespace pnlab {

  enum class SeriesKind { upper, refinement, witness, custom };

  struct Series {
    SeriesKind            kind = SeriesKind::custom;
    std::vector<Subgroup> terms;
    // upper series: the last term is G
    bool reaches_group = false;
  };

  // H^p, or H^4 when p = 2 (the exponent used by powerful embedding).
  Subgroup embedding_power(Subgroup const& h);

  struct PowerfulFlags {
    bool powerful          = false;
    bool strongly_powerful = false;
  };
  PowerfulFlags powerful_predicates(Group const& g);
  // [H,G] <= H^p (H^4 for p = 2)
  bool is_powerfully_embedded(Subgroup const& h);
  // [H,G] <= K^p
  bool powerfully_centralized(Subgroup const& h, Subgroup const& k);
  // Ascending chain with [H_i,G] <= H_{i-1}^p at every step.
  bool is_powerfully_central(std::vector<Subgroup> const& ascending);

  // Z_0 = 1, Z_n = preimage of Z(G / Z_{n-1}^p), up to stabilization.
  Series upper_powerfully_central_series(Group const& g);

  struct PowerfulClass {
    int c = 0;
    int d = 0;
  };
  // nullopt when G is not powerfully nilpotent.
  std::optional<PowerfulClass> class_and_coclass(Group const& g);
  std::optional<PowerfulClass> class_and_coclass(Group const& g, Series const& upper);
  bool is_powerfully_nilpotent(Group const& g);

  // Smallest e with G^{p^e} = 1.
  int exponent_log(Group const& g);
  int rank(Group const& g);

  struct AdaptedGenerators {
    std::vector<Elem> gens;
    std::vector<int>  order_log;
    // H_0 = G > H_1 > ... > H_r = G^p with H_i = <a_{i+1},...,a_r> G^p
    std::vector<Subgroup> chain;
    // counts[i-1] = number of generators of order p^i, i = 1..e
    std::vector<int> counts;
    Presentation     presentation;
  };
  // Generators a_1..a_r with |G| = prod o(a_i), order-p ones first, whose
  // chain H_i is powerfully central; throws DomainError when G is not powerfully nilpotent.
  AdaptedGenerators adapted_generators(Group const& g);

  // Index-p ascending refinement of an ascending chain of normal
  // subgroups; stays powerfully central when the input is.
  Series refine_chain(std::vector<Subgroup> const& ascending);
  // The array H_i^{p^k} written ascending without repetitions.
  Series powerfully_central_refinement(Group const& g);
  Series powerfully_central_refinement(Group const& g, AdaptedGenerators const& ag);
  // Number of distinct K_i^p along an index-p powerfully central chain.
  int power_length_of(Series const& refinement);
  // Both counts (power array and refined upper series) against n - r + 1.
  int pth_power_length(Group const& g);

  struct TailInfo {
    Subgroup tail;
    int      length  = 0;
    bool     maximal = false;
  };
  TailInfo tail_analysis(Group const& g);
  TailInfo tail_analysis(Group const& g, Series const& upper);

  // Descending witness chain for c <= sum (r_j - 1) + 1; empty terms when
  // the rank is below 2. bound receives the certified class bound.
  Series class_bound_witness(Group const& g, int* bound = nullptr);

  // Descending chains H > ... > 1 with [H_i,G] <= H_{i+1}^p; |G| <= 3^7.
  inline constexpr std::int64_t hypercentral_order_limit = 2187;
  bool is_powerfully_hypercentral(Subgroup const& h);

  struct AnalysisReport {
    int  n = 0, r = 0, e = 0;
    bool powerful = false, strongly_powerful = false, pn = false;
    int  c = -1, d = -1, s = -1, t = -1;
    bool maximal_tail = false;
    std::vector<int> counts;  // s(1..e) when pn
    // orders log_p |Z_i^p| along the upper series
    std::vector<int> upper_power_orders;
  };
  AnalysisReport analyze(Group const& g);

}  // namespace pnlab

#endif  // PNLAB_ANALYSIS_HPP_
