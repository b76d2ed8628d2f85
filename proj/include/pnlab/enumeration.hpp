// Exponent-p^2 presentation spaces P(n,x), their counts p^{h(x)}, the
// growth maximizer x(n), and orbit counting under the stabilizer action.

#ifndef PNLAB_ENUMERATION_HPP_
#define PNLAB_ENUMERATION_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pnlab/fp_linalg.hpp"
#include "pnlab/presentation.hpp"

namespace pnlab {

  // C(y,2) x + y(x-1) + (y+1)(x-2) + ... with y = n - 2x
  std::int64_t h_sum_form(std::int64_t n, std::int64_t x);
  // x (7x^2 - 9(n-1)x + 3n^2 - 6n + 2) / 6
  std::int64_t h_closed_form(std::int64_t n, std::int64_t x);
  // Both forms; throws InternalError on mismatch, DomainError unless 0 <= 2x <= n.
  std::int64_t h_value(std::int64_t n, std::int64_t x);

  // (9 + 4 sqrt 2) / 294, the limit of h(x(n)) / n^3
  double alpha_constant();
  // (9 + 4 sqrt 2) / 394, a misprinted variant of alpha
  double alpha_misprint();
  // (3 - sqrt 2) / 7, the limit of x(n) / n
  double ratio_constant();

  struct GrowthReport {
    std::int64_t              n = 0;
    std::vector<std::int64_t> h;  // h[x], 0 <= x <= n/2
    std::int64_t              x_n = 0;
    double                    x_max = 0;  // real critical point
    std::int64_t              h_max = 0;
    // h_max / n^3 in lowest terms
    std::int64_t num = 0, den = 1;
    double       normalized = 0;
    double       ratio      = 0;  // x_n / n
  };
  // Exact argmax (smallest on ties). The full table is filled when
  // with_table is set; otherwise only the candidates near x_max are used.
  GrowthReport growth_report(std::int64_t n, bool with_table = true);

  // Free coefficient slots of P(n,x): (i, j, k) meaning the exponent of
  // a_k^p in [a_i, a_j], 0-based, i > j, k > max(i, y - 1).
  struct Slot {
    int i, j, k;
  };
  std::vector<Slot> presentation_slots(std::int64_t n, std::int64_t x);

  inline constexpr double enumeration_bit_limit = 25.0;

  // Presentation with the given slot coefficients (each in [0,p)).
  Presentation slot_presentation(std::int64_t p, std::int64_t n, std::int64_t x,
                                 std::vector<Slot> const& slots,
                                 std::vector<std::int64_t> const& alpha);
  // Streams all p^{h(x)} presentations; p odd, guarded by h log2 p <= 25.
  void for_each_presentation(std::int64_t p, std::int64_t n, std::int64_t x,
                             std::function<void(Presentation const&)> const& f);
  std::vector<Presentation> enumerate_presentations(std::int64_t p, std::int64_t n,
                                                    std::int64_t x);
  // "P <n> <x> <p> = p^<h>"
  std::string count_line(std::int64_t p, std::int64_t n, std::int64_t x);

  // Invertible (n-x) square matrix over GF(p) whose row i gives the
  // coordinates of the new generator b_i; rows 0..y-1 vanish outside the
  // first y columns so the span W of the order-p generators is preserved.
  struct StabilizerMap {
    fp::Mat m;
  };
  bool preserves_w(StabilizerMap const& phi, std::int64_t n, std::int64_t x);

  // Table of [b_i, b_j] for the substituted generators, in Q(n,x) shape.
  Presentation gl_action_apply(StabilizerMap const& phi, Presentation const& pres,
                               std::int64_t x);

  struct OrbitResult {
    std::int64_t stream_size = 0;
    std::int64_t classes     = 0;
    // class index of every streamed presentation (stream order)
    std::vector<int> class_of;
    std::int64_t     q_states_visited = 0;
  };
  // Orbits of the stabilizer on P(n,x), found by searching Q(n,x).
  OrbitResult orbit_dedup(std::int64_t p, std::int64_t n, std::int64_t x,
                          std::int64_t budget = 2'000'000);

  // Every presentation with the given orders and PN shape (p odd or 2).
  void for_each_pn_shape(std::int64_t p, std::vector<int> const& orders,
                         std::function<void(Presentation const&)> const& f);
  std::int64_t count_pn_shape(std::int64_t p, std::vector<int> const& orders);

}  // namespace pnlab

#endif  // PNLAB_ENUMERATION_HPP_
