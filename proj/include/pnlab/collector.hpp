// Collection to normal form.
//
// A presentation on a_1..a_r is refined to a polycyclic presentation on the
// generators g = a_i^{p^j} (0 <= j < e_i), each of relative order p, ordered
// by depth j first and by i second. The depth filtration is the chain of
// power subgroups G^{p^j}; for powerful-shape presentations every
// conjugate g_v^{g_u} (u < v) equals g_v times letters of strictly larger
// depth, so collection from the left terminates.
//
// The refined conjugation table is not given by the presentation. It is
// obtained as a fixed point: each round recomputes the action of a_i on the
// refined generators from the defining commutators using the previous
// table, which is exact one depth level further than before.

#ifndef PNLAB_COLLECTOR_HPP_
#define PNLAB_COLLECTOR_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "pnlab/presentation.hpp"

namespace pnlab {

  // Digits (each in [0, p)) on the refined generators; the element is
  // g_0^{d_0} g_1^{d_1} ... in refined order.
  using Elem = std::vector<std::int32_t>;

  struct RefinedGen {
    int gen;    // index i of a_i
    int depth;  // j, so the generator is a_i^{p^j}
  };

  class Collector {
   public:
    static constexpr std::uint64_t default_budget = 10'000'000;

    // Builds the refined presentation; never throws on inconsistent input
    // (see converged() and structure_ok()), only on budget exhaustion.
    explicit Collector(Presentation pres, std::uint64_t budget = default_budget);

    Presentation const&            presentation() const noexcept { return pres_; }
    std::int64_t                   prime() const noexcept { return p_; }
    std::size_t                    length() const noexcept { return gens_.size(); }
    std::vector<RefinedGen> const& refined() const noexcept { return gens_; }
    int                            max_depth() const noexcept { return max_depth_; }
    // Position of a_i^{p^j} in refined order, or -1.
    int position(int gen, int depth) const;
    // First position with depth >= j (== length() when none).
    std::size_t depth_start(int j) const;

    bool               converged() const noexcept { return converged_; }
    bool               structure_ok() const noexcept { return structure_ok_; }
    std::string const& table_note() const noexcept { return note_; }

    Elem identity() const { return Elem(length(), 0); }
    Elem unit(std::size_t pos) const;
    // a_i as a refined element
    Elem generator(std::size_t i) const;
    bool is_identity(Elem const& x) const;

    Elem multiply(Elem const& x, Elem const& y) const;
    Elem inverse(Elem const& x) const;
    Elem power(Elem const& x, std::int64_t k) const;
    // [x, y] = x^-1 y^-1 x y
    Elem commutator(Elem const& x, Elem const& y) const;
    // y^-1 x y
    Elem conjugate(Elem const& x, Elem const& y) const;

    // Product of the letters of w collected to normal form.
    Elem collect(Word const& w) const;
    Elem from_nf(ElementNF const& x) const;
    // Coordinates on a_1..a_r; exact when the presentation is consistent.
    ElementNF to_nf(Elem const& x) const;

    // Defining commutator [a_i, a_j] (j < i) as a refined element.
    Elem relation_value(std::size_t i, std::size_t j) const;
    // g_v^{g_u} for u < v, as stored.
    Elem const& conjugate_table(std::size_t v, std::size_t u) const {
      return conj_[v][u];
    }
    Elem const& power_table(std::size_t u) const { return pow_[u]; }

   private:
    struct RLetter {
      std::int32_t pos;
      std::int32_t exp;
    };

    void collect_into(Elem& state, std::vector<RLetter>& stack) const;
    void push_elem(std::vector<RLetter>& stack, Elem const& w, int times) const;
    Elem apply_images(std::vector<Elem> const& images,
                      std::vector<std::vector<Elem>>& cache,
                      Elem const& x) const;
    void build_tables();
    bool truncate_entry(Elem& e, std::size_t v) const;

    Presentation                   pres_;
    std::int64_t                   p_;
    std::uint64_t                  budget_;
    std::vector<RefinedGen>        gens_;
    std::vector<std::vector<int>>  pos_;
    int                            max_depth_ = 0;
    std::vector<Elem>              pow_;
    std::vector<std::vector<Elem>> conj_;
    std::vector<Elem>              rel_;  // rel_[i*r+j] = [a_i,a_j]
    bool                           converged_    = false;
    bool                           structure_ok_ = true;
    std::string                    note_;
  };

}  // namespace pnlab

#endif  // PNLAB_COLLECTOR_HPP_
