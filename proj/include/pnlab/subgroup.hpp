// Subgroups as induced polycyclic sequences.
//
// A subgroup is stored as an echelon sequence of elements: each generator
// has a distinct leading refined position (its pivot) with leading digit 1,
// and the sequence is closed in the sense that p-th powers and commutators
// of its members sift to the identity. Every element of the subgroup is then
// uniquely a product h_1^{c_1} ... h_m^{c_m} (0 <= c < p) in pivot order,
// so |H| = p^m.

#ifndef PNLAB_SUBGROUP_HPP_
#define PNLAB_SUBGROUP_HPP_

#include <vector>

#include "pnlab/group.hpp"

namespace pnlab {

  class Subgroup {
   public:
    // The trivial subgroup.
    explicit Subgroup(Group g) : group_(std::move(g)) {}

    Group const&             group() const noexcept { return group_; }
    std::vector<Elem> const& generators() const noexcept { return gens_; }
    std::vector<int> const&  pivots() const noexcept { return pivots_; }
    int  log_order() const noexcept { return static_cast<int>(gens_.size()); }
    bool is_trivial() const noexcept { return gens_.empty(); }

    // Residue of x after dividing out the subgroup on the right; the
    // residue is the same for every element of the coset xH and has zero
    // digits at the pivots.
    Elem sift(Elem x) const;
    bool contains(Elem const& x) const;
    bool contains(Subgroup const& other) const;
    bool operator==(Subgroup const& other) const;

    bool is_normal() const;
    // log_p |H / H^p[H,H]|
    int rank() const;

    // Every element (guarded like Group::elements).
    std::vector<Elem> elements(int max_log = 12) const;

    // Adds x and closes under p-th powers, commutators and conjugation by
    // `conjugators`. Returns false when x was already a member.
    bool add(Elem const& x, std::vector<Elem> const& conjugators = {});

   private:
    bool insert(Elem x);

    Group             group_;
    std::vector<Elem> gens_;
    std::vector<int>  pivots_;
  };

  Subgroup trivial_subgroup(Group const& g);
  Subgroup whole_group(Group const& g);
  Subgroup subgroup_closure(Group const& g, std::vector<Elem> const& s);
  // Closing under conjugation by the presentation generators.
  Subgroup normal_closure(Group const& g, std::vector<Elem> const& s);
  // Smallest subgroup containing both.
  Subgroup join(Subgroup const& a, Subgroup const& b);
  Subgroup commutator_subgroup(Subgroup const& a, Subgroup const& b);
  // Frattini subgroup H^p [H,H].
  Subgroup frattini(Subgroup const& h);

  // Largest number of cosets the fallback tier of power_subgroup scans.
  inline constexpr std::int64_t power_subgroup_coset_limit = 6561;  // 3^8

  // H^{p^k}. Fast path when H is certified powerfully embedded; otherwise an
  // exhaustive coset scan, which throws DomainError beyond the coset limit.
  Subgroup power_subgroup(Subgroup const& h, int k);
  // H^{p^k} using only the fast path's generator powers (no certification).
  Subgroup generator_power_subgroup(Subgroup const& h, int k);
  // H^{p^k} using only the exhaustive tier (throws beyond the coset limit).
  Subgroup exhaustive_power_subgroup(Subgroup const& h, int k);
  // G^{p^k} for the whole group.
  Subgroup group_power(Group const& g, int k);

  // {g : [g, a_j] in M for every generator a_j}, the preimage of Z(G/M);
  // M must be normal. Computed down the refined central series.
  Subgroup centralizer_mod(Subgroup const& m);
  // {g : [g, x] in M for every x in elems}
  Subgroup centralizer_mod(Subgroup const& m, std::vector<Elem> const& elems);
  Subgroup centralizer(Group const& g, std::vector<Elem> const& elems);
  Subgroup center(Group const& g);

}  // namespace pnlab

#endif  // PNLAB_SUBGROUP_HPP_
