// Layers, adapted bases and quotients.

#ifndef PNLAB_SECTION_HPP_
#define PNLAB_SECTION_HPP_

#include <memory>
#include <vector>

#include "pnlab/fp_linalg.hpp"
#include "pnlab/subgroup.hpp"

namespace pnlab {

  // Coordinates on an elementary abelian section A/B (B normal in A).
  class LayerBasis {
   public:
    LayerBasis(Subgroup const& a, Subgroup b);

    std::size_t              dim() const noexcept { return basis_.size(); }
    std::vector<Elem> const& basis() const noexcept { return basis_; }
    Subgroup const&          bottom() const noexcept { return bottom_; }
    // x must lie in A.
    fp::Vec coords(Elem const& x) const;
    fp::Subspace span_of(std::vector<Elem> const& xs) const;

   private:
    Subgroup          bottom_;
    std::vector<Elem> basis_;
    std::vector<int>  pos_;  // pivot of each basis element
  };

  // P_k = G^{p^k} N for k = 0..e, ending at N (G powerful).
  std::vector<Subgroup> power_filtration(Subgroup const& n);

  struct AdaptedBasis {
    std::vector<Elem> gens;
    std::vector<int>  order_log;  // in G/N
    std::vector<int>  flag_level; // first flag member containing the generator
  };

  // Generators b_1..b_s of G/N with |G/N| = prod o(b_i) whose images in
  // G/G^pN are adapted to the kernels of x -> x^{p^k}, and also to `flag`
  // (ascending subgroups, each containing G^p N, ending at G) when given.
  // Ordered by flag level descending, then by ascending order.
  AdaptedBasis adapted_basis(Subgroup const& n, std::vector<Subgroup> const& flag = {});

  class Quotient {
   public:
    // Builds G/N on an adapted basis; throws DomainError unless N is normal.
    explicit Quotient(Subgroup n);
    Quotient(Subgroup n, AdaptedBasis basis);

    Group const&        group() const noexcept { return *group_; }
    Subgroup const&     kernel() const noexcept { return kernel_; }
    AdaptedBasis const& basis() const noexcept { return basis_; }

    // Exponents l with xN = b_1^{l_1} ... b_s^{l_s} N.
    ElementNF coordinates(Elem const& x) const;
    Elem      project(Elem const& x) const;
    Subgroup  project(Subgroup const& h) const;
    // A preimage in G of an element of the quotient.
    Elem     lift(Elem const& y) const;
    Subgroup preimage(Subgroup const& h) const;

   private:
    void build();

    Subgroup               kernel_;
    AdaptedBasis           basis_;
    std::vector<Subgroup>  levels_;
    std::vector<LayerBasis> layers_;
    std::vector<fp::Mat>   layer_rows_;   // coords of b_i^{p^k} in layer k
    std::vector<std::vector<int>> layer_idx_;
    std::shared_ptr<Group> group_;
  };

}  // namespace pnlab

#endif  // PNLAB_SECTION_HPP_
