// Validated groups: a consistent powerful-shape presentation plus its
// collector.

#ifndef PNLAB_GROUP_HPP_
#define PNLAB_GROUP_HPP_

#include <memory>
#include <string>

#include "pnlab/collector.hpp"

namespace pnlab {

  struct ConsistencyReport {
    bool consistent = false;
    // log_p of the product of generator orders; the group order when consistent
    int log_order = 0;
    // Human-readable first failing overlap, empty when consistent.
    std::string failure;
  };

  // Overlap tests on the presentation generators, the refined collector
  // tables, and the defining relations. Requires powerful shape.
  ConsistencyReport check_consistency(Presentation const& pres);
  ConsistencyReport check_consistency(Collector const& coll);

  class Group {
   public:
    // Throws DomainError unless `pres` has powerful shape and is consistent.
    explicit Group(Presentation pres);

    Collector const&    collector() const noexcept { return *coll_; }
    Presentation const& presentation() const noexcept { return coll_->presentation(); }
    std::int64_t        prime() const noexcept { return coll_->prime(); }
    // n with |G| = p^n
    int         log_order() const noexcept { return static_cast<int>(coll_->length()); }
    std::size_t num_generators() const noexcept { return presentation().rank(); }
    bool        is_trivial() const noexcept { return coll_->length() == 0; }

    Elem identity() const { return coll_->identity(); }
    Elem generator(std::size_t i) const { return coll_->generator(i); }
    Elem multiply(Elem const& x, Elem const& y) const { return coll_->multiply(x, y); }
    Elem inverse(Elem const& x) const { return coll_->inverse(x); }
    Elem power(Elem const& x, std::int64_t k) const { return coll_->power(x, k); }
    Elem commutator(Elem const& x, Elem const& y) const { return coll_->commutator(x, y); }
    Elem conjugate(Elem const& x, Elem const& y) const { return coll_->conjugate(x, y); }
    bool is_identity(Elem const& x) const { return coll_->is_identity(x); }
    // log_p of the element order
    int element_order_log(Elem const& x) const;

    ElementNF to_nf(Elem const& x) const { return coll_->to_nf(x); }
    Elem      from_nf(ElementNF const& x) const { return coll_->from_nf(x); }
    ElementNF multiply(ElementNF const& x, ElementNF const& y) const;

    // Every element, in refined-digit lexicographic order. Guarded by
    // max_log (throws ScaleLimit when n > max_log).
    std::vector<Elem> elements(int max_log = 12) const;

    // Shared identity of the underlying group object.
    void const* id() const noexcept { return coll_.get(); }

   private:
    std::shared_ptr<Collector const> coll_;
  };

}  // namespace pnlab

#endif  // PNLAB_GROUP_HPP_
