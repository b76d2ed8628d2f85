// Power-commutator presentations of finite p-groups.
//
// Generators a_1, ..., a_r (stored 0-based) with a_i of order p^{e_i}, and
// for each pair j < i a normal-form word for the commutator [a_i, a_j].
// Pairs without an entry commute.

#ifndef PNLAB_PRESENTATION_HPP_
#define PNLAB_PRESENTATION_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pnlab {

  using Exponents = std::vector<std::int64_t>;

  // Normal-form exponent vector (l_1, ..., l_r), 0 <= l_k < p^{e_k}.
  struct ElementNF {
    Exponents exponents;

    bool operator==(ElementNF const&) const = default;
    auto operator<=>(ElementNF const&) const = default;
  };

  // Unreduced product of generator powers; gen is 0-based.
  struct Letter {
    int          gen;
    std::int64_t exp;
  };
  using Word = std::vector<Letter>;

  bool is_prime(std::int64_t n);
  // p^k, throws if the result does not fit in 62 bits.
  std::int64_t ipow(std::int64_t p, int k);

  class Presentation {
   public:
    Presentation() = default;
    Presentation(std::int64_t p, std::vector<int> orders);

    std::int64_t prime() const noexcept { return p_; }
    std::size_t  rank() const noexcept { return orders_.size(); }
    // e_i, so a_i has order p^{e_i}
    std::vector<int> const& orders() const noexcept { return orders_; }
    int                     order_exponent(std::size_t i) const { return orders_.at(i); }
    std::int64_t            generator_order(std::size_t i) const;
    // log_p of the product of generator orders
    int log_order_bound() const;

    // Sets [a_i, a_j] (0-based, j < i) to a_1^{m_1} ... a_r^{m_r}; exponents
    // are reduced mod p^{e_k}. An all-zero vector erases the entry.
    void set_commutator(std::size_t i, std::size_t j, Exponents m);
    // Zero vector when the pair commutes.
    Exponents commutator(std::size_t i, std::size_t j) const;
    std::map<std::pair<int, int>, Exponents> const& commutator_table() const noexcept {
      return comm_;
    }
    bool is_abelian() const noexcept { return comm_.empty(); }

    // p | m_k(i,j) for all entries (4 | m_k when p = 2).
    bool has_powerful_shape() const;
    // Additionally p^2 | m_k(i,j) whenever k <= i (1-based).
    bool has_pn_shape() const;

    bool operator==(Presentation const&) const = default;

   private:
    std::int64_t                             p_ = 2;
    std::vector<int>                         orders_;
    std::map<std::pair<int, int>, Exponents> comm_;
  };

  // Line-oriented text form:
  //   p <prime>
  //   rank <r>
  //   orders <e_1> ... <e_r>
  //   comm <i> <j> <k1>^<m1> [<k2>^<m2> ...]    (1-based, i > j)
  // '#' starts a comment.
  Presentation parse_presentation(std::string const& text);
  std::string  format_presentation(Presentation const& pres);

  ElementNF   identity_nf(Presentation const& pres);
  std::string format_element(ElementNF const& x);

}  // namespace pnlab

#endif  // PNLAB_PRESENTATION_HPP_
