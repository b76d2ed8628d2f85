// Dense linear algebra over the prime field GF(p).

#ifndef PNLAB_FP_LINALG_HPP_
#define PNLAB_FP_LINALG_HPP_

#include <cstdint>
#include <optional>
#include <vector>

namespace pnlab::fp {

  using Vec = std::vector<std::int64_t>;
  using Mat = std::vector<Vec>;  // row-major, rows are vectors

  std::int64_t mod(std::int64_t a, std::int64_t p);
  std::int64_t inv(std::int64_t a, std::int64_t p);

  // Row space in reduced echelon form, kept sorted by pivot column.
  class Subspace {
   public:
    Subspace(std::size_t dim, std::int64_t p) : dim_(dim), p_(p) {}

    std::size_t ambient_dim() const noexcept { return dim_; }
    std::size_t dim() const noexcept { return rows_.size(); }
    std::int64_t prime() const noexcept { return p_; }
    Mat const&   basis() const noexcept { return rows_; }

    // Returns true if v was not already in the span.
    bool add(Vec v);
    bool contains(Vec v) const;
    // v reduced against the basis (zero iff v is in the span).
    Vec reduce(Vec v) const;

    static Subspace whole(std::size_t dim, std::int64_t p);
    Subspace        sum(Subspace const& other) const;
    Subspace        intersect(Subspace const& other) const;

   private:
    std::size_t      dim_;
    std::int64_t     p_;
    Mat              rows_;
    std::vector<int> pivots_;
  };

  // Solves x * A = b where A has rows a_1..a_m (so x is a combination of
  // rows); nullopt when b is not in the row space.
  std::optional<Vec> solve_rows(Mat const& rows, Vec const& b, std::int64_t p);

  // Basis of {x : x * A = 0}.
  Mat left_null_space(Mat const& rows, std::size_t cols, std::int64_t p);

  // Inverse of a square matrix; nullopt when singular.
  std::optional<Mat> inverse(Mat const& a, std::int64_t p);

  Mat multiply(Mat const& a, Mat const& b, std::int64_t p);
  Mat identity(std::size_t n);

}  // namespace pnlab::fp

#endif  // PNLAB_FP_LINALG_HPP_
