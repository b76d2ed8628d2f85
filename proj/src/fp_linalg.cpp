#include "pnlab/fp_linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace pnlab::fp {

  std::int64_t mod(std::int64_t a, std::int64_t p) {
    a %= p;
    return a < 0 ? a + p : a;
  }

  std::int64_t inv(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = mod(a, p);
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::tie(t, nt) = std::make_pair(nt, t - q * nt);
      std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (r != 1) {
      throw std::domain_error("fp::inv: not invertible");
    }
    return mod(t, p);
  }

  namespace {
    int leading(Vec const& v) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) {
          return static_cast<int>(i);
        }
      }
      return -1;
    }

    void axpy(Vec& y, std::int64_t a, Vec const& x, std::int64_t p) {
      for (std::size_t i = 0; i < y.size(); ++i) {
        y[i] = mod(y[i] + a * x[i], p);
      }
    }
  }  // namespace

  Vec Subspace::reduce(Vec v) const {
    for (auto& x : v) {
      x = mod(x, p_);
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      auto c = v[pivots_[r]];
      if (c != 0) {
        axpy(v, p_ - c, rows_[r], p_);
      }
    }
    return v;
  }

  bool Subspace::contains(Vec v) const {
    return leading(reduce(std::move(v))) < 0;
  }

  bool Subspace::add(Vec v) {
    v      = reduce(std::move(v));
    int pc = leading(v);
    if (pc < 0) {
      return false;
    }
    auto s = inv(v[pc], p_);
    for (auto& x : v) {
      x = mod(x * s, p_);
    }
    // keep the basis fully reduced
    for (auto& row : rows_) {
      if (row[pc] != 0) {
        axpy(row, p_ - row[pc], v, p_);
      }
    }
    auto it  = std::lower_bound(pivots_.begin(), pivots_.end(), pc);
    auto pos = it - pivots_.begin();
    pivots_.insert(it, pc);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

  Subspace Subspace::whole(std::size_t dim, std::int64_t p) {
    Subspace s(dim, p);
    for (std::size_t i = 0; i < dim; ++i) {
      Vec e(dim, 0);
      e[i] = 1;
      s.add(e);
    }
    return s;
  }

  Subspace Subspace::sum(Subspace const& other) const {
    Subspace s = *this;
    for (auto const& r : other.rows_) {
      s.add(r);
    }
    return s;
  }

  Subspace Subspace::intersect(Subspace const& other) const {
    // Zassenhaus: rows (u|u) for u in U and (w|0) for w in W; the rows
    // with zero left half span U ∩ W in the right half.
    Subspace big(2 * dim_, p_);
    for (auto const& u : rows_) {
      Vec r(u);
      r.insert(r.end(), u.begin(), u.end());
      big.add(r);
    }
    for (auto const& w : other.rows_) {
      Vec r(w);
      r.resize(2 * dim_, 0);
      big.add(r);
    }
    Subspace out(dim_, p_);
    for (auto const& r : big.rows_) {
      if (leading(r) >= static_cast<int>(dim_)) {
        out.add(Vec(r.begin() + dim_, r.end()));
      }
    }
    return out;
  }

  std::optional<Vec> solve_rows(Mat const& rows, Vec const& b, std::int64_t p) {
    std::size_t m = rows.size(), n = b.size();
    // augmented columns track the combination
    Subspace s(n + m, p);
    std::vector<Vec> aug;
    for (std::size_t i = 0; i < m; ++i) {
      Vec r(n + m, 0);
      for (std::size_t j = 0; j < n; ++j) {
        r[j] = mod(rows[i][j], p);
      }
      r[n + i] = 1;
      s.add(r);
    }
    Vec target(n + m, 0);
    for (std::size_t j = 0; j < n; ++j) {
      target[j] = mod(b[j], p);
    }
    auto red = s.reduce(target);
    for (std::size_t j = 0; j < n; ++j) {
      if (red[j] != 0) {
        return std::nullopt;
      }
    }
    // target - combo = red, and red has zero left part: combo coefficients
    // are the negated right part.
    Vec x(m);
    for (std::size_t i = 0; i < m; ++i) {
      x[i] = mod(-red[n + i], p);
    }
    return x;
  }

  Mat left_null_space(Mat const& rows, std::size_t cols, std::int64_t p) {
    std::size_t m = rows.size();
    Subspace    s(cols + m, p);
    for (std::size_t i = 0; i < m; ++i) {
      Vec r(cols + m, 0);
      for (std::size_t j = 0; j < cols; ++j) {
        r[j] = mod(rows[i][j], p);
      }
      r[cols + i] = 1;
      s.add(r);
    }
    Mat out;
    for (auto const& r : s.basis()) {
      if (leading(r) >= static_cast<int>(cols) || leading(r) < 0) {
        out.emplace_back(r.begin() + cols, r.end());
      }
    }
    return out;
  }

  std::optional<Mat> inverse(Mat const& a, std::int64_t p) {
    std::size_t n = a.size();
    Mat         m(n, Vec(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] = mod(a[i][j], p);
      }
      m[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t r = c;
      while (r < n && m[r][c] == 0) {
        ++r;
      }
      if (r == n) {
        return std::nullopt;
      }
      std::swap(m[r], m[c]);
      auto s = inv(m[c][c], p);
      for (auto& x : m[c]) {
        x = mod(x * s, p);
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i != c && m[i][c] != 0) {
          axpy(m[i], p - m[i][c], m[c], p);
        }
      }
    }
    Mat out(n);
    for (std::size_t i = 0; i < n; ++i) {
      out[i].assign(m[i].begin() + n, m[i].end());
    }
    return out;
  }

  Mat multiply(Mat const& a, Mat const& b, std::int64_t p) {
    std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    Mat         c(n, Vec(m, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < k; ++l) {
        if (a[i][l] != 0) {
          axpy(c[i], a[i][l], b[l], p);
        }
      }
    }
    return c;
  }

  Mat identity(std::size_t n) {
    Mat m(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      m[i][i] = 1;
    }
    return m;
  }

}  // namespace pnlab::fp
