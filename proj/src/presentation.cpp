#include "pnlab/presentation.hpp"

#include <sstream>

#include "pnlab/errors.hpp"

namespace pnlab {

  bool is_prime(std::int64_t n) {
    if (n < 2) {
      return false;
    }
    for (std::int64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  std::int64_t ipow(std::int64_t p, int k) {
    std::int64_t r = 1;
    for (int i = 0; i < k; ++i) {
      if (r > (std::int64_t{1} << 62) / p) {
        throw ScaleLimit("p^k does not fit in 62 bits");
      }
      r *= p;
    }
    return r;
  }

  Presentation::Presentation(std::int64_t p, std::vector<int> orders)
      : p_(p), orders_(std::move(orders)) {
    if (!is_prime(p)) {
      throw DomainError(std::to_string(p) + " is not prime");
    }
    for (int e : orders_) {
      if (e < 1) {
        throw DomainError("generator order exponents must be positive");
      }
    }
    log_order_bound();  // overflow guard
  }

  std::int64_t Presentation::generator_order(std::size_t i) const {
    return ipow(p_, orders_.at(i));
  }

  int Presentation::log_order_bound() const {
    int n = 0;
    for (int e : orders_) {
      n += e;
    }
    ipow(p_, n);
    return n;
  }

  void Presentation::set_commutator(std::size_t i, std::size_t j, Exponents m) {
    if (j >= i || i >= rank()) {
      throw DomainError("commutator entry needs j < i < rank");
    }
    if (m.size() != rank()) {
      throw DomainError("commutator word has the wrong length");
    }
    bool zero = true;
    for (std::size_t k = 0; k < m.size(); ++k) {
      auto q = generator_order(k);
      m[k]   = ((m[k] % q) + q) % q;
      zero   = zero && m[k] == 0;
    }
    auto key = std::make_pair(static_cast<int>(i), static_cast<int>(j));
    if (zero) {
      comm_.erase(key);
    } else {
      comm_[key] = std::move(m);
    }
  }

  Exponents Presentation::commutator(std::size_t i, std::size_t j) const {
    auto it = comm_.find({static_cast<int>(i), static_cast<int>(j)});
    return it == comm_.end() ? Exponents(rank(), 0) : it->second;
  }

  bool Presentation::has_powerful_shape() const {
    std::int64_t q = p_ == 2 ? 4 : p_;
    for (auto const& [ij, m] : comm_) {
      for (auto x : m) {
        if (x % q != 0) {
          return false;
        }
      }
    }
    return true;
  }

  bool Presentation::has_pn_shape() const {
    if (!has_powerful_shape()) {
      return false;
    }
    for (auto const& [ij, m] : comm_) {
      for (int k = 0; k <= ij.first; ++k) {
        if (m[k] % (p_ * p_) != 0) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    std::vector<std::string> tokens(std::string const& line) {
      std::istringstream       in(line);
      std::vector<std::string> out;
      std::string              t;
      while (in >> t) {
        out.push_back(t);
      }
      return out;
    }

    // Non-negative decimal reduced mod q; the text may exceed 64 bits.
    std::int64_t decimal_mod(std::string const& s, std::int64_t q, std::size_t line) {
      if (s.empty()) {
        throw ParseError(line, "expected a number");
      }
      __int128 r = 0;
      for (char c : s) {
        if (c < '0' || c > '9') {
          throw ParseError(line, "bad number '" + s + "'");
        }
        r = (r * 10 + (c - '0')) % q;
      }
      return static_cast<std::int64_t>(r);
    }

    std::int64_t small_int(std::string const& s, std::size_t line) {
      if (s.empty() || s.size() > 9) {
        throw ParseError(line, "bad integer '" + s + "'");
      }
      return decimal_mod(s, std::int64_t{1} << 40, line);
    }
  }  // namespace

  Presentation parse_presentation(std::string const& text) {
    std::istringstream in(text);
    std::string        raw;
    std::size_t        lineno = 0;
    std::int64_t       p      = 0;
    long               rank   = -1;
    Presentation       pres;
    bool               have_orders = false;

    while (std::getline(in, raw)) {
      ++lineno;
      auto hash = raw.find('#');
      if (hash != std::string::npos) {
        raw.erase(hash);
      }
      auto t = tokens(raw);
      if (t.empty()) {
        continue;
      }
      auto const& kw = t[0];
      if (kw == "p") {
        if (p != 0 || t.size() != 2) {
          throw ParseError(lineno, "expected a single 'p <prime>' line");
        }
        p = small_int(t[1], lineno);
        if (!is_prime(p)) {
          throw ParseError(lineno, t[1] + " is not prime");
        }
      } else if (kw == "rank") {
        if (p == 0 || rank >= 0 || t.size() != 2) {
          throw ParseError(lineno, "expected 'rank <r>' after the p line");
        }
        rank = small_int(t[1], lineno);
        if (rank == 0) {
          pres        = Presentation(p, {});
          have_orders = true;
        }
      } else if (kw == "orders") {
        if (rank < 0 || (have_orders && rank != 0)) {
          throw ParseError(lineno, "'orders' must follow 'rank'");
        }
        if (static_cast<long>(t.size()) - 1 != rank) {
          throw ParseError(lineno, "expected " + std::to_string(rank) + " orders");
        }
        std::vector<int> e;
        for (std::size_t i = 1; i < t.size(); ++i) {
          auto v = small_int(t[i], lineno);
          if (v < 1) {
            throw ParseError(lineno, "generator order exponents must be positive");
          }
          e.push_back(static_cast<int>(v));
        }
        try {
          pres = Presentation(p, e);
        } catch (Error const& err) {
          throw ParseError(lineno, err.what());
        }
        have_orders = true;
      } else if (kw == "comm") {
        if (!have_orders) {
          throw ParseError(lineno, "'comm' before 'orders'");
        }
        if (t.size() < 3) {
          throw ParseError(lineno, "expected 'comm <i> <j> <k>^<m> ...'");
        }
        auto i = small_int(t[1], lineno), j = small_int(t[2], lineno);
        if (i < 1 || i > rank || j < 1 || j > rank) {
          throw ParseError(lineno, "generator index out of range");
        }
        if (j >= i) {
          throw ParseError(lineno, "comm entry needs i > j");
        }
        if (pres.commutator_table().count({i - 1, j - 1})) {
          throw ParseError(lineno, "duplicate comm entry");
        }
        Exponents m(rank, 0);
        long      last = 0;
        for (std::size_t a = 3; a < t.size(); ++a) {
          auto caret = t[a].find('^');
          if (caret == std::string::npos) {
            throw ParseError(lineno, "expected <k>^<m>, got '" + t[a] + "'");
          }
          auto k = small_int(t[a].substr(0, caret), lineno);
          if (k < 1 || k > rank) {
            throw ParseError(lineno, "generator index out of range");
          }
          if (k <= last) {
            throw ParseError(lineno, "word letters must have increasing indices");
          }
          last     = k;
          m[k - 1] = decimal_mod(t[a].substr(caret + 1),
                                 pres.generator_order(k - 1), lineno);
        }
        pres.set_commutator(i - 1, j - 1, m);
      } else if (kw == "fingerprint") {
        // census sidecar, informational only
      } else {
        throw ParseError(lineno, "unknown keyword '" + kw + "'");
      }
    }
    if (!have_orders) {
      throw ParseError(lineno, "missing p/rank/orders lines");
    }
    return pres;
  }

  std::string format_presentation(Presentation const& pres) {
    std::ostringstream out;
    out << "p " << pres.prime() << "\nrank " << pres.rank() << "\norders";
    for (int e : pres.orders()) {
      out << ' ' << e;
    }
    out << '\n';
    for (auto const& [ij, m] : pres.commutator_table()) {
      out << "comm " << ij.first + 1 << ' ' << ij.second + 1;
      for (std::size_t k = 0; k < m.size(); ++k) {
        if (m[k] != 0) {
          out << ' ' << k + 1 << '^' << m[k];
        }
      }
      out << '\n';
    }
    return out.str();
  }

  ElementNF identity_nf(Presentation const& pres) {
    return ElementNF{Exponents(pres.rank(), 0)};
  }

  std::string format_element(ElementNF const& x) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < x.exponents.size(); ++i) {
      out << (i ? "," : "") << x.exponents[i];
    }
    out << ')';
    return out.str();
  }

}  // namespace pnlab
