#include "regulus/linalg.hpp"

#include "regulus/errors.hpp"

namespace regulus {

  Matrix Matrix::identity(CoeffRing const& ring, std::size_t n) {
    Matrix m = zero(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = ring.one();
    }
    return m;
  }

  RowEchelon row_reduce(CoeffRing const& ring, Matrix m) {
    if (!ring.is_field()) {
      throw UnsupportedRing("row reduction needs a field, got " + ring.name());
    }
    RowEchelon  out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
      std::size_t pivot = row;
      while (pivot < m.rows() && ring.is_zero(m(pivot, col))) {
        ++pivot;
      }
      if (pivot == m.rows()) {
        continue;
      }
      if (pivot != row) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          std::swap(m(pivot, j), m(row, j));
        }
      }
      Scalar inv = ring.invert(m(row, col));
      for (std::size_t j = col; j < m.cols(); ++j) {
        m(row, j) = ring.mul(m(row, j), inv);
      }
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i == row || ring.is_zero(m(i, col))) {
          continue;
        }
        Scalar factor = m(i, col);
        for (std::size_t j = col; j < m.cols(); ++j) {
          m(i, j) = ring.sub(m(i, j), ring.mul(factor, m(row, j)));
        }
      }
      out.pivot_cols.push_back(col);
      ++row;
    }
    out.reduced = std::move(m);
    return out;
  }

  std::size_t rank(CoeffRing const& ring, Matrix const& m) {
    return row_reduce(ring, m).pivot_cols.size();
  }

  namespace {
    std::optional<std::vector<Scalar>> solve_field(CoeffRing const&          ring,
                                                   Matrix const&             m,
                                                   std::vector<Scalar> const& rhs) {
      Matrix aug = Matrix::zero(ring, m.rows(), m.cols() + 1);
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          aug(i, j) = m(i, j);
        }
        aug(i, m.cols()) = rhs[i];
      }
      auto ech = row_reduce(ring, std::move(aug));
      if (!ech.pivot_cols.empty() && ech.pivot_cols.back() == m.cols()) {
        return std::nullopt;
      }
      std::vector<Scalar> x(m.cols(), ring.zero());
      for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
        x[ech.pivot_cols[r]] = ech.reduced(r, m.cols());
      }
      return x;
    }

    Matrix project_matrix(CoeffRing const& ring, Matrix const& m, std::size_t k) {
      Matrix out(m.rows(), m.cols(), Scalar());
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          out(i, j) = ring.project(m(i, j))[k];
        }
      }
      return out;
    }

    Scalar bareiss_mod(Matrix const& m, std::uint64_t n) {
      std::size_t            d = m.rows();
      std::vector<mpz_class> a(d * d);
      for (std::size_t i = 0; i < d * d; ++i) {
        a[i] = static_cast<unsigned long>(m(i / d, i % d).residue());
      }
      auto      at   = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * d + j]; };
      mpz_class prev = 1;
      int       sign = 1;
      for (std::size_t k = 0; k + 1 < d; ++k) {
        if (at(k, k) == 0) {
          std::size_t p = k + 1;
          while (p < d && at(p, k) == 0) {
            ++p;
          }
          if (p == d) {
            return Scalar(std::uint64_t(0));
          }
          for (std::size_t j = 0; j < d; ++j) {
            std::swap(at(k, j), at(p, j));
          }
          sign = -sign;
        }
        for (std::size_t i = k + 1; i < d; ++i) {
          for (std::size_t j = k + 1; j < d; ++j) {
            at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
          }
        }
        prev = at(k, k);
      }
      mpz_class det = d == 0 ? mpz_class(1) : at(d - 1, d - 1);
      det *= sign;
      mpz_class r = det % mpz_class(static_cast<unsigned long>(n));
      if (r < 0) {
        r += static_cast<unsigned long>(n);
      }
      return Scalar(static_cast<std::uint64_t>(r.get_ui()));
    }
  }  // namespace

  std::optional<std::vector<Scalar>> solve(CoeffRing const&          ring,
                                           Matrix const&             m,
                                           std::vector<Scalar> const& rhs) {
    if (rhs.size() != m.rows()) {
      throw DimensionMismatch("right-hand side length does not match rows");
    }
    if (ring.is_field() && ring.kind() != CoeffRing::Kind::product) {
      return solve_field(ring, m, rhs);
    }
    auto comps = ring.field_components();
    if (!comps) {
      throw UnsupportedRing("linear solve over " + ring.name()
                            + " (not a product of fields)");
    }
    std::vector<std::vector<Scalar>> parts;
    for (std::size_t k = 0; k < comps->size(); ++k) {
      std::vector<Scalar> b;
      for (auto const& s : rhs) {
        b.push_back(ring.project(s)[k]);
      }
      auto x = solve_field((*comps)[k], project_matrix(ring, m, k), b);
      if (!x) {
        return std::nullopt;
      }
      parts.push_back(std::move(*x));
    }
    std::vector<Scalar> out;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::vector<Scalar> c;
      for (auto const& p : parts) {
        c.push_back(p[j]);
      }
      out.push_back(ring.lift(c));
    }
    return out;
  }

  std::vector<std::vector<Scalar>> nullspace(CoeffRing const& ring,
                                             Matrix const&    m) {
    auto                             ech = row_reduce(ring, m);
    std::vector<bool>                is_pivot(m.cols(), false);
    for (auto c : ech.pivot_cols) {
      is_pivot[c] = true;
    }
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
      if (is_pivot[free]) {
        continue;
      }
      std::vector<Scalar> v(m.cols(), ring.zero());
      v[free] = ring.one();
      for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
        v[ech.pivot_cols[r]] = ring.neg(ech.reduced(r, free));
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

  Scalar determinant(CoeffRing const& ring, Matrix const& m) {
    if (m.rows() != m.cols()) {
      throw DimensionMismatch("determinant of a non-square matrix");
    }
    switch (ring.kind()) {
      case CoeffRing::Kind::rationals:
      case CoeffRing::Kind::prime_field: {
        Matrix      a    = m;
        std::size_t d    = a.rows();
        Scalar      det  = ring.one();
        for (std::size_t k = 0; k < d; ++k) {
          std::size_t p = k;
          while (p < d && ring.is_zero(a(p, k))) {
            ++p;
          }
          if (p == d) {
            return ring.zero();
          }
          if (p != k) {
            for (std::size_t j = 0; j < d; ++j) {
              std::swap(a(p, j), a(k, j));
            }
            det = ring.neg(det);
          }
          det        = ring.mul(det, a(k, k));
          Scalar inv = ring.invert(a(k, k));
          for (std::size_t i = k + 1; i < d; ++i) {
            if (ring.is_zero(a(i, k))) {
              continue;
            }
            Scalar f = ring.mul(a(i, k), inv);
            for (std::size_t j = k; j < d; ++j) {
              a(i, j) = ring.sub(a(i, j), ring.mul(f, a(k, j)));
            }
          }
        }
        return det;
      }
      case CoeffRing::Kind::integers_mod:
        return bareiss_mod(m, ring.modulus());
      case CoeffRing::Kind::product: {
        Scalar::Product parts;
        for (std::size_t f = 0; f < ring.factors().size(); ++f) {
          Matrix sub(m.rows(), m.cols(), Scalar());
          for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
              sub(i, j) = m(i, j).parts()[f];
            }
          }
          parts.push_back(determinant(ring.factors()[f], sub));
        }
        return Scalar(std::move(parts));
      }
    }
    return ring.zero();
  }

}  // namespace regulus
