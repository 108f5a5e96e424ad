// Dense exact linear algebra over a CoeffRing.

#ifndef REGULUS_LINALG_HPP_
#define REGULUS_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "regulus/ring.hpp"

namespace regulus {

  class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Scalar const& fill)
        : _rows(rows), _cols(cols), _data(rows * cols, fill) {}

    static Matrix zero(CoeffRing const& ring, std::size_t rows, std::size_t cols) {
      return Matrix(rows, cols, ring.zero());
    }
    static Matrix identity(CoeffRing const& ring, std::size_t n);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }

    Scalar& operator()(std::size_t i, std::size_t j) {
      return _data[i * _cols + j];
    }
    Scalar const& operator()(std::size_t i, std::size_t j) const {
      return _data[i * _cols + j];
    }

    friend bool operator==(Matrix const&, Matrix const&) = default;

   private:
    std::size_t         _rows = 0;
    std::size_t         _cols = 0;
    std::vector<Scalar> _data;
  };

  struct RowEchelon {
    Matrix                   reduced;
    std::vector<std::size_t> pivot_cols;
  };

  // Gauss-Jordan elimination; the ring must be a field (UnsupportedRing).
  RowEchelon row_reduce(CoeffRing const& ring, Matrix m);

  std::size_t rank(CoeffRing const& ring, Matrix const& m);

  // Some x with m x = rhs, or nullopt. Rings that are products of fields are
  // solved componentwise; anything else raises UnsupportedRing.
  std::optional<std::vector<Scalar>> solve(CoeffRing const&          ring,
                                           Matrix const&             m,
                                           std::vector<Scalar> const& rhs);

  // Basis of {x : m x = 0}; field coefficients only.
  std::vector<std::vector<Scalar>> nullspace(CoeffRing const& ring,
                                             Matrix const&    m);

  // Square matrices over any supported ring. Fields eliminate directly; Z/n
  // lifts to Z and uses fraction-free Bareiss elimination; products work
  // factor by factor.
  Scalar determinant(CoeffRing const& ring, Matrix const& m);

}  // namespace regulus

#endif  // REGULUS_LINALG_HPP_
