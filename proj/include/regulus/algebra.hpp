// Finite-dimensional associative algebras given by structure constants, and
// the brute-force regularity oracles that check the theorem-based verdicts.

#ifndef REGULUS_ALGEBRA_HPP_
#define REGULUS_ALGEBRA_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "regulus/decision.hpp"
#include "regulus/group.hpp"
#include "regulus/groupoid.hpp"
#include "regulus/invsgp.hpp"
#include "regulus/linalg.hpp"
#include "regulus/ring.hpp"

namespace regulus {

  // Sparse vector in basis coordinates; zero coefficients are never stored.
  struct AlgElement {
    std::map<std::size_t, Scalar> terms;

    bool is_zero() const noexcept {
      return terms.empty();
    }
    friend bool operator==(AlgElement const&, AlgElement const&) = default;
  };

  class StructureConstAlgebra {
   public:
    using Term = std::pair<std::size_t, Scalar>;

    // products[i * d + j] expands b_i b_j. Associativity is checked on all
    // basis triples for d <= 64 and on a fixed sample above that; a declared
    // unit is checked against every basis element (InvalidInput).
    StructureConstAlgebra(CoeffRing                      ring,
                          std::vector<std::string>       labels,
                          std::vector<std::vector<Term>> products,
                          std::optional<AlgElement>      unit = std::nullopt);

    // Every b_i b_j is a basis element or zero (npos).
    static StructureConstAlgebra monomial(CoeffRing                   ring,
                                          std::vector<std::string>    labels,
                                          std::vector<std::size_t> const& table,
                                          std::optional<AlgElement>   unit = std::nullopt);

    static constexpr std::size_t npos = SIZE_MAX;

    CoeffRing const& ring() const noexcept {
      return _ring;
    }
    std::size_t dimension() const noexcept {
      return _labels.size();
    }
    std::string const& label(std::size_t i) const {
      return _labels[i];
    }
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    std::vector<Term> const& product(std::size_t i, std::size_t j) const {
      return _products[i * dimension() + j];
    }
    std::optional<AlgElement> const& unit() const noexcept {
      return _unit;
    }

    AlgElement zero() const {
      return {};
    }
    AlgElement basis(std::size_t i) const;
    AlgElement add(AlgElement const& a, AlgElement const& b) const;
    AlgElement sub(AlgElement const& a, AlgElement const& b) const;
    AlgElement scale(Scalar const& c, AlgElement const& a) const;
    AlgElement mul(AlgElement const& a, AlgElement const& b) const;

    AlgElement          from_dense(std::vector<Scalar> const& coords) const;
    std::vector<Scalar> to_dense(AlgElement const& a) const;

    // Column j is the coordinate vector of a b_j (left) or b_j a (right).
    Matrix left_matrix(AlgElement const& a) const;
    Matrix right_matrix(AlgElement const& a) const;

    std::string format(AlgElement const& a) const;

    // Base change to the k-th field component of the coefficient ring.
    StructureConstAlgebra component(std::size_t k) const;

   private:
    CoeffRing                      _ring;
    std::vector<std::string>       _labels;
    std::vector<std::vector<Term>> _products;
    std::optional<AlgElement>      _unit;
  };

  StructureConstAlgebra semigroup_algebra(FiniteInverseSemigroup const& s, CoeffRing const& ring);
  StructureConstAlgebra group_algebra(FiniteGroup const& g, CoeffRing const& ring);
  StructureConstAlgebra groupoid_algebra(FiniteGroupoid const& g, CoeffRing const& ring);
  // M_n(A), basis E_ij (x) b_k at index (i * n + j) * dim A + k.
  StructureConstAlgebra matrix_algebra(StructureConstAlgebra const& a, std::size_t n);
  StructureConstAlgebra direct_sum(std::vector<StructureConstAlgebra> const& parts);

  // Uniform coefficients for finite rings, integers in [-3, 3] over Q.
  AlgElement random_element(StructureConstAlgebra const& a, std::mt19937_64& rng);

  // Some b with aba = a, by solving the linear system a X a = a. The ring
  // must be a product of fields (UnsupportedRing). The returned b is
  // re-verified.
  std::optional<AlgElement> element_is_regular(StructureConstAlgebra const& a,
                                               AlgElement const&            x);

  // Search over all b; finite rings only, |R|^d must not exceed `budget`
  // (CapExceeded).
  std::optional<AlgElement> quasi_inverse_exhaustive(StructureConstAlgebra const& a,
                                                     AlgElement const&            x,
                                                     std::uint64_t                budget);

  // Basis of {x : Tr(L_xy) = 0 for all y}, computed in the unitization so
  // that non-unital algebras are covered. Coefficients must be Q.
  std::vector<AlgElement> trace_radical_char0(StructureConstAlgebra const& a);

  // Dense arithmetic mod p < 2^32 for sweeping F_p-algebras: decides whether
  // a (given by residue coordinates) has a quasi-inverse.
  class PrimeFieldSweep {
   public:
    explicit PrimeFieldSweep(StructureConstAlgebra const& a);
    bool is_regular(std::vector<std::uint64_t> const& a);

   private:
    std::uint64_t                                                   _p;
    std::size_t                                                     _d;
    std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> _prods;
    std::vector<std::uint64_t>                                      _l, _r, _m;
  };

  struct OracleOptions {
    std::uint64_t budget  = 1u << 20;
    std::size_t   samples = 256;
    std::uint64_t seed    = 20240917;
  };

  struct OracleVerdict {
    enum class Method { exhaustive, trace_radical, sampled, componentwise };

    Verdict                   verdict = Verdict::unknown;
    Method                    method  = Method::exhaustive;
    std::optional<AlgElement> witness;
    std::uint64_t             checked = 0;  // elements examined
    std::string               detail;

    // "Exhaustive", "TraceRadical", "Sampled(n)" or "Componentwise".
    std::string method_name() const;
  };

  // Exhaustive sweeps visit elements in the order that counts with basis
  // index 0 as the least significant digit and report the first element
  // without a quasi-inverse, so the witness does not depend on scheduling.
  OracleVerdict algebra_is_regular_oracle(StructureConstAlgebra const& a,
                                          OracleOptions const&         opts = {});

  // Column i of `map` is the image of the i-th basis vector of `a`, in the
  // coordinates of `b`. Throws DimensionMismatch.
  bool iso_check(StructureConstAlgebra const& a,
                 StructureConstAlgebra const& b,
                 Matrix const&                map);

  // Basis map R[S] -> R[G_S] of the universal groupoid isomorphism.
  Matrix universal_groupoid_map(UniversalGroupoid const& u, CoeffRing const& ring);

  // Target algebra (direct sum over components of M_n(R[isotropy])) and the
  // basis map from the groupoid algebra induced by the matrix units.
  struct MatrixUnitsIsomorphism {
    StructureConstAlgebra target;
    Matrix                map;
  };
  MatrixUnitsIsomorphism matrix_units_isomorphism(FiniteGroupoid const&           g,
                                                  MatrixUnitsDecomposition const& dec,
                                                  CoeffRing const&                ring);

}  // namespace regulus

#endif  // REGULUS_ALGEBRA_HPP_
