// Gradings of finite groupoid algebras by cocycles into Z or Z/k.

#ifndef REGULUS_GRADING_HPP_
#define REGULUS_GRADING_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "regulus/algebra.hpp"
#include "regulus/decision.hpp"
#include "regulus/groupoid.hpp"

namespace regulus {

  class GradingGroup {
   public:
    static GradingGroup integers() {
      return GradingGroup(0);
    }
    // Throws InvalidInput for k = 0.
    static GradingGroup cyclic(std::uint64_t k);
    // "Z" or "Z/k".
    static GradingGroup parse(std::string const& name);

    bool is_integers() const noexcept {
      return _k == 0;
    }
    std::uint64_t order() const noexcept {
      return _k;
    }
    std::string name() const;

    std::int64_t normalize(std::int64_t h) const;
    std::int64_t add(std::int64_t a, std::int64_t b) const {
      return normalize(a + b);
    }
    std::int64_t neg(std::int64_t a) const {
      return normalize(-a);
    }

    friend bool operator==(GradingGroup const&, GradingGroup const&) = default;

   private:
    explicit GradingGroup(std::uint64_t k) : _k(k) {}
    std::uint64_t _k;
  };

  class Cocycle {
   public:
    // One degree per arrow, or one per non-identity arrow (units get 0).
    // Degrees are normalized; functoriality c(gd) = c(g) + c(d) is checked
    // on every composable pair (InvalidInput).
    Cocycle(FiniteGroupoid const& g, GradingGroup group, std::vector<std::int64_t> degrees);

    static Cocycle trivial(FiniteGroupoid const& g, GradingGroup group);

    GradingGroup const& group() const noexcept {
      return _group;
    }
    std::int64_t degree(std::size_t arrow) const {
      return _degrees[arrow];
    }
    std::vector<std::int64_t> const& degrees() const noexcept {
      return _degrees;
    }

   private:
    GradingGroup              _group;
    std::vector<std::int64_t> _degrees;
  };

  SubGroupoid identity_component(FiniteGroupoid const& g, Cocycle const& c);

  struct GradedGroupoidAlgebra {
    FiniteGroupoid        groupoid;
    Cocycle               cocycle;
    StructureConstAlgebra algebra;  // basis = arrows

    GradedGroupoidAlgebra(FiniteGroupoid g, Cocycle c, CoeffRing const& ring);

    // Sorted list of degrees that occur.
    std::vector<std::int64_t> degrees() const;
    // Arrows of a given degree.
    std::vector<std::size_t> component_basis(std::int64_t h) const;
  };

  // Components by degree, in increasing degree order; zero parts omitted.
  std::vector<std::pair<std::int64_t, AlgElement>> homogeneous_components(
      GradedGroupoidAlgebra const& a,
      AlgElement const&            x);

  // Degree of a nonzero homogeneous element; NotHomogeneous otherwise.
  std::int64_t homogeneous_degree(GradedGroupoidAlgebra const& a, AlgElement const& x);

  struct EpsilonWitness {
    std::int64_t degree = 0;
    AlgElement   eps;        // indicator of the targets of supp(f)
    AlgElement   eps_prime;  // indicator of the sources of supp(f)
    // eps = sum of coefficient * b_i b_j over the listed degree (h, -h) and
    // (-h, h) basis pairs respectively.
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, Scalar>> left_certificate;
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, Scalar>> right_certificate;
    bool identities_hold = false;  // eps f = f = f eps'
    bool certified       = false;  // both certificates solved and re-checked
  };

  // f must be homogeneous (NotHomogeneous). f = 0 is allowed and gets
  // eps = eps' = 0 with the degree of the identity.
  EpsilonWitness epsilon_witness(GradedGroupoidAlgebra const& a, AlgElement const& f);

  RegularityDecision decide_graded_regular(FiniteGroupoid const& g,
                                           Cocycle const&        c,
                                           CoeffRing const&      ring);

  // Runs the per-element solve over homogeneous elements, one degree
  // component at a time; the quasi-inverse ranges over the whole algebra.
  // Exhaustive when every component has at most `budget` elements.
  OracleVerdict graded_regular_oracle(GradedGroupoidAlgebra const& a,
                                      OracleOptions const&         opts = {});

  // Uniform random element of the degree-h component (finite rings) or with
  // coefficients in [-3, 3] (Q).
  AlgElement random_homogeneous(GradedGroupoidAlgebra const& a,
                                std::int64_t                 h,
                                std::mt19937_64&             rng);

}  // namespace regulus

#endif  // REGULUS_GRADING_HPP_
