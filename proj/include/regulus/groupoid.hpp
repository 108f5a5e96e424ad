// Finite discrete groupoids.
//
// Arrows are numbered globally; arrows 0..units-1 are the identities, so
// arrow x < unit_count() is the unit x itself. The product gd is defined iff
// src(g) = tgt(d), and then src(gd) = src(d), tgt(gd) = tgt(g).

#ifndef REGULUS_GROUPOID_HPP_
#define REGULUS_GROUPOID_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "regulus/decision.hpp"
#include "regulus/group.hpp"
#include "regulus/invsgp.hpp"
#include "regulus/ring.hpp"

namespace regulus {

  class FiniteGroupoid {
   public:
    static constexpr std::size_t npos = SIZE_MAX;

    // `table` is arrow_count x arrow_count, row-major, npos where undefined.
    // Validates the groupoid axioms (InvalidInput).
    static FiniteGroupoid from_table(std::size_t              units,
                                     std::vector<std::size_t> src,
                                     std::vector<std::size_t> tgt,
                                     std::vector<std::size_t> table,
                                     std::vector<std::string> labels = {});
    // Products given as triples (g, d, gd). Products with an identity may be
    // omitted; every other composable pair must be listed.
    static FiniteGroupoid from_triples(std::size_t                                units,
                                       std::vector<std::size_t>                   src,
                                       std::vector<std::size_t>                   tgt,
                                       std::vector<std::array<std::size_t, 3>> const& compose,
                                       std::vector<std::string>                   labels = {});

    static FiniteGroupoid units_only(std::size_t n);
    static FiniteGroupoid pair(std::size_t n);
    static FiniteGroupoid group(FiniteGroup const& g);
    // n units, every hom-set a copy of h: arrows (i, g, j) : j -> i.
    static FiniteGroupoid transitive(std::size_t n, FiniteGroup const& h);

    std::size_t unit_count() const noexcept {
      return _units;
    }
    std::size_t arrow_count() const noexcept {
      return _src.size();
    }
    bool is_unit(std::size_t g) const noexcept {
      return g < _units;
    }
    std::size_t src(std::size_t g) const {
      return _src[g];
    }
    std::size_t tgt(std::size_t g) const {
      return _tgt[g];
    }
    // npos when not composable.
    std::size_t compose(std::size_t g, std::size_t d) const {
      return _table[g * arrow_count() + d];
    }
    std::size_t inverse(std::size_t g) const {
      return _inverse[g];
    }
    std::string const& label(std::size_t g) const {
      return _labels[g];
    }
    std::vector<std::size_t> hom(std::size_t from, std::size_t to) const;

   private:
    FiniteGroupoid() = default;

    std::size_t              _units = 0;
    std::vector<std::size_t> _src;
    std::vector<std::size_t> _tgt;
    std::vector<std::size_t> _table;
    std::vector<std::size_t> _inverse;
    std::vector<std::string> _labels;
  };

  // Orbits as sorted unit lists, ordered by least element.
  std::vector<std::vector<std::size_t>> orbits(FiniteGroupoid const& g);

  struct IsotropyGroup {
    std::size_t              unit;
    std::vector<std::size_t> arrows;  // sorted, so arrows[0] is the unit
    FiniteGroup              group;   // indexed like `arrows`
  };

  IsotropyGroup isotropy_group(FiniteGroupoid const& g, std::size_t x);
  bool          is_principal(FiniteGroupoid const& g);

  // Sub-groupoid on an arrow subset containing every unit; checked for
  // closure under products and inverses (InvalidInput).
  struct SubGroupoid {
    FiniteGroupoid           groupoid;
    std::vector<std::size_t> arrows;  // arrow of the parent per local arrow
  };
  SubGroupoid restrict_arrows(FiniteGroupoid const& g, std::vector<bool> const& keep);

  RegularityDecision decide_regular_groupoid_algebra(FiniteGroupoid const& g,
                                                     CoeffRing const&      ring);

  struct MatrixUnitsComponent {
    std::vector<std::size_t> units;        // x_1 = base unit, x_2, ...
    std::vector<std::size_t> transversal;  // t_i : x_1 -> x_i, t_1 = x_1
    // u[i][j] is U_ij = {t_i t_j^-1}, as an arrow set.
    std::vector<std::vector<std::vector<std::size_t>>> u;
    IsotropyGroup isotropy;
  };

  struct MatrixUnitsDecomposition {
    std::vector<MatrixUnitsComponent> components;
    // For arrow g: component k, row i, column j and position h in the
    // isotropy group with g = t_i * iso[h] * t_j^-1.
    struct Coordinates {
      std::size_t component, row, col, iso;
    };
    std::vector<Coordinates> coordinates;
    bool                     relations_hold = false;
  };

  MatrixUnitsDecomposition matrix_units_decomposition(FiniteGroupoid const& g);

  // Set product of arrow sets: all composable products.
  std::vector<std::size_t> bisection_product(FiniteGroupoid const&           g,
                                             std::vector<std::size_t> const& u,
                                             std::vector<std::size_t> const& v);

  struct UniversalGroupoid {
    FiniteGroupoid groupoid;
    // Unit x is the principal character of unit_idempotent[x].
    std::vector<std::size_t> unit_idempotent;
    // Representative germ (s, f) of each arrow.
    std::vector<std::pair<std::size_t, std::size_t>> germ;
    // psi[s] lists the arrows in the support of the image of s.
    std::vector<std::vector<std::size_t>> psi;
  };

  UniversalGroupoid universal_groupoid(FiniteInverseSemigroup const& s);

  // action[g][x]: image of x under group element g. Throws InvalidAction.
  FiniteGroupoid transformation_groupoid(FiniteGroup const&                           g,
                                         std::vector<std::vector<std::size_t>> const& action);

}  // namespace regulus

#endif  // REGULUS_GROUPOID_HPP_
