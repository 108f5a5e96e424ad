// Finite inverse semigroups of partial bijections.
//
// Composition is right to left: (st)(x) = s(t(x)). Hence s*s is the identity
// on the domain of s and ss* the identity on its image, so the L-class of an
// idempotent e consists of the elements with domain dom(e).

#ifndef REGULUS_INVSGP_HPP_
#define REGULUS_INVSGP_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "regulus/decision.hpp"
#include "regulus/group.hpp"
#include "regulus/ring.hpp"

namespace regulus {

  class PartialBijection {
   public:
    static constexpr std::uint32_t undefined = UINT32_MAX;

    PartialBijection() = default;
    // Throws InvalidInput unless injective with images in [0, size).
    explicit PartialBijection(std::vector<std::uint32_t> images);

    static PartialBijection identity(std::size_t degree);
    static PartialBijection empty(std::size_t degree);
    // Identity restricted to `domain`.
    static PartialBijection partial_identity(std::size_t                     degree,
                                             std::vector<std::uint32_t> const& domain);

    std::size_t degree() const noexcept {
      return _images.size();
    }
    std::uint32_t operator[](std::size_t x) const {
      return _images[x];
    }
    std::vector<std::uint32_t> const& images() const noexcept {
      return _images;
    }

    std::size_t                rank() const;
    PartialBijection           inverse() const;
    bool                       is_idempotent() const;
    std::vector<std::uint32_t> domain() const;
    std::vector<std::uint32_t> image() const;

    // Degrees must agree (InvalidInput).
    friend PartialBijection operator*(PartialBijection const& s,
                                      PartialBijection const& t);

    friend auto operator<=>(PartialBijection const&, PartialBijection const&) = default;
    friend bool operator==(PartialBijection const&, PartialBijection const&) = default;

    std::string to_string() const;

   private:
    std::vector<std::uint32_t> _images;
  };

  struct PartialBijectionHash {
    std::size_t operator()(PartialBijection const& p) const noexcept;
  };

  class FiniteInverseSemigroup {
   public:
    // Inverse subsemigroup generated by the generators and their inverses.
    // Throws CapExceeded when it has more than `cap` elements.
    static FiniteInverseSemigroup generate(std::vector<PartialBijection> const& generators,
                                           std::size_t                          cap);

    // From a set already closed under products and inverses (InvalidInput
    // otherwise). Elements are sorted canonically.
    static FiniteInverseSemigroup from_elements(std::vector<PartialBijection> elements);

    std::size_t size() const noexcept {
      return _elements.size();
    }
    std::size_t degree() const noexcept {
      return _elements.front().degree();
    }
    PartialBijection const& element(std::size_t i) const {
      return _elements[i];
    }
    std::vector<PartialBijection> const& elements() const noexcept {
      return _elements;
    }
    std::size_t product(std::size_t s, std::size_t t) const {
      return _table[s * size() + t];
    }
    std::size_t inverse(std::size_t s) const {
      return _inverse[s];
    }
    bool is_idempotent(std::size_t s) const {
      return product(s, s) == s;
    }
    std::vector<std::size_t> const& idempotents() const noexcept {
      return _idempotents;
    }
    std::optional<std::size_t> index_of(PartialBijection const& p) const;
    // Index of the identity element when S is a monoid.
    std::optional<std::size_t> identity() const;
    // s <= t in the natural partial order: s = t(s*s).
    bool leq(std::size_t s, std::size_t t) const;

    // s s* s = s, s* s s* = s*, (st)* = t* s*, commuting idempotents.
    bool satisfies_inverse_axioms() const;

   private:
    FiniteInverseSemigroup() = default;
    void build_table();

    std::vector<PartialBijection>                                   _elements;
    std::unordered_map<PartialBijection, std::size_t, PartialBijectionHash> _index;
    std::vector<std::size_t>                                        _table;
    std::vector<std::size_t>                                        _inverse;
    std::vector<std::size_t>                                        _idempotents;
  };

  struct GreenClasses {
    std::vector<std::vector<std::size_t>> l_classes;
    std::vector<std::vector<std::size_t>> r_classes;
    std::vector<std::vector<std::size_t>> d_classes;
    // Class index of each element.
    std::vector<std::size_t> l_of;
    std::vector<std::size_t> r_of;
    std::vector<std::size_t> d_of;
  };

  GreenClasses green_classes(FiniteInverseSemigroup const& s);

  struct MaximalSubgroup {
    std::size_t              idempotent;
    std::vector<std::size_t> elements;  // indices into S, sorted
    FiniteGroup              group;     // indexed like `elements`
  };

  // Throws InvalidInput if e is not idempotent.
  MaximalSubgroup maximal_subgroup(FiniteInverseSemigroup const& s, std::size_t e);

  // Primes dividing the order of some maximal subgroup.
  std::set<std::uint64_t> subgroup_prime_support(FiniteInverseSemigroup const& s);

  RegularityDecision decide_regular_semigroup_algebra(FiniteInverseSemigroup const& s,
                                                      CoeffRing const&              ring);
  // Generator form: a closure beyond cap leaves local finiteness undecided.
  RegularityDecision decide_regular_semigroup_algebra(
      std::vector<PartialBijection> const& generators,
      std::size_t                          cap,
      CoeffRing const&                     ring);

  struct SchutzenbergerRepresentation {
    std::size_t                   idempotent;
    std::vector<std::size_t>      l_class;  // L_e, sorted
    std::vector<PartialBijection> action;   // per element of S, on positions in l_class
  };

  SchutzenbergerRepresentation schutzenberger_representation(FiniteInverseSemigroup const& s,
                                                             std::size_t                   e);

  struct LocalFinitenessCertificate {
    std::size_t order;           // size of the generated subsemigroup
    std::size_t max_l_class;     // largest L-class observed in it
    std::size_t birkhoff_bound;  // closure budget derived from N (saturating)
  };

  // Inverse subsemigroup of factors[0] x ... x factors[k-1] generated by the
  // tuples in `generators` (entry j of a tuple indexes factors[j]). N is the
  // claimed uniform bound on L-class sizes; the subsemigroup then embeds in
  // I_N^r with r = |I_N|^|X|, which bounds the closure. Throws CapExceeded
  // if the closure outgrows min(bound, hard_cap).
  LocalFinitenessCertificate bounded_l_class_local_finiteness(
      std::vector<FiniteInverseSemigroup> const&   factors,
      std::vector<std::vector<std::size_t>> const& generators,
      std::size_t                                  n,
      std::size_t                                  hard_cap = 1u << 20);

  // |I_n| = sum_k C(n,k)^2 k!
  std::size_t symmetric_inverse_monoid_order(std::size_t n);

}  // namespace regulus

#endif  // REGULUS_INVSGP_HPP_
