// Finite groups given by a multiplication table.

#ifndef REGULUS_GROUP_HPP_
#define REGULUS_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

namespace regulus {

  class FiniteGroup {
   public:
    using Table = std::vector<std::vector<std::size_t>>;

    // Validates closure, associativity, identity and inverses (InvalidInput).
    static FiniteGroup from_table(Table table);

    static FiniteGroup trivial();
    static FiniteGroup cyclic(std::size_t n);
    // Symmetric group on n points, elements in lexicographic order of their
    // image arrays; element 0 is the identity.
    static FiniteGroup symmetric(std::size_t n);

    std::size_t size() const noexcept {
      return _table.size();
    }
    std::size_t identity() const noexcept {
      return _identity;
    }
    std::size_t multiply(std::size_t a, std::size_t b) const {
      return _table[a][b];
    }
    std::size_t inverse(std::size_t a) const {
      return _inverse[a];
    }
    Table const& table() const noexcept {
      return _table;
    }

    std::size_t element_order(std::size_t a) const;
    // Primes dividing |G|.
    std::set<std::uint64_t> order_primes() const;
    // Primes p for which some element has order p, i.e. the orders of the
    // cyclic subgroups of prime order.
    std::set<std::uint64_t> cyclic_prime_orders() const;

   private:
    FiniteGroup() = default;

    Table                    _table;
    std::size_t              _identity = 0;
    std::vector<std::size_t> _inverse;
  };

  // Is `map` (indexed by elements of g) an isomorphism g -> h?
  bool is_isomorphism(FiniteGroup const&              g,
                      FiniteGroup const&              h,
                      std::vector<std::size_t> const& map);

}  // namespace regulus

#endif  // REGULUS_GROUP_HPP_
