// Exact commutative coefficient rings: Q, F_p, Z/n and finite products of
// these. Every scalar operation is exact; there is no floating point.

#ifndef REGULUS_RING_HPP_
#define REGULUS_RING_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace regulus {

  class Scalar {
   public:
    using Product = std::vector<Scalar>;

    Scalar() : _value(std::uint64_t(0)) {}
    explicit Scalar(mpq_class q) : _value(std::move(q)) {}
    explicit Scalar(std::uint64_t residue) : _value(residue) {}
    explicit Scalar(Product parts) : _value(std::move(parts)) {}

    bool is_rational() const noexcept {
      return std::holds_alternative<mpq_class>(_value);
    }
    bool is_residue() const noexcept {
      return std::holds_alternative<std::uint64_t>(_value);
    }
    bool is_product() const noexcept {
      return std::holds_alternative<Product>(_value);
    }

    mpq_class const& rational() const {
      return std::get<mpq_class>(_value);
    }
    std::uint64_t residue() const {
      return std::get<std::uint64_t>(_value);
    }
    Product const& parts() const {
      return std::get<Product>(_value);
    }

    // Structural equality; only meaningful for scalars of the same ring.
    friend bool operator==(Scalar const& a, Scalar const& b);

   private:
    std::variant<mpq_class, std::uint64_t, Product> _value;
  };

  class CoeffRing {
   public:
    enum class Kind { rationals, prime_field, integers_mod, product };

    static CoeffRing rationals();
    static CoeffRing prime_field(std::uint64_t p);
    static CoeffRing integers_mod(std::uint64_t n);
    static CoeffRing product(std::vector<CoeffRing> factors);

    // "Q", "F<p>", "Z<n>" or "product:[R1,R2,...]".
    static CoeffRing parse(std::string_view literal);

    Kind kind() const noexcept {
      return _kind;
    }
    std::uint64_t modulus() const noexcept {
      return _modulus;
    }
    std::vector<CoeffRing> const& factors() const noexcept {
      return _factors;
    }

    std::string name() const;
    bool is_field() const noexcept;
    bool is_finite() const noexcept;
    // Number of elements, or nullopt for Q (or when it overflows 64 bits).
    std::optional<std::uint64_t> cardinality() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_integer(std::int64_t n) const;
    Scalar from_rational(mpq_class const& q) const;

    Scalar add(Scalar const& a, Scalar const& b) const;
    Scalar neg(Scalar const& a) const;
    Scalar sub(Scalar const& a, Scalar const& b) const;
    Scalar mul(Scalar const& a, Scalar const& b) const;
    std::optional<Scalar> try_invert(Scalar const& a) const;
    // Throws NonUnit.
    Scalar invert(Scalar const& a) const;

    bool is_zero(Scalar const& a) const;
    bool equal(Scalar const& a, Scalar const& b) const {
      return a == b;
    }
    bool contains(Scalar const& a) const;

    // Enumeration for finite rings: index in [0, cardinality). For products
    // the first factor is the least significant digit.
    Scalar element(std::uint64_t index) const;

    std::string format(Scalar const& a) const;

    // Decomposition of a product of fields into its field factors: Q and F_p
    // are themselves, Z/n for squarefree n splits by the Chinese remainder
    // theorem, products concatenate. nullopt when some factor is not a field.
    std::optional<std::vector<CoeffRing>> field_components() const;
    // Requires field_components() to be engaged.
    std::vector<Scalar> project(Scalar const& a) const;
    Scalar lift(std::vector<Scalar> const& components) const;

    friend bool operator==(CoeffRing const& a, CoeffRing const& b);

   private:
    CoeffRing(Kind k, std::uint64_t m, std::vector<CoeffRing> f)
        : _kind(k), _modulus(m), _factors(std::move(f)) {}

    Kind                   _kind;
    std::uint64_t          _modulus;
    std::vector<CoeffRing> _factors;
  };

  bool is_regular_ring(CoeffRing const& ring);
  // Is the image of n >= 1 a unit of the ring?
  bool is_invertible(CoeffRing const& ring, std::uint64_t n);

  namespace arith {
    bool                       is_prime(std::uint64_t n);
    bool                       is_squarefree(std::uint64_t n);
    std::vector<std::uint64_t> prime_factors(std::uint64_t n);
    std::uint64_t              gcd(std::uint64_t a, std::uint64_t b);
    std::uint64_t              lcm(std::uint64_t a, std::uint64_t b);
    std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n);
    // Inverse of a modulo n when gcd(a, n) = 1.
    std::optional<std::uint64_t> inv_mod(std::uint64_t a, std::uint64_t n);
  }  // namespace arith

}  // namespace regulus

#endif  // REGULUS_RING_HPP_
