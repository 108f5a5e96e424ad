#include "regulus/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "regulus/errors.hpp"

namespace regulus {

  bool operator==(Scalar const& a, Scalar const& b) {
    return a._value == b._value;
  }

  namespace arith {
    bool is_prime(std::uint64_t n) {
      if (n < 2) {
        return false;
      }
      for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
          return false;
        }
      }
      return true;
    }

    std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
      std::vector<std::uint64_t> out;
      for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
          out.push_back(d);
          while (n % d == 0) {
            n /= d;
          }
        }
      }
      if (n > 1) {
        out.push_back(n);
      }
      return out;
    }

    bool is_squarefree(std::uint64_t n) {
      for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % (d * d) == 0) {
          return false;
        }
      }
      return true;
    }

    std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
      return std::gcd(a, b);
    }

    std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
      return std::lcm(a, b);
    }

    std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
      return static_cast<std::uint64_t>(
          (static_cast<unsigned __int128>(a) * b) % n);
    }

    std::optional<std::uint64_t> inv_mod(std::uint64_t a, std::uint64_t n) {
      // extended Euclid on signed 128-bit to avoid overflow
      __int128 t = 0, new_t = 1;
      __int128 r = n, new_r = a % n;
      while (new_r != 0) {
        __int128 q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
      }
      if (r != 1) {
        return std::nullopt;
      }
      if (t < 0) {
        t += n;
      }
      return static_cast<std::uint64_t>(t);
    }
  }  // namespace arith

  CoeffRing CoeffRing::rationals() {
    return CoeffRing(Kind::rationals, 0, {});
  }

  CoeffRing CoeffRing::prime_field(std::uint64_t p) {
    if (!arith::is_prime(p)) {
      throw InvalidInput("F_p requires p prime, got " + std::to_string(p));
    }
    return CoeffRing(Kind::prime_field, p, {});
  }

  CoeffRing CoeffRing::integers_mod(std::uint64_t n) {
    if (n < 2) {
      throw InvalidInput("Z/n requires n >= 2, got " + std::to_string(n));
    }
    return CoeffRing(Kind::integers_mod, n, {});
  }

  CoeffRing CoeffRing::product(std::vector<CoeffRing> factors) {
    if (factors.empty()) {
      throw InvalidInput("product ring needs at least one factor");
    }
    return CoeffRing(Kind::product, 0, std::move(factors));
  }

  namespace {
    std::string trim(std::string_view s) {
      std::size_t b = 0, e = s.size();
      while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
      }
      while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
      }
      return std::string(s.substr(b, e - b));
    }

    std::uint64_t parse_modulus(std::string const& digits,
                                std::string const& literal) {
      if (digits.empty()
          || !std::all_of(digits.begin(), digits.end(), [](char c) {
               return std::isdigit(static_cast<unsigned char>(c));
             })) {
        throw InvalidInput("bad ring literal '" + literal + "'");
      }
      return std::stoull(digits);
    }
  }  // namespace

  CoeffRing CoeffRing::parse(std::string_view literal) {
    std::string s = trim(literal);
    if (s == "Q") {
      return rationals();
    }
    if (s.rfind("product:", 0) == 0) {
      std::string body = trim(std::string_view(s).substr(8));
      if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
        throw InvalidInput("bad product literal '" + s + "'");
      }
      body = body.substr(1, body.size() - 2);
      std::vector<CoeffRing> factors;
      int                    depth = 0;
      std::size_t            start = 0;
      for (std::size_t i = 0; i <= body.size(); ++i) {
        if (i == body.size() || (body[i] == ',' && depth == 0)) {
          factors.push_back(parse(std::string_view(body).substr(start, i - start)));
          start = i + 1;
        } else if (body[i] == '[') {
          ++depth;
        } else if (body[i] == ']') {
          --depth;
        }
      }
      return product(std::move(factors));
    }
    if (s.size() >= 2 && s[0] == 'F') {
      return prime_field(parse_modulus(s.substr(1), s));
    }
    if (s.size() >= 2 && s[0] == 'Z') {
      return integers_mod(parse_modulus(s.substr(1), s));
    }
    throw InvalidInput("unknown ring literal '" + s + "'");
  }

  std::string CoeffRing::name() const {
    switch (_kind) {
      case Kind::rationals:
        return "Q";
      case Kind::prime_field:
        return "F" + std::to_string(_modulus);
      case Kind::integers_mod:
        return "Z" + std::to_string(_modulus);
      case Kind::product: {
        std::string out = "product:[";
        for (std::size_t i = 0; i < _factors.size(); ++i) {
          out += (i ? "," : "") + _factors[i].name();
        }
        return out + "]";
      }
    }
    return "?";
  }

  bool CoeffRing::is_field() const noexcept {
    switch (_kind) {
      case Kind::rationals:
      case Kind::prime_field:
        return true;
      case Kind::integers_mod:
        return arith::is_prime(_modulus);
      case Kind::product:
        return _factors.size() == 1 && _factors[0].is_field();
    }
    return false;
  }

  bool CoeffRing::is_finite() const noexcept {
    switch (_kind) {
      case Kind::rationals:
        return false;
      case Kind::prime_field:
      case Kind::integers_mod:
        return true;
      case Kind::product:
        return std::all_of(_factors.begin(),
                           _factors.end(),
                           [](CoeffRing const& f) { return f.is_finite(); });
    }
    return false;
  }

  std::optional<std::uint64_t> CoeffRing::cardinality() const {
    switch (_kind) {
      case Kind::rationals:
        return std::nullopt;
      case Kind::prime_field:
      case Kind::integers_mod:
        return _modulus;
      case Kind::product: {
        std::uint64_t total = 1;
        for (auto const& f : _factors) {
          auto c = f.cardinality();
          if (!c || total > UINT64_MAX / *c) {
            return std::nullopt;
          }
          total *= *c;
        }
        return total;
      }
    }
    return std::nullopt;
  }

  Scalar CoeffRing::zero() const {
    return from_integer(0);
  }

  Scalar CoeffRing::one() const {
    return from_integer(1);
  }

  Scalar CoeffRing::from_integer(std::int64_t n) const {
    switch (_kind) {
      case Kind::rationals:
        return Scalar(mpq_class(static_cast<long>(n)));
      case Kind::prime_field:
      case Kind::integers_mod: {
        std::int64_t m = static_cast<std::int64_t>(_modulus);
        std::int64_t r = n % m;
        if (r < 0) {
          r += m;
        }
        return Scalar(static_cast<std::uint64_t>(r));
      }
      case Kind::product: {
        Scalar::Product parts;
        for (auto const& f : _factors) {
          parts.push_back(f.from_integer(n));
        }
        return Scalar(std::move(parts));
      }
    }
    return Scalar();
  }

  Scalar CoeffRing::from_rational(mpq_class const& q) const {
    if (_kind == Kind::rationals) {
      mpq_class c = q;
      c.canonicalize();
      return Scalar(c);
    }
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) {
      return from_integer(q.get_num().get_si());
    }
    // a/b in a residue ring needs b invertible
    if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p()) {
      throw InvalidInput("rational literal too large for " + name());
    }
    return mul(from_integer(q.get_num().get_si()),
               invert(from_integer(q.get_den().get_si())));
  }

  Scalar CoeffRing::add(Scalar const& a, Scalar const& b) const {
    switch (_kind) {
      case Kind::rationals:
        return Scalar(mpq_class(a.rational() + b.rational()));
      case Kind::prime_field:
      case Kind::integers_mod: {
        std::uint64_t s = a.residue() + b.residue();
        return Scalar(s >= _modulus ? s - _modulus : s);
      }
      case Kind::product: {
        Scalar::Product parts;
        for (std::size_t i = 0; i < _factors.size(); ++i) {
          parts.push_back(_factors[i].add(a.parts()[i], b.parts()[i]));
        }
        return Scalar(std::move(parts));
      }
    }
    return Scalar();
  }

  Scalar CoeffRing::neg(Scalar const& a) const {
    switch (_kind) {
      case Kind::rationals:
        return Scalar(mpq_class(-a.rational()));
      case Kind::prime_field:
      case Kind::integers_mod:
        return Scalar(a.residue() == 0 ? 0 : _modulus - a.residue());
      case Kind::product: {
        Scalar::Product parts;
        for (std::size_t i = 0; i < _factors.size(); ++i) {
          parts.push_back(_factors[i].neg(a.parts()[i]));
        }
        return Scalar(std::move(parts));
      }
    }
    return Scalar();
  }

  Scalar CoeffRing::sub(Scalar const& a, Scalar const& b) const {
    return add(a, neg(b));
  }

  Scalar CoeffRing::mul(Scalar const& a, Scalar const& b) const {
    switch (_kind) {
      case Kind::rationals:
        return Scalar(mpq_class(a.rational() * b.rational()));
      case Kind::prime_field:
      case Kind::integers_mod:
        return Scalar(arith::mul_mod(a.residue(), b.residue(), _modulus));
      case Kind::product: {
        Scalar::Product parts;
        for (std::size_t i = 0; i < _factors.size(); ++i) {
          parts.push_back(_factors[i].mul(a.parts()[i], b.parts()[i]));
        }
        return Scalar(std::move(parts));
      }
    }
    return Scalar();
  }

  std::optional<Scalar> CoeffRing::try_invert(Scalar const& a) const {
    switch (_kind) {
      case Kind::rationals:
        if (a.rational() == 0) {
          return std::nullopt;
        }
        return Scalar(mpq_class(1 / a.rational()));
      case Kind::prime_field:
      case Kind::integers_mod: {
        auto inv = arith::inv_mod(a.residue(), _modulus);
        if (!inv) {
          return std::nullopt;
        }
        return Scalar(*inv);
      }
      case Kind::product: {
        Scalar::Product parts;
        for (std::size_t i = 0; i < _factors.size(); ++i) {
          auto inv = _factors[i].try_invert(a.parts()[i]);
          if (!inv) {
            return std::nullopt;
          }
          parts.push_back(std::move(*inv));
        }
        return Scalar(std::move(parts));
      }
    }
    return std::nullopt;
  }

  Scalar CoeffRing::invert(Scalar const& a) const {
    auto inv = try_invert(a);
    if (!inv) {
      throw NonUnit(format(a) + " is not a unit in " + name());
    }
    return *inv;
  }

  bool CoeffRing::is_zero(Scalar const& a) const {
    switch (_kind) {
      case Kind::rationals:
        return a.rational() == 0;
      case Kind::prime_field:
      case Kind::integers_mod:
        return a.residue() == 0;
      case Kind::product:
        for (std::size_t i = 0; i < _factors.size(); ++i) {
          if (!_factors[i].is_zero(a.parts()[i])) {
            return false;
          }
        }
        return true;
    }
    return false;
  }

  bool CoeffRing::contains(Scalar const& a) const {
    switch (_kind) {
      case Kind::rationals:
        return a.is_rational();
      case Kind::prime_field:
      case Kind::integers_mod:
        return a.is_residue() && a.residue() < _modulus;
      case Kind::product:
        if (!a.is_product() || a.parts().size() != _factors.size()) {
          return false;
        }
        for (std::size_t i = 0; i < _factors.size(); ++i) {
          if (!_factors[i].contains(a.parts()[i])) {
            return false;
          }
        }
        return true;
    }
    return false;
  }

  Scalar CoeffRing::element(std::uint64_t index) const {
    switch (_kind) {
      case Kind::rationals:
        throw UnsupportedRing("cannot enumerate Q");
      case Kind::prime_field:
      case Kind::integers_mod:
        return Scalar(index % _modulus);
      case Kind::product: {
        Scalar::Product parts;
        for (auto const& f : _factors) {
          std::uint64_t c = *f.cardinality();
          parts.push_back(f.element(index % c));
          index /= c;
        }
        return Scalar(std::move(parts));
      }
    }
    return Scalar();
  }

  std::string CoeffRing::format(Scalar const& a) const {
    switch (_kind) {
      case Kind::rationals:
        return a.rational().get_str();
      case Kind::prime_field:
      case Kind::integers_mod:
        return std::to_string(a.residue());
      case Kind::product: {
        std::string out = "(";
        for (std::size_t i = 0; i < _factors.size(); ++i) {
          out += (i ? "," : "") + _factors[i].format(a.parts()[i]);
        }
        return out + ")";
      }
    }
    return "?";
  }

  std::optional<std::vector<CoeffRing>> CoeffRing::field_components() const {
    switch (_kind) {
      case Kind::rationals:
      case Kind::prime_field:
        return std::vector<CoeffRing>{*this};
      case Kind::integers_mod: {
        if (!arith::is_squarefree(_modulus)) {
          return std::nullopt;
        }
        std::vector<CoeffRing> out;
        for (auto p : arith::prime_factors(_modulus)) {
          out.push_back(prime_field(p));
        }
        return out;
      }
      case Kind::product: {
        std::vector<CoeffRing> out;
        for (auto const& f : _factors) {
          auto sub = f.field_components();
          if (!sub) {
            return std::nullopt;
          }
          out.insert(out.end(), sub->begin(), sub->end());
        }
        return out;
      }
    }
    return std::nullopt;
  }

  std::vector<Scalar> CoeffRing::project(Scalar const& a) const {
    switch (_kind) {
      case Kind::rationals:
      case Kind::prime_field:
        return {a};
      case Kind::integers_mod: {
        std::vector<Scalar> out;
        for (auto p : arith::prime_factors(_modulus)) {
          out.emplace_back(a.residue() % p);
        }
        return out;
      }
      case Kind::product: {
        std::vector<Scalar> out;
        for (std::size_t i = 0; i < _factors.size(); ++i) {
          auto sub = _factors[i].project(a.parts()[i]);
          out.insert(out.end(), sub.begin(), sub.end());
        }
        return out;
      }
    }
    return {};
  }

  Scalar CoeffRing::lift(std::vector<Scalar> const& components) const {
    switch (_kind) {
      case Kind::rationals:
      case Kind::prime_field:
        return components.at(0);
      case Kind::integers_mod: {
        // Chinese remainder reconstruction
        auto          primes = arith::prime_factors(_modulus);
        std::uint64_t x      = 0;
        for (std::size_t i = 0; i < primes.size(); ++i) {
          std::uint64_t p  = primes[i];
          std::uint64_t mp = _modulus / p;
          std::uint64_t c  = arith::mul_mod(
              components.at(i).residue(), *arith::inv_mod(mp % p, p), p);
          x = (x + arith::mul_mod(c, mp, _modulus)) % _modulus;
        }
        return Scalar(x);
      }
      case Kind::product: {
        Scalar::Product parts;
        std::size_t     offset = 0;
        for (auto const& f : _factors) {
          std::size_t k = f.field_components()->size();
          parts.push_back(f.lift(std::vector<Scalar>(
              components.begin() + offset, components.begin() + offset + k)));
          offset += k;
        }
        return Scalar(std::move(parts));
      }
    }
    return Scalar();
  }

  bool operator==(CoeffRing const& a, CoeffRing const& b) {
    return a._kind == b._kind && a._modulus == b._modulus
           && a._factors == b._factors;
  }

  bool is_regular_ring(CoeffRing const& ring) {
    switch (ring.kind()) {
      case CoeffRing::Kind::rationals:
      case CoeffRing::Kind::prime_field:
        return true;
      case CoeffRing::Kind::integers_mod:
        return arith::is_squarefree(ring.modulus());
      case CoeffRing::Kind::product:
        return std::all_of(ring.factors().begin(),
                           ring.factors().end(),
                           [](CoeffRing const& f) { return is_regular_ring(f); });
    }
    return false;
  }

  bool is_invertible(CoeffRing const& ring, std::uint64_t n) {
    switch (ring.kind()) {
      case CoeffRing::Kind::rationals:
        return n != 0;
      case CoeffRing::Kind::prime_field:
        return n % ring.modulus() != 0;
      case CoeffRing::Kind::integers_mod:
        return arith::gcd(n % ring.modulus(), ring.modulus()) == 1;
      case CoeffRing::Kind::product:
        return std::all_of(ring.factors().begin(),
                           ring.factors().end(),
                           [n](CoeffRing const& f) { return is_invertible(f, n); });
    }
    return false;
  }

}  // namespace regulus
