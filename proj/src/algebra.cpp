#include "regulus/algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "regulus/errors.hpp"

namespace regulus {

  namespace {
    std::uint64_t sat_pow(std::uint64_t base, std::size_t exp) {
      std::uint64_t r = 1;
      for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) {
          return UINT64_MAX;
        }
        r *= base;
      }
      return r;
    }

    void accumulate(CoeffRing const&               ring,
                    std::map<std::size_t, Scalar>& out,
                    std::size_t                    k,
                    Scalar const&                  c) {
      auto it = out.find(k);
      if (it == out.end()) {
        if (!ring.is_zero(c)) {
          out.emplace(k, c);
        }
        return;
      }
      it->second = ring.add(it->second, c);
      if (ring.is_zero(it->second)) {
        out.erase(it);
      }
    }

    Matrix matmul(CoeffRing const& ring, Matrix const& a, Matrix const& b) {
      Matrix c = Matrix::zero(ring, a.rows(), b.cols());
      for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
          if (ring.is_zero(a(i, k))) {
            continue;
          }
          for (std::size_t j = 0; j < b.cols(); ++j) {
            c(i, j) = ring.add(c(i, j), ring.mul(a(i, k), b(k, j)));
          }
        }
      }
      return c;
    }

    // Matrix of x -> a x a.
    Matrix sandwich_matrix(StructureConstAlgebra const& alg, AlgElement const& a) {
      return matmul(alg.ring(), alg.right_matrix(a), alg.left_matrix(a));
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // StructureConstAlgebra
  ////////////////////////////////////////////////////////////////////////

  StructureConstAlgebra::StructureConstAlgebra(CoeffRing                      ring,
                                               std::vector<std::string>       labels,
                                               std::vector<std::vector<Term>> products,
                                               std::optional<AlgElement>      unit)
      : _ring(std::move(ring)),
        _labels(std::move(labels)),
        _products(std::move(products)),
        _unit(std::move(unit)) {
    std::size_t const d = _labels.size();
    if (_products.size() != d * d) {
      throw InvalidInput("structure constant table must have dim^2 entries");
    }
    for (auto& terms : _products) {
      std::map<std::size_t, Scalar> clean;
      for (auto const& [k, c] : terms) {
        if (k >= d) {
          throw InvalidInput("structure constant refers to basis index " + std::to_string(k));
        }
        accumulate(_ring, clean, k, c);
      }
      terms.assign(clean.begin(), clean.end());
    }
    auto check_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
      if (mul(mul(basis(i), basis(j)), basis(k)) != mul(basis(i), mul(basis(j), basis(k)))) {
        throw InvalidInput("structure constants are not associative at (" + _labels[i] + ","
                           + _labels[j] + "," + _labels[k] + ")");
      }
    };
    if (d <= 64) {
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          for (std::size_t k = 0; k < d; ++k) {
            check_triple(i, j, k);
          }
        }
      }
    } else {
      std::mt19937_64 rng(d);
      for (int n = 0; n < 4096; ++n) {
        check_triple(rng() % d, rng() % d, rng() % d);
      }
    }
    if (_unit) {
      for (std::size_t i = 0; i < d; ++i) {
        if (mul(*_unit, basis(i)) != basis(i) || mul(basis(i), *_unit) != basis(i)) {
          throw InvalidInput("declared unit does not fix " + _labels[i]);
        }
      }
    }
  }

  StructureConstAlgebra StructureConstAlgebra::monomial(CoeffRing                       ring,
                                                        std::vector<std::string>        labels,
                                                        std::vector<std::size_t> const& table,
                                                        std::optional<AlgElement>       unit) {
    std::vector<std::vector<Term>> products(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i] != npos) {
        products[i].emplace_back(table[i], ring.one());
      }
    }
    return StructureConstAlgebra(std::move(ring), std::move(labels), std::move(products),
                                 std::move(unit));
  }

  AlgElement StructureConstAlgebra::basis(std::size_t i) const {
    AlgElement e;
    e.terms.emplace(i, _ring.one());
    return e;
  }

  AlgElement StructureConstAlgebra::add(AlgElement const& a, AlgElement const& b) const {
    AlgElement out = a;
    for (auto const& [k, c] : b.terms) {
      accumulate(_ring, out.terms, k, c);
    }
    return out;
  }

  AlgElement StructureConstAlgebra::sub(AlgElement const& a, AlgElement const& b) const {
    return add(a, scale(_ring.neg(_ring.one()), b));
  }

  AlgElement StructureConstAlgebra::scale(Scalar const& c, AlgElement const& a) const {
    AlgElement out;
    for (auto const& [k, x] : a.terms) {
      accumulate(_ring, out.terms, k, _ring.mul(c, x));
    }
    return out;
  }

  AlgElement StructureConstAlgebra::mul(AlgElement const& a, AlgElement const& b) const {
    AlgElement out;
    for (auto const& [i, x] : a.terms) {
      for (auto const& [j, y] : b.terms) {
        Scalar xy = _ring.mul(x, y);
        for (auto const& [k, c] : product(i, j)) {
          accumulate(_ring, out.terms, k, _ring.mul(xy, c));
        }
      }
    }
    return out;
  }

  AlgElement StructureConstAlgebra::from_dense(std::vector<Scalar> const& coords) const {
    if (coords.size() != dimension()) {
      throw DimensionMismatch("coordinate vector length differs from the dimension");
    }
    AlgElement out;
    for (std::size_t k = 0; k < coords.size(); ++k) {
      accumulate(_ring, out.terms, k, coords[k]);
    }
    return out;
  }

  std::vector<Scalar> StructureConstAlgebra::to_dense(AlgElement const& a) const {
    std::vector<Scalar> out(dimension(), _ring.zero());
    for (auto const& [k, c] : a.terms) {
      out.at(k) = c;
    }
    return out;
  }

  Matrix StructureConstAlgebra::left_matrix(AlgElement const& a) const {
    std::size_t const d = dimension();
    Matrix            m = Matrix::zero(_ring, d, d);
    for (auto const& [i, x] : a.terms) {
      for (std::size_t j = 0; j < d; ++j) {
        for (auto const& [k, c] : product(i, j)) {
          m(k, j) = _ring.add(m(k, j), _ring.mul(x, c));
        }
      }
    }
    return m;
  }

  Matrix StructureConstAlgebra::right_matrix(AlgElement const& a) const {
    std::size_t const d = dimension();
    Matrix            m = Matrix::zero(_ring, d, d);
    for (auto const& [i, x] : a.terms) {
      for (std::size_t j = 0; j < d; ++j) {
        for (auto const& [k, c] : product(j, i)) {
          m(k, j) = _ring.add(m(k, j), _ring.mul(x, c));
        }
      }
    }
    return m;
  }

  std::string StructureConstAlgebra::format(AlgElement const& a) const {
    if (a.is_zero()) {
      return "0";
    }
    std::string out;
    for (auto const& [k, c] : a.terms) {
      out += out.empty() ? "" : " + ";
      if (c != _ring.one()) {
        out += _ring.format(c) + "*";
      }
      out += _labels[k];
    }
    return out;
  }

  StructureConstAlgebra StructureConstAlgebra::component(std::size_t k) const {
    auto comps = _ring.field_components();
    if (!comps || k >= comps->size()) {
      throw UnsupportedRing(_ring.name() + " has no field component " + std::to_string(k));
    }
    CoeffRing const& f    = (*comps)[k];
    auto             proj = [&](Scalar const& c) { return _ring.project(c)[k]; };
    std::vector<std::vector<Term>> products(_products.size());
    for (std::size_t i = 0; i < _products.size(); ++i) {
      for (auto const& [b, c] : _products[i]) {
        products[i].emplace_back(b, proj(c));
      }
    }
    std::optional<AlgElement> unit;
    if (_unit) {
      unit.emplace();
      for (auto const& [b, c] : _unit->terms) {
        accumulate(f, unit->terms, b, proj(c));
      }
    }
    return StructureConstAlgebra(f, _labels, std::move(products), std::move(unit));
  }

  ////////////////////////////////////////////////////////////////////////
  // Builders
  ////////////////////////////////////////////////////////////////////////

  StructureConstAlgebra semigroup_algebra(FiniteInverseSemigroup const& s, CoeffRing const& ring) {
    std::size_t const        n = s.size();
    std::vector<std::size_t> table(n * n);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(s.element(i).to_string());
      for (std::size_t j = 0; j < n; ++j) {
        table[i * n + j] = s.product(i, j);
      }
    }
    std::optional<AlgElement> unit;
    if (auto id = s.identity()) {
      unit = AlgElement{{{*id, ring.one()}}};
    }
    return StructureConstAlgebra::monomial(ring, std::move(labels), table, std::move(unit));
  }

  StructureConstAlgebra group_algebra(FiniteGroup const& g, CoeffRing const& ring) {
    std::size_t const        n = g.size();
    std::vector<std::size_t> table(n * n);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back("g" + std::to_string(i));
      for (std::size_t j = 0; j < n; ++j) {
        table[i * n + j] = g.multiply(i, j);
      }
    }
    return StructureConstAlgebra::monomial(ring, std::move(labels), table,
                                           AlgElement{{{g.identity(), ring.one()}}});
  }

  StructureConstAlgebra groupoid_algebra(FiniteGroupoid const& g, CoeffRing const& ring) {
    std::size_t const        m = g.arrow_count();
    std::vector<std::size_t> table(m * m);
    std::vector<std::string> labels;
    AlgElement               unit;
    for (std::size_t a = 0; a < m; ++a) {
      labels.push_back(g.label(a));
      for (std::size_t b = 0; b < m; ++b) {
        std::size_t ab   = g.compose(a, b);
        table[a * m + b] = ab == FiniteGroupoid::npos ? StructureConstAlgebra::npos : ab;
      }
      if (g.is_unit(a)) {
        unit.terms.emplace(a, ring.one());
      }
    }
    return StructureConstAlgebra::monomial(ring, std::move(labels), table, std::move(unit));
  }

  StructureConstAlgebra matrix_algebra(StructureConstAlgebra const& a, std::size_t n) {
    using Term          = StructureConstAlgebra::Term;
    std::size_t const d = a.dimension();
    std::size_t const D = n * n * d;
    auto idx = [&](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * d + k; };
    std::vector<std::string>       labels(D);
    std::vector<std::vector<Term>> products(D * D);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
          labels[idx(i, j, k)] =
              "E" + std::to_string(i + 1) + std::to_string(j + 1) + "(" + a.label(k) + ")";
          for (std::size_t m = 0; m < n; ++m) {
            for (std::size_t q = 0; q < d; ++q) {
              auto& slot = products[idx(i, j, k) * D + idx(j, m, q)];
              for (auto const& [r, c] : a.product(k, q)) {
                slot.emplace_back(idx(i, m, r), c);
              }
            }
          }
        }
      }
    }
    std::optional<AlgElement> unit;
    if (a.unit()) {
      unit.emplace();
      for (std::size_t i = 0; i < n; ++i) {
        for (auto const& [k, c] : a.unit()->terms) {
          unit->terms.emplace(idx(i, i, k), c);
        }
      }
    }
    return StructureConstAlgebra(a.ring(), std::move(labels), std::move(products), std::move(unit));
  }

  StructureConstAlgebra direct_sum(std::vector<StructureConstAlgebra> const& parts) {
    using Term = StructureConstAlgebra::Term;
    if (parts.empty()) {
      throw InvalidInput("direct sum of no algebras");
    }
    std::vector<std::size_t> offset;
    std::size_t              D = 0;
    for (auto const& p : parts) {
      if (!(p.ring() == parts.front().ring())) {
        throw InvalidInput("direct summands have different coefficient rings");
      }
      offset.push_back(D);
      D += p.dimension();
    }
    std::vector<std::string>       labels;
    std::vector<std::vector<Term>> products(D * D);
    bool                           unital = true;
    AlgElement                     unit;
    for (std::size_t s = 0; s < parts.size(); ++s) {
      auto const& p = parts[s];
      for (std::size_t i = 0; i < p.dimension(); ++i) {
        labels.push_back(parts.size() == 1 ? p.label(i)
                                           : std::to_string(s) + ":" + p.label(i));
        for (std::size_t j = 0; j < p.dimension(); ++j) {
          for (auto const& [k, c] : p.product(i, j)) {
            products[(offset[s] + i) * D + offset[s] + j].emplace_back(offset[s] + k, c);
          }
        }
      }
      if (p.unit()) {
        for (auto const& [k, c] : p.unit()->terms) {
          unit.terms.emplace(offset[s] + k, c);
        }
      } else {
        unital = false;
      }
    }
    return StructureConstAlgebra(parts.front().ring(), std::move(labels), std::move(products),
                                 unital ? std::optional<AlgElement>(std::move(unit))
                                        : std::nullopt);
  }

  AlgElement random_element(StructureConstAlgebra const& a, std::mt19937_64& rng) {
    CoeffRing const&    ring = a.ring();
    std::vector<Scalar> coords;
    for (std::size_t k = 0; k < a.dimension(); ++k) {
      if (ring.is_finite()) {
        coords.push_back(ring.element(rng() % *ring.cardinality()));
      } else {
        coords.push_back(ring.from_integer(static_cast<std::int64_t>(rng() % 7) - 3));
      }
    }
    return a.from_dense(coords);
  }

  ////////////////////////////////////////////////////////////////////////
  // Per-element regularity
  ////////////////////////////////////////////////////////////////////////

  std::optional<AlgElement> element_is_regular(StructureConstAlgebra const& a,
                                               AlgElement const&            x) {
    if (!a.ring().field_components()) {
      throw UnsupportedRing("quasi-inverse solve needs a product of fields, not "
                            + a.ring().name());
    }
    auto sol = solve(a.ring(), sandwich_matrix(a, x), a.to_dense(x));
    if (!sol) {
      return std::nullopt;
    }
    AlgElement b = a.from_dense(*sol);
    if (a.mul(a.mul(x, b), x) != x) {
      throw std::logic_error("quasi-inverse failed re-verification");
    }
    return b;
  }

  std::optional<AlgElement> quasi_inverse_exhaustive(StructureConstAlgebra const& a,
                                                     AlgElement const&            x,
                                                     std::uint64_t                budget) {
    CoeffRing const& ring = a.ring();
    if (!ring.is_finite()) {
      throw UnsupportedRing("exhaustive search needs a finite ring");
    }
    std::size_t const   d     = a.dimension();
    std::uint64_t const q     = *ring.cardinality();
    std::uint64_t const total = sat_pow(q, d);
    if (total > budget) {
      throw CapExceeded(budget);
    }
    Matrix const              m      = sandwich_matrix(a, x);
    std::vector<Scalar> const target = a.to_dense(x);
    std::vector<std::uint64_t> digits(d, 0);
    for (std::uint64_t n = 0; n < total; ++n) {
      bool ok = true;
      for (std::size_t r = 0; r < d && ok; ++r) {
        Scalar acc = ring.zero();
        for (std::size_t c = 0; c < d; ++c) {
          if (digits[c] != 0) {
            acc = ring.add(acc, ring.mul(m(r, c), ring.element(digits[c])));
          }
        }
        ok = acc == target[r];
      }
      if (ok) {
        std::vector<Scalar> coords;
        for (auto dg : digits) {
          coords.push_back(ring.element(dg));
        }
        return a.from_dense(coords);
      }
      for (std::size_t k = 0; k < d && ++digits[k] == q; ++k) {
        digits[k] = 0;
      }
    }
    return std::nullopt;
  }

  std::vector<AlgElement> trace_radical_char0(StructureConstAlgebra const& a) {
    CoeffRing const& ring = a.ring();
    if (ring.kind() != CoeffRing::Kind::rationals) {
      throw UnsupportedRing("trace radical needs Q coefficients, not " + ring.name());
    }
    std::size_t const   d = a.dimension();
    std::vector<Scalar> tr(d, ring.zero());
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t j = 0; j < d; ++j) {
        for (auto const& [r, c] : a.product(k, j)) {
          if (r == j) {
            tr[k] = ring.add(tr[k], c);
          }
        }
      }
    }
    // rows: y = b_j for each j, then y = 1 of the unitization
    Matrix t = Matrix::zero(ring, d + 1, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        for (auto const& [k, c] : a.product(i, j)) {
          t(j, i) = ring.add(t(j, i), ring.mul(c, tr[k]));
        }
      }
      t(d, i) = tr[i];
    }
    std::vector<AlgElement> out;
    for (auto const& v : nullspace(ring, t)) {
      out.push_back(a.from_dense(v));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Oracle
  ////////////////////////////////////////////////////////////////////////

  PrimeFieldSweep::PrimeFieldSweep(StructureConstAlgebra const& a)
      : _p(a.ring().modulus()), _d(a.dimension()), _prods(_d * _d) {
    if (!a.ring().is_field() || !a.ring().is_finite() || _p >= (1ull << 32)) {
      throw UnsupportedRing("dense sweep needs a prime field with p < 2^32, not "
                            + a.ring().name());
    }
    for (std::size_t i = 0; i < _d; ++i) {
      for (std::size_t j = 0; j < _d; ++j) {
        for (auto const& [k, c] : a.product(i, j)) {
          _prods[i * _d + j].emplace_back(k, c.residue());
        }
      }
    }
    _l.resize(_d * _d);
    _r.resize(_d * _d);
    _m.resize(_d * (_d + 1));
  }

  bool PrimeFieldSweep::is_regular(std::vector<std::uint64_t> const& a) {
    std::size_t const d = _d;
    std::fill(_l.begin(), _l.end(), 0);
    std::fill(_r.begin(), _r.end(), 0);
    for (std::size_t i = 0; i < d; ++i) {
      if (a[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < d; ++j) {
        for (auto [k, c] : _prods[i * d + j]) {
          _l[k * d + j] = (_l[k * d + j] + a[i] * c) % _p;
        }
        for (auto [k, c] : _prods[j * d + i]) {
          _r[k * d + j] = (_r[k * d + j] + a[i] * c) % _p;
        }
      }
    }
    std::size_t const w = d + 1;
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t j = 0; j < d; ++j) {
        std::uint64_t s = 0;
        for (std::size_t m = 0; m < d; ++m) {
          s = (s + _r[k * d + m] * _l[m * d + j]) % _p;
        }
        _m[k * w + j] = s;
      }
      _m[k * w + d] = a[k];
    }
    std::size_t row = 0;
    for (std::size_t col = 0; col < d && row < d; ++col) {
      std::size_t piv = row;
      while (piv < d && _m[piv * w + col] == 0) {
        ++piv;
      }
      if (piv == d) {
        continue;
      }
      if (piv != row) {
        for (std::size_t c = 0; c < w; ++c) {
          std::swap(_m[piv * w + c], _m[row * w + c]);
        }
      }
      std::uint64_t inv = *arith::inv_mod(_m[row * w + col], _p);
      for (std::size_t c = col; c < w; ++c) {
        _m[row * w + c] = _m[row * w + c] * inv % _p;
      }
      for (std::size_t r = 0; r < d; ++r) {
        std::uint64_t f = _m[r * w + col];
        if (r == row || f == 0) {
          continue;
        }
        for (std::size_t c = col; c < w; ++c) {
          _m[r * w + c] = (_m[r * w + c] + (_p - f) * _m[row * w + c]) % _p;
        }
      }
      ++row;
    }
    for (std::size_t r = row; r < d; ++r) {
      if (_m[r * w + d] != 0) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////

  namespace {
    AlgElement from_residues(StructureConstAlgebra const& a, std::vector<std::uint64_t> const& v) {
      std::vector<Scalar> coords;
      for (auto x : v) {
        coords.push_back(a.ring().element(x));
      }
      return a.from_dense(coords);
    }

    OracleVerdict oracle_prime_field(StructureConstAlgebra const& a, OracleOptions const& opts) {
      std::size_t const   d = a.dimension();
      std::uint64_t const q = a.ring().modulus();
      PrimeFieldSweep            sweep(a);
      std::vector<std::uint64_t> digits(d, 0);
      OracleVerdict              v;
      std::uint64_t const        total = sat_pow(q, d);
      if (total <= opts.budget) {
        v.method = OracleVerdict::Method::exhaustive;
        for (std::uint64_t n = 0; n < total; ++n) {
          ++v.checked;
          if (!sweep.is_regular(digits)) {
            v.verdict = Verdict::not_regular;
            v.witness = from_residues(a, digits);
            v.detail  = "no quasi-inverse for " + a.format(*v.witness);
            return v;
          }
          for (std::size_t k = 0; k < d && ++digits[k] == q; ++k) {
            digits[k] = 0;
          }
        }
        v.verdict = Verdict::regular;
        v.detail  = "all " + std::to_string(total) + " elements regular";
        return v;
      }
      v.method = OracleVerdict::Method::sampled;
      std::mt19937_64 rng(opts.seed);
      for (std::size_t n = 0; n < opts.samples; ++n) {
        for (auto& x : digits) {
          x = rng() % q;
        }
        ++v.checked;
        if (!sweep.is_regular(digits)) {
          v.verdict = Verdict::not_regular;
          v.witness = from_residues(a, digits);
          v.detail  = "no quasi-inverse for " + a.format(*v.witness);
          return v;
        }
      }
      v.verdict = Verdict::unknown;
      v.detail  = "no counterexample among " + std::to_string(opts.samples) + " samples";
      return v;
    }

    OracleVerdict oracle_rationals(StructureConstAlgebra const& a) {
      OracleVerdict v;
      v.method   = OracleVerdict::Method::trace_radical;
      auto rad   = trace_radical_char0(a);
      v.checked  = a.dimension();
      if (rad.empty()) {
        v.verdict = Verdict::regular;
        v.detail  = "trace form nondegenerate";
        return v;
      }
      v.verdict = Verdict::not_regular;
      v.witness = rad.front();
      if (element_is_regular(a, *v.witness)) {
        throw std::logic_error("radical element has a quasi-inverse");
      }
      v.detail = "radical of dimension " + std::to_string(rad.size()) + " contains "
                 + a.format(*v.witness);
      return v;
    }

    // Finite coefficient ring that is not a product of fields.
    OracleVerdict oracle_finite_ring(StructureConstAlgebra const& a, OracleOptions const& opts) {
      CoeffRing const&    ring  = a.ring();
      std::size_t const   d     = a.dimension();
      std::uint64_t const q     = *ring.cardinality();
      std::uint64_t const per   = sat_pow(q, d);
      bool const          full  = sat_pow(per, 2) <= opts.budget;
      OracleVerdict       v;
      v.method = full ? OracleVerdict::Method::exhaustive : OracleVerdict::Method::sampled;
      if (per > opts.budget) {
        v.verdict = Verdict::unknown;
        v.detail  = "quasi-inverse search space exceeds budget";
        return v;
      }
      std::mt19937_64            rng(opts.seed);
      std::vector<std::uint64_t> digits(d, 0);
      std::uint64_t const        count = full ? per : opts.samples;
      for (std::uint64_t n = 0; n < count; ++n) {
        if (!full) {
          for (auto& x : digits) {
            x = rng() % q;
          }
        }
        AlgElement x = from_residues(a, digits);
        ++v.checked;
        if (!quasi_inverse_exhaustive(a, x, opts.budget)) {
          v.verdict = Verdict::not_regular;
          v.witness = x;
          v.detail  = "no quasi-inverse for " + a.format(x);
          return v;
        }
        if (full) {
          for (std::size_t k = 0; k < d && ++digits[k] == q; ++k) {
            digits[k] = 0;
          }
        }
      }
      v.verdict = full ? Verdict::regular : Verdict::unknown;
      v.detail  = full ? "all elements regular"
                       : "no counterexample among " + std::to_string(count) + " samples";
      return v;
    }
  }  // namespace

  std::string OracleVerdict::method_name() const {
    switch (method) {
      case Method::exhaustive:
        return "Exhaustive";
      case Method::trace_radical:
        return "TraceRadical";
      case Method::sampled:
        return "Sampled(" + std::to_string(checked) + ")";
      case Method::componentwise:
        return "Componentwise";
    }
    return "?";
  }

  OracleVerdict algebra_is_regular_oracle(StructureConstAlgebra const& a,
                                          OracleOptions const&         opts) {
    CoeffRing const& ring = a.ring();
    if (ring.kind() == CoeffRing::Kind::rationals) {
      return oracle_rationals(a);
    }
    if (ring.is_field()) {
      return oracle_prime_field(a, opts);
    }
    auto comps = ring.field_components();
    if (!comps) {
      return oracle_finite_ring(a, opts);
    }
    OracleVerdict v;
    v.method = OracleVerdict::Method::componentwise;
    v.verdict = Verdict::regular;
    for (std::size_t k = 0; k < comps->size(); ++k) {
      OracleVerdict part = algebra_is_regular_oracle(a.component(k), opts);
      v.checked += part.checked;
      v.detail += (k ? "; " : "") + (*comps)[k].name() + ": " + part.method_name() + " "
                  + part.detail;
      if (part.verdict == Verdict::not_regular) {
        std::vector<Scalar> coords;
        auto                w = a.component(k).to_dense(*part.witness);
        for (std::size_t i = 0; i < a.dimension(); ++i) {
          std::vector<Scalar> c;
          for (std::size_t j = 0; j < comps->size(); ++j) {
            c.push_back(j == k ? w[i] : (*comps)[j].zero());
          }
          coords.push_back(ring.lift(c));
        }
        v.verdict = Verdict::not_regular;
        v.witness = a.from_dense(coords);
        return v;
      }
      if (part.verdict == Verdict::unknown) {
        v.verdict = Verdict::unknown;
      }
    }
    return v;
  }

  bool iso_check(StructureConstAlgebra const& a,
                 StructureConstAlgebra const& b,
                 Matrix const&                map) {
    std::size_t const d = a.dimension();
    if (b.dimension() != d || map.rows() != d || map.cols() != d) {
      throw DimensionMismatch("iso_check needs equal dimensions and a square map");
    }
    CoeffRing const& ring = a.ring();
    if (!(b.ring() == ring)) {
      throw DimensionMismatch("algebras have different coefficient rings");
    }
    if (!ring.try_invert(determinant(ring, map))) {
      return false;
    }
    std::vector<AlgElement> image(d);
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<Scalar> col;
      for (std::size_t r = 0; r < d; ++r) {
        col.push_back(map(r, i));
      }
      image[i] = b.from_dense(col);
    }
    auto apply = [&](AlgElement const& x) {
      AlgElement y;
      for (auto const& [k, c] : x.terms) {
        y = b.add(y, b.scale(c, image[k]));
      }
      return y;
    };
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if (apply(a.mul(a.basis(i), a.basis(j))) != b.mul(image[i], image[j])) {
          return false;
        }
      }
    }
    if (a.unit() && b.unit() && apply(*a.unit()) != *b.unit()) {
      return false;
    }
    return true;
  }

  Matrix universal_groupoid_map(UniversalGroupoid const& u, CoeffRing const& ring) {
    Matrix m = Matrix::zero(ring, u.groupoid.arrow_count(), u.psi.size());
    for (std::size_t s = 0; s < u.psi.size(); ++s) {
      for (auto a : u.psi[s]) {
        m(a, s) = ring.one();
      }
    }
    return m;
  }

  MatrixUnitsIsomorphism matrix_units_isomorphism(FiniteGroupoid const&           g,
                                                  MatrixUnitsDecomposition const& dec,
                                                  CoeffRing const&                ring) {
    std::vector<StructureConstAlgebra> parts;
    std::vector<std::size_t>           offset;
    std::size_t                        total = 0;
    for (auto const& comp : dec.components) {
      parts.push_back(matrix_algebra(group_algebra(comp.isotropy.group, ring), comp.units.size()));
      offset.push_back(total);
      total += parts.back().dimension();
    }
    StructureConstAlgebra target = direct_sum(parts);
    Matrix                map    = Matrix::zero(ring, total, g.arrow_count());
    for (std::size_t a = 0; a < g.arrow_count(); ++a) {
      auto const&       c = dec.coordinates[a];
      std::size_t const n = dec.components[c.component].units.size();
      std::size_t const h = dec.components[c.component].isotropy.arrows.size();
      map(offset[c.component] + (c.row * n + c.col) * h + c.iso, a) = ring.one();
    }
    return {std::move(target), std::move(map)};
  }

}  // namespace regulus
