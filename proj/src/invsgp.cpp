#include "regulus/invsgp.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "regulus/errors.hpp"

namespace regulus {

  ////////////////////////////////////////////////////////////////////////
  // PartialBijection
  ////////////////////////////////////////////////////////////////////////

  PartialBijection::PartialBijection(std::vector<std::uint32_t> images)
      : _images(std::move(images)) {
    std::vector<bool> hit(_images.size(), false);
    for (auto y : _images) {
      if (y == undefined) {
        continue;
      }
      if (y >= _images.size()) {
        throw InvalidInput("partial bijection image out of range");
      }
      if (hit[y]) {
        throw InvalidInput("partial bijection is not injective");
      }
      hit[y] = true;
    }
  }

  PartialBijection PartialBijection::identity(std::size_t degree) {
    std::vector<std::uint32_t> im(degree);
    std::iota(im.begin(), im.end(), 0);
    return PartialBijection(std::move(im));
  }

  PartialBijection PartialBijection::empty(std::size_t degree) {
    return PartialBijection(std::vector<std::uint32_t>(degree, undefined));
  }

  PartialBijection PartialBijection::partial_identity(
      std::size_t                       degree,
      std::vector<std::uint32_t> const& domain) {
    std::vector<std::uint32_t> im(degree, undefined);
    for (auto x : domain) {
      im.at(x) = x;
    }
    return PartialBijection(std::move(im));
  }

  std::size_t PartialBijection::rank() const {
    return std::count_if(_images.begin(), _images.end(), [](std::uint32_t y) {
      return y != undefined;
    });
  }

  PartialBijection PartialBijection::inverse() const {
    PartialBijection out;
    out._images.assign(_images.size(), undefined);
    for (std::size_t x = 0; x < _images.size(); ++x) {
      if (_images[x] != undefined) {
        out._images[_images[x]] = static_cast<std::uint32_t>(x);
      }
    }
    return out;
  }

  bool PartialBijection::is_idempotent() const {
    for (std::size_t x = 0; x < _images.size(); ++x) {
      if (_images[x] != undefined && _images[x] != x) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::uint32_t> PartialBijection::domain() const {
    std::vector<std::uint32_t> out;
    for (std::size_t x = 0; x < _images.size(); ++x) {
      if (_images[x] != undefined) {
        out.push_back(static_cast<std::uint32_t>(x));
      }
    }
    return out;
  }

  std::vector<std::uint32_t> PartialBijection::image() const {
    std::vector<std::uint32_t> out;
    for (auto y : _images) {
      if (y != undefined) {
        out.push_back(y);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  PartialBijection operator*(PartialBijection const& s, PartialBijection const& t) {
    if (s.degree() != t.degree()) {
      throw InvalidInput("cannot compose partial bijections of degrees "
                         + std::to_string(s.degree()) + " and "
                         + std::to_string(t.degree()));
    }
    PartialBijection out;
    out._images.resize(t.degree());
    for (std::size_t x = 0; x < t.degree(); ++x) {
      std::uint32_t y = t._images[x];
      out._images[x]  = y == PartialBijection::undefined ? y : s._images[y];
    }
    return out;
  }

  std::string PartialBijection::to_string() const {
    std::string out = "[";
    for (std::size_t x = 0; x < _images.size(); ++x) {
      out += x ? "," : "";
      out += _images[x] == undefined ? "-" : std::to_string(_images[x]);
    }
    return out + "]";
  }

  std::size_t PartialBijectionHash::operator()(PartialBijection const& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto y : p.images()) {
      h = (h ^ y) * 1099511628211ull;
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // FiniteInverseSemigroup
  ////////////////////////////////////////////////////////////////////////

  FiniteInverseSemigroup FiniteInverseSemigroup::generate(
      std::vector<PartialBijection> const& generators,
      std::size_t                          cap) {
    if (generators.empty()) {
      throw InvalidInput("at least one generator is required");
    }
    if (cap < 1) {
      throw InvalidInput("cap must be positive");
    }
    std::size_t const n = generators.front().degree();
    std::vector<PartialBijection> gens;
    for (auto const& g : generators) {
      if (g.degree() != n) {
        throw InvalidInput("generator degrees differ: " + std::to_string(n)
                           + " and " + std::to_string(g.degree()));
      }
      gens.push_back(g);
      gens.push_back(g.inverse());
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::unordered_map<PartialBijection, std::size_t, PartialBijectionHash> seen;
    std::vector<PartialBijection>                                          found;
    std::deque<std::size_t>                                                queue;
    auto                                                                   add = [&](PartialBijection const& p) {
      if (seen.emplace(p, found.size()).second) {
        if (found.size() == cap) {
          throw CapExceeded(cap);
        }
        found.push_back(p);
        queue.push_back(found.size() - 1);
      }
    };
    for (auto const& g : gens) {
      add(g);
    }
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop_front();
      for (auto const& g : gens) {
        add(found[i] * g);
      }
    }
    FiniteInverseSemigroup s;
    s._elements = std::move(found);
    std::sort(s._elements.begin(), s._elements.end());
    s.build_table();
    return s;
  }

  FiniteInverseSemigroup FiniteInverseSemigroup::from_elements(
      std::vector<PartialBijection> elements) {
    if (elements.empty()) {
      throw InvalidInput("a semigroup has at least one element");
    }
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    std::size_t const n = elements.front().degree();
    for (auto const& e : elements) {
      if (e.degree() != n) {
        throw InvalidInput("element degrees differ");
      }
    }
    FiniteInverseSemigroup s;
    s._elements = std::move(elements);
    s.build_table();
    return s;
  }

  void FiniteInverseSemigroup::build_table() {
    std::size_t const n = _elements.size();
    _index.clear();
    for (std::size_t i = 0; i < n; ++i) {
      _index.emplace(_elements[i], i);
    }
    auto lookup = [this](PartialBijection const& p) {
      auto it = _index.find(p);
      if (it == _index.end()) {
        throw InvalidInput("element set is not closed: " + p.to_string());
      }
      return it->second;
    };
    _table.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        _table[i * n + j] = lookup(_elements[i] * _elements[j]);
      }
    }
    _inverse.resize(n);
    _idempotents.clear();
    for (std::size_t i = 0; i < n; ++i) {
      _inverse[i] = lookup(_elements[i].inverse());
      if (_table[i * n + i] == i) {
        _idempotents.push_back(i);
      }
    }
  }

  std::optional<std::size_t> FiniteInverseSemigroup::index_of(PartialBijection const& p) const {
    auto it = _index.find(p);
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::optional<std::size_t> FiniteInverseSemigroup::identity() const {
    for (auto e : _idempotents) {
      bool ok = true;
      for (std::size_t s = 0; s < size() && ok; ++s) {
        ok = product(e, s) == s && product(s, e) == s;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  bool FiniteInverseSemigroup::leq(std::size_t s, std::size_t t) const {
    return s == product(t, product(inverse(s), s));
  }

  bool FiniteInverseSemigroup::satisfies_inverse_axioms() const {
    for (std::size_t s = 0; s < size(); ++s) {
      std::size_t si = inverse(s);
      if (product(product(s, si), s) != s || product(product(si, s), si) != si) {
        return false;
      }
      for (std::size_t t = 0; t < size(); ++t) {
        if (inverse(product(s, t)) != product(inverse(t), si)) {
          return false;
        }
      }
    }
    for (auto e : _idempotents) {
      for (auto f : _idempotents) {
        if (product(e, f) != product(f, e)) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Green's relations and maximal subgroups
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<std::vector<std::size_t>> classes_by_key(std::vector<std::size_t> const& key,
                                                         std::vector<std::size_t>&       class_of) {
      std::map<std::size_t, std::size_t>    first;
      std::vector<std::vector<std::size_t>> out;
      class_of.assign(key.size(), 0);
      for (std::size_t s = 0; s < key.size(); ++s) {
        auto [it, fresh] = first.emplace(key[s], out.size());
        if (fresh) {
          out.emplace_back();
        }
        out[it->second].push_back(s);
        class_of[s] = it->second;
      }
      return out;
    }

    std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    }
  }  // namespace

  GreenClasses green_classes(FiniteInverseSemigroup const& s) {
    std::size_t const        n = s.size();
    std::vector<std::size_t> dom(n), ran(n);
    for (std::size_t x = 0; x < n; ++x) {
      dom[x] = s.product(s.inverse(x), x);
      ran[x] = s.product(x, s.inverse(x));
    }
    GreenClasses g;
    g.l_classes = classes_by_key(dom, g.l_of);
    g.r_classes = classes_by_key(ran, g.r_of);

    // e D f iff some x has x*x = e and xx* = f
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t a = find_root(parent, dom[x]), b = find_root(parent, ran[x]);
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
      }
    }
    std::vector<std::size_t> dkey(n);
    for (std::size_t x = 0; x < n; ++x) {
      dkey[x] = find_root(parent, dom[x]);
    }
    g.d_classes = classes_by_key(dkey, g.d_of);
    return g;
  }

  MaximalSubgroup maximal_subgroup(FiniteInverseSemigroup const& s, std::size_t e) {
    if (e >= s.size() || !s.is_idempotent(e)) {
      throw InvalidInput("maximal subgroup requested at a non-idempotent");
    }
    std::vector<std::size_t> elements;
    for (std::size_t x = 0; x < s.size(); ++x) {
      if (s.product(s.inverse(x), x) == e && s.product(x, s.inverse(x)) == e) {
        elements.push_back(x);
      }
    }
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      pos[elements[i]] = i;
    }
    FiniteGroup::Table table(elements.size(), std::vector<std::size_t>(elements.size()));
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (std::size_t j = 0; j < elements.size(); ++j) {
        auto it = pos.find(s.product(elements[i], elements[j]));
        if (it == pos.end()) {
          throw InvalidInput("maximal subgroup is not closed");
        }
        table[i][j] = it->second;
      }
    }
    return MaximalSubgroup{e, std::move(elements), FiniteGroup::from_table(std::move(table))};
  }

  std::set<std::uint64_t> subgroup_prime_support(FiniteInverseSemigroup const& s) {
    std::set<std::uint64_t> primes;
    for (auto e : s.idempotents()) {
      auto p = maximal_subgroup(s, e).group.order_primes();
      primes.insert(p.begin(), p.end());
    }
    return primes;
  }

  RegularityDecision decide_regular_semigroup_algebra(FiniteInverseSemigroup const& s,
                                                      CoeffRing const&              ring) {
    std::vector<Condition> c;
    c.push_back(ring_regular_condition(ring));
    c.push_back({"semigroup locally finite", Condition::Status::pass,
                 "finite of order " + std::to_string(s.size())});
    c.push_back(primes_invertible_condition(subgroup_prime_support(s),
                                ring,
                                "finite subgroup orders invertible"));
    return RegularityDecision::from_conditions(std::move(c));
  }

  RegularityDecision decide_regular_semigroup_algebra(
      std::vector<PartialBijection> const& generators,
      std::size_t                          cap,
      CoeffRing const&                     ring) {
    try {
      return decide_regular_semigroup_algebra(
          FiniteInverseSemigroup::generate(generators, cap), ring);
    } catch (CapExceeded const& e) {
      std::vector<Condition> c;
      c.push_back(ring_regular_condition(ring));
      c.push_back({"semigroup locally finite", Condition::Status::unknown, e.what()});
      c.push_back({"finite subgroup orders invertible", Condition::Status::unknown,
                   "closure incomplete"});
      return RegularityDecision::from_conditions(std::move(c));
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Schutzenberger representation, Birkhoff bound
  ////////////////////////////////////////////////////////////////////////

  SchutzenbergerRepresentation schutzenberger_representation(FiniteInverseSemigroup const& s,
                                                             std::size_t                   e) {
    if (e >= s.size() || !s.is_idempotent(e)) {
      throw InvalidInput("Schutzenberger representation needs an idempotent");
    }
    SchutzenbergerRepresentation rep;
    rep.idempotent = e;
    std::vector<std::uint32_t> pos(s.size(), PartialBijection::undefined);
    for (std::size_t t = 0; t < s.size(); ++t) {
      if (s.product(s.inverse(t), t) == e) {
        pos[t] = static_cast<std::uint32_t>(rep.l_class.size());
        rep.l_class.push_back(t);
      }
    }
    for (std::size_t x = 0; x < s.size(); ++x) {
      std::vector<std::uint32_t> im(rep.l_class.size(), PartialBijection::undefined);
      for (std::size_t i = 0; i < rep.l_class.size(); ++i) {
        im[i] = pos[s.product(x, rep.l_class[i])];
      }
      rep.action.emplace_back(std::move(im));
    }
    return rep;
  }

  namespace {
    std::size_t sat_mul(std::size_t a, std::size_t b) {
      if (a != 0 && b > SIZE_MAX / a) {
        return SIZE_MAX;
      }
      return a * b;
    }

    std::size_t sat_pow(std::size_t base, std::size_t exp) {
      std::size_t r = 1;
      for (std::size_t i = 0; i < exp && r != SIZE_MAX; ++i) {
        r = sat_mul(r, base);
      }
      return base <= 1 ? (exp == 0 ? 1 : base) : r;
    }
  }  // namespace

  std::size_t symmetric_inverse_monoid_order(std::size_t n) {
    std::size_t total = 0, binom = 1, fact = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      if (k > 0) {
        binom = binom * (n - k + 1) / k;
        fact  = sat_mul(fact, k);
      }
      total += sat_mul(sat_mul(binom, binom), fact);
    }
    return total;
  }

  LocalFinitenessCertificate bounded_l_class_local_finiteness(
      std::vector<FiniteInverseSemigroup> const&   factors,
      std::vector<std::vector<std::size_t>> const& generators,
      std::size_t                                  n,
      std::size_t                                  hard_cap) {
    if (factors.empty() || generators.empty() || n == 0) {
      throw InvalidInput("need factors, generators and a positive bound");
    }
    using Tuple = std::vector<std::size_t>;
    std::vector<Tuple> gens;
    for (auto const& g : generators) {
      if (g.size() != factors.size()) {
        throw InvalidInput("generator tuple length differs from factor count");
      }
      Tuple inv(g.size());
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (g[j] >= factors[j].size()) {
          throw InvalidInput("generator entry out of range");
        }
        inv[j] = factors[j].inverse(g[j]);
      }
      gens.push_back(g);
      gens.push_back(std::move(inv));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    LocalFinitenessCertificate cert{};
    std::size_t const          im = symmetric_inverse_monoid_order(n);
    cert.birkhoff_bound           = sat_pow(im, sat_pow(im, gens.size()));
    std::size_t const cap         = std::min(cert.birkhoff_bound, hard_cap);

    auto mul = [&](Tuple const& a, Tuple const& b) {
      Tuple c(a.size());
      for (std::size_t j = 0; j < a.size(); ++j) {
        c[j] = factors[j].product(a[j], b[j]);
      }
      return c;
    };
    std::map<Tuple, std::size_t> seen;
    std::vector<Tuple>           found;
    std::deque<std::size_t>      queue;
    auto                         add = [&](Tuple const& t) {
      if (seen.emplace(t, found.size()).second) {
        if (found.size() == cap) {
          throw CapExceeded(cap);
        }
        found.push_back(t);
        queue.push_back(found.size() - 1);
      }
    };
    for (auto const& g : gens) {
      add(g);
    }
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop_front();
      for (auto const& g : gens) {
        add(mul(found[i], g));
      }
    }
    cert.order = found.size();
    std::map<Tuple, std::size_t> l_sizes;
    for (auto const& t : found) {
      Tuple dom(t.size());
      for (std::size_t j = 0; j < t.size(); ++j) {
        dom[j] = factors[j].product(factors[j].inverse(t[j]), t[j]);
      }
      cert.max_l_class = std::max(cert.max_l_class, ++l_sizes[dom]);
    }
    return cert;
  }

}  // namespace regulus
