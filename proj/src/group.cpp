#include "regulus/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "regulus/errors.hpp"
#include "regulus/ring.hpp"

namespace regulus {

  FiniteGroup FiniteGroup::from_table(Table table) {
    std::size_t n = table.size();
    if (n == 0) {
      throw InvalidInput("a group has at least one element");
    }
    for (auto const& row : table) {
      if (row.size() != n
          || std::any_of(row.begin(), row.end(), [n](std::size_t x) { return x >= n; })) {
        throw InvalidInput("group table is not closed");
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (table[table[a][b]][c] != table[a][table[b][c]]) {
            throw InvalidInput("group table is not associative");
          }
        }
      }
    }
    FiniteGroup g;
    bool        found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
      found = true;
      for (std::size_t a = 0; a < n; ++a) {
        if (table[e][a] != a || table[a][e] != a) {
          found = false;
          break;
        }
      }
      if (found) {
        g._identity = e;
      }
    }
    if (!found) {
      throw InvalidInput("group table has no identity");
    }
    g._inverse.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (table[a][b] == g._identity && table[b][a] == g._identity) {
          g._inverse[a] = b;
          break;
        }
      }
      if (g._inverse[a] == n) {
        throw InvalidInput("group table element without inverse");
      }
    }
    g._table = std::move(table);
    return g;
  }

  FiniteGroup FiniteGroup::trivial() {
    return cyclic(1);
  }

  FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    Table t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t[a][b] = (a + b) % n;
      }
    }
    return from_table(std::move(t));
  }

  FiniteGroup FiniteGroup::symmetric(std::size_t n) {
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t>              p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < perms.size(); ++i) {
      index[perms[i]] = i;
    }
    Table t(perms.size(), std::vector<std::size_t>(perms.size()));
    for (std::size_t a = 0; a < perms.size(); ++a) {
      for (std::size_t b = 0; b < perms.size(); ++b) {
        std::vector<std::size_t> c(n);
        for (std::size_t x = 0; x < n; ++x) {
          c[x] = perms[a][perms[b][x]];
        }
        t[a][b] = index[c];
      }
    }
    return from_table(std::move(t));
  }

  std::size_t FiniteGroup::element_order(std::size_t a) const {
    std::size_t k = 1, x = a;
    while (x != _identity) {
      x = _table[x][a];
      ++k;
    }
    return k;
  }

  std::set<std::uint64_t> FiniteGroup::order_primes() const {
    auto f = arith::prime_factors(size());
    return {f.begin(), f.end()};
  }

  std::set<std::uint64_t> FiniteGroup::cyclic_prime_orders() const {
    std::set<std::uint64_t> out;
    for (std::size_t a = 0; a < size(); ++a) {
      std::size_t k = element_order(a);
      if (arith::is_prime(k)) {
        out.insert(k);
      }
    }
    return out;
  }

  bool is_isomorphism(FiniteGroup const&              g,
                      FiniteGroup const&              h,
                      std::vector<std::size_t> const& map) {
    if (g.size() != h.size() || map.size() != g.size()) {
      return false;
    }
    std::vector<bool> hit(h.size(), false);
    for (auto x : map) {
      if (x >= h.size() || hit[x]) {
        return false;
      }
      hit[x] = true;
    }
    for (std::size_t a = 0; a < g.size(); ++a) {
      for (std::size_t b = 0; b < g.size(); ++b) {
        if (map[g.multiply(a, b)] != h.multiply(map[a], map[b])) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace regulus
