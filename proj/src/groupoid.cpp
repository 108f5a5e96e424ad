#include "regulus/groupoid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "regulus/errors.hpp"

namespace regulus {

  namespace {
    using Product = std::function<std::size_t(std::size_t, std::size_t)>;

    // Table from a product rule that is called only on composable pairs.
    std::vector<std::size_t> tabulate(std::vector<std::size_t> const& src,
                                      std::vector<std::size_t> const& tgt,
                                      Product const&                  mul) {
      std::size_t const        m = src.size();
      std::vector<std::size_t> table(m * m, FiniteGroupoid::npos);
      for (std::size_t g = 0; g < m; ++g) {
        for (std::size_t d = 0; d < m; ++d) {
          if (src[g] == tgt[d]) {
            table[g * m + d] = mul(g, d);
          }
        }
      }
      return table;
    }

    std::string join_label(std::size_t i, std::string const& mid, std::size_t j) {
      return "(" + std::to_string(i) + "," + mid + "," + std::to_string(j) + ")";
    }
  }  // namespace

  FiniteGroupoid FiniteGroupoid::from_table(std::size_t              units,
                                            std::vector<std::size_t> src,
                                            std::vector<std::size_t> tgt,
                                            std::vector<std::size_t> table,
                                            std::vector<std::string> labels) {
    std::size_t const m = src.size();
    if (units == 0) {
      throw InvalidInput("a groupoid needs at least one unit");
    }
    if (tgt.size() != m || m < units || table.size() != m * m) {
      throw InvalidInput("groupoid arrays have inconsistent sizes");
    }
    for (std::size_t g = 0; g < m; ++g) {
      if (src[g] >= units || tgt[g] >= units) {
        throw InvalidInput("arrow " + std::to_string(g) + " has an endpoint out of range");
      }
      if (g < units && (src[g] != g || tgt[g] != g)) {
        throw InvalidInput("arrow " + std::to_string(g) + " must be the unit " + std::to_string(g));
      }
    }
    for (std::size_t g = 0; g < m; ++g) {
      for (std::size_t d = 0; d < m; ++d) {
        std::size_t gd = table[g * m + d];
        if (src[g] != tgt[d]) {
          if (gd != npos) {
            throw InvalidInput("product of non-composable arrows " + std::to_string(g)
                               + " and " + std::to_string(d) + " is defined");
          }
          continue;
        }
        if (gd >= m || src[gd] != src[d] || tgt[gd] != tgt[g]) {
          throw InvalidInput("bad product of arrows " + std::to_string(g) + " and "
                             + std::to_string(d));
        }
      }
      if (table[tgt[g] * m + g] != g || table[g * m + src[g]] != g) {
        throw InvalidInput("units do not act trivially on arrow " + std::to_string(g));
      }
    }
    for (std::size_t g = 0; g < m; ++g) {
      for (std::size_t d = 0; d < m; ++d) {
        if (src[g] != tgt[d]) {
          continue;
        }
        std::size_t gd = table[g * m + d];
        for (std::size_t e = 0; e < m; ++e) {
          if (src[d] == tgt[e] && table[gd * m + e] != table[g * m + table[d * m + e]]) {
            throw InvalidInput("groupoid composition is not associative");
          }
        }
      }
    }
    FiniteGroupoid out;
    out._inverse.assign(m, npos);
    for (std::size_t g = 0; g < m; ++g) {
      for (std::size_t d = 0; d < m; ++d) {
        if (src[g] == tgt[d] && src[d] == tgt[g] && table[g * m + d] == tgt[g]
            && table[d * m + g] == src[g]) {
          out._inverse[g] = d;
          break;
        }
      }
      if (out._inverse[g] == npos) {
        throw InvalidInput("arrow " + std::to_string(g) + " has no inverse");
      }
    }
    if (labels.empty()) {
      for (std::size_t g = 0; g < m; ++g) {
        labels.push_back((g < units ? "x" : "a") + std::to_string(g));
      }
    }
    if (labels.size() != m) {
      throw InvalidInput("wrong number of arrow labels");
    }
    out._units  = units;
    out._src    = std::move(src);
    out._tgt    = std::move(tgt);
    out._table  = std::move(table);
    out._labels = std::move(labels);
    return out;
  }

  FiniteGroupoid FiniteGroupoid::from_triples(
      std::size_t                                    units,
      std::vector<std::size_t>                       src,
      std::vector<std::size_t>                       tgt,
      std::vector<std::array<std::size_t, 3>> const& compose,
      std::vector<std::string>                       labels) {
    std::size_t const m = src.size();
    if (tgt.size() != m || m < units) {
      throw InvalidInput("groupoid arrays have inconsistent sizes");
    }
    std::vector<std::size_t> table(m * m, npos);
    for (std::size_t g = 0; g < m; ++g) {
      if (tgt[g] >= units || src[g] >= units) {
        throw InvalidInput("arrow " + std::to_string(g) + " has an endpoint out of range");
      }
      table[tgt[g] * m + g] = g;
      table[g * m + src[g]] = g;
    }
    for (auto const& [g, d, gd] : compose) {
      if (g >= m || d >= m || gd >= m) {
        throw InvalidInput("composition triple refers to an unknown arrow");
      }
      std::size_t& slot = table[g * m + d];
      if (slot != npos && slot != gd) {
        throw InvalidInput("conflicting products for arrows " + std::to_string(g) + " and "
                           + std::to_string(d));
      }
      slot = gd;
    }
    for (std::size_t g = 0; g < m; ++g) {
      for (std::size_t d = 0; d < m; ++d) {
        if (src[g] == tgt[d] && table[g * m + d] == npos) {
          throw InvalidInput("missing product of arrows " + std::to_string(g) + " and "
                             + std::to_string(d));
        }
      }
    }
    return from_table(units, std::move(src), std::move(tgt), std::move(table), std::move(labels));
  }

  FiniteGroupoid FiniteGroupoid::units_only(std::size_t n) {
    std::vector<std::size_t> ends(n);
    std::iota(ends.begin(), ends.end(), 0);
    auto table = tabulate(ends, ends, [](std::size_t g, std::size_t) { return g; });
    return from_table(n, ends, ends, std::move(table));
  }

  FiniteGroupoid FiniteGroupoid::pair(std::size_t n) {
    return transitive(n, FiniteGroup::trivial());
  }

  FiniteGroupoid FiniteGroupoid::group(FiniteGroup const& g) {
    return transitive(1, g);
  }

  FiniteGroupoid FiniteGroupoid::transitive(std::size_t n, FiniteGroup const& h) {
    struct Arrow {
      std::size_t i, g, j;
    };
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < n; ++i) {
      arrows.push_back({i, h.identity(), i});
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t g = 0; g < h.size(); ++g) {
          if (i != j || g != h.identity()) {
            arrows.push_back({i, g, j});
          }
        }
      }
    }
    std::map<std::array<std::size_t, 3>, std::size_t> index;
    std::vector<std::size_t>                          src, tgt;
    std::vector<std::string>                          labels;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
      index[{arrows[a].i, arrows[a].g, arrows[a].j}] = a;
      src.push_back(arrows[a].j);
      tgt.push_back(arrows[a].i);
      labels.push_back(join_label(arrows[a].i, std::to_string(arrows[a].g), arrows[a].j));
    }
    auto table = tabulate(src, tgt, [&](std::size_t a, std::size_t b) {
      return index.at({arrows[a].i, h.multiply(arrows[a].g, arrows[b].g), arrows[b].j});
    });
    return from_table(n, std::move(src), std::move(tgt), std::move(table), std::move(labels));
  }

  std::vector<std::size_t> FiniteGroupoid::hom(std::size_t from, std::size_t to) const {
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < arrow_count(); ++g) {
      if (_src[g] == from && _tgt[g] == to) {
        out.push_back(g);
      }
    }
    return out;
  }

  std::vector<std::vector<std::size_t>> orbits(FiniteGroupoid const& g) {
    std::vector<std::size_t> parent(g.unit_count());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = root(parent[x]);
    };
    for (std::size_t a = 0; a < g.arrow_count(); ++a) {
      std::size_t x = root(g.src(a)), y = root(g.tgt(a));
      if (x != y) {
        parent[std::max(x, y)] = std::min(x, y);
      }
    }
    std::map<std::size_t, std::vector<std::size_t>> by_root;
    for (std::size_t x = 0; x < g.unit_count(); ++x) {
      by_root[root(x)].push_back(x);
    }
    std::vector<std::vector<std::size_t>> out;
    for (auto& [r, units] : by_root) {
      out.push_back(std::move(units));
    }
    return out;
  }

  IsotropyGroup isotropy_group(FiniteGroupoid const& g, std::size_t x) {
    if (x >= g.unit_count()) {
      throw InvalidInput("isotropy requested at unknown unit " + std::to_string(x));
    }
    std::vector<std::size_t>           arrows = g.hom(x, x);
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      pos[arrows[i]] = i;
    }
    FiniteGroup::Table table(arrows.size(), std::vector<std::size_t>(arrows.size()));
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      for (std::size_t j = 0; j < arrows.size(); ++j) {
        table[i][j] = pos.at(g.compose(arrows[i], arrows[j]));
      }
    }
    return IsotropyGroup{x, std::move(arrows), FiniteGroup::from_table(std::move(table))};
  }

  bool is_principal(FiniteGroupoid const& g) {
    for (std::size_t a = 0; a < g.arrow_count(); ++a) {
      if (!g.is_unit(a) && g.src(a) == g.tgt(a)) {
        return false;
      }
    }
    return true;
  }

  SubGroupoid restrict_arrows(FiniteGroupoid const& g, std::vector<bool> const& keep) {
    if (keep.size() != g.arrow_count()) {
      throw InvalidInput("arrow mask has the wrong length");
    }
    std::vector<std::size_t> arrows, local(g.arrow_count(), FiniteGroupoid::npos);
    for (std::size_t a = 0; a < g.arrow_count(); ++a) {
      if (g.is_unit(a) && !keep[a]) {
        throw InvalidInput("a sub-groupoid must contain every unit");
      }
      if (keep[a]) {
        local[a] = arrows.size();
        arrows.push_back(a);
      }
    }
    std::vector<std::size_t> src, tgt;
    std::vector<std::string> labels;
    for (auto a : arrows) {
      src.push_back(g.src(a));
      tgt.push_back(g.tgt(a));
      labels.push_back(g.label(a));
      if (!keep[g.inverse(a)]) {
        throw InvalidInput("arrow subset is not closed under inverses");
      }
    }
    auto table = tabulate(src, tgt, [&](std::size_t a, std::size_t b) {
      std::size_t ab = local[g.compose(arrows[a], arrows[b])];
      if (ab == FiniteGroupoid::npos) {
        throw InvalidInput("arrow subset is not closed under composition");
      }
      return ab;
    });
    return SubGroupoid{
        FiniteGroupoid::from_table(g.unit_count(), std::move(src), std::move(tgt),
                                   std::move(table), std::move(labels)),
        std::move(arrows)};
  }

  RegularityDecision decide_regular_groupoid_algebra(FiniteGroupoid const& g,
                                                     CoeffRing const&      ring) {
    std::set<std::uint64_t> primes;
    for (auto const& orbit : orbits(g)) {
      auto p = isotropy_group(g, orbit.front()).group.order_primes();
      primes.insert(p.begin(), p.end());
    }
    std::vector<Condition> c;
    c.push_back(ring_regular_condition(ring));
    c.push_back({"directed union of quasi-compact open subgroupoids",
                 Condition::Status::pass,
                 "finite discrete groupoid with " + std::to_string(g.arrow_count())
                     + " arrows"});
    c.push_back(primes_invertible_condition(primes, ring, "isotropy subgroup orders invertible"));
    return RegularityDecision::from_conditions(std::move(c));
  }

  std::vector<std::size_t> bisection_product(FiniteGroupoid const&           g,
                                             std::vector<std::size_t> const& u,
                                             std::vector<std::size_t> const& v) {
    std::vector<std::size_t> out;
    for (auto a : u) {
      for (auto b : v) {
        std::size_t ab = g.compose(a, b);
        if (ab != FiniteGroupoid::npos) {
          out.push_back(ab);
        }
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  MatrixUnitsDecomposition matrix_units_decomposition(FiniteGroupoid const& g) {
    MatrixUnitsDecomposition dec;
    dec.coordinates.resize(g.arrow_count());
    dec.relations_hold = true;
    for (auto const& orbit : orbits(g)) {
      std::size_t const    base = orbit.front();
      MatrixUnitsComponent comp{orbit, {}, {}, isotropy_group(g, base)};
      std::size_t const    n = orbit.size();
      for (auto x : orbit) {
        comp.transversal.push_back(x == base ? base : g.hom(base, x).front());
      }
      comp.u.assign(n, std::vector<std::vector<std::size_t>>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          comp.u[i][j] = {g.compose(comp.transversal[i], g.inverse(comp.transversal[j]))};
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t l = 0; l < n; ++l) {
              auto prod = bisection_product(g, comp.u[i][j], comp.u[k][l]);
              if (prod != (j == k ? comp.u[i][l] : std::vector<std::size_t>{})) {
                dec.relations_hold = false;
              }
            }
          }
        }
      }
      std::map<std::size_t, std::size_t> row, iso;
      for (std::size_t i = 0; i < n; ++i) {
        row[orbit[i]] = i;
      }
      for (std::size_t h = 0; h < comp.isotropy.arrows.size(); ++h) {
        iso[comp.isotropy.arrows[h]] = h;
      }
      std::size_t const k = dec.components.size();
      for (std::size_t a = 0; a < g.arrow_count(); ++a) {
        auto it = row.find(g.src(a));
        if (it == row.end()) {
          continue;
        }
        std::size_t i = row.at(g.tgt(a)), j = it->second;
        std::size_t h = g.compose(g.inverse(comp.transversal[i]),
                                  g.compose(a, comp.transversal[j]));
        dec.coordinates[a] = {k, i, j, iso.at(h)};
      }
      dec.components.push_back(std::move(comp));
    }
    return dec;
  }

  UniversalGroupoid universal_groupoid(FiniteInverseSemigroup const& s) {
    auto const&       e = s.idempotents();
    std::size_t const u = e.size();
    auto              leq = [&](std::size_t f, std::size_t g) { return s.product(f, g) == f; };
    std::vector<std::size_t> unit_of(s.size(), FiniteGroupoid::npos);
    for (std::size_t x = 0; x < u; ++x) {
      unit_of[e[x]] = x;
    }

    // class_of[x][t]: arrow index of the germ [t, x_f] for f = e[x]
    std::vector<std::vector<std::size_t>>            class_of(u);
    std::vector<std::pair<std::size_t, std::size_t>> germ(u);
    std::vector<std::vector<std::size_t>>            reps(u);
    for (std::size_t x = 0; x < u; ++x) {
      germ[x] = {e[x], e[x]};
    }
    std::vector<std::pair<std::size_t, std::size_t>> extra;
    std::vector<std::vector<std::size_t>>            local_class(u);
    for (std::size_t x = 0; x < u; ++x) {
      std::size_t const f = e[x];
      local_class[x].assign(s.size(), FiniteGroupoid::npos);
      for (std::size_t t = 0; t < s.size(); ++t) {
        if (!leq(f, s.product(s.inverse(t), t))) {
          continue;
        }
        for (std::size_t c = 0; c < reps[x].size(); ++c) {
          std::size_t r    = reps[x][c];
          bool        same = false;
          for (auto w : e) {
            if (leq(f, w) && s.product(t, w) == s.product(r, w)) {
              same = true;
              break;
            }
          }
          if (same) {
            local_class[x][t] = c;
            break;
          }
        }
        if (local_class[x][t] == FiniteGroupoid::npos) {
          local_class[x][t] = reps[x].size();
          reps[x].push_back(t);
        }
      }
    }
    // Arrow numbering: the class of (f, f) is the unit x; the others follow.
    for (std::size_t x = 0; x < u; ++x) {
      class_of[x].assign(s.size(), FiniteGroupoid::npos);
      std::vector<std::size_t> arrow_of_class(reps[x].size(), FiniteGroupoid::npos);
      arrow_of_class[local_class[x][e[x]]] = x;
      for (std::size_t c = 0; c < reps[x].size(); ++c) {
        if (arrow_of_class[c] == FiniteGroupoid::npos) {
          arrow_of_class[c] = u + extra.size();
          extra.emplace_back(reps[x][c], e[x]);
        }
      }
      for (std::size_t t = 0; t < s.size(); ++t) {
        if (local_class[x][t] != FiniteGroupoid::npos) {
          class_of[x][t] = arrow_of_class[local_class[x][t]];
        }
      }
    }
    germ.insert(germ.end(), extra.begin(), extra.end());

    std::size_t const        m = germ.size();
    std::vector<std::size_t> src(m), tgt(m);
    std::vector<std::string> labels(m);
    for (std::size_t a = 0; a < m; ++a) {
      auto [t, f] = germ[a];
      src[a]      = unit_of[f];
      tgt[a]      = unit_of[s.product(s.product(t, f), s.inverse(t))];
      labels[a]   = "[" + std::to_string(t) + ",x" + std::to_string(f) + "]";
    }
    auto table = tabulate(src, tgt, [&](std::size_t a, std::size_t b) {
      return class_of[src[b]][s.product(germ[a].first, germ[b].first)];
    });

    UniversalGroupoid out{
        FiniteGroupoid::from_table(u, src, tgt, std::move(table), std::move(labels)),
        e,
        germ,
        std::vector<std::vector<std::size_t>>(s.size())};
    for (std::size_t t = 0; t < s.size(); ++t) {
      std::size_t const d = s.product(s.inverse(t), t);
      for (std::size_t x = 0; x < u; ++x) {
        if (leq(e[x], d)) {
          out.psi[t].push_back(class_of[x][t]);
        }
      }
      std::sort(out.psi[t].begin(), out.psi[t].end());
    }
    return out;
  }

  FiniteGroupoid transformation_groupoid(FiniteGroup const&                           g,
                                         std::vector<std::vector<std::size_t>> const& action) {
    if (action.size() != g.size()) {
      throw InvalidAction("action needs one row per group element");
    }
    std::size_t const n = action.front().size();
    for (auto const& row : action) {
      std::vector<bool> hit(n, false);
      if (row.size() != n) {
        throw InvalidAction("action rows have different lengths");
      }
      for (auto y : row) {
        if (y >= n || hit[y]) {
          throw InvalidAction("group element does not act by a permutation");
        }
        hit[y] = true;
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (action[g.identity()][x] != x) {
        throw InvalidAction("identity moves point " + std::to_string(x));
      }
      for (std::size_t a = 0; a < g.size(); ++a) {
        for (std::size_t b = 0; b < g.size(); ++b) {
          if (action[g.multiply(a, b)][x] != action[a][action[b][x]]) {
            throw InvalidAction("action is not compatible with the group law at ("
                                + std::to_string(a) + "," + std::to_string(b) + ","
                                + std::to_string(x) + ")");
          }
        }
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> arrows;
    for (std::size_t x = 0; x < n; ++x) {
      arrows.emplace_back(g.identity(), x);
    }
    for (std::size_t a = 0; a < g.size(); ++a) {
      for (std::size_t x = 0; x < n && a != g.identity(); ++x) {
        arrows.emplace_back(a, x);
      }
    }
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    std::vector<std::size_t>                                   src, tgt;
    std::vector<std::string>                                   labels;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      auto [a, x]      = arrows[i];
      index[arrows[i]] = i;
      src.push_back(x);
      tgt.push_back(action[a][x]);
      labels.push_back("(" + std::to_string(a) + "," + std::to_string(x) + ")");
    }
    auto table = tabulate(src, tgt, [&](std::size_t h, std::size_t k) {
      return index.at({g.multiply(arrows[h].first, arrows[k].first), arrows[k].second});
    });
    return FiniteGroupoid::from_table(n, std::move(src), std::move(tgt), std::move(table),
                                      std::move(labels));
  }

}  // namespace regulus
