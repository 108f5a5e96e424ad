#include "regulus/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "regulus/errors.hpp"

namespace regulus {

  DirectedGraph::DirectedGraph(std::vector<std::string> vertices, std::vector<Edge> edges)
      : _vertices(std::move(vertices)), _edges(std::move(edges)), _out(_vertices.size()) {
    std::set<std::string> seen;
    for (auto const& v : _vertices) {
      if (!seen.insert(v).second) {
        throw InvalidInput("duplicate vertex label \"" + v + "\"");
      }
    }
    seen.clear();
    for (std::size_t e = 0; e < _edges.size(); ++e) {
      if (_edges[e].src >= _vertices.size() || _edges[e].tgt >= _vertices.size()) {
        throw InvalidInput("edge \"" + _edges[e].label + "\" has an endpoint out of range");
      }
      if (!seen.insert(_edges[e].label).second) {
        throw InvalidInput("duplicate edge label \"" + _edges[e].label + "\"");
      }
      _out[_edges[e].src].push_back(e);
    }
  }

  std::string format_path(DirectedGraph const& g, Path const& p) {
    if (p.edges.empty()) {
      return g.vertex_label(p.source);
    }
    std::string out;
    for (auto e : p.edges) {
      out += (out.empty() ? "" : ".") + g.edge(e).label;
    }
    return out;
  }

  std::optional<std::vector<std::size_t>> find_cycle(DirectedGraph const& g) {
    enum Colour { white, grey, black };
    std::vector<Colour>      colour(g.vertex_count(), white);
    std::vector<std::size_t> stack;  // edges on the current DFS path
    std::optional<std::vector<std::size_t>> found;
    std::function<void(std::size_t)> visit = [&](std::size_t v) {
      colour[v] = grey;
      for (auto e : g.out_edges(v)) {
        if (found) {
          return;
        }
        std::size_t w = g.r(e);
        if (colour[w] == grey) {
          // the cycle starts at the first stacked edge leaving w
          auto it = std::find_if(stack.begin(), stack.end(),
                                 [&](std::size_t f) { return g.s(f) == w; });
          std::vector<std::size_t> cyc(it, stack.end());
          cyc.push_back(e);
          found = std::move(cyc);
          return;
        }
        if (colour[w] == white) {
          stack.push_back(e);
          visit(w);
          stack.pop_back();
        }
      }
      colour[v] = black;
    };
    for (std::size_t v = 0; v < g.vertex_count() && !found; ++v) {
      if (colour[v] == white) {
        visit(v);
      }
    }
    return found;
  }

  bool is_acyclic(DirectedGraph const& g) {
    return !find_cycle(g).has_value();
  }

  VertexClasses classify_vertices(DirectedGraph const& g) {
    VertexClasses c;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      (g.is_sink(v) ? c.sinks : c.regular).push_back(v);
    }
    return c;
  }

  std::vector<Path> boundary_paths(DirectedGraph const& g) {
    if (auto cyc = find_cycle(g)) {
      throw HasCycle("graph has a cycle through edge " + g.edge(cyc->front()).label);
    }
    std::vector<Path>                     out;
    std::function<void(Path&)>            extend = [&](Path& p) {
      std::size_t v = p.range(g);
      if (g.is_sink(v)) {
        out.push_back(p);
        return;
      }
      for (auto e : g.out_edges(v)) {
        p.edges.push_back(e);
        extend(p);
        p.edges.pop_back();
      }
    };
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      Path p{v, {}};
      extend(p);
    }
    std::sort(out.begin(), out.end(), [](Path const& a, Path const& b) {
      return std::make_pair(a.length(), std::cref(a)) < std::make_pair(b.length(), std::cref(b));
    });
    return out;
  }

  BoundaryGroupoid boundary_groupoid(DirectedGraph const& g) {
    auto              paths = boundary_paths(g);
    std::size_t const u     = paths.size();
    std::vector<std::pair<std::size_t, std::size_t>> arrows;
    for (std::size_t x = 0; x < u; ++x) {
      arrows.emplace_back(x, x);
    }
    for (std::size_t x = 0; x < u; ++x) {
      for (std::size_t y = 0; y < u; ++y) {
        if (x != y && paths[x].range(g) == paths[y].range(g)) {
          arrows.emplace_back(x, y);
        }
      }
    }
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    std::vector<std::size_t>                                   src, tgt;
    std::vector<std::string>                                   labels;
    std::vector<std::int64_t>                                  degrees;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
      auto [x, y]      = arrows[a];
      index[arrows[a]] = a;
      src.push_back(y);
      tgt.push_back(x);
      auto k = static_cast<std::int64_t>(paths[x].length())
               - static_cast<std::int64_t>(paths[y].length());
      degrees.push_back(k);
      labels.push_back("(" + format_path(g, paths[x]) + "," + std::to_string(k) + ","
                       + format_path(g, paths[y]) + ")");
    }
    std::size_t const        m = arrows.size();
    std::vector<std::size_t> table(m * m, FiniteGroupoid::npos);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (src[a] == tgt[b]) {
          table[a * m + b] = index.at({arrows[a].first, arrows[b].second});
        }
      }
    }
    auto grp = FiniteGroupoid::from_table(u, std::move(src), std::move(tgt), std::move(table),
                                          std::move(labels));
    Cocycle c(grp, GradingGroup::integers(), std::move(degrees));
    return BoundaryGroupoid{std::move(paths), std::move(grp), std::move(c)};
  }

  RegularityDecision decide_leavitt_regular(DirectedGraph const& g, CoeffRing const& ring) {
    std::vector<Condition> c;
    c.push_back(ring_regular_condition(ring));
    if (auto cyc = find_cycle(g)) {
      c.push_back({"graph acyclic", Condition::Status::fail,
                   "cycle " + format_path(g, Path{g.s(cyc->front()), *cyc})});
    } else {
      auto bg = boundary_groupoid(g);
      c.push_back({"graph acyclic", Condition::Status::pass,
                   std::to_string(bg.paths.size()) + " boundary paths"});
      bool principal = is_principal(bg.groupoid);
      c.push_back({"boundary groupoid principal",
                   principal ? Condition::Status::pass : Condition::Status::fail,
                   std::to_string(bg.groupoid.arrow_count()) + " arrows"});
    }
    return RegularityDecision::from_conditions(std::move(c));
  }

  RegularityDecision decide_leavitt_graded_regular(DirectedGraph const& g, CoeffRing const& ring) {
    std::vector<Condition> c;
    c.push_back(ring_regular_condition(ring));
    if (is_acyclic(g)) {
      auto bg = boundary_groupoid(g);
      auto d  = decide_graded_regular(bg.groupoid, bg.cocycle, ring);
      c.push_back({"degree-zero groupoid regular",
                   d.verdict == Verdict::regular     ? Condition::Status::pass
                   : d.verdict == Verdict::not_regular ? Condition::Status::fail
                                                       : Condition::Status::unknown,
                   "verified on the boundary path groupoid: " + d.reason});
    } else {
      c.push_back({"degree-zero groupoid regular", Condition::Status::pass,
                   "graded regularity holds for every graph over a regular ring"});
    }
    return RegularityDecision::from_conditions(std::move(c), true);
  }

  namespace {
    // Is p a prefix of q? Then the remainder of q is returned.
    std::optional<Path> strip_prefix(DirectedGraph const& g, Path const& p, Path const& q) {
      if (p.source != q.source || p.length() > q.length()
          || !std::equal(p.edges.begin(), p.edges.end(), q.edges.begin())) {
        return std::nullopt;
      }
      Path rest{p.range(g), {q.edges.begin() + p.length(), q.edges.end()}};
      return rest;
    }

    Path concat(Path a, Path const& b) {
      a.edges.insert(a.edges.end(), b.edges.begin(), b.edges.end());
      return a;
    }
  }  // namespace

  BisectionSymbol bisection_multiply(DirectedGraph const&   g,
                                     BisectionSymbol const& a,
                                     BisectionSymbol const& b) {
    if (a.zero || b.zero) {
      return BisectionSymbol::null();
    }
    if (auto mu = strip_prefix(g, a.beta, b.alpha)) {
      return {false, concat(a.alpha, *mu), b.beta};
    }
    if (auto nu = strip_prefix(g, b.alpha, a.beta)) {
      return {false, a.alpha, concat(b.beta, *nu)};
    }
    return BisectionSymbol::null();
  }

  std::string format_bisection(DirectedGraph const& g, BisectionSymbol const& z) {
    if (z.zero) {
      return "0";
    }
    return "Z(" + format_path(g, z.alpha) + "," + format_path(g, z.beta) + ")";
  }

  GrowthResult bisection_semigroup_growth(DirectedGraph const& g, std::size_t cap) {
    std::vector<BisectionSymbol> gens;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      gens.push_back({false, Path{v, {}}, Path{v, {}}});
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      gens.push_back({false, Path{g.s(e), {e}}, Path{g.r(e), {}}});
      gens.push_back({false, Path{g.r(e), {}}, Path{g.s(e), {e}}});
    }
    std::set<BisectionSymbol>    seen{BisectionSymbol::null()};
    std::deque<BisectionSymbol>  queue;
    GrowthResult                 res;
    bool                         exceeded = false;
    auto                         add      = [&](BisectionSymbol const& z) {
      if (seen.insert(z).second) {
        queue.push_back(z);
        exceeded = exceeded || seen.size() > cap;
      }
    };
    for (auto const& z : gens) {
      add(z);
    }
    while (!queue.empty() && !exceeded) {
      BisectionSymbol z = queue.front();
      queue.pop_front();
      for (auto const& x : gens) {
        add(bisection_multiply(g, z, x));
        if (exceeded) {
          break;
        }
      }
    }
    res.size   = seen.size();
    res.finite = !exceeded;
    if (!exceeded) {
      return res;
    }
    if (auto cyc = find_cycle(g)) {
      res.cycle = *cyc;
      std::size_t const     v = g.s(cyc->front());
      BisectionSymbol const mu{false, Path{v, *cyc}, Path{v, {}}};
      std::set<BisectionSymbol> powers;
      BisectionSymbol           p = mu;
      for (std::size_t k = 1; k <= cap && !p.zero; ++k) {
        powers.insert(p);
        p = bisection_multiply(g, p, mu);
      }
      res.distinct_powers = powers.size();
    }
    return res;
  }

}  // namespace regulus
