// Finite directed graphs, boundary path groupoids and the Leavitt path
// algebra verdicts.
//
// A path e1...en satisfies r(e_i) = s(e_{i+1}), where s is the source and r
// the range (target) of an edge.

#ifndef REGULUS_GRAPH_HPP_
#define REGULUS_GRAPH_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "regulus/decision.hpp"
#include "regulus/grading.hpp"
#include "regulus/groupoid.hpp"

namespace regulus {

  class DirectedGraph {
   public:
    struct Edge {
      std::string label;
      std::size_t src;
      std::size_t tgt;
    };

    // Throws InvalidInput on endpoints out of range or duplicate labels.
    DirectedGraph(std::vector<std::string> vertices, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept {
      return _vertices.size();
    }
    std::size_t edge_count() const noexcept {
      return _edges.size();
    }
    std::string const& vertex_label(std::size_t v) const {
      return _vertices[v];
    }
    Edge const& edge(std::size_t e) const {
      return _edges[e];
    }
    std::size_t s(std::size_t e) const {
      return _edges[e].src;
    }
    std::size_t r(std::size_t e) const {
      return _edges[e].tgt;
    }
    std::vector<std::size_t> const& out_edges(std::size_t v) const {
      return _out[v];
    }
    bool is_sink(std::size_t v) const {
      return _out[v].empty();
    }

   private:
    std::vector<std::string>              _vertices;
    std::vector<Edge>                     _edges;
    std::vector<std::vector<std::size_t>> _out;
  };

  struct Path {
    std::size_t              source = 0;
    std::vector<std::size_t> edges;

    std::size_t length() const noexcept {
      return edges.size();
    }
    std::size_t range(DirectedGraph const& g) const {
      return edges.empty() ? source : g.r(edges.back());
    }
    friend auto operator<=>(Path const&, Path const&) = default;
    friend bool operator==(Path const&, Path const&)  = default;
  };

  std::string format_path(DirectedGraph const& g, Path const& p);

  // Edge sequence of some closed path, if any.
  std::optional<std::vector<std::size_t>> find_cycle(DirectedGraph const& g);
  bool is_acyclic(DirectedGraph const& g);

  struct VertexClasses {
    std::vector<std::size_t> sinks;
    std::vector<std::size_t> regular;  // emit at least one (finitely many) edge
  };
  VertexClasses classify_vertices(DirectedGraph const& g);

  // All paths ending at a sink, including the empty path at each sink, in
  // (length, source, edges) order. Throws HasCycle.
  std::vector<Path> boundary_paths(DirectedGraph const& g);

  struct BoundaryGroupoid {
    std::vector<Path> paths;  // unit x is paths[x]
    FiniteGroupoid    groupoid;
    Cocycle           cocycle;
  };

  // Arrows (x, |x| - |y|, y) for boundary paths with a common terminal
  // sink; range x, source y, degree |x| - |y|. Throws HasCycle.
  BoundaryGroupoid boundary_groupoid(DirectedGraph const& g);

  RegularityDecision decide_leavitt_regular(DirectedGraph const& g, CoeffRing const& ring);
  RegularityDecision decide_leavitt_graded_regular(DirectedGraph const& g, CoeffRing const& ring);

  // Z(alpha, empty, beta) with r(alpha) = r(beta), or the zero bisection.
  struct BisectionSymbol {
    bool zero = false;
    Path alpha;
    Path beta;

    static BisectionSymbol null() {
      return {true, {}, {}};
    }
    friend auto operator<=>(BisectionSymbol const&, BisectionSymbol const&) = default;
    friend bool operator==(BisectionSymbol const&, BisectionSymbol const&)  = default;
  };

  BisectionSymbol bisection_multiply(DirectedGraph const&   g,
                                     BisectionSymbol const& a,
                                     BisectionSymbol const& b);
  std::string format_bisection(DirectedGraph const& g, BisectionSymbol const& z);

  struct GrowthResult {
    bool        finite = false;
    std::size_t size   = 0;  // elements found, zero included
    // Certificate when the closure outgrew the cap: a cycle mu and the
    // number of pairwise distinct powers Z(mu^k, empty, s(mu)) verified.
    std::vector<std::size_t> cycle;
    std::size_t              distinct_powers = 0;
  };

  // Closure of {Z(v,v), Z(e,r(e)), Z(r(e),e)} under the bisection product.
  GrowthResult bisection_semigroup_growth(DirectedGraph const& g, std::size_t cap);

}  // namespace regulus

#endif  // REGULUS_GRAPH_HPP_
