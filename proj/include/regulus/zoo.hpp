// Curated small instances used by the test suites and the bundled corpus.

#ifndef REGULUS_ZOO_HPP_
#define REGULUS_ZOO_HPP_

#include <string>
#include <vector>

#include "regulus/grading.hpp"
#include "regulus/graph.hpp"
#include "regulus/groupoid.hpp"
#include "regulus/invsgp.hpp"
#include "regulus/ring.hpp"
#include "regulus/selfsim.hpp"

namespace regulus::zoo {

  struct NamedSemigroup {
    std::string                   name;
    std::size_t                   degree;
    std::vector<PartialBijection> generators;
    FiniteInverseSemigroup        semigroup;
  };

  // Semilattices (trivial, 2-chain, 3-chain, diamond), Z/2..Z/6, S_3, I_1,
  // I_2, B_2 and a Clifford semigroup Z/2 over Z/3.
  std::vector<NamedSemigroup> semigroups();
  NamedSemigroup              semigroup(std::string const& name);

  // F2, F3, F5 and Q.
  std::vector<CoeffRing> field_rings();
  // The fields plus Z6, Z12 and product:[F2,F3].
  std::vector<CoeffRing> curated_rings();

  struct NamedGroupoid {
    std::string    name;
    FiniteGroupoid groupoid;
  };
  // transitive(n, H) for n = 1..4 and H in {1, Z/2, Z/3}.
  std::vector<NamedGroupoid> transitive_groupoids();

  struct NamedGraded {
    std::string    name;
    FiniteGroupoid groupoid;
    Cocycle        cocycle;
  };
  std::vector<NamedGraded> graded_groupoids();

  struct NamedGraph {
    std::string   name;
    DirectedGraph graph;
  };
  std::vector<NamedGraph> graphs();
  DirectedGraph           graph(std::string const& name);

  struct NamedAction {
    std::string       name;
    SelfSimilarAction action;
    bool              valid;
    bool              finite_group;
  };
  // adding-machine, edge-swap, vertex-swap, trivial-loop, trivial-rose and
  // the invalid corrupted-swap.
  std::vector<NamedAction> actions();
  SelfSimilarAction        action(std::string const& name);

}  // namespace regulus::zoo

#endif  // REGULUS_ZOO_HPP_
