// JSON input formats and report serialization.
//
// Semigroup:  {"degree": n, "generators": [[image or null, ...], ...], "cap": k}
// Groupoid:   {"units": [label, ...], "arrows": [{"src": i, "tgt": j, "label"?}],
//              "compose": [[g, d, gd], ...]}
//             Arrows are numbered after the units; products with a unit may
//             be omitted from "compose".
// Cocycle:    {"group": "Z" | "Z/k", "degrees": [...]}, per arrow or per
//             non-unit arrow. Graded input is {"groupoid": ..., "cocycle": ...}.
// Graph:      {"vertices": [...], "edges": [{"id": label, "src": v, "tgt": w}]}
//             with endpoints given by label or index.
// Automaton:  {"graph": graph, "generators": [{"name"?, "vertex_perm": [...],
//              "edge_perm": [...], "sections": {edge: word}}]}
//             Words are strings such as "a b^-1"; "" and "1" are the
//             identity, and missing sections default to it.

#ifndef REGULUS_IO_HPP_
#define REGULUS_IO_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "regulus/algebra.hpp"
#include "regulus/decision.hpp"
#include "regulus/grading.hpp"
#include "regulus/graph.hpp"
#include "regulus/groupoid.hpp"
#include "regulus/invsgp.hpp"
#include "regulus/selfsim.hpp"

namespace regulus::io {

  using Json = nlohmann::ordered_json;

  // Parse errors become InvalidInput carrying the position.
  Json parse(std::string const& text, std::string const& origin = "input");
  Json read_file(std::string const& path);

  struct SemigroupInput {
    std::size_t                   degree = 0;
    std::vector<PartialBijection> generators;
    std::size_t                   cap = 1u << 16;
  };
  SemigroupInput semigroup_from_json(Json const& j);
  Json           semigroup_to_json(std::size_t degree, std::vector<PartialBijection> const& gens,
                                   std::size_t cap);

  FiniteGroupoid groupoid_from_json(Json const& j);
  Json           groupoid_to_json(FiniteGroupoid const& g);
  Cocycle        cocycle_from_json(Json const& j, FiniteGroupoid const& g);
  Json           cocycle_to_json(Cocycle const& c);

  DirectedGraph graph_from_json(Json const& j);
  Json          graph_to_json(DirectedGraph const& g);

  Word              parse_word(std::vector<std::string> const& names, std::string const& text);
  SelfSimilarAction action_from_json(Json const& j);
  Json              action_to_json(SelfSimilarAction const& a);

  Json decision_to_json(RegularityDecision const& d);
  Json oracle_to_json(OracleVerdict const& v, StructureConstAlgebra const& a);
  Json element_to_json(StructureConstAlgebra const& a, AlgElement const& x);

}  // namespace regulus::io

#endif  // REGULUS_IO_HPP_
