// Self-similar group actions on finite graphs, presented by Mealy automata.
//
// A group element acts on vertices and edges and has a section g|_e at every
// edge, with g(e x) = g(e) g|_e(x) on paths. Words multiply right to left as
// maps: (gh)(e) = g(h(e)) and (gh)|_e = g|_{h(e)} h|_e.

#ifndef REGULUS_SELFSIM_HPP_
#define REGULUS_SELFSIM_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regulus/decision.hpp"
#include "regulus/graph.hpp"
#include "regulus/group.hpp"
#include "regulus/invsgp.hpp"
#include "regulus/ring.hpp"

namespace regulus {

  struct Letter {
    std::size_t gen     = 0;
    bool        inverse = false;
    friend auto operator<=>(Letter const&, Letter const&) = default;
    friend bool operator==(Letter const&, Letter const&)  = default;
  };
  using Word = std::vector<Letter>;

  Word inverse_word(Word const& w);
  Word free_reduce(Word w);

  struct SelfSimilarGenerator {
    std::string              name;
    std::vector<std::size_t> vertex_perm;
    std::vector<std::size_t> edge_perm;
    std::vector<Word>        sections;  // one per edge
  };

  class SelfSimilarAction {
   public:
    // Checks sizes, permutations and letter indices (InvalidInput); the
    // self-similarity axioms are checked by validate_action.
    SelfSimilarAction(DirectedGraph graph, std::vector<SelfSimilarGenerator> generators);

    DirectedGraph const& graph() const noexcept {
      return _graph;
    }
    std::vector<SelfSimilarGenerator> const& generators() const noexcept {
      return _generators;
    }
    std::string format_word(Word const& w) const;

    // Action of a word on vertices and edges, and its section word.
    std::size_t act_vertex(Word const& w, std::size_t v) const;
    std::size_t act_edge(Word const& w, std::size_t e) const;
    Word        section(Word const& w, std::size_t e) const;

   private:
    DirectedGraph                     _graph;
    std::vector<SelfSimilarGenerator> _generators;
  };

  struct Violation {
    std::string axiom;
    std::string detail;
  };

  // Empty when the action is valid. Checks graph preservation, the vertex
  // axiom g(v) = g|_e(v), and the section cocycle identity on generator
  // pairs and 100 random two-letter composites.
  std::vector<Violation> validate_action(SelfSimilarAction const& a, std::uint64_t seed = 1);

  // Minimized Mealy machine of one group element; state 0 is the element.
  // Machines are in canonical form, so equal elements compare equal.
  class MealyElement {
   public:
    struct State {
      std::vector<std::size_t> vperm;
      std::vector<std::size_t> eperm;
      std::vector<std::size_t> next;  // section state per edge
      friend auto operator<=>(State const&, State const&) = default;
      friend bool operator==(State const&, State const&)  = default;
    };

    MealyElement() = default;
    static MealyElement identity(std::size_t vertices, std::size_t edges);
    // Minimizes and renumbers the part reachable from `initial`.
    static MealyElement from_states(std::vector<State> const& states, std::size_t initial = 0);

    std::size_t state_count() const noexcept {
      return _states.size();
    }
    State const& state(std::size_t i) const {
      return _states[i];
    }
    bool is_identity() const;

    std::size_t  act_vertex(std::size_t v) const {
      return _states[0].vperm[v];
    }
    std::size_t  act_edge(std::size_t e) const {
      return _states[0].eperm[e];
    }
    MealyElement section(std::size_t e) const;
    MealyElement section(Path const& p) const;
    Path         act(Path const& p) const;

    MealyElement inverse() const;
    friend MealyElement operator*(MealyElement const& g, MealyElement const& h);

    friend auto operator<=>(MealyElement const&, MealyElement const&) = default;
    friend bool operator==(MealyElement const&, MealyElement const&)  = default;

   private:
    std::vector<State> _states;
  };

  MealyElement power(MealyElement const& g, std::uint64_t k);

  // Machines of the generators, built by exploring freely reduced section
  // words. Throws NotFiniteState past `state_cap` words for one generator.
  class SectionCalculus {
   public:
    explicit SectionCalculus(SelfSimilarAction const& a, std::size_t state_cap = 4096);

    SelfSimilarAction const& action() const noexcept {
      return _action;
    }
    MealyElement const& generator(std::size_t i) const {
      return _gens[i];
    }
    MealyElement identity() const;
    MealyElement evaluate(Word const& w) const;

   private:
    SelfSimilarAction         _action;
    std::vector<MealyElement> _gens;
  };

  struct FiniteStateResult {
    bool        finite = false;
    std::size_t orbit  = 0;  // distinct sections, the element included
  };
  FiniteStateResult is_finite_state(SelfSimilarAction const& a,
                                    Word const&              w,
                                    std::size_t              cap = 4096);

  bool element_equal(MealyElement const& g, MealyElement const& h);

  struct OrderResult {
    bool                       finite = false;
    std::uint64_t              value  = 0;  // the order, or a lower bound
    std::vector<std::uint64_t> level_orders;  // k_1, ..., k_depth
  };

  // k_n is the lcm of the cycle lengths of g on paths of length n. Finite(k)
  // when g^k = 1 for k = k_depth, otherwise GreaterThan(k_depth).
  OrderResult element_order(DirectedGraph const& g, MealyElement const& x, std::size_t depth);

  struct GroupClosure {
    bool                       finite = false;
    std::vector<MealyElement>  elements;  // elements[0] is the identity
    std::vector<Word>          words;     // shortest word for each element
    std::optional<FiniteGroup> group;     // indexed like `elements`
  };

  // Breadth-first closure under right multiplication by the generators.
  GroupClosure group_closure(SectionCalculus const& calc, std::size_t budget);

  struct EPTriple {
    bool         zero = false;
    Path         alpha;
    MealyElement g;
    Path         beta;

    static EPTriple null() {
      return {true, {}, {}, {}};
    }
    friend auto operator<=>(EPTriple const&, EPTriple const&) = default;
    friend bool operator==(EPTriple const&, EPTriple const&)  = default;
  };

  // r(alpha) = g r(beta) and g acts on the graph's vertex and edge sets.
  bool        ep_valid(DirectedGraph const& graph, EPTriple const& t);
  std::string format_triple(DirectedGraph const& graph, EPTriple const& t);

  // Throws IncompatibleAction on invalid triples.
  EPTriple ep_multiply(DirectedGraph const& graph, EPTriple const& s, EPTriple const& t);
  EPTriple ep_star(DirectedGraph const& graph, EPTriple const& t);
  // The path map of the triple: beta eta -> alpha g(eta); nullopt off its
  // domain.
  std::optional<Path> ep_act(DirectedGraph const& graph, EPTriple const& t, Path const& p);

  std::vector<Path> paths_of_length(DirectedGraph const& g, std::size_t n);

  struct TruncatedSemigroup {
    std::vector<EPTriple>    triples;   // triples[0] is zero
    FiniteInverseSemigroup   semigroup;
    std::vector<std::size_t> position;  // index in `semigroup` per triple
  };

  // S_n: zero and the triples alpha g beta* with |alpha| = |beta| <= n, closed
  // under the product and represented faithfully on itself (Wagner-Preston).
  // Throws GroupNotFinite when the closure is not finite.
  TruncatedSemigroup truncated_zero_component(SectionCalculus const& calc,
                                              GroupClosure const&    closure,
                                              std::size_t            n);

  struct EPDecisionOptions {
    std::size_t budget = 1000;  // group closure
    std::size_t depth  = 10;    // level-order diagnostics
    std::size_t faithfulness_depth = 8;
  };

  // Throws InvalidAction when validate_action reports violations.
  RegularityDecision decide_ep_graded_regular(SelfSimilarAction const& a,
                                              CoeffRing const&         ring,
                                              EPDecisionOptions const& opts = {});

}  // namespace regulus

#endif  // REGULUS_SELFSIM_HPP_
