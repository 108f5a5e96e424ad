#include "regulus/zoo.hpp"

#include <numeric>

#include "regulus/errors.hpp"

namespace regulus::zoo {

  namespace {
    constexpr std::uint32_t U = PartialBijection::undefined;

    NamedSemigroup make(std::string name, std::size_t degree,
                        std::vector<std::vector<std::uint32_t>> gens) {
      std::vector<PartialBijection> pbs;
      for (auto& g : gens) {
        pbs.emplace_back(std::move(g));
      }
      auto s = FiniteInverseSemigroup::generate(pbs, 1u << 16);
      return NamedSemigroup{std::move(name), degree, std::move(pbs), std::move(s)};
    }

    std::vector<std::uint32_t> rotation(std::uint32_t n) {
      std::vector<std::uint32_t> r(n);
      for (std::uint32_t i = 0; i < n; ++i) {
        r[i] = (i + 1) % n;
      }
      return r;
    }

    DirectedGraph make_graph(std::vector<std::string> vertices,
                             std::vector<std::tuple<std::string, std::size_t, std::size_t>> edges) {
      std::vector<DirectedGraph::Edge> es;
      for (auto& [l, s, t] : edges) {
        es.push_back({l, s, t});
      }
      return DirectedGraph(std::move(vertices), std::move(es));
    }

    Word gen_word(std::size_t i) {
      return Word{{i, false}};
    }
  }  // namespace

  std::vector<NamedSemigroup> semigroups() {
    std::vector<NamedSemigroup> z;
    z.push_back(make("semilattice-1", 1, {{0}}));
    z.push_back(make("chain-2", 2, {{0, 1}, {0, U}}));
    z.push_back(make("chain-3", 3, {{0, 1, 2}, {0, 1, U}, {0, U, U}}));
    z.push_back(make("diamond", 2, {{0, 1}, {0, U}, {U, 1}}));
    for (std::uint32_t n = 2; n <= 6; ++n) {
      z.push_back(make("cyclic-" + std::to_string(n), n, {rotation(n)}));
    }
    z.push_back(make("sym-3", 3, {{1, 0, 2}, {1, 2, 0}}));
    z.push_back(make("I1", 1, {{0}, {U}}));
    z.push_back(make("I2", 2, {{1, 0}, {0, U}}));
    z.push_back(make("B2", 2, {{1, U}}));
    z.push_back(make("clifford-5", 5, {{0, 1, 2, 4, 3}, {1, 2, 0, U, U}}));
    return z;
  }

  NamedSemigroup semigroup(std::string const& name) {
    for (auto& s : semigroups()) {
      if (s.name == name) {
        return s;
      }
    }
    throw InvalidInput("no zoo semigroup \"" + name + "\"");
  }

  std::vector<CoeffRing> field_rings() {
    return {CoeffRing::parse("F2"), CoeffRing::parse("F3"), CoeffRing::parse("F5"),
            CoeffRing::parse("Q")};
  }

  std::vector<CoeffRing> curated_rings() {
    auto r = field_rings();
    r.push_back(CoeffRing::parse("Z6"));
    r.push_back(CoeffRing::parse("Z12"));
    r.push_back(CoeffRing::parse("product:[F2,F3]"));
    return r;
  }

  std::vector<NamedGroupoid> transitive_groupoids() {
    std::vector<NamedGroupoid> out;
    std::vector<std::pair<std::string, FiniteGroup>> isos{
        {"1", FiniteGroup::trivial()}, {"Z2", FiniteGroup::cyclic(2)}, {"Z3", FiniteGroup::cyclic(3)}};
    for (std::size_t n = 1; n <= 4; ++n) {
      for (auto const& [name, h] : isos) {
        out.push_back({"transitive-" + std::to_string(n) + "-" + name,
                       FiniteGroupoid::transitive(n, h)});
      }
    }
    return out;
  }

  std::vector<NamedGraded> graded_groupoids() {
    std::vector<NamedGraded> out;
    auto add = [&](std::string name, FiniteGroupoid g, GradingGroup h,
                   std::vector<std::int64_t> deg) {
      Cocycle c(g, h, std::move(deg));
      out.push_back({std::move(name), std::move(g), std::move(c)});
    };
    add("z2-injective", FiniteGroupoid::group(FiniteGroup::cyclic(2)), GradingGroup::cyclic(2),
        {0, 1});
    add("z4-identity", FiniteGroupoid::group(FiniteGroup::cyclic(4)), GradingGroup::cyclic(4),
        {0, 1, 2, 3});
    add("z4-mod2", FiniteGroupoid::group(FiniteGroup::cyclic(4)), GradingGroup::cyclic(2),
        {0, 1, 0, 1});
    {
      auto g = FiniteGroupoid::group(FiniteGroup::cyclic(3));
      auto c = Cocycle::trivial(g, GradingGroup::integers());
      out.push_back({"z3-trivial", std::move(g), std::move(c)});
    }
    for (std::size_t n : {2, 3}) {
      auto                      g = FiniteGroupoid::pair(n);
      std::vector<std::int64_t> deg;
      for (std::size_t a = 0; a < g.arrow_count(); ++a) {
        deg.push_back(static_cast<std::int64_t>(g.tgt(a)) - static_cast<std::int64_t>(g.src(a)));
      }
      add("pair-" + std::to_string(n) + "-offset", std::move(g), GradingGroup::integers(),
          std::move(deg));
    }
    for (std::string name : {"edge", "fork", "merge", "diamond"}) {
      auto bg = boundary_groupoid(graph(name));
      out.push_back({"boundary-" + name, std::move(bg.groupoid), std::move(bg.cocycle)});
    }
    return out;
  }

  std::vector<NamedGraph> graphs() {
    std::vector<NamedGraph> z;
    z.push_back({"point", make_graph({"v"}, {})});
    z.push_back({"edge", make_graph({"v", "w"}, {{"e", 0, 1}})});
    z.push_back({"line-3", make_graph({"u", "v", "w"}, {{"e", 0, 1}, {"f", 1, 2}})});
    z.push_back({"parallel", make_graph({"v", "w"}, {{"e", 0, 1}, {"f", 0, 1}})});
    z.push_back({"fork", make_graph({"v", "w1", "w2"}, {{"e", 0, 1}, {"f", 0, 2}})});
    z.push_back({"merge", make_graph({"u", "v", "w"}, {{"e", 0, 2}, {"f", 1, 2}})});
    z.push_back({"diamond", make_graph({"a", "b", "c", "d"},
                                       {{"ab", 0, 1}, {"ac", 0, 2}, {"bd", 1, 3}, {"cd", 2, 3}})});
    z.push_back({"disjoint", make_graph({"v", "w", "x"}, {{"e", 0, 1}})});
    z.push_back({"line-6", make_graph({"v1", "v2", "v3", "v4", "v5", "v6"},
                                      {{"e1", 0, 1}, {"e2", 1, 2}, {"e3", 2, 3}, {"e4", 3, 4},
                                       {"e5", 4, 5}})});
    z.push_back({"dag-6", make_graph({"a", "b", "c", "d", "e", "f"},
                                     {{"ab", 0, 1}, {"ac", 0, 2}, {"bd", 1, 3}, {"cd", 2, 3},
                                      {"de", 3, 4}, {"cf", 2, 5}})});
    z.push_back({"loop", make_graph({"v"}, {{"e", 0, 0}})});
    z.push_back({"rose-2", make_graph({"v"}, {{"0", 0, 0}, {"1", 0, 0}})});
    z.push_back({"cycle-2", make_graph({"v", "w"}, {{"e0", 0, 1}, {"e1", 1, 0}})});
    z.push_back({"loop-exit", make_graph({"v", "w"}, {{"e", 0, 0}, {"f", 0, 1}})});
    z.push_back({"cycle-3-tail", make_graph({"u", "v", "w", "x"},
                                            {{"e", 0, 1}, {"f", 1, 2}, {"g", 2, 0}, {"h", 2, 3}})});
    return z;
  }

  DirectedGraph graph(std::string const& name) {
    for (auto& g : graphs()) {
      if (g.name == name) {
        return g.graph;
      }
    }
    throw InvalidInput("no zoo graph \"" + name + "\"");
  }

  std::vector<NamedAction> actions() {
    std::vector<NamedAction> z;
    z.push_back({"adding-machine",
                 SelfSimilarAction(graph("rose-2"), {{"a", {0}, {1, 0}, {Word{}, gen_word(0)}}}),
                 true, false});
    z.push_back({"edge-swap",
                 SelfSimilarAction(graph("rose-2"), {{"g", {0}, {1, 0}, {Word{}, Word{}}}}), true,
                 true});
    z.push_back({"vertex-swap",
                 SelfSimilarAction(graph("cycle-2"),
                                   {{"t", {1, 0}, {1, 0}, {gen_word(0), gen_word(0)}}}),
                 true, true});
    z.push_back({"trivial-loop", SelfSimilarAction(graph("loop"), {}), true, true});
    z.push_back({"trivial-rose", SelfSimilarAction(graph("rose-2"), {}), true, true});
    z.push_back({"corrupted-swap",
                 SelfSimilarAction(graph("cycle-2"), {{"t", {1, 0}, {1, 0}, {gen_word(0), Word{}}}}),
                 false, false});
    return z;
  }

  SelfSimilarAction action(std::string const& name) {
    for (auto& a : actions()) {
      if (a.name == name) {
        return a.action;
      }
    }
    throw InvalidInput("no zoo action \"" + name + "\"");
  }

}  // namespace regulus::zoo
