#include "regulus/selfsim.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "regulus/errors.hpp"

namespace regulus {

  Word inverse_word(Word const& w) {
    Word out(w.rbegin(), w.rend());
    for (auto& x : out) {
      x.inverse = !x.inverse;
    }
    return out;
  }

  Word free_reduce(Word w) {
    Word out;
    for (auto const& x : w) {
      if (!out.empty() && out.back().gen == x.gen && out.back().inverse != x.inverse) {
        out.pop_back();
      } else {
        out.push_back(x);
      }
    }
    return out;
  }

  namespace {
    bool is_permutation_of(std::vector<std::size_t> const& p, std::size_t n) {
      if (p.size() != n) {
        return false;
      }
      std::vector<bool> hit(n, false);
      for (auto x : p) {
        if (x >= n || hit[x]) {
          return false;
        }
        hit[x] = true;
      }
      return true;
    }

    std::vector<std::size_t> invert_perm(std::vector<std::size_t> const& p) {
      std::vector<std::size_t> q(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) {
        q[p[i]] = i;
      }
      return q;
    }

    std::optional<Path> strip_prefix(DirectedGraph const& g, Path const& p, Path const& q) {
      if (p.source != q.source || p.length() > q.length()
          || !std::equal(p.edges.begin(), p.edges.end(), q.edges.begin())) {
        return std::nullopt;
      }
      return Path{p.range(g), {q.edges.begin() + p.length(), q.edges.end()}};
    }

    Path concat(Path a, Path const& b) {
      a.edges.insert(a.edges.end(), b.edges.begin(), b.edges.end());
      return a;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // SelfSimilarAction
  ////////////////////////////////////////////////////////////////////////

  SelfSimilarAction::SelfSimilarAction(DirectedGraph graph, std::vector<SelfSimilarGenerator> gens)
      : _graph(std::move(graph)), _generators(std::move(gens)) {
    std::size_t const V = _graph.vertex_count(), E = _graph.edge_count();
    for (auto const& g : _generators) {
      if (!is_permutation_of(g.vertex_perm, V)) {
        throw InvalidInput("generator " + g.name + ": vertex map is not a permutation");
      }
      if (!is_permutation_of(g.edge_perm, E)) {
        throw InvalidInput("generator " + g.name + ": edge map is not a permutation");
      }
      if (g.sections.size() != E) {
        throw InvalidInput("generator " + g.name + " needs one section per edge");
      }
      for (auto const& w : g.sections) {
        for (auto const& x : w) {
          if (x.gen >= _generators.size()) {
            throw InvalidInput("generator " + g.name + ": section uses an unknown generator");
          }
        }
      }
    }
  }

  std::string SelfSimilarAction::format_word(Word const& w) const {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& x : w) {
      out += (out.empty() ? "" : " ") + _generators[x.gen].name + (x.inverse ? "^-1" : "");
    }
    return out;
  }

  std::size_t SelfSimilarAction::act_vertex(Word const& w, std::size_t v) const {
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      auto const& p = _generators[it->gen].vertex_perm;
      v = it->inverse ? static_cast<std::size_t>(std::find(p.begin(), p.end(), v) - p.begin())
                      : p[v];
    }
    return v;
  }

  std::size_t SelfSimilarAction::act_edge(Word const& w, std::size_t e) const {
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      auto const& p = _generators[it->gen].edge_perm;
      e = it->inverse ? static_cast<std::size_t>(std::find(p.begin(), p.end(), e) - p.begin())
                      : p[e];
    }
    return e;
  }

  Word SelfSimilarAction::section(Word const& w, std::size_t e) const {
    // (x1...xk)|_e = x1|_{(x2...xk)(e)} ... xk|_e
    std::vector<Word> pieces(w.size());
    std::size_t       cur = e;
    for (std::size_t i = w.size(); i-- > 0;) {
      Letter const& x = w[i];
      auto const&   g = _generators[x.gen];
      if (!x.inverse) {
        pieces[i] = g.sections[cur];
        cur       = g.edge_perm[cur];
      } else {
        std::size_t pre = static_cast<std::size_t>(
            std::find(g.edge_perm.begin(), g.edge_perm.end(), cur) - g.edge_perm.begin());
        pieces[i] = inverse_word(g.sections[pre]);
        cur       = pre;
      }
    }
    Word out;
    for (auto const& p : pieces) {
      out.insert(out.end(), p.begin(), p.end());
    }
    return free_reduce(std::move(out));
  }

  namespace {
    Path word_act(SelfSimilarAction const& a, Word const& w, Path const& p) {
      if (p.edges.empty()) {
        return Path{a.act_vertex(w, p.source), {}};
      }
      std::size_t e    = p.edges.front();
      Path        rest = word_act(a, a.section(w, e),
                                  Path{a.graph().r(e), {p.edges.begin() + 1, p.edges.end()}});
      std::size_t f    = a.act_edge(w, e);
      Path        out{a.graph().s(f), {f}};
      out.edges.insert(out.edges.end(), rest.edges.begin(), rest.edges.end());
      return out;
    }
  }  // namespace

  std::vector<Violation> validate_action(SelfSimilarAction const& a, std::uint64_t seed) {
    std::vector<Violation> out;
    auto const&            g    = a.graph();
    auto const&            gens = a.generators();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (g.is_sink(v)) {
        out.push_back({"no sinks", "vertex " + g.vertex_label(v) + " is a sink"});
      }
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto const& x = gens[i];
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        std::size_t f = x.edge_perm[e];
        if (g.s(f) != x.vertex_perm[g.s(e)] || g.r(f) != x.vertex_perm[g.r(e)]) {
          out.push_back({"graph preserved", "generator " + x.name + " at edge " + g.edge(e).label});
        }
        Word sec = a.section(Word{{i, false}}, e);
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
          if (a.act_vertex(sec, v) != x.vertex_perm[v]) {
            out.push_back({"g(v) = g|_e(v)", "generator " + x.name + " at edge " + g.edge(e).label
                                                 + ", vertex " + g.vertex_label(v)});
            break;
          }
        }
      }
    }
    if (gens.empty()) {
      return out;
    }
    // (gh)|_e = g|_{h(e)} h|_e, compared through the action on short paths
    std::vector<std::pair<Letter, Letter>> pairs;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = 0; j < gens.size(); ++j) {
        pairs.push_back({{i, false}, {j, false}});
      }
    }
    std::mt19937_64 rng(seed);
    for (int n = 0; n < 100; ++n) {
      pairs.push_back({{static_cast<std::size_t>(rng() % gens.size()), rng() % 2 == 1},
                       {static_cast<std::size_t>(rng() % gens.size()), rng() % 2 == 1}});
    }
    std::vector<Path> probes;
    for (std::size_t k = 0; k <= 3; ++k) {
      auto p = paths_of_length(g, k);
      probes.insert(probes.end(), p.begin(), p.end());
    }
    for (auto const& [x, y] : pairs) {
      Word gh{x, y};
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        Word lhs = a.section(gh, e);
        Word rhs = free_reduce(
            [&] {
              Word w = a.section(Word{x}, a.act_edge(Word{y}, e));
              Word v = a.section(Word{y}, e);
              w.insert(w.end(), v.begin(), v.end());
              return w;
            }());
        for (auto const& p : probes) {
          if (word_act(a, lhs, p) != word_act(a, rhs, p)) {
            out.push_back({"(gh)|_e = g|_{h(e)} h|_e",
                           "(" + a.format_word(gh) + ") at edge " + g.edge(e).label});
            break;
          }
        }
      }
      for (auto const& p : probes) {
        if (word_act(a, gh, p) != word_act(a, Word{x}, word_act(a, Word{y}, p))) {
          out.push_back({"(gh)(p) = g(h(p))", a.format_word(gh) + " on " + format_path(g, p)});
          break;
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // MealyElement
  ////////////////////////////////////////////////////////////////////////

  MealyElement MealyElement::identity(std::size_t vertices, std::size_t edges) {
    State s;
    s.vperm.resize(vertices);
    s.eperm.resize(edges);
    std::iota(s.vperm.begin(), s.vperm.end(), 0);
    std::iota(s.eperm.begin(), s.eperm.end(), 0);
    s.next.assign(edges, 0);
    MealyElement m;
    m._states.push_back(std::move(s));
    return m;
  }

  MealyElement MealyElement::from_states(std::vector<State> const& states, std::size_t initial) {
    std::size_t const n = states.size();
    std::size_t const E = states.at(initial).eperm.size();
    std::vector<std::size_t> reach{initial};
    std::vector<bool>        seen(n, false);
    seen[initial] = true;
    for (std::size_t i = 0; i < reach.size(); ++i) {
      for (auto q : states[reach[i]].next) {
        if (!seen[q]) {
          seen[q] = true;
          reach.push_back(q);
        }
      }
    }
    // Moore refinement on the reachable part
    std::vector<std::size_t> cls(n, 0);
    {
      std::map<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>, std::size_t> ids;
      for (auto q : reach) {
        cls[q] = ids.emplace(std::make_pair(states[q].vperm, states[q].eperm), ids.size())
                     .first->second;
      }
    }
    std::size_t count = 0;
    while (true) {
      std::map<std::vector<std::size_t>, std::size_t> ids;
      std::vector<std::size_t>                        next_cls(n, 0);
      for (auto q : reach) {
        std::vector<std::size_t> sig{cls[q]};
        for (auto r : states[q].next) {
          sig.push_back(cls[r]);
        }
        next_cls[q] = ids.emplace(std::move(sig), ids.size()).first->second;
      }
      cls.swap(next_cls);
      if (ids.size() == count) {
        break;
      }
      count = ids.size();
    }
    // canonical numbering by breadth-first search from the initial class
    std::map<std::size_t, std::size_t> number;
    std::vector<std::size_t>           rep;
    number[cls[initial]] = 0;
    rep.push_back(initial);
    for (std::size_t i = 0; i < rep.size(); ++i) {
      for (std::size_t e = 0; e < E; ++e) {
        std::size_t r = states[rep[i]].next[e];
        if (number.emplace(cls[r], rep.size()).second) {
          rep.push_back(r);
        }
      }
    }
    MealyElement m;
    for (auto q : rep) {
      State s = states[q];
      for (auto& r : s.next) {
        r = number.at(cls[r]);
      }
      m._states.push_back(std::move(s));
    }
    return m;
  }

  bool MealyElement::is_identity() const {
    return *this == identity(_states[0].vperm.size(), _states[0].eperm.size());
  }

  MealyElement MealyElement::section(std::size_t e) const {
    return from_states(_states, _states[0].next.at(e));
  }

  MealyElement MealyElement::section(Path const& p) const {
    std::size_t q = 0;
    for (auto e : p.edges) {
      q = _states[q].next.at(e);
    }
    return from_states(_states, q);
  }

  Path MealyElement::act(Path const& p) const {
    Path        out{_states[0].vperm.at(p.source), {}};
    std::size_t q = 0;
    for (auto e : p.edges) {
      out.edges.push_back(_states[q].eperm.at(e));
      q = _states[q].next[e];
    }
    return out;
  }

  MealyElement MealyElement::inverse() const {
    std::vector<State> inv;
    for (auto const& s : _states) {
      State t;
      t.vperm = invert_perm(s.vperm);
      t.eperm = invert_perm(s.eperm);
      t.next.resize(s.next.size());
      for (std::size_t f = 0; f < s.next.size(); ++f) {
        t.next[f] = s.next[t.eperm[f]];
      }
      inv.push_back(std::move(t));
    }
    return from_states(inv, 0);
  }

  MealyElement operator*(MealyElement const& g, MealyElement const& h) {
    if (g._states[0].eperm.size() != h._states[0].eperm.size()
        || g._states[0].vperm.size() != h._states[0].vperm.size()) {
      throw IncompatibleAction("machines act on different graphs");
    }
    std::size_t const E = g._states[0].eperm.size();
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index{{{0, 0}, 0}};
    std::vector<std::pair<std::size_t, std::size_t>>           pairs{{0, 0}};
    std::vector<MealyElement::State>                           states;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto [p, q]     = pairs[i];
      auto const& gp  = g._states[p];
      auto const& hq  = h._states[q];
      MealyElement::State s;
      for (auto v : hq.vperm) {
        s.vperm.push_back(gp.vperm[v]);
      }
      for (std::size_t e = 0; e < E; ++e) {
        std::size_t he = hq.eperm[e];
        s.eperm.push_back(gp.eperm[he]);
        std::pair<std::size_t, std::size_t> nxt{gp.next[he], hq.next[e]};
        auto [it, fresh] = index.emplace(nxt, pairs.size());
        if (fresh) {
          pairs.push_back(nxt);
        }
        s.next.push_back(it->second);
      }
      states.push_back(std::move(s));
    }
    return MealyElement::from_states(states, 0);
  }

  MealyElement power(MealyElement const& g, std::uint64_t k) {
    MealyElement result =
        MealyElement::identity(g.state(0).vperm.size(), g.state(0).eperm.size());
    MealyElement base = g;
    while (k > 0) {
      if (k & 1) {
        result = result * base;
      }
      k >>= 1;
      if (k > 0) {
        base = base * base;
      }
    }
    return result;
  }

  bool element_equal(MealyElement const& g, MealyElement const& h) {
    return g == h;
  }

  ////////////////////////////////////////////////////////////////////////
  // SectionCalculus
  ////////////////////////////////////////////////////////////////////////

  SectionCalculus::SectionCalculus(SelfSimilarAction const& a, std::size_t state_cap)
      : _action(a) {
    auto const&       gens = a.generators();
    std::size_t const V = a.graph().vertex_count(), E = a.graph().edge_count();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::map<Word, std::size_t>      index;
      std::vector<Word>                words{Word{{i, false}}};
      std::vector<MealyElement::State> states;
      index[words[0]] = 0;
      for (std::size_t k = 0; k < words.size(); ++k) {
        MealyElement::State s;
        Word const          w = words[k];
        for (std::size_t v = 0; v < V; ++v) {
          s.vperm.push_back(a.act_vertex(w, v));
        }
        for (std::size_t e = 0; e < E; ++e) {
          s.eperm.push_back(a.act_edge(w, e));
          Word sec         = a.section(w, e);
          auto [it, fresh] = index.emplace(sec, words.size());
          if (fresh) {
            if (words.size() >= state_cap) {
              throw NotFiniteState("generator " + gens[i].name + " has more than "
                                   + std::to_string(state_cap) + " distinct section words");
            }
            words.push_back(sec);
          }
          s.next.push_back(it->second);
        }
        states.push_back(std::move(s));
      }
      _gens.push_back(MealyElement::from_states(states, 0));
    }
  }

  MealyElement SectionCalculus::identity() const {
    return MealyElement::identity(_action.graph().vertex_count(), _action.graph().edge_count());
  }

  MealyElement SectionCalculus::evaluate(Word const& w) const {
    MealyElement out = identity();
    for (auto const& x : w) {
      out = out * (x.inverse ? _gens.at(x.gen).inverse() : _gens.at(x.gen));
    }
    return out;
  }

  FiniteStateResult is_finite_state(SelfSimilarAction const& a, Word const& w, std::size_t cap) {
    try {
      SectionCalculus calc(a, cap);
      MealyElement    m = calc.evaluate(w);
      return {m.state_count() <= cap, m.state_count()};
    } catch (NotFiniteState const&) {
      return {false, 0};
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Orders and closures
  ////////////////////////////////////////////////////////////////////////

  std::vector<Path> paths_of_length(DirectedGraph const& g, std::size_t n) {
    std::vector<Path> out;
    if (n == 0) {
      for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        out.push_back(Path{v, {}});
      }
      return out;
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      out.push_back(Path{g.s(e), {e}});
    }
    for (std::size_t k = 1; k < n; ++k) {
      std::vector<Path> longer;
      for (auto const& p : out) {
        for (auto e : g.out_edges(p.range(g))) {
          Path q = p;
          q.edges.push_back(e);
          longer.push_back(std::move(q));
        }
      }
      out.swap(longer);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  OrderResult element_order(DirectedGraph const& g, MealyElement const& x, std::size_t depth) {
    OrderResult res;
    std::uint64_t k = 1;
    for (std::size_t n = 1; n <= depth; ++n) {
      auto                     paths = paths_of_length(g, n);
      std::map<Path, std::size_t> index;
      for (std::size_t i = 0; i < paths.size(); ++i) {
        index[paths[i]] = i;
      }
      std::vector<bool> done(paths.size(), false);
      std::uint64_t     kn = 1;
      for (std::size_t i = 0; i < paths.size(); ++i) {
        std::uint64_t len = 0;
        for (std::size_t j = i; !done[j]; j = index.at(x.act(paths[j]))) {
          done[j] = true;
          ++len;
        }
        if (len > 0) {
          kn = arith::lcm(kn, len);
        }
      }
      res.level_orders.push_back(kn);
      k = kn;
    }
    res.value  = k;
    res.finite = power(x, k).is_identity();
    return res;
  }

  GroupClosure group_closure(SectionCalculus const& calc, std::size_t budget) {
    GroupClosure                         out;
    std::size_t const                    ng = calc.action().generators().size();
    std::map<MealyElement, std::size_t>  index;
    std::vector<std::vector<std::size_t>> right;
    out.elements.push_back(calc.identity());
    out.words.emplace_back();
    index[out.elements[0]] = 0;
    for (std::size_t i = 0; i < out.elements.size(); ++i) {
      right.emplace_back(ng);
      for (std::size_t j = 0; j < ng; ++j) {
        MealyElement p = out.elements[i] * calc.generator(j);
        auto [it, fresh] = index.emplace(p, out.elements.size());
        if (fresh) {
          if (out.elements.size() >= budget) {
            return out;
          }
          Word w = out.words[i];
          w.push_back({j, false});
          out.elements.push_back(std::move(p));
          out.words.push_back(std::move(w));
        }
        right[i][j] = it->second;
      }
    }
    std::size_t const  n = out.elements.size();
    FiniteGroup::Table table(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t cur = i;
        for (auto const& x : out.words[k]) {
          cur = right[cur][x.gen];
        }
        table[i][k] = cur;
      }
    }
    out.group  = FiniteGroup::from_table(std::move(table));
    out.finite = true;
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Exel-Pardo triples
  ////////////////////////////////////////////////////////////////////////

  bool ep_valid(DirectedGraph const& graph, EPTriple const& t) {
    if (t.zero) {
      return true;
    }
    if (t.g.state_count() == 0 || t.g.state(0).vperm.size() != graph.vertex_count()
        || t.g.state(0).eperm.size() != graph.edge_count()) {
      return false;
    }
    return t.alpha.range(graph) == t.g.act_vertex(t.beta.range(graph));
  }

  std::string format_triple(DirectedGraph const& graph, EPTriple const& t) {
    if (t.zero) {
      return "0";
    }
    return format_path(graph, t.alpha) + " [" + std::to_string(t.g.state_count()) + "-state] ("
           + format_path(graph, t.beta) + ")*";
  }

  EPTriple ep_multiply(DirectedGraph const& graph, EPTriple const& s, EPTriple const& t) {
    if (!ep_valid(graph, s) || !ep_valid(graph, t)) {
      throw IncompatibleAction("invalid triple in product");
    }
    if (s.zero || t.zero) {
      return EPTriple::null();
    }
    // (alpha g beta*)(lambda h nu*)
    if (auto gamma = strip_prefix(graph, s.beta, t.alpha)) {
      return {false, concat(s.alpha, s.g.act(*gamma)), s.g.section(*gamma) * t.g, t.beta};
    }
    if (auto gamma = strip_prefix(graph, t.alpha, s.beta)) {
      MealyElement hinv = t.g.inverse();
      return {false, s.alpha, s.g * hinv.section(*gamma).inverse(),
              concat(t.beta, hinv.act(*gamma))};
    }
    return EPTriple::null();
  }

  EPTriple ep_star(DirectedGraph const& graph, EPTriple const& t) {
    if (!ep_valid(graph, t)) {
      throw IncompatibleAction("invalid triple in involution");
    }
    if (t.zero) {
      return t;
    }
    return {false, t.beta, t.g.inverse(), t.alpha};
  }

  std::optional<Path> ep_act(DirectedGraph const& graph, EPTriple const& t, Path const& p) {
    if (t.zero) {
      return std::nullopt;
    }
    auto eta = strip_prefix(graph, t.beta, p);
    if (!eta) {
      return std::nullopt;
    }
    return concat(t.alpha, t.g.act(*eta));
  }

  TruncatedSemigroup truncated_zero_component(SectionCalculus const& calc,
                                              GroupClosure const&    closure,
                                              std::size_t            n) {
    if (!closure.finite) {
      throw GroupNotFinite("group closure did not terminate within its budget");
    }
    auto const&                 graph = calc.action().graph();
    std::vector<EPTriple>       triples{EPTriple::null()};
    std::map<EPTriple, std::size_t> index{{triples[0], 0}};
    for (std::size_t k = 0; k <= n; ++k) {
      auto paths = paths_of_length(graph, k);
      for (auto const& alpha : paths) {
        for (auto const& beta : paths) {
          for (auto const& g : closure.elements) {
            EPTriple t{false, alpha, g, beta};
            if (ep_valid(graph, t)) {
              index.emplace(t, triples.size());
              triples.push_back(std::move(t));
            }
          }
        }
      }
    }
    std::size_t const        m = triples.size();
    std::vector<std::size_t> table(m * m), star(m);
    for (std::size_t i = 0; i < m; ++i) {
      star[i] = index.at(ep_star(graph, triples[i]));
      for (std::size_t j = 0; j < m; ++j) {
        auto it = index.find(ep_multiply(graph, triples[i], triples[j]));
        if (it == index.end()) {
          throw std::logic_error("truncated semigroup is not closed under the product");
        }
        table[i * m + j] = it->second;
      }
    }
    // Wagner-Preston: s acts on s*S by x -> sx
    std::vector<PartialBijection> reps;
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t const          d = table[star[i] * m + i];
      std::vector<std::uint32_t> im(m, PartialBijection::undefined);
      for (std::size_t x = 0; x < m; ++x) {
        if (table[d * m + x] == x) {
          im[x] = static_cast<std::uint32_t>(table[i * m + x]);
        }
      }
      reps.emplace_back(std::move(im));
    }
    auto sg = FiniteInverseSemigroup::from_elements(reps);
    if (sg.size() != m) {
      throw std::logic_error("Wagner-Preston representation is not faithful");
    }
    std::vector<std::size_t> position;
    for (auto const& r : reps) {
      position.push_back(*sg.index_of(r));
    }
    return TruncatedSemigroup{std::move(triples), std::move(sg), std::move(position)};
  }

  RegularityDecision decide_ep_graded_regular(SelfSimilarAction const& a,
                                              CoeffRing const&         ring,
                                              EPDecisionOptions const& opts) {
    auto violations = validate_action(a);
    if (!violations.empty()) {
      throw InvalidAction("invalid self-similar action: " + violations.front().axiom + " at "
                          + violations.front().detail);
    }
    std::vector<Condition> c;
    c.push_back(ring_regular_condition(ring));
    std::optional<SectionCalculus> calc;
    try {
      calc.emplace(a);
    } catch (NotFiniteState const& e) {
      c.push_back({"finite state", Condition::Status::unknown, e.what()});
      return RegularityDecision::from_conditions(std::move(c), true);
    }
    auto const& graph = a.graph();
    std::string trivial_gen;
    for (std::size_t i = 0; i < a.generators().size() && trivial_gen.empty(); ++i) {
      MealyElement const& g = calc->generator(i);
      if (g.is_identity()) {
        continue;
      }
      bool moved = false;
      for (std::size_t k = 0; k <= opts.faithfulness_depth && !moved; ++k) {
        for (auto const& p : paths_of_length(graph, k)) {
          if (g.act(p) != p) {
            moved = true;
            break;
          }
        }
      }
      if (!moved) {
        trivial_gen = a.generators()[i].name;
      }
    }
    c.push_back({"action faithful (asserted)",
                 trivial_gen.empty() ? Condition::Status::pass : Condition::Status::unknown,
                 trivial_gen.empty()
                     ? "nontrivial generators move a path of length <= "
                           + std::to_string(opts.faithfulness_depth)
                     : "generator " + trivial_gen + " fixes all paths of length <= "
                           + std::to_string(opts.faithfulness_depth)});
    auto closure = group_closure(*calc, opts.budget);
    if (closure.finite) {
      c.push_back({"group locally finite", Condition::Status::pass,
                   "closure is a group of order " + std::to_string(closure.elements.size())});
    } else {
      std::string diag = "closure exceeded budget " + std::to_string(opts.budget);
      for (std::size_t i = 0; i < a.generators().size(); ++i) {
        auto ord = element_order(graph, calc->generator(i), opts.depth);
        if (ord.finite) {
          continue;
        }
        diag += "; " + a.generators()[i].name + " level orders";
        for (std::size_t k = 0; k < ord.level_orders.size(); ++k) {
          diag += (k ? "," : " ") + std::to_string(ord.level_orders[k]);
        }
      }
      c.push_back({"group locally finite", Condition::Status::unknown, diag});
    }
    return RegularityDecision::from_conditions(std::move(c), true);
  }

}  // namespace regulus
