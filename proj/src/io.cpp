#include "regulus/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "regulus/errors.hpp"

namespace regulus::io {

  namespace {
    Json const& field(Json const& j, char const* key, std::string const& ctx) {
      if (!j.is_object() || !j.contains(key)) {
        throw InvalidInput(ctx + ": missing field \"" + key + "\"");
      }
      return j.at(key);
    }

    std::size_t to_index(Json const& j, std::string const& ctx) {
      if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
        throw InvalidInput(ctx + ": expected a nonnegative integer, got " + j.dump());
      }
      return j.get<std::size_t>();
    }

    Json const& array_field(Json const& j, char const* key, std::string const& ctx) {
      Json const& a = field(j, key, ctx);
      if (!a.is_array()) {
        throw InvalidInput(ctx + ": \"" + key + "\" must be an array");
      }
      return a;
    }

    // Label or index lookup.
    std::size_t resolve(Json const& j, std::vector<std::string> const& labels,
                        std::string const& ctx) {
      if (j.is_string()) {
        auto it = std::find(labels.begin(), labels.end(), j.get<std::string>());
        if (it == labels.end()) {
          throw InvalidInput(ctx + ": unknown label " + j.dump());
        }
        return static_cast<std::size_t>(it - labels.begin());
      }
      std::size_t i = to_index(j, ctx);
      if (i >= labels.size()) {
        throw InvalidInput(ctx + ": index " + std::to_string(i) + " out of range");
      }
      return i;
    }

    std::string verdict_string(Verdict v) {
      switch (v) {
        case Verdict::regular:
          return "Regular";
        case Verdict::not_regular:
          return "NotRegular";
        case Verdict::unknown:
          return "Unknown";
      }
      return "Unknown";
    }
  }  // namespace

  Json parse(std::string const& text, std::string const& origin) {
    try {
      return Json::parse(text);
    } catch (Json::parse_error const& e) {
      throw InvalidInput(origin + ": " + e.what());
    }
  }

  Json read_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InvalidInput("cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
  }

  SemigroupInput semigroup_from_json(Json const& j) {
    std::string const ctx = "semigroup";
    SemigroupInput    in;
    in.degree = to_index(field(j, "degree", ctx), ctx + ".degree");
    if (j.contains("cap")) {
      in.cap = to_index(j.at("cap"), ctx + ".cap");
    }
    auto const& gens = array_field(j, "generators", ctx);
    if (gens.empty()) {
      throw InvalidInput(ctx + ": at least one generator is required");
    }
    for (std::size_t k = 0; k < gens.size(); ++k) {
      std::string const gctx = ctx + ".generators[" + std::to_string(k) + "]";
      if (!gens[k].is_array() || gens[k].size() != in.degree) {
        throw InvalidInput(gctx + ": expected " + std::to_string(in.degree) + " images");
      }
      std::vector<std::uint32_t> im;
      for (auto const& x : gens[k]) {
        im.push_back(x.is_null() ? PartialBijection::undefined
                                 : static_cast<std::uint32_t>(to_index(x, gctx)));
      }
      try {
        in.generators.emplace_back(std::move(im));
      } catch (InvalidInput const& e) {
        throw InvalidInput(gctx + ": " + e.what());
      }
    }
    return in;
  }

  Json semigroup_to_json(std::size_t degree, std::vector<PartialBijection> const& gens,
                         std::size_t cap) {
    Json g = Json::array();
    for (auto const& p : gens) {
      Json im = Json::array();
      for (auto x : p.images()) {
        im.push_back(x == PartialBijection::undefined ? Json(nullptr) : Json(x));
      }
      g.push_back(std::move(im));
    }
    return Json{{"degree", degree}, {"generators", std::move(g)}, {"cap", cap}};
  }

  FiniteGroupoid groupoid_from_json(Json const& j) {
    std::string const        ctx   = "groupoid";
    auto const&              units = array_field(j, "units", ctx);
    std::size_t const        u     = units.size();
    std::vector<std::size_t> src, tgt;
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < u; ++x) {
      src.push_back(x);
      tgt.push_back(x);
      labels.push_back(units[x].is_string() ? units[x].get<std::string>() : units[x].dump());
    }
    std::vector<std::string> const unit_labels = labels;
    auto const& arrows = j.contains("arrows") ? array_field(j, "arrows", ctx) : Json::array();
    for (std::size_t k = 0; k < arrows.size(); ++k) {
      std::string const actx = ctx + ".arrows[" + std::to_string(k) + "]";
      src.push_back(resolve(field(arrows[k], "src", actx), unit_labels, actx + ".src"));
      tgt.push_back(resolve(field(arrows[k], "tgt", actx), unit_labels, actx + ".tgt"));
      labels.push_back(arrows[k].contains("label") ? arrows[k].at("label").get<std::string>()
                                                   : "a" + std::to_string(u + k));
    }
    std::vector<std::array<std::size_t, 3>> compose;
    if (j.contains("compose")) {
      for (auto const& t : array_field(j, "compose", ctx)) {
        if (!t.is_array() || t.size() != 3) {
          throw InvalidInput(ctx + ".compose: entries are [g, d, gd] triples");
        }
        compose.push_back({to_index(t[0], ctx + ".compose"), to_index(t[1], ctx + ".compose"),
                           to_index(t[2], ctx + ".compose")});
      }
    }
    return FiniteGroupoid::from_triples(u, std::move(src), std::move(tgt), compose,
                                        std::move(labels));
  }

  Json groupoid_to_json(FiniteGroupoid const& g) {
    Json units = Json::array(), arrows = Json::array(), compose = Json::array();
    for (std::size_t x = 0; x < g.unit_count(); ++x) {
      units.push_back(g.label(x));
    }
    for (std::size_t a = g.unit_count(); a < g.arrow_count(); ++a) {
      arrows.push_back(Json{{"src", g.src(a)}, {"tgt", g.tgt(a)}, {"label", g.label(a)}});
      for (std::size_t b = g.unit_count(); b < g.arrow_count(); ++b) {
        if (g.compose(a, b) != FiniteGroupoid::npos) {
          compose.push_back(Json::array({a, b, g.compose(a, b)}));
        }
      }
    }
    return Json{{"units", std::move(units)}, {"arrows", std::move(arrows)},
                {"compose", std::move(compose)}};
  }

  Cocycle cocycle_from_json(Json const& j, FiniteGroupoid const& g) {
    std::string const ctx   = "cocycle";
    auto const&       group = field(j, "group", ctx);
    if (!group.is_string()) {
      throw InvalidInput(ctx + ".group must be \"Z\" or \"Z/k\"");
    }
    std::vector<std::int64_t> degrees;
    for (auto const& d : array_field(j, "degrees", ctx)) {
      if (!d.is_number_integer()) {
        throw InvalidInput(ctx + ".degrees: expected integers");
      }
      degrees.push_back(d.get<std::int64_t>());
    }
    return Cocycle(g, GradingGroup::parse(group.get<std::string>()), std::move(degrees));
  }

  Json cocycle_to_json(Cocycle const& c) {
    return Json{{"group", c.group().name()}, {"degrees", c.degrees()}};
  }

  DirectedGraph graph_from_json(Json const& j) {
    std::string const        ctx = "graph";
    std::vector<std::string> vertices;
    for (auto const& v : array_field(j, "vertices", ctx)) {
      vertices.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    std::vector<DirectedGraph::Edge> edges;
    auto const& es = j.contains("edges") ? array_field(j, "edges", ctx) : Json::array();
    for (std::size_t k = 0; k < es.size(); ++k) {
      std::string const ectx = ctx + ".edges[" + std::to_string(k) + "]";
      std::string       label = "e" + std::to_string(k);
      if (es[k].contains("id")) {
        auto const& id = es[k].at("id");
        label          = id.is_string() ? id.get<std::string>() : id.dump();
      }
      edges.push_back({label, resolve(field(es[k], "src", ectx), vertices, ectx + ".src"),
                       resolve(field(es[k], "tgt", ectx), vertices, ectx + ".tgt")});
    }
    return DirectedGraph(std::move(vertices), std::move(edges));
  }

  Json graph_to_json(DirectedGraph const& g) {
    Json vertices = Json::array(), edges = Json::array();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      vertices.push_back(g.vertex_label(v));
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      edges.push_back(Json{{"id", g.edge(e).label},
                           {"src", g.vertex_label(g.s(e))},
                           {"tgt", g.vertex_label(g.r(e))}});
    }
    return Json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
  }

  Word parse_word(std::vector<std::string> const& names, std::string const& text) {
    Word               w;
    std::istringstream in(text);
    std::string        tok;
    while (in >> tok) {
      if (tok == "1") {
        continue;
      }
      bool inv = false;
      if (tok.size() > 3 && tok.ends_with("^-1")) {
        inv = true;
        tok.resize(tok.size() - 3);
      }
      auto it = std::find(names.begin(), names.end(), tok);
      if (it == names.end()) {
        throw InvalidInput("word \"" + text + "\": unknown generator \"" + tok + "\"");
      }
      w.push_back({static_cast<std::size_t>(it - names.begin()), inv});
    }
    return w;
  }

  SelfSimilarAction action_from_json(Json const& j) {
    std::string const ctx   = "automaton";
    DirectedGraph     graph = graph_from_json(field(j, "graph", ctx));
    auto const&       gens  = array_field(j, "generators", ctx);
    std::vector<std::string> vlabels, elabels, names;
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
      vlabels.push_back(graph.vertex_label(v));
    }
    for (std::size_t e = 0; e < graph.edge_count(); ++e) {
      elabels.push_back(graph.edge(e).label);
    }
    for (std::size_t k = 0; k < gens.size(); ++k) {
      names.push_back(gens[k].contains("name") ? gens[k].at("name").get<std::string>()
                                               : "g" + std::to_string(k));
    }
    std::vector<SelfSimilarGenerator> out;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      std::string const    gctx = ctx + ".generators[" + std::to_string(k) + "]";
      SelfSimilarGenerator g;
      g.name = names[k];
      for (auto const& v : array_field(gens[k], "vertex_perm", gctx)) {
        g.vertex_perm.push_back(resolve(v, vlabels, gctx + ".vertex_perm"));
      }
      for (auto const& e : array_field(gens[k], "edge_perm", gctx)) {
        g.edge_perm.push_back(resolve(e, elabels, gctx + ".edge_perm"));
      }
      g.sections.assign(graph.edge_count(), Word{});
      if (gens[k].contains("sections")) {
        auto const& secs = gens[k].at("sections");
        if (!secs.is_object()) {
          throw InvalidInput(gctx + ".sections must map edges to words");
        }
        for (auto const& [key, word] : secs.items()) {
          std::size_t e = resolve(Json(key), elabels, gctx + ".sections");
          if (!word.is_string()) {
            throw InvalidInput(gctx + ".sections: words are strings");
          }
          g.sections[e] = parse_word(names, word.get<std::string>());
        }
      }
      out.push_back(std::move(g));
    }
    return SelfSimilarAction(std::move(graph), std::move(out));
  }

  Json action_to_json(SelfSimilarAction const& a) {
    Json gens = Json::array();
    for (auto const& g : a.generators()) {
      Json secs = Json::object();
      for (std::size_t e = 0; e < g.sections.size(); ++e) {
        if (!g.sections[e].empty()) {
          secs[a.graph().edge(e).label] = a.format_word(g.sections[e]);
        }
      }
      Json vp = Json::array(), ep = Json::array();
      for (auto v : g.vertex_perm) {
        vp.push_back(a.graph().vertex_label(v));
      }
      for (auto e : g.edge_perm) {
        ep.push_back(a.graph().edge(e).label);
      }
      gens.push_back(Json{{"name", g.name}, {"vertex_perm", std::move(vp)},
                          {"edge_perm", std::move(ep)}, {"sections", std::move(secs)}});
    }
    return Json{{"graph", graph_to_json(a.graph())}, {"generators", std::move(gens)}};
  }

  Json decision_to_json(RegularityDecision const& d) {
    Json ev = Json::array();
    for (auto const& c : d.evidence) {
      ev.push_back(Json{{"condition", c.name}, {"status", status_name(c.status)},
                        {"witness", c.witness}});
    }
    return Json{{"verdict", d.verdict_name()}, {"graded", d.graded}, {"reason", d.reason},
                {"evidence", std::move(ev)}};
  }

  Json element_to_json(StructureConstAlgebra const& a, AlgElement const& x) {
    return a.format(x);
  }

  Json oracle_to_json(OracleVerdict const& v, StructureConstAlgebra const& a) {
    Json j{{"verdict", verdict_string(v.verdict)}, {"method", v.method_name()}};
    if (v.witness) {
      j["witness"] = element_to_json(a, *v.witness);
    }
    j["checked"] = v.checked;
    if (!v.detail.empty()) {
      j["detail"] = v.detail;
    }
    return j;
  }

}  // namespace regulus::io
