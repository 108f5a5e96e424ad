#include "regulus/cli.hpp"

#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "regulus/errors.hpp"

namespace regulus::cli {

  using io::Json;

  namespace {
    constexpr std::size_t verify_dimension_limit = 64;
    constexpr std::size_t default_growth_cap     = 256;
    constexpr std::size_t default_closure_budget = 1000;

    bool definitive(Verdict v) {
      return v != Verdict::unknown;
    }

    Json base_report(Options const& o) {
      Json r;
      r["schema"]  = "regulus/1";
      r["tool"]    = Json{{"name", "regulus"}, {"version", version}};
      r["command"] = o.command;
      return r;
    }

    CoeffRing ring_of(Options const& o) {
      return CoeffRing::parse(o.ring);
    }

    OracleOptions oracle_options(Options const& o) {
      OracleOptions oo;
      oo.seed = o.seed;
      if (o.budget) {
        oo.budget = *o.budget;
      }
      return oo;
    }

    void common_fields(Json& r, Options const& o, bool with_budget = true) {
      r["ring"] = ring_of(o).name();
      r["seed"] = o.seed;
      if (with_budget) {
        r["budget"] = oracle_options(o).budget;
      }
    }

    bool want_verify(Options const& o, std::size_t dimension) {
      return o.verify.value_or(dimension <= verify_dimension_limit);
    }

    // Decision plus optional oracle, with the consistency rule applied.
    Outcome decided(Json r, RegularityDecision const& d, OracleVerdict const* oracle,
                    StructureConstAlgebra const* alg) {
      r["theorem"] = io::decision_to_json(d);
      r["verified"] = oracle != nullptr;
      Outcome out;
      out.code = d.verdict == Verdict::unknown ? undecided : ok;
      if (oracle) {
        r["oracle"]     = io::oracle_to_json(*oracle, *alg);
        bool consistent = !(definitive(d.verdict) && definitive(oracle->verdict)
                            && d.verdict != oracle->verdict);
        r["consistent"] = consistent;
        if (!consistent) {
          out.code = disagreement;
        }
      }
      r["outcome"] = out.code == disagreement ? "Disagreement" : d.verdict_name();
      out.report   = std::move(r);
      return out;
    }

    Outcome oracle_only(Json r, OracleVerdict const& v, StructureConstAlgebra const& alg) {
      r["oracle"] = io::oracle_to_json(v, alg);
      Outcome out;
      out.code     = v.verdict == Verdict::unknown ? undecided : ok;
      r["outcome"] = r["oracle"]["verdict"];
      out.report   = std::move(r);
      return out;
    }

    Json semigroup_subject(FiniteInverseSemigroup const& s, std::size_t degree) {
      return Json{{"kind", "inverse-semigroup"},
                  {"degree", degree},
                  {"order", s.size()},
                  {"idempotents", s.idempotents().size()}};
    }

    FiniteInverseSemigroup load_semigroup(std::string const& path, Options const& o,
                                          io::SemigroupInput& in) {
      in = io::semigroup_from_json(io::read_file(path));
      if (o.cap) {
        in.cap = *o.cap;
      }
      return FiniteInverseSemigroup::generate(in.generators, in.cap);
    }

    Json groupoid_subject(FiniteGroupoid const& g) {
      Json isotropy = Json::array();
      for (auto const& orb : orbits(g)) {
        isotropy.push_back(isotropy_group(g, orb.front()).group.size());
      }
      return Json{{"kind", "groupoid"},
                  {"units", g.unit_count()},
                  {"arrows", g.arrow_count()},
                  {"orbits", orbits(g).size()},
                  {"isotropy_orders", std::move(isotropy)},
                  {"principal", is_principal(g)}};
    }

    Json graph_subject(DirectedGraph const& g) {
      auto vc = classify_vertices(g);
      return Json{{"kind", "graph"},
                  {"vertices", g.vertex_count()},
                  {"edges", g.edge_count()},
                  {"sinks", vc.sinks.size()},
                  {"acyclic", is_acyclic(g)}};
    }

    Json growth_json(DirectedGraph const& g, GrowthResult const& gr, std::size_t cap) {
      Json j{{"cap", cap}, {"result", gr.finite ? "Finite" : "Exceeded"}, {"size", gr.size}};
      if (!gr.finite && !gr.cycle.empty()) {
        j["cycle"] = format_path(g, Path{g.s(gr.cycle.front()), gr.cycle});
        j["distinct_powers"] = gr.distinct_powers;
      }
      return j;
    }

    ////////////////////////////////////////////////////////////////////////
    // Commands
    ////////////////////////////////////////////////////////////////////////

    Outcome invsgp_decide(Options const& o) {
      Json              r = base_report(o);
      common_fields(r, o);
      CoeffRing const   ring = ring_of(o);
      io::SemigroupInput in;
      std::optional<FiniteInverseSemigroup> s;
      try {
        s.emplace(load_semigroup(o.input, o, in));
      } catch (CapExceeded const&) {
        r["subject"] = Json{{"kind", "inverse-semigroup"}, {"degree", in.degree},
                            {"order", "exceeds cap " + std::to_string(in.cap)}};
        return decided(std::move(r), decide_regular_semigroup_algebra(in.generators, in.cap, ring),
                       nullptr, nullptr);
      }
      r["subject"] = semigroup_subject(*s, in.degree);
      auto d       = decide_regular_semigroup_algebra(*s, ring);
      if (!want_verify(o, s->size())) {
        return decided(std::move(r), d, nullptr, nullptr);
      }
      auto alg = semigroup_algebra(*s, ring);
      auto v   = algebra_is_regular_oracle(alg, oracle_options(o));
      return decided(std::move(r), d, &v, &alg);
    }

    Outcome invsgp_analyze(Options const& o) {
      Json               r = base_report(o);
      io::SemigroupInput in;
      auto               s = load_semigroup(o.input, o, in);
      r["subject"]         = semigroup_subject(s, in.degree);
      auto gc              = green_classes(s);
      Json dclasses        = Json::array();
      for (auto const& d : gc.d_classes) {
        std::size_t e = 0;
        for (auto x : d) {
          if (s.is_idempotent(x)) {
            e = x;
            break;
          }
        }
        auto g = maximal_subgroup(s, e);
        dclasses.push_back(Json{{"size", d.size()},
                                {"idempotent", s.element(e).to_string()},
                                {"subgroup_order", g.group.size()}});
      }
      auto primes = subgroup_prime_support(s);
      r["analysis"] = Json{{"l_classes", gc.l_classes.size()},
                           {"r_classes", gc.r_classes.size()},
                           {"d_classes", std::move(dclasses)},
                           {"subgroup_primes", primes},
                           {"monoid", s.identity().has_value()},
                           {"inverse_axioms", s.satisfies_inverse_axioms()}};
      r["outcome"] = "Analyzed";
      return {std::move(r), ok};
    }

    Outcome algebra_oracle(Options const& o) {
      Json r = base_report(o);
      common_fields(r, o);
      CoeffRing const ring = ring_of(o);
      if (!o.from_groupoid.empty()) {
        auto g       = io::groupoid_from_json(io::read_file(o.from_groupoid));
        r["subject"] = groupoid_subject(g);
        auto alg     = groupoid_algebra(g, ring);
        return oracle_only(std::move(r), algebra_is_regular_oracle(alg, oracle_options(o)), alg);
      }
      std::string const path = o.from_semigroup.empty() ? o.input : o.from_semigroup;
      if (path.empty()) {
        throw InvalidInput("algebra oracle needs --from-semigroup or --from-groupoid");
      }
      io::SemigroupInput in;
      auto               s = load_semigroup(path, o, in);
      r["subject"]         = semigroup_subject(s, in.degree);
      auto alg             = semigroup_algebra(s, ring);
      return oracle_only(std::move(r), algebra_is_regular_oracle(alg, oracle_options(o)), alg);
    }

    Outcome groupoid_decide(Options const& o) {
      Json r = base_report(o);
      common_fields(r, o);
      CoeffRing const ring = ring_of(o);
      auto            g    = io::groupoid_from_json(io::read_file(o.input));
      r["subject"]         = groupoid_subject(g);
      auto d               = decide_regular_groupoid_algebra(g, ring);
      if (!want_verify(o, g.arrow_count())) {
        return decided(std::move(r), d, nullptr, nullptr);
      }
      auto alg = groupoid_algebra(g, ring);
      auto v   = algebra_is_regular_oracle(alg, oracle_options(o));
      return decided(std::move(r), d, &v, &alg);
    }

    Outcome groupoid_analyze(Options const& o) {
      Json r     = base_report(o);
      r["ring"]  = ring_of(o).name();
      auto g     = io::groupoid_from_json(io::read_file(o.input));
      r["subject"] = groupoid_subject(g);
      auto dec     = matrix_units_decomposition(g);
      Json comps   = Json::array();
      for (auto const& c : dec.components) {
        Json units = Json::array();
        for (auto x : c.units) {
          units.push_back(g.label(x));
        }
        comps.push_back(Json{{"units", std::move(units)},
                             {"size", c.units.size()},
                             {"isotropy_order", c.isotropy.group.size()}});
      }
      auto iso = matrix_units_isomorphism(g, dec, ring_of(o));
      r["analysis"] = Json{{"components", std::move(comps)},
                           {"matrix_unit_relations", dec.relations_hold},
                           {"matrix_isomorphism",
                            iso_check(groupoid_algebra(g, ring_of(o)), iso.target, iso.map)}};
      r["outcome"] = "Analyzed";
      return {std::move(r), ok};
    }

    std::pair<FiniteGroupoid, Cocycle> load_graded(std::string const& path) {
      Json j = io::read_file(path);
      if (!j.is_object() || !j.contains("groupoid") || !j.contains("cocycle")) {
        throw InvalidInput(path + ": graded input needs \"groupoid\" and \"cocycle\"");
      }
      auto g = io::groupoid_from_json(j.at("groupoid"));
      auto c = io::cocycle_from_json(j.at("cocycle"), g);
      return {std::move(g), std::move(c)};
    }

    Json graded_subject(FiniteGroupoid const& g, Cocycle const& c) {
      Json s         = groupoid_subject(g);
      s["grading"]   = c.group().name();
      s["identity_component_arrows"] = identity_component(g, c).arrows.size();
      return s;
    }

    Outcome graded_decide(Options const& o) {
      Json r = base_report(o);
      common_fields(r, o);
      CoeffRing const ring = ring_of(o);
      auto [g, c]          = load_graded(o.input);
      r["subject"]         = graded_subject(g, c);
      auto d               = decide_graded_regular(g, c, ring);
      if (!want_verify(o, g.arrow_count())) {
        return decided(std::move(r), d, nullptr, nullptr);
      }
      GradedGroupoidAlgebra ga(g, c, ring);
      auto                  v = graded_regular_oracle(ga, oracle_options(o));
      return decided(std::move(r), d, &v, &ga.algebra);
    }

    Outcome graded_oracle(Options const& o) {
      Json r = base_report(o);
      common_fields(r, o);
      auto [g, c]  = load_graded(o.input);
      r["subject"] = graded_subject(g, c);
      GradedGroupoidAlgebra ga(g, c, ring_of(o));
      return oracle_only(std::move(r), graded_regular_oracle(ga, oracle_options(o)), ga.algebra);
    }

    Outcome graph_decide(Options const& o, bool graded) {
      Json r = base_report(o);
      common_fields(r, o);
      CoeffRing const ring = ring_of(o);
      auto            g    = io::graph_from_json(io::read_file(o.input));
      r["subject"]         = graph_subject(g);
      auto d = graded ? decide_leavitt_graded_regular(g, ring) : decide_leavitt_regular(g, ring);
      if (!is_acyclic(g)) {
        std::size_t cap = o.cap.value_or(default_growth_cap);
        r["growth"]     = growth_json(g, bisection_semigroup_growth(g, cap), cap);
        return decided(std::move(r), d, nullptr, nullptr);
      }
      auto bg = boundary_groupoid(g);
      if (!want_verify(o, bg.groupoid.arrow_count())) {
        return decided(std::move(r), d, nullptr, nullptr);
      }
      if (graded) {
        GradedGroupoidAlgebra ga(bg.groupoid, bg.cocycle, ring);
        auto                  v = graded_regular_oracle(ga, oracle_options(o));
        return decided(std::move(r), d, &v, &ga.algebra);
      }
      auto alg = groupoid_algebra(bg.groupoid, ring);
      auto v   = algebra_is_regular_oracle(alg, oracle_options(o));
      return decided(std::move(r), d, &v, &alg);
    }

    Outcome graph_growth(Options const& o) {
      Json r         = base_report(o);
      auto g         = io::graph_from_json(io::read_file(o.input));
      r["subject"]   = graph_subject(g);
      std::size_t cap = o.cap.value_or(default_growth_cap);
      auto gr        = bisection_semigroup_growth(g, cap);
      r["growth"]    = growth_json(g, gr, cap);
      r["outcome"]   = gr.finite ? "Finite" : "Exceeded";
      return {std::move(r), ok};
    }

    Json action_subject(SelfSimilarAction const& a) {
      Json gens = Json::array();
      for (auto const& g : a.generators()) {
        gens.push_back(g.name);
      }
      return Json{{"kind", "self-similar-action"}, {"graph", graph_subject(a.graph())},
                  {"generators", std::move(gens)}};
    }

    Outcome selfsim_validate(Options const& o) {
      Json r       = base_report(o);
      auto a       = io::action_from_json(io::read_file(o.input));
      r["subject"] = action_subject(a);
      auto v       = validate_action(a, o.seed);
      Json vj      = Json::array();
      for (auto const& x : v) {
        vj.push_back(Json{{"axiom", x.axiom}, {"detail", x.detail}});
      }
      r["seed"]       = o.seed;
      r["valid"]      = v.empty();
      r["violations"] = std::move(vj);
      r["outcome"]    = v.empty() ? "Valid" : "Invalid";
      return {std::move(r), ok};
    }

    void require_valid(SelfSimilarAction const& a) {
      auto v = validate_action(a);
      if (!v.empty()) {
        throw InvalidAction("invalid self-similar action: " + v.front().axiom + " at "
                            + v.front().detail);
      }
    }

    Outcome selfsim_closure(Options const& o) {
      Json r       = base_report(o);
      auto a       = io::action_from_json(io::read_file(o.input));
      r["subject"] = action_subject(a);
      require_valid(a);
      std::size_t const budget = o.budget.value_or(default_closure_budget);
      r["budget"]              = budget;
      SectionCalculus calc(a);
      Json            gens = Json::array();
      for (std::size_t i = 0; i < a.generators().size(); ++i) {
        auto ord = element_order(a.graph(), calc.generator(i), 10);
        gens.push_back(Json{{"name", a.generators()[i].name},
                            {"states", calc.generator(i).state_count()},
                            {"order", ord.finite ? "Finite(" + std::to_string(ord.value) + ")"
                                                 : "GreaterThan(" + std::to_string(ord.value)
                                                       + ")"},
                            {"level_orders", ord.level_orders}});
      }
      r["generators"] = std::move(gens);
      auto cl         = group_closure(calc, budget);
      r["closure"]    = cl.finite ? Json{{"result", "Finite"}, {"order", cl.elements.size()}}
                                  : Json{{"result", "Exceeded"}, {"explored", cl.elements.size()}};
      r["outcome"]    = cl.finite ? "Finite" : "Exceeded";
      return {std::move(r), cl.finite ? ok : undecided};
    }

    Outcome selfsim_decide(Options const& o) {
      Json r = base_report(o);
      r["ring"]    = ring_of(o).name();
      auto a       = io::action_from_json(io::read_file(o.input));
      r["subject"] = action_subject(a);
      EPDecisionOptions eo;
      eo.budget   = o.budget.value_or(default_closure_budget);
      r["budget"] = eo.budget;
      auto d      = decide_ep_graded_regular(a, ring_of(o), eo);
      Outcome out = decided(std::move(r), d, nullptr, nullptr);
      if (d.verdict == Verdict::regular && o.verify.value_or(true)) {
        // finite G: the truncations S_n are finite inverse semigroups
        SectionCalculus calc(a);
        auto            cl    = group_closure(calc, eo.budget);
        Json            trunc = Json::array();
        for (std::size_t n = 0; n <= 2; ++n) {
          auto t = truncated_zero_component(calc, cl, n);
          trunc.push_back(Json{{"n", n},
                               {"order", t.semigroup.size()},
                               {"inverse_axioms", t.semigroup.satisfies_inverse_axioms()}});
          if (t.semigroup.size() > 256) {
            break;
          }
        }
        out.report["truncations"] = std::move(trunc);
      }
      return out;
    }

    Outcome run_suite(Options const& o);

    Outcome run_command(Options const& o) {
      static std::map<std::string, Outcome (*)(Options const&)> const table{
          {"invsgp decide", invsgp_decide},
          {"invsgp analyze", invsgp_analyze},
          {"algebra oracle", algebra_oracle},
          {"groupoid decide", groupoid_decide},
          {"groupoid analyze", groupoid_analyze},
          {"graded decide", graded_decide},
          {"graded oracle", graded_oracle},
          {"graph decide", [](Options const& x) { return graph_decide(x, false); }},
          {"graph graded", [](Options const& x) { return graph_decide(x, true); }},
          {"graph growth", graph_growth},
          {"selfsim validate", selfsim_validate},
          {"selfsim closure", selfsim_closure},
          {"selfsim decide", selfsim_decide},
          {"suite", run_suite},
      };
      auto it = table.find(o.command);
      if (it == table.end()) {
        throw InvalidInput("unknown command \"" + o.command + "\"");
      }
      if (o.command != "suite" && o.command != "algebra oracle" && o.input.empty()) {
        throw InvalidInput(o.command + " needs --input");
      }
      return it->second(o);
    }

    Outcome run_suite(Options const& o) {
      std::string const path = o.manifest.empty() ? o.input : o.manifest;
      if (path.empty()) {
        throw InvalidInput("suite needs --manifest");
      }
      Json        m    = io::read_file(path);
      Json const& rows = m.is_array() ? m : m.value("rows", Json::array());
      if (!rows.is_array()) {
        throw InvalidInput(path + ": \"rows\" must be an array");
      }
      auto const  base = std::filesystem::path(path).parent_path();
      Json        out  = Json::array();
      std::size_t passed = 0, disagreements = 0;
      for (std::size_t k = 0; k < rows.size(); ++k) {
        Json const& row = rows[k];
        std::string const ctx = path + ": rows[" + std::to_string(k) + "]";
        if (!row.is_object() || !row.contains("command") || !row.contains("input")
            || !row.contains("expect")) {
          throw InvalidInput(ctx + " needs \"command\", \"input\" and \"expect\"");
        }
        Options ro;
        ro.command = row.at("command").get<std::string>();
        ro.ring    = row.value("ring", std::string("Q"));
        ro.input   = (base / row.at("input").get<std::string>()).string();
        ro.seed    = o.seed;
        ro.verify  = true;
        ro.budget  = row.contains("budget") ? std::optional(row.at("budget").get<std::uint64_t>())
                                            : o.budget;
        ro.cap     = row.contains("cap") ? std::optional(row.at("cap").get<std::uint64_t>()) : o.cap;
        if (ro.command == "suite") {
          throw InvalidInput(ctx + ": nested suites are not supported");
        }
        Outcome     res  = execute(ro);
        std::string got  = res.report.value("outcome", std::string("?"));
        std::string want = row.at("expect").get<std::string>();
        bool        pass = got == want && res.code != disagreement;
        passed += pass;
        disagreements += res.code == disagreement;
        out.push_back(Json{{"command", ro.command},
                           {"input", row.at("input")},
                           {"ring", ro.ring},
                           {"expect", want},
                           {"outcome", got},
                           {"exit", res.code},
                           {"pass", pass}});
      }
      Json r       = base_report(o);
      r["seed"]    = o.seed;
      r["rows"]    = std::move(out);
      r["summary"] = Json{{"total", rows.size()},
                          {"passed", passed},
                          {"failed", rows.size() - passed},
                          {"disagreements", disagreements}};
      r["outcome"] = passed == rows.size() ? "Pass" : "Fail";
      int code     = disagreements > 0 ? disagreement : passed == rows.size() ? ok : expectation_fail;
      return {std::move(r), code};
    }
  }  // namespace

  Outcome execute(Options const& opts) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    out;
    try {
      out = run_command(opts);
    } catch (Error const& e) {
      out.report            = base_report(opts);
      out.report["outcome"] = "InputError";
      out.report["error"]   = e.what();
      out.code              = input_error;
    } catch (Json::exception const& e) {
      out.report            = base_report(opts);
      out.report["outcome"] = "InputError";
      out.report["error"]   = e.what();
      out.code              = input_error;
    }
    if (opts.timing) {
      out.report["timing_ms"] = std::chrono::duration<double, std::milli>(
                                    std::chrono::steady_clock::now() - start)
                                    .count();
    }
    return out;
  }

  int dispatch(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Regularity of inverse semigroup, groupoid, Leavitt path and self-similar "
                 "algebras",
                 "regulus"};
    app.require_subcommand(1);
    Options o;
    std::uint64_t budget = 0, cap = 0;
    auto* budget_opt = app.add_option("--budget", budget, "oracle or closure budget");
    auto* cap_opt    = app.add_option("--cap", cap, "closure cap");
    app.add_option("--ring", o.ring, "coefficient ring: Q, F<p>, Z<n>, product:[...]");
    app.add_option("--input", o.input, "input JSON file");
    app.add_option("--seed", o.seed, "random seed");
    app.add_flag_callback("--verify", [&] { o.verify = true; }, "run the brute-force oracle");
    app.add_flag_callback("--no-verify", [&] { o.verify = false; }, "skip the oracle");
    app.add_flag("--timing", o.timing, "add wall-clock timing to the report");
    app.set_version_flag("--version", version);

    std::map<CLI::App*, std::string> names;
    auto group = [&](std::string name, std::string desc, std::vector<std::string> subs) {
      auto* g = app.add_subcommand(name, desc);
      g->fallthrough();
      if (subs.empty()) {
        names[g] = name;
        return g;
      }
      g->require_subcommand(1);
      for (auto const& s : subs) {
        auto* c = g->add_subcommand(s);
        c->fallthrough();
        names[c] = name + " " + s;
      }
      return g;
    };
    group("invsgp", "inverse semigroups of partial bijections", {"decide", "analyze"});
    auto* alg = group("algebra", "brute-force regularity oracle", {"oracle"});
    alg->get_subcommand("oracle")->add_option("--from-semigroup", o.from_semigroup,
                                              "semigroup JSON");
    alg->get_subcommand("oracle")->add_option("--from-groupoid", o.from_groupoid,
                                              "groupoid JSON");
    group("groupoid", "finite groupoid algebras", {"decide", "analyze"});
    group("graded", "cocycle-graded groupoid algebras", {"decide", "oracle"});
    group("graph", "Leavitt path algebras", {"decide", "graded", "growth"});
    group("selfsim", "self-similar actions", {"validate", "closure", "decide"});
    group("suite", "run a manifest of expectations", {})
        ->add_option("--manifest", o.manifest, "manifest JSON");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
      app.parse(rev);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return ok;
    } catch (CLI::CallForVersion const&) {
      out << version << "\n";
      return ok;
    } catch (CLI::ParseError const& e) {
      Json r{{"schema", "regulus/1"}, {"outcome", "InputError"}, {"error", e.what()}};
      out << r.dump(2) << "\n";
      err << "regulus: " << e.what() << "\n";
      return input_error;
    }
    for (auto const& [sub, name] : names) {
      if (sub->parsed() && sub->get_subcommands().empty()) {
        o.command = name;
      }
    }
    if (budget_opt->count() > 0) {
      o.budget = budget;
    }
    if (cap_opt->count() > 0) {
      o.cap = cap;
    }
    Outcome res = execute(o);
    out << res.report.dump(2) << "\n";
    if (res.code == input_error) {
      err << "regulus: " << res.report.value("error", std::string()) << "\n";
    } else if (res.code == disagreement) {
      err << "regulus: theorem and oracle disagree\n";
    }
    return res.code;
  }

  int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dispatch(args, std::cout, std::cerr);
  }

}  // namespace regulus::cli
