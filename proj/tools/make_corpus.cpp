// Regenerates the bundled corpus under data/ from the zoo, with a manifest
// whose expectations follow from the known subgroup orders and graph shapes
// rather than from running the deciders.
//
//   make_corpus <data-dir>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>

#include "regulus/io.hpp"
#include "regulus/zoo.hpp"

using namespace regulus;
using io::Json;
namespace fs = std::filesystem;

namespace {
  void write(fs::path const& p, Json const& j) {
    fs::create_directories(p.parent_path());
    std::ofstream(p) << j.dump(2) << "\n";
  }

  // Orders of the maximal subgroups, by hand.
  std::map<std::string, std::set<std::uint64_t>> const subgroup_primes{
      {"semilattice-1", {}}, {"chain-2", {}},      {"chain-3", {}},   {"diamond", {}},
      {"cyclic-2", {2}},     {"cyclic-3", {3}},    {"cyclic-4", {2}}, {"cyclic-5", {5}},
      {"cyclic-6", {2, 3}},  {"sym-3", {2, 3}},    {"I1", {}},        {"I2", {2}},
      {"B2", {}},            {"clifford-5", {2, 3}},
  };

  std::uint64_t characteristic(std::string const& ring) {
    return ring == "Q" ? 0 : std::stoull(ring.substr(1));
  }

  std::string regular_if(bool r, bool graded = false) {
    return r ? (graded ? "GradedRegular" : "Regular") : (graded ? "NotGradedRegular" : "NotRegular");
  }
}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_corpus <data-dir>\n";
    return 3;
  }
  fs::path const dir = argv[1];
  Json           rows = Json::array();
  auto row = [&](std::string cmd, std::string input, std::string ring, std::string expect) {
    rows.push_back(Json{{"command", cmd}, {"input", input}, {"ring", ring}, {"expect", expect}});
  };
  std::vector<std::string> const rings{"F2", "F3", "F5", "Q"};

  for (auto const& s : zoo::semigroups()) {
    std::string const rel = "semigroups/" + s.name + ".json";
    write(dir / rel, io::semigroup_to_json(s.degree, s.generators, 1u << 16));
    for (auto const& r : rings) {
      bool reg = !subgroup_primes.at(s.name).contains(characteristic(r));
      row("invsgp decide", rel, r, regular_if(reg));
    }
    row("invsgp analyze", rel, "Q", "Analyzed");
  }

  for (auto const& g : zoo::transitive_groupoids()) {
    std::string const rel = "groupoids/" + g.name + ".json";
    write(dir / rel, io::groupoid_to_json(g.groupoid));
    std::uint64_t iso = g.name.ends_with("Z2") ? 2 : g.name.ends_with("Z3") ? 3 : 1;
    for (auto const& r : {"F2", "F3", "Q"}) {
      std::uint64_t p = characteristic(r);
      row("groupoid decide", rel, r, regular_if(p == 0 || iso % p != 0));
    }
    row("groupoid analyze", rel, "F2", "Analyzed");
  }

  // identity-component isotropy orders, by hand
  std::map<std::string, std::uint64_t> const e_isotropy{
      {"z2-injective", 1}, {"z4-identity", 1},      {"z4-mod2", 2},
      {"z3-trivial", 3},   {"pair-2-offset", 1},    {"pair-3-offset", 1},
      {"boundary-edge", 1}, {"boundary-fork", 1},   {"boundary-merge", 1},
      {"boundary-diamond", 1},
  };
  for (auto const& g : zoo::graded_groupoids()) {
    std::string const rel = "graded/" + g.name + ".json";
    write(dir / rel, Json{{"groupoid", io::groupoid_to_json(g.groupoid)},
                          {"cocycle", io::cocycle_to_json(g.cocycle)}});
    for (auto const& r : {"F2", "F3", "Q"}) {
      std::uint64_t p = characteristic(r);
      row("graded decide", rel, r, regular_if(p == 0 || e_isotropy.at(g.name) % p != 0, true));
    }
  }

  for (auto const& g : zoo::graphs()) {
    std::string const rel     = "graphs/" + g.name + ".json";
    bool const        acyclic = !g.name.starts_with("loop") && !g.name.starts_with("rose")
                         && !g.name.starts_with("cycle");
    write(dir / rel, io::graph_to_json(g.graph));
    for (auto const& r : {"F2", "Q"}) {
      row("graph decide", rel, r, regular_if(acyclic));
      row("graph graded", rel, r, "GradedRegular");
    }
    row("graph growth", rel, "Q", acyclic ? "Finite" : "Exceeded");
  }

  for (auto const& a : zoo::actions()) {
    std::string const rel = "actions/" + a.name + ".json";
    write(dir / rel, io::action_to_json(a.action));
    row("selfsim validate", rel, "Q", a.valid ? "Valid" : "Invalid");
    if (a.valid) {
      row("selfsim closure", rel, "Q", a.finite_group ? "Finite" : "Exceeded");
      row("selfsim decide", rel, "F2", a.finite_group ? "GradedRegular" : "Unknown");
    } else {
      row("selfsim decide", rel, "F2", "InputError");
    }
  }

  std::ofstream(dir / "malformed.json") << "{\"degree\": 2, \"generators\": [[1, 0]\n";
  row("invsgp decide", "malformed.json", "F2", "InputError");

  write(dir / "manifest.json", Json{{"rows", std::move(rows)}});
  write(dir / "empty-manifest.json", Json{{"rows", Json::array()}});
  write(dir / "wrong-manifest.json",
        Json{{"rows", Json::array({Json{{"command", "graph decide"},
                                        {"input", "graphs/loop.json"},
                                        {"ring", "Q"},
                                        {"expect", "NotRegular"}},
                                   Json{{"command", "graph decide"},
                                        {"input", "graphs/edge.json"},
                                        {"ring", "Q"},
                                        {"expect", "NotRegular"}}})}});
  return 0;
}
