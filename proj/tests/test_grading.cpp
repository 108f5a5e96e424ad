#include <catch_amalgamated.hpp>

#include <set>

#include "regulus/errors.hpp"
#include "regulus/grading.hpp"
#include "regulus/graph.hpp"
#include "regulus/zoo.hpp"

using namespace regulus;

namespace {
  std::vector<std::int64_t> offset_degrees(FiniteGroupoid const& g) {
    std::vector<std::int64_t> d;
    for (std::size_t a = 0; a < g.arrow_count(); ++a) {
      d.push_back(static_cast<std::int64_t>(g.tgt(a)) - static_cast<std::int64_t>(g.src(a)));
    }
    return d;
  }
}  // namespace

TEST_CASE("grading groups") {
  CHECK(GradingGroup::parse("Z").is_integers());
  CHECK(GradingGroup::parse("Z/4").order() == 4);
  CHECK(GradingGroup::cyclic(4).normalize(-1) == 3);
  CHECK(GradingGroup::integers().add(2, -5) == -3);
  CHECK_THROWS_AS(GradingGroup::parse("Q"), InvalidInput);
  CHECK_THROWS_AS(GradingGroup::cyclic(0), InvalidInput);
}

TEST_CASE("cocycle validation") {
  auto z2 = FiniteGroupoid::group(FiniteGroup::cyclic(2));
  CHECK_NOTHROW(Cocycle(z2, GradingGroup::cyclic(2), {0, 1}));
  CHECK_NOTHROW(Cocycle(z2, GradingGroup::cyclic(2), {1}));
  // g^2 = 1 forces 2 c(g) = 0, impossible in Z unless c(g) = 0
  CHECK_THROWS_AS(Cocycle(z2, GradingGroup::integers(), {0, 1}), InvalidInput);
  CHECK_THROWS_AS(Cocycle(z2, GradingGroup::cyclic(2), {1, 1}), InvalidInput);
  CHECK_THROWS_AS(Cocycle(z2, GradingGroup::cyclic(2), {0, 1, 0}), InvalidInput);
}

TEST_CASE("identity component: worked examples") {
  auto z4 = FiniteGroupoid::group(FiniteGroup::cyclic(4));
  CHECK(identity_component(z4, Cocycle::trivial(z4, GradingGroup::integers())).arrows.size() == 4);
  auto e4 = identity_component(z4, Cocycle(z4, GradingGroup::cyclic(4), {0, 1, 2, 3}));
  CHECK(e4.groupoid.arrow_count() == 1);
  auto p2 = FiniteGroupoid::pair(2);
  auto ep = identity_component(p2, Cocycle(p2, GradingGroup::integers(), offset_degrees(p2)));
  CHECK(ep.groupoid.arrow_count() == 2);
  CHECK(ep.groupoid.unit_count() == 2);
}

TEST_CASE("homogeneous components: worked examples") {
  auto q  = CoeffRing::rationals();
  auto p2 = FiniteGroupoid::pair(2);
  GradedGroupoidAlgebra a(p2, Cocycle(p2, GradingGroup::integers(), offset_degrees(p2)), q);
  auto units = a.algebra.add(a.algebra.basis(0), a.algebra.basis(1));
  auto hc    = homogeneous_components(a, units);
  REQUIRE(hc.size() == 1);
  CHECK(hc[0].first == 0);
  std::size_t up = 0, down = 0;
  for (std::size_t x = 2; x < 4; ++x) {
    (a.cocycle.degree(x) == 1 ? up : down) = x;
  }
  auto two = homogeneous_components(a, a.algebra.add(a.algebra.basis(up), a.algebra.basis(down)));
  REQUIRE(two.size() == 2);
  CHECK(two[0].first == -1);
  CHECK(two[1].first == 1);
  CHECK_THROWS_AS(homogeneous_degree(a, a.algebra.add(a.algebra.basis(up), a.algebra.basis(down))),
                  NotHomogeneous);

  auto bg = boundary_groupoid(zoo::graph("edge"));
  GradedGroupoidAlgebra ba(bg.groupoid, bg.cocycle, q);
  CHECK(ba.degrees() == std::vector<std::int64_t>{-1, 0, 1});
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    auto x   = random_element(ba.algebra, rng);
    auto hcs = homogeneous_components(ba, x);
    auto sum = ba.algebra.zero();
    for (auto const& [h, part] : hcs) {
      CHECK(std::set<std::int64_t>{-1, 0, 1}.contains(h));
      CHECK(homogeneous_degree(ba, part) == h);
      sum = ba.algebra.add(sum, part);
    }
    CHECK(sum == x);
  }
}

TEST_CASE("epsilon witnesses: worked examples") {
  auto q  = CoeffRing::rationals();
  auto p3 = FiniteGroupoid::pair(3);
  GradedGroupoidAlgebra a(p3, Cocycle(p3, GradingGroup::integers(), offset_degrees(p3)), q);
  for (std::size_t g = 0; g < p3.arrow_count(); ++g) {
    auto w = epsilon_witness(a, a.algebra.basis(g));
    CHECK(w.eps == a.algebra.basis(p3.tgt(g)));
    CHECK(w.eps_prime == a.algebra.basis(p3.src(g)));
    CHECK(w.identities_hold);
    CHECK(w.certified);
  }
  auto w0 = epsilon_witness(a, a.algebra.zero());
  CHECK(w0.eps.is_zero());
  CHECK(w0.identities_hold);

  // two degree-0 arrows into one unit: pair(2) with trivial grading
  auto p2 = FiniteGroupoid::pair(2);
  GradedGroupoidAlgebra b(p2, Cocycle::trivial(p2, GradingGroup::integers()), q);
  std::size_t x0 = 0, into0 = SIZE_MAX;
  for (std::size_t g = 2; g < 4; ++g) {
    if (p2.tgt(g) == x0) {
      into0 = g;
    }
  }
  auto f = b.algebra.add(b.algebra.basis(x0), b.algebra.basis(into0));
  auto w = epsilon_witness(b, f);
  CHECK(w.eps == b.algebra.basis(x0));
  CHECK(w.identities_hold);
}

TEST_CASE("decide_graded_regular: worked examples") {
  auto f2 = CoeffRing::prime_field(2);
  auto z2 = FiniteGroupoid::group(FiniteGroup::cyclic(2));
  Cocycle inj(z2, GradingGroup::cyclic(2), {0, 1});
  auto    d = decide_graded_regular(z2, inj, f2);
  CHECK(d.verdict == Verdict::regular);
  CHECK(d.graded);
  CHECK(d.verdict_name() == "GradedRegular");
  CHECK(decide_regular_groupoid_algebra(z2, f2).verdict == Verdict::not_regular);

  for (auto const& t : zoo::transitive_groupoids()) {
    for (auto const& r : zoo::field_rings()) {
      CHECK(decide_graded_regular(t.groupoid, Cocycle::trivial(t.groupoid, GradingGroup::integers()),
                                  r)
                .verdict
            == decide_regular_groupoid_algebra(t.groupoid, r).verdict);
    }
  }
  auto bg = boundary_groupoid(zoo::graph("edge"));
  CHECK(decide_graded_regular(bg.groupoid, bg.cocycle, f2).verdict == Verdict::regular);
}

TEST_CASE("graded oracle: worked examples") {
  auto f2 = CoeffRing::prime_field(2);
  auto p2 = FiniteGroupoid::pair(2);
  GradedGroupoidAlgebra m(p2, Cocycle(p2, GradingGroup::integers(), offset_degrees(p2)), f2);
  auto vm = graded_regular_oracle(m);
  CHECK(vm.verdict == Verdict::regular);
  CHECK(vm.method == OracleVerdict::Method::exhaustive);
  CHECK(algebra_is_regular_oracle(m.algebra).verdict == Verdict::regular);

  auto z2 = FiniteGroupoid::group(FiniteGroup::cyclic(2));
  GradedGroupoidAlgebra g(z2, Cocycle(z2, GradingGroup::cyclic(2), {0, 1}), f2);
  auto vg = graded_regular_oracle(g);
  CHECK(vg.verdict == Verdict::regular);
  CHECK(vg.method == OracleVerdict::Method::exhaustive);
  CHECK(vg.checked == 4);
  // ungraded the same algebra fails
  CHECK(algebra_is_regular_oracle(g.algebra).verdict == Verdict::not_regular);

  auto b = element_is_regular(g.algebra, g.algebra.zero());
  REQUIRE(b);
  CHECK(g.algebra.mul(g.algebra.mul(g.algebra.zero(), *b), g.algebra.zero()).is_zero());
}

TEST_CASE("components multiply by degree") {
  std::mt19937_64 rng(11);
  for (auto const& z : zoo::graded_groupoids()) {
    GradedGroupoidAlgebra a(z.groupoid, z.cocycle, CoeffRing::rationals());
    auto                  degs = a.degrees();
    for (auto h : degs) {
      for (auto k : degs) {
        auto f = random_homogeneous(a, h, rng), g = random_homogeneous(a, k, rng);
        auto p = a.algebra.mul(f, g);
        if (!p.is_zero()) {
          CHECK(homogeneous_degree(a, p) == a.cocycle.group().add(h, k));
        }
      }
    }
  }
}

TEST_CASE("epsilon identities hold on random homogeneous elements") {
  std::mt19937_64 rng(5);
  for (auto const& z : zoo::graded_groupoids()) {
    for (auto const& r : {CoeffRing::parse("F3"), CoeffRing::parse("Q")}) {
      GradedGroupoidAlgebra a(z.groupoid, z.cocycle, r);
      auto                  degs = a.degrees();
      for (int t = 0; t < 25; ++t) {
        auto f = random_homogeneous(a, degs[rng() % degs.size()], rng);
        auto w = epsilon_witness(a, f);
        CHECK(a.algebra.mul(w.eps, f) == f);
        CHECK(a.algebra.mul(f, w.eps_prime) == f);
        CHECK(w.certified);
      }
    }
  }
}

TEST_CASE("graded decision agrees with exhaustive graded oracle") {
  for (auto const& z : zoo::graded_groupoids()) {
    for (auto const& r : {CoeffRing::parse("F2"), CoeffRing::parse("F3"), CoeffRing::parse("Z6")}) {
      GradedGroupoidAlgebra a(z.groupoid, z.cocycle, r);
      auto                  v = graded_regular_oracle(a);
      auto                  d = decide_graded_regular(z.groupoid, z.cocycle, r);
      INFO(z.name << " over " << r.name() << " via " << v.method_name());
      if (v.verdict != Verdict::unknown) {
        CHECK(v.verdict == d.verdict);
      }
    }
  }
}
