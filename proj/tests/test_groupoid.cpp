#include <catch_amalgamated.hpp>

#include <set>

#include "regulus/algebra.hpp"
#include "regulus/errors.hpp"
#include "regulus/groupoid.hpp"
#include "regulus/zoo.hpp"

using namespace regulus;

namespace {
  std::size_t counting_identity(FiniteGroupoid const& g) {
    std::size_t total = 0;
    for (auto const& o : orbits(g)) {
      total += o.size() * o.size() * isotropy_group(g, o.front()).group.size();
    }
    return total;
  }

  std::set<std::size_t> as_set(std::vector<std::size_t> const& v) {
    return {v.begin(), v.end()};
  }

  std::vector<FiniteGroupoid> sample_groupoids() {
    std::vector<FiniteGroupoid> out;
    for (auto const& t : zoo::transitive_groupoids()) {
      out.push_back(t.groupoid);
    }
    for (auto const& s : zoo::semigroups()) {
      out.push_back(universal_groupoid(s.semigroup).groupoid);
    }
    out.push_back(FiniteGroupoid::units_only(3));
    out.push_back(transformation_groupoid(FiniteGroup::cyclic(2), {{0, 1, 2}, {1, 0, 2}}));
    out.push_back(transformation_groupoid(FiniteGroup::symmetric(3),
                                          [] {
                                            // S_3 on its 3 points
                                            std::vector<std::vector<std::size_t>> act;
                                            std::vector<std::size_t> p{0, 1, 2};
                                            do {
                                              act.push_back(p);
                                            } while (std::next_permutation(p.begin(), p.end()));
                                            return act;
                                          }()));
    return out;
  }
}  // namespace

TEST_CASE("orbits, isotropy and principality") {
  auto u = FiniteGroupoid::units_only(3);
  CHECK(orbits(u).size() == 3);
  CHECK(is_principal(u));
  auto p = FiniteGroupoid::pair(3);
  REQUIRE(orbits(p).size() == 1);
  CHECK(orbits(p)[0].size() == 3);
  CHECK(is_principal(p));
  auto z4 = FiniteGroupoid::group(FiniteGroup::cyclic(4));
  CHECK(isotropy_group(z4, 0).group.size() == 4);
  CHECK_FALSE(is_principal(z4));
}

TEST_CASE("groupoid axioms") {
  for (auto const& g : sample_groupoids()) {
    std::size_t const m = g.arrow_count();
    for (std::size_t a = 0; a < m; ++a) {
      CHECK(g.compose(a, g.inverse(a)) == g.tgt(a));
      CHECK(g.compose(g.inverse(a), a) == g.src(a));
      for (std::size_t b = 0; b < m; ++b) {
        CHECK((g.compose(a, b) != FiniteGroupoid::npos) == (g.src(a) == g.tgt(b)));
        if (g.compose(a, b) == FiniteGroupoid::npos) {
          continue;
        }
        for (std::size_t c = 0; c < m; ++c) {
          if (g.src(b) == g.tgt(c)) {
            CHECK(g.compose(g.compose(a, b), c) == g.compose(a, g.compose(b, c)));
          }
        }
      }
    }
    for (std::size_t x = 0; x < g.unit_count(); ++x) {
      CHECK(g.compose(x, x) == x);
    }
  }
}

TEST_CASE("arrow count equals the orbit counting identity") {
  for (auto const& g : sample_groupoids()) {
    CHECK(counting_identity(g) == g.arrow_count());
  }
}

TEST_CASE("invalid groupoid tables are rejected") {
  // one unit, one extra arrow, product a*a left undefined
  CHECK_THROWS_AS(FiniteGroupoid::from_triples(1, {0, 0}, {0, 0}, {}), InvalidInput);
  // a*a = a is not invertible
  CHECK_THROWS_AS(FiniteGroupoid::from_triples(1, {0, 0}, {0, 0}, {{1, 1, 1}}), InvalidInput);
  CHECK_NOTHROW(FiniteGroupoid::from_triples(1, {0, 0}, {0, 0}, {{1, 1, 0}}));
}

TEST_CASE("decide_regular_groupoid_algebra: worked examples") {
  auto f2 = CoeffRing::prime_field(2);
  auto p2 = FiniteGroupoid::pair(2);
  CHECK(decide_regular_groupoid_algebra(p2, f2).verdict == Verdict::regular);
  auto v = algebra_is_regular_oracle(groupoid_algebra(p2, f2));
  CHECK(v.verdict == Verdict::regular);
  CHECK(v.method == OracleVerdict::Method::exhaustive);
  auto z2 = FiniteGroupoid::group(FiniteGroup::cyclic(2));
  CHECK(decide_regular_groupoid_algebra(z2, f2).verdict == Verdict::not_regular);
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(decide_regular_groupoid_algebra(FiniteGroupoid::pair(n), CoeffRing::rationals()).verdict
          == Verdict::regular);
  }
  auto d = decide_regular_groupoid_algebra(p2, f2);
  REQUIRE(d.evidence.size() == 3);
  CHECK(d.evidence[1].status == Condition::Status::pass);
}

TEST_CASE("theorem agrees with oracle on curated groupoids") {
  for (auto const& t : zoo::transitive_groupoids()) {
    for (auto const& r : zoo::curated_rings()) {
      auto alg = groupoid_algebra(t.groupoid, r);
      auto v   = algebra_is_regular_oracle(alg);
      auto d   = decide_regular_groupoid_algebra(t.groupoid, r);
      INFO(t.name << " over " << r.name() << " via " << v.method_name());
      if (v.verdict != Verdict::unknown) {
        CHECK(v.verdict == d.verdict);
      }
    }
  }
}

TEST_CASE("matrix units: worked examples") {
  auto q = CoeffRing::rationals();
  for (std::size_t n = 1; n <= 3; ++n) {
    auto p   = FiniteGroupoid::pair(n);
    auto dec = matrix_units_decomposition(p);
    REQUIRE(dec.components.size() == 1);
    for (auto const& row : dec.components[0].u) {
      for (auto const& u : row) {
        CHECK(u.size() == 1);
      }
    }
    auto iso = matrix_units_isomorphism(p, dec, q);
    CHECK(iso_check(groupoid_algebra(p, q), iso.target, iso.map));
  }
  auto g   = FiniteGroupoid::group(FiniteGroup::cyclic(3));
  auto dec = matrix_units_decomposition(g);
  CHECK(dec.components[0].units.size() == 1);
  auto t   = FiniteGroupoid::transitive(2, FiniteGroup::cyclic(2));
  CHECK(t.arrow_count() == 8);
  auto dt  = matrix_units_decomposition(t);
  auto it  = matrix_units_isomorphism(t, dt, q);
  CHECK(it.target.dimension() == 2 * 2 * 2);
  CHECK(iso_check(groupoid_algebra(t, q), it.target, it.map));
}

TEST_CASE("matrix unit relations hold literally") {
  for (auto const& g : sample_groupoids()) {
    auto dec = matrix_units_decomposition(g);
    CHECK(dec.relations_hold);
    for (auto const& c : dec.components) {
      std::size_t const n = c.units.size();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t l = 0; l < n; ++l) {
              auto prod = as_set(bisection_product(g, c.u[i][j], c.u[k][l]));
              if (j == k) {
                CHECK(prod == as_set(c.u[i][l]));
              } else {
                CHECK(prod.empty());
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("universal groupoid: worked examples") {
  auto z3 = zoo::semigroup("cyclic-3").semigroup;
  auto u3 = universal_groupoid(z3);
  CHECK(u3.groupoid.unit_count() == 1);
  CHECK(u3.groupoid.arrow_count() == 3);
  for (std::size_t s = 0; s < z3.size(); ++s) {
    CHECK(u3.psi[s].size() == 1);
  }

  auto c2 = universal_groupoid(zoo::semigroup("chain-2").semigroup);
  CHECK(c2.groupoid.unit_count() == 2);
  CHECK(c2.groupoid.arrow_count() == 2);

  auto b2 = zoo::semigroup("B2").semigroup;
  auto ub = universal_groupoid(b2);
  CHECK(ub.groupoid.unit_count() == 3);
  CHECK(ub.groupoid.arrow_count() == 5);
  std::multiset<std::size_t> orbit_sizes;
  for (auto const& o : orbits(ub.groupoid)) {
    orbit_sizes.insert(o.size());
  }
  CHECK(orbit_sizes == std::multiset<std::size_t>{1, 2});
  auto zero = *b2.index_of(PartialBijection::empty(2));
  for (std::size_t x = 0; x < 3; ++x) {
    if (ub.unit_idempotent[x] == zero) {
      CHECK(ub.groupoid.hom(x, x).size() == 1);
      CHECK(orbits(ub.groupoid)[0].size() + orbits(ub.groupoid)[1].size() == 3);
    }
  }
}

TEST_CASE("universal groupoid algebra isomorphism on the zoo") {
  for (auto const& z : zoo::semigroups()) {
    auto u = universal_groupoid(z.semigroup);
    CHECK(u.groupoid.arrow_count() == z.semigroup.size());
    for (auto const& r : {CoeffRing::parse("F2"), CoeffRing::parse("Q")}) {
      INFO(z.name << " over " << r.name());
      CHECK(iso_check(semigroup_algebra(z.semigroup, r), groupoid_algebra(u.groupoid, r),
                      universal_groupoid_map(u, r)));
    }
  }
}

TEST_CASE("isotropy of the universal groupoid at x_e is the maximal subgroup G_e") {
  for (auto const& z : zoo::semigroups()) {
    auto const& s = z.semigroup;
    auto        u = universal_groupoid(s);
    for (std::size_t x = 0; x < u.groupoid.unit_count(); ++x) {
      std::size_t e   = u.unit_idempotent[x];
      auto        ge  = maximal_subgroup(s, e);
      auto        iso = isotropy_group(u.groupoid, x);
      REQUIRE(ge.group.size() == iso.group.size());
      // g -> [g, x_e]
      std::vector<std::size_t> map;
      for (auto g : ge.elements) {
        std::size_t found = SIZE_MAX;
        for (auto a : u.psi[g]) {
          if (u.groupoid.src(a) == x) {
            found = a;
          }
        }
        REQUIRE(found != SIZE_MAX);
        auto pos = std::find(iso.arrows.begin(), iso.arrows.end(), found);
        REQUIRE(pos != iso.arrows.end());
        map.push_back(static_cast<std::size_t>(pos - iso.arrows.begin()));
      }
      INFO(z.name << " at unit " << x);
      CHECK(is_isomorphism(ge.group, iso.group, map));
    }
  }
}

TEST_CASE("transformation groupoids: worked examples") {
  auto trivial = transformation_groupoid(FiniteGroup::trivial(), {{0, 1, 2}});
  CHECK(trivial.arrow_count() == 3);
  CHECK(trivial.unit_count() == 3);
  auto swap = transformation_groupoid(FiniteGroup::cyclic(2), {{0, 1}, {1, 0}});
  CHECK(swap.arrow_count() == 4);
  CHECK(is_principal(swap));
  CHECK(orbits(swap).size() == 1);
  auto fix = transformation_groupoid(FiniteGroup::cyclic(2), {{0}, {0}});
  CHECK(isotropy_group(fix, 0).group.size() == 2);
  auto f2 = CoeffRing::prime_field(2);
  auto v  = algebra_is_regular_oracle(groupoid_algebra(fix, f2));
  CHECK(v.verdict == Verdict::not_regular);
  CHECK(v.method == OracleVerdict::Method::exhaustive);
  CHECK(decide_regular_groupoid_algebra(fix, f2).verdict == Verdict::not_regular);
  // not an action: g.g must be the identity on points
  CHECK_THROWS_AS(transformation_groupoid(FiniteGroup::cyclic(2), {{0, 1, 2}, {1, 2, 0}}),
                  InvalidAction);
}

TEST_CASE("restrict_arrows checks closure") {
  auto p = FiniteGroupoid::pair(2);
  std::vector<bool> keep(p.arrow_count(), false);
  keep[0] = keep[1] = true;
  CHECK(restrict_arrows(p, keep).groupoid.arrow_count() == 2);
  keep[2] = true;  // a non-unit arrow without its inverse
  CHECK_THROWS_AS(restrict_arrows(p, keep), InvalidInput);
}
