#include <catch_amalgamated.hpp>

#include <map>
#include <set>

#include "regulus/errors.hpp"
#include "regulus/invsgp.hpp"
#include "regulus/zoo.hpp"

using namespace regulus;

namespace {
  constexpr std::uint32_t U = PartialBijection::undefined;

  FiniteInverseSemigroup gen(std::vector<std::vector<std::uint32_t>> gens, std::size_t cap = 4096) {
    std::vector<PartialBijection> g;
    for (auto& x : gens) {
      g.emplace_back(std::move(x));
    }
    return FiniteInverseSemigroup::generate(g, cap);
  }

  std::multiset<std::size_t> sizes(std::vector<std::vector<std::size_t>> const& classes) {
    std::multiset<std::size_t> s;
    for (auto const& c : classes) {
      s.insert(c.size());
    }
    return s;
  }

  std::size_t index(FiniteInverseSemigroup const& s, std::vector<std::uint32_t> im) {
    return *s.index_of(PartialBijection(std::move(im)));
  }
}  // namespace

TEST_CASE("partial bijections") {
  PartialBijection a({1, U});
  CHECK(a.to_string() == "[1,-]");
  CHECK(a.rank() == 1);
  CHECK(a.inverse() == PartialBijection({U, 0}));
  CHECK((a * a) == PartialBijection::empty(2));
  CHECK((a.inverse() * a) == PartialBijection::partial_identity(2, {0}));
  CHECK(a.domain() == std::vector<std::uint32_t>{0});
  CHECK(a.image() == std::vector<std::uint32_t>{1});
  CHECK_THROWS_AS(PartialBijection({0, 0}), InvalidInput);
  CHECK_THROWS_AS(PartialBijection({2, 0}), InvalidInput);
  CHECK_THROWS_AS(PartialBijection({0}) * PartialBijection({0, 1}), InvalidInput);
}

TEST_CASE("generate: worked examples") {
  CHECK(gen({{1, 0}}).size() == 2);
  auto b2 = gen({{1, U}});
  CHECK(b2.size() == 5);
  CHECK(b2.index_of(PartialBijection::empty(2)).has_value());
  auto i2 = gen({{1, 0}, {0, U}, {1, U}, {U, 0}, {U, 1}, {0, 1}});
  CHECK(i2.size() == 7);
  CHECK(i2.size() == symmetric_inverse_monoid_order(2));
  CHECK(symmetric_inverse_monoid_order(3) == 34);
  CHECK_THROWS_AS(gen({{1, 2, 3, 4, 5, 6, 0}}, 5), CapExceeded);
}

TEST_CASE("green classes: worked examples") {
  auto chain = zoo::semigroup("chain-3").semigroup;
  auto gc    = green_classes(chain);
  CHECK(gc.d_classes.size() == chain.size());
  CHECK(sizes(gc.l_classes) == std::multiset<std::size_t>{1, 1, 1});

  auto b2 = zoo::semigroup("B2").semigroup;
  auto gb = green_classes(b2);
  CHECK(sizes(gb.d_classes) == std::multiset<std::size_t>{1, 4});
  CHECK(gb.d_classes[gb.d_of[*b2.index_of(PartialBijection::empty(2))]].size() == 1);

  auto i2 = zoo::semigroup("I2").semigroup;
  auto gi = green_classes(i2);
  CHECK(sizes(gi.d_classes) == std::multiset<std::size_t>{1, 4, 2});
  for (auto const& d : gi.d_classes) {
    std::set<std::size_t> ranks;
    for (auto x : d) {
      ranks.insert(i2.element(x).rank());
    }
    CHECK(ranks.size() == 1);
  }
}

TEST_CASE("maximal subgroups: worked examples") {
  auto diamond = zoo::semigroup("diamond").semigroup;
  for (auto e : diamond.idempotents()) {
    CHECK(maximal_subgroup(diamond, e).group.size() == 1);
  }
  auto i2 = zoo::semigroup("I2").semigroup;
  CHECK(maximal_subgroup(i2, *i2.identity()).group.size() == 2);
  auto b2 = zoo::semigroup("B2").semigroup;
  CHECK(maximal_subgroup(b2, index(b2, {U, 1})).group.size() == 1);
  CHECK_THROWS_AS(maximal_subgroup(b2, index(b2, {1, U})), InvalidInput);
}

TEST_CASE("subgroup prime support: worked examples") {
  CHECK(subgroup_prime_support(zoo::semigroup("chain-3").semigroup).empty());
  CHECK(subgroup_prime_support(zoo::semigroup("I2").semigroup) == std::set<std::uint64_t>{2});
  CHECK(subgroup_prime_support(zoo::semigroup("cyclic-6").semigroup)
        == std::set<std::uint64_t>{2, 3});
}

TEST_CASE("prime support equals orders of prime cyclic subgroups on the zoo") {
  // s generates a cyclic group of order k when s^(k+1) = s for the least
  // such k; enumerate all of these directly.
  for (auto const& z : zoo::semigroups()) {
    auto const&             s = z.semigroup;
    std::set<std::uint64_t> cyclic_primes;
    for (std::size_t x = 0; x < s.size(); ++x) {
      std::size_t p = s.product(x, x);
      for (std::uint64_t k = 1; k <= s.size(); ++k, p = s.product(p, x)) {
        if (p == x) {
          if (arith::is_prime(k)) {
            cyclic_primes.insert(k);
          }
          break;
        }
      }
    }
    INFO(z.name);
    CHECK(cyclic_primes == subgroup_prime_support(s));
  }
}

TEST_CASE("decide_regular_semigroup_algebra: worked examples") {
  auto f2 = CoeffRing::prime_field(2);
  auto d  = decide_regular_semigroup_algebra(zoo::semigroup("cyclic-2").semigroup, f2);
  CHECK(d.verdict == Verdict::not_regular);
  CHECK(d.evidence.size() == 3);
  for (auto const& name : {"semilattice-1", "chain-2", "chain-3", "diamond"}) {
    CHECK(decide_regular_semigroup_algebra(zoo::semigroup(name).semigroup, CoeffRing::rationals())
              .verdict
          == Verdict::regular);
  }
  auto i2 = zoo::semigroup("I2").semigroup;
  CHECK(decide_regular_semigroup_algebra(i2, f2).verdict == Verdict::not_regular);
  CHECK(decide_regular_semigroup_algebra(i2, CoeffRing::prime_field(3)).verdict
        == Verdict::regular);
  CHECK(decide_regular_semigroup_algebra(i2, CoeffRing::integers_mod(12)).verdict
        == Verdict::not_regular);
  CHECK(decide_regular_semigroup_algebra(zoo::semigroup("chain-2").semigroup,
                                         CoeffRing::integers_mod(12))
            .reason.find("coefficient ring") != std::string::npos);
  std::vector<PartialBijection> big{PartialBijection({1, 2, 3, 4, 5, 6, 7, 0})};
  auto u = decide_regular_semigroup_algebra(big, 4, CoeffRing::rationals());
  CHECK(u.verdict == Verdict::unknown);
}

TEST_CASE("inverse semigroup invariants on the zoo") {
  for (auto const& z : zoo::semigroups()) {
    auto const& s = z.semigroup;
    INFO(z.name);
    REQUIRE(s.satisfies_inverse_axioms());
    for (std::size_t x = 0; x < s.size(); ++x) {
      std::size_t xs = s.inverse(x);
      CHECK(s.product(x, s.product(xs, x)) == x);
      CHECK(s.product(s.product(x, xs), x) == x);
      for (std::size_t y = 0; y < s.size(); ++y) {
        CHECK(s.inverse(s.product(x, y)) == s.product(s.inverse(y), xs));
      }
    }
    for (auto e : s.idempotents()) {
      for (auto f : s.idempotents()) {
        CHECK(s.product(e, f) == s.product(f, e));
      }
    }
    // |S| = sum over D-classes of (#L-classes in D)^2 |G_D|
    auto        gc    = green_classes(s);
    std::size_t total = 0;
    for (auto const& d : gc.d_classes) {
      std::set<std::size_t> ls;
      std::size_t           e = SIZE_MAX;
      for (auto x : d) {
        ls.insert(gc.l_of[x]);
        if (s.is_idempotent(x) && e == SIZE_MAX) {
          e = x;
        }
      }
      total += ls.size() * ls.size() * maximal_subgroup(s, e).group.size();
    }
    CHECK(total == s.size());
    // G_e acts freely on R_e
    for (auto e : s.idempotents()) {
      auto g = maximal_subgroup(s, e);
      for (auto x : gc.r_classes[gc.r_of[e]]) {
        for (auto h : g.elements) {
          if (s.product(h, x) == x) {
            CHECK(h == e);
          }
        }
      }
    }
  }
}

TEST_CASE("natural partial order") {
  auto s = zoo::semigroup("chain-3").semigroup;
  auto top = *s.identity();
  for (std::size_t x = 0; x < s.size(); ++x) {
    CHECK(s.leq(x, top));
    CHECK(s.leq(x, x));
  }
  auto b2 = zoo::semigroup("B2").semigroup;
  auto z  = *b2.index_of(PartialBijection::empty(2));
  for (std::size_t x = 0; x < b2.size(); ++x) {
    CHECK(b2.leq(z, x));
  }
}

TEST_CASE("Schutzenberger representation") {
  auto s3  = zoo::semigroup("sym-3").semigroup;
  auto rep = schutzenberger_representation(s3, *s3.identity());
  CHECK(rep.l_class.size() == s3.size());
  for (auto const& a : rep.action) {
    CHECK(a.rank() == s3.size());
  }
  auto b2 = zoo::semigroup("B2").semigroup;
  auto e  = index(b2, {0, U});  // a*a for a = [1,-]
  auto a  = index(b2, {1, U});
  auto rb = schutzenberger_representation(b2, e);
  CHECK(std::set<std::size_t>(rb.l_class.begin(), rb.l_class.end())
        == std::set<std::size_t>{a, e});
  auto pos = [&](std::size_t x) {
    return static_cast<std::uint32_t>(std::find(rb.l_class.begin(), rb.l_class.end(), x)
                                      - rb.l_class.begin());
  };
  CHECK(rb.action[a][pos(e)] == pos(a));
}

TEST_CASE("Schutzenberger representations separate points") {
  for (auto const& z : zoo::semigroups()) {
    auto const&                    s = z.semigroup;
    std::vector<SchutzenbergerRepresentation> reps;
    for (auto e : s.idempotents()) {
      reps.push_back(schutzenberger_representation(s, e));
    }
    std::set<std::vector<PartialBijection>> images;
    for (std::size_t x = 0; x < s.size(); ++x) {
      std::vector<PartialBijection> img;
      for (auto const& r : reps) {
        img.push_back(r.action[x]);
      }
      images.insert(img);
    }
    INFO(z.name);
    CHECK(images.size() == s.size());
  }
}

TEST_CASE("bounded L-class local finiteness") {
  auto i2 = zoo::semigroup("I2").semigroup;
  auto sw = index(i2, {1, 0});
  auto e0 = index(i2, {0, U});
  auto c  = bounded_l_class_local_finiteness({i2, i2}, {{sw, e0}, {e0, sw}}, 2);
  CHECK(c.order > 0);
  CHECK(c.order <= c.birkhoff_bound);
  // an L-class of the subsemigroup lies in a product of factor L-classes
  CHECK(c.max_l_class <= 2 * 2);

  auto single = bounded_l_class_local_finiteness({i2}, {{sw}}, 2);
  CHECK(single.order == 2);

  auto z6 = zoo::semigroup("cyclic-6").semigroup;
  PartialBijection rot({1, 2, 3, 4, 5, 0});
  CHECK_THROWS_AS(bounded_l_class_local_finiteness({z6}, {{*z6.index_of(rot)}}, 6, 4),
                  CapExceeded);
}
