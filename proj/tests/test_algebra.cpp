#include <doctest.h>

#include <random>

#include "ua/congruence.hpp"
#include "ua/corpus.hpp"

#include "oracles.hpp"

using namespace ua;

TEST_CASE("builders validate their axioms") {
  CHECK(cyclic_group(1)->size() == 1);
  CHECK(cyclic_group(7)->is_group());
  CHECK(dihedral_group(4)->size() == 8);
  CHECK(dihedral_group(4)->is_group());
  CHECK(symmetric_group(3)->size() == 6);
  CHECK(symmetric_group(4)->size() == 24);
  CHECK(quaternion_group_8()->is_group());
  CHECK(chain_lattice(5)->is_lattice());
  CHECK(diamond_m3()->is_lattice());
  CHECK(pentagon_n5()->is_lattice());
  CHECK_THROWS_AS(symmetric_group(5), InputError);
  CHECK_THROWS_AS(cyclic_group(0), InputError);
}

TEST_CASE("S3 is nonabelian, the pentagon fails the modular law") {
  auto s3 = symmetric_group(3);
  bool abelian = true;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      if (s3->group_mul(a, b) != s3->group_mul(b, a)) abelian = false;
  CHECK_FALSE(abelian);
  CHECK(oracle::lattice_tables_modular(*chain_lattice(4)));
  CHECK(oracle::lattice_tables_modular(*diamond_m3()));
  CHECK_FALSE(oracle::lattice_tables_modular(*pentagon_n5()));
}

TEST_CASE("is_homomorphism examples") {
  auto z4 = cyclic_group(4);
  auto z2 = cyclic_group(2);
  CHECK(is_homomorphism(*z4, *z4, std::vector<int>{0, 1, 2, 3}));
  CHECK(is_homomorphism(*z4, *z2, std::vector<int>{0, 1, 0, 1}));
  // the swap does not preserve the identity constant
  CHECK_FALSE(is_homomorphism(*z2, *z2, std::vector<int>{1, 0}));
  CHECK_THROWS_AS(Homomorphism(z4, z2, {0, 1, 0}), InputError);
  CHECK_THROWS_AS(Homomorphism(z4, z2, {0, 1, 0, 7}), InputError);
}

TEST_CASE("products: sizes, projections, universal property") {
  auto z2 = cyclic_group(2);
  auto z3 = cyclic_group(3);
  auto z1 = cyclic_group(1);
  CHECK(product(z2, z1).algebra->size() == 2);
  CHECK(isomorphic(product(z2, z1).algebra, z2));
  CHECK(product(z2, z2).algebra->size() == 4);
  CHECK(isomorphic(product(z2, z3).algebra, cyclic_group(6)));

  ProductResult p = product(z2, z3);
  CHECK(p.proj1.checked().surjective());
  CHECK(p.proj2.checked().surjective());
  // pairing: exactly one mediating hom per pair of maps into the factors
  for (const auto& c : {cyclic_group(2), cyclic_group(4), cyclic_group(6)}) {
    for (const auto& g1 : all_homs(c, z2))
      for (const auto& g2 : all_homs(c, z3)) {
        Homomorphism h = pair_into_product(p, g1, g2);
        CHECK(h.valid());
        CHECK(compose(p.proj1, h) == g1);
        CHECK(compose(p.proj2, h) == g2);
        int mediators = 0;
        for (const auto& m : all_homs(c, p.algebra))
          if (compose(p.proj1, m) == g1 && compose(p.proj2, m) == g2) ++mediators;
        CHECK(mediators == 1);
      }
  }
}

TEST_CASE("subalgebra generation") {
  auto z4 = cyclic_group(4);
  SUBCASE("full seed returns the algebra") {
    auto s = subalgebra_generated(z4, std::vector<int>{0, 1, 2, 3});
    CHECK(s.algebra->size() == 4);
  }
  SUBCASE("2 generates the even part") {
    auto s = subalgebra_generated(z4, std::vector<int>{2});
    CHECK(s.algebra->size() == 2);
    CHECK(s.inclusion.map() == std::vector<int>{0, 2});
    CHECK(s.inclusion.checked().injective());
  }
  SUBCASE("1 generates everything") {
    CHECK(subalgebra_generated(z4, std::vector<int>{1}).algebra->size() == 4);
  }
  SUBCASE("empty seed needs constants") {
    CHECK(subalgebra_generated(z4, std::vector<int>{}).algebra->size() == 1);
    CHECK_THROWS_AS(subalgebra_generated(bare_set(3), std::vector<int>{}), InputError);
  }
}

TEST_CASE("quotients") {
  auto z4 = cyclic_group(4);
  SUBCASE("by the diagonal") {
    auto q = quotient(z4, Congruence{z4, Partition::discrete(4)});
    CHECK(isomorphic(q.algebra, z4));
  }
  SUBCASE("by the full relation") {
    auto q = quotient(z4, Congruence{z4, Partition::indiscrete(4)});
    CHECK(q.algebra->size() == 1);
  }
  SUBCASE("by the even/odd congruence") {
    Partition p = Partition::from_blocks(4, {{0, 2}, {1, 3}});
    auto q = quotient(z4, Congruence{z4, p});
    CHECK(isomorphic(q.algebra, cyclic_group(2)));
    CHECK(kernel_pair(q.proj).part == p);
  }
  SUBCASE("incompatible partition is rejected") {
    Partition p = Partition::from_blocks(4, {{0, 1}, {2}, {3}});
    CHECK_FALSE(is_congruence(*z4, p));
    CHECK_THROWS_AS(quotient(z4, Congruence{z4, p}), InputError);
  }
}

TEST_CASE("kernel pairs") {
  auto z4 = cyclic_group(4);
  auto z2 = cyclic_group(2);
  auto z1 = cyclic_group(1);
  CHECK(kernel_pair(Homomorphism::identity(z4)).part == Partition::discrete(4));
  CHECK(kernel_pair(Homomorphism(z4, z1, {0, 0, 0, 0})).part == Partition::indiscrete(4));
  CHECK(kernel_pair(Homomorphism(z4, z2, {0, 1, 0, 1})).part ==
        Partition::from_blocks(4, {{0, 2}, {1, 3}}));
}

TEST_CASE("image factorization") {
  auto z4 = cyclic_group(4);
  auto z2 = cyclic_group(2);
  SUBCASE("identity") {
    auto [p, m] = image_factorization(Homomorphism::identity(z4));
    CHECK(p.is_identity());
    CHECK(m.is_identity());
  }
  SUBCASE("doubling on Z4") {
    Homomorphism f(z4, z4, {0, 2, 0, 2});
    auto [p, m] = image_factorization(f.checked());
    CHECK(p.target()->size() == 2);
    CHECK(p.surjective());
    CHECK(m.injective());
    CHECK(compose(m, p) == f);
  }
  SUBCASE("constant map") {
    Homomorphism f(z2, z2, {0, 0});
    auto [p, m] = image_factorization(f);
    CHECK(p.target()->size() == 1);
  }
}

TEST_CASE("image factorization law on random homs") {
  const auto corpus = scan_corpus();
  std::vector<std::pair<AlgebraPtr, AlgebraPtr>> pairs;
  for (const auto& a : corpus)
    for (const auto& b : corpus)
      if (a->signature() == b->signature()) pairs.emplace_back(a, b);
  std::mt19937_64 rng(7);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto& [a, b] = pairs[rng() % pairs.size()];
    const auto& pool = hom_pool(a, b);
    if (pool.empty()) continue;
    const Homomorphism& f = pool[rng() % pool.size()];
    auto [p, m] = image_factorization(f);
    REQUIRE(p.surjective());
    REQUIRE(m.injective());
    REQUIRE(compose(m, p) == f);
    REQUIRE(p.valid());
    REQUIRE(m.valid());
    ++checked;
  }
  CHECK(checked > 900);
}

TEST_CASE("first isomorphism theorem on small corpus pairs") {
  std::vector<AlgebraPtr> small;
  for (const auto& a : scan_corpus())
    if (a->size() <= 6) small.push_back(a);
  for (const auto& a : small)
    for (const auto& b : small) {
      if (a->signature() != b->signature()) continue;
      for (const auto& f : hom_pool(a, b)) {
        auto q = quotient(a, kernel_pair(f));
        auto [p, m] = image_factorization(f);
        CHECK(isomorphic(q.algebra, p.target()));
      }
    }
}

TEST_CASE("group helpers agree with the subgroup oracle") {
  // congruences of a group correspond to its normal subgroups
  for (const char* name : {"Z4", "V4", "S3", "Q8", "D4", "Z6"}) {
    auto g = builtin(name);
    const auto expect = oracle::normal_subgroups(*g);
    CHECK(static_cast<int>(expect.size()) == all_congruences(g).size());
  }
}
