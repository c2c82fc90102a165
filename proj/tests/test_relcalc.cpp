#include <doctest.h>

#include <random>

#include "ua/partition.hpp"

#include "oracles.hpp"

using namespace ua;

namespace {

BinRel random_rel(std::mt19937_64& rng, int src, int tgt) {
  BinRel r(src, tgt);
  for (int a = 0; a < src; ++a)
    for (int b = 0; b < tgt; ++b)
      if (rng() & 1) r.set(a, b);
  return r;
}

}  // namespace

TEST_CASE("graphs of homomorphisms") {
  auto z4 = cyclic_group(4);
  auto z2 = cyclic_group(2);
  CHECK(of_hom(Homomorphism::identity(z4)) == BinRel::identity(4));
  Homomorphism mod2(z4, z2, {0, 1, 0, 1});
  CHECK(of_hom(mod2) == BinRel::from_pairs(4, 2, {{0, 0}, {1, 1}, {2, 0}, {3, 1}}));
  CHECK(of_hom_op(mod2) == opposite(of_hom(mod2)));
}

TEST_CASE("composition basics") {
  BinRel r = BinRel::from_pairs(1, 2, {{0, 0}, {0, 1}});
  BinRel s = BinRel::from_pairs(2, 3, {{1, 2}});
  CHECK(compose(r, s) == BinRel::from_pairs(1, 3, {{0, 2}}));
  CHECK(compose(r, BinRel::identity(2)) == r);
  CHECK(compose(BinRel::identity(1), r) == r);
  CHECK_THROWS_AS(compose(s, r), InputError);
}

TEST_CASE("opposite") {
  BinRel r = BinRel::from_pairs(2, 3, {{0, 1}, {1, 2}, {0, 0}});
  CHECK(opposite(opposite(r)) == r);
  CHECK(opposite(BinRel::identity(4)) == BinRel::identity(4));
  CHECK(opposite(r) == BinRel::from_pairs(3, 2, {{1, 0}, {2, 1}, {0, 0}}));
}

TEST_CASE("composition laws on random relations") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const int a = 1 + static_cast<int>(rng() % 8), b = 1 + static_cast<int>(rng() % 8),
              c = 1 + static_cast<int>(rng() % 8), d = 1 + static_cast<int>(rng() % 8);
    BinRel r = random_rel(rng, a, b), s = random_rel(rng, b, c), t = random_rel(rng, c, d);
    REQUIRE(compose(compose(r, s), t) == compose(r, compose(s, t)));
    REQUIRE(compose(r, BinRel::identity(b)) == r);
    REQUIRE(compose(BinRel::identity(a), r) == r);
    REQUIRE(compose(r, s) == oracle::naive_compose(r, s));
    REQUIRE(opposite(compose(r, s)) == compose(opposite(s), opposite(r)));
  }
}

TEST_CASE("graph functoriality and kernel pairs as relations") {
  auto z4 = cyclic_group(4);
  auto z2 = cyclic_group(2);
  auto z1 = cyclic_group(1);
  Homomorphism f(z4, z2, {0, 1, 0, 1});
  Homomorphism g(z2, z1, {0, 0});
  CHECK(of_hom(compose(g, f)) == compose(of_hom(f), of_hom(g)));
  for (const auto& a : {cyclic_group(4), cyclic_group(6), quaternion_group_8()})
    for (const auto& h : all_homs(a, cyclic_group(2))) {
      // R_f = f° f, applying the graph first
      BinRel kernel = relation_from_partition(kernel_pair(h).part);
      CHECK(kernel == compose(of_hom(h), of_hom_op(h)));
    }
}

TEST_CASE("meet, union, order, closure") {
  BinRel r = BinRel::from_pairs(3, 3, {{0, 1}});
  CHECK(transitive_closure(r) == r);
  BinRel chain = BinRel::from_pairs(3, 3, {{0, 1}, {1, 2}});
  BinRel closed = transitive_closure(chain);
  CHECK(closed.at(0, 2));
  CHECK(transitive_closure(closed) == closed);
  CHECK(rel_leq(chain, closed));
  CHECK_FALSE(rel_leq(closed, chain));
  CHECK(rel_meet(closed, chain) == chain);
  CHECK(rel_union(chain, chain) == chain);
}

TEST_CASE("equivalence join") {
  BinRel d4 = relation_from_partition(Partition::discrete(4));
  BinRel r = relation_from_partition(Partition::from_blocks(4, {{0, 1}, {2, 3}}));
  CHECK(eq_join(r, d4) == r);
  BinRel s = relation_from_partition(Partition::from_blocks(4, {{1, 2}, {0}, {3}}));
  CHECK(partition_from_relation(eq_join(r, s)) ==
        Partition::from_blocks(4, {{0, 1, 2, 3}}));
  CHECK_THROWS_AS(eq_join(BinRel::from_pairs(2, 2, {{0, 1}}), d4), InputError);
}

TEST_CASE("equivalence join is the least upper bound (oracle)") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    UnionFind u1(n), u2(n);
    for (int i = 0; i < n; ++i) {
      u1.unite(static_cast<int>(rng() % n), static_cast<int>(rng() % n));
      u2.unite(static_cast<int>(rng() % n), static_cast<int>(rng() % n));
    }
    BinRel r = relation_from_partition(Partition::from_union_find(u1));
    BinRel s = relation_from_partition(Partition::from_union_find(u2));
    BinRel j = eq_join(r, s);
    REQUIRE(j.is_equivalence());
    REQUIRE(j == oracle::least_equivalence_above(rel_union(r, s)));
  }
}

TEST_CASE("rel_image") {
  auto z4 = cyclic_group(4);
  auto z2 = cyclic_group(2);
  Homomorphism mod2(z4, z2, {0, 1, 0, 1});
  CHECK(rel_image(mod2, BinRel::full(4, 4)) == BinRel::full(2, 2));
  BinRel r = BinRel::from_pairs(4, 4, {{0, 1}, {2, 2}});
  CHECK(rel_image(Homomorphism::identity(z4), r) == r);
  CHECK(rel_image(mod2, r) == BinRel::from_pairs(2, 2, {{0, 1}, {0, 0}}));
}

TEST_CASE("relation laws for maps") {
  auto z4 = cyclic_group(4);
  auto z2 = cyclic_group(2);
  SUBCASE("any homomorphism satisfies both laws") {
    for (const auto& f : all_homs(z4, z4)) {
      Lemma21Report rep = verify_lemma21(f);
      CHECK(rep.law1);
      CHECK(rep.law2);
      CHECK(rep.epi_iff);
    }
  }
  SUBCASE("non-surjective embedding") {
    Homomorphism emb(z2, z4, {0, 2});
    Lemma21Report rep = verify_lemma21(emb.checked());
    CHECK_FALSE(rep.surjective);
    CHECK(rep.epi_iff);  // both sides false
    BinRel g = of_hom(emb);
    CHECK_FALSE(compose(opposite(g), g) == BinRel::identity(4));
  }
  SUBCASE("surjection composes to the identity on the target") {
    Homomorphism mod2(z4, z2, {0, 1, 0, 1});
    BinRel g = of_hom(mod2);
    CHECK(compose(opposite(g), g) == BinRel::identity(2));
  }
}
