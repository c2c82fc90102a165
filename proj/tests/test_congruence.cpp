#include <doctest.h>

#include "ua/scans.hpp"
#include "ua/corpus.hpp"

#include "oracles.hpp"

using namespace ua;

TEST_CASE("partition canonical form") {
  Partition p({3, 3, 1, 1, 0});
  CHECK(p.block_ids() == std::vector<int>{0, 0, 1, 1, 2});
  CHECK(p.block_count() == 3);
  CHECK(Partition::from_blocks(3, {{2, 0}, {1}}) == Partition({0, 1, 0}));
  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}}), InputError);
  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}, {1, 2}}), InputError);
  int count = 0;
  for_each_partition(4, [&](const std::vector<int>&) { ++count; });
  CHECK(count == 15);  // Bell(4)
}

TEST_CASE("meet join refine on partitions") {
  Partition r = Partition::from_blocks(4, {{0, 1}, {2, 3}});
  Partition s = Partition::from_blocks(4, {{0, 2}, {1, 3}});
  CHECK(meet(r, s) == Partition::discrete(4));
  CHECK(join(r, s) == Partition::indiscrete(4));
  CHECK(r.refines(Partition::indiscrete(4)));
  CHECK(Partition::discrete(4).refines(r));
  CHECK_FALSE(r.refines(s));
}

TEST_CASE("principal congruences") {
  auto z4 = cyclic_group(4);
  CHECK(principal_congruence(z4, 1, 1).part == Partition::discrete(4));
  CHECK(principal_congruence(bare_set(4), 0, 1).part ==
        Partition::from_blocks(4, {{0, 1}, {2}, {3}}));
  SUBCASE("Z4 collapsing 0 and 2, against the least-containing oracle") {
    const Partition got = principal_congruence(z4, 0, 2).part;
    CHECK(got == Partition::from_blocks(4, {{0, 2}, {1, 3}}));
    Partition least = Partition::indiscrete(4);
    for_each_partition(4, [&](const std::vector<int>& rgs) {
      Partition p(rgs);
      if (p.same(0, 2) && is_congruence(*z4, p) && p.refines(least)) least = p;
    });
    CHECK(got == least);
  }
  SUBCASE("1 generates everything") {
    CHECK(congruence_generated(z4, {{0, 1}}).part == Partition::indiscrete(4));
    CHECK(congruence_generated(z4, {}).part == Partition::discrete(4));
  }
}

TEST_CASE("congruence enumeration: counts and brute-force agreement") {
  const std::vector<std::pair<const char*, int>> counts{
      {"Z1", 1}, {"Z4", 3},    {"V4", 5},     {"S3", 3},    {"Q8", 6},
      {"D4", 6}, {"Z6", 4},    {"bare4", 15}, {"chain2", 2}, {"chain3", 4},
      {"chain6", 32}, {"M3", 2}, {"Z2xZ2xZ2", 16}, {"S3xZ2", 7}};
  for (const auto& [name, expect] : counts) {
    auto a = builtin(name);
    const CongruenceLattice l = all_congruences(a);
    CHECK_MESSAGE(l.size() == expect, name);
    if (a->size() <= 8) {
      auto brute = brute_force_congruences(a);
      std::sort(brute.begin(), brute.end());
      CHECK(brute == l.elements());
      auto serial = brute_force_congruences(a, Exec::serial);
      std::sort(serial.begin(), serial.end());
      CHECK(serial == brute);
    }
  }
  // groups: counts equal the number of normal subgroups
  for (const char* name : {"Z4", "V4", "S3", "Q8"}) {
    auto g = builtin(name);
    CHECK(oracle::normal_subgroups(*g).size() ==
          static_cast<size_t>(all_congruences(g).size()));
  }
}

TEST_CASE("congruence meet and join") {
  auto v4 = builtin("V4");
  const CongruenceLattice l = all_congruences(v4);
  const Congruence top{v4, l.at(l.top())};
  const Congruence bot{v4, l.at(l.bottom())};
  // two distinct atoms join to the top
  std::vector<Congruence> atoms;
  for (int i = 0; i < l.size(); ++i)
    if (l.at(i).block_count() == 2) atoms.push_back({v4, l.at(i)});
  REQUIRE(atoms.size() == 3);
  CHECK(cong_join(atoms[0], atoms[1]).part == top.part);
  CHECK(cong_meet(atoms[0], atoms[1]).part == bot.part);
  CHECK(cong_meet(atoms[0], top).part == atoms[0].part);
  CHECK(cong_join(atoms[0], bot).part == atoms[0].part);
  // join via the relation calculus gives the same congruence
  CHECK(relation_from_partition(cong_join(atoms[0], atoms[1]).part) ==
        eq_join(relation_from_partition(atoms[0].part),
                relation_from_partition(atoms[1].part)));
}

TEST_CASE("lattice modularity") {
  CHECK(is_modular(all_congruences(builtin("V4"))).modular);  // the diamond
  CHECK(is_modular(all_congruences(builtin("chain4"))).modular);
  const ModularityResult r = is_modular(all_congruences(bare_set(4)));
  CHECK_FALSE(r.modular);
  REQUIRE(r.witness.has_value());
  // the witness triple violates the law in the lattice itself
  const CongruenceLattice l = all_congruences(bare_set(4));
  auto [x, y, z] = *r.witness;
  CHECK(l.leq(x, z));
  CHECK(l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z));
}

TEST_CASE("double relation") {
  auto z2 = cyclic_group(2);
  const Congruence delta{z2, Partition::discrete(2)};
  const Congruence nabla{z2, Partition::indiscrete(2)};
  CHECK(double_relation(delta, delta).quads.size() == 2);  // only (x,x,x,x)
  CHECK(double_relation(nabla, nabla).quads.size() == 16);
  for (const auto& q : double_relation(nabla, delta).quads) {
    CHECK(q[0] == q[1]);  // (x,t) in the diagonal
    CHECK(q[2] == q[3]);
  }
}

TEST_CASE("discrete fibrations") {
  auto z4 = cyclic_group(4);
  const CongruenceLattice l = all_congruences(z4);
  for (int i = 0; i < l.size(); ++i)
    for (int j = 0; j < l.size(); ++j) {
      const Congruence r{z4, l.at(i)}, s{z4, l.at(j)};
      CHECK(is_discrete_fibration(r, s, r));  // T = R
    }
  // the shifting-lemma failure triple on a bare set is not a fibration
  auto b4 = bare_set(4);
  const Congruence r{b4, Partition::from_blocks(4, {{0, 1}, {2, 3}})};
  const Congruence s{b4, Partition::from_blocks(4, {{0, 2}, {1, 3}})};
  const Congruence t{b4, Partition::from_blocks(4, {{0, 1}, {2}, {3}})};
  CHECK_FALSE(is_discrete_fibration(t, s, r));
  CHECK_THROWS_AS(is_discrete_fibration(r, s, t), HypothesisViolated);
}

TEST_CASE("shifting lemma scans") {
  CHECK(shifting_lemma_holds(cyclic_group(1)));
  for (const char* name : {"Z4", "V4", "S3", "Q8", "D4", "Z6", "S3xZ2"})
    CHECK_MESSAGE(shifting_lemma_holds(builtin(name)), name);
  SUBCASE("bare_set(4) fails with the grid witness") {
    const CongruenceLattice l = all_congruences(bare_set(4));
    const ScanResult r = shifting_lemma(l);
    REQUIRE_FALSE(r.holds);
    const SLWitness& w = *r.witness;
    CHECK(w.R.same(w.x, w.y));
    CHECK(w.T.same(w.x, w.y));
    CHECK(w.S.same(w.x, w.t));
    CHECK(w.S.same(w.y, w.z));
    CHECK(w.R.same(w.t, w.z));
    CHECK_FALSE(w.T.same(w.t, w.z));
    CHECK(meet(w.R, w.S).refines(w.T));
  }
}

TEST_CASE("serial and parallel scans agree, witness included") {
  for (const char* name : {"bare4", "bare5", "chain5", "Z2xZ2xZ2"}) {
    const CongruenceLattice l = all_congruences(builtin(name));
    const ScanResult a = shifting_lemma(l, Exec::serial);
    const ScanResult b = shifting_lemma(l, Exec::parallel);
    CHECK(a.holds == b.holds);
    if (!a.holds) {
      CHECK(a.witness->R == b.witness->R);
      CHECK(a.witness->S == b.witness->S);
      CHECK(a.witness->T == b.witness->T);
      CHECK(a.witness->x == b.witness->x);
      CHECK(a.witness->y == b.witness->y);
      CHECK(a.witness->t == b.witness->t);
      CHECK(a.witness->z == b.witness->z);
    }
    const ScanResult ga = gumm_fibrations(l, Exec::serial);
    const ScanResult gb = gumm_fibrations(l, Exec::parallel);
    CHECK(ga.holds == gb.holds);
    const BournResult ba = bourn_scan(l, Exec::serial);
    const BournResult bb = bourn_scan(l, Exec::parallel);
    CHECK(ba.counterexample == bb.counterexample);
    CHECK(ba.sl_holds == bb.sl_holds);
  }
}

TEST_CASE("gumm formulation is equivalent to the elementwise one") {
  for (const auto& a : scan_corpus()) {
    const CongruenceLattice l = all_congruences(a);
    CHECK_MESSAGE(shifting_lemma(l).holds == gumm_fibrations(l).holds, a->name());
  }
}

TEST_CASE("permutability") {
  auto c3 = chain_lattice(3);
  const Congruence r{c3, Partition::from_blocks(3, {{0, 1}, {2}})};
  const Congruence s{c3, Partition::from_blocks(3, {{0}, {1, 2}})};
  SUBCASE("equal congruences permute") {
    const Permutability p = permutability(r, r);
    CHECK(p.permute2);
    CHECK(p.permute3);
  }
  SUBCASE("the chain pair fails to 2-permute") {
    const Permutability p = permutability(r, s);
    CHECK_FALSE(p.permute2);
    // 0 reaches 2 through 1 one way round but not the other
    BinRel rr = relation_from_partition(r.part), ss = relation_from_partition(s.part);
    CHECK(compose(rr, ss).at(0, 2));
    CHECK_FALSE(compose(ss, rr).at(0, 2));
  }
  SUBCASE("group congruences 2-permute; 2-permutability implies 3-permutability") {
    for (const auto& a : scan_corpus()) {
      const CongruenceLattice l = all_congruences(a);
      for (int i = 0; i < l.size(); ++i)
        for (int j = 0; j < l.size(); ++j) {
          const Permutability p = permutability({a, l.at(i)}, {a, l.at(j)});
          if (a->signature() == Signature::group()) CHECK(p.permute2);
          if (p.permute2) CHECK(p.permute3);
        }
    }
  }
}

TEST_CASE("permutability transfer along interval congruences") {
  SUBCASE("T = R is immediate") {
    auto z4 = cyclic_group(4);
    const CongruenceLattice l = all_congruences(z4);
    const BournResult r = bourn_scan(l);
    CHECK(r.sl_holds);
    CHECK_FALSE(r.counterexample);
  }
  SUBCASE("no counterexample on any corpus algebra satisfying the hypothesis") {
    for (const auto& a : scan_corpus()) {
      const BournResult r = bourn_scan(all_congruences(a));
      if (r.sl_holds) CHECK_MESSAGE(!r.counterexample, a->name());
    }
  }
}
