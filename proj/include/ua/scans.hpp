#pragma once

// Whole-lattice scans: shifting-lemma, discrete-fibration (Gumm) and
// permutability checks.  Each scan walks a flat index space of congruence
// triples so that the serial loop and the OpenMP kernel report the same first
// witness; see exec.hpp.

#include <array>
#include <optional>

#include "ua/congruence.hpp"

namespace ua {

struct DoubleRelation {
  BinRel r, s;  // both square on one carrier
  // quadruples (x, t, y, z) with (x,t),(y,z) in S and (x,y),(t,z) in R
  std::vector<std::array<int, 4>> quads;
};
DoubleRelation double_relation(const Congruence& r, const Congruence& s);

// Requires r^s <= t <= r; true when both projection squares of the inclusion
// of the double relation on (t,s) into the one on (r,s) are pullbacks.
bool is_discrete_fibration(const Congruence& t, const Congruence& s, const Congruence& r);

struct SLWitness {
  Partition R, S, T;
  int x = -1, y = -1, t = -1, z = -1;
};

struct ScanResult {
  bool holds = true;
  std::optional<SLWitness> witness;
};

ScanResult shifting_lemma(const CongruenceLattice& l, Exec ex = Exec::parallel);
ScanResult gumm_fibrations(const CongruenceLattice& l, Exec ex = Exec::parallel);

bool shifting_lemma_holds(const AlgebraPtr& a, Exec ex = Exec::parallel);
bool gumm_check(const AlgebraPtr& a, Exec ex = Exec::parallel);

struct Permutability {
  bool permute2 = false;  // SR == RS
  bool permute3 = false;  // RSR == SRS
};
Permutability permutability(const Congruence& r, const Congruence& s);

struct PermutabilityScan {
  bool all2 = true, all3 = true;
  std::optional<std::pair<Partition, Partition>> witness2, witness3;
};
PermutabilityScan permutability_scan(const CongruenceLattice& l, Exec ex = Exec::parallel);

struct BournResult {
  bool sl_holds = true;       // recorded hypothesis
  bool counterexample = false;
  // witness triple (R, S, T): RS = SR, R^S <= T <= R, yet TS != ST
  std::optional<std::array<Partition, 3>> witness;
};
BournResult bourn_scan(const CongruenceLattice& l, Exec ex = Exec::parallel);

}  // namespace ua
