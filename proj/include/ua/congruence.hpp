#pragma once

#include <array>
#include <optional>

#include "ua/exec.hpp"
#include "ua/partition.hpp"

namespace ua {

struct Congruence {
  AlgebraPtr algebra;
  Partition part;
};

bool is_congruence(const FiniteAlgebra& a, const Partition& p);

Congruence kernel_pair(const Homomorphism& f);

struct QuotientResult {
  AlgebraPtr algebra;  // blocks indexed by least representative, ascending
  Homomorphism proj;
};
QuotientResult quotient(const AlgebraPtr& a, const Congruence& theta);

Congruence principal_congruence(const AlgebraPtr& a, int x, int y);
Congruence congruence_generated(const AlgebraPtr& a,
                                const std::vector<std::pair<int, int>>& pairs);

Congruence cong_meet(const Congruence& a, const Congruence& b);
Congruence cong_join(const Congruence& a, const Congruence& b);

class CongruenceLattice {
 public:
  // elems are deduplicated, sorted by block-id vector, and the order/meet/
  // join tables are precomputed.
  CongruenceLattice(AlgebraPtr algebra, std::vector<Partition> elems);

  const AlgebraPtr& algebra() const { return algebra_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const Partition& at(int i) const { return elems_[static_cast<size_t>(i)]; }
  const std::vector<Partition>& elements() const { return elems_; }
  int index_of(const Partition& p) const;  // -1 when absent

  bool leq(int i, int j) const { return leq_[static_cast<size_t>(i) * elems_.size() + j]; }
  int meet(int i, int j) const { return meet_[static_cast<size_t>(i) * elems_.size() + j]; }
  int join(int i, int j) const { return join_[static_cast<size_t>(i) * elems_.size() + j]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

 private:
  AlgebraPtr algebra_;
  std::vector<Partition> elems_;
  std::vector<char> leq_;
  std::vector<int> meet_, join_;
  int bottom_ = -1, top_ = -1;
};

// Primary enumeration: joins of principal congruences, closed to fixpoint.
CongruenceLattice all_congruences(const AlgebraPtr& a);

// Independent oracle: filter all partitions by compatibility.  Intended for
// carriers up to ~8 (Bell(8) = 4140); larger carriers are the caller's risk.
std::vector<Partition> brute_force_congruences(const AlgebraPtr& a,
                                               Exec ex = Exec::parallel);

struct ModularityResult {
  bool modular = true;
  // witness (x, y, z) with x <= z but x v (y ^ z) != (x v y) ^ z
  std::optional<std::array<int, 3>> witness;
};
ModularityResult is_modular(const CongruenceLattice& l);

}  // namespace ua
