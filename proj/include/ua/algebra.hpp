#pragma once

// Finite algebras presented by total operation tables on {0..n-1}.

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ua/errors.hpp"

namespace ua {

struct OpSig {
  std::string symbol;
  int arity = 0;
  friend bool operator==(const OpSig&, const OpSig&) = default;
};

class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<OpSig> ops);

  static const Signature& group();    // "*"/2, "inv"/1, "e"/0
  static const Signature& lattice();  // "meet"/2, "join"/2
  static const Signature& none();     // bare sets

  int op_count() const { return static_cast<int>(ops_.size()); }
  const OpSig& op(int i) const { return ops_[static_cast<size_t>(i)]; }
  const std::vector<OpSig>& ops() const { return ops_; }
  bool has_constants() const;
  int find(const std::string& symbol) const;  // -1 if absent

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<OpSig> ops_;
};

// Flat index of a k-tuple into an n^k table, most significant argument first.
inline size_t table_index(int n, std::span<const int> args) {
  size_t idx = 0;
  for (int a : args) idx = idx * static_cast<size_t>(n) + static_cast<size_t>(a);
  return idx;
}

// Visits all k-tuples over [0,n) in lexicographic order.
template <class F>
void for_each_tuple(int n, int k, F&& visit) {
  std::vector<int> t(static_cast<size_t>(k), 0);
  if (k == 0) {
    visit(std::span<const int>(t.data(), 0));
    return;
  }
  if (n <= 0) return;
  for (;;) {
    visit(std::span<const int>(t.data(), t.size()));
    int i = k - 1;
    while (i >= 0 && t[static_cast<size_t>(i)] == n - 1) t[static_cast<size_t>(i--)] = 0;
    if (i < 0) break;
    ++t[static_cast<size_t>(i)];
  }
}

class FiniteAlgebra {
 public:
  FiniteAlgebra(std::string name, int size, Signature sig,
                std::vector<std::vector<int>> tables);

  const std::string& name() const { return name_; }
  int size() const { return size_; }
  const Signature& signature() const { return sig_; }

  int eval(int op, std::span<const int> args) const {
    return tables_[static_cast<size_t>(op)][table_index(size_, args)];
  }
  const std::vector<int>& table(int op) const { return tables_[static_cast<size_t>(op)]; }

  // Structural identity; names are ignored.
  bool same_structure(const FiniteAlgebra& other) const {
    return size_ == other.size_ && sig_ == other.sig_ && tables_ == other.tables_;
  }

  bool is_group() const;    // group signature and the axioms hold
  bool is_lattice() const;  // lattice signature and the axioms hold

  // Group accessors; only meaningful when signature() == Signature::group().
  int group_mul(int a, int b) const {
    return tables_[0][static_cast<size_t>(a) * static_cast<size_t>(size_) +
                      static_cast<size_t>(b)];
  }
  int group_inv(int a) const { return tables_[1][static_cast<size_t>(a)]; }
  int group_identity() const { return tables_[2][0]; }

 private:
  std::string name_;
  int size_;
  Signature sig_;
  std::vector<std::vector<int>> tables_;
};

using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

AlgebraPtr make_algebra(std::string name, int size, Signature sig,
                        std::vector<std::vector<int>> tables);

// Test-corpus builders.  Group and lattice builders verify their axioms at
// construction time; a failure there is a defect, reported as logic_error.
AlgebraPtr cyclic_group(int n);
AlgebraPtr dihedral_group(int n);  // order 2n, n >= 1
AlgebraPtr symmetric_group(int n);  // n <= 4
AlgebraPtr quaternion_group_8();
AlgebraPtr bare_set(int n);
AlgebraPtr chain_lattice(int n);
AlgebraPtr diamond_m3();
AlgebraPtr pentagon_n5();

// Plain product algebra with pairs encoded as a*|B|+b.
AlgebraPtr product_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

}  // namespace ua
