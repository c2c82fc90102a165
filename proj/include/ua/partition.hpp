#pragma once

// Partitions of {0..n-1} in canonical form: blocks numbered by their least
// element, in ascending order.

#include <compare>
#include <vector>

#include "ua/binrel.hpp"
#include "ua/errors.hpp"

namespace ua {

class UnionFind {
 public:
  explicit UnionFind(int n);
  int find(int a);
  bool unite(int a, int b);  // true when two classes were merged
  int size() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

class Partition {
 public:
  explicit Partition(std::vector<int> block_id);  // renumbers canonically
  static Partition discrete(int n);    // all singletons
  static Partition indiscrete(int n);  // one block
  static Partition from_union_find(UnionFind& uf);
  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

  int size() const { return static_cast<int>(block_.size()); }
  int block_count() const { return blocks_; }
  int block_of(int a) const { return block_[static_cast<size_t>(a)]; }
  bool same(int a, int b) const {
    return block_[static_cast<size_t>(a)] == block_[static_cast<size_t>(b)];
  }
  const std::vector<int>& block_ids() const { return block_; }
  std::vector<std::vector<int>> blocks() const;

  bool refines(const Partition& coarser) const;  // this <= coarser

  friend Partition meet(const Partition& p, const Partition& q);
  friend Partition join(const Partition& p, const Partition& q);

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.block_ == b.block_;
  }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.block_ <=> b.block_;
  }

 private:
  std::vector<int> block_;
  int blocks_ = 0;
};

Partition meet(const Partition& p, const Partition& q);
Partition join(const Partition& p, const Partition& q);

Partition partition_from_relation(const BinRel& equivalence);
BinRel relation_from_partition(const Partition& p);

// Visits all partitions of an n-set (as canonical block-id vectors) in
// restricted-growth order.
void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& visit);

}  // namespace ua
