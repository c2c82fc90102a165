#include "ua/partition.hpp"

#include <algorithm>
#include <map>

namespace ua {

UnionFind::UnionFind(int n) : parent_(static_cast<size_t>(n)), rank_(static_cast<size_t>(n), 0) {
  for (int i = 0; i < n; ++i) parent_[static_cast<size_t>(i)] = i;
}

int UnionFind::find(int a) {
  int root = a;
  while (parent_[static_cast<size_t>(root)] != root) root = parent_[static_cast<size_t>(root)];
  while (parent_[static_cast<size_t>(a)] != root) {
    int next = parent_[static_cast<size_t>(a)];
    parent_[static_cast<size_t>(a)] = root;
    a = next;
  }
  return root;
}

bool UnionFind::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[static_cast<size_t>(a)] < rank_[static_cast<size_t>(b)]) std::swap(a, b);
  parent_[static_cast<size_t>(b)] = a;
  if (rank_[static_cast<size_t>(a)] == rank_[static_cast<size_t>(b)]) ++rank_[static_cast<size_t>(a)];
  return true;
}

Partition::Partition(std::vector<int> block_id) : block_(std::move(block_id)) {
  // renumber by first occurrence, which is the least element of each block
  std::vector<int> remap(block_.size(), -1);
  int next = 0;
  for (int& b : block_) {
    if (b < 0 || b >= static_cast<int>(block_.size()))
      throw InputError("partition: block id out of range");
    if (remap[static_cast<size_t>(b)] < 0) remap[static_cast<size_t>(b)] = next++;
    b = remap[static_cast<size_t>(b)];
  }
  blocks_ = next;
}

Partition Partition::discrete(int n) {
  std::vector<int> b(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) b[static_cast<size_t>(i)] = i;
  return Partition(std::move(b));
}

Partition Partition::indiscrete(int n) {
  return Partition(std::vector<int>(static_cast<size_t>(n), 0));
}

Partition Partition::from_union_find(UnionFind& uf) {
  std::vector<int> b(static_cast<size_t>(uf.size()));
  for (int i = 0; i < uf.size(); ++i) b[static_cast<size_t>(i)] = uf.find(i);
  return Partition(std::move(b));
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> b(static_cast<size_t>(n), -1);
  int id = 0;
  for (const auto& blk : blocks) {
    for (int x : blk) {
      if (x < 0 || x >= n) throw InputError("partition: element out of range");
      if (b[static_cast<size_t>(x)] >= 0) throw InputError("partition: element listed twice");
      b[static_cast<size_t>(x)] = id;
    }
    ++id;
  }
  for (int x = 0; x < n; ++x)
    if (b[static_cast<size_t>(x)] < 0)
      throw InputError("partition: element " + std::to_string(x) + " missing from blocks");
  return Partition(std::move(b));
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(static_cast<size_t>(blocks_));
  for (int i = 0; i < size(); ++i) out[static_cast<size_t>(block_[static_cast<size_t>(i)])].push_back(i);
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  if (size() != coarser.size()) throw InputError("partition: size mismatch");
  // same block here must imply same block there; compare block representatives
  std::vector<int> rep(static_cast<size_t>(blocks_), -1);
  for (int i = 0; i < size(); ++i) {
    int b = block_[static_cast<size_t>(i)];
    if (rep[static_cast<size_t>(b)] < 0)
      rep[static_cast<size_t>(b)] = coarser.block_of(i);
    else if (rep[static_cast<size_t>(b)] != coarser.block_of(i))
      return false;
  }
  return true;
}

Partition meet(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) throw InputError("partition meet: size mismatch");
  std::map<std::pair<int, int>, int> ids;
  std::vector<int> b(static_cast<size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) {
    auto key = std::make_pair(p.block_of(i), q.block_of(i));
    auto [it, fresh] = ids.emplace(key, static_cast<int>(ids.size()));
    b[static_cast<size_t>(i)] = it->second;
    (void)fresh;
  }
  return Partition(std::move(b));
}

Partition join(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) throw InputError("partition join: size mismatch");
  UnionFind uf(p.size());
  std::vector<int> pfirst(static_cast<size_t>(p.block_count()), -1);
  std::vector<int> qfirst(static_cast<size_t>(q.block_count()), -1);
  for (int i = 0; i < p.size(); ++i) {
    int& pf = pfirst[static_cast<size_t>(p.block_of(i))];
    if (pf < 0) pf = i; else uf.unite(pf, i);
    int& qf = qfirst[static_cast<size_t>(q.block_of(i))];
    if (qf < 0) qf = i; else uf.unite(qf, i);
  }
  return Partition::from_union_find(uf);
}

Partition partition_from_relation(const BinRel& equivalence) {
  if (!equivalence.is_equivalence())
    throw InputError("partition: relation is not an equivalence");
  const int n = equivalence.src_size();
  std::vector<int> b(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    if (b[static_cast<size_t>(i)] >= 0) continue;
    for (int j = i; j < n; ++j)
      if (equivalence.at(i, j)) b[static_cast<size_t>(j)] = i;
  }
  return Partition(std::move(b));
}

BinRel relation_from_partition(const Partition& p) {
  BinRel r(p.size(), p.size());
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (p.same(a, b)) r.set(a, b);
  return r;
}

void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& visit) {
  if (n <= 0) return;
  std::vector<int> a(static_cast<size_t>(n), 0);  // restricted growth string
  std::vector<int> maxv(static_cast<size_t>(n), 0);
  for (;;) {
    visit(a);
    int i = n - 1;
    while (i > 0 && a[static_cast<size_t>(i)] == maxv[static_cast<size_t>(i - 1)] + 1) --i;
    if (i == 0) break;
    ++a[static_cast<size_t>(i)];
    maxv[static_cast<size_t>(i)] = std::max(maxv[static_cast<size_t>(i - 1)], a[static_cast<size_t>(i)]);
    for (int j = i + 1; j < n; ++j) {
      a[static_cast<size_t>(j)] = 0;
      maxv[static_cast<size_t>(j)] = maxv[static_cast<size_t>(i)];
    }
  }
}

}  // namespace ua
