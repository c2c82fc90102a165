#include "ua/congruence.hpp"

#include <algorithm>
#include <set>

namespace ua {

bool is_congruence(const FiniteAlgebra& a, const Partition& p) {
  if (p.size() != a.size()) return false;
  const auto& sig = a.signature();
  const int n = a.size();
  for (int op = 0; op < sig.op_count(); ++op) {
    const int k = sig.op(op).arity;
    if (k == 0) continue;
    // compatibility one coordinate at a time
    std::vector<int> args(static_cast<size_t>(k));
    for (int pos = 0; pos < k; ++pos) {
      bool ok = true;
      for_each_tuple(n, k - 1, [&](std::span<const int> rest) {
        if (!ok) return;
        for (int x = 0; x < n && ok; ++x)
          for (int y = x + 1; y < n; ++y) {
            if (!p.same(x, y)) continue;
            int ri = 0;
            for (int i = 0; i < k; ++i)
              args[static_cast<size_t>(i)] = (i == pos) ? x : rest[static_cast<size_t>(ri++)];
            const int ox = a.eval(op, args);
            args[static_cast<size_t>(pos)] = y;
            if (!p.same(ox, a.eval(op, args))) {
              ok = false;
              break;
            }
          }
      });
      if (!ok) return false;
    }
  }
  return true;
}

Congruence kernel_pair(const Homomorphism& f) {
  const int n = f.source()->size();
  std::vector<int> first(static_cast<size_t>(f.target()->size()), -1);
  std::vector<int> b(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    int& fo = first[static_cast<size_t>(f(i))];
    if (fo < 0) fo = i;
    b[static_cast<size_t>(i)] = fo;
  }
  return {f.source(), Partition(std::move(b))};
}

QuotientResult quotient(const AlgebraPtr& a, const Congruence& theta) {
  if (!theta.algebra->same_structure(*a))
    throw InputError("quotient: congruence lives on a different algebra");
  if (!is_congruence(*a, theta.part))
    throw InputError("quotient: partition is not compatible with the operations");
  const Partition& p = theta.part;
  const int m = p.block_count();
  std::vector<int> rep(static_cast<size_t>(m), -1);
  for (int i = 0; i < a->size(); ++i)
    if (rep[static_cast<size_t>(p.block_of(i))] < 0) rep[static_cast<size_t>(p.block_of(i))] = i;
  const auto& sig = a->signature();
  std::vector<std::vector<int>> tables;
  for (int op = 0; op < sig.op_count(); ++op) {
    const int k = sig.op(op).arity;
    size_t sz = 1;
    for (int i = 0; i < k; ++i) sz *= static_cast<size_t>(m);
    std::vector<int> t(sz);
    std::vector<int> args(static_cast<size_t>(k));
    size_t idx = 0;
    for_each_tuple(m, k, [&](std::span<const int> blocks) {
      for (int i = 0; i < k; ++i) args[static_cast<size_t>(i)] = rep[static_cast<size_t>(blocks[static_cast<size_t>(i)])];
      t[idx++] = p.block_of(a->eval(op, args));
    });
    tables.push_back(std::move(t));
  }
  auto q = make_algebra(a->name() + "/~", m, sig, std::move(tables));
  return {q, Homomorphism(a, q, p.block_ids())};
}

Congruence congruence_generated(const AlgebraPtr& a,
                                const std::vector<std::pair<int, int>>& pairs) {
  const int n = a->size();
  const auto& sig = a->signature();
  UnionFind uf(n);
  std::vector<std::pair<int, int>> work;
  auto unite = [&](int x, int y) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw InputError("congruence generation: element out of range");
    if (uf.unite(x, y)) work.emplace_back(x, y);
  };
  for (auto [x, y] : pairs) unite(x, y);
  // close under the operations, one merged pair at a time
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    for (int op = 0; op < sig.op_count(); ++op) {
      const int k = sig.op(op).arity;
      if (k == 0) continue;
      std::vector<int> args(static_cast<size_t>(k));
      for (int pos = 0; pos < k; ++pos) {
        for_each_tuple(n, k - 1, [&](std::span<const int> rest) {
          int ri = 0;
          for (int i = 0; i < k; ++i)
            args[static_cast<size_t>(i)] = (i == pos) ? x : rest[static_cast<size_t>(ri++)];
          const int ox = a->eval(op, args);
          args[static_cast<size_t>(pos)] = y;
          const int oy = a->eval(op, args);
          if (uf.find(ox) != uf.find(oy)) {
            uf.unite(ox, oy);
            work.emplace_back(ox, oy);
          }
        });
      }
    }
  }
  return {a, Partition::from_union_find(uf)};
}

Congruence principal_congruence(const AlgebraPtr& a, int x, int y) {
  return congruence_generated(a, {{x, y}});
}

Congruence cong_meet(const Congruence& a, const Congruence& b) {
  if (!a.algebra->same_structure(*b.algebra))
    throw InputError("congruence meet: different algebras");
  return {a.algebra, meet(a.part, b.part)};
}

Congruence cong_join(const Congruence& a, const Congruence& b) {
  if (!a.algebra->same_structure(*b.algebra))
    throw InputError("congruence join: different algebras");
  Partition j = join(a.part, b.part);
  // the join of two congruences in the equivalence lattice is a congruence
  if (!is_congruence(*a.algebra, j))
    throw InputError("congruence join: result not compatible (inputs were not congruences?)");
  return {a.algebra, std::move(j)};
}

CongruenceLattice::CongruenceLattice(AlgebraPtr algebra, std::vector<Partition> elems)
    : algebra_(std::move(algebra)), elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  const size_t m = elems_.size();
  leq_.assign(m * m, 0);
  meet_.assign(m * m, -1);
  join_.assign(m * m, -1);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      leq_[i * m + j] = elems_[i].refines(elems_[j]) ? 1 : 0;
      int mi = index_of(ua::meet(elems_[i], elems_[j]));
      int ji = index_of(ua::join(elems_[i], elems_[j]));
      if (mi < 0 || ji < 0)
        throw InputError("congruence lattice: element set is not closed under meet/join");
      meet_[i * m + j] = mi;
      join_[i * m + j] = ji;
    }
  for (size_t i = 0; i < m; ++i) {
    if (elems_[i].block_count() == static_cast<int>(elems_[i].size())) bottom_ = static_cast<int>(i);
    if (elems_[i].block_count() == 1) top_ = static_cast<int>(i);
  }
}

int CongruenceLattice::index_of(const Partition& p) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
  if (it == elems_.end() || !(*it == p)) return -1;
  return static_cast<int>(it - elems_.begin());
}

CongruenceLattice all_congruences(const AlgebraPtr& a) {
  const int n = a->size();
  std::set<Partition> found;
  found.insert(Partition::discrete(n));
  std::vector<Partition> queue;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      Partition p = principal_congruence(a, x, y).part;
      if (found.insert(p).second) queue.push_back(std::move(p));
    }
  // close the set under joins
  while (!queue.empty()) {
    Partition p = std::move(queue.back());
    queue.pop_back();
    std::vector<Partition> snapshot(found.begin(), found.end());
    for (const auto& q : snapshot) {
      Partition j = join(p, q);
      if (found.insert(j).second) queue.push_back(std::move(j));
    }
  }
  return CongruenceLattice(a, std::vector<Partition>(found.begin(), found.end()));
}

std::vector<Partition> brute_force_congruences(const AlgebraPtr& a, Exec ex) {
  std::vector<Partition> all;
  for_each_partition(a->size(), [&](const std::vector<int>& rgs) { all.emplace_back(rgs); });
  std::vector<char> keep(all.size(), 0);
  scan_all(ex, static_cast<int64_t>(all.size()), [&](int64_t i) {
    keep[static_cast<size_t>(i)] = is_congruence(*a, all[static_cast<size_t>(i)]) ? 1 : 0;
    return true;
  });
  std::vector<Partition> out;
  for (size_t i = 0; i < all.size(); ++i)
    if (keep[i]) out.push_back(std::move(all[i]));
  return out;
}

ModularityResult is_modular(const CongruenceLattice& l) {
  const int m = l.size();
  for (int x = 0; x < m; ++x)
    for (int z = 0; z < m; ++z) {
      if (!l.leq(x, z)) continue;
      for (int y = 0; y < m; ++y)
        if (l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z))
          return {false, std::array<int, 3>{x, y, z}};
    }
  return {true, std::nullopt};
}

}  // namespace ua
