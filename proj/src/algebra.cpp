#include "ua/algebra.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ua {

Signature::Signature(std::vector<OpSig> ops) : ops_(std::move(ops)) {
  std::set<std::string> seen;
  for (const auto& o : ops_) {
    if (o.arity < 0) throw InputError("signature: negative arity for '" + o.symbol + "'");
    if (!seen.insert(o.symbol).second)
      throw InputError("signature: duplicate symbol '" + o.symbol + "'");
  }
}

const Signature& Signature::group() {
  static const Signature s{{{"*", 2}, {"inv", 1}, {"e", 0}}};
  return s;
}

const Signature& Signature::lattice() {
  static const Signature s{{{"meet", 2}, {"join", 2}}};
  return s;
}

const Signature& Signature::none() {
  static const Signature s{};
  return s;
}

bool Signature::has_constants() const {
  for (const auto& o : ops_)
    if (o.arity == 0) return true;
  return false;
}

int Signature::find(const std::string& symbol) const {
  for (size_t i = 0; i < ops_.size(); ++i)
    if (ops_[i].symbol == symbol) return static_cast<int>(i);
  return -1;
}

FiniteAlgebra::FiniteAlgebra(std::string name, int size, Signature sig,
                             std::vector<std::vector<int>> tables)
    : name_(std::move(name)), size_(size), sig_(std::move(sig)), tables_(std::move(tables)) {
  if (size_ <= 0) throw InputError("algebra '" + name_ + "': size must be positive");
  if (tables_.size() != static_cast<size_t>(sig_.op_count()))
    throw InputError("algebra '" + name_ + "': table count does not match signature");
  for (int op = 0; op < sig_.op_count(); ++op) {
    size_t expect = 1;
    for (int i = 0; i < sig_.op(op).arity; ++i) expect *= static_cast<size_t>(size_);
    const auto& t = tables_[static_cast<size_t>(op)];
    if (t.size() != expect)
      throw InputError("algebra '" + name_ + "': table for '" + sig_.op(op).symbol +
                       "' has wrong shape");
    for (int v : t)
      if (v < 0 || v >= size_)
        throw InputError("algebra '" + name_ + "': table entry out of range in '" +
                         sig_.op(op).symbol + "'");
  }
}

bool FiniteAlgebra::is_group() const {
  if (sig_ != Signature::group()) return false;
  const int n = size_;
  const int e = group_identity();
  for (int a = 0; a < n; ++a) {
    if (group_mul(e, a) != a || group_mul(a, e) != a) return false;
    if (group_mul(group_inv(a), a) != e || group_mul(a, group_inv(a)) != e) return false;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (group_mul(group_mul(a, b), c) != group_mul(a, group_mul(b, c))) return false;
  return true;
}

bool FiniteAlgebra::is_lattice() const {
  if (sig_ != Signature::lattice()) return false;
  const int n = size_;
  auto mt = [&](int a, int b) { return tables_[0][static_cast<size_t>(a) * n + b]; };
  auto jn = [&](int a, int b) { return tables_[1][static_cast<size_t>(a) * n + b]; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (mt(a, b) != mt(b, a) || jn(a, b) != jn(b, a)) return false;
      if (mt(a, jn(a, b)) != a || jn(a, mt(a, b)) != a) return false;  // absorption
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (mt(mt(a, b), c) != mt(a, mt(b, c))) return false;
        if (jn(jn(a, b), c) != jn(a, jn(b, c))) return false;
      }
  return true;
}

AlgebraPtr make_algebra(std::string name, int size, Signature sig,
                        std::vector<std::vector<int>> tables) {
  return std::make_shared<FiniteAlgebra>(std::move(name), size, std::move(sig),
                                         std::move(tables));
}

namespace {

AlgebraPtr make_group(std::string name, int n, const std::vector<int>& mul,
                      const std::vector<int>& inv, int e) {
  auto a = make_algebra(std::move(name), n, Signature::group(),
                        {mul, inv, std::vector<int>{e}});
  if (!a->is_group()) throw std::logic_error("group builder produced a non-group: " + a->name());
  return a;
}

AlgebraPtr make_lattice(std::string name, int n, const std::vector<int>& meet,
                        const std::vector<int>& join) {
  auto a = make_algebra(std::move(name), n, Signature::lattice(), {meet, join});
  if (!a->is_lattice())
    throw std::logic_error("lattice builder produced a non-lattice: " + a->name());
  return a;
}

// Lattice tables from an explicit order relation (must be a lattice order).
AlgebraPtr lattice_from_order(std::string name, int n,
                              const std::vector<std::vector<bool>>& le) {
  std::vector<int> meet(static_cast<size_t>(n) * n), join(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int m = -1, j = -1;
      for (int c = 0; c < n; ++c) {
        if (le[c][a] && le[c][b] && (m < 0 || le[m][c])) m = c;
        if (le[a][c] && le[b][c] && (j < 0 || le[c][j])) j = c;
      }
      if (m < 0 || j < 0) throw std::logic_error("order is not a lattice: " + name);
      meet[static_cast<size_t>(a) * n + b] = m;
      join[static_cast<size_t>(a) * n + b] = j;
    }
  return make_lattice(std::move(name), n, meet, join);
}

}  // namespace

AlgebraPtr cyclic_group(int n) {
  if (n < 1 || n > 256) throw InputError("cyclic_group: order out of range");
  std::vector<int> mul(static_cast<size_t>(n) * n), inv(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    inv[static_cast<size_t>(a)] = (n - a) % n;
    for (int b = 0; b < n; ++b) mul[static_cast<size_t>(a) * n + b] = (a + b) % n;
  }
  return make_group("Z" + std::to_string(n), n, mul, inv, 0);
}

AlgebraPtr dihedral_group(int n) {
  if (n < 1 || n > 32) throw InputError("dihedral_group: parameter out of range");
  // element j*n+i encodes r^i s^j; s r = r^-1 s
  const int sz = 2 * n;
  std::vector<int> mul(static_cast<size_t>(sz) * sz), inv(static_cast<size_t>(sz));
  auto enc = [&](int i, int j) { return j * n + ((i % n) + n) % n; };
  for (int j1 = 0; j1 < 2; ++j1)
    for (int i1 = 0; i1 < n; ++i1)
      for (int j2 = 0; j2 < 2; ++j2)
        for (int i2 = 0; i2 < n; ++i2) {
          const int i = j1 ? i1 - i2 : i1 + i2;
          mul[static_cast<size_t>(enc(i1, j1)) * sz + enc(i2, j2)] = enc(i, j1 ^ j2);
        }
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < n; ++i) inv[static_cast<size_t>(enc(i, j))] = j ? enc(i, 1) : enc(-i, 0);
  return make_group("D" + std::to_string(n), sz, mul, inv, 0);
}

AlgebraPtr symmetric_group(int n) {
  if (n < 1 || n > 4) throw InputError("symmetric_group: n must be in [1,4]");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int sz = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<int> mul(static_cast<size_t>(sz) * sz), inv(static_cast<size_t>(sz));
  for (int a = 0; a < sz; ++a) {
    std::vector<int> ia(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) ia[static_cast<size_t>(perms[a][i])] = i;
    inv[static_cast<size_t>(a)] = index_of(ia);
    for (int b = 0; b < sz; ++b) {
      std::vector<int> c(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)] = perms[a][perms[b][i]];
      mul[static_cast<size_t>(a) * sz + b] = index_of(c);
    }
  }
  return make_group("S" + std::to_string(n), sz, mul, inv, 0);
}

AlgebraPtr quaternion_group_8() {
  // 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
  auto axis = [](int x) { return x / 2; };  // 0:1, 1:i, 2:j, 3:k
  auto sign = [](int x) { return x % 2; };
  auto enc = [](int ax, int sg) { return ax * 2 + sg; };
  // unit table: units[a][b] = (axis, extra sign) of product of units a*b
  static const int prod_axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int prod_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  // i*j=k, j*k=i, k*i=j; reversed order negates; squares of i,j,k are -1
  std::vector<int> mul(64), inv(8);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ax = prod_axis[axis(a)][axis(b)];
      const int sg = (sign(a) + sign(b) + prod_sign[axis(a)][axis(b)]) % 2;
      mul[static_cast<size_t>(a) * 8 + b] = enc(ax, sg);
    }
  for (int a = 0; a < 8; ++a) inv[static_cast<size_t>(a)] = axis(a) == 0 ? a : enc(axis(a), 1 - sign(a));
  return make_group("Q8", 8, mul, inv, 0);
}

AlgebraPtr bare_set(int n) {
  if (n < 1 || n > 64) throw InputError("bare_set: size out of range");
  return make_algebra("bare" + std::to_string(n), n, Signature::none(), {});
}

AlgebraPtr chain_lattice(int n) {
  if (n < 1 || n > 64) throw InputError("chain_lattice: size out of range");
  std::vector<int> meet(static_cast<size_t>(n) * n), join(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      meet[static_cast<size_t>(a) * n + b] = std::min(a, b);
      join[static_cast<size_t>(a) * n + b] = std::max(a, b);
    }
  return make_lattice("chain" + std::to_string(n), n, meet, join);
}

AlgebraPtr diamond_m3() {
  // 0 bottom, 1,2,3 atoms, 4 top
  std::vector<std::vector<bool>> le(5, std::vector<bool>(5, false));
  for (int a = 0; a < 5; ++a) le[a][a] = true;
  for (int a = 0; a < 5; ++a) le[0][a] = true, le[a][4] = true;
  return lattice_from_order("M3", 5, le);
}

AlgebraPtr pentagon_n5() {
  // 0 < 1 < 3 < 4 and 0 < 2 < 4, with 2 incomparable to 1 and 3
  std::vector<std::vector<bool>> le(5, std::vector<bool>(5, false));
  for (int a = 0; a < 5; ++a) le[a][a] = true;
  for (int a = 0; a < 5; ++a) le[0][a] = true, le[a][4] = true;
  le[1][3] = true;
  return lattice_from_order("N5", 5, le);
}

AlgebraPtr product_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a->signature() != b->signature())
    throw InputError("product: signature mismatch between '" + a->name() + "' and '" +
                     b->name() + "'");
  const int na = a->size(), nb = b->size(), n = na * nb;
  const auto& sig = a->signature();
  std::vector<std::vector<int>> tables;
  for (int op = 0; op < sig.op_count(); ++op) {
    const int k = sig.op(op).arity;
    size_t sz = 1;
    for (int i = 0; i < k; ++i) sz *= static_cast<size_t>(n);
    std::vector<int> t(sz);
    std::vector<int> xa(static_cast<size_t>(k)), xb(static_cast<size_t>(k));
    size_t idx = 0;
    for_each_tuple(n, k, [&](std::span<const int> args) {
      for (int i = 0; i < k; ++i) {
        xa[static_cast<size_t>(i)] = args[static_cast<size_t>(i)] / nb;
        xb[static_cast<size_t>(i)] = args[static_cast<size_t>(i)] % nb;
      }
      t[idx++] = a->eval(op, xa) * nb + b->eval(op, xb);
    });
    tables.push_back(std::move(t));
  }
  return make_algebra(a->name() + "x" + b->name(), n, sig, std::move(tables));
}

}  // namespace ua
