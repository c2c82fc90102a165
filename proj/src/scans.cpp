#include "ua/scans.hpp"

namespace ua {

DoubleRelation double_relation(const Congruence& r, const Congruence& s) {
  if (!r.algebra->same_structure(*s.algebra))
    throw InputError("double relation: different algebras");
  const int n = r.part.size();
  DoubleRelation d{relation_from_partition(r.part), relation_from_partition(s.part), {}};
  for (int x = 0; x < n; ++x)
    for (int t = 0; t < n; ++t) {
      if (!s.part.same(x, t)) continue;
      for (int y = 0; y < n; ++y) {
        if (!r.part.same(x, y)) continue;
        for (int z = 0; z < n; ++z)
          if (s.part.same(y, z) && r.part.same(t, z))
            d.quads.push_back({x, t, y, z});
      }
    }
  return d;
}

namespace {

// First quadruple in lexicographic (x, y, t, z) order violating the
// shifting configuration for (R, S, T); returns false and fills the slots.
bool sl_triple_ok(const Partition& R, const Partition& S, const Partition& T, int n,
                  int* wx, int* wy, int* wt, int* wz) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!R.same(x, y) || !T.same(x, y)) continue;
      for (int t = 0; t < n; ++t) {
        if (!S.same(x, t)) continue;
        for (int z = 0; z < n; ++z) {
          if (!S.same(y, z) || !R.same(t, z)) continue;
          if (!T.same(t, z)) {
            if (wx) *wx = x, *wy = y, *wt = t, *wz = z;
            return false;
          }
        }
      }
    }
  return true;
}

// Discrete-fibration condition for T square S -> R square S: membership of
// the pi1 edge (x,y) in T must match membership of the pi2 edge (t,z).
bool fib_triple_ok(const Partition& R, const Partition& S, const Partition& T, int n,
                   int* wx, int* wy, int* wt, int* wz) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!R.same(x, y)) continue;
      for (int t = 0; t < n; ++t) {
        if (!S.same(x, t)) continue;
        for (int z = 0; z < n; ++z) {
          if (!S.same(y, z) || !R.same(t, z)) continue;
          if (T.same(x, y) != T.same(t, z)) {
            if (wx) *wx = x, *wy = y, *wt = t, *wz = z;
            return false;
          }
        }
      }
    }
  return true;
}

struct TripleSpace {
  const CongruenceLattice& l;
  int m;
  explicit TripleSpace(const CongruenceLattice& ll) : l(ll), m(ll.size()) {}
  int64_t total() const { return static_cast<int64_t>(m) * m * m; }
  void decode(int64_t idx, int* i, int* j, int* k) const {
    *k = static_cast<int>(idx % m);
    idx /= m;
    *j = static_cast<int>(idx % m);
    *i = static_cast<int>(idx / m);
  }
};

ScanResult run_quad_scan(const CongruenceLattice& l, Exec ex, bool fibration) {
  const TripleSpace ts(l);
  const int n = l.algebra()->size();
  auto admissible = [&](int i, int j, int k) {
    if (!l.leq(l.meet(i, j), k)) return false;        // R^S <= T
    if (fibration && !l.leq(k, i)) return false;      // T <= R
    return true;
  };
  auto ok = [&](int64_t idx) {
    int i, j, k;
    ts.decode(idx, &i, &j, &k);
    if (!admissible(i, j, k)) return true;
    return fibration ? fib_triple_ok(l.at(i), l.at(j), l.at(k), n, nullptr, nullptr, nullptr, nullptr)
                     : sl_triple_ok(l.at(i), l.at(j), l.at(k), n, nullptr, nullptr, nullptr, nullptr);
  };
  const int64_t bad = first_fail(ex, ts.total(), ok);
  if (bad < 0) return {};
  int i, j, k;
  ts.decode(bad, &i, &j, &k);
  SLWitness w{l.at(i), l.at(j), l.at(k), -1, -1, -1, -1};
  if (fibration)
    fib_triple_ok(w.R, w.S, w.T, n, &w.x, &w.y, &w.t, &w.z);
  else
    sl_triple_ok(w.R, w.S, w.T, n, &w.x, &w.y, &w.t, &w.z);
  return {false, std::move(w)};
}

}  // namespace

bool is_discrete_fibration(const Congruence& t, const Congruence& s, const Congruence& r) {
  if (!t.algebra->same_structure(*s.algebra) || !t.algebra->same_structure(*r.algebra))
    throw HypothesisViolated("discrete fibration: congruences on different algebras");
  const Partition rs = meet(r.part, s.part);
  if (!rs.refines(t.part) || !t.part.refines(r.part))
    throw HypothesisViolated("discrete fibration: requires R^S <= T <= R");
  return fib_triple_ok(r.part, s.part, t.part, t.part.size(), nullptr, nullptr, nullptr,
                       nullptr);
}

ScanResult shifting_lemma(const CongruenceLattice& l, Exec ex) {
  return run_quad_scan(l, ex, false);
}

ScanResult gumm_fibrations(const CongruenceLattice& l, Exec ex) {
  return run_quad_scan(l, ex, true);
}

bool shifting_lemma_holds(const AlgebraPtr& a, Exec ex) {
  return shifting_lemma(all_congruences(a), ex).holds;
}

bool gumm_check(const AlgebraPtr& a, Exec ex) {
  return gumm_fibrations(all_congruences(a), ex).holds;
}

Permutability permutability(const Congruence& r, const Congruence& s) {
  if (!r.algebra->same_structure(*s.algebra))
    throw InputError("permutability: different algebras");
  const BinRel R = relation_from_partition(r.part);
  const BinRel S = relation_from_partition(s.part);
  const BinRel sr = compose(R, S);  // apply R first
  const BinRel rs = compose(S, R);
  Permutability p;
  p.permute2 = sr == rs;
  p.permute3 = compose(compose(R, S), R) == compose(compose(S, R), S);
  return p;
}

PermutabilityScan permutability_scan(const CongruenceLattice& l, Exec ex) {
  (void)ex;  // pair spaces are tiny; kept serial
  PermutabilityScan out;
  const int m = l.size();
  std::vector<BinRel> rel;
  rel.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) rel.push_back(relation_from_partition(l.at(i)));
  for (int i = 0; i < m && (out.all2 || out.all3); ++i)
    for (int j = 0; j < m; ++j) {
      const BinRel sr = compose(rel[static_cast<size_t>(i)], rel[static_cast<size_t>(j)]);
      const BinRel rs = compose(rel[static_cast<size_t>(j)], rel[static_cast<size_t>(i)]);
      if (out.all2 && !(sr == rs)) {
        out.all2 = false;
        out.witness2 = {l.at(i), l.at(j)};
      }
      if (out.all3) {
        const BinRel rsr = compose(sr, rel[static_cast<size_t>(i)]);
        const BinRel srs = compose(rs, rel[static_cast<size_t>(j)]);
        if (!(rsr == srs)) {
          out.all3 = false;
          out.witness3 = {l.at(i), l.at(j)};
        }
      }
      if (!out.all2 && !out.all3) break;
    }
  return out;
}

BournResult bourn_scan(const CongruenceLattice& l, Exec ex) {
  BournResult out;
  out.sl_holds = shifting_lemma(l, ex).holds;
  const int m = l.size();
  std::vector<BinRel> rel;
  rel.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) rel.push_back(relation_from_partition(l.at(i)));
  std::vector<char> permute2(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= i; ++j) {
      const bool p = compose(rel[static_cast<size_t>(i)], rel[static_cast<size_t>(j)]) ==
                     compose(rel[static_cast<size_t>(j)], rel[static_cast<size_t>(i)]);
      permute2[static_cast<size_t>(i) * m + j] = permute2[static_cast<size_t>(j) * m + i] = p;
    }
  const TripleSpace ts(l);
  auto ok = [&](int64_t idx) {
    int i, j, k;
    ts.decode(idx, &i, &j, &k);
    if (!permute2[static_cast<size_t>(i) * m + j]) return true;
    if (!l.leq(l.meet(i, j), k) || !l.leq(k, i)) return true;
    return compose(rel[static_cast<size_t>(k)], rel[static_cast<size_t>(j)]) ==
           compose(rel[static_cast<size_t>(j)], rel[static_cast<size_t>(k)]);
  };
  const int64_t bad = first_fail(ex, ts.total(), ok);
  if (bad >= 0) {
    int i, j, k;
    ts.decode(bad, &i, &j, &k);
    out.counterexample = true;
    out.witness = std::array<Partition, 3>{l.at(i), l.at(j), l.at(k)};
  }
  return out;
}

}  // namespace ua
