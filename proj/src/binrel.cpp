#include "ua/binrel.hpp"

#include <bit>

namespace ua {

BinRel::BinRel(int src_size, int tgt_size)
    : src_(src_size), tgt_(tgt_size), words_((tgt_size + 63) / 64) {
  if (src_ <= 0 || tgt_ <= 0) throw InputError("relation: carrier sizes must be positive");
  bits_.assign(static_cast<size_t>(src_) * words_, 0);
}

BinRel BinRel::identity(int n) {
  BinRel r(n, n);
  for (int i = 0; i < n; ++i) r.set(i, i);
  return r;
}

BinRel BinRel::full(int src_size, int tgt_size) {
  BinRel r(src_size, tgt_size);
  for (int a = 0; a < src_size; ++a)
    for (int b = 0; b < tgt_size; ++b) r.set(a, b);
  return r;
}

BinRel BinRel::from_pairs(int src_size, int tgt_size,
                          const std::vector<std::pair<int, int>>& pairs) {
  BinRel r(src_size, tgt_size);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= src_size || b < 0 || b >= tgt_size)
      throw InputError("relation: pair out of range");
    r.set(a, b);
  }
  return r;
}

int64_t BinRel::count() const {
  int64_t c = 0;
  for (uint64_t w : bits_) c += std::popcount(w);
  return c;
}

std::vector<std::pair<int, int>> BinRel::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < src_; ++a)
    for (int b = 0; b < tgt_; ++b)
      if (at(a, b)) out.emplace_back(a, b);
  return out;
}

bool BinRel::reflexive() const {
  if (!square()) return false;
  for (int a = 0; a < src_; ++a)
    if (!at(a, a)) return false;
  return true;
}

bool BinRel::symmetric() const {
  if (!square()) return false;
  for (int a = 0; a < src_; ++a)
    for (int b = a + 1; b < tgt_; ++b)
      if (at(a, b) != at(b, a)) return false;
  return true;
}

bool BinRel::transitive() const {
  if (!square()) return false;
  return rel_leq(compose(*this, *this), *this);
}

BinRel of_hom(const Homomorphism& f) {
  BinRel r(f.source()->size(), f.target()->size());
  for (int a = 0; a < f.source()->size(); ++a) r.set(a, f(a));
  return r;
}

BinRel of_hom_op(const Homomorphism& f) { return opposite(of_hom(f)); }

BinRel opposite(const BinRel& r) {
  BinRel o(r.tgt_size(), r.src_size());
  for (int a = 0; a < r.src_size(); ++a)
    for (int b = 0; b < r.tgt_size(); ++b)
      if (r.at(a, b)) o.set(b, a);
  return o;
}

BinRel compose(const BinRel& r, const BinRel& s) {
  if (r.tgt_size() != s.src_size())
    throw InputError("relation compose: inner sizes differ (" +
                     std::to_string(r.tgt_size()) + " vs " + std::to_string(s.src_size()) +
                     ")");
  BinRel out(r.src_size(), s.tgt_size());
  const int w = out.words();
  for (int a = 0; a < r.src_size(); ++a) {
    uint64_t* oa = out.row(a);
    for (int b = 0; b < r.tgt_size(); ++b)
      if (r.at(a, b)) {
        const uint64_t* sb = s.row(b);
        for (int i = 0; i < w; ++i) oa[i] |= sb[i];
      }
  }
  return out;
}

static void require_same_shape(const BinRel& r, const BinRel& s, const char* what) {
  if (r.src_size() != s.src_size() || r.tgt_size() != s.tgt_size())
    throw InputError(std::string(what) + ": shape mismatch");
}

BinRel rel_meet(const BinRel& r, const BinRel& s) {
  require_same_shape(r, s, "meet");
  BinRel out(r.src_size(), r.tgt_size());
  for (int a = 0; a < r.src_size(); ++a) {
    uint64_t* oa = out.row(a);
    const uint64_t *ra = r.row(a), *sa = s.row(a);
    for (int i = 0; i < out.words(); ++i) oa[i] = ra[i] & sa[i];
  }
  return out;
}

BinRel rel_union(const BinRel& r, const BinRel& s) {
  require_same_shape(r, s, "union");
  BinRel out(r.src_size(), r.tgt_size());
  for (int a = 0; a < r.src_size(); ++a) {
    uint64_t* oa = out.row(a);
    const uint64_t *ra = r.row(a), *sa = s.row(a);
    for (int i = 0; i < out.words(); ++i) oa[i] = ra[i] | sa[i];
  }
  return out;
}

bool rel_leq(const BinRel& r, const BinRel& s) {
  require_same_shape(r, s, "leq");
  for (int a = 0; a < r.src_size(); ++a) {
    const uint64_t *ra = r.row(a), *sa = s.row(a);
    for (int i = 0; i < r.words(); ++i)
      if (ra[i] & ~sa[i]) return false;
  }
  return true;
}

BinRel transitive_closure(const BinRel& r) {
  if (!r.square()) throw InputError("transitive closure: relation not square");
  BinRel t = r;
  for (;;) {
    BinRel n = rel_union(t, compose(t, t));
    if (n == t) return t;
    t = std::move(n);
  }
}

BinRel eq_join(const BinRel& r, const BinRel& s) {
  if (!r.is_equivalence() || !s.is_equivalence())
    throw InputError("eq_join: inputs must be equivalence relations");
  require_same_shape(r, s, "eq_join");
  return transitive_closure(rel_union(r, s));
}

BinRel rel_image(const Homomorphism& f, const BinRel& r) {
  if (r.src_size() != f.source()->size() || !r.square())
    throw InputError("rel_image: relation must be square on the source");
  BinRel out(f.target()->size(), f.target()->size());
  for (int a = 0; a < r.src_size(); ++a)
    for (int b = 0; b < r.tgt_size(); ++b)
      if (r.at(a, b)) out.set(f(a), f(b));
  return out;
}

Lemma21Report verify_lemma21(const Homomorphism& f) {
  const BinRel g = of_hom(f);
  const BinRel go = opposite(g);
  Lemma21Report rep;
  rep.law1 = compose(compose(g, go), g) == g;
  rep.law2 = compose(compose(go, g), go) == go;
  rep.surjective = f.surjective();
  const bool ffo_is_id = compose(go, g) == BinRel::identity(f.target()->size());
  rep.epi_iff = (ffo_is_id == rep.surjective);
  return rep;
}

}  // namespace ua
