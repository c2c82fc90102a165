#include "ua/hom.hpp"

#include <algorithm>
#include <set>

namespace ua {

Homomorphism::Homomorphism(AlgebraPtr source, AlgebraPtr target, std::vector<int> map)
    : src_(std::move(source)), tgt_(std::move(target)), map_(std::move(map)) {
  if (static_cast<int>(map_.size()) != src_->size())
    throw InputError("hom: map length " + std::to_string(map_.size()) +
                     " does not match source size " + std::to_string(src_->size()));
  for (int v : map_)
    if (v < 0 || v >= tgt_->size()) throw InputError("hom: image value out of range");
}

Homomorphism Homomorphism::identity(AlgebraPtr a) {
  std::vector<int> m(static_cast<size_t>(a->size()));
  for (size_t i = 0; i < m.size(); ++i) m[i] = static_cast<int>(i);
  return Homomorphism(a, a, std::move(m));
}

bool is_homomorphism(const FiniteAlgebra& src, const FiniteAlgebra& tgt,
                     std::span<const int> map) {
  if (src.signature() != tgt.signature()) return false;
  if (static_cast<int>(map.size()) != src.size()) return false;
  const auto& sig = src.signature();
  for (int op = 0; op < sig.op_count(); ++op) {
    const int k = sig.op(op).arity;
    bool ok = true;
    std::vector<int> img(static_cast<size_t>(k));
    for_each_tuple(src.size(), k, [&](std::span<const int> args) {
      if (!ok) return;
      for (int i = 0; i < k; ++i) img[static_cast<size_t>(i)] = map[static_cast<size_t>(args[static_cast<size_t>(i)])];
      if (map[static_cast<size_t>(src.eval(op, args))] != tgt.eval(op, img)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

bool Homomorphism::valid() const { return is_homomorphism(*src_, *tgt_, map_); }

const Homomorphism& Homomorphism::checked() const {
  if (!valid())
    throw InputError("map " + src_->name() + " -> " + tgt_->name() +
                     " does not preserve the operations");
  return *this;
}

bool Homomorphism::surjective() const {
  std::vector<char> hit(static_cast<size_t>(tgt_->size()), 0);
  for (int v : map_) hit[static_cast<size_t>(v)] = 1;
  return std::find(hit.begin(), hit.end(), 0) == hit.end();
}

bool Homomorphism::injective() const {
  std::vector<char> hit(static_cast<size_t>(tgt_->size()), 0);
  for (int v : map_) {
    if (hit[static_cast<size_t>(v)]) return false;
    hit[static_cast<size_t>(v)] = 1;
  }
  return true;
}

bool Homomorphism::is_identity() const {
  if (!src_->same_structure(*tgt_)) return false;
  for (size_t i = 0; i < map_.size(); ++i)
    if (map_[i] != static_cast<int>(i)) return false;
  return true;
}

Homomorphism compose(const Homomorphism& g, const Homomorphism& f) {
  if (!f.target()->same_structure(*g.source()))
    throw InputError("compose: middle objects differ (" + f.target()->name() + " vs " +
                     g.source()->name() + ")");
  std::vector<int> m(f.map().size());
  for (size_t i = 0; i < m.size(); ++i) m[i] = g(f(static_cast<int>(i)));
  return Homomorphism(f.source(), g.target(), std::move(m));
}

ProductResult product(const AlgebraPtr& a, const AlgebraPtr& b) {
  auto p = product_algebra(a, b);
  const int nb = b->size();
  std::vector<int> m1(static_cast<size_t>(p->size())), m2(static_cast<size_t>(p->size()));
  for (int i = 0; i < p->size(); ++i) {
    m1[static_cast<size_t>(i)] = i / nb;
    m2[static_cast<size_t>(i)] = i % nb;
  }
  return {p, Homomorphism(p, a, std::move(m1)), Homomorphism(p, b, std::move(m2))};
}

Homomorphism pair_into_product(const ProductResult& p, const Homomorphism& g1,
                               const Homomorphism& g2) {
  if (!g1.source()->same_structure(*g2.source()))
    throw InputError("pairing: the two maps have different sources");
  if (!g1.target()->same_structure(*p.proj1.target()) ||
      !g2.target()->same_structure(*p.proj2.target()))
    throw InputError("pairing: targets do not match the product factors");
  const int nb = p.proj2.target()->size();
  std::vector<int> m(g1.map().size());
  for (size_t i = 0; i < m.size(); ++i)
    m[i] = g1(static_cast<int>(i)) * nb + g2(static_cast<int>(i));
  return Homomorphism(g1.source(), p.algebra, std::move(m));
}

SubalgebraResult subalgebra_on(const AlgebraPtr& a, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty()) throw InputError("subalgebra: empty carrier");
  const int m = static_cast<int>(elements.size());
  std::vector<int> pos(static_cast<size_t>(a->size()), -1);
  for (int i = 0; i < m; ++i) pos[static_cast<size_t>(elements[static_cast<size_t>(i)])] = i;
  const auto& sig = a->signature();
  std::vector<std::vector<int>> tables;
  for (int op = 0; op < sig.op_count(); ++op) {
    const int k = sig.op(op).arity;
    size_t sz = 1;
    for (int i = 0; i < k; ++i) sz *= static_cast<size_t>(m);
    std::vector<int> t(sz);
    std::vector<int> big(static_cast<size_t>(k));
    size_t idx = 0;
    bool closed = true;
    for_each_tuple(m, k, [&](std::span<const int> args) {
      for (int i = 0; i < k; ++i) big[static_cast<size_t>(i)] = elements[static_cast<size_t>(args[static_cast<size_t>(i)])];
      const int out = pos[static_cast<size_t>(a->eval(op, big))];
      if (out < 0) closed = false;
      t[idx++] = out < 0 ? 0 : out;
    });
    if (!closed) throw InputError("subalgebra: carrier not closed under '" + sig.op(op).symbol + "'");
    tables.push_back(std::move(t));
  }
  auto sub = make_algebra(a->name() + "|sub", m, sig, std::move(tables));
  return {sub, Homomorphism(sub, a, std::move(elements))};
}

SubalgebraResult subalgebra_generated(const AlgebraPtr& a, std::span<const int> seed) {
  const auto& sig = a->signature();
  std::vector<char> in(static_cast<size_t>(a->size()), 0);
  for (int s : seed) {
    if (s < 0 || s >= a->size()) throw InputError("subalgebra: seed element out of range");
    in[static_cast<size_t>(s)] = 1;
  }
  if (seed.empty() && !sig.has_constants())
    throw InputError("subalgebra: empty seed with no constants");
  // grow to the least closed superset
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> members;
    for (int i = 0; i < a->size(); ++i)
      if (in[static_cast<size_t>(i)]) members.push_back(i);
    for (int op = 0; op < sig.op_count(); ++op) {
      const int k = sig.op(op).arity;
      std::vector<int> big(static_cast<size_t>(k));
      for_each_tuple(static_cast<int>(members.size()), k, [&](std::span<const int> args) {
        for (int i = 0; i < k; ++i) big[static_cast<size_t>(i)] = members[static_cast<size_t>(args[static_cast<size_t>(i)])];
        const int out = a->eval(op, big);
        if (!in[static_cast<size_t>(out)]) {
          in[static_cast<size_t>(out)] = 1;
          grew = true;
        }
      });
    }
  }
  std::vector<int> elems;
  for (int i = 0; i < a->size(); ++i)
    if (in[static_cast<size_t>(i)]) elems.push_back(i);
  return subalgebra_on(a, std::move(elems));
}

ImageFactorization image_factorization(const Homomorphism& f) {
  std::vector<int> img;
  {
    std::set<int> s(f.map().begin(), f.map().end());
    img.assign(s.begin(), s.end());
  }
  auto sub = subalgebra_on(f.target(), img);
  std::vector<int> rank(static_cast<size_t>(f.target()->size()), -1);
  const auto& incl = sub.inclusion.map();
  for (size_t i = 0; i < incl.size(); ++i) rank[static_cast<size_t>(incl[i])] = static_cast<int>(i);
  std::vector<int> pm(f.map().size());
  for (size_t i = 0; i < pm.size(); ++i) pm[i] = rank[static_cast<size_t>(f.map()[i])];
  return {Homomorphism(f.source(), sub.algebra, std::move(pm)), sub.inclusion};
}

SplitEpi make_split_epi(Homomorphism epi, Homomorphism section) {
  if (!section.source()->same_structure(*epi.target()) ||
      !section.target()->same_structure(*epi.source()))
    throw InputError("split epi: section endpoints do not match");
  if (!compose(epi, section).is_identity())
    throw InputError("split epi: epi o section is not the identity");
  if (!epi.surjective()) throw InputError("split epi: epi is not surjective");
  return {std::move(epi), std::move(section)};
}

std::vector<int> generating_sequence(const FiniteAlgebra& a) {
  const auto& sig = a.signature();
  std::vector<char> in(static_cast<size_t>(a.size()), 0);
  auto close = [&]() {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> members;
      for (int i = 0; i < a.size(); ++i)
        if (in[static_cast<size_t>(i)]) members.push_back(i);
      for (int op = 0; op < sig.op_count(); ++op) {
        const int k = sig.op(op).arity;
        std::vector<int> big(static_cast<size_t>(k));
        for_each_tuple(static_cast<int>(members.size()), k, [&](std::span<const int> args) {
          for (int i = 0; i < k; ++i) big[static_cast<size_t>(i)] = members[static_cast<size_t>(args[static_cast<size_t>(i)])];
          const int out = a.eval(op, big);
          if (!in[static_cast<size_t>(out)]) {
            in[static_cast<size_t>(out)] = 1;
            grew = true;
          }
        });
      }
    }
  };
  close();  // constants
  std::vector<int> gens;
  for (int x = 0; x < a.size(); ++x) {
    if (in[static_cast<size_t>(x)]) continue;
    gens.push_back(x);
    in[static_cast<size_t>(x)] = 1;
    close();
  }
  return gens;
}

namespace {

// Partial-map propagation: derives forced images of everything an assigned
// set generates; returns false on a conflict with the operation tables.
bool propagate(const FiniteAlgebra& A, const FiniteAlgebra& B, std::vector<int>& img) {
  const auto& sig = A.signature();
  bool grew = true;
  while (grew) {
    grew = false;
    for (int op = 0; op < sig.op_count(); ++op) {
      const int k = sig.op(op).arity;
      std::vector<int> bi(static_cast<size_t>(k));
      bool conflict = false;
      for_each_tuple(A.size(), k, [&](std::span<const int> args) {
        if (conflict) return;
        for (int i = 0; i < k; ++i) {
          const int v = img[static_cast<size_t>(args[static_cast<size_t>(i)])];
          if (v < 0) return;
          bi[static_cast<size_t>(i)] = v;
        }
        const int out = A.eval(op, args);
        const int val = B.eval(op, bi);
        int& slot = img[static_cast<size_t>(out)];
        if (slot < 0) {
          slot = val;
          grew = true;
        } else if (slot != val) {
          conflict = true;
        }
      });
      if (conflict) return false;
    }
  }
  return true;
}

struct HomSearch {
  const AlgebraPtr& A;
  const AlgebraPtr& B;
  const std::function<bool(const Homomorphism&)>& visit;
  const std::function<bool(int, int)>& allowed;
  std::vector<int> gens;
  bool stopped = false;

  void leaf(const std::vector<int>& img) {
    // with all generators assigned the propagation has fixed every element
    for (int v : img)
      if (v < 0) return;
    if (!is_homomorphism(*A, *B, img)) return;
    if (allowed) {
      for (size_t i = 0; i < img.size(); ++i)
        if (!allowed(static_cast<int>(i), img[i])) return;
    }
    if (!visit(Homomorphism(A, B, img))) stopped = true;
  }

  void dfs(size_t depth, const std::vector<int>& img) {
    if (stopped) return;
    if (depth == gens.size()) {
      leaf(img);
      return;
    }
    const int g = gens[depth];
    for (int v = 0; v < B->size() && !stopped; ++v) {
      if (allowed && !allowed(g, v)) continue;
      std::vector<int> next = img;
      next[static_cast<size_t>(g)] = v;
      if (!propagate(*A, *B, next)) continue;
      dfs(depth + 1, next);
    }
  }
};

}  // namespace

void enumerate_homs(const AlgebraPtr& a, const AlgebraPtr& b,
                    const std::function<bool(const Homomorphism&)>& visit,
                    const std::function<bool(int, int)>& allowed) {
  if (a->signature() != b->signature())
    throw InputError("hom enumeration: signature mismatch");
  HomSearch hs{a, b, visit, allowed, generating_sequence(*a)};
  std::vector<int> img(static_cast<size_t>(a->size()), -1);
  if (!propagate(*a, *b, img)) return;  // constants already clash
  hs.dfs(0, img);
}

std::vector<Homomorphism> all_homs(const AlgebraPtr& a, const AlgebraPtr& b) {
  std::vector<Homomorphism> out;
  enumerate_homs(a, b, [&](const Homomorphism& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

std::vector<Homomorphism> all_surjections(const AlgebraPtr& a, const AlgebraPtr& b) {
  std::vector<Homomorphism> out;
  if (b->size() > a->size()) return out;
  enumerate_homs(a, b, [&](const Homomorphism& h) {
    if (h.surjective()) out.push_back(h);
    return true;
  });
  return out;
}

std::optional<Homomorphism> find_section(const Homomorphism& f) {
  if (!f.surjective()) return std::nullopt;
  std::optional<Homomorphism> found;
  const auto& fm = f.map();
  enumerate_homs(
      f.target(), f.source(),
      [&](const Homomorphism& s) {
        found = s;
        return false;
      },
      [&](int y, int x) { return fm[static_cast<size_t>(x)] == y; });
  return found;
}

bool is_split(const Homomorphism& f) { return find_section(f).has_value(); }

bool isomorphic(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a->size() != b->size() || a->signature() != b->signature()) return false;
  bool found = false;
  enumerate_homs(a, b, [&](const Homomorphism& h) {
    if (h.bijective()) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace ua
