#include "ua/galois.hpp"

#include <algorithm>

#include "ua/corpus.hpp"

namespace ua {

namespace {

void require_group(const FiniteAlgebra& g, const char* what) {
  if (g.signature() != Signature::group())
    throw InputError(std::string(what) + ": '" + g.name() + "' is not a group algebra");
}

}  // namespace

bool is_abelian(const FiniteAlgebra& g) {
  require_group(g, "is_abelian");
  for (int a = 0; a < g.size(); ++a)
    for (int b = a + 1; b < g.size(); ++b)
      if (g.group_mul(a, b) != g.group_mul(b, a)) return false;
  return true;
}

std::vector<int> center(const FiniteAlgebra& g) {
  require_group(g, "center");
  std::vector<int> out;
  for (int z = 0; z < g.size(); ++z) {
    bool central = true;
    for (int x = 0; x < g.size() && central; ++x)
      central = g.group_mul(z, x) == g.group_mul(x, z);
    if (central) out.push_back(z);
  }
  return out;
}

SubalgebraResult commutator_subgroup(const AlgebraPtr& g) {
  require_group(*g, "commutator_subgroup");
  std::vector<int> seeds;
  for (int a = 0; a < g->size(); ++a)
    for (int b = 0; b < g->size(); ++b) {
      const int comm = g->group_mul(g->group_mul(a, b),
                                    g->group_mul(g->group_inv(a), g->group_inv(b)));
      seeds.push_back(comm);
    }
  return subalgebra_generated(g, seeds);
}

ReflectedObject Abelianization::reflect_obj(const AlgebraPtr& x) const {
  require_group(*x, "abelianization");
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < x->size(); ++a)
    for (int b = a + 1; b < x->size(); ++b) {
      const int ab = x->group_mul(a, b), ba = x->group_mul(b, a);
      if (ab != ba) pairs.emplace_back(ab, ba);
    }
  auto q = quotient(x, congruence_generated(x, pairs));
  return {q.algebra, std::move(q.proj)};
}

Homomorphism Abelianization::reflect_hom(const Homomorphism& f) const {
  const ReflectedObject rx = reflect_obj(f.source());
  const ReflectedObject ry = reflect_obj(f.target());
  std::vector<int> m(static_cast<size_t>(rx.object->size()), -1);
  for (int a = 0; a < f.source()->size(); ++a) {
    const int from = rx.unit(a), to = ry.unit(f(a));
    if (m[static_cast<size_t>(from)] >= 0 && m[static_cast<size_t>(from)] != to)
      throw InputError("reflect_hom: map does not descend to the reflections");
    m[static_cast<size_t>(from)] = to;
  }
  return Homomorphism(rx.object, ry.object, std::move(m));
}

ReflectedObject abelianize(const AlgebraPtr& g) { return Abelianization{}.reflect_obj(g); }

std::vector<int> kernel_elements(const Homomorphism& f) {
  require_group(*f.target(), "kernel_elements");
  const int e = f.target()->group_identity();
  std::vector<int> out;
  for (int a = 0; a < f.source()->size(); ++a)
    if (f(a) == e) out.push_back(a);
  return out;
}

Square naturality_square(const Reflection& refl, const Homomorphism& f) {
  ReflectedObject rx = refl.reflect_obj(f.source());
  ReflectedObject ry = refl.reflect_obj(f.target());
  Homomorphism rf = refl.reflect_hom(f);
  return make_square(std::move(rx.unit), f, std::move(rf), std::move(ry.unit));
}

bool birkhoff_pushout_check(const Reflection& refl, const Homomorphism& f) {
  return is_pushout(naturality_square(refl, f));
}

bool is_trivial_extension(const Reflection& refl, const Homomorphism& f) {
  if (!f.surjective()) throw HypothesisViolated("trivial extension: map not surjective");
  return is_pullback(naturality_square(refl, f));
}

bool is_normal_extension(const Reflection& refl, const Homomorphism& f) {
  if (!f.surjective()) throw HypothesisViolated("normal extension: map not surjective");
  const PullbackResult pb = pullback(f, f);
  return is_trivial_extension(refl, pb.proj1);
}

namespace {

bool kernel_central(const Homomorphism& f) {
  const FiniteAlgebra& x = *f.source();
  for (int k : kernel_elements(f))
    for (int a = 0; a < x.size(); ++a)
      if (x.group_mul(k, a) != x.group_mul(a, k)) return false;
  return true;
}

std::optional<Homomorphism> central_witness_search(const Reflection& refl,
                                                   const Homomorphism& f) {
  // bounded search: y ranges over catalog surjections onto the codomain
  for (const auto& z : galois_catalog()) {
    for (const auto& y : surjection_pool(z, f.target())) {
      const PullbackResult pb = pullback(f, y);
      // pulled-back extension along y is the second projection P -> Z
      if (is_trivial_extension(refl, pb.proj2)) return y;
    }
  }
  return std::nullopt;
}

}  // namespace

CentralVerdict is_central_extension(const Reflection& refl, const Homomorphism& f,
                                    CentralStrategy strategy) {
  if (!f.surjective()) throw HypothesisViolated("central extension: map not surjective");
  CentralVerdict v;
  switch (strategy) {
    case CentralStrategy::by_normal:
      v.by_normal = is_normal_extension(refl, f);
      break;
    case CentralStrategy::by_kernel_center:
      v.by_kernel_center = kernel_central(f);
      break;
    case CentralStrategy::witness_search:
      v.witness_searched = true;
      v.witness = central_witness_search(refl, f);
      break;
  }
  return v;
}

CentralVerdict classify_central(const Reflection& refl, const Homomorphism& f) {
  CentralVerdict v;
  v.by_normal = is_normal_extension(refl, f);
  v.by_kernel_center = kernel_central(f);
  v.witness_searched = true;
  v.witness = central_witness_search(refl, f);
  return v;
}

ExtensionReport classify_extension(const Reflection& refl, const Homomorphism& f) {
  ExtensionReport r;
  r.surjective = f.surjective();
  if (!r.surjective) return r;
  r.split = is_split(f);
  r.trivial = is_trivial_extension(refl, f);
  r.normal = is_normal_extension(refl, f);
  r.central = classify_central(refl, f);
  r.agree_normal_kernel_center = (*r.central.by_normal == *r.central.by_kernel_center);
  return r;
}

Cube extension_cube(const Reflection& refl, const Homomorphism& f, const Homomorphism& y) {
  if (!f.surjective() || !y.surjective())
    throw HypothesisViolated("extension cube: both maps must be surjective");
  if (!f.target()->same_structure(*y.target()))
    throw HypothesisViolated("extension cube: codomains differ");
  std::optional<Homomorphism> s = find_section(f);
  if (!s) throw HypothesisViolated("extension cube: f has no section");

  const PullbackResult pb = pullback(f, y);  // proj1: P->X, proj2: P->Z
  const Homomorphism& x = pb.proj1;
  const Homomorphism& phi = pb.proj2;
  const Homomorphism sigma =
      into_pullback(pb, compose(*s, y), Homomorphism::identity(y.source()));

  Cube c{
      /*top_back=*/x,
      /*top_left=*/refl.reflect_obj(pb.algebra).unit,
      /*top_right=*/refl.reflect_obj(f.source()).unit,
      /*top_front=*/refl.reflect_hom(x),
      /*bottom_back=*/y,
      /*bottom_left=*/refl.reflect_obj(y.source()).unit,
      /*bottom_right=*/refl.reflect_obj(f.target()).unit,
      /*bottom_front=*/refl.reflect_hom(y),
      /*vert_back_left=*/phi,
      /*vert_back_right=*/f,
      /*vert_front_left=*/refl.reflect_hom(phi),
      /*vert_front_right=*/refl.reflect_hom(f),
      /*sec_back_left=*/sigma,
      /*sec_back_right=*/*s,
      /*sec_front_left=*/refl.reflect_hom(sigma),
      /*sec_front_right=*/refl.reflect_hom(*s),
  };
  return make_cube(std::move(c));
}

CheckReport theorem53_check(const Reflection& refl, const Homomorphism& f) {
  CheckReport rep;
  rep.check = "central-split-trivial";
  const bool surjective = f.surjective();
  rep.add_hypothesis("surjective", surjective);
  std::optional<Homomorphism> s = surjective ? find_section(f) : std::nullopt;
  rep.add_hypothesis("split", s.has_value());
  const bool central = surjective && is_normal_extension(refl, f);
  rep.add_hypothesis("central", central,
                     central ? "" : "pullback of f along itself is not trivial");
  if (!rep.hypotheses_ok()) return rep;

  // a normal extension certifies centrality with witness y = f
  Cube cube = extension_cube(refl, f, f);
  CheckReport cc = cube_check(cube);
  rep.fact("witness-cube-hypotheses", cc.hypotheses_ok());
  rep.fact("witness-cube-conclusion", cc.verdict == "pass");
  rep.fact("trivial", is_trivial_extension(refl, f));
  if (rep.facts.contains("trivial") && rep.facts["trivial"].get<bool>() &&
      cc.verdict == "pass" && cc.hypotheses_ok())
    rep.verdict = "pass";
  else {
    rep.verdict = "fail";
    rep.witness = nlohmann::json{{"map", f.map()}};
  }
  return rep;
}

CheckReport cor54_scan(const Reflection& refl, Exec ex) {
  CheckReport rep;
  rep.check = "central-normal-agreement";
  const auto& fs = catalog_surjections();
  std::vector<char> agree(fs.size(), 0);
  scan_all(ex, static_cast<int64_t>(fs.size()), [&](int64_t i) {
    const Homomorphism& f = fs[static_cast<size_t>(i)];
    agree[static_cast<size_t>(i)] =
        is_normal_extension(refl, f) == kernel_central(f) ? 1 : 0;
    return true;
  });
  int disagreements = 0;
  nlohmann::json witness = nlohmann::json::array();
  for (size_t i = 0; i < fs.size(); ++i)
    if (!agree[i]) {
      ++disagreements;
      witness.push_back(nlohmann::json{{"source", fs[i].source()->name()},
                                       {"target", fs[i].target()->name()},
                                       {"map", fs[i].map()}});
    }
  rep.facts["surjections"] = fs.size();
  rep.facts["disagreements"] = disagreements;
  rep.verdict = disagreements == 0 ? "holds" : "disagreement";
  if (disagreements) rep.witness = witness;
  return rep;
}

CheckReport birkhoff_scan(const Reflection& refl, Exec ex) {
  CheckReport rep;
  rep.check = "unit-squares-pushouts";
  const auto& fs = catalog_surjections();
  const int64_t bad = first_fail(ex, static_cast<int64_t>(fs.size()), [&](int64_t i) {
    return birkhoff_pushout_check(refl, fs[static_cast<size_t>(i)]);
  });
  rep.facts["surjections"] = fs.size();
  rep.verdict = bad < 0 ? "holds" : "counterexample";
  if (bad >= 0)
    rep.witness = nlohmann::json{{"source", fs[static_cast<size_t>(bad)].source()->name()},
                                 {"target", fs[static_cast<size_t>(bad)].target()->name()},
                                 {"map", fs[static_cast<size_t>(bad)].map()}};
  return rep;
}

bool admissibility_check(const Reflection& refl, const Square& sq) {
  if (!is_pullback(sq)) throw HypothesisViolated("admissibility: square is not a pullback");
  if (!sq.right.surjective())
    throw HypothesisViolated("admissibility: right edge not surjective");
  if (!is_abelian(*sq.right.source()) || !is_abelian(*sq.right.target()))
    throw HypothesisViolated("admissibility: right edge is not between abelian groups");
  const Square reflected =
      make_square(refl.reflect_hom(sq.top), refl.reflect_hom(sq.left),
                  refl.reflect_hom(sq.right), refl.reflect_hom(sq.bottom));
  return is_pullback(reflected);
}

std::vector<Square> admissibility_squares(const Reflection&) {
  std::vector<Square> out;
  const auto cat = galois_catalog();
  std::vector<AlgebraPtr> abelians;
  for (const auto& g : cat)
    if (is_abelian(*g)) abelians.push_back(g);
  for (const auto& u : abelians)
    for (const auto& v : abelians) {
      if (v->size() >= u->size()) continue;  // proper surjections only
      for (const auto& w : surjection_pool(u, v))
        for (const auto& b : cat)
          for (const auto& m : hom_pool(b, v)) {
            const PullbackResult pb = pullback(w, m);  // proj1: A->U, proj2: A->B
            out.push_back(make_square(pb.proj1, pb.proj2, w, m));
          }
    }
  return out;
}

CheckReport admissibility_scan(const Reflection& refl, Exec ex) {
  CheckReport rep;
  rep.check = "reflector-preserves-pullbacks";
  const std::vector<Square> squares = admissibility_squares(refl);
  const int64_t bad = first_fail(ex, static_cast<int64_t>(squares.size()), [&](int64_t i) {
    return admissibility_check(refl, squares[static_cast<size_t>(i)]);
  });
  rep.facts["squares"] = squares.size();
  rep.verdict = bad < 0 ? "holds" : "counterexample";
  if (bad >= 0)
    rep.witness = nlohmann::json{
        {"right-source", squares[static_cast<size_t>(bad)].right.source()->name()},
        {"bottom-source", squares[static_cast<size_t>(bad)].bottom.source()->name()}};
  return rep;
}

std::vector<Cube> cube_catalog(const Reflection& refl) {
  std::vector<Cube> out;
  // projection S3xZ2 -> S3 with the identity witness
  {
    const auto dom = builtin("S3xZ2");
    const auto s3 = builtin("S3");
    std::vector<int> proj(static_cast<size_t>(dom->size()));
    for (int i = 0; i < dom->size(); ++i) proj[static_cast<size_t>(i)] = i / 2;
    Homomorphism f(dom, s3, std::move(proj));
    f.checked();
    out.push_back(extension_cube(refl, f, Homomorphism::identity(s3)));
    out.push_back(extension_cube(refl, f, f));  // and the self-pullback witness
  }
  // V4 -> Z2 first projection, witness y = f
  {
    const auto v4 = builtin("V4");
    const auto z2 = builtin("Z2");
    Homomorphism f(v4, z2, {0, 0, 1, 1});
    f.checked();
    out.push_back(extension_cube(refl, f, f));
  }
  // Z6 -> Z3, witness y = f
  {
    const auto z6 = builtin("Z6");
    const auto z3 = builtin("Z3");
    Homomorphism f(z6, z3, {0, 1, 2, 0, 1, 2});
    f.checked();
    out.push_back(extension_cube(refl, f, f));
  }
  // Z2^3 -> Z2 sum of coordinates, witness y = f
  {
    const auto e8 = builtin("Z2xZ2xZ2");
    const auto z2 = builtin("Z2");
    std::vector<int> m(8);
    for (int i = 0; i < 8; ++i) m[static_cast<size_t>(i)] = ((i >> 2) ^ (i >> 1) ^ i) & 1;
    Homomorphism f(e8, z2, std::move(m));
    f.checked();
    out.push_back(extension_cube(refl, f, f));
  }
  return out;
}

}  // namespace ua
