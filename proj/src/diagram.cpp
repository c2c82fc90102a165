#include "ua/diagram.hpp"

#include <algorithm>
#include <random>

#include "ua/corpus.hpp"
#include "ua/scans.hpp"

namespace ua {

namespace {

bool maps_equal(const Homomorphism& a, const Homomorphism& b) { return a == b; }

// In a variety of finite algebras "regular epi" means surjective; we admit
// group and lattice algebras (congruence-modular varieties) directly and fall
// back to a per-algebra shifting-lemma scan for small carriers.
bool modular_variety_member(const AlgebraPtr& a) {
  if (a->signature() == Signature::group()) return a->is_group();
  if (a->signature() == Signature::lattice()) return a->is_lattice();
  if (a->size() <= 12) return shifting_lemma_holds(a);
  return false;
}

BinRel kernel_rel(const Homomorphism& f) {
  return relation_from_partition(kernel_pair(f).part);
}

}  // namespace

Square make_square(Homomorphism top, Homomorphism left, Homomorphism right,
                   Homomorphism bottom, std::optional<Homomorphism> left_section,
                   std::optional<Homomorphism> right_section) {
  if (!maps_equal(compose(right, top), compose(bottom, left)))
    throw InputError("square does not commute");
  if (left_section) make_split_epi(left, *left_section);
  if (right_section) make_split_epi(right, *right_section);
  return {std::move(top),  std::move(left),         std::move(right),
          std::move(bottom), std::move(left_section), std::move(right_section)};
}

Rectangle make_rectangle(Square first, Square second) {
  if (!(second.left == first.right))
    throw InputError("rectangle: squares do not share the middle column");
  return {std::move(first), std::move(second)};
}

Square outer_square(const Rectangle& rect) {
  return make_square(compose(rect.second.top, rect.first.top), rect.first.left,
                     rect.second.right,
                     compose(rect.second.bottom, rect.first.bottom));
}

PairSubalgebra pair_subalgebra(const AlgebraPtr& a, const AlgebraPtr& b,
                               std::vector<std::pair<int, int>> universe,
                               std::string name) {
  if (a->signature() != b->signature())
    throw InputError("pair subalgebra: signature mismatch");
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  if (universe.empty()) throw InputError("pair subalgebra: empty carrier");
  const int m = static_cast<int>(universe.size());
  std::vector<int> index(static_cast<size_t>(a->size()) * b->size(), -1);
  auto flat = [&](int x, int z) { return static_cast<size_t>(x) * b->size() + z; };
  for (int i = 0; i < m; ++i) index[flat(universe[static_cast<size_t>(i)].first, universe[static_cast<size_t>(i)].second)] = i;
  const auto& sig = a->signature();
  std::vector<std::vector<int>> tables;
  for (int op = 0; op < sig.op_count(); ++op) {
    const int k = sig.op(op).arity;
    size_t sz = 1;
    for (int i = 0; i < k; ++i) sz *= static_cast<size_t>(m);
    std::vector<int> t(sz);
    std::vector<int> xa(static_cast<size_t>(k)), xb(static_cast<size_t>(k));
    size_t pos = 0;
    bool closed = true;
    for_each_tuple(m, k, [&](std::span<const int> args) {
      for (int i = 0; i < k; ++i) {
        xa[static_cast<size_t>(i)] = universe[static_cast<size_t>(args[static_cast<size_t>(i)])].first;
        xb[static_cast<size_t>(i)] = universe[static_cast<size_t>(args[static_cast<size_t>(i)])].second;
      }
      const int out = index[flat(a->eval(op, xa), b->eval(op, xb))];
      if (out < 0) closed = false;
      t[pos++] = out < 0 ? 0 : out;
    });
    if (!closed)
      throw InputError("pair subalgebra: universe not closed under '" + sig.op(op).symbol + "'");
    tables.push_back(std::move(t));
  }
  auto alg = make_algebra(std::move(name), m, sig, std::move(tables));
  std::vector<int> m1(static_cast<size_t>(m)), m2(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    m1[static_cast<size_t>(i)] = universe[static_cast<size_t>(i)].first;
    m2[static_cast<size_t>(i)] = universe[static_cast<size_t>(i)].second;
  }
  return {alg, Homomorphism(alg, a, std::move(m1)), Homomorphism(alg, b, std::move(m2))};
}

PullbackResult pullback(const Homomorphism& f, const Homomorphism& g) {
  if (!f.target()->same_structure(*g.target()))
    throw InputError("pullback: codomains differ");
  std::vector<std::pair<int, int>> universe;
  for (int x = 0; x < f.source()->size(); ++x)
    for (int z = 0; z < g.source()->size(); ++z)
      if (f(x) == g(z)) universe.emplace_back(x, z);
  if (universe.empty()) throw InputError("pullback: empty carrier");
  auto ps = pair_subalgebra(f.source(), g.source(), std::move(universe),
                            "pb(" + f.source()->name() + "," + g.source()->name() + ")");
  return {ps.algebra, std::move(ps.proj1), std::move(ps.proj2)};
}

Homomorphism into_pullback(const PullbackResult& pb, const Homomorphism& to1,
                           const Homomorphism& to2) {
  if (!to1.source()->same_structure(*to2.source()))
    throw InputError("into_pullback: cone legs have different sources");
  const int n = to1.source()->size();
  std::vector<int> m(static_cast<size_t>(n), -1);
  for (int c = 0; c < n; ++c) {
    for (int p = 0; p < pb.algebra->size(); ++p)
      if (pb.proj1(p) == to1(c) && pb.proj2(p) == to2(c)) {
        m[static_cast<size_t>(c)] = p;
        break;
      }
    if (m[static_cast<size_t>(c)] < 0)
      throw InputError("into_pullback: cone does not land in the pullback");
  }
  return Homomorphism(to1.source(), pb.algebra, std::move(m));
}

bool is_pullback(const Square& sq) {
  const int nx = sq.top.target()->size();
  const int nz = sq.left.target()->size();
  std::vector<char> hit(static_cast<size_t>(nx) * nz, 0);
  for (int p = 0; p < sq.top.source()->size(); ++p) {
    char& h = hit[static_cast<size_t>(sq.top(p)) * nz + sq.left(p)];
    if (h) return false;  // comparison map not injective
    h = 1;
  }
  for (int x = 0; x < nx; ++x)
    for (int z = 0; z < nz; ++z) {
      const bool in_canonical = sq.right(x) == sq.bottom(z);
      if (in_canonical != (hit[static_cast<size_t>(x) * nz + z] != 0)) return false;
    }
  return true;
}

static void require_surjective_edges(const Square& sq, const char* what) {
  if (!sq.top.surjective() || !sq.left.surjective() || !sq.right.surjective() ||
      !sq.bottom.surjective())
    throw HypothesisViolated(std::string(what) + ": all four edges must be surjective");
}

bool is_pushout(const Square& sq) {
  require_surjective_edges(sq, "pushout test");
  // with every edge surjective the square is a pushout exactly when the
  // right kernel pair is generated by the image of the left kernel pair
  const BinRel img = rel_image(sq.top, kernel_rel(sq.left));
  const Congruence gen = congruence_generated(sq.top.target(), img.pairs());
  return gen.part == kernel_pair(sq.right).part;
}

bool is_right_saturated(const Square& sq) {
  require_surjective_edges(sq, "right saturation test");
  const int nx = sq.top.target()->size();
  std::vector<char> covered(static_cast<size_t>(nx) * nx, 0);
  const int np = sq.top.source()->size();
  for (int p = 0; p < np; ++p)
    for (int q = 0; q < np; ++q)
      if (sq.left(p) == sq.left(q))
        covered[static_cast<size_t>(sq.top(p)) * nx + sq.top(q)] = 1;
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < nx; ++y)
      if (sq.right(x) == sq.right(y) && !covered[static_cast<size_t>(x) * nx + y])
        return false;
  return true;
}

namespace {

void finish_fact_verdict(CheckReport& rep) {
  if (!rep.hypotheses_ok()) {
    rep.verdict.clear();
    return;
  }
  for (auto it = rep.facts.begin(); it != rep.facts.end(); ++it)
    if (it.value().is_boolean() && !it.value().get<bool>()) {
      rep.verdict = "fail";
      rep.witness = nlohmann::json{{"failing_fact", it.key()}};
      return;
    }
  rep.verdict = "pass";
}

void add_variety_hypothesis(CheckReport& rep, std::initializer_list<AlgebraPtr> objs) {
  bool all = true;
  std::string bad;
  for (const auto& a : objs)
    if (!modular_variety_member(a)) {
      all = false;
      bad = a->name();
      break;
    }
  rep.add_hypothesis("objects-in-modular-variety", all,
                     all ? "" : "object '" + bad + "' not recognized");
}

}  // namespace

CheckReport rect_split_check(const Rectangle& rect) {
  CheckReport rep;
  rep.check = "rect-split";
  const Square& s1 = rect.first;
  const Square& s2 = rect.second;
  rep.add_hypothesis("outer-rectangle-pullback", is_pullback(outer_square(rect)));
  rep.add_hypothesis("left-column-split", s1.left_section.has_value());
  rep.add_hypothesis("middle-column-split", s1.right_section.has_value());
  // the sections belong to the diagram: the top edge must carry one to the other
  rep.add_hypothesis("sections-compatible",
                     s1.left_section && s1.right_section &&
                         compose(s1.top, *s1.left_section) ==
                             compose(*s1.right_section, s1.bottom));
  rep.add_hypothesis("left-square-horizontals-surjective",
                     s1.top.surjective() && s1.bottom.surjective());
  add_variety_hypothesis(rep, {s1.top.source(), s1.top.target(), s2.top.target(),
                               s1.left.target(), s1.bottom.target(), s2.bottom.target()});
  if (!rep.hypotheses_ok()) return rep;

  const BinRel r_ux = kernel_rel(compose(s2.top, s1.top));
  const BinRel r_phi = kernel_rel(s1.left);
  const BinRel r_x = kernel_rel(s1.top);
  const BinRel r_y = kernel_rel(s1.bottom);
  rep.fact("outer-kernels-meet-trivial",
           rel_meet(r_ux, r_phi) == BinRel::identity(r_ux.src_size()));
  rep.fact("outer-kernels-permute", compose(r_ux, r_phi) == compose(r_phi, r_ux));
  rep.fact("top-kernel-permutes-left-kernel",
           compose(r_x, r_phi) == compose(r_phi, r_x));
  rep.fact("left-image-of-top-kernel", rel_image(s1.left, r_x) == r_y);
  rep.fact("comparison-relation-identity",
           compose(of_hom_op(s1.top), of_hom(s1.left)) ==
               compose(of_hom(s1.right), of_hom_op(s1.bottom)));
  rep.fact("square1-pullback", is_pullback(s1));
  rep.fact("square2-pullback", is_pullback(s2));
  finish_fact_verdict(rep);
  return rep;
}

CheckReport rect_pushout_check(const Rectangle& rect) {
  CheckReport rep;
  rep.check = "rect-pushout";
  const Square& s1 = rect.first;
  const Square& s2 = rect.second;
  rep.add_hypothesis("outer-rectangle-pullback", is_pullback(outer_square(rect)));
  bool surj = s1.top.surjective() && s1.bottom.surjective() && s1.left.surjective() &&
              s1.right.surjective();
  rep.add_hypothesis("left-square-edges-surjective", surj);
  rep.add_hypothesis("left-square-pushout", surj && is_pushout(s1));
  add_variety_hypothesis(rep, {s1.top.source(), s1.top.target(), s2.top.target(),
                               s1.left.target(), s1.bottom.target(), s2.bottom.target()});
  if (!rep.hypotheses_ok()) return rep;

  const BinRel r = rel_image(s1.top, kernel_rel(s1.left));
  rep.fact("image-relation-equivalence", r.is_equivalence());
  rep.fact("image-relation-idempotent", compose(r, r) == r);
  rep.fact("image-relation-is-middle-kernel", r == kernel_rel(s1.right));
  rep.fact("square1-pullback", is_pullback(s1));
  rep.fact("square2-pullback", is_pullback(s2));
  finish_fact_verdict(rep);
  return rep;
}

Square Cube::back_face() const {
  return {top_back, vert_back_left, vert_back_right, bottom_back, sec_back_left,
          sec_back_right};
}
Square Cube::front_face() const {
  return {top_front, vert_front_left, vert_front_right, bottom_front, sec_front_left,
          sec_front_right};
}
Square Cube::left_face() const {
  return {top_left, vert_back_left, vert_front_left, bottom_left, sec_back_left,
          sec_front_left};
}
Square Cube::right_face() const {
  return {top_right, vert_back_right, vert_front_right, bottom_right, sec_back_right,
          sec_front_right};
}
Square Cube::top_face() const { return {top_back, top_left, top_right, top_front, {}, {}}; }
Square Cube::bottom_face() const {
  return {bottom_back, bottom_left, bottom_right, bottom_front, {}, {}};
}

Cube make_cube(Cube c) {
  auto face = [](const Square& s, const char* name) {
    if (!(compose(s.right, s.top) == compose(s.bottom, s.left)))
      throw InputError(std::string("cube: ") + name + " face does not commute");
  };
  face(c.back_face(), "back");
  face(c.front_face(), "front");
  face(c.left_face(), "left");
  face(c.right_face(), "right");
  face(c.top_face(), "top");
  face(c.bottom_face(), "bottom");
  make_split_epi(c.vert_back_left, c.sec_back_left);
  make_split_epi(c.vert_back_right, c.sec_back_right);
  make_split_epi(c.vert_front_left, c.sec_front_left);
  make_split_epi(c.vert_front_right, c.sec_front_right);
  // sections must be carried along by the horizontal edges
  if (!(compose(c.top_back, c.sec_back_left) == compose(c.sec_back_right, c.bottom_back)))
    throw InputError("cube: back sections incompatible");
  if (!(compose(c.top_left, c.sec_back_left) == compose(c.sec_front_left, c.bottom_left)))
    throw InputError("cube: left sections incompatible");
  if (!(compose(c.top_right, c.sec_back_right) == compose(c.sec_front_right, c.bottom_right)))
    throw InputError("cube: right sections incompatible");
  if (!(compose(c.top_front, c.sec_front_left) == compose(c.sec_front_right, c.bottom_front)))
    throw InputError("cube: front sections incompatible");
  return c;
}

CheckReport cube_check(const Cube& cube) {
  CheckReport rep;
  rep.check = "cube";
  const bool horiz_surjective =
      cube.top_back.surjective() && cube.top_left.surjective() &&
      cube.top_right.surjective() && cube.top_front.surjective() &&
      cube.bottom_back.surjective() && cube.bottom_left.surjective() &&
      cube.bottom_right.surjective() && cube.bottom_front.surjective();
  rep.add_hypothesis("horizontal-edges-surjective", horiz_surjective);
  rep.add_hypothesis("left-face-pullback", is_pullback(cube.left_face()));
  rep.add_hypothesis("back-face-pullback", is_pullback(cube.back_face()));
  bool top_sat = false, bottom_sat = false;
  if (horiz_surjective) {
    top_sat = is_right_saturated(cube.top_face());
    bottom_sat = is_right_saturated(cube.bottom_face());
  }
  rep.add_hypothesis("top-face-right-saturated", top_sat);
  rep.add_hypothesis("bottom-face-right-saturated", bottom_sat);
  if (!rep.hypotheses_ok()) return rep;

  // kernel-pair rectangle over the front-pointing edges
  auto kp_algebra = [](const Homomorphism& f, const std::string& name) {
    std::vector<std::pair<int, int>> pairs;
    for (int p = 0; p < f.source()->size(); ++p)
      for (int q = 0; q < f.source()->size(); ++q)
        if (f(p) == f(q)) pairs.emplace_back(p, q);
    return pair_subalgebra(f.source(), f.source(), std::move(pairs), name);
  };
  auto ra = kp_algebra(cube.top_left, "ker(a)");
  auto ru = kp_algebra(cube.top_right, "ker(u)");
  auto rb = kp_algebra(cube.bottom_left, "ker(b)");
  auto rv = kp_algebra(cube.bottom_right, "ker(v)");
  auto induced = [](const PairSubalgebra& from, const PairSubalgebra& to,
                    const Homomorphism& edge) {
    std::vector<int> m(static_cast<size_t>(from.algebra->size()), -1);
    for (int i = 0; i < from.algebra->size(); ++i) {
      const int p = edge(from.proj1(i));
      const int q = edge(from.proj2(i));
      for (int j = 0; j < to.algebra->size(); ++j)
        if (to.proj1(j) == p && to.proj2(j) == q) {
          m[static_cast<size_t>(i)] = j;
          break;
        }
      if (m[static_cast<size_t>(i)] < 0)
        throw InputError("cube: kernel-pair comparison undefined");
    }
    return Homomorphism(from.algebra, to.algebra, std::move(m));
  };
  const Homomorphism xbar = induced(ra, ru, cube.top_back);
  const Homomorphism ybar = induced(rb, rv, cube.bottom_back);
  const Homomorphism phibar = induced(ra, rb, cube.vert_back_left);
  const Homomorphism fbar = induced(ru, rv, cube.vert_back_right);
  const Homomorphism sigmabar = induced(rb, ra, cube.sec_back_left);
  const Homomorphism sbar = induced(rv, ru, cube.sec_back_right);
  Rectangle kp = make_rectangle(
      make_square(xbar, phibar, fbar, ybar, sigmabar, sbar),
      make_square(ru.proj1, fbar, cube.vert_back_right, rv.proj1));
  rep.fact("kernel-rectangle-outer-pullback", is_pullback(outer_square(kp)));
  rep.fact("kernel-square1-pullback", is_pullback(kp.first));
  rep.fact("kernel-square2-pullback", is_pullback(kp.second));
  rep.fact("front-face-pullback", is_pullback(cube.front_face()));
  rep.fact("right-face-pullback", is_pullback(cube.right_face()));
  finish_fact_verdict(rep);
  return rep;
}

namespace {

int pick(std::mt19937_64& rng, size_t k) { return static_cast<int>(rng() % k); }

std::vector<Homomorphism> all_sections(const Homomorphism& f) {
  std::vector<Homomorphism> out;
  const auto& fm = f.map();
  enumerate_homs(
      f.target(), f.source(),
      [&](const Homomorphism& s) {
        out.push_back(s);
        return true;
      },
      [&](int y, int x) { return fm[static_cast<size_t>(x)] == y; });
  return out;
}

// section pair (sigma, s) with x o sigma = s o y, the split-column shape of
// the rectangle hypotheses
std::optional<std::pair<Homomorphism, Homomorphism>> compatible_sections(
    const Homomorphism& x, const Homomorphism& y, const Homomorphism& phi,
    const Homomorphism& f) {
  const auto f_secs = all_sections(f);
  if (f_secs.empty()) return std::nullopt;
  const auto phi_secs = all_sections(phi);
  for (const auto& s : f_secs)
    for (const auto& sigma : phi_secs)
      if (compose(x, sigma) == compose(s, y)) return std::make_pair(sigma, s);
  return std::nullopt;
}

// Builds the two-square rectangle determined by the bottom row and the right
// column: X is the pullback of w along v and P the pullback of the induced
// column along y.  Sections are induced from a section of w when given.
std::optional<Rectangle> build_rect(const AlgebraPtr& /*z*/, const Homomorphism& y,
                                    const Homomorphism& v, const Homomorphism& w,
                                    const std::optional<Homomorphism>& w_section) {
  PullbackResult x_pb = pullback(w, v);  // proj1: X->U, proj2: X->Y
  const Homomorphism& u = x_pb.proj1;
  const Homomorphism& f = x_pb.proj2;
  if (!f.surjective()) return std::nullopt;
  std::optional<Homomorphism> s;
  if (w_section)
    s = into_pullback(x_pb, compose(*w_section, v), Homomorphism::identity(v.source()));
  PullbackResult p_pb = pullback(f, y);  // proj1: P->X, proj2: P->Z
  const Homomorphism& x = p_pb.proj1;
  const Homomorphism& phi = p_pb.proj2;
  std::optional<Homomorphism> sigma;
  if (s) sigma = into_pullback(p_pb, compose(*s, y), Homomorphism::identity(y.source()));
  Square s1 = make_square(x, phi, f, y, sigma, s);
  Square s2 = make_square(u, f, w, v, s, w_section);
  return make_rectangle(std::move(s1), std::move(s2));
}

bool hypotheses_pass(const Rectangle& rect, bool require_split) {
  CheckReport rep = require_split ? rect_split_check(rect) : rect_pushout_check(rect);
  return rep.hypotheses_ok();
}

}  // namespace

GeneratedRectangles generate_rectangles(const GenOptions& opt) {
  GeneratedRectangles out;
  std::mt19937_64 rng(opt.seed);
  const auto corpus = generator_groups();
  for (int64_t attempt = 0; attempt < opt.budget; ++attempt) {
    out.attempts = attempt + 1;
    const bool constructive = (attempt % 4) == 3;
    const AlgebraPtr z = corpus[static_cast<size_t>(pick(rng, corpus.size()))];
    const AlgebraPtr yob = corpus[static_cast<size_t>(pick(rng, corpus.size()))];
    const AlgebraPtr vob = corpus[static_cast<size_t>(pick(rng, corpus.size()))];
    const AlgebraPtr uob = corpus[static_cast<size_t>(pick(rng, corpus.size()))];
    const auto& ys = surjection_pool(z, yob);
    const auto& ws = surjection_pool(uob, vob);
    const auto& vs = hom_pool(yob, vob);
    if (ys.empty() || ws.empty() || vs.empty()) continue;
    const Homomorphism& y = ys[static_cast<size_t>(pick(rng, ys.size()))];
    const Homomorphism& v = vs[static_cast<size_t>(pick(rng, vs.size()))];
    const Homomorphism& w = ws[static_cast<size_t>(pick(rng, ws.size()))];
    try {
      if (constructive) {
        std::optional<Homomorphism> wsec = find_section(w);
        if (opt.require_split && !wsec) continue;
        auto rect = build_rect(z, y, v, w, opt.require_split ? wsec : std::nullopt);
        if (rect && hypotheses_pass(*rect, opt.require_split))
          out.instances.push_back(std::move(*rect));
      } else {
        // free sampling: draw the remaining pieces and let the hypothesis
        // checks filter
        const AlgebraPtr xob = corpus[static_cast<size_t>(pick(rng, corpus.size()))];
        const AlgebraPtr pob = corpus[static_cast<size_t>(pick(rng, corpus.size()))];
        const auto& xs = surjection_pool(pob, xob);
        const auto& fs = surjection_pool(xob, yob);
        const auto& phis = surjection_pool(pob, z);
        const auto& us = hom_pool(xob, uob);
        if (xs.empty() || fs.empty() || phis.empty() || us.empty()) continue;
        const Homomorphism& x = xs[static_cast<size_t>(pick(rng, xs.size()))];
        const Homomorphism& f = fs[static_cast<size_t>(pick(rng, fs.size()))];
        const Homomorphism& phi = phis[static_cast<size_t>(pick(rng, phis.size()))];
        const Homomorphism& u = us[static_cast<size_t>(pick(rng, us.size()))];
        if (!(compose(f, x) == compose(y, phi))) continue;
        if (!(compose(w, u) == compose(v, f))) continue;
        std::optional<Homomorphism> s, sigma;
        if (opt.require_split) {
          auto pair = compatible_sections(x, y, phi, f);
          if (!pair) continue;
          sigma = std::move(pair->first);
          s = std::move(pair->second);
        }
        Rectangle rect = make_rectangle(make_square(x, phi, f, y, sigma, s),
                                        make_square(u, f, w, v, s, std::nullopt));
        if (hypotheses_pass(rect, opt.require_split))
          out.instances.push_back(std::move(rect));
      }
    } catch (const InputError&) {
      continue;
    } catch (const HypothesisViolated&) {
      continue;
    }
  }
  out.exhausted = out.instances.empty() && opt.budget > 0;
  return out;
}

namespace {

Homomorphism hom_of(const AlgebraPtr& a, const AlgebraPtr& b, std::vector<int> map) {
  Homomorphism h(a, b, std::move(map));
  return h.checked();
}

std::vector<Rectangle> handcrafted(bool split) {
  std::vector<Rectangle> out;
  const auto z1 = builtin("Z1");
  const auto z2 = builtin("Z2");
  const auto z3 = builtin("Z3");
  const auto z4 = builtin("Z4");
  const auto v4 = builtin("V4");
  const auto z6 = builtin("Z6");
  const auto s3 = builtin("S3");
  const auto q8 = builtin("Q8");
  const auto e8 = builtin("Z2xZ2xZ2");
  auto to_z1 = [&](const AlgebraPtr& a) {
    return Homomorphism(a, z1, std::vector<int>(static_cast<size_t>(a->size()), 0));
  };
  auto sec_z1 = [&](const AlgebraPtr& a) {
    return Homomorphism(z1, a, {a->is_group() ? a->group_identity() : 0});
  };
  const Homomorphism mod2_z4 = hom_of(z4, z2, {0, 1, 0, 1});
  const Homomorphism v4_p1 = hom_of(v4, z2, {0, 0, 1, 1});
  const Homomorphism v4_sec = hom_of(z2, v4, {0, 2});
  // sign on S3: permutations of {0,1,2} in lexicographic order
  const Homomorphism sign_s3 = hom_of(s3, z2, {0, 1, 1, 0, 0, 1});
  const Homomorphism q8_to_v4 = hom_of(q8, v4, {0, 0, 1, 1, 2, 2, 3, 3});
  const Homomorphism e8_p1 = hom_of(e8, z2, {0, 0, 0, 0, 1, 1, 1, 1});
  const Homomorphism mod3_z6 = hom_of(z6, z3, {0, 1, 2, 0, 1, 2});
  const Homomorphism v4_diag = hom_of(v4, z2, {0, 1, 1, 0});  // sum of coordinates

  auto add = [&](const AlgebraPtr& z, const Homomorphism& y, const Homomorphism& v,
                 const Homomorphism& w, std::optional<Homomorphism> wsec) {
    auto rect = build_rect(z, y, v, w, split ? wsec : std::nullopt);
    if (!rect) throw std::logic_error("handcrafted rectangle failed to build");
    out.push_back(std::move(*rect));
  };

  add(z4, mod2_z4, to_z1(z2), to_z1(z2), sec_z1(z2));
  add(e8, e8_p1, to_z1(z2), to_z1(v4), sec_z1(v4));
  add(s3, sign_s3, hom_of(z2, z2, {0, 0}), v4_p1, v4_sec);
  add(q8, q8_to_v4, v4_diag, v4_p1, v4_sec);
  add(z6, mod3_z6, to_z1(z3), to_z1(z3), sec_z1(z3));
  if (!split) {
    // a non-split right column: Z4 -> Z2 has no section
    add(q8, q8_to_v4, v4_p1, mod2_z4, std::nullopt);
  }
  return out;
}

}  // namespace

std::vector<Rectangle> handcrafted_split_rectangles() { return handcrafted(true); }
std::vector<Rectangle> handcrafted_pushout_rectangles() { return handcrafted(false); }

bool rectangle_nontrivial(const Rectangle& rect) {
  for (const Homomorphism* h :
       {&rect.first.top, &rect.first.left, &rect.first.right, &rect.first.bottom,
        &rect.second.top, &rect.second.right, &rect.second.bottom})
    if (h->is_identity()) return false;
  return !rect.first.top.bijective() && !rect.first.left.bijective() &&
         !rect.first.right.bijective() && !rect.first.bottom.bijective();
}

}  // namespace ua
