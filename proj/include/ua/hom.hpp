#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "ua/algebra.hpp"

namespace ua {

class Homomorphism {
 public:
  // Validates shape and range only; use valid() / checked() for the
  // operation-preservation law.
  Homomorphism(AlgebraPtr source, AlgebraPtr target, std::vector<int> map);

  static Homomorphism identity(AlgebraPtr a);

  const AlgebraPtr& source() const { return src_; }
  const AlgebraPtr& target() const { return tgt_; }
  const std::vector<int>& map() const { return map_; }
  int operator()(int a) const { return map_[static_cast<size_t>(a)]; }

  bool valid() const;  // commutes with every operation table
  const Homomorphism& checked() const;  // throws InputError when !valid()

  bool surjective() const;
  bool injective() const;
  bool bijective() const { return surjective() && injective(); }
  bool is_identity() const;

  friend bool operator==(const Homomorphism& a, const Homomorphism& b) {
    return a.map_ == b.map_ && a.src_->same_structure(*b.src_) &&
           a.tgt_->same_structure(*b.tgt_);
  }

 private:
  AlgebraPtr src_, tgt_;
  std::vector<int> map_;
};

bool is_homomorphism(const FiniteAlgebra& src, const FiniteAlgebra& tgt,
                     std::span<const int> map);

// g after f
Homomorphism compose(const Homomorphism& g, const Homomorphism& f);

struct ProductResult {
  AlgebraPtr algebra;
  Homomorphism proj1, proj2;
};
ProductResult product(const AlgebraPtr& a, const AlgebraPtr& b);
// The unique mediating map for the pairing (g1, g2) into the product.
Homomorphism pair_into_product(const ProductResult& p, const Homomorphism& g1,
                               const Homomorphism& g2);

struct SubalgebraResult {
  AlgebraPtr algebra;
  Homomorphism inclusion;
};
SubalgebraResult subalgebra_generated(const AlgebraPtr& a, std::span<const int> seed);
// elements must already be closed under all operations (ascending order kept)
SubalgebraResult subalgebra_on(const AlgebraPtr& a, std::vector<int> elements);

struct ImageFactorization {
  Homomorphism p;  // surjection onto the image subalgebra
  Homomorphism m;  // inclusion of the image
};
ImageFactorization image_factorization(const Homomorphism& f);

struct SplitEpi {
  Homomorphism epi;
  Homomorphism section;
};
SplitEpi make_split_epi(Homomorphism epi, Homomorphism section);  // validates

// A minimal generating sequence, chosen greedily by least element.
std::vector<int> generating_sequence(const FiniteAlgebra& a);

// Enumerates homomorphisms a -> b in lexicographic order of generator images.
// `allowed` (optional) restricts the image of each element; `visit` returns
// false to stop early.
void enumerate_homs(const AlgebraPtr& a, const AlgebraPtr& b,
                    const std::function<bool(const Homomorphism&)>& visit,
                    const std::function<bool(int, int)>& allowed = nullptr);

std::vector<Homomorphism> all_homs(const AlgebraPtr& a, const AlgebraPtr& b);
std::vector<Homomorphism> all_surjections(const AlgebraPtr& a, const AlgebraPtr& b);

std::optional<Homomorphism> find_section(const Homomorphism& f);
bool is_split(const Homomorphism& f);

bool isomorphic(const AlgebraPtr& a, const AlgebraPtr& b);

}  // namespace ua
