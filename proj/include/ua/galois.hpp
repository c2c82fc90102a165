#pragma once

// Reflection of groups onto abelian groups and the induced extension
// classification: trivial, normal and central extensions, with the square
// and cube checks that relate them.

#include "ua/diagram.hpp"

namespace ua {

struct ReflectedObject {
  AlgebraPtr object;
  Homomorphism unit;  // X -> IX, surjective
};

class Reflection {
 public:
  virtual ~Reflection() = default;
  virtual ReflectedObject reflect_obj(const AlgebraPtr& x) const = 0;
  virtual Homomorphism reflect_hom(const Homomorphism& f) const = 0;
};

// Quotient by the congruence generated by all pairs (gh, hg).
class Abelianization final : public Reflection {
 public:
  ReflectedObject reflect_obj(const AlgebraPtr& x) const override;
  Homomorphism reflect_hom(const Homomorphism& f) const override;
};

ReflectedObject abelianize(const AlgebraPtr& g);

bool is_abelian(const FiniteAlgebra& g);
std::vector<int> center(const FiniteAlgebra& g);
SubalgebraResult commutator_subgroup(const AlgebraPtr& g);
std::vector<int> kernel_elements(const Homomorphism& f);  // preimage of the identity

// top eta_X, left f, right If, bottom eta_Y
Square naturality_square(const Reflection& refl, const Homomorphism& f);

bool birkhoff_pushout_check(const Reflection& refl, const Homomorphism& f);
bool is_trivial_extension(const Reflection& refl, const Homomorphism& f);
bool is_normal_extension(const Reflection& refl, const Homomorphism& f);

enum class CentralStrategy { by_normal, by_kernel_center, witness_search };

struct CentralVerdict {
  std::optional<bool> by_normal;
  std::optional<bool> by_kernel_center;
  bool witness_searched = false;
  std::optional<Homomorphism> witness;  // y with the pullback of f along y trivial
};

CentralVerdict is_central_extension(const Reflection& refl, const Homomorphism& f,
                                    CentralStrategy strategy);
// runs all three strategies
CentralVerdict classify_central(const Reflection& refl, const Homomorphism& f);

struct ExtensionReport {
  bool surjective = false, split = false, trivial = false, normal = false;
  CentralVerdict central;
  bool agree_normal_kernel_center = false;
};
ExtensionReport classify_extension(const Reflection& refl, const Homomorphism& f);

// Builds the cube over the witness y: back face the pullback of f along y,
// front face its reflection, units as the front-pointing edges.
Cube extension_cube(const Reflection& refl, const Homomorphism& f, const Homomorphism& y);

// Central split surjections must be trivial; not-applicable inputs are
// reported through a failing hypothesis.
CheckReport theorem53_check(const Reflection& refl, const Homomorphism& f);

CheckReport cor54_scan(const Reflection& refl, Exec ex = Exec::parallel);
CheckReport birkhoff_scan(const Reflection& refl, Exec ex = Exec::parallel);

bool admissibility_check(const Reflection& refl, const Square& sq);
std::vector<Square> admissibility_squares(const Reflection& refl);
CheckReport admissibility_scan(const Reflection& refl, Exec ex = Exec::parallel);

// >= 3 hypothesis-satisfying cubes built from catalog extensions.
std::vector<Cube> cube_catalog(const Reflection& refl);

}  // namespace ua
