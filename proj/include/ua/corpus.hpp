#pragma once

// The versioned builtin corpus.  Builtin names: Zn, Dn (order 2n), Sn (n<=4),
// Q8, V4, baren, chainn, M3, N5, and 'x'-separated products of these
// (e.g. "S3xZ2").

#include <optional>
#include <vector>

#include "ua/hom.hpp"

namespace ua {

AlgebraPtr builtin(const std::string& name);  // throws InputError when unknown
std::optional<AlgebraPtr> try_builtin(const std::string& name);
std::vector<std::string> builtin_names();

// Corpus for the congruence-level scans: the catalog groups, the lattice
// algebras up to 6 elements, and the bare sets up to 5.
std::vector<AlgebraPtr> scan_corpus();

// The group catalog used by the Galois layer.
std::vector<AlgebraPtr> galois_catalog();

// Groups of order at most 8, used by the rectangle generator.
std::vector<AlgebraPtr> generator_groups();

// All surjections between catalog groups, in a fixed deterministic order.
const std::vector<Homomorphism>& catalog_surjections();

// Cached hom-set between two corpus members (keyed by name; deterministic).
const std::vector<Homomorphism>& hom_pool(const AlgebraPtr& a, const AlgebraPtr& b);
const std::vector<Homomorphism>& surjection_pool(const AlgebraPtr& a, const AlgebraPtr& b);

}  // namespace ua
