#pragma once

// JSON file formats: algebras, homomorphisms, diagrams and check files.
// The exact grammar is documented in the README; every out-of-range entry is
// rejected with a field path in the message.

#include <variant>

#include <json.hpp>

#include "ua/diagram.hpp"

namespace ua {

nlohmann::json algebra_to_json(const FiniteAlgebra& a);
AlgebraPtr algebra_from_json(const nlohmann::json& j);

// name-or-path: an existing file wins over a builtin name (a warning is
// emitted to the stream when both exist).
AlgebraPtr resolve_algebra(const std::string& name_or_path, std::ostream* warn = nullptr);

AlgebraPtr load_algebra_file(const std::string& path);

nlohmann::json hom_to_json(const Homomorphism& f);
Homomorphism hom_from_json(const nlohmann::json& j, std::ostream* warn = nullptr);
Homomorphism load_hom_file(const std::string& path, std::ostream* warn = nullptr);

struct CheckFile {
  AlgebraPtr algebra;
  std::vector<std::pair<std::string, Congruence>> congruences;  // named literals
};
// Accepts either an algebra document or {"algebra": ..., "congruences": {...}}.
CheckFile load_check_file(const std::string& path, std::ostream* warn = nullptr);

using DiagramDoc = std::variant<Square, Rectangle, Cube>;
DiagramDoc load_diagram_file(const std::string& path, std::ostream* warn = nullptr);

nlohmann::json load_json_file(const std::string& path);

}  // namespace ua
