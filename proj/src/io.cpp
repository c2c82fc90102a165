#include "ua/io.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>

#include "ua/corpus.hpp"

namespace ua {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

int get_int(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

// arity-k tables are k-nested arrays; flattens with range checks
void flatten_table(const nlohmann::json& j, int arity, int size, std::vector<int>& out,
                   const std::string& where) {
  if (arity == 0) {
    const int v = get_int(j, where);
    if (v < 0 || v >= size) fail(where, "entry " + std::to_string(v) + " out of range [0," +
                                            std::to_string(size) + ")");
    out.push_back(v);
    return;
  }
  if (!j.is_array() || static_cast<int>(j.size()) != size)
    fail(where, "expected an array of length " + std::to_string(size));
  for (int i = 0; i < size; ++i)
    flatten_table(j[static_cast<size_t>(i)], arity - 1, size, out,
                  where + "[" + std::to_string(i) + "]");
}

nlohmann::json nest_table(const std::vector<int>& flat, int arity, int size, size_t& pos) {
  if (arity == 0) return flat[pos++];
  nlohmann::json arr = nlohmann::json::array();
  for (int i = 0; i < size; ++i) arr.push_back(nest_table(flat, arity - 1, size, pos));
  return arr;
}

}  // namespace

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("'" + path + "': " + e.what());
  }
}

nlohmann::json algebra_to_json(const FiniteAlgebra& a) {
  nlohmann::json ops = nlohmann::json::array();
  for (int op = 0; op < a.signature().op_count(); ++op) {
    size_t pos = 0;
    ops.push_back(nlohmann::json{{"symbol", a.signature().op(op).symbol},
                                 {"arity", a.signature().op(op).arity},
                                 {"table", nest_table(a.table(op), a.signature().op(op).arity,
                                                      a.size(), pos)}});
  }
  return nlohmann::json{{"name", a.name()}, {"size", a.size()}, {"operations", ops}};
}

AlgebraPtr algebra_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail("algebra", "expected an object");
  if (!j.contains("name") || !j["name"].is_string()) fail("algebra", "missing field 'name'");
  const std::string name = j["name"].get<std::string>();
  const int size = get_int(j.value("size", nlohmann::json()), "algebra.size");
  if (size <= 0) fail("algebra.size", "must be positive");
  if (!j.contains("operations") || !j["operations"].is_array())
    fail("algebra", "missing field 'operations'");
  std::vector<OpSig> sig;
  std::vector<std::vector<int>> tables;
  int idx = 0;
  for (const auto& o : j["operations"]) {
    const std::string where = "operations[" + std::to_string(idx++) + "]";
    if (!o.is_object() || !o.contains("symbol") || !o.contains("arity") ||
        !o.contains("table"))
      fail(where, "expected {symbol, arity, table}");
    const std::string symbol = o["symbol"].get<std::string>();
    const int arity = get_int(o["arity"], where + ".arity");
    if (arity < 0) fail(where + ".arity", "must be non-negative");
    std::vector<int> flat;
    flatten_table(o["table"], arity, size, flat, where + ".table");
    sig.push_back({symbol, arity});
    tables.push_back(std::move(flat));
  }
  return make_algebra(name, size, Signature(std::move(sig)), std::move(tables));
}

AlgebraPtr load_algebra_file(const std::string& path) {
  return algebra_from_json(load_json_file(path));
}

AlgebraPtr resolve_algebra(const std::string& name_or_path, std::ostream* warn) {
  const bool file = std::filesystem::exists(name_or_path) &&
                    std::filesystem::is_regular_file(name_or_path);
  const auto b = try_builtin(name_or_path);
  if (file) {
    if (b && warn)
      *warn << "warning: '" << name_or_path
            << "' names both a file and a builtin; using the file\n";
    nlohmann::json j = load_json_file(name_or_path);
    return algebra_from_json(j);
  }
  if (b) return *b;
  throw InputError("'" + name_or_path + "' is neither a readable file nor a builtin name");
}

nlohmann::json hom_to_json(const Homomorphism& f) {
  return nlohmann::json{
      {"source", f.source()->name()}, {"target", f.target()->name()}, {"map", f.map()}};
}

Homomorphism hom_from_json(const nlohmann::json& j, std::ostream* warn) {
  if (!j.is_object() || !j.contains("source") || !j.contains("target") ||
      !j.contains("map"))
    fail("hom", "expected {source, target, map}");
  auto load_side = [&](const nlohmann::json& side, const std::string& where) -> AlgebraPtr {
    if (side.is_string()) return resolve_algebra(side.get<std::string>(), warn);
    if (side.is_object()) return algebra_from_json(side);
    fail(where, "expected a name, path or inline algebra");
  };
  AlgebraPtr src = load_side(j["source"], "hom.source");
  AlgebraPtr tgt = load_side(j["target"], "hom.target");
  if (!j["map"].is_array()) fail("hom.map", "expected an array");
  std::vector<int> m;
  for (size_t i = 0; i < j["map"].size(); ++i)
    m.push_back(get_int(j["map"][i], "hom.map[" + std::to_string(i) + "]"));
  Homomorphism h(std::move(src), std::move(tgt), std::move(m));
  return h.checked();
}

Homomorphism load_hom_file(const std::string& path, std::ostream* warn) {
  return hom_from_json(load_json_file(path), warn);
}

CheckFile load_check_file(const std::string& path, std::ostream* warn) {
  nlohmann::json j = load_json_file(path);
  CheckFile out{nullptr, {}};
  if (j.is_object() && j.contains("algebra")) {
    const auto& a = j["algebra"];
    out.algebra = a.is_string() ? resolve_algebra(a.get<std::string>(), warn)
                                : algebra_from_json(a);
    if (j.contains("congruences")) {
      if (!j["congruences"].is_object()) fail("congruences", "expected an object");
      for (auto it = j["congruences"].begin(); it != j["congruences"].end(); ++it) {
        if (!it.value().is_array()) fail("congruences." + it.key(), "expected block lists");
        std::vector<std::vector<int>> blocks;
        for (const auto& blk : it.value()) {
          std::vector<int> b;
          for (const auto& e : blk) b.push_back(get_int(e, "congruences." + it.key()));
          blocks.push_back(std::move(b));
        }
        Partition p = Partition::from_blocks(out.algebra->size(), blocks);
        if (!is_congruence(*out.algebra, p))
          fail("congruences." + it.key(), "partition is not a congruence of the algebra");
        out.congruences.emplace_back(it.key(), Congruence{out.algebra, std::move(p)});
      }
    }
    return out;
  }
  out.algebra = algebra_from_json(j);
  return out;
}

namespace {

struct DiagramContext {
  std::map<std::string, AlgebraPtr> objects;
  std::map<std::string, Homomorphism> arrows;

  const Homomorphism& arrow(const nlohmann::json& j, const std::string& where) const {
    if (!j.is_string()) fail(where, "expected an arrow name");
    auto it = arrows.find(j.get<std::string>());
    if (it == arrows.end()) fail(where, "unknown arrow '" + j.get<std::string>() + "'");
    return it->second;
  }
};

DiagramContext parse_context(const nlohmann::json& j, std::ostream* warn) {
  DiagramContext ctx;
  if (j.contains("objects")) {
    if (!j["objects"].is_object()) fail("objects", "expected an object map");
    for (auto it = j["objects"].begin(); it != j["objects"].end(); ++it)
      ctx.objects[it.key()] = it.value().is_string()
                                  ? resolve_algebra(it.value().get<std::string>(), warn)
                                  : algebra_from_json(it.value());
  }
  if (!j.contains("arrows") || !j["arrows"].is_object())
    fail("diagram", "missing 'arrows'");
  for (auto it = j["arrows"].begin(); it != j["arrows"].end(); ++it) {
    const auto& a = it.value();
    const std::string where = "arrows." + it.key();
    if (!a.is_object() || !a.contains("source") || !a.contains("target") ||
        !a.contains("map"))
      fail(where, "expected {source, target, map}");
    auto side = [&](const nlohmann::json& s) -> AlgebraPtr {
      if (s.is_string()) {
        auto oit = ctx.objects.find(s.get<std::string>());
        if (oit != ctx.objects.end()) return oit->second;
        return resolve_algebra(s.get<std::string>(), warn);
      }
      return algebra_from_json(s);
    };
    std::vector<int> m;
    for (size_t i = 0; i < a["map"].size(); ++i)
      m.push_back(get_int(a["map"][i], where + ".map[" + std::to_string(i) + "]"));
    Homomorphism h(side(a["source"]), side(a["target"]), std::move(m));
    ctx.arrows.emplace(it.key(), h.checked());
  }
  return ctx;
}

std::optional<Homomorphism> optional_section(const DiagramContext& ctx,
                                             const nlohmann::json& sections,
                                             const std::string& edge) {
  if (!sections.is_object() || !sections.contains(edge)) return std::nullopt;
  return ctx.arrow(sections[edge], "sections." + edge);
}

}  // namespace

DiagramDoc load_diagram_file(const std::string& path, std::ostream* warn) {
  nlohmann::json j = load_json_file(path);
  if (!j.is_object() || !j.contains("shape") || !j["shape"].is_string())
    fail("diagram", "missing 'shape' (square | rectangle | cube)");
  const std::string shape = j["shape"].get<std::string>();
  DiagramContext ctx = parse_context(j, warn);
  const nlohmann::json sections = j.value("sections", nlohmann::json::object());

  if (shape == "square") {
    if (!j.contains("square")) fail("diagram", "missing 'square'");
    const auto& s = j["square"];
    return make_square(ctx.arrow(s.value("top", nlohmann::json()), "square.top"),
                       ctx.arrow(s.value("left", nlohmann::json()), "square.left"),
                       ctx.arrow(s.value("right", nlohmann::json()), "square.right"),
                       ctx.arrow(s.value("bottom", nlohmann::json()), "square.bottom"),
                       optional_section(ctx, sections, "left"),
                       optional_section(ctx, sections, "right"));
  }
  if (shape == "rectangle") {
    if (!j.contains("rectangle")) fail("diagram", "missing 'rectangle'");
    const auto& r = j["rectangle"];
    auto arrow = [&](const char* key) {
      return ctx.arrow(r.value(key, nlohmann::json()), std::string("rectangle.") + key);
    };
    Square s1 = make_square(arrow("top1"), arrow("left"), arrow("middle"), arrow("bottom1"),
                            optional_section(ctx, sections, "left"),
                            optional_section(ctx, sections, "middle"));
    Square s2 = make_square(arrow("top2"), arrow("middle"), arrow("right"), arrow("bottom2"),
                            optional_section(ctx, sections, "middle"),
                            optional_section(ctx, sections, "right"));
    return make_rectangle(std::move(s1), std::move(s2));
  }
  if (shape == "cube") {
    if (!j.contains("cube")) fail("diagram", "missing 'cube'");
    const auto& c = j["cube"];
    auto arrow = [&](const char* key) {
      return ctx.arrow(c.value(key, nlohmann::json()), std::string("cube.") + key);
    };
    auto section = [&](const char* key) -> Homomorphism {
      if (!sections.is_object() || !sections.contains(key))
        fail(std::string("sections.") + key, "cube verticals need explicit sections");
      return ctx.arrow(sections[key], std::string("sections.") + key);
    };
    Cube cube{arrow("top_back"),       arrow("top_left"),
              arrow("top_right"),      arrow("top_front"),
              arrow("bottom_back"),    arrow("bottom_left"),
              arrow("bottom_right"),   arrow("bottom_front"),
              arrow("vertical_back_left"),  arrow("vertical_back_right"),
              arrow("vertical_front_left"), arrow("vertical_front_right"),
              section("vertical_back_left"),  section("vertical_back_right"),
              section("vertical_front_left"), section("vertical_front_right")};
    return make_cube(std::move(cube));
  }
  fail("diagram.shape", "unknown shape '" + shape + "'");
}

}  // namespace ua
