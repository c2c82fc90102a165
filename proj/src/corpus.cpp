#include "ua/corpus.hpp"

#include <map>
#include <mutex>

namespace ua {

namespace {

AlgebraPtr builtin_atom(const std::string& name) {
  if (name == "V4") return product_algebra(cyclic_group(2), cyclic_group(2));
  if (name == "Q8") return quaternion_group_8();
  if (name == "M3") return diamond_m3();
  if (name == "N5") return pentagon_n5();
  auto tail_int = [&](size_t prefix) -> std::optional<int> {
    if (name.size() <= prefix) return std::nullopt;
    int v = 0;
    for (size_t i = prefix; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') return std::nullopt;
      v = v * 10 + (name[i] - '0');
      if (v > 10000) return std::nullopt;
    }
    return v;
  };
  try {
    if (name[0] == 'Z') {
      if (auto n = tail_int(1)) return cyclic_group(*n);
    } else if (name[0] == 'S') {
      if (auto n = tail_int(1)) return symmetric_group(*n);
    } else if (name[0] == 'D') {
      if (auto n = tail_int(1)) return dihedral_group(*n);
    } else if (name.rfind("bare", 0) == 0) {
      if (auto n = tail_int(4)) return bare_set(*n);
    } else if (name.rfind("chain", 0) == 0) {
      if (auto n = tail_int(5)) return chain_lattice(*n);
    }
  } catch (const InputError&) {
    return nullptr;
  }
  return nullptr;
}

AlgebraPtr rename(const AlgebraPtr& a, const std::string& name) {
  if (a->name() == name) return a;
  std::vector<std::vector<int>> tables;
  for (int op = 0; op < a->signature().op_count(); ++op) tables.push_back(a->table(op));
  return make_algebra(name, a->size(), a->signature(), std::move(tables));
}

}  // namespace

std::optional<AlgebraPtr> try_builtin(const std::string& name) {
  if (name.empty()) return std::nullopt;
  // split on 'x' into product factors
  std::vector<std::string> parts;
  size_t start = 0;
  for (size_t i = 0; i <= name.size(); ++i) {
    if (i == name.size() || name[i] == 'x') {
      if (i == start) return std::nullopt;
      parts.push_back(name.substr(start, i - start));
      start = i + 1;
    }
  }
  AlgebraPtr acc;
  for (const auto& part : parts) {
    AlgebraPtr atom = builtin_atom(part);
    if (!atom) return std::nullopt;
    acc = acc ? product_algebra(acc, atom) : atom;
  }
  return rename(acc, name);
}

AlgebraPtr builtin(const std::string& name) {
  if (auto a = try_builtin(name)) return *a;
  throw InputError("unknown builtin algebra '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"Z1", "Z2",    "Z3",    "Z4",     "V4",     "Z5",     "Z6", "S3",
          "Z7", "Z8",    "Q8",    "D4",     "Z2xZ2xZ2", "S3xZ2", "Z9", "Z12",
          "S4", "bare2", "bare3", "bare4",  "bare5",  "chain2", "chain3",
          "chain4", "chain5", "chain6", "M3", "N5"};
}

std::vector<AlgebraPtr> scan_corpus() {
  std::vector<AlgebraPtr> out = galois_catalog();
  out.insert(out.begin(), builtin("Z1"));
  for (const char* n : {"chain2", "chain3", "chain4", "chain5", "chain6", "M3", "N5",
                        "bare1", "bare2", "bare3", "bare4", "bare5"})
    out.push_back(builtin(n));
  return out;
}

std::vector<AlgebraPtr> galois_catalog() {
  std::vector<AlgebraPtr> out;
  for (const char* n : {"Z2", "Z3", "Z4", "V4", "S3", "Z6", "Q8", "D4", "Z8",
                        "Z2xZ2xZ2", "S3xZ2"})
    out.push_back(builtin(n));
  return out;
}

std::vector<AlgebraPtr> generator_groups() {
  std::vector<AlgebraPtr> out;
  for (const char* n : {"Z1", "Z2", "Z3", "Z4", "V4", "Z6", "S3", "Z8", "Q8", "D4",
                        "Z2xZ2xZ2"})
    out.push_back(builtin(n));
  return out;
}

namespace {

std::mutex g_pool_mutex;
std::map<std::pair<std::string, std::string>, std::vector<Homomorphism>> g_hom_pools;
std::map<std::pair<std::string, std::string>, std::vector<Homomorphism>> g_surj_pools;

}  // namespace

const std::vector<Homomorphism>& hom_pool(const AlgebraPtr& a, const AlgebraPtr& b) {
  std::lock_guard<std::mutex> lock(g_pool_mutex);
  auto key = std::make_pair(a->name(), b->name());
  auto it = g_hom_pools.find(key);
  if (it == g_hom_pools.end()) it = g_hom_pools.emplace(key, all_homs(a, b)).first;
  return it->second;
}

const std::vector<Homomorphism>& surjection_pool(const AlgebraPtr& a, const AlgebraPtr& b) {
  std::lock_guard<std::mutex> lock(g_pool_mutex);
  auto key = std::make_pair(a->name(), b->name());
  auto it = g_surj_pools.find(key);
  if (it == g_surj_pools.end()) it = g_surj_pools.emplace(key, all_surjections(a, b)).first;
  return it->second;
}

const std::vector<Homomorphism>& catalog_surjections() {
  static const std::vector<Homomorphism> surjections = [] {
    std::vector<Homomorphism> out;
    const auto cat = galois_catalog();
    for (const auto& x : cat)
      for (const auto& y : cat)
        for (const auto& f : surjection_pool(x, y)) out.push_back(f);
    return out;
  }();
  return surjections;
}

}  // namespace ua
