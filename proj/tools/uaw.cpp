// uaw — universal algebra workbench command line.
//
// Exit codes: 0 = property holds / all checks pass, 1 = counterexample or
// disagreement found, 2 = input or usage error (including diagram files that
// violate a check's hypotheses).

#include <chrono>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "ua/corpus.hpp"
#include "ua/galois.hpp"
#include "ua/io.hpp"
#include "ua/suite.hpp"

using namespace ua;

namespace {

struct GlobalFlags {
  bool json = false;
  int jobs = 0;
};

Exec exec_mode(const GlobalFlags& g) { return g.jobs == 1 ? Exec::serial : Exec::parallel; }

void emit(const CheckReport& rep, bool json) {
  if (json)
    std::cout << rep.to_json().dump(2) << "\n";
  else
    std::cout << rep.to_text();
}

nlohmann::json witness_json(const SLWitness& w) {
  return nlohmann::json{{"R", partition_json(w.R)}, {"S", partition_json(w.S)},
                        {"T", partition_json(w.T)}, {"x", w.x},
                        {"y", w.y},                 {"t", w.t},
                        {"z", w.z}};
}

double run_ms(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

CheckFile resolve_check_target(const std::string& target) {
  if (std::filesystem::exists(target) && std::filesystem::is_regular_file(target))
    return load_check_file(target, &std::cerr);
  if (auto b = try_builtin(target)) return CheckFile{*b, {}};
  throw InputError("'" + target + "' is neither a readable file nor a builtin name");
}

int cmd_check(const std::string& target, const std::string& kind, const GlobalFlags& g) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckFile cf = resolve_check_target(target);
  const AlgebraPtr a = cf.algebra;
  CheckReport rep;
  rep.check = kind;
  rep.target = a->name();
  const Exec ex = exec_mode(g);
  if (kind == "modularity") {
    const CongruenceLattice l = all_congruences(a);
    const ModularityResult r = is_modular(l);
    rep.facts["congruences"] = l.size();
    rep.verdict = r.modular ? "holds" : "counterexample";
    if (!r.modular)
      rep.witness = {{"x", partition_json(l.at((*r.witness)[0]))},
                     {"y", partition_json(l.at((*r.witness)[1]))},
                     {"z", partition_json(l.at((*r.witness)[2]))}};
  } else if (kind == "shifting" || kind == "gumm") {
    const CongruenceLattice l = all_congruences(a);
    const ScanResult r =
        kind == "shifting" ? shifting_lemma(l, ex) : gumm_fibrations(l, ex);
    rep.facts["congruences"] = l.size();
    rep.verdict = r.holds ? "holds" : "counterexample";
    if (!r.holds) rep.witness = witness_json(*r.witness);
  } else if (kind == "permute") {
    const CongruenceLattice l = all_congruences(a);
    if (cf.congruences.size() >= 2) {
      // named congruence literals: check the listed pairs
      bool all2 = true, all3 = true;
      nlohmann::json pairs = nlohmann::json::array();
      for (size_t i = 0; i < cf.congruences.size(); ++i)
        for (size_t j = i + 1; j < cf.congruences.size(); ++j) {
          const Permutability p =
              permutability(cf.congruences[i].second, cf.congruences[j].second);
          all2 = all2 && p.permute2;
          all3 = all3 && p.permute3;
          pairs.push_back({{"first", cf.congruences[i].first},
                           {"second", cf.congruences[j].first},
                           {"permute2", p.permute2},
                           {"permute3", p.permute3}});
        }
      rep.facts["pairs"] = pairs;
      rep.verdict = all2 ? "holds" : "counterexample";
    } else {
      const PermutabilityScan r = permutability_scan(l, ex);
      rep.facts["congruences"] = l.size();
      rep.facts["all-pairs-permute2"] = r.all2;
      rep.facts["all-pairs-permute3"] = r.all3;
      rep.verdict = r.all2 ? "holds" : "counterexample";
      if (!r.all2)
        rep.witness = {{"R", partition_json(r.witness2->first)},
                       {"S", partition_json(r.witness2->second)}};
    }
  } else if (kind == "bourn") {
    const CongruenceLattice l = all_congruences(a);
    const BournResult r = bourn_scan(l, ex);
    rep.add_hypothesis("shifting-lemma-holds", r.sl_holds);
    rep.facts["congruences"] = l.size();
    if (r.sl_holds) {
      rep.verdict = r.counterexample ? "counterexample" : "holds";
      if (r.counterexample)
        rep.witness = {{"R", partition_json((*r.witness)[0])},
                       {"S", partition_json((*r.witness)[1])},
                       {"T", partition_json((*r.witness)[2])}};
    }
  } else {
    throw CLI::ValidationError("check", "unknown check '" + kind + "'");
  }
  rep.elapsed_ms = run_ms(t0);
  emit(rep, g.json);
  if (!rep.hypotheses_ok()) return 0;  // hypothesis-not-met is not a counterexample
  return rep.failure() ? 1 : 0;
}

int cmd_lattice(const std::string& target, const GlobalFlags& g) {
  CheckFile cf = resolve_check_target(target);
  const CongruenceLattice l = all_congruences(cf.algebra);
  nlohmann::json elems = nlohmann::json::array();
  for (int i = 0; i < l.size(); ++i) elems.push_back(partition_json(l.at(i)));
  nlohmann::json leq = nlohmann::json::array();
  for (int i = 0; i < l.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < l.size(); ++j) row.push_back(l.leq(i, j) ? 1 : 0);
    leq.push_back(row);
  }
  nlohmann::json j{{"schema", "uaw-lattice/1"},
                   {"algebra", cf.algebra->name()},
                   {"congruences", elems},
                   {"leq", leq}};
  if (g.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "algebra: " << cf.algebra->name() << "\n"
              << "congruences: " << l.size() << "\n";
    for (int i = 0; i < l.size(); ++i)
      std::cout << "  [" << i << "] " << partition_text(l.at(i)) << "\n";
    std::cout << "--- report-json ---\n" << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_diagram(const std::string& path, const std::string& kind, const GlobalFlags& g) {
  const auto t0 = std::chrono::steady_clock::now();
  DiagramDoc doc = load_diagram_file(path, &std::cerr);
  CheckReport rep;
  rep.target = path;
  if (kind == "prop41" || kind == "prop42") {
    if (!std::holds_alternative<Rectangle>(doc))
      throw HypothesisViolated(kind + " expects a rectangle diagram");
    const Rectangle& rect = std::get<Rectangle>(doc);
    rep = kind == "prop41" ? rect_split_check(rect) : rect_pushout_check(rect);
  } else if (kind == "cube") {
    if (!std::holds_alternative<Cube>(doc))
      throw HypothesisViolated("cube check expects a cube diagram");
    rep = cube_check(std::get<Cube>(doc));
  } else if (kind == "pullback" || kind == "pushout" || kind == "saturated") {
    if (!std::holds_alternative<Square>(doc))
      throw HypothesisViolated(kind + " expects a square diagram");
    const Square& sq = std::get<Square>(doc);
    rep.check = kind;
    const bool r = kind == "pullback"    ? is_pullback(sq)
                   : kind == "pushout"   ? is_pushout(sq)
                                         : is_right_saturated(sq);
    rep.verdict = r ? "pass" : "fail";
  } else {
    throw CLI::ValidationError("diagram", "unknown check '" + kind + "'");
  }
  rep.target = path;
  rep.elapsed_ms = run_ms(t0);
  emit(rep, g.json);
  if (!rep.hypotheses_ok()) return 2;  // file violates the check's hypotheses
  return rep.failure() ? 1 : 0;
}

int cmd_generate(const std::string& kind, uint64_t seed, int64_t budget,
                 const GlobalFlags& g) {
  const auto t0 = std::chrono::steady_clock::now();
  const Abelianization refl;
  nlohmann::json instances = nlohmann::json::array();
  int failures = 0;
  int64_t attempts = 0;
  bool exhausted = false;
  if (kind == "prop41" || kind == "prop42") {
    GenOptions opt;
    opt.seed = seed;
    opt.budget = budget;
    opt.require_split = kind == "prop41";
    GeneratedRectangles gen = generate_rectangles(opt);
    attempts = gen.attempts;
    exhausted = gen.exhausted;
    for (const auto& rect : gen.instances) {
      CheckReport rep =
          kind == "prop41" ? rect_split_check(rect) : rect_pushout_check(rect);
      const bool ok = rep.hypotheses_ok() && rep.verdict == "pass";
      if (!ok) ++failures;
      instances.push_back({{"apex", rect.first.top.source()->name()},
                           {"nontrivial", rectangle_nontrivial(rect)},
                           {"pass", ok}});
    }
  } else if (kind == "cube") {
    auto cubes = cube_catalog(refl);
    if (budget >= 0 && static_cast<int64_t>(cubes.size()) > budget)
      cubes.erase(cubes.begin() + static_cast<long>(budget), cubes.end());
    attempts = static_cast<int64_t>(cubes.size());
    for (const auto& cube : cubes) {
      CheckReport rep = cube_check(cube);
      const bool ok = rep.hypotheses_ok() && rep.verdict == "pass";
      if (!ok) ++failures;
      instances.push_back({{"apex", cube.top_back.source()->name()}, {"pass", ok}});
    }
    exhausted = instances.empty() && budget > 0;
  } else if (kind == "admissibility") {
    auto squares = admissibility_squares(refl);
    if (budget >= 0 && static_cast<int64_t>(squares.size()) > budget)
      squares.erase(squares.begin() + static_cast<long>(budget), squares.end());
    attempts = static_cast<int64_t>(squares.size());
    for (const auto& sq : squares) {
      const bool ok = admissibility_check(refl, sq);
      if (!ok) ++failures;
      instances.push_back({{"corner", sq.top.source()->name()}, {"pass", ok}});
    }
    exhausted = instances.empty() && budget > 0;
  } else {
    throw CLI::ValidationError("generate",
                               "unknown kind '" + kind +
                                   "' (prop41 | prop42 | cube | admissibility)");
  }
  nlohmann::json summary{{"schema", "uaw-generate/1"},
                         {"kind", kind},
                         {"seed", seed},
                         {"budget", budget},
                         {"attempts", attempts},
                         {"instances", instances.size()},
                         {"failures", failures},
                         {"exhausted", exhausted},
                         {"per_instance", instances}};
  if (g.json) {
    std::cout << summary.dump(2) << "\n";
  } else {
    std::cout << "generate " << kind << ": " << instances.size() << " instance(s) from "
              << attempts << " attempt(s), " << failures << " failure(s)";
    if (exhausted) std::cout << " [generation-exhausted]";
    std::cout << "  (" << static_cast<long>(run_ms(t0)) << " ms)\n";
    std::cout << "--- report-json ---\n" << summary.dump(2) << "\n";
  }
  return failures ? 1 : 0;
}

int cmd_galois_classify(const std::string& path, const GlobalFlags& g) {
  const Abelianization refl;
  const Homomorphism f = load_hom_file(path, &std::cerr);
  if (!f.surjective()) throw InputError("classify: the map is not surjective");
  const ExtensionReport r = classify_extension(refl, f);
  nlohmann::json j{{"schema", "uaw-classify/1"},
                   {"source", f.source()->name()},
                   {"target", f.target()->name()},
                   {"surjective", r.surjective},
                   {"split", r.split},
                   {"trivial", r.trivial},
                   {"normal", r.normal},
                   {"central_by_normal", *r.central.by_normal},
                   {"central_by_kernel_center", *r.central.by_kernel_center},
                   {"agreement", r.agree_normal_kernel_center},
                   {"witness_search", "bounded"}};
  if (r.central.witness)
    j["witness"] = hom_to_json(*r.central.witness);
  else
    j["witness"] = nullptr;
  if (g.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "extension " << f.source()->name() << " -> " << f.target()->name() << "\n"
              << "  split:   " << (r.split ? "yes" : "no") << "\n"
              << "  trivial: " << (r.trivial ? "yes" : "no") << "\n"
              << "  normal:  " << (r.normal ? "yes" : "no") << "\n"
              << "  central (by normality):     " << (*r.central.by_normal ? "yes" : "no")
              << "\n"
              << "  central (by kernel centre): "
              << (*r.central.by_kernel_center ? "yes" : "no") << "\n"
              << "  strategies agree: " << (r.agree_normal_kernel_center ? "yes" : "no")
              << "\n--- report-json ---\n"
              << j.dump(2) << "\n";
  }
  return r.agree_normal_kernel_center ? 0 : 1;
}

int cmd_galois_theorem53(const std::string& path, const GlobalFlags& g) {
  const Abelianization refl;
  const Homomorphism f = load_hom_file(path, &std::cerr);
  CheckReport rep = theorem53_check(refl, f);
  rep.target = path;
  emit(rep, g.json);
  if (!rep.hypotheses_ok()) return 2;  // not applicable
  return rep.failure() ? 1 : 0;
}

template <class Fn>
int emit_scan(Fn&& scan, const GlobalFlags& g) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckReport rep = scan();
  rep.elapsed_ms = run_ms(t0);
  emit(rep, g.json);
  return rep.failure() ? 1 : 0;
}

int cmd_suite(uint64_t seed, const GlobalFlags& g) {
  SuiteOptions opt;
  opt.seed = seed;
  opt.exec = exec_mode(g);
  const SuiteResult r = run_suite(opt);
  if (g.json)
    std::cout << suite_json(r, seed).dump(2) << "\n";
  else
    std::cout << suite_text(r, seed);
  return r.pass() ? 0 : 1;
}

int cmd_search(int max_size, const GlobalFlags& g) {
  const auto t0 = std::chrono::steady_clock::now();
  auto hit = sl_counterexample_search(max_size, exec_mode(g));
  CheckReport rep;
  rep.check = "sl-counterexample";
  rep.target = "bare sets up to " + std::to_string(max_size);
  if (hit) {
    rep.verdict = "counterexample";
    rep.witness = witness_json(hit->witness);
    rep.witness["algebra"] = hit->algebra->name();
  } else {
    rep.verdict = "holds";
  }
  rep.elapsed_ms = run_ms(t0);
  emit(rep, g.json);
  return hit ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"uaw — finite universal algebra workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags g;
  app.add_flag("--json", g.json, "machine-readable output only");
  app.add_option("--jobs", g.jobs, "worker threads (1 = serial reference path)");

  // check
  auto* check = app.add_subcommand("check", "run a congruence-level check on an algebra");
  std::vector<std::string> check_pos;
  std::string check_builtin;
  check->add_option("args", check_pos,
                    "[target] kind, with kind one of modularity | shifting | gumm | "
                    "permute | bourn")
      ->expected(1, 2);
  check->add_option("--builtin", check_builtin, "builtin algebra name");

  // lattice
  auto* lattice = app.add_subcommand("lattice", "dump the congruence lattice");
  std::string lattice_target;
  lattice->add_option("target", lattice_target)->required();

  // diagram
  auto* diagram = app.add_subcommand("diagram", "check a diagram file");
  std::string diagram_file, diagram_kind;
  diagram->add_option("file", diagram_file)->required();
  diagram->add_option("kind", diagram_kind,
                      "prop41 | prop42 | cube | pullback | pushout | saturated")
      ->required();

  // generate
  auto* generate = app.add_subcommand("generate", "generate and verify instances");
  std::string gen_kind;
  uint64_t gen_seed = 0;
  int64_t gen_budget = 0;
  generate->add_option("kind", gen_kind, "prop41 | prop42 | cube | admissibility")
      ->required();
  generate->add_option("--seed", gen_seed, "generator seed")->required();
  generate->add_option("--budget", gen_budget, "sampling budget")->required();

  // galois
  auto* galois = app.add_subcommand("galois", "extension classification layer");
  auto* classify = galois->add_subcommand("classify", "classify a surjection file");
  std::string classify_file;
  classify->add_option("file", classify_file)->required();
  auto* cor54 = galois->add_subcommand("scan-cor54", "normality vs kernel-centre scan");
  auto* birkhoff = galois->add_subcommand("scan-birkhoff", "unit squares are pushouts");
  auto* admiss =
      galois->add_subcommand("scan-admissibility", "reflector preserves pullbacks");
  auto* thm53 = galois->add_subcommand("theorem53", "central split surjection is trivial");
  std::string thm53_file;
  thm53->add_option("file", thm53_file)->required();
  galois->require_subcommand(1);

  // search
  auto* search = app.add_subcommand("search", "counterexample searches");
  std::string search_kind;
  int search_max_size = 4;
  search->add_option("kind", search_kind, "sl-counterexample")->required();
  search->add_option("--max-size", search_max_size, "largest bare-set carrier");

  // suite
  auto* suite = app.add_subcommand("suite", "verification suite");
  auto* suite_run = suite->add_subcommand("run", "run every acceptance property");
  uint64_t suite_seed = 1;
  suite_run->add_option("--seed", suite_seed, "suite seed (default 1)");
  suite->require_subcommand(1);

  try {
    app.parse(argc, argv);
    if (g.jobs > 0) set_jobs(g.jobs);
    if (check->parsed()) {
      std::string target, kind;
      if (check_pos.size() == 2) {
        if (!check_builtin.empty())
          throw CLI::ValidationError("check", "give either a target or --builtin, not both");
        target = check_pos[0];
        kind = check_pos[1];
      } else {
        if (check_builtin.empty())
          throw CLI::ValidationError("check", "no target given (name one or use --builtin)");
        target = check_builtin;
        kind = check_pos[0];
      }
      return cmd_check(target, kind, g);
    }
    if (lattice->parsed()) return cmd_lattice(lattice_target, g);
    if (diagram->parsed()) return cmd_diagram(diagram_file, diagram_kind, g);
    if (generate->parsed()) return cmd_generate(gen_kind, gen_seed, gen_budget, g);
    if (galois->parsed()) {
      const Abelianization refl;
      if (classify->parsed()) return cmd_galois_classify(classify_file, g);
      if (cor54->parsed())
        return emit_scan([&] { return cor54_scan(refl, exec_mode(g)); }, g);
      if (birkhoff->parsed())
        return emit_scan([&] { return birkhoff_scan(refl, exec_mode(g)); }, g);
      if (admiss->parsed())
        return emit_scan([&] { return admissibility_scan(refl, exec_mode(g)); }, g);
      if (thm53->parsed()) return cmd_galois_theorem53(thm53_file, g);
    }
    if (search->parsed()) {
      if (search_kind != "sl-counterexample")
        throw CLI::ValidationError("search", "unknown search '" + search_kind + "'");
      return cmd_search(search_max_size, g);
    }
    if (suite->parsed()) return cmd_suite(suite_seed, g);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const HypothesisViolated& e) {
    std::cerr << "hypothesis violated: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
