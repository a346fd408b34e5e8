#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "actwb/enumerate.hpp"
#include "actwb/independence.hpp"
#include "actwb/injectivity.hpp"
#include "actwb/report.hpp"
#include "actwb/saturation.hpp"
#include "actwb/selftest.hpp"

using json = nlohmann::json;
using namespace actwb;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInputError = 2;

struct Global {
  uint64_t seed = 0;
  bool json_out = false;
  int parallelism = 1;
};

void emit(const Global& g, const json& doc, const std::string& plain) {
  if (g.json_out)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << plain;
}

json hom_json(const ActHom& h) { return json(h.map); }

int run_monoid_analyze(const Global& g, const std::string& path) {
  LoadedMonoid lm = load_monoid(path);
  json rep = monoid_report(lm, g.seed);
  std::ostringstream plain;
  const auto& r = rep["results"];
  plain << lm.id << ": size " << r["size"] << ", g(S) = " << r["generationDegree"]
        << ", right reversible: " << (r["rightReversible"].get<bool>() ? "yes" : "no")
        << ", commutative: " << (r["commutative"].get<bool>() ? "yes" : "no") << "\n"
        << "left ideals (" << r["idealCount"] << "):\n";
  for (const auto& ideal : r["ideals"])
    plain << "  " << ideal["elements"].dump() << "  min generators "
          << ideal["minGenerators"].dump() << "\n";
  emit(g, rep, plain.str());
  return kExitTrue;
}

int run_act_check(const Global& g, const std::string& path, bool inj, bool weak, int ninj,
                  int pure_bound) {
  LoadedAct la = load_act(path);
  InjectivityVerdict v;
  if (inj)
    v = is_injective(la.act);
  else if (weak)
    v = is_weakly_injective(la.act);
  else if (ninj > 0)
    v = is_n_injective(la.act, ninj);
  else
    v = is_absolutely_pure(la.act, pure_bound);
  json rep = act_check_report(la, v, g.seed);
  std::ostringstream plain;
  plain << la.id << ": " << rep["results"]["check"].get<std::string>() << " = "
        << (v.verdict ? "true" : "false") << "\n";
  if (v.counterexample)
    plain << "counterexample: hom from subact "
          << json(v.counterexample->small_elements).dump() << " values "
          << json(v.counterexample->hom).dump() << " does not extend\n";
  emit(g, rep, plain.str());
  return v.verdict ? kExitTrue : kExitFalse;
}

int run_type_eq(const Global&, const std::string& path1, const std::string& path2,
                const std::vector<int>& tuple1, const std::vector<int>& tuple2,
                const std::vector<int>& params) {
  LoadedAct a1 = load_act(path1);
  LoadedAct a2 = load_act(path2);
  PointedTypeRep p = type_rep(a1.act, tuple1, params);
  PointedTypeRep q = type_rep(a2.act, tuple2, params);
  TypeEqWitness w = types_equal_witness(p, q);
  json doc{{"equal", w.equal}};
  if (w.equal) {
    json m = json::array();
    for (auto [d, v] : w.map) m.push_back(json::array({d, v}));
    doc["witness"] = m;
  } else {
    doc["violation"] = w.violation;
  }
  std::cout << doc.dump(2) << "\n";
  return w.equal ? kExitTrue : kExitFalse;
}

int run_indep_check(const std::string& path, const std::vector<int>& base,
                    const std::vector<int>& left, const std::vector<int>& right) {
  LoadedAct la = load_act(path);
  IndependenceVerdict v = is_independent({la.act, base, left, right});
  json doc{{"independent", v.independent}, {"witness", v.witness}};
  std::cout << doc.dump(2) << "\n";
  return v.independent ? kExitTrue : kExitFalse;
}

int run_indep_base(const std::string& path, const std::vector<int>& base, int x) {
  LoadedAct la = load_act(path);
  std::vector<int> z = minimal_base(la.act, base, x);
  json doc{{"base", z}, {"size", z.size()}};
  std::cout << doc.dump(2) << "\n";
  return kExitTrue;
}

int run_indep_split(const std::string& path, const std::vector<int>& tuple,
                    const std::vector<int>& params, const std::vector<int>& base) {
  LoadedAct la = load_act(path);
  PointedTypeRep p = type_rep(la.act, tuple, params);
  SplitResult res = splits_over(p, base);
  json doc{{"splits", res.splits}};
  if (res.witness) {
    json iso = json::array();
    for (auto [a, b] : res.witness->iso) iso.push_back(json::array({a, b}));
    doc["witness"] = json{{"n1", res.witness->n1}, {"n2", res.witness->n2}, {"iso", iso}};
  }
  std::cout << doc.dump(2) << "\n";
  return res.splits ? kExitFalse : kExitTrue;
}

int run_factorize(const std::string& pathK, const std::string& pathL,
                  const std::vector<int>& embedding) {
  LoadedAct lk = load_act(pathK);
  LoadedAct ll = load_act(pathL);
  ActHom f = ActHom::checked(lk.act, ll.act, embedding);
  if (!f.is_mono()) throw WorkbenchError(Errc::not_mono, "embedding is not injective");
  CellularChain chain = cellular_factorize(f);
  std::string why;
  bool ok = verify_chain(chain, f, &why);
  json steps = json::array();
  for (const CellularStep& st : chain.steps) {
    json rows = json::array();
    for (int s = 0; s < st.cyclic_target.msize(); ++s) {
      json row = json::array();
      for (int x = 0; x < st.cyclic_target.size; ++x) row.push_back(st.cyclic_target.act(s, x));
      rows.push_back(row);
    }
    steps.push_back(json{{"cyclicTarget", json{{"size", st.cyclic_target.size}, {"action", rows}}},
                        {"attachingSubact", st.attaching_subact},
                        {"attachingHom", hom_json(st.attaching_hom)},
                        {"stageSize", st.square.g2.target.size}});
  }
  json doc{{"stepCount", chain.steps.size()}, {"verified", ok}, {"steps", steps}};
  if (!ok) doc["failure"] = why;
  std::cout << doc.dump(2) << "\n";
  return ok ? kExitTrue : kExitFalse;
}

int run_saturate(const std::string& path, const std::string& target, int max_steps, int size_cap,
                 const std::string& out_path) {
  LoadedAct la = load_act(path);
  SaturationResult res = saturate(la.act, max_steps, target == "full", size_cap);
  // Reference the monoid by its resolved location so the emitted act file
  // loads from wherever it is written.
  std::string mref = std::filesystem::absolute(la.monoid_path).lexically_normal().string();
  std::string text = act_to_text(res.result, mref);
  json doc{{"status", res.status == SatStatus::reached ? "reached" : "cap-exceeded"},
           {"steps", res.steps},
           {"finalSize", res.result.size},
           {"embedding", res.embedding.map},
           {"act", text}};
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << text;
    doc["written"] = out_path;
  }
  std::cout << doc.dump(2) << "\n";
  return res.status == SatStatus::reached ? kExitTrue : kExitFalse;
}

int run_zoo(const Global& g, const std::string& dir, int max_act_size) {
  if (!std::filesystem::is_directory(dir))
    throw WorkbenchError(Errc::parse_error, dir + " is not a directory");
  std::vector<std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".monoid") files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());

  struct Row {
    json report;
    json summary;
    std::string error;
  };
  std::vector<Row> rows(files.size());
  auto work = [&](size_t i) {
    try {
      LoadedMonoid lm = load_monoid(files[i]);
      rows[i].report = monoid_report(lm, g.seed);
      DichotomyScan scan = dichotomy_scan(lm.monoid, max_act_size);
      rows[i].summary = json{{"id", lm.id},
                             {"rightReversible", scan.right_rev},
                             {"injectiveActs", scan.injective_count},
                             {"coproductsChecked", scan.coproducts_checked},
                             {"coproductFailures", scan.coproduct_failures},
                             {"dichotomyViolation", scan.violation}};
    } catch (const std::exception& ex) {
      rows[i].error = ex.what();
    }
  };
  if (g.parallelism <= 1) {
    for (size_t i = 0; i < files.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int t = 0; t < g.parallelism; ++t)
      pool.emplace_back([&] {
        for (size_t i = next++; i < files.size(); i = next++) work(i);
      });
    for (auto& th : pool) th.join();
  }

  json reports = json::array(), summary = json::array(), errors = json::array();
  long violations = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].error.empty()) {
      errors.push_back(json{{"path", files[i]}, {"error", rows[i].error}});
      continue;
    }
    reports.push_back(rows[i].report);
    summary.push_back(rows[i].summary);
    if (rows[i].summary["dichotomyViolation"].get<bool>()) ++violations;
  }
  json doc{{"reports", reports},
           {"summary", summary},
           {"errors", errors},
           {"dichotomyViolations", violations}};
  std::ostringstream plain;
  plain << "monoids: " << reports.size() << ", errors: " << errors.size()
        << ", dichotomy violations: " << violations << "\n";
  for (const auto& s : summary)
    plain << "  " << s["id"].get<std::string>() << ": rev="
          << (s["rightReversible"].get<bool>() ? "yes" : "no ")
          << " injectives=" << s["injectiveActs"] << " coproduct failures="
          << s["coproductFailures"] << "\n";
  emit(g, doc, plain.str());
  return kExitTrue;
}

int run_selftest_cmd(const Global& g, int sizes) {
  auto results = run_selftest(g.seed, sizes);
  bool all = true;
  json props = json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    props.push_back(json{{"name", r.name},
                         {"pass", r.pass},
                         {"cases", r.cases},
                         {"counterexample", r.counterexample},
                         {"findings", r.findings}});
    if (!g.json_out) {
      std::cout << (r.pass ? "[ok]   " : "[FAIL] ") << r.name << " (" << r.cases << " cases)\n";
      if (!r.pass) std::cout << "       counterexample: " << r.counterexample << "\n";
      for (const auto& f : r.findings) std::cout << "       finding: " << f << "\n";
    }
  }
  if (g.json_out)
    std::cout << json{{"pass", all}, {"seed", g.seed}, {"sizes", sizes}, {"properties", props}}
                     .dump(2)
              << "\n";
  return all ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finite monoids and their acts"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--seed", g.seed, "randomization seed");
  app.add_flag("--json", g.json_out, "emit machine-readable JSON");
  app.add_option("--parallelism", g.parallelism, "worker threads for batch commands");

  // monoid analyze
  auto* monoid_cmd = app.add_subcommand("monoid", "monoid file operations");
  auto* analyze = monoid_cmd->add_subcommand("analyze", "ideal inventory and classification");
  std::string monoid_path;
  analyze->add_option("path", monoid_path, "monoid file")->required();

  // act check
  auto* act_cmd = app.add_subcommand("act", "act file operations");
  auto* check = act_cmd->add_subcommand("check", "injectivity and purity tests");
  std::string act_path;
  bool f_inj = false, f_weak = false;
  int f_n = 0, f_pure = 0;
  check->add_option("path", act_path, "act file")->required();
  auto* o1 = check->add_flag("--injective", f_inj, "Skornjakov-Baer injectivity");
  auto* o2 = check->add_flag("--weakly-injective", f_weak, "extension along all left ideals");
  auto* o3 = check->add_option("--n-injective", f_n, "extension along ideals with <= n generators");
  auto* o4 = check->add_option("--pure", f_pure, "bounded absolute purity with the given bound");
  o1->excludes(o2)->excludes(o3)->excludes(o4);
  o2->excludes(o3)->excludes(o4);
  o3->excludes(o4);

  // type eq
  auto* type_cmd = app.add_subcommand("type", "quantifier-free type operations");
  auto* eq = type_cmd->add_subcommand("eq", "decide equality of two pointed types");
  std::string eq_a1, eq_a2;
  std::vector<int> eq_t1, eq_t2, eq_params;
  eq->add_option("act1", eq_a1)->required();
  eq->add_option("act2", eq_a2)->required();
  eq->add_option("--tuple1", eq_t1, "marked tuple in the first act")->required();
  eq->add_option("--tuple2", eq_t2, "marked tuple in the second act")->required();
  eq->add_option("--params", eq_params, "shared parameter indices");

  // indep check|base|split
  auto* indep_cmd = app.add_subcommand("indep", "pullback independence relation");
  auto* icheck = indep_cmd->add_subcommand("check", "independence of two subsets over a base");
  std::string ic_path;
  std::vector<int> ic_base, ic_left, ic_right;
  icheck->add_option("path", ic_path)->required();
  icheck->add_option("--base", ic_base, "base subact elements");
  icheck->add_option("--left", ic_left, "left subset X");
  icheck->add_option("--right", ic_right, "right subset Y");
  auto* ibase = indep_cmd->add_subcommand("base", "minimal nonforking base for an element");
  std::string ib_path;
  std::vector<int> ib_base;
  int ib_x = 0;
  ibase->add_option("path", ib_path)->required();
  ibase->add_option("--base", ib_base, "subact A");
  ibase->add_option("--x", ib_x, "element outside A")->required();
  auto* isplit = indep_cmd->add_subcommand("split", "splitting of a type over a base");
  std::string is_path;
  std::vector<int> is_tuple, is_params, is_base;
  isplit->add_option("path", is_path)->required();
  isplit->add_option("--tuple", is_tuple)->required();
  isplit->add_option("--params", is_params);
  isplit->add_option("--base", is_base, "base subact M");

  // factorize
  auto* fact = app.add_subcommand("factorize", "cellular decomposition of an embedding");
  std::string fk_path, fl_path;
  std::vector<int> f_embed;
  fact->add_option("actK", fk_path)->required();
  fact->add_option("actL", fl_path)->required();
  fact->add_option("--embedding", f_embed, "image of each K element in L")->required();

  // saturate
  auto* sat = app.add_subcommand("saturate", "small-object-argument saturation");
  std::string sat_path, sat_target = "weak", sat_out;
  int sat_steps = 8, sat_cap = 512;
  sat->add_option("path", sat_path)->required();
  sat->add_option("--target", sat_target, "weak or full")
      ->check(CLI::IsMember({"weak", "full"}));
  sat->add_option("--max-steps", sat_steps, "step cap");
  sat->add_option("--size-cap", sat_cap, "carrier size cap");
  sat->add_option("--out", sat_out, "write the resulting act file here");

  // zoo
  auto* zoo = app.add_subcommand("zoo", "batch classification of a monoid directory");
  std::string zoo_dir;
  int zoo_cap = 3;
  zoo->add_option("dir", zoo_dir)->required();
  zoo->add_option("--max-act-size", zoo_cap, "act size cap for the dichotomy scan");

  // selftest
  auto* st = app.add_subcommand("selftest", "run the module invariant suites");
  int st_sizes = 4;
  st->add_option("--sizes", st_sizes, "instance size cap (0 = vacuous pass)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_monoid_analyze(g, monoid_path);
    if (*check) {
      if (!f_inj && !f_weak && f_n == 0 && f_pure == 0)
        throw WorkbenchError(Errc::parse_error,
                             "choose one of --injective, --weakly-injective, --n-injective, --pure");
      return run_act_check(g, act_path, f_inj, f_weak, f_n, f_pure);
    }
    if (*eq) return run_type_eq(g, eq_a1, eq_a2, eq_t1, eq_t2, eq_params);
    if (*icheck) return run_indep_check(ic_path, ic_base, ic_left, ic_right);
    if (*ibase) return run_indep_base(ib_path, ib_base, ib_x);
    if (*isplit) return run_indep_split(is_path, is_tuple, is_params, is_base);
    if (*fact) return run_factorize(fk_path, fl_path, f_embed);
    if (*sat) return run_saturate(sat_path, sat_target, sat_steps, sat_cap, sat_out);
    if (*zoo) return run_zoo(g, zoo_dir, zoo_cap);
    if (*st) return run_selftest_cmd(g, st_sizes);
    std::cerr << "no subcommand\n";
    return kExitInputError;
  } catch (const WorkbenchError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return kExitInputError;
  }
}
