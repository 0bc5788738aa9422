// famalg — finite set-family algebra engine.
//
//   famalg run <script>          run a script file
//   famalg check <law> [...]     search one registry law
//   famalg model <check> [...]   run a named group-model check
//   famalg laws                  list the law registry

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "famalg/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

int cmd_run(const std::string& path, bool json, std::uint64_t seed,
            int threads) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "famalg: cannot open " << path << "\n";
    return kExitUsage;
  }
  std::ostringstream buf;
  buf << in.rdbuf();

  famalg::script::Script script;
  try {
    script = famalg::script::parse_script(buf.str());
  } catch (const famalg::parse_error& e) {
    std::cerr << "famalg: parse error: " << e.what() << "\n";
    return kExitUsage;
  }

  famalg::script::RunOptions opts;
  opts.default_seed = seed;
  opts.threads = threads;
  const auto result = famalg::script::run_script(script, opts);
  if (json)
    std::cout << famalg::report::run_report_json(result);
  else
    std::cout << famalg::report::render_text(result);
  if (result.usage_error) return kExitUsage;
  return result.ok ? kExitOk : kExitViolation;
}

int cmd_check(const std::string& law_id, bool random, int universe, int maxfam,
              std::uint64_t trials, std::uint64_t seed, int threads,
              bool json) {
  const famalg::laws::Law* law = famalg::laws::find_law(law_id);
  if (!law) {
    std::cerr << "famalg: unknown law id " << law_id << "\n";
    return kExitUsage;
  }
  if (universe == 0) universe = law->default_universe;
  if (maxfam == 0) maxfam = law->default_max_members;
  famalg::laws::SearchReport report;
  try {
    report = random ? famalg::laws::random_search(*law, universe, maxfam,
                                                  trials, seed)
                    : famalg::laws::exhaustive_search(*law, universe, maxfam,
                                                      threads);
  } catch (const std::exception& e) {
    std::cerr << "famalg: " << e.what() << "\n";
    return kExitUsage;
  }
  if (json)
    std::cout << famalg::report::check_report_json(report);
  else
    std::cout << famalg::report::render_text(report);
  return report.expectation_met() ? kExitOk : kExitViolation;
}

int cmd_model(const std::string& check, const std::string& group_spec,
              const std::string& subgroup_gens, const std::string& weights,
              bool json) {
  famalg::script::ModelContext ctx;
  try {
    if (!group_spec.empty()) {
      ctx.group = famalg::models::GroupModel::make(
          famalg::script::parse_group_spec(group_spec));
      if (!subgroup_gens.empty()) {
        std::vector<int> gens;
        std::stringstream ss(subgroup_gens);
        std::string tok;
        while (std::getline(ss, tok, ','))
          if (!tok.empty()) gens.push_back(std::stoi(tok));
        ctx.subgroup = famalg::models::subgroup_generated(*ctx.group, gens);
      }
    }
    if (!weights.empty()) {
      if (!ctx.group) {
        std::cerr << "famalg: --weights needs --group\n";
        return kExitUsage;
      }
      std::vector<famalg::models::Rational> ws;
      std::stringstream ss(weights);
      std::string tok;
      while (std::getline(ss, tok, ','))
        if (!tok.empty()) ws.push_back(famalg::script::parse_rational(tok));
      ctx.weights = famalg::models::WeightedMeasure::make(
          ctx.group->universe(), ws);
    }
    const auto outcome = famalg::script::run_model_check(check, ctx);
    if (json)
      std::cout << famalg::report::model_report_json(outcome);
    else
      std::cout << famalg::report::render_text(outcome);
    return outcome.pass ? kExitOk : kExitViolation;
  } catch (const std::exception& e) {
    std::cerr << "famalg: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_laws(bool json) {
  if (json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& law : famalg::laws::builtin_laws()) {
      nlohmann::json o;
      o["id"] = law.id;
      o["kind"] = famalg::laws::to_string(law.kind);
      nlohmann::json roles = nlohmann::json::array();
      for (auto r : law.roles) roles.push_back(famalg::laws::to_string(r));
      o["roles"] = roles;
      o["default-universe"] = law.default_universe;
      o["default-maxfam"] = law.default_max_members;
      o["statement"] = law.statement;
      arr.push_back(o);
    }
    nlohmann::json doc;
    doc["schema"] = famalg::report::kSchema;
    doc["laws"] = arr;
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& law : famalg::laws::builtin_laws()) {
    std::string roles;
    for (auto r : law.roles) {
      if (!roles.empty()) roles += ",";
      roles += famalg::laws::to_string(r);
    }
    std::cout << law.id << "\t" << famalg::laws::to_string(law.kind) << "\t("
              << roles << ")\tdefault " << law.default_universe << "/"
              << law.default_max_members << "\t" << law.statement << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite set-family algebra engine"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "structured JSON output");

  // --json is also accepted after any subcommand
  const auto add_json = [&json](CLI::App* sub) {
    sub->add_flag("--json", json, "structured JSON output");
  };

  auto* run = app.add_subcommand("run", "run a script file");
  add_json(run);
  std::string script_path;
  std::uint64_t seed = 0;
  int threads = 1;
  run->add_option("script", script_path, "script file")->required();
  run->add_option("--seed", seed, "seed for random searches");
  run->add_option("--threads", threads, "worker threads for searches");

  auto* check = app.add_subcommand("check", "search one registry law");
  add_json(check);
  std::string law_id;
  bool exhaustive = false, random = false;
  int universe = 0, maxfam = 0;
  std::uint64_t trials = 1000, check_seed = 0;
  int check_threads = 1;
  check->add_option("law", law_id, "law id, e.g. L2 or N1")->required();
  check->add_flag("--exhaustive", exhaustive, "exhaustive search (default)");
  check->add_flag("--random", random, "seeded random search");
  check->add_option("--universe", universe, "universe size");
  check->add_option("--maxfam", maxfam, "max family members");
  check->add_option("--trials", trials, "random trials");
  check->add_option("--seed", check_seed, "random seed");
  check->add_option("--threads", check_threads, "worker threads");

  auto* model = app.add_subcommand("model", "run a named group-model check");
  add_json(model);
  std::string check_name, group_spec, subgroup_gens, weight_list;
  model->add_option("name", check_name,
                    "vitali-partition | transversal-count | coset-union | "
                    "trivial-pair | invariance | measure-lemma")
      ->required();
  model->add_option("--group", group_spec, "group spec, e.g. Z6 or Z2xZ3");
  model->add_option("--subgroup", subgroup_gens,
                    "subgroup generators, comma separated");
  model->add_option("--weights", weight_list,
                    "weights, comma separated (e.g. 1,1/2,0)");

  auto* laws_cmd = app.add_subcommand("laws", "list the law registry");
  add_json(laws_cmd);

  // exit codes are pinned to 0/1/2; usage problems of any kind are 2
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (app.got_subcommand("run"))
    return cmd_run(script_path, json, seed, threads);
  if (app.got_subcommand("check")) {
    if (exhaustive && random) {
      std::cerr << "famalg: pick one of --exhaustive/--random\n";
      return kExitUsage;
    }
    return cmd_check(law_id, random, universe, maxfam, trials, check_seed,
                     check_threads, json);
  }
  if (app.got_subcommand("model"))
    return cmd_model(check_name, group_spec, subgroup_gens, weight_list, json);
  return cmd_laws(json);
}
