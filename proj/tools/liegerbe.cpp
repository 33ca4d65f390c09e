// liegerbe: basic levels, equivariance obstructions and verification suites.

#include <CLI11.hpp>
#include <iostream>
#include <memory>

#include "liegerbe/serialize.hpp"
#include "liegerbe/verify.hpp"

using namespace liegerbe;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct GroupArgs {
  std::string family;
  int rank = 0;
  std::string subgroup = "full";
  std::string ellf_data;
  std::string format = "json";
};

void add_group_options(CLI::App* cmd, GroupArgs& g) {
  cmd->add_option("family,--family", g.family, "Dynkin family letter A-G")->required();
  cmd->add_option("rank,--rank", g.rank, "rank")->required();
  cmd->add_option("subgroup,--subgroup", g.subgroup,
                  "trivial | full | order:<d> | gen:<coweight>;.. | node id like 1+5+6 | classical name")
      ->capture_default_str();
  cmd->add_option("--ellf-data", g.ellf_data, "fundamental-level data file (default: bundled)");
}

std::unique_ptr<FundamentalLevelTable> load_ell_f(const std::string& path) {
  return std::make_unique<FundamentalLevelTable>(
      FundamentalLevelTable::load(path.empty() ? default_ell_f_path() : path));
}

LieType parse_type(const GroupArgs& g) {
  if (g.family.size() != 1) throw InvalidInput("family must be a single letter, got '" + g.family + "'");
  return LieType::parse(g.family[0], g.rank);
}

void print_record_md(const Json& j) {
  std::cout << "| key | value |\n|---|---|\n";
  for (const auto& [k, v] : j.items()) std::cout << "| " << k << " | " << (v.is_string() ? v.get<std::string>() : v.dump()) << " |\n";
}

void emit(const Json& j, const std::string& format) {
  if (format == "md")
    print_record_md(j);
  else
    std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Basic levels and equivariant extensions of gerbes on compact simple Lie groups"};
  app.require_subcommand(1);

  GroupArgs lv;
  auto* levels = app.add_subcommand("levels", "center, basic level and fundamental level of G/Z");
  add_group_options(levels, lv);
  levels->add_option("--format", lv.format)->check(CLI::IsMember({"json", "md"}));

  GroupArgs ob;
  long level = 1;
  auto* obstruction = app.add_subcommand("obstruction", "whether a gerbe at a given level admits an equivariant extension");
  add_group_options(obstruction, ob);
  obstruction->add_option("--level", level, "gerbe level")->required();
  obstruction->add_option("--format", ob.format)->check(CLI::IsMember({"json", "md"}));

  std::string suite = "all";
  VerifyOptions vopts;
  double tol = 0;
  auto* verify = app.add_subcommand("verify", "run invariant suites; exit 1 on any failure");
  verify->add_option("--suite", suite, "lattices | characters | action | tits | descent | forms | all")
      ->capture_default_str();
  verify->add_option("--seed", vopts.seed)->capture_default_str();
  verify->add_option("--tol", tol, "cocycle tolerance for the forms suite");
  verify->add_option("--max-rank", vopts.max_rank)->capture_default_str()->check(CLI::Range(2, 9));

  int max_rank = 8, max_N = 12;
  std::string cformat = "md", cellf;
  auto* corollary = app.add_subcommand("corollary", "table of basic levels against the classical list");
  corollary->add_option("--max-rank", max_rank)->capture_default_str()->check(CLI::Range(2, 9));
  corollary->add_option("--max-N", max_N)->capture_default_str()->check(CLI::Range(2, 16));
  corollary->add_option("--format", cformat)->capture_default_str()->check(CLI::IsMember({"json", "md"}));
  corollary->add_option("--ellf-data", cellf, "fundamental-level data file (default: bundled)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*levels || *obstruction) {
      const GroupArgs& g = *levels ? lv : ob;
      const RootSystem rs(parse_type(g));
      const Center c(rs);
      const CenterSubgroup z = resolve_subgroup(rs, c, g.subgroup);
      const auto ellf = load_ell_f(g.ellf_data);
      if (*levels) {
        emit(levels_record(rs, c, z, ellf.get()), g.format);
      } else {
        if (level < 1) throw InvalidInput("--level must be positive");
        emit(obstruction_record(rs, c, z, level, ellf.get()), g.format);
      }
      return kExitOk;
    }
    if (*verify) {
      if (verify->count("--tol")) {
        if (!(tol > 0)) throw InvalidInput("--tol must be positive");
        vopts.tol = tol;
      }
      std::vector<std::string> names;
      if (suite == "all")
        names = suite_names();
      else
        names = {suite};
      for (const auto& n : names)
        if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end())
          throw InvalidInput("unknown suite '" + n + "'");
      bool ok = true;
      for (const auto& n : names) {
        const SuiteReport r = run_suite(n, vopts);
        ok = ok && r.ok();
        std::cout << r.to_json().dump() << std::endl;
      }
      return ok ? kExitOk : kExitFailure;
    }
    if (*corollary) {
      const auto ellf = load_ell_f(cellf);
      const CorollaryTable t = corollary_table(max_rank, max_N, ellf.get());
      if (cformat == "md") {
        std::cout << to_markdown(t);
        for (const auto& v : t.su_violations) std::cout << "\nsu_condition violation: " << v;
        for (const auto& m : t.list_mismatches) std::cout << "\nlist mismatch: " << m;
        if (!t.su_violations.empty() || !t.list_mismatches.empty()) std::cout << "\n";
      } else {
        std::cout << to_json(t).dump(2) << "\n";
      }
      return kExitOk;
    }
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
