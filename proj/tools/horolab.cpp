// horolab: batch runner for geodesic-ball identities on the manifold catalog.

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "horolab/acceptance.hpp"
#include "horolab/plan.hpp"
#include "horolab/runner.hpp"

namespace {

void apply_thread_cap() {
  const char* env = std::getenv("HOROLAB_THREADS");
  if (!env) return;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || n < 1)
    throw horolab::cli::UsageError("HOROLAB_THREADS must be a positive integer");
  omp_set_num_threads(static_cast<int>(n));
}

int run_plan(const std::string& path, const std::string& out_override) {
  auto plan = horolab::cli::load_plan(path);
  if (!out_override.empty()) plan.output = out_override;
  std::cout << "plan " << path << ": " << plan.manifold.name() << ", " << plan.suites.size()
            << " suite(s), " << plan.basepoints.size() << " point(s), " << plan.radii.size()
            << " radius/radii\n";
  const auto result = horolab::cli::run(plan, std::cout);
  if (plan.output) {
    std::ofstream out(*plan.output);
    if (!out) throw horolab::cli::UsageError(*plan.output + ": cannot open output file");
    horolab::cli::write_csv(out, result.rows);
    std::cout << "wrote " << result.rows.size() << " rows to " << *plan.output << '\n';
  } else {
    horolab::cli::write_csv(std::cout, result.rows);
  }
  std::cout << "summary: " << result.passed << " passed, " << result.failed << " failed, "
            << result.skipped << " skipped\n";
  return result.exit_status();
}

int verify_all(const std::string& out_dir) {
  namespace acc = horolab::acceptance;
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (int id = 1; id <= acc::kCriterionCount; ++id) {
    const acc::CriterionResult r = acc::run_criterion(id);
    std::cout << acc::summary_line(r) << std::endl;
    if (!r.passed()) ++failed;
    if (!out_dir.empty()) {
      std::ofstream out(std::filesystem::path(out_dir) / ("criterion_" + std::to_string(id) + ".csv"));
      horolab::cli::write_csv(out, r.rows);
    }
  }
  const double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = total < acc::kTotalTimeLimit;
  std::printf("%s  10  %-58s (%.2f s / %.0f s)\n", in_time && failed == 0 ? "PASS" : "FAIL",
              "verify-all completes criteria 1-9", total, acc::kTotalTimeLimit);
  std::cout << "summary: " << (acc::kCriterionCount - failed) << "/" << acc::kCriterionCount
            << " criteria passed\n";
  return failed == 0 && in_time ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"horolab: geodesic-ball identities on model Riemannian manifolds"};
  app.require_subcommand(1);

  std::string plan_path, csv_path;
  auto* run = app.add_subcommand("run", "execute the suites of a plan file");
  run->add_option("config", plan_path, "plan file (key = value lines)")->required();
  run->add_option("--out", csv_path, "CSV output path, overrides the plan's output");

  auto* list = app.add_subcommand("list", "list catalog manifolds, fields and suites");

  std::string out_dir;
  auto* verify = app.add_subcommand("verify-all", "run the full acceptance suite");
  verify->add_option("--out", out_dir, "directory for per-criterion CSV files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    apply_thread_cap();
    if (*run) return run_plan(plan_path, csv_path);
    if (*list) {
      std::cout << horolab::cli::list_catalog();
      return 0;
    }
    if (*verify) return verify_all(out_dir);
  } catch (const horolab::cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
