#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "fano/analyze.hpp"
#include "fano/classify.hpp"
#include "fano/enumerate.hpp"
#include "fano/errors.hpp"
#include "fano/io.hpp"

namespace {

using namespace fano;

std::size_t resolve_jobs(int flag) {
  if (flag > 0) return static_cast<std::size_t>(flag);
  if (const char* env = std::getenv("FANO_JOBS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (!end || *end != '\0' || v <= 0)
      throw ValidationError("FANO_JOBS must be a positive integer");
    return static_cast<std::size_t>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// dimension declared by the first block, for commands that infer it
std::size_t block_dim(const std::string& path, bool transpose) {
  auto blocks = read_vertex_blocks(path, transpose);
  if (blocks.empty())
    throw ValidationError("'" + path + "' holds no vertex blocks");
  return blocks.front().dim;
}

ImportResult import_file(const std::string& path, bool transpose = false) {
  return import_classes(path, block_dim(path, transpose), transpose);
}

int cmd_reflexive(std::size_t dim, const std::string& out) {
  auto list = reflexive_classes(dim);
  export_classes(list, out);
  std::cout << "reflexive classes (dim " << dim << "): " << list.keys.size()
            << "\n";
  return 0;
}

int cmd_oracle(std::size_t dim, const std::string& out, std::size_t jobs) {
  auto list = fano_oracle(dim, jobs);
  export_classes(list, out);
  std::cout << "fano classes by search (dim " << dim << "): " << list.keys.size()
            << "\n";
  return 0;
}

int cmd_classify(std::size_t dim, const std::string& db, bool transpose,
                 const std::string& out, std::size_t jobs,
                 const std::string& command) {
  if (dim < 2) throw DimensionError("classification starts at dimension 2");
  const auto t0 = std::chrono::steady_clock::now();

  RunManifest m;
  m.command = command;
  m.workers = jobs;

  ClassList input;
  if (!db.empty()) {
    m.input_hashes.push_back({db, hash_file(db)});
    auto imported = import_classes(db, dim - 1, transpose);
    if (imported.duplicates)
      std::cout << "input duplicates merged: " << imported.duplicates << "\n";
    input = std::move(imported.list);
  } else if (dim <= 3) {
    input = reflexive_classes(dim - 1);
  } else {
    throw ValidationError("dimension " + std::to_string(dim) +
                          " needs --reflexive-db with the " +
                          std::to_string(dim - 1) +
                          "-dimensional reflexive classes");
  }

  ClassifyStats stats;
  auto list = classify(dim, input, &stats, jobs);
  export_classes(list, out);

  m.wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  m.output_counts = {{"inputs", stats.inputs},
                     {"admissible", stats.admissible_inputs},
                     {"bases", stats.bases},
                     {"candidates", stats.candidates},
                     {"fano", stats.fano_hits},
                     {"classes", stats.unique_classes}};
  write_manifest(m, out + ".manifest.json");

  std::cout << "inputs: " << stats.inputs << "\n"
            << "admissible inputs: " << stats.admissible_inputs << "\n"
            << "base simplices: " << stats.bases << " (skipped "
            << stats.skipped_bases << ")\n"
            << "candidates: " << stats.candidates << "\n"
            << "invalid hulls: " << stats.invalid_hulls << "\n"
            << "fano survivors: " << stats.fano_hits << "\n"
            << "unique classes: " << stats.unique_classes << "\n";
  return 0;
}

int cmd_normal_form(const std::string& file, bool transpose) {
  for (const auto& b : read_vertex_blocks(file, transpose)) {
    auto p = LatticePolytope::from_points(static_cast<int>(b.dim), b.points);
    std::cout << normal_form(p).key << "\n";
  }
  return 0;
}

int cmd_stats(const std::string& file, bool csv, std::size_t jobs) {
  auto list = import_file(file).list;
  if (csv)
    std::cout << csv_report(class_reports(list, jobs));
  else
    std::cout << summary_table(summarize(list));
  return 0;
}

int cmd_verify(const std::string& file, std::size_t jobs) {
  auto list = import_file(file).list;
  auto suite = verify_all(list, jobs);
  for (const auto& c : suite.checks) {
    std::cout << c.name << ": " << c.passed << " passed, " << c.failed
              << " failed\n";
    for (const auto& f : c.failures) std::cout << "  " << f << "\n";
  }
  if (!suite.ok()) {
    std::cerr << "theorem suite failed on " << suite.total_failed()
              << " instances\n";
    return 2;
  }
  std::cout << "all checks passed over " << list.keys.size() << " classes\n";
  return 0;
}

int cmd_diff(const std::string& a, const std::string& b) {
  auto ka = import_file(a).list.keys;  // sorted by construction
  auto kb = import_file(b).list.keys;
  std::vector<std::string> only_a, only_b;
  std::set_difference(ka.begin(), ka.end(), kb.begin(), kb.end(),
                      std::back_inserter(only_a));
  std::set_difference(kb.begin(), kb.end(), ka.begin(), ka.end(),
                      std::back_inserter(only_b));
  for (const auto& k : only_a) std::cout << "< " << k << "\n";
  for (const auto& k : only_b) std::cout << "> " << k << "\n";
  if (only_a.empty() && only_b.empty()) {
    std::cout << "identical key sets (" << ka.size() << " classes)\n";
    return 0;
  }
  std::cout << only_a.size() << " classes only in " << a << ", "
            << only_b.size() << " only in " << b << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classification of smooth Fano lattice polytopes"};
  app.require_subcommand(1);

  std::string command;
  for (int i = 0; i < argc; ++i) {
    if (i) command += " ";
    command += argv[i];
  }

  std::size_t dim = 0;
  std::string out, db, file_a, file_b;
  bool transpose = false, csv = false;
  int jobs_flag = 0;

  auto* reflexive = app.add_subcommand(
      "reflexive", "enumerate reflexive classes (dim 1 and 2 built in)");
  reflexive->add_option("--dim", dim, "dimension")->required();
  reflexive->add_option("--out", out, "output vertex-block file")->required();

  auto* classify_cmd = app.add_subcommand(
      "classify", "reconstruct smooth classes from the reflexive ones below");
  classify_cmd->add_option("--dim", dim, "dimension to classify")->required();
  classify_cmd->add_option("--reflexive-db", db,
                           "vertex-block file with the (dim-1)-dimensional "
                           "reflexive classes");
  classify_cmd->add_flag("--transpose", transpose,
                         "read blocks as dim rows by count columns");
  classify_cmd->add_option("--out", out, "output vertex-block file")->required();
  classify_cmd->add_option("--jobs,-j", jobs_flag, "worker threads");

  auto* oracle = app.add_subcommand(
      "oracle", "exhaustive search over {-1,0,1} coordinates (dim <= 3)");
  oracle->add_option("--dim", dim, "dimension")->required();
  oracle->add_option("--out", out, "output vertex-block file")->required();
  oracle->add_option("--jobs,-j", jobs_flag, "worker threads");

  auto* nf = app.add_subcommand("normal-form",
                                "print one canonical key per input block");
  nf->add_option("file", file_a, "vertex-block file")->required();
  nf->add_flag("--transpose", transpose,
               "read blocks as dim rows by count columns");

  auto* stats = app.add_subcommand("stats", "statistics over a class file");
  stats->add_option("file", file_a, "vertex-block file")->required();
  stats->add_flag("--csv", csv, "emit per-class CSV instead of the summary");
  stats->add_option("--jobs,-j", jobs_flag, "worker threads");

  auto* verify = app.add_subcommand("verify",
                                    "run the structural theorem suite");
  verify->add_option("file", file_a, "vertex-block file")->required();
  verify->add_option("--jobs,-j", jobs_flag, "worker threads");

  auto* diff = app.add_subcommand("diff", "compare two class files by key set");
  diff->add_option("a", file_a, "first vertex-block file")->required();
  diff->add_option("b", file_b, "second vertex-block file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(reflexive)) return cmd_reflexive(dim, out);
    if (app.got_subcommand(classify_cmd))
      return cmd_classify(dim, db, transpose, out, resolve_jobs(jobs_flag),
                          command);
    if (app.got_subcommand(oracle))
      return cmd_oracle(dim, out, resolve_jobs(jobs_flag));
    if (app.got_subcommand(nf)) return cmd_normal_form(file_a, transpose);
    if (app.got_subcommand(stats))
      return cmd_stats(file_a, csv, resolve_jobs(jobs_flag));
    if (app.got_subcommand(verify))
      return cmd_verify(file_a, resolve_jobs(jobs_flag));
    if (app.got_subcommand(diff)) return cmd_diff(file_a, file_b);
  } catch (const UserError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalInvariantError& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
