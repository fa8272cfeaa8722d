#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ahncut/compare.hpp"
#include "ahncut/energy.hpp"
#include "ahncut/errors.hpp"
#include "ahncut/generator.hpp"
#include "ahncut/io.hpp"
#include "ahncut/moves.hpp"
#include "ahncut/oracle.hpp"
#include "ahncut/validate.hpp"

namespace {

using namespace ahncut;

struct SolveFlags {
  std::string network;
  std::string algorithm = "expansion";
  std::string init = "argmin";
  std::string trace_path;
  std::string out_path;
  int max_iters = 500;
  std::uint64_t seed = 0;
  bool timings = false;
};

InitOptions parse_init(const std::string& text, std::uint64_t seed) {
  InitOptions init;
  init.seed = seed;
  if (text == "argmin") {
    init.kind = InitKind::kArgmin;
  } else if (text == "random") {
    init.kind = InitKind::kRandom;
  } else if (text.rfind("uniform:", 0) == 0) {
    init.kind = InitKind::kUniform;
    const std::string idx = text.substr(8);
    try {
      std::size_t pos = 0;
      const int l = std::stoi(idx, &pos);
      if (pos != idx.size() || l < 0) throw std::invalid_argument(idx);
      init.uniform_label = Label::base(l);
    } catch (const std::exception&) {
      throw ParameterError("uniform init needs a label index, got '" + idx + "'");
    }
  } else {
    throw ParameterError("unknown init scheme '" + text + "' (argmin, uniform:<l>, random)");
  }
  return init;
}

int run_validate(const std::string& path) {
  const HierarchicalNetwork net = load_network(path);
  std::printf("structure: ok (%d levels, %d labels, %d auxiliary variables)\n", net.num_levels(),
              net.num_labels(), net.num_aux_vars());
  std::printf("edge-family: %s\n", check_edge_family(net) ? "ok" : "FAIL");
  bool pass = check_edge_family(net);
  if (net.num_levels() == 1) {
    std::printf("consistency: ok (no auxiliary levels)\n");
  } else {
    const ConsistencyReport report = check_hierarchical_consistency(net);
    if (report.all_pass) {
      std::printf("consistency: ok (%zu auxiliary variables)\n", report.entries.size());
    } else {
      std::printf("consistency: FAIL\n");
      for (const ConsistencyEntry& e : report.entries) {
        if (e.pass) continue;
        std::printf("  level %d var %d: %s >= %s\n", e.level + 1, e.var,
                    format_number(e.lhs).c_str(), format_number(e.rhs).c_str());
      }
      pass = false;
    }
  }
  return pass ? 0 : 1;
}

int run_eval(const std::string& net_path, const std::string& labeling_path) {
  const HierarchicalNetwork net = load_network(net_path);
  const auto rows = parse_labeling_rows(read_text_file(labeling_path));
  if (rows.size() != 1 && static_cast<int>(rows.size()) != net.num_levels())
    throw InvalidLabelingError("labeling has " + std::to_string(rows.size()) +
                               " level rows, the network has " + std::to_string(net.num_levels()));
  if (static_cast<int>(rows.size()) == net.num_levels()) {
    Labeling x;
    x.levels = rows;
    validate_labeling(net, x);
    std::printf("joint=%s\n", format_number(eval_joint(net, x)).c_str());
  }
  const HigherOrderResult res = eval_higher_order(net, rows.front());
  std::printf("higher_order=%s\n", format_number(res.energy).c_str());
  return 0;
}

int run_solve(const SolveFlags& flags) {
  const HierarchicalNetwork net = load_network(flags.network);
  Labeling labeling;
  double final_joint = 0.0, final_higher = 0.0;
  int sweeps = 0;
  std::vector<TraceRecord> trace;
  std::vector<std::string> notes;

  if (flags.algorithm == "brute") {
    const HigherOrderResult res = brute_force_map(net);
    labeling = res.labeling;
    final_joint = final_higher = res.energy;
  } else {
    const auto algorithm = parse_algorithm(flags.algorithm);
    if (!algorithm)
      throw ParameterError("unknown algorithm '" + flags.algorithm +
                           "' (expansion, swap, range-expansion, range-swap, icm, brute)");
    SolveOptions options;
    options.max_sweeps = flags.max_iters;
    options.init = parse_init(flags.init, flags.seed);
    const MoveResult result = solve(net, *algorithm, options);
    labeling = result.labeling;
    final_joint = result.final_joint;
    final_higher = result.final_higher_order;
    sweeps = result.sweeps;
    trace = result.trace;
    notes = result.notes;
  }

  for (const std::string& note : notes) std::fprintf(stderr, "note: %s\n", note.c_str());
  std::printf("final_joint=%s final_higher_order=%s sweeps=%d\n",
              format_number(final_joint).c_str(), format_number(final_higher).c_str(), sweeps);
  if (!flags.trace_path.empty())
    write_text_file(flags.trace_path, trace_to_csv(trace, flags.timings));
  if (!flags.out_path.empty()) write_text_file(flags.out_path, write_labeling(labeling));
  return 0;
}

int run_gen(const std::string& spec_path, const std::string& out_path) {
  const GeneratorSpec spec = GeneratorSpec::parse(read_text_file(spec_path));
  const HierarchicalNetwork net = generate(spec);
  const std::string text = write_network(net);
  if (out_path.empty())
    std::fputs(text.c_str(), stdout);
  else
    write_text_file(out_path, text);
  return 0;
}

std::vector<GeneratorSpec> parse_corpus(const std::string& text) {
  std::vector<GeneratorSpec> corpus;
  std::size_t start = 0;
  int line_no = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    std::string line = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    start = end == std::string::npos ? text.size() + 1 : end + 1;
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      corpus.push_back(GeneratorSpec::parse(line));
    } catch (const ParseError& e) {
      throw ParseError(std::string("corpus entry: ") + e.what(), line_no);
    }
  }
  return corpus;
}

// A corpus is either a directory of network files or a text file with one
// generator spec per line.
std::vector<HierarchicalNetwork> load_corpus(const std::string& corpus_path) {
  std::vector<HierarchicalNetwork> instances;
  if (std::filesystem::is_directory(corpus_path)) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(corpus_path))
      if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& file : files) instances.push_back(load_network(file.string()));
    if (instances.empty()) throw ParameterError("corpus directory has no network files");
  } else {
    const std::vector<GeneratorSpec> corpus = parse_corpus(read_text_file(corpus_path));
    if (corpus.empty()) throw ParameterError("corpus file has no generator specs");
    for (const GeneratorSpec& spec : corpus) instances.push_back(generate(spec));
  }
  return instances;
}

int run_compare(const std::string& corpus_path, const std::vector<std::string>& algorithm_names,
                const std::string& csv_path, int max_iters, std::uint64_t seed,
                const std::string& init, bool timings) {
  const std::vector<HierarchicalNetwork> instances = load_corpus(corpus_path);
  std::vector<MoveAlgorithm> algorithms;
  for (const std::string& name : algorithm_names) {
    const auto algorithm = parse_algorithm(name);
    if (!algorithm)
      throw ParameterError("unknown algorithm '" + name +
                           "' (expansion, swap, range-expansion, range-swap, icm)");
    algorithms.push_back(*algorithm);
  }
  if (algorithms.empty()) algorithms = all_algorithms();
  SolveOptions options;
  options.max_sweeps = max_iters;
  options.init = parse_init(init, seed);
  const ComparisonReport report = compare_algorithms(instances, algorithms, options);
  std::fputs(report.to_table(timings).c_str(), stdout);
  if (!csv_path.empty()) write_text_file(csv_path, report.to_csv(timings));
  return report.solved_cells() > 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MAP inference on associative hierarchical networks"};
  app.require_subcommand(1);

  std::string net_path, labeling_path, spec_path, corpus_path, out_path, csv_path;
  SolveFlags solve_flags;
  std::vector<std::string> cmp_algorithms;
  int cmp_iters = 500;
  std::uint64_t cmp_seed = 0;
  std::string cmp_init = "argmin";
  bool cmp_timings = false;

  CLI::App* validate = app.add_subcommand("validate", "Check structure and invariants of a network file");
  validate->add_option("network", net_path, "network file")->required();

  CLI::App* eval = app.add_subcommand("eval", "Evaluate a labeling file against a network");
  eval->add_option("network", net_path, "network file")->required();
  eval->add_option("labeling", labeling_path, "labeling file (base row, or one row per level)")
      ->required();

  CLI::App* solve = app.add_subcommand("solve", "Minimize the network energy");
  solve->add_option("network", solve_flags.network, "network file")->required();
  solve->add_option("--algorithm", solve_flags.algorithm,
                    "expansion, swap, range-expansion, range-swap, icm, or brute");
  solve->add_option("--max-iters", solve_flags.max_iters, "sweep limit")->check(CLI::PositiveNumber);
  solve->add_option("--seed", solve_flags.seed, "seed for random initialization");
  solve->add_option("--init", solve_flags.init, "argmin, uniform:<l>, or random");
  solve->add_option("--trace", solve_flags.trace_path, "write per-step trace CSV here");
  solve->add_option("--out", solve_flags.out_path, "write the final labeling here");
  solve->add_flag("--timings", solve_flags.timings, "report measured step times in the trace");

  CLI::App* gen = app.add_subcommand("gen", "Generate a synthetic network from a spec file");
  gen->add_option("spec", spec_path, "key=value generator spec file")->required();
  gen->add_option("--out", out_path, "output network file (default: stdout)");

  CLI::App* compare = app.add_subcommand("compare", "Run several algorithms over an instance corpus");
  compare
      ->add_option("corpus", corpus_path,
                   "directory of network files, or a file with one generator spec per line")
      ->required();
  compare
      ->add_option("--algorithms", cmp_algorithms,
                   "comma-separated algorithm names (default: all five)")
      ->delimiter(',');
  compare->add_option("--csv", csv_path, "also write the report as CSV here");
  compare->add_option("--max-iters", cmp_iters, "sweep limit per solve")->check(CLI::PositiveNumber);
  compare->add_option("--seed", cmp_seed, "seed for random initialization");
  compare->add_option("--init", cmp_init, "argmin, uniform:<l>, or random");
  compare->add_flag("--timings", cmp_timings, "report measured mean solve times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (validate->parsed()) return run_validate(net_path);
    if (eval->parsed()) return run_eval(net_path, labeling_path);
    if (solve->parsed()) return run_solve(solve_flags);
    if (gen->parsed()) return run_gen(spec_path, out_path);
    if (compare->parsed())
      return run_compare(corpus_path, cmp_algorithms, csv_path, cmp_iters, cmp_seed, cmp_init,
                         cmp_timings);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const ParameterError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const InvalidLabelingError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
