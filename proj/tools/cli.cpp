#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace phylocons::cli {
namespace {

const std::map<std::string, Method> kMethods{{"majority-plus", Method::kMajorityPlus},
                                             {"freqdiff", Method::kFreqDiff},
                                             {"majority-oracle", Method::kMajorityOracle},
                                             {"strict-oracle", Method::kStrictOracle}};
const std::map<std::string, FilterImpl> kFilters{{"naive", FilterImpl::kNaive}, {"fast", FilterImpl::kFast}};
const std::map<std::string, WeightsMethod> kWeights{
    {"bitvec", WeightsMethod::kBitvec}, {"day", WeightsMethod::kDay}, {"auto", WeightsMethod::kAuto}};

std::string method_name(Method m) {
  for (const auto& [name, value] : kMethods) {
    if (value == m) return name;
  }
  return "?";
}

std::size_t parse_count(const std::string& text) {
  std::size_t used = 0;
  const unsigned long long v = std::stoull(text, &used);
  if (used != text.size() || text.find('-') != std::string::npos) throw std::invalid_argument("bad number '" + text + "'");
  return static_cast<std::size_t>(v);
}

// Writes to the file at `path`, or to `out` when the path is empty.
bool emit(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return true;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

struct ConsensusArgs {
  std::string input;
  std::string output;
  Options options;
  bool oracle_check = false;
};

int cmd_consensus(const ConsensusArgs& args, std::ostream& out, std::ostream& err) {
  Profile profile;
  try {
    std::ifstream file(args.input, std::ios::binary);
    if (!file) {
      err << "error: cannot read " << args.input << "\n";
      return 1;
    }
    profile = read_profile(file);
    if (profile.k() == 0) throw ParseError("no trees in input", 0, 0);
    profile.validate();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const LeafSetMismatch& e) {
    err << "leaf-set mismatch: " << e.what() << "\n";
    return 3;
  }

  const Tree result = compute(profile, args.options);
  if (args.oracle_check) {
    ClusterSet expect;
    switch (args.options.method) {
      case Method::kMajorityPlus: expect = oracle_majority_plus(profile); break;
      case Method::kFreqDiff: expect = oracle_freq_diff(profile); break;
      case Method::kMajorityOracle: expect = oracle_majority(profile); break;
      case Method::kStrictOracle: expect = oracle_strict(profile); break;
    }
    if (cluster_collection(result) != expect) {
      err << "oracle mismatch: " << method_name(args.options.method) << " produced " << write_newick(result)
          << " but the oracle gives " << write_newick(tree_from_clusters(expect, profile.universe)) << "\n";
      return 4;
    }
  }
  return emit(args.output, write_newick(result) + "\n", out, err) ? 0 : 1;
}

struct GenArgs {
  std::size_t k = 1;
  std::size_t n = 2;
  std::uint64_t seed = 1;
  double contract_prob = kDefaultContractProb;
  std::string output;
};

int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err) {
  Profile p;
  try {
    p = random_profile(args.k, args.n, args.seed, args.contract_prob);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  std::string text;
  for (const Tree& t : p.trees) text += write_newick(t) + "\n";
  return emit(args.output, text, out, err) ? 0 : 1;
}

struct BenchArgs {
  std::string grid;
  int reps = 5;
  std::uint64_t seed = 1;
  Options options;
  std::string output;
};

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  std::vector<GridPoint> grid;
  try {
    grid = parse_grid(args.grid);
    for (const auto& g : grid) {
      if (g.k < 1 || g.n < 2) throw std::invalid_argument("grid needs k >= 1 and n >= 2");
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  std::ostringstream csv;
  csv << "method,k,n,median_seconds,reps\n";
  for (const auto& g : grid) {
    const Profile p = random_profile(g.k, g.n, args.seed);
    csv << method_name(args.options.method) << ',' << g.k << ',' << g.n << ','
        << median_seconds(p, args.options, args.reps) << ',' << args.reps << '\n';
  }
  return emit(args.output, csv.str(), out, err) ? 0 : 1;
}

}  // namespace

std::vector<GridPoint> parse_grid(const std::string& text) {
  std::vector<GridPoint> out;
  std::stringstream all(text);
  std::string item;
  while (std::getline(all, item, ';')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c) != 0; }),
               item.end());
    if (item.empty()) continue;
    const auto comma = item.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("grid entry '" + item + "' is not k,n");
    out.push_back({parse_count(item.substr(0, comma)), parse_count(item.substr(comma + 1))});
  }
  return out;
}

Tree compute(const Profile& profile, const Options& options) {
  switch (options.method) {
    case Method::kMajorityPlus: return majority_plus_consensus(profile);
    case Method::kFreqDiff: return frequency_difference_consensus(profile, options.filter, options.weights);
    case Method::kMajorityOracle: return tree_from_clusters(oracle_majority(profile), profile.universe);
    case Method::kStrictOracle: return tree_from_clusters(oracle_strict(profile), profile.universe);
  }
  throw std::logic_error("unknown method");
}

double median_seconds(const Profile& profile, const Options& options, int reps) {
  std::vector<double> times;
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    const Tree t = compute(profile, options);
    times.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  std::sort(times.begin(), times.end());
  const auto mid = times.size() / 2;
  return times.size() % 2 == 1 ? times[mid] : (times[mid - 1] + times[mid]) / 2;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Majority rule (+) and frequency difference consensus trees", "phylocons"};
  app.require_subcommand(1);

  ConsensusArgs cons;
  std::string cons_method = "majority-plus";
  auto* consensus = app.add_subcommand("consensus", "Compute a consensus tree from a Newick file");
  consensus->add_option("-i,--input", cons.input, "One Newick tree per line")->required();
  consensus->add_option("-o,--output", cons.output, "Output file (default stdout)");
  consensus->add_option("--method", cons_method)->check(CLI::IsMember(kMethods))->capture_default_str();
  auto* filter_opt = consensus->add_option("--filter-impl", cons.options.filter)
                         ->transform(CLI::CheckedTransformer(kFilters))
                         ->default_str("fast");
  auto* weights_opt = consensus->add_option("--weights-method", cons.options.weights)
                          ->transform(CLI::CheckedTransformer(kWeights))
                          ->default_str("auto");
  consensus->add_flag("--oracle-check", cons.oracle_check, "Compare with the brute-force oracle");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random profile");
  gen_cmd->add_option("-k,--trees", gen.k)->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("-n,--leaves", gen.n)->required()->check(CLI::Range(std::size_t{2}, std::size_t{1} << 24));
  gen_cmd->add_option("--seed", gen.seed)->capture_default_str();
  gen_cmd->add_option("--contract-prob", gen.contract_prob)->check(CLI::Range(0.0, 1.0))->capture_default_str();
  gen_cmd->add_option("-o,--output", gen.output);

  BenchArgs bench;
  std::string bench_method = "majority-plus";
  auto* bench_cmd = app.add_subcommand("bench", "Time a method over a grid of random profiles, CSV output");
  bench_cmd->add_option("--grid", bench.grid, "k1,n1;k2,n2;...")->required();
  bench_cmd->add_option("--reps", bench.reps)->check(CLI::Range(5, 1000))->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed)->capture_default_str();
  bench_cmd->add_option("--method", bench_method)->check(CLI::IsMember(kMethods))->capture_default_str();
  bench_cmd->add_option("--filter-impl", bench.options.filter)->transform(CLI::CheckedTransformer(kFilters));
  bench_cmd->add_option("--weights-method", bench.options.weights)->transform(CLI::CheckedTransformer(kWeights));
  bench_cmd->add_option("-o,--output", bench.output);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  if (consensus->parsed()) {
    cons.options.method = kMethods.at(cons_method);
    if (cons.options.method != Method::kFreqDiff && (filter_opt->count() > 0 || weights_opt->count() > 0)) {
      err << "usage error: --filter-impl and --weights-method apply to --method freqdiff only\n";
      return 1;
    }
    return cmd_consensus(cons, out, err);
  }
  if (gen_cmd->parsed()) return cmd_gen(gen, out, err);
  bench.options.method = kMethods.at(bench_method);
  return cmd_bench(bench, out, err);
}

}  // namespace phylocons::cli
