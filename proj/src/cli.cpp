#include "hrht/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hrht/forced_edges.hpp"
#include "hrht/minmax.hpp"
#include "hrht/minsum.hpp"
#include "hrht/oracle.hpp"
#include "hrht/random_instance.hpp"
#include "hrht/reductions.hpp"
#include "hrht/stability.hpp"

namespace hrht {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

auto read_file(const std::string& path) -> std::string {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

auto load_document(const std::string& path) -> InstanceDocument {
  const auto text = read_file(path);
  try {
    return parse_document(text);
  } catch (const InstanceError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

void print_verdict(const Instance& inst, const OracleVerdict& v, std::ostream& out) {
  out << "query " << to_string(v.query) << '\n';
  if (v.optimum)
    out << "optimum " << *v.optimum << '\n';
  else
    out << "optimum none" << (v.truncated ? " (search truncated)" : "") << '\n';
  out << "feasibility-checks " << v.feasibility_checks << '\n';
  for (std::size_t i = 0; i < v.witnesses.size(); ++i) {
    const auto& w = v.witnesses[i];
    out << "witness " << i + 1 << '\n';
    for (Hospital h : inst.hospitals()) out << "quota " << inst.name(h) << ' ' << w.quotas[h] << '\n';
    for (std::size_t j = 0; j < w.matchings.size(); ++j) {
      out << "ssm " << j + 1 << '\n';
      for (Resident r : inst.residents()) {
        if (auto h = w.matchings[j].partner(r))
          out << "match " << inst.name(r) << ' ' << inst.name(*h) << '\n';
        else
          out << "unmatched " << inst.name(r) << '\n';
      }
    }
  }
}

}  // namespace

auto run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) -> int {
  CLI::App app{"Strongly stable matchings with hospital-side ties and quota augmentation", "hrht"};
  app.require_subcommand(1);

  std::string file;
  std::string matching_file;
  std::string notion_text = "strong";
  int ell = 0;
  std::string query_text;
  std::string mode_text = "independent";
  int cap_edges = 16;
  std::string type_text;
  std::string sat_file;
  bool resident_perfect = false;
  std::string output;
  RandomInstanceParams params;
  std::uint64_t seed = 0;
  int max_edges = -1;

  auto* check = app.add_subcommand("check", "Print a strongly stable matching or NO-SSM");
  check->add_option("file", file, "Instance file")->required();

  auto* verify = app.add_subcommand("verify", "List blocking pairs of a matching");
  verify->add_option("file", file, "Instance file")->required();
  verify->add_option("--matching", matching_file, "Matching file")->required();
  verify->add_option("--notion", notion_text, "strong, super or weak")
      ->check(CLI::IsMember({"strong", "super", "weak"}));

  auto* minsum = app.add_subcommand("minsum", "Minimum total quota augmentation");
  minsum->add_option("file", file, "Instance file")->required();

  auto* minsum_fe_cmd = app.add_subcommand("minsum-fe", "Minimum total augmentation with forced edges");
  minsum_fe_cmd->add_option("file", file, "Instance file with forced: lines")->required();

  auto* minmax = app.add_subcommand("minmax-bt", "Resident-optimal augmentation with per-hospital bound");
  minmax->add_option("file", file, "Instance file")->required();
  minmax->add_option("--ell", ell, "Per-hospital increase bound")->required()->check(CLI::NonNegativeNumber);

  auto* oracle = app.add_subcommand("oracle", "Exhaustive search for small instances");
  oracle->add_option("query", query_text, "minsum, minsum-fe, min-ell, min-cost or ssm-all")
      ->required()
      ->check(CLI::IsMember({"minsum", "minsum-fe", "min-ell", "min-cost", "ssm-all"}));
  oracle->add_option("file", file, "Instance file")->required();
  oracle->add_option("--cap-edges", cap_edges, "Edge cap for literal enumeration")
      ->check(CLI::NonNegativeNumber);
  oracle->add_option("--mode", mode_text, "independent, pruned or fast")
      ->check(CLI::IsMember({"independent", "pruned", "fast"}));

  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->require_subcommand(1);
  auto* reduction = gen->add_subcommand("reduction", "Gadget instance from a monotone formula");
  reduction->add_option("--type", type_text, "1in3 or nae")->required()->check(CLI::IsMember({"1in3", "nae"}));
  reduction->add_option("--sat", sat_file, "Formula file")->required();
  reduction->add_flag("--resident-perfect", resident_perfect, "Add fallback hospitals (nae only)");
  reduction->add_option("-o,--output", output, "Output file");
  auto* random = gen->add_subcommand("random", "Seeded random instance");
  random->add_option("--residents", params.residents)->required()->check(CLI::NonNegativeNumber);
  random->add_option("--hospitals", params.hospitals)->required()->check(CLI::NonNegativeNumber);
  random->add_option("--density", params.density)->required()->check(CLI::Range(0.0, 1.0));
  random->add_option("--max-tie", params.max_tie)->required()->check(CLI::PositiveNumber);
  random->add_option("--quota-max", params.quota_max)->required()->check(CLI::NonNegativeNumber);
  random->add_option("--quota-min", params.quota_min)->check(CLI::NonNegativeNumber);
  random->add_option("--max-edges", max_edges)->check(CLI::NonNegativeNumber);
  random->add_option("--seed", seed)->required();
  random->add_option("-o,--output", output, "Output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    msg.erase(std::remove(msg.begin(), msg.end(), '\n'), msg.end());
    err << "error: " << msg << '\n';
    return exit_error;
  }

  try {
    if (check->parsed()) {
      const auto doc = load_document(file);
      const auto& inst = doc.instance;
      if (auto m = solve_strong(inst, inst.quotas())) {
        out << serialize_matching(inst, inst.quotas(), *m);
        return exit_ok;
      }
      out << "NO-SSM\n";
      return exit_infeasible;
    }
    if (verify->parsed()) {
      const auto doc = load_document(file);
      const auto& inst = doc.instance;
      MatchingDocument md;
      try {
        md = parse_matching(read_file(matching_file), inst);
      } catch (const InstanceError& e) {
        throw UsageError(matching_file + ": " + e.what());
      }
      const auto report = blocking_pairs(inst, md.quotas, md.matching, *parse_notion(notion_text));
      for (const auto& bp : report.pairs)
        out << "blocking " << inst.name(bp.resident) << ' ' << inst.name(bp.hospital) << ' '
            << (bp.witness ? inst.name(*bp.witness) : std::string("empty-slot")) << '\n';
      out << "blocking-pairs " << report.pairs.size() << '\n';
      return exit_ok;
    }
    if (minsum->parsed()) {
      const auto doc = load_document(file);
      const auto sol = minsum_augment(doc.instance);
      out << serialize_matching(doc.instance, sol.quotas, sol.matching);
      out << "total-increase " << sol.total_increase << '\n';
      return exit_ok;
    }
    if (minsum_fe_cmd->parsed()) {
      const auto doc = load_document(file);
      const auto outcome = minsum_fe(doc.instance, doc.forced);
      if (const auto* bad = std::get_if<FeInfeasible>(&outcome)) {
        out << "INFEASIBLE: " << to_string(bad->reason) << '\n';
        return exit_infeasible;
      }
      const auto& sol = std::get<FeSolution>(outcome);
      out << serialize_matching(doc.instance, sol.quotas, sol.matching);
      out << "total-increase " << sol.total_increase << '\n';
      return exit_ok;
    }
    if (minmax->parsed()) {
      const auto doc = load_document(file);
      const auto sol = minmax_bt(doc.instance, ell);
      out << serialize_matching(doc.instance, sol.quotas, sol.matching);
      out << "max-increase " << sol.max_increase << '\n';
      return exit_ok;
    }
    if (oracle->parsed()) {
      const auto doc = load_document(file);
      const auto& inst = doc.instance;
      SearchOptions options;
      options.mode = *parse_oracle_mode(mode_text);
      options.cap_edges = cap_edges;
      OracleVerdict verdict;
      switch (*parse_oracle_query(query_text)) {
        case OracleQuery::minsum: verdict = brute_minsum(inst, options); break;
        case OracleQuery::minsum_fe: verdict = brute_minsum_fe(inst, doc.forced, options); break;
        case OracleQuery::min_ell: verdict = brute_min_ell(inst, options); break;
        case OracleQuery::min_cost: {
          std::vector<long long> costs;
          for (const auto& c : doc.costs) costs.push_back(c.value_or(1));
          verdict = brute_min_cost(inst, costs, options);
          break;
        }
        case OracleQuery::ssm_all: verdict = brute_ssm_all(inst, options); break;
      }
      print_verdict(inst, verdict, out);
      return exit_ok;
    }
    if (reduction->parsed()) {
      Mono3SatFormula f = parse_sat(read_file(sat_file));
      if (type_text == "1in3" && resident_perfect)
        throw UsageError("--resident-perfect applies to --type nae only");
      const auto g = type_text == "1in3" ? gen_mincost_instance(f) : gen_cap12_instance(f, resident_perfect);
      write_output(output, serialize_document(g.document), out);
      return exit_ok;
    }
    if (random->parsed()) {
      if (max_edges >= 0) params.max_edges = max_edges;
      const auto inst = random_instance(params, seed);
      write_output(output, serialize_instance(inst), out);
      return exit_ok;
    }
  } catch (const std::exception& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: " << msg << '\n';
    return exit_error;
  }
  err << "error: no command\n";
  return exit_error;
}

}  // namespace hrht
