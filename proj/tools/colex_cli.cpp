#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "colex/automaton.hpp"
#include "colex/chain_partition.hpp"
#include "colex/oracle.hpp"
#include "colex/rank_table.hpp"
#include "colex/sort_acyclic.hpp"
#include "colex/sort_doubling.hpp"
#include "colex/sort_naive.hpp"

namespace {

// Exit codes: 0 ok, 1 parse/usage error, 2 validation failure,
// 3 acyclic engine requested on cyclic input, 4 oracle/engine disagreement.
constexpr int kOk = 0;
constexpr int kParseError = 1;
constexpr int kValidationError = 2;
constexpr int kCyclicError = 3;
constexpr int kDisagreement = 4;

struct ExitWith {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ExitWith{kParseError, "cannot read " + path};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

colex::Dfa load(const std::string& path, bool strict = true) {
  try {
    return colex::parse(read_file(path), strict);
  } catch (const colex::ParseError& e) {
    throw ExitWith{kParseError, path + ": " + e.what()};
  }
}

void check_valid(const colex::Dfa& dfa) {
  colex::ValidationReport report = colex::validate(dfa);
  if (!report.ok()) throw ExitWith{kValidationError, report.to_string()};
}

colex::RankTable run_engine(const colex::Dfa& dfa, const std::string& algo) {
  if (algo == "naive") return colex::sort_naive(dfa).ranks;
  if (algo == "doubling") return colex::sort_doubling(dfa).ranks;
  if (algo == "acyclic") {
    if (!colex::is_acyclic(dfa)) {
      throw ExitWith{kCyclicError, "--algo acyclic requires an acyclic DFA"};
    }
    return colex::sort_acyclic(dfa);
  }
  // auto
  if (colex::is_acyclic(dfa)) return colex::sort_acyclic(dfa);
  return colex::sort_doubling(dfa).ranks;
}

void print_ranks(const colex::RankTable& ranks) {
  for (std::size_t u = 0; u < ranks.inf_rank.size(); ++u) {
    std::cout << u << " " << ranks.inf_rank[u] << " " << ranks.sup_rank[u] << "\n";
  }
}

int cmd_sort(const std::string& file, const std::string& algo) {
  colex::Dfa dfa = load(file);
  check_valid(dfa);
  print_ranks(run_engine(dfa, algo));
  return kOk;
}

int cmd_chains(const std::string& file, const std::string& algo) {
  colex::Dfa dfa = load(file);
  check_valid(dfa);
  colex::ChainPartition partition = colex::chain_partition(run_engine(dfa, algo));
  std::cout << colex::format_chains(partition);
  std::cout << "width: " << partition.width() << "\n";
  return kOk;
}

int cmd_bench(const std::string& file) {
  colex::Dfa dfa = load(file);
  check_valid(dfa);
  std::cout << colex::sort_doubling(dfa).stats.to_csv();
  return kOk;
}

int cmd_validate(const std::string& file) {
  colex::Dfa dfa = load(file, /*strict=*/false);
  colex::ValidationReport report = colex::validate(dfa);
  if (!report.ok()) {
    std::cerr << report.to_string();
    return kValidationError;
  }
  std::cout << "ok\n";
  return kOk;
}

int cmd_gen(const colex::GenParams& params, const std::string& out) {
  colex::Dfa dfa;
  try {
    dfa = colex::generate(params);
  } catch (const std::invalid_argument& e) {
    throw ExitWith{kParseError, e.what()};
  }
  std::string text = colex::serialize(dfa);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out, std::ios::binary);
    if (!os) throw ExitWith{kParseError, "cannot write " + out};
    os << text;
  }
  return kOk;
}

int cmd_oracle(const std::string& file, const std::string& algo, std::uint64_t cap) {
  colex::Dfa dfa = load(file);
  check_valid(dfa);
  if (dfa.n > 4096) {
    throw ExitWith{kParseError, "oracle is brute force; refusing n > 4096"};
  }

  colex::RankTable oracle = colex::oracle_rank_table(dfa);
  colex::RankTable engine = run_engine(dfa, algo);
  if (!oracle.same_ranks(engine)) {
    throw ExitWith{kDisagreement, "engine rank table disagrees with the oracle"};
  }

  colex::IntervalRepresentation rep = colex::interval_representation(oracle);
  colex::Relation rel = colex::relation_from_rank_pairs(rep);
  if (!colex::is_strict_partial_order(rel)) {
    throw ExitWith{kDisagreement, "rank-pair relation is not a strict partial order"};
  }
  if (colex::is_acyclic(dfa)) {
    auto def_rel = colex::oracle_order_def(dfa, cap);
    if (!def_rel) {
      std::cerr << "note: enumeration cap exceeded; definition-level check skipped\n";
    } else if (!(*def_rel == rel)) {
      throw ExitWith{kDisagreement,
                     "enumerated order disagrees with the rank-pair relation"};
    }
  }

  std::size_t cover = colex::oracle_min_chain_cover(rel);
  colex::ChainPartition partition = colex::chain_partition(engine);
  if (partition.width() != cover || !colex::verify_chain_partition(rep, partition)) {
    throw ExitWith{kDisagreement, "greedy chain partition is not minimum"};
  }

  print_ranks(oracle);
  std::cout << "relation: " << rel.count() << "\n";
  std::cout << "chain cover: " << cover << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximum co-lex order and minimum chain partition of DFAs"};
  app.require_subcommand(1);

  std::string file, algo = "auto", out;
  std::uint64_t cap = 1000000;
  colex::GenParams params;
  const auto algo_check = CLI::IsMember({"auto", "naive", "doubling", "acyclic"});

  CLI::App* sort = app.add_subcommand("sort", "print per-state inf/sup co-lex ranks");
  sort->add_option("file", file)->required();
  sort->add_option("--algo", algo)->check(algo_check);

  CLI::App* chains = app.add_subcommand("chains", "print a minimum chain partition");
  chains->add_option("file", file)->required();
  chains->add_option("--algo", algo)->check(algo_check);

  CLI::App* bench = app.add_subcommand("bench", "per-iteration doubling statistics as CSV");
  bench->add_option("file", file)->required();

  CLI::App* validate = app.add_subcommand("validate", "check the DFA model assumptions");
  validate->add_option("file", file)->required();

  CLI::App* gen = app.add_subcommand("gen", "generate a random DFA");
  gen->add_option("--n", params.n)->required();
  gen->add_option("--sigma", params.alphabet_size)->required();
  gen->add_option("--density", params.density);
  gen->add_flag("--acyclic", params.acyclic);
  gen->add_option("--seed", params.seed);
  gen->add_option("-o,--output", out);

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force cross-check of the engines");
  oracle->add_option("file", file)->required();
  oracle->add_option("--algo", algo)->check(algo_check);
  oracle->add_option("--cap", cap, "max enumerated strings for the definition check");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(sort)) return cmd_sort(file, algo);
    if (app.got_subcommand(chains)) return cmd_chains(file, algo);
    if (app.got_subcommand(bench)) return cmd_bench(file);
    if (app.got_subcommand(validate)) return cmd_validate(file);
    if (app.got_subcommand(gen)) return cmd_gen(params, out);
    if (app.got_subcommand(oracle)) return cmd_oracle(file, algo, cap);
  } catch (const ExitWith& e) {
    std::cerr << e.message << (e.message.ends_with("\n") ? "" : "\n");
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kParseError;
  }
  return kOk;
}
