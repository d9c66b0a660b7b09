#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "colex/automaton.hpp"
#include "colex/rank_table.hpp"

namespace colex {

struct DoublingIteration {
  unsigned level = 0;            // extenders are at distance 2^level
  std::size_t max_p = 0;         // max |P_level(u)| over Inf-tagged states
  std::size_t max_phat = 0;      // max |P̂_level(u)| before rank filtering
  std::uint64_t sum_p = 0;       // Σ_u |P_level(u)|, Inf copy
  std::uint64_t sum_phat = 0;    // Σ_u |P̂_level(u)|, Inf copy
  double millis = 0.0;
};

struct DoublingStats {
  std::vector<DoublingIteration> iterations;

  std::string to_csv() const;  // header: iter,max_P,max_Phat,sum_P,sum_Phat,millis
};

// Suffix-doubling sorter: level k certifies ranks for length-2^k suffixes;
// a step radix-sorts pairs (own rank, extender rank) and rebuilds extender
// sets by concatenating the extenders' extenders (sound by disjointness),
// keeping only min-rank (Inf) / max-rank (Sup) members.
class DoublingEngine {
 public:
  explicit DoublingEngine(const Dfa& dfa);

  void step();

  bool done() const;  // 2^level >= 2n, or all ranks distinct
  unsigned level() const { return level_; }
  std::uint32_t distinct() const { return distinct_; }

  const std::vector<std::uint32_t>& tagged_ranks() const { return rank_; }
  const std::vector<StateId>& extenders(TaggedState t) const;
  const DoublingStats& stats() const { return stats_; }

  RankTable ranks() const;

 private:
  const Dfa& dfa_;
  std::size_t n2_;
  unsigned level_ = 0;
  std::uint32_t distinct_ = 1;
  std::vector<std::uint32_t> rank_;
  std::vector<std::vector<StateId>> ext_;  // P_level per tagged state
  DoublingStats stats_;
};

struct DoublingOptions {
  bool early_exit = true;
  unsigned extra_levels = 0;  // run past the 2^k >= 2n stopping point
};

struct DoublingResult {
  RankTable ranks;
  DoublingStats stats;
};

DoublingResult sort_doubling(const Dfa& dfa, const DoublingOptions& opts = {});

}  // namespace colex
