#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "colex/automaton.hpp"
#include "colex/rank_table.hpp"

namespace colex {

struct ReducedInterval {
  std::uint32_t start;   // 2s+1 (or 2f when s = f)
  std::uint32_t finish;  // 2f   (or 2s+1 when s = f)
  StateId state;
};

// §-style reduction: pair (s, f) -> [min(2s+1, 2f), max(2s+1, 2f)], so that
// f_i <= s_j holds exactly when the reduced intervals do not overlap.
std::vector<ReducedInterval> reduce_to_intervals(
    const IntervalRepresentation& rep);

struct ChainPartition {
  std::vector<std::vector<StateId>> chains;

  std::size_t width() const { return chains.size(); }
};

// Interval partitioning: radix-sort by start, sweep assigning each interval
// to the lowest-index idle device (idle = last finish strictly below the new
// start), opening a new device when none is idle. Device count is the width.
ChainPartition greedy_partition(const std::vector<ReducedInterval>& intervals);

ChainPartition chain_partition(const RankTable& ranks);

// True iff the chains partition the states and consecutive chain members
// satisfy f_u <= s_v (the comparability test of the rank-pair encoding).
bool verify_chain_partition(const IntervalRepresentation& rep,
                            const ChainPartition& partition);

// One line per chain: "C<k>: id id id ...".
std::string format_chains(const ChainPartition& partition);

}  // namespace colex
