#include "colex/chain_partition.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <sstream>

namespace colex {

std::vector<ReducedInterval> reduce_to_intervals(
    const IntervalRepresentation& rep) {
  std::vector<ReducedInterval> intervals;
  intervals.reserve(rep.size());
  for (StateId u = 0; u < rep.size(); ++u) {
    auto [s, f] = rep.pairs[u];
    std::uint32_t a = 2 * s + 1;
    std::uint32_t b = 2 * f;
    intervals.push_back({std::min(a, b), std::max(a, b), u});
  }
  return intervals;
}

ChainPartition greedy_partition(const std::vector<ReducedInterval>& intervals) {
  // Starts live in [2, 4n+1]; bucket sort keeps ties in input (state) order.
  std::uint32_t max_start = 0;
  for (const ReducedInterval& iv : intervals) max_start = std::max(max_start, iv.start);
  std::vector<std::uint32_t> bucket(max_start + 2, 0);
  for (const ReducedInterval& iv : intervals) bucket[iv.start]++;
  for (std::uint32_t sum = 0, k = 0; k < bucket.size(); ++k) {
    std::uint32_t c = bucket[k];
    bucket[k] = sum;
    sum += c;
  }
  std::vector<const ReducedInterval*> sorted(intervals.size());
  for (const ReducedInterval& iv : intervals) sorted[bucket[iv.start]++] = &iv;

  ChainPartition partition;
  using Busy = std::pair<std::uint32_t, std::uint32_t>;  // (finish, device)
  std::priority_queue<Busy, std::vector<Busy>, std::greater<>> busy;
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> idle;
  for (const ReducedInterval* iv : sorted) {
    // Non-overlap in reduced coordinates is strict: idle means finish < start.
    while (!busy.empty() && busy.top().first < iv->start) {
      idle.push(busy.top().second);
      busy.pop();
    }
    std::uint32_t device;
    if (idle.empty()) {
      device = static_cast<std::uint32_t>(partition.chains.size());
      partition.chains.emplace_back();
    } else {
      device = idle.top();
      idle.pop();
    }
    partition.chains[device].push_back(iv->state);
    busy.push({iv->finish, device});
  }
  return partition;
}

ChainPartition chain_partition(const RankTable& ranks) {
  return greedy_partition(reduce_to_intervals(interval_representation(ranks)));
}

bool verify_chain_partition(const IntervalRepresentation& rep,
                            const ChainPartition& partition) {
  std::vector<bool> seen(rep.size(), false);
  std::size_t covered = 0;
  for (const std::vector<StateId>& chain : partition.chains) {
    for (std::size_t i = 0; i < chain.size(); ++i) {
      StateId u = chain[i];
      if (u >= rep.size() || seen[u]) return false;
      seen[u] = true;
      ++covered;
      if (i > 0) {
        StateId prev = chain[i - 1];
        if (rep.pairs[prev].second > rep.pairs[u].first) return false;
      }
    }
  }
  return covered == rep.size();
}

std::string format_chains(const ChainPartition& partition) {
  std::ostringstream os;
  for (std::size_t i = 0; i < partition.chains.size(); ++i) {
    os << "C" << (i + 1) << ":";
    for (StateId u : partition.chains[i]) os << " " << u;
    os << "\n";
  }
  return os.str();
}

}  // namespace colex
