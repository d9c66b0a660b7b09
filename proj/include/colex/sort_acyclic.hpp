#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "colex/automaton.hpp"
#include "colex/order_list.hpp"
#include "colex/rank_table.hpp"

namespace colex {

// Kahn's algorithm with a min-id tie break; nullopt when the DFA is cyclic.
std::optional<std::vector<StateId>> topological_order(const Dfa& dfa);
bool is_acyclic(const Dfa& dfa);

// singleton[u] is true iff I_u is a singleton: u is the source, or u has one
// incoming transition from a singleton state. Acyclic inputs only.
std::vector<bool> singleton_states(const Dfa& dfa,
                                   const std::vector<StateId>& topo);

struct AcyclicResult {
  RankTable ranks;
  // Spanning-tree parents: the root-to-u label path in the Inf tree spells
  // inf I_u (and sup I_u in the Sup tree). kNoState for the source.
  std::vector<StateId> inf_parent;
  std::vector<StateId> sup_parent;
  std::uint64_t list_operations = 0;
};

// Online sorter for acyclic DFAs: processes states in topological order,
// hangs each tagged state under its min-rank (Inf) / max-rank (Sup)
// predecessor, and inserts it into one shared order list strictly after all
// entries with a smaller label and, within its label block, ordered by
// parent rank. O(m log n) list operations.
AcyclicResult sort_acyclic_full(const Dfa& dfa);
RankTable sort_acyclic(const Dfa& dfa);

// Final positions → dense ranks: the two entries of each singleton state
// represent the same string and collapse onto one rank; everything else
// keeps list order. Entries must be the 2n tagged indices (state + n*tag).
RankTable collapse_equal_ranks(const DynamicOrderList& list, const Dfa& dfa);

}  // namespace colex
