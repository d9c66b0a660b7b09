#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "colex/automaton.hpp"
#include "colex/colex_strings.hpp"
#include "colex/rank_table.hpp"

namespace colex {

// Brute-force ground truth, deliberately independent of the sorting engines:
// explicit string dynamic programming, exhaustive path enumeration, and a
// matching-based chain cover. Shares only the Dfa type and key comparison.

struct OracleKeys {
  std::size_t length = 0;
  std::vector<SuffixKey> inf;  // per state, padded length-`length` suffix
  std::vector<SuffixKey> sup;

  const SuffixKey& key(TaggedState t) const {
    return t.tag == Tag::Inf ? inf[t.state] : sup[t.state];
  }
};

// Per-state padded length-L suffixes of inf I_u / sup I_u, computed by L
// rounds of min/max over all predecessors with full string comparison.
// L = 0 means the canonical 2n.
OracleKeys oracle_infsup(const Dfa& dfa, std::size_t length = 0);

// Comparison sort of the 2n oracle keys, ties shared.
RankTable oracle_rank_table(const Dfa& dfa, std::size_t length = 0);

// Strict relation on states as a dense matrix.
struct Relation {
  StateId n = 0;
  std::vector<bool> less;  // row-major n*n

  bool operator()(StateId u, StateId v) const { return less[u * n + v]; }
  void set(StateId u, StateId v) { less[u * n + v] = true; }
  std::size_t count() const;

  friend bool operator==(const Relation&, const Relation&) = default;
};

// The maximum co-lex order straight from its definition: enumerate every
// I_u over the DAG and set u < v iff each string reaching u co-lex precedes
// each string reaching v. Throws CyclicInputError on cyclic input; returns
// nullopt when the instance exceeds `cap` enumerated strings.
std::optional<Relation> oracle_order_def(const Dfa& dfa,
                                         std::uint64_t cap = 1000000);

// u < v iff f_u <= s_v, u != v (the rank-pair characterization).
Relation relation_from_rank_pairs(const IntervalRepresentation& rep);

bool is_strict_partial_order(const Relation& rel);

// Minimum chain cover size = n - maximum bipartite matching on the
// comparability graph. Asserts the input is a strict partial order.
std::size_t oracle_min_chain_cover(const Relation& rel);

}  // namespace colex
