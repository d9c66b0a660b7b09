#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "colex/automaton.hpp"

namespace colex {

enum class Tag : std::uint8_t { Inf = 0, Sup = 1 };

struct TaggedState {
  StateId state;
  Tag tag;

  friend bool operator==(const TaggedState&, const TaggedState&) = default;
};

// Dense joint co-lex ranks of the 2n inf/sup strings: equal strings share a
// rank, so values cover exactly [1, distinct].
struct RankTable {
  std::size_t suffix_length = 0;  // suffix length the ranks are certified for
  std::vector<std::uint32_t> inf_rank;
  std::vector<std::uint32_t> sup_rank;
  std::uint32_t distinct = 0;

  std::uint32_t rank(TaggedState t) const {
    return t.tag == Tag::Inf ? inf_rank[t.state] : sup_rank[t.state];
  }

  bool same_ranks(const RankTable& other) const {
    return inf_rank == other.inf_rank && sup_rank == other.sup_rank;
  }
};

// (s_u, f_u) = (rank(inf I_u), rank(sup I_u)) per state: the O(n)-space
// representation of the maximum co-lex order.
struct IntervalRepresentation {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;

  std::size_t size() const { return pairs.size(); }
};

IntervalRepresentation interval_representation(const RankTable& ranks);

}  // namespace colex
