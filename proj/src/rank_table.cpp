#include "colex/rank_table.hpp"

#include <cassert>

namespace colex {

IntervalRepresentation interval_representation(const RankTable& ranks) {
  IntervalRepresentation rep;
  rep.pairs.reserve(ranks.inf_rank.size());
  for (std::size_t u = 0; u < ranks.inf_rank.size(); ++u) {
    assert(ranks.inf_rank[u] <= ranks.sup_rank[u]);
    rep.pairs.emplace_back(ranks.inf_rank[u], ranks.sup_rank[u]);
  }
  return rep;
}

}  // namespace colex
