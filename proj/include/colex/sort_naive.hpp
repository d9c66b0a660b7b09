#pragma once

#include <cstdint>
#include <vector>

#include "colex/automaton.hpp"
#include "colex/rank_table.hpp"

namespace colex {

// Rank-refinement sorter: one iteration extends the certified suffix length
// by one via a two-pass counting sort keyed on (λ(u), rank of any surviving
// predecessor), then prunes each tagged state's predecessor set to the
// min-rank members (Inf copy) or max-rank members (Sup copy).
class NaiveEngine {
 public:
  explicit NaiveEngine(const Dfa& dfa);

  // rank_{k+1} and δ_{k+1} from rank_k and δ_k.
  void step();

  bool done() const;  // k reached 2n, or all 2n ranks are distinct
  std::size_t k() const { return k_; }
  std::uint32_t distinct() const { return distinct_; }
  std::uint64_t work() const { return work_; }

  const std::vector<std::uint32_t>& tagged_ranks() const { return rank_; }
  // Surviving predecessors (as state ids) of the given tagged state.
  const std::vector<StateId>& pruned_preds(TaggedState t) const;

  RankTable ranks() const;

 private:
  const Dfa& dfa_;
  std::size_t n2_;        // 2n tagged states; index = state + n * tag
  std::size_t k_ = 0;     // suffix length certified by rank_
  std::uint32_t distinct_ = 1;
  std::uint64_t work_ = 0;
  std::vector<std::uint32_t> rank_;          // dense, 1-based
  std::vector<std::vector<StateId>> preds_;  // pruned δ_k⁻¹ per tagged state

  // per-iteration scratch, allocated once
  std::vector<Symbol> label_;
  std::vector<std::uint32_t> label_offset_;
  std::vector<std::uint32_t> pred_rank_, next_rank_, order_, tmp_, bucket_;
};

struct NaiveResult {
  RankTable ranks;
  std::size_t iterations = 0;
  std::uint64_t work = 0;
};

// Runs the refinement to suffix length 2n (early exit once all ranks are
// distinct). Throws std::invalid_argument when validate() fails.
NaiveResult sort_naive(const Dfa& dfa);

}  // namespace colex
