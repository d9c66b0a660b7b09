#include "colex/sort_naive.hpp"

#include <algorithm>
#include <cassert>

namespace colex {

NaiveEngine::NaiveEngine(const Dfa& dfa) : dfa_(dfa), n2_(2 * dfa.n) {
  require_valid(dfa);
  rank_.assign(n2_, 1);
  preds_.resize(n2_);
  for (StateId u = 0; u < dfa.n; ++u) {
    preds_[u] = dfa.reverse[u];
    preds_[dfa.n + u] = dfa.reverse[u];
  }

  label_.resize(n2_);
  for (std::size_t t = 0; t < n2_; ++t) label_[t] = dfa.labels[t % dfa.n];
  // Labels never change, so the second counting pass reuses fixed offsets.
  label_offset_.assign(257, 0);
  for (Symbol l : label_) label_offset_[l + 1]++;
  for (std::size_t k = 1; k < 257; ++k) label_offset_[k] += label_offset_[k - 1];

  pred_rank_.resize(n2_);
  next_rank_.resize(n2_);
  order_.resize(n2_);
  tmp_.resize(n2_);
  bucket_.assign(n2_ + 2, 0);
}

const std::vector<StateId>& NaiveEngine::pruned_preds(TaggedState t) const {
  return preds_[t.state + (t.tag == Tag::Sup ? dfa_.n : 0)];
}

bool NaiveEngine::done() const { return k_ >= n2_ || distinct_ == n2_; }

void NaiveEngine::step() {
  const StateId n = dfa_.n;

  for (std::size_t t = 0; t < n2_; ++t) {
    if (preds_[t].empty()) {
      assert(t % n == dfa_.source);
      pred_rank_[t] = 0;  // sentinel: the all-# padded suffix
    } else {
      const std::size_t block = t < n ? 0 : n;
      pred_rank_[t] = rank_[block + preds_[t][0]];
#ifndef NDEBUG
      for (StateId v : preds_[t]) assert(rank_[block + v] == pred_rank_[t]);
#endif
    }
  }

  // Sort by (label, predecessor rank): LSD counting sort, rank pass first.
  const std::uint32_t range = distinct_ + 1;
  std::fill(bucket_.begin(), bucket_.begin() + range, 0);
  for (std::size_t t = 0; t < n2_; ++t) bucket_[pred_rank_[t]]++;
  for (std::uint32_t sum = 0, k = 0; k < range; ++k) {
    std::uint32_t c = bucket_[k];
    bucket_[k] = sum;
    sum += c;
  }
  for (std::size_t t = 0; t < n2_; ++t) {
    tmp_[bucket_[pred_rank_[t]]++] = static_cast<std::uint32_t>(t);
  }
  std::uint32_t labpos[257];
  std::copy(label_offset_.begin(), label_offset_.end(), labpos);
  for (std::uint32_t t : tmp_) order_[labpos[label_[t]]++] = t;

  std::uint32_t distinct = 0;
  for (std::size_t i = 0; i < n2_; ++i) {
    std::uint32_t t = order_[i];
    if (i == 0 || label_[t] != label_[order_[i - 1]] ||
        pred_rank_[t] != pred_rank_[order_[i - 1]]) {
      ++distinct;
    }
    next_rank_[t] = distinct;
  }
  work_ += 4 * n2_ + range + 257;

#ifndef NDEBUG
  // Refinement: a new rank class refines a single old class, in order.
  {
    std::uint32_t prev_old = 0;
    for (std::size_t i = 0; i < n2_; ++i) {
      std::uint32_t t = order_[i];
      if (i > 0 && next_rank_[t] == next_rank_[order_[i - 1]]) {
        assert(rank_[t] == prev_old);
      } else {
        assert(rank_[t] >= prev_old);
      }
      prev_old = rank_[t];
    }
    assert(distinct >= distinct_);
  }
#endif

  // δ_{k+1}: Inf copies keep min-rank predecessors, Sup copies max-rank.
  for (std::size_t t = 0; t < n2_; ++t) {
    std::vector<StateId>& ps = preds_[t];
    if (ps.empty()) continue;
    const std::size_t block = t < n ? 0 : n;
    const bool keep_min = t < n;
    std::uint32_t best = next_rank_[block + ps[0]];
    for (StateId v : ps) {
      std::uint32_t r = next_rank_[block + v];
      best = keep_min ? std::min(best, r) : std::max(best, r);
    }
    std::size_t kept = 0;
    for (StateId v : ps) {
      if (next_rank_[block + v] == best) ps[kept++] = v;
    }
    work_ += ps.size() + kept;
    ps.resize(kept);
    assert(!ps.empty());
  }

  std::swap(rank_, next_rank_);
  distinct_ = distinct;
  ++k_;
}

RankTable NaiveEngine::ranks() const {
  RankTable table;
  table.suffix_length = k_;
  table.distinct = distinct_;
  table.inf_rank.assign(rank_.begin(), rank_.begin() + dfa_.n);
  table.sup_rank.assign(rank_.begin() + dfa_.n, rank_.end());
  return table;
}

NaiveResult sort_naive(const Dfa& dfa) {
  NaiveEngine engine(dfa);
  while (!engine.done()) engine.step();
  return {engine.ranks(), engine.k(), engine.work()};
}

}  // namespace colex
