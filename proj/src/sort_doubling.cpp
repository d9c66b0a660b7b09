#include "colex/sort_doubling.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cstdio>

namespace colex {

namespace {

// Dense 1-based ranks of tagged states sorted by (a, b): LSD counting sort,
// b pass first, then a.
std::uint32_t dense_rank_pairs(const std::vector<std::uint32_t>& a,
                               const std::vector<std::uint32_t>& b,
                               std::uint32_t key_range,
                               std::vector<std::uint32_t>& out) {
  const std::size_t n2 = a.size();
  std::vector<std::uint32_t> order(n2), tmp(n2);
  for (std::size_t t = 0; t < n2; ++t) order[t] = static_cast<std::uint32_t>(t);

  std::vector<std::uint32_t> bucket(key_range, 0);
  auto pass = [&](const std::vector<std::uint32_t>& key,
                  const std::vector<std::uint32_t>& in,
                  std::vector<std::uint32_t>& sorted) {
    std::fill(bucket.begin(), bucket.end(), 0);
    for (std::uint32_t t : in) bucket[key[t]]++;
    for (std::uint32_t sum = 0, k = 0; k < key_range; ++k) {
      std::uint32_t c = bucket[k];
      bucket[k] = sum;
      sum += c;
    }
    for (std::uint32_t t : in) sorted[bucket[key[t]]++] = t;
  };
  pass(b, order, tmp);
  pass(a, tmp, order);

  std::uint32_t distinct = 0;
  for (std::size_t i = 0; i < n2; ++i) {
    std::uint32_t t = order[i];
    if (i == 0 || a[t] != a[order[i - 1]] || b[t] != b[order[i - 1]]) ++distinct;
    out[t] = distinct;
  }
  return distinct;
}

}  // namespace

DoublingEngine::DoublingEngine(const Dfa& dfa) : dfa_(dfa), n2_(2 * dfa.n) {
  require_valid(dfa);
  const StateId n = dfa.n;

  // rank_{2^0}: dense ranks of the labels (both copies of u share λ(u)).
  std::vector<Symbol> distinct_labels(dfa.labels);
  std::sort(distinct_labels.begin(), distinct_labels.end());
  distinct_labels.erase(std::unique(distinct_labels.begin(), distinct_labels.end()),
                        distinct_labels.end());
  std::vector<std::uint32_t> label_rank(256, 0);
  for (std::size_t i = 0; i < distinct_labels.size(); ++i) {
    label_rank[distinct_labels[i]] = static_cast<std::uint32_t>(i + 1);
  }
  rank_.resize(n2_);
  for (StateId u = 0; u < n; ++u) {
    assert(u == dfa.source || dfa.labels[u] != kPadSymbol);
    rank_[u] = rank_[n + u] = label_rank[dfa.labels[u]];
  }
  distinct_ = static_cast<std::uint32_t>(distinct_labels.size());

  // P_0: min-label predecessors for the Inf copy, max-label for the Sup copy.
  ext_.resize(n2_);
  for (StateId u = 0; u < n; ++u) {
    const std::vector<StateId>& preds = dfa.reverse[u];
    if (preds.empty()) continue;
    Symbol lo = dfa.labels[preds[0]], hi = lo;
    for (StateId v : preds) {
      lo = std::min(lo, dfa.labels[v]);
      hi = std::max(hi, dfa.labels[v]);
    }
    for (StateId v : preds) {
      if (dfa.labels[v] == lo) ext_[u].push_back(v);
      if (dfa.labels[v] == hi) ext_[n + u].push_back(v);
    }
  }
}

const std::vector<StateId>& DoublingEngine::extenders(TaggedState t) const {
  return ext_[t.state + (t.tag == Tag::Sup ? dfa_.n : 0)];
}

bool DoublingEngine::done() const {
  return (std::size_t{1} << level_) >= n2_ || distinct_ == n2_;
}

void DoublingEngine::step() {
  const auto t0 = std::chrono::steady_clock::now();
  const StateId n = dfa_.n;

  std::vector<std::uint32_t> a(n2_), b(n2_);
  for (std::size_t t = 0; t < n2_; ++t) {
    a[t] = rank_[t];
    if (ext_[t].empty()) {
      b[t] = 0;  // -∞: the first half of the suffix is all padding
    } else {
      const std::size_t block = t < n ? 0 : n;
      b[t] = rank_[block + ext_[t][0]];
#ifndef NDEBUG
      for (StateId v : ext_[t]) assert(rank_[block + v] == b[t]);
#endif
    }
  }

  std::vector<std::uint32_t> next_rank(n2_);
  const std::uint32_t distinct = dense_rank_pairs(
      a, b, static_cast<std::uint32_t>(n2_) + 1, next_rank);
  assert(distinct >= distinct_);

  // P̂_{k+1}(u) = concatenation of the extenders' extender sets (disjoint by
  // determinism), then keep min-rank (Inf) / max-rank (Sup) members only.
  DoublingIteration it;
  it.level = level_ + 1;
#ifndef NDEBUG
  std::vector<std::uint32_t> stamp(n2_, 0);
  std::uint32_t epoch = 0;
#endif
  std::vector<std::vector<StateId>> next_ext(n2_);
  std::vector<StateId> merged;
  for (std::size_t t = 0; t < n2_; ++t) {
    const std::size_t block = t < n ? 0 : n;
    merged.clear();
    for (StateId v : ext_[t]) {
      const std::vector<StateId>& inner = ext_[block + v];
      merged.insert(merged.end(), inner.begin(), inner.end());
    }
#ifndef NDEBUG
    ++epoch;
    for (StateId v : merged) {
      assert(stamp[block + v] != epoch && "extender sets must be disjoint");
      stamp[block + v] = epoch;
    }
#endif
    if (!merged.empty()) {
      const bool keep_min = t < n;
      std::uint32_t best = next_rank[block + merged[0]];
      for (StateId v : merged) {
        std::uint32_t r = next_rank[block + v];
        best = keep_min ? std::min(best, r) : std::max(best, r);
      }
      for (StateId v : merged) {
        if (next_rank[block + v] == best) next_ext[t].push_back(v);
      }
    }
    if (t < n) {  // stats follow the single-copy formulation: Inf side only
      it.max_phat = std::max(it.max_phat, merged.size());
      it.sum_phat += merged.size();
      it.max_p = std::max(it.max_p, next_ext[t].size());
      it.sum_p += next_ext[t].size();
    }
  }

  rank_ = std::move(next_rank);
  ext_ = std::move(next_ext);
  distinct_ = distinct;
  ++level_;

  it.millis = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  stats_.iterations.push_back(it);
}

RankTable DoublingEngine::ranks() const {
  RankTable table;
  table.suffix_length = std::size_t{1} << level_;
  table.distinct = distinct_;
  table.inf_rank.assign(rank_.begin(), rank_.begin() + dfa_.n);
  table.sup_rank.assign(rank_.begin() + dfa_.n, rank_.end());
  return table;
}

std::string DoublingStats::to_csv() const {
  std::string csv = "iter,max_P,max_Phat,sum_P,sum_Phat,millis\n";
  char row[160];
  for (const DoublingIteration& it : iterations) {
    std::snprintf(row, sizeof row, "%u,%zu,%zu,%llu,%llu,%.3f\n", it.level,
                  it.max_p, it.max_phat,
                  static_cast<unsigned long long>(it.sum_p),
                  static_cast<unsigned long long>(it.sum_phat), it.millis);
    csv += row;
  }
  return csv;
}

DoublingResult sort_doubling(const Dfa& dfa, const DoublingOptions& opts) {
  DoublingEngine engine(dfa);
  const std::size_t n2 = 2 * static_cast<std::size_t>(dfa.n);
  while ((std::size_t{1} << engine.level()) < n2 &&
         (!opts.early_exit || engine.distinct() < n2)) {
    engine.step();
  }
  for (unsigned i = 0; i < opts.extra_levels; ++i) engine.step();
  return {engine.ranks(), engine.stats()};
}

}  // namespace colex
