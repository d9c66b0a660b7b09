#include "colex/sort_acyclic.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <queue>
#include <tuple>

namespace colex {

std::optional<std::vector<StateId>> topological_order(const Dfa& dfa) {
  std::vector<std::uint32_t> indeg(dfa.n);
  for (StateId u = 0; u < dfa.n; ++u) {
    indeg[u] = static_cast<std::uint32_t>(dfa.reverse[u].size());
  }
  std::priority_queue<StateId, std::vector<StateId>, std::greater<>> ready;
  for (StateId u = 0; u < dfa.n; ++u) {
    if (indeg[u] == 0) ready.push(u);
  }
  std::vector<StateId> order;
  order.reserve(dfa.n);
  while (!ready.empty()) {
    StateId u = ready.top();
    ready.pop();
    order.push_back(u);
    for (auto [sym, v] : dfa.forward[u]) {
      (void)sym;
      if (--indeg[v] == 0) ready.push(v);
    }
  }
  if (order.size() != dfa.n) return std::nullopt;
  return order;
}

bool is_acyclic(const Dfa& dfa) { return topological_order(dfa).has_value(); }

std::vector<bool> singleton_states(const Dfa& dfa,
                                   const std::vector<StateId>& topo) {
  std::vector<bool> singleton(dfa.n, false);
  for (StateId u : topo) {
    if (u == dfa.source) {
      singleton[u] = true;  // I_s = {ε}
    } else {
      singleton[u] = dfa.reverse[u].size() == 1 && singleton[dfa.reverse[u][0]];
    }
  }
  return singleton;
}

RankTable collapse_equal_ranks(const DynamicOrderList& list, const Dfa& dfa) {
  const StateId n = dfa.n;
  auto topo = topological_order(dfa);
  if (!topo) throw CyclicInputError("collapse_equal_ranks: cyclic input");
  const std::vector<bool> singleton = singleton_states(dfa, *topo);

  const std::vector<DynamicOrderList::Entry> entries = list.in_order();
  assert(entries.size() == 2 * static_cast<std::size_t>(n));

  RankTable table;
  table.suffix_length = 2 * static_cast<std::size_t>(n);
  table.inf_rank.assign(n, 0);
  table.sup_rank.assign(n, 0);
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < entries.size();) {
    ++r;
    const StateId u = entries[i] % n;
    const bool is_inf = entries[i] < n;
    if (is_inf && singleton[u]) {
      // Equal strings in an acyclic DFA happen only for singleton I_u, and
      // the position law places the Inf entry immediately before the Sup one.
      assert(i + 1 < entries.size() && entries[i + 1] == u + n);
      table.inf_rank[u] = r;
      table.sup_rank[u] = r;
      i += 2;
    } else {
      (is_inf ? table.inf_rank : table.sup_rank)[u] = r;
      i += 1;
    }
  }
  table.distinct = r;
  return table;
}

AcyclicResult sort_acyclic_full(const Dfa& dfa) {
  require_valid(dfa);
  auto topo = topological_order(dfa);
  if (!topo) throw CyclicInputError("sort_acyclic: input DFA is cyclic");

  const StateId n = dfa.n;
  const std::size_t n2 = 2 * static_cast<std::size_t>(n);
  DynamicOrderList list(static_cast<std::uint32_t>(n2));
  std::vector<DynamicOrderList::Entry> parent_entry(n2, kNoState);

  AcyclicResult result;
  result.inf_parent.assign(n, kNoState);
  result.sup_parent.assign(n, kNoState);

  for (StateId u : *topo) {
    for (Tag tag : {Tag::Inf, Tag::Sup}) {
      const std::uint32_t block = tag == Tag::Inf ? 0 : n;
      const DynamicOrderList::Entry entry = block + u;

      std::uint32_t parent_rank = 0;
      if (u != dfa.source) {
        const bool want_min = tag == Tag::Inf;
        StateId best = kNoState;
        std::uint32_t best_rank = 0;
        for (StateId v : dfa.reverse[u]) {
          std::uint32_t r = list.rank(block + v);
          if (best == kNoState || (want_min ? r < best_rank : r > best_rank)) {
            best = v;
            best_rank = r;
          }
        }
        parent_entry[entry] = block + best;
        parent_rank = best_rank;
        (tag == Tag::Inf ? result.inf_parent : result.sup_parent)[u] = best;
      }

      // Position law: strictly after smaller labels; within the label block,
      // ordered by the rank of the spanning-tree parent. The tag breaks the
      // only possible tie (the two source entries), Inf first.
      const Symbol lbl = dfa.labels[u];
      const auto key = std::make_tuple(lbl, parent_rank, tag);
      list.insert_ordered(entry, [&](DynamicOrderList::Entry existing) {
        const StateId x = existing % n;
        const Tag xtag = existing < n ? Tag::Inf : Tag::Sup;
        const std::uint32_t xparent_rank =
            parent_entry[existing] == kNoState ? 0
                                               : list.rank(parent_entry[existing]);
        return key < std::make_tuple(dfa.labels[x], xparent_rank, xtag);
      });
    }
  }

  result.ranks = collapse_equal_ranks(list, dfa);
  result.list_operations = list.operations();
  return result;
}

RankTable sort_acyclic(const Dfa& dfa) { return sort_acyclic_full(dfa).ranks; }

}  // namespace colex
