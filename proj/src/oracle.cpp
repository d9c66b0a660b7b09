#include "colex/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>
#include <functional>
#include <numeric>

#include "colex/sort_acyclic.hpp"

namespace colex {

OracleKeys oracle_infsup(const Dfa& dfa, std::size_t length) {
  require_valid(dfa);
  const StateId n = dfa.n;
  const std::size_t n2 = 2 * static_cast<std::size_t>(n);
  const std::size_t L = length == 0 ? n2 : length;

  // Keys are kept reversed (index = distance from the string's end) so that
  // memcmp order is co-lex order. Two ping-pong buffers of n2 rows.
  std::vector<char> cur(n2 * L, 0), nxt(n2 * L, 0);
  auto row = [L](std::vector<char>& buf, std::size_t t) { return buf.data() + t * L; };

  for (std::size_t k = 1; k <= L; ++k) {
    for (std::size_t t = 0; t < n2; ++t) {
      const StateId u = static_cast<StateId>(t % n);
      char* out = row(nxt, t);
      if (u == dfa.source) continue;  // stays all-# from initialization
      const std::size_t block = t < n ? 0 : n;
      const bool want_min = t < n;
      const char* best = nullptr;
      for (StateId v : dfa.reverse[u]) {
        const char* cand = row(cur, block + v);
        if (best == nullptr) {
          best = cand;
        } else {
          int c = std::memcmp(cand, best, k - 1);
          if (want_min ? c < 0 : c > 0) best = cand;
        }
      }
      assert(best != nullptr);
      out[0] = static_cast<char>(dfa.labels[u]);
      std::memcpy(out + 1, best, k - 1);
    }
    std::swap(cur, nxt);
  }

  OracleKeys keys;
  keys.length = L;
  keys.inf.resize(n);
  keys.sup.resize(n);
  for (std::size_t t = 0; t < n2; ++t) {
    const char* r = row(cur, t);
    SuffixKey key(L, '\0');
    for (std::size_t i = 0; i < L; ++i) key[i] = r[L - 1 - i];
    (t < n ? keys.inf : keys.sup)[t % n] = std::move(key);
  }
  return keys;
}

RankTable oracle_rank_table(const Dfa& dfa, std::size_t length) {
  const OracleKeys keys = oracle_infsup(dfa, length);
  const StateId n = dfa.n;
  const std::size_t n2 = 2 * static_cast<std::size_t>(n);

  auto key_of = [&](std::size_t t) -> const SuffixKey& {
    return t < n ? keys.inf[t] : keys.sup[t - n];
  };
  std::vector<std::uint32_t> order(n2);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return compare_keys(key_of(a), key_of(b)) < 0;
  });

  RankTable table;
  table.suffix_length = keys.length;
  table.inf_rank.assign(n, 0);
  table.sup_rank.assign(n, 0);
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < n2; ++i) {
    if (i == 0 || compare_keys(key_of(order[i - 1]), key_of(order[i])) != 0) ++r;
    std::uint32_t t = order[i];
    (t < n ? table.inf_rank : table.sup_rank)[t % n] = r;
  }
  table.distinct = r;
  return table;
}

std::size_t Relation::count() const {
  std::size_t c = 0;
  for (bool b : less) c += b;
  return c;
}

namespace {

// Co-lex comparison of finite strings: right to left, a proper suffix
// precedes its extensions.
int colex_cmp_finite(const std::string& a, const std::string& b) {
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 1; i <= common; ++i) {
    unsigned char ca = static_cast<unsigned char>(a[a.size() - i]);
    unsigned char cb = static_cast<unsigned char>(b[b.size() - i]);
    if (ca != cb) return ca < cb ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

}  // namespace

std::optional<Relation> oracle_order_def(const Dfa& dfa, std::uint64_t cap) {
  require_valid(dfa);
  if (!is_acyclic(dfa)) {
    throw CyclicInputError("oracle_order_def: I_u enumeration needs an acyclic DFA");
  }

  const StateId n = dfa.n;
  std::vector<bool> have(n, false);
  std::vector<std::string> min_s(n), max_s(n);
  std::uint64_t count = 0;
  std::string path;
  bool capped = false;

  std::function<void(StateId)> walk = [&](StateId u) {
    if (capped) return;
    if (++count > cap) {
      capped = true;
      return;
    }
    if (!have[u]) {
      have[u] = true;
      min_s[u] = path;
      max_s[u] = path;
    } else {
      if (colex_cmp_finite(path, min_s[u]) < 0) min_s[u] = path;
      if (colex_cmp_finite(path, max_s[u]) > 0) max_s[u] = path;
    }
    for (auto [sym, v] : dfa.forward[u]) {
      path.push_back(static_cast<char>(sym));
      walk(v);
      path.pop_back();
    }
  };
  walk(dfa.source);
  if (capped) return std::nullopt;

  Relation rel;
  rel.n = n;
  rel.less.assign(static_cast<std::size_t>(n) * n, false);
  for (StateId u = 0; u < n; ++u) {
    for (StateId v = 0; v < n; ++v) {
      if (u != v && colex_cmp_finite(max_s[u], min_s[v]) < 0) rel.set(u, v);
    }
  }
  return rel;
}

Relation relation_from_rank_pairs(const IntervalRepresentation& rep) {
  const StateId n = static_cast<StateId>(rep.size());
  Relation rel;
  rel.n = n;
  rel.less.assign(static_cast<std::size_t>(n) * n, false);
  for (StateId u = 0; u < n; ++u) {
    for (StateId v = 0; v < n; ++v) {
      if (u != v && rep.pairs[u].second <= rep.pairs[v].first) rel.set(u, v);
    }
  }
  return rel;
}

bool is_strict_partial_order(const Relation& rel) {
  const StateId n = rel.n;
  for (StateId u = 0; u < n; ++u) {
    if (rel(u, u)) return false;
  }
  for (StateId u = 0; u < n; ++u) {
    for (StateId v = 0; v < n; ++v) {
      if (!rel(u, v)) continue;
      for (StateId w = 0; w < n; ++w) {
        if (rel(v, w) && !rel(u, w)) return false;
      }
    }
  }
  return true;
}

std::size_t oracle_min_chain_cover(const Relation& rel) {
  assert(is_strict_partial_order(rel));
  const StateId n = rel.n;
  std::vector<StateId> match_right(n, kNoState);
  std::vector<bool> visited(n);

  std::function<bool(StateId)> augment = [&](StateId u) {
    for (StateId v = 0; v < n; ++v) {
      if (!rel(u, v) || visited[v]) continue;
      visited[v] = true;
      if (match_right[v] == kNoState || augment(match_right[v])) {
        match_right[v] = u;
        return true;
      }
    }
    return false;
  };

  std::size_t matching = 0;
  for (StateId u = 0; u < n; ++u) {
    std::fill(visited.begin(), visited.end(), false);
    if (augment(u)) ++matching;
  }
  return n - matching;
}

}  // namespace colex
