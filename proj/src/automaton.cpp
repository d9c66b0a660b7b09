#include "colex/automaton.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <queue>
#include <random>
#include <sstream>

namespace colex {

Dfa Dfa::build(StateId n, StateId source, std::vector<Transition> edges,
               std::vector<StateId> finals) {
  Dfa dfa;
  dfa.n = n;
  dfa.source = source;
  std::sort(edges.begin(), edges.end(), [](const Transition& a, const Transition& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.symbol != b.symbol) return a.symbol < b.symbol;
    return a.to < b.to;
  });
  dfa.transitions = std::move(edges);
  std::sort(finals.begin(), finals.end());
  finals.erase(std::unique(finals.begin(), finals.end()), finals.end());
  dfa.finals = std::move(finals);

  dfa.forward.resize(n);
  dfa.reverse.resize(n);
  for (const Transition& t : dfa.transitions) {
    dfa.forward[t.from].emplace_back(t.symbol, t.to);
    dfa.reverse[t.to].push_back(t.from);
  }

  dfa.labels.assign(n, kPadSymbol);
  dfa.input_consistent = true;
  std::vector<bool> labeled(n, false);
  for (const Transition& t : dfa.transitions) {
    if (!labeled[t.to]) {
      labeled[t.to] = true;
      dfa.labels[t.to] = t.symbol;
    } else if (dfa.labels[t.to] != t.symbol) {
      dfa.input_consistent = false;
    }
  }
  if (n > 0 && labeled[source]) dfa.input_consistent = false;
  if (n > 0) dfa.labels[source] = kPadSymbol;
  return dfa;
}

std::string render_symbol(Symbol s) {
  if (s >= 33 && s <= 126 && s != '\\') return std::string(1, static_cast<char>(s));
  char buf[8];
  std::snprintf(buf, sizeof buf, "\\x%02X", s);
  return buf;
}

namespace {

std::vector<bool> reachable_states(const Dfa& dfa) {
  std::vector<bool> seen(dfa.n, false);
  if (dfa.n == 0) return seen;
  std::vector<StateId> stack{dfa.source};
  seen[dfa.source] = true;
  while (!stack.empty()) {
    StateId u = stack.back();
    stack.pop_back();
    for (auto [sym, v] : dfa.forward[u]) {
      (void)sym;
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

std::string edge_str(const Transition& t) {
  std::ostringstream os;
  os << "(" << t.from << ", " << render_symbol(t.symbol) << ", " << t.to << ")";
  return os.str();
}

}  // namespace

std::string ValidationReport::to_string() const {
  if (violations.empty()) return "ok";
  std::ostringstream os;
  for (const Violation& v : violations) os << v.message << "\n";
  return os.str();
}

ValidationReport validate(const Dfa& dfa) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, std::string msg) {
    report.violations.push_back({kind, std::move(msg)});
  };

  for (std::size_t i = 1; i < dfa.transitions.size(); ++i) {
    const Transition& a = dfa.transitions[i - 1];
    const Transition& b = dfa.transitions[i];
    if (a.from == b.from && a.symbol == b.symbol) {
      add(ViolationKind::NonDeterminism,
          "non-determinism: " + edge_str(a) + " and " + edge_str(b));
    }
  }

  for (const Transition& t : dfa.transitions) {
    if (t.to == dfa.source) {
      add(ViolationKind::SourceIncoming,
          "incoming transition at source: " + edge_str(t));
    }
  }

  const std::vector<bool> seen = reachable_states(dfa);
  for (StateId u = 0; u < dfa.n; ++u) {
    if (!seen[u]) {
      add(ViolationKind::Unreachable,
          "state " + std::to_string(u) + " unreachable from source");
    }
  }

  // Independent scan of the edge set instead of trusting Dfa::labels.
  std::vector<Symbol> first(dfa.n, 0);
  std::vector<bool> has(dfa.n, false);
  std::vector<bool> flagged(dfa.n, false);
  for (const Transition& t : dfa.transitions) {
    if (t.to == dfa.source) continue;
    if (!has[t.to]) {
      has[t.to] = true;
      first[t.to] = t.symbol;
    } else if (first[t.to] != t.symbol && !flagged[t.to]) {
      flagged[t.to] = true;
      add(ViolationKind::InputInconsistency,
          "state " + std::to_string(t.to) + " has incoming symbols " +
              render_symbol(first[t.to]) + " and " + render_symbol(t.symbol));
    }
  }
  return report;
}

void require_valid(const Dfa& dfa) {
  ValidationReport report = validate(dfa);
  if (!report.ok()) {
    throw std::invalid_argument("invalid DFA:\n" + report.to_string());
  }
}

Dfa make_input_consistent(const Dfa& dfa) {
  for (std::size_t i = 1; i < dfa.transitions.size(); ++i) {
    const Transition& a = dfa.transitions[i - 1];
    const Transition& b = dfa.transitions[i];
    if (a.from == b.from && a.symbol == b.symbol) {
      throw std::invalid_argument("make_input_consistent: non-deterministic input");
    }
  }
  for (const Transition& t : dfa.transitions) {
    if (t.to == dfa.source) {
      throw std::invalid_argument("make_input_consistent: source has incoming edges");
    }
  }
  const std::vector<bool> seen = reachable_states(dfa);
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw std::invalid_argument("make_input_consistent: unreachable states present");
  }

  // Distinct incoming symbols per state, ascending.
  std::vector<std::vector<Symbol>> in_syms(dfa.n);
  for (const Transition& t : dfa.transitions) in_syms[t.to].push_back(t.symbol);
  for (auto& syms : in_syms) {
    std::sort(syms.begin(), syms.end());
    syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
  }

  // Copy (u, c) -> new id; the source keeps its single copy as id 0.
  std::vector<std::vector<std::pair<Symbol, StateId>>> copy_id(dfa.n);
  StateId next = 1;
  for (StateId u = 0; u < dfa.n; ++u) {
    if (u == dfa.source) continue;
    for (Symbol c : in_syms[u]) copy_id[u].emplace_back(c, next++);
  }
  auto id_of = [&](StateId v, Symbol c) {
    for (auto [sym, id] : copy_id[v]) {
      if (sym == c) return id;
    }
    assert(false);
    return kNoState;
  };

  std::vector<Transition> edges;
  for (const Transition& t : dfa.transitions) {
    StateId to = id_of(t.to, t.symbol);
    if (t.from == dfa.source) {
      edges.push_back({0, t.symbol, to});
    } else {
      for (auto [sym, from] : copy_id[t.from]) {
        (void)sym;
        edges.push_back({from, t.symbol, to});
      }
    }
  }

  std::vector<StateId> finals;
  for (StateId f : dfa.finals) {
    if (f == dfa.source) {
      finals.push_back(0);
    } else {
      for (auto [sym, id] : copy_id[f]) {
        (void)sym;
        finals.push_back(id);
      }
    }
  }
  return Dfa::build(next, 0, std::move(edges), std::move(finals));
}

Dfa prune_unreachable(const Dfa& dfa) {
  const std::vector<bool> seen = reachable_states(dfa);
  std::vector<StateId> remap(dfa.n, kNoState);
  StateId next = 0;
  for (StateId u = 0; u < dfa.n; ++u) {
    if (seen[u]) remap[u] = next++;
  }
  std::vector<Transition> edges;
  for (const Transition& t : dfa.transitions) {
    if (seen[t.from]) edges.push_back({remap[t.from], t.symbol, remap[t.to]});
  }
  std::vector<StateId> finals;
  for (StateId f : dfa.finals) {
    if (seen[f]) finals.push_back(remap[f]);
  }
  return Dfa::build(next, remap[dfa.source], std::move(edges), std::move(finals));
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 0;

  // Next content line, split into whitespace tokens; skips comments/blanks.
  bool next(std::vector<std::string>& tokens) {
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view l = text.substr(pos, end - pos);
      pos = end + 1;
      ++line;
      if (!l.empty() && l[0] == '#') continue;
      tokens.clear();
      std::size_t i = 0;
      while (i < l.size()) {
        while (i < l.size() && (l[i] == ' ' || l[i] == '\t' || l[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < l.size() && l[j] != ' ' && l[j] != '\t' && l[j] != '\r') ++j;
        if (j > i) tokens.emplace_back(l.substr(i, j - i));
        i = j;
      }
      if (!tokens.empty()) return true;
    }
    return false;
  }
};

std::uint64_t parse_uint(const std::string& tok, int line, const char* what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
  }
  if (tok.size() > 10) throw ParseError(line, std::string(what) + " out of range: " + tok);
  return std::stoull(tok);
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

Symbol parse_symbol(const std::string& tok, int line) {
  if (tok.size() == 1) {
    unsigned char c = static_cast<unsigned char>(tok[0]);
    if (c < 33 || c > 126 || c == '\\') {
      throw ParseError(line, "bad symbol token '" + tok + "'");
    }
    return c;
  }
  if (tok.size() == 4 && tok[0] == '\\' && (tok[1] == 'x' || tok[1] == 'X')) {
    int hi = hex_digit(tok[2]);
    int lo = hex_digit(tok[3]);
    if (hi >= 0 && lo >= 0) return static_cast<Symbol>(hi * 16 + lo);
  }
  throw ParseError(line, "bad symbol token '" + tok + "' (want a printable char or \\xNN)");
}

}  // namespace

Dfa parse(std::string_view text, bool strict) {
  Cursor cur{text};
  std::vector<std::string> tok;

  if (!cur.next(tok)) throw ParseError(cur.line, "missing header line");
  if (tok.size() != 3) throw ParseError(cur.line, "header must be '<n> <m> <source>'");
  std::uint64_t n64 = parse_uint(tok[0], cur.line, "state count");
  std::uint64_t m64 = parse_uint(tok[1], cur.line, "transition count");
  std::uint64_t src64 = parse_uint(tok[2], cur.line, "source id");
  if (n64 == 0) throw ParseError(cur.line, "state count must be at least 1");
  if (n64 > (1u << 30)) throw ParseError(cur.line, "state count out of range");
  StateId n = static_cast<StateId>(n64);
  if (src64 >= n) throw ParseError(cur.line, "source id out of range");
  StateId source = static_cast<StateId>(src64);

  std::vector<Transition> edges;
  edges.reserve(std::min<std::uint64_t>(m64, 1u << 20));
  std::vector<StateId> finals;
  bool saw_finals = false;

  std::uint64_t remaining = m64;
  while (cur.next(tok)) {
    if (tok[0] == "F") {
      if (remaining > 0) {
        throw ParseError(cur.line, "header claims " + std::to_string(m64) +
                                       " transitions, found " +
                                       std::to_string(m64 - remaining));
      }
      if (saw_finals) throw ParseError(cur.line, "duplicate final-states line");
      saw_finals = true;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        std::uint64_t f = parse_uint(tok[i], cur.line, "final state id");
        if (f >= n) throw ParseError(cur.line, "final state id out of range: " + tok[i]);
        finals.push_back(static_cast<StateId>(f));
      }
      continue;
    }
    if (remaining == 0) {
      throw ParseError(cur.line, "unexpected content after " + std::to_string(m64) +
                                     " transitions");
    }
    if (tok.size() != 3) throw ParseError(cur.line, "transition must be '<from> <symbol> <to>'");
    std::uint64_t from = parse_uint(tok[0], cur.line, "state id");
    Symbol sym = parse_symbol(tok[1], cur.line);
    std::uint64_t to = parse_uint(tok[2], cur.line, "state id");
    if (from >= n || to >= n) throw ParseError(cur.line, "state id out of range");
    if (sym == kPadSymbol) {
      throw ParseError(cur.line, "symbol \\x00 is reserved for the source label #");
    }
    edges.push_back({static_cast<StateId>(from), sym, static_cast<StateId>(to)});
    --remaining;
  }
  if (remaining > 0) {
    throw ParseError(cur.line, "header claims " + std::to_string(m64) +
                                   " transitions, found " +
                                   std::to_string(m64 - remaining));
  }

  if (strict) {
    std::vector<std::pair<StateId, Symbol>> keys;
    keys.reserve(edges.size());
    for (const Transition& t : edges) keys.emplace_back(t.from, t.symbol);
    std::sort(keys.begin(), keys.end());
    auto dup = std::adjacent_find(keys.begin(), keys.end());
    if (dup != keys.end()) {
      throw ParseError(cur.line, "duplicate transition for state " +
                                     std::to_string(dup->first) + " on symbol " +
                                     render_symbol(dup->second));
    }
  }

  // Canonical ids: the source becomes 0 (swap with whatever held it).
  if (source != 0) {
    auto remap = [&](StateId u) -> StateId {
      if (u == source) return 0;
      if (u == 0) return source;
      return u;
    };
    for (Transition& t : edges) {
      t.from = remap(t.from);
      t.to = remap(t.to);
    }
    for (StateId& f : finals) f = remap(f);
    source = 0;
  }
  return Dfa::build(n, source, std::move(edges), std::move(finals));
}

std::string serialize(const Dfa& dfa) {
  std::ostringstream os;
  os << dfa.n << " " << dfa.m() << " " << dfa.source << "\n";
  for (const Transition& t : dfa.transitions) {
    os << t.from << " " << render_symbol(t.symbol) << " " << t.to << "\n";
  }
  if (!dfa.finals.empty()) {
    os << "F";
    for (StateId f : dfa.finals) os << " " << f;
    os << "\n";
  }
  return os.str();
}

namespace {

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  // Unbiasedness doesn't matter here; portability of the draw sequence does.
  std::uint64_t below(std::uint64_t bound) { return gen() % bound; }
  bool flip() { return gen() & 1; }
};

}  // namespace

Dfa generate(const GenParams& params) {
  if (params.n < 1) throw std::invalid_argument("generate: n must be at least 1");
  if (params.alphabet_size < 1 || params.alphabet_size > 255) {
    throw std::invalid_argument("generate: alphabet_size must be in [1, 255]");
  }
  if (params.density > static_cast<double>(params.alphabet_size)) {
    throw std::invalid_argument(
        "generate: density demands more out-edges per state than the alphabet allows");
  }
  const StateId n = params.n;
  const unsigned sigma = params.alphabet_size;
  const Symbol base = (97 + sigma - 1 <= 255) ? 97 : 1;
  Rng rng(params.seed);

  std::vector<Symbol> label(n, kPadSymbol);
  for (StateId u = 1; u < n; ++u) label[u] = static_cast<Symbol>(base + rng.below(sigma));

  // Attach order: source first, then a random permutation of the rest. In
  // acyclic mode this doubles as the topological order.
  std::vector<StateId> order(n);
  for (StateId u = 0; u < n; ++u) order[u] = u;
  for (StateId i = n - 1; i >= 1; --i) {
    StateId j = 1 + static_cast<StateId>(rng.below(i));  // j in [1, i]
    std::swap(order[i], order[j]);
  }

  std::vector<std::vector<Symbol>> out_used(n);
  auto has_slot = [&](StateId u, Symbol c) {
    for (Symbol s : out_used[u]) {
      if (s == c) return false;
    }
    return true;
  };
  std::vector<Transition> edges;
  auto add_edge = [&](StateId u, Symbol c, StateId v) {
    out_used[u].push_back(c);
    edges.push_back({u, c, v});
  };

  // Spanning tree over the attach order; a free slot always exists because
  // i earlier states hold at most i-1 tree edges.
  for (StateId i = 1; i < n; ++i) {
    StateId v = order[i];
    Symbol c = label[v];
    StateId parent = kNoState;
    for (int attempt = 0; attempt < 32 && parent == kNoState; ++attempt) {
      StateId cand = order[rng.below(i)];
      if (has_slot(cand, c)) parent = cand;
    }
    if (parent == kNoState) {
      std::vector<StateId> candidates;
      for (StateId j = 0; j < i; ++j) {
        if (has_slot(order[j], c)) candidates.push_back(order[j]);
      }
      assert(!candidates.empty());
      parent = candidates[rng.below(candidates.size())];
    }
    add_edge(parent, c, v);
  }

  const std::uint64_t target_m = std::max<std::uint64_t>(
      n - 1, static_cast<std::uint64_t>(std::llround(params.density * n)));
  std::uint64_t attempts = 24 * (target_m - (n - 1)) + 64;
  while (edges.size() < target_m && attempts-- > 0 && n > 1) {
    StateId u, v;
    if (params.acyclic) {
      std::uint64_t a = rng.below(n), b = rng.below(n);
      if (a == b) continue;
      u = order[std::min(a, b)];
      v = order[std::max(a, b)];
    } else {
      u = static_cast<StateId>(rng.below(n));
      v = 1 + static_cast<StateId>(rng.below(n - 1));
      if (v == 0) continue;
    }
    if (v == 0) continue;
    if (!has_slot(u, label[v])) continue;
    add_edge(u, label[v], v);
  }

  std::vector<StateId> finals;
  for (StateId u = 0; u < n; ++u) {
    if (rng.flip()) finals.push_back(u);
  }
  Dfa dfa = Dfa::build(n, 0, std::move(edges), std::move(finals));
  assert(validate(dfa).ok());
  return dfa;
}

Dfa build_fig2_gadget(unsigned sigma) {
  if (sigma < 2) throw std::invalid_argument("build_fig2_gadget: sigma must be at least 2");
  if (2 * sigma + 2 > 255) throw std::invalid_argument("build_fig2_gadget: sigma too large");
  const Symbol base = (97 + 2 * sigma + 1 <= 255) ? 97 : 1;
  auto y = [&](unsigned i) { return static_cast<Symbol>(base + i - 1); };      // i in [1, σ]
  const Symbol f = static_cast<Symbol>(base + sigma);
  const Symbol d = static_cast<Symbol>(base + sigma + 1);
  auto c = [&](unsigned j) { return static_cast<Symbol>(base + sigma + 1 + j); };

  // ids: source 0 | x_i = i | p_i = σ+i | v_i = 2σ+i | w = 3σ+1 | a_j = 3σ+1+j
  const StateId w = 3 * sigma + 1;
  std::vector<Transition> edges;
  for (unsigned i = 1; i <= sigma; ++i) {
    edges.push_back({0, y(i), i});
    edges.push_back({i, f, sigma + i});
    edges.push_back({sigma + i, f, 2 * sigma + i});
    edges.push_back({2 * sigma + i, d, w});
    edges.push_back({w, c(i), w + i});
  }
  return Dfa::build(4 * sigma + 2, 0, std::move(edges));
}

}  // namespace colex
