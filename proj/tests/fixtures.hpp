#pragma once

#include <string>
#include <vector>

#include "colex/automaton.hpp"
#include "colex/colex_strings.hpp"
#include "colex/rank_table.hpp"

namespace colex::fixtures {

inline Transition edge(StateId from, char symbol, StateId to) {
  return {from, static_cast<Symbol>(symbol), to};
}

// Path: 0 -a-> 1 -b-> 2. Every I_u is a singleton.
inline Dfa t1() {
  return Dfa::build(3, 0, {edge(0, 'a', 1), edge(1, 'b', 2)});
}

// Self loop: inf I_1 = a, sup I_1 = a^ω.
inline Dfa t2() {
  return Dfa::build(2, 0, {edge(0, 'a', 1), edge(1, 'a', 1)});
}

// Diamond: I_3 = {ab, bb}. Totally ordered (b < ab co-lex), width 1.
inline Dfa t3() {
  return Dfa::build(4, 0, {edge(0, 'a', 1), edge(0, 'b', 2), edge(1, 'b', 3),
                           edge(2, 'b', 3)});
}

// Width-2 fixture: state 4 has I = {ab, cb}, state 5 has I = {bb};
// ab < bb < cb makes 4 and 5 incomparable.
inline Dfa t4() {
  return Dfa::build(6, 0, {edge(0, 'a', 1), edge(0, 'c', 2), edge(0, 'b', 3),
                           edge(1, 'b', 4), edge(2, 'b', 4), edge(3, 'b', 5)});
}

// The 10-state running example: states 0..9, source 0, cyclic (self loop at
// state 3 plus the 2<->7 a-cycle). Its inf/sup table is the canonical
// cross-check for all engines.
inline Dfa fig1() {
  return Dfa::build(10, 0,
                    {edge(0, 'a', 1), edge(0, 'b', 5), edge(1, 'a', 2),
                     edge(1, 'b', 5), edge(2, 'a', 7), edge(2, 'b', 3),
                     edge(3, 'a', 4), edge(3, 'b', 3), edge(4, 'a', 9),
                     edge(5, 'b', 6), edge(6, 'a', 7), edge(7, 'a', 2),
                     edge(7, 'b', 8), edge(8, 'a', 9)});
}

// Expected inf/sup strings of fig1, per state.
inline std::vector<std::pair<EventuallyPeriodicString, EventuallyPeriodicString>>
fig1_strings() {
  auto fin = [](const char* s) { return EventuallyPeriodicString{s, ""}; };
  return {
      {fin(""), fin("")},          // 0
      {fin("a"), fin("a")},        // 1
      {fin("aa"), fin("abbaa")},   // 2
      {fin("aab"), {"", "b"}},     // 3: sup = b^ω
      {fin("aaba"), {"a", "b"}},   // 4: sup = b^ω a
      {fin("b"), fin("ab")},       // 5
      {fin("bb"), fin("abb")},     // 6
      {fin("aaa"), fin("abba")},   // 7
      {fin("aaab"), fin("abbab")}, // 8
      {fin("aabaa"), fin("abbaba")},
  };
}

inline std::vector<std::pair<std::uint32_t, std::uint32_t>> fig1_rank_pairs() {
  return {{1, 1}, {2, 2}, {3, 6}, {13, 18}, {7, 10},
          {11, 12}, {16, 17}, {4, 9}, {14, 15}, {5, 8}};
}

// SuffixKey from ASCII, '#' standing for the padding symbol.
inline SuffixKey key_of(const std::string& text) {
  SuffixKey key;
  for (char c : text) key.push_back(c == '#' ? '\0' : c);
  return key;
}

// Does the DFA accept the string?
inline bool accepts(const Dfa& dfa, const std::string& word) {
  StateId u = dfa.source;
  for (char c : word) {
    Symbol sym = static_cast<Symbol>(c);
    StateId next = kNoState;
    for (auto [s, v] : dfa.forward[u]) {
      if (s == sym) {
        next = v;
        break;
      }
    }
    if (next == kNoState) return false;
    u = next;
  }
  for (StateId f : dfa.finals) {
    if (f == u) return true;
  }
  return false;
}

// Small random instance for seed-driven suites; density stays within the
// alphabet bound.
inline GenParams small_params(std::uint64_t seed, StateId max_n, unsigned max_sigma,
                              bool acyclic) {
  GenParams p;
  p.seed = seed;
  p.n = 1 + static_cast<StateId>(seed % max_n);
  p.alphabet_size = 1 + static_cast<unsigned>((seed / 7) % max_sigma);
  p.density = 0.5 + static_cast<double>(seed % 100) / 100.0 *
                        (static_cast<double>(p.alphabet_size) - 0.5);
  p.acyclic = acyclic;
  return p;
}

}  // namespace colex::fixtures
