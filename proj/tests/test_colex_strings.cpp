#include <doctest.h>

#include <random>
#include <vector>

#include "colex/colex_strings.hpp"
#include "colex/oracle.hpp"
#include "fixtures.hpp"

using namespace colex;
using namespace colex::fixtures;

namespace {

EventuallyPeriodicString fin(const char* s) { return {s, ""}; }
EventuallyPeriodicString inf_str(const char* alpha, const char* beta) {
  return {alpha, beta};
}

EventuallyPeriodicString random_eps(std::mt19937_64& rng) {
  auto len = [&](std::size_t lo, std::size_t hi) { return lo + rng() % (hi - lo + 1); };
  std::size_t total = len(0, 8);
  std::size_t alpha_len = total == 0 ? 0 : rng() % (total + 1);
  EventuallyPeriodicString s;
  for (std::size_t i = 0; i < alpha_len; ++i) s.alpha.push_back('a' + rng() % 3);
  for (std::size_t i = 0; i < total - alpha_len; ++i) s.beta.push_back('a' + rng() % 3);
  return s;
}

int sign(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

}  // namespace

TEST_CASE("suffix_key pads and unrolls") {
  CHECK(suffix_key(fin(""), 4) == key_of("####"));
  CHECK(suffix_key(inf_str("a", "b"), 5) == key_of("bbbba"));
  CHECK(suffix_key(fin("aabaa"), 20) == key_of("###############aabaa"));
  CHECK(suffix_key(inf_str("", "ab"), 5) == key_of("babab"));
  CHECK(suffix_key(fin("abcdef"), 3) == key_of("def"));
}

TEST_CASE("colex_compare basics") {
  CHECK(colex_compare(fin(""), fin("a")) < 0);
  CHECK(colex_compare(fin("aab"), inf_str("", "b")) < 0);  // aab < b^ω
  CHECK(colex_compare(fin("b"), fin("ab")) < 0);           // suffix precedes extension
  CHECK(colex_compare(fin("ab"), fin("bb")) < 0);
  CHECK(colex_compare(inf_str("", "ab"), inf_str("b", "ab")) < 0);
  CHECK(colex_compare(fin("abba"), inf_str("a", "b")) < 0);  // abba < b^ω a
}

TEST_CASE("colex_compare is representation independent") {
  CHECK(colex_compare(inf_str("", "ab"), inf_str("", "abab")) == 0);
  CHECK(colex_compare(inf_str("a", "ab"), inf_str("", "ba")) == 0);  // (ab)^ω a = (ba)^ω
  CHECK(colex_compare(inf_str("", "b"), inf_str("b", "b")) == 0);    // b^ω = b^ω b
  CHECK(colex_compare(inf_str("", "b"), inf_str("", "bb")) == 0);
}

TEST_CASE("colex_compare is a strict total order on eventually periodic strings") {
  std::mt19937_64 rng(11);
  std::vector<EventuallyPeriodicString> pool;
  for (int i = 0; i < 60; ++i) pool.push_back(random_eps(rng));
  for (const auto& x : pool) {
    CHECK(colex_compare(x, x) == 0);
    for (const auto& y : pool) {
      CHECK(sign(colex_compare(x, y)) == -sign(colex_compare(y, x)));
      for (const auto& z : pool) {
        if (colex_compare(x, y) < 0 && colex_compare(y, z) < 0) {
          CHECK(colex_compare(x, z) < 0);
        }
      }
    }
  }
}

TEST_CASE("order agreement: length-2n keys decide inf/sup comparisons") {
  // Strings realized by actual DFAs: reconstruct eventually-periodic forms
  // from oracle keys and check the comparison shortcut against them.
  for (std::uint64_t seed = 0; seed < 160; ++seed) {
    Dfa dfa = generate(small_params(seed, 8, 3, seed % 2 == 0));
    const std::size_t L = 2 * dfa.n;
    OracleKeys keys = oracle_infsup(dfa, L);
    std::vector<EventuallyPeriodicString> strings;
    for (StateId u = 0; u < dfa.n; ++u) {
      strings.push_back(from_suffix_key(keys.inf[u], dfa.n));
      strings.push_back(from_suffix_key(keys.sup[u], dfa.n));
    }
    for (const auto& x : strings) {
      // Round trip: the reconstruction denotes a string with the same key.
      CHECK(suffix_key(x, L) == suffix_key(from_suffix_key(suffix_key(x, L), dfa.n), L));
      for (const auto& y : strings) {
        CHECK(sign(colex_compare(x, y)) ==
              sign(compare_keys(suffix_key(x, L), suffix_key(y, L))));
      }
    }
  }
}

TEST_CASE("equal 2n-keys mean equal strings") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Dfa dfa = generate(small_params(seed, 8, 3, false));
    OracleKeys keys = oracle_infsup(dfa, 2 * dfa.n);
    for (StateId u = 0; u < dfa.n; ++u) {
      for (StateId v = 0; v < dfa.n; ++v) {
        if (keys.inf[u] == keys.sup[v]) {
          CHECK(colex_compare(from_suffix_key(keys.inf[u], dfa.n),
                              from_suffix_key(keys.sup[v], dfa.n)) == 0);
        }
      }
    }
  }
}

TEST_CASE("from_suffix_key recovers fig1 strings") {
  Dfa dfa = fig1();
  OracleKeys keys = oracle_infsup(dfa, 20);
  auto expected = fig1_strings();
  for (StateId u = 0; u < dfa.n; ++u) {
    EventuallyPeriodicString inf = from_suffix_key(keys.inf[u], dfa.n);
    EventuallyPeriodicString sup = from_suffix_key(keys.sup[u], dfa.n);
    CHECK(colex_compare(inf, expected[u].first) == 0);
    CHECK(colex_compare(sup, expected[u].second) == 0);
  }
}

TEST_CASE("display formats") {
  CHECK(display(fin("aab")) == "aab");
  CHECK(display(inf_str("", "b")) == "(b)^w");
  CHECK(display(inf_str("a", "b")) == "(b)^w a");
  CHECK(display_key(key_of("##ab")) == "##ab");
}
