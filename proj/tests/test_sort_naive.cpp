#include <doctest.h>

#include "colex/oracle.hpp"
#include "colex/sort_naive.hpp"
#include "fixtures.hpp"

using namespace colex;
using namespace colex::fixtures;

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs_of(const RankTable& t) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::size_t u = 0; u < t.inf_rank.size(); ++u) {
    out.emplace_back(t.inf_rank[u], t.sup_rank[u]);
  }
  return out;
}

}  // namespace

TEST_CASE("sort_naive on the path fixture") {
  RankTable t = sort_naive(t1()).ranks;
  CHECK(pairs_of(t) == std::vector<std::pair<std::uint32_t, std::uint32_t>>{
                           {1, 1}, {2, 2}, {3, 3}});
  CHECK(t.distinct == 3);
}

TEST_CASE("sort_naive on the self-loop fixture") {
  // Strings: ε, a, a^ω.
  RankTable t = sort_naive(t2()).ranks;
  CHECK(pairs_of(t) == std::vector<std::pair<std::uint32_t, std::uint32_t>>{
                           {1, 1}, {2, 3}});
}

TEST_CASE("sort_naive on fig1 reproduces the derived rank pairs") {
  RankTable t = sort_naive(fig1()).ranks;
  CHECK(pairs_of(t) == fig1_rank_pairs());
  CHECK(t.distinct == 18);
}

TEST_CASE("first iteration ranks by label alone") {
  Dfa dfa = fig1();
  NaiveEngine engine(dfa);
  engine.step();
  RankTable t = engine.ranks();
  for (StateId u = 0; u < dfa.n; ++u) {
    std::uint32_t expect = u == 0 ? 1 : (dfa.labels[u] == 'a' ? 2 : 3);
    CHECK(t.inf_rank[u] == expect);
    CHECK(t.sup_rank[u] == expect);
  }
}

TEST_CASE("pruned predecessor sets stay nonempty and homogeneous") {
  Dfa dfa = fig1();
  NaiveEngine engine(dfa);
  while (!engine.done()) {
    engine.step();
    for (StateId u = 1; u < dfa.n; ++u) {
      for (Tag tag : {Tag::Inf, Tag::Sup}) {
        const auto& preds = engine.pruned_preds({u, tag});
        REQUIRE_FALSE(preds.empty());
        for (StateId v : preds) {
          CHECK(engine.tagged_ranks()[v + (tag == Tag::Sup ? dfa.n : 0)] ==
                engine.tagged_ranks()[preds[0] + (tag == Tag::Sup ? dfa.n : 0)]);
        }
      }
    }
  }
}

TEST_CASE("sort_naive agrees with the oracle on small instances") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Dfa dfa = generate(small_params(seed, 8, 3, seed % 2 == 0));
    CAPTURE(seed);
    CHECK(sort_naive(dfa).ranks.same_ranks(oracle_rank_table(dfa)));
  }
}

TEST_CASE("sort_naive agrees with the oracle on larger spot checks") {
  for (std::uint64_t seed : {3u, 17u, 40u, 99u}) {
    GenParams p{.n = 200, .alphabet_size = 4, .density = 2.0,
                .acyclic = seed % 2 == 0, .seed = seed};
    Dfa dfa = generate(p);
    CAPTURE(seed);
    CHECK(sort_naive(dfa).ranks.same_ranks(oracle_rank_table(dfa)));
  }
}

TEST_CASE("iteration count and work bounds") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Dfa dfa = generate(small_params(seed, 60, 4, seed % 2 == 0));
    NaiveResult res = sort_naive(dfa);
    CHECK(res.iterations <= 2 * dfa.n);
    // O(n + m) touched per iteration.
    CHECK(res.work <= 16 * (dfa.n + dfa.m() + 64) * res.iterations);
  }
}
