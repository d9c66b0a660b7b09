#include <doctest.h>

#include "colex/chain_partition.hpp"
#include "colex/oracle.hpp"
#include "fixtures.hpp"

using namespace colex;
using namespace colex::fixtures;

TEST_CASE("oracle_infsup reproduces the fig1 table at L = 20") {
  Dfa dfa = fig1();
  OracleKeys keys = oracle_infsup(dfa, 20);
  auto expected = fig1_strings();
  for (StateId u = 0; u < dfa.n; ++u) {
    CAPTURE(u);
    CHECK(keys.inf[u] == suffix_key(expected[u].first, 20));
    CHECK(keys.sup[u] == suffix_key(expected[u].second, 20));
  }
  CHECK(keys.inf[3] == key_of("#################aab"));
  CHECK(keys.sup[3] == key_of("bbbbbbbbbbbbbbbbbbbb"));
  CHECK(keys.sup[4] == key_of("bbbbbbbbbbbbbbbbbbba"));
}

TEST_CASE("oracle_infsup on tiny fixtures") {
  OracleKeys path = oracle_infsup(t1(), 6);
  CHECK(path.inf[0] == key_of("######"));
  CHECK(path.inf[1] == key_of("#####a"));
  CHECK(path.inf[2] == key_of("####ab"));
  CHECK(path.inf == path.sup);

  OracleKeys loop = oracle_infsup(t2(), 4);
  CHECK(loop.inf[1] == key_of("###a"));
  CHECK(loop.sup[1] == key_of("aaaa"));
}

TEST_CASE("oracle_order_def enumerates the definition") {
  auto path_rel = oracle_order_def(t1());
  REQUIRE(path_rel.has_value());
  CHECK(path_rel->count() == 3);  // total order on 3 states
  CHECK((*path_rel)(0, 1));
  CHECK((*path_rel)(1, 2));
  CHECK((*path_rel)(0, 2));

  // t4: states 4 ({ab, cb}) and 5 ({bb}) are incomparable both ways.
  auto rel = oracle_order_def(t4());
  REQUIRE(rel.has_value());
  CHECK_FALSE((*rel)(4, 5));
  CHECK_FALSE((*rel)(5, 4));
  CHECK((*rel)(3, 4));  // b precedes both ab and cb

  CHECK_THROWS_AS(oracle_order_def(fig1()), CyclicInputError);
  CHECK_THROWS_AS(oracle_order_def(t2()), CyclicInputError);
}

TEST_CASE("oracle_order_def honors the enumeration cap") {
  Dfa dfa = generate({.n = 8, .alphabet_size = 3, .density = 2.5, .acyclic = true,
                      .seed = 12});
  CHECK_FALSE(oracle_order_def(dfa, 2).has_value());
  CHECK(oracle_order_def(dfa, 1000000).has_value());
}

TEST_CASE("oracle_min_chain_cover") {
  Relation empty;
  empty.n = 4;
  empty.less.assign(16, false);
  CHECK(oracle_min_chain_cover(empty) == 4);

  Relation total;
  total.n = 4;
  total.less.assign(16, false);
  for (StateId u = 0; u < 4; ++u) {
    for (StateId v = u + 1; v < 4; ++v) total.set(u, v);
  }
  CHECK(oracle_min_chain_cover(total) == 1);

  auto rel = oracle_order_def(t4());
  REQUIRE(rel.has_value());
  CHECK(oracle_min_chain_cover(*rel) == 2);
}

TEST_CASE("theorem 3.1: enumeration equals the rank-pair relation") {
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    Dfa dfa = generate(small_params(seed, 8, 3, true));
    auto def_rel = oracle_order_def(dfa);
    REQUIRE(def_rel.has_value());
    Relation rank_rel = relation_from_rank_pairs(
        interval_representation(oracle_rank_table(dfa)));
    CAPTURE(seed);
    CHECK(*def_rel == rank_rel);
    CHECK(is_strict_partial_order(rank_rel));
  }
}

TEST_CASE("observation suite on oracle keys") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    Dfa dfa = generate(small_params(seed, 8, 3, seed % 2 == 0));
    const std::size_t L = 2 * dfa.n;
    OracleKeys keys = oracle_infsup(dfa, L);

    for (StateId u = 0; u < dfa.n; ++u) {
      // inf <= sup per state.
      CHECK(compare_keys(keys.inf[u], keys.sup[u]) <= 0);
    }

    // Equal keys across distinct tagged states only for infinite strings
    // (no padding in the key).
    auto tagged_key = [&](std::size_t t) -> const SuffixKey& {
      return t < dfa.n ? keys.inf[t] : keys.sup[t - dfa.n];
    };
    for (std::size_t a = 0; a < 2 * dfa.n; ++a) {
      for (std::size_t b = a + 1; b < 2 * dfa.n; ++b) {
        if (a % dfa.n == b % dfa.n) continue;  // same state: singleton case
        if (tagged_key(a) == tagged_key(b)) {
          CHECK(tagged_key(a).find('\0') == SuffixKey::npos);
        }
      }
    }

    // Every realized suffix of an inf/sup key is spelled by a path into u.
    for (StateId u = 0; u < dfa.n; ++u) {
      for (const SuffixKey& key : {keys.inf[u], keys.sup[u]}) {
        std::string tail;
        for (char c : key) {
          if (c != '\0') tail.push_back(c);
        }
        std::vector<bool> cur(dfa.n, false);
        cur[u] = true;
        for (std::size_t i = tail.size(); i-- > 0;) {
          std::vector<bool> prev(dfa.n, false);
          bool any = false;
          for (const Transition& t : dfa.transitions) {
            if (t.symbol == static_cast<Symbol>(tail[i]) && cur[t.to]) {
              prev[t.from] = true;
              any = true;
            }
          }
          CAPTURE(seed);
          CHECK(any);
          cur = std::move(prev);
        }
      }
    }
  }
}

TEST_CASE("eventually periodic form of cyclic inf/sup strings") {
  std::size_t infinite_seen = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Dfa dfa = generate(small_params(seed, 8, 3, false));
    const std::size_t L = 2 * dfa.n;
    OracleKeys keys = oracle_infsup(dfa, L);
    for (StateId u = 0; u < dfa.n; ++u) {
      for (const SuffixKey& key : {keys.inf[u], keys.sup[u]}) {
        EventuallyPeriodicString s = from_suffix_key(key, dfa.n);
        CHECK(s.alpha.size() + s.beta.size() < dfa.n);
        CHECK(suffix_key(s, L) == key);
        infinite_seen += s.infinite();
      }
    }
  }
  CHECK(infinite_seen > 50);  // cyclic draws really produce ω-strings
}
