#include "doctest.h"

#include <random>

#include "grafock/multi_index.hpp"
#include "grafock/oracles.hpp"

using namespace grafock;

TEST_CASE("index_product basics") {
  CHECK(index_product(MultiIndex::of({1, 2}), MultiIndex::of({3})) ==
        SignedIndex::make(+1, MultiIndex::of({1, 2, 3})));
  CHECK(index_product(MultiIndex::of({2}), MultiIndex::of({1})) ==
        SignedIndex::make(-1, MultiIndex::of({1, 2})));
  CHECK(index_product(MultiIndex::of({1}), MultiIndex::of({1})).is_zero);
  // identity element of the index monoid
  CHECK(index_product(MultiIndex(), MultiIndex::of({5})) ==
        SignedIndex::make(+1, MultiIndex::of({5})));
}

TEST_CASE("index_product agrees with the bubble-sort oracle") {
  // the ({1,3},{2}) example first
  const auto direct = index_product(MultiIndex::of({1, 3}), MultiIndex::of({2}));
  const auto sorted = oracles::naive_sign_sort({{1, 3, 2}});
  CHECK(direct == sorted);
  CHECK(direct.sign == -1);

  // exhaustive over Lambda_4: 16 x 16 pairs
  for (std::uint64_t a = 0; a < 16; ++a) {
    for (std::uint64_t b = 0; b < 16; ++b) {
      const MultiIndex ia = MultiIndex::from_bits(a), ib = MultiIndex::from_bits(b);
      oracles::SeqIndex seq;
      for (int g : ia.generators()) seq.gens.push_back(g);
      for (int g : ib.generators()) seq.gens.push_back(g);
      CAPTURE(a);
      CAPTURE(b);
      CHECK(index_product(ia, ib) == oracles::naive_sign_sort(seq));
    }
  }
}

TEST_CASE("sigma parity matches a counting loop on random wide indices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> dist;
  for (int trial = 0; trial < 2000; ++trial) {
    const std::uint64_t a = dist(rng);
    const std::uint64_t b = dist(rng) & ~a;  // disjoint
    long inversions = 0;
    for (int i = 0; i < 64; ++i)
      for (int j = 0; j < 64; ++j)
        if (((a >> i) & 1) && ((b >> j) & 1) && i + 1 > j + 1) ++inversions;
    CHECK(sigma_parity(a, b) == inversions % 2);
  }
}

TEST_CASE("multi-index bookkeeping") {
  const MultiIndex m = MultiIndex::of({2, 5, 9});
  CHECK(m.degree() == 3);
  CHECK(m.max_generator() == 9);
  CHECK(m.contains(5));
  CHECK_FALSE(m.contains(4));
  CHECK(m.generators() == std::vector<int>{2, 5, 9});
  CHECK(MultiIndex().degree() == 0);
  CHECK(MultiIndex().max_generator() == 0);
  CHECK_THROWS_AS(MultiIndex::of({0}), Error);
  CHECK_THROWS_AS(MultiIndex::of({65}), Error);
}
