#include <doctest.h>

#include "mstd/random.hpp"
#include "mstd/setcore.hpp"
#include "mstd/structure.hpp"
#include "oracle.hpp"

using namespace mstd;

TEST_SUITE("structure") {
  TEST_CASE("gaps") {
    CHECK(gaps(IntSet{0, 2, 3, 4, 7, 11, 12, 14}).gaps == std::vector<Int>{2, 1, 1, 3, 4, 1, 2});
    CHECK(gaps(IntSet{-5, 5}).gaps == std::vector<Int>{10});
    CHECK_THROWS_AS(gaps(IntSet{1}), std::domain_error);
  }

  TEST_CASE("difference table rows are partial sums of the gaps") {
    const DifferenceTable t = difference_table(IntSet{0, 1, 3, 7});
    REQUIRE(t.rows.size() == 3);
    CHECK(t.rows[0] == std::vector<Int>{1, 3, 7});
    CHECK(t.rows[1] == std::vector<Int>{2, 6});
    CHECK(t.rows[2] == std::vector<Int>{4});
    CHECK_THROWS_AS(difference_table(IntSet{}), std::domain_error);
  }

  TEST_CASE("difference table rendering") {
    CHECK(render_difference_table(difference_table(IntSet{0, 1, 3})) == "0 1 3\n  2\n");
    CHECK(render_difference_table(difference_table(IntSet{0, 1, 3, 12})) ==
          " 0  1  3 12\n    2 11\n       9\n");
  }

  TEST_CASE("pair counts on fixed sets") {
    const IntSet a1{0, 2, 3, 4, 7, 11, 12, 14};
    CHECK(equal_sum_pairs(a1) == 13);
    CHECK(equal_diff_pairs(a1) == 21);
    CHECK(equal_sum_pairs(IntSet{0, 1, 2}) == 1);
    CHECK(equal_diff_pairs(IntSet{0, 1, 2}) == 1);
    CHECK(equal_sum_pairs(IntSet{0, 1, 3, 7}) == 0);
    CHECK(equal_diff_pairs(IntSet{0, 1, 3, 7}) == 0);
  }

  TEST_CASE("pair counts match the oracle") {
    Rng rng(7);
    for (int i = 0; i < 3000; ++i) {
      const IntSet a = rng.random_set(12, -20, 40);
      CHECK(equal_sum_pairs(a) == oracle::equal_sum_pairs(a.elements()));
      CHECK(equal_diff_pairs(a) == oracle::equal_diff_pairs(a.elements()));
      CHECK(2 * equal_sum_pairs(a) >= equal_diff_pairs(a));
    }
  }

  TEST_CASE("pair counts are exactly the collision corrections") {
    Rng rng(8);
    for (int i = 0; i < 3000; ++i) {
      const IntSet a = rng.random_set(12, 0, 64);
      const auto n = static_cast<std::int64_t>(a.size());
      const CardinalityBounds b = cardinality_bounds(n);
      const SetProfile p = profile(a);
      CHECK(p.sum_size <= b.max_sum);
      CHECK(p.diff_size <= b.max_diff);
      CHECK(p.sum_size + p.equal_sum_pairs >= b.max_sum);
      CHECK(p.diff_size + 2 * p.equal_diff_pairs >= b.max_diff);
    }
  }

  TEST_CASE("cardinality bounds") {
    CHECK(cardinality_bounds(1) == CardinalityBounds{1, 1});
    CHECK(cardinality_bounds(4) == CardinalityBounds{10, 13});
    CHECK(cardinality_bounds(8) == CardinalityBounds{36, 57});
    CHECK_THROWS_AS(cardinality_bounds(0), std::domain_error);

    const SetProfile sidon = profile(IntSet{0, 1, 3, 7});
    CHECK(sidon.sum_size == 10);
    CHECK(sidon.diff_size == 13);
  }

  TEST_CASE("insertion delta") {
    CHECK(insertion_delta(IntSet::range(5), 9) == DeltaProfile{6, 5});
    CHECK(insertion_delta(IntSet::range(5), 5) == DeltaProfile{2, 1});
    CHECK(insertion_delta(IntSet{}, 3) == DeltaProfile{1, 0});
    CHECK_THROWS_AS(insertion_delta(IntSet{0, 1}, 1), std::domain_error);
  }

  TEST_CASE("insertion delta matches recomputation") {
    Rng rng(9);
    for (int i = 0; i < 2000; ++i) {
      const IntSet a = rng.random_set(10, 0, 50);
      const Int x = rng.uniform(-10, 60);
      if (a.contains(x)) continue;
      const auto before_s = oracle::sums(a.elements()).size();
      const auto before_d = oracle::diffs(a.elements()).size();
      const auto after = a.with(x).elements();
      const DeltaProfile want{oracle::sums(after).size() - before_s,
                              (oracle::diffs(after).size() - before_d) / 2};
      CHECK(insertion_delta(a, x) == want);
    }
  }
}
