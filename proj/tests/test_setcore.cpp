#include <doctest.h>

#include <random>

#include "mstd/kernel.hpp"
#include "mstd/literal.hpp"
#include "mstd/random.hpp"
#include "mstd/setcore.hpp"
#include "oracle.hpp"

using namespace mstd;

namespace {

const IntSet kA1{0, 2, 3, 4, 7, 11, 12, 14};

std::vector<IntSet> random_corpus(std::size_t count, std::uint64_t seed, Int max_size, Int hi) {
  Rng rng(seed);
  std::vector<IntSet> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(rng.random_set(max_size, 0, hi));
  return out;
}

}  // namespace

TEST_SUITE("setcore") {
  TEST_CASE("sumset examples") {
    CHECK(sumset(IntSet{0, 1}) == IntSet{0, 1, 2});
    CHECK(sumset(IntSet::range(5)) == IntSet::range(9));

    const IntSet s = sumset(kA1);
    CHECK(s.size() == 26);
    CHECK(IntSet::range(29).without(s) == IntSet{1, 20, 27});
    CHECK_THROWS_AS(sumset(IntSet{}), std::domain_error);
  }

  TEST_CASE("diffset examples") {
    CHECK(diffset(IntSet{0, 1}) == IntSet{-1, 0, 1});
    CHECK(diffset(IntSet{0, 1, 3}) == IntSet{-3, -2, -1, 0, 1, 2, 3});

    const IntSet d = diffset(kA1);
    CHECK(d.size() == 25);
    std::vector<Int> positive;
    for (Int x : d)
      if (x > 0) positive.push_back(x);
    CHECK(IntSet(positive) == IntSet{1, 2, 3, 4, 5, 7, 8, 9, 10, 11, 12, 14});
    CHECK_THROWS_AS(diffset(IntSet{}), std::domain_error);
  }

  TEST_CASE("classify examples") {
    CHECK(classify(kA1) == SetClass::SumDominant);
    CHECK(classify(IntSet{0, 1, 2, 4, 5}) == SetClass::Balanced);
    CHECK(classify(IntSet{0, 1, 3}) == SetClass::DifferenceDominant);
    CHECK_THROWS_AS(classify(IntSet{}), std::domain_error);
  }

  TEST_CASE("profile examples") {
    const SetProfile p = profile(IntSet{0, 1, 2});
    CHECK(p.size == 3);
    CHECK(p.sum_size == 5);
    CHECK(p.diff_size == 5);
    CHECK(p.set_class == SetClass::Balanced);
    CHECK(p.symmetry_center == Int{2});
    CHECK(p.ap == APSpec{0, 1, 3});
    CHECK(p.equal_sum_pairs == 1);
    CHECK(p.equal_diff_pairs == 1);

    const SetProfile a1 = profile(kA1);
    CHECK(a1.size == 8);
    CHECK(a1.sum_size == 26);
    CHECK(a1.diff_size == 25);
    CHECK(a1.set_class == SetClass::SumDominant);
    CHECK_FALSE(a1.symmetry_center.has_value());
    CHECK_FALSE(a1.ap.has_value());
    CHECK(a1.equal_sum_pairs == 13);
    CHECK(a1.equal_diff_pairs == 21);
    CHECK(a1.diameter == 14);

    CHECK(profile(IntSet{0, 2, 3, 7, 11, 12, 14}).symmetry_center == Int{14});
    CHECK_THROWS_AS(profile(IntSet{}), std::domain_error);
  }

  TEST_CASE("affine_normalize") {
    auto n = affine_normalize(IntSet{3, 7, 11});
    CHECK(n.set == IntSet{0, 1, 2});
    CHECK(n.transform == AffineTransform{3, 4});
    CHECK(n.transform.invert(2) == 11);

    CHECK(affine_normalize(IntSet{0, 2, 4, 12, 14}).set == IntSet{0, 1, 2, 6, 7});

    n = affine_normalize(IntSet{5});
    CHECK(n.set == IntSet{0});
    CHECK(n.transform == AffineTransform{5, 1});

    n = affine_normalize(IntSet{-9, -3, 6});
    CHECK(n.set == IntSet{0, 2, 5});
    for (Int x : IntSet{-9, -3, 6}) CHECK(n.set.contains(n.transform.apply(x)));
  }

  TEST_CASE("reflect_canonical") {
    CHECK(reflect_canonical(IntSet{0, 1, 3}) == IntSet{0, 1, 3});
    CHECK(reflect_canonical(IntSet{0, 2, 3}) == IntSet{0, 1, 3});
    CHECK(reflect_canonical(kA1) == kA1);
    CHECK(reflect_canonical(IntSet{0, 2, 3, 7, 10, 11, 12, 14}) == kA1);
    CHECK(reflect_canonical(IntSet{0, 1, 2}) == IntSet{0, 1, 2});
    CHECK_THROWS_AS(reflect_canonical(IntSet{1, 2}), std::domain_error);
    CHECK_THROWS_AS(reflect_canonical(IntSet{0, 2, 4}), std::domain_error);
  }

  TEST_CASE("reflect_canonical is idempotent and agrees with the oracle") {
    for (const IntSet& a : random_corpus(500, 11, 10, 40)) {
      const IntSet c = canonical_form(a);
      CHECK(reflect_canonical(c) == c);
      CHECK(c.elements() == oracle::canonical(a.elements()));
    }
  }

  TEST_CASE("RationalSet and scale_to_integers") {
    const ScaledSet s = scale_to_integers(RationalSet(IntSet{0, 2, 5}, 2));
    CHECK(s.set == IntSet{0, 2, 5});
    CHECK(s.scale == 2);

    const RationalSet i4_half = RationalSet::integral(IntSet::range(4)).united(RationalSet(IntSet{7}, 2));
    CHECK(i4_half == RationalSet(IntSet{0, 2, 4, 6, 7}, 2));
    CHECK(scale_to_integers(i4_half).set == IntSet{0, 2, 4, 6, 7});

    CHECK(scale_to_integers(RationalSet::integral(IntSet{1, 4})).set == IntSet{1, 4});

    // Reduced on construction.
    const RationalSet r(IntSet{0, 2, 4}, 2);
    CHECK(r.numerators() == IntSet{0, 1, 2});
    CHECK(r.denominator() == 1);
    CHECK_THROWS_AS(RationalSet(IntSet{1}, 0), std::domain_error);
  }

  TEST_CASE("scaling preserves the class of a rational set") {
    // {0, 1, 5/2} and {0, 2, 5} classify alike; so does every dilation.
    for (const IntSet& a : random_corpus(200, 5, 8, 30)) {
      const SetClass c = classify(a);
      CHECK(classify(scale_to_integers(RationalSet(a, 3)).set) == c);
      CHECK(classify(a.scaled(7)) == c);
    }
  }

  TEST_CASE("is_symmetric") {
    CHECK(is_symmetric(IntSet{0, 1, 2, 10, 11, 12}) == Int{12});
    CHECK(is_symmetric(IntSet{0, 2, 3, 7, 11, 12, 14}) == Int{14});
    CHECK_FALSE(is_symmetric(IntSet{0, 1, 3}).has_value());
    CHECK(is_symmetric(IntSet{4}) == Int{8});
  }

  TEST_CASE("detect_ap") {
    CHECK(detect_ap(IntSet{3, 7, 11}) == APSpec{3, 4, 3});
    CHECK(detect_ap(IntSet{0, 5}) == APSpec{0, 5, 2});
    CHECK(detect_ap(IntSet{9}) == APSpec{9, 1, 1});
    CHECK_FALSE(detect_ap(IntSet{0, 1, 3}).has_value());
  }

  TEST_CASE("ap_plus_two_decomposition") {
    auto d = ap_plus_two_decomposition(IntSet{0, 1, 2, 3, 10, 20});
    REQUIRE(d.has_value());
    CHECK(d->ap == APSpec{0, 1, 4});
    CHECK(d->extras == IntSet{10, 20});

    CHECK_FALSE(ap_plus_two_decomposition(kA1).has_value());

    d = ap_plus_two_decomposition(IntSet{0, 2, 4, 6});
    REQUIRE(d.has_value());
    CHECK(d->ap == APSpec{0, 2, 4});
    CHECK(d->extras.empty());

    // Smallest extras first, then lexicographic: {0,1,3} splits as {1,3} + {0}.
    d = ap_plus_two_decomposition(IntSet{0, 1, 3});
    REQUIRE(d.has_value());
    CHECK(d->extras == IntSet{0});
    CHECK(d->ap == APSpec{1, 2, 2});
  }

  TEST_CASE("AP-plus-two predicates agree with exhaustive removal") {
    for (int d = 0; d <= 14; ++d) {
      for (const auto& a : oracle::raw_subsets(d)) {
        const IntSet s(a);
        const bool expected = oracle::ap_plus_two(a);
        CHECK(ap_plus_two_decomposition(s).has_value() == expected);
        CHECK(kernel::mask_is_ap_plus_two(s.to_mask()) == expected);
      }
    }
  }
}

TEST_SUITE("setcore properties") {
  TEST_CASE("kernel paths match the double-loop oracle on 10,000 random sets") {
    for (const IntSet& a : random_corpus(10'000, kDefaultSeed, 12, 64)) {
      const auto s = oracle::sums(a.elements());
      const auto d = oracle::diffs(a.elements());
      const IntSet want_s(oracle::to_vec(s));
      const IntSet want_d(oracle::to_vec(d));
      CHECK(sumset(a) == want_s);
      CHECK(diffset(a) == want_d);
      CHECK(kernel::sumset_dense(a) == want_s);
      CHECK(kernel::diffset_dense(a) == want_d);
      CHECK(kernel::sumset_sparse(a) == want_s);
      CHECK(kernel::diffset_sparse(a) == want_d);
      const kernel::Counts c = kernel::counts(a);
      CHECK(c.sum_size == s.size());
      CHECK(c.diff_size == d.size());
    }
  }

  TEST_CASE("wide sets use the word bitset and the sort path consistently") {
    for (const IntSet& a : random_corpus(300, 99, 14, 200'000)) {
      const IntSet want_s(oracle::to_vec(oracle::sums(a.elements())));
      const IntSet want_d(oracle::to_vec(oracle::diffs(a.elements())));
      CHECK(kernel::sumset_dense(a) == want_s);
      CHECK(kernel::diffset_dense(a) == want_d);
      CHECK(kernel::sumset_sparse(a) == want_s);
      CHECK(kernel::diffset_sparse(a) == want_d);
      CHECK(kernel::counts(a).sum_size == want_s.size());
      CHECK(kernel::counts(a).diff_size == want_d.size());
    }
  }

  TEST_CASE("sumset and diffset basic shape") {
    for (const IntSet& a : random_corpus(2000, 3, 12, 64)) {
      const IntSet d = diffset(a);
      CHECK(d == d.negated());
      CHECK(d.contains(0));
      CHECK(d.size() % 2 == 1);
      const IntSet s = sumset(a);
      CHECK(s.min() == 2 * a.min());
      CHECK(s.max() == 2 * a.max());
    }
  }

  TEST_CASE("profile counts are invariant under affine maps") {
    Rng rng(17);
    for (const IntSet& a : random_corpus(1000, 21, 12, 64)) {
      const SetProfile base = profile(a);
      const Int t = rng.uniform(-1000, 1000);
      const Int c = rng.uniform(1, 9);
      for (const IntSet& image : {a.translated(t), a.negated().translated(t), a.scaled(c)}) {
        const SetProfile p = profile(image);
        CHECK(p.sum_size == base.sum_size);
        CHECK(p.diff_size == base.diff_size);
        CHECK(p.set_class == base.set_class);
        CHECK(p.equal_sum_pairs == base.equal_sum_pairs);
        CHECK(p.equal_diff_pairs == base.equal_diff_pairs);
      }
    }
  }

  TEST_CASE("symmetric sets are balanced and APs are symmetric") {
    Rng rng(23);
    for (int trial = 0; trial < 2000; ++trial) {
      const IntSet half = rng.random_set(8, 0, 40);
      const Int c = rng.uniform(half.max(), half.max() + 40);
      const IntSet mirrored = half.united(half.negated().translated(c));
      REQUIRE(is_symmetric(mirrored).has_value());
      CHECK(classify(mirrored) == SetClass::Balanced);
      CHECK(oracle::compare_counts(mirrored.elements()) == 0);
    }
    for (Int first = -3; first <= 3; ++first)
      for (Int step = 1; step <= 5; ++step)
        for (Int len = 1; len <= 8; ++len) {
          const IntSet ap = IntSet::progression(first, step, len);
          REQUIRE(detect_ap(ap).has_value());
          CHECK(is_symmetric(ap).has_value());
        }
  }

  TEST_CASE("classification matches the oracle") {
    for (const IntSet& a : random_corpus(3000, 31, 12, 64)) {
      const int want = oracle::compare_counts(a.elements());
      const SetClass got = classify(a);
      CHECK(got == (want > 0   ? SetClass::SumDominant
                    : want < 0 ? SetClass::DifferenceDominant
                               : SetClass::Balanced));
    }
  }
}

TEST_SUITE("literal") {
  TEST_CASE("integer literals") {
    CHECK(parse_int_set("0,2,3,4,7,11,12,14") == kA1);
    CHECK(parse_int_set(" -3, 5 ,+7") == IntSet{-3, 5, 7});
    CHECK(format_set(kA1) == "0,2,3,4,7,11,12,14");
  }

  TEST_CASE("malformed literals report the offending token") {
    try {
      parse_int_set("0,,1");
      FAIL("expected a LiteralError");
    } catch (const LiteralError& e) {
      CHECK(e.token() == 2);
      CHECK(e.offset() == 2);
    }
    CHECK_THROWS_AS(parse_int_set(""), LiteralError);
    CHECK_THROWS_AS(parse_int_set("1,x"), LiteralError);
    CHECK_THROWS_AS(parse_int_set("1,2/3"), LiteralError);
    CHECK_THROWS_AS(parse_int_set("99999999999999999999"), LiteralError);
    CHECK_THROWS_AS(parse_rational_set("1/0"), LiteralError);
  }

  TEST_CASE("rational literals share one denominator") {
    const RationalSet r = parse_rational_set("0,1,5/2");
    CHECK(r.numerators() == IntSet{0, 2, 5});
    CHECK(r.denominator() == 2);
    CHECK(format_set(r) == "0,1,5/2");
    CHECK(parse_rational_set("1/2,3/2").numerators() == IntSet{1, 3});
    CHECK(parse_rational_set("2/4,1/3").denominator() == 6);
  }

  TEST_CASE("format then parse is the identity") {
    for (const IntSet& a : random_corpus(500, 41, 12, 100)) {
      CHECK(parse_int_set(format_set(a.translated(-50))) == a.translated(-50));
      const RationalSet r(a, 6);
      CHECK(parse_rational_set(format_set(r)) == r);
    }
  }
}
