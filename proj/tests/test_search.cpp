#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "mstd/kernel.hpp"
#include "mstd/search.hpp"
#include "oracle.hpp"

using namespace mstd;

namespace {

const IntSet kA1{0, 2, 3, 4, 7, 11, 12, 14};

SearchConfig sweep(int dmax, bool prune = false) {
  SearchConfig c = prune ? SearchConfig::discovery() : SearchConfig{};
  c.diameter_max = dmax;
  return c;
}

std::vector<IntSet> enumerate_diameter(int d) {
  SearchConfig c;
  c.diameter_min = d;
  c.diameter_max = d;
  std::vector<IntSet> out;
  enumerate_normalized(c, [&](const CanonicalSet& s) { out.push_back(s.to_set()); });
  return out;
}

std::filesystem::path temp_path(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("mstd-test-" + name + ".jsonl");
  std::filesystem::remove(p);
  return p;
}

std::vector<std::string> read_lines(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_SUITE("enumeration") {
  TEST_CASE("small diameters") {
    CHECK(enumerate_diameter(0) == std::vector<IntSet>{IntSet{0}});
    CHECK(enumerate_diameter(1) == std::vector<IntSet>{IntSet{0, 1}});
    CHECK(enumerate_diameter(2) == std::vector<IntSet>{IntSet{0, 1, 2}});
    CHECK(enumerate_diameter(3) == std::vector<IntSet>{IntSet{0, 1, 2, 3}, IntSet{0, 1, 3}});
    CHECK(enumerate_diameter(4) == std::vector<IntSet>{IntSet{0, 1, 2, 3, 4}, IntSet{0, 1, 2, 4},
                                                       IntSet{0, 1, 3, 4}, IntSet{0, 1, 4}});
  }

  TEST_CASE("canonical counts per diameter") {
    const std::map<int, std::uint64_t> expected{
        {0, 1},    {1, 1},    {2, 1},     {3, 2},     {4, 4},     {5, 9},
        {6, 16},   {7, 35},   {8, 66},    {9, 133},   {10, 261},  {11, 527},
        {12, 1032}, {13, 2079}, {14, 4123}, {15, 8244}};
    std::map<int, std::uint64_t> got;
    enumerate_normalized(sweep(15), [&](const CanonicalSet& s) { ++got[s.diameter]; });
    CHECK(got == expected);
  }

  TEST_CASE("raw count respects size bounds") {
    SearchConfig c;
    c.diameter_min = 14;
    c.diameter_max = 14;
    c.size_min = 8;
    c.size_max = 8;
    const EnumerationCounts n = enumerate_normalized(c, [](const CanonicalSet& s) {
      CHECK(s.size == 8);
    });
    CHECK(n.raw == 1716);
  }

  TEST_CASE("each class appears once, in lexicographic order") {
    for (int d = 1; d <= 12; ++d) {
      std::set<oracle::Elems> want;
      for (const auto& a : oracle::raw_subsets(d)) {
        const auto c = oracle::canonical(a);
        if (c.back() == d) want.insert(c);
      }
      const std::vector<IntSet> got = enumerate_diameter(d);
      REQUIRE(got.size() == want.size());
      auto it = want.begin();
      for (const IntSet& s : got) CHECK(s.elements() == *it++);
    }
  }

  TEST_CASE("orbits cover every raw subset") {
    // A class of diameter c contributes one raw subset of [0, D] per divisor
    // multiple, doubled unless the class is its own reflection.
    std::map<int, std::uint64_t> weight;
    enumerate_normalized(sweep(16), [&](const CanonicalSet& s) {
      const bool sym = kernel::mask_reflect(s.mask, s.diameter) == s.mask;
      weight[s.diameter] += sym ? 1 : 2;
    });
    for (int d = 1; d <= 16; ++d) {
      std::uint64_t total = 0;
      for (int c = 1; c <= d; ++c)
        if (d % c == 0) total += weight[c];
      CHECK(total == (std::uint64_t{1} << (d - 1)));
    }
  }

  TEST_CASE("partitions") {
    const auto parts = make_partitions(0, 12);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      CHECK(parts[i].id == i);
      if (i > 0) CHECK(parts[i - 1].diameter <= parts[i].diameter);
    }
    std::map<int, std::size_t> per;
    for (const auto& p : parts) ++per[p.diameter];
    CHECK(per[12] == 256);
    CHECK(per[5] == 16);
    CHECK(per[0] == 1);
  }
}

TEST_SUITE("search") {
  TEST_CASE("smallest sum-dominant set up to diameter 14") {
    const SearchResult r = find_min_mstd(sweep(14));
    REQUIRE(r.min_mstd_size.has_value());
    CHECK(*r.min_mstd_size == 8);
    CHECK(r.witnesses == std::vector<IntSet>{kA1});
    REQUIRE(r.witness_profiles.size() == 1);
    CHECK(r.witness_profiles[0].sum_size == 26);
    CHECK(r.witness_profiles[0].diff_size == 25);
    CHECK(r.sets_examined == 8290);
    CHECK(r.sets_pruned == 0);
    REQUIRE(r.per_diameter.size() == 15);
    CHECK(r.per_diameter[14].examined == 4123);
    CHECK(r.per_diameter[14].sum_dominant == 2);  // A1 and a size-9 set
    CHECK(r.per_diameter[13].sum_dominant == 0);
  }

  TEST_CASE("no sum-dominant set below diameter 14") {
    const SearchResult r = find_min_mstd(sweep(13));
    CHECK_FALSE(r.min_mstd_size.has_value());
    CHECK(r.witnesses.empty());
  }

  TEST_CASE("sum-dominant sets up to diameter 14 match the oracle") {
    std::vector<IntSet> found;
    enumerate_normalized(sweep(14), [&](const CanonicalSet& s) {
      const IntSet a = s.to_set();
      if (oracle::compare_counts(a.elements()) > 0) found.push_back(a);
    });
    CHECK(found == std::vector<IntSet>{IntSet{0, 1, 2, 4, 5, 9, 12, 13, 14}, kA1});
  }

  TEST_CASE("pruned sets are never sum-dominant") {
    std::uint64_t pruned = 0;
    enumerate_normalized(sweep(16), [&](const CanonicalSet& s) {
      const bool sym = kernel::mask_reflect(s.mask, s.diameter) == s.mask;
      if (!sym && !kernel::mask_is_ap_plus_two(s.mask)) return;
      ++pruned;
      CHECK(oracle::compare_counts(s.to_set().elements()) <= 0);
    });
    CHECK(pruned > 0);
  }

  TEST_CASE("pruning changes the work but not the answer") {
    const SearchResult plain = find_min_mstd(sweep(14));
    const SearchResult pruned = find_min_mstd(sweep(14, true));
    CHECK(pruned.sets_examined == plain.sets_examined);
    CHECK(pruned.sets_pruned == 1322);
    CHECK(pruned.witnesses == plain.witnesses);
    CHECK(pruned.min_mstd_size == plain.min_mstd_size);
  }

  TEST_CASE("size window") {
    SearchConfig c = sweep(20, true);
    c.size_min = 6;
    c.size_max = 7;
    const SearchResult r = find_min_mstd(c);
    CHECK_FALSE(r.min_mstd_size.has_value());
    CHECK(r.sets_examined == 27061);

    c = sweep(14);
    c.size_min = 9;
    const SearchResult nine = find_min_mstd(c);
    CHECK(nine.min_mstd_size == 9);
    CHECK(nine.witnesses == std::vector<IntSet>{IntSet{0, 1, 2, 4, 5, 9, 12, 13, 14}});
  }

  TEST_CASE("results do not depend on the worker count") {
    std::string first;
    for (unsigned w : {1U, 2U, 8U}) {
      SearchConfig c = sweep(15, true);
      c.workers = w;
      const std::string j = dump(to_json(find_min_mstd(c)));
      if (first.empty()) first = j;
      CHECK(j == first);
    }
  }

  TEST_CASE("invalid configurations") {
    SearchConfig c;
    c.diameter_max = 64;
    CHECK_THROWS_AS(find_min_mstd(c), std::domain_error);
    c = SearchConfig{};
    c.diameter_min = 5;
    c.diameter_max = 4;
    CHECK_THROWS_AS(find_min_mstd(c), std::domain_error);
    c = SearchConfig{};
    c.size_min = 5;
    c.size_max = 4;
    CHECK_THROWS_AS(find_min_mstd(c), std::domain_error);
  }
}

TEST_SUITE("checkpoint") {
  TEST_CASE("a finished run resumes without recomputation") {
    const auto path = temp_path("resume");
    SearchConfig c = sweep(14, true);
    c.workers = 4;
    c.checkpoint_path = path.string();
    const SearchResult first = find_min_mstd(c);
    CHECK(first.partitions_resumed == 0);
    const auto lines = read_lines(path);
    const auto parts = make_partitions(0, 14);
    REQUIRE(lines.size() == parts.size() + 1);
    CHECK(lines[0].find("mstd-search-checkpoint") != std::string::npos);

    const SearchResult again = find_min_mstd(c);
    CHECK(again.partitions_resumed == parts.size());
    CHECK(dump(to_json(again)) == dump(to_json(first)));
    std::filesystem::remove(path);
  }

  TEST_CASE("a torn trailing record is dropped and recomputed") {
    const auto path = temp_path("torn");
    SearchConfig c = sweep(14, true);
    c.checkpoint_path = path.string();
    const SearchResult full = find_min_mstd(c);

    auto lines = read_lines(path);
    const std::size_t keep = lines.size() / 2;
    {
      std::ofstream out(path, std::ios::trunc);
      for (std::size_t i = 0; i < keep; ++i) out << lines[i] << '\n';
      out << lines[keep].substr(0, lines[keep].size() / 2);
    }
    const SearchResult resumed = find_min_mstd(c);
    CHECK(resumed.partitions_resumed == keep - 1);
    CHECK(dump(to_json(resumed)) == dump(to_json(full)));
    CHECK(read_lines(path).size() == lines.size());
    std::filesystem::remove(path);
  }

  TEST_CASE("a checkpoint from another configuration is refused") {
    const auto path = temp_path("mismatch");
    SearchConfig c = sweep(10);
    c.checkpoint_path = path.string();
    find_min_mstd(c);
    c.diameter_max = 11;
    CHECK_THROWS_AS(find_min_mstd(c), std::runtime_error);
    std::filesystem::remove(path);
  }
}
