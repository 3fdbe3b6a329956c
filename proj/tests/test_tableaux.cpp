#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "qpa/errors.hpp"
#include "qpa/oracle.hpp"
#include "qpa/partition.hpp"
#include "qpa/random.hpp"
#include "qpa/tableaux.hpp"

using namespace qpa;

namespace {

Partition shape_of(std::vector<int64_t> parts) { return Partition(std::move(parts)); }

// Reference LIS by scanning all subsequences; usable for tiny words only.
int64_t lis_by_scan(const std::vector<int>& letters) {
  int64_t best = 0;
  std::size_t n = letters.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    int last = 0;
    int64_t len = 0;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (mask & (std::size_t{1} << i)) {
        if (letters[i] < last) {
          ok = false;
        } else {
          last = letters[i];
          ++len;
        }
      }
    }
    if (ok) best = std::max(best, len);
  }
  return best;
}

}  // namespace

TEST_CASE("partition basics") {
  Partition p = shape_of({4, 3, 1});
  CHECK(p.total() == 8);
  CHECK(p.length() == 3);
  CHECK(p.part(1) == 4);
  CHECK(p.part(4) == 0);
  CHECK(shape_of({3, 0, 0}) == shape_of({3}));
  CHECK(shape_of({}).total() == 0);
  CHECK(p.padded(4) == std::vector<int64_t>({4, 3, 1, 0}));
  CHECK_THROWS(p.padded(2));
  CHECK_THROWS(shape_of({1, 2}));
  CHECK_THROWS(shape_of({2, -1}));
  CHECK(p.str() == "(4,3,1)");
}

TEST_CASE("partitions_of enumerates without duplicates") {
  auto all = partitions_of(6, 6);
  CHECK(all.size() == 11);  // p(6)
  std::set<std::string> seen;
  for (const auto& p : all) {
    CHECK(p.total() == 6);
    seen.insert(p.str());
  }
  CHECK(seen.size() == all.size());
  CHECK(partitions_of(6, 2).size() == 4);  // (6),(5,1),(4,2),(3,3)
  CHECK(partitions_of(0, 3).size() == 1);
}

TEST_CASE("rsk_insert single steps") {
  // append when nothing bumps
  auto t = SemistandardTableau::from_rows(2, {{1, 1}});
  CHECK(rsk_insert(t, 2).rows() == std::vector<std::vector<int>>({{1, 1, 2}}));
  // bump 2 down to the second row
  auto t2 = SemistandardTableau::from_rows(2, {{2}});
  CHECK(rsk_insert(t2, 1).rows() == std::vector<std::vector<int>>({{1}, {2}}));
  // empty base case
  SemistandardTableau empty(2);
  CHECK(rsk_insert(empty, 1).rows() == std::vector<std::vector<int>>({{1}}));
  CHECK_THROWS_AS(rsk_insert(empty, 3), std::invalid_argument);
  CHECK_THROWS_AS(rsk_insert(empty, 0), std::invalid_argument);
}

TEST_CASE("rsk on fixed words") {
  auto constant = rsk(Word(2, {1, 1, 1}));
  CHECK(constant.shape == shape_of({3}));
  CHECK(constant.recording.rows == std::vector<std::vector<int64_t>>({{1, 2, 3}}));
  CHECK(constant.insertion.rows() == std::vector<std::vector<int>>({{1, 1, 1}}));

  auto mixed = rsk(Word(2, {2, 1, 2}));
  CHECK(mixed.shape == shape_of({2, 1}));
  CHECK(mixed.insertion.rows() == std::vector<std::vector<int>>({{1, 2}, {2}}));
  CHECK(mixed.recording.rows == std::vector<std::vector<int64_t>>({{1, 3}, {2}}));

  auto falling = rsk(Word(2, {2, 1}));
  CHECK(falling.shape == shape_of({1, 1}));
  CHECK(falling.insertion.rows() == std::vector<std::vector<int>>({{1}, {2}}));
  CHECK(falling.recording.rows == std::vector<std::vector<int64_t>>({{1}, {2}}));
}

TEST_CASE("restrict_below") {
  auto t = SemistandardTableau::from_rows(3, {{1, 1, 1, 1, 2, 3}, {2, 2, 3}, {3}});
  CHECK(t.restrict_below(3).shape() == shape_of({5, 2}));
  CHECK(t.restrict_below(4) == t);
  CHECK(t.restrict_below(1).empty());
  CHECK_THROWS_AS(t.restrict_below(5), std::invalid_argument);
}

TEST_CASE("overhangs") {
  CHECK(overhangs(shape_of({6, 3, 1}), shape_of({5, 2}), 3).values ==
        std::vector<int64_t>({2, 1}));
  CHECK(overhangs(shape_of({7}), shape_of({}), 2).values == std::vector<int64_t>({0}));
  CHECK(overhangs(shape_of({4, 3, 1}), shape_of({3, 2}), 3).values ==
        std::vector<int64_t>({0, 1}));
  CHECK(overhangs(shape_of({6, 3, 1}), shape_of({5, 2}), 3).sum() == 3);
  // mu_1 < lambda_2 cannot come from one tableau
  CHECK_THROWS_AS(overhangs(shape_of({4, 3}), shape_of({2}), 2), std::invalid_argument);
}

TEST_CASE("lis_weak on fixed words") {
  CHECK(lis_weak(Word(3, {1, 1, 1})) == 3);
  CHECK(lis_weak(Word(3, {3, 2, 1})) == 1);
  CHECK(lis_weak(Word(2, {2, 1, 2})) == 2);
  CHECK(lis_weak(Word(2, {})) == 0);
}

TEST_CASE("lis_weak matches exhaustive subsequence scan") {
  for (int d = 2; d <= 3; ++d) {
    for (int64_t n = 0; n <= 6; ++n) {
      for_each_word(d, n, [&](const Word& w) {
        CHECK(lis_weak(w) == lis_by_scan(w.letters));
      });
    }
  }
}

TEST_CASE("greene_union") {
  CHECK(greene_union(Word(2, {2, 1, 2}), 2) == 3);
  CHECK(greene_union(Word(2, {2, 1, 2}), 5) == 3);
  CHECK(greene_union(Word(2, {1, 1}), 1) == 2);
  CHECK(greene_union(Word(2, {1, 1}), 0) == 0);
  CHECK_THROWS_AS(greene_union(Word(2, std::vector<int>(11, 1)), 2), ResourceLimitError);
  CHECK(greene_union(Word(2, std::vector<int>(11, 1)), 2, 12) == 11);
}

TEST_CASE("schensted and greene hold exhaustively at small sizes") {
  for (int d = 2; d <= 3; ++d) {
    for (int64_t n = 1; n <= 8; ++n) {
      for_each_word(d, n, [&](const Word& w) {
        auto result = rsk(w);
        REQUIRE(result.shape.part(1) == lis_weak(w));
        int64_t prefix = 0;
        for (int j = 1; j <= d; ++j) {
          prefix += result.shape.part(static_cast<std::size_t>(j));
          REQUIRE(prefix == greene_union(w, j));
        }
      });
    }
  }
}

TEST_CASE("schensted holds for random long words") {
  RandomStream stream(20260808);
  for (int trial = 0; trial < 10000; ++trial) {
    int d = 2 + static_cast<int>(stream.next() % 3);
    int64_t n = 1 + static_cast<int64_t>(stream.next() % 200);
    std::vector<int> letters(static_cast<std::size_t>(n));
    for (auto& x : letters) x = 1 + static_cast<int>(stream.next() % d);
    Word w(d, std::move(letters));
    CHECK(rsk(w).shape.part(1) == lis_weak(w));
  }
}

TEST_CASE("rsk is a bijection onto same-shape pairs with matching type") {
  for (int d = 2; d <= 3; ++d) {
    for (int64_t n = 1; n <= 6; ++n) {
      std::set<std::pair<std::string, std::string>> images;
      int64_t words = 0;
      for_each_word(d, n, [&](const Word& w) {
        ++words;
        auto result = rsk(w);
        REQUIRE(result.insertion.is_valid());
        REQUIRE(result.recording.is_valid());
        REQUIRE(result.recording.shape() == result.shape);
        REQUIRE(result.insertion.shape() == result.shape);
        REQUIRE(result.insertion.type() == w.histogram());
        images.emplace(result.recording.str(), result.insertion.str());
      });
      CHECK(static_cast<int64_t>(images.size()) == words);
    }
  }
}

TEST_CASE("restriction: sub-tableau of letters < d tracks rsk of the subword") {
  for (int d = 2; d <= 3; ++d) {
    for (int64_t n = 1; n <= 6; ++n) {
      for_each_word(d, n, [&](const Word& w) {
        auto result = rsk(w);
        std::vector<int> smaller;
        for (int x : w.letters) {
          if (x < d) smaller.push_back(x);
        }
        auto sub = rsk(Word(d, smaller));
        REQUIRE(result.insertion.restrict_below(d).shape() == sub.shape);
      });
    }
  }
}

TEST_CASE("overhangs of rsk outputs are nonnegative and sum to |mu| - n + lambda_1") {
  for (int d = 2; d <= 3; ++d) {
    for (int64_t n = 1; n <= 6; ++n) {
      for_each_word(d, n, [&](const Word& w) {
        auto result = rsk(w);
        Partition mu = result.insertion.restrict_below(d).shape();
        Overhangs b = overhangs(result.shape, mu, d);  // throws if any b_i < 0
        REQUIRE(b.sum() == mu.total() - n + result.shape.part(1));
      });
    }
  }
}

TEST_CASE("num_syt") {
  CHECK(num_syt(shape_of({2, 1})) == 2);
  CHECK(num_syt(shape_of({4, 3, 1})) == 70);
  CHECK(num_syt(shape_of({9})) == 1);
  CHECK(num_syt(shape_of({})) == 1);
  CHECK(num_syt(shape_of({1, 1, 1, 1})) == 1);
}

TEST_CASE("num_syt matches enumeration") {
  for (int64_t n = 0; n <= 7; ++n) {
    for (const Partition& shape : partitions_of(n, static_cast<std::size_t>(n))) {
      auto fillings = enumerate_syt(shape);
      CHECK(num_syt(shape) == static_cast<int64_t>(fillings.size()));
      for (const auto& s : fillings) {
        REQUIRE(s.is_valid());
        REQUIRE(s.shape() == shape);
      }
    }
  }
}

TEST_CASE("enumerate_ssyt") {
  CHECK(enumerate_ssyt(shape_of({1}), 2).size() == 2);
  CHECK(enumerate_ssyt(shape_of({2, 1}), 3).size() == 8);
  CHECK(enumerate_ssyt(shape_of({1, 1, 1}), 2).empty());
  CHECK(enumerate_ssyt(shape_of({}), 2).size() == 1);

  std::set<std::string> seen;
  for (const auto& t : enumerate_ssyt(shape_of({3, 2}), 3)) {
    REQUIRE(t.is_valid());
    REQUIRE(t.shape() == shape_of({3, 2}));
    seen.insert(t.str());
  }
  CHECK(seen.size() == enumerate_ssyt(shape_of({3, 2}), 3).size());

  CHECK_THROWS_AS(enumerate_ssyt(shape_of({11}), 2), ResourceLimitError);
  CHECK(enumerate_ssyt(shape_of({11}), 2, 11).size() == 12);
}

TEST_CASE("enumerate_syt") {
  CHECK(enumerate_syt(shape_of({2, 1})).size() == 2);
  CHECK(enumerate_syt(shape_of({2, 2})).size() == 2);
  CHECK(enumerate_syt(shape_of({1, 1, 1})).size() == 1);
  CHECK_THROWS_AS(enumerate_syt(shape_of({11})), ResourceLimitError);
}

TEST_CASE("tableau invariants and views") {
  auto t = SemistandardTableau::from_rows(3, {{1, 1, 2, 3}, {2, 2, 3}, {3}});
  CHECK(t.shape() == shape_of({4, 3, 1}));
  CHECK(t.type() == std::vector<int64_t>({2, 3, 3}));
  CHECK(t.size() == 8);
  CHECK(t.str() == "[[1,1,2,3],[2,2,3],[3]]");
  CHECK(t.is_valid());
  CHECK_THROWS(SemistandardTableau::from_rows(2, {{2, 1}}));      // row not sorted
  CHECK_THROWS(SemistandardTableau::from_rows(2, {{1}, {1}}));    // column tie
  CHECK_THROWS(SemistandardTableau::from_rows(2, {{1, 2}, {2, 2}}));  // column tie in column 2
  CHECK_THROWS(SemistandardTableau::from_rows(2, {{3}}));         // letter out of range
}
