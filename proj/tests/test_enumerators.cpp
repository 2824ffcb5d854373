#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "unimodal/enumerators.hpp"
#include "unimodal/error.hpp"

using namespace unimodal;

namespace {

UnimodalObject obj(std::vector<int> parts, std::vector<bool> bars, int peak) {
  return {std::move(parts), std::move(bars), peak};
}

using Key = std::tuple<std::vector<int>, std::vector<bool>, int>;

Key key(const UnimodalObject& o) { return {o.parts, o.overlined, o.peak_index}; }

// Every composition of n with every overline pattern and peak position,
// filtered by the validator. Independent of the grammar-based generators.
std::set<Key> brute_force(Family f, int n) {
  std::set<Key> out;
  std::vector<int> comp;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      const int len = static_cast<int>(comp.size());
      for (int mask = 0; mask < (1 << len); ++mask) {
        UnimodalObject o;
        o.parts = comp;
        for (int i = 0; i < len; ++i) o.overlined.push_back(((mask >> i) & 1) != 0);
        for (int pk = 0; pk < std::max(len, 1); ++pk) {
          o.peak_index = pk;
          if (validate(f, o)) out.insert(key(o));
        }
      }
      return;
    }
    for (int k = 1; k <= rest; ++k) {
      comp.push_back(k);
      rec(rest - k);
      comp.pop_back();
    }
  };
  rec(n);
  return out;
}

}  // namespace

TEST_CASE("left-heavy overlined sequences of 3") {
  auto objs = enumerate(Family::left_heavy_overlined, 3);
  std::vector<UnimodalObject> expected = {
      obj({3}, {true}, 0),
      obj({1, 2}, {false, true}, 1),
      obj({1, 2}, {true, true}, 1),
      obj({2, 1}, {true, true}, 0),
      obj({1, 1, 1}, {false, false, true}, 2),
  };
  CHECK(objs.size() == expected.size());
  for (const auto& e : expected) CHECK(std::find(objs.begin(), objs.end(), e) != objs.end());
  CHECK(count(Family::left_heavy_overlined, 3) == 3);
  auto by_rank = count_by_rank(Family::left_heavy_overlined, 3);
  // Signs: (3b) +, (1,2b) -, (1b,2b) +, (2b,1b) +, (1,1,1b) +.
  CHECK(by_rank == std::map<int, std::int64_t>{{-1, 1}, {0, 1}, {1, 1}});
}

TEST_CASE("M2-left-heavy overlined sequences of 7") {
  auto objs = enumerate(Family::m2_left_heavy_overlined, 7);
  CHECK(objs.size() == 5);
  CHECK(std::find(objs.begin(), objs.end(), obj({1, 2, 2, 2}, {true, false, true, false}, 2)) != objs.end());
  CHECK(std::find(objs.begin(), objs.end(), obj({1, 6}, {true, true}, 1)) != objs.end());
  CHECK(std::find(objs.begin(), objs.end(), obj({1, 4, 2}, {true, true, true}, 1)) != objs.end());
  CHECK(count_by_rank(Family::m2_left_heavy_overlined, 7) == std::map<int, std::int64_t>{{-1, 1}, {0, 3}, {1, 1}});
  CHECK(count(Family::m2_left_heavy_overlined, 0) == 0);
}

TEST_CASE("M2-left-heavy sequences of 6") {
  auto objs = enumerate(Family::m2_left_heavy, 6);
  std::vector<UnimodalObject> expected = {
      obj({6}, {false}, 0),
      obj({2, 4}, {false, false}, 1),
      obj({4, 2}, {false, false}, 0),
      obj({1, 1, 4}, {false, false, false}, 2),
      obj({1, 1, 1, 1, 2}, {false, false, false, false, false}, 4),
  };
  CHECK(objs.size() == 5);
  for (const auto& e : expected) CHECK(std::find(objs.begin(), objs.end(), e) != objs.end());
  CHECK(count_by_rank(Family::m2_left_heavy, 6) == std::map<int, std::int64_t>{{-1, 1}, {0, 3}, {1, 1}});
}

TEST_CASE("size conventions and guard") {
  CHECK(count(Family::partition, 0) == 1);
  CHECK(count(Family::overpartition, 0) == 1);
  CHECK(count(Family::strongly_unimodal, 0) == 0);
  CHECK(count(Family::left_heavy_overlined, 0) == 0);
  CHECK(count(Family::m2_left_heavy, 0) == 0);
  try {
    (void)count(Family::partition, 61);
    FAIL("expected size-limit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::size_limit);
  }
}

TEST_CASE("partition ranks") {
  CHECK(partition_rank_count(0, 4) == 1);
  CHECK(partition_rank_count(3, 4) == 1);
  CHECK(partition_rank_count(2, 4) == 0);
  for (int n = 0; n <= 30; ++n) {
    auto by_rank = count_by_rank(Family::partition_with_rank, n);
    std::int64_t total = 0;
    for (auto [m, c] : by_rank) {
      total += c;
      CHECK(partition_rank_count(-m, n) == c);
    }
    CHECK(total == oracle::partitions(n));
  }
}

TEST_CASE("strongly unimodal ranks against a recursive oracle") {
  for (int n = 1; n <= 20; ++n) {
    auto by_rank = count_by_rank(Family::strongly_unimodal, n);
    auto expected = oracle::strongly_unimodal_by_rank(n);
    CHECK(by_rank == expected);
  }
}

TEST_CASE("generators match brute force filtered by the validator") {
  for (Family f : kAllFamilies) {
    for (int n = 0; n <= 9; ++n) {
      std::set<Key> generated;
      std::size_t visits = 0;
      visit_objects(f, n, [&](const UnimodalObject& o) {
        ++visits;
        CHECK(o.size() == n);
        CHECK(validate(f, o));
        generated.insert(key(o));
      });
      CHECK(generated.size() == visits);  // no duplicates
      CHECK(generated == brute_force(f, n));
    }
  }
}

TEST_CASE("family names round-trip") {
  for (Family f : kAllFamilies) CHECK(family_from_string(to_string(f)) == f);
  CHECK_FALSE(family_from_string("nope").has_value());
}
