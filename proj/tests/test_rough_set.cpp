#include <catch_amalgamated.hpp>

#include <vector>

#include "oracle.hpp"
#include "rfsm/rough_set.hpp"

using namespace rfsm;

namespace {

ApproximationSpace five_states() {
  return make_partition({"q1", "q2", "q3", "q4", "q5"}, {{"q1", "q2"}, {"q3", "q5"}, {"q4"}});
}

DefinableSet blocks_of(const ApproximationSpace& s, std::vector<BlockId> ids) {
  DefinableSet d = s.no_blocks();
  for (auto b : ids) d.insert(b);
  return d;
}

}  // namespace

TEST_CASE("IdSet set algebra", "[rough-core]") {
  IdSet<StateTag> a(70), b(70);
  a.insert(1);
  a.insert(65);
  b.insert(65);
  b.insert(3);
  CHECK((a | b).ids() == std::vector<std::size_t>{1, 3, 65});
  CHECK((a & b).ids() == std::vector<std::size_t>{65});
  CHECK((a - b).ids() == std::vector<std::size_t>{1});
  CHECK(a.intersects(b));
  CHECK_FALSE(a.is_subset_of(b));
  CHECK((a & b).is_subset_of(a));
  CHECK(IdSet<StateTag>::all(70).count() == 70);
  a.erase(65);
  CHECK(a.count() == 1);
}

TEST_CASE("make_partition numbers blocks by first member", "[rough-core]") {
  auto s = make_partition({"q1", "q2", "q3", "q4", "q5"}, {{"q4"}, {"q5", "q3"}, {"q2", "q1"}});
  CHECK(s == five_states());
  CHECK(s.num_blocks() == 3);
  CHECK(s.block_of(s.state_id("q1")) == 0);
  CHECK(s.block_of(s.state_id("q3")) == 1);
  CHECK(s.block_of(s.state_id("q5")) == 1);
  CHECK(s.block_of(s.state_id("q4")) == 2);
}

TEST_CASE("make_partition rejects non-partitions", "[rough-core]") {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    FAIL("no error");
    return ErrorKind::syntax;
  };
  CHECK(kind_of([] { make_partition({"a", "a"}, {{"a"}}); }) == ErrorKind::duplicate_state);
  CHECK(kind_of([] { make_partition({"a", "b"}, {{"a", "b"}, {"b"}}); }) == ErrorKind::non_partition);
  CHECK(kind_of([] { make_partition({"a", "b"}, {{"a"}}); }) == ErrorKind::non_partition);
  CHECK(kind_of([] { make_partition({"a"}, {{"a"}, {}}); }) == ErrorKind::non_partition);
  CHECK(kind_of([] { make_partition({"a"}, {{"a", "z"}}); }) == ErrorKind::non_partition);
  CHECK(kind_of([] { make_partition({}, {}); }) == ErrorKind::non_partition);
  CHECK(kind_of([] { make_partition({"a b"}, {{"a b"}}); }) == ErrorKind::invalid_name);
}

TEST_CASE("approximate on the five-state space", "[rough-core]") {
  auto s = five_states();
  auto r = approximate(s, s.subset({"q1", "q3"}));
  CHECK(r.lower.empty());
  CHECK(r.upper == blocks_of(s, {0, 1}));

  r = approximate(s, s.subset({"q1", "q2", "q4", "q5"}));
  CHECK(r.lower == blocks_of(s, {0, 2}));
  CHECK(r.upper == s.all_blocks());

  CHECK(is_definable(s, s.subset({"q3", "q5", "q4"})));
  CHECK_FALSE(is_definable(s, s.subset({"q3"})));
  CHECK(is_definable(s, s.subset({})));
}

TEST_CASE("approximate rejects sets from another space", "[rough-core]") {
  auto s = five_states();
  CHECK_THROWS_AS(approximate(s, StateSet(4)), Error);
  CHECK_THROWS_AS(s.members(DefinableSet(2)), Error);
}

TEST_CASE("is_realizable needs two-state boundary blocks", "[rough-core]") {
  auto s = five_states();
  CHECK_FALSE(is_realizable(s, blocks_of(s, {0}), blocks_of(s, {0, 2})));
  CHECK(is_realizable(s, blocks_of(s, {0}), blocks_of(s, {0, 1})));
  CHECK(is_realizable(s, s.no_blocks(), s.no_blocks()));
  CHECK_FALSE(is_realizable(s, blocks_of(s, {1}), blocks_of(s, {0})));
}

TEST_CASE("product_partition pairs states and blocks", "[rough-core]") {
  auto s1 = make_partition({"a", "b", "c"}, {{"a", "c"}, {"b"}});
  auto s2 = make_partition({"x", "y"}, {{"x"}, {"y"}});
  auto p = product_partition(s1, s2);
  REQUIRE(p.size() == 6);
  REQUIRE(p.num_blocks() == 4);
  for (StateId q1 = 0; q1 < 3; ++q1)
    for (StateId q2 = 0; q2 < 2; ++q2) {
      auto q = q1 * 2 + q2;
      CHECK(p.name(q) == "(" + s1.name(q1) + "," + s2.name(q2) + ")");
      CHECK(p.block_of(q) == s1.block_of(q1) * 2 + s2.block_of(q2));
    }
}

TEST_CASE("product_rough_set agrees with the pairwise product of member sets", "[rough-core]") {
  auto s1 = make_partition({"a", "b", "c"}, {{"a", "c"}, {"b"}});
  auto s2 = make_partition({"x", "y", "z"}, {{"x", "y"}, {"z"}});
  auto p = product_partition(s1, s2);
  auto r1 = approximate(s1, s1.subset({"a", "b"}));
  auto r2 = approximate(s2, s2.subset({"x", "z"}));
  auto r = product_rough_set(r1, r2);
  auto names = [](const ApproximationSpace& s, const DefinableSet& d) {
    oracle::Names out;
    s.members(d).for_each([&](StateId q) { out.insert(s.name(q)); });
    return out;
  };
  CHECK(names(p, r.lower) == oracle::pair_names(names(s1, r1.lower), names(s2, r2.lower)));
  CHECK(names(p, r.upper) == oracle::pair_names(names(s1, r1.upper), names(s2, r2.upper)));
}
