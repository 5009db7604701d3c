#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <stdexcept>

#include "domlat/partition.hpp"

using namespace domlat;

TEST_CASE("weight and indexed access") {
  CHECK(weight({}) == 0);
  CHECK(weight({4, 2, 1}) == 7);
  Partition s{4, 2, 1};
  CHECK(part_at(s, 1) == 4);
  CHECK(part_at(s, 3) == 1);
  CHECK(part_at(s, 4) == 0);   // past the end reads as zero height
  CHECK(part_at(s, 99) == 0);
  CHECK(part_at(s, 0) == 0);   // below the first column reads as zero too
}

TEST_CASE("make_partition validates and canonicalizes") {
  CHECK(make_partition({3, 1, 0, 0}) == Partition{3, 1});  // trailing zeros dropped
  CHECK(make_partition({}) == Partition{});
  CHECK_THROWS_AS(make_partition({1, 2}), std::invalid_argument);   // ascending
  CHECK_THROWS_AS(make_partition({2, -1}), std::invalid_argument);  // negative
  CHECK_THROWS_AS(make_partition({2, 0, 1}), std::invalid_argument);  // zero inside
}

TEST_CASE("height differences") {
  Partition s{4, 2, 2, 1};
  CHECK(height_diff(s, 1) == 2);
  CHECK(height_diff(s, 2) == 0);
  CHECK(height_diff(s, 4) == 1);  // last column sits on height zero
  CHECK(height_diff(s, 5) == 0);
}

TEST_CASE("column classification") {
  // Cliff: two or more grains above the right neighbour.
  CHECK(classify_at({4, 2, 1}, 1) == ColumnShape{ShapeKind::Cliff, 0});
  CHECK(classify_at({4, 1}, 1) == ColumnShape{ShapeKind::Cliff, 0});
  // Slippery step: one-grain drop into a run that then drops by one again.
  CHECK(classify_at({2, 1}, 1) == ColumnShape{ShapeKind::SlipperyStep, 2});
  CHECK(classify_at({2, 1, 1}, 1) == ColumnShape{ShapeKind::SlipperyStep, 3});
  CHECK(classify_at({4, 2, 1}, 2) == ColumnShape{ShapeKind::SlipperyStep, 2});
  // Non-slippery step: the run ends in a drop of two or more.
  CHECK(classify_at({3, 2}, 1) == ColumnShape{ShapeKind::NonSlipperyStep, 2});
  CHECK(classify_at({4, 3, 1}, 1) == ColumnShape{ShapeKind::NonSlipperyStep, 2});
  // Plateaus: level with the right neighbour; slippery iff the run drops by one.
  CHECK(classify_at({1, 1}, 1) == ColumnShape{ShapeKind::SlipperyPlateau, 2});
  CHECK(classify_at({2, 2, 1}, 1) == ColumnShape{ShapeKind::SlipperyPlateau, 2});
  CHECK(classify_at({2, 2}, 1) == ColumnShape{ShapeKind::NonSlipperyPlateau, 2});
  CHECK(classify_at({3, 3, 1, 1}, 3) == ColumnShape{ShapeKind::SlipperyPlateau, 2});
  // A bare single column of height one is a slippery plateau of length one.
  CHECK(classify_at({1}, 1) == ColumnShape{ShapeKind::SlipperyPlateau, 1});
  CHECK(classify_at({3, 1}, 2) == ColumnShape{ShapeKind::SlipperyPlateau, 1});
  // Out of range.
  CHECK_THROWS_AS(classify_at({2, 1}, 3), std::out_of_range);
  CHECK_THROWS_AS(classify_at({}, 1), std::out_of_range);
}

TEST_CASE("leading plateau looks at the first run only") {
  CHECK(leading_plateau({}) == ColumnShape{ShapeKind::None, 0});
  CHECK(leading_plateau({1}) == ColumnShape{ShapeKind::SlipperyPlateau, 1});
  CHECK(leading_plateau({2, 2}) == ColumnShape{ShapeKind::NonSlipperyPlateau, 2});
  CHECK(leading_plateau({2, 2, 1}) == ColumnShape{ShapeKind::SlipperyPlateau, 2});
  // Differs from full classification: the step structure is invisible here.
  CHECK(leading_plateau({3, 2}) == ColumnShape{ShapeKind::SlipperyPlateau, 1});
  CHECK(classify_at({3, 2}, 1) == ColumnShape{ShapeKind::NonSlipperyStep, 2});
}

TEST_CASE("transitions: falls and slips with source-column labels") {
  auto set_of = [](const Partition& s) {
    std::set<std::pair<int, Partition>> out;
    for (const Transition& t : transitions(s)) out.insert({t.label, t.target});
    return out;
  };
  CHECK(set_of({4, 2, 1}) ==
        std::set<std::pair<int, Partition>>{{1, {3, 3, 1}}, {2, {4, 1, 1, 1}}});
  // The leading plateau of (2,2) is blocked, but its second column is still
  // a cliff over empty ground, so one move remains.
  CHECK(set_of({2, 2}) == std::set<std::pair<int, Partition>>{{2, {2, 1, 1}}});
  CHECK(set_of({1, 1, 1}) == std::set<std::pair<int, Partition>>{});
  CHECK(set_of({3}) == std::set<std::pair<int, Partition>>{{1, {2, 1}}});
  CHECK(set_of({2, 1}) == std::set<std::pair<int, Partition>>{{1, {1, 1, 1}}});
  // A slip jumps the whole run: column 1 of (2,1,1) lands at column 4.
  CHECK(set_of({2, 1, 1}) == std::set<std::pair<int, Partition>>{{1, {1, 1, 1, 1}}});
  CHECK(set_of({}) == std::set<std::pair<int, Partition>>{});
}

TEST_CASE("every transition conserves weight and lowers the partition strictly") {
  for (int c1 = 1; c1 <= 5; ++c1)
    for (int c2 = 0; c2 <= c1; ++c2)
      for (int c3 = 0; c3 <= c2; ++c3) {
        std::vector<int> raw{c1, c2, c3};
        Partition s = make_partition(raw);
        for (const Transition& t : transitions(s)) {
          CHECK(weight(t.target) == weight(s));
          CHECK(is_partition(t.target));
          CHECK(dominance_leq(t.target, s));
          CHECK(t.target != s);
        }
      }
}

TEST_CASE("adding and removing single grains") {
  CHECK(grow({2, 1}, 1) == Partition{3, 1});
  CHECK(grow({2, 1}, 2) == Partition{2, 2});
  CHECK(grow({2, 1}, 3) == Partition{2, 1, 1});
  CHECK(grow({}, 1) == Partition{1});
  CHECK_THROWS_AS(grow({2, 1}, 4), std::out_of_range);  // would leave a gap
  CHECK_THROWS_AS(grow({2, 2}, 2), std::logic_error);   // would break descent
  CHECK_THROWS_AS(grow({2, 1}, 0), std::out_of_range);
  // grow then shrink is the identity.
  Partition s{3, 2, 2};
  for (int col : {1, 2, 4}) {
    Partition up = grow(s, col);
    std::vector<int> raw(up.begin(), up.end());
    raw[col - 1] -= 1;
    CHECK(make_partition(raw) == s);
  }
}

TEST_CASE("dominance comparison by partial sums") {
  CHECK(dominance_leq({2, 2}, {3, 1}));
  CHECK_FALSE(dominance_leq({3, 1}, {2, 2}));
  CHECK(dominance_leq({2, 1, 1}, {4}));
  CHECK(dominance_leq({3, 1}, {3, 1}));
  // Incomparable pair at weight 6.
  CHECK_FALSE(dominance_leq({3, 3}, {4, 1, 1}));
  CHECK_FALSE(dominance_leq({4, 1, 1}, {3, 3}));
  // Different weights are not comparable at all.
  CHECK_THROWS_AS(dominance_leq({2, 1}, {4}), std::invalid_argument);
}

TEST_CASE("text form round trip") {
  CHECK(to_text(Partition{4, 2, 1}) == "4,2,1");
  CHECK(to_text(Partition{}) == "0");
  CHECK(parse_partition("4,2,1") == Partition{4, 2, 1});
  CHECK(parse_partition("0") == Partition{});
  CHECK(parse_partition("7") == Partition{7});
  CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("2,,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("2,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("-3"), std::invalid_argument);
}

TEST_CASE("grain diagram rendering") {
  CHECK(render_ferrers({3, 3, 1}) ==
        "##\n"
        "##\n"
        "###\n");
  CHECK(render_ferrers({1}) == "#\n");
  CHECK(render_ferrers({}) == "");
  CHECK(render_ferrers({2, 1, 1}) ==
        "#\n"
        "###\n");
}
