#include <doctest.h>

#include <algorithm>

#include "loopforge/steiner.hpp"
#include "loopforge/varieties.hpp"

using namespace loopforge;

TEST_CASE("textbook systems validate") {
  CHECK(validate(fano_system()).ok);
  CHECK(validate(sts9_system()).ok);
  CHECK(validate(z13_system()).ok);
  CHECK(sts9_system().blocks.size() == 12);
}

TEST_CASE("deleting a block is reported as missing pairs") {
  TripleSystem broken = fano_system();
  broken.blocks.pop_back();
  SystemValidation v = validate(broken);
  CHECK_FALSE(v.ok);
  REQUIRE(v.problems.size() == 3);  // the three pairs of the deleted block
  for (const auto& p : v.problems)
    CHECK(p.kind == SystemValidation::Problem::Kind::PairMissing);
}

TEST_CASE("duplicating a block is reported as duplicated pairs") {
  TripleSystem broken = fano_system();
  broken.blocks.push_back(broken.blocks.front());
  SystemValidation v = validate(broken);
  CHECK_FALSE(v.ok);
  CHECK(std::any_of(v.problems.begin(), v.problems.end(), [](const auto& p) {
    return p.kind == SystemValidation::Problem::Kind::PairDuplicated;
  }));
}

TEST_CASE("the cyclic 13-point system") {
  TripleSystem ts = z13_system();
  CHECK(ts.v == 13);
  CHECK(ts.blocks.size() == 26);
  auto has_block = [&](int a, int b, int c) {
    std::array<int, 3> want{a, b, c};
    std::sort(want.begin(), want.end());
    return std::any_of(ts.blocks.begin(), ts.blocks.end(), [&](auto blk) {
      std::sort(blk.begin(), blk.end());
      return blk == want;
    });
  };
  CHECK(has_block(10, 0, 1));
  CHECK(has_block(5, 7, 0));
}

TEST_CASE("Steiner loop of the 13-point system reproduces known products") {
  CayleyLoop L = steiner_loop(z13_system());
  CHECK(L.order() == 14);
  auto pt = [&](int p) { return p + 1; };  // point labels shift by one
  CHECK(L.mul(pt(1), pt(0)) == pt(10));
  CHECK(L.mul(pt(10), pt(5)) == pt(12));
  CHECK(L.mul(pt(0), pt(5)) == pt(7));
  CHECK(L.mul(pt(1), pt(7)) == pt(12));
  CHECK(L.mul(pt(1), pt(5)) == pt(4));
  CHECK(L.mul(pt(0), pt(4)) == pt(3));
  // One association works, the other does not.
  CHECK(L.mul(L.mul(pt(1), pt(0)), pt(5)) == pt(12));
  CHECK(L.mul(pt(1), L.mul(pt(0), pt(5))) == pt(12));
  CHECK(L.mul(L.mul(pt(0), pt(1)), pt(5)) == pt(12));
  CHECK(L.mul(pt(0), L.mul(pt(1), pt(5))) == pt(3));
}

TEST_CASE("the Fano loop is the boolean group of order 8") {
  CayleyLoop L = steiner_loop(fano_system());
  CHECK(isomorphic(L, boolean_group(3)));
  CHECK(is_boolean_group(L));
}

TEST_CASE("the 10-element Steiner loop is not associative") {
  CayleyLoop L = steiner_loop(sts9_system());
  CHECK(L.order() == 10);
  CHECK_FALSE(is_associative(L));
  CHECK(is_steiner(L).holds);
}

TEST_CASE("constructed Steiner loops satisfy the whole expected bundle") {
  for (const TripleSystem& ts : {fano_system(), sts9_system(), z13_system()}) {
    CayleyLoop L = steiner_loop(ts);
    PropertyReport r = classify(L);
    CHECK(r.value("commutative"));
    CHECK(r.value("ip"));
    CHECK(r.value("steiner"));
    CHECK(r.value("c_loop"));
    CHECK(r.value("rif"));
    CHECK(r.value("arif"));
    CHECK(r.value("diassociative"));
    // Steiner and Moufang together collapse to boolean groups.
    CHECK(r.value("moufang") == r.value("boolean_group"));
  }
}

TEST_CASE("round trip: loop -> system -> loop") {
  for (const TripleSystem& ts : {fano_system(), sts9_system(), z13_system()}) {
    CayleyLoop L = steiner_loop(ts);
    TripleSystem back = loop_to_system(L);
    CHECK(validate(back).ok);
    CHECK(back.v == ts.v);
    CHECK(back.blocks.size() == ts.blocks.size());
    CHECK(isomorphic(steiner_loop(back), L));
  }
  // The boolean group of order 4 recovers the single block {0,1,2}.
  TripleSystem tiny = loop_to_system(boolean_group(2));
  CHECK(tiny.v == 3);
  REQUIRE(tiny.blocks.size() == 1);
  // The trivial loop gives the empty system; Z2 has one point, no pairs.
  TripleSystem empty = loop_to_system(cyclic_group(1));
  CHECK(empty.v == 0);
  CHECK(empty.blocks.empty());
  TripleSystem one_point = loop_to_system(cyclic_group(2));
  CHECK(one_point.v == 1);
  CHECK(one_point.blocks.empty());
}

TEST_CASE("non-Steiner loops are rejected") {
  CHECK_THROWS_AS(loop_to_system(cyclic_group(3)), NotSteinerError);
  TripleSystem broken = fano_system();
  broken.blocks.pop_back();
  CHECK_THROWS_AS(steiner_loop(broken), InvalidSystemError);
}

TEST_CASE("point labels") {
  CHECK(point_label(0) == "e");
  CHECK(point_label(13) == "12");
  CHECK(element_of_point_label("e", 14) == 0);
  CHECK(element_of_point_label("12", 14) == 13);
  CHECK_THROWS_AS(element_of_point_label("13", 14), LoopError);
}

TEST_CASE("system file format round trip") {
  TripleSystem ts = sts9_system();
  TripleSystem back = parse_system(serialize_system(ts));
  CHECK(back.v == ts.v);
  CHECK(back.blocks == ts.blocks);
  CHECK_THROWS_AS(parse_system("nonsense"), ParseError);
  TripleSystem commented = parse_system("# system\nv = 3\n0 1 2\n");
  CHECK(commented.blocks.size() == 1);
}
