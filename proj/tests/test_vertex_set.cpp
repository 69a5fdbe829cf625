#include <doctest.h>

#include <vector>

#include "pnmax/vertex_set.hpp"

using pnmax::VertexSet;

TEST_CASE("vertex set basics") {
  VertexSet s;
  CHECK(s.empty());
  s.set(0).set(70).set(127);
  CHECK(s.count() == 3);
  CHECK(s.test(70));
  CHECK_FALSE(s.test(69));
  s.reset(70);
  CHECK(s.count() == 2);
  CHECK(s.vertices() == std::vector<int>{0, 127});
  CHECK(s.to_string() == "{0,127}");
}

TEST_CASE("full and low word") {
  CHECK(VertexSet::full(0).empty());
  CHECK(VertexSet::full(5).low_word() == 0b11111);
  CHECK(VertexSet::full(64).count() == 64);
  CHECK(VertexSet::full(65).count() == 65);
  CHECK(VertexSet::full(128).count() == 128);
  CHECK(VertexSet::from_low_word(0b1010).vertices() == std::vector<int>{1, 3});
}

TEST_CASE("set algebra") {
  const VertexSet a = VertexSet::from_vertices({0, 2, 4});
  const VertexSet b = VertexSet::from_vertices({2, 3});
  CHECK((a & b).vertices() == std::vector<int>{2});
  CHECK((a | b).count() == 4);
  CHECK(a.without(b).vertices() == std::vector<int>{0, 4});
  CHECK(b.is_subset_of(a | b));
  CHECK_FALSE(b.is_subset_of(a));
  CHECK(a.intersects(b));
  CHECK(a.lowest() == 0);
  CHECK(VertexSet().lowest() == -1);
  CHECK(a.any_above(2));
  CHECK_FALSE(a.any_above(4));
}

TEST_CASE("lexicographic order on sorted sequences") {
  auto vs = [](std::initializer_list<int> xs) {
    return VertexSet::from_vertices(std::vector<int>(xs));
  };
  auto less = [](const VertexSet& a, const VertexSet& b) {
    return VertexSet::lex_less(a, b);
  };
  CHECK(less(vs({}), vs({0})));
  CHECK(less(vs({0}), vs({0, 1})));
  CHECK(less(vs({0, 1}), vs({0, 3})));
  CHECK(less(vs({0, 3}), vs({1})));
  CHECK(less(vs({0, 1}), vs({2})));
  CHECK(less(vs({1, 2}), vs({2})));
  CHECK_FALSE(less(vs({0, 3}), vs({0, 1})));
  CHECK_FALSE(less(vs({2}), vs({0, 1})));
  CHECK_FALSE(less(vs({1}), vs({1})));
  // total order sanity over small universes
  std::vector<VertexSet> all;
  for (int mask = 0; mask < 32; ++mask) {
    all.push_back(VertexSet::from_low_word(static_cast<std::uint64_t>(mask)));
  }
  for (const auto& a : all) {
    for (const auto& b : all) {
      if (a == b) {
        CHECK_FALSE(less(a, b));
      } else {
        CHECK(less(a, b) != less(b, a));
      }
    }
  }
}
