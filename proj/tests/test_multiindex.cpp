#include <map>
#include <numeric>

#include "doctest.h"
#include "tdpair/errors.hpp"
#include "tdpair/multiindex.hpp"

using namespace tdpair;

TEST_CASE("partial sums") {
  const MultiIndex n{2, 0, 3};
  CHECK(partial_sum(n, 1, 3) == 5);
  CHECK(partial_sum(n, 2, 1) == 0);
  CHECK(partial_sum(n, 2, 3) == 3);
  CHECK(partial_sum(n, 4, 3) == 0);
  CHECK(n.total() == 5);
  CHECK_THROWS_AS(partial_sum(n, 0, 2), IndexOutOfRange);
  CHECK_THROWS_AS(partial_sum(n, 1, 4), IndexOutOfRange);
}

TEST_CASE("tuple algebra and text form") {
  const MultiIndex n{2, 0, 3};
  CHECK(n.to_string() == "[2,0,3]");
  CHECK(MultiIndex::parse("[2,0,3]") == n);
  CHECK(MultiIndex::parse(" [ 1 , 4 ] ") == MultiIndex{1, 4});
  CHECK_THROWS_AS(MultiIndex::parse("[1,x]"), ParseError);
  CHECK_THROWS_AS(MultiIndex::parse("1,2"), ParseError);
  CHECK(n + MultiIndex::unit(3, 2) == MultiIndex{2, 1, 3});
  CHECK(n - MultiIndex::unit(3, 1) == MultiIndex{1, 0, 3});
  CHECK(pointwise_min(n, MultiIndex{1, 1, 1}) == MultiIndex{1, 0, 1});
  CHECK(pointwise_max(n, MultiIndex{1, 1, 1}) == MultiIndex{2, 1, 3});
  CHECK(MultiIndex{1, 0, 2}.pointwise_le(n));
  CHECK_FALSE(MultiIndex{1, 1, 0}.pointwise_le(n));
}

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(Shape({}), InvalidShape);
  CHECK_THROWS_AS(Shape({2, 0}), InvalidShape);
  const Shape s({2, 1});
  CHECK(s.diameter() == 3);
  CHECK(s.dimension() == 6);
  CHECK(s.contains(MultiIndex{2, 1}));
  CHECK_FALSE(s.contains(MultiIndex{3, 0}));
  CHECK_FALSE(s.contains(MultiIndex{0, -1}));
  CHECK_FALSE(s.contains(MultiIndex{1}));
  CHECK(Shape::parse("2,1").as_index() == MultiIndex{2, 1});
  CHECK(Shape::parse("[2,1]").as_index() == MultiIndex{2, 1});
}

TEST_CASE("graded lexicographic enumeration") {
  CHECK(enumerate(Shape({1})) == std::vector<MultiIndex>{{0}, {1}});
  CHECK(enumerate(Shape({1, 1})) == std::vector<MultiIndex>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(enumerate(Shape({2})) == std::vector<MultiIndex>{{0}, {1}, {2}});
  CHECK(enumerate(Shape({2, 1})) == std::vector<MultiIndex>{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}});
}

TEST_CASE("shape profile examples") {
  CHECK(shape_profile(Shape({1, 1})) == std::vector<std::int64_t>{1, 2, 1});
  CHECK(shape_profile(Shape({4})) == std::vector<std::int64_t>{1, 1, 1, 1, 1});
  CHECK(shape_profile(Shape({2, 1})) == std::vector<std::int64_t>{1, 2, 2, 1});
}

TEST_CASE("shape profile agrees with the level histogram and is palindromic") {
  std::vector<std::vector<int>> shapes;
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> ell(static_cast<std::size_t>(n), 1);
    for (bool done = false; !done;) {
      shapes.push_back(ell);
      std::size_t k = 0;
      while (k < ell.size() && ell[k] == 5) ell[k++] = 1;
      if (k == ell.size()) done = true;
      else ++ell[k];
    }
  }
  for (const auto& ell : shapes) {
    const Shape s(ell);
    const auto profile = shape_profile(s);
    const auto tuples = enumerate(s);
    REQUIRE(profile.size() == static_cast<std::size_t>(s.diameter() + 1));
    std::map<int, std::int64_t> histogram;
    for (const auto& n : tuples) ++histogram[n.total()];
    for (std::size_t i = 0; i < profile.size(); ++i) {
      CHECK(profile[i] == histogram[static_cast<int>(i)]);
      CHECK(profile[i] == profile[profile.size() - 1 - i]);
    }
    CHECK(std::accumulate(profile.begin(), profile.end(), std::int64_t{0}) ==
          static_cast<std::int64_t>(s.dimension()));
    CHECK(tuples.size() == s.dimension());
  }
}

TEST_CASE("basis lookup") {
  const Basis b(Shape({2, 1}));
  CHECK(b.size() == 6);
  CHECK(b.position(MultiIndex{1, 1}) == std::optional<std::size_t>(3));
  CHECK_FALSE(b.position(MultiIndex{3, 0}).has_value());
  CHECK_FALSE(b.position(MultiIndex{-1, 0}).has_value());
}
