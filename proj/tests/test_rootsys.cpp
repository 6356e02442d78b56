#include <set>

#include "doctest.h"
#include "lieosc/error.hpp"
#include "lieosc/rootsys.hpp"

using namespace lieosc;

namespace {

// Closure of the simple roots under adding a simple root while staying in the
// classical root set, counted directly; serves as an independent count oracle.
std::size_t brute_positive_count(Family f, int n) {
  auto simple = simple_roots(f, n);
  const int dim = static_cast<int>(simple[0].size());
  // Classical roots written out directly.
  std::set<IntVector> all;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      if (i == j) continue;
      IntVector v(dim, 0);
      v[i] = 1;
      v[j] = -1;
      all.insert(v);
      if (f != Family::A && i < j) {
        IntVector p(dim, 0);
        p[i] = p[j] = 1;
        all.insert(p);
      }
    }
  if (f == Family::B)
    for (int i = 0; i < dim; ++i) {
      IntVector v(dim, 0);
      v[i] = 1;
      all.insert(v);
    }
  if (f == Family::C)
    for (int i = 0; i < dim; ++i) {
      IntVector v(dim, 0);
      v[i] = 2;
      all.insert(v);
    }
  // Positive: first nonzero coordinate positive.
  std::size_t count = 0;
  for (const auto& v : all)
    for (int x : v)
      if (x != 0) {
        count += x > 0;
        break;
      }
  return count;
}

}  // namespace

TEST_CASE("simple roots") {
  CHECK(simple_roots(Family::C, 2) == std::vector<IntVector>{{1, -1}, {0, 2}});
  CHECK(simple_roots(Family::B, 3) == std::vector<IntVector>{{1, -1, 0}, {0, 1, -1}, {0, 0, 1}});
  CHECK(simple_roots(Family::D, 4) ==
        std::vector<IntVector>{{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}});
  CHECK_THROWS_AS(simple_roots(Family::D, 2), Error);
  CHECK_THROWS_AS(simple_roots(Family::C, 1), Error);
}

TEST_CASE("labelled positive roots") {
  auto c3 = positive_roots(Family::C, 3);
  int k = c3.find_label({1, 1, 2, 2, 3});
  REQUIRE(k >= 0);
  CHECK(c3.positive[k].vector == IntVector{2, 0, 0});
  std::vector<std::string> labels;
  for (const auto& r : c3.positive) labels.push_back(r.label_string());
  CHECK(labels == std::vector<std::string>{"1", "2", "3", "12", "23", "123", "223", "1223", "11223"});

  auto b3 = positive_roots(Family::B, 3);
  CHECK(b3.positive[b3.find_label({1, 2, 2, 3, 3})].vector == IntVector{1, 1, 0});
  auto d4 = positive_roots(Family::D, 4);
  CHECK(d4.positive[d4.find_label({1, 2, 2, 3, 4})].vector == IntVector{1, 1, 0, 0});
}

TEST_CASE("dimensions") {
  CHECK(algebra_dim(Family::C, 2) == 10);
  CHECK(algebra_dim(Family::D, 3) == 15);
  CHECK(algebra_dim(Family::B, 2) == 10);
  CHECK(algebra_dim(Family::A, 2) == 8);
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int n = min_rank(f); n <= 6; ++n) {
      auto rs = positive_roots(f, n);
      CHECK(rs.positive.size() == brute_positive_count(f, n));
      CHECK(static_cast<int>(2 * rs.positive.size()) + n == algebra_dim(f, n));
    }
}

TEST_CASE("labels match coordinates and root sums") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int n = min_rank(f); n <= 6; ++n) {
      auto rs = positive_roots(f, n);
      for (const auto& r : rs.positive) {
        IntVector v(rs.simple[0].size(), 0);
        for (int s : r.label)
          for (std::size_t c = 0; c < v.size(); ++c) v[c] += rs.simple[s - 1][c];
        CHECK(v == r.vector);
      }
      for (const auto& a : rs.positive)
        for (const auto& b : rs.positive) {
          IntVector sum(a.vector.size());
          for (std::size_t c = 0; c < sum.size(); ++c) sum[c] = a.vector[c] + b.vector[c];
          int k = rs.find(sum);
          if (k >= 0) CHECK(rs.positive[k].label == merge_labels(a.label, b.label));
        }
    }
}

TEST_CASE("family parsing") {
  CHECK(parse_family("c") == Family::C);
  CHECK(parse_family("D") == Family::D);
  CHECK_THROWS_AS(parse_family("e"), Error);
}
