#include <doctest.h>

#include <stdexcept>

#include "gauss_hodge/multiindex.hpp"
#include "oracle.hpp"

using namespace gauss_hodge;

namespace {

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("enumeration lists increasing indices in lexicographic order") {
  auto idx = enumerate_indices(3, 2);
  REQUIRE(idx.size() == 3);
  CHECK(idx[0].axes() == std::vector<int>{1, 2});
  CHECK(idx[1].axes() == std::vector<int>{1, 3});
  CHECK(idx[2].axes() == std::vector<int>{2, 3});

  auto empty = enumerate_indices(2, 0);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].empty());

  auto full = enumerate_indices(2, 2);
  REQUIRE(full.size() == 1);
  CHECK(full[0].axes() == std::vector<int>{1, 2});

  for (int n = 0; n <= 7; ++n)
    for (int p = 0; p <= n; ++p) {
      auto all = enumerate_indices(n, p);
      CHECK(static_cast<long>(all.size()) == binomial(n, p));
      CHECK(std::is_sorted(all.begin(), all.end()));
    }
}

TEST_CASE("constructor rejects unsorted or out-of-range axes") {
  CHECK_THROWS_AS(MultiIndex(3, {2, 1}), std::domain_error);
  CHECK_THROWS_AS(MultiIndex(3, {1, 1}), std::domain_error);
  CHECK_THROWS_AS(MultiIndex(3, {0}), std::domain_error);
  CHECK_THROWS_AS(MultiIndex(3, {4}), std::domain_error);
  CHECK_NOTHROW(MultiIndex(3, {1, 3}));
}

TEST_CASE("insert_axis examples") {
  auto a = insert_axis(2, MultiIndex(3, {1, 3}));
  REQUIRE(a);
  CHECK(a->sign == -1);
  CHECK(a->index.axes() == std::vector<int>{1, 2, 3});

  auto b = insert_axis(1, MultiIndex(3, {2, 3}));
  REQUIRE(b);
  CHECK(b->sign == 1);

  CHECK_FALSE(insert_axis(2, MultiIndex(3, {1, 2})));
}

TEST_CASE("remove_axis examples") {
  auto a = remove_axis(2, MultiIndex(3, {1, 2, 3}));
  CHECK(a.sign == -1);
  CHECK(a.index.axes() == std::vector<int>{1, 3});
  auto b = remove_axis(1, MultiIndex(3, {1, 2, 3}));
  CHECK(b.sign == 1);
  CHECK(b.index.axes() == std::vector<int>{2, 3});
  CHECK_THROWS_AS(remove_axis(2, MultiIndex(3, {1, 3})), std::domain_error);
}

TEST_CASE("signs agree with brute-force inversion parity for every index up to n = 6") {
  for (int n = 1; n <= 6; ++n)
    for (int p = 0; p <= n; ++p)
      for (const auto& I : enumerate_indices(n, p))
        for (int j = 1; j <= n; ++j) {
          std::vector<int> seq{j};
          seq.insert(seq.end(), I.axes().begin(), I.axes().end());
          const int expect = oracle::sort_sign(seq);
          auto got = insert_axis(j, I);
          if (expect == 0) {
            CHECK_FALSE(got);
            auto rem = remove_axis(j, I);
            std::vector<int> back{j};
            back.insert(back.end(), rem.index.axes().begin(), rem.index.axes().end());
            CHECK(rem.sign == oracle::sort_sign(back));
            continue;
          }
          REQUIRE(got);
          CHECK(got->sign == expect);
          auto round = remove_axis(j, got->index);
          CHECK(round.sign == got->sign);
          CHECK(round.index == I);
        }
}

TEST_CASE("two insertions in either order differ by a sign") {
  // (jkI) and (kjI) sort to the same index with opposite signature.
  for (int n = 2; n <= 5; ++n)
    for (int p = 0; p + 2 <= n; ++p)
      for (const auto& I : enumerate_indices(n, p))
        for (int j = 1; j <= n; ++j)
          for (int k = 1; k <= n; ++k) {
            if (j == k || I.contains(j) || I.contains(k)) continue;
            auto a1 = insert_axis(k, I);
            auto a2 = insert_axis(j, a1->index);
            auto b1 = insert_axis(j, I);
            auto b2 = insert_axis(k, b1->index);
            CHECK(a2->index == b2->index);
            CHECK(a1->sign * a2->sign == -(b1->sign * b2->sign));
          }
}
