#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"

#include "chainmon/enumerate.hpp"
#include "chainmon/transformation.hpp"

namespace {

using namespace chainmon;

std::vector<PartialTransformation> all_partial_maps(int n) {
  return enumerate_filter(n, Family::PT);
}

PartialTransformation random_map(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(0, n);
  std::vector<int> img(n);
  for (int& v : img) {
    v = dist(rng);
  }
  return PartialTransformation(n, img);
}

}  // namespace

TEST_CASE("identity and zero basics") {
  auto id = PartialTransformation::identity(4);
  auto zero = PartialTransformation::zero(4);
  CHECK(id.is_identity());
  CHECK(id.is_full());
  CHECK(zero.is_zero());
  CHECK(zero.domain().empty());
  CHECK(zero.image().empty());

  auto t = parse_two_row("[1 2 3 / 2 2 -]");
  CHECK(PartialTransformation::identity(3) * t == t);
  CHECK(t * PartialTransformation::identity(3) == t);
}

TEST_CASE("composition follows the left-to-right rule") {
  // x(s t) = (x s) t, defined when x s is defined and lands in Dom(t).
  auto s = parse_two_row("[1 2 3 / 2 2 -]");
  auto t = parse_two_row("[1 2 3 / - 1 1]");
  auto expected = parse_two_row("[1 2 3 / 1 1 -]");
  CHECK(s * t == expected);

  auto h = PartialTransformation::reversal(5);
  CHECK(h * h == PartialTransformation::identity(5));

  CHECK_THROWS_AS(PartialTransformation::identity(3) *
                      PartialTransformation::identity(4),
                  std::invalid_argument);
}

TEST_CASE("two-row notation round-trips") {
  auto zero = PartialTransformation::zero(3);
  CHECK(to_two_row(zero) == "[1 2 3 / - - -]");
  CHECK(parse_two_row(to_two_row(zero)) == zero);

  auto h = PartialTransformation::reversal(4);
  CHECK(to_two_row(h) == "[1 2 3 4 / 4 3 2 1]");

  std::mt19937 rng(2024);
  for (int i = 0; i < 200; ++i) {
    auto t = random_map(6, rng);
    CHECK(parse_two_row(to_two_row(t)) == t);
  }

  CHECK_THROWS_AS(parse_two_row("[2 1 / 1 2]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_two_row("[1 2 / 3 1]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_two_row("1 2 / 1 1"), std::invalid_argument);
}

TEST_CASE("intervals include the empty set") {
  CHECK(is_interval({2, 3, 4}, 5));
  CHECK_FALSE(is_interval({1, 3}, 3));
  CHECK(is_interval({}, 4));
  CHECK(is_interval({2}, 2));
  CHECK(is_interval({3, 2}, 4));  // order does not matter

  // The empty set being an interval makes the zero a member of PIM.
  CHECK(in_family(PartialTransformation::zero(3), Family::PIM));
  CHECK(in_family(PartialTransformation::zero(3), Family::PIM_R));
}

TEST_CASE("monotonicity predicates") {
  const int n = 4;
  auto id = PartialTransformation::identity(n);
  CHECK(is_order_preserving(id));
  CHECK_FALSE(is_order_reversing(id));

  auto h = PartialTransformation::reversal(n);
  CHECK(is_order_reversing(h));
  CHECK_FALSE(is_order_preserving(h));

  // Constants and sub-singleton domains are both.
  auto constant = parse_two_row("[1 2 3 4 / - 2 2 -]");
  CHECK(is_order_preserving(constant));
  CHECK(is_order_reversing(constant));
  auto point = parse_two_row("[1 2 3 4 / - 3 - -]");
  CHECK(is_order_preserving(point));
  CHECK(is_order_reversing(point));
  CHECK(is_monotone(PartialTransformation::zero(n)));
}

TEST_CASE("family membership") {
  const int n = 4;
  auto h = PartialTransformation::reversal(n);
  CHECK(in_family(h, Family::IM));
  CHECK(in_family(h, Family::IM_R));
  CHECK_FALSE(in_family(h, Family::IO));

  auto e3 = generator(Gen::e, n - 1, n);
  CHECK(in_family(e3, Family::PIM));
  CHECK_FALSE(in_family(e3, Family::IM));  // not full

  auto gap_image = parse_two_row("[1 2 3 4 / 1 1 3 3]");
  CHECK_FALSE(in_family(gap_image, Family::PIM));
  CHECK(in_family(gap_image, Family::PO));
}

TEST_CASE("generator displays") {
  CHECK(generator(Gen::a, 1, 3) == parse_two_row("[1 2 3 / 1 1 2]"));
  CHECK(generator(Gen::b, 2, 3) == parse_two_row("[1 2 3 / 2 3 3]"));
  CHECK(generator(Gen::f, 2, 3) == parse_two_row("[1 2 3 / - 2 3]"));
  CHECK(generator(Gen::e, 2, 4) == parse_two_row("[1 2 3 4 / 1 2 - -]"));
  CHECK(generator(Gen::e, 2, 4).domain() == std::vector<ChainPoint>{1, 2});

  // c_i collapses the pair {n-i, n-i+1} onto i and reverses; forced by the
  // factorizations a_i = h c_i, a_{n-i} = c_i c_1 and b_{n-1} = c_1 h.
  CHECK(generator(Gen::c, 1, 4) == parse_two_row("[1 2 3 4 / 3 2 1 1]"));
  CHECK(generator(Gen::c, 2, 4) == parse_two_row("[1 2 3 4 / 3 2 2 1]"));
  CHECK(generator(Gen::c, 1, 3) == parse_two_row("[1 2 3 / 2 1 1]"));

  for (int n = 3; n <= 9; ++n) {
    auto h = generator(Gen::h, 0, n);
    auto c1 = generator(Gen::c, 1, n);
    CHECK(generator(Gen::b, n - 1, n) == c1 * h);
    for (int i = 1; i <= n / 2; ++i) {
      auto ci = generator(Gen::c, i, n);
      CHECK(generator(Gen::a, i, n) == h * ci);
      CHECK(generator(Gen::a, n - i, n) == ci * c1);
    }
  }

  CHECK_THROWS_AS(generator(Gen::a, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(generator(Gen::a, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(generator(Gen::c, 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(generator(Gen::f, 1, 3), std::invalid_argument);
}

TEST_CASE("kernels") {
  const int n = 5;
  for (int i = 1; i <= n - 1; ++i) {
    auto a_i = generator(Gen::a, i, n);
    auto h = generator(Gen::h, 0, n);
    CHECK(kernel(a_i) == merged_pair_partition(i, n));
    // Post-composing with the bijection h leaves kernels unchanged;
    // pre-composing mirrors the merged pair.
    CHECK(kernel(a_i * h) == merged_pair_partition(i, n));
    CHECK(kernel(h * a_i) == merged_pair_partition(n - i, n));
    CHECK(kernel(h * a_i * h) == merged_pair_partition(n - i, n));
  }
  Partition singletons = kernel(PartialTransformation::identity(n));
  CHECK(singletons.blocks.size() == n);
  CHECK_THROWS_AS(kernel(PartialTransformation::zero(n)),
                  std::invalid_argument);

  CHECK(refines(singletons, merged_pair_partition(2, n)));
  CHECK_FALSE(refines(merged_pair_partition(2, n), singletons));
  CHECK(refines(merged_pair_partition(2, n), merged_pair_partition(2, n)));
}

TEST_CASE("composition is associative (exhaustive n <= 3, sampled n = 6)") {
  for (int n = 1; n <= 3; ++n) {
    auto maps = all_partial_maps(n);
    for (const auto& s : maps) {
      for (const auto& t : maps) {
        auto st = s * t;
        for (const auto& u : maps) {
          CHECK((st * u) == (s * (t * u)));
        }
      }
    }
  }
  std::mt19937 rng(99);
  for (int i = 0; i < 300; ++i) {
    auto s = random_map(6, rng);
    auto t = random_map(6, rng);
    auto u = random_map(6, rng);
    CHECK((s * t) * u == s * (t * u));
  }
}

TEST_CASE("monotone products (exhaustive n <= 4)") {
  for (int n = 1; n <= 4; ++n) {
    auto maps = all_partial_maps(n);
    for (const auto& s : maps) {
      if (!is_monotone(s)) {
        continue;
      }
      for (const auto& t : maps) {
        if (!is_monotone(t)) {
          continue;
        }
        auto st = s * t;
        CHECK(is_monotone(st));
        if (is_order_preserving(s) && is_order_reversing(t) &&
            st.domain_size() > 1) {
          CHECK(is_order_reversing(st));
        }
      }
    }
  }
}

TEST_CASE("PIM is closed and IM = PIM intersect T (exhaustive n <= 5)") {
  for (int n = 1; n <= 5; ++n) {
    auto pim = enumerate_filter(n, Family::PIM);
    for (const auto& s : pim) {
      for (const auto& t : pim) {
        CHECK(in_family(s * t, Family::PIM));
      }
    }
    auto im = enumerate_filter(n, Family::IM);
    std::vector<PartialTransformation> expected;
    for (const auto& t : pim) {
      if (t.is_full()) {
        expected.push_back(t);
      }
    }
    CHECK(im == expected);
  }
}

TEST_CASE("reversal involutes (exhaustive n <= 5)") {
  for (int n = 1; n <= 5; ++n) {
    auto h = PartialTransformation::reversal(n);
    CHECK(h * h == PartialTransformation::identity(n));
    for (const auto& t : all_partial_maps(n)) {
      CHECK((t * h) * h == t);
    }
  }
}

TEST_CASE("post-composition with the reversal maps PIM_r onto PIO") {
  for (int n = 1; n <= 6; ++n) {
    auto h = PartialTransformation::reversal(n);
    for (const auto& t : enumerate_constructive(n, Family::PIM_R)) {
      auto th = t * h;
      CHECK(in_family(th, Family::PIO));
      CHECK(th.domain() == t.domain());
    }
  }
}
