#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "harmonic/counting.hpp"
#include "harmonic/partitions.hpp"
#include "harmonic/rational.hpp"

using namespace harmonic;

namespace {

// Independent Bell-number oracle: the Bell triangle written out directly.
BigInt bellTriangleOracle(int n) {
  std::vector<std::vector<BigInt>> tri{{1}};
  for (int r = 1; r <= n; ++r) {
    std::vector<BigInt> row{tri.back().back()};
    for (const BigInt& v : tri.back()) row.push_back(row.back() + v);
    tri.push_back(std::move(row));
  }
  return tri[n][0];
}

std::vector<SetPartition> allPartitions(int n) {
  std::vector<SetPartition> out;
  forEachSetPartition(n, [&](const SetPartition& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

SetPartition randomPartition(int n, std::mt19937& rng) {
  std::vector<std::vector<int>> blocks;
  int used = 0;
  for (int e = 1; e <= n; ++e) {
    int pick = std::uniform_int_distribution<int>(0, used)(rng);
    if (pick == used) {
      blocks.push_back({e});
      ++used;
    } else {
      blocks[pick].push_back(e);
    }
  }
  return SetPartition(n, std::move(blocks));
}

} // namespace

TEST_CASE("set partition enumeration counts and canonical form") {
  Caps caps;
  SUBCASE("n=1 yields the single partition") {
    auto parts = allPartitions(1);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].toString() == "1");
  }
  SUBCASE("n=3 yields the 5 partitions by hand") {
    std::vector<std::string> got;
    for (const auto& p : allPartitions(3)) got.push_back(p.toString());
    std::vector<std::string> want{"123", "12|3", "13|2", "1|23", "1|2|3"};
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
  SUBCASE("counts match the Bell triangle up to n=8") {
    for (int n = 1; n <= 8; ++n) {
      long long count = 0;
      enumerateSetPartitions(n, caps, [&](const SetPartition&) {
        ++count;
        return true;
      });
      CHECK(BigInt(count) == bellTriangleOracle(n));
      CHECK(BigInt(count) == bell(n));
    }
  }
  SUBCASE("n=6 gives 203 partitions, all distinct and canonical") {
    std::set<std::string> seen;
    forEachSetPartition(6, [&](const SetPartition& p) {
      seen.insert(p.toString());
      for (std::size_t i = 1; i < p.blocks().size(); ++i)
        CHECK(p.blocks()[i - 1].front() < p.blocks()[i].front());
      return true;
    });
    CHECK(seen.size() == 203);
  }
  SUBCASE("cap errors") {
    CHECK_THROWS_AS(enumerateSetPartitions(0, caps, [](const SetPartition&) {
      return true;
    }), CapError);
    CHECK_THROWS_AS(enumerateSetPartitions(9, caps, [](const SetPartition&) {
      return true;
    }), CapError);
  }
  SUBCASE("early stop") {
    int seen = 0;
    forEachSetPartition(5, [&](const SetPartition&) { return ++seen < 3; });
    CHECK(seen == 3);
  }
}

TEST_CASE("partition text form round-trips") {
  std::mt19937 rng(7);
  for (int n : {1, 2, 5, 9}) {
    for (int trial = 0; trial < 50; ++trial) {
      SetPartition p = randomPartition(n, rng);
      CHECK(SetPartition::parse(p.toString(), n) == p);
    }
  }
  // Comma form above 9 elements.
  for (int trial = 0; trial < 50; ++trial) {
    SetPartition p = randomPartition(12, rng);
    CHECK(p.toString().find(',') != std::string::npos);
    CHECK(SetPartition::parse(p.toString(), 12) == p);
  }
  CHECK(SetPartition::parse("1,10|2,3|4,5,6,7,8,9", 10).toString() ==
        "1,10|2,3|4,5,6,7,8,9");
  CHECK_THROWS_AS(SetPartition::parse("12|2", 3), DomainError); // overlap
  CHECK_THROWS_AS(SetPartition::parse("12", 3), DomainError);   // no cover
  CHECK_THROWS_AS(SetPartition::parse("14", 3), DomainError);   // out of range
}

TEST_CASE("ordered set partition enumeration") {
  SUBCASE("singleton ground") {
    std::vector<std::string> got;
    forEachOrderedSetPartition({1}, [&](const OrderedSetPartition& p) {
      got.push_back(p.toString());
      return true;
    });
    CHECK(got == std::vector<std::string>{"1"});
  }
  SUBCASE("two elements, in stream order") {
    std::vector<std::string> got;
    forEachOrderedSetPartition({1, 2}, [&](const OrderedSetPartition& p) {
      got.push_back(p.toString());
      return true;
    });
    CHECK(got == std::vector<std::string>{"12", "1|2", "2|1"});
  }
  SUBCASE("three elements give the 13 OSPs") {
    std::set<std::string> got;
    forEachOrderedSetPartition({1, 2, 3}, [&](const OrderedSetPartition& p) {
      got.insert(p.toString());
      return true;
    });
    CHECK(got.size() == 13);
  }
  SUBCASE("counts match fubini and the Stirling sum up to m=7") {
    for (int m = 1; m <= 7; ++m) {
      std::vector<int> ground(m);
      for (int i = 0; i < m; ++i) ground[i] = i + 1;
      long long count = 0;
      forEachOrderedSetPartition(ground, [&](const OrderedSetPartition&) {
        ++count;
        return true;
      });
      CHECK(BigInt(count) == fubini(m));
      BigInt viaStirling = 0;
      for (int p = 0; p <= m; ++p) viaStirling += stirling2(m, p) * factorial(p);
      CHECK(BigInt(count) == viaStirling);
    }
  }
  SUBCASE("empty ground set is a domain error") {
    CHECK_THROWS_AS(
        forEachOrderedSetPartition({}, [](const OrderedSetPartition&) {
          return true;
        }),
        DomainError);
  }
}

TEST_CASE("fubini and stirling2 small values") {
  CHECK(fubini(0) == 1);
  CHECK(fubini(2) == 3);
  CHECK(fubini(3) == 13);
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(4, 0) == 0);
  CHECK(stirling2(7, 0) == 0);
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(4, 2) == 7);
  // Oracle for S(4,2): partitions of [4] with exactly two blocks.
  int twoBlock = 0;
  forEachSetPartition(4, [&](const SetPartition& p) {
    if (p.blockCount() == 2) ++twoBlock;
    return true;
  });
  CHECK(twoBlock == 7);
}

TEST_CASE("restrictOSP") {
  auto pi = OrderedSetPartition::parse("45|8|2|1379|6", 9);
  CHECK(restrictOSP(pi, maskOf({3, 4, 6, 7})).toString() == "4|37|6");
  CHECK(restrictOSP(pi, pi.groundMask()) == pi);
  auto small = OrderedSetPartition::parse("1|2|3", 3);
  CHECK(restrictOSP(small, maskOf({2})).toString() == "2");
  CHECK_THROWS_AS(restrictOSP(small, 0), DomainError);
  CHECK_THROWS_AS(restrictOSP(small, maskOf({4})), DomainError);
}

TEST_CASE("reverse and adjacent refinement") {
  auto pi = OrderedSetPartition::parse("14|3|26|8|57", 8);
  auto coarse = OrderedSetPartition::parse("134|26|578", 8);
  CHECK(isAdjacentRefinement(pi, coarse));
  CHECK_FALSE(isAdjacentRefinement(coarse, pi));
  CHECK(reverseOSP(pi).toString() == "57|8|26|3|14");
  CHECK(reverseOSP(reverseOSP(pi)) == pi);

  auto a = OrderedSetPartition::parse("1|2", 2);
  auto b = OrderedSetPartition::parse("2|1", 2);
  CHECK(isAdjacentRefinement(a, a)); // reflexive
  CHECK(isAdjacentRefinement(coarse, coarse));
  CHECK_FALSE(isAdjacentRefinement(a, b));
  CHECK(isAdjacentRefinement(a, OrderedSetPartition::parse("12", 2)));
  // 13 is not a union of consecutive blocks of 1|2|3.
  CHECK_FALSE(isAdjacentRefinement(OrderedSetPartition::parse("1|2|3", 3),
                                   OrderedSetPartition::parse("13|2", 3)));
  CHECK_THROWS_AS(
      isAdjacentRefinement(a, OrderedSetPartition::parse("1|2|3", 3)),
      DomainError);
}

TEST_CASE("join of partitions") {
  CHECK(joinPartitions(SetPartition::parse("12|34", 4),
                       SetPartition::parse("23|14", 4))
            .toString() == "1234");
  CHECK(joinPartitions(SetPartition::parse("1|2|3", 3),
                       SetPartition::parse("12|3", 3))
            .toString() == "12|3");
  CHECK_THROWS_AS(
      joinPartitions(SetPartition::singletons(2), SetPartition::singletons(3)),
      DomainError);

  SUBCASE("matches the least-common-coarsening oracle on n<=4") {
    for (int n = 2; n <= 4; ++n) {
      auto parts = allPartitions(n);
      long long bad = 0;
      for (const auto& a : parts)
        for (const auto& b : parts) {
          SetPartition joined = joinPartitions(a, b);
          if (!isRefinementOf(a, joined) || !isRefinementOf(b, joined)) ++bad;
          // Every common coarsening must coarsen the join.
          for (const auto& c : parts)
            if (isRefinementOf(a, c) && isRefinementOf(b, c) &&
                !isRefinementOf(joined, c))
              ++bad;
        }
      CHECK(bad == 0);
    }
  }
  SUBCASE("commutative, associative, idempotent up to n=5") {
    for (int n = 2; n <= 5; ++n) {
      auto parts = allPartitions(n);
      long long bad = 0;
      for (const auto& a : parts) {
        if (!(joinPartitions(a, a) == a)) ++bad;
        for (const auto& b : parts)
          if (!(joinPartitions(a, b) == joinPartitions(b, a))) ++bad;
      }
      for (const auto& a : parts)
        for (const auto& b : parts) {
          SetPartition ab = joinPartitions(a, b);
          for (const auto& c : parts)
            if (!(joinPartitions(ab, c) ==
                  joinPartitions(a, joinPartitions(b, c))))
              ++bad;
        }
      CHECK(bad == 0);
    }
  }
}

TEST_CASE("mobiusToTop") {
  CHECK(mobiusToTop(SetPartition::oneBlock(3)) == 1);
  CHECK(mobiusToTop(SetPartition::parse("12|3", 3)) == -1);
  CHECK(mobiusToTop(SetPartition::singletons(3)) == 2);
  SUBCASE("row sum over the lattice vanishes for n >= 2") {
    for (int n = 2; n <= 5; ++n) {
      BigInt sum = 0;
      forEachSetPartition(n, [&](const SetPartition& p) {
        sum += mobiusToTop(p);
        return true;
      });
      CHECK(sum == 0);
    }
  }
}

TEST_CASE("treeWeight and forestSum") {
  CHECK(treeWeight(SetPartition::singletons(4)) == 1);
  CHECK(treeWeight(SetPartition::oneBlock(3)) == 3);
  CHECK(treeWeight(SetPartition::parse("12|345", 5)) == 3);
  CHECK(forestSum(SetPartition::singletons(3)) == 1);
  CHECK(forestSum(SetPartition::oneBlock(3)) == 7);
  CHECK(forestSum(SetPartition::parse("12|3", 3)) == 2);
  CHECK(forestCount(4) == 38);
  CHECK(forestCount(5) == 291);
  SUBCASE("product fast path equals refinement-sum oracle up to n=6") {
    for (int n = 1; n <= 6; ++n) {
      long long bad = 0;
      forEachSetPartition(n, [&](const SetPartition& sigma) {
        if (forestSum(sigma) != forestSumByRefinement(sigma)) ++bad;
        return true;
      });
      CHECK(bad == 0);
    }
  }
}

TEST_CASE("exact rationals") {
  Rational v(2848, 3);
  CHECK(ratToString(v) == "2848/3");
  CHECK(ratToString(Rational(3)) == "3");
  CHECK(ratToString(Rational(-5, 3)) == "-5/3");
  CHECK(ratFromString("2848/3") == v);
  CHECK(ratFromString("6/4") == Rational(3, 2));
  CHECK(ratFromString("-10/4") == Rational(-5, 2));
  CHECK(ratFromString("42") == Rational(42));
  CHECK_THROWS_AS(ratFromString("x/y"), DomainError);
  CHECK_THROWS_AS(ratFromString("1/0"), DomainError);
  // Canonical form: reduced, positive denominator.
  Rational w = ratFromString("6/-4");
  CHECK(numerator(w) == -3);
  CHECK(denominator(w) == 2);
  CHECK(boost::multiprecision::gcd(numerator(v), denominator(v)) == 1);
  CHECK(isIntegral(Rational(7)));
  CHECK_FALSE(isIntegral(v));
  CHECK(ratPow(BigInt(1), -1) == 1);
  CHECK(ratPow(BigInt(4), 2) == 16);
  CHECK(ratPow(BigInt(2), -2) == Rational(1, 4));
}
