#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "racg/group.hpp"

using namespace racg;

TEST_CASE("normal forms match the exhaustive word-class oracle (hexagon)") {
  Presentation p = hexagon_group();
  oracle::WordOracle orc(p, 6);
  for (const Word& w : orc.words()) {
    Element e = reduce(p, w);
    CHECK(e.word() == orc.normal(w));
    CHECK(is_normal(p, e.word()));
  }
}

TEST_CASE("normal forms match the exhaustive word-class oracle (pentagon)") {
  Presentation p = pentagon_group();
  oracle::WordOracle orc(p, 6);
  for (const Word& w : orc.words()) CHECK(reduce(p, w).word() == orc.normal(w));
}

TEST_CASE("normal forms match the exhaustive word-class oracle (4-cycle)") {
  Presentation p = four_cycle_group();
  oracle::WordOracle orc(p, 7);
  for (const Word& w : orc.words()) CHECK(reduce(p, w).word() == orc.normal(w));
}

TEST_CASE("group axioms on random words") {
  Presentation p = hexagon_group();
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(0, 12), gen(0, p.rank() - 1);
  auto random_element = [&] {
    Word w(len(rng));
    for (Gen& g : w) g = Gen(gen(rng));
    return reduce(p, w);
  };
  for (int it = 0; it < 200; ++it) {
    Element a = random_element(), b = random_element(), c = random_element();
    CHECK(multiply(p, multiply(p, a, b), c) == multiply(p, a, multiply(p, b, c)));
    CHECK(multiply(p, a, invert(p, a)).is_identity());
    CHECK(multiply(p, invert(p, a), a).is_identity());
    CHECK(invert(p, invert(p, a)) == a);
    // generators are involutions
    Element s = reduce(p, {Gen(gen(rng))});
    CHECK(multiply(p, s, s).is_identity());
  }
}

TEST_CASE("word metric agrees with BFS and is a metric") {
  Presentation p = pentagon_group();
  Ball B = ball_serial(p, 3);
  for (const Element& a : B.elements)
    for (const Element& b : B.elements) {
      std::size_t d = distance(p, a, b);
      CHECK(d == oracle::bfs_distance(p, a, b));
      CHECK((d == 0) == (a == b));
      CHECK(d == distance(p, b, a));
    }
}

TEST_CASE("descent sets pairwise commute and detect reduced suffixes") {
  Presentation p = hexagon_group();
  Ball B = ball_serial(p, 5);
  for (const Element& e : B.elements) {
    auto D = descent_set(p, e);
    for (std::size_t i = 0; i < D.size(); ++i)
      for (std::size_t j = i + 1; j < D.size(); ++j)
        CHECK(p.commutes(D[i], D[j]));
    if (!e.is_identity()) {
      CHECK(!D.empty());
      // the last letter of the normal form is always a descent
      CHECK(std::find(D.begin(), D.end(), e.word().back()) != D.end());
    }
  }
}

TEST_CASE("geodesics are unit-speed and hit the endpoints") {
  Presentation p = hexagon_group();
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> len(0, 9), gen(0, p.rank() - 1);
  for (int it = 0; it < 100; ++it) {
    Word wa(len(rng)), wb(len(rng));
    for (Gen& g : wa) g = Gen(gen(rng));
    for (Gen& g : wb) g = Gen(gen(rng));
    Element a = reduce(p, wa), b = reduce(p, wb);
    auto path = geodesic(p, a, b);
    REQUIRE(path.size() == distance(p, a, b) + 1);
    CHECK(path.front() == a);
    CHECK(path.back() == b);
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      CHECK(distance(p, path[i], path[i + 1]) == 1);
    for (std::size_t i = 0; i < path.size(); ++i)
      CHECK(distance(p, path[i], b) == path.size() - 1 - i);
  }
}

TEST_CASE("median matches the exhaustive tripod scan") {
  for (Presentation p : {hexagon_group(), four_cycle_group()}) {
    Ball B = ball_serial(p, 3);
    Ball big = ball_serial(p, 7);  // superset that surely contains medians
    std::mt19937 rng(23);
    std::uniform_int_distribution<std::size_t> pick(0, B.elements.size() - 1);
    for (int it = 0; it < 60; ++it) {
      Element a = B.elements[pick(rng)], b = B.elements[pick(rng)],
              c = B.elements[pick(rng)];
      Element m = median(p, a, b, c);
      CHECK(m == oracle::brute_median(p, big.elements, a, b, c));
    }
  }
}

TEST_CASE("median is permutation invariant") {
  Presentation p = hexagon_group();
  Ball B = ball_serial(p, 3);
  std::mt19937 rng(29);
  std::uniform_int_distribution<std::size_t> pick(0, B.elements.size() - 1);
  for (int it = 0; it < 40; ++it) {
    Element a = B.elements[pick(rng)], b = B.elements[pick(rng)],
            c = B.elements[pick(rng)];
    Element m = median(p, a, b, c);
    CHECK(m == median(p, b, c, a));
    CHECK(m == median(p, c, a, b));
    CHECK(m == median(p, b, a, c));
  }
}

TEST_CASE("parallel and serial balls are identical") {
  for (Presentation p : {hexagon_group(), pentagon_group(), four_cycle_group()}) {
    Ball s = ball_serial(p, 6);
    Ball q = ball(p, 6);
    CHECK(s.elements == q.elements);
    CHECK(s.sphere_sizes == q.sphere_sizes);
  }
}

TEST_CASE("ball contents are exactly the normal forms, shortlex sorted") {
  Presentation p = four_cycle_group();
  Ball B = ball_serial(p, 5);
  CHECK(std::is_sorted(B.elements.begin(), B.elements.end()));
  for (const Element& e : B.elements) CHECK(is_normal(p, e.word()));
  // cross-check count against the word oracle
  oracle::WordOracle orc(p, 5);
  std::set<Word> normals;
  for (const Word& w : orc.words()) normals.insert(orc.normal(w));
  CHECK(B.elements.size() == normals.size());
}

TEST_CASE("ball budget is enforced") {
  Presentation p = hexagon_group();
  CHECK_THROWS_AS(ball_serial(p, 10, 100), ResourceError);
  CHECK_THROWS_AS(ball(p, 10, 100), ResourceError);
}

TEST_CASE("invalid letters are rejected") {
  Presentation p = four_cycle_group();
  CHECK_THROWS_AS(reduce(p, Word{Gen(4)}), InvalidInput);
  CHECK_THROWS_AS(p.gen("zz"), InvalidInput);
}
