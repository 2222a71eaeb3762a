#include <doctest.h>

#include <random>

#include "henkin/atoms.hpp"

using namespace henkin;

namespace {

// Linear scan over indices 0, 1, ... of the requested sort.
Atom scan_fresh(int sort, const std::vector<Atom>& avoid) {
  for (int i = 0;; ++i) {
    bool taken = false;
    for (const auto& a : avoid) taken = taken || (a.sort == sort && a.index == i);
    if (!taken) return {sort, i};
  }
}

FinitePermutation random_product(std::mt19937_64& rng, int sorts, int len) {
  std::uniform_int_distribution<int> sort(1, sorts), idx(0, 9);
  FinitePermutation p;
  for (int i = 0; i < len; ++i) {
    int s = sort(rng);
    p = compose(transposition({s, idx(rng)}, {s, idx(rng)}), p);
  }
  return p;
}

}  // namespace

TEST_SUITE("atoms") {
  TEST_CASE("fresh_atom takes the minimal free index of the sort") {
    CHECK(fresh_atom(1, {}) == Atom{1, 0});
    std::vector<Atom> avoid1{{1, 3}, {1, 5}};
    CHECK(fresh_atom(1, SupportSet(avoid1)) == scan_fresh(1, avoid1));
    CHECK(fresh_atom(1, SupportSet(avoid1)) == Atom{1, 0});
    std::vector<Atom> avoid2{{2, 0}, {2, 1}, {1, 0}};
    CHECK(fresh_atom(2, SupportSet(avoid2)) == scan_fresh(2, avoid2));
    CHECK(fresh_atom(2, SupportSet(avoid2)) == Atom{2, 2});

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Atom> avoid;
      for (int i = 0; i < 6; ++i) avoid.push_back({1 + int(rng() % 2), int(rng() % 6)});
      int sort = 1 + int(rng() % 2);
      CHECK(fresh_atom(sort, SupportSet(avoid)) == scan_fresh(sort, avoid));
      CHECK(fresh_atom(sort, SupportSet(avoid)) == fresh_atom(sort, SupportSet(avoid)));
    }
  }

  TEST_CASE("fresh_atom respects the structure") {
    CHECK_THROWS_AS(fresh_atom(2, {}, Structure::sigma0()), SortError);
    CHECK(fresh_atom(2, {}, Structure::ksigma0(2)) == Atom{2, 0});
    Structure fin = Structure::finite(2);
    CHECK(fresh_atom(1, {{1, 1}}, fin) == Atom{1, 2});
    CHECK_THROWS_WITH_AS(fresh_atom(1, {{1, 1}, {1, 2}}, fin), doctest::Contains("no fresh atom"), DomainError);
  }

  TEST_CASE("transposition") {
    CHECK(transposition({1, 0}, {1, 0}).is_identity());
    auto p = transposition({1, 0}, {1, 7});
    CHECK(p({1, 7}) == Atom{1, 0});
    CHECK(p({1, 0}) == Atom{1, 7});
    CHECK(p({1, 4}) == Atom{1, 4});
    CHECK(p({2, 7}) == Atom{2, 7});
    CHECK_THROWS_WITH_AS(transposition({1, 0}, {2, 0}), doctest::Contains("sort-violating permutation"), SortError);
  }

  TEST_CASE("fixes_pointwise") {
    CHECK(fixes_pointwise(FinitePermutation::identity(), {{1, 0}, {2, 5}}));
    auto p = transposition({1, 0}, {1, 7});
    CHECK(fixes_pointwise(p, {{1, 3}}));
    CHECK_FALSE(fixes_pointwise(p, {{1, 7}}));
  }

  TEST_CASE("permutation constructor rejects non-bijections and sort changes") {
    CHECK_THROWS_AS(FinitePermutation({{{1, 0}, {2, 0}}, {{2, 0}, {1, 0}}}), SortError);
    CHECK_THROWS_AS(FinitePermutation({{{1, 0}, {1, 1}}}), Error);
    CHECK_THROWS_AS(FinitePermutation({{{1, 0}, {1, 2}}, {{1, 1}, {1, 2}}}), Error);
    FinitePermutation cyc({{{1, 0}, {1, 1}}, {{1, 1}, {1, 2}}, {{1, 2}, {1, 0}}, {{1, 5}, {1, 5}}});
    CHECK(cyc.moved().size() == 3);
  }

  TEST_CASE("group laws on random transposition products") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
      auto p = random_product(rng, 3, 5);
      auto q = random_product(rng, 3, 4);
      auto r = random_product(rng, 3, 3);
      CHECK(compose(p, p.inverse()).is_identity());
      CHECK(compose(p.inverse(), p).is_identity());
      CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
      for (int idx = 0; idx < 10; ++idx) {
        Atom a{1 + idx % 3, idx};
        CHECK(compose(p, q)(a) == p(q(a)));
      }
    }
  }

  TEST_CASE("sort preservation") {
    std::mt19937_64 rng(12);
    int failures = 0;
    for (int i = 0; i < 1000; ++i) {
      auto p = random_product(rng, 3, 6);
      for (const auto& [from, to] : p.moved()) failures += from.sort != to.sort;
    }
    CHECK(failures == 0);
  }

  TEST_CASE("structures") {
    CHECK(Structure::sigma0() == Structure::ksigma0(1));
    CHECK(Structure::parse("ksigma0:1") == Structure::sigma0());
    CHECK(Structure::parse("ksigma0:3").sorts() == 3);
    CHECK(Structure::parse("finite:3").domain() == std::vector<Atom>{{1, 1}, {1, 2}, {1, 3}});
    CHECK_THROWS_AS(Structure::parse("finite:0"), Error);
    CHECK_THROWS_AS(Structure::parse("sigma1"), Error);
    CHECK(Structure::finite(2).valid_atom({1, 2}));
    CHECK_FALSE(Structure::finite(2).valid_atom({1, 0}));
    CHECK_FALSE(Structure::sigma0().valid_atom({2, 0}));
  }

  TEST_CASE("support sets stay sorted and deduplicated") {
    SupportSet s{{2, 1}, {1, 5}, {1, 2}, {1, 5}};
    CHECK(s.atoms() == std::vector<Atom>{{1, 2}, {1, 5}, {2, 1}});
    s.insert({1, 0});
    s.erase({1, 5});
    CHECK(s.atoms() == std::vector<Atom>{{1, 0}, {1, 2}, {2, 1}});
    CHECK(s.of_sort(2) == std::vector<Atom>{{2, 1}});
    CHECK(SupportSet{{1, 0}}.subset_of(s));
  }
}
