#include "doctest.h"

#include "oracles.hpp"
#include "zipstrata/weyl.hpp"

#include <map>
#include <random>

using namespace zipstrata;
using namespace zipstrata::test;

TEST_CASE("generator relations") {
  RootDatum a2 = build_root_datum(Series::A, 2, false, 1);
  WeylElement s1 = reflection(a2, 0), s2 = reflection(a2, 1);
  CHECK(compose(a2, s1, s1).is_identity());
  CHECK(compose(a2, compose(a2, s1, s2), s1) == compose(a2, compose(a2, s2, s1), s2));
}

TEST_CASE("pairing invariance under the contragredient action") {
  RootDatum rd = build_root_datum(Series::C, 3, true, 1);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    WeylElement w = random_element(rd, rng);
    Character chi = random_integer_character(rd, rng, 5);
    size_t i = rng() % rd.positive_coroots.size();
    const Cocharacter& c = rd.positive_coroots[i];
    CHECK(pair(apply(w, chi), apply_cochar(w, c)) == pair(chi, c));
  }
}

TEST_CASE("longest elements") {
  RootDatum c2 = build_root_datum(Series::C, 2, false, 1);
  CHECK(longest_element(c2, {}).is_identity());
  WeylElement w0 = longest_element(c2, all_simple_indices(c2));
  CHECK(w0.length == 4);
  // w0 = -1 in the split C2 coordinates
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(w0.mat.at(i, j) == (i == j ? -1 : 0));
  // oracle: the maximum length over the whole group
  int max_len = 0;
  for (const auto& w : enumerate_weyl(c2, 1u << 10)) max_len = std::max(max_len, w.length);
  CHECK(max_len == w0.length);

  for (const RootDatum& rd :
       {build_root_datum(Series::A, 3, false, 1), build_root_datum(Series::B, 3, false, 1)}) {
    for (std::vector<int> I : std::vector<std::vector<int>>{{0}, {1}, {0, 1}, {0, 2}}) {
      WeylElement wI = longest_element(rd, I);
      CHECK(compose(rd, wI, wI).is_identity());
      // l(w0I) = |Phi+_I|: positive roots supported on I
      int count = 0;
      for (const auto& root : rd.positive_roots) {
        std::vector<Rat> coeffs = root_in_simple_basis(rd, root);
        bool in_span = true;
        for (int j = 0; j < rd.ss_rank; ++j)
          if (coeffs[j] != 0 && std::find(I.begin(), I.end(), j) == I.end()) in_span = false;
        if (in_span) ++count;
      }
      CHECK(wI.length == count);
    }
  }
}

TEST_CASE("length function basics") {
  RootDatum rd = build_root_datum(Series::B, 3, false, 1);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    WeylElement u = random_element(rd, rng), v = random_element(rd, rng);
    WeylElement uv = compose(rd, u, v);
    CHECK(uv.length <= u.length + v.length);
    CHECK(inverse(u).length == u.length);
    std::vector<int> wu = reduced_word(rd, u), wv = reduced_word(rd, v);
    wu.insert(wu.end(), wv.begin(), wv.end());
    CHECK(from_word(rd, wu) == uv);  // concatenation is reduced iff lengths add
    CHECK((uv.length == u.length + v.length) ==
          (static_cast<int>(wu.size()) == uv.length));
  }
}

TEST_CASE("bruhat order") {
  SUBCASE("endpoints") {
    RootDatum c2 = build_root_datum(Series::C, 2, false, 1);
    WeylElement w0 = longest_element(c2, all_simple_indices(c2));
    for (const auto& w : enumerate_weyl(c2, 1u << 10)) {
      CHECK(bruhat_leq(c2, identity_element(c2), w));
      CHECK(bruhat_leq(c2, w, w0));
    }
  }
  SUBCASE("A2 generators incomparable") {
    RootDatum a2 = build_root_datum(Series::A, 2, false, 1);
    CHECK_FALSE(bruhat_leq(a2, reflection(a2, 0), reflection(a2, 1)));
    CHECK_FALSE(bruhat_leq(a2, reflection(a2, 1), reflection(a2, 0)));
  }
  SUBCASE("exhaustive agreement with the subword oracle") {
    for (const RootDatum& rd :
         {build_root_datum(Series::A, 2, false, 1), build_root_datum(Series::C, 2, false, 1),
          build_root_datum(Series::A, 3, false, 1)}) {
      std::vector<WeylElement> all = enumerate_weyl(rd, 1u << 10);
      for (const auto& u : all)
        for (const auto& w : all) CHECK(bruhat_leq(rd, u, w) == bruhat_oracle(rd, u, w));
    }
  }
}

TEST_CASE("minimal coset representatives") {
  SUBCASE("trivial parabolic types") {
    RootDatum c2 = build_root_datum(Series::C, 2, false, 1);
    CHECK(min_coset_reps(c2, {}, CosetSide::Left).size() == 8);
    CHECK(min_coset_reps(c2, all_simple_indices(c2), CosetSide::Left).size() == 1);
  }
  SUBCASE("siegel type A_{g-1} inside C_g gives 2^g representatives") {
    for (int g = 1; g <= 4; ++g) {
      RootDatum rd = build_root_datum(Series::C, g, true, 1);
      std::vector<int> I;
      for (int i = 0; i + 1 < g; ++i) I.push_back(i);
      std::vector<WeylElement> iw = min_coset_reps(rd, I, CosetSide::Left);
      CHECK(iw.size() == (1u << g));
      // every member has l(s_alpha w) = l(w) + 1 for alpha in I
      for (const auto& w : iw)
        for (int i : I)
          CHECK(compose(rd, reflection(rd, i), w).length == w.length + 1);
    }
  }
  SUBCASE("filter oracle over the full group") {
    RootDatum rd = build_root_datum(Series::C, 3, false, 1);
    std::vector<int> I{0, 1};
    std::vector<WeylElement> via_bfs = min_coset_reps(rd, I, CosetSide::Left);
    std::vector<WeylElement> via_filter;
    for (const auto& w : enumerate_weyl(rd, 1u << 12))
      if (is_min_coset_rep(rd, I, CosetSide::Left, w)) via_filter.push_back(w);
    CHECK(via_bfs.size() == via_filter.size());
    for (const auto& w : via_bfs)
      CHECK(std::find(via_filter.begin(), via_filter.end(), w) != via_filter.end());
  }
  SUBCASE("left and right are exchanged by inversion") {
    RootDatum rd = build_root_datum(Series::B, 3, false, 1);
    std::vector<int> I{0, 2};
    std::vector<WeylElement> left = min_coset_reps(rd, I, CosetSide::Left);
    std::vector<WeylElement> right = min_coset_reps(rd, I, CosetSide::Right);
    CHECK(left.size() == right.size());
    for (const auto& w : left)
      CHECK(std::find(right.begin(), right.end(), inverse(w)) != right.end());
  }
  SUBCASE("index formula |IW| * |W_I| = |W|") {
    RootDatum rd = build_root_datum(Series::B, 3, false, 1);
    for (std::vector<int> I : std::vector<std::vector<int>>{{}, {0}, {1}, {2}, {0, 1}, {0, 2}}) {
      size_t wi = enumerate_weyl_subgroup(rd, I, 1u << 12).size();
      size_t iw = min_coset_reps(rd, I, CosetSide::Left).size();
      CHECK(iw * wi == rd.classical_weyl_order());
    }
  }
}

TEST_CASE("enumeration") {
  CHECK(enumerate_weyl(build_root_datum(Series::A, 2, false, 1), 1u << 10).size() == 6);
  CHECK(enumerate_weyl(build_root_datum(Series::C, 2, false, 1), 1u << 10).size() == 8);
  CHECK_THROWS_AS(enumerate_weyl(build_root_datum(Series::C, 5, false, 1), 100),
                  BudgetExceeded);
}

TEST_CASE("length streaming matches matrix enumeration") {
  for (const RootDatum& rd :
       {build_root_datum(Series::A, 3, false, 1), build_root_datum(Series::B, 3, false, 1),
        build_root_datum(Series::C, 3, false, 1), build_root_datum(Series::D, 3, false, 1),
        build_root_datum(Series::C, 2, true, 1)}) {
    std::map<int, std::uint64_t> stream_hist;
    for_each_weyl_length(rd, [&](int l) { ++stream_hist[l]; });
    std::map<int, std::uint64_t> matrix_hist;
    for (const auto& w : enumerate_weyl(rd, 1u << 12)) ++matrix_hist[w.length];
    CHECK(stream_hist == matrix_hist);
  }
}

TEST_CASE("frobenius action on W") {
  SUBCASE("split datum acts trivially") {
    RootDatum rd = build_root_datum(Series::C, 2, false, 1);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
      WeylElement w = random_element(rd, rng);
      CHECK(frobenius_on_weyl(rd, w) == w);
    }
  }
  SUBCASE("group automorphism") {
    RootDatum rd = build_root_datum(Series::A, 3, false, 2);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
      WeylElement u = random_element(rd, rng), v = random_element(rd, rng);
      CHECK(frobenius_on_weyl(rd, compose(rd, u, v)) ==
            compose(rd, frobenius_on_weyl(rd, u), frobenius_on_weyl(rd, v)));
    }
  }
  SUBCASE("quasi-split A3 sends s1 to s3") {
    RootDatum rd = build_root_datum(Series::A, 3, false, 2);
    CHECK(frobenius_on_weyl(rd, reflection(rd, 0)) == reflection(rd, 2));
  }
}

TEST_CASE("coroot orbits") {
  SUBCASE("A_n split: one orbit") {
    for (int n = 2; n <= 4; ++n)
      CHECK(coroot_orbits(build_root_datum(Series::A, n, false, 1)).size() == 1);
  }
  SUBCASE("C2: short and long coroots") {
    RootDatum rd = build_root_datum(Series::C, 2, false, 1);
    auto orbits = coroot_orbits(rd);
    REQUIRE(orbits.size() == 2);
    CHECK(orbits[0].size() + orbits[1].size() == 2 * rd.positive_roots.size());
    CHECK(orbits[0].size() == 4);
    CHECK(orbits[1].size() == 4);
  }
  SUBCASE("orbits are closed under the generators and F") {
    RootDatum rd = build_root_datum(Series::D, 4, false, 2);
    auto orbits = coroot_orbits(rd);
    size_t total = 0;
    for (const auto& orbit : orbits) {
      total += orbit.size();
      for (const auto& c : orbit) {
        for (int i = 0; i < rd.ss_rank; ++i) {
          Cocharacter img = apply_cochar(reflection(rd, i), c);
          CHECK(std::find(orbit.begin(), orbit.end(), img) != orbit.end());
        }
        Cocharacter fimg(rd.galois_cochar.apply(c.coords));
        CHECK(std::find(orbit.begin(), orbit.end(), fimg) != orbit.end());
      }
    }
    CHECK(total == 2 * rd.positive_roots.size());
  }
}
