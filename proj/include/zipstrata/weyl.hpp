#pragma once

// Exact Weyl-group engine. Elements are integer lattice automorphisms stored
// with their inverses; length is the inversion count over Phi^+. Reduced words
// are recomputed on demand (lex-smallest), keeping elements immutable values.

#include "zipstrata/rootdata.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace zipstrata {

struct WeylElement {
  IntMat mat;  // action on X*(T)
  IntMat inv;
  int length = 0;

  bool operator==(const WeylElement& o) const { return mat == o.mat; }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }
  bool is_identity() const { return mat.is_identity(); }
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

WeylElement identity_element(const RootDatum& rd);
WeylElement reflection(const RootDatum& rd, int i);

// compose(u, v) acts by (uv)(chi) = u(v(chi)).
WeylElement compose(const RootDatum& rd, const WeylElement& u, const WeylElement& v);
WeylElement inverse(const WeylElement& w);

Character apply(const WeylElement& w, const Character& chi);
Cocharacter apply_cochar(const WeylElement& w, const Cocharacter& c);

int length_of(const RootDatum& rd, const IntMat& mat);

// Right descent: l(w s_i) < l(w); left descent: l(s_i w) < l(w).
bool is_right_descent(const RootDatum& rd, const WeylElement& w, int i);
bool is_left_descent(const RootDatum& rd, const WeylElement& w, int i);

// Lexicographically smallest reduced word, as 0-based simple-reflection indices.
std::vector<int> reduced_word(const RootDatum& rd, const WeylElement& w);
WeylElement from_word(const RootDatum& rd, const std::vector<int>& word);

// Longest element of the standard parabolic subgroup W_I; I = all of Delta
// gives w_0, I empty gives the identity.
WeylElement longest_element(const RootDatum& rd, const std::vector<int>& I);

bool bruhat_leq(const RootDatum& rd, const WeylElement& u, const WeylElement& w);

enum class CosetSide { Left, Right };  // Left -> {}^I W (minimal in W_I w), Right -> W^I

// True iff w is the minimal representative of its coset on the given side.
bool is_min_coset_rep(const RootDatum& rd, const std::vector<int>& I, CosetSide side,
                      const WeylElement& w);

// All minimal coset representatives, grown by length without materializing W.
// Sorted by (length, lexicographic reduced word).
std::vector<WeylElement> min_coset_reps(const RootDatum& rd, const std::vector<int>& I,
                                        CosetSide side);

// Full enumeration by closure of the generators; throws BudgetExceeded when the
// classical order exceeds the cap.
std::vector<WeylElement> enumerate_weyl(const RootDatum& rd, std::uint64_t max_order);

// Elements of the standard parabolic subgroup W_I.
std::vector<WeylElement> enumerate_weyl_subgroup(const RootDatum& rd, const std::vector<int>& I,
                                                 std::uint64_t max_order);

// Streams the length of every element exactly once, using the combinatorial
// model of the series (permutations / signed permutations); no matrices are
// materialized. Supports split A/B/C/D data (a similitude coordinate does not
// change W).
void for_each_weyl_length(const RootDatum& rd, const std::function<void(int)>& fn);

// phi(w) = F^{-1} w F, the geometric-Frobenius action on W.
WeylElement frobenius_on_weyl(const RootDatum& rd, const WeylElement& w);

// Partition of Phi^vee into orbits of W x <F>. Orbit members and orbits are in
// a canonical sorted order.
std::vector<std::vector<Cocharacter>> coroot_orbits(const RootDatum& rd);

}  // namespace zipstrata
