#pragma once

// Based root data for the classical series A-D, optionally with a similitude
// coordinate (Siegel presentation of GSp) and a quasi-split Galois twist, plus
// F-cyclic products. The lattice X*(T) is Z^rank with a fixed basis; characters
// and cocharacters are exact rational coordinate vectors in dual bases.

#include "zipstrata/intmat.hpp"
#include "zipstrata/rational.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace zipstrata {

struct Character {
  std::vector<Rat> coords;

  Character() = default;
  explicit Character(std::vector<Rat> c) : coords(std::move(c)) {}
  int rank() const { return static_cast<int>(coords.size()); }
  bool operator==(const Character& o) const { return coords == o.coords; }
  bool is_zero() const {
    for (const Rat& q : coords)
      if (q != 0) return false;
    return true;
  }
};

struct Cocharacter {
  std::vector<Rat> coords;

  Cocharacter() = default;
  explicit Cocharacter(std::vector<Rat> c) : coords(std::move(c)) {}
  int rank() const { return static_cast<int>(coords.size()); }
  bool operator==(const Cocharacter& o) const { return coords == o.coords; }
};

Character add(const Character& a, const Character& b);
Character sub(const Character& a, const Character& b);
Character scale(const Rat& k, const Character& a);
Character negate(const Character& a);

// Perfect pairing <chi, c> in dual bases.
Rat pair(const Character& chi, const Cocharacter& c);

enum class Series { A, B, C, D };

char series_letter(Series s);
Series series_from_letter(char c);

struct RootDatum {
  int rank = 0;      // dimension of X*(T)
  int ss_rank = 0;   // number of simple roots
  Series series = Series::A;
  int series_rank = 0;
  bool similitude = false;
  int galois_order = 1;
  int copies = 1;  // > 1 for F-cyclic products of a split factor
  std::string tag;

  std::vector<Character> simple_roots;       // Delta
  std::vector<Cocharacter> simple_coroots;   // Delta^vee, aligned with Delta
  std::vector<Character> positive_roots;     // Phi^+
  std::vector<Cocharacter> positive_coroots; // aligned with Phi^+

  IntMat galois;      // F on X*(T); permutes Delta and Phi^+
  IntMat galois_inv;
  IntMat galois_cochar;  // contragredient action on X_*(T)

  // Integer images of the roots, for fast sign tests in the Weyl engine.
  std::vector<std::vector<std::int64_t>> pos_root_vecs;
  std::vector<std::vector<std::int64_t>> pos_coroot_vecs;
  std::vector<std::vector<std::int64_t>> simple_root_vecs;
  std::vector<std::vector<std::int64_t>> simple_coroot_vecs;
  std::vector<std::int64_t> two_rho_vec;  // sum of positive roots; regular

  // root coordinate vector -> +(i+1) if positive_roots[i], -(i+1) if its negative
  std::unordered_map<std::vector<std::int64_t>, int, IntVecHash> root_index;

  // Connected components of the Cartan diagram, as lists of simple-root indices.
  std::vector<std::vector<int>> components;

  bool is_root(const std::vector<std::int64_t>& v) const { return root_index.count(v) > 0; }
  // +1 for positive roots, -1 for negative, 0 if not a root.
  int root_sign(const std::vector<std::int64_t>& v) const {
    auto it = root_index.find(v);
    if (it == root_index.end()) return 0;
    return it->second > 0 ? 1 : -1;
  }
  // Index into positive_roots for a positive root vector.
  int positive_root_pos(const std::vector<std::int64_t>& v) const;

  unsigned long classical_weyl_order() const;
};

// series: A (rank >= 1), B (rank >= 1), C (rank >= 1), D (rank >= 2).
// similitude: supported for series C (the Siegel lattice with e0 first).
// galois_order: 1, or 2 for A (rank >= 2) and D.
RootDatum build_root_datum(Series series, int rank, bool similitude, int galois_order);

// `copies` split factors of (series, rank) with the Galois automorphism
// cyclically permuting the factors; used for the Weyl-Galois orbit tests on
// product data.
RootDatum build_product_datum(Series series, int rank, int copies);

// f_i with <f_i, alpha_j^vee> = delta_ij, normalized to vanish on the central
// cocharacters (those pairing to zero with every simple root).
std::vector<Character> fundamental_weights(const RootDatum& rd);

Character rho(const RootDatum& rd);

// Unique dominant root; requires an irreducible diagram.
Character highest_root(const RootDatum& rd);
Character highest_root_of_component(const RootDatum& rd, const std::vector<int>& component);

// Coefficients of a root written in the simple-root basis.
std::vector<Rat> root_in_simple_basis(const RootDatum& rd, const Character& root);

// Simple roots with coefficient one in the highest root of their component.
std::vector<int> special_simple_roots(const RootDatum& rd);

// chi must be dominant; true iff every coroot pairing lies in {-1, 0, 1}.
bool is_minuscule(const RootDatum& rd, const Character& chi);

std::vector<std::int64_t> to_int_vec(const Character& chi);
std::vector<std::int64_t> to_int_vec(const Cocharacter& c);
Character char_from_int_vec(const std::vector<std::int64_t>& v);
Cocharacter cochar_from_int_vec(const std::vector<std::int64_t>& v);

}  // namespace zipstrata
