#pragma once

// Character predicates: dominance, (delta-)regularity, ample, orbitally
// p-close, quasi-constant, the cohomology degree of a Weyl chamber, and the
// cone memberships of the global-sections analysis.

#include "zipstrata/rootdata.hpp"
#include "zipstrata/zipdata.hpp"

#include <optional>
#include <vector>

namespace zipstrata {

// <chi, alpha_i^vee> >= 0 for the selected simple roots (indices into Delta).
bool is_dominant(const RootDatum& rd, const Character& chi, const std::vector<int>& subset);
bool is_dominant(const RootDatum& rd, const Character& chi);  // all of Delta

// |<chi, c>| > delta for every c in psi.
bool is_delta_regular(const RootDatum& rd, const Character& chi, const Rat& delta,
                      const std::vector<Cocharacter>& psi);
bool is_regular(const RootDatum& rd, const Character& chi, const std::vector<Cocharacter>& psi);
bool is_regular(const RootDatum& rd, const Character& chi);  // all positive coroots

// chi in X*(L): pairs to zero with every Levi simple coroot.
bool is_levi_character(const ZipDatum& zd, const Character& chi);

// <chi, alpha^vee> < 0 strictly on every simple coroot outside the Levi type.
// Throws if chi is not a character of L.
bool is_ample(const ZipDatum& zd, const Character& chi);

// Sorted deduplicated absolute pairing values per W x <F> coroot orbit,
// aligned with coroot_orbits(rd).
std::vector<std::vector<Rat>> orbit_abs_values(const RootDatum& rd, const Character& chi);

bool is_orbitally_p_close(const RootDatum& rd, const Character& chi, long p);

struct MinPClose {
  bool all_p = false;  // orbitally p-close for every prime
  long bound = 2;      // smallest b with chi orbitally p-close for all p >= b
};
MinPClose min_p_close(const RootDatum& rd, const Character& chi);

bool is_quasi_constant(const RootDatum& rd, const Character& chi);

struct ChamberSpec {
  Character witness;  // must pair nonzero with every positive coroot
};

// Number of positive coroots negative on the chamber.
int cohomology_degree(const RootDatum& rd, const ChamberSpec& chamber);

struct ConeFlags {
  bool in_C = false;          // > 0 on K-coroots, < 0 outside
  bool in_A_p = false;        // in_C and orbitally p-close
  bool in_C_plusplus = false; // h_{w0M}^{-1}(chi) is Delta^vee-dominant
};

ConeFlags cone_tests(const ZipDatum& zd, const Character& chi, long p);

}  // namespace zipstrata
