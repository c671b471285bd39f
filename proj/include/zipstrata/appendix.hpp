#pragma once

// Hodge-character construction from a self-dual weight multiset, the mu-weight
// splitting into the two Hodge pieces, and the quasi-constancy sweep over the
// special-vertex fundamental weights of the classical series.

#include "zipstrata/rootdata.hpp"

#include <string>
#include <vector>

namespace zipstrata {

struct WeightEntry {
  Character weight;
  long multiplicity = 1;
};

struct WeightMultiset {
  std::vector<WeightEntry> entries;
  Character central;  // c in the duality xi -> c - xi (zero for Sp-style data)
};

// Self-duality under xi -> c - xi with matching multiplicities; even total
// dimension. Throws on violation.
void validate_weight_multiset(const WeightMultiset& wm);

struct MuSplit {
  WeightMultiset top;     // weights pairing to a+1 with mu
  WeightMultiset bottom;  // weights pairing to a
  Rat a;
};

// The mu-pairings over the multiset must take exactly two values differing by
// one; top/bottom have equal total multiplicity.
MuSplit mu_split(const WeightMultiset& wm, const Cocharacter& mu);

WeightMultiset merge(const MuSplit& split);

// eta_omega = -(sum of top weights, with multiplicity).
Character hodge_character(const WeightMultiset& wm, const Cocharacter& mu);

struct PositivityViolation {
  Character weight;
  int special_index = -1;  // position in the supplied coroot list
  std::string reason;
};

// Checks that every top weight pairs >= 0 with each special coroot and that
// every weight with a strictly positive pairing lies in the top half.
std::vector<PositivityViolation> top_half_positivity_check(
    const WeightMultiset& wm, const Cocharacter& mu,
    const std::vector<Cocharacter>& special_coroots);

// Standard symplectic weight multiset {e_i, e0 - e_i} of a Siegel datum, and
// its cocharacter mu = f0 + f1 + ... + fg.
WeightMultiset siegel_standard_weights(const RootDatum& rd);
Cocharacter siegel_mu(const RootDatum& rd);

struct VertexVerdict {
  Series series;
  int rank = 0;
  int vertex = 0;  // index into Delta
  bool quasi_constant = false;
  bool minuscule_applicable = false;  // A and D
  bool minuscule = false;
  bool pattern_applicable = false;  // B and C long/short value pattern
  bool pattern_ok = false;
  bool passed = false;
};

// For each rank (A: 1.., B/C: 2.., D: 3.. up to max_rank) and each special
// vertex: the fundamental weight must be quasi-constant; minuscule in types A
// and D; in types B and C the nonzero absolute pairings must be 1 on short
// coroots and 2 on long ones.
std::vector<VertexVerdict> verify_special_fundamental_quasi_constant(Series series, int max_rank);

}  // namespace zipstrata
