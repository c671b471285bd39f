#pragma once

// Zip-datum combinatorics derived from (RootDatum, mu): the parabolic types,
// the distinguished Weyl elements, the {}^I W stratum table with its
// minimal/cominimal partners, and the length stratification.

#include "zipstrata/rootdata.hpp"
#include "zipstrata/weyl.hpp"

#include <cstdint>
#include <vector>

namespace zipstrata {

struct ZipDatum {
  RootDatum rd;
  Cocharacter mu;
  std::vector<int> K;  // simple roots of the Levi L (pairing 0 with mu)
  std::vector<int> I;  // type of P = -w0(K)
  std::vector<int> J;  // type of Q = phi(K)
  WeylElement w0;
  WeylElement w0I;
  WeylElement w1;   // w0 w0I
  WeylElement w0L;  // = w0 w0I w0, longest element of W_K
  WeylElement w0M;  // = phi(w0L), longest element of W_J

  int max_stratum_length() const { return w0.length - w0I.length; }
};

// mu must be Delta-dominant; all consistency identities are verified here.
ZipDatum make_zip_datum(const RootDatum& rd, const Cocharacter& mu);

// The set {}^I W indexing the E-orbits, sorted by (length, lexicographic word).
std::vector<WeylElement> zip_stratum_labels(const ZipDatum& zd,
                                            std::uint64_t max_size = 1u << 22);

// w -> w0I w w0, the order-reversing involution on {}^I W.
WeylElement involution_on_strata(const ZipDatum& zd, const WeylElement& w);

// Minimal element whose flag stratum maps onto the stratum of w: w0 w w0.
WeylElement minimal_partner(const ZipDatum& zd, const WeylElement& w);

// Dual labels v in W^J with E.(w1 u) = E.(w1 v), resolved through the
// zip-group moves x -> y x phi(y)^{-1} for y in W_L. Throws if some label is
// not reachable this way.
std::vector<WeylElement> resolve_dual_labels(const ZipDatum& zd,
                                             const std::vector<WeylElement>& strata);

// Cominimal element over the stratum of w: w0 v w0 for the dual label v.
WeylElement cominimal_partner(const ZipDatum& zd, const WeylElement& w);

struct StratumRecord {
  WeylElement w;  // element of {}^I W
  int length = 0;
  int dimension = 0;  // = length
  WeylElement minimal_partner;
  WeylElement cominimal_partner;
  WeylElement involution_image;
};

std::vector<StratumRecord> strata_table(const ZipDatum& zd, std::uint64_t max_size = 1u << 22);

// Sorted set w0 {}^I W w0 (= w1 {}^I W); e is the shortest member, w1 the longest.
std::vector<WeylElement> minimal_elements(const ZipDatum& zd);
// Sorted set w0 W^J w0; e is the shortest member, phi(w1) the longest.
std::vector<WeylElement> cominimal_elements(const ZipDatum& zd);

struct LengthStratum {
  std::vector<WeylElement> exact;   // S_j: length == j
  std::vector<WeylElement> closed;  // hat S_j: length <= j
};

LengthStratum length_strata(const ZipDatum& zd, int j);

}  // namespace zipstrata
