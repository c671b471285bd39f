#pragma once

// The h_w calculus (Frobenius-twisted character maps and their inverses),
// Chevalley divisors on Schubert closures, the strict-positivity certificate
// for group-theoretical Hasse invariants, and the weight-shift scan.

#include "zipstrata/rootdata.hpp"
#include "zipstrata/weyl.hpp"
#include "zipstrata/zipdata.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zipstrata {

struct FrobeniusModel {
  long p = 2;
};

// p must be prime (p = 2 allowed).
FrobeniusModel make_frobenius_model(const RootDatum& rd, long p);

// lambda o phi = p * F(lambda).
Character frobenius_twist(const RootDatum& rd, const FrobeniusModel& fm, const Character& lambda);
Character frobenius_untwist(const RootDatum& rd, const FrobeniusModel& fm, const Character& chi);

// h_w(lambda) = lambda - (w lambda) o phi.
Character h_map(const RootDatum& rd, const FrobeniusModel& fm, const WeylElement& w,
                const Character& lambda);

// Exact inverse of h_w; computed by linear solve and cross-checked against the
// twisted-sum closed form on every call.
Character h_inverse(const RootDatum& rd, const FrobeniusModel& fm, const WeylElement& w,
                    const Character& chi);
Character h_inverse_closed_form(const RootDatum& rd, const FrobeniusModel& fm,
                                const WeylElement& w, const Character& chi);

// w^(r) = phi^{r-1}(w) ... phi(w) w; minimal r >= 1 with w^(r) = e.
int twisted_order(const RootDatum& rd, const WeylElement& w);

// E_w: indices of the positive roots alpha with l(w w0 s_alpha w0) = l(w) - 1
// (such targets are automatically Bruhat-below w).
std::vector<int> chevalley_support(const RootDatum& rd, const WeylElement& w);

struct ChevalleyEntry {
  int root_index = -1;  // into positive_roots
  WeylElement target;   // w w0 s_alpha w0
  Rat coeff;            // <lambda, w w0 alpha^vee>
};

struct ChevalleyDivisor {
  WeylElement w;
  std::vector<ChevalleyEntry> entries;
};

ChevalleyDivisor chevalley_divisor(const RootDatum& rd, const WeylElement& w,
                                   const Character& lambda);

// All divisor coefficients >= 0.
bool sections_on_closure(const RootDatum& rd, const WeylElement& w, const Character& lambda);

enum class Verdict { Exists, NoPromise, InternalInconsistency };

std::string verdict_string(Verdict v);

struct HasseCertificate {
  Character chi;
  long p = 2;
  WeylElement stratum_w;  // in {}^I W
  WeylElement cominimal;  // phi(stratum_w^{-1})
  mpz_class N;            // minimal denominator-clearing scale
  Character lambda;       // h^{-1}_{phi(w1) w^{-1}}(N chi), integral
  ChevalleyDivisor divisor;
  bool ample = false;
  bool orbitally_p_close = false;
  bool all_coeffs_positive = false;
  Verdict verdict = Verdict::NoPromise;
};

// chi must be a character of L; stratum_w must lie in {}^I W.
HasseCertificate hasse_certificate(const ZipDatum& zd, const FrobeniusModel& fm,
                                   const Character& chi, const WeylElement& stratum_w);

// Smallest a <= a_max with -w0c(eta + a eta_omega + k chi_eta) Delta^vee-dominant
// and Phi^vee-regular; w0c is the longest element of the Levi Weyl group W_K.
std::optional<long> weight_shift_search(const ZipDatum& zd, const Character& eta,
                                        const Character& eta_omega, const Character& chi_eta,
                                        long k, long a_max);

}  // namespace zipstrata
