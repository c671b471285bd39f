#include "zipstrata/hasse.hpp"

#include "zipstrata/characters.hpp"
#include "zipstrata/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace zipstrata {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Character apply_galois(const RootDatum& rd, const Character& chi) {
  return Character(rd.galois.apply(chi.coords));
}

}  // namespace

FrobeniusModel make_frobenius_model(const RootDatum& rd, long p) {
  (void)rd;
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  FrobeniusModel fm;
  fm.p = p;
  return fm;
}

Character frobenius_twist(const RootDatum& rd, const FrobeniusModel& fm, const Character& lambda) {
  return scale(Rat(fm.p), apply_galois(rd, lambda));
}

Character frobenius_untwist(const RootDatum& rd, const FrobeniusModel& fm, const Character& chi) {
  return scale(Rat(1, fm.p), Character(rd.galois_inv.apply(chi.coords)));
}

Character h_map(const RootDatum& rd, const FrobeniusModel& fm, const WeylElement& w,
                const Character& lambda) {
  return sub(lambda, frobenius_twist(rd, fm, apply(w, lambda)));
}

int twisted_order(const RootDatum& rd, const WeylElement& w) {
  // w^(i+1) = phi^i(w) w^(i); the sequence returns to e within |W x <F>| steps.
  WeylElement acc = identity_element(rd);
  WeylElement tw = w;
  const std::uint64_t cap = 4 * rd.classical_weyl_order() * static_cast<std::uint64_t>(rd.galois_order) + 8;
  for (std::uint64_t i = 0;; ++i) {
    if (i > cap) throw std::logic_error("twisted order iteration does not terminate");
    acc = compose(rd, tw, acc);
    if (acc.is_identity()) return static_cast<int>(i) + 1;
    tw = frobenius_on_weyl(rd, tw);
  }
}

Character h_inverse_closed_form(const RootDatum& rd, const FrobeniusModel& fm,
                                const WeylElement& w, const Character& chi) {
  // With R a common multiple of the twisted order of w and the order of F,
  //   sum_{i<R} (w^(i) chi) o phi^i = (1 - p^R) h_w^{-1}(chi).
  const int r = twisted_order(rd, w);
  const int d = rd.galois_order;
  const int R = r / std::gcd(r, d) * d;
  std::vector<Rat> sum(rd.rank, Rat(0));
  WeylElement acc = identity_element(rd);  // w^(i)
  WeylElement tw = w;                      // phi^i(w)
  IntMat fpow = IntMat::identity(rd.rank); // F^i
  mpz_class ppow = 1;                      // p^i
  for (int i = 0; i < R; ++i) {
    Character term(fpow.apply(acc.mat.apply(chi.coords)));
    Rat s(ppow);
    for (int k = 0; k < rd.rank; ++k) sum[k] += s * term.coords[k];
    acc = compose(rd, tw, acc);
    tw = frobenius_on_weyl(rd, tw);
    fpow = rd.galois.mul(fpow);
    ppow *= fm.p;
  }
  mpz_class pR = 1;
  for (int i = 0; i < R; ++i) pR *= fm.p;
  Rat denom = Rat(1) - Rat(pR);
  for (Rat& q : sum) q /= denom;
  return Character(std::move(sum));
}

Character h_inverse(const RootDatum& rd, const FrobeniusModel& fm, const WeylElement& w,
                    const Character& chi) {
  // (Id - p F M_w) lambda = chi, solved exactly.
  const int n = rd.rank;
  IntMat b = rd.galois.mul(w.mat);
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m[i][j] = Rat(-fm.p) * Rat(static_cast<long>(b.at(i, j)));
      if (i == j) m[i][j] += 1;
    }
  Character lambda(solve_square(std::move(m), chi.coords));
  // Redundant route: the twisted-sum closed form must agree exactly.
  if (!(h_inverse_closed_form(rd, fm, w, chi) == lambda))
    throw std::logic_error("h_inverse: closed form disagrees with the linear solve");
  return lambda;
}

std::vector<int> chevalley_support(const RootDatum& rd, const WeylElement& w) {
  std::vector<int> all(rd.ss_rank);
  for (int i = 0; i < rd.ss_rank; ++i) all[i] = i;
  WeylElement w0 = longest_element(rd, all);
  std::vector<int> support;
  for (int a = 0; a < static_cast<int>(rd.positive_roots.size()); ++a) {
    // s_alpha for the (possibly non-simple) root alpha
    IntMat s = IntMat::identity(rd.rank);
    const auto& alpha = rd.pos_root_vecs[a];
    const auto& coalpha = rd.pos_coroot_vecs[a];
    for (int col = 0; col < rd.rank; ++col)
      for (int row = 0; row < rd.rank; ++row) s.at(row, col) -= coalpha[col] * alpha[row];
    IntMat target = w.mat.mul(w0.mat).mul(s).mul(w0.mat);
    if (length_of(rd, target) == w.length - 1) support.push_back(a);
  }
  return support;
}

ChevalleyDivisor chevalley_divisor(const RootDatum& rd, const WeylElement& w,
                                   const Character& lambda) {
  ChevalleyDivisor div;
  div.w = w;
  std::vector<int> all(rd.ss_rank);
  for (int i = 0; i < rd.ss_rank; ++i) all[i] = i;
  WeylElement w0 = longest_element(rd, all);
  WeylElement ww0 = compose(rd, w, w0);
  std::vector<std::vector<std::int64_t>> seen_targets;
  for (int a : chevalley_support(rd, w)) {
    ChevalleyEntry e;
    e.root_index = a;
    WeylElement s_alpha;
    {
      IntMat s = IntMat::identity(rd.rank);
      const auto& alpha = rd.pos_root_vecs[a];
      const auto& coalpha = rd.pos_coroot_vecs[a];
      for (int col = 0; col < rd.rank; ++col)
        for (int row = 0; row < rd.rank; ++row) s.at(row, col) -= coalpha[col] * alpha[row];
      s_alpha.mat = s;
      s_alpha.inv = s;
      s_alpha.length = length_of(rd, s);
    }
    e.target = compose(rd, compose(rd, ww0, s_alpha), w0);
    e.coeff = pair(lambda, apply_cochar(ww0, rd.positive_coroots[a]));
    std::vector<std::int64_t> key = e.target.mat.apply(rd.two_rho_vec);
    for (const auto& k : seen_targets)
      if (k == key) throw std::logic_error("duplicate Chevalley divisor target");
    seen_targets.push_back(key);
    div.entries.push_back(std::move(e));
  }
  return div;
}

bool sections_on_closure(const RootDatum& rd, const WeylElement& w, const Character& lambda) {
  for (const auto& e : chevalley_divisor(rd, w, lambda).entries)
    if (e.coeff < 0) return false;
  return true;
}

std::string verdict_string(Verdict v) {
  switch (v) {
    case Verdict::Exists: return "exists";
    case Verdict::NoPromise: return "no-promise";
    case Verdict::InternalInconsistency: return "INTERNAL-INCONSISTENCY";
  }
  throw std::logic_error("bad verdict");
}

HasseCertificate hasse_certificate(const ZipDatum& zd, const FrobeniusModel& fm,
                                   const Character& chi, const WeylElement& stratum_w) {
  const RootDatum& rd = zd.rd;
  if (!is_min_coset_rep(rd, zd.I, CosetSide::Left, stratum_w))
    throw std::invalid_argument("stratum label is not in {}^I W");
  if (!is_levi_character(zd, chi))
    throw std::invalid_argument("certificate expects a character of L");

  HasseCertificate cert;
  cert.chi = chi;
  cert.p = fm.p;
  cert.stratum_w = stratum_w;
  cert.cominimal = cominimal_partner(zd, stratum_w);

  WeylElement h_elt =
      compose(rd, frobenius_on_weyl(rd, zd.w1), inverse(cert.cominimal));
  Character lambda0 = h_inverse(rd, fm, h_elt, chi);
  cert.N = lcm_of_denominators(lambda0.coords);
  cert.lambda = scale(Rat(cert.N), lambda0);
  cert.divisor = chevalley_divisor(rd, cert.cominimal, cert.lambda);

  cert.ample = is_ample(zd, chi);
  cert.orbitally_p_close = is_orbitally_p_close(rd, chi, fm.p);
  cert.all_coeffs_positive = true;
  for (const auto& e : cert.divisor.entries)
    if (!(e.coeff > 0)) cert.all_coeffs_positive = false;

  if (cert.all_coeffs_positive)
    cert.verdict = Verdict::Exists;
  else if (cert.ample && cert.orbitally_p_close)
    cert.verdict = Verdict::InternalInconsistency;
  else
    cert.verdict = Verdict::NoPromise;
  return cert;
}

std::optional<long> weight_shift_search(const ZipDatum& zd, const Character& eta,
                                        const Character& eta_omega, const Character& chi_eta,
                                        long k, long a_max) {
  if (a_max < 0) throw std::invalid_argument("a_max must be nonnegative");
  const RootDatum& rd = zd.rd;
  WeylElement w0c = zd.w0L;
  for (long a = 0; a <= a_max; ++a) {
    Character inner = add(eta, add(scale(Rat(a), eta_omega), scale(Rat(k), chi_eta)));
    Character probe = negate(apply(w0c, inner));
    if (is_dominant(rd, probe) && is_regular(rd, probe)) return a;
  }
  return std::nullopt;
}

}  // namespace zipstrata
