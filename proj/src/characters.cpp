#include "zipstrata/characters.hpp"

#include "zipstrata/hasse.hpp"

#include <algorithm>

namespace zipstrata {

bool is_dominant(const RootDatum& rd, const Character& chi, const std::vector<int>& subset) {
  for (int i : subset)
    if (pair(chi, rd.simple_coroots[i]) < 0) return false;
  return true;
}

bool is_dominant(const RootDatum& rd, const Character& chi) {
  std::vector<int> all(rd.ss_rank);
  for (int i = 0; i < rd.ss_rank; ++i) all[i] = i;
  return is_dominant(rd, chi, all);
}

bool is_delta_regular(const RootDatum& rd, const Character& chi, const Rat& delta,
                      const std::vector<Cocharacter>& psi) {
  (void)rd;
  for (const auto& c : psi) {
    Rat p = pair(chi, c);
    if (p < 0) p = -p;
    if (!(p > delta)) return false;
  }
  return true;
}

bool is_regular(const RootDatum& rd, const Character& chi, const std::vector<Cocharacter>& psi) {
  return is_delta_regular(rd, chi, Rat(0), psi);
}

bool is_regular(const RootDatum& rd, const Character& chi) {
  return is_regular(rd, chi, rd.positive_coroots);
}

bool is_levi_character(const ZipDatum& zd, const Character& chi) {
  for (int k : zd.K)
    if (pair(chi, zd.rd.simple_coroots[k]) != 0) return false;
  return true;
}

bool is_ample(const ZipDatum& zd, const Character& chi) {
  if (!is_levi_character(zd, chi))
    throw std::invalid_argument("ample test expects a character of L");
  // Delta \ w0 I w0 = Delta \ K under I = -w0(K).
  for (int i = 0; i < zd.rd.ss_rank; ++i) {
    if (std::find(zd.K.begin(), zd.K.end(), i) != zd.K.end()) continue;
    if (!(pair(chi, zd.rd.simple_coroots[i]) < 0)) return false;
  }
  return true;
}

std::vector<std::vector<Rat>> orbit_abs_values(const RootDatum& rd, const Character& chi) {
  std::vector<std::vector<Rat>> out;
  for (const auto& orbit : coroot_orbits(rd)) {
    std::vector<Rat> vals;
    for (const auto& c : orbit) {
      Rat p = pair(chi, c);
      if (p < 0) p = -p;
      vals.push_back(p);
    }
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    out.push_back(std::move(vals));
  }
  return out;
}

namespace {

// Largest ratio max|values| / min nonzero |values| over the orbits; empty when
// chi pairs to zero with every coroot.
std::optional<Rat> max_orbit_ratio(const RootDatum& rd, const Character& chi) {
  std::optional<Rat> worst;
  for (const auto& vals : orbit_abs_values(rd, chi)) {
    Rat min_nonzero(0), max_val(0);
    bool have = false;
    for (const Rat& v : vals) {
      if (v == 0) continue;
      if (!have || v < min_nonzero) min_nonzero = v;
      if (!have || v > max_val) max_val = v;
      have = true;
    }
    if (!have) continue;
    Rat ratio = max_val / min_nonzero;
    if (!worst || ratio > *worst) worst = ratio;
  }
  return worst;
}

}  // namespace

bool is_orbitally_p_close(const RootDatum& rd, const Character& chi, long p) {
  std::optional<Rat> ratio = max_orbit_ratio(rd, chi);
  if (!ratio) return true;  // no nonzero pairings, nothing to constrain
  return *ratio <= Rat(p - 1);
}

MinPClose min_p_close(const RootDatum& rd, const Character& chi) {
  MinPClose r;
  std::optional<Rat> ratio = max_orbit_ratio(rd, chi);
  if (!ratio || *ratio <= 1) {
    r.all_p = true;
    r.bound = 2;
    return r;
  }
  // smallest integer b with b - 1 >= ratio, i.e. 1 + ceil(ratio)
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), ratio->get_num().get_mpz_t(), ratio->get_den().get_mpz_t());
  r.all_p = false;
  r.bound = q.get_si() + 1;
  return r;
}

bool is_quasi_constant(const RootDatum& rd, const Character& chi) {
  for (const auto& vals : orbit_abs_values(rd, chi)) {
    if (vals.size() == 1) continue;
    if (vals.size() == 2 && vals[0] == 0) continue;
    return false;
  }
  return true;
}

int cohomology_degree(const RootDatum& rd, const ChamberSpec& chamber) {
  int cd = 0;
  for (const auto& c : rd.positive_coroots) {
    Rat p = pair(chamber.witness, c);
    if (p == 0) throw std::invalid_argument("chamber witness is not regular");
    if (p < 0) ++cd;
  }
  return cd;
}

ConeFlags cone_tests(const ZipDatum& zd, const Character& chi, long p) {
  ConeFlags f;
  // chi lies in C iff w0 w0I w0 chi is regular anti-dominant. (This is the
  // characterization the inclusion A_p subset C_++ actually runs on; the naive
  // simple-coroot inequality system is strictly weaker off the Levi.)
  Character twisted = apply(zd.w0L, chi);
  f.in_C = true;
  for (const auto& cv : zd.rd.simple_coroots)
    if (!(pair(twisted, cv) < 0)) { f.in_C = false; break; }
  f.in_A_p = f.in_C && is_orbitally_p_close(zd.rd, chi, p);
  FrobeniusModel fm = make_frobenius_model(zd.rd, p);
  f.in_C_plusplus = is_dominant(zd.rd, h_inverse(zd.rd, fm, zd.w0M, chi));
  return f;
}

}  // namespace zipstrata
