#include "zipstrata/zipdata.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

namespace zipstrata {

namespace {

// Locate the index in Delta of a given simple-root vector; -1 if absent.
int simple_index_of(const RootDatum& rd, const std::vector<std::int64_t>& v) {
  for (int j = 0; j < rd.ss_rank; ++j)
    if (rd.simple_root_vecs[j] == v) return j;
  return -1;
}

std::vector<int> all_indices(const RootDatum& rd) {
  std::vector<int> v(rd.ss_rank);
  for (int i = 0; i < rd.ss_rank; ++i) v[i] = i;
  return v;
}

void sort_by_length_then_word(const RootDatum& rd, std::vector<WeylElement>& v) {
  std::vector<std::pair<std::vector<int>, size_t>> keys(v.size());
  for (size_t i = 0; i < v.size(); ++i) keys[i] = {reduced_word(rd, v[i]), i};
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<WeylElement> out;
  out.reserve(v.size());
  for (auto& k : keys) out.push_back(v[k.second]);
  v = std::move(out);
}

}  // namespace

ZipDatum make_zip_datum(const RootDatum& rd, const Cocharacter& mu) {
  if (mu.rank() != rd.rank) throw std::invalid_argument("mu has the wrong rank");
  ZipDatum zd;
  zd.rd = rd;
  zd.mu = mu;
  for (int i = 0; i < rd.ss_rank; ++i) {
    Rat p = pair(rd.simple_roots[i], mu);
    if (p < 0) throw std::invalid_argument("mu is not Delta-dominant");
    if (p == 0) zd.K.push_back(i);
  }

  const RootDatum& d = zd.rd;
  zd.w0 = longest_element(d, all_indices(d));
  // I = -w0(K), J = phi(K) = F^{-1}(K); both are again subsets of Delta.
  for (int k : zd.K) {
    std::vector<std::int64_t> img = zd.w0.mat.apply(d.simple_root_vecs[k]);
    for (auto& x : img) x = -x;
    int j = simple_index_of(d, img);
    if (j < 0) throw std::logic_error("-w0 does not permute Delta");
    zd.I.push_back(j);
  }
  for (int k : zd.K) {
    std::vector<std::int64_t> img = d.galois_inv.apply(d.simple_root_vecs[k]);
    int j = simple_index_of(d, img);
    if (j < 0) throw std::logic_error("Galois action does not permute Delta");
    zd.J.push_back(j);
  }
  std::sort(zd.I.begin(), zd.I.end());
  std::sort(zd.J.begin(), zd.J.end());

  zd.w0I = longest_element(d, zd.I);
  zd.w1 = compose(d, zd.w0, zd.w0I);
  zd.w0L = longest_element(d, zd.K);
  zd.w0M = longest_element(d, zd.J);

  // Construction-time consistency: w0L = w0 w0I w0 and w0M = phi(w0L).
  if (!(zd.w0L == compose(d, compose(d, zd.w0, zd.w0I), zd.w0)))
    throw std::logic_error("w0L != w0 w0I w0");
  if (!(zd.w0M == frobenius_on_weyl(d, zd.w0L)))
    throw std::logic_error("w0M != phi(w0L)");
  return zd;
}

std::vector<WeylElement> zip_stratum_labels(const ZipDatum& zd, std::uint64_t max_size) {
  std::vector<WeylElement> iw = min_coset_reps(zd.rd, zd.I, CosetSide::Left);
  if (iw.size() > max_size) throw BudgetExceeded("{}^I W exceeds the declared budget");
  return iw;
}

WeylElement involution_on_strata(const ZipDatum& zd, const WeylElement& w) {
  return compose(zd.rd, compose(zd.rd, zd.w0I, w), zd.w0);
}

WeylElement minimal_partner(const ZipDatum& zd, const WeylElement& w) {
  return compose(zd.rd, compose(zd.rd, zd.w0, w), zd.w0);
}

namespace {

// Streams the elements of W_K level by level (by length), without
// materializing the whole subgroup. fn returns false to stop early.
void stream_levi_elements(const RootDatum& rd, const std::vector<int>& K,
                          const std::function<bool(const WeylElement&)>& fn) {
  std::vector<WeylElement> gens;
  for (int i = 0; i < rd.ss_rank; ++i) gens.push_back(reflection(rd, i));
  std::unordered_set<std::vector<std::int64_t>, IntVecHash> seen;
  std::vector<WeylElement> frontier{identity_element(rd)};
  seen.insert(frontier[0].mat.apply(rd.two_rho_vec));
  if (!fn(frontier[0])) return;
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& w : frontier) {
      for (int i : K) {
        if (is_right_descent(rd, w, i)) continue;
        WeylElement w2 = compose(rd, w, gens[i]);
        if (seen.insert(w2.mat.apply(rd.two_rho_vec)).second) {
          if (!fn(w2)) return;
          next.push_back(w2);
        }
      }
    }
    frontier = std::move(next);
  }
}

}  // namespace

std::vector<WeylElement> resolve_dual_labels(const ZipDatum& zd,
                                             const std::vector<WeylElement>& strata) {
  // The E-orbit of w1 u also carries a label v in W^J through the dual
  // parametrization w -> E.(w1 w). The zip group moves x -> y x phi(y)^{-1},
  // y in W_L = W_K, stay inside one orbit, so the first v in W^J reached this
  // way is the dual label (the parametrizations are injective).
  const RootDatum& rd = zd.rd;
  std::vector<WeylElement> result(strata.size());
  std::vector<bool> done(strata.size(), false);
  size_t remaining = strata.size();
  WeylElement w1_inv = inverse(zd.w1);
  std::vector<IntMat> shifted, shifted_inv;  // w1 u per stratum
  for (const auto& u : strata) {
    shifted.push_back(zd.w1.mat.mul(u.mat));
    shifted_inv.push_back(u.inv.mul(zd.w1.inv));
  }

  stream_levi_elements(rd, zd.K, [&](const WeylElement& y) {
    WeylElement phi_y = frobenius_on_weyl(rd, y);
    IntMat left = w1_inv.mat.mul(y.mat);        // w1^{-1} y
    IntMat left_inv = y.inv.mul(zd.w1.mat);
    const IntMat& right = phi_y.inv;            // phi(y)^{-1}
    const IntMat& right_inv = phi_y.mat;
    for (size_t i = 0; i < strata.size(); ++i) {
      if (done[i]) continue;
      IntMat vmat = left.mul(shifted[i]).mul(right);
      bool member = true;
      for (int j : zd.J)
        if (rd.root_sign(vmat.apply(rd.simple_root_vecs[j])) < 0) { member = false; break; }
      if (!member) continue;
      WeylElement v;
      v.mat = std::move(vmat);
      v.inv = right_inv.mul(shifted_inv[i]).mul(left_inv);
      v.length = length_of(rd, v.mat);
      if (v.length != strata[i].length)
        throw std::logic_error("dual label with mismatched length; orbit dimensions disagree");
      result[i] = std::move(v);
      done[i] = true;
      --remaining;
    }
    return remaining > 0;
  });
  if (remaining > 0)
    throw std::logic_error(
        "dual stratum label not reachable by Levi moves; matching unresolved");
  return result;
}

WeylElement cominimal_partner(const ZipDatum& zd, const WeylElement& w) {
  std::vector<WeylElement> v = resolve_dual_labels(zd, {w});
  return compose(zd.rd, compose(zd.rd, zd.w0, v[0]), zd.w0);
}

std::vector<StratumRecord> strata_table(const ZipDatum& zd, std::uint64_t max_size) {
  const RootDatum& d = zd.rd;
  std::vector<WeylElement> iw = zip_stratum_labels(zd, max_size);
  std::vector<WeylElement> duals = resolve_dual_labels(zd, iw);
  std::vector<StratumRecord> table;
  table.reserve(iw.size());
  int zero_count = 0, max_count = 0;
  const int dmax = zd.max_stratum_length();
  for (size_t idx = 0; idx < iw.size(); ++idx) {
    const WeylElement& w = iw[idx];
    StratumRecord rec;
    rec.w = w;
    rec.length = w.length;
    rec.dimension = w.length;
    rec.minimal_partner = minimal_partner(zd, w);
    rec.cominimal_partner = compose(d, compose(d, zd.w0, duals[idx]), zd.w0);
    rec.involution_image = involution_on_strata(zd, w);

    if (!is_min_coset_rep(d, zd.I, CosetSide::Left, rec.involution_image))
      throw std::logic_error("involution image left {}^I W");
    // minimal partner lies in w0 {}^I W w0, cominimal in w0 W^J w0
    if (!is_min_coset_rep(d, zd.I, CosetSide::Left,
                          compose(d, compose(d, zd.w0, rec.minimal_partner), zd.w0)))
      throw std::logic_error("minimal partner outside w0 {}^I W w0");
    if (!is_min_coset_rep(d, zd.J, CosetSide::Right,
                          compose(d, compose(d, zd.w0, rec.cominimal_partner), zd.w0)))
      throw std::logic_error("cominimal partner outside w0 W^J w0");
    if (rec.minimal_partner.length != rec.length || rec.cominimal_partner.length != rec.length)
      throw std::logic_error("partner length mismatch");

    if (rec.length == 0) ++zero_count;
    if (rec.length == dmax) ++max_count;
    table.push_back(std::move(rec));
  }
  if (zero_count != 1 || max_count != 1)
    throw std::logic_error("stratum table endpoints are not unique");
  return table;
}

std::vector<WeylElement> minimal_elements(const ZipDatum& zd) {
  std::vector<WeylElement> out;
  for (const auto& w : zip_stratum_labels(zd)) out.push_back(minimal_partner(zd, w));
  sort_by_length_then_word(zd.rd, out);
  if (!out.front().is_identity()) throw std::logic_error("e is not the shortest minimal element");
  if (!(out.back() == zd.w1)) throw std::logic_error("w1 is not the longest minimal element");
  return out;
}

std::vector<WeylElement> cominimal_elements(const ZipDatum& zd) {
  std::vector<WeylElement> labels = zip_stratum_labels(zd);
  std::vector<WeylElement> out;
  for (const auto& v : resolve_dual_labels(zd, labels))
    out.push_back(compose(zd.rd, compose(zd.rd, zd.w0, v), zd.w0));
  sort_by_length_then_word(zd.rd, out);
  if (!out.front().is_identity())
    throw std::logic_error("e is not the shortest cominimal element");
  if (!(out.back() == frobenius_on_weyl(zd.rd, zd.w1)))
    throw std::logic_error("phi(w1) is not the longest cominimal element");
  return out;
}

LengthStratum length_strata(const ZipDatum& zd, int j) {
  if (j < 0 || j > zd.max_stratum_length())
    throw std::invalid_argument("length stratum index out of range");
  LengthStratum ls;
  for (const auto& w : zip_stratum_labels(zd)) {
    if (w.length == j) ls.exact.push_back(w);
    if (w.length <= j) ls.closed.push_back(w);
  }
  return ls;
}

}  // namespace zipstrata
