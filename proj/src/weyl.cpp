#include "zipstrata/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace zipstrata {

namespace {

using IVec = std::vector<std::int64_t>;

IVec key_of(const RootDatum& rd, const IntMat& mat) { return mat.apply(rd.two_rho_vec); }

// w * s_i with the length tracked through the descent test (one root image
// instead of a full inversion count).
WeylElement extend_right(const RootDatum& rd, const WeylElement& w, const WeylElement& si,
                         int i) {
  WeylElement r;
  r.mat = w.mat.mul(si.mat);
  r.inv = si.mat.mul(w.inv);
  r.length = w.length + (rd.root_sign(w.mat.apply(rd.simple_root_vecs[i])) < 0 ? -1 : 1);
  return r;
}

WeylElement extend_left(const RootDatum& rd, const WeylElement& si, int i,
                        const WeylElement& w) {
  WeylElement r;
  r.mat = si.mat.mul(w.mat);
  r.inv = w.inv.mul(si.mat);
  r.length = w.length + (rd.root_sign(w.inv.apply(rd.simple_root_vecs[i])) < 0 ? -1 : 1);
  return r;
}

IntMat reflection_matrix(const RootDatum& rd, int i) {
  const int n = rd.rank;
  IntMat m = IntMat::identity(n);
  const IVec& alpha = rd.simple_root_vecs[i];
  const IVec& coalpha = rd.simple_coroot_vecs[i];
  // s_i(e_k) = e_k - <e_k, alpha^vee> alpha
  for (int col = 0; col < n; ++col)
    for (int row = 0; row < n; ++row) m.at(row, col) -= coalpha[col] * alpha[row];
  return m;
}

}  // namespace

WeylElement identity_element(const RootDatum& rd) {
  WeylElement w;
  w.mat = IntMat::identity(rd.rank);
  w.inv = w.mat;
  w.length = 0;
  return w;
}

WeylElement reflection(const RootDatum& rd, int i) {
  if (i < 0 || i >= rd.ss_rank) throw std::invalid_argument("simple reflection index out of range");
  WeylElement w;
  w.mat = reflection_matrix(rd, i);
  w.inv = w.mat;
  w.length = 1;
  return w;
}

int length_of(const RootDatum& rd, const IntMat& mat) {
  int len = 0;
  for (const auto& rv : rd.pos_root_vecs) {
    IVec img = mat.apply(rv);
    int s = rd.root_sign(img);
    if (s == 0) throw std::invalid_argument("matrix does not permute the roots");
    if (s < 0) ++len;
  }
  return len;
}

WeylElement compose(const RootDatum& rd, const WeylElement& u, const WeylElement& v) {
  WeylElement w;
  w.mat = u.mat.mul(v.mat);
  w.inv = v.inv.mul(u.inv);
  w.length = length_of(rd, w.mat);
  return w;
}

WeylElement inverse(const WeylElement& w) {
  WeylElement r;
  r.mat = w.inv;
  r.inv = w.mat;
  r.length = w.length;
  return r;
}

Character apply(const WeylElement& w, const Character& chi) {
  return Character(w.mat.apply(chi.coords));
}

Cocharacter apply_cochar(const WeylElement& w, const Cocharacter& c) {
  return Cocharacter(w.inv.transpose().apply(c.coords));
}

bool is_right_descent(const RootDatum& rd, const WeylElement& w, int i) {
  // l(w s_i) < l(w) iff w(alpha_i) < 0
  return rd.root_sign(w.mat.apply(rd.simple_root_vecs[i])) < 0;
}

bool is_left_descent(const RootDatum& rd, const WeylElement& w, int i) {
  // l(s_i w) < l(w) iff w^{-1}(alpha_i) < 0
  return rd.root_sign(w.inv.apply(rd.simple_root_vecs[i])) < 0;
}

std::vector<int> reduced_word(const RootDatum& rd, const WeylElement& w) {
  std::vector<int> word;
  WeylElement cur = w;
  while (cur.length > 0) {
    int d = -1;
    for (int i = 0; i < rd.ss_rank; ++i)
      if (is_left_descent(rd, cur, i)) { d = i; break; }
    if (d < 0) throw std::logic_error("nonidentity element with no descent");
    word.push_back(d);
    cur = extend_left(rd, reflection(rd, d), d, cur);
  }
  return word;
}

WeylElement from_word(const RootDatum& rd, const std::vector<int>& word) {
  WeylElement w = identity_element(rd);
  for (int i : word) w = compose(rd, w, reflection(rd, i));
  return w;
}

WeylElement longest_element(const RootDatum& rd, const std::vector<int>& I) {
  WeylElement w = identity_element(rd);
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (int i : I) {
      if (!is_right_descent(rd, w, i)) {
        w = compose(rd, w, reflection(rd, i));
        progressed = true;
      }
    }
  }
  return w;
}

bool bruhat_leq(const RootDatum& rd, const WeylElement& u_in, const WeylElement& w_in) {
  if (u_in.mat.n != w_in.mat.n) throw std::invalid_argument("elements of different data");
  // Lifting property along a left descent of w: with sw < w,
  //   su < u  =>  (u <= w iff su <= sw);   su > u  =>  (u <= w iff u <= sw).
  WeylElement u = u_in, w = w_in;
  while (w.length > 0) {
    if (u.length > w.length) return false;
    int d = -1;
    for (int i = 0; i < rd.ss_rank; ++i)
      if (is_left_descent(rd, w, i)) { d = i; break; }
    WeylElement s = reflection(rd, d);
    bool u_desc = is_left_descent(rd, u, d);
    w = extend_left(rd, s, d, w);
    if (u_desc) u = extend_left(rd, s, d, u);
  }
  return u.is_identity();
}

bool is_min_coset_rep(const RootDatum& rd, const std::vector<int>& I, CosetSide side,
                      const WeylElement& w) {
  for (int i : I) {
    if (side == CosetSide::Left) {
      // minimal in W_I w: w^{-1}(alpha_i) > 0 for all i in I
      if (rd.root_sign(w.inv.apply(rd.simple_root_vecs[i])) < 0) return false;
    } else {
      // minimal in w W_I: w(alpha_i) > 0 for all i in I
      if (rd.root_sign(w.mat.apply(rd.simple_root_vecs[i])) < 0) return false;
    }
  }
  return true;
}

namespace {

void sort_by_length_then_word(const RootDatum& rd, std::vector<WeylElement>& v) {
  std::vector<std::pair<std::vector<int>, size_t>> keys(v.size());
  for (size_t i = 0; i < v.size(); ++i) keys[i] = {reduced_word(rd, v[i]), i};
  std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<WeylElement> out;
  out.reserve(v.size());
  for (auto& k : keys) out.push_back(v[k.second]);
  v = std::move(out);
}

// Cheap deterministic order for full-group enumerations, where no reduced-word
// order is promised.
void sort_by_length_then_key(const RootDatum& rd, std::vector<WeylElement>& v) {
  std::vector<std::pair<IVec, size_t>> keys(v.size());
  for (size_t i = 0; i < v.size(); ++i) keys[i] = {key_of(rd, v[i].mat), i};
  std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
    int la = v[a.second].length, lb = v[b.second].length;
    if (la != lb) return la < lb;
    return a.first < b.first;
  });
  std::vector<WeylElement> out;
  out.reserve(v.size());
  for (auto& k : keys) out.push_back(v[k.second]);
  v = std::move(out);
}

}  // namespace

std::vector<WeylElement> min_coset_reps(const RootDatum& rd, const std::vector<int>& I,
                                        CosetSide side) {
  // Grow by length: the one-letter truncation of a minimal representative is
  // again one, so every representative of length k+1 extends one of length k.
  std::vector<WeylElement> gens;
  for (int i = 0; i < rd.ss_rank; ++i) gens.push_back(reflection(rd, i));
  std::vector<WeylElement> all;
  std::unordered_set<IVec, IntVecHash> seen;
  std::vector<WeylElement> frontier{identity_element(rd)};
  seen.insert(key_of(rd, frontier[0].mat));
  all.push_back(frontier[0]);
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& w : frontier) {
      for (int i = 0; i < rd.ss_rank; ++i) {
        WeylElement w2 = side == CosetSide::Left ? extend_right(rd, w, gens[i], i)
                                                 : extend_left(rd, gens[i], i, w);
        if (w2.length != w.length + 1) continue;
        if (!is_min_coset_rep(rd, I, side, w2)) continue;
        IVec k = key_of(rd, w2.mat);
        if (seen.insert(k).second) {
          next.push_back(w2);
          all.push_back(w2);
        }
      }
    }
    frontier = std::move(next);
  }
  sort_by_length_then_word(rd, all);
  return all;
}

std::vector<WeylElement> enumerate_weyl_subgroup(const RootDatum& rd, const std::vector<int>& I,
                                                 std::uint64_t max_order) {
  std::vector<WeylElement> gens;
  for (int i = 0; i < rd.ss_rank; ++i) gens.push_back(reflection(rd, i));
  std::vector<WeylElement> all;
  std::unordered_set<IVec, IntVecHash> seen;
  std::vector<WeylElement> frontier{identity_element(rd)};
  seen.insert(key_of(rd, frontier[0].mat));
  all.push_back(frontier[0]);
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& w : frontier) {
      for (int i : I) {
        WeylElement w2 = extend_right(rd, w, gens[i], i);
        IVec k = key_of(rd, w2.mat);
        if (seen.insert(k).second) {
          if (all.size() + next.size() + 1 > max_order)
            throw BudgetExceeded("Weyl enumeration exceeds the declared cap");
          next.push_back(w2);
          all.push_back(w2);
        }
      }
    }
    frontier = std::move(next);
  }
  sort_by_length_then_key(rd, all);
  return all;
}

std::vector<WeylElement> enumerate_weyl(const RootDatum& rd, std::uint64_t max_order) {
  if (rd.classical_weyl_order() > max_order)
    throw BudgetExceeded("Weyl group order exceeds the declared cap");
  std::vector<int> all_indices(rd.ss_rank);
  for (int i = 0; i < rd.ss_rank; ++i) all_indices[i] = i;
  return enumerate_weyl_subgroup(rd, all_indices, max_order);
}

void for_each_weyl_length(const RootDatum& rd, const std::function<void(int)>& fn) {
  if (rd.copies != 1)
    throw std::invalid_argument("length streaming is implemented for a single factor");
  const int n = rd.series_rank;
  std::vector<int> p(static_cast<size_t>(rd.series == Series::A ? n + 1 : n));
  for (size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);

  if (rd.series == Series::A) {
    do {
      int inv = 0;
      for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
          if (p[i] > p[j]) ++inv;
      fn(inv);
    } while (std::next_permutation(p.begin(), p.end()));
    return;
  }

  const bool type_d = rd.series == Series::D;
  // Per-row counts G_i = #{j > i : p_i > p_j}; for a sign vector s,
  //   l = sum_i [ s_i = +1 ? G_i : 2(n-1-i) - G_i + diag ],  diag = 1 for B/C.
  std::vector<int> g(n);
  do {
    for (int i = 0; i < n; ++i) {
      int c = 0;
      for (int j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++c;
      g[i] = c;
    }
    const std::uint32_t masks = 1u << n;
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
      if (type_d && (__builtin_popcount(mask) & 1)) continue;
      int len = 0;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i))
          len += 2 * (n - 1 - i) - g[i] + (type_d ? 0 : 1);
        else
          len += g[i];
      }
      fn(len);
    }
  } while (std::next_permutation(p.begin(), p.end()));
}

WeylElement frobenius_on_weyl(const RootDatum& rd, const WeylElement& w) {
  WeylElement r;
  r.mat = rd.galois_inv.mul(w.mat).mul(rd.galois);
  r.inv = rd.galois_inv.mul(w.inv).mul(rd.galois);
  r.length = w.length;  // F preserves Phi^+, so conjugation preserves length
  return r;
}

std::vector<std::vector<Cocharacter>> coroot_orbits(const RootDatum& rd) {
  std::set<IVec> remaining;
  for (const auto& cv : rd.pos_coroot_vecs) {
    remaining.insert(cv);
    IVec neg = cv;
    for (auto& x : neg) x = -x;
    remaining.insert(neg);
  }
  std::vector<std::vector<Cocharacter>> orbits;
  while (!remaining.empty()) {
    IVec seed = *remaining.begin();
    std::set<IVec> orbit;
    std::vector<IVec> frontier{seed};
    orbit.insert(seed);
    while (!frontier.empty()) {
      IVec v = frontier.back();
      frontier.pop_back();
      for (int i = 0; i < rd.ss_rank; ++i) {
        IVec img(v.size());
        std::int64_t pr = 0;
        for (size_t k = 0; k < v.size(); ++k) pr += rd.simple_root_vecs[i][k] * v[k];
        for (size_t k = 0; k < v.size(); ++k)
          img[k] = v[k] - pr * rd.simple_coroot_vecs[i][k];
        if (orbit.insert(img).second) frontier.push_back(img);
      }
      IVec fimg = rd.galois_cochar.apply(v);
      if (orbit.insert(fimg).second) frontier.push_back(fimg);
    }
    std::vector<Cocharacter> o;
    for (const auto& v : orbit) {
      o.push_back(cochar_from_int_vec(v));
      remaining.erase(v);
    }
    orbits.push_back(std::move(o));
  }
  return orbits;
}

}  // namespace zipstrata
