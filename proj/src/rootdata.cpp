#include "zipstrata/rootdata.hpp"

#include "zipstrata/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace zipstrata {

Character add(const Character& a, const Character& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("character rank mismatch");
  Character r = a;
  for (int i = 0; i < a.rank(); ++i) r.coords[i] += b.coords[i];
  return r;
}

Character sub(const Character& a, const Character& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("character rank mismatch");
  Character r = a;
  for (int i = 0; i < a.rank(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

Character scale(const Rat& k, const Character& a) {
  Character r = a;
  for (Rat& q : r.coords) q *= k;
  return r;
}

Character negate(const Character& a) { return scale(Rat(-1), a); }

Rat pair(const Character& chi, const Cocharacter& c) {
  if (chi.rank() != c.rank()) throw std::invalid_argument("pairing rank mismatch");
  Rat s = 0;
  for (int i = 0; i < chi.rank(); ++i) s += chi.coords[i] * c.coords[i];
  return s;
}

char series_letter(Series s) {
  switch (s) {
    case Series::A: return 'A';
    case Series::B: return 'B';
    case Series::C: return 'C';
    case Series::D: return 'D';
  }
  throw std::logic_error("bad series");
}

Series series_from_letter(char c) {
  switch (c) {
    case 'A': return Series::A;
    case 'B': return Series::B;
    case 'C': return Series::C;
    case 'D': return Series::D;
    default: throw std::invalid_argument(std::string("unknown series '") + c + "'");
  }
}

std::vector<std::int64_t> to_int_vec(const Character& chi) {
  std::vector<std::int64_t> v(chi.coords.size());
  for (size_t i = 0; i < chi.coords.size(); ++i) v[i] = to_long(chi.coords[i]);
  return v;
}

std::vector<std::int64_t> to_int_vec(const Cocharacter& c) {
  std::vector<std::int64_t> v(c.coords.size());
  for (size_t i = 0; i < c.coords.size(); ++i) v[i] = to_long(c.coords[i]);
  return v;
}

Character char_from_int_vec(const std::vector<std::int64_t>& v) {
  std::vector<Rat> c(v.size());
  for (size_t i = 0; i < v.size(); ++i) c[i] = Rat(static_cast<long>(v[i]));
  return Character(std::move(c));
}

Cocharacter cochar_from_int_vec(const std::vector<std::int64_t>& v) {
  std::vector<Rat> c(v.size());
  for (size_t i = 0; i < v.size(); ++i) c[i] = Rat(static_cast<long>(v[i]));
  return Cocharacter(std::move(c));
}

int RootDatum::positive_root_pos(const std::vector<std::int64_t>& v) const {
  auto it = root_index.find(v);
  if (it == root_index.end() || it->second < 0)
    throw std::invalid_argument("not a positive root");
  return it->second - 1;
}

unsigned long RootDatum::classical_weyl_order() const {
  auto fact = [](int n) {
    unsigned long f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
    return f;
  };
  unsigned long one;
  int n = series_rank;
  switch (series) {
    case Series::A: one = fact(n + 1); break;
    case Series::B:
    case Series::C: one = (1ul << n) * fact(n); break;
    case Series::D: one = (n >= 1 ? (1ul << (n - 1)) * fact(n) : 1ul); break;
    default: throw std::logic_error("bad series");
  }
  unsigned long total = 1;
  for (int i = 0; i < copies; ++i) total *= one;
  return total;
}

namespace {

using IVec = std::vector<std::int64_t>;

// s_i on character coordinates: chi - <chi, alpha_i^vee> alpha_i
IVec reflect_char(const IVec& chi, const IVec& alpha, const IVec& coalpha) {
  std::int64_t p = 0;
  for (size_t k = 0; k < chi.size(); ++k) p += chi[k] * coalpha[k];
  IVec r = chi;
  for (size_t k = 0; k < chi.size(); ++k) r[k] -= p * alpha[k];
  return r;
}

// s_i on cocharacter coordinates: c - <alpha_i, c> alpha_i^vee
IVec reflect_cochar(const IVec& c, const IVec& alpha, const IVec& coalpha) {
  std::int64_t p = 0;
  for (size_t k = 0; k < c.size(); ++k) p += alpha[k] * c[k];
  IVec r = c;
  for (size_t k = 0; k < c.size(); ++k) r[k] -= p * coalpha[k];
  return r;
}

bool all_nonneg(const std::vector<Rat>& v) {
  for (const Rat& q : v)
    if (q < 0) return false;
  return true;
}

bool all_nonpos(const std::vector<Rat>& v) {
  for (const Rat& q : v)
    if (q > 0) return false;
  return true;
}

void close_root_system(RootDatum& rd) {
  const int n = rd.rank;
  const int l = rd.ss_rank;
  std::vector<IVec> alphas(l), coalphas(l);
  for (int i = 0; i < l; ++i) {
    alphas[i] = to_int_vec(rd.simple_roots[i]);
    coalphas[i] = to_int_vec(rd.simple_coroots[i]);
  }
  rd.simple_root_vecs = alphas;
  rd.simple_coroot_vecs = coalphas;

  // Orbit closure of (root, coroot) pairs under the simple reflections.
  std::map<IVec, IVec> system;  // root -> coroot
  std::vector<IVec> frontier;
  for (int i = 0; i < l; ++i) {
    IVec neg_root = alphas[i], neg_coroot = coalphas[i];
    for (auto& x : neg_root) x = -x;
    for (auto& x : neg_coroot) x = -x;
    system[alphas[i]] = coalphas[i];
    system[neg_root] = neg_coroot;
  }
  for (auto& kv : system) frontier.push_back(kv.first);
  const size_t max_roots = 64u * static_cast<size_t>(l) * static_cast<size_t>(l) + 64;
  while (!frontier.empty()) {
    IVec root = frontier.back();
    frontier.pop_back();
    IVec coroot = system.at(root);
    for (int i = 0; i < l; ++i) {
      IVec r2 = reflect_char(root, alphas[i], coalphas[i]);
      if (system.find(r2) == system.end()) {
        system[r2] = reflect_cochar(coroot, alphas[i], coalphas[i]);
        frontier.push_back(r2);
        if (system.size() > max_roots)
          throw std::logic_error("root system closure does not terminate");
      }
    }
  }

  // Split into positive and negative halves by the simple-root decomposition.
  std::vector<std::pair<IVec, IVec>> positives;
  for (auto& kv : system) {
    // Decide the sign by pairing with 2*rho^vee-free route: a root is positive
    // iff its expansion over Delta is nonnegative. Roots live in span(Delta).
    Character root = char_from_int_vec(kv.first);
    std::vector<Rat> coeffs;
    {
      // least-squares-free exact solve below (root_in_simple_basis needs rd
      // fields we are still building), so inline a solve in span(Delta).
      std::vector<std::vector<Rat>> m(l, std::vector<Rat>(l, Rat(0)));
      std::vector<Rat> rhs(l, Rat(0));
      for (int r = 0; r < l; ++r) {
        for (int c = 0; c < l; ++c) m[r][c] = pair(rd.simple_roots[c], rd.simple_coroots[r]);
        rhs[r] = pair(root, rd.simple_coroots[r]);
      }
      coeffs = solve_square(std::move(m), std::move(rhs));
      // Confirm the expansion reproduces the root (it must: roots lie in span(Delta)).
      Character rebuilt(std::vector<Rat>(n, Rat(0)));
      for (int c = 0; c < l; ++c) rebuilt = add(rebuilt, scale(coeffs[c], rd.simple_roots[c]));
      if (!(rebuilt == root)) throw std::logic_error("root outside span of simple roots");
    }
    if (all_nonneg(coeffs)) {
      positives.emplace_back(kv.first, kv.second);
    } else if (!all_nonpos(coeffs)) {
      throw std::logic_error("root with mixed-sign simple coefficients");
    }
  }
  std::sort(positives.begin(), positives.end());

  rd.positive_roots.clear();
  rd.positive_coroots.clear();
  rd.pos_root_vecs.clear();
  rd.pos_coroot_vecs.clear();
  rd.root_index.clear();
  int idx = 1;
  for (auto& pr : positives) {
    rd.positive_roots.push_back(char_from_int_vec(pr.first));
    rd.positive_coroots.push_back(cochar_from_int_vec(pr.second));
    rd.pos_root_vecs.push_back(pr.first);
    rd.pos_coroot_vecs.push_back(pr.second);
    rd.root_index[pr.first] = idx;
    IVec neg = pr.first;
    for (auto& x : neg) x = -x;
    rd.root_index[neg] = -idx;
    ++idx;
  }

  rd.two_rho_vec.assign(n, 0);
  for (auto& v : rd.pos_root_vecs)
    for (int k = 0; k < n; ++k) rd.two_rho_vec[k] += v[k];
}

void compute_components(RootDatum& rd) {
  const int l = rd.ss_rank;
  std::vector<int> comp(l, -1);
  int nc = 0;
  for (int s = 0; s < l; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = nc;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < l; ++j) {
        if (comp[j] >= 0) continue;
        if (pair(rd.simple_roots[i], rd.simple_coroots[j]) != 0) {
          comp[j] = nc;
          stack.push_back(j);
        }
      }
    }
    ++nc;
  }
  rd.components.assign(nc, {});
  for (int i = 0; i < l; ++i) rd.components[comp[i]].push_back(i);
}

void validate(const RootDatum& rd) {
  const int l = rd.ss_rank;
  // Coroot normalization and Cartan integrality.
  for (int i = 0; i < static_cast<int>(rd.positive_roots.size()); ++i) {
    if (pair(rd.positive_roots[i], rd.positive_coroots[i]) != 2)
      throw std::logic_error("coroot normalization violated");
  }
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      Rat c = pair(rd.simple_roots[i], rd.simple_coroots[j]);
      if (!is_integer(c)) throw std::logic_error("non-integral Cartan pairing");
      if (i != j && c > 0) throw std::logic_error("positive off-diagonal Cartan entry");
    }

  // Positive-root count per component matches the classical series count.
  {
    size_t expected = 0;
    int n = rd.series_rank;
    size_t one = 0;
    switch (rd.series) {
      case Series::A: one = static_cast<size_t>(n) * (n + 1) / 2; break;
      case Series::B:
      case Series::C: one = static_cast<size_t>(n) * n; break;
      case Series::D: one = static_cast<size_t>(n) * (n - 1); break;
    }
    expected = one * static_cast<size_t>(rd.copies);
    if (rd.positive_roots.size() != expected)
      throw std::logic_error("positive root count does not match the series");
  }

  // F permutes Delta and Phi^+, has the declared finite order, and commutes
  // with the root -> coroot correspondence.
  IntMat f = rd.galois;
  IntMat pw = IntMat::identity(rd.rank);
  for (int k = 0; k < rd.galois_order; ++k) pw = pw.mul(f);
  if (!pw.is_identity()) throw std::logic_error("Galois automorphism order mismatch");
  for (int i = 0; i < l; ++i) {
    IVec img = rd.galois.apply(rd.simple_root_vecs[i]);
    bool found = false;
    for (int j = 0; j < l; ++j)
      if (img == rd.simple_root_vecs[j]) {
        // coroot of F(alpha) must be F^vee(coroot of alpha)
        if (rd.galois_cochar.apply(rd.simple_coroot_vecs[i]) != rd.simple_coroot_vecs[j])
          throw std::logic_error("Galois action incompatible with coroots");
        found = true;
        break;
      }
    if (!found) throw std::logic_error("Galois automorphism does not permute Delta");
  }
  for (size_t i = 0; i < rd.pos_root_vecs.size(); ++i) {
    IVec img = rd.galois.apply(rd.pos_root_vecs[i]);
    if (rd.root_sign(img) != 1)
      throw std::logic_error("Galois automorphism does not preserve Phi^+");
    if (rd.galois_cochar.apply(rd.pos_coroot_vecs[i]) !=
        rd.pos_coroot_vecs[rd.positive_root_pos(img)])
      throw std::logic_error("Galois action incompatible with coroots on Phi^+");
  }
}

void finalize(RootDatum& rd) {
  rd.galois_inv = rd.galois.inverse();
  rd.galois_cochar = rd.galois.transpose().inverse();
  close_root_system(rd);
  compute_components(rd);
  validate(rd);
}

void push_simple(RootDatum& rd, const std::vector<long>& root, const std::vector<long>& coroot) {
  std::vector<Rat> r(root.size()), c(coroot.size());
  for (size_t i = 0; i < root.size(); ++i) r[i] = Rat(root[i]);
  for (size_t i = 0; i < coroot.size(); ++i) c[i] = Rat(coroot[i]);
  rd.simple_roots.emplace_back(std::move(r));
  rd.simple_coroots.emplace_back(std::move(c));
}

}  // namespace

RootDatum build_root_datum(Series series, int rank, bool similitude, int galois_order) {
  if (rank <= 0) throw std::invalid_argument("rank must be positive");
  if (galois_order != 1 && galois_order != 2)
    throw std::invalid_argument("galois_order must be 1 or 2");
  if (galois_order == 2) {
    bool ok = (series == Series::A && rank >= 2) || series == Series::D;
    if (!ok)
      throw std::invalid_argument(
          "order-2 Galois twist requires a nontrivial diagram automorphism (A with rank >= 2, D)");
  }
  if (similitude && series != Series::C)
    throw std::invalid_argument("similitude coordinate is only supported for series C");
  if (series == Series::D && rank < 2) throw std::invalid_argument("series D requires rank >= 2");

  RootDatum rd;
  rd.series = series;
  rd.series_rank = rank;
  rd.similitude = similitude;
  rd.galois_order = galois_order;
  rd.copies = 1;
  {
    std::ostringstream os;
    os << series_letter(series) << rank;
    if (similitude) os << "+sim";
    if (galois_order == 2) os << "~2";
    rd.tag = os.str();
  }

  const int n = rank;
  switch (series) {
    case Series::A: {
      rd.rank = n + 1;
      rd.ss_rank = n;
      for (int i = 0; i < n; ++i) {
        std::vector<long> v(n + 1, 0), c(n + 1, 0);
        v[i] = 1; v[i + 1] = -1;
        c[i] = 1; c[i + 1] = -1;
        push_simple(rd, v, c);
      }
      rd.galois = IntMat::identity(n + 1);
      if (galois_order == 2) {
        IntMat f(n + 1);
        for (int i = 0; i <= n; ++i) f.at(n - i, i) = -1;  // e_i -> -e_{n+2-i} (0-based flip)
        rd.galois = f;
      }
      break;
    }
    case Series::B: {
      rd.rank = n;
      rd.ss_rank = n;
      for (int i = 0; i + 1 < n; ++i) {
        std::vector<long> v(n, 0), c(n, 0);
        v[i] = 1; v[i + 1] = -1;
        c[i] = 1; c[i + 1] = -1;
        push_simple(rd, v, c);
      }
      std::vector<long> v(n, 0), c(n, 0);
      v[n - 1] = 1;
      c[n - 1] = 2;
      push_simple(rd, v, c);
      rd.galois = IntMat::identity(n);
      break;
    }
    case Series::C: {
      if (!similitude) {
        rd.rank = n;
        rd.ss_rank = n;
        for (int i = 0; i + 1 < n; ++i) {
          std::vector<long> v(n, 0), c(n, 0);
          v[i] = 1; v[i + 1] = -1;
          c[i] = 1; c[i + 1] = -1;
          push_simple(rd, v, c);
        }
        std::vector<long> v(n, 0), c(n, 0);
        v[n - 1] = 2;
        c[n - 1] = 1;
        push_simple(rd, v, c);
        rd.galois = IntMat::identity(n);
      } else {
        // Siegel lattice: coordinates (e0; e1..eg), e0 the similitude character.
        rd.rank = n + 1;
        rd.ss_rank = n;
        for (int i = 1; i < n; ++i) {
          std::vector<long> v(n + 1, 0), c(n + 1, 0);
          v[i] = 1; v[i + 1] = -1;
          c[i] = 1; c[i + 1] = -1;
          push_simple(rd, v, c);
        }
        std::vector<long> v(n + 1, 0), c(n + 1, 0);
        v[n] = 2; v[0] = -1;
        c[n] = 1;
        push_simple(rd, v, c);
        rd.galois = IntMat::identity(n + 1);
      }
      break;
    }
    case Series::D: {
      rd.rank = n;
      rd.ss_rank = n;
      for (int i = 0; i + 1 < n; ++i) {
        std::vector<long> v(n, 0), c(n, 0);
        v[i] = 1; v[i + 1] = -1;
        c[i] = 1; c[i + 1] = -1;
        push_simple(rd, v, c);
      }
      std::vector<long> v(n, 0), c(n, 0);
      v[n - 2] = 1; v[n - 1] = 1;
      c[n - 2] = 1; c[n - 1] = 1;
      push_simple(rd, v, c);
      rd.galois = IntMat::identity(n);
      if (galois_order == 2) {
        rd.galois.at(n - 1, n - 1) = -1;  // swap the fork vertices
      }
      break;
    }
  }
  finalize(rd);
  return rd;
}

RootDatum build_product_datum(Series series, int rank, int copies) {
  if (copies < 1) throw std::invalid_argument("copies must be >= 1");
  RootDatum base = build_root_datum(series, rank, false, 1);
  RootDatum rd;
  rd.series = series;
  rd.series_rank = rank;
  rd.similitude = false;
  rd.galois_order = copies;
  rd.copies = copies;
  rd.rank = base.rank * copies;
  rd.ss_rank = base.ss_rank * copies;
  {
    std::ostringstream os;
    os << series_letter(series) << rank << "^" << copies << "~cyc";
    rd.tag = os.str();
  }
  for (int k = 0; k < copies; ++k) {
    for (int i = 0; i < base.ss_rank; ++i) {
      std::vector<Rat> v(rd.rank, Rat(0)), c(rd.rank, Rat(0));
      for (int j = 0; j < base.rank; ++j) {
        v[k * base.rank + j] = base.simple_roots[i].coords[j];
        c[k * base.rank + j] = base.simple_coroots[i].coords[j];
      }
      rd.simple_roots.emplace_back(std::move(v));
      rd.simple_coroots.emplace_back(std::move(c));
    }
  }
  // F shifts factor k to factor k+1 (mod copies).
  IntMat f(rd.rank);
  for (int k = 0; k < copies; ++k) {
    int k2 = (k + 1) % copies;
    for (int j = 0; j < base.rank; ++j) f.at(k2 * base.rank + j, k * base.rank + j) = 1;
  }
  rd.galois = f;
  if (copies == 1) rd.galois_order = 1;
  finalize(rd);
  return rd;
}

std::vector<Character> fundamental_weights(const RootDatum& rd) {
  const int n = rd.rank;
  const int l = rd.ss_rank;
  // Basis of central cocharacters: kernel of c -> (<alpha_i, c>)_i.
  std::vector<std::vector<Rat>> rows;
  for (int i = 0; i < l; ++i) {
    std::vector<Rat> r(n);
    for (int j = 0; j < n; ++j) r[j] = rd.simple_roots[i].coords[j];
    rows.push_back(std::move(r));
  }
  // Row-reduce to find free columns.
  std::vector<std::vector<Rat>> m = rows;
  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < n && r < l; ++col) {
    int piv = -1;
    for (int i = r; i < l; ++i)
      if (m[i][col] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    Rat d = m[r][col];
    for (int j = 0; j < n; ++j) m[r][j] /= d;
    for (int i = 0; i < l; ++i) {
      if (i == r || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (int j = 0; j < n; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(col);
    ++r;
  }
  if (r != l) throw std::logic_error("simple roots are linearly dependent");
  std::vector<std::vector<Rat>> central;
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    std::vector<Rat> z(n, Rat(0));
    z[col] = 1;
    for (int i = 0; i < l; ++i) z[pivot_col[i]] = -m[i][col];
    central.push_back(std::move(z));
  }

  // For each i solve: <f, alpha_j^vee> = delta_ij, <f, z_k> = 0.
  std::vector<std::vector<Rat>> sys;
  for (int j = 0; j < l; ++j) {
    std::vector<Rat> row(n);
    for (int k = 0; k < n; ++k) row[k] = rd.simple_coroots[j].coords[k];
    sys.push_back(std::move(row));
  }
  for (auto& z : central) sys.push_back(z);
  std::vector<Character> fw;
  for (int i = 0; i < l; ++i) {
    std::vector<Rat> rhs(n, Rat(0));
    rhs[i] = 1;
    fw.emplace_back(solve_square(sys, std::move(rhs)));
  }
  return fw;
}

Character rho(const RootDatum& rd) {
  std::vector<Rat> v(rd.rank, Rat(0));
  for (const auto& a : rd.positive_roots)
    for (int i = 0; i < rd.rank; ++i) v[i] += a.coords[i];
  for (Rat& q : v) q /= 2;
  return Character(std::move(v));
}

Character highest_root_of_component(const RootDatum& rd, const std::vector<int>& component) {
  std::set<int> comp(component.begin(), component.end());
  // Both the highest root and, outside the simply-laced case, the highest
  // short root are dominant; the highest root is the maximal one in the
  // simple-root order.
  std::vector<const Character*> dominant_roots;
  for (size_t i = 0; i < rd.positive_roots.size(); ++i) {
    std::vector<Rat> coeffs = root_in_simple_basis(rd, rd.positive_roots[i]);
    bool in_comp = true;
    for (int j = 0; j < rd.ss_rank; ++j)
      if (coeffs[j] != 0 && comp.count(j) == 0) { in_comp = false; break; }
    if (!in_comp) continue;
    bool dominant = true;
    for (int j : component)
      if (pair(rd.positive_roots[i], rd.simple_coroots[j]) < 0) { dominant = false; break; }
    if (dominant) dominant_roots.push_back(&rd.positive_roots[i]);
  }
  if (dominant_roots.empty()) throw std::logic_error("component has no dominant root");
  const Character* best = nullptr;
  for (const Character* cand : dominant_roots) {
    bool maximal = true;
    for (const Character* other : dominant_roots) {
      std::vector<Rat> diff = root_in_simple_basis(rd, sub(*cand, *other));
      for (const Rat& q : diff)
        if (q < 0) { maximal = false; break; }
      if (!maximal) break;
    }
    if (maximal) {
      if (best) throw std::logic_error("highest root is not unique in the component");
      best = cand;
    }
  }
  if (!best) throw std::logic_error("dominant roots are not totally ordered");
  return *best;
}

Character highest_root(const RootDatum& rd) {
  if (rd.components.size() != 1)
    throw std::invalid_argument("highest root requires an irreducible diagram");
  return highest_root_of_component(rd, rd.components[0]);
}

std::vector<Rat> root_in_simple_basis(const RootDatum& rd, const Character& root) {
  const int l = rd.ss_rank;
  std::vector<std::vector<Rat>> m(l, std::vector<Rat>(l));
  std::vector<Rat> rhs(l);
  for (int r = 0; r < l; ++r) {
    for (int c = 0; c < l; ++c) m[r][c] = pair(rd.simple_roots[c], rd.simple_coroots[r]);
    rhs[r] = pair(root, rd.simple_coroots[r]);
  }
  return solve_square(std::move(m), std::move(rhs));
}

std::vector<int> special_simple_roots(const RootDatum& rd) {
  std::vector<int> out;
  for (const auto& comp : rd.components) {
    Character h = highest_root_of_component(rd, comp);
    std::vector<Rat> coeffs = root_in_simple_basis(rd, h);
    for (int j : comp)
      if (coeffs[j] == 1) out.push_back(j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_minuscule(const RootDatum& rd, const Character& chi) {
  for (const auto& cv : rd.simple_coroots)
    if (pair(chi, cv) < 0) throw std::invalid_argument("is_minuscule expects a dominant character");
  for (const auto& cv : rd.positive_coroots) {
    Rat p = pair(chi, cv);
    if (p < -1 || p > 1) return false;
  }
  return true;
}

}  // namespace zipstrata
