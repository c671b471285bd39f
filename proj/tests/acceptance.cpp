// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Every check is exact; the stated budgets are wall-clock limits.

#include "zipstrata/appendix.hpp"
#include "zipstrata/characters.hpp"
#include "zipstrata/hasse.hpp"
#include "zipstrata/zipdata.hpp"

#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

using namespace zipstrata;
using namespace zipstrata::test;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::ostringstream log;
};

#define EXPECT(cond)                                                     \
  do {                                                                   \
    if (!(cond)) {                                                       \
      out.ok = false;                                                    \
      out.log << "    failed: " << #cond << " (line " << __LINE__ << ")\n"; \
    }                                                                    \
  } while (0)

Character mk_char(int rank, std::vector<long> v) {
  std::vector<Rat> c(rank, Rat(0));
  for (size_t i = 0; i < v.size(); ++i) c[i] = Rat(v[i]);
  return Character(c);
}

Cocharacter mk_cochar(int rank, std::vector<long> v) {
  std::vector<Rat> c(rank, Rat(0));
  for (size_t i = 0; i < v.size(); ++i) c[i] = Rat(v[i]);
  return Cocharacter(c);
}

ZipDatum siegel(int g) {
  RootDatum rd = build_root_datum(Series::C, g, true, 1);
  return make_zip_datum(rd, siegel_mu(rd));
}

Character siegel_eta(const ZipDatum& zd) {
  return hodge_character(siegel_standard_weights(zd.rd), siegel_mu(zd.rd));
}

// Integer Levi characters with semisimple coordinates in [-box, box].
std::vector<Character> levi_grid(const ZipDatum& zd, long box) {
  const RootDatum& rd = zd.rd;
  std::vector<bool> inert(rd.rank, true);
  for (const auto& cv : rd.pos_coroot_vecs)
    for (int k = 0; k < rd.rank; ++k)
      if (cv[k] != 0) inert[k] = false;
  std::vector<int> free_coords;
  for (int k = 0; k < rd.rank; ++k)
    if (!inert[k]) free_coords.push_back(k);
  std::vector<Character> grid;
  std::vector<long> odo(free_coords.size(), -box);
  while (true) {
    std::vector<Rat> coords(rd.rank, Rat(0));
    for (size_t i = 0; i < free_coords.size(); ++i) coords[free_coords[i]] = Rat(odo[i]);
    Character chi(coords);
    if (is_levi_character(zd, chi)) grid.push_back(chi);
    size_t pos = 0;
    while (pos < odo.size() && odo[pos] == box) odo[pos++] = -box;
    if (pos == odo.size()) break;
    ++odo[pos];
  }
  return grid;
}

void criterion_1(Outcome& out) {
  struct Want { Series s; int min_rank; std::function<unsigned long(int)> order; };
  auto fact = [](int n) { unsigned long f = 1; for (int i = 2; i <= n; ++i) f *= i; return f; };
  std::vector<Want> wants = {
      {Series::A, 1, [&](int n) { return fact(n + 1); }},
      {Series::B, 1, [&](int n) { return (1ul << n) * fact(n); }},
      {Series::C, 1, [&](int n) { return (1ul << n) * fact(n); }},
      {Series::D, 2, [&](int n) { return (1ul << (n - 1)) * fact(n); }},
  };
  for (const auto& w : wants)
    for (int n = w.min_rank; n <= 6; ++n) {
      RootDatum rd = build_root_datum(w.s, n, false, 1);
      EXPECT(enumerate_weyl(rd, 1u << 20).size() == w.order(n));
    }
  for (const RootDatum& rd :
       {build_root_datum(Series::A, 2, false, 1), build_root_datum(Series::C, 2, false, 1),
        build_root_datum(Series::A, 3, false, 1)}) {
    std::vector<WeylElement> all = enumerate_weyl(rd, 1u << 12);
    for (const auto& u : all)
      for (const auto& w : all)
        EXPECT(bruhat_leq(rd, u, w) == bruhat_oracle(rd, u, w));
  }
}

void criterion_2(Outcome& out) {
  struct Combo { Series s; int rank; std::vector<int> I; };
  std::vector<Combo> combos = {
      {Series::A, 3, {0}},        {Series::A, 3, {0, 1}},  {Series::A, 4, {1, 2}},
      {Series::A, 4, {}},         {Series::A, 5, {0, 2, 4}}, {Series::B, 3, {0}},
      {Series::B, 3, {1}},        {Series::B, 3, {0, 2}},  {Series::B, 4, {0, 1, 2}},
      {Series::B, 4, {1, 3}},     {Series::C, 2, {0}},     {Series::C, 3, {1}},
      {Series::C, 3, {0, 1}},     {Series::C, 3, {0, 1, 2}}, {Series::C, 4, {0, 1, 2}},
      {Series::C, 4, {3}},        {Series::D, 4, {0}},     {Series::D, 4, {1, 2, 3}},
      {Series::D, 5, {0, 1}},     {Series::D, 5, {2}},
  };
  EXPECT(combos.size() == 20);
  for (const auto& c : combos) {
    RootDatum rd = build_root_datum(c.s, c.rank, false, 1);
    size_t iw = min_coset_reps(rd, c.I, CosetSide::Left).size();
    size_t wi = enumerate_weyl_subgroup(rd, c.I, 1u << 20).size();
    EXPECT(iw * wi == rd.classical_weyl_order());
  }
  for (int g = 1; g <= 4; ++g) {
    ZipDatum zd = siegel(g);
    EXPECT(zip_stratum_labels(zd).size() == (1u << g));
    EXPECT(zd.max_stratum_length() == g * (g + 1) / 2);
  }
}

void criterion_3(Outcome& out) {
  for (int g = 1; g <= 4; ++g) {
    ZipDatum zd = siegel(g);
    std::vector<WeylElement> iw = zip_stratum_labels(zd);
    const int dmax = zd.max_stratum_length();
    for (const auto& w : iw) {
      WeylElement img = involution_on_strata(zd, w);
      EXPECT(is_min_coset_rep(zd.rd, zd.I, CosetSide::Left, img));
      EXPECT(involution_on_strata(zd, img) == w);
      EXPECT(img.length == dmax - w.length);
    }
    for (const auto& u : iw)
      for (const auto& v : iw)
        EXPECT(bruhat_leq(zd.rd, u, v) ==
               bruhat_leq(zd.rd, involution_on_strata(zd, v), involution_on_strata(zd, u)));
  }
}

void criterion_4(Outcome& out) {
  struct Datum { RootDatum rd; std::vector<long> primes; };
  std::vector<Datum> data;
  data.push_back({build_root_datum(Series::C, 2, false, 1), {2, 3, 5}});
  data.push_back({build_root_datum(Series::C, 3, false, 1), {2, 3, 5}});
  data.push_back({build_root_datum(Series::A, 3, false, 2), {2, 3}});

  auto twist_pow = [](const RootDatum& rd, const FrobeniusModel& fm, Character lam, int k) {
    for (int i = 0; i < k; ++i) lam = frobenius_twist(rd, fm, lam);
    return lam;
  };
  auto twisted_power = [](const RootDatum& rd, const WeylElement& w, int i) {
    WeylElement acc = identity_element(rd);
    WeylElement tw = w;
    for (int k = 0; k < i; ++k) {
      acc = compose(rd, tw, acc);
      tw = frobenius_on_weyl(rd, tw);
    }
    return acc;
  };

  for (const auto& datum : data) {
    const RootDatum& rd = datum.rd;
    std::mt19937_64 rng(2024);
    for (long p : datum.primes) {
      FrobeniusModel fm = make_frobenius_model(rd, p);
      const int trials = 200 / static_cast<int>(datum.primes.size()) + 1;
      for (int t = 0; t < trials; ++t) {
        WeylElement w = random_element(rd, rng);
        Character lam = random_integer_character(rd, rng, 4);
        // (varphicirc)
        EXPECT(apply(w, frobenius_twist(rd, fm, lam)) ==
               frobenius_twist(rd, fm, apply(frobenius_on_weyl(rd, w), lam)));
        // partial twisted sums at a random depth
        Character alpha = h_map(rd, fm, w, lam);
        int r_probe = 1 + static_cast<int>(rng() % 4);
        Character sum = mk_char(rd.rank, {});
        for (int i = 0; i < r_probe; ++i)
          sum = add(sum, twist_pow(rd, fm, apply(twisted_power(rd, w, i), alpha), i));
        EXPECT(sum ==
               sub(lam, twist_pow(rd, fm, apply(twisted_power(rd, w, r_probe), lam), r_probe)));
        // full twisted sum, with r the twisted order and m the F-period of lam
        int r = twisted_order(rd, w);
        int m = 1;
        {
          Character cur(rd.galois.apply(lam.coords));
          while (!(cur == lam)) {
            cur = Character(rd.galois.apply(cur.coords));
            ++m;
          }
        }
        Character full = mk_char(rd.rank, {});
        for (int i = 0; i < r * m; ++i)
          full = add(full, twist_pow(rd, fm, apply(twisted_power(rd, w, i), alpha), i));
        mpz_class prm = 1;
        for (int i = 0; i < r * m; ++i) prm *= p;
        EXPECT(full == scale(Rat(mpz_class(1 - prm)), lam));
        WeylElement phi_inv_w = w;
        for (int k = 0; k < rd.galois_order - 1; ++k)
          phi_inv_w = frobenius_on_weyl(rd, phi_inv_w);
        EXPECT(twisted_power(rd, w, r * m - 1) == inverse(phi_inv_w));
        // inverse round trip; h_inverse cross-checks the closed form internally
        Character chi = random_integer_character(rd, rng, 4);
        Character inv = h_inverse(rd, fm, w, chi);
        EXPECT(h_map(rd, fm, w, inv) == chi);
        EXPECT(h_inverse_closed_form(rd, fm, w, chi) == inv);
      }
    }
  }
}

void criterion_5(Outcome& out) {
  for (int g : {2, 3}) {
    ZipDatum zd = siegel(g);
    std::vector<StratumRecord> table = strata_table(zd);
    std::vector<Character> grid = levi_grid(zd, 3);
    std::vector<Character> ample_chis;
    for (const auto& chi : grid)
      if (is_ample(zd, chi)) ample_chis.push_back(chi);
    EXPECT(!ample_chis.empty());
    for (long p : {2L, 3L, 5L}) {
      FrobeniusModel fm = make_frobenius_model(zd.rd, p);
      for (const auto& chi : ample_chis) {
        if (is_orbitally_p_close(zd.rd, chi, p)) {
          for (const auto& rec : table) {
            HasseCertificate cert = hasse_certificate(zd, fm, chi, rec.w);
            EXPECT(cert.all_coeffs_positive);
            EXPECT(cert.verdict == Verdict::Exists);
          }
        }
        // the open stratum needs only ampleness
        HasseCertificate open_cert = hasse_certificate(zd, fm, chi, table.back().w);
        EXPECT(open_cert.all_coeffs_positive);
      }
    }
  }
  // an ample-only character on a non-Siegel Levi, open stratum
  RootDatum c3 = build_root_datum(Series::C, 3, false, 1);
  ZipDatum zd = make_zip_datum(c3, mk_cochar(3, {2, 1, 0}));
  std::vector<StratumRecord> table = strata_table(zd);
  Character chi = mk_char(3, {-3, -1, 0});
  EXPECT(is_ample(zd, chi));
  EXPECT(!is_orbitally_p_close(c3, chi, 2));
  for (long p : {2L, 3L, 5L}) {
    FrobeniusModel fm = make_frobenius_model(c3, p);
    HasseCertificate cert = hasse_certificate(zd, fm, chi, table.back().w);
    EXPECT(cert.all_coeffs_positive);
  }
  // the same datum has 24 strata whose cominimal elements are resolved
  // through nontrivial zip-group moves; sweep an ample and orbitally
  // p-close character over all of them
  Character close_chi = mk_char(3, {-2, -1, 0});
  EXPECT(is_ample(zd, close_chi));
  EXPECT(is_orbitally_p_close(c3, close_chi, 5));
  FrobeniusModel fm5 = make_frobenius_model(c3, 5);
  for (const auto& rec : table) {
    HasseCertificate cert = hasse_certificate(zd, fm5, close_chi, rec.w);
    EXPECT(cert.all_coeffs_positive);
    EXPECT(cert.verdict == Verdict::Exists);
  }
}

void criterion_6(Outcome& out) {
  // For Siegel C3 the box-3 members of the cone C all have pairing ratio 5,
  // so A_p only becomes nonempty there at p = 7; include it beyond the stated
  // grid primes to keep the C3 check non-vacuous.
  size_t members = 0;
  for (int g : {2, 3}) {
    ZipDatum zd = siegel(g);
    const RootDatum& rd = zd.rd;
    // full integer box on the non-central coordinates
    std::vector<bool> inert(rd.rank, true);
    for (const auto& cv : rd.pos_coroot_vecs)
      for (int k = 0; k < rd.rank; ++k)
        if (cv[k] != 0) inert[k] = false;
    std::vector<int> free_coords;
    for (int k = 0; k < rd.rank; ++k)
      if (!inert[k]) free_coords.push_back(k);
    std::vector<long> odo(free_coords.size(), -3);
    while (true) {
      std::vector<Rat> coords(rd.rank, Rat(0));
      for (size_t i = 0; i < free_coords.size(); ++i) coords[free_coords[i]] = Rat(odo[i]);
      Character chi(coords);
      for (long p : {2L, 3L, 5L, 7L}) {
        ConeFlags f = cone_tests(zd, chi, p);
        if (f.in_A_p) {
          ++members;
          EXPECT(f.in_C_plusplus);
        }
      }
      size_t pos = 0;
      while (pos < odo.size() && odo[pos] == 3) odo[pos++] = -3;
      if (pos == odo.size()) break;
      ++odo[pos];
    }
  }
  EXPECT(members > 0);
  out.log << "    A_p members checked: " << members << "\n";
}

void criterion_7(Outcome& out) {
  std::vector<std::pair<RootDatum, Character>> family;
  for (int n = 1; n <= 4; ++n) {
    RootDatum rd = build_root_datum(Series::A, n, false, 1);
    std::vector<Character> fw = fundamental_weights(rd);
    for (const auto& f : fw)
      for (long k : {1L, 2L, 3L}) family.push_back({rd, scale(Rat(k), f)});
  }
  {
    RootDatum b3 = build_root_datum(Series::B, 3, false, 1);
    family.push_back({b3, fundamental_weights(b3)[2]});  // spin weight, minuscule
    family.push_back({b3, fundamental_weights(b3)[0]});  // vector weight
    RootDatum d4 = build_root_datum(Series::D, 4, false, 1);
    std::vector<Character> fw = fundamental_weights(d4);
    family.push_back({d4, fw[0]});
    family.push_back({d4, fw[2]});
    family.push_back({d4, fw[3]});
  }
  for (int n = 2; n <= 4; ++n) {
    RootDatum rd = build_root_datum(Series::C, n, false, 1);
    family.push_back({rd, fundamental_weights(rd)[n - 1]});
  }
  for (int g = 2; g <= 4; ++g) {
    ZipDatum zd = siegel(g);
    family.push_back({zd.rd, siegel_eta(zd)});
  }
  for (const auto& [rd, chi] : family) {
    EXPECT(is_quasi_constant(rd, chi));
    for (long p : {2L, 3L, 5L, 7L}) EXPECT(is_orbitally_p_close(rd, chi, p));
  }
  for (int g = 2; g <= 4; ++g) {
    ZipDatum zd = siegel(g);
    Character eta = siegel_eta(zd);
    EXPECT(is_quasi_constant(zd.rd, eta));
    EXPECT(is_ample(zd, eta));
  }
}

void criterion_8(Outcome& out) {
  for (Series s : {Series::A, Series::B, Series::C, Series::D}) {
    std::vector<VertexVerdict> rows = verify_special_fundamental_quasi_constant(s, 8);
    EXPECT(!rows.empty());
    for (const auto& r : rows) {
      EXPECT(r.quasi_constant);
      if (s == Series::A || s == Series::D) EXPECT(r.minuscule);
      if (s == Series::B || s == Series::C) EXPECT(r.pattern_ok);
      EXPECT(r.passed);
    }
  }
}

void criterion_9(Outcome& out) {
  RootDatum rd = build_root_datum(Series::C, 3, false, 1);
  const int npos = static_cast<int>(rd.positive_roots.size());
  EXPECT(cohomology_degree(rd, {rho(rd)}) == 0);
  EXPECT(cohomology_degree(rd, {negate(rho(rd))}) == npos);
  std::mt19937_64 rng(99);
  int done = 0;
  while (done < 100) {
    Character w = random_integer_character(rd, rng, 9);
    bool regular = true;
    for (const auto& c : rd.positive_coroots)
      if (pair(w, c) == 0) regular = false;
    if (!regular) continue;
    ++done;
    EXPECT(cohomology_degree(rd, {w}) + cohomology_degree(rd, {negate(w)}) == npos);
  }
}

void criterion_10(Outcome& out) {
  RootDatum c8 = build_root_datum(Series::C, 8, false, 1);
  auto t0 = Clock::now();
  std::vector<std::uint64_t> hist;
  std::uint64_t count = 0;
  for_each_weyl_length(c8, [&](int len) {
    if (static_cast<size_t>(len) >= hist.size()) hist.resize(len + 1, 0);
    ++hist[len];
    ++count;
  });
  double enum_s = std::chrono::duration<double>(Clock::now() - t0).count();
  EXPECT(count == 10321920ull);
  std::vector<std::uint64_t> poincare{1};
  for (int i = 1; i <= 8; ++i) {
    std::vector<std::uint64_t> next(poincare.size() + 2 * i - 1, 0);
    for (size_t k = 0; k < poincare.size(); ++k)
      for (int d = 0; d <= 2 * i - 1; ++d) next[k + d] += poincare[k];
    poincare = std::move(next);
  }
  EXPECT(hist == poincare);
  EXPECT(enum_s < 60.0);
  out.log << "    W(C8): " << count << " elements in " << std::fixed << std::setprecision(2)
          << enum_s << " s\n";

  ZipDatum zd = siegel(8);
  auto t1 = Clock::now();
  std::vector<WeylElement> iw = zip_stratum_labels(zd);
  double quot_s = std::chrono::duration<double>(Clock::now() - t1).count();
  EXPECT(iw.size() == 256);
  EXPECT(quot_s < 1.0);
  out.log << "    {}^I W for Siegel C8: " << iw.size() << " elements in " << std::fixed
          << std::setprecision(3) << quot_s << " s\n";
}

struct Criterion {
  std::string name;
  double budget_s;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"1. Weyl engine soundness (classical orders, Bruhat vs subword oracle)", 10, criterion_1},
      {"2. Parabolic quotients (index formula, Siegel counts)", 10, criterion_2},
      {"3. Involution suite on {}^I W (Siegel C1..C4)", 10, criterion_3},
      {"4. Frobenius-calculus identities (twist relation, twisted sums, h inverse)", 30,
       criterion_4},
      {"5. Positivity sweep of Hasse certificates (Siegel C2/C3, p in {2,3,5})", 300, criterion_5},
      {"6. Cone inclusions (A_p inside C_++)", 60, criterion_6},
      {"7. Predicate implications (quasi-constant family, Hodge character)", 30, criterion_7},
      {"8. Special-vertex fundamental weights (A-D, rank <= 8)", 60, criterion_8},
      {"9. Cohomology degree of chambers (C3)", 10, criterion_9},
      {"10. Performance (W(C8) enumeration, Siegel C8 quotient)", 60, criterion_10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    auto t0 = Clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.ok = false;
      out.log << "    exception: " << e.what() << "\n";
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs > c.budget_s) {
      out.ok = false;
      out.log << "    over budget: " << secs << " s > " << c.budget_s << " s\n";
    }
    std::cout << (out.ok ? "[PASS] " : "[FAIL] ") << c.name << "  (" << std::fixed
              << std::setprecision(2) << secs << " s)\n";
    std::cout << out.log.str();
    if (!out.ok) ++failures;
  }
  if (failures == 0)
    std::cout << "all acceptance criteria passed\n";
  else
    std::cout << failures << " criteria failed\n";
  return failures;
}
