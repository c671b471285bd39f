// Command-line front end: strata tables, character predicate reports, Hasse
// certificates and sweeps, cone tests, the Appendix verification, and the
// enumeration benchmark. Text output is deterministic for fixed (spec, flags,
// seed); bench timings go to stderr to keep stdout byte-stable.

#include "zipstrata/appendix.hpp"
#include "zipstrata/characters.hpp"
#include "zipstrata/groupspec.hpp"
#include "zipstrata/hasse.hpp"
#include "zipstrata/zipdata.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <atomic>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

using namespace zipstrata;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string spec_path;
  long p = 0;
  std::string chi_csv;
  bool json = false;
  int jobs = 1;
  std::uint64_t seed = 1;
  std::uint64_t max_weyl_order = 1ull << 24;
  long box = 3;
  long a_max = 64;
};

std::vector<int> word_1based(const RootDatum& rd, const WeylElement& w) {
  std::vector<int> word = reduced_word(rd, w);
  for (int& i : word) ++i;
  return word;
}

std::string word_text(const RootDatum& rd, const WeylElement& w) {
  std::vector<int> word = word_1based(rd, w);
  if (word.empty()) return "e";
  std::ostringstream os;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) os << " ";
    os << "s" << word[i];
  }
  return os.str();
}

ordered_json rat_vec_json(const std::vector<Rat>& v) {
  ordered_json a = ordered_json::array();
  for (const Rat& q : v) a.push_back(rat_to_string(q));
  return a;
}

std::string rat_vec_text(const std::vector<Rat>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << rat_to_string(v[i]);
  }
  os << ")";
  return os.str();
}

Character parse_chi(const RootDatum& rd, const std::string& csv) {
  std::vector<Rat> coords;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw SpecError("--chi: empty coordinate");
    coords.push_back(rat_from_string(tok));
  }
  if (static_cast<int>(coords.size()) == rd.rank) return Character(coords);
  // a lone 0 denotes the zero character
  if (coords.size() == 1 && coords[0] == 0)
    return Character(std::vector<Rat>(rd.rank, Rat(0)));
  // A similitude datum accepts the semisimple coordinates alone; the leading
  // coordinate pairs to zero with every coroot there, so pad it with 0.
  bool first_coord_inert = true;
  for (const auto& cv : rd.pos_coroot_vecs)
    if (cv[0] != 0) first_coord_inert = false;
  if (first_coord_inert && rd.rank == rd.series_rank + 1 &&
      static_cast<int>(coords.size()) == rd.series_rank) {
    coords.insert(coords.begin(), Rat(0));
    return Character(coords);
  }
  std::ostringstream os;
  os << "--chi: expected " << rd.rank << " coordinates, got " << coords.size();
  throw SpecError(os.str());
}

// Integer characters in the coordinate box [-box, box], with coordinates that
// pair to zero with every coroot held at 0. filter selects the kept ones.
std::vector<Character> character_grid(const RootDatum& rd, long box,
                                      const std::function<bool(const Character&)>& filter,
                                      std::uint64_t seed, size_t sample_cap = 4096) {
  std::vector<bool> inert(rd.rank, true);
  for (const auto& cv : rd.pos_coroot_vecs)
    for (int k = 0; k < rd.rank; ++k)
      if (cv[k] != 0) inert[k] = false;
  std::vector<int> free_coords;
  for (int k = 0; k < rd.rank; ++k)
    if (!inert[k]) free_coords.push_back(k);

  std::vector<Character> out;
  std::vector<long> odo(free_coords.size(), -box);
  while (true) {
    std::vector<Rat> coords(rd.rank, Rat(0));
    for (size_t i = 0; i < free_coords.size(); ++i) coords[free_coords[i]] = Rat(odo[i]);
    Character chi(coords);
    if (filter(chi)) out.push_back(chi);
    size_t pos = 0;
    while (pos < odo.size() && odo[pos] == box) odo[pos++] = -box;
    if (pos == odo.size()) break;
    ++odo[pos];
  }
  if (out.size() > sample_cap) {
    std::mt19937_64 rng(seed);
    std::shuffle(out.begin(), out.end(), rng);
    out.resize(sample_cap);
  }
  return out;
}

ordered_json certificate_json(const RootDatum& rd, const HasseCertificate& cert) {
  ordered_json j;
  j["chi"] = rat_vec_json(cert.chi.coords);
  j["p"] = cert.p;
  j["stratum"] = word_1based(rd, cert.stratum_w);
  j["cominimal"] = word_1based(rd, cert.cominimal);
  if (cert.N.fits_slong_p())
    j["N"] = cert.N.get_si();
  else
    j["N"] = cert.N.get_str();
  j["lambda"] = rat_vec_json(cert.lambda.coords);
  ordered_json divisor = ordered_json::array();
  for (const auto& e : cert.divisor.entries) {
    ordered_json entry;
    ordered_json alpha = ordered_json::array();
    for (auto x : rd.pos_root_vecs[e.root_index]) alpha.push_back(x);
    entry["alpha"] = alpha;
    entry["target"] = word_1based(rd, e.target);
    entry["coeff"] = rat_to_string(e.coeff);
    divisor.push_back(entry);
  }
  j["divisor"] = divisor;
  j["flags"] = {{"ample", cert.ample},
                {"orbitally_p_close", cert.orbitally_p_close},
                {"all_coeffs_positive", cert.all_coeffs_positive}};
  j["verdict"] = verdict_string(cert.verdict);
  return j;
}

int cmd_strata(const Options& opt) {
  ZipDatum zd = zip_datum_from_spec(load_group_spec(opt.spec_path));
  std::vector<StratumRecord> table = strata_table(zd, opt.max_weyl_order);
  if (opt.json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : table) {
      ordered_json j;
      j["word"] = word_1based(zd.rd, r.w);
      j["length"] = r.length;
      j["dimension"] = r.dimension;
      j["minimal_partner"] = word_1based(zd.rd, r.minimal_partner);
      j["cominimal_partner"] = word_1based(zd.rd, r.cominimal_partner);
      j["involution_image"] = word_1based(zd.rd, r.involution_image);
      arr.push_back(j);
    }
    std::cout << arr.dump(2) << "\n";
    return 0;
  }
  std::cout << "# " << zd.rd.tag << "  |W|=" << zd.rd.classical_weyl_order()
            << "  |IW|=" << table.size() << "  max length " << zd.max_stratum_length() << "\n";
  std::cout << std::left << std::setw(18) << "word" << std::setw(8) << "length" << std::setw(6)
            << "dim" << std::setw(18) << "minimal" << std::setw(18) << "cominimal"
            << "involution\n";
  for (const auto& r : table) {
    std::cout << std::left << std::setw(18) << word_text(zd.rd, r.w) << std::setw(8) << r.length
              << std::setw(6) << r.dimension << std::setw(18)
              << word_text(zd.rd, r.minimal_partner) << std::setw(18)
              << word_text(zd.rd, r.cominimal_partner) << word_text(zd.rd, r.involution_image)
              << "\n";
  }
  return 0;
}

int cmd_predicates(const Options& opt) {
  ZipDatum zd = zip_datum_from_spec(load_group_spec(opt.spec_path));
  const RootDatum& rd = zd.rd;
  if (opt.chi_csv.empty()) throw SpecError("predicates requires --chi");
  Character chi = parse_chi(rd, opt.chi_csv);

  bool levi = is_levi_character(zd, chi);
  bool dominant = is_dominant(rd, chi);
  bool regular = is_regular(rd, chi);
  bool ample = levi && is_ample(zd, chi);
  bool qc = is_quasi_constant(rd, chi);
  MinPClose mp = min_p_close(rd, chi);
  bool minuscule = dominant && is_minuscule(rd, chi);
  std::vector<std::vector<Rat>> orbit_vals = orbit_abs_values(rd, chi);

  if (opt.json) {
    ordered_json j;
    j["chi"] = rat_vec_json(chi.coords);
    ordered_json orbits = ordered_json::array();
    for (const auto& vals : orbit_vals) orbits.push_back(rat_vec_json(vals));
    j["orbit_abs_values"] = orbits;
    j["levi_character"] = levi;
    j["dominant"] = dominant;
    j["regular"] = regular;
    j["ample"] = ample;
    j["quasi_constant"] = qc;
    if (dominant) j["minuscule"] = minuscule;
    j["min_p_close"] = mp.all_p ? ordered_json("all") : ordered_json(mp.bound);
    if (opt.p > 0) j["orbitally_p_close"] = is_orbitally_p_close(rd, chi, opt.p);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "# " << rd.tag << "  chi=" << rat_vec_text(chi.coords) << "\n";
  for (size_t i = 0; i < orbit_vals.size(); ++i)
    std::cout << "orbit " << i + 1 << " |values|: " << rat_vec_text(orbit_vals[i]) << "\n";
  std::cout << "levi_character    " << (levi ? "true" : "false") << "\n";
  std::cout << "dominant          " << (dominant ? "true" : "false") << "\n";
  std::cout << "regular           " << (regular ? "true" : "false") << "\n";
  std::cout << "ample             " << (ample ? "true" : "false") << "\n";
  std::cout << "quasi_constant    " << (qc ? "true" : "false") << "\n";
  if (dominant) std::cout << "minuscule         " << (minuscule ? "true" : "false") << "\n";
  if (mp.all_p)
    std::cout << "orbitally p-close for all primes\n";
  else
    std::cout << "orbitally p-close for p >= " << mp.bound << "\n";
  if (opt.p > 0)
    std::cout << "orbitally " << opt.p << "-close  "
              << (is_orbitally_p_close(rd, chi, opt.p) ? "true" : "false") << "\n";
  return 0;
}

// Runs fn(i) for i in [0, n) on opt.jobs threads; results land in order.
void parallel_for(int jobs, size_t n, const std::function<void(size_t)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  int workers = std::min<std::size_t>(static_cast<size_t>(jobs), n);
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  for (auto& th : pool) th.join();
}

int cmd_hasse(const Options& opt) {
  ZipDatum zd = zip_datum_from_spec(load_group_spec(opt.spec_path));
  const RootDatum& rd = zd.rd;
  std::vector<StratumRecord> table = strata_table(zd, opt.max_weyl_order);

  std::vector<long> primes;
  if (opt.p > 0)
    primes.push_back(opt.p);
  else
    primes = {2, 3, 5};

  struct Task {
    long p;
    Character chi;
    const StratumRecord* rec;
    bool open_only_case;  // ample-only check on the open stratum
  };
  std::vector<Task> tasks;

  if (!opt.chi_csv.empty()) {
    Character chi = parse_chi(rd, opt.chi_csv);
    for (long p : primes)
      for (const auto& r : table) tasks.push_back({p, chi, &r, false});
  } else {
    // Seeded grid sweep: ample and orbitally p-close characters of L in the
    // box, all strata; plus ample-only characters on the open stratum.
    for (long p : primes) {
      auto ample_filter = [&](const Character& c) {
        return is_levi_character(zd, c) && is_ample(zd, c);
      };
      std::vector<Character> ample_chis = character_grid(rd, opt.box, ample_filter, opt.seed);
      const StratumRecord* open_stratum = &table.back();
      for (const auto& chi : ample_chis) {
        if (is_orbitally_p_close(rd, chi, p)) {
          for (const auto& r : table) tasks.push_back({p, chi, &r, false});
        }
        tasks.push_back({p, chi, open_stratum, true});
      }
    }
  }

  std::vector<HasseCertificate> certs(tasks.size());
  std::vector<std::string> errors(tasks.size());
  parallel_for(opt.jobs, tasks.size(), [&](size_t i) {
    try {
      FrobeniusModel fm = make_frobenius_model(rd, tasks[i].p);
      certs[i] = hasse_certificate(zd, fm, tasks[i].chi, tasks[i].rec->w);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });

  bool inconsistency = false;
  for (size_t i = 0; i < tasks.size(); ++i) {
    if (!errors[i].empty()) throw SpecError(errors[i]);
    const HasseCertificate& c = certs[i];
    if (c.verdict == Verdict::InternalInconsistency) inconsistency = true;
    if (tasks[i].open_only_case && c.ample && !c.all_coeffs_positive) inconsistency = true;
  }

  if (opt.json) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : certs) arr.push_back(certificate_json(rd, c));
    std::cout << arr.dump(2) << "\n";
  } else {
    std::cout << "# " << rd.tag << "  certificates: " << certs.size() << "\n";
    for (const auto& c : certs) {
      std::cout << "p=" << c.p << "  chi=" << rat_vec_text(c.chi.coords) << "  stratum=["
                << word_text(rd, c.stratum_w) << "]  N=" << c.N.get_str() << "  coeffs=";
      for (size_t k = 0; k < c.divisor.entries.size(); ++k) {
        if (k) std::cout << ",";
        std::cout << rat_to_string(c.divisor.entries[k].coeff);
      }
      std::cout << "  verdict=" << verdict_string(c.verdict) << "\n";
    }
  }
  return inconsistency ? 3 : 0;
}

int cmd_cones(const Options& opt) {
  ZipDatum zd = zip_datum_from_spec(load_group_spec(opt.spec_path));
  const RootDatum& rd = zd.rd;
  long p = opt.p > 0 ? opt.p : 3;

  if (!opt.chi_csv.empty()) {
    Character chi = parse_chi(rd, opt.chi_csv);
    ConeFlags f = cone_tests(zd, chi, p);
    FrobeniusModel fm = make_frobenius_model(rd, p);
    Character lam = h_inverse(rd, fm, zd.w0M, chi);
    if (opt.json) {
      ordered_json j;
      j["chi"] = rat_vec_json(chi.coords);
      j["p"] = p;
      j["in_C"] = f.in_C;
      j["in_A_p"] = f.in_A_p;
      j["in_C_plusplus"] = f.in_C_plusplus;
      j["h_w0M_inverse"] = rat_vec_json(lam.coords);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "# " << rd.tag << "  chi=" << rat_vec_text(chi.coords) << "  p=" << p << "\n";
      std::cout << "in_C            " << (f.in_C ? "true" : "false") << "\n";
      std::cout << "in_A_p          " << (f.in_A_p ? "true" : "false") << "\n";
      std::cout << "in_C_plusplus   " << (f.in_C_plusplus ? "true" : "false") << "\n";
      std::cout << "h_{w0M}^-1(chi) " << rat_vec_text(lam.coords) << "\n";
    }
    return 0;
  }

  // Sweep: every chi in A_p within the box must land in C_++.
  auto in_ap = [&](const Character& c) { return cone_tests(zd, c, p).in_A_p; };
  std::vector<Character> grid = character_grid(rd, opt.box, in_ap, opt.seed);
  size_t ok = 0;
  std::vector<std::string> failures;
  for (const auto& chi : grid) {
    if (cone_tests(zd, chi, p).in_C_plusplus)
      ++ok;
    else
      failures.push_back(rat_vec_text(chi.coords));
  }
  if (opt.json) {
    ordered_json j;
    j["p"] = p;
    j["box"] = opt.box;
    j["sampled_A_p"] = grid.size();
    j["in_C_plusplus"] = ok;
    j["failures"] = failures;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "# " << rd.tag << "  p=" << p << "  box=" << opt.box << "\n";
    std::cout << "A_p sample size      " << grid.size() << "\n";
    std::cout << "contained in C_++    " << ok << "\n";
    for (const auto& f : failures) std::cout << "FAIL " << f << "\n";
  }
  return failures.empty() ? 0 : 3;
}

int cmd_verify_omega(const Options& opt) {
  ordered_json rows = ordered_json::array();
  bool all_ok = true;
  for (Series s : {Series::A, Series::B, Series::C, Series::D}) {
    for (const auto& v : verify_special_fundamental_quasi_constant(s, 8)) {
      all_ok = all_ok && v.passed;
      if (opt.json) {
        ordered_json j;
        j["series"] = std::string(1, series_letter(v.series));
        j["rank"] = v.rank;
        j["vertex"] = v.vertex + 1;
        j["quasi_constant"] = v.quasi_constant;
        if (v.minuscule_applicable) j["minuscule"] = v.minuscule;
        if (v.pattern_applicable) j["long_short_pattern"] = v.pattern_ok;
        j["passed"] = v.passed;
        rows.push_back(j);
      } else {
        std::cout << series_letter(v.series) << v.rank << " vertex " << v.vertex + 1
                  << "  quasi-constant=" << (v.quasi_constant ? "true" : "false");
        if (v.minuscule_applicable)
          std::cout << "  minuscule=" << (v.minuscule ? "true" : "false");
        if (v.pattern_applicable)
          std::cout << "  long/short pattern=" << (v.pattern_ok ? "true" : "false");
        std::cout << "  " << (v.passed ? "ok" : "FAIL") << "\n";
      }
    }
  }

  // With a Siegel spec, also rebuild eta_omega from the standard weights and
  // check it against the ample / quasi-constant requirements.
  if (!opt.spec_path.empty()) {
    ZipDatum zd = zip_datum_from_spec(load_group_spec(opt.spec_path));
    if (zd.rd.series == Series::C && zd.rd.similitude) {
      Character eta = hodge_character(siegel_standard_weights(zd.rd), siegel_mu(zd.rd));
      bool qc = is_quasi_constant(zd.rd, eta);
      bool ample = is_ample(zd, eta);
      all_ok = all_ok && qc && ample;
      // weight-shift scan along eta_omega: smallest a <= a_max making
      // -w0c(a eta_omega + chi_eta) dominant and regular (chi_eta from --chi)
      Character chi_eta = opt.chi_csv.empty()
                              ? Character(std::vector<Rat>(zd.rd.rank, Rat(0)))
                              : parse_chi(zd.rd, opt.chi_csv);
      Character zero(std::vector<Rat>(zd.rd.rank, Rat(0)));
      std::optional<long> a = weight_shift_search(zd, zero, eta, chi_eta, 1, opt.a_max);
      if (opt.json) {
        ordered_json j;
        j["series"] = "C";
        j["rank"] = zd.rd.series_rank;
        j["hodge_character"] = rat_vec_json(eta.coords);
        j["quasi_constant"] = qc;
        j["ample"] = ample;
        j["weight_shift_a"] = a ? ordered_json(*a) : ordered_json("none");
        j["passed"] = qc && ample;
        rows.push_back(j);
      } else {
        std::cout << "siegel " << zd.rd.tag << " eta_omega=" << rat_vec_text(eta.coords)
                  << "  quasi-constant=" << (qc ? "true" : "false")
                  << "  ample=" << (ample ? "true" : "false") << "  "
                  << (qc && ample ? "ok" : "FAIL") << "\n";
        if (a)
          std::cout << "weight-shift: smallest a = " << *a << "\n";
        else
          std::cout << "weight-shift: none found up to a_max=" << opt.a_max << "\n";
      }
    }
  }
  if (opt.json) std::cout << rows.dump(2) << "\n";
  return all_ok ? 0 : 3;
}

int cmd_bench(const Options& opt) {
  GroupSpec spec;
  if (!opt.spec_path.empty()) {
    spec = load_group_spec(opt.spec_path);
  } else {
    spec.series = Series::C;
    spec.rank = 8;
    spec.similitude = false;
    spec.galois_order = 1;
    spec.mu.assign(8, Rat(1));
  }
  RootDatum rd = datum_from_spec(spec);
  if (rd.classical_weyl_order() > opt.max_weyl_order)
    throw SpecError("Weyl group order exceeds --max-weyl-order");

  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::uint64_t> hist;
  std::uint64_t count = 0;
  for_each_weyl_length(rd, [&](int len) {
    if (static_cast<size_t>(len) >= hist.size()) hist.resize(len + 1, 0);
    ++hist[len];
    ++count;
  });
  auto t1 = std::chrono::steady_clock::now();

  // Poincare product over the exponents of the series, as an exact check of
  // the full length histogram.
  std::vector<std::uint64_t> poincare{1};
  auto mul_by = [&](int top) {  // multiply by 1 + q + ... + q^top
    std::vector<std::uint64_t> next(poincare.size() + top, 0);
    for (size_t i = 0; i < poincare.size(); ++i)
      for (int k = 0; k <= top; ++k) next[i + k] += poincare[i];
    poincare = std::move(next);
  };
  const int n = rd.series_rank;
  switch (rd.series) {
    case Series::A:
      for (int i = 1; i <= n; ++i) mul_by(i);
      break;
    case Series::B:
    case Series::C:
      for (int i = 1; i <= n; ++i) mul_by(2 * i - 1);
      break;
    case Series::D:
      for (int i = 1; i < n; ++i) mul_by(2 * i - 1);
      mul_by(n - 1);
      break;
  }
  bool hist_ok = hist == poincare;

  ZipDatum zd = zip_datum_from_spec(spec);
  auto t2 = std::chrono::steady_clock::now();
  std::vector<WeylElement> labels = zip_stratum_labels(zd, opt.max_weyl_order);
  auto t3 = std::chrono::steady_clock::now();

  double enum_s = std::chrono::duration<double>(t1 - t0).count();
  double quot_s = std::chrono::duration<double>(t3 - t2).count();
  std::cerr << std::fixed << std::setprecision(3) << "enumeration " << enum_s << " s, quotient "
            << quot_s << " s\n";

  if (opt.json) {
    ordered_json j;
    j["datum"] = rd.tag;
    j["weyl_order"] = count;
    j["expected_order"] = rd.classical_weyl_order();
    j["length_histogram_matches_poincare"] = hist_ok;
    j["IW_size"] = labels.size();
    j["max_length"] = zd.max_stratum_length();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "# " << rd.tag << "\n";
    std::cout << "|W| enumerated       " << count << "\n";
    std::cout << "|W| classical        " << rd.classical_weyl_order() << "\n";
    std::cout << "histogram==poincare  " << (hist_ok ? "true" : "false") << "\n";
    std::cout << "|IW|                 " << labels.size() << "\n";
    std::cout << "max stratum length   " << zd.max_stratum_length() << "\n";
  }
  return (count == rd.classical_weyl_order() && hist_ok) ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zip-datum stratification and Hasse-invariant certificates"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool needs_spec) {
    auto* s = sub->add_option("--spec", opt.spec_path, "group-spec JSON file");
    if (needs_spec) s->required();
    sub->add_option("--p", opt.p, "prime p");
    sub->add_option("--chi", opt.chi_csv, "character, comma-separated rationals");
    sub->add_flag("--json", opt.json, "emit JSON instead of text");
    sub->add_option("--jobs", opt.jobs, "worker threads for sweeps");
    sub->add_option("--seed", opt.seed, "seed for sampled sweeps");
    sub->add_option("--max-weyl-order", opt.max_weyl_order, "enumeration cap");
    sub->add_option("--box", opt.box, "sweep box radius");
    sub->add_option("--a-max", opt.a_max, "weight-shift scan bound");
  };

  CLI::App* strata = app.add_subcommand("strata", "stratum table for a zip datum");
  add_common(strata, true);
  CLI::App* predicates = app.add_subcommand("predicates", "character predicate report");
  add_common(predicates, true);
  CLI::App* hasse = app.add_subcommand("hasse", "Hasse-invariant certificates");
  add_common(hasse, true);
  CLI::App* cones = app.add_subcommand("cones", "cone membership tests");
  add_common(cones, true);
  CLI::App* verify = app.add_subcommand("verify-omega", "Hodge-character verification");
  add_common(verify, false);
  CLI::App* bench = app.add_subcommand("bench", "enumeration benchmark");
  add_common(bench, false);

  try {
    app.parse(argc, argv);
    if (strata->parsed()) return cmd_strata(opt);
    if (predicates->parsed()) return cmd_predicates(opt);
    if (hasse->parsed()) return cmd_hasse(opt);
    if (cones->parsed()) return cmd_cones(opt);
    if (verify->parsed()) return cmd_verify_omega(opt);
    if (bench->parsed()) return cmd_bench(opt);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "INTERNAL-INCONSISTENCY: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
