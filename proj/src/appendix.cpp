#include "zipstrata/appendix.hpp"

#include "zipstrata/characters.hpp"
#include "zipstrata/weyl.hpp"

#include <algorithm>
#include <map>

namespace zipstrata {

namespace {

long total_multiplicity(const WeightMultiset& wm) {
  long t = 0;
  for (const auto& e : wm.entries) t += e.multiplicity;
  return t;
}

}  // namespace

void validate_weight_multiset(const WeightMultiset& wm) {
  if (wm.entries.empty()) return;
  const int n = wm.entries.front().weight.rank();
  if (wm.central.rank() != n)
    throw std::invalid_argument("central weight rank mismatch");
  std::map<std::vector<Rat>, long> mult;
  for (const auto& e : wm.entries) {
    if (e.weight.rank() != n) throw std::invalid_argument("weight rank mismatch");
    if (e.multiplicity <= 0) throw std::invalid_argument("multiplicities must be positive");
    mult[e.weight.coords] += e.multiplicity;
  }
  for (const auto& kv : mult) {
    Character dual = sub(wm.central, Character(kv.first));
    auto it = mult.find(dual.coords);
    if (it == mult.end() || it->second != kv.second)
      throw std::invalid_argument("weight multiset is not self-dual under xi -> c - xi");
  }
  if (total_multiplicity(wm) % 2 != 0)
    throw std::invalid_argument("total dimension must be even");
}

MuSplit mu_split(const WeightMultiset& wm, const Cocharacter& mu) {
  validate_weight_multiset(wm);
  if (wm.entries.empty()) throw std::invalid_argument("empty weight multiset");
  std::vector<Rat> values;
  for (const auto& e : wm.entries) {
    Rat v = pair(e.weight, mu);
    if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
  }
  if (values.size() != 2)
    throw std::invalid_argument("mu-pairings must take exactly two values");
  std::sort(values.begin(), values.end());
  if (values[1] - values[0] != 1)
    throw std::invalid_argument("mu-pairing values must differ by one");

  MuSplit split;
  split.a = values[0];
  split.top.central = wm.central;
  split.bottom.central = wm.central;
  for (const auto& e : wm.entries) {
    if (pair(e.weight, mu) == values[1])
      split.top.entries.push_back(e);
    else
      split.bottom.entries.push_back(e);
  }
  if (total_multiplicity(split.top) != total_multiplicity(split.bottom))
    throw std::logic_error("mu-split halves have different sizes");
  return split;
}

WeightMultiset merge(const MuSplit& split) {
  WeightMultiset wm;
  wm.central = split.top.central;
  wm.entries = split.top.entries;
  wm.entries.insert(wm.entries.end(), split.bottom.entries.begin(), split.bottom.entries.end());
  return wm;
}

Character hodge_character(const WeightMultiset& wm, const Cocharacter& mu) {
  MuSplit split = mu_split(wm, mu);
  std::vector<Rat> sum(wm.entries.front().weight.rank(), Rat(0));
  for (const auto& e : split.top.entries)
    for (int i = 0; i < e.weight.rank(); ++i)
      sum[i] += Rat(e.multiplicity) * e.weight.coords[i];
  for (Rat& q : sum) q = -q;
  return Character(std::move(sum));
}

std::vector<PositivityViolation> top_half_positivity_check(
    const WeightMultiset& wm, const Cocharacter& mu,
    const std::vector<Cocharacter>& special_coroots) {
  std::vector<PositivityViolation> violations;
  if (wm.entries.empty()) return violations;
  MuSplit split = mu_split(wm, mu);
  auto in_top = [&](const Character& xi) {
    for (const auto& e : split.top.entries)
      if (e.weight == xi) return true;
    return false;
  };
  for (int s = 0; s < static_cast<int>(special_coroots.size()); ++s) {
    for (const auto& e : split.top.entries) {
      if (pair(e.weight, special_coroots[s]) < 0)
        violations.push_back({e.weight, s, "top weight pairs negatively with a special coroot"});
    }
    for (const auto& e : wm.entries) {
      if (pair(e.weight, special_coroots[s]) > 0 && !in_top(e.weight))
        violations.push_back({e.weight, s, "positively-paired weight missing from the top half"});
    }
  }
  return violations;
}

WeightMultiset siegel_standard_weights(const RootDatum& rd) {
  if (rd.series != Series::C || !rd.similitude)
    throw std::invalid_argument("standard weights require a Siegel datum");
  WeightMultiset wm;
  std::vector<Rat> c(rd.rank, Rat(0));
  c[0] = 1;  // e0
  wm.central = Character(c);
  for (int i = 1; i <= rd.series_rank; ++i) {
    std::vector<Rat> top(rd.rank, Rat(0)), bot(rd.rank, Rat(0));
    top[i] = 1;          // e_i
    bot[0] = 1;
    bot[i] = -1;         // e0 - e_i
    wm.entries.push_back({Character(top), 1});
    wm.entries.push_back({Character(bot), 1});
  }
  return wm;
}

Cocharacter siegel_mu(const RootDatum& rd) {
  if (rd.series != Series::C || !rd.similitude)
    throw std::invalid_argument("siegel_mu requires a Siegel datum");
  return Cocharacter(std::vector<Rat>(rd.rank, Rat(1)));
}

namespace {

// Squared Euclidean norm in the standard coordinates; used only to separate
// the two coroot lengths of the B/C realizations.
Rat norm2(const Cocharacter& c) {
  Rat s = 0;
  for (const Rat& q : c.coords) s += q * q;
  return s;
}

}  // namespace

std::vector<VertexVerdict> verify_special_fundamental_quasi_constant(Series series, int max_rank) {
  int min_rank;
  switch (series) {
    case Series::A: min_rank = 1; break;
    case Series::B:
    case Series::C: min_rank = 2; break;
    case Series::D: min_rank = 3; break;
    default: throw std::logic_error("bad series");
  }
  std::vector<VertexVerdict> out;
  for (int rank = min_rank; rank <= max_rank; ++rank) {
    RootDatum rd = build_root_datum(series, rank, false, 1);
    std::vector<Character> fw = fundamental_weights(rd);
    bool two_lengths = series == Series::B || series == Series::C;
    Rat min_n2(0), max_n2(0);
    if (two_lengths) {
      bool first = true;
      for (const auto& c : rd.positive_coroots) {
        Rat n2 = norm2(c);
        if (first || n2 < min_n2) min_n2 = n2;
        if (first || n2 > max_n2) max_n2 = n2;
        first = false;
      }
    }
    for (int v : special_simple_roots(rd)) {
      VertexVerdict vv;
      vv.series = series;
      vv.rank = rank;
      vv.vertex = v;
      vv.quasi_constant = is_quasi_constant(rd, fw[v]);
      if (series == Series::A || series == Series::D) {
        vv.minuscule_applicable = true;
        vv.minuscule = is_minuscule(rd, fw[v]);
      }
      if (two_lengths) {
        vv.pattern_applicable = true;
        vv.pattern_ok = true;
        // nonzero |<f, alpha^vee>| must be 1 on short coroots and 2 on long ones
        for (const auto& orbit : coroot_orbits(rd)) {
          bool is_short = norm2(orbit.front()) == min_n2;
          for (const auto& c : orbit) {
            Rat p = pair(fw[v], c);
            if (p < 0) p = -p;
            if (p == 0) continue;
            if (p != (is_short ? 1 : 2)) vv.pattern_ok = false;
          }
        }
      }
      vv.passed = vv.quasi_constant && (!vv.minuscule_applicable || vv.minuscule) &&
                  (!vv.pattern_applicable || vv.pattern_ok);
      out.push_back(vv);
    }
  }
  return out;
}

}  // namespace zipstrata
