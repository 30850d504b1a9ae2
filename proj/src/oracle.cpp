#include "csl4/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <unordered_map>
#include <unordered_set>

namespace csl4 {

namespace {

void check_budget(long n, long limit, const char* what) {
  if (n > limit)
    throw BudgetError(std::string(what) + " index " + std::to_string(n) + " exceeds the budget of " +
                      std::to_string(limit));
}

class VolumeMeter {
 public:
  explicit VolumeMeter(const Budget& b) : limit_(b.max_elements) {}
  void add(std::size_t k) {
    used_ += k;
    if (used_ > limit_)
      throw BudgetError("enumeration volume exceeds the budget of " + std::to_string(limit_) + " elements");
  }

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
};

template <class Q>
std::vector<Q> right_orbit_reps(const std::vector<Q>& elems, const std::vector<Q>& units) {
  std::unordered_set<Q, HalfQuatHash> seen;
  std::vector<Q> reps;
  for (const auto& q : elems) {
    if (!is_primitive(q) || seen.count(q)) continue;
    reps.push_back(q);
    for (const auto& u : units) seen.insert(q * u);
  }
  return reps;
}

std::vector<long> int_divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

// A prime of Z[tau] above the split or ramified rational prime p.
GoldenInt prime_above(long p) {
  if (p == 5) return GoldenInt(2, 1);
  for (long b = 1;; ++b) {
    auto s = int_sqrt(BigInt(5 * b * b + 4 * p));
    if (s && (*s - b) % 2 == 0) return GoldenInt((*s - b) / 2, BigInt(b));
  }
}

bool split_prime(long p) { return p % 5 == 1 || p % 5 == 4; }

std::string matrix_key(const RatMatrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s += to_string(m(i, j)) + ",";
  return s;
}

}  // namespace

std::vector<GoldenInt> golden_divisors(long n) {
  if (n < 1) throw CountingError("golden_divisors needs n >= 1");
  std::vector<GoldenInt> divs{GoldenInt(1)};
  for (auto [p, e] : factorize(n)) {
    std::vector<GoldenInt> local;
    if (p == 5) {
      GoldenInt pi = prime_above(p);
      GoldenInt pw(1);
      for (unsigned i = 0; i <= 2 * e; ++i, pw *= pi) local.push_back(pw);
    } else if (split_prime(p)) {
      GoldenInt pi = prime_above(p);
      GoldenInt a(1);
      for (unsigned i = 0; i <= e; ++i, a *= pi) {
        GoldenInt b(1);
        for (unsigned j = 0; j <= e; ++j, b *= pi.conj()) local.push_back(a * b);
      }
    } else {
      GoldenInt pw(1);
      for (unsigned i = 0; i <= e; ++i, pw *= GoldenInt(p)) local.push_back(pw);
    }
    std::vector<GoldenInt> next;
    for (const auto& d : divs)
      for (const auto& l : local) next.push_back(d * l);
    divs = std::move(next);
  }
  for (auto& d : divs) d = golden_normalize(d);
  std::sort(divs.begin(), divs.end());
  divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
  return divs;
}

std::vector<RotParam> enum_pairs_d4(long n, const Budget& budget) {
  check_budget(n, budget.max_n, "d4");
  if (n < 1 || n % 2 == 0) return {};
  VolumeMeter meter(budget);
  std::unordered_map<long, std::vector<HurwitzQuat>> reps;
  for (long a : int_divisors(n)) {
    auto elems = enumerate_norm_J(a);
    meter.add(elems.size());
    reps[a] = right_orbit_reps(elems, hurwitz_units());
  }
  std::vector<RotParam> out;
  for (long a : int_divisors(n))
    for (long b : int_divisors(n)) {
      if (lcm(BigInt(a), BigInt(b)) != n || !int_sqrt(BigInt(a) * b)) continue;
      for (const auto& q : reps[a])
        for (const auto& p : reps[b]) out.push_back(RotParam::hurwitz(Family::D4Star, q, p));
    }
  return out;
}

std::vector<RotParam> enum_z4(long n, const Budget& budget) {
  check_budget(n, budget.max_n, "z4");
  if (n < 1 || n % 4 == 0) return {};
  long base = n % 2 == 0 ? n / 2 : n;
  std::vector<RotParam> out;
  for (const auto& r : enum_pairs_d4(base, budget))
    for (const auto& [s, t] : z4_coset_params()) {
      RotParam c = RotParam::hurwitz(Family::Z4, r.hq() * s, r.hp() * t);
      if (sigma(c) == n) out.push_back(c);
    }
  return out;
}

std::vector<RotParam> enum_single_a4(long n, const Budget& budget) {
  check_budget(n, budget.max_n, "a4");
  if (n < 1) return {};
  VolumeMeter meter(budget);
  std::vector<RotParam> out;
  for (const auto& a : golden_divisors(n)) {
    if (!int_sqrt(golden_norm(a))) continue;
    GoldenInt l = golden_lcm(a, a.conj());
    if (!(l == GoldenInt(n))) continue;
    auto elems = enumerate_norm_I(a);
    meter.add(elems.size());
    for (const auto& q : right_orbit_reps(elems, icosian_units())) out.push_back(RotParam::a4(q));
  }
  return out;
}

std::vector<RotParam> enum_pairs_icosian(long n, const Budget& budget) {
  check_budget(n, budget.max_icosian_n, "icosian");
  if (n < 1) return {};
  VolumeMeter meter(budget);
  std::vector<GoldenInt> divs;
  for (const auto& d : golden_divisors(n))
    if (n % golden_norm(d) == 0) divs.push_back(d);
  std::vector<std::vector<Icosian>> reps(divs.size());
  std::vector<bool> done(divs.size(), false);
  auto reps_of = [&](std::size_t i) -> const std::vector<Icosian>& {
    if (!done[i]) {
      auto elems = enumerate_norm_I(divs[i]);
      meter.add(elems.size());
      reps[i] = right_orbit_reps(elems, icosian_units());
      done[i] = true;
    }
    return reps[i];
  };
  std::vector<RotParam> out;
  for (std::size_t i = 0; i < divs.size(); ++i)
    for (std::size_t j = 0; j < divs.size(); ++j) {
      if (golden_norm(golden_lcm(divs[i], divs[j])) != n || !golden_sqrt(divs[i] * divs[j])) continue;
      const auto& rq = reps_of(i);
      const auto& rp = reps_of(j);
      for (const auto& q : rq)
        for (const auto& p : rp) out.push_back(RotParam::icosian_pair(q, p));
    }
  return out;
}

std::vector<RotParam> enumerate_params(Family f, long n, const Budget& budget) {
  switch (f) {
    case Family::D4Star: return enum_pairs_d4(n, budget);
    case Family::Z4: return enum_z4(n, budget);
    case Family::A4: return enum_single_a4(n, budget);
    case Family::IcosianRing: return enum_pairs_icosian(n, budget);
  }
  throw CoincidenceError("unknown family");
}

EnumReport count_classes(Family f, long n, const Budget& budget) {
  if (n < 1) throw std::invalid_argument("index must be at least 1");
  auto start = std::chrono::steady_clock::now();
  EnumReport report;
  report.family = f;
  report.n = n;
  std::unordered_set<std::string> classes;
  std::unordered_map<std::string, std::size_t> csls;
  for (const auto& r : enumerate_params(f, n, budget)) {
    if (!classes.insert(rotated_module(r).key()).second) continue;
    report.class_reps.push_back(r);
    auto [it, fresh] = csls.emplace(csl_closed(r).key(), report.witnesses.size());
    if (fresh) report.witnesses.push_back(r);
    report.class_csl.push_back(it->second);
  }
  report.rotation_class_count = report.class_reps.size();
  report.distinct_csl_count = report.witnesses.size();
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool check_witness(const RotParam& r, long n) {
  BigInt s = sigma(r);
  FreeModule brute = csl_brute(r);
  return s == n && csl_closed(r) == brute && index_in(brute, family_module(r.family())) == s;
}

Theorem1Report verify_theorem1(const std::vector<long>& ns, const Budget& budget) {
  struct Entry {
    std::string criterion;
    std::string csl;
    std::string image;
  };
  std::vector<Entry> entries;
  for (long n : ns)
    for (const auto& r : enum_pairs_d4(n, budget))
      entries.push_back({theorem1_key(r), csl_closed(r).key(), rotated_module(r).key()});
  Theorem1Report rep;
  rep.pairs = entries.size();
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      ++rep.comparisons;
      bool crit = entries[i].criterion == entries[j].criterion;
      bool same = entries[i].csl == entries[j].csl;
      if (crit != same) ++rep.mismatches;
      if (same && entries[i].image != entries[j].image) ++rep.shared_csl_not_related;
    }
  rep.ok = rep.mismatches == 0;
  return rep;
}

bool verify_theorem1(long n) { return verify_theorem1(std::vector<long>{n}).ok; }

PointGroupReport verify_point_group(Family f, std::size_t closure_samples) {
  PointGroupReport rep;
  rep.family = f;
  const auto& mats = point_group_rotations(f);
  const auto& params = point_group_params(f);
  rep.size = mats.size();
  const FreeModule& gamma = family_module(f);
  rep.preserves = std::all_of(mats.begin(), mats.end(), [&](const RatMatrix& m) { return apply_map(gamma, m) == gamma; });
  rep.all_sigma_one = std::all_of(params.begin(), params.end(), [](const RotParam& r) { return sigma(r) == 1; });
  std::unordered_set<std::string> keys;
  for (const auto& m : mats) keys.insert(matrix_key(m));
  rep.closed = true;
  const std::size_t n = mats.size();
  if (n * n <= closure_samples) {
    for (std::size_t i = 0; i < n && rep.closed; ++i)
      for (std::size_t j = 0; j < n && rep.closed; ++j) rep.closed = keys.count(matrix_key(mats[i] * mats[j])) > 0;
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t k = 0; k < closure_samples && rep.closed; ++k)
      rep.closed = keys.count(matrix_key(mats[pick(rng)] * mats[pick(rng)])) > 0;
  }
  return rep;
}

bool verify_point_groups() {
  for (Family f : kAllFamilies) {
    auto rep = verify_point_group(f);
    if (rep.size != point_group_order(f) || !rep.preserves || !rep.closed || !rep.all_sigma_one) return false;
  }
  return true;
}

std::vector<VerifyRow> verify_family(Family f, long max_n, const Budget& budget) {
  std::vector<VerifyRow> rows;
  for (long n = 1; n <= max_n; ++n) {
    if (f == Family::IcosianRing && !spectrum_member(f, n)) continue;
    EnumReport rep = count_classes(f, n, budget);
    BigInt rot = f_rot(f, n);
    BigInt csl = f_csl(f, n);
    rows.push_back({"classes", f, n, rot.get_str(), std::to_string(rep.rotation_class_count),
                    rot == static_cast<unsigned long>(rep.rotation_class_count)});
    rows.push_back({"csls", f, n, csl.get_str(), std::to_string(rep.distinct_csl_count),
                    csl == static_cast<unsigned long>(rep.distinct_csl_count)});
    std::size_t good = 0;
    for (const auto& w : rep.witnesses) good += check_witness(w, n) ? 1 : 0;
    rows.push_back({"witnesses", f, n, std::to_string(rep.witnesses.size()), std::to_string(good),
                    good == rep.witnesses.size()});
  }
  return rows;
}

}  // namespace csl4
