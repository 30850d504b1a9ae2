#pragma once

// Exhaustive enumeration of coincidence rotations of a given index, class
// and CSL counting by canonical module comparison, and the cross-checks that
// tie the enumeration to the closed forms and to the counting functions.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "csl4/coincidence.hpp"
#include "csl4/counting.hpp"

namespace csl4 {

class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ceilings for desk-scale enumeration.
struct Budget {
  long max_n = 64;
  long max_icosian_n = 25;
  std::size_t max_elements = 2'000'000;
};

/// Totally positive divisors of n in Z[tau], one per associate class,
/// unit-normalized and sorted.
std::vector<GoldenInt> golden_divisors(long n);

/// Primitive reduced admissible pairs with Sigma = n, one per pair of
/// right-unit orbits. Empty for even n.
std::vector<RotParam> enum_pairs_d4(long n, const Budget& budget = {});
/// Rotations of Z^4 with index n: the pairs above for the relevant D4 index,
/// composed with the three coset representatives.
std::vector<RotParam> enum_z4(long n, const Budget& budget = {});
/// Primitive admissible q with Sigma = n, one per right-unit orbit.
std::vector<RotParam> enum_single_a4(long n, const Budget& budget = {});
/// Primitive admissible icosian pairs with Sigma = n, one per orbit pair.
std::vector<RotParam> enum_pairs_icosian(long n, const Budget& budget = {});

std::vector<RotParam> enumerate_params(Family f, long n, const Budget& budget = {});

struct EnumReport {
  Family family = Family::D4Star;
  long n = 0;
  std::size_t rotation_class_count = 0;
  std::size_t distinct_csl_count = 0;
  std::vector<RotParam> class_reps;
  std::vector<RotParam> witnesses;  // one per CSL
  std::vector<std::size_t> class_csl;  // witness index of each class
  double elapsed_seconds = 0;
};

EnumReport count_classes(Family f, long n, const Budget& budget = {});

/// sigma(r) == n, csl_closed == csl_brute and sigma == [Gamma : csl].
bool check_witness(const RotParam& r, long n);

struct Theorem1Report {
  bool ok = true;
  std::size_t pairs = 0;
  std::size_t comparisons = 0;
  std::size_t mismatches = 0;
  /// Comparisons where the CSLs agree but the rotations are not symmetry related.
  std::size_t shared_csl_not_related = 0;
};

/// Compares the criterion with HNF equality over all pairs of enumerated
/// representatives with index in `ns`.
Theorem1Report verify_theorem1(const std::vector<long>& ns, const Budget& budget = {});
bool verify_theorem1(long n);

struct PointGroupReport {
  Family family = Family::D4Star;
  std::size_t size = 0;
  bool preserves = false;
  bool closed = false;
  bool all_sigma_one = false;
};

/// Closure is checked on `closure_samples` products drawn with a fixed seed
/// (all products when the group is small enough).
PointGroupReport verify_point_group(Family f, std::size_t closure_samples = 4000);
bool verify_point_groups();

/// One line of a verification table.
struct VerifyRow {
  std::string check;
  Family family = Family::D4Star;
  long n = 0;
  std::string expected;
  std::string actual;
  bool passed = false;
};

/// Enumeration against the counting layer for every n <= max_n (icosian: n
/// in the spectrum only), plus the witness identities.
std::vector<VerifyRow> verify_family(Family f, long max_n, const Budget& budget = {});

}  // namespace csl4
