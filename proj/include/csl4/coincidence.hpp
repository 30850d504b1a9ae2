#pragma once

// Coincidence rotations of the four 4-dimensional families: the centred
// hypercubic lattice (Hurwitz ring J), the primitive hypercubic lattice Z^4,
// the root lattice A4 (as the twist-fixed part L of the icosian ring) and the
// icosian ring I itself.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "csl4/quaternion.hpp"
#include "csl4/zmodule.hpp"

namespace csl4 {

enum class Family { D4Star, Z4, A4, IcosianRing };

class CoincidenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr Family kAllFamilies[] = {Family::D4Star, Family::Z4, Family::A4, Family::IcosianRing};

std::string_view family_name(Family f);
/// Accepts "d4", "d4star", "z4", "a4", "icosian", "i".
std::optional<Family> parse_family(std::string_view name);

/// Rotations in the point group: 576, 192, 120, 7200.
std::size_t point_group_order(Family f);
/// The module Gamma: J and Z^4 in Q^4, L (rank 4) and I (rank 8) in Q^8.
const FreeModule& family_module(Family f);
std::size_t ambient_dim(Family f);

/// Basis quaternions of L, the standard basis of the A4 lattice.
const std::array<GoldenQuat, 4>& a4_basis();

/// A rotation R(q, p) x = q x conj(p) / |qp| (J, Z^4, I) or
/// R(q) x = q x q~ / |q q~| (A4), with primitive quaternion parameters.
/// Zero quaternions are rejected; non-primitive ones are replaced by their
/// primitive part and `primitivized()` is set.
class RotParam {
 public:
  static RotParam hurwitz(Family f, const HurwitzQuat& q, const HurwitzQuat& p);
  static RotParam icosian_pair(const Icosian& q, const Icosian& p);
  static RotParam a4(const Icosian& q);

  /// Parses the text quaternion format for the family; `p` is ignored for A4.
  static RotParam parse(Family f, const std::string& q, const std::string& p);

  Family family() const { return family_; }
  bool primitivized() const { return primitivized_; }

  const HurwitzQuat& hq() const { return std::get<HurwitzPair>(value_).q; }
  const HurwitzQuat& hp() const { return std::get<HurwitzPair>(value_).p; }
  const Icosian& iq() const;
  const Icosian& ip() const;

  std::string str() const;

 private:
  struct HurwitzPair {
    HurwitzQuat q;
    HurwitzQuat p;
  };
  struct IcosianPair {
    Icosian q;
    Icosian p;
  };
  struct Single {
    Icosian q;
  };
  Family family_ = Family::D4Star;
  bool primitivized_ = false;
  std::variant<HurwitzPair, IcosianPair, Single> value_;
};

/// Extension factors: q_alpha = alpha_q q, p_alpha = alpha_p p (for J and
/// Z^4 built from the reduced pair; for A4, p stands for q~).
struct HurwitzExtension {
  BigInt alpha_q;
  BigInt alpha_p;
  HurwitzQuat q_alpha;
  HurwitzQuat p_alpha;
};
struct IcosianExtension {
  GoldenInt alpha_q;
  GoldenInt alpha_p;
  Icosian q_alpha;
  Icosian p_alpha;
};
using AlphaExt = std::variant<HurwitzExtension, IcosianExtension>;

struct CoinData {
  BigInt sigma;
  FreeModule csl;
  AlphaExt alpha;
};

bool is_admissible(const RotParam& r);

/// The rotation as a 4x4 matrix over Q(sqrt5) (rational for J and Z^4).
GoldenMatrix rotation_matrix(const RotParam& r);
/// The rotation acting on the ambient space of family_module().
RatMatrix ambient_matrix(const RotParam& r);

AlphaExt reduced_extension(const RotParam& r);

BigInt sigma(const RotParam& r);

FreeModule csl_closed(const RotParam& r);
/// Gamma intersected with R Gamma, straight from the definition.
FreeModule csl_brute(const RotParam& r);
/// R Gamma.
FreeModule rotated_module(const RotParam& r);

CoinData coincidence_data(const RotParam& r);

/// Equality criterion for the CSLs of two primitive reduced admissible pairs
/// of the centred hypercubic lattice.
bool theorem1_equal(const RotParam& a, const RotParam& b);

/// Canonical key of the criterion: |qp|, lcm of norms and the two glcds.
std::string theorem1_key(const RotParam& r);

/// R1 Gamma == R2 Gamma.
bool symmetry_related(const RotParam& a, const RotParam& b);

/// Point-group rotations acting on the ambient space; cached.
const std::vector<RatMatrix>& point_group_rotations(Family f);

/// Parameters of the point-group rotations, one per element.
const std::vector<RotParam>& point_group_params(Family f);

/// Three parameters (s, t) of rotations R(s, t) representing the cosets of
/// the Z^4 point group inside the centred hypercubic one; the first is the
/// identity.
const std::vector<std::pair<HurwitzQuat, HurwitzQuat>>& z4_coset_params();

}  // namespace csl4
