#include "csl4/coincidence.hpp"

#include <unordered_map>
#include <unordered_set>

namespace csl4 {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::D4Star: return "d4";
    case Family::Z4: return "z4";
    case Family::A4: return "a4";
    case Family::IcosianRing: return "icosian";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "d4" || name == "d4star" || name == "D4Star") return Family::D4Star;
  if (name == "z4" || name == "Z4") return Family::Z4;
  if (name == "a4" || name == "A4") return Family::A4;
  if (name == "icosian" || name == "i" || name == "I" || name == "IcosianRing") return Family::IcosianRing;
  return std::nullopt;
}

std::size_t point_group_order(Family f) {
  switch (f) {
    case Family::D4Star: return 576;
    case Family::Z4: return 192;
    case Family::A4: return 120;
    case Family::IcosianRing: return 7200;
  }
  return 0;
}

std::size_t ambient_dim(Family f) {
  return (f == Family::D4Star || f == Family::Z4) ? 4 : 8;
}

namespace {

const std::array<HurwitzQuat, 4>& hurwitz_basis() {
  static const std::array<HurwitzQuat, 4> basis = {
      HurwitzQuat::from_coords(1, 0, 0, 0), HurwitzQuat::from_coords(0, 1, 0, 0),
      HurwitzQuat::from_coords(0, 0, 1, 0), HurwitzQuat::from_doubled({1, 1, 1, 1})};
  return basis;
}

// Z-basis of I: b_k and tau b_k.
const std::vector<Icosian>& icosian_z_basis() {
  static const std::vector<Icosian> basis = [] {
    std::vector<Icosian> out;
    for (const auto& b : icosian_basis()) {
      out.push_back(b);
      out.push_back(GoldenInt::tau() * b);
    }
    return out;
  }();
  return basis;
}

GoldenQuat to_golden(const RatQuat& q) {
  GoldenQuat g;
  for (std::size_t i = 0; i < 4; ++i) g.c[i] = GoldenRat(q.c[i]);
  return g;
}

RatVector vec(const HurwitzQuat& q) { return to_vector(q.to_field()); }
RatVector vec(const Icosian& q) { return to_vector(q.to_field()); }

}  // namespace

const std::array<GoldenQuat, 4>& a4_basis() {
  static const std::array<GoldenQuat, 4> basis = [] {
    const GoldenRat half(GoldenInt(1), 2);
    const GoldenRat tau(GoldenInt::tau());
    std::array<GoldenQuat, 4> b;
    b[0] = GoldenQuat{{1, 0, 0, 0}};
    b[1] = GoldenQuat{{-half, half, half, half}};
    b[2] = GoldenQuat{{0, -1, 0, 0}};
    b[3] = GoldenQuat{{0, half, half * (tau - GoldenRat(1)), -half * tau}};
    return b;
  }();
  return basis;
}

const FreeModule& family_module(Family f) {
  static const FreeModule d4 = [] {
    std::vector<RatVector> gens;
    for (const auto& b : hurwitz_basis()) gens.push_back(vec(b));
    return FreeModule::from_generators(4, gens);
  }();
  static const FreeModule z4 = FreeModule::standard_lattice(4);
  static const FreeModule a4 = golden_embed_module({a4_basis().begin(), a4_basis().end()}, false);
  static const FreeModule ico = [] {
    std::vector<GoldenQuat> gens;
    for (const auto& b : icosian_basis()) gens.push_back(b.to_field());
    return golden_embed_module(gens, true);
  }();
  switch (f) {
    case Family::D4Star: return d4;
    case Family::Z4: return z4;
    case Family::A4: return a4;
    case Family::IcosianRing: return ico;
  }
  throw CoincidenceError("unknown family");
}

// ---------------------------------------------------------------------------
// RotParam

RotParam RotParam::hurwitz(Family f, const HurwitzQuat& q, const HurwitzQuat& p) {
  if (f != Family::D4Star && f != Family::Z4)
    throw CoincidenceError("Hurwitz parameters need the d4 or z4 family");
  if (q.is_zero() || p.is_zero()) throw CoincidenceError("zero quaternion parameter");
  auto cq = primitive_part(q);
  auto cp = primitive_part(p);
  RotParam r;
  r.family_ = f;
  r.primitivized_ = cq.content != 1 || cp.content != 1;
  r.value_ = HurwitzPair{cq.primitive, cp.primitive};
  return r;
}

RotParam RotParam::icosian_pair(const Icosian& q, const Icosian& p) {
  if (q.is_zero() || p.is_zero()) throw CoincidenceError("zero quaternion parameter");
  auto cq = primitive_part(q);
  auto cp = primitive_part(p);
  RotParam r;
  r.family_ = Family::IcosianRing;
  r.primitivized_ = !golden_is_unit(cq.content) || !golden_is_unit(cp.content);
  r.value_ = IcosianPair{cq.primitive, cp.primitive};
  return r;
}

RotParam RotParam::a4(const Icosian& q) {
  if (q.is_zero()) throw CoincidenceError("zero quaternion parameter");
  auto cq = primitive_part(q);
  RotParam r;
  r.family_ = Family::A4;
  r.primitivized_ = !golden_is_unit(cq.content);
  r.value_ = Single{cq.primitive};
  return r;
}

RotParam RotParam::parse(Family f, const std::string& q, const std::string& p) {
  switch (f) {
    case Family::D4Star:
    case Family::Z4: return hurwitz(f, parse_hurwitz(q), parse_hurwitz(p));
    case Family::A4: return a4(parse_icosian(q));
    case Family::IcosianRing: return icosian_pair(parse_icosian(q), parse_icosian(p));
  }
  throw CoincidenceError("unknown family");
}

const Icosian& RotParam::iq() const {
  if (const auto* s = std::get_if<Single>(&value_)) return s->q;
  return std::get<IcosianPair>(value_).q;
}

const Icosian& RotParam::ip() const { return std::get<IcosianPair>(value_).p; }

std::string RotParam::str() const {
  switch (family_) {
    case Family::D4Star:
    case Family::Z4: return "q=" + hq().str() + " p=" + hp().str();
    case Family::A4: return "q=" + iq().str();
    case Family::IcosianRing: return "q=" + iq().str() + " p=" + ip().str();
  }
  return {};
}

// ---------------------------------------------------------------------------
// Admissibility and rotation matrices

bool is_admissible(const RotParam& r) {
  switch (r.family()) {
    case Family::D4Star:
    case Family::Z4: return int_sqrt(r.hq().norm() * r.hp().norm()).has_value();
    case Family::A4: return int_sqrt(golden_norm(r.iq().norm())).has_value();
    case Family::IcosianRing: return golden_sqrt(r.iq().norm() * r.ip().norm()).has_value();
  }
  return false;
}

namespace {

void require_admissible(const RotParam& r) {
  if (!is_admissible(r)) throw CoincidenceError("parameter is not admissible: " + r.str());
}

// x -> left * x * right / scale on the basis 1, i, j, k.
GoldenMatrix sandwich_matrix(const GoldenQuat& left, const GoldenQuat& right, const GoldenRat& scale) {
  GoldenMatrix m(4, 4);
  for (std::size_t j = 0; j < 4; ++j) {
    GoldenQuat e;
    e.c[j] = GoldenRat(1);
    GoldenQuat img = left * e * right;
    for (std::size_t i = 0; i < 4; ++i) m(i, j) = img.c[i] / scale;
  }
  return m;
}

}  // namespace

GoldenMatrix rotation_matrix(const RotParam& r) {
  require_admissible(r);
  switch (r.family()) {
    case Family::D4Star:
    case Family::Z4: {
      BigInt s = *int_sqrt(r.hq().norm() * r.hp().norm());
      return sandwich_matrix(to_golden(r.hq().to_field()), to_golden(r.hp().conj().to_field()),
                             GoldenRat(BigRat(s)));
    }
    case Family::A4: {
      BigInt s = *int_sqrt(golden_norm(r.iq().norm()));
      return sandwich_matrix(r.iq().to_field(), twist(r.iq()).to_field(), GoldenRat(BigRat(s)));
    }
    case Family::IcosianRing: {
      GoldenInt s = *golden_sqrt(r.iq().norm() * r.ip().norm());
      return sandwich_matrix(r.iq().to_field(), r.ip().conj().to_field(), GoldenRat(s));
    }
  }
  throw CoincidenceError("unknown family");
}

RatMatrix ambient_matrix(const RotParam& r) {
  GoldenMatrix g = rotation_matrix(r);
  if (ambient_dim(r.family()) == 8) return golden_embed(g);
  RatMatrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = g(i, j).rational_part();
  return m;
}

// ---------------------------------------------------------------------------
// Extensions and indices

AlphaExt reduced_extension(const RotParam& r) {
  require_admissible(r);
  switch (r.family()) {
    case Family::D4Star:
    case Family::Z4: {
      HurwitzQuat qr = reduced_decompose(r.hq()).reduced;
      HurwitzQuat pr = reduced_decompose(r.hp()).reduced;
      BigInt nq = qr.norm();
      BigInt np = pr.norm();
      BigInt g = gcd(nq, np);
      auto aq = int_sqrt(np / g);
      auto ap = int_sqrt(nq / g);
      if (!aq || !ap) throw CoincidenceError("extension factor is not an integer: " + r.str());
      return HurwitzExtension{*aq, *ap, *aq * qr, *ap * pr};
    }
    case Family::A4: {
      GoldenInt a = r.iq().norm();
      GoldenInt g = golden_gcd(a, a.conj());
      auto aq = golden_sqrt(*golden_divide(a.conj(), g));
      if (!aq) throw CoincidenceError("extension factor is not in Z[tau]: " + r.str());
      GoldenInt alpha = golden_normalize(*aq);
      Icosian q_alpha = alpha * r.iq();
      return IcosianExtension{alpha, alpha.conj(), q_alpha, twist(q_alpha)};
    }
    case Family::IcosianRing: {
      GoldenInt a = r.iq().norm();
      GoldenInt b = r.ip().norm();
      GoldenInt g = golden_gcd(a, b);
      auto aq = golden_sqrt(*golden_divide(b, g));
      auto ap = golden_sqrt(*golden_divide(a, g));
      if (!aq || !ap) throw CoincidenceError("extension factor is not in Z[tau]: " + r.str());
      GoldenInt alq = golden_normalize(*aq);
      GoldenInt alp = golden_normalize(*ap);
      return IcosianExtension{alq, alp, alq * r.iq(), alp * r.ip()};
    }
  }
  throw CoincidenceError("unknown family");
}

namespace {

BigInt sigma_d4(const RotParam& r) {
  BigInt nq = reduced_decompose(r.hq()).reduced.norm();
  BigInt np = reduced_decompose(r.hp()).reduced.norm();
  return lcm(nq, np);
}

}  // namespace

FreeModule rotated_module(const RotParam& r) {
  return apply_map(family_module(r.family()), ambient_matrix(r));
}

FreeModule csl_brute(const RotParam& r) {
  return module_intersect(family_module(r.family()), rotated_module(r));
}

BigInt sigma(const RotParam& r) {
  require_admissible(r);
  switch (r.family()) {
    case Family::D4Star: return sigma_d4(r);
    case Family::Z4: {
      BigInt s = index_in(csl_brute(r), family_module(Family::Z4));
      BigInt base = sigma_d4(r);
      if (s != base && s != 2 * base)
        throw CoincidenceError("Z4 index " + s.get_str() + " is neither Sigma nor 2 Sigma of " + r.str());
      return s;
    }
    case Family::A4: {
      GoldenInt a = r.iq().norm();
      GoldenInt l = golden_lcm(a, a.conj());
      if (!l.is_rational()) throw CoincidenceError("A4 index is not rational for " + r.str());
      return l.a();
    }
    case Family::IcosianRing: return golden_norm(golden_lcm(r.iq().norm(), r.ip().norm()));
  }
  throw CoincidenceError("unknown family");
}

FreeModule csl_closed(const RotParam& r) {
  require_admissible(r);
  switch (r.family()) {
    case Family::D4Star: {
      const auto ext = std::get<HurwitzExtension>(reduced_extension(r));
      HurwitzQuat pbar = ext.p_alpha.conj();
      std::vector<RatVector> gens;
      for (const auto& b : hurwitz_basis()) {
        gens.push_back(vec(ext.q_alpha * b));
        gens.push_back(vec(b * pbar));
      }
      return FreeModule::from_generators(4, gens);
    }
    case Family::Z4: {
      RotParam centred = RotParam::hurwitz(Family::D4Star, r.hq(), r.hp());
      FreeModule m = module_intersect(csl_closed(centred), family_module(Family::Z4));
      return module_intersect(m, rotated_module(r));
    }
    case Family::A4:
    case Family::IcosianRing: {
      const auto ext = std::get<IcosianExtension>(reduced_extension(r));
      // A4: q_alpha I + I q~_alpha; icosian: q_alpha I + I conj(p_alpha).
      Icosian right = r.family() == Family::A4 ? ext.p_alpha : ext.p_alpha.conj();
      std::vector<RatVector> gens;
      for (const auto& e : icosian_z_basis()) {
        gens.push_back(vec(ext.q_alpha * e));
        gens.push_back(vec(e * right));
      }
      FreeModule m = FreeModule::from_generators(8, gens);
      if (r.family() == Family::A4) return module_intersect(m, family_module(Family::A4));
      return m;
    }
  }
  throw CoincidenceError("unknown family");
}

CoinData coincidence_data(const RotParam& r) {
  return {sigma(r), csl_closed(r), reduced_extension(r)};
}

// ---------------------------------------------------------------------------
// Equality criterion and symmetry relation

std::string theorem1_key(const RotParam& r) {
  if (r.family() != Family::D4Star) throw CoincidenceError("theorem1 applies to the d4 family only");
  require_admissible(r);
  if (!is_reduced(r.hq()) || !is_reduced(r.hp()))
    throw CoincidenceError("theorem1 needs a reduced pair: " + r.str());
  BigInt n = *int_sqrt(r.hq().norm() * r.hp().norm());
  BigInt l = lcm(r.hq().norm(), r.hp().norm());
  HurwitzQuat scalar = HurwitzQuat::scalar(n);
  return n.get_str() + "|" + l.get_str() + "|" + glcd(r.hq(), scalar).str() + "|" +
         glcd(r.hp(), scalar).str();
}

bool theorem1_equal(const RotParam& a, const RotParam& b) { return theorem1_key(a) == theorem1_key(b); }

bool symmetry_related(const RotParam& a, const RotParam& b) {
  if (a.family() != b.family()) throw CoincidenceError("symmetry_related: family mismatch");
  return rotated_module(a) == rotated_module(b);
}

// ---------------------------------------------------------------------------
// Point groups

namespace {

std::string matrix_key(const RatMatrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      s += to_string(m(i, j));
      s += ',';
    }
  return s;
}

struct PointGroup {
  std::vector<RatMatrix> matrices;
  std::vector<RotParam> params;
};

PointGroup build_point_group(Family f) {
  std::vector<RotParam> candidates;
  switch (f) {
    case Family::D4Star:
    case Family::Z4: {
      for (long norm : {1L, 2L}) {
        auto elems = enumerate_norm_J(norm);
        for (const auto& u : elems)
          for (const auto& v : elems) candidates.push_back(RotParam::hurwitz(f, u, v));
      }
      break;
    }
    case Family::A4:
      for (const auto& u : icosian_units()) {
        candidates.push_back(RotParam::a4(u));
        candidates.push_back(RotParam::a4(GoldenInt::tau() * u));
      }
      break;
    case Family::IcosianRing:
      for (const auto& u : icosian_units())
        for (const auto& v : icosian_units()) candidates.push_back(RotParam::icosian_pair(u, v));
      break;
  }
  const FreeModule& gamma = family_module(f);
  PointGroup g;
  std::unordered_set<std::string> seen;
  for (const auto& c : candidates) {
    RatMatrix m = ambient_matrix(c);
    if (!seen.insert(matrix_key(m)).second) continue;
    if (!(apply_map(gamma, m) == gamma)) continue;
    g.matrices.push_back(std::move(m));
    g.params.push_back(c);
  }
  return g;
}

const PointGroup& point_group(Family f) {
  static const PointGroup d4 = build_point_group(Family::D4Star);
  static const PointGroup z4 = build_point_group(Family::Z4);
  static const PointGroup a4 = build_point_group(Family::A4);
  static const PointGroup ico = build_point_group(Family::IcosianRing);
  switch (f) {
    case Family::D4Star: return d4;
    case Family::Z4: return z4;
    case Family::A4: return a4;
    case Family::IcosianRing: return ico;
  }
  throw CoincidenceError("unknown family");
}

}  // namespace

const std::vector<RatMatrix>& point_group_rotations(Family f) { return point_group(f).matrices; }

const std::vector<RotParam>& point_group_params(Family f) { return point_group(f).params; }

const std::vector<std::pair<HurwitzQuat, HurwitzQuat>>& z4_coset_params() {
  static const std::vector<std::pair<HurwitzQuat, HurwitzQuat>> reps = [] {
    std::vector<std::pair<HurwitzQuat, HurwitzQuat>> out{{HurwitzQuat::one(), HurwitzQuat::one()}};
    const FreeModule& z4 = family_module(Family::Z4);
    std::unordered_set<std::string> seen{z4.key()};
    const auto& group = point_group(Family::D4Star);
    for (std::size_t k = 0; k < group.params.size(); ++k) {
      if (!seen.insert(apply_map(z4, group.matrices[k]).key()).second) continue;
      out.emplace_back(group.params[k].hq(), group.params[k].hp());
    }
    if (out.size() != 3) throw CoincidenceError("expected three cosets of the Z4 point group");
    return out;
  }();
  return reps;
}

}  // namespace csl4
