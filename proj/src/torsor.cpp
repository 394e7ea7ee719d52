#include "torsorkit/torsor.hpp"

#include "torsorkit/limits.hpp"

namespace torsorkit {

namespace {

LegLabels legs(const Torsor& t, std::size_t k) { return LegLabels(k, t.labels()); }

// Collapses a report into a single check named `name`.
Check summarise(std::string name, const Report& r) {
  if (const Check* c = r.first_failure())
    return {std::move(name), false, c->name + ": " + c->witness};
  return {std::move(name), true, {}};
}

LinearMap to_scalar_functional(const LinearMap& f, const LinearMap& unit) {
  // f has target {n} with every image a multiple of unit
  const SubspaceBasis line = SubspaceBasis::span(unit.field(), unit.target(),
                                                 {{unit.values().begin(), unit.values().end()}});
  const LinearMap coords = corestrict_target(f, 0, line);
  const Scalar scale = unit.values()[line.pivots()[0]].inverse();
  LinearMap out(f.field(), f.source(), {});
  for (std::size_t j = 0; j < f.source_size(); ++j) out.at(0, j) = coords.at(0, j) * scale;
  return out;
}

}  // namespace

Torsor::Torsor(Algebra algebra, LinearMap mu, std::optional<LinearMap> theta)
    : algebra_(std::move(algebra)),
      mu_(std::move(mu)),
      theta_(algebra_.field(), {algebra_.dim()}, {algebra_.dim()}),
      derived_theta_(theta_),
      theta_derived_(!theta.has_value()) {
  const std::size_t n = algebra_.dim();
  if (mu_.source() != Shape{n} || mu_.target() != Shape{n, n, n})
    throw Error(Errc::ShapeError, "μ must map T to T⊗T^op⊗T");
  if (!(mu_.field() == algebra_.field())) throw Error(Errc::ModulusMismatch, "μ over another field");
  if (theta) {
    if (theta->source() != Shape{n} || theta->target() != Shape{n})
      throw Error(Errc::ShapeError, "θ must map T to T");
    if (!(theta->field() == algebra_.field()))
      throw Error(Errc::ModulusMismatch, "θ over another field");
  }
  derived_theta_ = derive_theta(algebra_, mu_);
  theta_ = theta ? std::move(*theta) : derived_theta_;
}

const Report& Torsor::report() const {
  if (!report_) report_ = std::make_shared<const Report>(verify_torsor(*this));
  return *report_;
}

bool Torsor::verified() const { return report().ok(); }

LinearMap mu_op(const Torsor& t) {
  return permute_target(t.mu(), transposition(3, 0, 2));
}

LinearMap mu_iter(const Torsor& t, std::size_t n) {
  if (2 * n + 1 > max_legs())
    throw Error(Errc::LegCapExceeded, "μ^(" + std::to_string(n) + ") needs " +
                                          std::to_string(2 * n + 1) + " legs, cap is " +
                                          std::to_string(max_legs()));
  LinearMap out = LinearMap::identity(t.field(), {t.dim()});
  for (std::size_t k = 0; k < n; ++k) out = apply_on_target(t.mu(), 0, out);
  return out;
}

LinearMap derive_theta(const Algebra& a, const LinearMap& mu) {
  // x1 ⊗ x2^(1) ⊗ x2^(2) ⊗ x2^(3) ⊗ x3, reordered to x1 x2^(3) x2^(2) x2^(1) x3
  LinearMap x = apply_on_target(mu, 1, mu);
  const std::vector<std::size_t> order{0, 3, 2, 1, 4};
  x = permute_target(x, order);
  for (int k = 0; k < 4; ++k) x = apply_on_target(x, 0, a.mul());
  return x;
}

bool has_commutative_law(const Torsor& t) { return mu_op(t) == t.mu(); }

Report verify_torsor(const Torsor& t) {
  const Algebra& a = t.algebra();
  const std::size_t n = t.dim();
  Report r("torsor of dimension " + std::to_string(n) + " over " + t.field().to_string());
  const Report alg = verify_algebra(a);
  if (!alg.ok()) r.merge(alg, "algebra: ");

  const LegLabels l1 = legs(t, 1), l3 = legs(t, 3), l5 = legs(t, 5);
  const auto id = LinearMap::identity(t.field(), {n});

  TensorAlgebra tt(a);
  tt.append(a, true).append(a);
  r.add(summarise("μ algebra morphism T → T⊗T^op⊗T", verify_algebra_morphism(a, t.mu(), tt, l3)));

  Report theta = verify_algebra_morphism(a, t.theta(), a);
  const std::size_t rk = rank(t.theta());
  theta.add("invertible", rk == n, rk == n ? "" : "rank " + std::to_string(rk));
  r.add(summarise("θ algebra automorphism", theta));

  r.add(identity_check("(Id⊗m)∘μ = Id⊗1", apply_on_target(t.mu(), 1, a.mul()),
                       tensor_product(id, a.unit()), l1, legs(t, 2)));
  r.add(identity_check("(m⊗Id)∘μ = 1⊗Id", apply_on_target(t.mu(), 0, a.mul()),
                       tensor_product(a.unit(), id), l1, legs(t, 2)));
  const LinearMap outer = apply_on_target(t.mu(), 0, t.mu());
  r.add(identity_check("(Id⊗Id⊗μ)∘μ = (μ⊗Id⊗Id)∘μ", apply_on_target(t.mu(), 2, t.mu()), outer,
                       l1, l5));
  r.add(identity_check("θ^(3)∘(μ⊗Id⊗Id)∘μ = (Id⊗μ^op⊗Id)∘μ",
                       apply_on_target(outer, 2, t.theta()),
                       apply_on_target(t.mu(), 1, mu_op(t)), l1, l5));
  LinearMap lhs = t.mu();
  for (std::size_t k = 0; k < 3; ++k) lhs = apply_on_target(lhs, k, t.theta());
  r.add(identity_check("(θ⊗θ⊗θ)∘μ = μ∘θ", lhs, compose(t.mu(), t.theta()), l1, l3));

  r.note(std::string("is_commutative: ") + (is_commutative(a) ? "true" : "false"));
  r.note(std::string("has_commutative_law: ") + (has_commutative_law(t) ? "true" : "false"));
  if (t.theta_derived())
    r.note("θ derived from m and μ");
  else if (t.theta() == t.derived_theta())
    r.note("θ supplied and equal to the value derived from m and μ");
  else
    r.note("θ supplied but differs from the value derived from m and μ");
  return r;
}

void require_verified(const Torsor& t, const std::string& what) {
  if (t.verified()) return;
  const Check* c = t.report().first_failure();
  throw Error(Errc::NotVerified, what + " needs a verified torsor; failed: " + c->name);
}

Torsor trivial_torsor(const HopfAlgebra& h) {
  const LinearMap delta2 = apply_on_target(h.comul(), 0, h.comul());
  return Torsor(h.algebra(), apply_on_target(delta2, 1, h.antipode()),
                compose(h.antipode(), h.antipode()));
}

Torsor opposite_torsor(const Torsor& t) {
  return Torsor(opposite_algebra(t.algebra()), mu_op(t), t.theta());
}

std::string to_string(Side s) { return s == Side::Left ? "left" : "right"; }

SideHopf compute_side_hopf(const Torsor& t, Side side) {
  require_verified(t, "the " + to_string(side) + " Hopf algebra");
  const Algebra& a = t.algebra();
  const std::size_t n = t.dim();
  const FieldSpec& f = t.field();
  const auto id = LinearMap::identity(f, {n});
  const bool left = side == Side::Left;
  const std::vector<std::size_t> swap{1, 0};
  const LinearMap mul_op = permute_source(a.mul(), swap);

  // ambient forms of the constraint and the comultiplication
  const LinearMap comul = left ? tensor_product(t.mu(), id) : tensor_product(id, t.mu());
  const LinearMap constraint =
      left ? apply_on_target(comul, 2, t.theta()) - tensor_product(id, mu_op(t))
           : apply_on_target(comul, 1, t.theta()) - tensor_product(mu_op(t), id);
  SubspaceBasis carrier = kernel_basis(constraint);
  if (carrier.dim() != n)
    throw Error(Errc::DimensionMismatch, "H_" + std::string(left ? "l" : "r") + " has dimension " +
                                             std::to_string(carrier.dim()) + ", T has " +
                                             std::to_string(n));
  const LinearMap incl = carrier.inclusion();

  std::vector<std::string> labels;
  const LegLabels l2 = legs(t, 2);
  for (std::size_t p : carrier.pivots())
    labels.push_back("[" + describe_index(unflatten(p, {n, n}), l2) + "]");

  const std::vector<std::size_t> interleave{0, 2, 1, 3};
  const LinearMap product = permute_source(
      left ? tensor_product(a.mul(), mul_op) : tensor_product(mul_op, a.mul()), interleave);
  LinearMap mul = restrict_source(restrict_source(product, 0, carrier), 1, carrier);
  mul = corestrict_target(mul, 0, carrier);
  const LinearMap unit = corestrict_target(tensor_product(a.unit(), a.unit()), 0, carrier);

  LinearMap delta = restrict_source(comul, 0, carrier);
  delta = corestrict_target(corestrict_target(delta, 0, carrier), 1, carrier);
  const LinearMap counit = to_scalar_functional(compose(a.mul(), incl), a.unit());
  // θ sits on the leg that is moved to the opposite factor; with θ on the
  // other leg the antipode axiom fails whenever θ ≠ Id
  const LinearMap s_ambient =
      permute_target(left ? tensor_product(t.theta(), id) : tensor_product(id, t.theta()), swap);
  const LinearMap antipode = corestrict_target(compose(s_ambient, incl), 0, carrier);

  Algebra alg(f, std::move(labels), std::move(mul), unit);
  return SideHopf{side, std::move(carrier),
                  HopfAlgebra(std::move(alg), std::move(delta), counit, antipode), incl};
}

LinearMap left_coaction(const Torsor& t, const SideHopf& hl) {
  try {
    return corestrict_target(t.mu(), 0, hl.carrier);
  } catch (const Error& e) {
    if (e.code() != Errc::CorestrictionFailure) throw;
    throw Error(Errc::MembershipFailure, std::string("Im μ ⊄ H_l⊗T: ") + e.what());
  }
}

LinearMap right_coaction(const Torsor& t, const SideHopf& hr) {
  try {
    return corestrict_target(t.mu(), 1, hr.carrier);
  } catch (const Error& e) {
    if (e.code() != Errc::CorestrictionFailure) throw;
    throw Error(Errc::MembershipFailure, std::string("Im μ ⊄ T⊗H_r: ") + e.what());
  }
}

Report verify_coactions(const Torsor& t, const SideHopf& hl, const SideHopf& hr) {
  Report r("coactions");
  LinearMap rl(t.field(), {}, {}), rr(t.field(), {}, {});
  try {
    rl = left_coaction(t, hl);
    r.add("Im μ ⊂ H_l⊗T", true);
  } catch (const Error& e) {
    r.add("Im μ ⊂ H_l⊗T", false, e.what());
  }
  try {
    rr = right_coaction(t, hr);
    r.add("Im μ ⊂ T⊗H_r", true);
  } catch (const Error& e) {
    r.add("Im μ ⊂ T⊗H_r", false, e.what());
  }
  if (!r.ok()) return r;

  const LegLabels l1 = legs(t, 1);
  const auto& hlb = hl.hopf.labels();
  const auto& hrb = hr.hopf.labels();
  const auto id = LinearMap::identity(t.field(), {t.dim()});
  r.add(identity_check("left counit (ε⊗Id)∘ρ_l = Id", apply_on_target(rl, 0, hl.hopf.counit()),
                       id, l1, l1));
  r.add(identity_check("left coassociativity (Δ⊗Id)∘ρ_l = (Id⊗ρ_l)∘ρ_l",
                       apply_on_target(rl, 0, hl.hopf.comul()), apply_on_target(rl, 1, rl), l1,
                       {hlb, hlb, t.labels()}));
  TensorAlgebra lt(hl.hopf.algebra());
  lt.append(t.algebra());
  r.add(summarise("ρ_l algebra morphism",
                  verify_algebra_morphism(t.algebra(), rl, lt, {hlb, t.labels()})));
  r.add(identity_check("right counit (Id⊗ε)∘ρ_r = Id", apply_on_target(rr, 1, hr.hopf.counit()),
                       id, l1, l1));
  r.add(identity_check("right coassociativity (ρ_r⊗Id)∘ρ_r = (Id⊗Δ)∘ρ_r",
                       apply_on_target(rr, 0, rr), apply_on_target(rr, 1, hr.hopf.comul()), l1,
                       {t.labels(), hrb, hrb}));
  TensorAlgebra rt(t.algebra());
  rt.append(hr.hopf.algebra());
  r.add(summarise("ρ_r algebra morphism",
                  verify_algebra_morphism(t.algebra(), rr, rt, {t.labels(), hrb})));
  r.add(identity_check("coactions commute (Id⊗ρ_r)∘ρ_l = (ρ_l⊗Id)∘ρ_r",
                       apply_on_target(rl, 1, rr), apply_on_target(rr, 0, rl), l1,
                       {hlb, t.labels(), hrb}));
  return r;
}

GaloisResult galois_can(const Torsor& t, const SideHopf& h) {
  const bool left = h.side == Side::Left;
  const auto id = LinearMap::identity(t.field(), {t.dim()});
  const LinearMap rho = left ? left_coaction(t, h) : right_coaction(t, h);
  LinearMap can = left ? apply_on_target(tensor_product(rho, id), 1, t.algebra().mul())
                       : apply_on_target(tensor_product(id, rho), 0, t.algebra().mul());
  const std::size_t n = t.dim(), d = h.hopf.dim();
  Report r(to_string(h.side) + " Galois map");
  r.add("dim T = dim H", n == d, n == d ? "" : std::to_string(n) + " vs " + std::to_string(d));
  const std::size_t rk = rank(can);
  const bool invertible = can.source_size() == can.target_size() && rk == can.source_size();
  r.add("can invertible", invertible,
        invertible ? "" : "rank " + std::to_string(rk) + " of " + std::to_string(can.source_size()));
  const LinearMap trivial = left ? tensor_product(h.hopf.unit(), id) : tensor_product(id, h.hopf.unit());
  const SubspaceBasis coinv = kernel_basis(rho - trivial);
  const bool scalars = coinv.dim() == 1 && coinv.contains(t.algebra().unit().values());
  r.add("coinvariants = k·1", scalars,
        scalars ? "" : "coinvariant space has dimension " + std::to_string(coinv.dim()));
  r.note("dim T = " + std::to_string(n) + ", dim H_l = dim H_r = " + std::to_string(d) +
         ", can is " + std::to_string(can.target_size()) + "×" + std::to_string(can.source_size()));
  return GaloisResult{std::move(r), std::move(can), n, d, coinv.dim()};
}

LinearMap carrier_map(const LinearMap& ambient, const SideHopf& from, const SideHopf& to) {
  return corestrict_target(restrict_source(ambient, 0, from.carrier), 0, to.carrier);
}

OppositeSideIsos opp_side_iso(const Torsor& t) {
  const Torsor op = opposite_torsor(t);
  const auto hl = compute_side_hopf(t, Side::Left), hr = compute_side_hopf(t, Side::Right);
  const auto hl_op = compute_side_hopf(op, Side::Left), hr_op = compute_side_hopf(op, Side::Right);
  const auto id = LinearMap::identity(t.field(), {t.dim()});
  LinearMap l2r = carrier_map(tensor_product(t.theta(), id), hl, hr_op);
  LinearMap r2l = carrier_map(tensor_product(id, t.theta()), hr, hl_op);
  Report r("opposite side isomorphisms");
  r.merge(verify_hopf_iso(hl.hopf, l2r, hr_op.hopf), "θ⊗Id: H_l(μ) → H_r(μ^op): ");
  r.merge(verify_hopf_iso(hr.hopf, r2l, hl_op.hopf), "Id⊗θ: H_r(μ) → H_l(μ^op): ");
  return OppositeSideIsos{std::move(r), std::move(l2r), std::move(r2l)};
}

}  // namespace torsorkit
