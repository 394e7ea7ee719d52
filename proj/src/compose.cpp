#include "torsorkit/compose.hpp"

namespace torsorkit {

namespace {

std::vector<std::string> carrier_labels(const SubspaceBasis& c, const LegLabels& legs) {
  std::vector<std::string> out;
  for (std::size_t p : c.pivots()) out.push_back("[" + describe_index(unflatten(p, c.ambient()), legs) + "]");
  return out;
}

[[noreturn]] void fail(Errc code, const std::string& what, const Report& r) {
  const Check* c = r.first_failure();
  throw Error(code, what + (c ? ": " + c->name + (c->witness.empty() ? "" : " -- " + c->witness)
                              : std::string{}));
}

// T1 -> T1⊗T2⊗T2: x ↦ x1 ⊗ Φ(x2⊗x3) with Φ included in T2⊗T2^op.
LinearMap mu_phi(const Torsor& t1, const SideHopf& hr1, const SideHopf& hl2, const LinearMap& phi) {
  LinearMap m = apply_on_target(right_coaction(t1, hr1), 1, phi);
  return apply_on_target(m, 1, hl2.inclusion);
}

void check_phi(const SideHopf& hr1, const SideHopf& hl2, const LinearMap& phi) {
  if (phi.source() != Shape{hr1.hopf.dim()} || phi.target() != Shape{hl2.hopf.dim()})
    throw Error(Errc::PhiNotIso, "Φ has shape " + std::to_string(shape_size(phi.target())) + "×" +
                                     std::to_string(shape_size(phi.source())) + ", expected " +
                                     std::to_string(hl2.hopf.dim()) + "×" +
                                     std::to_string(hr1.hopf.dim()));
  const Report r = verify_hopf_iso(hr1.hopf, phi, hl2.hopf);
  if (!r.ok()) fail(Errc::PhiNotIso, "Φ is not a Hopf isomorphism H_r(T1) → H_l(T2)", r);
}

}  // namespace

Composition compose_torsors(const Torsor& t1, const Torsor& t2, const LinearMap& phi) {
  require_verified(t1, "composition");
  require_verified(t2, "composition");
  if (!(t1.field() == t2.field())) throw Error(Errc::ModulusMismatch, "torsors over different fields");
  const FieldSpec& f = t1.field();
  const std::size_t n1 = t1.dim(), n2 = t2.dim();
  const SideHopf hr1 = compute_side_hopf(t1, Side::Right);
  const SideHopf hl2 = compute_side_hopf(t2, Side::Left);
  check_phi(hr1, hl2, phi);

  const LinearMap m1 = mu_phi(t1, hr1, hl2, phi);
  const auto id1 = LinearMap::identity(f, {n1}), id2 = LinearMap::identity(f, {n2});
  SubspaceBasis carrier =
      kernel_basis(tensor_product(m1, id2) - tensor_product(id1, t2.mu()));
  Report report("composition T1 ⊗_Φ T2");
  report.note("dim T1 = " + std::to_string(n1) + ", dim T2 = " + std::to_string(n2) +
              ", dim H = " + std::to_string(hr1.hopf.dim()) + ", dim T_Φ = " +
              std::to_string(carrier.dim()));
  if (carrier.dim() != n1 * n2 / hr1.hopf.dim())
    throw Error(Errc::DimensionMismatch, "T_Φ has dimension " + std::to_string(carrier.dim()) +
                                             ", expected " +
                                             std::to_string(n1 * n2 / hr1.hopf.dim()));

  const LinearMap incl = carrier.inclusion();
  const std::vector<std::size_t> interleave{0, 2, 1, 3};
  const Algebra& a1 = t1.algebra();
  const Algebra& a2 = t2.algebra();
  LinearMap mul = permute_source(tensor_product(a1.mul(), a2.mul()), interleave);
  mul = restrict_source(restrict_source(mul, 0, carrier), 1, carrier);
  LinearMap unit = tensor_product(a1.unit(), a2.unit());
  LinearMap theta = compose(tensor_product(t1.theta(), t2.theta()), incl);
  try {
    mul = corestrict_target(mul, 0, carrier);
    unit = corestrict_target(unit, 0, carrier);
    theta = corestrict_target(theta, 0, carrier);
  } catch (const Error& e) {
    throw Error(Errc::MembershipFailure, std::string("T_Φ is not closed: ") + e.what());
  }

  // x1 ⊗ Φ(x2⊗x3) ⊗ x4 ⊗ x5 ⊗ y, then τ_(34)
  LinearMap m2 = mu_iter(t1, 2);
  m2 = apply_on_target(corestrict_target(m2, 1, hr1.carrier), 1, phi);
  m2 = apply_on_target(m2, 1, hl2.inclusion);
  LinearMap mu = apply_on_target(incl, 0, m2);
  const std::vector<std::size_t> swap34{0, 1, 3, 2, 4, 5};
  mu = permute_target(mu, swap34);
  try {
    for (std::size_t leg = 0; leg < 3; ++leg) mu = corestrict_target(mu, leg, carrier);
  } catch (const Error& e) {
    throw Error(Errc::MembershipFailure, std::string("Im μ_Φ ⊄ T_Φ⊗T_Φ^op⊗T_Φ: ") + e.what());
  }

  Algebra alg(f, carrier_labels(carrier, {t1.labels(), t2.labels()}), std::move(mul),
              std::move(unit));
  Torsor result(std::move(alg), std::move(mu), std::move(theta));
  if (!result.verified())
    fail(Errc::VerificationFailure, "T_Φ fails the torsor axioms", result.report());
  report.merge(result.report(), "T_Φ: ");
  return Composition{std::move(result), std::move(carrier), std::move(report)};
}

SideIsos induced_side_isos(const Torsor& t1, const Torsor& t2, const LinearMap& phi,
                           const Composition& c) {
  const SideHopf hl1 = compute_side_hopf(t1, Side::Left);
  const SideHopf hr1 = compute_side_hopf(t1, Side::Right);
  const SideHopf hl2 = compute_side_hopf(t2, Side::Left);
  const SideHopf hr2 = compute_side_hopf(t2, Side::Right);
  const SideHopf hlp = compute_side_hopf(c.torsor, Side::Left);
  const SideHopf hrp = compute_side_hopf(c.torsor, Side::Right);
  check_phi(hr1, hl2, phi);
  const SubspaceBasis& tp = c.carrier;

  // item 2: a⊗b ↦ (a1⊗p)⊗(b⊗q) with p⊗q = Φ(a2⊗a3)
  LinearMap left = apply_on_target(hl1.inclusion, 0, mu_phi(t1, hr1, hl2, phi));
  left = permute_target(left, std::vector<std::size_t>{0, 1, 3, 2});
  left = corestrict_target(corestrict_target(left, 0, tp), 1, tp);
  left = corestrict_target(left, 0, hlp.carrier);
  // (a1, p, b, q) -> (a1, p, q, b) -> a1 ⊗ ε(p⊗q) ⊗ b
  LinearMap left_inv = apply_on_target(apply_on_target(hlp.inclusion, 0, tp.inclusion()), 2,
                                       tp.inclusion());
  left_inv = permute_target(left_inv, std::vector<std::size_t>{0, 1, 3, 2});
  left_inv = apply_on_target(corestrict_target(left_inv, 1, hl2.carrier), 1, hl2.hopf.counit());
  left_inv = corestrict_target(left_inv, 0, hl1.carrier);

  // item 3: b⊗a ↦ (r⊗b)⊗(s⊗a3) with r⊗s = Φ^{-1}(a1⊗a2)
  const LinearMap phi_inv = invert_map(phi);
  LinearMap m2 = apply_on_target(left_coaction(t2, hl2), 0, phi_inv);
  m2 = apply_on_target(m2, 0, hr1.inclusion);
  LinearMap right = apply_on_target(hr2.inclusion, 1, m2);
  right = permute_target(right, std::vector<std::size_t>{1, 0, 2, 3});
  right = corestrict_target(corestrict_target(right, 0, tp), 1, tp);
  right = corestrict_target(right, 0, hrp.carrier);
  // (r, b, s, a) -> (b, r, s, a) -> b ⊗ ε(r⊗s) ⊗ a
  LinearMap right_inv = apply_on_target(apply_on_target(hrp.inclusion, 0, tp.inclusion()), 2,
                                        tp.inclusion());
  right_inv = permute_target(right_inv, std::vector<std::size_t>{1, 0, 2, 3});
  right_inv =
      apply_on_target(corestrict_target(right_inv, 1, hr1.carrier), 1, hr1.hopf.counit());
  right_inv = corestrict_target(right_inv, 0, hr2.carrier);

  Report r("induced side isomorphisms");
  const auto idl = LinearMap::identity(t1.field(), {hl1.hopf.dim()});
  const auto idr = LinearMap::identity(t1.field(), {hr2.hopf.dim()});
  r.merge(verify_hopf_iso(hl1.hopf, left, hlp.hopf), "H_l(T1) → H_l(T_Φ): ");
  r.add(identity_check("stated inverse ∘ forward = Id on H_l(T1)", compose(left_inv, left), idl,
                       {hl1.hopf.labels()}, {hl1.hopf.labels()}));
  r.add(identity_check("forward ∘ stated inverse = Id on H_l(T_Φ)", compose(left, left_inv),
                       LinearMap::identity(t1.field(), {hlp.hopf.dim()}), {hlp.hopf.labels()},
                       {hlp.hopf.labels()}));
  r.merge(verify_hopf_iso(hr2.hopf, right, hrp.hopf), "H_r(T2) → H_r(T_Φ): ");
  r.add(identity_check("stated inverse ∘ forward = Id on H_r(T2)", compose(right_inv, right), idr,
                       {hr2.hopf.labels()}, {hr2.hopf.labels()}));
  r.add(identity_check("forward ∘ stated inverse = Id on H_r(T_Φ)", compose(right, right_inv),
                       LinearMap::identity(t1.field(), {hrp.hopf.dim()}), {hrp.hopf.labels()},
                       {hrp.hopf.labels()}));
  return SideIsos{std::move(left), std::move(left_inv), std::move(right), std::move(right_inv),
                  std::move(r)};
}

TorsorMorphism torsor_morphism_check(const Torsor& t1, const Torsor& t2, const LinearMap& f) {
  require_verified(t1, "torsor morphism");
  require_verified(t2, "torsor morphism");
  if (f.source() != Shape{t1.dim()} || f.target() != Shape{t2.dim()})
    throw Error(Errc::ShapeError, "morphism shape does not match the torsors");
  Report r("torsor morphism");
  r.merge(verify_algebra_morphism(t1.algebra(), f, t2.algebra()));
  LinearMap lhs = t1.mu();
  for (std::size_t k = 0; k < 3; ++k) lhs = apply_on_target(lhs, k, f);
  const LegLabels l1{t1.labels()}, l3(3, t2.labels());
  r.add(identity_check("(f⊗f⊗f)∘μ1 = μ2∘f", lhs, compose(t2.mu(), f), l1, l3));
  r.add(identity_check("f∘θ1 = θ2∘f", compose(f, t1.theta()), compose(t2.theta(), f), l1,
                       {t2.labels()}));
  if (!r.ok()) fail(Errc::NotEquivariant, "not a torsor morphism", r);

  const SideHopf hl1 = compute_side_hopf(t1, Side::Left), hl2 = compute_side_hopf(t2, Side::Left);
  const SideHopf hr1 = compute_side_hopf(t1, Side::Right), hr2 = compute_side_hopf(t2, Side::Right);
  const LinearMap ff = tensor_product(f, f);
  LinearMap f_l = carrier_map(ff, hl1, hl2);
  LinearMap f_r = carrier_map(ff, hr1, hr2);
  r.merge(verify_hopf_morphism(hl1.hopf, f_l, hl2.hopf), "f_l: ");
  r.merge(verify_hopf_morphism(hr1.hopf, f_r, hr2.hopf), "f_r: ");
  return TorsorMorphism{f, std::move(f_l), std::move(f_r), std::move(r)};
}

Report verify_decorated(const DecoratedTorsor& d) {
  Report r("decorated torsor");
  r.merge(d.torsor.report(), "torsor: ");
  if (!d.torsor.verified()) return r;
  const SideHopf hl = compute_side_hopf(d.torsor, Side::Left);
  const SideHopf hr = compute_side_hopf(d.torsor, Side::Right);
  r.merge(verify_hopf(d.left_ref), "H: ");
  r.merge(verify_hopf(d.right_ref), "H': ");
  auto iso = [&](const char* prefix, const SideHopf& s, const LinearMap& i, const HopfAlgebra& ref) {
    if (i.source() != Shape{s.hopf.dim()} || i.target() != Shape{ref.dim()}) {
      r.add(std::string(prefix) + "shape", false, "decoration does not match the carrier");
      return;
    }
    r.merge(verify_hopf_iso(s.hopf, i, ref), prefix);
  };
  iso("i_l: ", hl, d.i_l, d.left_ref);
  iso("i_r: ", hr, d.i_r, d.right_ref);
  return r;
}

DecoratedTorsor tor_unit(const HopfAlgebra& h) {
  Torsor t = trivial_torsor(h);
  const auto id = LinearMap::identity(h.field(), {h.dim()});
  const SideHopf hl = compute_side_hopf(t, Side::Left), hr = compute_side_hopf(t, Side::Right);
  LinearMap il = compose(tensor_product(id, h.counit()), hl.inclusion);
  LinearMap ir = compose(tensor_product(h.counit(), id), hr.inclusion);
  return DecoratedTorsor{std::move(t), h, h, std::move(il), std::move(ir)};
}

DecoratedTorsor tor_inverse(const DecoratedTorsor& d) {
  const OppositeSideIsos o = opp_side_iso(d.torsor);
  if (!o.report.ok()) fail(Errc::VerificationFailure, "opposite side maps", o.report);
  LinearMap il = compose(d.i_r, invert_map(o.right_to_left));
  LinearMap ir = compose(d.i_l, invert_map(o.left_to_right));
  return DecoratedTorsor{opposite_torsor(d.torsor), d.right_ref, d.left_ref, std::move(il),
                         std::move(ir)};
}

TorProduct tor_multiply(const DecoratedTorsor& d1, const DecoratedTorsor& d2) {
  if (!(d1.right_ref == d2.left_ref)) {
    // tables must agree; labels may differ
    const HopfAlgebra& a = d1.right_ref;
    const HopfAlgebra& b = d2.left_ref;
    if (!(a.mul() == b.mul() && a.unit() == b.unit() && a.comul() == b.comul() &&
          a.counit() == b.counit() && a.antipode() == b.antipode()))
      throw Error(Errc::ReferenceHopfMismatch,
                  "the right reference Hopf algebra of T1 differs from the left one of T2");
  }
  LinearMap phi = compose(invert_map(d2.i_l), d1.i_r);
  Composition c = compose_torsors(d1.torsor, d2.torsor, phi);
  const SideIsos s = induced_side_isos(d1.torsor, d2.torsor, phi, c);
  if (!s.report.ok()) fail(Errc::VerificationFailure, "induced side isomorphisms", s.report);
  LinearMap il = compose(d1.i_l, s.left_inverse);
  LinearMap ir = compose(d2.i_r, s.right_inverse);
  Report r("product of decorated torsors");
  r.note("Φ := i_{l,T2}^{-1} ∘ i_{r,T1} : H_r(T1) -> H_l(T2)");
  r.merge(c.report);
  r.merge(s.report);
  DecoratedTorsor result{c.torsor, d1.left_ref, d2.right_ref, std::move(il), std::move(ir)};
  return TorProduct{std::move(result), std::move(c), std::move(phi), std::move(r)};
}

Report equivalence_report(const LinearMap& f, const DecoratedTorsor& d1,
                          const DecoratedTorsor& d2) {
  Report r("equivalence witness");
  TorsorMorphism m{f, f, f, Report{}};
  try {
    m = torsor_morphism_check(d1.torsor, d2.torsor, f);
  } catch (const Error& e) {
    r.add("torsor morphism", false, e.what());
    return r;
  }
  r.merge(m.report);
  const std::size_t rk = rank(f);
  r.add("bijective", rk == d1.torsor.dim() && rk == d2.torsor.dim(),
        "rank " + std::to_string(rk));
  if (!r.ok()) return r;
  const LegLabels none;
  r.add(identity_check("i_{l,T1} = i_{l,T2}∘f_l", d1.i_l, compose(d2.i_l, m.f_l), none, none));
  r.add(identity_check("i_{r,T1} = i_{r,T2}∘f_r", d1.i_r, compose(d2.i_r, m.f_r), none, none));
  return r;
}

void verify_equivalence_witness(const LinearMap& f, const DecoratedTorsor& d1,
                                const DecoratedTorsor& d2) {
  const Report r = equivalence_report(f, d1, d2);
  if (!r.ok()) fail(Errc::WitnessRejected, "witness rejected", r);
}

LinearMap left_unit_witness(const HopfAlgebra& h, const TorProduct& p) {
  const std::size_t n2 = p.composition.carrier.ambient()[1];
  const auto id = LinearMap::identity(h.field(), {n2});
  return compose(tensor_product(h.counit(), id), p.composition.carrier.inclusion());
}

LinearMap right_unit_witness(const HopfAlgebra& h, const TorProduct& p) {
  const std::size_t n1 = p.composition.carrier.ambient()[0];
  const auto id = LinearMap::identity(h.field(), {n1});
  return compose(tensor_product(id, h.counit()), p.composition.carrier.inclusion());
}

}  // namespace torsorkit
