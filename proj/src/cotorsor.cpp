#include "torsorkit/cotorsor.hpp"

#include <set>

#include "torsorkit/limits.hpp"

namespace torsorkit {

namespace {

std::vector<std::string> dual_labels(const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (const auto& l : labels) out.push_back(dual_label(l));
  return out;
}

[[noreturn]] void fail(const std::string& what, const Report& r) {
  const Check* c = r.first_failure();
  throw Error(Errc::VerificationFailure,
              what + ": " + c->name + (c->witness.empty() ? "" : " -- " + c->witness));
}

// (ν⊗ν)∘Δ_{C⊗C^cop⊗C}, evaluated sparsely on each basis triple:
// x⊗y⊗z ↦ ν(x1⊗y2⊗z1) ⊗ ν(x2⊗y1⊗z2).
LinearMap nu_on_coproduct(const Cotorsor& c) {
  const std::size_t n = c.dim();
  LinearMap out(c.field(), {n, n, n}, {n, n});
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> delta(n), nu(n * n * n);
  for (std::size_t i = 0; i < n; ++i) delta[i] = nonzeros(c.comul().column(i));
  for (std::size_t i = 0; i < n * n * n; ++i) nu[i] = nonzeros(c.nu().column(i));
  auto col = [&](std::size_t a, std::size_t b, std::size_t d) { return (a * n + b) * n + d; };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        auto dst = out.column(col(x, y, z));
        for (const auto& [dx, cx] : delta[x])
          for (const auto& [dy, cy] : delta[y])
            for (const auto& [dz, cz] : delta[z]) {
              const Scalar coef = cx * cy * cz;
              const auto& left = nu[col(dx / n, dy % n, dz / n)];
              const auto& right = nu[col(dx % n, dy / n, dz % n)];
              for (const auto& [l, cl] : left)
                for (const auto& [r, cr] : right) dst[l * n + r] += coef * cl * cr;
            }
      }
  return out;
}

}  // namespace

Cotorsor::Cotorsor(FieldSpec field, std::vector<std::string> labels, LinearMap comul,
                   LinearMap counit, LinearMap nu, LinearMap theta)
    : field_(field),
      labels_(std::move(labels)),
      comul_(std::move(comul)),
      counit_(std::move(counit)),
      nu_(std::move(nu)),
      theta_(std::move(theta)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw Error(Errc::ShapeError, "cotorsor of dimension 0");
  if (n > max_dim())
    throw Error(Errc::CapExceeded, "dimension " + std::to_string(n) + " above the cap");
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != n)
    throw Error(Errc::ShapeError, "basis labels are not distinct");
  if (comul_.source() != Shape{n} || comul_.target() != Shape{n, n})
    throw Error(Errc::ShapeError, "comultiplication table has the wrong shape");
  if (counit_.source() != Shape{n} || !counit_.target().empty())
    throw Error(Errc::ShapeError, "counit has the wrong shape");
  if (nu_.source() != Shape{n, n, n} || nu_.target() != Shape{n})
    throw Error(Errc::ShapeError, "ν must map C⊗C^cop⊗C to C");
  if (theta_.source() != Shape{n} || theta_.target() != Shape{n})
    throw Error(Errc::ShapeError, "θ must map C to C");
  for (const LinearMap* m : {&comul_, &counit_, &nu_, &theta_})
    if (!(m->field() == field_)) throw Error(Errc::ModulusMismatch, "tables over another field");
}

Report verify_cotorsor(const Cotorsor& c) {
  const std::size_t n = c.dim();
  const FieldSpec& f = c.field();
  Report r("cotorsor of dimension " + std::to_string(n) + " over " + f.to_string());
  const LegLabels l1{c.labels()}, l2(2, c.labels()), l3(3, c.labels()), l5(5, c.labels());
  const auto id = LinearMap::identity(f, {n});

  r.add(identity_check("coassociativity (Δ⊗Id)∘Δ = (Id⊗Δ)∘Δ",
                       apply_on_target(c.comul(), 0, c.comul()),
                       apply_on_target(c.comul(), 1, c.comul()), l1, l3));
  r.add(identity_check("left counit (ε⊗Id)∘Δ = Id", apply_on_target(c.comul(), 0, c.counit()),
                       id, l1, l1));
  r.add(identity_check("right counit (Id⊗ε)∘Δ = Id", apply_on_target(c.comul(), 1, c.counit()),
                       id, l1, l1));

  r.add(identity_check("ν comultiplicative Δ∘ν = (ν⊗ν)∘Δ", compose(c.comul(), c.nu()),
                       nu_on_coproduct(c), l3, l2));
  LinearMap eee = tensor_product(tensor_product(c.counit(), c.counit()), c.counit());
  r.add(identity_check("ν counital ε∘ν = ε⊗ε⊗ε", compose(c.counit(), c.nu()), eee, l3, {}));
  const std::size_t rk = rank(c.theta());
  Report theta("θ");
  theta.add(identity_check("Δ∘θ = (θ⊗θ)∘Δ", compose(c.comul(), c.theta()),
                           compose(tensor_product(c.theta(), c.theta()), c.comul()), l1, l2));
  theta.add(identity_check("ε∘θ = ε", compose(c.counit(), c.theta()), c.counit(), l1, {}));
  theta.add("invertible", rk == n, rk == n ? "" : "rank " + std::to_string(rk));
  const Check* bad = theta.first_failure();
  r.add("θ coalgebra automorphism", bad == nullptr,
        bad ? bad->name + ": " + bad->witness : std::string{});

  r.add(identity_check("ν∘(Δ⊗Id) = ε⊗Id", apply_on_source(c.nu(), 0, c.comul()),
                       tensor_product(c.counit(), id), l2, l1));
  r.add(identity_check("ν∘(Id⊗Δ) = Id⊗ε", apply_on_source(c.nu(), 1, c.comul()),
                       tensor_product(id, c.counit()), l2, l1));
  const LinearMap outer = apply_on_source(c.nu(), 0, c.nu());
  r.add(identity_check("ν∘(ν⊗Id⊗Id) = ν∘(Id⊗Id⊗ν)", outer, apply_on_source(c.nu(), 2, c.nu()),
                       l5, l1));
  const LinearMap nu_op = permute_source(c.nu(), transposition(3, 0, 2));
  r.add(identity_check("ν∘(ν⊗Id⊗Id)∘θ^(3) = ν∘(Id⊗ν^op⊗Id)", apply_on_source(outer, 2, c.theta()),
                       apply_on_source(c.nu(), 1, nu_op), l5, l1));
  LinearMap lhs = c.nu();
  for (std::size_t k = 0; k < 3; ++k) lhs = apply_on_source(lhs, k, c.theta());
  r.add(identity_check("ν∘(θ⊗θ⊗θ) = θ∘ν", lhs, compose(c.theta(), c.nu()), l3, l1));
  return r;
}

Cotorsor dualize(const Torsor& t) {
  const Algebra& a = t.algebra();
  Cotorsor c(t.field(), dual_labels(t.labels()), transpose(a.mul()), transpose(a.unit()),
             transpose(t.mu()), transpose(t.theta()));
  const Report r = verify_cotorsor(c);
  if (!r.ok()) fail("dual of the torsor is not a cotorsor", r);
  return c;
}

Torsor dualize(const Cotorsor& c) {
  Algebra a(c.field(), dual_labels(c.labels()), transpose(c.comul()), transpose(c.counit()));
  Torsor t(std::move(a), transpose(c.nu()), transpose(c.theta()));
  if (!t.verified()) fail("dual of the cotorsor is not a torsor", t.report());
  return t;
}

ParmentierResult parmentier_cotorsor(const TwistData& t) {
  const HopfAlgebra& h = t.host;
  const HopfAlgebra hf = twist_hopf(t);  // throws TwistInvalid
  const std::size_t n = h.dim();
  const FieldSpec& f = h.field();
  TensorAlgebra h1(h.algebra()), h2(h.algebra());
  h2.append(h.algebra());

  LinearMap comul(f, {n}, {n, n});
  for (std::size_t j = 0; j < n; ++j) {
    const auto c = h.comul().column(j);
    const auto v = h2.multiply(LinearMap::vector(f, {n, n}, {c.begin(), c.end()}), t.f_inv);
    std::copy(v.values().begin(), v.values().end(), comul.column(j).begin());
  }
  const LinearMap s2 = compose(h.antipode(), h.antipode());
  LinearMap nu = apply_on_source(h.mul(), 0, h.mul());
  nu = apply_on_source(nu, 1, compose(h1.left_multiplication(t.u), h.antipode()));
  const LinearMap w = h1.multiply(compose(h.antipode(), t.u), t.u_inv);
  LinearMap theta = compose(h1.right_multiplication(w), s2);

  Cotorsor c(f, h.labels(), std::move(comul), h.counit(), std::move(nu), std::move(theta));
  Report report("Parmentier cotorsor");
  report.merge(verify_cotorsor(c));
  if (!report.ok()) fail("Parmentier cotorsor", report);

  // side Hopf algebras through the dual torsor
  Torsor dual = dualize(c);
  const SideHopf hl = compute_side_hopf(dual, Side::Left);
  const SideHopf hr = compute_side_hopf(dual, Side::Right);
  LinearMap left_pair(f, {n}, {n, n}), right_pair(f, {n}, {n, n});
  for (std::size_t a = 0; a < n; ++a) {
    const auto e = LinearMap::basis_vector(f, {n}, a);
    const auto l = h2.multiply(tensor_product(e, h.unit()), t.f_inv);
    const auto r = h2.multiply(t.f_inv, tensor_product(h.unit(), e));
    std::copy(l.values().begin(), l.values().end(), left_pair.column(a).begin());
    std::copy(r.values().begin(), r.values().end(), right_pair.column(a).begin());
  }
  LinearMap il = compose(transpose(left_pair), hl.inclusion);
  LinearMap ir = compose(transpose(right_pair), hr.inclusion);
  HopfAlgebra hd = dual_hopf(h), hfd = dual_hopf(hf);
  report.merge(verify_hopf_iso(hl.hopf, il, hd), "i_l: H_l(C*) → H*: ");
  report.merge(verify_hopf_iso(hr.hopf, ir, hfd), "i_r: H_r(C*) → H_F*: ");
  if (!report.ok()) fail("Parmentier side isomorphisms", report);
  DecoratedTorsor d{std::move(dual), std::move(hd), std::move(hfd), std::move(il), std::move(ir)};
  return ParmentierResult{std::move(c), std::move(d), std::move(report)};
}

}  // namespace torsorkit
