#include <random>

#include "doctest.h"
#include "support.hpp"
#include "torsorkit/gallery.hpp"

using namespace support;

namespace {

const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F7 = FieldSpec::prime(7);

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::VerificationFailure;
}

Polynomial poly(FieldSpec f, std::initializer_list<long> c) { return coords(f, c); }

GaloisBuild sqrt_galois(long d) {
  return build_galois(QQ, poly(QQ, {-d, 0, 1}), {poly(QQ, {0, 1}), poly(QQ, {0, -1})});
}

}  // namespace

TEST_CASE("every registry entry builds and verifies") {
  std::size_t torsors = 0;
  for (const auto& e : gallery_entries()) {
    CAPTURE(e.name);
    const GalleryObject o = build_gallery(e.name);
    switch (e.kind) {
      case GalleryKind::Torsor: {
        ++torsors;
        const Torsor& t = std::get<Torsor>(o);
        const Report r = verify_torsor(t);
        CHECK(r.ok());
        CHECK(t.derived_theta() == t.theta());
        const SideHopf hl = compute_side_hopf(t, Side::Left), hr = compute_side_hopf(t, Side::Right);
        CHECK(verify_coactions(t, hl, hr).ok());
        CHECK(galois_can(t, hl).report.ok());
        CHECK(galois_can(t, hr).report.ok());
        break;
      }
      case GalleryKind::Hopf: CHECK(verify_hopf(std::get<HopfAlgebra>(o)).ok()); break;
      case GalleryKind::Twist: CHECK(verify_twist(std::get<TwistData>(o)).ok()); break;
    }
  }
  CHECK(torsors == 9);
  CHECK(code_of([] { build_gallery("nonsense"); }) == Errc::UnknownRecipe);
  CHECK(code_of([] { gallery_hopf("quaternion"); }) == Errc::UnknownRecipe);
}

TEST_CASE("trivial torsors") {
  const Torsor z2 = build_trivial_torsor(group_algebra(QQ, cyclic_group(2)));
  // μ(g) = g⊗g⊗g
  CHECK(z2.mu().at(7, 1) == q("1"));
  CHECK(z2.theta() == LinearMap::identity(QQ, {2}));
  CHECK(build_trivial_torsor(group_algebra(QQ, symmetric_group_3())).verified());

  // μ(1_g) = Σ_{a - b + c = g} 1_a⊗1_b⊗1_c
  const Torsor fz3 = build_trivial_torsor(function_algebra(QQ, cyclic_group(3)));
  LinearMap expected(QQ, {3}, {3, 3, 3});
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c) expected.at((a * 3 + b) * 3 + c, (a + 3 - b + c) % 3) = q("1");
  CHECK(fz3.mu() == expected);

  const HopfAlgebra h = group_algebra(QQ, cyclic_group(2));
  const HopfAlgebra broken(h.algebra(), h.comul(), h.counit(), LinearMap(QQ, {2}, {2}));
  CHECK(code_of([&] { build_trivial_torsor(broken); }) == Errc::HopfInvalid);
}

TEST_CASE("quadratic torsors") {
  const Torsor t = build_quadratic_torsor(QQ, q("2"), QuadraticVariant::Sqrt);
  CHECK(t.mu().at(7, 1) == q("1/2"));
  CHECK(t.mu() == grouplike_torsor(quadratic(QQ, 2)).mu());
  CHECK(t.algebra() == quadratic(QQ, 2));

  const Torsor as = build_quadratic_torsor(F2, Scalar::one(F2), QuadraticVariant::ArtinSchreier);
  CHECK(as.verified());
  LinearMap additive(F2, {2}, {2, 2, 2});
  additive.at(0, 0) = Scalar::one(F2);
  for (std::size_t k : {1u, 2u, 4u}) additive.at(k, 1) = Scalar::one(F2);
  CHECK(as.mu() == additive);

  CHECK(code_of([] { build_quadratic_torsor(QQ, q("0"), QuadraticVariant::Sqrt); }) == Errc::DNotInvertible);
  CHECK(code_of([] { build_quadratic_torsor(F2, Scalar::one(F2), QuadraticVariant::Sqrt); }) ==
        Errc::BadCharacteristic);
  CHECK(code_of([] { build_quadratic_torsor(QQ, q("1"), QuadraticVariant::ArtinSchreier); }) ==
        Errc::BadCharacteristic);
}

TEST_CASE("Galois torsors and the quadratic cross-oracle") {
  for (long d : {2, 3, 5, -1, 7}) {
    CAPTURE(d);
    const GaloisBuild g = sqrt_galois(d);
    CHECK(g.report.ok());
    const Torsor quad = build_quadratic_torsor(QQ, Scalar(QQ, d), QuadraticVariant::Sqrt);
    CHECK(g.torsor.mu() == quad.mu());
    // P_id = ½(1⊗1) + (1/2d)(t⊗t), P_σ = ½(1⊗1) - (1/2d)(t⊗t)
    const Scalar half = q("1/2"), c = Scalar(QQ, 2 * d).inverse();
    CHECK(g.idempotents[0].at(0, 0) == half);
    CHECK(g.idempotents[0].at(3, 0) == c);
    CHECK(g.idempotents[1].at(0, 0) == half);
    CHECK(g.idempotents[1].at(3, 0) == -c);
    CHECK(g.idempotents[0].at(1, 0).is_zero());
  }
  const GaloisBuild f4 = build_galois(F2, poly(F2, {1, 1, 1}), {poly(F2, {0, 1}), poly(F2, {1, 1})});
  CHECK(f4.report.ok());
  CHECK(f4.torsor.verified());
  const Torsor as = build_quadratic_torsor(F2, Scalar::one(F2), QuadraticVariant::ArtinSchreier);
  CHECK(f4.torsor.algebra().mul() == as.algebra().mul());
  CHECK(f4.torsor.mu() == as.mu());
}

TEST_CASE("Galois action errors") {
  const auto p = poly(QQ, {-2, 0, 1});
  CHECK(code_of([&] { build_galois(QQ, p, {poly(QQ, {0, 1}), poly(QQ, {0, 1})}); }) ==
        Errc::NotGaloisAction);
  CHECK(code_of([&] { build_galois(QQ, p, {poly(QQ, {0, 1}), poly(QQ, {1, 1})}); }) ==
        Errc::NotGaloisAction);
  CHECK(code_of([&] { build_galois(QQ, p, {poly(QQ, {0, 1})}); }) == Errc::NotGaloisAction);
  CHECK(code_of([&] { build_galois(QQ, poly(QQ, {0, 0, 1}), {poly(QQ, {0, 1}), poly(QQ, {0, -1})}); }) ==
        Errc::NotSeparable);
  CHECK(code_of([&] { build_galois(F2, poly(F2, {1, 0, 1}), {poly(F2, {0, 1}), poly(F2, {1, 1})}); }) ==
        Errc::NotSeparable);
  // split case: Q[T]/(T² - 1) ≅ Q × Q with the swap t ↦ -t is still Galois
  CHECK(build_galois(QQ, poly(QQ, {-1, 0, 1}), {poly(QQ, {0, 1}), poly(QQ, {0, -1})}).torsor.verified());
}

TEST_CASE("cyclic algebra torsors") {
  const Torsor quat = build_cyclic_algebra_torsor(QQ, 2, q("-1"), q("-1"), q("-1"));
  CHECK(quat.algebra() == quaternions(QQ, -1, -1));
  CHECK(quat.mu() == grouplike_torsor(quaternions(QQ, -1, -1)).mu());
  // μ(x) = -x⊗x⊗x
  CHECK(quat.mu().at((1 * 4 + 1) * 4 + 1, 1) == q("-1"));
  CHECK(has_commutative_law(quat));
  CHECK_FALSE(is_commutative(quat.algebra()));

  const Torsor c7 = build_cyclic_algebra_torsor(F7, 3, Scalar(F7, 2), Scalar(F7, 1), Scalar(F7, 1));
  CHECK(c7.dim() == 9);
  CHECK(c7.mu() == grouplike_torsor(cyclic_algebra(F7, 3, 2, 1, 1)).mu());
  CHECK(c7.labels() == cyclic_algebra(F7, 3, 2, 1, 1).labels());

  CHECK(code_of([] { build_cyclic_algebra_torsor(QQ, 3, q("1"), q("1"), q("1")); }) == Errc::QNotPrimitive);
  CHECK(code_of([] { build_cyclic_algebra_torsor(QQ, 2, q("1"), q("1"), q("1")); }) == Errc::QNotPrimitive);
  CHECK(code_of([] { build_cyclic_algebra_torsor(F7, 3, Scalar(F7, 3), Scalar(F7, 1), Scalar(F7, 1)); }) ==
        Errc::QNotPrimitive);
  CHECK(code_of([] { build_cyclic_algebra_torsor(QQ, 2, q("-1"), q("0"), q("1")); }) == Errc::AlphaBetaZero);
}

TEST_CASE("H_l of cyclic algebra torsors is functions on Z/n × Z/n") {
  const Torsor quat = gallery_torsor("quaternion");
  const CyclicSideIso qi = cyclic_side_iso(quat, 2, q("-1"));
  CHECK_MESSAGE(qi.report.ok(), qi.report.to_text());
  CHECK(qi.left.hopf.dim() == 4);
  const CyclicSideIso ci = cyclic_side_iso(gallery_torsor("cyclic-f7-3"), 3, Scalar(F7, 2));
  CHECK_MESSAGE(ci.report.ok(), ci.report.to_text());
  CHECK(ci.functions.dim() == 9);
  // a torsor of the wrong shape is refused
  CHECK(code_of([] { cyclic_side_iso(gallery_torsor("trivial-z2"), 2, q("-1")); }) == Errc::DimensionMismatch);
}

TEST_CASE("extension from generators rejects inconsistent words") {
  const Algebra a = quadratic(QQ, 2);
  const auto e = LinearMap::basis_vector(QQ, {2}, 1);
  const auto img = tensor_product(tensor_product(e, e), e);
  CHECK(code_of([&] { extend_from_generators(a, {1}, {img}, {{}, {0, 0}}); }) == Errc::ShapeError);
  CHECK(code_of([&] { extend_from_generators(a, {1}, {img}, {{}}); }) == Errc::ShapeError);
}

TEST_CASE("recipes") {
  CHECK(std::get<Torsor>(build_recipe("cyclic:Q:2:-1:-1:-1")).mu() == gallery_torsor("quaternion").mu());
  CHECK(std::get<Torsor>(build_recipe("quadratic:F2:1")).mu() == gallery_torsor("artin-schreier-f4").mu());
  CHECK(std::get<Torsor>(build_recipe("quadratic:Q:3")).verified());
  CHECK(gallery_torsor("cyclic:F7:3:2:1:1").dim() == 9);
  CHECK(code_of([] { build_recipe("cyclic:Q:2"); }) == Errc::UnknownRecipe);
  CHECK(code_of([] { build_recipe("quadratic:Q:0"); }) == Errc::DNotInvertible);
  CHECK(code_of([] { build_recipe("cyclic:Q:x:-1:-1:-1"); }) == Errc::ParseError);
}

TEST_CASE("random parameters") {
  std::mt19937 rng(7);
  for (int round = 0; round < 10; ++round) {
    long d = std::uniform_int_distribution<long>(-20, 20)(rng);
    if (d == 0) d = 3;  // squares are fine: the split algebra is still Galois
    CAPTURE(d);
    const GaloisBuild g = sqrt_galois(d);
    CHECK(g.report.ok());
    CHECK(g.torsor.mu() == build_quadratic_torsor(QQ, Scalar(QQ, d), QuadraticVariant::Sqrt).mu());
  }
  for (int round = 0; round < 6; ++round) {
    const long a = std::uniform_int_distribution<long>(1, 6)(rng), b = std::uniform_int_distribution<long>(1, 6)(rng);
    const long qv = round % 2 ? 2 : 4;
    const Torsor t = build_cyclic_algebra_torsor(F7, 3, Scalar(F7, qv), Scalar(F7, a), Scalar(F7, b));
    CHECK(t.verified());
    CHECK(cyclic_side_iso(t, 3, Scalar(F7, qv)).report.ok());
  }
}
