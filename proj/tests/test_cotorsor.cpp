#include <random>

#include "doctest.h"
#include "support.hpp"
#include "torsorkit/cotorsor.hpp"

using namespace support;

namespace {

const FieldSpec F5 = FieldSpec::prime(5);

Torsor galois_sqrt2() {
  LinearMap mu(QQ, {2}, {2, 2, 2});
  mu.at(0, 0) = q("1");
  mu.at(7, 1) = q("1/2");
  return Torsor(quadratic(QQ, 2), mu);
}

// F(x, y) = β(x, y) on function_algebra(G), i.e. Σ β(g, h) 1_g ⊗ 1_h.
LinearMap bicharacter(const HopfAlgebra& h, const std::function<long(std::size_t, std::size_t)>& beta) {
  const std::size_t n = h.dim();
  LinearMap f(h.field(), {}, {n, n});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) f.at(x * n + y, 0) = Scalar(h.field(), beta(x, y));
  return f;
}

const Check& check(const Report& r, const std::string& name) {
  const Check* c = r.find(name);
  REQUIRE(c != nullptr);
  return *c;
}

}  // namespace

TEST_CASE("duals of verified torsors are cotorsors") {
  const std::vector<Torsor> torsors{
      trivial_torsor_of(group_algebra(QQ, cyclic_group(2))),
      grouplike_torsor(quaternions(QQ, -1, -1)),
      galois_sqrt2(),
      trivial_torsor_of(sweedler_hopf(QQ)),
      grouplike_torsor(cyclic_algebra(FieldSpec::prime(7), 3, 2, 1, 1)),
  };
  for (const auto& t : torsors) {
    REQUIRE(t.verified());
    const Cotorsor c = dualize(t);
    CHECK(c.dim() == t.dim());
    const Report r = verify_cotorsor(c);
    CHECK_MESSAGE(r.ok(), r.to_text());
    CHECK(r.checks().size() == 11);
    const Torsor back = dualize(c);
    CHECK(back.labels() == t.labels());
    CHECK(back.algebra() == t.algebra());
    CHECK(back.mu() == t.mu());
    CHECK(back.theta() == t.theta());
  }
  const Cotorsor c = dualize(grouplike_torsor(quaternions(QQ, -1, -1)));
  CHECK(c.labels() == std::vector<std::string>{"1*", "x*", "y*", "xy*"});
  CHECK(c.comul() == transpose(quaternions(QQ, -1, -1).mul()));
}

TEST_CASE("ν = ε⊗ε⊗Id fails the second axiom") {
  const Cotorsor good = dualize(trivial_torsor_of(group_algebra(QQ, cyclic_group(2))));
  const LinearMap id = LinearMap::identity(QQ, {2});
  const LinearMap nu = tensor_product(tensor_product(good.counit(), good.counit()), id);
  const Cotorsor bad(QQ, good.labels(), good.comul(), good.counit(), nu, good.theta());
  const Report r = verify_cotorsor(bad);
  CHECK_FALSE(r.ok());
  CHECK(check(r, "ν∘(Δ⊗Id) = ε⊗Id").pass);
  const Check& second = check(r, "ν∘(Id⊗Δ) = Id⊗ε");
  CHECK_FALSE(second.pass);
  CHECK(second.witness.find("lhs=") != std::string::npos);
  CHECK_THROWS_AS(dualize(bad), Error);
  try {
    dualize(bad);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::VerificationFailure);
  }
}

TEST_CASE("cotorsor shape errors") {
  const Cotorsor c = dualize(trivial_torsor_of(group_algebra(QQ, cyclic_group(2))));
  auto code = [](auto&& build) {
    try {
      build();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::VerificationFailure;
  };
  CHECK(code([&] { Cotorsor(QQ, c.labels(), c.comul(), c.counit(), c.theta(), c.theta()); }) ==
        Errc::ShapeError);
  CHECK(code([&] { Cotorsor(QQ, {"a", "a"}, c.comul(), c.counit(), c.nu(), c.theta()); }) ==
        Errc::ShapeError);
  CHECK(code([&] { Cotorsor(QQ, c.labels(), c.counit(), c.counit(), c.nu(), c.theta()); }) ==
        Errc::ShapeError);
}

TEST_CASE("Parmentier cotorsor with the trivial twist") {
  for (const auto& h : {function_algebra(QQ, cyclic_group(2)), group_algebra(QQ, cyclic_group(3)),
                        sweedler_hopf(QQ), function_algebra(QQ, symmetric_group_3())}) {
    const LinearMap one = tensor_product(h.unit(), h.unit());
    const auto p = parmentier_cotorsor(make_twist(h, one));
    CHECK_MESSAGE(p.report.ok(), p.report.to_text());
    // equals the dual of the trivial torsor of H*
    const Cotorsor expected = dualize(trivial_torsor(dual_hopf(h)));
    CHECK(p.cotorsor == expected);
    CHECK(p.cotorsor.comul() == h.comul());
    // ν(x⊗y⊗z) = x S(y) z
    const LinearMap xsz = apply_on_source(apply_on_source(h.mul(), 0, h.mul()), 1, h.antipode());
    CHECK(p.cotorsor.nu() == xsz);
    CHECK(verify_decorated(p.dual).ok());
  }
}

TEST_CASE("Parmentier cotorsor of the Z/2 bicharacter twist") {
  const auto h = function_algebra(QQ, cyclic_group(2));
  const auto t = make_twist(h, bicharacter(h, [](std::size_t x, std::size_t y) {
                              return x == 1 && y == 1 ? -1 : 1;
                            }));
  REQUIRE(verify_twist(t).ok());
  // u_F = 1_0 - 1_1
  CHECK(t.u.column(0)[0] == q("1"));
  CHECK(t.u.column(0)[1] == q("-1"));
  const auto p = parmentier_cotorsor(t);
  CHECK_MESSAGE(p.report.ok(), p.report.to_text());
  CHECK(twist_hopf(t) == h);
  // u_F enters ν: ν(1_1⊗1_1⊗1_1) = -1_1 since S = Id and u_F 1_1 = -1_1
  CHECK(p.cotorsor.nu().at(1, 7) == q("-1"));
  const auto trivial = parmentier_cotorsor(make_twist(h, tensor_product(h.unit(), h.unit())));
  CHECK_FALSE(p.cotorsor.nu() == trivial.cotorsor.nu());
  CHECK(p.dual.torsor.dim() == 2);
}

TEST_CASE("Parmentier cotorsors of every bicharacter twist of Z/2×Z/2 over F5") {
  const auto h = function_algebra(F5, direct_product(cyclic_group(2), cyclic_group(2)));
  // β((a,b),(c,d)) = (-1)^{ad} first, then all sixteen bilinear forms
  const auto ad = parmentier_cotorsor(make_twist(h, bicharacter(h, [](std::size_t x, std::size_t y) {
                                                   return (x >> 1) & y & 1 ? -1 : 1;
                                                 })));
  CHECK_MESSAGE(ad.report.ok(), ad.report.to_text());
  for (unsigned form = 0; form < 16; ++form) {
    auto beta = [form](std::size_t x, std::size_t y) {
      unsigned e = 0;
      for (unsigned i = 0; i < 2; ++i)
        for (unsigned j = 0; j < 2; ++j)
          if ((form >> (2 * i + j)) & 1u) e ^= ((x >> (1 - i)) & 1u) & ((y >> (1 - j)) & 1u);
      return e ? -1L : 1L;
    };
    const auto t = make_twist(h, bicharacter(h, beta));
    REQUIRE(verify_twist(t).ok());
    const auto p = parmentier_cotorsor(t);
    CHECK_MESSAGE(p.report.ok(), "form " << form << "\n" << p.report.to_text());
    CHECK(p.dual.torsor.dim() == 4);
    CHECK(verify_decorated(p.dual).ok());
  }
}

TEST_CASE("random grouplike torsors dualize and come back") {
  std::mt19937 rng(20261019);
  const auto f7 = FieldSpec::prime(7);
  for (int round = 0; round < 12; ++round) {
    const long qv = std::uniform_int_distribution<long>(0, 1)(rng) ? 2 : 4;  // order 3 mod 7
    const long alpha = std::uniform_int_distribution<long>(1, 6)(rng);
    const long beta = std::uniform_int_distribution<long>(1, 6)(rng);
    const Torsor t = grouplike_torsor(cyclic_algebra(f7, 3, qv, alpha, beta));
    REQUIRE(t.verified());
    const Cotorsor c = dualize(t);
    CHECK(verify_cotorsor(c).ok());
    const Torsor back = dualize(c);
    CHECK(back.mu() == t.mu());
    CHECK(back.algebra() == t.algebra());
  }
}
