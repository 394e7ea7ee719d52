#include "doctest.h"
#include "support.hpp"
#include "torsorkit/hopf.hpp"

using namespace support;

namespace {

// Diagonal twist Σ β(g,h) 1_g⊗1_h on k^G.
LinearMap bicharacter_twist(const HopfAlgebra& fun, const std::function<long(std::size_t, std::size_t)>& beta) {
  const std::size_t n = fun.dim();
  LinearMap f(fun.field(), {}, {n, n});
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) f.at(g * n + h, 0) = Scalar(fun.field(), beta(g, h));
  return f;
}

bool same_tables(const HopfAlgebra& a, const HopfAlgebra& b) {
  return a.mul() == b.mul() && a.unit() == b.unit() && a.comul() == b.comul() &&
         a.counit() == b.counit() && a.antipode() == b.antipode();
}

}  // namespace

TEST_CASE("group algebra of Z/2") {
  const auto h = group_algebra(QQ, cyclic_group(2));
  const auto r = verify_hopf(h);
  CHECK(r.ok());
  CHECK(h.antipode() == LinearMap::identity(QQ, {2}));

  HopfAlgebra zero_s(h.algebra(), h.comul(), h.counit(), LinearMap(QQ, {2}, {2}));
  const auto bad = verify_hopf(zero_s);
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(bad.find("antipode m∘(S⊗Id)∘Δ = η∘ε")->pass);
  CHECK(bad.find("coassociativity (Δ⊗Id)∘Δ = (Id⊗Δ)∘Δ")->pass);

  // S vanishing only on the generator: the witness is the generator
  LinearMap s = h.antipode();
  s.at(1, 1) = q("0");
  const auto bad_g = verify_hopf(HopfAlgebra(h.algebra(), h.comul(), h.counit(), s));
  CHECK(bad_g.find("antipode m∘(S⊗Id)∘Δ = η∘ε")->witness.rfind("at 1,", 0) == 0);
}

TEST_CASE("standard Hopf algebras pass verification") {
  const std::vector<FiniteGroup> groups{cyclic_group(1), cyclic_group(2), cyclic_group(3),
                                        cyclic_group(5),
                                        direct_product(cyclic_group(2), cyclic_group(2)),
                                        direct_product(cyclic_group(2), cyclic_group(3)),
                                        symmetric_group_3()};
  for (const auto& field : {QQ, FieldSpec::prime(2), FieldSpec::prime(7)})
    for (const auto& g : groups) {
      CAPTURE(g.order());
      const auto kg = group_algebra(field, g);
      const auto kG = function_algebra(field, g);
      CHECK(verify_hopf(kg).ok());
      CHECK(verify_hopf(kG).ok());
      CHECK(is_commutative(kG.algebra()));
      CHECK(verify_hopf(dual_hopf(kg)).ok());
      CHECK(verify_hopf(dual_hopf(kG)).ok());
      CHECK(dual_hopf(dual_hopf(kg)) == kg);
      CHECK(dual_hopf(dual_hopf(kG)) == kG);
      // the two are dual to each other on matching bases
      CHECK(same_tables(dual_hopf(kg), kG));
      CHECK(same_tables(dual_hopf(kG), kg));
    }
  const auto v4 = function_algebra(QQ, direct_product(cyclic_group(2), cyclic_group(2)));
  CHECK(v4.dim() == 4);
  CHECK(v4.labels()[3] == "1_(1,1)");
  CHECK(!is_commutative(group_algebra(QQ, symmetric_group_3()).algebra()));
}

TEST_CASE("broken group tables") {
  auto expect_not_group = [](std::vector<std::vector<std::size_t>> t) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < t.size(); ++i) labels.push_back(std::to_string(i));
    try {
      FiniteGroup g(labels, t);
      FAIL("accepted broken table");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotAGroup);
    }
  };
  expect_not_group({{0, 1}, {1, 1}});          // 1 has no inverse
  expect_not_group({{0, 1, 2}, {1, 0, 0}, {2, 0, 0}});  // not associative
  expect_not_group({{1, 0}, {0, 0}});          // no identity
  expect_not_group({{0, 2}, {1, 0}});          // not closed
}

TEST_CASE("Hopf morphisms") {
  const auto g = cyclic_group(3);
  const auto kg = group_algebra(QQ, g);
  CHECK(verify_hopf_iso(kg, LinearMap::identity(QQ, {3}), kg).ok());
  // inversion g -> g^{-1} is an automorphism of an abelian group algebra
  LinearMap inv(QQ, {3}, {3});
  for (std::size_t a = 0; a < 3; ++a) inv.at(g.inverse(a), a) = q("1");
  CHECK(verify_hopf_iso(kg, inv, kg).ok());
  // collapsing G to the identity is a Hopf morphism but not an iso
  LinearMap proj(QQ, {3}, {3});
  for (std::size_t a = 0; a < 3; ++a) proj.at(0, a) = q("1");
  const auto r = verify_hopf_iso(kg, proj, kg);
  CHECK(r.find("multiplicative f(xy) = f(x)f(y)")->pass);
  CHECK(r.find("comultiplicative Δ∘f = (f⊗f)∘Δ")->pass);
  CHECK_FALSE(r.find("bijective")->pass);
  // on functions, 1_g -> 1_g + 1_e is not comultiplicative
  const auto kG = function_algebra(QQ, g);
  LinearMap shear = LinearMap::identity(QQ, {3});
  shear.at(0, 1) = q("1");
  CHECK_FALSE(verify_hopf_morphism(kG, shear, kG).find("comultiplicative Δ∘f = (f⊗f)∘Δ")->pass);
}

TEST_CASE("trivial twist") {
  const auto h = group_algebra(QQ, symmetric_group_3());
  const auto t = make_twist(h, tensor_product(h.unit(), h.unit()));
  CHECK(verify_twist(t).ok());
  CHECK(t.u == h.unit());
  CHECK(t.u_inv == h.unit());
  CHECK(twist_hopf(t) == h);
}

TEST_CASE("bicharacter twist on functions on Z/2") {
  const auto h = function_algebra(QQ, cyclic_group(2));
  const auto f = bicharacter_twist(h, [](std::size_t a, std::size_t b) { return a && b ? -1 : 1; });
  const auto t = make_twist(h, f);
  CHECK(verify_twist(t).ok());
  CHECK(t.u == element(h.algebra(), {q("1"), q("-1")}));
  CHECK(t.f_inv == f);  // ±1 entries square to one
  const auto hf = twist_hopf(t);
  CHECK(hf.comul() == h.comul());
  CHECK(hf.antipode() == h.antipode());

  const auto idem = bicharacter_twist(h, [](std::size_t a, std::size_t b) { return a == 0 && b == 0 ? 1 : 0; });
  const auto r = verify_twist(h, idem);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.find("F invertible")->pass);
  const Check* norm = r.find("normalised (ε⊗Id)(F) = 1");
  CHECK_FALSE(norm->pass);
  CHECK(norm->witness.find("coordinate 1_1") != std::string::npos);
  try {
    (void)make_twist(h, idem);
    FAIL("idempotent twist inverted");
  } catch (const NotInvertibleError& e) {
    CHECK(e.code() == Errc::NotInvertible);
  }
}

TEST_CASE("bicharacter twists on Z/2 x Z/2 over F5") {
  const auto f5 = FieldSpec::prime(5);
  const auto v4 = direct_product(cyclic_group(2), cyclic_group(2));
  const auto h = function_algebra(f5, v4);
  // every bilinear form M over F2 gives β(x, y) = (-1)^{x^T M y}
  for (unsigned m = 0; m < 16; ++m) {
    CAPTURE(m);
    auto beta = [&](std::size_t x, std::size_t y) {
      const unsigned x0 = x >> 1, x1 = x & 1, y0 = y >> 1, y1 = y & 1;
      const unsigned e = ((m & 1) & x0 & y0) ^ ((m >> 1 & 1) & x0 & y1) ^
                         ((m >> 2 & 1) & x1 & y0) ^ ((m >> 3 & 1) & x1 & y1);
      return e ? -1L : 1L;
    };
    const auto t = make_twist(h, bicharacter_twist(h, beta));
    CHECK(verify_twist(t).ok());
    std::vector<Scalar> u;
    for (std::size_t g = 0; g < 4; ++g) u.emplace_back(f5, beta(g, v4.inverse(g)));
    CHECK(t.u == element(h.algebra(), u));
    const auto hf = twist_hopf(t);
    CHECK(verify_hopf(hf).ok());
    CHECK(hf.comul() == h.comul());  // conjugation in a commutative algebra
  }
}

TEST_CASE("non-cocycles are rejected") {
  const auto h = function_algebra(QQ, cyclic_group(3));
  // normalised but not a cocycle: β(1,1) = 2 only
  const auto f = bicharacter_twist(h, [](std::size_t a, std::size_t b) { return a == 1 && b == 1 ? 2 : 1; });
  const auto t = make_twist(h, f);
  const auto r = verify_twist(t);
  CHECK_FALSE(r.find("cocycle (F⊗1)(Δ⊗Id)(F) = (1⊗F)(Id⊗Δ)(F)")->pass);
  CHECK(r.find("normalised (ε⊗Id)(F) = 1")->pass);
  try {
    (void)twist_hopf(t);
    FAIL("invalid twist accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TwistInvalid);
  }
}
