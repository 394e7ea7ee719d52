#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "torsorkit/algebra.hpp"

namespace support {

using namespace torsorkit;

inline const FieldSpec QQ = FieldSpec::rationals();

inline Scalar q(const char* text) { return Scalar::parse(QQ, text); }

inline std::vector<Scalar> coords(FieldSpec f, std::initializer_list<long> values) {
  std::vector<Scalar> out;
  for (long v : values) out.emplace_back(f, v);
  return out;
}

/// Builds an algebra from a rule giving e_i·e_j as a coordinate vector.
inline Algebra make_algebra(FieldSpec f, std::vector<std::string> labels,
                            const std::function<std::vector<Scalar>(std::size_t, std::size_t)>& rule,
                            std::size_t unit_index = 0) {
  const std::size_t n = labels.size();
  LinearMap mul(f, {n, n}, {n});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto v = rule(i, j);
      for (std::size_t k = 0; k < n; ++k) mul.at(k, i * n + j) = v[k];
    }
  return Algebra(f, std::move(labels), std::move(mul), LinearMap::basis_vector(f, {n}, unit_index));
}

/// Q[X]/(X^2 - d) on {1, x}.
inline Algebra quadratic(FieldSpec f, long d) {
  return make_algebra(f, {"1", "x"}, [&](std::size_t i, std::size_t j) {
    if (i == 1 && j == 1) return coords(f, {d, 0});
    std::vector<Scalar> v(2, Scalar::zero(f));
    v[i + j] = Scalar::one(f);
    return v;
  });
}

/// Generalised quaternions x^2 = a, y^2 = b, yx = -xy on {1, x, y, xy}.
inline Algebra quaternions(FieldSpec f, long a, long b) {
  return make_algebra(f, {"1", "x", "y", "xy"}, [&](std::size_t i, std::size_t j) {
    // e_i = x^{i1} y^{i2} with i = i1 + 2 i2
    const long i1 = i & 1, i2 = i >> 1, j1 = j & 1, j2 = j >> 1;
    // x^{i1} y^{i2} x^{j1} y^{j2} = (-1)^{i2 j1} x^{i1+j1} y^{i2+j2}
    Scalar c = Scalar::one(f);
    if (i2 && j1) c = -c;
    long ex = i1 + j1, ey = i2 + j2;
    if (ex == 2) c *= Scalar(f, a), ex = 0;
    if (ey == 2) c *= Scalar(f, b), ey = 0;
    std::vector<Scalar> v(4, Scalar::zero(f));
    v[static_cast<std::size_t>(ex + 2 * ey)] = c;
    return v;
  });
}

/// Group algebra of Z/n.
inline Algebra cyclic_group_algebra(FieldSpec f, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  return make_algebra(f, labels, [&](std::size_t i, std::size_t j) {
    std::vector<Scalar> v(n, Scalar::zero(f));
    v[(i + j) % n] = Scalar::one(f);
    return v;
  });
}

inline LinearMap random_map(FieldSpec field, Shape source, Shape target, std::mt19937& rng,
                            int density_percent = 60) {
  LinearMap f(field, std::move(source), std::move(target));
  std::uniform_int_distribution<int> coin(0, 99), value(-3, 3);
  for (std::size_t j = 0; j < f.source_size(); ++j)
    for (std::size_t t = 0; t < f.target_size(); ++t)
      if (coin(rng) < density_percent) f.at(t, j) = Scalar(field, value(rng));
  return f;
}

}  // namespace support

#include "torsorkit/torsor.hpp"

namespace support {

/// A_{α,β}: x^n = α, y^n = β, xy = q yx on x^i y^j (index i + n j).
inline Algebra cyclic_algebra(FieldSpec f, std::size_t n, long q, long alpha, long beta) {
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      std::string l;
      if (i) l += i == 1 ? "x" : "x^" + std::to_string(i);
      if (j) l += j == 1 ? "y" : "y^" + std::to_string(j);
      labels.push_back(l.empty() ? "1" : l);
    }
  const Scalar qinv = Scalar(f, q).inverse();
  return make_algebra(f, labels, [&](std::size_t a, std::size_t b) {
    const std::size_t i = a % n, j = a / n, k = b % n, l = b / n;
    // y^j x^k = q^{-jk} x^k y^j
    Scalar c = qinv.pow(static_cast<long>(j * k));
    if (i + k >= n) c *= Scalar(f, alpha);
    if (j + l >= n) c *= Scalar(f, beta);
    std::vector<Scalar> v(n * n, Scalar::zero(f));
    v[(i + k) % n + n * ((j + l) % n)] = c;
    return v;
  });
}

/// μ(e) = e⊗e^{-1}⊗e on a basis of invertible monomials, θ = Id.
inline Torsor grouplike_torsor(const Algebra& a) {
  const std::size_t n = a.dim();
  LinearMap mu(a.field(), {n}, {n, n, n});
  for (std::size_t i = 0; i < n; ++i) {
    const auto e = LinearMap::basis_vector(a.field(), {n}, i);
    const auto v = tensor_product(tensor_product(e, inverse(a, e)), e);
    std::copy(v.values().begin(), v.values().end(), mu.column(i).begin());
  }
  return Torsor(a, mu, LinearMap::identity(a.field(), {n}));
}

/// μ = (Id⊗S⊗Id)∘(Δ⊗Id)∘Δ, θ = S².
inline Torsor trivial_torsor_of(const HopfAlgebra& h) {
  LinearMap mu = apply_on_target(h.comul(), 0, h.comul());
  mu = apply_on_target(mu, 1, h.antipode());
  return Torsor(h.algebra(), mu, compose(h.antipode(), h.antipode()));
}

/// Sweedler's four-dimensional Hopf algebra on {1, g, x, gx}: g^2 = 1,
/// x^2 = 0, xg = -gx, Δx = x⊗1 + g⊗x, S(x) = -gx.
inline HopfAlgebra sweedler_hopf(FieldSpec f) {
  // g^a x^b at index a + 2b
  const Algebra alg = make_algebra(f, {"1", "g", "x", "gx"}, [&](std::size_t u, std::size_t v) {
    const std::size_t a = u & 1, b = u >> 1, c = v & 1, d = v >> 1;
    std::vector<Scalar> out(4, Scalar::zero(f));
    if (b + d < 2) out[(a + c) % 2 + 2 * (b + d)] = Scalar(f, (b && c) ? -1 : 1);
    return out;
  });
  LinearMap comul(f, {4}, {4, 4}), counit(f, {4}, {}), s(f, {4}, {4});
  const auto one = Scalar::one(f);
  comul.at(0, 0) = one;
  comul.at(1 * 4 + 1, 1) = one;
  comul.at(2 * 4 + 0, 2) = one;
  comul.at(1 * 4 + 2, 2) = one;
  comul.at(3 * 4 + 1, 3) = one;
  comul.at(0 * 4 + 3, 3) = one;
  counit.at(0, 0) = one;
  counit.at(0, 1) = one;
  s.at(0, 0) = one;
  s.at(1, 1) = one;
  s.at(3, 2) = -one;
  s.at(2, 3) = one;
  return HopfAlgebra(alg, comul, counit, s);
}

}  // namespace support
