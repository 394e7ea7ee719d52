#include "torsorkit/hopf.hpp"

#include <algorithm>
#include <array>

namespace torsorkit {

namespace {

LinearMap column_vector(const LinearMap& f, std::size_t j) {
  const auto c = f.column(j);
  return LinearMap::vector(f.field(), f.target(), {c.begin(), c.end()});
}

void set_column(LinearMap& f, std::size_t j, const LinearMap& v) {
  std::copy(v.values().begin(), v.values().end(), f.column(j).begin());
}

TensorAlgebra tensor_power(const Algebra& a, std::size_t k) {
  TensorAlgebra t;
  for (std::size_t i = 0; i < k; ++i) t.append(a);
  return t;
}

// (m⊗m)∘τ_(23)∘(Δ⊗Δ): the comultiplication of a product.
LinearMap comul_of_product(const HopfAlgebra& h) {
  const std::vector<std::size_t> mid{0, 2, 1, 3};
  LinearMap x = permute_target(tensor_product(h.comul(), h.comul()), mid);
  x = apply_on_target(x, 0, h.mul());
  return apply_on_target(x, 1, h.mul());
}

}  // namespace

HopfAlgebra::HopfAlgebra(Algebra algebra, LinearMap comul, LinearMap counit, LinearMap antipode)
    : algebra_(std::move(algebra)),
      comul_(std::move(comul)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)) {
  const std::size_t n = algebra_.dim();
  if (comul_.source() != Shape{n} || comul_.target() != Shape{n, n})
    throw Error(Errc::ShapeError, "comultiplication table has the wrong shape");
  if (counit_.source() != Shape{n} || !counit_.target().empty())
    throw Error(Errc::ShapeError, "counit has the wrong shape");
  if (antipode_.source() != Shape{n} || antipode_.target() != Shape{n})
    throw Error(Errc::ShapeError, "antipode has the wrong shape");
  for (const LinearMap* m : {&comul_, &counit_, &antipode_})
    if (!(m->field() == algebra_.field()))
      throw Error(Errc::ModulusMismatch, "Hopf tables over different fields");
}

Report verify_hopf(const HopfAlgebra& h) {
  Report r("Hopf algebra of dimension " + std::to_string(h.dim()) + " over " +
           h.field().to_string());
  r.merge(verify_algebra(h.algebra()));
  const LegLabels l1{h.labels()}, l2{h.labels(), h.labels()};
  const LegLabels l3{h.labels(), h.labels(), h.labels()};
  const auto id = LinearMap::identity(h.field(), {h.dim()});
  r.add(identity_check("coassociativity (Δ⊗Id)∘Δ = (Id⊗Δ)∘Δ",
                       apply_on_target(h.comul(), 0, h.comul()),
                       apply_on_target(h.comul(), 1, h.comul()), l1, l3));
  r.add(identity_check("left counit (ε⊗Id)∘Δ = Id", apply_on_target(h.comul(), 0, h.counit()),
                       id, l1, l1));
  r.add(identity_check("right counit (Id⊗ε)∘Δ = Id", apply_on_target(h.comul(), 1, h.counit()),
                       id, l1, l1));
  r.add(identity_check("Δ multiplicative", compose(h.comul(), h.mul()), comul_of_product(h), l2,
                       l2));
  r.add(identity_check("Δ unital Δ(1) = 1⊗1", compose(h.comul(), h.unit()),
                       tensor_product(h.unit(), h.unit()), {}, l2));
  r.add(identity_check("ε multiplicative", compose(h.counit(), h.mul()),
                       tensor_product(h.counit(), h.counit()), l2, {}));
  r.add(identity_check("ε unital ε(1) = 1", compose(h.counit(), h.unit()),
                       LinearMap::scalar(Scalar::one(h.field())), {}, {}));
  const auto eta_eps = compose(h.unit(), h.counit());
  r.add(identity_check("antipode m∘(S⊗Id)∘Δ = η∘ε",
                       compose(h.mul(), apply_on_target(h.comul(), 0, h.antipode())), eta_eps,
                       l1, l1));
  r.add(identity_check("antipode m∘(Id⊗S)∘Δ = η∘ε",
                       compose(h.mul(), apply_on_target(h.comul(), 1, h.antipode())), eta_eps,
                       l1, l1));
  return r;
}

Report verify_hopf_morphism(const HopfAlgebra& source, const LinearMap& f,
                            const HopfAlgebra& target) {
  if (f.source() != Shape{source.dim()} || f.target() != Shape{target.dim()})
    throw Error(Errc::ShapeError, "Hopf morphism shape does not match its algebras");
  Report r("Hopf morphism");
  r.merge(verify_algebra_morphism(source.algebra(), f, target.algebra()));
  const LegLabels ls{source.labels()}, lt{target.labels()}, lt2{target.labels(), target.labels()};
  r.add(identity_check("comultiplicative Δ∘f = (f⊗f)∘Δ", compose(target.comul(), f),
                       compose(tensor_product(f, f), source.comul()), ls, lt2));
  r.add(identity_check("counital ε∘f = ε", compose(target.counit(), f), source.counit(), ls, {}));
  r.add(identity_check("antipode S∘f = f∘S", compose(target.antipode(), f),
                       compose(f, source.antipode()), ls, lt));
  return r;
}

Report verify_hopf_iso(const HopfAlgebra& source, const LinearMap& f, const HopfAlgebra& target) {
  Report r = verify_hopf_morphism(source, f, target);
  const std::size_t rk = rank(f);
  const bool bijective = source.dim() == target.dim() && rk == source.dim();
  r.add("bijective", bijective,
        bijective ? std::string{}
                  : "rank " + std::to_string(rk) + " for dimensions " +
                        std::to_string(source.dim()) + " -> " + std::to_string(target.dim()));
  return r;
}

FiniteGroup::FiniteGroup(std::vector<std::string> labels,
                         std::vector<std::vector<std::size_t>> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw Error(Errc::NotAGroup, "empty table");
  if (table_.size() != n) throw Error(Errc::NotAGroup, "table is not square");
  for (const auto& row : table_) {
    if (row.size() != n) throw Error(Errc::NotAGroup, "table is not square");
    for (std::size_t v : row)
      if (v >= n) throw Error(Errc::NotAGroup, "table is not closed");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw Error(Errc::NotAGroup, "not associative at (" + labels_[a] + "," + labels_[b] +
                                           "," + labels_[c] + ")");
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) ok = table_[e][g] == g && table_[g][e] == g;
    if (ok) identity_ = e, found = true;
  }
  if (!found) throw Error(Errc::NotAGroup, "no identity element");
  inverse_.assign(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h)
      if (table_[g][h] == identity_ && table_[h][g] == identity_) inverse_[g] = h;
    if (inverse_[g] == n) throw Error(Errc::NotAGroup, labels_[g] + " has no inverse");
  }
}

FiniteGroup cyclic_group(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = h.order(), n = g.order() * m;
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("(" + g.labels()[i / m] + "," + h.labels()[i % m] + ")");
    for (std::size_t j = 0; j < n; ++j)
      table[i][j] = g.mul(i / m, j / m) * m + h.mul(i % m, j % m);
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

FiniteGroup symmetric_group_3() {
  std::vector<std::array<std::size_t, 3>> perms;
  std::array<std::size_t, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> labels;
  for (const auto& s : perms)
    labels.push_back(std::to_string(s[0] + 1) + std::to_string(s[1] + 1) + std::to_string(s[2] + 1));
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      // (στ)(k) = σ(τ(k))
      std::array<std::size_t, 3> c{};
      for (std::size_t k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
      table[i][j] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) -
                                             perms.begin());
    }
  return FiniteGroup(std::move(labels), std::move(table));
}

HopfAlgebra group_algebra(FieldSpec field, const FiniteGroup& g) {
  const std::size_t n = g.order();
  const auto one = Scalar::one(field);
  LinearMap mul(field, {n, n}, {n}), comul(field, {n}, {n, n}), counit(field, {n}, {}),
      antipode(field, {n}, {n});
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mul.at(g.mul(a, b), a * n + b) = one;
    comul.at(a * n + a, a) = one;
    counit.at(0, a) = one;
    antipode.at(g.inverse(a), a) = one;
  }
  Algebra alg(field, g.labels(), std::move(mul), LinearMap::basis_vector(field, {n}, g.identity()));
  return HopfAlgebra(std::move(alg), std::move(comul), std::move(counit), std::move(antipode));
}

HopfAlgebra function_algebra(FieldSpec field, const FiniteGroup& g) {
  const std::size_t n = g.order();
  const auto one = Scalar::one(field);
  std::vector<std::string> labels;
  LinearMap mul(field, {n, n}, {n}), unit(field, {}, {n}), comul(field, {n}, {n, n}),
      counit(field, {n}, {}), antipode(field, {n}, {n});
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back("1_" + g.labels()[a]);
    mul.at(a, a * n + a) = one;
    unit.at(a, 0) = one;
    for (std::size_t h = 0; h < n; ++h) comul.at(h * n + g.mul(g.inverse(h), a), a) = one;
    antipode.at(g.inverse(a), a) = one;
  }
  counit.at(0, g.identity()) = one;
  Algebra alg(field, std::move(labels), std::move(mul), std::move(unit));
  return HopfAlgebra(std::move(alg), std::move(comul), std::move(counit), std::move(antipode));
}

std::string dual_label(const std::string& label) {
  if (!label.empty() && label.back() == '*') return label.substr(0, label.size() - 1);
  return label + "*";
}

HopfAlgebra dual_hopf(const HopfAlgebra& h) {
  std::vector<std::string> labels;
  for (const auto& l : h.labels()) labels.push_back(dual_label(l));
  Algebra alg(h.field(), std::move(labels), transpose(h.comul()), transpose(h.counit()));
  return HopfAlgebra(std::move(alg), transpose(h.mul()), transpose(h.unit()),
                     transpose(h.antipode()));
}

TwistData make_twist(const HopfAlgebra& host, const LinearMap& f) {
  const std::size_t n = host.dim();
  if (!f.source().empty() || f.target() != Shape{n, n})
    throw Error(Errc::ShapeError, "twist must be a vector in H⊗H");
  const TensorAlgebra hh = tensor_power(host.algebra(), 2);
  const LinearMap left = hh.left_multiplication(f);
  const auto k = kernel_basis(left);
  if (k.dim() > 0) throw NotInvertibleError(k.vectors()[0], "twist F is not invertible");
  const LinearMap f_inv = compose(invert_map(left), hh.unit());
  if (!(hh.multiply(f_inv, f) == hh.unit()))
    throw NotInvertibleError({}, "twist F has no two-sided inverse");
  LinearMap u = compose(host.mul(), apply_on_target(f, 1, host.antipode()));
  LinearMap u_inv = compose(host.mul(), apply_on_target(f_inv, 0, host.antipode()));
  return TwistData{host, f, f_inv, std::move(u), std::move(u_inv)};
}

namespace {

// Checks that need no inverse of F.
void add_cocycle_checks(Report& r, const HopfAlgebra& h, const LinearMap& f) {
  const LegLabels l1{h.labels()}, l3{h.labels(), h.labels(), h.labels()};
  const TensorAlgebra h3 = tensor_power(h.algebra(), 3);
  r.add(identity_check("cocycle (F⊗1)(Δ⊗Id)(F) = (1⊗F)(Id⊗Δ)(F)",
                       h3.multiply(tensor_product(f, h.unit()), apply_on_target(f, 0, h.comul())),
                       h3.multiply(tensor_product(h.unit(), f), apply_on_target(f, 1, h.comul())),
                       {}, l3));
  r.add(identity_check("normalised (ε⊗Id)(F) = 1", apply_on_target(f, 0, h.counit()), h.unit(),
                       {}, l1));
  r.add(identity_check("normalised (Id⊗ε)(F) = 1", apply_on_target(f, 1, h.counit()), h.unit(),
                       {}, l1));
}

}  // namespace

Report verify_twist(const TwistData& t) {
  const HopfAlgebra& h = t.host;
  const LegLabels l1{h.labels()}, l2{h.labels(), h.labels()};
  const TensorAlgebra h1(h.algebra()), h2 = tensor_power(h.algebra(), 2);
  Report r("twist");
  r.add(identity_check("F·F^{-1} = 1⊗1", h2.multiply(t.f, t.f_inv), h2.unit(), {}, l2));
  r.add(identity_check("F^{-1}·F = 1⊗1", h2.multiply(t.f_inv, t.f), h2.unit(), {}, l2));
  add_cocycle_checks(r, h, t.f);
  r.add(identity_check("u_F·u_F^{-1} = 1", h1.multiply(t.u, t.u_inv), h.unit(), {}, l1));
  r.add(identity_check("u_F^{-1}·u_F = 1", h1.multiply(t.u_inv, t.u), h.unit(), {}, l1));
  return r;
}

Report verify_twist(const HopfAlgebra& host, const LinearMap& f) {
  try {
    return verify_twist(make_twist(host, f));
  } catch (const NotInvertibleError& e) {
    Report r("twist");
    std::string witness = "F·u = 0 for u =";
    for (const auto& c : e.witness()) witness += " " + c.to_string();
    r.add("F invertible", false, witness);
    add_cocycle_checks(r, host, f);
    return r;
  }
}

HopfAlgebra twist_hopf(const TwistData& t) {
  const Report r = verify_twist(t);
  if (!r.ok()) {
    const Check* c = r.first_failure();
    throw Error(Errc::TwistInvalid, c->name + ": " + c->witness);
  }
  const HopfAlgebra& h = t.host;
  const TensorAlgebra h1(h.algebra()), h2 = tensor_power(h.algebra(), 2);
  LinearMap comul(h.field(), {h.dim()}, {h.dim(), h.dim()});
  LinearMap antipode(h.field(), {h.dim()}, {h.dim()});
  for (std::size_t j = 0; j < h.dim(); ++j) {
    set_column(comul, j, h2.multiply(h2.multiply(t.f, column_vector(h.comul(), j)), t.f_inv));
    set_column(antipode, j,
               h1.multiply(h1.multiply(t.u, column_vector(h.antipode(), j)), t.u_inv));
  }
  return HopfAlgebra(h.algebra(), std::move(comul), h.counit(), std::move(antipode));
}

}  // namespace torsorkit
