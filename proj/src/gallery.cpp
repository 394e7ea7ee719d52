#include "torsorkit/gallery.hpp"

#include <algorithm>
#include <charconv>

#include "torsorkit/limits.hpp"
#include "torsorkit/linalg.hpp"

namespace torsorkit {

namespace {

[[noreturn]] void reject(const std::string& what, const Report& r) {
  const Check* c = r.first_failure();
  throw Error(Errc::VerificationFailure,
              what + ": " + c->name + (c->witness.empty() ? "" : " -- " + c->witness));
}

Torsor verified(Torsor t, const std::string& what) {
  if (!t.verified()) reject(what, t.report());
  return t;
}

LinearMap column_vector(const LinearMap& f, std::size_t j) {
  const auto c = f.column(j);
  return LinearMap::vector(f.field(), f.target(), {c.begin(), c.end()});
}

void set_column(LinearMap& f, std::size_t j, const LinearMap& v) {
  std::copy(v.values().begin(), v.values().end(), f.column(j).begin());
}

TensorAlgebra law_algebra(const Algebra& a) {
  TensorAlgebra t(a);
  t.append(a, true);
  t.append(a);
  return t;
}

// Monic version of p with trailing zeros stripped.
Polynomial monic(FieldSpec field, Polynomial p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  if (p.size() < 2) throw Error(Errc::NotSeparable, "polynomial of degree < 1");
  for (const auto& c : p)
    if (!(c.field() == field)) throw Error(Errc::ModulusMismatch, "coefficient over another field");
  const Scalar lead = p.back().inverse();
  for (auto& c : p) c *= lead;
  return p;
}

// k[T]/(P) on {1, t, ..., t^{n-1}}.
Algebra quotient_algebra(FieldSpec field, const Polynomial& p) {
  const std::size_t n = p.size() - 1;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k)
    labels.push_back(k == 0 ? "1" : k == 1 ? "t" : "t^" + std::to_string(k));
  // t^k for k < 2n - 1 reduced modulo P
  std::vector<std::vector<Scalar>> powers;
  for (std::size_t k = 0; k + 1 < 2 * n; ++k) {
    std::vector<Scalar> v(n, Scalar::zero(field));
    if (k < n) {
      v[k] = Scalar::one(field);
    } else {
      const auto& prev = powers.back();
      for (std::size_t i = 0; i + 1 < n; ++i) v[i + 1] = prev[i];
      for (std::size_t i = 0; i < n; ++i) v[i] -= prev[n - 1] * p[i];
    }
    powers.push_back(std::move(v));
  }
  LinearMap mul(field, {n, n}, {n});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      std::copy(powers[i + j].begin(), powers[i + j].end(), mul.column(i * n + j).begin());
  return Algebra(field, std::move(labels), std::move(mul), LinearMap::basis_vector(field, {n}, 0));
}

LinearMap evaluate(const Algebra& a, const Polynomial& p, const LinearMap& x) {
  LinearMap acc(a.field(), {}, {a.dim()});
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = multiply(a, acc, x);
    acc += a.unit() * *it;
  }
  return acc;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t at = s.find(sep, start);
    out.emplace_back(s.substr(start, at == std::string_view::npos ? s.size() - start : at - start));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

std::size_t parse_size(const std::string& s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw Error(Errc::ParseError, "expected a positive integer, got \"" + s + "\"");
  return v;
}

LinearMap bicharacter(const HopfAlgebra& h, long (*beta)(std::size_t, std::size_t)) {
  const std::size_t n = h.dim();
  LinearMap f(h.field(), {}, {n, n});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) f.at(x * n + y, 0) = Scalar(h.field(), beta(x, y));
  return f;
}

}  // namespace

Torsor build_trivial_torsor(const HopfAlgebra& h) {
  const Report r = verify_hopf(h);
  if (!r.ok()) {
    const Check* c = r.first_failure();
    throw Error(Errc::HopfInvalid, c->name + (c->witness.empty() ? "" : " -- " + c->witness));
  }
  return verified(trivial_torsor(h), "trivial torsor");
}

LinearMap extend_from_generators(const Algebra& a, const std::vector<std::size_t>& generators,
                                 const std::vector<LinearMap>& images,
                                 const std::vector<std::vector<std::size_t>>& words) {
  const std::size_t n = a.dim();
  const FieldSpec& f = a.field();
  if (words.size() != n || images.size() != generators.size())
    throw Error(Errc::ShapeError, "one word per basis element and one image per generator");
  const TensorAlgebra law = law_algebra(a);
  LinearMap mu(f, {n}, {n, n, n});
  for (std::size_t k = 0; k < n; ++k) {
    LinearMap word = a.unit(), image = law.unit();
    for (std::size_t g : words[k]) {
      if (g >= generators.size()) throw Error(Errc::ShapeError, "word uses an unknown generator");
      word = multiply(a, word, LinearMap::basis_vector(f, {n}, generators[g]));
      image = law.multiply(image, images[g]);
    }
    if (!(word == LinearMap::basis_vector(f, {n}, k)))
      throw Error(Errc::ShapeError, "word for " + a.labels()[k] + " does not multiply out to it");
    set_column(mu, k, image);
  }
  return mu;
}

Torsor build_quadratic_torsor(FieldSpec field, const Scalar& d, QuadraticVariant variant) {
  const bool char2 = field.characteristic() == 2;
  const Scalar one = Scalar::one(field), zero = Scalar::zero(field);
  LinearMap mul(field, {2, 2}, {2});
  mul.at(0, 0) = one;
  mul.at(1, 1) = one;
  mul.at(1, 2) = one;
  LinearMap mu(field, {2}, {2, 2, 2});
  mu.at(0, 0) = one;
  if (variant == QuadraticVariant::Sqrt) {
    if (char2) throw Error(Errc::BadCharacteristic, "the square-root torsor needs characteristic ≠ 2");
    if (d.is_zero()) throw Error(Errc::DNotInvertible, "d = 0: k[X]/(X²) carries no torsor structure");
    mul.at(0, 3) = d;
    // x^{-1} = x/d
    mu.at(7, 1) = d.inverse();
  } else {
    if (!char2) throw Error(Errc::BadCharacteristic, "Artin–Schreier torsors need characteristic 2");
    mul.at(0, 3) = d;  // x² = x + d
    mul.at(1, 3) = one;
    for (std::size_t k : {1u, 2u, 4u}) mu.at(k, 1) = one;
  }
  Algebra a(field, {"1", "x"}, std::move(mul), LinearMap::basis_vector(field, {2}, 0));
  // μ is given on the generator and extended multiplicatively
  const LinearMap ext = extend_from_generators(a, {1}, {column_vector(mu, 1)}, {{}, {0}});
  return verified(Torsor(std::move(a), ext, LinearMap::identity(field, {2})), "quadratic torsor");
}

GaloisBuild build_galois(FieldSpec field, const Polynomial& poly, const std::vector<Polynomial>& action) {
  const Polynomial p = monic(field, poly);
  const std::size_t n = p.size() - 1;
  const Algebra k = quotient_algebra(field, p);
  // separable iff the trace form is nondegenerate
  {
    LinearMap trace_form(field, {n}, {n});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const LinearMap lm = TensorAlgebra(k).left_multiplication(
            multiply(k, LinearMap::basis_vector(field, {n}, i), LinearMap::basis_vector(field, {n}, j)));
        Scalar tr = Scalar::zero(field);
        for (std::size_t d = 0; d < n; ++d) tr += lm.at(d, d);
        trace_form.at(i, j) = tr;
      }
    if (rank(trace_form) != n) throw Error(Errc::NotSeparable, "P has a repeated root");
  }
  if (action.size() != n)
    throw Error(Errc::NotGaloisAction, std::to_string(action.size()) + " automorphisms for degree " +
                                           std::to_string(n));
  const LinearMap t = LinearMap::basis_vector(field, {n}, 1 % n);
  std::vector<LinearMap> sigma, images;
  for (std::size_t s = 0; s < n; ++s) {
    const LinearMap img = evaluate(k, action[s], t);
    if (!evaluate(k, p, img).is_zero())
      throw Error(Errc::NotGaloisAction, "σ" + std::to_string(s) + "(t) is not a root of P");
    LinearMap m(field, {n}, {n});
    LinearMap pw = k.unit();
    for (std::size_t c = 0; c < n; ++c) {
      set_column(m, c, pw);
      pw = multiply(k, pw, img);
    }
    if (rank(m) != n) throw Error(Errc::NotGaloisAction, "σ" + std::to_string(s) + " is not bijective");
    for (std::size_t r = 0; r < s; ++r)
      if (sigma[r] == m) throw Error(Errc::NotGaloisAction, "the action is not faithful");
    sigma.push_back(std::move(m));
    images.push_back(img);
  }
  const LinearMap id = LinearMap::identity(field, {n});
  if (std::find(sigma.begin(), sigma.end(), id) == sigma.end())
    throw Error(Errc::NotGaloisAction, "the identity is missing");
  for (const auto& a : sigma)
    for (const auto& b : sigma)
      if (std::find(sigma.begin(), sigma.end(), compose(a, b)) == sigma.end())
        throw Error(Errc::NotGaloisAction, "not closed under composition");
  {
    LinearMap stacked(field, {n}, {n, n});
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) stacked.at(s * n + r, c) = (sigma[s] - id).at(r, c);
    if (kernel_basis(stacked).dim() != 1) throw Error(Errc::NotGaloisAction, "fixed field is larger than k");
  }

  // P_σ = ∏_{τ≠σ} (t⊗1 - 1⊗τ(t)) (1⊗(σ(t) - τ(t))^{-1})
  TensorAlgebra kk(k);
  kk.append(k);
  const LinearMap t1 = tensor_product(t, k.unit());
  std::vector<LinearMap> idem;
  for (std::size_t s = 0; s < n; ++s) {
    LinearMap ps = kk.unit();
    for (std::size_t r = 0; r < n; ++r) {
      if (r == s) continue;
      const LinearMap den = [&] {
        try {
          return inverse(k, images[s] - images[r]);
        } catch (const Error&) {
          throw Error(Errc::NotGaloisAction, "σ(t) - τ(t) is not invertible");
        }
      }();
      ps = kk.multiply(ps, t1 - tensor_product(k.unit(), images[r]));
      ps = kk.multiply(ps, tensor_product(k.unit(), den));
    }
    idem.push_back(std::move(ps));
  }
  Report report("Galois idempotents");
  {
    LinearMap sum(field, {}, {n, n});
    for (const auto& ps : idem) sum = sum + ps;
    report.add(identity_check("Σ_σ P_σ = 1⊗1", sum, kk.unit(), {}, LegLabels(2, k.labels())));
    bool ok = true;
    std::string witness;
    for (std::size_t s = 0; s < n && ok; ++s)
      for (std::size_t r = 0; r < n && ok; ++r) {
        const LinearMap prod = kk.multiply(idem[s], idem[r]);
        const LinearMap want = r == s ? idem[s] : LinearMap(field, {}, {n, n});
        if (!(prod == want)) ok = false, witness = "σ" + std::to_string(s) + ", σ" + std::to_string(r);
      }
    report.add("P_σ·P_τ = δ_{σ,τ} P_σ", ok, witness);
  }
  if (!report.ok()) reject("Galois idempotents", report);

  LinearMap mu(field, {n}, {n, n, n});
  for (std::size_t x = 0; x < n; ++x) {
    LinearMap v(field, {}, {n, n, n});
    for (std::size_t s = 0; s < n; ++s) v = v + tensor_product(idem[s], column_vector(sigma[s], x));
    set_column(mu, x, v);
  }
  Torsor tor = verified(Torsor(k, std::move(mu), id), "Galois torsor");
  return GaloisBuild{std::move(tor), std::move(sigma), std::move(idem), std::move(report)};
}

Torsor build_galois_torsor(FieldSpec field, const Polynomial& p, const std::vector<Polynomial>& action) {
  return build_galois(field, p, action).torsor;
}

Algebra cyclic_algebra(FieldSpec field, std::size_t n, const Scalar& q, const Scalar& alpha,
                       const Scalar& beta) {
  if (n < 2) throw Error(Errc::QNotPrimitive, "n must be at least 2");
  if (!q.pow(static_cast<long>(n)).is_one())
    throw Error(Errc::QNotPrimitive, "q^" + std::to_string(n) + " ≠ 1");
  for (std::size_t m = 1; m < n; ++m)
    if (q.pow(static_cast<long>(m)).is_one())
      throw Error(Errc::QNotPrimitive, "q^" + std::to_string(m) + " = 1");
  if (alpha.is_zero() || beta.is_zero()) throw Error(Errc::AlphaBetaZero, "α and β must be nonzero");
  if (n * n > max_dim())
    throw Error(Errc::CapExceeded, "dimension " + std::to_string(n * n) + " above the cap");
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      std::string l;
      if (i) l += i == 1 ? "x" : "x^" + std::to_string(i);
      if (j) l += j == 1 ? "y" : "y^" + std::to_string(j);
      labels.push_back(l.empty() ? "1" : l);
    }
  const std::size_t d = n * n;
  const Scalar qinv = q.inverse();
  LinearMap mul(field, {d, d}, {d});
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const std::size_t i = a % n, j = a / n, k = b % n, l = b / n;
      // y^j x^k = q^{-jk} x^k y^j
      Scalar c = qinv.pow(static_cast<long>(j * k));
      if (i + k >= n) c *= alpha;
      if (j + l >= n) c *= beta;
      mul.at((i + k) % n + n * ((j + l) % n), a * d + b) = c;
    }
  return Algebra(field, std::move(labels), std::move(mul), LinearMap::basis_vector(field, {d}, 0));
}

Torsor build_cyclic_algebra_torsor(FieldSpec field, std::size_t n, const Scalar& q,
                                   const Scalar& alpha, const Scalar& beta) {
  const Algebra a = cyclic_algebra(field, n, q, alpha, beta);
  const std::size_t d = n * n;
  std::vector<LinearMap> images;
  for (std::size_t g : {std::size_t{1}, n}) {
    const LinearMap e = LinearMap::basis_vector(field, {d}, g);
    images.push_back(tensor_product(tensor_product(e, inverse(a, e)), e));
  }
  std::vector<std::vector<std::size_t>> words;
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<std::size_t> w(k % n, 0);
    w.insert(w.end(), k / n, 1);
    words.push_back(std::move(w));
  }
  LinearMap mu = extend_from_generators(a, {1, n}, images, words);
  return verified(Torsor(a, std::move(mu), LinearMap::identity(field, {d})), "cyclic algebra torsor");
}

CyclicSideIso cyclic_side_iso(const Torsor& t, std::size_t n, const Scalar& q) {
  const std::size_t d = n * n;
  const FieldSpec& f = t.field();
  if (t.dim() != d) throw Error(Errc::DimensionMismatch, "torsor dimension is not n²");
  SideHopf hl = compute_side_hopf(t, Side::Left);
  const SideHopf hr = compute_side_hopf(t, Side::Right);
  Report r("H_l of the cyclic algebra torsor");
  r.add("H_l = H_r as subspaces of T⊗T", hl.carrier == hr.carrier);
  r.add("H_l commutative", is_commutative(hl.hopf.algebra()));
  r.add("dim H_l = n²", hl.hopf.dim() == d, "dim " + std::to_string(hl.hopf.dim()));

  // group-likes m⊗m^{-1} in carrier coordinates
  LinearMap change(f, {d}, {hl.hopf.dim()});
  bool in_carrier = true, grouplike = true;
  std::string witness;
  for (std::size_t k = 0; k < d && in_carrier; ++k) {
    const LinearMap m = LinearMap::basis_vector(f, {d}, k);
    const LinearMap b = tensor_product(m, inverse(t.algebra(), m));
    const auto c = hl.carrier.coordinates(b.values());
    if (!c || c->size() != hl.hopf.dim()) {
      in_carrier = false, witness = t.labels()[k];
      break;
    }
    std::copy(c->begin(), c->end(), change.column(k).begin());
    const LinearMap bc = column_vector(change, k);
    if (!(compose(hl.hopf.comul(), bc) == tensor_product(bc, bc)) && grouplike)
      grouplike = false, witness = t.labels()[k];
  }
  r.add("m⊗m^{-1} ∈ H_l for every monomial m", in_carrier, in_carrier ? "" : witness);
  r.add("Δ(m⊗m^{-1}) = (m⊗m^{-1})⊗(m⊗m^{-1})", in_carrier && grouplike, grouplike ? "" : witness);

  HopfAlgebra fun = function_algebra(f, direct_product(cyclic_group(n), cyclic_group(n)));
  LinearMap iso(f, {hl.hopf.dim()}, {d});
  if (in_carrier && hl.hopf.dim() == d && rank(change) == d) {
    // x^i y^j at index i + n j goes to Σ_{a,c} q^{ia + jc} 1_(a,c)
    LinearMap fourier(f, {d}, {d});
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c)
          fourier.at(a * n + c, k) = q.pow(static_cast<long>(((k % n) * a + (k / n) * c) % n));
    iso = compose(fourier, invert_map(change));
    r.merge(verify_hopf_iso(hl.hopf, iso, fun), "H_l → functions on Z/n×Z/n: ");
  } else {
    r.add("group-likes form a basis of H_l", false);
  }
  return CyclicSideIso{std::move(hl), std::move(iso), std::move(fun), std::move(r)};
}

std::string to_string(GalleryKind k) {
  switch (k) {
    case GalleryKind::Hopf: return "hopf";
    case GalleryKind::Torsor: return "torsor";
    case GalleryKind::Twist: return "twist";
  }
  return "?";
}

const std::vector<GalleryEntry>& gallery_entries() {
  static const std::vector<GalleryEntry> entries{
      {"trivial-z2", GalleryKind::Torsor, "trivial torsor of Q[Z/2]"},
      {"trivial-z3", GalleryKind::Torsor, "trivial torsor of Q[Z/3]"},
      {"trivial-s3", GalleryKind::Torsor, "trivial torsor of Q[S3]"},
      {"quadratic-q-2", GalleryKind::Torsor, "Q[X]/(X²-2), μ(x) = x⊗x^{-1}⊗x"},
      {"artin-schreier-f4", GalleryKind::Torsor, "F2[X]/(X²+X+1), additive μ"},
      {"galois-sqrt2", GalleryKind::Torsor, "Galois torsor of Q(√2)/Q"},
      {"galois-f4", GalleryKind::Torsor, "Galois torsor of F4/F2 under Frobenius"},
      {"quaternion", GalleryKind::Torsor, "cyclic algebra over Q, n = 2, q = α = β = -1"},
      {"cyclic-f7-3", GalleryKind::Torsor, "cyclic algebra over F7, n = 3, q = 2, α = β = 1"},
      {"group-z2", GalleryKind::Hopf, "Q[Z/2]"},
      {"group-z3", GalleryKind::Hopf, "Q[Z/3]"},
      {"group-s3", GalleryKind::Hopf, "Q[S3]"},
      {"function-z2", GalleryKind::Hopf, "functions on Z/2 over Q"},
      {"function-z2xz2-f5", GalleryKind::Hopf, "functions on Z/2×Z/2 over F5"},
      {"sweedler", GalleryKind::Hopf, "Sweedler's 4-dimensional Hopf algebra over Q"},
      {"twist-z2-bichar", GalleryKind::Twist, "F = Σ β(g,h) 1_g⊗1_h on functions on Z/2, β(1,1) = -1"},
      {"twist-z2xz2-bichar-f5", GalleryKind::Twist,
       "F = Σ β 1_g⊗1_h on functions on Z/2×Z/2 over F5, β((a,b),(c,d)) = (-1)^{ad}"},
  };
  return entries;
}

namespace {

HopfAlgebra sweedler(FieldSpec f) {
  // g^a x^b at index a + 2b: g² = 1, x² = 0, xg = -gx, Δx = x⊗1 + g⊗x, S(x) = -gx
  LinearMap mul(f, {4, 4}, {4});
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t v = 0; v < 4; ++v) {
      const std::size_t a = u & 1, b = u >> 1, c = v & 1, e = v >> 1;
      if (b + e < 2) mul.at((a + c) % 2 + 2 * (b + e), u * 4 + v) = Scalar(f, (b && c) ? -1 : 1);
    }
  Algebra alg(f, {"1", "g", "x", "gx"}, std::move(mul), LinearMap::basis_vector(f, {4}, 0));
  LinearMap comul(f, {4}, {4, 4}), counit(f, {4}, {}), s(f, {4}, {4});
  const Scalar one = Scalar::one(f);
  comul.at(0, 0) = one;
  comul.at(5, 1) = one;
  comul.at(8, 2) = one;
  comul.at(6, 2) = one;
  comul.at(13, 3) = one;
  comul.at(3, 3) = one;
  counit.at(0, 0) = one;
  counit.at(0, 1) = one;
  s.at(0, 0) = one;
  s.at(1, 1) = one;
  s.at(3, 2) = -one;
  s.at(2, 3) = one;
  return HopfAlgebra(std::move(alg), std::move(comul), std::move(counit), std::move(s));
}

HopfAlgebra checked(HopfAlgebra h, const std::string& name) {
  const Report r = verify_hopf(h);
  if (!r.ok()) reject(name, r);
  return h;
}

}  // namespace

GalleryObject build_gallery(std::string_view name) {
  const FieldSpec qq = FieldSpec::rationals(), f2 = FieldSpec::prime(2), f5 = FieldSpec::prime(5),
                  f7 = FieldSpec::prime(7);
  auto s = [](FieldSpec f, long v) { return Scalar(f, v); };
  if (name == "trivial-z2") return build_trivial_torsor(group_algebra(qq, cyclic_group(2)));
  if (name == "trivial-z3") return build_trivial_torsor(group_algebra(qq, cyclic_group(3)));
  if (name == "trivial-s3") return build_trivial_torsor(group_algebra(qq, symmetric_group_3()));
  if (name == "quadratic-q-2") return build_quadratic_torsor(qq, s(qq, 2), QuadraticVariant::Sqrt);
  if (name == "artin-schreier-f4")
    return build_quadratic_torsor(f2, s(f2, 1), QuadraticVariant::ArtinSchreier);
  if (name == "galois-sqrt2")
    return build_galois_torsor(qq, {s(qq, -2), s(qq, 0), s(qq, 1)},
                               {{s(qq, 0), s(qq, 1)}, {s(qq, 0), s(qq, -1)}});
  if (name == "galois-f4")
    return build_galois_torsor(f2, {s(f2, 1), s(f2, 1), s(f2, 1)},
                               {{s(f2, 0), s(f2, 1)}, {s(f2, 1), s(f2, 1)}});
  if (name == "quaternion") return build_cyclic_algebra_torsor(qq, 2, s(qq, -1), s(qq, -1), s(qq, -1));
  if (name == "cyclic-f7-3") return build_cyclic_algebra_torsor(f7, 3, s(f7, 2), s(f7, 1), s(f7, 1));
  if (name == "group-z2") return checked(group_algebra(qq, cyclic_group(2)), "group-z2");
  if (name == "group-z3") return checked(group_algebra(qq, cyclic_group(3)), "group-z3");
  if (name == "group-s3") return checked(group_algebra(qq, symmetric_group_3()), "group-s3");
  if (name == "function-z2") return checked(function_algebra(qq, cyclic_group(2)), "function-z2");
  if (name == "function-z2xz2-f5")
    return checked(function_algebra(f5, direct_product(cyclic_group(2), cyclic_group(2))),
                   "function-z2xz2-f5");
  if (name == "sweedler") return checked(sweedler(qq), "sweedler");
  if (name == "twist-z2-bichar" || name == "twist-z2xz2-bichar-f5") {
    const bool small = name == "twist-z2-bichar";
    const HopfAlgebra h = small ? function_algebra(qq, cyclic_group(2))
                                : function_algebra(f5, direct_product(cyclic_group(2), cyclic_group(2)));
    const LinearMap f = small ? bicharacter(h, [](std::size_t x, std::size_t y) { return x && y ? -1L : 1L; })
                              : bicharacter(h, [](std::size_t x, std::size_t y) {
                                  return ((x >> 1) & y & 1) ? -1L : 1L;
                                });
    TwistData t = make_twist(h, f);
    const Report r = verify_twist(t);
    if (!r.ok()) reject(std::string(name), r);
    return t;
  }
  throw Error(Errc::UnknownRecipe, "no gallery entry named \"" + std::string(name) + "\"");
}

namespace {

template <class T>
T expect(GalleryObject o, std::string_view name, const char* kind) {
  if (auto* v = std::get_if<T>(&o)) return std::move(*v);
  throw Error(Errc::UnknownRecipe, "\"" + std::string(name) + "\" is not a " + kind);
}

}  // namespace

Torsor gallery_torsor(std::string_view name) { return expect<Torsor>(build_recipe(name), name, "torsor"); }
HopfAlgebra gallery_hopf(std::string_view name) {
  return expect<HopfAlgebra>(build_gallery(name), name, "Hopf algebra");
}
TwistData gallery_twist(std::string_view name) {
  return expect<TwistData>(build_gallery(name), name, "twist");
}

GalleryObject build_recipe(std::string_view recipe) {
  const auto parts = split(recipe, ':');
  if (parts[0] == "quadratic") {
    if (parts.size() != 3) throw Error(Errc::UnknownRecipe, "expected quadratic:<field>:<d>");
    const FieldSpec f = FieldSpec::parse(parts[1]);
    const auto variant = f.characteristic() == 2 ? QuadraticVariant::ArtinSchreier : QuadraticVariant::Sqrt;
    return build_quadratic_torsor(f, Scalar::parse(f, parts[2]), variant);
  }
  if (parts[0] == "cyclic") {
    if (parts.size() != 6) throw Error(Errc::UnknownRecipe, "expected cyclic:<field>:<n>:<q>:<α>:<β>");
    const FieldSpec f = FieldSpec::parse(parts[1]);
    return build_cyclic_algebra_torsor(f, parse_size(parts[2]), Scalar::parse(f, parts[3]),
                                       Scalar::parse(f, parts[4]), Scalar::parse(f, parts[5]));
  }
  return build_gallery(recipe);
}

}  // namespace torsorkit
