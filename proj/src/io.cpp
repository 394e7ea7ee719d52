#include "torsorkit/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "torsorkit/limits.hpp"

namespace torsorkit {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw Error(Errc::ParseError, (path.empty() ? std::string("document") : path) + ": " + what);
}

// ---- writing -------------------------------------------------------------

json field_json(const FieldSpec& f) {
  if (f.is_rationals()) return json{{"type", "Q"}};
  return json{{"type", "F_p"}, {"p", f.modulus()}};
}

json entries(const LinearMap& m) {
  json out = json::array();
  for (std::size_t s = 0; s < m.source_size(); ++s) {
    const auto col = m.column(s);
    const MultiIndex si = unflatten(s, m.source());
    for (std::size_t t = 0; t < col.size(); ++t) {
      if (col[t].is_zero()) continue;
      const MultiIndex ti = unflatten(t, m.target());
      out.push_back(json{json(si), json(ti), col[t].to_string()});
    }
  }
  return out;
}

json dense_rows(const LinearMap& m) {
  json rows = json::array();
  for (std::size_t t = 0; t < m.target_size(); ++t) {
    json row = json::array();
    for (std::size_t s = 0; s < m.source_size(); ++s) row.push_back(m.at(t, s).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json header(const std::string& kind, const FieldSpec& f, std::size_t dim,
            const std::vector<std::string>& basis) {
  return json{{"format_version", kFormatVersion}, {"kind", kind}, {"field", field_json(f)},
              {"dim", dim}, {"basis", basis}};
}

json write_presentation(const Presentation& p);

json write_presentation(const Algebra& a) {
  json j = header("algebra", a.field(), a.dim(), a.labels());
  j["tables"] = json{{"mul", entries(a.mul())}, {"unit", entries(a.unit())}};
  return j;
}

json write_presentation(const HopfAlgebra& h) {
  json j = header("hopf", h.field(), h.dim(), h.labels());
  j["tables"] = json{{"mul", entries(h.mul())},           {"unit", entries(h.unit())},
                     {"comul", entries(h.comul())},       {"counit", entries(h.counit())},
                     {"antipode", entries(h.antipode())}};
  return j;
}

json write_presentation(const Torsor& t) {
  json j = header("torsor", t.field(), t.dim(), t.labels());
  j["tables"] = json{{"mul", entries(t.algebra().mul())},
                     {"unit", entries(t.algebra().unit())},
                     {"mu", entries(t.mu())}};
  if (!t.theta_derived()) j["tables"]["theta"] = entries(t.theta());
  return j;
}

json write_presentation(const Cotorsor& c) {
  json j = header("cotorsor", c.field(), c.dim(), c.labels());
  j["tables"] = json{{"comul", entries(c.comul())},
                     {"counit", entries(c.counit())},
                     {"nu", entries(c.nu())},
                     {"theta", entries(c.theta())}};
  return j;
}

json write_presentation(const TwistDocument& t) {
  json j = header("twist", t.field, t.basis.size(), t.basis);
  j["tables"] = json{{"F", entries(t.f)}};
  if (t.host) j["host"] = write_presentation(*t.host);
  return j;
}

json write_presentation(const MatrixDocument& m) {
  json j{{"format_version", kFormatVersion},
         {"kind", "phi"},
         {"field", field_json(m.matrix.field())},
         {"dim", m.matrix.source_size()},
         {"target_dim", m.matrix.target_size()},
         {"source_fingerprint", m.source_fingerprint},
         {"target_fingerprint", m.target_fingerprint}};
  j["tables"] = json{{"matrix", dense_rows(m.matrix)}};
  return j;
}

json write_presentation(const DecoratedTorsor& d) {
  const SideHopf hl = compute_side_hopf(d.torsor, Side::Left);
  const SideHopf hr = compute_side_hopf(d.torsor, Side::Right);
  json j{{"format_version", kFormatVersion}, {"kind", "decorated"}};
  j["torsor"] = write_presentation(d.torsor);
  j["left_ref"] = write_presentation(d.left_ref);
  j["right_ref"] = write_presentation(d.right_ref);
  j["i_l"] = write_presentation(MatrixDocument{d.i_l, hl.carrier.fingerprint(), fingerprint(d.left_ref)});
  j["i_r"] = write_presentation(MatrixDocument{d.i_r, hr.carrier.fingerprint(), fingerprint(d.right_ref)});
  return j;
}

json write_presentation(const Presentation& p) {
  return std::visit([](const auto& v) { return write_presentation(v); }, p);
}

bool all_scalar(const json& j) {
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

// Objects one key per line; arrays of arrays one element per line; anything
// flat on a single line.
void emit(std::ostream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  if (j.is_object() && !j.empty() && !all_scalar(j)) {
    os << "{\n";
    std::size_t k = 0;
    for (const auto& [key, value] : j.items()) {
      os << pad << json(key).dump() << ": ";
      emit(os, value, indent + 2);
      os << (++k < j.size() ? ",\n" : "\n");
    }
    os << std::string(static_cast<std::size_t>(indent), ' ') << '}';
  } else if (j.is_array() && !j.empty() && !all_scalar(j)) {
    os << "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      os << pad;
      if (j[k].is_object()) emit(os, j[k], indent + 2);
      else os << j[k].dump();
      os << (k + 1 < j.size() ? ",\n" : "\n");
    }
    os << std::string(static_cast<std::size_t>(indent), ' ') << ']';
  } else {
    os << j.dump();
  }
}

// ---- reading -------------------------------------------------------------

const json& need(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) bad(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) bad(path, std::string("missing \"") + key + "\"");
  return *it;
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::size_t read_index(const json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected a non-negative integer");
  const auto v = j.get<long long>();
  if (v < 0) bad(path, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

FieldSpec read_field(const json& j, const std::string& path) {
  if (j.is_string()) return FieldSpec::parse(j.get<std::string>());
  const json& type = need(j, "type", path);
  if (!type.is_string()) bad(join(path, "type"), "expected a string");
  const std::string t = type.get<std::string>();
  if (t == "Q") return FieldSpec::rationals();
  if (t == "F_p") {
    const std::size_t p = read_index(need(j, "p", path), join(path, "p"));
    try {
      return FieldSpec::prime(p);
    } catch (const Error& e) {
      bad(join(path, "p"), e.what());
    }
  }
  bad(join(path, "type"), "unknown field type \"" + t + "\"");
}

Scalar read_scalar(const FieldSpec& f, const json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "coefficients must be strings");
  try {
    return Scalar::parse(f, j.get<std::string>());
  } catch (const Error& e) {
    bad(path, std::string("bad coefficient \"") + j.get<std::string>() + "\": " + e.what());
  }
}

void check_version(const json& j, const std::string& path) {
  const json& v = need(j, "format_version", path);
  if (!v.is_number_integer()) bad(join(path, "format_version"), "expected an integer");
  if (v.get<long long>() != kFormatVersion)
    throw Error(Errc::UnsupportedVersion, join(path, "format_version") + ": version " + v.dump() +
                                              " (supported: " + std::to_string(kFormatVersion) + ")");
}

struct Header {
  FieldSpec field;
  std::size_t dim;
  std::vector<std::string> basis;
};

Header read_header(const json& j, const std::string& path) {
  const FieldSpec f = read_field(need(j, "field", path), join(path, "field"));
  const std::size_t dim = read_index(need(j, "dim", path), join(path, "dim"));
  if (dim == 0) bad(join(path, "dim"), "dimension 0");
  if (dim > max_dim())
    throw Error(Errc::CapExceeded, join(path, "dim") + ": " + std::to_string(dim) + " above the cap");
  const json& b = need(j, "basis", path);
  if (!b.is_array() || b.size() != dim)
    bad(join(path, "basis"), "expected " + std::to_string(dim) + " labels");
  std::vector<std::string> basis;
  for (std::size_t k = 0; k < dim; ++k) {
    if (!b[k].is_string()) bad(join(path, "basis") + "[" + std::to_string(k) + "]", "expected a string");
    basis.push_back(b[k].get<std::string>());
  }
  return {f, dim, std::move(basis)};
}

void check_tables(const json& tables, std::initializer_list<const char*> allowed, const std::string& path) {
  if (!tables.is_object()) bad(path, "expected an object");
  for (const auto& [key, value] : tables.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) bad(join(path, key), "unexpected table for this kind");
  }
}

MultiIndex read_multi(const json& j, const Shape& shape, std::size_t dim, const std::string& path) {
  if (!j.is_array() || j.size() != shape.size())
    bad(path, "expected " + std::to_string(shape.size()) + " indices");
  MultiIndex out;
  for (std::size_t k = 0; k < shape.size(); ++k) {
    const std::size_t v = read_index(j[k], path + "[" + std::to_string(k) + "]");
    if (v >= shape[k])
      throw Error(Errc::IndexOutOfRange, path + "[" + std::to_string(k) + "]: index " + std::to_string(v) +
                                             " not below dim " + std::to_string(dim));
    out.push_back(v);
  }
  return out;
}

LinearMap read_table(const json& tables, const char* name, const FieldSpec& f, Shape source, Shape target,
                     std::size_t dim, const std::string& path) {
  const std::string tp = join(path, name);
  const json& list = need(tables, name, path);
  if (!list.is_array()) bad(tp, "expected a list of entries");
  LinearMap m(f, source, target);
  std::vector<bool> seen(m.source_size() * m.target_size(), false);
  for (std::size_t e = 0; e < list.size(); ++e) {
    const std::string ep = tp + "[" + std::to_string(e) + "]";
    const json& entry = list[e];
    if (!entry.is_array() || entry.size() != 3) bad(ep, "expected [source indices, target indices, coefficient]");
    const MultiIndex si = read_multi(entry[0], source, dim, ep + "[0]");
    const MultiIndex ti = read_multi(entry[1], target, dim, ep + "[1]");
    const std::size_t s = flatten(si, source), t = flatten(ti, target);
    if (seen[s * m.target_size() + t]) bad(ep, "duplicate entry");
    seen[s * m.target_size() + t] = true;
    m.at(t, s) = read_scalar(f, entry[2], ep + "[2]");
  }
  return m;
}

std::map<std::string, std::string> read_meta(const json& j, const std::string& path) {
  std::map<std::string, std::string> meta;
  const auto it = j.find("meta");
  if (it == j.end()) return meta;
  if (!it->is_object()) bad(join(path, "meta"), "expected an object of strings");
  for (const auto& [k, v] : it->items()) {
    if (!v.is_string()) bad(join(join(path, "meta"), k), "expected a string");
    meta[k] = v.get<std::string>();
  }
  return meta;
}

template <class F>
auto guarded(const std::string& path, F&& build) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.code() != Errc::ShapeError && e.code() != Errc::ModulusMismatch) throw;
    bad(path, e.what());
  }
}

Presentation read_presentation(const json& j, const std::string& path);

template <class T>
T nested(const json& j, const char* key, const std::string& path, const char* kind) {
  const std::string p = join(path, key);
  Presentation inner = read_presentation(need(j, key, path), p);
  if (auto* v = std::get_if<T>(&inner)) return std::move(*v);
  bad(p, std::string("expected a ") + kind);
}

MatrixDocument read_matrix(const json& j, const std::string& path) {
  const FieldSpec f = read_field(need(j, "field", path), join(path, "field"));
  const std::size_t src = read_index(need(j, "dim", path), join(path, "dim"));
  const std::size_t tgt = read_index(need(j, "target_dim", path), join(path, "target_dim"));
  const json& fs = need(j, "source_fingerprint", path);
  const json& ft = need(j, "target_fingerprint", path);
  if (!fs.is_string()) bad(join(path, "source_fingerprint"), "expected a string");
  if (!ft.is_string()) bad(join(path, "target_fingerprint"), "expected a string");
  const json& tables = need(j, "tables", path);
  check_tables(tables, {"matrix"}, join(path, "tables"));
  const std::string mp = join(path, "tables.matrix");
  const json& rows = need(tables, "matrix", join(path, "tables"));
  if (!rows.is_array() || rows.size() != tgt) bad(mp, "expected " + std::to_string(tgt) + " rows");
  LinearMap m(f, {src}, {tgt});
  for (std::size_t r = 0; r < tgt; ++r) {
    const std::string rp = mp + "[" + std::to_string(r) + "]";
    if (!rows[r].is_array() || rows[r].size() != src) bad(rp, "expected " + std::to_string(src) + " entries");
    for (std::size_t c = 0; c < src; ++c) m.at(r, c) = read_scalar(f, rows[r][c], rp + "[" + std::to_string(c) + "]");
  }
  return MatrixDocument{std::move(m), fs.get<std::string>(), ft.get<std::string>()};
}

Presentation read_presentation(const json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  check_version(j, path);
  const json& kind_j = need(j, "kind", path);
  if (!kind_j.is_string()) bad(join(path, "kind"), "expected a string");
  const std::string kind = kind_j.get<std::string>();
  if (kind == "phi") return read_matrix(j, path);
  if (kind == "decorated") {
    Torsor t = nested<Torsor>(j, "torsor", path, "torsor");
    HopfAlgebra l = nested<HopfAlgebra>(j, "left_ref", path, "Hopf algebra");
    HopfAlgebra r = nested<HopfAlgebra>(j, "right_ref", path, "Hopf algebra");
    MatrixDocument il = nested<MatrixDocument>(j, "i_l", path, "matrix");
    MatrixDocument ir = nested<MatrixDocument>(j, "i_r", path, "matrix");
    if (t.verified()) {
      if (il.source_fingerprint != compute_side_hopf(t, Side::Left).carrier.fingerprint() ||
          il.target_fingerprint != fingerprint(l))
        bad(join(path, "i_l"), "fingerprints do not match the torsor and reference (basis drift)");
      if (ir.source_fingerprint != compute_side_hopf(t, Side::Right).carrier.fingerprint() ||
          ir.target_fingerprint != fingerprint(r))
        bad(join(path, "i_r"), "fingerprints do not match the torsor and reference (basis drift)");
    }
    return DecoratedTorsor{std::move(t), std::move(l), std::move(r), std::move(il.matrix), std::move(ir.matrix)};
  }

  const Header h = read_header(j, path);
  const std::size_t n = h.dim;
  const FieldSpec& f = h.field;
  const std::string tp = join(path, "tables");
  const json& tables = need(j, "tables", path);
  auto table = [&](const char* name, Shape s, Shape t) { return read_table(tables, name, f, s, t, n, tp); };
  auto algebra = [&] {
    return guarded(path, [&] { return Algebra(f, h.basis, table("mul", {n, n}, {n}), table("unit", {}, {n})); });
  };
  if (kind == "algebra") {
    check_tables(tables, {"mul", "unit"}, tp);
    return algebra();
  }
  if (kind == "hopf") {
    check_tables(tables, {"mul", "unit", "comul", "counit", "antipode"}, tp);
    Algebra a = algebra();
    return guarded(path, [&] {
      return HopfAlgebra(std::move(a), table("comul", {n}, {n, n}), table("counit", {n}, {}),
                         table("antipode", {n}, {n}));
    });
  }
  if (kind == "torsor") {
    check_tables(tables, {"mul", "unit", "mu", "theta"}, tp);
    Algebra a = algebra();
    std::optional<LinearMap> theta;
    if (tables.contains("theta")) theta = table("theta", {n}, {n});
    return guarded(path, [&] { return Torsor(std::move(a), table("mu", {n}, {n, n, n}), std::move(theta)); });
  }
  if (kind == "cotorsor") {
    check_tables(tables, {"comul", "counit", "nu", "theta"}, tp);
    return guarded(path, [&] {
      return Cotorsor(f, h.basis, table("comul", {n}, {n, n}), table("counit", {n}, {}),
                      table("nu", {n, n, n}, {n}), table("theta", {n}, {n}));
    });
  }
  if (kind == "twist") {
    check_tables(tables, {"F"}, tp);
    TwistDocument t{f, h.basis, table("F", {}, {n, n}), std::nullopt};
    if (j.contains("host")) t.host = nested<HopfAlgebra>(j, "host", path, "Hopf algebra");
    return t;
  }
  bad(join(path, "kind"), "unknown kind \"" + kind + "\"");
}

std::string fnv(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

}  // namespace

std::string kind_name(const Presentation& p) {
  static const char* names[] = {"algebra", "hopf", "torsor", "cotorsor", "twist", "phi", "decorated"};
  return names[p.index()];
}

std::string serialize(const Document& doc) {
  json j = write_presentation(doc.object);
  if (!doc.meta.empty()) {
    json meta = json::object();
    for (const auto& [k, v] : doc.meta) meta[k] = v;
    j["meta"] = std::move(meta);
  }
  std::ostringstream os;
  emit(os, j, 0);
  os << '\n';
  return os.str();
}

Document parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // byte offset to line and column
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') ++line, col = 1;
      else ++col;
    }
    throw Error(Errc::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) +
                                      ": malformed JSON");
  }
  Document d{read_presentation(j, ""), {}};
  d.meta = read_meta(j, "");
  return d;
}

std::string fingerprint(const Presentation& p) { return fnv(serialize(Document{p, {}})); }

Document load(const std::string& source) {
  constexpr std::string_view prefix = "registry:";
  if (source.starts_with(prefix)) {
    const std::string name = source.substr(prefix.size());
    GalleryObject o = build_gallery(name);
    std::map<std::string, std::string> meta{{"source", source}};
    if (auto* t = std::get_if<TwistData>(&o)) return Document{twist_document(*t, true), meta};
    if (auto* h = std::get_if<HopfAlgebra>(&o)) return Document{std::move(*h), meta};
    return Document{std::get<Torsor>(std::move(o)), meta};
  }
  std::ifstream in(source, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, source + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), source + ": " + std::string(e.what()).substr(std::string(errc_name(e.code())).size() + 2));
  }
}

void save(const std::string& path, const Document& doc) {
  const std::string text = serialize(doc);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, path + ": cannot write file");
  out << text;
}

TwistData resolve_twist(const TwistDocument& doc, const HopfAlgebra* host) {
  const HopfAlgebra* h = doc.host ? &*doc.host : host;
  if (!h) throw Error(Errc::ParseError, "twist: no host Hopf algebra embedded or supplied");
  if (h->dim() != doc.basis.size() || !(h->field() == doc.field))
    throw Error(Errc::DimensionMismatch, "twist and host Hopf algebra disagree on field or dimension");
  return make_twist(*h, doc.f);
}

TwistDocument twist_document(const TwistData& t, bool embed_host) {
  TwistDocument d{t.host.field(), t.host.labels(), t.f, std::nullopt};
  if (embed_host) d.host = t.host;
  return d;
}

GaloisBuild build_galois_from_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error&) {
    throw Error(Errc::ParseError, "galois recipe: malformed JSON");
  }
  const FieldSpec f = read_field(need(j, "field", ""), "field");
  auto poly = [&](const json& list, const std::string& path) {
    if (!list.is_array()) bad(path, "expected a list of coefficients");
    Polynomial p;
    for (std::size_t k = 0; k < list.size(); ++k)
      p.push_back(read_scalar(f, list[k], path + "[" + std::to_string(k) + "]"));
    return p;
  };
  const Polynomial p = poly(need(j, "polynomial", ""), "polynomial");
  const json& action = need(j, "action", "");
  if (!action.is_array()) bad("action", "expected a list of polynomials");
  std::vector<Polynomial> sigma;
  for (std::size_t k = 0; k < action.size(); ++k) sigma.push_back(poly(action[k], "action[" + std::to_string(k) + "]"));
  return build_galois(f, p, sigma);
}

}  // namespace torsorkit
