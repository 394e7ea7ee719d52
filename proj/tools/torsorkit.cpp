// torsorkit command-line front end. Exit codes: 0 all checks pass, 1 an
// axiom or certification failed (the report is still printed), 2 bad input.

#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "torsorkit/io.hpp"

using namespace torsorkit;

namespace {

int exit_for(Errc code) {
  switch (code) {
    case Errc::VerificationFailure:
    case Errc::NotVerified:
    case Errc::TwistInvalid:
    case Errc::HopfInvalid:
    case Errc::PhiNotIso:
    case Errc::NotEquivariant:
    case Errc::WitnessRejected:
    case Errc::MembershipFailure:
    case Errc::CorestrictionFailure:
      return 1;
    default:
      return 2;
  }
}

int print(const Report& r) {
  std::cout << r.to_text();
  return r.ok() ? 0 : 1;
}

void print_subject(const std::string& source, const Presentation& p) {
  std::cout << "file: " << source << " (" << kind_name(p) << ", fingerprint " << fingerprint(p) << ")\n";
}

template <class T>
T load_as(const std::string& source, const char* kind) {
  Document d = load(source);
  if (auto* v = std::get_if<T>(&d.object)) return std::move(*v);
  throw Error(Errc::ParseError, source + ": expected a " + kind + " presentation, got " + kind_name(d.object));
}

void write(const std::string& path, Presentation p, std::map<std::string, std::string> meta = {}) {
  if (path.empty()) return;
  save(path, Document{std::move(p), std::move(meta)});
  std::cout << "wrote " << path << '\n';
}

Side parse_side(const std::string& s) {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  throw Error(Errc::ParseError, "--side must be left or right");
}

HopfAlgebra side_hopf_of(const Torsor& t, Side side, SideHopf* out = nullptr) {
  SideHopf sh = compute_side_hopf(t, side);
  HopfAlgebra h = sh.hopf;
  if (out) *out = std::move(sh);
  return h;
}

// verify <kind> FILE -------------------------------------------------------

int verify_twist_doc(const TwistDocument& doc, const std::string& hopf_source) {
  std::optional<HopfAlgebra> host = doc.host;
  if (!host) {
    if (hopf_source.empty()) throw Error(Errc::ParseError, "twist has no embedded host; pass --hopf HOPF");
    host = load_as<HopfAlgebra>(hopf_source, "hopf");
  }
  if (host->dim() != doc.basis.size() || !(host->field() == doc.field))
    throw Error(Errc::DimensionMismatch, "twist and host Hopf algebra disagree on field or dimension");
  try {
    return print(verify_twist(make_twist(*host, doc.f)));
  } catch (const Error& e) {
    if (e.code() != Errc::NotInvertible) throw;
    return print(verify_twist(*host, doc.f));
  }
}

Report report_for(const Presentation& p) {
  if (auto* a = std::get_if<Algebra>(&p)) return verify_algebra(*a);
  if (auto* h = std::get_if<HopfAlgebra>(&p)) return verify_hopf(*h);
  if (auto* t = std::get_if<Torsor>(&p)) return t->report();
  if (auto* c = std::get_if<Cotorsor>(&p)) return verify_cotorsor(*c);
  if (auto* d = std::get_if<DecoratedTorsor>(&p)) return verify_decorated(*d);
  throw Error(Errc::ParseError, "nothing to verify for a " + kind_name(p) + " presentation");
}

int cmd_verify(const std::string& kind, const std::string& file, const std::string& hopf) {
  Document d = load(file);
  if (kind_name(d.object) != kind)
    throw Error(Errc::ParseError, file + ": expected a " + kind + " presentation, got " + kind_name(d.object));
  print_subject(file, d.object);
  if (auto* h = std::get_if<HopfAlgebra>(&d.object)) std::cout << "dim " << h->dim() << '\n';
  if (auto* t = std::get_if<TwistDocument>(&d.object)) return verify_twist_doc(*t, hopf);
  return print(report_for(d.object));
}

// torsor commands -----------------------------------------------------------

Torsor verified_torsor(const std::string& source) {
  Torsor t = load_as<Torsor>(source, "torsor");
  if (!t.verified()) {
    std::cout << t.report().to_text();
    throw Error(Errc::NotVerified, source + ": torsor axioms fail");
  }
  return t;
}

int cmd_hopf_side(const std::string& side_s, const std::string& file, const std::string& out) {
  const Side side = parse_side(side_s);
  const Torsor t = verified_torsor(file);
  const SideHopf sh = compute_side_hopf(t, side);
  std::cout << (side == Side::Left ? "H_l(T)" : "H_r(T)") << ": dim " << sh.hopf.dim() << '\n';
  const int code = print(verify_hopf(sh.hopf));
  write(out, sh.hopf,
        {{"side", to_string(side)}, {"carrier_fingerprint", sh.carrier.fingerprint()},
         {"torsor_fingerprint", fingerprint(t)}});
  return code;
}

int cmd_coactions(const std::string& file) {
  const Torsor t = verified_torsor(file);
  return print(verify_coactions(t, compute_side_hopf(t, Side::Left), compute_side_hopf(t, Side::Right)));
}

int cmd_can(const std::string& side_s, const std::string& file) {
  const Side side = parse_side(side_s);
  const Torsor t = verified_torsor(file);
  const GaloisResult g = galois_can(t, compute_side_hopf(t, side));
  std::cout << "dim T = " << g.dim_t << ", dim H = " << g.dim_hopf << ", coinvariants " << g.coinvariant_dim
            << '\n';
  return print(g.report);
}

void check_fingerprint(const std::string& what, const std::string& have, const std::string& want) {
  if (!have.empty() && have != want)
    throw Error(Errc::ParseError, what + " fingerprint " + have + " does not match " + want + " (basis drift)");
}

int cmd_phi(const std::string& f1, const std::string& f2, const std::string& via, const std::string& out) {
  const Torsor t1 = verified_torsor(f1), t2 = verified_torsor(f2);
  const SideHopf hr = compute_side_hopf(t1, Side::Right), hl = compute_side_hopf(t2, Side::Left);
  LinearMap phi = [&] {
    if (via == "opposite") {
      if (!(t2.algebra() == opposite_algebra(t1.algebra())) || !(t2.mu() == mu_op(t1)))
        throw Error(Errc::ParseError, "--via opposite needs T2 to be the opposite of T1");
      return opp_side_iso(t1).right_to_left;
    }
    if (via == "identity") {
      const std::size_t n = t1.dim();
      return carrier_map(LinearMap::identity(t1.field(), {n, n}), hr, hl);
    }
    throw Error(Errc::ParseError, "--via must be identity or opposite");
  }();
  std::cout << "Φ : H_r(T1) -> H_l(T2), " << phi.source_size() << "x" << phi.target_size() << '\n';
  write(out, MatrixDocument{phi, hr.carrier.fingerprint(), hl.carrier.fingerprint()}, {{"via", via}});
  return 0;
}

int cmd_compose(const std::string& f1, const std::string& f2, const std::string& phi_file,
                const std::string& out) {
  const Torsor t1 = verified_torsor(f1), t2 = verified_torsor(f2);
  const MatrixDocument phi = load_as<MatrixDocument>(phi_file, "phi");
  check_fingerprint("Φ source", phi.source_fingerprint, compute_side_hopf(t1, Side::Right).carrier.fingerprint());
  check_fingerprint("Φ target", phi.target_fingerprint, compute_side_hopf(t2, Side::Left).carrier.fingerprint());
  const Composition c = compose_torsors(t1, t2, phi.matrix);
  Report r = c.report;
  r.merge(induced_side_isos(t1, t2, phi.matrix, c).report, "side isos: ");
  std::cout << "T1 ⊗_Φ T2: dim " << c.torsor.dim() << '\n';
  const int code = print(r);
  write(out, c.torsor, {{"carrier_fingerprint", c.carrier.fingerprint()}});
  return code;
}

// Tor(H) --------------------------------------------------------------------

int finish_decorated(const DecoratedTorsor& d, const std::string& out, Report extra = Report()) {
  Report r = verify_decorated(d);
  if (!extra.checks().empty() || !extra.notes().empty()) {
    extra.merge(r);
    r = std::move(extra);
  }
  const int code = print(r);
  write(out, d);
  return code;
}

int cmd_tor_unit(const std::string& hopf, const std::string& out) {
  return finish_decorated(tor_unit(load_as<HopfAlgebra>(hopf, "hopf")), out);
}

int cmd_tor_decorate(const std::string& file, const std::string& out) {
  const Torsor t = verified_torsor(file);
  const HopfAlgebra hl = side_hopf_of(t, Side::Left), hr = side_hopf_of(t, Side::Right);
  return finish_decorated(DecoratedTorsor{t, hl, hr, LinearMap::identity(t.field(), {hl.dim()}),
                                          LinearMap::identity(t.field(), {hr.dim()})},
                          out);
}

int cmd_tor_inverse(const std::string& file, const std::string& out) {
  return finish_decorated(tor_inverse(load_as<DecoratedTorsor>(file, "decorated")), out);
}

int cmd_tor_multiply(const std::string& a, const std::string& b, const std::string& out) {
  const TorProduct p = tor_multiply(load_as<DecoratedTorsor>(a, "decorated"), load_as<DecoratedTorsor>(b, "decorated"));
  return finish_decorated(p.result, out, p.report);
}

int cmd_tor_equiv(const std::string& witness, const std::string& a, const std::string& b) {
  const DecoratedTorsor d1 = load_as<DecoratedTorsor>(a, "decorated"), d2 = load_as<DecoratedTorsor>(b, "decorated");
  const MatrixDocument f = witness.empty()
                               ? MatrixDocument{LinearMap::identity(d1.torsor.field(), {d1.torsor.dim()}), "", ""}
                               : load_as<MatrixDocument>(witness, "phi");
  check_fingerprint("witness source", f.source_fingerprint, fingerprint(d1.torsor));
  check_fingerprint("witness target", f.target_fingerprint, fingerprint(d2.torsor));
  return print(equivalence_report(f.matrix, d1, d2));
}

// twists and cotorsors -----------------------------------------------------

// The twist with its host; a singular F yields the failing report instead.
std::optional<TwistData> load_twist(const std::vector<std::string>& args) {
  if (args.empty() || args.size() > 2) throw Error(Errc::ParseError, "expected HOPF TWIST or a twist with an embedded host");
  const TwistDocument doc = load_as<TwistDocument>(args.back(), "twist");
  std::optional<HopfAlgebra> host = doc.host;
  if (args.size() == 2) host = load_as<HopfAlgebra>(args[0], "hopf");
  if (!host) throw Error(Errc::ParseError, args.back() + ": no embedded host; pass HOPF TWIST");
  try {
    return resolve_twist(TwistDocument{doc.field, doc.basis, doc.f, host});
  } catch (const Error& e) {
    if (e.code() != Errc::NotInvertible) throw;
    print(verify_twist(*host, doc.f));
    return std::nullopt;
  }
}

int cmd_twist(const std::vector<std::string>& args, const std::string& out) {
  const auto loaded = load_twist(args);
  if (!loaded) return 1;
  const TwistData& t = *loaded;
  Report r = verify_twist(t);
  if (!r.ok()) return print(r);
  const HopfAlgebra hf = twist_hopf(t);
  r.merge(verify_hopf(hf), "H_F: ");
  const int code = print(r);
  write(out, hf, {{"twist_fingerprint", fingerprint(twist_document(t, false))}});
  return code;
}

int cmd_parmentier(const std::vector<std::string>& args, const std::string& out, const std::string& dual_out) {
  const auto t = load_twist(args);
  if (!t) return 1;
  const ParmentierResult p = parmentier_cotorsor(*t);
  const int code = print(p.report);
  write(out, p.cotorsor);
  write(dual_out, p.dual);
  return code;
}

int cmd_dualize(const std::string& file, const std::string& out) {
  Document d = load(file);
  if (auto* t = std::get_if<Torsor>(&d.object)) {
    const Cotorsor c = dualize(*t);
    const int code = print(verify_cotorsor(c));
    write(out, c);
    return code;
  }
  if (auto* c = std::get_if<Cotorsor>(&d.object)) {
    const Torsor t = dualize(*c);
    const int code = print(t.report());
    write(out, t);
    return code;
  }
  throw Error(Errc::ParseError, file + ": dualize takes a torsor or a cotorsor");
}

// gallery and report -------------------------------------------------------

int cmd_gallery_list() {
  for (const auto& e : gallery_entries())
    std::cout << std::left << std::setw(24) << e.name << std::setw(8) << to_string(e.kind) << e.description << '\n';
  std::cout << "recipes: trivial:<hopf-file>, quadratic:<field>:<d>, galois:<file>, "
               "cyclic:<field>:<n>:<q>:<a>:<b>\n";
  return 0;
}

int cmd_gallery_build(const std::string& name, const std::string& out) {
  std::map<std::string, std::string> meta{{"source", name}};
  Presentation p = [&]() -> Presentation {
    if (name.starts_with("trivial:")) return build_trivial_torsor(load_as<HopfAlgebra>(name.substr(8), "hopf"));
    if (name.starts_with("galois:")) {
      std::ifstream in(name.substr(7));
      if (!in) throw Error(Errc::ParseError, name.substr(7) + ": cannot open file");
      std::ostringstream buf;
      buf << in.rdbuf();
      return build_galois_from_text(buf.str()).torsor;
    }
    GalleryObject o = build_recipe(name);
    if (auto* t = std::get_if<TwistData>(&o)) return twist_document(*t, true);
    if (auto* h = std::get_if<HopfAlgebra>(&o)) return std::move(*h);
    return std::get<Torsor>(std::move(o));
  }();
  std::cout << name << ": " << kind_name(p) << ", fingerprint " << fingerprint(p) << '\n';
  int code = 0;
  if (!std::holds_alternative<TwistDocument>(p)) code = print(report_for(p));
  write(out, std::move(p), std::move(meta));
  return code;
}

int cmd_report(const std::string& file) {
  Document d = load(file);
  print_subject(file, d.object);
  for (const auto& [k, v] : d.meta) std::cout << "meta " << k << ": " << v << '\n';
  if (auto* m = std::get_if<MatrixDocument>(&d.object)) {
    std::cout << "matrix " << m->matrix.target_size() << "x" << m->matrix.source_size() << ", source "
              << m->source_fingerprint << ", target " << m->target_fingerprint << '\n';
    return 0;
  }
  if (auto* tw = std::get_if<TwistDocument>(&d.object)) return verify_twist_doc(*tw, "");
  if (auto* a = std::get_if<Algebra>(&d.object)) {
    Report r = verify_algebra(*a);
    r.note(std::string("commutative: ") + (is_commutative(*a) ? "yes" : "no"));
    const CharacterSearch cs = commutator_obstruction(*a);
    if (cs.status == CharacterSearch::Status::None) r.note("characters: none (" + cs.reason + ")");
    return print(r);
  }
  auto* t = std::get_if<Torsor>(&d.object);
  if (!t || !t->verified()) return print(report_for(d.object));
  Report r = t->report();
  const SideHopf hl = compute_side_hopf(*t, Side::Left), hr = compute_side_hopf(*t, Side::Right);
  r.note("dim H_l(T) = " + std::to_string(hl.hopf.dim()) + ", dim H_r(T) = " + std::to_string(hr.hopf.dim()));
  r.merge(verify_coactions(*t, hl, hr), "coactions: ");
  r.merge(galois_can(*t, hl).report, "left Galois map: ");
  r.merge(galois_can(*t, hr).report, "right Galois map: ");
  return print(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of torsors, Hopf algebras and twists"};
  app.require_subcommand(1);
  std::function<int()> run;

  std::string kind, file, file2, out, side = "left", hopf, phi, via = "identity", dual_out;
  std::vector<std::string> args;

  auto* verify = app.add_subcommand("verify", "Verify a presentation file");
  verify->add_option("kind", kind, "algebra|hopf|torsor|cotorsor|twist|decorated")->required();
  verify->add_option("file", file, "Presentation file or registry:<name>")->required();
  verify->add_option("--hopf", hopf, "Host Hopf algebra for a twist without one");
  verify->callback([&] { run = [&] { return cmd_verify(kind, file, hopf); }; });

  auto* hs = app.add_subcommand("hopf-side", "Left or right Hopf algebra of a torsor");
  hs->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  hs->add_option("torsor", file)->required();
  hs->add_option("-o,--output", out);
  hs->callback([&] { run = [&] { return cmd_hopf_side(side, file, out); }; });

  auto* co = app.add_subcommand("coactions", "Verify both coactions of a torsor");
  co->add_option("torsor", file)->required();
  co->callback([&] { run = [&] { return cmd_coactions(file); }; });

  auto* can = app.add_subcommand("can", "Galois map of a torsor");
  can->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  can->add_option("torsor", file)->required();
  can->callback([&] { run = [&] { return cmd_can(side, file); }; });

  auto* ph = app.add_subcommand("phi", "Write Φ : H_r(T1) -> H_l(T2) for compose");
  ph->add_option("t1", file)->required();
  ph->add_option("t2", file2)->required();
  ph->add_option("--via", via, "identity (restrict Id of T⊗T) or opposite (Id⊗θ)")
      ->check(CLI::IsMember({"identity", "opposite"}));
  ph->add_option("-o,--output", out);
  ph->callback([&] { run = [&] { return cmd_phi(file, file2, via, out); }; });

  auto* cp = app.add_subcommand("compose", "T1 ⊗_Φ T2");
  cp->add_option("t1", file)->required();
  cp->add_option("t2", file2)->required();
  cp->add_option("--phi", phi)->required();
  cp->add_option("-o,--output", out);
  cp->callback([&] { run = [&] { return cmd_compose(file, file2, phi, out); }; });

  auto* tor = app.add_subcommand("tor", "Tor(H) operations on decorated torsors");
  tor->require_subcommand(1);
  auto* tu = tor->add_subcommand("unit", "Trivial torsor of HOPF");
  tu->add_option("hopf", file)->required();
  tu->add_option("-o,--output", out);
  tu->callback([&] { run = [&] { return cmd_tor_unit(file, out); }; });
  auto* td = tor->add_subcommand("decorate", "Decorate a torsor by its own side Hopf algebras");
  td->add_option("torsor", file)->required();
  td->add_option("-o,--output", out);
  td->callback([&] { run = [&] { return cmd_tor_decorate(file, out); }; });
  auto* ti = tor->add_subcommand("inverse", "Opposite torsor with swapped decorations");
  ti->add_option("decorated", file)->required();
  ti->add_option("-o,--output", out);
  ti->callback([&] { run = [&] { return cmd_tor_inverse(file, out); }; });
  auto* tm = tor->add_subcommand("multiply", "Product of two decorated torsors");
  tm->add_option("d1", file)->required();
  tm->add_option("d2", file2)->required();
  tm->add_option("-o,--output", out);
  tm->callback([&] { run = [&] { return cmd_tor_multiply(file, file2, out); }; });
  auto* te = tor->add_subcommand("equiv", "Check a witness f : T1 -> T2 of d1 ~ d2");
  te->add_option("d1", file)->required();
  te->add_option("d2", file2)->required();
  te->add_option("--witness", phi, "Matrix file of f; the identity when omitted");
  te->callback([&] { run = [&] { return cmd_tor_equiv(phi, file, file2); }; });

  auto* tw = app.add_subcommand("twist", "Verify a twist and write H_F");
  tw->add_option("files", args, "[HOPF] TWIST")->required()->expected(1, 2);
  tw->add_option("-o,--output", out);
  tw->callback([&] { run = [&] { return cmd_twist(args, out); }; });

  auto* pa = app.add_subcommand("parmentier", "Cotorsor of a Hopf algebra and a twist");
  pa->add_option("files", args, "[HOPF] TWIST")->required()->expected(1, 2);
  pa->add_option("-o,--output", out);
  pa->add_option("--dual", dual_out, "Also write the dual decorated torsor");
  pa->callback([&] { run = [&] { return cmd_parmentier(args, out, dual_out); }; });

  auto* du = app.add_subcommand("dualize", "Torsor <-> cotorsor by transposition");
  du->add_option("file", file)->required();
  du->add_option("-o,--output", out);
  du->callback([&] { run = [&] { return cmd_dualize(file, out); }; });

  auto* ga = app.add_subcommand("gallery", "Built-in examples");
  ga->require_subcommand(1);
  auto* gl = ga->add_subcommand("list", "List registry entries");
  gl->callback([&] { run = [&] { return cmd_gallery_list(); }; });
  auto* gb = ga->add_subcommand("build", "Build a registry entry or recipe");
  gb->add_option("name", file)->required();
  gb->add_option("-o,--output", out);
  gb->callback([&] { run = [&] { return cmd_gallery_build(file, out); }; });

  auto* rp = app.add_subcommand("report", "Full report for any presentation");
  rp->add_option("file", file)->required();
  rp->callback([&] { run = [&] { return cmd_report(file); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    const int code = run();
    std::cout.flush();
    return code;
  } catch (const Error& e) {
    std::cout.flush();
    std::cerr << "error: " << e.what() << '\n';
    return exit_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
