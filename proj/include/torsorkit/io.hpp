#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "torsorkit/cotorsor.hpp"
#include "torsorkit/gallery.hpp"

namespace torsorkit {

inline constexpr int kFormatVersion = 1;

/// F ∈ H⊗H on the host's basis; the host may be embedded or supplied later.
struct TwistDocument {
  FieldSpec field;
  std::vector<std::string> basis;
  LinearMap f;
  std::optional<HopfAlgebra> host;
};

/// A matrix between carriers (Φ, i_l, i_r, equivalence witnesses), tagged with
/// fingerprints of its source and target so basis drift is caught.
struct MatrixDocument {
  LinearMap matrix;
  std::string source_fingerprint;
  std::string target_fingerprint;
};

using Presentation = std::variant<Algebra, HopfAlgebra, Torsor, Cotorsor, TwistDocument,
                                  MatrixDocument, DecoratedTorsor>;

struct Document {
  Presentation object;
  /// Free-form provenance strings, kept verbatim.
  std::map<std::string, std::string> meta;
};

/// "algebra", "hopf", "torsor", "cotorsor", "twist", "phi" or "decorated".
std::string kind_name(const Presentation& p);

/// Canonical text: fixed key order, one table entry per line.
std::string serialize(const Document& doc);
/// Throws ParseError (with line or field path), UnsupportedVersion or
/// IndexOutOfRange.
Document parse_document(std::string_view text);

/// Stable hex digest of the canonical text without meta.
std::string fingerprint(const Presentation& p);

/// Reads a file, or builds "registry:<name>" from the gallery.
Document load(const std::string& source);
void save(const std::string& path, const Document& doc);

/// Pairs a twist document with a host: the embedded one, else `host`.
/// Throws ParseError when neither is available and DimensionMismatch when
/// the bases disagree.
TwistData resolve_twist(const TwistDocument& doc, const HopfAlgebra* host = nullptr);
TwistDocument twist_document(const TwistData& t, bool embed_host);

/// Recipe file for build_galois: field, polynomial and action as coefficient
/// lists of strings, constant term first.
GaloisBuild build_galois_from_text(std::string_view text);

}  // namespace torsorkit
