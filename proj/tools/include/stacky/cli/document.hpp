#pragma once

// The JSON input document shared by every subcommand.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stacky/equivariant_model.hpp"
#include "stacky/motive.hpp"
#include "stacky/perm_groups.hpp"

namespace stacky::cli {

using Images = std::vector<std::vector<std::size_t>>;

struct GroupSpec {
  std::size_t degree = 1;
  Images generators;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

struct HSetSpec {
  std::size_t size = 0;
  Images generator_images;

  friend bool operator==(const HSetSpec&, const HSetSpec&) = default;
};

struct CellsSpec {
  std::vector<motive::Cell> cells;
  Images generator_images;

  friend bool operator==(const CellsSpec&, const CellsSpec&) = default;
};

struct GerbeSpec {
  /// monodromy[k][s]: image array of H's s-th generator under automorphism k.
  std::vector<Images> monodromy;
  motive::Motive base;
  std::string base_label = "X";

  friend bool operator==(const GerbeSpec&, const GerbeSpec&) = default;
};

struct CurveSpec {
  std::size_t genus = 0;
  std::vector<std::size_t> orders;

  friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
};

/// An equidegree map {0..f.size()-1} -> {0..target_size-1} with fibres of
/// size `degree`.
struct CoverSpec {
  std::vector<std::size_t> map;
  std::size_t target_size = 0;
  std::size_t degree = 1;

  friend bool operator==(const CoverSpec&, const CoverSpec&) = default;
};

struct InputDocument {
  std::size_t characteristic = 0;
  std::optional<GroupSpec> group;
  std::optional<HSetSpec> hset;
  std::optional<CellsSpec> cells;
  std::optional<GerbeSpec> gerbe;
  std::optional<CurveSpec> curve;
  /// Second factor for the Kunneth check.
  std::optional<GroupSpec> kunneth;
  std::optional<CoverSpec> cover;

  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

/// Throws ParseError on malformed JSON and ValidationError (naming the
/// offending field and index) on a well-formed document with bad content.
InputDocument parse_document(const std::string& text);
InputDocument parse_document(const nlohmann::json& j);

/// Canonical JSON form; parse_document(render_document(d)) == d.
nlohmann::json render_document(const InputDocument& d);

/// "1", "H1_<g>", "Cover(<label>,<d>)"; anything else is an opaque label.
motive::Atom parse_atom(const std::string& symbol);

groups::FiniteGroup build_group(const GroupSpec& g);
/// The model of the document; the point model of the group when the
/// document has none.
motive::EquivariantModel build_model(const InputDocument& d);

}  // namespace stacky::cli
