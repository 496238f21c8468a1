#pragma once

#include "multifan/fan.hpp"
#include "multifan/polytope.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace multifan::io {

/// A multi-fan file, optionally carrying support numbers. Labels are 1-based
/// on disk and 0-based in memory.
struct Document {
  MultiFan fan;
  std::optional<std::vector<Rat>> support;

  bool is_polytope() const { return support.has_value(); }
  /// Throws Error(parse_error) when the document has no support numbers.
  MultiPolytope polytope() const;
};

/// Parses the JSON document format. Malformed input throws
/// Error(parse_error); geometric problems are left to validate().
Document parse_document(std::string_view text);
Document load_document(const std::string& path);

/// Canonical text: rays in file order, cones sorted, rationals reduced.
std::string serialize(const MultiFan& fan);
std::string serialize(const MultiPolytope& p);
std::string serialize(const Document& doc);

const std::vector<std::string>& fixture_names();
/// Throws Error(parse_error) naming the available fixtures.
Document fixture(const std::string& name);

struct GridRow {
  Rat x;
  Rat y;
  std::int64_t dh;
};

/// DH over a rational grid of the given step inside the support box of a
/// complete 2-dimensional multi-polytope. With Shift::exact, points on a
/// hyperplane are skipped; otherwise they are evaluated against P_+ or P_-.
std::vector<GridRow> grid(const MultiPolytope& p, const Rat& step, Shift shift, const RatVector& v);
std::string grid_csv(const std::vector<GridRow>& rows);

} // namespace multifan::io
