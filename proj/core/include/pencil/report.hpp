#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pencil/gf.hpp"
#include "pencil/poly.hpp"

namespace pencil {

/// Exact nonnegative count.
using BigCount = mpz_class;

enum class Source { ClosedForm, Enumerated };

std::string_view to_string(Source source) noexcept;

/// What a census counts. Two reports are comparable iff their params are
/// equal.
struct ReportParams {
  /// "pencil", "pair", "fiber", "subspace", "given-subspace" or "nilext".
  std::string census;
  /// Field spec, "p" or "p^m".
  std::string field;
  unsigned n = 0;
  unsigned k = 0;
  /// Fixed subspace for "subspace" censuses, as JSON rows.
  std::optional<std::string> subspace;

  friend bool operator==(const ReportParams&, const ReportParams&) = default;
};

/// Tally keyed by an invariant-factor tuple, a polynomial or an integer
/// parameter. Keys are kept sorted so serialization is deterministic.
struct CensusReport {
  ReportParams params;
  Source source = Source::ClosedForm;
  std::map<std::string, BigCount> entries;

  BigCount total() const;
};

/// Pretty-printed JSON with counts as decimal strings. Byte-identical for
/// equal reports.
std::string to_json(const CensusReport& report);
/// Throws ParseError on malformed input.
CensusReport report_from_json(std::string_view text);
/// "key,count" lines under a header row.
std::string to_csv(const CensusReport& report);
/// Aligned two-column text.
std::string to_table(const CensusReport& report);

/// {"field":"p^m","coeffs":[c0,c1,...]}
std::string poly_to_json(const Field& field, const Poly& poly);
struct FieldPoly {
  Field field;
  Poly poly;
};
FieldPoly poly_from_json(std::string_view text);

/// Matrix as a JSON array of rows of canonical integers, e.g. [[1,0],[0,1]].
std::string matrix_to_json(const Matrix& m);
/// Throws ParseError on ragged or non-integer input and OutOfRange on
/// entries outside the field. An empty array gives a 0 x `cols_if_empty`
/// matrix.
Matrix matrix_from_json(const Field& field, std::string_view text, std::size_t cols_if_empty = 0);

}  // namespace pencil
