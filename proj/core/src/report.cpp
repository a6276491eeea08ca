#include "pencil/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "pencil/error.hpp"

namespace pencil {

using nlohmann::json;

std::string_view to_string(Source source) noexcept {
  return source == Source::ClosedForm ? "closed-form" : "enumerated";
}

BigCount CensusReport::total() const {
  BigCount sum = 0;
  for (const auto& [key, count] : entries) sum += count;
  return sum;
}

std::string to_json(const CensusReport& report) {
  json entries = json::object();
  for (const auto& [key, count] : report.entries) entries[key] = count.get_str();
  json doc = {
      {"census", report.params.census},
      {"field", report.params.field},
      {"n", report.params.n},
      {"k", report.params.k},
      {"source", std::string(to_string(report.source))},
      {"entries", std::move(entries)},
      {"total", report.total().get_str()},
  };
  if (report.params.subspace) doc["subspace"] = *report.params.subspace;
  return doc.dump(2) + "\n";
}

namespace {

[[noreturn]] void bad_json(const std::string& why) { throw Error(ErrorKind::ParseError, why); }

BigCount parse_count(const json& value) {
  if (!value.is_string()) bad_json("counts must be decimal strings");
  const auto& text = value.get_ref<const std::string&>();
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    bad_json("bad count '" + text + "'");
  }
  return BigCount(text);
}

}  // namespace

CensusReport report_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    bad_json(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) bad_json("report must be a JSON object");
  CensusReport report;
  try {
    report.params.census = doc.at("census").get<std::string>();
    report.params.field = doc.at("field").get<std::string>();
    report.params.n = doc.at("n").get<unsigned>();
    report.params.k = doc.at("k").get<unsigned>();
    if (doc.contains("subspace")) report.params.subspace = doc.at("subspace").get<std::string>();
    const auto source = doc.at("source").get<std::string>();
    if (source == "closed-form") {
      report.source = Source::ClosedForm;
    } else if (source == "enumerated") {
      report.source = Source::Enumerated;
    } else {
      bad_json("unknown source '" + source + "'");
    }
    for (const auto& [key, value] : doc.at("entries").items()) report.entries.emplace(key, parse_count(value));
  } catch (const json::exception& e) {
    bad_json(std::string("malformed report: ") + e.what());
  }
  if (doc.contains("total") && parse_count(doc.at("total")) != report.total()) {
    bad_json("total does not match the sum of entries");
  }
  return report;
}

std::string to_csv(const CensusReport& report) {
  std::ostringstream out;
  out << "key,count\n";
  for (const auto& [key, count] : report.entries) {
    // Keys never contain quotes; they may contain '+' and '|' but no commas.
    out << key << ',' << count.get_str() << '\n';
  }
  return out.str();
}

std::string to_table(const CensusReport& report) {
  std::size_t width = 5;
  for (const auto& [key, count] : report.entries) width = std::max(width, key.size());
  std::ostringstream out;
  out << "# " << report.params.census << " census over F_" << report.params.field << ", n=" << report.params.n
      << ", k=" << report.params.k;
  if (report.params.subspace) out << ", U=" << *report.params.subspace;
  out << " (" << to_string(report.source) << ")\n";
  for (const auto& [key, count] : report.entries) {
    out << key << std::string(width - key.size() + 2, ' ') << count.get_str() << '\n';
  }
  out << "total" << std::string(width - 5 + 2, ' ') << report.total().get_str() << '\n';
  return out.str();
}

std::string poly_to_json(const Field& field, const Poly& poly) {
  json coeffs = json::array();
  for (const auto c : poly.coeffs()) coeffs.push_back(c.value);
  return json{{"field", field.spec()}, {"coeffs", std::move(coeffs)}}.dump();
}

FieldPoly poly_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    Field field = Field::parse(doc.at("field").get<std::string>());
    std::vector<Elem> coeffs;
    for (const auto& c : doc.at("coeffs")) coeffs.push_back(field.elem(c.get<std::uint64_t>()));
    return {field, Poly(std::move(coeffs))};
  } catch (const json::exception& e) {
    bad_json(std::string("malformed polynomial: ") + e.what());
  }
}

std::string matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (const auto e : m.row(r)) row.push_back(e.value);
    rows.push_back(std::move(row));
  }
  return rows.dump();
}

Matrix matrix_from_json(const Field& field, std::string_view text, std::size_t cols_if_empty) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    bad_json(std::string("invalid matrix JSON: ") + e.what());
  }
  if (!doc.is_array()) bad_json("matrix must be an array of rows");
  if (doc.empty()) return Matrix(0, cols_if_empty);
  const std::size_t cols = doc.front().is_array() ? doc.front().size() : 0;
  std::vector<Elem> entries;
  for (const auto& row : doc) {
    if (!row.is_array()) bad_json("matrix rows must be arrays");
    if (row.size() != cols) throw Error(ErrorKind::ShapeError, "matrix rows must have equal length");
    for (const auto& v : row) {
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        bad_json("matrix entries must be nonnegative integers");
      }
      entries.push_back(field.elem(v.get<std::uint64_t>()));
    }
  }
  return Matrix(doc.size(), cols, std::move(entries));
}

}  // namespace pencil
