#pragma once

// Matrix documents: {"n": N, "entries": [[re, im], ...]} with N*N pairs in
// row-major order. A nested form with N rows of N pairs is also accepted on
// input. Complex values are never written as strings.

#include "seminormal/operator_core.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>

namespace seminormal {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline double parse_component(const nlohmann::json& v, Eigen::Index row, Eigen::Index col,
                              const char* part) {
  auto where = [&] {
    return "entries[" + std::to_string(row) + "][" + std::to_string(col) + "]." + part;
  };
  if (!v.is_number()) throw ParseError(where() + ": expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ParseError(where() + ": value is not finite");
  return d;
}

inline Complex parse_pair(const nlohmann::json& v, Eigen::Index row, Eigen::Index col) {
  if (!v.is_array() || v.size() != 2) {
    throw ParseError("entries[" + std::to_string(row) + "][" + std::to_string(col) +
                     "]: expected a [re, im] pair");
  }
  return {parse_component(v[0], row, col, "re"), parse_component(v[1], row, col, "im")};
}

}  // namespace detail

inline Operator parse_matrix_document(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed document at byte " + std::to_string(e.byte) + ": " + e.what());
  } catch (const nlohmann::json::out_of_range& e) {
    throw ParseError(std::string("number out of range: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document: expected an object with fields n, entries");
  if (!doc.contains("n")) throw ParseError("n: missing field");
  if (!doc.contains("entries")) throw ParseError("entries: missing field");

  const auto& jn = doc["n"];
  if (!jn.is_number_integer()) throw ParseError("n: expected an integer");
  const auto n64 = jn.get<std::int64_t>();
  if (n64 < 1) throw DimensionError("n: must be at least 1, got " + std::to_string(n64));
  const auto n = static_cast<Eigen::Index>(n64);

  const auto& entries = doc["entries"];
  if (!entries.is_array()) throw ParseError("entries: expected an array");

  Matrix m(n, n);
  const bool nested = !entries.empty() && entries[0].is_array() && !entries[0].empty() &&
                      entries[0][0].is_array();
  if (nested) {
    if (static_cast<Eigen::Index>(entries.size()) != n) {
      throw DimensionError("entries: expected " + std::to_string(n) + " rows, got " +
                           std::to_string(entries.size()));
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto& row = entries[static_cast<std::size_t>(i)];
      if (!row.is_array()) throw ParseError("entries[" + std::to_string(i) + "]: expected a row array");
      if (static_cast<Eigen::Index>(row.size()) != n) {
        throw DimensionError("entries[" + std::to_string(i) + "]: expected " + std::to_string(n) +
                             " values, got " + std::to_string(row.size()));
      }
      for (Eigen::Index j = 0; j < n; ++j) m(i, j) = detail::parse_pair(row[static_cast<std::size_t>(j)], i, j);
    }
  } else {
    if (static_cast<Eigen::Index>(entries.size()) != n * n) {
      throw DimensionError("entries: expected " + std::to_string(n * n) + " values for n = " +
                           std::to_string(n) + ", got " + std::to_string(entries.size()));
    }
    for (Eigen::Index k = 0; k < n * n; ++k) {
      m(k / n, k % n) = detail::parse_pair(entries[static_cast<std::size_t>(k)], k / n, k % n);
    }
  }
  return Operator(std::move(m));
}

inline nlohmann::ordered_json matrix_document(const Operator& a) {
  nlohmann::ordered_json doc;
  doc["n"] = a.dim();
  auto entries = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < a.dim(); ++i) {
    for (Eigen::Index j = 0; j < a.dim(); ++j) {
      entries.push_back({a(i, j).real(), a(i, j).imag()});
    }
  }
  doc["entries"] = std::move(entries);
  return doc;
}

inline std::string serialize_matrix(const Operator& a) { return matrix_document(a).dump() + "\n"; }

/// 64-bit FNV-1a of raw bytes, rendered as 16 hex digits.
inline std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace seminormal
