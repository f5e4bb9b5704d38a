#pragma once

// Private helpers for moving Eigen matrices through nlohmann::json.

#include "sysid/errors.hpp"
#include "sysid/linalg.hpp"

#include <json.hpp>

#include <string>

namespace sysid::detail {

inline Matrix matrix_from_json(const nlohmann::json& j, const std::string& what) {
  if (j.is_number()) {
    Matrix M(1, 1);
    M(0, 0) = j.get<double>();
    return M;
  }
  if (!j.is_array()) throw ParseError(what + ": expected a nested array");
  const Index rows = static_cast<Index>(j.size());
  if (rows == 0) return Matrix(0, 0);
  if (!j[0].is_array()) throw ParseError(what + ": expected rows to be arrays");
  const Index cols = static_cast<Index>(j[0].size());
  Matrix M(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw ParseError(what + ": ragged rows");
    }
    for (Index c = 0; c < cols; ++c) {
      const auto& v = row[static_cast<size_t>(c)];
      if (!v.is_number()) throw ParseError(what + ": non-numeric entry");
      M(r, c) = v.get<double>();
    }
  }
  return M;
}

inline Vector vector_from_json(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + ": expected an array");
  Vector v(static_cast<Index>(j.size()));
  for (Index i = 0; i < v.size(); ++i) {
    const auto& e = j[static_cast<size_t>(i)];
    if (!e.is_number()) throw ParseError(what + ": non-numeric entry");
    v(i) = e.get<double>();
  }
  return v;
}

inline nlohmann::json matrix_to_json(const Matrix& M) {
  nlohmann::json rows = nlohmann::json::array();
  for (Index r = 0; r < M.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Index c = 0; c < M.cols(); ++c) row.push_back(M(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline nlohmann::json vector_to_json(const Vector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

}  // namespace sysid::detail
