#include "sysid/system_io.hpp"

#include "json_matrix.hpp"

#include <fstream>
#include <sstream>

namespace sysid {

using nlohmann::json;

namespace {

StateSpace system_from_json_value(const json& j) {
  if (!j.is_object()) throw ParseError("system: expected a JSON object");
  for (const char* key : {"A", "B", "C", "D"}) {
    if (!j.contains(key)) throw ParseError(std::string("system: missing field ") + key);
  }
  Matrix A = detail::matrix_from_json(j["A"], "A");
  Matrix B = detail::matrix_from_json(j["B"], "B");
  Matrix C = detail::matrix_from_json(j["C"], "C");
  Matrix D = detail::matrix_from_json(j["D"], "D");
  // An n x 0 block serializes as n empty rows.
  Matrix Bw = j.contains("Bw") ? detail::matrix_from_json(j["Bw"], "Bw") : Matrix();
  if (Bw.size() == 0) Bw.resize(A.rows(), 0);
  Matrix Dz = j.contains("Dz") ? detail::matrix_from_json(j["Dz"], "Dz") : Matrix();
  if (Dz.size() == 0) Dz.resize(C.rows(), 0);
  Vector x1 = j.contains("x1") ? detail::vector_from_json(j["x1"], "x1") : Vector();
  return StateSpace(std::move(A), std::move(B), std::move(C), std::move(D), std::move(Bw),
                    std::move(Dz), std::move(x1));
}

}  // namespace

StateSpace system_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("system: ") + e.what());
  }
  return system_from_json_value(j);
}

std::string system_to_json(const StateSpace& sys, int indent) {
  json j;
  j["A"] = detail::matrix_to_json(sys.A());
  j["B"] = detail::matrix_to_json(sys.B());
  j["C"] = detail::matrix_to_json(sys.C());
  j["D"] = detail::matrix_to_json(sys.D());
  j["Bw"] = detail::matrix_to_json(sys.Bw());
  j["Dz"] = detail::matrix_to_json(sys.Dz());
  j["x1"] = detail::vector_to_json(sys.x1());
  return j.dump(indent);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

StateSpace load_system(const std::filesystem::path& path) {
  return system_from_json(read_text_file(path));
}

void save_system(const StateSpace& sys, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot write " + path.string());
  out << system_to_json(sys) << '\n';
}

Matrix matrix_from_json_text(std::string_view text) {
  try {
    return detail::matrix_from_json(json::parse(text), "matrix");
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("matrix: ") + e.what());
  }
}

}  // namespace sysid
