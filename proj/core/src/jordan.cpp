#include "sysid/jordan.hpp"

#include "sysid/errors.hpp"
#include "sysid/system_io.hpp"

#include <Eigen/Eigenvalues>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace sysid {

using nlohmann::json;

Index JordanSpec::dimension() const {
  Index total = 0;
  for (const auto& b : blocks) total += b.k;
  return total;
}

namespace {

JordanBlock block_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("jordan spec: each block must be an object {re, im, k}");
  JordanBlock b;
  const double re = j.value("re", 0.0);
  const double im = j.value("im", 0.0);
  b.lambda = Complex(re, im);
  if (!j.contains("k")) throw ParseError("jordan spec: block missing k");
  if (!j["k"].is_number_integer()) throw ParseError("jordan spec: k must be an integer");
  b.k = j["k"].get<int>();
  if (b.k < 1) throw ParseError("jordan spec: k must be >= 1");
  return b;
}

}  // namespace

JordanSpec jordan_spec_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("jordan spec: ") + e.what());
  }
  JordanSpec spec;
  const json* list = &j;
  if (j.is_object()) {
    if (!j.contains("blocks")) throw ParseError("jordan spec: missing blocks");
    list = &j["blocks"];
    if (j.contains("cond")) {
      const auto& c = j["cond"];
      ConditioningConstants cc;
      cc.M0 = c.value("M0", 0.0);
      cc.MB = c.value("MB", 0.0);
      cc.MC = c.value("MC", 0.0);
      cc.MD = c.value("MD", 0.0);
      spec.cond = cc;
    }
  }
  if (!list->is_array()) throw ParseError("jordan spec: blocks must be an array");
  for (const auto& b : *list) spec.blocks.push_back(block_from_json(b));
  return spec;
}

std::string jordan_spec_to_json(const JordanSpec& spec, int indent) {
  json blocks = json::array();
  for (const auto& b : spec.blocks) {
    blocks.push_back({{"re", b.lambda.real()}, {"im", b.lambda.imag()}, {"k", b.k}});
  }
  if (!spec.cond) return blocks.dump(indent);
  json out;
  out["blocks"] = std::move(blocks);
  out["cond"] = {{"M0", spec.cond->M0},
                 {"MB", spec.cond->MB},
                 {"MC", spec.cond->MC},
                 {"MD", spec.cond->MD}};
  return out.dump(indent);
}

JordanSpec load_jordan_spec(const std::filesystem::path& path) {
  return jordan_spec_from_json(read_text_file(path));
}

SpectrumCheck validate_against(const JordanSpec& spec, const Matrix& A, double tol) {
  SpectrumCheck out;
  const Index n = A.rows();
  if (spec.dimension() > n) {
    out.message = "declared block sizes sum to " + std::to_string(spec.dimension()) +
                  " but the state dimension is " + std::to_string(n);
    return out;
  }

  // Merge declared blocks that share an eigenvalue.
  struct Group {
    Complex lambda;
    Index multiplicity;
  };
  std::vector<Group> groups;
  for (const auto& b : spec.blocks) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const Group& g) { return std::abs(g.lambda - b.lambda) <= 1e-9; });
    if (it == groups.end()) {
      groups.push_back({b.lambda, b.k});
    } else {
      it->multiplicity += b.k;
    }
  }

  Eigen::EigenSolver<Matrix> es(A, false);
  const Eigen::VectorXcd eig = es.eigenvalues();
  std::vector<bool> used(static_cast<size_t>(n), false);

  for (const auto& g : groups) {
    std::vector<std::pair<double, Index>> dist;
    for (Index i = 0; i < n; ++i) {
      if (!used[static_cast<size_t>(i)]) dist.emplace_back(std::abs(eig(i) - g.lambda), i);
    }
    if (static_cast<Index>(dist.size()) < g.multiplicity) {
      out.message = "not enough eigenvalues left to match declared blocks";
      return out;
    }
    std::partial_sort(dist.begin(), dist.begin() + g.multiplicity, dist.end());
    Complex mean(0.0, 0.0);
    for (Index j = 0; j < g.multiplicity; ++j) {
      used[static_cast<size_t>(dist[static_cast<size_t>(j)].second)] = true;
      mean += eig(dist[static_cast<size_t>(j)].second);
    }
    mean /= static_cast<double>(g.multiplicity);
    const double err = std::abs(mean - g.lambda);
    if (err > tol * std::max(1.0, std::abs(g.lambda))) {
      std::ostringstream msg;
      msg << "declared eigenvalue " << g.lambda << " (multiplicity " << g.multiplicity
          << ") is off by " << err;
      out.message = msg.str();
      return out;
    }
  }
  out.ok = true;
  return out;
}

Matrix real_jordan_matrix(const JordanSpec& spec, double tol) {
  const Index n = spec.dimension();
  Matrix A = Matrix::Zero(n, n);
  std::vector<bool> paired(spec.blocks.size(), false);
  Index offset = 0;
  for (size_t i = 0; i < spec.blocks.size(); ++i) {
    if (paired[i]) continue;
    const auto& b = spec.blocks[i];
    const Index k = b.k;
    const double a = b.lambda.real();
    const double im = b.lambda.imag();
    if (std::abs(im) <= tol) {
      for (Index r = 0; r < k; ++r) {
        A(offset + r, offset + r) = a;
        if (r + 1 < k) A(offset + r, offset + r + 1) = 1.0;
      }
      offset += k;
      continue;
    }
    size_t partner = spec.blocks.size();
    for (size_t j = i + 1; j < spec.blocks.size(); ++j) {
      if (!paired[j] && spec.blocks[j].k == b.k &&
          std::abs(spec.blocks[j].lambda - std::conj(b.lambda)) <= tol) {
        partner = j;
        break;
      }
    }
    if (partner == spec.blocks.size()) {
      throw NonRealCoefficients("real_jordan_matrix: complex block without a conjugate partner");
    }
    paired[partner] = true;
    for (Index r = 0; r < k; ++r) {
      const Index o = offset + 2 * r;
      A(o, o) = a;
      A(o, o + 1) = im;
      A(o + 1, o) = -im;
      A(o + 1, o + 1) = a;
      if (r + 1 < k) {
        A(o, o + 2) = 1.0;
        A(o + 1, o + 3) = 1.0;
      }
    }
    offset += 2 * k;
  }
  return A;
}

}  // namespace sysid
