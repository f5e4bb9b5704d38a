#include "sysid/bench/config.hpp"

#include "sysid/bench/presets.hpp"
#include "sysid/errors.hpp"
#include "sysid/system_io.hpp"

#include "../json_matrix.hpp"

#include <cmath>

namespace sysid::bench {

using nlohmann::json;

namespace {

json parse(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

NoiseModel noise_from_value(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "none") return NoNoise{};
    if (s == "gaussian") return GaussianNoise{};
    throw ParseError("noise: unknown shorthand '" + s + "'");
  }
  if (!j.is_object()) throw ParseError("noise: expected an object");
  const std::string type = j.value("type", "gaussian");
  if (type == "none") return NoNoise{};
  if (type == "gaussian") {
    GaussianNoise g;
    g.sigma_w = j.value("sigma_w", j.value("sigma", 1.0));
    g.sigma_z = j.value("sigma_z", j.value("sigma", 1.0));
    return g;
  }
  if (type == "adversarial") {
    AdversarialNoise a;
    const std::string gen = j.value("generator", "constant-sign");
    if (gen == "constant-sign") {
      a.generator = AdversarialNoise::Generator::ConstantSign;
    } else if (gen == "square-wave") {
      a.generator = AdversarialNoise::Generator::SquareWave;
    } else if (gen == "aligned-sign") {
      a.generator = AdversarialNoise::Generator::AlignedSign;
    } else {
      throw ParseError("noise: unknown generator '" + gen + "'");
    }
    a.amplitude = j.value("amplitude", 1.0);
    a.period = j.value("period", Index{1});
    if (j.contains("w_direction")) a.w_direction = detail::vector_from_json(j["w_direction"], "w_direction");
    if (j.contains("z_direction")) a.z_direction = detail::vector_from_json(j["z_direction"], "z_direction");
    return a;
  }
  throw ParseError("noise: unknown type '" + type + "'");
}

std::vector<Index> grid_from_value(const json& j) {
  std::vector<Index> out;
  if (j.is_array()) {
    for (const auto& v : j) {
      if (!v.is_number_integer()) throw ParseError("N: entries must be integers");
      out.push_back(v.get<Index>());
    }
    return out;
  }
  if (j.is_object()) {
    const int lo = j.value("log2_min", -1);
    const int hi = j.value("log2_max", -1);
    if (lo < 0 || hi < lo || hi > 40) throw ParseError("N: need 0 <= log2_min <= log2_max <= 40");
    for (int e = lo; e <= hi; ++e) out.push_back(Index{1} << e);
    return out;
  }
  if (j.is_number_integer()) return {j.get<Index>()};
  throw ParseError("N: expected a list, an integer or {log2_min, log2_max}");
}

std::vector<std::uint64_t> seeds_from_value(const json& j) {
  std::vector<std::uint64_t> out;
  if (j.is_array()) {
    for (const auto& v : j) {
      if (!v.is_number_integer()) throw ParseError("seeds: entries must be integers");
      out.push_back(v.get<std::uint64_t>());
    }
    return out;
  }
  if (j.is_object()) {
    const auto count = j.value("count", std::uint64_t{0});
    const auto start = j.value("start", std::uint64_t{0});
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(start + i);
    return out;
  }
  throw ParseError("seeds: expected a list or {count, start}");
}

EstimatorSpec estimator_from_value(const json& j) {
  EstimatorSpec e;
  std::string name;
  if (j.is_string()) {
    name = j.get<std::string>();
  } else if (j.is_object()) {
    name = j.value("name", "");
  } else {
    throw ParseError("estimators: entries must be names or objects");
  }
  if (name == "ols") {
    e.kind = EstimatorSpec::Kind::Ols;
  } else if (name == "pfls") {
    e.kind = EstimatorSpec::Kind::Pfls;
  } else if (name == "select-L" || name == "select-l") {
    e.kind = EstimatorSpec::Kind::SelectL;
  } else if (name == "fixed-filter") {
    e.kind = EstimatorSpec::Kind::FixedFilter;
    if (!j.is_object() || !j.contains("poly")) {
      throw ParseError("fixed-filter: needs a poly coefficient list");
    }
    for (const auto& c : j["poly"]) e.poly.push_back(c.get<double>());
  } else {
    throw ParseError("estimators: unknown estimator '" + name + "'");
  }
  return e;
}

}  // namespace

std::string EstimatorSpec::name() const {
  switch (kind) {
    case Kind::Ols: return "ols";
    case Kind::Pfls: return "pfls";
    case Kind::FixedFilter: return "fixed-filter";
    case Kind::SelectL: return "select-L";
  }
  return "unknown";
}

const StateSpace& ExperimentConfig::sys() const {
  if (!system) throw InvalidArgument("config: no system set");
  return *system;
}

NoiseModel noise_from_json_text(std::string_view text) {
  return noise_from_value(parse(text, "noise"));
}

ExperimentConfig config_from_json(std::string_view text) {
  const json j = parse(text, "config");
  if (!j.is_object()) throw ParseError("config: expected a JSON object");
  ExperimentConfig c;
  try {
    if (!j.contains("system")) throw ParseError("config: missing system");
    const auto& s = j["system"];
    if (s.is_string()) {
      c.preset = s.get<std::string>();
      c.system = preset(c.preset);
    } else {
      c.preset = j.value("name", "inline");
      c.system = system_from_json(s.dump());
    }
    if (j.contains("noise")) c.noise = noise_from_value(j["noise"]);
    if (j.contains("N")) c.N_grid = grid_from_value(j["N"]);
    c.T = j.value("T", c.T);
    c.L = j.value("L", c.L);
    c.L_max = j.value("L_max", c.L_max);
    c.mu = j.value("mu", c.mu);
    c.delta = j.value("delta", c.delta);
    if (j.contains("estimators")) {
      for (const auto& e : j["estimators"]) c.estimators.push_back(estimator_from_value(e));
    }
    if (j.contains("seeds")) c.seeds = seeds_from_value(j["seeds"]);
    c.output = j.value("output", std::string());
    c.max_cells = j.value("max_cells", c.max_cells);
    c.record_wall_time = j.value("record_wall_time", c.record_wall_time);
    c.threads = j.value("threads", c.threads);
  } catch (const json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  validate(c);
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  return config_from_json(read_text_file(path));
}

void validate(const ExperimentConfig& c) {
  if (!c.system) throw InvalidArgument("config: no system");
  if (c.N_grid.empty()) throw InvalidArgument("config: N grid is empty");
  if (c.seeds.empty()) throw InvalidArgument("config: seeds are empty");
  if (c.estimators.empty()) throw InvalidArgument("config: no estimators");
  if (c.T < 1 || c.L < 1) throw InvalidArgument("config: T and L must be >= 1");
  if (c.L_max < 0) throw InvalidArgument("config: L_max must be >= 0");
  if (!(c.mu > 0.0)) throw InvalidArgument("config: mu must be positive");
  if (!(c.delta > 0.0 && c.delta < 1.0)) throw InvalidArgument("config: delta must be in (0, 1)");
  Index N_max = 0;
  for (Index N : c.N_grid) {
    if (N < 1) throw InvalidArgument("config: N values must be >= 1");
    N_max = std::max(N_max, N);
  }
  const auto& s = *c.system;
  const double cells = static_cast<double>(N_max) * static_cast<double>(s.n() + s.m() + s.p());
  if (cells > c.max_cells) {
    throw InvalidArgument("config: N_max * (n + m + p) = " + std::to_string(cells) +
                          " exceeds the memory guard " + std::to_string(c.max_cells));
  }
  for (const auto& e : c.estimators) {
    if (e.kind == EstimatorSpec::Kind::FixedFilter && static_cast<Index>(e.poly.size()) > c.L) {
      throw InvalidArgument("config: fixed-filter polynomial degree exceeds L");
    }
  }
}

}  // namespace sysid::bench
