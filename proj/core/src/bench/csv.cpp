#include "sysid/bench/csv.hpp"

#include "sysid/errors.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

namespace sysid::bench {

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Quote a field when it holds a separator, a quote or a line break.
std::string field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += (c == '\n' || c == '\r') ? ' ' : c;
  }
  out += '"';
  return out;
}

void preamble(std::ostringstream& os, const char* kind, bool timestamp) {
  os << "# schema=" << kSchemaVersion << '\n';
  if (timestamp) os << "# generated " << utc_timestamp() << '\n';
  os << "# kind=" << kind << '\n';
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string results_csv(const std::vector<ResultRow>& rows, bool timestamp) {
  std::ostringstream os;
  preamble(os, "sweep", timestamp);
  os << "run_id,preset,estimator,N,T,L,mu,seed,op_error,fro_error,opt_hat,cond_ok,wall_ms,error\n";
  for (const auto& r : rows) {
    os << r.run_id << ',' << field(r.preset) << ',' << field(r.estimator) << ',' << r.N << ','
       << r.T << ',' << r.L << ',' << format_double(r.mu) << ',' << r.seed << ','
       << format_double(r.op_error) << ',' << format_double(r.fro_error) << ','
       << format_double(r.opt_hat) << ',' << (r.cond_ok ? 1 : 0) << ','
       << format_double(r.wall_ms) << ',' << field(r.error) << '\n';
  }
  return os.str();
}

std::string lowerbound_csv(const std::vector<LowerBoundRow>& rows, bool timestamp) {
  std::ostringstream os;
  preamble(os, "lowerbound", timestamp);
  os << "N,seed,ols_op_error,gramian_over_N,error\n";
  for (const auto& r : rows) {
    os << r.N << ',' << r.seed << ',' << format_double(r.ols_op_error) << ','
       << format_double(r.gramian_over_N) << ',' << field(r.error) << '\n';
  }
  return os.str();
}

void write_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidArgument("cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) throw InvalidArgument("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw InvalidArgument("cannot move results into " + path.string() + ": " + ec.message());
  }
}

std::string strip_comments(const std::string& csv) {
  std::istringstream in(csv);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') continue;
    out << line << '\n';
  }
  return out.str();
}

}  // namespace sysid::bench
