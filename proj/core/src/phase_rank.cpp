#include "sysid/phase_rank.hpp"

#include "sysid/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sysid {

namespace {

constexpr double kCoverSlack = 1e-12;

Complex power(Complex z, Index T) { return std::pow(z, static_cast<int>(T)); }

bool conjugate_closed(const std::vector<Complex>& values, double tol) {
  std::vector<bool> matched(values.size(), false);
  for (size_t i = 0; i < values.size(); ++i) {
    if (matched[i]) continue;
    if (std::abs(values[i].imag()) <= tol) {
      matched[i] = true;
      continue;
    }
    bool found = false;
    for (size_t j = 0; j < values.size(); ++j) {
      if (j != i && !matched[j] && std::abs(values[j] - std::conj(values[i])) <= tol) {
        matched[i] = matched[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

struct Search {
  const std::vector<std::vector<char>>* cover = nullptr;  // [block][pool]
  const std::vector<Complex>* pool = nullptr;
  Index T = 1;
  std::vector<int> need;
  std::vector<Index> chosen;
  std::vector<Index> first;       // first solution at this depth
  std::vector<Index> preferred;   // first conjugate-closed solution
  long nodes = 0;
  long budget = 0;
  bool counting = false;

  bool satisfied() const {
    return std::all_of(need.begin(), need.end(), [](int v) { return v <= 0; });
  }

  bool closed(const std::vector<Index>& picks) const {
    std::vector<Complex> vals;
    vals.reserve(picks.size());
    for (Index p : picks) vals.push_back(power((*pool)[static_cast<size_t>(p)], T));
    return conjugate_closed(vals, 1e-9);
  }

  // Returns true when the search should stop.
  bool dfs(Index start, Index slots) {
    ++nodes;
    if (counting && nodes > budget) return true;
    if (satisfied()) {
      if (first.empty()) {
        first = chosen;
        counting = true;
        nodes = 0;
      }
      if (closed(chosen)) {
        preferred = chosen;
        return true;
      }
      return false;
    }
    const Index P = static_cast<Index>(pool->size());
    const size_t B = need.size();
    for (size_t b = 0; b < B; ++b) {
      if (need[b] <= 0) continue;
      if (need[b] > slots) return false;
      bool reachable = false;
      for (Index p = start; p < P && !reachable; ++p) reachable = (*cover)[b][static_cast<size_t>(p)];
      if (!reachable) return false;
    }
    for (Index p = start; p < P; ++p) {
      bool useful = false;
      for (size_t b = 0; b < B; ++b) {
        if (need[b] > 0 && (*cover)[b][static_cast<size_t>(p)]) useful = true;
      }
      if (!useful) continue;
      for (size_t b = 0; b < B; ++b) {
        if ((*cover)[b][static_cast<size_t>(p)]) --need[b];
      }
      chosen.push_back(p);
      const bool stop = dfs(p, slots - 1);
      chosen.pop_back();
      for (size_t b = 0; b < B; ++b) {
        if ((*cover)[b][static_cast<size_t>(p)]) ++need[b];
      }
      if (stop) return true;
    }
    return false;
  }
};

}  // namespace

bool is_large_block(Complex lambda, double alpha, Index T) {
  return std::abs(lambda) >= 1.0 - 1.0 / ((1.0 + alpha) * static_cast<double>(T));
}

bool covers(Complex mu, Complex lambda, double alpha, Index T) {
  const double radius = alpha * (1.0 - std::abs(lambda));
  for (Index j = 0; j < T; ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(T);
    const Complex root = mu * std::polar(1.0, angle);
    if (std::abs(lambda - root) <= radius + kCoverSlack) return true;
  }
  return false;
}

bool check_phase_rank(const JordanSpec& spec, double alpha, Index T,
                      const std::vector<Complex>& witnesses) {
  for (const auto& b : spec.blocks) {
    if (!is_large_block(b.lambda, alpha, T)) continue;
    int count = 0;
    for (const Complex& mu : witnesses) {
      if (covers(mu, b.lambda, alpha, T)) ++count;
    }
    if (count < b.k) return false;
  }
  return true;
}

bool check_phase_rank(const JordanSpec& spec, const PhaseRankCertificate& cert) {
  return check_phase_rank(spec, cert.alpha, cert.T, cert.witnesses);
}

std::optional<PhaseRankCertificate> phase_rank(const JordanSpec& spec, double alpha, Index T,
                                               Index d_max, PhaseRankOptions opts) {
  if (!(alpha >= 1.0)) throw InvalidArgument("phase_rank: alpha must be >= 1");
  if (T < 1) throw InvalidArgument("phase_rank: T must be >= 1");
  if (d_max < 0 || d_max > 12) throw InvalidArgument("phase_rank: d_max must be in [0, 12]");

  std::vector<size_t> large;
  for (size_t i = 0; i < spec.blocks.size(); ++i) {
    if (is_large_block(spec.blocks[i].lambda, alpha, T)) large.push_back(i);
  }

  PhaseRankCertificate cert;
  cert.alpha = alpha;
  cert.T = T;
  cert.assignment.assign(spec.blocks.size(), {});
  if (large.empty()) return cert;

  std::vector<Complex> pool;
  auto add = [&](Complex mu) {
    if (std::abs(mu) > 1.0 + 1e-12) return;
    const Complex v = power(mu, T);
    for (const Complex& q : pool) {
      if (std::abs(power(q, T) - v) <= 1e-9) return;
    }
    pool.push_back(mu);
  };
  for (size_t i : large) {
    const Complex lambda = spec.blocks[i].lambda;
    add(lambda);
    if (std::abs(lambda) > 0.0) add(lambda / std::abs(lambda));
    add(std::conj(lambda));
    if (std::abs(lambda) > 0.0) add(std::conj(lambda) / std::abs(lambda));
  }

  std::vector<std::vector<char>> cover(large.size(), std::vector<char>(pool.size(), 0));
  for (size_t b = 0; b < large.size(); ++b) {
    for (size_t p = 0; p < pool.size(); ++p) {
      cover[b][p] = covers(pool[p], spec.blocks[large[b]].lambda, alpha, T) ? 1 : 0;
    }
  }

  int k_max = 0;
  for (size_t i : large) k_max = std::max(k_max, spec.blocks[i].k);

  for (Index d = k_max; d <= d_max; ++d) {
    Search s;
    s.cover = &cover;
    s.pool = &pool;
    s.T = T;
    s.budget = opts.refine_budget;
    for (size_t i : large) s.need.push_back(spec.blocks[i].k);
    s.dfs(0, d);
    if (s.first.empty()) continue;
    const std::vector<Index>& picks = s.preferred.empty() ? s.first : s.preferred;
    for (Index p : picks) cert.witnesses.push_back(pool[static_cast<size_t>(p)]);
    for (size_t i : large) {
      auto& list = cert.assignment[i];
      for (Index w = 0; w < cert.d() && static_cast<int>(list.size()) < spec.blocks[i].k; ++w) {
        if (covers(cert.witnesses[static_cast<size_t>(w)], spec.blocks[i].lambda, alpha, T)) {
          list.push_back(w);
        }
      }
    }
    return cert;
  }
  return std::nullopt;
}

MonicPolynomial poly_from_witnesses(const PhaseRankCertificate& cert) {
  std::vector<Complex> roots;
  roots.reserve(cert.witnesses.size());
  for (const Complex& mu : cert.witnesses) {
    if (std::abs(mu) > 1.0 + 1e-12) throw InvalidArgument("poly_from_witnesses: witness outside the unit disc");
    roots.push_back(power(mu, cert.T));
  }
  return poly_from_roots(roots);
}

}  // namespace sysid
