#include "eigmult/minrank.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "eigmult/deletion.hpp"
#include "eigmult/errors.hpp"
#include "eigmult/graph6.hpp"
#include "eigmult/zero_forcing.hpp"

namespace eigmult {

namespace {

// splitmix64 for seeding, xoshiro256** for the stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    for (auto& word : state_) {
      seed += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = seed;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      word = z ^ (z >> 31);
    }
  }

  std::uint64_t next() {
    const std::uint64_t result = std::rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = std::rotl(state_[3], 45);
    return result;
  }

  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t state_[4];
};

void require_symmetric_square(const Eigen::MatrixXd& m, const char* who) {
  if (m.rows() != m.cols()) throw DomainError(std::string(who) + ": matrix is not square");
}

// Eigen-decomposition with eigenvalue indices ordered by decreasing magnitude.
struct SortedSpectrum {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  std::vector<int> by_magnitude;

  explicit SortedSpectrum(const Eigen::MatrixXd& m) : solver(m) {
    if (solver.info() != Eigen::Success) throw NumericalError("symmetric eigensolver failed");
    const auto& values = solver.eigenvalues();
    by_magnitude.resize(values.size());
    std::iota(by_magnitude.begin(), by_magnitude.end(), 0);
    std::stable_sort(by_magnitude.begin(), by_magnitude.end(),
                     [&](int a, int b) { return std::abs(values[a]) > std::abs(values[b]); });
  }

  std::vector<double> singular_values() const {
    std::vector<double> out;
    out.reserve(by_magnitude.size());
    for (int i : by_magnitude) out.push_back(std::abs(solver.eigenvalues()[i]));
    return out;
  }

  Eigen::MatrixXd truncate(int r) const {
    const Eigen::Index n = solver.eigenvalues().size();
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < r && k < n; ++k) {
      const int i = by_magnitude[k];
      const Eigen::VectorXd& q = solver.eigenvectors().col(i);
      out.noalias() += solver.eigenvalues()[i] * q * q.transpose();
    }
    return (out + out.transpose()) / 2.0;
  }
};

double ratio_at(const std::vector<double>& sigma, int r) {
  if (r >= static_cast<int>(sigma.size())) return 0.0;
  if (sigma.front() == 0.0) return 0.0;
  return sigma[r] / sigma.front();
}

RankCertificate run_restart(const Graph& g, int r, const CertificateParams& params, int restart) {
  RankCertificate cert;
  cert.r = r;
  cert.tol = params.tol;
  cert.m_lower = g.order() - r;
  cert.restart = restart;
  const std::uint64_t start_seed = params.seed + static_cast<std::uint64_t>(restart);
  cert.matrix = sample_pattern(g, start_seed, params.delta);

  Rng escape(start_seed ^ 0x5bd1e995c3a5c85cULL);
  const double pattern_slots = static_cast<double>(g.order() + 2 * g.size());
  double checkpoint = std::numeric_limits<double>::infinity();
  for (int it = 0;; ++it) {
    const SortedSpectrum spectrum(cert.matrix.entries);
    cert.sigma = spectrum.singular_values();
    cert.iterations = it;
    const double residual = ratio_at(cert.sigma, r);
    if (residual <= params.tol) {
      cert.converged = true;
      return cert;
    }
    if (it == params.max_iter) return cert;

    if (params.stall_window > 0 && it > 0 && it % params.stall_window == 0) {
      if (residual > 0.5 * checkpoint) {
        // Stuck near a spurious fixed point (typically an edge pinned at the clamp).
        const double rms = cert.matrix.entries.norm() / std::sqrt(pattern_slots);
        const PatternMatrix fresh = sample_pattern(g, escape.next(), params.delta);
        const Eigen::MatrixXd blended =
            (1.0 - params.stall_blend) * cert.matrix.entries + params.stall_blend * rms * fresh.entries;
        cert.matrix = project_pattern(blended, g, params.delta);
        checkpoint = std::numeric_limits<double>::infinity();
        continue;
      }
      checkpoint = residual;
    }
    cert.matrix = project_pattern(spectrum.truncate(r), g, params.delta);
  }
}

}  // namespace

bool satisfies_pattern(const Eigen::MatrixXd& a, const Graph& g, double delta) {
  const int n = g.order();
  if (a.rows() != n || a.cols() != n) return false;
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(a(i, i))) return false;
    for (int j = i + 1; j < n; ++j) {
      if (a(i, j) != a(j, i)) return false;
      if (g.adjacent(i, j)) {
        if (!(std::abs(a(i, j)) >= delta) || a(i, j) == 0.0) return false;
      } else if (a(i, j) != 0.0) {
        return false;
      }
    }
  }
  return true;
}

PatternMatrix sample_pattern(const Graph& g, std::uint64_t seed, double delta) {
  if (!(delta > 0.0)) throw DomainError("sample_pattern: delta must be > 0");
  const int n = g.order();
  Rng rng(seed);
  PatternMatrix out{Eigen::MatrixXd::Zero(n, n), g, delta};
  for (int i = 0; i < n; ++i) {
    out.entries(i, i) = rng.uniform(-1.0, 1.0);
    for (int j = i + 1; j < n; ++j) {
      if (!g.adjacent(i, j)) continue;
      const double magnitude = rng.uniform(delta, 1.0);
      const double value = (rng.next() >> 63) ? -magnitude : magnitude;
      out.entries(i, j) = out.entries(j, i) = value;
    }
  }
  return out;
}

PatternMatrix project_pattern(const Eigen::MatrixXd& m, const Graph& g, double delta) {
  require_symmetric_square(m, "project_pattern");
  const int n = g.order();
  if (m.rows() != n) throw DomainError("project_pattern: matrix order differs from graph order");
  PatternMatrix out{m, g, delta};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double value = 0.0;
      if (g.adjacent(i, j)) {
        value = (m(i, j) + m(j, i)) / 2.0;
        if (std::abs(value) < delta) value = value < 0.0 ? -delta : delta;
      }
      out.entries(i, j) = out.entries(j, i) = value;
    }
  }
  return out;
}

Eigen::MatrixXd project_rank(const Eigen::MatrixXd& m, int r) {
  require_symmetric_square(m, "project_rank");
  if (r < 0 || r > m.rows()) throw DomainError("project_rank: rank " + std::to_string(r) + " out of range");
  if (r == m.rows()) return m;
  return SortedSpectrum(m).truncate(r);
}

std::vector<double> symmetric_singular_values(const Eigen::MatrixXd& m) {
  require_symmetric_square(m, "symmetric_singular_values");
  if (m.rows() == 0) return {};
  return SortedSpectrum(m).singular_values();
}

double RankCertificate::residual() const { return ratio_at(sigma, r); }

RankCertificate certificate_search(const Graph& g, int r, const CertificateParams& params) {
  const int n = g.order();
  if (r < 0 || r > n) throw DomainError("certificate_search: rank " + std::to_string(r) + " out of range");
  if (params.restarts < 1) throw DomainError("certificate_search: need at least one restart");
  if (n == 0) {
    RankCertificate empty;
    empty.matrix = {Eigen::MatrixXd(0, 0), g, params.delta};
    empty.tol = params.tol;
    empty.converged = true;
    return empty;
  }

  std::vector<std::optional<RankCertificate>> results(params.restarts);
  std::atomic<int> next{0};
  std::atomic<int> first_success{params.restarts};
  auto worker = [&] {
    for (int k = next++; k < params.restarts; k = next++) {
      if (k > first_success.load()) continue;
      results[k] = run_restart(g, r, params, k);
      if (results[k]->converged) {
        int current = first_success.load();
        while (k < current && !first_success.compare_exchange_weak(current, k)) {
        }
      }
    }
  };

  int threads = params.threads > 0 ? params.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, params.restarts);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  // Every restart below the first success ran to completion, so this choice does not
  // depend on scheduling.
  const int winner = first_success.load();
  if (winner < params.restarts) return *results[winner];
  int best = 0;
  for (int k = 1; k < params.restarts; ++k) {
    if (results[k]->residual() < results[best]->residual()) best = k;
  }
  return *results[best];
}

bool verify_certificate(const RankCertificate& c) {
  const Eigen::MatrixXd& a = c.matrix.entries;
  const int n = c.matrix.graph.order();
  if (c.r < 0 || c.r > n || c.m_lower != n - c.r) return false;
  if (!(c.matrix.delta > 0.0) || !satisfies_pattern(a, c.matrix.graph, c.matrix.delta)) return false;
  if (n == 0) return true;
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const Eigen::VectorXd& sigma = svd.singularValues();  // descending
  if (c.r == n || sigma[0] == 0.0) return true;
  return sigma[c.r] <= c.tol * sigma[0];
}

nlohmann::json certificate_to_json(const RankCertificate& c) {
  const int n = c.matrix.graph.order();
  std::vector<double> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) entries.push_back(c.matrix.entries(i, j));
  }
  return {
      {"n", n},
      {"graph6", emit_graph6(c.matrix.graph)},
      {"r", c.r},
      {"entries", entries},
      {"delta", c.matrix.delta},
      {"tol", c.tol},
      {"sigma", c.sigma},
      {"converged", c.converged},
      {"iterations", c.iterations},
  };
}

RankCertificate certificate_from_json(const nlohmann::json& j) {
  RankCertificate c;
  const int n = j.at("n").get<int>();
  c.matrix.graph = parse_graph6(j.at("graph6").get<std::string>());
  if (c.matrix.graph.order() != n) throw DomainError("certificate: n does not match graph6 order");
  const auto entries = j.at("entries").get<std::vector<double>>();
  if (entries.size() != static_cast<std::size_t>(n) * n) throw DomainError("certificate: entries must be n*n");
  c.matrix.entries.resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) c.matrix.entries(i, k) = entries[static_cast<std::size_t>(i) * n + k];
  }
  c.matrix.delta = j.at("delta").get<double>();
  c.r = j.at("r").get<int>();
  c.tol = j.at("tol").get<double>();
  c.sigma = j.at("sigma").get<std::vector<double>>();
  c.converged = j.at("converged").get<bool>();
  c.iterations = j.at("iterations").get<int>();
  c.m_lower = n - c.r;
  return c;
}

SandwichReport m_sandwich(const Graph& g, bool with_numeric, const CertificateParams& params) {
  SandwichReport bounds;
  bounds.t_minus = t_minus(g).value;
  bounds.t_plus = t_plus(g).value;
  bounds.z = zero_forcing_number(g).z;
  bounds.delta_plus = delta_plus(g).value;
  return m_sandwich(g, std::move(bounds), with_numeric, params);
}

SandwichReport m_sandwich(const Graph& g, SandwichReport report, bool with_numeric, const CertificateParams& params) {
  report.numeric_lower.reset();
  report.certificate.reset();
  report.m_exact.reset();
  report.lower = report.t_minus;
  report.upper = std::min(report.z, report.t_plus);

  const int n = g.order();
  if (with_numeric && report.lower < report.upper) {
    // Claim the largest multiplicity first; stop at the first success.
    for (int target = report.upper; target > report.lower; --target) {
      RankCertificate cert = certificate_search(g, n - target, params);
      if (!cert.converged) continue;
      if (!verify_certificate(cert)) {
        throw SoundnessError("m_sandwich: converged certificate failed independent verification");
      }
      report.numeric_lower = target;
      report.certificate = std::move(cert);
      break;
    }
    if (report.numeric_lower) report.lower = std::max(report.lower, *report.numeric_lower);
  }
  if (report.lower > report.upper) {
    throw SoundnessError("m_sandwich: lower bound " + std::to_string(report.lower) + " exceeds upper bound " +
                         std::to_string(report.upper) + " for " + emit_graph6(g));
  }
  if (report.lower == report.upper) report.m_exact = report.lower;
  return report;
}

}  // namespace eigmult
