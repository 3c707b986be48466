#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "eigmult/graph.hpp"

namespace eigmult {

// A real symmetric matrix whose off-diagonal nonzero pattern is exactly the edge set of
// `graph`, with every edge entry at least `delta` in magnitude. The diagonal is free.
struct PatternMatrix {
  Eigen::MatrixXd entries;
  Graph graph;
  double delta = 1e-3;
};

// Exact membership test: symmetric, non-edges exactly zero, |edge entries| >= delta.
bool satisfies_pattern(const Eigen::MatrixXd& a, const Graph& g, double delta);

// Edge magnitudes uniform on [delta, 1] with a random sign, diagonal uniform on [-1, 1].
// Uses its own splitmix/xoshiro stream so the output is identical on every platform.
PatternMatrix sample_pattern(const Graph& g, std::uint64_t seed, double delta);

// Zeroes non-edges and pushes edge entries below delta out to sign(a)*delta (sign(0) = +).
// Off-diagonal pairs are symmetrized from their average first; the diagonal is kept.
PatternMatrix project_pattern(const Eigen::MatrixXd& m, const Graph& g, double delta);

// Nearest symmetric matrix of rank <= r in Frobenius norm: keeps the r eigenvalues of
// largest magnitude.
Eigen::MatrixXd project_rank(const Eigen::MatrixXd& m, int r);

// Singular values of a symmetric matrix, descending.
std::vector<double> symmetric_singular_values(const Eigen::MatrixXd& m);

struct CertificateParams {
  double delta = 1e-3;
  double tol = 1e-8;
  int max_iter = 5000;
  int restarts = 20;
  std::uint64_t seed = 0;
  int threads = 0;  // 0: hardware concurrency
  // Stagnation escape: if the residual has not halved over `stall_window` iterations,
  // blend the iterate with a fresh pattern sample (weight `stall_blend`). 0 disables.
  int stall_window = 100;
  double stall_blend = 0.5;
};

struct RankCertificate {
  PatternMatrix matrix;
  int r = 0;
  std::vector<double> sigma;  // descending
  double tol = 1e-8;
  int m_lower = 0;  // n - r; a lower bound on the maximum multiplicity when converged
  bool converged = false;
  int iterations = 0;
  int restart = 0;  // which restart produced this matrix

  // sigma_{r+1} / sigma_1 (0 when r >= n or the matrix is zero).
  double residual() const;
};

// Alternating projections A <- project_pattern(project_rank(A, r)) from sampled starts,
// with the stagnation escape above. Succeeds when the pattern iterate has sigma_{r+1} <= tol * sigma_1. Restarts run on a
// thread pool; the lowest successful restart index wins, otherwise the smallest residual.
RankCertificate certificate_search(const Graph& g, int r, const CertificateParams& params = {});

// Recomputes the spectrum by SVD and rechecks pattern membership and the tolerance test.
bool verify_certificate(const RankCertificate& c);

nlohmann::json certificate_to_json(const RankCertificate& c);
RankCertificate certificate_from_json(const nlohmann::json& j);

struct SandwichReport {
  int t_minus = 0;
  std::optional<int> numeric_lower;  // best n - r with a converged certificate
  int z = 0;
  int t_plus = 0;
  int delta_plus = 0;
  int lower = 0;
  int upper = 0;
  std::optional<int> m_exact;
  std::optional<RankCertificate> certificate;
};

// lower = max(T-, numeric), upper = min(Z, T+). Numerics are only run when the
// combinatorial bounds differ, trying the largest multiplicity first. A numeric lower
// bound above the combinatorial upper bound throws SoundnessError.
SandwichReport m_sandwich(const Graph& g, bool with_numeric = true, const CertificateParams& params = {});

// Same, starting from already computed t_minus, z, t_plus and delta_plus in `bounds`.
SandwichReport m_sandwich(const Graph& g, SandwichReport bounds, bool with_numeric,
                          const CertificateParams& params = {});

}  // namespace eigmult
