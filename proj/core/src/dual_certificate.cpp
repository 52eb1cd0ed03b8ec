#include "localcc/dual_certificate.hpp"

#include <algorithm>
#include <stdexcept>

#include "localcc/linear_program.hpp"

namespace localcc {

std::vector<double> aggregate_sigma(std::size_t vertex_count,
                                    std::span<const TripleMultiplier> sigma) {
  std::vector<double> hat(pair_count(vertex_count), 0.0);
  for (const auto& s : sigma) {
    if (s.u >= vertex_count || s.v >= vertex_count || s.z >= vertex_count)
      throw std::out_of_range("triple multiplier references unknown vertex");
    if (s.u == s.v || s.u == s.z || s.v == s.z)
      throw std::invalid_argument("triple multiplier needs distinct vertices");
    // Row x_uv - x_uz - x_zv <= 0.
    hat[pair_index(s.u, s.v, vertex_count)] -= s.value;
    hat[pair_index(s.u, s.z, vertex_count)] += s.value;
    hat[pair_index(s.z, s.v, vertex_count)] += s.value;
  }
  return hat;
}

DualCertificate matching_dual_certificate(std::size_t t) {
  if (t < 2) throw std::invalid_argument("matching certificate needs t >= 2");
  const std::size_t n = 2 * t;
  const double share = 1.0 / static_cast<double>(2 * t - 2);
  std::vector<TripleMultiplier> sigma;
  for (Vertex z = 2; z < n; ++z) sigma.push_back({0, 1, z, share});

  DualCertificate cert;
  cert.vertex_count = n;
  cert.pi.assign(n, 0.0);
  cert.pi[0] = cert.pi[1] = 0.5;
  cert.sigma_hat = aggregate_sigma(n, sigma);
  cert.claimed_objective = 1.0;
  return cert;
}

DualCertificate star_dual_certificate(std::size_t n) {
  if (n < 2) throw std::invalid_argument("star certificate needs n >= 2");
  const std::size_t size = n + 1;
  const double leaf = 1.0 / (3.0 * static_cast<double>(n - 1));
  std::vector<TripleMultiplier> sigma;
  for (Vertex v = 1; v < size; ++v)
    for (Vertex w = 1; w < size; ++w)
      if (v != w) sigma.push_back({v, w, 0, leaf});

  DualCertificate cert;
  cert.vertex_count = size;
  cert.pi.assign(size, leaf);
  cert.pi[0] = 1.0 - static_cast<double>(n) * leaf;
  cert.sigma_hat = aggregate_sigma(size, sigma);
  cert.claimed_objective = static_cast<double>(n) / 3.0;
  return cert;
}

DualVerdict verify_dual_certificate(const SignedCompleteGraph& g, const DualCertificate& cert) {
  const std::size_t n = g.size();
  if (cert.vertex_count != n || cert.pi.size() != n || cert.sigma_hat.size() != pair_count(n))
    throw std::invalid_argument("certificate does not match the graph's dimensions");

  DualVerdict out;
  double worst = -kInfinity;
  for (Vertex v = 0; v < n; ++v) {
    worst = std::max(worst, -cert.pi[v]);
    out.pi_sum += cert.pi[v];
    out.objective += static_cast<double>(g.negative_degree(v)) * cert.pi[v];
  }
  worst = std::max(worst, out.pi_sum - 1.0);

  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const double hat = cert.sigma_hat[pair_index(u, v, n)];
      if (g.is_positive(u, v)) {
        const double lhs = -cert.pi[u] - cert.pi[v] + hat;
        worst = std::max(worst, lhs);
        if (lhs < -kLpTolerance) out.slack_positive_edges.emplace_back(u, v);
      } else {
        worst = std::max(worst, cert.pi[u] + cert.pi[v] + hat);
      }
    }
  out.max_violation = worst;
  out.feasible = worst <= kLpTolerance;
  return out;
}

}  // namespace localcc
