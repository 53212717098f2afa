#include "powerspectra/reproduce.hpp"

#include <cmath>

#include <fmt/format.h>

#include "powerspectra/bounds.hpp"
#include "powerspectra/powergraph.hpp"
#include "powerspectra/spectra.hpp"

namespace powerspectra {

std::vector<ReproductionCheck> reproduce_examples(double tol) {
  std::vector<ReproductionCheck> out;
  auto add = [&](std::string label, double expected, double computed) {
    out.push_back({std::move(label), expected, computed, std::abs(expected - computed) <= tol});
  };

  const auto z6 = build_definitional(GroupSpec::cyclic(6));
  add("lambda1(P(Z_6))", 4.42788, symmetric_eigenvalues(z6).radius);
  const auto cubic = adjacency_cubic_semiprime(2, 3);
  add("Z_6 cubic c2", -3, static_cast<double>(cubic.coefficients.c2));
  add("Z_6 cubic c1", -7, static_cast<double>(cubic.coefficients.c1));
  add("Z_6 cubic c0", 3, static_cast<double>(cubic.coefficients.c0));
  add("largest root of x^3-3x^2-7x+3", 4.42788, cubic.largest_root);
  add("D_avg(P(Z_6)) = 13/3", 13.0 / 3.0, to_double(subset_degree_stats(z6, all_vertices(z6.dim())).avg));

  const auto d12 = adjacency_bounds_dihedral(6);
  add("D_12 prior lower", 4.42788, *d12.prior_lower);
  add("D_12 prior upper", 6.87737, *d12.prior_upper);
  add("D_12 lower", 4.55297, d12.lower);
  add("D_12 upper", 6, *d12.upper);

  const auto q12 = adjacency_bounds_dicyclic(3);
  add("Q_12 prior lower", 4.42788, *q12.prior_lower);
  add("Q_12 prior upper", 7.89198, *q12.prior_upper);
  add("Q_12 lower", 5.27008, q12.lower);
  add("Q_12 upper", 7, *q12.upper);

  // D_{2p^m}: prior (p^m - 1, p^m + sqrt(p^m) - 1], new [(p^m - 1 + sqrt((p^m - 1)^2 + 4)) / 2, p^m].
  for (std::uint32_t pm : {4U, 8U, 9U, 25U, 27U}) {
    const double x = pm;
    const auto r = adjacency_bounds_dihedral(pm);
    add(fmt::format("D_{} prior lower", 2 * pm), x - 1, *r.prior_lower);
    add(fmt::format("D_{} prior upper", 2 * pm), x + std::sqrt(x) - 1, *r.prior_upper);
    add(fmt::format("D_{} lower", 2 * pm), 0.5 * (x - 1 + std::sqrt((x - 1) * (x - 1) + 4)), r.lower);
    add(fmt::format("D_{} upper", 2 * pm), x, *r.upper);
  }

  // Q_{2^{m+2}} (n = 2^m): prior (2^{m+1} - 1, 2^{m+1} + 2 sqrt(2^m) - 1],
  // new [2^m + sqrt((2^m - 1)^2 + 4), 2^{m+1} + 1].
  for (std::uint32_t m : {2U, 3U, 4U}) {
    const std::uint32_t n = 1U << m;
    const double x = n;
    const auto r = adjacency_bounds_dicyclic(n);
    add(fmt::format("Q_{} prior lower", 4 * n), 2 * x - 1, *r.prior_lower);
    add(fmt::format("Q_{} prior upper", 4 * n), 2 * x + 2 * std::sqrt(x) - 1, *r.prior_upper);
    add(fmt::format("Q_{} lower", 4 * n), x + std::sqrt((x - 1) * (x - 1) + 4), r.lower);
    add(fmt::format("Q_{} upper", 4 * n), 2 * x + 1, *r.upper);
  }
  return out;
}

}  // namespace powerspectra
