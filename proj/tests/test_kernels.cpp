// OpenMP kernels against their serial references.

#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "powerspectra/kernels.hpp"
#include "powerspectra/powergraph.hpp"

using namespace powerspectra;

namespace {

std::vector<double> sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

RealMatrix random_symmetric(std::size_t dim, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  RealMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) m(i, j) = m(j, i) = u(rng);
  }
  return m;
}

}  // namespace

TEST_CASE("parallel adjacency builder matches the serial reference") {
  std::vector<GroupSpec> groups;
  for (std::uint32_t n = 2; n <= 40; ++n) groups.push_back(GroupSpec::cyclic(n));
  for (std::uint32_t n = 3; n <= 20; ++n) groups.push_back(GroupSpec::dihedral(n));
  for (std::uint32_t n = 2; n <= 10; ++n) groups.push_back(GroupSpec::dicyclic(n));
  groups.push_back(GroupSpec::semiprime(5, 7));
  for (const auto& g : groups) {
    CAPTURE(g.name());
    const auto ord = canonical_ordering(g);
    CHECK(kernels::power_graph_adjacency(g, ord.vertices) == kernels::serial::power_graph_adjacency(g, ord.vertices));
  }
}

TEST_CASE("diameter check agrees with the serial reference") {
  // Path graphs: diameter dim - 1.
  for (std::size_t dim = 2; dim <= 70; dim += 17) {
    SquareMatrix path(dim);
    for (std::size_t i = 0; i + 1 < dim; ++i) path(i, i + 1) = path(i + 1, i) = 1;
    CHECK(kernels::diameter_at_most_two(path) == (dim <= 3));
    CHECK(kernels::serial::diameter_at_most_two(path) == (dim <= 3));
  }
  // Stars have diameter 2 regardless of size; crosses the 64-bit word boundary.
  SquareMatrix star(130);
  for (std::size_t j = 1; j < 130; ++j) star(0, j) = star(j, 0) = 1;
  CHECK(kernels::diameter_at_most_two(star));
  CHECK(kernels::serial::diameter_at_most_two(star));
  // Two disjoint edges: disconnected.
  SquareMatrix two(4);
  two(0, 1) = two(1, 0) = two(2, 3) = two(3, 2) = 1;
  CHECK_FALSE(kernels::diameter_at_most_two(two));
  CHECK_FALSE(kernels::serial::diameter_at_most_two(two));
}

TEST_CASE("matvec agrees with the serial reference") {
  const auto adj = build_definitional(GroupSpec::dihedral(15));
  std::vector<double> x(adj.dim());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = 0.5 + static_cast<double>(i % 7);
  std::vector<double> y1(adj.dim());
  std::vector<double> y2(adj.dim());
  kernels::matvec(adj, x, y1);
  kernels::serial::matvec(adj, x, y2);
  CHECK(y1 == y2);
}

TEST_CASE("round-robin Jacobi matches cyclic Jacobi") {
  std::mt19937 rng(7);
  for (std::size_t dim : {1U, 2U, 3U, 5U, 8U, 17U, 40U}) {
    CAPTURE(dim);
    const auto m = random_symmetric(dim, rng);
    const auto par = kernels::jacobi_eigenvalues(m, 1e-12, 64);
    const auto ser = kernels::serial::jacobi_eigenvalues(m, 1e-12, 64);
    REQUIRE(par.converged);
    REQUIRE(ser.converged);
    const auto a = sorted(par.eigenvalues);
    const auto b = sorted(ser.eigenvalues);
    for (std::size_t i = 0; i < dim; ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-10));
  }
  for (const auto& g : {GroupSpec::cyclic(30), GroupSpec::dihedral(12), GroupSpec::dicyclic(7)}) {
    const RealMatrix m(distance_matrix(build_definitional(g)));
    const auto a = sorted(kernels::jacobi_eigenvalues(m, 1e-12, 64).eigenvalues);
    const auto b = sorted(kernels::serial::jacobi_eigenvalues(m, 1e-12, 64).eigenvalues);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-9);
  }
}

TEST_CASE("Jacobi reports non-convergence when starved of sweeps") {
  std::mt19937 rng(11);
  const auto m = random_symmetric(12, rng);
  CHECK_FALSE(kernels::jacobi_eigenvalues(m, 1e-12, 1).converged);
  CHECK_FALSE(kernels::serial::jacobi_eigenvalues(m, 1e-12, 1).converged);
}
