#include "doctest.h"

#include <algorithm>
#include <queue>
#include <sstream>

#include "powerspectra/errors.hpp"
#include "powerspectra/kernels.hpp"
#include "powerspectra/powergraph.hpp"

using namespace powerspectra;

namespace {

std::vector<std::int64_t> degrees(const SquareMatrix& m) { return m.row_sums(); }

// Oracle for distance matrices: breadth-first search from every vertex.
SquareMatrix bfs_distances(const SquareMatrix& adj) {
  const std::size_t n = adj.dim();
  SquareMatrix d(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::queue<std::size_t> frontier;
    dist[s] = 0;
    frontier.push(s);
    while (!frontier.empty()) {
      const auto u = frontier.front();
      frontier.pop();
      for (std::size_t v = 0; v < n; ++v) {
        if (adj(u, v) && dist[v] < 0) {
          dist[v] = dist[u] + 1;
          frontier.push(v);
        }
      }
    }
    for (std::size_t v = 0; v < n; ++v) d(s, v) = dist[v];
  }
  return d;
}

std::vector<GroupSpec> instances_up_to(std::uint32_t max_order) {
  std::vector<GroupSpec> out;
  for (std::uint32_t n = 2; n <= max_order; ++n) out.push_back(GroupSpec::cyclic(n));
  for (std::uint32_t n = 3; 2 * n <= max_order; ++n) out.push_back(GroupSpec::dihedral(n));
  for (std::uint32_t n = 2; 4 * n <= max_order; ++n) out.push_back(GroupSpec::dicyclic(n));
  for (std::uint32_t p = 2; p * 3 <= max_order; ++p) {
    for (std::uint32_t q = p + 1; p * q <= max_order; ++q) {
      if (is_prime(p) && is_prime(q)) out.push_back(GroupSpec::semiprime(p, q));
    }
  }
  return out;
}

std::vector<std::uint32_t> indices(const std::vector<Element>& v) {
  std::vector<std::uint32_t> out;
  for (auto e : v) out.push_back(e.index);
  return out;
}

}  // namespace

TEST_CASE("canonical orderings") {
  const auto c6 = canonical_ordering(GroupSpec::cyclic(6));
  CHECK(indices(c6.vertices) == std::vector<std::uint32_t>{0, 1, 5, 2, 3, 4});
  CHECK(c6.block_sizes == std::vector<std::size_t>{3, 3});

  const auto q12 = canonical_ordering(GroupSpec::dicyclic(3));
  CHECK(indices(q12.vertices) == std::vector<std::uint32_t>{0, 3, 1, 2, 4, 5, 6, 7, 8, 9, 10, 11});

  const auto z15 = canonical_ordering(GroupSpec::semiprime(3, 5));
  CHECK(z15.block_sizes == std::vector<std::size_t>{9, 4, 2});
  CHECK(indices(z15.vertices).back() == 10);  // (p - 1) q

  const auto c7 = canonical_ordering(GroupSpec::cyclic(7));
  CHECK(c7.block_sizes == std::vector<std::size_t>{7, 0});
  CHECK(c7.block(1).empty());
}

TEST_CASE("definitional builder") {
  SUBCASE("C_p is complete") {
    for (std::uint32_t p : {2U, 3U, 5U, 11U, 31U}) {
      const auto a = build_definitional(GroupSpec::cyclic(p));
      for (auto d : degrees(a)) CHECK(d == p - 1);
    }
  }
  SUBCASE("C_6 degrees in canonical order") {
    // V2 = {2, 3, 4}: 2 and 4 are joined to each other but not to 3.
    const auto a = build_definitional(GroupSpec::cyclic(6));
    CHECK(degrees(a) == std::vector<std::int64_t>{5, 5, 5, 4, 3, 4});
    CHECK(a == kernels::serial::power_graph_adjacency(GroupSpec::cyclic(6), canonical_ordering(GroupSpec::cyclic(6)).vertices));
  }
  SUBCASE("D_6 reflections are leaves on the identity") {
    const auto a = build_definitional(GroupSpec::dihedral(3));
    for (std::size_t v = 3; v < 6; ++v) {
      CHECK(a.row_sum(v) == 1);
      CHECK(a(v, 0) == 1);
    }
  }
  SUBCASE("matrix invariants") {
    for (const auto& g : instances_up_to(60)) {
      const auto a = build_definitional(g);
      CHECK(a.is_symmetric());
      CHECK(a.has_zero_diagonal());
      CHECK(a.max_entry() <= 1);
      CHECK(a.row_sum(0) == static_cast<std::int64_t>(g.order()) - 1);
    }
  }
}

TEST_CASE("structural builders") {
  CHECK(build_structural_cyclic(4) == build_definitional(GroupSpec::cyclic(4)));
  for (auto d : degrees(build_structural_cyclic(4))) CHECK(d == 3);
  for (auto d : degrees(build_structural_cyclic(9))) CHECK(d == 8);
  CHECK(build_structural_cyclic(6) == build_definitional(GroupSpec::cyclic(6)));

  const auto d6 = build_structural_dihedral(3);
  CHECK(d6.dim() == 6);
  CHECK(d6.row_sum(0) == 5);
  for (std::uint32_t n = 3; n <= 12; ++n) {
    const auto a = build_structural_dihedral(n);
    for (std::size_t i = n; i < 2 * n; ++i) {
      for (std::size_t j = n; j < 2 * n; ++j) CHECK(a(i, j) == 0);
    }
  }
  CHECK(build_structural_dihedral(6) == build_definitional(GroupSpec::dihedral(6)));

  CHECK(build_structural_dicyclic(2) == build_definitional(GroupSpec::dicyclic(2)));
  for (std::uint32_t n = 2; n <= 10; ++n) {
    const auto a = build_structural_dicyclic(n);
    for (std::size_t v = 2 * n; v < 4 * n; ++v) CHECK(a.row_sum(v) == 3);
  }

  SUBCASE("Q_12 rotation block is P(C_6) up to the V1 reordering") {
    const auto q = build_structural_dicyclic(3);
    const auto c6 = build_structural_cyclic(6);
    // Dicyclic V1 lists a^i as e, a^3, a, a^2, a^4, a^5; cyclic order is e, a, a^5, a^2, a^3, a^4.
    const std::vector<std::uint32_t> dic = {0, 3, 1, 2, 4, 5};
    const auto cyc = indices(canonical_ordering(GroupSpec::cyclic(6)).vertices);
    auto pos = [&](std::uint32_t e) { return static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), e) - cyc.begin()); };
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = 0; j < 6; ++j) CHECK(q(i, j) == c6(pos(dic[i]), pos(dic[j])));
    }
  }

  SUBCASE("semiprime") {
    CHECK(build_structural_semiprime(2, 3) == build_definitional(GroupSpec::semiprime(2, 3)));
    // Same graph as C_6 once vertices are matched by element.
    const auto z6 = build_structural_semiprime(2, 3);
    const auto z6_order = indices(canonical_ordering(GroupSpec::semiprime(2, 3)).vertices);
    const auto c6 = build_definitional(GroupSpec::cyclic(6));
    const auto c6_order = indices(canonical_ordering(GroupSpec::cyclic(6)).vertices);
    auto pos = [&](std::uint32_t e) {
      return static_cast<std::size_t>(std::find(c6_order.begin(), c6_order.end(), e) - c6_order.begin());
    };
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = 0; j < 6; ++j) CHECK(z6(i, j) == c6(pos(z6_order[i]), pos(z6_order[j])));
    }

    const auto z15 = build_structural_semiprime(3, 5);
    const auto ord = canonical_ordering(GroupSpec::semiprime(3, 5));
    for (auto u : ord.block(1)) {
      for (auto v : ord.block(2)) CHECK(z15(u, v) == 0);
      for (auto v : ord.block(1)) CHECK(z15(u, v) == (u == v ? 0 : 1));  // K_4
    }
    for (auto u : ord.block(2)) {
      for (auto v : ord.block(2)) CHECK(z15(u, v) == (u == v ? 0 : 1));  // K_2
    }
    CHECK_THROWS_AS(build_structural_semiprime(4, 5), DomainError);
    CHECK_THROWS_AS(build_structural_semiprime(5, 5), DomainError);
  }

  SUBCASE("every family, order <= 96") {
    for (const auto& g : instances_up_to(96)) {
      CAPTURE(g.name());
      CHECK(build_structural(g) == build_definitional(g));
    }
  }
}

TEST_CASE("P(C_n) is complete exactly for prime powers") {
  for (std::uint32_t n = 2; n <= 200; ++n) {
    const auto a = build_definitional(GroupSpec::cyclic(n));
    const auto d = degrees(a);
    const bool complete = std::all_of(d.begin(), d.end(), [&](auto x) { return x == n - 1; });
    REQUIRE(complete == prime_power_decompose(n).has_value());
  }
}

TEST_CASE("distance matrix") {
  SquareMatrix k5(5);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) k5(i, j) = i == j ? 0 : 1;
  }
  CHECK(distance_matrix(k5) == k5);

  const auto c6 = distance_matrix(build_definitional(GroupSpec::cyclic(6)));
  CHECK(c6.row_sums() == std::vector<std::int64_t>{5, 5, 5, 6, 7, 6});

  const auto d6 = distance_matrix(build_definitional(GroupSpec::dihedral(3)));
  CHECK(d6.row_sums() == std::vector<std::int64_t>{5, 8, 8, 9, 9, 9});
  CHECK(d6.max_entry() == 2);

  SUBCASE("closed form agrees with BFS and the transmission identity") {
    for (const auto& g : instances_up_to(80)) {
      CAPTURE(g.name());
      const auto a = build_definitional(g);
      const auto d = distance_matrix(a);
      REQUIRE(d == bfs_distances(a));
      const auto n = static_cast<std::int64_t>(a.dim());
      for (std::size_t v = 0; v < a.dim(); ++v) REQUIRE(d.row_sum(v) == 2 * (n - 1) - a.row_sum(v));
    }
  }

  SUBCASE("rejects graphs that are not power graphs") {
    SquareMatrix path(4);
    for (std::size_t i = 0; i + 1 < 4; ++i) path(i, i + 1) = path(i + 1, i) = 1;
    CHECK_THROWS_AS(distance_matrix(path), StructureError);
    SquareMatrix split(4);
    split(0, 1) = split(1, 0) = 1;
    CHECK_THROWS_AS(distance_matrix(split), StructureError);
    SquareMatrix asym(3);
    asym(0, 1) = 1;
    CHECK_THROWS_AS(distance_matrix(asym), StructureError);
  }
}

TEST_CASE("subset statistics") {
  const auto g = GroupSpec::cyclic(6);
  const auto a = build_definitional(g);
  const auto d = distance_matrix(a);
  const auto v2 = canonical_ordering(g).block(1);

  const auto deg_v2 = subset_degree_stats(a, v2);
  CHECK(deg_v2.avg == Rational(11, 3));
  CHECK(deg_v2.min == Rational(3));
  CHECK(deg_v2.max == Rational(4));

  CHECK(subset_degree_stats(a, all_vertices(6)).avg == Rational(13, 3));

  const auto tr_v2 = subset_transmission_stats(d, v2);
  CHECK(tr_v2.avg == Rational(19, 3));
  CHECK(tr_v2.max == Rational(7));
  CHECK(tr_v2.min <= tr_v2.avg);

  CHECK_THROWS_AS(subset_degree_stats(a, std::vector<std::size_t>{}), DegenerateSubsetError);
  CHECK_THROWS_AS(subset_degree_stats(a, std::vector<std::size_t>{6}), DomainError);
}

TEST_CASE("order guard") {
  CHECK(max_order() == 4096);
  CHECK_NOTHROW(check_order_guard(4096));
  CHECK_THROWS_AS(check_order_guard(4097), DomainError);
  CHECK_THROWS_AS(build_definitional(GroupSpec::dicyclic(1025)), DomainError);
}

TEST_CASE("matrix text format") {
  const auto a = build_definitional(GroupSpec::dicyclic(2));
  std::stringstream ss;
  write_matrix(ss, a);
  CHECK(ss.str().substr(0, 2) == "8\n");
  CHECK(read_matrix(ss) == a);

  std::istringstream bad_dim("0\n");
  CHECK_THROWS_AS(read_matrix(bad_dim), DomainError);
  std::istringstream short_rows("2\n0 1\n1\n");
  CHECK_THROWS_AS(read_matrix(short_rows), DomainError);
  std::istringstream trailing("1\n0\n5\n");
  CHECK_THROWS_AS(read_matrix(trailing), DomainError);
}
