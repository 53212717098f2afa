#include "doctest.h"

#include <sstream>

#include "powerspectra/errors.hpp"
#include "powerspectra/sweep.hpp"

using namespace powerspectra;

TEST_CASE("instance ranges") {
  CHECK(sweep_instances({Family::Dihedral, 3, 20, BoundKind::AdjacencyRadius}).size() == 18);
  CHECK_THROWS_AS(sweep_instances({Family::Dihedral, 5, 4, BoundKind::AdjacencyRadius}), DomainError);
  CHECK_THROWS_AS(sweep_instances({Family::Dihedral, 2, 6, BoundKind::AdjacencyRadius}), DomainError);
  CHECK_THROWS_AS(sweep_instances({Family::Cyclic, 2, 6, BoundKind::AdjacencyRadius}), DomainError);
  CHECK(sweep_instances({Family::Cyclic, 2, 6, BoundKind::DistanceRadius}).size() == 5);

  // pq <= 30: 6, 10, 14, 15, 21, 22, 26.
  const auto sp = sweep_instances({Family::SemiprimeCyclic, 1, 30, BoundKind::AdjacencyRadius});
  std::vector<std::uint32_t> orders;
  for (const auto& g : sp) orders.push_back(g.order());
  CHECK(orders == std::vector<std::uint32_t>{6, 10, 14, 15, 21, 22, 26});
  CHECK_THROWS_AS(sweep_instances({Family::SemiprimeCyclic, 7, 9, BoundKind::AdjacencyRadius}), DomainError);
}

TEST_CASE("dihedral sweep") {
  const auto rows = run_sweep({Family::Dihedral, 3, 20, BoundKind::AdjacencyRadius});
  REQUIRE(rows.size() == 18);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].report.group.n() == i + 3);
    CHECK(rows[i].sandwich_ok);
    CHECK(*rows[i].lower_gap >= -kTolerances.radius_eq);
    CHECK(*rows[i].upper_gap >= -kTolerances.radius_eq);
    CHECK_FALSE(rows[i].cubic_error.has_value());
  }
}

TEST_CASE("semiprime sweep") {
  for (auto kind : {BoundKind::AdjacencyRadius, BoundKind::DistanceRadius}) {
    const auto rows = run_sweep({Family::SemiprimeCyclic, 1, 100, kind});
    CHECK(rows.size() == 30);
    for (const auto& r : rows) {
      REQUIRE(r.cubic_error.has_value());
      CHECK(*r.cubic_error <= 1e-7);
      CHECK(r.sandwich_ok);
    }
  }
}

TEST_CASE("csv output") {
  const auto rows = run_sweep({Family::Cyclic, 5, 6, BoundKind::AdjacencyRadius});
  std::ostringstream out;
  write_csv(out, rows);
  std::istringstream in(out.str());
  std::string header, five, six, extra;
  std::getline(in, header);
  std::getline(in, five);
  std::getline(in, six);
  CHECK_FALSE(std::getline(in, extra));
  CHECK(header ==
        "family,n,p,q,kind,radius,lower,upper,prior_lower,prior_upper,lower_gap,upper_gap,lower_tight,upper_tight,"
        "degenerate,sandwich_ok,cubic_error");
  CHECK(five.rfind("cyclic,5,,,adjacency,4,4,,4,,", 0) == 0);
  CHECK(five.substr(five.find(",,true")) == ",,true,false,true,true,");
  CHECK(six.rfind("cyclic,6,,,adjacency,4.42787887", 0) == 0);

  std::ostringstream again;
  write_csv(again, run_sweep({Family::Cyclic, 5, 6, BoundKind::AdjacencyRadius}));
  CHECK(again.str() == out.str());

  const auto j = to_json(rows);
  REQUIRE(j.is_array());
  CHECK(j.size() == 2);
  CHECK(j[1]["n"] == 6);
}
