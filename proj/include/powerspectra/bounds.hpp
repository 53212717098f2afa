#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "json.hpp"
#include "powerspectra/group.hpp"
#include "powerspectra/matrix.hpp"
#include "powerspectra/spectra.hpp"

namespace powerspectra {

enum class BoundKind { AdjacencyRadius, DistanceRadius };

std::string_view to_string(BoundKind k);
std::optional<BoundKind> parse_bound_kind(std::string_view name);

/// Bounds on one spectral radius together with the radius itself.
struct BoundReport {
  explicit BoundReport(const GroupSpec& g) : group(g) {}

  GroupSpec group;
  BoundKind kind = BoundKind::AdjacencyRadius;
  double lower = 0.0;
  std::optional<double> upper;
  double computed_radius = 0.0;
  bool lower_tight = false;
  bool upper_tight = false;
  std::optional<double> prior_lower;
  std::optional<double> prior_upper;
  /// The earlier dihedral/dicyclic lower bound is strict (<), its upper is not.
  bool prior_lower_strict = false;
  /// V2 was empty (n prime): the graph is K_n and the radius is n - 1.
  bool degenerate = false;
};

/// Degree and transmission statistics of P(C_n) feeding the bound formulas.
/// V2 is the set of non-identity non-generators; its stats are absent when
/// V2 is empty (n prime).
struct BoundInputs {
  std::uint32_t n = 0;
  std::int64_t l = 0;  // phi(n) + 1
  std::optional<Rational> d_avg;
  std::optional<Rational> d_min;
  std::optional<Rational> tr_avg;
  std::optional<Rational> tr_max;
  Rational D_avg;  // whole graph
  Rational T_avg;
  Rational T_max;
};

BoundInputs cyclic_bound_inputs(std::uint32_t n);

/// Monic cubic x^3 + c2 x^2 + c1 x + c0 with exact integer coefficients.
struct Cubic {
  std::int64_t c2 = 0;
  std::int64_t c1 = 0;
  std::int64_t c0 = 0;

  friend bool operator==(const Cubic&, const Cubic&) = default;
};

struct CubicResult {
  Cubic coefficients;
  double largest_root = 0.0;
};

namespace formulas {

double cyclic_adjacency_lower(double n, double l, double d);
double dihedral_adjacency_lower(double D_avg);
double dicyclic_adjacency_lower(double D_avg);
double cyclic_distance(double n, double l, double tr);
double dihedral_distance_lower(double n, double T_avg);
double dihedral_distance_upper(double n, double T_max);
double dicyclic_distance_lower(double n, double T_avg);
double dicyclic_distance_upper(double n, double T_max);
Cubic adjacency_cubic(std::int64_t p, std::int64_t q);
Cubic distance_cubic(std::int64_t p, std::int64_t q);

}  // namespace formulas

BoundReport adjacency_lower_cyclic(std::uint32_t n, const Tolerances& tol = kTolerances);
double prior_adjacency_lower_cyclic(std::uint32_t n);
BoundReport adjacency_bounds_dihedral(std::uint32_t n, const Tolerances& tol = kTolerances);
BoundReport adjacency_bounds_dicyclic(std::uint32_t n, const Tolerances& tol = kTolerances);
CubicResult adjacency_cubic_semiprime(std::uint32_t p, std::uint32_t q);

BoundReport distance_bounds_cyclic(std::uint32_t n, const Tolerances& tol = kTolerances);
BoundReport distance_bounds_dihedral(std::uint32_t n, const Tolerances& tol = kTolerances);
BoundReport distance_bounds_dicyclic(std::uint32_t n, const Tolerances& tol = kTolerances);
CubicResult distance_cubic_semiprime(std::uint32_t p, std::uint32_t q);

/// Z_pq: lower = upper = largest root of the family's cubic.
BoundReport semiprime_report(std::uint32_t p, std::uint32_t q, BoundKind kind, const Tolerances& tol = kTolerances);

/// Report for any instance. The cyclic adjacency report has no upper bound.
BoundReport bound_report(const GroupSpec& g, BoundKind kind, const Tolerances& tol = kTolerances);

/// lower - tol <= radius <= upper + tol.
bool sandwich_holds(const BoundReport& r, double tol = kTolerances.radius_eq);

struct Comparison {
  std::optional<double> lower_gain;  // new.lower - prior_lower
  std::optional<double> upper_gain;  // prior_upper - new.upper
  bool improved = false;             // every available gain >= -tol
};

Comparison compare(const BoundReport& fresh, std::optional<double> prior_lower, std::optional<double> prior_upper,
                   double tol = kTolerances.radius_eq);

/// True when [lower, upper] lies inside the prior interval, or the two
/// intervals overlap and at least one endpoint is strictly tighter.
/// False when either side is missing.
bool interval_improves(const BoundReport& r, double tol = kTolerances.radius_eq);

nlohmann::json to_json(const BoundReport& r);

}  // namespace powerspectra
