#include "powerspectra/bounds.hpp"

#include <cmath>

#include <fmt/format.h>

#include "powerspectra/errors.hpp"
#include "powerspectra/powergraph.hpp"

namespace powerspectra {

std::string_view to_string(BoundKind k) { return k == BoundKind::AdjacencyRadius ? "adjacency" : "distance"; }

std::optional<BoundKind> parse_bound_kind(std::string_view name) {
  if (name == "adjacency") return BoundKind::AdjacencyRadius;
  if (name == "distance") return BoundKind::DistanceRadius;
  return std::nullopt;
}

namespace formulas {

double cyclic_adjacency_lower(double n, double l, double d) {
  return 0.5 * ((d - 1.0) + std::sqrt((d + 1.0 - 2.0 * l) * (d + 1.0 - 2.0 * l) + 4.0 * l * (n - l)));
}

double dihedral_adjacency_lower(double D_avg) { return 0.5 * (D_avg + std::sqrt(D_avg * D_avg + 4.0)); }

double dicyclic_adjacency_lower(double D_avg) {
  return 0.5 * ((D_avg + 1.0) + std::sqrt((D_avg - 1.0) * (D_avg - 1.0) + 16.0));
}

double cyclic_distance(double n, double l, double tr) {
  return 0.5 * ((tr - 1.0) + std::sqrt((tr - 2.0 * l + 1.0) * (tr - 2.0 * l + 1.0) + 4.0 * l * (n - l)));
}

double dihedral_distance_lower(double n, double T_avg) {
  const double a = T_avg - 2.0 * n + 2.0;
  return 0.5 * ((T_avg + 2.0 * n - 2.0) + std::sqrt(a * a + 4.0 * (2.0 * n - 1.0) * (2.0 * n - 1.0)));
}

double dihedral_distance_upper(double n, double T_max) {
  const double a = T_max - 2.0 * n + 2.0;
  return 0.5 * ((T_max + 2.0 * n - 2.0) + std::sqrt(a * a + 8.0 * n * (2.0 * n - 1.0)));
}

double dicyclic_distance_lower(double n, double T_avg) {
  const double a = T_avg - 4.0 * n + 3.0;
  return 0.5 * ((T_avg + 4.0 * n - 3.0) + std::sqrt(a * a + 16.0 * (2.0 * n - 1.0) * (2.0 * n - 1.0)));
}

double dicyclic_distance_upper(double n, double T_max) {
  const double a = T_max - 4.0 * n + 3.0;
  return 0.5 * ((T_max + 4.0 * n - 3.0) + std::sqrt(a * a + 32.0 * n * (2.0 * n - 1.0)));
}

Cubic adjacency_cubic(std::int64_t p, std::int64_t q) {
  const std::int64_t pq = p * q;
  return {-(pq - 3), -(pq + p + q - 4),
          pq * pq - 2 * p * p * q - 2 * p * q * q + p * p + 5 * pq + q * q - 4 * p - 4 * q + 4};
}

Cubic distance_cubic(std::int64_t p, std::int64_t q) {
  const std::int64_t pq = p * q;
  return {-(pq - 3), -(5 * pq - 3 * p - 3 * q), pq * pq - 2 * p * p * q - 2 * p * q * q + p * p + pq + q * q};
}

}  // namespace formulas

namespace {

double radius_of(const SquareMatrix& m, const Tolerances& tol) { return symmetric_eigenvalues(m, tol).radius; }

void mark_tightness(BoundReport& r, double tol) {
  r.lower_tight = std::abs(r.lower - r.computed_radius) <= tol;
  r.upper_tight = r.upper.has_value() && std::abs(*r.upper - r.computed_radius) <= tol;
}

BoundReport empty_report(const GroupSpec& g, BoundKind kind) {
  BoundReport r{g};
  r.kind = kind;
  return r;
}

void require_semiprime(std::uint32_t p, std::uint32_t q) { (void)GroupSpec::semiprime(p, q); }

}  // namespace

BoundInputs cyclic_bound_inputs(std::uint32_t n) {
  const auto g = GroupSpec::cyclic(n);
  const auto ord = canonical_ordering(g);
  const auto adj = build_definitional(g);
  const auto dist = distance_matrix(adj);
  BoundInputs in;
  in.n = n;
  in.l = static_cast<std::int64_t>(ord.block_sizes[0]);
  const auto everything = all_vertices(adj.dim());
  in.D_avg = subset_degree_stats(adj, everything).avg;
  const auto t = subset_transmission_stats(dist, everything);
  in.T_avg = t.avg;
  in.T_max = t.max;
  const auto v2 = ord.block(1);
  if (!v2.empty()) {
    const auto d = subset_degree_stats(adj, v2);
    in.d_avg = d.avg;
    in.d_min = d.min;
    const auto tr = subset_transmission_stats(dist, v2);
    in.tr_avg = tr.avg;
    in.tr_max = tr.max;
  }
  return in;
}

double prior_adjacency_lower_cyclic(std::uint32_t n) {
  if (n < 3) throw DomainError(fmt::format("cyclic adjacency bound needs n >= 3, got {}", n));
  const auto in = cyclic_bound_inputs(n);
  if (!in.d_min) return static_cast<double>(n) - 1.0;
  return formulas::cyclic_adjacency_lower(n, static_cast<double>(in.l), to_double(*in.d_min));
}

BoundReport adjacency_lower_cyclic(std::uint32_t n, const Tolerances& tol) {
  if (n < 3) throw DomainError(fmt::format("cyclic adjacency bound needs n >= 3, got {}", n));
  const auto g = GroupSpec::cyclic(n);
  const auto in = cyclic_bound_inputs(n);
  auto r = empty_report(g, BoundKind::AdjacencyRadius);
  r.computed_radius = radius_of(build_definitional(g), tol);
  if (!in.d_avg) {
    r.degenerate = true;
    r.lower = static_cast<double>(n) - 1.0;
  } else {
    r.lower = formulas::cyclic_adjacency_lower(n, static_cast<double>(in.l), to_double(*in.d_avg));
  }
  r.prior_lower = in.d_min ? formulas::cyclic_adjacency_lower(n, static_cast<double>(in.l), to_double(*in.d_min))
                           : static_cast<double>(n) - 1.0;
  mark_tightness(r, tol.radius_eq);
  return r;
}

BoundReport adjacency_bounds_dihedral(std::uint32_t n, const Tolerances& tol) {
  if (n < 3) throw DomainError(fmt::format("dihedral bounds need n >= 3, got {}", n));
  const auto g = GroupSpec::dihedral(n);
  const auto in = cyclic_bound_inputs(n);
  auto r = empty_report(g, BoundKind::AdjacencyRadius);
  r.computed_radius = radius_of(build_definitional(g), tol);
  r.lower = formulas::dihedral_adjacency_lower(to_double(in.D_avg));
  r.upper = static_cast<double>(n);
  const double core = radius_of(build_definitional(GroupSpec::cyclic(n)), tol);
  r.prior_lower = core;
  r.prior_upper = core + std::sqrt(static_cast<double>(n));
  r.prior_lower_strict = true;
  mark_tightness(r, tol.radius_eq);
  return r;
}

BoundReport adjacency_bounds_dicyclic(std::uint32_t n, const Tolerances& tol) {
  if (n < 2) throw DomainError(fmt::format("dicyclic bounds need n >= 2, got {}", n));
  const auto g = GroupSpec::dicyclic(n);
  const auto in = cyclic_bound_inputs(2 * n);
  auto r = empty_report(g, BoundKind::AdjacencyRadius);
  r.computed_radius = radius_of(build_definitional(g), tol);
  r.lower = formulas::dicyclic_adjacency_lower(to_double(in.D_avg));
  r.upper = 2.0 * n + 1.0;
  const double core = radius_of(build_definitional(GroupSpec::cyclic(2 * n)), tol);
  r.prior_lower = core;
  r.prior_upper = core + 2.0 * std::sqrt(static_cast<double>(n));
  r.prior_lower_strict = true;
  mark_tightness(r, tol.radius_eq);
  return r;
}

CubicResult adjacency_cubic_semiprime(std::uint32_t p, std::uint32_t q) {
  require_semiprime(p, q);
  CubicResult out;
  out.coefficients = formulas::adjacency_cubic(p, q);
  const auto& c = out.coefficients;
  out.largest_root = largest_cubic_root(static_cast<double>(c.c2), static_cast<double>(c.c1), static_cast<double>(c.c0));
  return out;
}

CubicResult distance_cubic_semiprime(std::uint32_t p, std::uint32_t q) {
  require_semiprime(p, q);
  CubicResult out;
  out.coefficients = formulas::distance_cubic(p, q);
  const auto& c = out.coefficients;
  out.largest_root = largest_cubic_root(static_cast<double>(c.c2), static_cast<double>(c.c1), static_cast<double>(c.c0));
  return out;
}

BoundReport distance_bounds_cyclic(std::uint32_t n, const Tolerances& tol) {
  const auto g = GroupSpec::cyclic(n);
  const auto in = cyclic_bound_inputs(n);
  auto r = empty_report(g, BoundKind::DistanceRadius);
  r.computed_radius = radius_of(distance_matrix(build_definitional(g)), tol);
  if (!in.tr_avg) {
    r.degenerate = true;
    r.lower = static_cast<double>(n) - 1.0;
    r.upper = static_cast<double>(n) - 1.0;
  } else {
    const double l = static_cast<double>(in.l);
    r.lower = formulas::cyclic_distance(n, l, to_double(*in.tr_avg));
    r.upper = formulas::cyclic_distance(n, l, to_double(*in.tr_max));
  }
  mark_tightness(r, tol.radius_eq);
  return r;
}

BoundReport distance_bounds_dihedral(std::uint32_t n, const Tolerances& tol) {
  if (n < 3) throw DomainError(fmt::format("dihedral distance bounds need n >= 3, got {}", n));
  const auto g = GroupSpec::dihedral(n);
  const auto in = cyclic_bound_inputs(n);
  auto r = empty_report(g, BoundKind::DistanceRadius);
  r.computed_radius = radius_of(distance_matrix(build_definitional(g)), tol);
  r.lower = formulas::dihedral_distance_lower(n, to_double(in.T_avg));
  r.upper = formulas::dihedral_distance_upper(n, to_double(in.T_max));
  mark_tightness(r, tol.radius_eq);
  return r;
}

BoundReport distance_bounds_dicyclic(std::uint32_t n, const Tolerances& tol) {
  if (n < 2) throw DomainError(fmt::format("dicyclic distance bounds need n >= 2, got {}", n));
  const auto g = GroupSpec::dicyclic(n);
  const auto in = cyclic_bound_inputs(2 * n);
  auto r = empty_report(g, BoundKind::DistanceRadius);
  r.computed_radius = radius_of(distance_matrix(build_definitional(g)), tol);
  r.lower = formulas::dicyclic_distance_lower(n, to_double(in.T_avg));
  r.upper = formulas::dicyclic_distance_upper(n, to_double(in.T_max));
  mark_tightness(r, tol.radius_eq);
  return r;
}

BoundReport semiprime_report(std::uint32_t p, std::uint32_t q, BoundKind kind, const Tolerances& tol) {
  const auto g = GroupSpec::semiprime(p, q);
  const auto cubic = kind == BoundKind::AdjacencyRadius ? adjacency_cubic_semiprime(p, q) : distance_cubic_semiprime(p, q);
  auto r = empty_report(g, kind);
  const auto adj = build_definitional(g);
  r.computed_radius = radius_of(kind == BoundKind::AdjacencyRadius ? adj : distance_matrix(adj), tol);
  r.lower = cubic.largest_root;
  r.upper = cubic.largest_root;
  mark_tightness(r, tol.radius_eq);
  return r;
}

BoundReport bound_report(const GroupSpec& g, BoundKind kind, const Tolerances& tol) {
  const bool adjacency = kind == BoundKind::AdjacencyRadius;
  switch (g.family()) {
    case Family::Cyclic:
      return adjacency ? adjacency_lower_cyclic(g.n(), tol) : distance_bounds_cyclic(g.n(), tol);
    case Family::Dihedral:
      return adjacency ? adjacency_bounds_dihedral(g.n(), tol) : distance_bounds_dihedral(g.n(), tol);
    case Family::Dicyclic:
      return adjacency ? adjacency_bounds_dicyclic(g.n(), tol) : distance_bounds_dicyclic(g.n(), tol);
    case Family::SemiprimeCyclic:
      return semiprime_report(g.p(), g.q(), kind, tol);
  }
  throw DomainError("unknown family");
}

bool sandwich_holds(const BoundReport& r, double tol) {
  if (r.lower > r.computed_radius + tol) return false;
  if (r.upper && r.computed_radius > *r.upper + tol) return false;
  return true;
}

Comparison compare(const BoundReport& fresh, std::optional<double> prior_lower, std::optional<double> prior_upper,
                   double tol) {
  Comparison c;
  if (prior_lower) c.lower_gain = fresh.lower - *prior_lower;
  if (prior_upper && fresh.upper) c.upper_gain = *prior_upper - *fresh.upper;
  c.improved = (c.lower_gain || c.upper_gain) && (!c.lower_gain || *c.lower_gain >= -tol) &&
               (!c.upper_gain || *c.upper_gain >= -tol);
  return c;
}

bool interval_improves(const BoundReport& r, double tol) {
  if (!r.upper || !r.prior_lower || !r.prior_upper) return false;
  const double lo = r.lower;
  const double hi = *r.upper;
  const double plo = *r.prior_lower;
  const double phi = *r.prior_upper;
  const bool contained = lo >= plo - tol && hi <= phi + tol;
  if (contained) return true;
  const bool overlap = lo <= phi + tol && plo <= hi + tol;
  const bool tighter_end = lo > plo + tol || hi < phi - tol;
  return overlap && tighter_end;
}

nlohmann::json to_json(const BoundReport& r) {
  auto opt = [](const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  nlohmann::json j{{"family", to_string(r.group.family())},
                   {"n", r.group.n()},
                   {"kind", to_string(r.kind)},
                   {"lower", r.lower},
                   {"upper", opt(r.upper)},
                   {"radius", r.computed_radius},
                   {"lower_tight", r.lower_tight},
                   {"upper_tight", r.upper_tight},
                   {"prior_lower", opt(r.prior_lower)},
                   {"prior_upper", opt(r.prior_upper)},
                   {"degenerate", r.degenerate}};
  if (r.group.family() == Family::SemiprimeCyclic) {
    j["p"] = r.group.p();
    j["q"] = r.group.q();
  }
  return j;
}

}  // namespace powerspectra
