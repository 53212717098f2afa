#include "powerspectra/verify.hpp"

#include <cmath>
#include <exception>
#include <functional>
#include <optional>

#include <fmt/format.h>

#include "powerspectra/bounds.hpp"
#include "powerspectra/powergraph.hpp"
#include "powerspectra/spectra.hpp"

namespace powerspectra {

namespace {

struct Instance {
  GroupSpec group;
  SquareMatrix adj;
  SquareMatrix dist;
  SpectrumResult adj_spec;
  SpectrumResult dist_spec;
  std::optional<BoundReport> adj_report;  // absent for C_2
  std::optional<BoundReport> dist_report;
};

bool has_adjacency_bound(const GroupSpec& g) { return g.family() != Family::Cyclic || g.n() >= 3; }

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

class Suite {
 public:
  void check(std::string name, std::size_t cases, const std::function<std::string(std::size_t)>& failure_at) {
    InvariantCheck c{std::move(name), true, cases, {}};
    for (std::size_t i = 0; i < cases; ++i) {
      std::string why;
      try {
        why = failure_at(i);
      } catch (const std::exception& e) {
        why = fmt::format("exception: {}", e.what());
      }
      if (!why.empty()) {
        c.pass = false;
        c.detail = std::move(why);
        break;
      }
    }
    results_.push_back(std::move(c));
  }
  std::vector<InvariantCheck> take() { return std::move(results_); }

 private:
  std::vector<InvariantCheck> results_;
};

}  // namespace

std::vector<InvariantCheck> run_invariant_suite(std::uint32_t max_order) {
  const auto groups = instances_up_to(max_order);
  std::vector<Instance> inst(groups.size(), Instance{groups.front(), {}, {}, {}, {}, {}, {}});
  const auto count = static_cast<std::int64_t>(groups.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    auto& x = inst[i];
    x.group = groups[i];
    x.adj = build_definitional(groups[i]);
    x.dist = distance_matrix(x.adj);
    x.adj_spec = symmetric_eigenvalues(x.adj);
    x.dist_spec = symmetric_eigenvalues(x.dist);
    if (has_adjacency_bound(x.group)) x.adj_report = bound_report(x.group, BoundKind::AdjacencyRadius);
    x.dist_report = bound_report(x.group, BoundKind::DistanceRadius);
  }

  const auto& tol = kTolerances;
  Suite s;

  s.check("group: element order divides group order", inst.size(), [&](std::size_t i) -> std::string {
    const auto& g = inst[i].group;
    if (g.order() > 64) return {};
    for (std::uint32_t k = 0; k < g.order(); ++k) {
      if (g.order() % elem_order(g, Element{k}) != 0) return fmt::format("{} element {}", g.name(), k);
    }
    return {};
  });
  s.check("group: power equals repeated multiply", inst.size(), [&](std::size_t i) -> std::string {
    const auto& g = inst[i].group;
    if (g.order() > 48) return {};
    for (std::uint32_t k = 0; k < g.order(); ++k) {
      Element acc = g.identity();
      for (std::uint32_t e = 0; e <= g.order(); ++e) {
        if (power(g, Element{k}, e) != acc) return fmt::format("{} element {} exponent {}", g.name(), k, e);
        acc = multiply(g, acc, Element{k});
      }
    }
    return {};
  });
  s.check("group: dicyclic b^2 = a^n and a^2n = e", 11, [&](std::size_t i) -> std::string {
    const auto g = GroupSpec::dicyclic(static_cast<std::uint32_t>(i + 2));
    const auto a = g.rotation(1);
    const auto b = g.reflection(0);
    if (power(g, b, 2) != power(g, a, g.n()) || power(g, a, 2 * g.n()) != g.identity()) return g.name();
    return {};
  });
  s.check("group: dihedral ba = a^{n-1} b", 10, [&](std::size_t i) -> std::string {
    const auto g = GroupSpec::dihedral(static_cast<std::uint32_t>(i + 3));
    const auto a = g.rotation(1);
    const auto b = g.reflection(0);
    if (multiply(g, b, a) != multiply(g, power(g, a, g.n() - 1), b)) return g.name();
    return {};
  });
  s.check("group: phi(p^m) = p^m - p^(m-1)", 12, [&](std::size_t i) -> std::string {
    const std::uint64_t primes[] = {2, 3, 5, 7};
    const std::uint64_t p = primes[i / 3];
    const std::uint32_t m = static_cast<std::uint32_t>(i % 3) + 1;
    std::uint64_t pm = 1;
    for (std::uint32_t k = 0; k < m; ++k) pm *= p;
    if (euler_phi(pm) != pm - pm / p) return fmt::format("{}^{}", p, m);
    return {};
  });

  s.check("powergraph: structural builder equals definitional (order <= 96)", inst.size(),
          [&](std::size_t i) -> std::string {
            const auto& x = inst[i];
            if (x.group.order() > 96) return {};
            return build_structural(x.group) == x.adj ? std::string{} : x.group.name();
          });
  s.check("powergraph: Tr(v) = 2(order - 1) - deg(v)", inst.size(), [&](std::size_t i) -> std::string {
    const auto& x = inst[i];
    const auto n = static_cast<std::int64_t>(x.adj.dim());
    for (std::size_t v = 0; v < x.adj.dim(); ++v) {
      if (x.dist.row_sum(v) != 2 * (n - 1) - x.adj.row_sum(v)) return fmt::format("{} vertex {}", x.group.name(), v);
    }
    return {};
  });
  s.check("powergraph: P(C_n) complete iff n is a prime power", inst.size(), [&](std::size_t i) -> std::string {
    const auto& x = inst[i];
    if (x.group.family() != Family::Cyclic) return {};
    const auto n = static_cast<std::int64_t>(x.adj.dim());
    const bool complete = subset_degree_stats(x.adj, all_vertices(x.adj.dim())).min == Rational(n - 1);
    return complete == prime_power_decompose(x.group.n()).has_value() ? std::string{} : x.group.name();
  });
  s.check("powergraph: identity has degree order - 1", inst.size(), [&](std::size_t i) -> std::string {
    const auto& x = inst[i];
    return x.adj.row_sum(0) == static_cast<std::int64_t>(x.adj.dim()) - 1 ? std::string{} : x.group.name();
  });
  s.check("powergraph: no Z_pq edges between V2 and V3", inst.size(), [&](std::size_t i) -> std::string {
    const auto& x = inst[i];
    if (x.group.family() != Family::SemiprimeCyclic) return {};
    const auto ord = canonical_ordering(x.group);
    for (auto u : ord.block(1)) {
      for (auto v : ord.block(2)) {
        if (x.adj(u, v) != 0) return x.group.name();
      }
    }
    return {};
  });

  s.check("spectra: eigenvalue sum equals trace", inst.size(), [&](std::size_t i) -> std::string {
    const auto& x = inst[i];
    double sa = 0.0;
    double sd = 0.0;
    for (double v : x.adj_spec.eigenvalues) sa += v;
    for (double v : x.dist_spec.eigenvalues) sd += v;
    const double bound = 1e-9 * static_cast<double>(x.adj.dim());
    return std::abs(sa) <= bound && std::abs(sd) <= bound ? std::string{} : x.group.name();
  });
  s.check("spectra: power iteration matches Jacobi", inst.size(), [&](std::size_t i) -> std::string {
    const auto& x = inst[i];
    const double a = spectral_radius_power_iteration(x.adj, tol).radius;
    const double d = spectral_radius_power_iteration(x.dist, tol).radius;
    const double lim = 10 * tol.power;
    if (std::abs(a - x.adj_spec.radius) > lim || std::abs(d - x.dist_spec.radius) > lim) {
      return fmt::format("{}: adjacency {:.3e}, distance {:.3e}", x.group.name(), a - x.adj_spec.radius,
                         d - x.dist_spec.radius);
    }
    return {};
  });
  s.check("spectra: Perron root is simple", inst.size(), [&](std::size_t i) -> std::string {
    const auto& x = inst[i];
    return x.adj_spec.radius_multiplicity == 1 && x.dist_spec.radius_multiplicity == 1 ? std::string{}
                                                                                         : x.group.name();
  });
  s.check("spectra: quotient eigenvalues interlace", inst.size(), [&](std::size_t i) -> std::string {
    const auto& x = inst[i];
    const auto pi = Partition::from_ordering(canonical_ordering(x.group));
    for (const auto* pair : {&x.adj, &x.dist}) {
      const auto& spec = pair == &x.adj ? x.adj_spec : x.dist_spec;
      const auto q = quotient_matrix(*pair, pi);
      if (!interlacing_holds(spec.eigenvalues, quotient_eigenvalues(q), tol.cluster)) return x.group.name();
    }
    return {};
  });
  s.check("spectra: equitable quotient radius equals full radius", inst.size(), [&](std::size_t i) -> std::string {
    const auto& x = inst[i];
    if (x.group.family() != Family::SemiprimeCyclic) return {};
    const auto pi = Partition::from_ordering(canonical_ordering(x.group));
    for (const auto* m : {&x.adj, &x.dist}) {
      if (!is_equitable(*m, pi)) return x.group.name() + " not equitable";
      if (!equitable_radius_equality(*m, pi, tol)) return x.group.name();
    }
    return {};
  });
  s.check("spectra: largest cubic root is a sign change", inst.size(), [&](std::size_t i) -> std::string {
    const auto& x = inst[i];
    if (x.group.family() != Family::SemiprimeCyclic) return {};
    for (const auto& c : {formulas::adjacency_cubic(x.group.p(), x.group.q()),
                          formulas::distance_cubic(x.group.p(), x.group.q())}) {
      const double r = largest_cubic_root(c.c2, c.c1, c.c0);
      auto f = [&](double t) { return ((t + c.c2) * t + c.c1) * t + c.c0; };
      if (f(r - 0.5e-8) * f(r + 0.5e-8) > 0.0) return x.group.name();
    }
    return {};
  });

  s.check("bounds: radius within [lower, upper]", inst.size(), [&](std::size_t i) -> std::string {
    const auto& x = inst[i];
    if (x.adj_report && !sandwich_holds(*x.adj_report, tol.radius_eq)) return x.group.name() + " adjacency";
    if (!sandwich_holds(*x.dist_report, tol.radius_eq)) return x.group.name() + " distance";
    return {};
  });
  s.check("bounds: d_avg lower bound >= d_min lower bound", inst.size(), [&](std::size_t i) -> std::string {
    const auto& x = inst[i];
    if (x.group.family() != Family::Cyclic || !x.adj_report) return {};
    return x.adj_report->lower >= *x.adj_report->prior_lower - 1e-12 ? std::string{} : x.group.name();
  });
  s.check("bounds: cyclic distance bounds tight iff n is a prime power", inst.size(), [&](std::size_t i) -> std::string {
    const auto& x = inst[i];
    if (x.group.family() != Family::Cyclic) return {};
    const bool tight = x.dist_report->lower_tight && x.dist_report->upper_tight;
    return tight == prime_power_decompose(x.group.n()).has_value() ? std::string{} : x.group.name();
  });
  s.check("bounds: Z_pq cubic roots equal the radii", inst.size(), [&](std::size_t i) -> std::string {
    const auto& x = inst[i];
    if (x.group.family() != Family::SemiprimeCyclic) return {};
    const double a = adjacency_cubic_semiprime(x.group.p(), x.group.q()).largest_root;
    const double d = distance_cubic_semiprime(x.group.p(), x.group.q()).largest_root;
    if (std::abs(a - x.adj_spec.radius) > 1e-7 || std::abs(d - x.dist_spec.radius) > 1e-7) return x.group.name();
    return {};
  });
  s.check("bounds: lower bound equals the two-block quotient radius", inst.size(), [&](std::size_t i) -> std::string {
    const auto& x = inst[i];
    if (x.group.family() == Family::SemiprimeCyclic) return {};
    const auto ord = canonical_ordering(x.group);
    if (ord.block_sizes[1] == 0) return {};
    const auto pi = Partition::from_ordering(ord);
    if (x.adj_report && std::abs(x.adj_report->lower - quotient_radius(quotient_matrix(x.adj, pi))) > 1e-9) {
      return x.group.name() + " adjacency";
    }
    if (std::abs(x.dist_report->lower - quotient_radius(quotient_matrix(x.dist, pi))) > 1e-9) {
      return x.group.name() + " distance";
    }
    return {};
  });

  return s.take();
}

}  // namespace powerspectra
