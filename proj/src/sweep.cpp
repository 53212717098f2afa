#include "powerspectra/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <ostream>

#include <fmt/format.h>

#include "powerspectra/errors.hpp"

namespace powerspectra {

namespace {

std::uint32_t minimum_n(Family f) {
  switch (f) {
    case Family::Dihedral:
      return 3;
    case Family::Dicyclic:
    case Family::Cyclic:
      return 2;
    case Family::SemiprimeCyclic:
      return 6;
  }
  return 2;
}

std::string csv_number(const std::optional<double>& v) {
  return v ? fmt::format("{:.10g}", *v) : std::string{};
}

}  // namespace

std::vector<GroupSpec> sweep_instances(const SweepSpec& spec) {
  if (spec.first > spec.last) throw DomainError(fmt::format("empty range {}..{}", spec.first, spec.last));
  std::vector<GroupSpec> out;
  if (spec.family == Family::SemiprimeCyclic) {
    for (std::uint32_t p = 2; p * 3 <= spec.last; ++p) {
      if (!is_prime(p)) continue;
      for (std::uint32_t q = p + 1; p * q <= spec.last; ++q) {
        if (is_prime(q) && p * q >= spec.first) out.push_back(GroupSpec::semiprime(p, q));
      }
    }
    std::sort(out.begin(), out.end(), [](const GroupSpec& a, const GroupSpec& b) {
      return a.order() != b.order() ? a.order() < b.order() : a.p() < b.p();
    });
    if (out.empty()) throw DomainError(fmt::format("no semiprime pq in {}..{}", spec.first, spec.last));
    return out;
  }
  // The cyclic adjacency bound starts at n = 3; the distance bound at n = 2.
  std::uint32_t lo = minimum_n(spec.family);
  if (spec.family == Family::Cyclic && spec.kind == BoundKind::AdjacencyRadius) lo = 3;
  if (spec.first < lo) {
    throw DomainError(fmt::format("{} sweep needs n >= {}, got {}", to_string(spec.family), lo, spec.first));
  }
  for (std::uint32_t n = spec.first; n <= spec.last; ++n) {
    switch (spec.family) {
      case Family::Cyclic:
        out.push_back(GroupSpec::cyclic(n));
        break;
      case Family::Dihedral:
        out.push_back(GroupSpec::dihedral(n));
        break;
      case Family::Dicyclic:
        out.push_back(GroupSpec::dicyclic(n));
        break;
      case Family::SemiprimeCyclic:
        break;
    }
  }
  return out;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const Tolerances& tol) {
  const auto instances = sweep_instances(spec);
  for (const auto& g : instances) check_order_guard(g.order());
  std::vector<std::optional<SweepRow>> rows(instances.size());
  std::vector<std::exception_ptr> errors(instances.size());
  const auto count = static_cast<std::int64_t>(instances.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      SweepRow row{bound_report(instances[i], spec.kind, tol), false, {}, {}, {}};
      const auto& r = row.report;
      row.sandwich_ok = sandwich_holds(r, tol.radius_eq);
      row.lower_gap = r.computed_radius - r.lower;
      if (r.upper) row.upper_gap = *r.upper - r.computed_radius;
      if (instances[i].family() == Family::SemiprimeCyclic) row.cubic_error = std::abs(r.lower - r.computed_radius);
      rows[i] = std::move(row);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<SweepRow> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.push_back(std::move(*r));
  return out;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "family,n,p,q,kind,radius,lower,upper,prior_lower,prior_upper,lower_gap,upper_gap,lower_tight,upper_tight,"
         "degenerate,sandwich_ok,cubic_error\n";
  for (const auto& row : rows) {
    const auto& r = row.report;
    const bool semi = r.group.family() == Family::SemiprimeCyclic;
    out << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", to_string(r.group.family()), r.group.n(),
                       semi ? fmt::format("{}", r.group.p()) : "", semi ? fmt::format("{}", r.group.q()) : "",
                       to_string(r.kind), csv_number(r.computed_radius), csv_number(r.lower), csv_number(r.upper),
                       csv_number(r.prior_lower), csv_number(r.prior_upper), csv_number(row.lower_gap),
                       csv_number(row.upper_gap), r.lower_tight, r.upper_tight, r.degenerate, row.sandwich_ok,
                       csv_number(row.cubic_error));
  }
}

nlohmann::json to_json(const std::vector<SweepRow>& rows) {
  auto opt = [](const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : rows) {
    auto j = to_json(row.report);
    j["lower_gap"] = opt(row.lower_gap);
    j["upper_gap"] = opt(row.upper_gap);
    j["sandwich_ok"] = row.sandwich_ok;
    if (row.cubic_error) j["cubic_error"] = *row.cubic_error;
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace powerspectra
