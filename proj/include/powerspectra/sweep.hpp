#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "json.hpp"
#include "powerspectra/bounds.hpp"

namespace powerspectra {

/// A range of instances of one family. For the semiprime family the range
/// applies to the group order pq.
struct SweepSpec {
  Family family = Family::Cyclic;
  std::uint32_t first = 0;
  std::uint32_t last = 0;
  BoundKind kind = BoundKind::AdjacencyRadius;
};

struct SweepRow {
  BoundReport report;
  bool sandwich_ok = false;
  std::optional<double> lower_gap;  // radius - lower
  std::optional<double> upper_gap;  // upper - radius
  std::optional<double> cubic_error;
};

/// Instances covered by `spec`, in increasing parameter order (semiprime:
/// increasing pq, then p). Throws DomainError on an empty or invalid range.
std::vector<GroupSpec> sweep_instances(const SweepSpec& spec);

/// Evaluates every instance, in parallel. Rows come back in instance order.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, const Tolerances& tol = kTolerances);

/// CSV with a header row; '.' decimals, 10 significant digits, empty cells for
/// absent values.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
nlohmann::json to_json(const std::vector<SweepRow>& rows);

}  // namespace powerspectra
