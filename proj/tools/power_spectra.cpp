// Command-line front end: build power graphs, compute spectra, evaluate the
// radius bounds, sweep parameter ranges and replay the worked examples.
//
// Exit codes: 0 success, 2 usage, 3 bound/invariant verification failure,
// 4 I/O failure, 5 example reproduction mismatch.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "powerspectra/bounds.hpp"
#include "powerspectra/errors.hpp"
#include "powerspectra/powergraph.hpp"
#include "powerspectra/reproduce.hpp"
#include "powerspectra/spectra.hpp"
#include "powerspectra/sweep.hpp"
#include "powerspectra/verify.hpp"

namespace ps = powerspectra;

namespace {

enum ExitCode : int { kOk = 0, kUsage = 2, kVerification = 3, kIo = 4, kReproduction = 5 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family;
  std::string n;
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  std::string kind = "adjacency";
  bool distance = false;
  std::string format;
  std::string out;
  std::string input;
  std::uint32_t max_order = 200;
};

struct Range {
  std::uint32_t first;
  std::uint32_t last;
};

std::uint32_t parse_uint(std::string_view s) {
  std::uint32_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw UsageError(fmt::format("not a non-negative integer: '{}'", s));
  return v;
}

Range parse_range(const std::string& text) {
  if (text.empty()) throw UsageError("--n is required");
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_uint(text);
    return {v, v};
  }
  const Range r{parse_uint(std::string_view(text).substr(0, dots)), parse_uint(std::string_view(text).substr(dots + 2))};
  if (r.first > r.last) throw UsageError(fmt::format("empty range {}", text));
  return r;
}

ps::Family family_of(const Options& o) {
  if (o.family.empty()) throw UsageError("--family is required (cyclic, dihedral, dicyclic, semiprime)");
  const auto f = ps::parse_family(o.family);
  if (!f) throw UsageError(fmt::format("unknown family '{}'", o.family));
  return *f;
}

ps::BoundKind kind_of(const Options& o) {
  if (o.distance) return ps::BoundKind::DistanceRadius;
  const auto k = ps::parse_bound_kind(o.kind);
  if (!k) throw UsageError(fmt::format("unknown kind '{}' (adjacency or distance)", o.kind));
  return *k;
}

ps::GroupSpec group_for(ps::Family f, std::uint32_t n, const Options& o) {
  switch (f) {
    case ps::Family::Cyclic:
      return ps::GroupSpec::cyclic(n);
    case ps::Family::Dihedral:
      return ps::GroupSpec::dihedral(n);
    case ps::Family::Dicyclic:
      return ps::GroupSpec::dicyclic(n);
    case ps::Family::SemiprimeCyclic:
      return ps::GroupSpec::semiprime(o.p, o.q);
  }
  throw UsageError("unknown family");
}

ps::GroupSpec single_group(const Options& o) {
  const auto f = family_of(o);
  if (f == ps::Family::SemiprimeCyclic) {
    if (o.p == 0 || o.q == 0) throw UsageError("semiprime needs --p and --q");
    return ps::GroupSpec::semiprime(o.p, o.q);
  }
  const auto r = parse_range(o.n);
  if (r.first != r.last) throw UsageError("this command takes a single --n");
  return group_for(f, r.first, o);
}

// Writes to --out when given, stdout otherwise.
template <typename Fn>
void emit(const Options& o, Fn&& write) {
  if (o.out.empty()) {
    write(std::cout);
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing to stdout");
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw IoError(fmt::format("cannot open '{}' for writing", o.out));
  write(file);
  file.flush();
  if (!file) throw IoError(fmt::format("failed writing '{}'", o.out));
}

int cmd_graph(const Options& o) {
  const auto g = single_group(o);
  ps::check_order_guard(g.order());
  auto m = ps::build_definitional(g);
  if (o.distance) m = ps::distance_matrix(m);
  emit(o, [&](std::ostream& out) { ps::write_matrix(out, m); });
  return kOk;
}

int cmd_spectra(const Options& o) {
  ps::SquareMatrix m;
  if (!o.input.empty()) {
    if (o.input == "-") {
      m = ps::read_matrix(std::cin);
    } else {
      std::ifstream in(o.input);
      if (!in) throw IoError(fmt::format("cannot open '{}'", o.input));
      m = ps::read_matrix(in);
    }
    ps::check_order_guard(m.dim());
  } else {
    const auto g = single_group(o);
    ps::check_order_guard(g.order());
    m = ps::build_definitional(g);
    if (kind_of(o) == ps::BoundKind::DistanceRadius) m = ps::distance_matrix(m);
  }
  const auto s = ps::symmetric_eigenvalues(m);
  emit(o, [&](std::ostream& out) { out << ps::to_json(s).dump() << '\n'; });
  return kOk;
}

std::vector<ps::GroupSpec> bounds_instances(const Options& o, ps::BoundKind kind) {
  const auto f = family_of(o);
  if (f == ps::Family::SemiprimeCyclic && o.n.empty()) return {single_group(o)};
  const auto r = parse_range(o.n);
  return ps::sweep_instances({f, r.first, r.last, kind});
}

int cmd_bounds(const Options& o) {
  const auto kind = kind_of(o);
  const auto instances = bounds_instances(o, kind);
  for (const auto& g : instances) ps::check_order_guard(g.order());
  std::vector<ps::BoundReport> reports;
  for (const auto& g : instances) reports.push_back(ps::bound_report(g, kind));
  emit(o, [&](std::ostream& out) {
    for (const auto& r : reports) out << ps::to_json(r).dump() << '\n';
  });
  int code = kOk;
  for (const auto& r : reports) {
    if (!ps::sandwich_holds(r)) {
      std::cerr << fmt::format("bound verification failed for {} ({}): radius {} outside [{}, {}]\n", r.group.name(),
                               ps::to_string(r.kind), r.computed_radius, r.lower,
                               r.upper ? fmt::format("{}", *r.upper) : "inf");
      code = kVerification;
    }
  }
  return code;
}

int cmd_sweep(const Options& o) {
  const auto f = family_of(o);
  const auto r = parse_range(o.n);
  const ps::SweepSpec spec{f, r.first, r.last, kind_of(o)};
  const auto format = o.format.empty() ? std::string("csv") : o.format;
  if (format != "csv" && format != "json") throw UsageError(fmt::format("unknown format '{}' (csv or json)", format));
  const auto rows = ps::run_sweep(spec);
  emit(o, [&](std::ostream& out) {
    if (format == "csv") {
      ps::write_csv(out, rows);
    } else {
      out << ps::to_json(rows).dump(2) << '\n';
    }
  });
  for (const auto& row : rows) {
    if (!row.sandwich_ok) {
      std::cerr << fmt::format("bound verification failed for {}\n", row.report.group.name());
      return kVerification;
    }
  }
  return kOk;
}

int cmd_reproduce(const Options& o) {
  const auto checks = ps::reproduce_examples(1e-4);
  bool ok = true;
  emit(o, [&](std::ostream& out) {
    for (const auto& c : checks) {
      out << fmt::format("{:<32} expected {:>12.5f}  computed {:>12.5f}  {}\n", c.label, c.expected, c.computed,
                         c.pass ? "PASS" : "FAIL");
      ok = ok && c.pass;
    }
  });
  return ok ? kOk : kReproduction;
}

int cmd_verify(const Options& o) {
  const auto checks = ps::run_invariant_suite(o.max_order);
  bool ok = true;
  emit(o, [&](std::ostream& out) {
    for (const auto& c : checks) {
      out << fmt::format("[{}] {} ({} cases){}\n", c.pass ? "PASS" : "FAIL", c.name, c.cases,
                         c.detail.empty() ? "" : " -- " + c.detail);
      ok = ok && c.pass;
    }
  });
  return ok ? kOk : kVerification;
}

void add_group_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family, "cyclic | dihedral | dicyclic | semiprime");
  cmd->add_option("--n", o.n, "family parameter n, or a range a..b");
  cmd->add_option("--p", o.p, "first prime (semiprime family)");
  cmd->add_option("--q", o.q, "second prime (semiprime family)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power graphs of C_n, D_2n, Q_4n and Z_pq: spectra and spectral-radius bounds"};
  app.require_subcommand(1);
  Options o;

  auto* graph = app.add_subcommand("graph", "write the adjacency (or distance) matrix in text form");
  add_group_flags(graph, o);
  graph->add_flag("--distance", o.distance, "write the distance matrix instead");
  graph->add_option("--out", o.out, "output file (default stdout)");

  auto* spectra = app.add_subcommand("spectra", "eigenvalues of a matrix file or of a generated power graph");
  spectra->add_option("input", o.input, "matrix text file ('-' for stdin)");
  add_group_flags(spectra, o);
  spectra->add_option("--kind", o.kind, "adjacency | distance");
  spectra->add_flag("--distance", o.distance, "same as --kind distance");
  spectra->add_option("--out", o.out, "output file (default stdout)");

  auto* bounds = app.add_subcommand("bounds", "bound reports (JSON lines), verified against the computed radius");
  add_group_flags(bounds, o);
  bounds->add_option("--kind", o.kind, "adjacency | distance");
  bounds->add_flag("--distance", o.distance, "same as --kind distance");
  bounds->add_option("--out", o.out, "output file (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "bound table over a range of n (semiprime: range of pq)");
  add_group_flags(sweep, o);
  sweep->add_option("--kind", o.kind, "adjacency | distance");
  sweep->add_flag("--distance", o.distance, "same as --kind distance");
  sweep->add_option("--format", o.format, "csv | json");
  sweep->add_option("--out", o.out, "output file (default stdout)");

  auto* reproduce = app.add_subcommand("reproduce", "recompute the published worked examples");
  reproduce->add_option("--out", o.out, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("--max-order", o.max_order, "largest group order to include (default 200)");
  verify->add_option("--out", o.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (graph->parsed()) return cmd_graph(o);
    if (spectra->parsed()) return cmd_spectra(o);
    if (bounds->parsed()) return cmd_bounds(o);
    if (sweep->parsed()) return cmd_sweep(o);
    if (reproduce->parsed()) return cmd_reproduce(o);
    if (verify->parsed()) return cmd_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const ps::DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ps::StructureError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kUsage;
}
