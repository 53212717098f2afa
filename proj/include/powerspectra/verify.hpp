#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace powerspectra {

struct InvariantCheck {
  std::string name;
  bool pass = false;
  std::size_t cases = 0;
  std::string detail;  // first failing case, if any
};

/// Runs the library's invariant suite (group arithmetic, builders, spectra,
/// bounds) over every family instance up to `max_order` vertices.
std::vector<InvariantCheck> run_invariant_suite(std::uint32_t max_order = 200);

}  // namespace powerspectra
