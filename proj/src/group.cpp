#include "powerspectra/group.hpp"

#include <numeric>

#include <fmt/format.h>

#include "powerspectra/errors.hpp"

namespace powerspectra {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Cyclic:
      return "cyclic";
    case Family::Dihedral:
      return "dihedral";
    case Family::Dicyclic:
      return "dicyclic";
    case Family::SemiprimeCyclic:
      return "semiprime";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "cyclic") return Family::Cyclic;
  if (name == "dihedral") return Family::Dihedral;
  if (name == "dicyclic") return Family::Dicyclic;
  if (name == "semiprime") return Family::SemiprimeCyclic;
  return std::nullopt;
}

GroupSpec GroupSpec::cyclic(std::uint32_t n) {
  if (n < 2) throw DomainError(fmt::format("cyclic group needs n >= 2, got {}", n));
  return GroupSpec(Family::Cyclic, n, 0, 0);
}

GroupSpec GroupSpec::dihedral(std::uint32_t n) {
  if (n < 3) throw DomainError(fmt::format("dihedral group D_2n needs n >= 3, got {}", n));
  return GroupSpec(Family::Dihedral, n, 0, 0);
}

GroupSpec GroupSpec::dicyclic(std::uint32_t n) {
  if (n < 2) throw DomainError(fmt::format("dicyclic group Q_4n needs n >= 2, got {}", n));
  return GroupSpec(Family::Dicyclic, n, 0, 0);
}

GroupSpec GroupSpec::semiprime(std::uint32_t p, std::uint32_t q) {
  if (!is_prime(p) || !is_prime(q)) {
    throw DomainError(fmt::format("Z_pq needs prime p and q, got p={} q={}", p, q));
  }
  if (p == q) throw DomainError(fmt::format("Z_pq needs p != q, got p=q={}", p));
  return GroupSpec(Family::SemiprimeCyclic, p * q, p, q);
}

std::uint32_t GroupSpec::order() const {
  switch (family_) {
    case Family::Dihedral:
      return 2 * n_;
    case Family::Dicyclic:
      return 4 * n_;
    default:
      return n_;
  }
}

std::uint32_t GroupSpec::rotation_order() const {
  return family_ == Family::Dicyclic ? 2 * n_ : n_;
}

Element GroupSpec::rotation(std::uint64_t i) const {
  return Element{static_cast<std::uint32_t>(i % rotation_order())};
}

Element GroupSpec::reflection(std::uint64_t i) const {
  if (family_ != Family::Dihedral && family_ != Family::Dicyclic) {
    throw DomainError(fmt::format("{} has no element a^i b", name()));
  }
  const auto r = rotation_order();
  return Element{static_cast<std::uint32_t>(r + i % r)};
}

std::string GroupSpec::name() const {
  switch (family_) {
    case Family::Cyclic:
      return fmt::format("C_{}", n_);
    case Family::Dihedral:
      return fmt::format("D_{}", 2 * n_);
    case Family::Dicyclic:
      return fmt::format("Q_{}", 4 * n_);
    case Family::SemiprimeCyclic:
      return fmt::format("Z_{}", n_);
  }
  return "?";
}

std::string GroupSpec::element_name(Element e) const {
  check_element(*this, e);
  const auto r = rotation_order();
  const auto i = e.index % r;
  std::string rot = i == 0 ? "" : (i == 1 ? "a" : fmt::format("a^{}", i));
  if (e.index < r) return rot.empty() ? "e" : rot;
  return rot + "b";
}

void check_element(const GroupSpec& g, Element a) {
  if (a.index >= g.order()) {
    throw InvalidElementError(
        fmt::format("element index {} out of range for {} (order {})", a.index, g.name(), g.order()));
  }
}

Element multiply(const GroupSpec& g, Element a, Element b) {
  check_element(g, a);
  check_element(g, b);
  const std::uint32_t r = g.rotation_order();
  switch (g.family()) {
    case Family::Cyclic:
    case Family::SemiprimeCyclic:
      return Element{(a.index + b.index) % r};
    case Family::Dihedral:
    case Family::Dicyclic: {
      // Normal form a^i b^s with s in {0,1}; b a^j = a^{-j} b, and b^2 = e
      // (dihedral) or b^2 = a^n (dicyclic).
      const bool a_ref = a.index >= r;
      const bool b_ref = b.index >= r;
      const std::uint32_t i = a.index % r;
      const std::uint32_t j = b.index % r;
      if (!a_ref && !b_ref) return Element{(i + j) % r};
      if (!a_ref && b_ref) return Element{r + (i + j) % r};
      if (a_ref && !b_ref) return Element{r + (i + r - j) % r};
      const std::uint32_t b_squared = g.family() == Family::Dicyclic ? g.n() : 0;
      return Element{(i + r - j + b_squared) % r};
    }
  }
  return Element{};
}

Element power(const GroupSpec& g, Element a, std::uint64_t k) {
  check_element(g, a);
  Element result = g.identity();
  Element base = a;
  while (k > 0) {
    if (k & 1U) result = multiply(g, result, base);
    base = multiply(g, base, base);
    k >>= 1U;
  }
  return result;
}

Element inverse(const GroupSpec& g, Element a) {
  return power(g, a, elem_order(g, a) - 1);
}

std::uint32_t elem_order(const GroupSpec& g, Element a) {
  check_element(g, a);
  std::uint32_t k = 1;
  Element x = a;
  while (x != g.identity()) {
    x = multiply(g, x, a);
    ++k;
  }
  return k;
}

std::vector<Element> cyclic_subgroup(const GroupSpec& g, Element a) {
  check_element(g, a);
  std::vector<Element> out;
  Element x = a;
  out.push_back(x);
  while (x != g.identity()) {
    x = multiply(g, x, a);
    out.push_back(x);
  }
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("cannot factorize 0");
  std::vector<PrimePower> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    PrimePower pp{d, 0};
    while (n % d == 0) {
      n /= d;
      ++pp.m;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw DomainError("euler_phi is undefined for 0");
  std::uint64_t phi = n;
  for (const auto& [p, m] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

std::vector<Element> cyclic_generators(std::uint32_t n) {
  if (n < 2) throw DomainError(fmt::format("cyclic_generators needs n >= 2, got {}", n));
  std::vector<Element> out;
  for (std::uint32_t k = 1; k < n; ++k) {
    if (std::gcd(k, n) == 1) out.push_back(Element{k});
  }
  return out;
}

std::optional<PrimePower> prime_power_decompose(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  const auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

}  // namespace powerspectra
