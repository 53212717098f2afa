#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace powerspectra {

enum class Family { Cyclic, Dihedral, Dicyclic, SemiprimeCyclic };

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

/// A group element, identified by its index under the family's encoding:
///  - Cyclic / SemiprimeCyclic: k stands for a^k.
///  - Dihedral (rotation order n): i < n is a^i, n + i is a^i b.
///  - Dicyclic (rotation order 2n): i < 2n is a^i, 2n + i is a^i b.
struct Element {
  std::uint32_t index = 0;

  friend bool operator==(Element, Element) = default;
  friend auto operator<=>(Element, Element) = default;
};

/// Validated description of one member of the four supported families.
class GroupSpec {
 public:
  static GroupSpec cyclic(std::uint32_t n);
  static GroupSpec dihedral(std::uint32_t n);
  static GroupSpec dicyclic(std::uint32_t n);
  static GroupSpec semiprime(std::uint32_t p, std::uint32_t q);

  Family family() const { return family_; }
  /// Family parameter: n for C_n, D_2n and Q_4n; p*q for Z_pq.
  std::uint32_t n() const { return n_; }
  std::uint32_t p() const { return p_; }
  std::uint32_t q() const { return q_; }

  std::uint32_t order() const;
  /// Order of the rotation subgroup <a>: n, n, 2n, pq.
  std::uint32_t rotation_order() const;

  Element identity() const { return Element{0}; }
  /// a^i (reduced modulo the rotation order).
  Element rotation(std::uint64_t i) const;
  /// a^i b; only meaningful for Dihedral and Dicyclic.
  Element reflection(std::uint64_t i) const;
  bool is_rotation(Element e) const { return e.index < rotation_order(); }

  /// Human-readable name such as "D_12" or "Z_15".
  std::string name() const;
  std::string element_name(Element e) const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  GroupSpec(Family f, std::uint32_t n, std::uint32_t p, std::uint32_t q)
      : family_(f), n_(n), p_(p), q_(q) {}

  Family family_;
  std::uint32_t n_;
  std::uint32_t p_;
  std::uint32_t q_;
};

/// Throws InvalidElementError when `a` is not an element of `g`.
void check_element(const GroupSpec& g, Element a);

Element multiply(const GroupSpec& g, Element a, Element b);
/// a^k by square-and-multiply; power(a, 0) is the identity.
Element power(const GroupSpec& g, Element a, std::uint64_t k);
Element inverse(const GroupSpec& g, Element a);
std::uint32_t elem_order(const GroupSpec& g, Element a);

/// Elements of the cyclic subgroup <a>, in the order a, a^2, ..., e.
std::vector<Element> cyclic_subgroup(const GroupSpec& g, Element a);

// Number theory helpers (trial division; parameters are small).

struct PrimePower {
  std::uint64_t p;
  std::uint32_t m;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

bool is_prime(std::uint64_t n);
/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<PrimePower> factorize(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
/// Generators of C_n: all k in [1, n) coprime to n (k = 1 for n = 1 excluded).
std::vector<Element> cyclic_generators(std::uint32_t n);
std::optional<PrimePower> prime_power_decompose(std::uint64_t n);

}  // namespace powerspectra
