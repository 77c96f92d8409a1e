#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lgp/groups.hpp"
#include "lgp/intmat.hpp"

namespace lgp {

using Int = std::int64_t;

bool is_prime(Int n);
// Exponent of prime p in n != 0.
int valuation(Int n, Int p);
// Squarefree part of n != 0, sign kept: 12 -> 3, -8 -> -2.
Int squarefree_part(Int n);
// Distinct primes dividing n != 0, ascending.
std::vector<Int> prime_divisors(Int n);
// Legendre symbol (a|p) for an odd prime p: 0, 1 or -1.
int legendre(Int a, Int p);

/// Element of Q^x / Q^x² as its squarefree integer representative.
class SquareClass {
 public:
  explicit SquareClass(Int n);  // reduces to the squarefree part; n != 0
  Int value() const noexcept { return value_; }
  SquareClass operator*(const SquareClass& o) const;
  bool operator==(const SquareClass&) const = default;
  auto operator<=>(const SquareClass&) const = default;

 private:
  Int value_;
};

/// A place of Q: the real place or a prime.
class Place {
 public:
  static Place infinity() { return Place(0); }
  static Place prime(Int p);  // throws InvalidArgument unless p is prime
  // "inf" / "infinity" / a prime number.
  static Place parse(const std::string& s);

  bool is_infinite() const noexcept { return p_ == 0; }
  Int p() const noexcept { return p_; }
  std::string to_string() const;
  bool operator==(const Place&) const = default;

 private:
  explicit Place(Int p) : p_(p) {}
  Int p_;
};

// d is a square in Q_v.
bool is_square_local(Int d, const Place& place);

// (a, b)_v = +1 iff z² = a x² + b y² has a nontrivial solution over Q_v.
int hilbert_symbol(Int a, Int b, const Place& place);

// The places where (a, b)_v can be -1: infinity, 2, and odd primes dividing ab.
std::vector<Place> hilbert_places(Int a, Int b);

bool quaternion_is_split_Q(Int a, Int b);

/// Subgroup of Q^x/Q^x² generated by a list of square classes; an
/// elementary abelian 2-group dual to Gal(M/Q) for the multiquadratic
/// field M = Q(√g : g in generators).
class MultiquadraticContext {
 public:
  explicit MultiquadraticContext(const std::vector<Int>& generators);

  const std::vector<SquareClass>& generators() const noexcept { return gens_; }
  // Sorted ascending by value.
  const std::vector<SquareClass>& elements() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  std::size_t rank() const noexcept;
  bool contains(const SquareClass& s) const;

  // Subgroup generated by some square classes (need not be in this group).
  static std::vector<SquareClass> span(const std::vector<SquareClass>& gens);

 private:
  std::vector<SquareClass> gens_;
  std::vector<SquareClass> elems_;
};

// Classes that are local squares at the place: the characters trivial on the
// decomposition group.
std::vector<SquareClass> decomposition_char_group(const MultiquadraticContext& ctx, const Place& place);

// Number of places of κ = Q(√kappa_gens) with a unique place of L = κ(√a, √b)
// above them. Throws DegenerateExtension unless [L:κ] = 4.
Int d_kappa(const std::vector<Int>& kappa_gens, Int a, Int b);

// Invariant factors of (Z/2)^(d-1).
std::vector<Int> torus_r_group(Int d);

/// Finite module ∏ Z/n_i with a group acting by integer matrices that are
/// well defined modulo the orders.
struct GModule {
  std::vector<Int> orders;
  GroupRef group;
  std::vector<intmat::Matrix> action;  // one matrix per group element

  Status validate() const;
  std::uint64_t module_order(std::uint64_t bound) const;  // StateBoundExceeded past bound
};

// Module for the cyclic group generated by one matrix.
GModule cyclic_gmodule(std::vector<Int> orders, const intmat::Matrix& sigma);
// Trivial action of `group` on ∏ Z/n_i.
GModule trivial_gmodule(std::vector<Int> orders, GroupRef group);

// Invariant factors of ker(N) / I·M with N the norm element and I·M generated
// by σx - x. Empty for the trivial group.
std::vector<Int> tate_h_minus_1(const GModule& mod, std::uint64_t max_states = kDefaultMaxStates);

}  // namespace lgp
