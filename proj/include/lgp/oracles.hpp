#pragma once

#include <cstdint>
#include <vector>

#include "lgp/arith.hpp"
#include "lgp/groups.hpp"

// Independent brute-force reference implementations. None of these share
// code paths with the production algorithms they are compared against.
namespace lgp::oracles {

// Number of simultaneous-conjugacy orbits on G^m by Burnside's lemma:
// (1/|G|) Σ_h |C(h)|^m.
std::uint64_t burnside_uniform_count(const FiniteGroup& g, std::size_t m);

// Whether d is a square in Q_p, by searching for square roots modulo p^k.
bool local_square_search(Int d, const Place& place);

// Whether z² = a x² + b y² has a nontrivial solution over Q_v. At a prime p
// this searches primitive solutions modulo p^3 (p odd) or 2^5 and accepts
// those that lift by Hensel's lemma.
bool hilbert_soluble(Int a, Int b, const Place& place);

// d for κ = Q: the real place plus every prime up to `prime_bound` at which
// none of a, b, ab is a local square.
Int d_kappa_rational(Int a, Int b, Int prime_bound = 1000);

// Invariant factors of ker(N)/I·M by enumerating every element of the module.
std::vector<Int> tate_enumerate(const GModule& mod);

}  // namespace lgp::oracles
