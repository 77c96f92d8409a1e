#include "lgp/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace lgp {

namespace {

void require_nonzero(Int n, const char* what) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be nonzero");
}

Int mod_pow(Int base, Int exp, Int m) {
  __int128 result = 1, b = ((base % m) + m) % m;
  while (exp > 0) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<Int>(result);
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::InvalidArgument, "integer overflow");
  return r;
}

}  // namespace

bool is_prime(Int n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Int d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

int valuation(Int n, Int p) {
  require_nonzero(n, "valuation argument");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

Int squarefree_part(Int n) {
  require_nonzero(n, "square class representative");
  const Int sign = n < 0 ? -1 : 1;
  Int m = n < 0 ? -n : n;
  Int out = 1;
  for (Int d = 2; d <= m / d; ++d) {
    int e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    if (e % 2 == 1) out *= d;
  }
  return sign * out * m;
}

std::vector<Int> prime_divisors(Int n) {
  require_nonzero(n, "factored integer");
  Int m = n < 0 ? -n : n;
  std::vector<Int> out;
  for (Int d = 2; d <= m / d; ++d) {
    if (m % d != 0) continue;
    out.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) out.push_back(m);
  return out;
}

int legendre(Int a, Int p) {
  const Int r = ((a % p) + p) % p;
  if (r == 0) return 0;
  return mod_pow(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

// ---- SquareClass / Place ----------------------------------------------------------

SquareClass::SquareClass(Int n) : value_(squarefree_part(n)) {}

SquareClass SquareClass::operator*(const SquareClass& o) const {
  // Both sides squarefree: the square part of the product is gcd².
  const Int g = std::gcd(value_, o.value_);
  return SquareClass(checked_mul(value_ / g, o.value_ / g));
}

Place Place::prime(Int p) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not a prime");
  return Place(p);
}

Place Place::parse(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "oo") return infinity();
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used == s.size()) return prime(v);
  } catch (const std::logic_error&) {
  }
  throw Error(ErrorCode::InvalidArgument, "place must be 'inf' or a prime, got '" + s + "'");
}

std::string Place::to_string() const { return is_infinite() ? "inf" : std::to_string(p_); }

// ---- local squares and Hilbert symbols -------------------------------------------

bool is_square_local(Int d, const Place& place) {
  require_nonzero(d, "square test argument");
  if (place.is_infinite()) return d > 0;
  const Int p = place.p();
  const int v = valuation(d, p);
  if (v % 2 != 0) return false;
  Int u = d;
  for (int i = 0; i < v; ++i) u /= p;
  if (p == 2) return ((u % 8) + 8) % 8 == 1;
  return legendre(u, p) == 1;
}

int hilbert_symbol(Int a, Int b, const Place& place) {
  require_nonzero(a, "a");
  require_nonzero(b, "b");
  if (place.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;
  const Int p = place.p();
  const int alpha = valuation(a, p), beta = valuation(b, p);
  Int u = a, v = b;
  for (int i = 0; i < alpha; ++i) u /= p;
  for (int i = 0; i < beta; ++i) v /= p;
  if (p != 2) {
    const int eps = static_cast<int>(((p - 1) / 2) % 2);
    int s = ((alpha * beta * eps) % 2 == 0) ? 1 : -1;
    if (beta % 2 == 1) s *= legendre(u, p);
    if (alpha % 2 == 1) s *= legendre(v, p);
    return s;
  }
  const auto eps2 = [](Int x) { return static_cast<int>((((x % 8) + 8) % 8 - 1) / 2 % 2); };
  const auto omega2 = [](Int x) {
    const Int r = ((x % 8) + 8) % 8;
    return static_cast<int>((r * r - 1) / 8 % 2);
  };
  const int e = eps2(u) * eps2(v) + alpha * omega2(v) + beta * omega2(u);
  return e % 2 == 0 ? 1 : -1;
}

std::vector<Place> hilbert_places(Int a, Int b) {
  require_nonzero(a, "a");
  require_nonzero(b, "b");
  std::set<Int> primes{2};
  for (Int p : prime_divisors(a)) primes.insert(p);
  for (Int p : prime_divisors(b)) primes.insert(p);
  std::vector<Place> out{Place::infinity()};
  for (Int p : primes) out.push_back(Place::prime(p));
  return out;
}

bool quaternion_is_split_Q(Int a, Int b) {
  for (const auto& v : hilbert_places(a, b))
    if (hilbert_symbol(a, b, v) != 1) return false;
  return true;
}

// ---- multiquadratic fields ---------------------------------------------------------

std::vector<SquareClass> MultiquadraticContext::span(const std::vector<SquareClass>& gens) {
  std::vector<SquareClass> elems{SquareClass(1)};
  for (const auto& g : gens) {
    if (std::find(elems.begin(), elems.end(), g) != elems.end()) continue;
    const std::size_t n = elems.size();
    for (std::size_t i = 0; i < n; ++i) elems.push_back(elems[i] * g);
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

MultiquadraticContext::MultiquadraticContext(const std::vector<Int>& generators) {
  for (Int g : generators) gens_.emplace_back(g);
  elems_ = span(gens_);
}

std::size_t MultiquadraticContext::rank() const noexcept {
  std::size_t r = 0;
  while ((std::size_t{1} << r) < elems_.size()) ++r;
  return r;
}

bool MultiquadraticContext::contains(const SquareClass& s) const {
  return std::binary_search(elems_.begin(), elems_.end(), s);
}

std::vector<SquareClass> decomposition_char_group(const MultiquadraticContext& ctx, const Place& place) {
  std::vector<SquareClass> out;
  for (const auto& d : ctx.elements())
    if (is_square_local(d.value(), place)) out.push_back(d);
  return out;
}

Int d_kappa(const std::vector<Int>& kappa_gens, Int a, Int b) {
  require_nonzero(a, "a");
  require_nonzero(b, "b");
  for (Int g : kappa_gens) require_nonzero(g, "kappa generator");

  std::vector<SquareClass> kgens;
  for (Int g : kappa_gens) kgens.emplace_back(g);
  // Characters of Gal(M/Q) trivial on H = Gal(M/κ).
  const auto kappa_classes = MultiquadraticContext::span(kgens);
  auto in_kappa = [&](const SquareClass& s) {
    return std::binary_search(kappa_classes.begin(), kappa_classes.end(), s);
  };
  const SquareClass sa(a), sb(b);
  for (const auto& s : {sa, sb, sa * sb})
    if (in_kappa(s))
      throw Error(ErrorCode::DegenerateExtension, "[L:kappa] < 4: the class of " + std::to_string(s.value()) +
                                                      " already lies in kappa");

  std::vector<Int> all = kappa_gens;
  all.push_back(a);
  all.push_back(b);
  const MultiquadraticContext ctx(all);

  // The places of κ over p have decomposition group D_p ∩ H in Gal(L/κ), so
  // L has a unique place over each of them iff H ⊆ D_p, i.e. D_p^⊥ ⊆ H^⊥;
  // there are then [Gal(M/Q) : D_p] of them. Unramified decomposition groups
  // are cyclic and the real one has order ≤ 2, so they never contain
  // H ≅ (Z/2)²: only 2, the odd ramified primes, and (harmlessly) the real
  // place need scanning.
  std::set<Int> primes{2};
  for (Int g : all)
    for (Int p : prime_divisors(g))
      if (p != 2) primes.insert(p);
  std::vector<Place> candidates{Place::infinity()};
  for (Int p : primes) candidates.push_back(Place::prime(p));

  Int d = 0;
  for (const auto& place : candidates) {
    const auto annihilator = decomposition_char_group(ctx, place);
    if (!std::all_of(annihilator.begin(), annihilator.end(), in_kappa)) continue;
    const auto decomposition_order = static_cast<Int>(ctx.size() / annihilator.size());
    d += static_cast<Int>(ctx.size()) / decomposition_order;
  }
  return d;
}

std::vector<Int> torus_r_group(Int d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "d must be positive");
  return std::vector<Int>(static_cast<std::size_t>(d - 1), 2);
}

// ---- G-modules and Tate cohomology --------------------------------------------------

namespace {

using intmat::Matrix;

Matrix reduce_rows(Matrix m, const std::vector<Int>& orders) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (auto& x : m[i]) x = ((x % orders[i]) + orders[i]) % orders[i];
  return m;
}

bool is_well_defined(const Matrix& m, const std::vector<Int>& orders) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if ((static_cast<__int128>(m[i][j]) * orders[j]) % orders[i] != 0) return false;
  return true;
}

}  // namespace

Status GModule::validate() const {
  auto fail = [](std::string w) { return Status::fail(ErrorCode::InvalidModule, std::move(w)); };
  if (!group) return fail("module has no acting group");
  const std::size_t r = orders.size();
  for (Int n : orders)
    if (n < 1) return fail("cyclic factor of order " + std::to_string(n));
  if (action.size() != group->order())
    return fail("expected " + std::to_string(group->order()) + " action matrices, got " + std::to_string(action.size()));
  std::vector<Matrix> reduced;
  for (std::size_t s = 0; s < action.size(); ++s) {
    const auto& m = action[s];
    if (m.size() != r || std::any_of(m.begin(), m.end(), [r](const auto& row) { return row.size() != r; }))
      return fail("action matrix " + std::to_string(s) + " is not " + std::to_string(r) + "x" + std::to_string(r));
    if (!is_well_defined(m, orders))
      return fail("action matrix " + std::to_string(s) + " is not well defined modulo the orders");
    reduced.push_back(reduce_rows(m, orders));
  }
  if (reduced[group->identity()] != reduce_rows(intmat::identity(r), orders))
    return fail("the identity element does not act trivially");
  for (Element x = 0; x < group->order(); ++x)
    for (Element y = 0; y < group->order(); ++y)
      if (reduce_rows(intmat::multiply(reduced[x], reduced[y]), orders) != reduced[group->mul(x, y)])
        return fail("action of " + std::to_string(x) + "*" + std::to_string(y) + " is not the product of the actions");
  return Status::ok();
}

std::uint64_t GModule::module_order(std::uint64_t bound) const {
  std::uint64_t total = 1;
  for (Int n : orders) {
    if (total > bound / static_cast<std::uint64_t>(n))
      throw Error(ErrorCode::StateBoundExceeded, "module order exceeds the bound " + std::to_string(bound));
    total *= static_cast<std::uint64_t>(n);
  }
  return total;
}

GModule cyclic_gmodule(std::vector<Int> orders, const intmat::Matrix& sigma) {
  const std::size_t r = orders.size();
  for (Int n : orders)
    if (n < 1) throw Error(ErrorCode::InvalidModule, "cyclic factor of order " + std::to_string(n));
  if (sigma.size() != r || std::any_of(sigma.begin(), sigma.end(), [r](const auto& row) { return row.size() != r; }))
    throw Error(ErrorCode::InvalidModule, "sigma must be " + std::to_string(r) + "x" + std::to_string(r));
  if (!is_well_defined(sigma, orders))
    throw Error(ErrorCode::InvalidModule, "sigma is not well defined modulo the orders");
  const Matrix id = reduce_rows(intmat::identity(r), orders);
  const Matrix s = reduce_rows(sigma, orders);
  std::vector<Matrix> powers{id};
  std::set<Matrix> seen{id};
  Matrix cur = s;
  constexpr std::size_t kMaxOrder = 100'000;
  while (cur != id) {
    // A repeat that is not the identity means sigma is not invertible.
    if (!seen.insert(cur).second) throw Error(ErrorCode::InvalidModule, "sigma is not invertible modulo the orders");
    if (powers.size() >= kMaxOrder) throw Error(ErrorCode::InvalidModule, "sigma has order above 100000");
    powers.push_back(cur);
    cur = reduce_rows(intmat::multiply(cur, s), orders);
  }
  GModule mod;
  mod.group = make_group(cyclic_group(powers.size()));
  mod.orders = std::move(orders);
  mod.action = std::move(powers);
  return mod;
}

GModule trivial_gmodule(std::vector<Int> orders, GroupRef group) {
  GModule mod;
  mod.action.assign(group->order(), intmat::identity(orders.size()));
  mod.orders = std::move(orders);
  mod.group = std::move(group);
  return mod;
}

std::vector<Int> tate_h_minus_1(const GModule& mod, std::uint64_t max_states) {
  mod.validate().check();
  mod.module_order(max_states);
  const std::size_t r = mod.orders.size();
  if (r == 0) return {};

  std::vector<Matrix> act;
  for (const auto& m : mod.action) act.push_back(reduce_rows(m, mod.orders));
  Matrix norm = intmat::zeros(r, r);
  for (const auto& m : act)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) norm[i][j] += m[i][j];
  norm = reduce_rows(norm, mod.orders);

  // ker N = {x : N x ∈ D Z^r}: project the integer kernel of [N | D].
  Matrix nd = intmat::zeros(r, 2 * r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) nd[i][j] = norm[i][j];
    nd[i][r + i] = mod.orders[i];
  }
  const Matrix ker = intmat::kernel(nd);
  Matrix kgens = intmat::zeros(r, ker.empty() ? 0 : ker[0].size());
  for (std::size_t i = 0; i < r; ++i) kgens[i] = ker[i];
  const auto kech = intmat::column_echelon(kgens);
  if (kech.rank != r) throw Error(ErrorCode::Mismatch, "kernel lattice is not of full rank");

  // Generators of the augmentation submodule, plus the relations D.
  std::vector<std::vector<Int>> igens;
  for (const auto& m : act)
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<Int> col(r);
      for (std::size_t i = 0; i < r; ++i) col[i] = m[i][j] - (i == j ? 1 : 0);
      igens.push_back(std::move(col));
    }
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<Int> col(r, 0);
    col[j] = mod.orders[j];
    igens.push_back(std::move(col));
  }

  // Coordinates of each generator in the (lower triangular) kernel basis.
  Matrix coords = intmat::zeros(r, igens.size());
  for (std::size_t c = 0; c < igens.size(); ++c) {
    for (std::size_t i = 0; i < r; ++i) {
      Int acc = igens[c][i];
      for (std::size_t j = 0; j < i; ++j) acc = intmat::add(acc, intmat::mul(-kech.h[i][j], coords[j][c]));
      const Int piv = kech.h[i][i];
      if (acc % piv != 0) throw Error(ErrorCode::Mismatch, "augmentation submodule is not inside the norm kernel");
      coords[i][c] = acc / piv;
    }
  }
  std::vector<Int> out;
  for (Int d : intmat::smith_diagonal(coords)) {
    if (d == 0) throw Error(ErrorCode::Mismatch, "quotient is infinite");
    if (d > 1) out.push_back(d);
  }
  return out;
}

}  // namespace lgp
