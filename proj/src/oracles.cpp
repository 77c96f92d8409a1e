#include "lgp/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#include "lgp/error.hpp"

namespace lgp::oracles {

std::uint64_t burnside_uniform_count(const FiniteGroup& g, std::size_t m) {
  std::uint64_t total = 0;
  for (Element h = 0; h < g.order(); ++h) {
    std::uint64_t c = 0;
    for (Element x = 0; x < g.order(); ++x)
      if (g.mul(h, x) == g.mul(x, h)) ++c;
    std::uint64_t term = 1;
    for (std::size_t i = 0; i < m; ++i) term *= c;
    total += term;
  }
  return total / g.order();
}

namespace {

Int ipow(Int b, int e) {
  Int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Int mod(Int a, Int m) {
  const Int r = a % m;
  return r < 0 ? r + m : r;
}

int val(Int n, Int p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

Int strip_squares(Int n) {
  const Int sign = n < 0 ? -1 : 1;
  Int m = std::llabs(n), out = 1;
  for (Int p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  return sign * out * m;
}

}  // namespace

bool local_square_search(Int d, const Place& place) {
  if (place.is_infinite()) return d > 0;
  const Int p = place.p();
  const int v = val(d, p);
  if (v % 2) return false;
  const Int u = d / ipow(p, v);
  // A unit is a p-adic square iff it is a square modulo p (odd) or 8.
  const Int q = p == 2 ? 8 : p;
  for (Int x = 0; x < q; ++x)
    if (mod(x * x - u, q) == 0) return true;
  return false;
}

bool hilbert_soluble(Int a, Int b, const Place& place) {
  if (place.is_infinite()) return a > 0 || b > 0;
  const Int p = place.p();
  a = strip_squares(a);
  b = strip_squares(b);
  const int k = p == 2 ? 5 : 3;
  const Int q = ipow(p, k);
  auto v_mod = [&](Int x) {
    x = mod(x, q);
    return x == 0 ? k : val(x, p);
  };
  // Least valuation of a square root of each residue, or -1.
  std::vector<int> root_val(static_cast<std::size_t>(q), -1);
  for (Int z = 0; z < q; ++z) {
    auto& slot = root_val[static_cast<std::size_t>(mod(z * z, q))];
    const int vz = v_mod(z);
    if (slot < 0 || vz < slot) slot = vz;
  }
  // F = z² - a x² - b y²; a zero mod p^(2e+1) with e = least valuation of a
  // partial derivative lifts to Z_p.
  auto liftable = [&](Int x, Int y) {
    const int vz = root_val[static_cast<std::size_t>(mod(a * x * x + b * y * y, q))];
    if (vz < 0) return false;
    const int two = p == 2 ? 1 : 0;
    const int e = std::min({vz + two, v_mod(a * x) + two, v_mod(b * y) + two});
    return 2 * e + 1 <= k;
  };
  // Primitive solutions have x or y a unit (if both are divisible by p then
  // so is z), so scale that coordinate to 1.
  for (Int y = 0; y < q; ++y)
    if (liftable(1, y)) return true;
  for (Int x = 0; x < q; x += p)
    if (liftable(x, 1)) return true;
  return false;
}

Int d_kappa_rational(Int a, Int b, Int prime_bound) {
  auto nonsplit = [&](const Place& v) {
    return !local_square_search(a, v) && !local_square_search(b, v) && !local_square_search(a * b, v);
  };
  Int d = nonsplit(Place::infinity()) ? 1 : 0;
  for (Int p = 2; p <= prime_bound; ++p) {
    bool prime = true;
    for (Int f = 2; f * f <= p; ++f)
      if (p % f == 0) prime = false;
    if (prime && nonsplit(Place::prime(p))) ++d;
  }
  return d;
}

std::vector<Int> tate_enumerate(const GModule& module) {
  module.validate().check();
  const std::size_t r = module.orders.size();
  const std::uint64_t size = module.module_order(10'000'000);
  using Vec = std::vector<Int>;
  auto decode = [&](std::uint64_t code) {
    Vec x(r);
    for (std::size_t i = r; i-- > 0;) {
      x[i] = static_cast<Int>(code % static_cast<std::uint64_t>(module.orders[i]));
      code /= static_cast<std::uint64_t>(module.orders[i]);
    }
    return x;
  };
  auto encode = [&](const Vec& x) {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < r; ++i)
      code = code * static_cast<std::uint64_t>(module.orders[i]) + static_cast<std::uint64_t>(mod(x[i], module.orders[i]));
    return code;
  };
  auto apply = [&](const intmat::Matrix& m, const Vec& x) {
    Vec y(r, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) y[i] = mod(y[i] + mod(m[i][j], module.orders[i]) * x[j], module.orders[i]);
    return y;
  };
  auto add = [&](std::uint64_t c1, std::uint64_t c2) {
    Vec x = decode(c1), y = decode(c2);
    for (std::size_t i = 0; i < r; ++i) x[i] += y[i];
    return encode(x);
  };

  std::vector<char> in_kernel(size, 0);
  for (std::uint64_t c = 0; c < size; ++c) {
    const Vec x = decode(c);
    Vec n(r, 0);
    for (const auto& m : module.action) {
      const Vec y = apply(m, x);
      for (std::size_t i = 0; i < r; ++i) n[i] += y[i];
    }
    in_kernel[c] = encode(n) == 0;
  }

  // I·M is the subgroup generated by σx - x; since x -> σx - x is additive,
  // the images of the standard generators suffice.
  std::vector<char> in_aug(size, 0);
  std::vector<std::uint64_t> gens;
  for (std::size_t j = 0; j < r; ++j) {
    Vec e(r, 0);
    e[j] = 1;
    for (const auto& m : module.action) {
      Vec y = apply(m, e);
      y[j] -= 1;
      gens.push_back(encode(y));
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<std::uint64_t> members{0};
  in_aug[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::uint64_t g : gens) {
      const std::uint64_t s = add(members[i], g);
      if (!in_aug[s]) {
        in_aug[s] = 1;
        members.push_back(s);
      }
    }
  for (std::uint64_t c : members)
    if (!in_kernel[c]) throw Error(ErrorCode::Mismatch, "augmentation element outside the norm kernel");

  // Coset labels of ker N / I·M.
  std::vector<std::int64_t> label(size, -1);
  std::vector<std::uint64_t> coset_rep;
  for (std::uint64_t c = 0; c < size; ++c) {
    if (!in_kernel[c] || label[c] >= 0) continue;
    const auto id = static_cast<std::int64_t>(coset_rep.size());
    coset_rep.push_back(c);
    for (std::uint64_t m : members) label[add(c, m)] = id;
  }
  const std::uint64_t qorder = coset_rep.size();

  // |Q[p^j]| for each prime p; the number of cyclic factors of order at
  // least p^j is log_p(|Q[p^j]| / |Q[p^(j-1)]|).
  std::map<Int, std::vector<int>> exps;  // prime -> exponents of its cyclic factors
  std::uint64_t rest = qorder;
  for (Int p = 2; rest > 1; ++p) {
    if (rest % static_cast<std::uint64_t>(p) != 0) continue;
    while (rest % static_cast<std::uint64_t>(p) == 0) rest /= static_cast<std::uint64_t>(p);
    std::vector<std::uint64_t> torsion{1};
    for (int j = 1;; ++j) {
      std::uint64_t count = 0;
      for (std::uint64_t rep : coset_rep) {
        std::uint64_t m = 0;
        for (Int t = 0; t < ipow(p, j); ++t) m = add(m, rep);
        if (in_aug[m]) ++count;
      }
      torsion.push_back(count);
      if (count == torsion[torsion.size() - 2]) break;
    }
    auto logp = [p](std::uint64_t n) {
      int e = 0;
      while (n > 1) {
        n /= static_cast<std::uint64_t>(p);
        ++e;
      }
      return e;
    };
    std::vector<int> at_least;
    for (std::size_t j = 1; j < torsion.size(); ++j) at_least.push_back(logp(torsion[j] / torsion[j - 1]));
    auto& ex = exps[p];
    for (std::size_t j = 0; j < at_least.size(); ++j) {
      const int next = j + 1 < at_least.size() ? at_least[j + 1] : 0;
      for (int c = 0; c < at_least[j] - next; ++c) ex.push_back(static_cast<int>(j + 1));
    }
    std::sort(ex.begin(), ex.end(), std::greater<>());
  }
  // Invariant factors: the i-th largest factor multiplies the i-th largest
  // prime power of every prime.
  std::size_t len = 0;
  for (const auto& [p, ex] : exps) len = std::max(len, ex.size());
  std::vector<Int> out(len, 1);
  for (const auto& [p, ex] : exps)
    for (std::size_t i = 0; i < ex.size(); ++i) out[i] *= ipow(p, ex[i]);
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace lgp::oracles
