#include "lgp/groups.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

namespace lgp {

namespace {

std::string elem_str(Element e) { return std::to_string(e); }

}  // namespace

Status validate_group(const CayleyTable& table, const GroupCheckOptions& opts) {
  const std::size_t n = table.size();
  if (n == 0) return Status::fail(ErrorCode::BadTable, "empty table");
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n)
      return Status::fail(ErrorCode::BadTable, "row " + std::to_string(r) + " has " +
                                                   std::to_string(table[r].size()) +
                                                   " entries, expected " + std::to_string(n));
    for (std::size_t c = 0; c < n; ++c)
      if (table[r][c] >= n)
        return Status::fail(ErrorCode::BadTable, "product " + std::to_string(r) + "*" +
                                                     std::to_string(c) + " = " +
                                                     elem_str(table[r][c]) + " is out of range");
  }

  std::vector<std::size_t> units;
  for (std::size_t e = 0; e < n; ++e) {
    bool unit = true;
    for (std::size_t g = 0; g < n && unit; ++g)
      unit = table[e][g] == g && table[g][e] == g;
    if (unit) units.push_back(e);
  }
  if (units.size() != 1)
    return Status::fail(ErrorCode::BadIdentity,
                        units.empty() ? "no two-sided identity element"
                                      : "several identity elements (" + std::to_string(units[0]) +
                                            ", " + std::to_string(units[1]) + ")");
  const std::size_t e = units.front();

  for (std::size_t g = 0; g < n; ++g) {
    bool found = false;
    for (std::size_t h = 0; h < n && !found; ++h)
      found = table[h][g] == e && table[g][h] == e;
    if (!found) return Status::fail(ErrorCode::BadInverse, "element " + std::to_string(g) + " has no inverse");
  }

  auto assoc_witness = [&](std::size_t a, std::size_t b, std::size_t c) -> std::optional<Status> {
    if (table[table[a][b]][c] != table[a][table[b][c]]) {
      std::ostringstream os;
      os << "(" << a << "*" << b << ")*" << c << " = " << table[table[a][b]][c] << " but " << a
         << "*(" << b << "*" << c << ") = " << table[a][table[b][c]];
      return Status::fail(ErrorCode::NotAssociative, os.str());
    }
    return std::nullopt;
  };

  if (n <= opts.exhaustive_order) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (auto w = assoc_witness(a, b, c)) return *w;
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::uint64_t i = 0; i < opts.sampled_triples; ++i)
      if (auto w = assoc_witness(pick(rng), pick(rng), pick(rng))) return *w;
  }
  return Status::ok();
}

FiniteGroup FiniteGroup::from_table(CayleyTable table, std::vector<std::string> names,
                                    const GroupCheckOptions& opts) {
  validate_group(table, opts).check();
  const std::size_t n = table.size();
  if (!names.empty() && names.size() != n)
    throw Error(ErrorCode::BadTable, "names has " + std::to_string(names.size()) +
                                         " entries, expected " + std::to_string(n));

  FiniteGroup g;
  g.order_ = n;
  g.table_.reserve(n * n);
  for (const auto& row : table) g.table_.insert(g.table_.end(), row.begin(), row.end());
  for (Element e = 0; e < n; ++e) {
    bool unit = true;
    for (Element x = 0; x < n && unit; ++x) unit = g.mul(e, x) == x && g.mul(x, e) == x;
    if (unit) {
      g.identity_ = e;
      break;
    }
  }
  g.inverse_.resize(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (g.mul(a, b) == g.identity_) {
        g.inverse_[a] = b;
        break;
      }
  for (Element a = 0; a < n && g.abelian_; ++a)
    for (Element b = a + 1; b < n && g.abelian_; ++b) g.abelian_ = g.mul(a, b) == g.mul(b, a);

  g.custom_names_ = !names.empty();
  if (names.empty()) {
    names.resize(n);
    for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
  }
  g.names_ = std::move(names);

  std::vector<char> in_sub(n, 0);
  in_sub[g.identity_] = 1;
  std::vector<Element> sub{g.identity_};
  for (Element cand = 0; cand < n; ++cand) {
    if (in_sub[cand]) continue;
    g.generators_.push_back(cand);
    // closure of sub ∪ {cand}
    for (std::size_t i = 0; i < sub.size(); ++i) {
      for (Element gen : g.generators_) {
        for (Element x : {g.mul(sub[i], gen), g.mul(gen, sub[i])}) {
          if (!in_sub[x]) {
            in_sub[x] = 1;
            sub.push_back(x);
          }
        }
      }
    }
  }
  return g;
}

CayleyTable FiniteGroup::table() const {
  CayleyTable t(order_, std::vector<Element>(order_));
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b) t[a][b] = mul(a, b);
  return t;
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

std::vector<Element> FiniteGroup::centralizer(Element a) const {
  std::vector<Element> out;
  for (Element h = 0; h < order_; ++h)
    if (mul(h, a) == mul(a, h)) out.push_back(h);
  return out;
}

// ---- homomorphisms ----------------------------------------------------------

Status validate_hom(const FiniteGroup& source, const FiniteGroup& target, std::span<const Element> image) {
  if (image.size() != source.order())
    return Status::fail(ErrorCode::NotHomomorphism, "image has " + std::to_string(image.size()) +
                                                        " entries, source order is " +
                                                        std::to_string(source.order()));
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] >= target.order())
      return Status::fail(ErrorCode::NotHomomorphism,
                          "image[" + std::to_string(i) + "] = " + elem_str(image[i]) + " is not a target element");
  if (image[source.identity()] != target.identity())
    return Status::fail(ErrorCode::NotHomomorphism, "identity is not mapped to identity");
  for (Element a = 0; a < source.order(); ++a)
    for (Element b = 0; b < source.order(); ++b)
      if (image[source.mul(a, b)] != target.mul(image[a], image[b]))
        return Status::fail(ErrorCode::NotHomomorphism, "h(" + elem_str(a) + "*" + elem_str(b) +
                                                            ") != h(" + elem_str(a) + ")*h(" +
                                                            elem_str(b) + ")");
  return Status::ok();
}

GroupHom GroupHom::create(GroupRef source, GroupRef target, std::vector<Element> image) {
  if (!source || !target) throw Error(ErrorCode::InvalidArgument, "null group in homomorphism");
  validate_hom(*source, *target, image).check();
  GroupHom h;
  h.source_ = std::move(source);
  h.target_ = std::move(target);
  h.image_ = std::move(image);
  return h;
}

GroupHom GroupHom::identity(GroupRef g) {
  std::vector<Element> img(g->order());
  std::iota(img.begin(), img.end(), Element{0});
  GroupHom h;
  h.source_ = g;
  h.target_ = std::move(g);
  h.image_ = std::move(img);
  return h;
}

bool GroupHom::is_surjective() const {
  std::vector<char> hit(target_->order(), 0);
  for (Element x : image_) hit[x] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool GroupHom::is_bijective() const { return source_->order() == target_->order() && is_surjective(); }

GroupHom GroupHom::then(const GroupHom& other) const {
  if (!(*target_ == *other.source_))
    throw Error(ErrorCode::InvalidArgument, "composing homomorphisms with mismatched groups");
  GroupHom h;
  h.source_ = source_;
  h.target_ = other.target_;
  h.image_.resize(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) h.image_[i] = other.image_[image_[i]];
  return h;
}

std::vector<GroupHom> all_homs(const GroupRef& source, const GroupRef& target) {
  const auto& gens = source->generators();
  // Express every source element as (prefix element, generator index).
  const std::size_t n = source->order();
  std::vector<std::pair<Element, std::size_t>> word(n, {0, 0});
  std::vector<char> seen(n, 0);
  std::vector<Element> bfs{source->identity()};
  seen[source->identity()] = 1;
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Element x = source->mul(bfs[i], gens[k]);
      if (!seen[x]) {
        seen[x] = 1;
        word[x] = {bfs[i], k};
        bfs.push_back(x);
      }
    }

  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::size_t ord = source->element_order(gens[k]);
    for (Element t = 0; t < target->order(); ++t)
      if (ord % target->element_order(t) == 0) candidates[k].push_back(t);
  }

  std::vector<GroupHom> out;
  std::vector<std::size_t> pick(gens.size(), 0);
  std::vector<Element> image(n);
  while (true) {
    image[source->identity()] = target->identity();
    for (std::size_t i = 1; i < bfs.size(); ++i) {
      const auto [prev, k] = word[bfs[i]];
      image[bfs[i]] = target->mul(image[prev], candidates[k][pick[k]]);
    }
    if (validate_hom(*source, *target, image)) out.push_back(GroupHom::create(source, target, image));

    std::size_t pos = gens.size();
    while (pos > 0) {
      --pos;
      if (++pick[pos] < candidates[pos].size()) break;
      pick[pos] = 0;
      if (pos == 0) return out;
    }
    if (gens.empty()) return out;
  }
}

// ---- conjugacy ----------------------------------------------------------------

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t bound) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && total > bound / base)
      throw Error(ErrorCode::StateBoundExceeded, std::to_string(base) + "^" + std::to_string(exp) +
                                                     " states exceed the bound " + std::to_string(bound));
    total *= base;
  }
  if (total > bound)
    throw Error(ErrorCode::StateBoundExceeded,
                std::to_string(total) + " states exceed the bound " + std::to_string(bound));
  return total;
}

Tuple canonical_uniform_conjugate(const FiniteGroup& g, std::span<const Element> tuple) {
  Tuple best(tuple.begin(), tuple.end());
  Tuple cur(tuple.size());
  for (Element h = 0; h < g.order(); ++h) {
    for (std::size_t j = 0; j < tuple.size(); ++j) cur[j] = g.conj(h, tuple[j]);
    if (cur < best) best = cur;
  }
  return best;
}

std::vector<TupleClass> uniform_conjugacy_classes(const FiniteGroup& g, std::size_t m,
                                                  std::uint64_t max_states) {
  const std::uint64_t n = g.order();
  const std::uint64_t total = checked_power(n, m, max_states);

  // Tuples are encoded with position 0 most significant, so numeric order is
  // lexicographic order and the first unvisited code of an orbit is its least member.
  std::vector<char> visited(total, 0);
  std::vector<TupleClass> out;
  Tuple t(m), conj(m);
  for (std::uint64_t code = 0; code < total; ++code) {
    if (visited[code]) continue;
    std::uint64_t rest = code;
    for (std::size_t j = m; j-- > 0;) {
      t[j] = static_cast<Element>(rest % n);
      rest /= n;
    }
    std::uint64_t size = 0;
    for (Element h = 0; h < n; ++h) {
      std::uint64_t c = 0;
      for (std::size_t j = 0; j < m; ++j) c = c * n + g.conj(h, t[j]);
      if (!visited[c]) {
        visited[c] = 1;
        ++size;
      }
    }
    out.push_back({t, size});
  }
  return out;
}

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<std::vector<Element>> out;
  std::vector<char> seen(g.order(), 0);
  for (Element a = 0; a < g.order(); ++a) {
    if (seen[a]) continue;
    std::vector<Element> cls;
    for (Element h = 0; h < g.order(); ++h) {
      Element c = g.conj(h, a);
      if (!seen[c]) {
        seen[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

// ---- standard groups ----------------------------------------------------------

FiniteGroup trivial_group() { return FiniteGroup::from_table({{0}}, {"1"}); }

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cyclic group of order 0");
  CayleyTable t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Element>((a + b) % n);
  return FiniteGroup::from_table(std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  CayleyTable t(n, std::vector<Element>(n));
  std::vector<std::string> names(n);
  for (Element x = 0; x < n; ++x) {
    names[x] = "(" + a.name(x / nb) + "," + b.name(x % nb) + ")";
    for (Element y = 0; y < n; ++y)
      t[x][y] = static_cast<Element>(a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb));
  }
  return FiniteGroup::from_table(std::move(t), std::move(names));
}

namespace {

std::string cycle_notation(const std::vector<std::size_t>& p) {
  std::string s;
  std::vector<char> done(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == i) continue;
    s += "(";
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = 1;
      if (!first) s += " ";
      s += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

}  // namespace

FiniteGroup permutation_group(const std::vector<std::vector<std::size_t>>& gens, std::size_t degree) {
  using Perm = std::vector<std::size_t>;
  auto compose = [](const Perm& p, const Perm& q) {
    Perm r(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
    return r;
  };
  Perm id(degree);
  std::iota(id.begin(), id.end(), std::size_t{0});
  std::map<Perm, Element> index;
  std::vector<Perm> elems{id};
  index[id] = 0;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& gen : gens) {
      if (gen.size() != degree) throw Error(ErrorCode::InvalidArgument, "generator has wrong degree");
      Perm x = compose(elems[i], gen);
      if (!index.count(x)) {
        index[x] = 0;
        elems.push_back(std::move(x));
      }
    }
  std::sort(elems.begin(), elems.end());
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<Element>(i);
  const std::size_t n = elems.size();
  CayleyTable t(n, std::vector<Element>(n));
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    names[a] = cycle_notation(elems[a]);
    for (std::size_t b = 0; b < n; ++b) t[a][b] = index.at(compose(elems[a], elems[b]));
  }
  return FiniteGroup::from_table(std::move(t), std::move(names));
}

FiniteGroup symmetric_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "symmetric group of degree 0");
  if (n == 1) return trivial_group();
  std::vector<std::size_t> swap(n), cycle(n);
  std::iota(swap.begin(), swap.end(), std::size_t{0});
  std::swap(swap[0], swap[1]);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return permutation_group({swap, cycle}, n);
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "dihedral group of degree 0");
  if (n == 1) return cyclic_group(2);
  if (n == 2) return direct_product(cyclic_group(2), cyclic_group(2));
  std::vector<std::size_t> rot(n), refl(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return permutation_group({rot, refl}, n);
}

FiniteGroup quaternion_group() {
  // Element 2u+s is (-1)^s * unit[u], units 1, i, j, k.
  static constexpr int kUnitMul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  CayleyTable t(8, std::vector<Element>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, v = y / 2;
      const int s = (x % 2) ^ (y % 2) ^ kSign[u][v];
      t[x][y] = static_cast<Element>(2 * kUnitMul[u][v] + s);
    }
  return FiniteGroup::from_table(std::move(t), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

FiniteGroup named_group(const std::string& raw) {
  std::string name;
  for (char c : raw) name += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  auto number_after = [&](std::size_t pos) -> std::size_t {
    if (name.size() <= pos) return 0;
    std::size_t v = 0;
    for (std::size_t i = pos; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return 0;
      v = v * 10 + static_cast<std::size_t>(name[i] - '0');
      if (v > 100000) return 0;
    }
    return v;
  };
  if (name == "trivial" || name == "1") return trivial_group();
  if (name == "v4" || name == "z2xz2" || name == "klein") return direct_product(cyclic_group(2), cyclic_group(2));
  if (name == "q8") return quaternion_group();
  if (name.size() > 1 && name[0] == 'z') {
    if (std::size_t n = number_after(1); n >= 1 && n <= 4096) return cyclic_group(n);
  }
  if (name.size() > 1 && name[0] == 's') {
    if (std::size_t n = number_after(1); n >= 1 && n <= 6) return symmetric_group(n);
  }
  if (name.size() > 1 && name[0] == 'd') {
    if (std::size_t n = number_after(1); n >= 1 && n <= 2048) return dihedral_group(n);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown group name '" + raw + "'");
}

}  // namespace lgp
