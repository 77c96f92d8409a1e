#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lgp/error.hpp"

namespace lgp {

using Element = std::uint32_t;
using CayleyTable = std::vector<std::vector<Element>>;
using Tuple = std::vector<Element>;

inline constexpr std::uint64_t kDefaultMaxStates = 10'000'000;

struct GroupCheckOptions {
  // Orders up to this bound get an exhaustive associativity check.
  std::size_t exhaustive_order = 64;
  // Triples sampled above the exhaustive bound.
  std::uint64_t sampled_triples = 10ULL * 64 * 64 * 64;
  std::uint64_t seed = 0x5eed;
};

// Checks closure, identity, inverses, and associativity of a Cayley table.
// The witness names the offending elements.
Status validate_group(const CayleyTable& table, const GroupCheckOptions& opts = {});

/// A finite group given by its Cayley table. Instances are always valid:
/// construction goes through validate_group.
class FiniteGroup {
 public:
  static FiniteGroup from_table(CayleyTable table, std::vector<std::string> names = {},
                                const GroupCheckOptions& opts = {});

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }
  Element mul(Element a, Element b) const noexcept { return table_[a * order_ + b]; }
  Element inv(Element a) const noexcept { return inverse_[a]; }
  Element conj(Element h, Element g) const noexcept { return mul(mul(h, g), inv(h)); }

  const std::string& name(Element a) const { return names_[a]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  bool has_custom_names() const noexcept { return custom_names_; }
  CayleyTable table() const;

  bool is_abelian() const noexcept { return abelian_; }
  std::size_t element_order(Element a) const;

  // Deterministic generating set: greedily adds the least element outside
  // the subgroup generated so far.
  const std::vector<Element>& generators() const noexcept { return generators_; }

  std::vector<Element> centralizer(Element a) const;

  bool operator==(const FiniteGroup& o) const { return table_ == o.table_; }

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  Element identity_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> names_;
  std::vector<Element> generators_;
  bool custom_names_ = false;
  bool abelian_ = true;
};

using GroupRef = std::shared_ptr<const FiniteGroup>;

inline GroupRef make_group(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

Status validate_hom(const FiniteGroup& source, const FiniteGroup& target,
                    std::span<const Element> image);

/// Homomorphism between two explicit groups, stored as its image array.
class GroupHom {
 public:
  static GroupHom create(GroupRef source, GroupRef target, std::vector<Element> image);
  static GroupHom identity(GroupRef g);

  const GroupRef& source() const noexcept { return source_; }
  const GroupRef& target() const noexcept { return target_; }
  const std::vector<Element>& image() const noexcept { return image_; }
  Element operator()(Element a) const noexcept { return image_[a]; }

  bool is_bijective() const;
  bool is_surjective() const;

  // (other ∘ this): source → other.target
  GroupHom then(const GroupHom& other) const;

 private:
  GroupRef source_;
  GroupRef target_;
  std::vector<Element> image_;
};

// Every homomorphism source → target, in lexicographic order of the image on
// the source's generators.
std::vector<GroupHom> all_homs(const GroupRef& source, const GroupRef& target);

// ---- conjugacy ------------------------------------------------------------

// Conjugacy classes, each sorted ascending, classes ordered by least member.
std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g);

struct TupleClass {
  Tuple representative;  // lexicographically least member
  std::uint64_t size = 0;
};

// Orbits of simultaneous conjugation on g^m, ordered by representative.
std::vector<TupleClass> uniform_conjugacy_classes(const FiniteGroup& g, std::size_t m,
                                                  std::uint64_t max_states = kDefaultMaxStates);

// Lexicographically least uniform conjugate of a tuple.
Tuple canonical_uniform_conjugate(const FiniteGroup& g, std::span<const Element> tuple);

// |g|^m, or throws StateBoundExceeded if it exceeds the bound.
std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t bound);

// ---- standard groups --------------------------------------------------------

FiniteGroup trivial_group();
FiniteGroup cyclic_group(std::size_t n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup symmetric_group(std::size_t n);
FiniteGroup dihedral_group(std::size_t n);  // order 2n
FiniteGroup quaternion_group();

// Group generated by permutations (closure under composition). Elements are
// numbered in lexicographic order of their permutation arrays; composition is
// (p*q)(i) = p(q(i)).
FiniteGroup permutation_group(const std::vector<std::vector<std::size_t>>& gens, std::size_t degree);

// z1 z2 z3 ... zN, v4, s3, d4, q8. Throws InvalidArgument otherwise.
FiniteGroup named_group(const std::string& name);

}  // namespace lgp
