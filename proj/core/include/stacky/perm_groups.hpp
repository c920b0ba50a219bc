#pragma once

// Finite permutation groups by brute-force enumeration: closure, conjugacy
// classes of elements and of cyclic subgroups, normalizers, centralizers and
// orbit counting. Sized for desk-scale groups (a few thousand elements).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace stacky::groups {

/// A permutation of {0, ..., degree-1}, stored as its image array.
/// Products read right to left: (a * b)(i) = a(b(i)).
class Perm {
public:
  Perm() = default;

  /// Throws NonBijection unless `images` is a permutation of 0..n-1.
  static Perm from_images(std::span<const std::size_t> images);
  static Perm from_images(std::initializer_list<std::size_t> images);
  static Perm identity(std::size_t degree);
  /// Builds a permutation from disjoint cycles, e.g. {{0, 1, 2}} for (0 1 2).
  static Perm from_cycles(std::size_t degree,
                          std::initializer_list<std::initializer_list<std::size_t>> cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t point) const { return images_[point]; }
  std::span<const std::uint8_t> images() const noexcept { return images_; }
  std::vector<std::size_t> image_vector() const;

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  Perm pow(long long exponent) const;
  bool is_identity() const noexcept;
  std::size_t order() const;

  /// Cycle notation, "()" for the identity.
  std::string to_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

private:
  explicit Perm(std::vector<std::uint8_t> images) : images_(std::move(images)) {}

  std::vector<std::uint8_t> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

struct GroupLimits {
  std::size_t max_order = 10000;
  std::size_t max_degree = 64;
};

/// An enumerated permutation group. Elements are sorted lexicographically by
/// image array, so index 0 is always the identity. Copies share storage.
class FiniteGroup {
public:
  /// Closure of `generators`. Throws NonBijection on a malformed generator
  /// and GroupTooLarge once the closure passes `limits.max_order`.
  static FiniteGroup generate(std::size_t degree, std::vector<Perm> generators,
                              const GroupLimits& limits = {});
  static FiniteGroup trivial(std::size_t degree = 1);
  /// Direct product acting on the disjoint union of the two point sets.
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                    const GroupLimits& limits = {});

  std::size_t degree() const;
  std::size_t order() const;
  const std::vector<Perm>& generators() const;
  const std::vector<Perm>& elements() const;
  const Perm& element(std::size_t index) const;

  std::optional<std::size_t> index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_of(p).has_value(); }
  /// Index of a known member; throws NotASubgroup for a non-member.
  std::size_t require_index(const Perm& p) const;

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;
  std::size_t element_order(std::size_t a) const;
  std::size_t exponent() const;
  bool is_abelian() const;

private:
  struct Impl;
  explicit FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  static FiniteGroup from_closed(std::size_t degree, std::vector<Perm> generators,
                                 std::vector<Perm> elements);

  friend class Subgroup;
  std::shared_ptr<const Impl> impl_;
};

/// A subset of a parent group that is closed under products and inverses.
class Subgroup {
public:
  /// Throws NotASubgroup unless `indices` (into parent.elements()) is closed
  /// and contains the identity.
  Subgroup(FiniteGroup parent, std::vector<std::size_t> indices);

  const FiniteGroup& parent() const noexcept { return parent_; }
  /// Sorted indices into parent().elements().
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  std::vector<Perm> elements() const;
  std::size_t order() const noexcept { return indices_.size(); }
  bool contains_index(std::size_t parent_index) const;
  bool contains(const Perm& p) const;

  /// The subgroup as a group in its own right, generated by a greedily
  /// chosen generating set (lexicographically first elements that are not
  /// yet in the running closure).
  FiniteGroup as_group() const;

private:
  FiniteGroup parent_;
  std::vector<std::size_t> indices_;
};

struct ConjClassOfElements {
  Perm representative;          // lexicographically minimal member
  std::vector<Perm> members;    // sorted
  std::vector<std::size_t> member_indices;
  std::size_t order = 1;        // common element order
};

struct CyclicClass {
  Perm generator;
  std::size_t order = 1;
  std::vector<Perm> subgroup_elements;  // generator^0, generator^1, ...
  Subgroup normalizer;
  std::size_t conjugate_count = 1;      // number of conjugates of the subgroup
};

/// Throws BadCharacteristic unless p is 0 or prime.
void check_characteristic(std::size_t p);
/// True when gcd(n, p) = 1, with every n allowed for p = 0.
bool order_prime_to(std::size_t n, std::size_t p);

/// Sorted by element order, then by representative.
std::vector<ConjClassOfElements> conjugacy_classes(const FiniteGroup& g);
/// class_of[i] = position in `classes` of element i.
std::vector<std::size_t> class_lookup(const FiniteGroup& g,
                                      const std::vector<ConjClassOfElements>& classes);

/// One entry per conjugacy class of cyclic subgroups whose order is prime to
/// p (all orders for p = 0), sorted by order then generator.
std::vector<CyclicClass> cyclic_subgroup_classes(const FiniteGroup& g, std::size_t p = 0);

Subgroup normalizer(const FiniteGroup& g, std::span<const Perm> subset);
Subgroup centralizer(const FiniteGroup& g, const Perm& h);

/// The exponent a in (Z/m)^x with n^-1 g n = g^a for g = c.generator.
/// Reported in 1..m (so the trivial subgroup gives 1).
std::size_t conjugation_exponent(const Perm& n, const CyclicClass& c);

/// Extends an assignment generator -> permutation of {0..points-1} to every
/// group element (row i is the image of element i). Throws
/// InconsistentAction when the assignment is not a homomorphism or an image
/// is not a permutation.
std::vector<std::vector<std::uint32_t>> extend_action(
    const FiniteGroup& g, const std::vector<std::vector<std::size_t>>& generator_images,
    std::size_t points);

using PointAction = std::function<std::size_t(const Perm&, std::size_t)>;

/// Number of orbits of the group on {0..points-1}. Computed by flood fill and
/// by the Burnside average; a disagreement raises Internal. Throws
/// NotAnAction when `act` is not compatible with the group law.
std::size_t orbit_count(const FiniteGroup& g, const PointAction& act, std::size_t points);

}  // namespace stacky::groups
