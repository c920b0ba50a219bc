#pragma once

// Gerbes with band H over a base X, described by their monodromy: a list of
// automorphisms of H (each the image of H's generators). h_chi of the gerbe
// is h of the finite etale cover Y -> X whose fibre is R(H), the set of
// H-conjugation orbits of pairs (cyclic subgroup, injective character).

#include <cstddef>
#include <string>
#include <vector>

#include "stacky/motive.hpp"
#include "stacky/perm_groups.hpp"

namespace stacky::stack {

struct GerbeDatum {
  groups::FiniteGroup group;
  /// monodromy[k][s] is the image of the s-th generator of `group` under the
  /// k-th automorphism.
  std::vector<std::vector<groups::Perm>> monodromy;
  motive::Motive base;
  std::string base_label = "X";
};

struct RSetElement {
  std::size_t cyclic_class = 0;  // index into RSet::classes
  std::size_t character = 1;     // smallest exponent j in its normaliser orbit
};

struct RSet {
  std::vector<groups::CyclicClass> classes;
  std::vector<RSetElement> elements;
  /// aut_action[k][e] = image of element e under the k-th automorphism.
  std::vector<std::vector<std::size_t>> aut_action;
  std::size_t distinguished = 0;  // (trivial subgroup, trivial character)
};

/// Extends generator images to a map on element indices. Throws
/// NotAnAutomorphism unless the extension is a well-defined bijective
/// homomorphism.
std::vector<std::size_t> automorphism_table(const groups::FiniteGroup& h,
                                            const std::vector<groups::Perm>& generator_images);

RSet gerbe_rset(const groups::FiniteGroup& h, std::size_t p,
                const std::vector<std::vector<groups::Perm>>& monodromy);

struct GerbePiece {
  std::vector<std::size_t> orbit;  // RSet element indices, sorted
  motive::Motive motive;
  bool is_h_of_f = false;  // the copy of the base carried by the distinguished element
};

struct GerbeMotive {
  motive::Motive total;
  std::vector<GerbePiece> pieces;  // ordered by smallest orbit element
};

/// A fixed element of R(H) contributes a copy of the base; an orbit of size
/// d >= 2 contributes the opaque atom Cover(base_label, d).
GerbeMotive motive_chi_gerbe(const GerbeDatum& gerbe, std::size_t p);

}  // namespace stacky::stack
