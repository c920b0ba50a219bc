#pragma once

// Motives of global quotient stacks [X/H] and their inertia.
//
//   h([X/H])   = h(X)^H
//   h_chi([X/H]) = sum over c in c(H) of h(X^c x s(c))^{N_c}
//
// where c(H) runs over conjugacy classes of cyclic subgroups of order prime
// to the characteristic, X^c is the fixed locus, N_c the normaliser and s(c)
// the injective characters of c, on which N_c acts through conjugation.

#include <cstddef>
#include <optional>
#include <vector>

#include "stacky/equivariant_model.hpp"
#include "stacky/motive.hpp"
#include "stacky/perm_groups.hpp"

namespace stacky::stack {

using groups::CyclicClass;
using groups::FiniteGroup;
using motive::EquivariantModel;
using motive::Motive;

/// Injective characters of a cyclic group c of order m, indexed by the
/// exponent j in (Z/m)^x (chi_j sends the generator to zeta_m^j; j runs over
/// 1..m coprime to m, so the trivial group has the single index 1). The
/// normaliser acts by j -> j * a(n), where n^-1 g n = g^a(n).
struct CharSet {
  CyclicClass c;
  std::vector<std::size_t> indices;
  FiniteGroup acting;  // the normaliser, with its greedy generators
  /// generator_action[s][pos] = position of indices[pos] * a(s).
  std::vector<std::vector<std::size_t>> generator_action;
};

CharSet char_set(const CyclicClass& c);

struct CycloInertiaComponent {
  CyclicClass c;
  EquivariantModel fixed_model;  // X^c with the N_c action
  CharSet chars;
};

struct InertiaComponent {
  groups::Perm representative;
  groups::Subgroup centralizer;
  std::size_t class_size = 1;
  EquivariantModel fixed_model;  // X^h with the Z_h action
};

/// Execution policy for the per-component work. Output order and content do
/// not depend on it.
struct ExecPolicy {
  bool parallel = false;
};

/// One component per class in c(H, p), in the order of
/// groups::cyclic_subgroup_classes.
std::vector<CycloInertiaComponent> cyclotomic_inertia(const EquivariantModel& x, std::size_t p,
                                                      ExecPolicy policy = {});

/// One component per conjugacy class of elements of order prime to p.
std::vector<InertiaComponent> inertia(const EquivariantModel& x, std::size_t p, ExecPolicy policy = {});

/// h([X/H]) = h(X)^H.
Motive motive_quotient(const EquivariantModel& x);

/// h(X^c x s(c))^{N_c}: one unit per N_c-orbit on (pieces of X^c) x s(c).
Motive component_motive(const CycloInertiaComponent& component);
/// h(X^h)^{Z_h}.
Motive component_motive(const InertiaComponent& component);

struct ComponentMotive {
  groups::Perm generator;
  std::size_t order = 1;
  Motive motive;
};

struct ChiQuotient {
  Motive total;
  std::vector<ComponentMotive> components;  // same order as cyclotomic_inertia
};

ChiQuotient motive_chi_quotient(const EquivariantModel& x, std::size_t p, ExecPolicy policy = {});

/// Sum over inertia components of h(X^h)^{Z_h}; the independent route used
/// for rank double counting.
Motive inertia_motive(const EquivariantModel& x, std::size_t p, ExecPolicy policy = {});

struct BHMotive {
  Motive motive;  // unit^r
  ChiQuotient breakdown;
  /// Representation-ring structure constants, r^2 rows by r columns; only
  /// in characteristic 0.
  std::optional<std::vector<std::vector<long>>> product_matrix;
};

BHMotive motive_chi_BH(const FiniteGroup& h, std::size_t p);

/// (X with a G-action) x (point with an H-action), as a model for G x H
/// acting on the disjoint union of the two point sets, H trivially on cells.
EquivariantModel times_classifying(const EquivariantModel& x, const FiniteGroup& h);

struct CurveMotive {
  Motive total;
  Motive coarse;  // h(C), the factor corresponding to h(F)
};

/// h_chi of a one-dimensional orbifold with coarse curve of genus g and
/// stacky points of orders n_i: h(C) + sum_i 1^(n_i - 1). Throws BadOrder
/// when some n_i < 2.
CurveMotive orbifold_curve_motive(std::size_t genus, const std::vector<std::size_t>& orders);

}  // namespace stacky::stack
