#pragma once

// Combinatorial stand-ins for a variety with a finite group action, and group
// actions on motives realised as permutations of their summands.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "stacky/motive.hpp"
#include "stacky/perm_groups.hpp"

namespace stacky::motive {

enum class ModelKind { HSet, CellComplex };

/// One affine cell of a cell decomposition. By default a cell stabilised by
/// a group element is fixed pointwise by it. When `fixed_locus` is set, only
/// the identity fixes the cell pointwise and every other stabilising element
/// fixes exactly the listed pieces (given by dimension) inside it.
struct Cell {
  int dim = 0;
  std::optional<std::vector<int>> fixed_locus;

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// A piece of a fixed locus: a whole cell, or the j-th piece of a cell's
/// declared fixed locus.
struct Piece {
  std::size_t cell = 0;
  std::optional<std::size_t> sub;
  int dim = 0;

  friend bool operator==(const Piece&, const Piece&) = default;
};

class EquivariantModel {
public:
  /// `size` points permuted by the group; generator_images[s] is the image
  /// array of the s-th group generator.
  static EquivariantModel hset(groups::FiniteGroup group, std::size_t size,
                               std::vector<std::vector<std::size_t>> generator_images);
  static EquivariantModel cell_complex(groups::FiniteGroup group, std::vector<Cell> cells,
                                       std::vector<std::vector<std::size_t>> generator_images);
  /// Spec k with the trivial action, so that [point / H] = BH.
  static EquivariantModel point(groups::FiniteGroup group);

  ModelKind kind() const noexcept { return kind_; }
  const groups::FiniteGroup& group() const noexcept { return group_; }
  const std::vector<Cell>& cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }
  const std::vector<std::vector<std::size_t>>& generator_images() const noexcept {
    return generator_images_;
  }

  /// Image of `cell` under group element `element` (an index into
  /// group().elements()).
  std::size_t act(std::size_t element, std::size_t cell) const {
    return element_action_[element][cell];
  }

  /// Fixed locus of the subgroup with the given element indices.
  std::vector<Piece> fixed_pieces(const std::vector<std::size_t>& subgroup) const;
  /// Image of a piece under a group element.
  Piece act_on_piece(std::size_t element, const Piece& piece) const;

  /// The fixed locus of `subgroup` as a model for the action of a subgroup
  /// `acting` that preserves it (a normaliser or centraliser).
  EquivariantModel restrict_to(const std::vector<std::size_t>& subgroup,
                               const groups::Subgroup& acting) const;

private:
  EquivariantModel(ModelKind kind, groups::FiniteGroup group, std::vector<Cell> cells,
                   std::vector<std::vector<std::size_t>> generator_images);

  ModelKind kind_;
  groups::FiniteGroup group_;
  std::vector<Cell> cells_;
  std::vector<std::vector<std::size_t>> generator_images_;
  std::vector<std::vector<std::uint32_t>> element_action_;
};

/// A group acting on a motive by permuting the copies inside each
/// (atom, twist) summand. Copies are numbered consecutively in canonical term
/// order: term t owns indices [offset(t), offset(t) + multiplicity).
class GroupActionOnMotive {
public:
  /// Throws InconsistentAction unless each generator permutation preserves
  /// every summand and the assignment is a homomorphism.
  GroupActionOnMotive(Motive motive, groups::FiniteGroup group,
                      std::vector<std::vector<std::size_t>> generator_perms);

  const Motive& motive() const noexcept { return motive_; }
  const groups::FiniteGroup& group() const noexcept { return group_; }
  const std::vector<std::vector<std::size_t>>& generator_perms() const noexcept { return perms_; }
  std::size_t index_count() const noexcept { return index_count_; }
  std::size_t offset(std::size_t term) const { return offsets_.at(term); }

private:
  Motive motive_;
  groups::FiniteGroup group_;
  std::vector<std::vector<std::size_t>> perms_;
  std::vector<std::size_t> offsets_;
  std::size_t index_count_ = 0;
};

/// M^H: each summand keeps one copy per orbit of the group on its copies.
Motive invariants(const GroupActionOnMotive& action);

/// h(X) = sum over cells of L^dim, with the cell permutation action.
GroupActionOnMotive model_motive(const EquivariantModel& x);

}  // namespace stacky::motive
