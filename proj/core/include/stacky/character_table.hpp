#pragma once

// Character tables of finite permutation groups and the representation ring
// they determine.

#include <cstddef>
#include <span>
#include <vector>

#include "stacky/cyclotomic.hpp"
#include "stacky/perm_groups.hpp"

namespace stacky::chars {

using cyclo::Cyclotomic;
using cyclo::Rational;

struct CharacterTable {
  groups::FiniteGroup group;
  std::vector<groups::ConjClassOfElements> classes;
  /// rows[i][c] = value of the i-th irreducible character on class c. An
  /// entry on a class of element order o has conductor o.
  std::vector<std::vector<Cyclotomic>> rows;
  std::vector<std::size_t> degrees;
  /// inverse_class[c] = class containing the inverses of class c.
  std::vector<std::size_t> inverse_class;

  std::size_t size() const noexcept { return rows.size(); }
};

struct TableLimits {
  std::size_t max_order = 10000;
  /// The table has classes^2 exact entries; past this we refuse.
  std::size_t max_classes = 256;
};

/// Irreducible characters, rows ordered by degree with the trivial character
/// first, then lexicographically by values. Abelian groups are built
/// directly from the generators; all others go through Dixon-Schneider
/// eigenspace splitting of the class matrices over a prime field F_q with
/// q = 1 mod exp(G), followed by a lift of each value to Q(zeta_o).
/// Throws GroupTooLarge past the limits.
CharacterTable character_table(const groups::FiniteGroup& g, const TableLimits& limits = {});

/// (1/|G|) sum_c |c| phi(c) conj(psi(c)).
Cyclotomic inner_product_value(const CharacterTable& t, std::span<const Cyclotomic> phi,
                               std::span<const Cyclotomic> psi);
/// As above, asserting the result is rational (NotRational otherwise).
Rational inner_product(const CharacterTable& t, std::span<const Cyclotomic> phi,
                       std::span<const Cyclotomic> psi);

/// Fixed-point character of the natural permutation action, per class.
/// For validation only.
std::vector<Cyclotomic> permutation_character(const CharacterTable& t);

struct OrthogonalityReport {
  bool rows_ok = false;
  bool columns_ok = false;
  bool degrees_ok = false;
};
/// Exact row and column orthogonality plus sum of squared degrees = |G|.
OrthogonalityReport check_orthogonality(const CharacterTable& t);

class RepRing {
public:
  explicit RepRing(CharacterTable table, std::vector<long> constants);

  const CharacterTable& table() const noexcept { return table_; }
  std::size_t rank() const noexcept { return table_.size(); }
  /// n^{i,j}_k: multiplicity of chi_k in chi_i * chi_j.
  long constant(std::size_t i, std::size_t j, std::size_t k) const;
  /// rank^2 x rank matrix, row (i, j) at index i * rank + j.
  std::vector<std::vector<long>> product_matrix() const;

private:
  CharacterTable table_;
  std::vector<long> constants_;
};

/// Structure constants via inner products. Each constant must be a
/// nonnegative integer and chi_i chi_j = sum_k n^{i,j}_k chi_k must hold on
/// every class; otherwise NonIntegralConstant.
RepRing rep_ring(const CharacterTable& t);

/// Commutativity, unit row and associativity of the structure constants.
bool rep_ring_axioms_hold(const RepRing& ring);

}  // namespace stacky::chars
