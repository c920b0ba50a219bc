#pragma once

// Independent cross-checks packaged as reports. A failing check is a report
// with pass = false, never an exception.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stacky/equivariant_model.hpp"
#include "stacky/perm_groups.hpp"
#include "stacky/stack_decomp.hpp"

namespace stacky::verify {

struct VerificationReport {
  std::string check_name;
  std::string input_digest;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

/// Stable FNV-1a digest of a model and characteristic, as 16 hex digits.
std::string model_digest(const motive::EquivariantModel& x, std::size_t p);
std::string group_digest(const groups::FiniteGroup& g);

/// Per-twist ranks of h_chi([X/H]) against the inertia route
/// sum over [h] of #orbits(Z_h on cells of X^h).
VerificationReport check_inertia_dimension(const motive::EquivariantModel& x, std::size_t p,
                                           stack::ExecPolicy policy = {});

/// Per-twist ranks of h_chi of (X x point) under G x H against the
/// convolution of the ranks of h_chi([X/G]) and h_chi(BH).
VerificationReport check_kunneth(const motive::EquivariantModel& x, const groups::FiniteGroup& h, std::size_t p,
                                 stack::ExecPolicy policy = {});

/// Rank of the representation ring against rank h_chi(BH) in
/// characteristic 0, with the pointwise identity
/// chi_i chi_j = sum_k n^{i,j}_k chi_k checked on every class.
VerificationReport check_rep_ring_vs_classes(const groups::FiniteGroup& h);

/// [f_*] o [f^*] = m id, and the splitting certificate round-trips.
VerificationReport check_degree_splitting(std::span<const std::size_t> f, std::size_t target_size,
                                          std::size_t m);

/// Renders per-twist ranks as a Poincare polynomial ("2", "3 + 2·L").
std::string render_ranks(const std::map<int, std::uint64_t>& ranks);

}  // namespace stacky::verify
