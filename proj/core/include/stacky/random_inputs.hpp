#pragma once

// Named small groups and the seeded random input suite used by the
// verification commands and tests.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "stacky/equivariant_model.hpp"
#include "stacky/perm_groups.hpp"
#include "stacky/stack_decomp.hpp"
#include "stacky/verify.hpp"

namespace stacky::verify {

/// "C<n>" (n >= 1), "D<n>" (n >= 3, order 2n), "S<n>", "A<n>" (natural
/// action) and "Q8" (regular action on 8 points). Throws ValidationError for
/// an unknown name.
groups::FiniteGroup named_group(const std::string& name);

/// Action of g on the left cosets of a subgroup, as generator images.
std::vector<std::vector<std::size_t>> coset_action(const groups::FiniteGroup& g, const groups::Subgroup& k);

struct SuiteCase {
  std::string group_name;
  motive::EquivariantModel model;
  groups::FiniteGroup partner;  // second factor for the Kunneth check
  std::string partner_name;
  std::size_t p = 0;
};

/// `count` cases: a group from {C_n n <= 12, D_n n <= 6, S3, S4, A4, Q8}, an
/// H-set of at most 20 points made of coset spaces of random subgroups, and
/// p in {0, 2, 3}.
std::vector<SuiteCase> random_suite(std::uint64_t seed, std::size_t count = 120);

struct SuiteResult {
  std::vector<VerificationReport> reports;
  std::size_t failures = 0;
};

/// Runs check_inertia_dimension and check_kunneth on every case. Digests
/// carry the seed and case number.
SuiteResult run_suite(std::uint64_t seed, std::size_t count = 120, stack::ExecPolicy policy = {});

}  // namespace stacky::verify
