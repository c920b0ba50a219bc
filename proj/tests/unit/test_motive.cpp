#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "stacky/equivariant_model.hpp"
#include "stacky/error.hpp"
#include "stacky/motive.hpp"
#include "stacky/random_inputs.hpp"

using namespace stacky;
using namespace stacky::motive;

namespace {

const Motive one = Motive::tate(0);
const Motive L = Motive::tate(1);

Motive random_tate(std::mt19937_64& rng) {
  std::vector<Term> terms;
  const std::size_t n = rng() % 4;
  for (std::size_t i = 0; i < n; ++i)
    terms.push_back(Term{Atom::unit(), static_cast<int>(rng() % 4) - 1, 1 + rng() % 3});
  return Motive(std::move(terms));
}

}  // namespace

TEST_CASE("atoms") {
  CHECK(Atom::unit().symbol() == "1");
  CHECK(Atom::h1(2).symbol() == "H1_2");
  CHECK(Atom::h1(2).rank_annotation() == 4);
  CHECK(Atom::cover("X", 2).symbol() == "Cover(X,2)");
  CHECK_THROWS_AS(Atom::h1(0), Error);
  CHECK_THROWS_AS(Atom::cover("X", 1), Error);
  CHECK_THROWS_AS(Atom::cover("", 2), Error);
  CHECK_THROWS_AS(Atom::opaque(""), Error);
}

TEST_CASE("direct sum examples") {
  CHECK(direct_sum(direct_sum(one, L), one) == direct_sum(Motive::tate(0, 2), L));
  CHECK(direct_sum(L, Motive()) == L);
  CHECK(direct_sum(Motive::tate(0, 2), Motive::tate(0, 3)) == Motive::tate(0, 5));
  CHECK(Motive::tate(0, 0).empty());
}

TEST_CASE("tensor examples") {
  const Motive p1 = direct_sum(one, L);
  CHECK(tensor(p1, p1) == Motive({Term{Atom::unit(), 0, 1}, Term{Atom::unit(), 1, 2}, Term{Atom::unit(), 2, 1}}));
  const Motive c1 = curve_motive(1);
  CHECK(tensor(c1, one) == c1);
  CHECK(tensor(c1, L) == Motive({Term{Atom::unit(), 1, 1}, Term{Atom::h1(1), 1, 1}, Term{Atom::unit(), 2, 1}}));
  CHECK(twist(c1, 1) == tensor(c1, L));
  try {
    tensor(c1, c1);
    FAIL("tensored two opaque motives");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OpaqueTensor);
  }
}

TEST_CASE("unit motives form a commutative semiring") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_tate(rng), b = random_tate(rng), c = random_tate(rng);
    CHECK(direct_sum(a, b) == direct_sum(b, a));
    CHECK(direct_sum(direct_sum(a, b), c) == direct_sum(a, direct_sum(b, c)));
    CHECK(tensor(a, b) == tensor(b, a));
    CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
    CHECK(tensor(a, direct_sum(b, c)) == direct_sum(tensor(a, b), tensor(a, c)));
    CHECK(tensor(a, one) == a);
    CHECK(tensor(a, Motive()).empty());
    CHECK(direct_sum(a, Motive()) == a);
    CHECK(repeat(a, 3) == direct_sum(a, direct_sum(a, a)));
  }
}

TEST_CASE("poincare polynomial and chow dimensions") {
  const Motive m = direct_sum(Motive::tate(0, 4), L);
  CHECK(poincare_polynomial(m) == "4 + L");
  CHECK(poincare_polynomial(curve_motive(1)) == "1 + [H1_1] + L");
  CHECK(poincare_polynomial(Motive()) == "0");
  CHECK(poincare_polynomial(Motive::tate(2, 3)) == "3·L^2");
  CHECK(poincare_polynomial(Motive::atom(Atom::cover("X", 2))) == "[Cover(X,2)]");

  auto d0 = chow_dim(m, 0);
  CHECK(d0.tate_dim == 4);
  CHECK(d0.opaque_terms.empty());
  auto d1 = chow_dim(m, 1);
  CHECK(d1.tate_dim == 1);
  CHECK(d1.opaque_terms.empty());
  auto c = chow_dim(curve_motive(1), 1);
  CHECK(c.tate_dim == 1);
  REQUIRE(c.opaque_terms.size() == 1);
  CHECK(c.opaque_terms[0].atom == Atom::h1(1));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_tate(rng);
    std::uint64_t sum = 0;
    for (int k = -2; k <= 4; ++k) sum += chow_dim(a, k).tate_dim;
    CHECK(sum == a.total_tate_rank());
  }
}

TEST_CASE("curve motives") {
  CHECK(curve_motive(0) == direct_sum(one, L));
  CHECK(curve_motive(2).multiplicity(Atom::h1(2), 0) == 1);
}

TEST_CASE("invariants examples") {
  const auto c2 = verify::named_group("C2");
  CHECK(invariants(GroupActionOnMotive(Motive::tate(0, 2), c2, {{1, 0}})) == one);
  const Motive m = direct_sum(curve_motive(1), Motive::tate(0, 2));
  CHECK(invariants(GroupActionOnMotive(m, groups::FiniteGroup::trivial(1), {})) == m);
  const auto s3 = verify::named_group("S3");
  std::vector<std::vector<std::size_t>> natural;
  for (const auto& g : s3.generators()) natural.push_back(g.image_vector());
  CHECK(invariants(GroupActionOnMotive(Motive::tate(1, 3), s3, natural)) == L);
  // A permutation mixing twist 0 and twist 1 copies is not an action on M.
  CHECK_THROWS_AS(GroupActionOnMotive(direct_sum(one, L), c2, {{1, 0}}), Error);
}

TEST_CASE("model motives") {
  const auto s3 = verify::named_group("S3");
  std::vector<std::vector<std::size_t>> natural;
  for (const auto& g : s3.generators()) natural.push_back(g.image_vector());
  const auto x = EquivariantModel::hset(s3, 3, natural);
  CHECK(model_motive(x).motive() == Motive::tate(0, 3));

  const auto cells = EquivariantModel::cell_complex(groups::FiniteGroup::trivial(1), {Cell{0, {}}, Cell{1, {}}}, {});
  CHECK(model_motive(cells).motive() == direct_sum(one, L));

  const auto c2 = verify::named_group("C2");
  const auto swap = EquivariantModel::hset(c2, 2, {{1, 0}});
  CHECK(model_motive(swap).motive() == Motive::tate(0, 2));
  CHECK(invariants(model_motive(swap)) == one);

  // Generator images that break the group law or the cell dimensions.
  try {
    EquivariantModel::hset(verify::named_group("C3"), 3, {{1, 0, 2}});
    FAIL("accepted an inconsistent action");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InconsistentAction);
  }
  CHECK_THROWS_AS(EquivariantModel::cell_complex(c2, {Cell{0, {}}, Cell{1, {}}}, {{1, 0}}), Error);
  CHECK_THROWS_AS(EquivariantModel::hset(c2, 2, {{0, 0}}), Error);
}

TEST_CASE("invariants of H-sets count orbits") {
  for (std::uint64_t seed : {1, 2, 3}) {
    for (const auto& c : verify::random_suite(seed, 15)) {
      CAPTURE(c.group_name);
      const auto& x = c.model;
      std::vector<oracle::Images> gens(x.generator_images().begin(), x.generator_images().end());
      const std::size_t oracle_count = x.size() == 0 ? 0 : oracle::orbits_of(x.size(), gens);
      CHECK(invariants(model_motive(x)).total_tate_rank() == oracle_count);
      auto act = [&](const groups::Perm& g, std::size_t i) { return x.act(x.group().require_index(g), i); };
      CHECK(groups::orbit_count(x.group(), act, x.size()) == oracle_count);
    }
  }
}
