#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "stacky/character_table.hpp"
#include "stacky/error.hpp"
#include "stacky/gerbe.hpp"
#include "stacky/random_inputs.hpp"
#include "stacky/stack_decomp.hpp"

using namespace stacky;
using namespace stacky::stack;
using motive::Atom;
using motive::Cell;
using motive::Term;

namespace {

const Motive one = Motive::tate(0);
const Motive L = Motive::tate(1);

std::vector<std::vector<std::size_t>> natural_images(const FiniteGroup& g) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& s : g.generators()) out.push_back(s.image_vector());
  return out;
}

EquivariantModel natural_hset(const std::string& name) {
  const auto g = verify::named_group(name);
  return EquivariantModel::hset(g, g.degree(), natural_images(g));
}

EquivariantModel mu3_on_p1() {
  const auto c3 = verify::named_group("C3");
  // The point at infinity, and the affine line whose origin is fixed.
  return EquivariantModel::cell_complex(c3, {Cell{0, {}}, Cell{1, std::vector<int>{0}}}, {{0, 1}});
}

EquivariantModel trivial_action(const FiniteGroup& g, std::vector<Cell> cells) {
  std::vector<std::size_t> id(cells.size());
  std::iota(id.begin(), id.end(), std::size_t{0});
  return EquivariantModel::cell_complex(g, std::move(cells),
                                        std::vector<std::vector<std::size_t>>(g.generators().size(), id));
}

std::vector<groups::Perm> inversion(const FiniteGroup& h) {
  std::vector<groups::Perm> out;
  for (const auto& s : h.generators()) out.push_back(s.inverse());
  return out;
}

}  // namespace

TEST_CASE("character sets") {
  const auto s3 = verify::named_group("S3");
  const auto cs = groups::cyclic_subgroup_classes(s3, 0);
  for (const auto& c : cs) {
    const auto chars = char_set(c);
    CHECK(chars.indices.size() == cyclo::euler_phi(c.order));
    CHECK(chars.generator_action.size() == chars.acting.generators().size());
  }
  const auto trivial = char_set(cs[0]);
  CHECK(trivial.indices == std::vector<std::size_t>{1});
  // The transposition normalises <(0 1 2)> and swaps its two characters.
  const auto c3 = char_set(cs[2]);
  CHECK(c3.indices == std::vector<std::size_t>{1, 2});
  bool swaps = false;
  for (const auto& act : c3.generator_action) swaps = swaps || act == std::vector<std::size_t>{1, 0};
  CHECK(swaps);
}

TEST_CASE("cyclotomic inertia examples") {
  const auto comps = cyclotomic_inertia(natural_hset("S3"), 0);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0].fixed_model.size() == 3);
  CHECK(comps[1].fixed_model.size() == 1);
  CHECK(comps[2].fixed_model.size() == 0);
  for (const auto& c : comps) CHECK(c.fixed_model.group().order() == c.c.normalizer.order());

  const auto trivial = EquivariantModel::hset(groups::FiniteGroup::trivial(1), 4, {});
  REQUIRE(cyclotomic_inertia(trivial, 0).size() == 1);
  CHECK(cyclotomic_inertia(trivial, 0)[0].fixed_model.size() == 4);

  const auto bh = cyclotomic_inertia(EquivariantModel::point(verify::named_group("S3")), 3);
  REQUIRE(bh.size() == 2);
  CHECK(bh[0].c.order == 1);
  CHECK(bh[1].c.order == 2);
}

TEST_CASE("inertia examples") {
  const auto comps = inertia(natural_hset("S3"), 0);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0].representative.is_identity());
  CHECK(comps[0].fixed_model.size() == 3);
  CHECK(comps[1].representative.order() == 2);
  CHECK(comps[1].fixed_model.size() == 1);
  CHECK(comps[2].representative.order() == 3);
  CHECK(comps[2].fixed_model.size() == 0);

  const auto z2 = inertia(EquivariantModel::point(verify::named_group("C2")), 0);
  REQUIRE(z2.size() == 2);
  for (const auto& c : z2) {
    CHECK(c.centralizer.order() == 2);
    CHECK(c.fixed_model.size() == 1);
  }
  CHECK(inertia(EquivariantModel::point(groups::FiniteGroup::trivial(1)), 0).size() == 1);
}

TEST_CASE("motive of a quotient") {
  CHECK(motive_quotient(natural_hset("S3")) == one);
  CHECK(motive_quotient(natural_hset("C2")) == one);
  const auto p1 = trivial_action(groups::FiniteGroup::trivial(1), {Cell{0, {}}, Cell{1, {}}});
  CHECK(motive_quotient(p1) == motive::direct_sum(one, L));
}

TEST_CASE("h_chi of quotients") {
  const auto s3 = motive_chi_quotient(natural_hset("S3"), 0);
  CHECK(s3.total == Motive::tate(0, 2));
  REQUIRE(s3.components.size() == 3);
  CHECK(s3.components[0].motive == one);
  CHECK(s3.components[1].motive == one);
  CHECK(s3.components[2].motive.empty());

  const auto free = motive_chi_quotient(natural_hset("C2"), 0);
  CHECK(free.total == one);
  CHECK(free.total == motive_quotient(natural_hset("C2")));

  const auto orbifold = motive_chi_quotient(mu3_on_p1(), 0);
  CHECK(orbifold.total == motive::direct_sum(motive::direct_sum(one, L), Motive::tate(0, 4)));
  CHECK(motive::poincare_polynomial(orbifold.total) == "5 + L");
  REQUIRE(orbifold.components.size() == 2);
  CHECK(orbifold.components[1].motive == Motive::tate(0, 4));
  CHECK(orbifold.total == orbifold_curve_motive(0, {3, 3}).total);
}

TEST_CASE("classifying stacks") {
  const auto z2 = motive_chi_BH(verify::named_group("C2"), 0);
  CHECK(z2.motive == Motive::tate(0, 2));
  REQUIRE(z2.product_matrix);
  CHECK((*z2.product_matrix)[1 * 2 + 1] == std::vector<long>{1, 0});

  CHECK(motive_chi_BH(verify::named_group("S3"), 0).motive == Motive::tate(0, 3));
  const auto triv = motive_chi_BH(groups::FiniteGroup::trivial(1), 0);
  CHECK(triv.motive == one);
  CHECK(*triv.product_matrix == std::vector<std::vector<long>>{{1}});
  CHECK_FALSE(motive_chi_BH(verify::named_group("S3"), 3).product_matrix.has_value());

  // Three routes to the same rank.
  for (const char* name : {"C1", "C2", "C5", "S3", "A4", "S4", "Q8", "D4", "D5", "D6", "A5"}) {
    CAPTURE(name);
    const auto h = verify::named_group(name);
    std::set<oracle::Images> raw;
    for (const auto& e : h.elements()) raw.insert(e.image_vector());
    for (std::size_t p : {0, 2, 3, 5}) {
      CAPTURE(p);
      const auto bh = motive_chi_BH(h, p);
      CHECK(bh.motive.total_tate_rank() == oracle::element_class_count(raw, p));
      CHECK(gerbe_rset(h, p, {}).elements.size() == bh.motive.total_tate_rank());
    }
    CHECK(chars::character_table(h).size() == motive_chi_BH(h, 0).motive.total_tate_rank());
  }

  CHECK(motive_chi_BH(verify::named_group("S3"), 3).motive.total_tate_rank() == 2);
  CHECK(motive_chi_BH(verify::named_group("A4"), 3).motive.total_tate_rank() == 2);
}

TEST_CASE("orbifold curves") {
  const auto c = orbifold_curve_motive(0, {3, 3});
  CHECK(c.total == motive::direct_sum(motive::curve_motive(0), Motive::tate(0, 4)));
  CHECK(c.coarse == motive::curve_motive(0));
  CHECK(motive::chow_dim(c.total, 0).tate_dim == 5);
  CHECK(motive::chow_dim(c.total, 0).opaque_terms.empty());
  CHECK(motive::chow_dim(c.total, 1).tate_dim == 1);
  CHECK(motive::chow_dim(c.total, 1).opaque_terms.empty());
  CHECK(orbifold_curve_motive(1, {2}).total == motive::direct_sum(motive::curve_motive(1), one));
  CHECK(orbifold_curve_motive(0, {}).total == motive::direct_sum(one, L));
  try {
    orbifold_curve_motive(0, {3, 1});
    FAIL("accepted an order below 2");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadOrder);
  }
}

TEST_CASE("gerbes") {
  const auto c3 = verify::named_group("C3");
  const auto plain = gerbe_rset(c3, 0, {});
  CHECK(plain.elements.size() == 3);
  CHECK(plain.elements[plain.distinguished].cyclic_class == 0);

  const auto inv = gerbe_rset(c3, 0, {inversion(c3)});
  REQUIRE(inv.aut_action.size() == 1);
  CHECK(inv.aut_action[0] == std::vector<std::size_t>{0, 2, 1});

  const auto base = motive::curve_motive(1);
  const auto trivial_gerbe = motive_chi_gerbe(GerbeDatum{c3, {}, base, "X"}, 0);
  CHECK(trivial_gerbe.total == motive::repeat(base, 3));
  const auto twisted = motive_chi_gerbe(GerbeDatum{c3, {inversion(c3)}, base, "X"}, 0);
  CHECK(twisted.total == motive::direct_sum(base, Motive::atom(Atom::cover("X", 2))));
  REQUIRE(twisted.pieces.size() == 2);
  CHECK(twisted.pieces[0].is_h_of_f);
  CHECK_FALSE(twisted.pieces[1].is_h_of_f);
  CHECK(motive_chi_gerbe(GerbeDatum{groups::FiniteGroup::trivial(1), {}, base, "X"}, 0).total == base);

  // Multiplication by 2 is an automorphism of C5 permuting its four
  // characters in a single cycle.
  const auto c5 = verify::named_group("C5");
  const auto square = std::vector<groups::Perm>{c5.generators()[0].pow(2)};
  CHECK(motive_chi_gerbe(GerbeDatum{c5, {square}, one, "X"}, 0).total ==
        motive::direct_sum(one, Motive::atom(Atom::cover("X", 4))));

  // Outer automorphisms of S3 are inner, so the monodromy acts trivially.
  const auto s3 = verify::named_group("S3");
  std::vector<groups::Perm> conj_by;
  const auto x = s3.generators()[1];
  for (const auto& s : s3.generators()) conj_by.push_back(x * s * x.inverse());
  CHECK(motive_chi_gerbe(GerbeDatum{s3, {conj_by}, one, "X"}, 0).total == Motive::tate(0, 3));

  try {
    gerbe_rset(c3, 0, {{groups::Perm::identity(3)}});
    FAIL("accepted a non-injective map");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAnAutomorphism);
  }
  CHECK_THROWS_AS(gerbe_rset(s3, 0, {{s3.generators()[0]}}), Error);
  // A map that is not multiplicative: swap two generators of S3 of different
  // orders.
  CHECK_THROWS_AS(gerbe_rset(s3, 0, {{s3.generators()[1], s3.generators()[0]}}), Error);
}

TEST_CASE("gerbe and quotient agree for a trivial action") {
  for (const char* name : {"C2", "C3", "S3", "Q8", "A4"}) {
    CAPTURE(name);
    const auto h = verify::named_group(name);
    const auto x = trivial_action(h, {Cell{0, {}}, Cell{1, {}}, Cell{1, {}}});
    const auto base = motive::model_motive(x).motive();
    const std::size_t r = gerbe_rset(h, 0, {}).elements.size();
    CHECK(motive_chi_quotient(x, 0).total == motive::repeat(base, r));
    CHECK(motive_chi_gerbe(GerbeDatum{h, {}, base, "X"}, 0).total == motive::repeat(base, r));
  }
}

TEST_CASE("product with a classifying stack") {
  const auto x = natural_hset("S3");
  const auto prod = times_classifying(x, verify::named_group("C2"));
  CHECK(prod.group().order() == 12);
  CHECK(motive_chi_quotient(prod, 0).total.total_tate_rank() == 4);
}

TEST_CASE("suite properties: direct factor, free actions, double count") {
  for (std::uint64_t seed : {101, 202}) {
    for (const auto& c : verify::random_suite(seed, 40)) {
      CAPTURE(c.group_name);
      CAPTURE(c.p);
      const auto chi = motive_chi_quotient(c.model, c.p);
      const auto quotient = motive_quotient(c.model);
      REQUIRE(!chi.components.empty());
      CHECK(chi.components[0].order == 1);
      CHECK(chi.components[0].motive == quotient);

      bool free = true;
      for (std::size_t k = 1; k < chi.components.size(); ++k)
        if (!chi.components[k].motive.empty()) free = false;
      if (free) CHECK(chi.total == quotient);

      CHECK(chi.total.tate_ranks() == inertia_motive(c.model, c.p).tate_ranks());

      // Double count by brute force: pairs (x, h) with h x = x and h of order
      // prime to p, modulo simultaneous conjugation.
      const auto& g = c.model.group();
      std::set<std::pair<std::size_t, oracle::Images>> pairs;
      std::size_t orbits = 0;
      for (std::size_t pt = 0; pt < c.model.size(); ++pt)
        for (std::size_t h = 0; h < g.order(); ++h) {
          if (!oracle::prime_to(g.element_order(h), c.p) || c.model.act(h, pt) != pt) continue;
          if (pairs.count({pt, g.element(h).image_vector()})) continue;
          ++orbits;
          for (std::size_t y = 0; y < g.order(); ++y)
            pairs.insert({c.model.act(y, pt), g.element(g.multiply(g.multiply(y, h), g.inverse(y))).image_vector()});
        }
      CHECK(chi.total.total_tate_rank() == orbits);
    }
  }
}

TEST_CASE("parallel and serial runs agree") {
  for (const auto& c : verify::random_suite(77, 12)) {
    const auto serial = motive_chi_quotient(c.model, c.p);
    const auto parallel = motive_chi_quotient(c.model, c.p, ExecPolicy{true});
    CHECK(serial.total == parallel.total);
    REQUIRE(serial.components.size() == parallel.components.size());
    for (std::size_t k = 0; k < serial.components.size(); ++k)
      CHECK(serial.components[k].motive == parallel.components[k].motive);
  }
}
