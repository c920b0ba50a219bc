#include <doctest.h>

#include <random>

#include "linear_oracles.hpp"
#include "stacky/correspondence.hpp"
#include "stacky/cyclotomic.hpp"
#include "stacky/error.hpp"

using namespace stacky;
using namespace stacky::corr;
using motive::Motive;
using cyclo::make_rational;

namespace {

using oracle::plain_rank;
using oracle::random_idempotent;
using oracle::random_matrix;

Correspondence endo(const Motive& m, std::map<int, QMatrix> blocks) { return Correspondence(m, m, std::move(blocks)); }

}  // namespace

TEST_CASE("rank agrees with plain elimination") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    QMatrix m = random_matrix(rng, r, c);
    if (trial % 3 == 0 && r > 1)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2;  // force a dependency
    CHECK(rank(m) == plain_rank(m));
    const auto e = row_echelon(m);
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      for (std::size_t k = 0; k < e.pivots.size(); ++k) CHECK(e.reduced(k, e.pivots[i]) == (i == k ? 1 : 0));
  }
}

TEST_CASE("composition examples") {
  const Motive two = Motive::tate(0, 2);
  const auto id = Correspondence::identity(two);
  CHECK(compose(id, id) == id);
  const auto swap = endo(two, {{0, QMatrix::from_rows({{0, 1}, {1, 0}})}});
  CHECK(compose(swap, swap) == id);

  const Motive one = Motive::tate(0);
  const Correspondence row(two, one, {{0, QMatrix::from_rows({{1, 1}})}});
  const Correspondence col(one, two, {{0, QMatrix::from_rows({{1}, {1}})}});
  CHECK(compose(row, col).block(0) == QMatrix::from_rows({{2}}));
  CHECK_THROWS_AS(compose(row, row), Error);
  CHECK_THROWS_AS(Correspondence(two, one, {{0, QMatrix::from_rows({{1}})}}), Error);
  CHECK_THROWS_AS(Correspondence(motive::curve_motive(1), one, {}), Error);
}

TEST_CASE("transpose examples") {
  const Motive two = Motive::tate(0, 2);
  const auto id = Correspondence::identity(two);
  CHECK(transpose(id) == id);
  const Correspondence row(two, Motive::tate(0), {{0, QMatrix::from_rows({{1, 1}})}});
  CHECK(transpose(row).block(0) == QMatrix::from_rows({{1}, {1}}));
  CHECK(transpose(transpose(row)) == row);
}

TEST_CASE("category laws on random blocks") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t a0 = rng() % 4, a1 = rng() % 3, b0 = rng() % 4, b1 = rng() % 3, c0 = rng() % 4, c1 = rng() % 3,
                      d0 = rng() % 4, d1 = rng() % 3;
    auto mot = [](std::size_t n0, std::size_t n1) {
      return motive::direct_sum(Motive::tate(0, n0), Motive::tate(1, n1));
    };
    const Motive A = mot(a0, a1), B = mot(b0, b1), C = mot(c0, c1), D = mot(d0, d1);
    auto rnd = [&](const Motive& s, const Motive& t) {
      std::map<int, QMatrix> blocks;
      const auto rs = s.tate_ranks(), rt = t.tate_ranks();
      for (int tw : {0, 1}) {
        const std::size_t cols = rs.count(tw) ? rs.at(tw) : 0, rows = rt.count(tw) ? rt.at(tw) : 0;
        if (rows || cols) blocks.emplace(tw, random_matrix(rng, rows, cols));
      }
      return Correspondence(s, t, blocks);
    };
    const auto x = rnd(C, D), y = rnd(B, C), z = rnd(A, B);
    CHECK(compose(compose(x, y), z) == compose(x, compose(y, z)));
    CHECK(compose(Correspondence::identity(D), x) == x);
    CHECK(compose(x, Correspondence::identity(C)) == x);
    CHECK(transpose(compose(x, y)) == compose(transpose(y), transpose(x)));
  }
}

TEST_CASE("graph correspondences") {
  const std::vector<std::size_t> two_to_one{0, 0};
  auto g = graph_correspondences(two_to_one, 1);
  CHECK(g.pullback.block(0) == QMatrix::from_rows({{1}, {1}}));
  CHECK(compose(g.pushforward, g.pullback).block(0) == QMatrix::from_rows({{2}}));

  const std::vector<std::size_t> id{0, 1, 2};
  auto gi = graph_correspondences(id, 3);
  CHECK(gi.pullback == Correspondence::identity(Motive::tate(0, 3)));
  CHECK(gi.pushforward == Correspondence::identity(Motive::tate(0, 3)));

  const std::vector<std::size_t> three_to_two{0, 0, 1};
  auto g3 = graph_correspondences(three_to_two, 2);
  CHECK(compose(g3.pushforward, g3.pullback).block(0) == QMatrix::from_rows({{2, 0}, {0, 1}}));

  try {
    const std::vector<std::size_t> bad{0, 5};
    graph_correspondences(bad, 2);
    FAIL("accepted a partial map");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotTotal);
  }

  // Contravariant functoriality: [(g o f)^*] = [f^*] o [g^*].
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 8, k = 1 + rng() % 6, l = 1 + rng() % 4;
    std::vector<std::size_t> f(n), h(k), hf(n);
    for (auto& v : f) v = rng() % k;
    for (auto& v : h) v = rng() % l;
    for (std::size_t i = 0; i < n; ++i) hf[i] = h[f[i]];
    CHECK(graph_correspondences(hf, l).pullback ==
          compose(graph_correspondences(f, k).pullback, graph_correspondences(h, l).pullback));
  }
}

TEST_CASE("idempotent splitting examples") {
  const Motive two = Motive::tate(0, 2);
  const Rational half = make_rational(1, 2);
  const auto p = endo(two, {{0, QMatrix::from_rows({{half, half}, {half, half}})}});
  REQUIRE(is_idempotent(p));
  const auto s = split_idempotent(p);
  CHECK(s.image == Motive::tate(0));
  CHECK(s.inclusion.block(0) == QMatrix::from_rows({{1}, {1}}));
  CHECK(s.retraction.block(0) == QMatrix::from_rows({{half, half}}));
  CHECK(compose(s.retraction, s.inclusion) == Correspondence::identity(Motive::tate(0)));

  const Motive m = motive::direct_sum(two, Motive::tate(1, 3));
  CHECK(split_idempotent(Correspondence::identity(m)).image == m);
  CHECK(split_idempotent(Correspondence::zero(m, m)).image.empty());

  const auto not_idem = endo(two, {{0, QMatrix::from_rows({{1, 1}, {0, 1}})}});
  try {
    split_idempotent(not_idem);
    FAIL("split a non-idempotent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotIdempotent);
  }
}

TEST_CASE("random idempotents split exactly") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n0 = 1 + rng() % 6, n1 = rng() % 4;
    const std::size_t k0 = rng() % (n0 + 1), k1 = n1 ? rng() % (n1 + 1) : 0;
    const Motive m = motive::direct_sum(Motive::tate(0, n0), Motive::tate(2, n1));
    std::map<int, QMatrix> blocks{{0, random_idempotent(rng, n0, k0)}};
    if (n1) blocks.emplace(2, random_idempotent(rng, n1, k1));
    const auto p = endo(m, blocks);
    REQUIRE(is_idempotent(p));
    const auto s = split_idempotent(p);
    CHECK(compose(s.inclusion, s.retraction) == p);
    CHECK(compose(s.retraction, s.inclusion) == Correspondence::identity(s.image));
    CHECK(s.image.multiplicity(motive::Atom::unit(), 0) == k0);
    CHECK(s.image.multiplicity(motive::Atom::unit(), 2) == k1);
  }
}

TEST_CASE("splitting certificates") {
  const std::vector<std::size_t> two_to_one{0, 0};
  CHECK(splitting_certificate(two_to_one, 1, 2).image == Motive::tate(0));
  const std::vector<std::size_t> id{0, 1, 2, 3};
  CHECK(splitting_certificate(id, 4, 1).image == Motive::tate(0, 4));
  const std::vector<std::size_t> six_to_three{0, 1, 2, 2, 1, 0};
  const auto s = splitting_certificate(six_to_three, 3, 2);
  CHECK(s.image == Motive::tate(0, 3));
  const auto p = compose(s.inclusion, s.retraction);
  CHECK(is_idempotent(p));
  CHECK(rank(p.block(0)) == 3);

  try {
    const std::vector<std::size_t> uneven{0, 0, 1};
    splitting_certificate(uneven, 2, 2);
    FAIL("accepted an uneven cover");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotEquidegree);
  }
}
