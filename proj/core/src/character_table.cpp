#include "stacky/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <optional>

#include "stacky/error.hpp"

namespace stacky::chars {

namespace {

using u64 = std::uint64_t;
using groups::FiniteGroup;

// ---------------------------------------------------------------------------
// Arithmetic in F_q, q < 2^31.

struct PrimeField {
  u64 q;

  u64 add(u64 a, u64 b) const { return (a + b) % q; }
  u64 sub(u64 a, u64 b) const { return (a + q - b) % q; }
  u64 mul(u64 a, u64 b) const { return (a * b) % q; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= q;
    while (e > 0) {
      if (e & 1U) r = mul(r, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return r;
  }
  u64 inv(u64 a) const {
    if (a % q == 0) fail(ErrorCode::Internal, "inverse of zero in F_q");
    return pow(a, q - 2);
  }
};

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Smallest prime q = 1 mod e with q^2 > 4|G|, i.e. q > 2 sqrt|G|.
u64 choose_prime(u64 e, u64 order) {
  for (u64 q = e + 1;; q += e) {
    if (q * q > 4 * order && is_prime(q)) return q;
    if (q > (u64{1} << 31)) fail(ErrorCode::Internal, "no suitable prime below 2^31");
  }
}

u64 primitive_root(const PrimeField& f) {
  std::vector<u64> factors;
  u64 n = f.q - 1;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    factors.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) factors.push_back(n);
  for (u64 g = 2; g < f.q; ++g) {
    bool ok = true;
    for (auto p : factors)
      if (f.pow(g, (f.q - 1) / p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return 1;  // q = 2
}

using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

// Reduced row echelon form in place; drops zero rows, returns pivot columns.
std::vector<std::size_t> rref(Mat& rows, const PrimeField& f) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const u64 inv = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const u64 factor = rows[i][c];
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] = f.sub(rows[i][k], f.mul(factor, rows[r][k]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Basis of {w : A w = 0} for a square matrix A.
Mat nullspace(Mat a, const PrimeField& f) {
  const std::size_t n = a.size();
  auto pivots = rref(a, f);
  std::vector<char> is_pivot(n, 0);
  for (auto p : pivots) is_pivot[p] = 1;
  Mat basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec w(n, 0);
    w[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) w[pivots[r]] = f.sub(0, a[r][free]);
    basis.push_back(std::move(w));
  }
  return basis;
}

// Characteristic polynomial via reduction to upper Hessenberg form;
// coefficients constant term first, monic of degree n.
Vec charpoly(Mat h, const PrimeField& f) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto& row : h) std::swap(row[i], row[m]);
    }
    const u64 tinv = f.inv(h[m][m - 1]);
    for (std::size_t j = m + 1; j < n; ++j) {
      const u64 u = f.mul(h[j][m - 1], tinv);
      if (u == 0) continue;
      for (std::size_t k = 0; k < n; ++k) h[j][k] = f.sub(h[j][k], f.mul(u, h[m][k]));
      for (std::size_t k = 0; k < n; ++k) h[k][m] = f.add(h[k][m], f.mul(u, h[k][j]));
    }
  }
  std::vector<Vec> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    // (x - h_mm) p_{m-1}
    Vec cur(m + 1, 0);
    const u64 hmm = h[m - 1][m - 1];
    for (std::size_t k = 0; k < p[m - 1].size(); ++k) {
      cur[k + 1] = f.add(cur[k + 1], p[m - 1][k]);
      cur[k] = f.sub(cur[k], f.mul(hmm, p[m - 1][k]));
    }
    u64 t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = f.mul(t, h[m - i][m - i - 1]);
      const u64 coef = f.mul(h[m - i - 1][m - 1], t);
      if (coef == 0) continue;
      const Vec& prev = p[m - i - 1];
      for (std::size_t k = 0; k < prev.size(); ++k) cur[k] = f.sub(cur[k], f.mul(coef, prev[k]));
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

std::vector<u64> roots_in_field(const Vec& poly, const PrimeField& f) {
  std::vector<u64> roots;
  for (u64 x = 0; x < f.q; ++x) {
    u64 acc = 0;
    for (std::size_t k = poly.size(); k-- > 0;) acc = f.add(f.mul(acc, x), poly[k]);
    if (acc == 0) roots.push_back(x);
  }
  return roots;
}

struct ClassData {
  FiniteGroup group;
  std::vector<groups::ConjClassOfElements> classes;
  std::vector<std::size_t> class_of;
  std::vector<std::size_t> inverse_class;
  // power_class[c][l] = class of rep_c^l, l < order of class c.
  std::vector<std::vector<std::size_t>> power_class;
};

ClassData class_data(const FiniteGroup& g) {
  ClassData d{g, groups::conjugacy_classes(g), {}, {}, {}};
  d.class_of = groups::class_lookup(g, d.classes);
  for (const auto& cls : d.classes) {
    const std::size_t rep = cls.member_indices.front();
    d.inverse_class.push_back(d.class_of[g.inverse(rep)]);
    std::vector<std::size_t> pw;
    for (std::size_t l = 0, y = 0; l < cls.order; ++l, y = g.multiply(rep, y)) pw.push_back(d.class_of[y]);
    d.power_class.push_back(std::move(pw));
  }
  return d;
}

// ---------------------------------------------------------------------------
// Abelian groups: characters are homomorphisms to the e-th roots of unity,
// built by extending along the generators one at a time.

std::vector<std::vector<Cyclotomic>> abelian_rows(const ClassData& d) {
  const FiniteGroup& g = d.group;
  const std::size_t n = g.order();
  const std::size_t e = g.exponent();
  std::vector<char> in_span(n, 0);
  in_span[0] = 1;
  std::vector<std::size_t> span{0};
  std::vector<std::vector<std::size_t>> exps{std::vector<std::size_t>(n, 0)};

  for (const auto& s : g.generators()) {
    const std::size_t si = g.require_index(s);
    if (in_span[si]) continue;
    std::vector<std::size_t> spow{0};
    std::size_t y = si;
    while (!in_span[y]) {
      spow.push_back(y);
      y = g.multiply(si, y);
    }
    const std::size_t k = spow.size();  // s^k = y is the first power back in the span
    std::vector<std::vector<std::size_t>> next;
    for (const auto& chi : exps) {
      const std::size_t a = chi[y];
      std::size_t b0 = e;
      for (std::size_t b = 0; b < e; ++b)
        if ((k * b) % e == a) {
          b0 = b;
          break;
        }
      if (b0 == e) fail(ErrorCode::Internal, "character does not extend along generator");
      for (std::size_t t = 0; t < k; ++t) {
        const std::size_t b = (b0 + t * (e / k)) % e;
        std::vector<std::size_t> ext(n, 0);
        for (std::size_t i = 0; i < k; ++i)
          for (auto x : span) ext[g.multiply(x, spow[i])] = (chi[x] + i * b) % e;
        next.push_back(std::move(ext));
      }
    }
    std::vector<std::size_t> grown;
    for (std::size_t i = 0; i < k; ++i)
      for (auto x : span) grown.push_back(g.multiply(x, spow[i]));
    for (auto x : grown) in_span[x] = 1;
    span = std::move(grown);
    exps = std::move(next);
  }
  if (span.size() != n) fail(ErrorCode::Internal, "generators do not span the group");

  std::vector<std::vector<Cyclotomic>> rows;
  for (const auto& chi : exps) {
    std::vector<Cyclotomic> row;
    for (const auto& cls : d.classes) {
      const std::size_t x = cls.member_indices.front();
      const std::size_t o = cls.order;
      const std::size_t step = e / o;
      if (chi[x] % step != 0) fail(ErrorCode::Internal, "character value outside Q(zeta_o)");
      row.push_back(Cyclotomic::zeta(o, static_cast<long long>(chi[x] / step)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Dixon-Schneider. The normalised characters w_i(C_j) = |C_j| chi_i(g_j) /
// chi_i(1) are the common eigenvectors of the class matrices
// M_j[k][l] = #{x in C_j : x^-1 z_l in C_k}, z_l a representative of C_l.

std::vector<std::vector<Cyclotomic>> dixon_rows(const ClassData& d) {
  const FiniteGroup& g = d.group;
  const std::size_t r = d.classes.size();
  const u64 order = g.order();
  const u64 e = g.exponent();
  const PrimeField f{choose_prime(e, order)};
  const u64 zeta_e = f.pow(primitive_root(f), (f.q - 1) / e);

  std::vector<std::optional<Mat>> class_matrix(r);
  auto matrix_for = [&](std::size_t j) -> const Mat& {
    if (!class_matrix[j]) {
      Mat m(r, Vec(r, 0));
      for (std::size_t l = 0; l < r; ++l) {
        const std::size_t z = d.classes[l].member_indices.front();
        for (auto x : d.classes[j].member_indices) {
          const std::size_t k = d.class_of[g.multiply(g.inverse(x), z)];
          m[k][l] = f.add(m[k][l], 1);
        }
      }
      class_matrix[j] = std::move(m);
    }
    return *class_matrix[j];
  };

  struct Space {
    Mat basis;  // rows in reduced echelon form
    std::size_t next_class;
  };
  Mat identity(r, Vec(r, 0));
  for (std::size_t i = 0; i < r; ++i) identity[i][i] = 1;
  std::deque<Space> pending{{identity, 1}};
  std::vector<Vec> eigenvectors;

  while (!pending.empty()) {
    Space space = std::move(pending.front());
    pending.pop_front();
    const std::size_t dim = space.basis.size();
    if (dim == 1) {
      eigenvectors.push_back(space.basis.front());
      continue;
    }
    Mat tmp = space.basis;
    const auto pivots = rref(tmp, f);
    bool split = false;
    for (std::size_t j = space.next_class; j < r && !split; ++j) {
      const Mat& m = matrix_for(j);
      // Restriction of M_j to the space, in the echelon basis.
      Mat a(dim, Vec(dim, 0));
      for (std::size_t s = 0; s < dim; ++s) {
        const Vec& b = space.basis[s];
        for (std::size_t t = 0; t < dim; ++t) {
          const auto& row = m[pivots[t]];
          u64 acc = 0;
          for (std::size_t l = 0; l < r; ++l)
            if (b[l] != 0 && row[l] != 0) acc = f.add(acc, f.mul(row[l], b[l]));
          a[t][s] = acc;
        }
      }
      bool scalar = true;
      for (std::size_t t = 0; t < dim && scalar; ++t)
        for (std::size_t s = 0; s < dim; ++s)
          if (a[t][s] != (t == s ? a[0][0] : 0)) {
            scalar = false;
            break;
          }
      if (scalar) continue;

      std::size_t found = 0;
      for (u64 lambda : roots_in_field(charpoly(a, f), f)) {
        Mat shifted = a;
        for (std::size_t t = 0; t < dim; ++t) shifted[t][t] = f.sub(shifted[t][t], lambda);
        Mat sub;
        for (const auto& w : nullspace(shifted, f)) {
          Vec v(r, 0);
          for (std::size_t s = 0; s < dim; ++s)
            if (w[s] != 0)
              for (std::size_t l = 0; l < r; ++l) v[l] = f.add(v[l], f.mul(w[s], space.basis[s][l]));
          sub.push_back(std::move(v));
        }
        rref(sub, f);
        found += sub.size();
        pending.push_back({std::move(sub), j + 1});
      }
      if (found != dim) fail(ErrorCode::Internal, "class matrix not diagonalisable over F_q");
      split = true;
    }
    if (!split) fail(ErrorCode::Internal, "class matrices fail to separate characters");
  }
  if (eigenvectors.size() != r) fail(ErrorCode::Internal, "wrong number of characters");

  std::vector<std::vector<Cyclotomic>> rows;
  const auto isqrt_order = static_cast<u64>(std::sqrt(static_cast<double>(order))) + 1;
  for (const auto& omega : eigenvectors) {
    if (omega[0] != 1) fail(ErrorCode::Internal, "eigenvector not normalised at the identity");
    // d^2 = |G| / sum_j w_j w_{j*} / |C_j|
    u64 s = 0;
    for (std::size_t j = 0; j < r; ++j) {
      const u64 size = d.classes[j].members.size();
      s = f.add(s, f.mul(f.mul(omega[j], omega[d.inverse_class[j]]), f.inv(size % f.q)));
    }
    const u64 d2 = f.mul(order % f.q, f.inv(s));
    u64 degree = 0;
    for (u64 cand = 1; cand <= isqrt_order; ++cand)
      if (f.mul(cand, cand) == d2) {
        degree = cand;
        break;
      }
    if (degree == 0) fail(ErrorCode::Internal, "degree recovery failed");

    Vec theta(r);
    for (std::size_t j = 0; j < r; ++j)
      theta[j] = f.mul(f.mul(omega[j], degree), f.inv(d.classes[j].members.size() % f.q));

    std::vector<Cyclotomic> row;
    for (std::size_t j = 0; j < r; ++j) {
      const std::size_t o = d.classes[j].order;
      const u64 zeta_o = f.pow(zeta_e, e / o);
      const u64 inv_o = f.inv(o % f.q);
      std::vector<Rational> mult(o);
      u64 total = 0;
      for (std::size_t k = 0; k < o; ++k) {
        // Multiplicity of the eigenvalue zeta_o^k of g_j.
        u64 acc = 0;
        for (std::size_t l = 0; l < o; ++l) {
          const u64 root = f.pow(zeta_o, (o - (k * l) % o) % o);
          acc = f.add(acc, f.mul(theta[d.power_class[j][l]], root));
        }
        acc = f.mul(acc, inv_o);
        if (acc > degree) fail(ErrorCode::Internal, "eigenvalue multiplicity out of range");
        total += acc;
        mult[k] = static_cast<unsigned long>(acc);
      }
      if (total != degree) fail(ErrorCode::Internal, "eigenvalue multiplicities do not sum to degree");
      row.push_back(Cyclotomic::from_powers(o, std::move(mult)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::size_t degree_of(const std::vector<Cyclotomic>& row) {
  const auto& v = row.front();
  if (!v.is_rational() || sgn(v.rational_part()) <= 0 || v.rational_part().get_den() != 1)
    fail(ErrorCode::Internal, "character degree is not a positive integer");
  return v.rational_part().get_num().get_ui();
}

bool is_trivial_row(const std::vector<Cyclotomic>& row) {
  for (const auto& v : row)
    if (!(v.is_rational() && v.rational_part() == 1)) return false;
  return true;
}

}  // namespace

CharacterTable character_table(const groups::FiniteGroup& g, const TableLimits& limits) {
  if (g.order() > limits.max_order)
    fail(ErrorCode::GroupTooLarge, "group order " + std::to_string(g.order()) + " exceeds table cap");
  ClassData d = class_data(g);
  if (d.classes.size() > limits.max_classes) {
    fail(ErrorCode::GroupTooLarge, std::to_string(d.classes.size()) + " classes exceed table cap " +
                                       std::to_string(limits.max_classes));
  }
  auto rows = g.is_abelian() ? abelian_rows(d) : dixon_rows(d);

  const std::size_t e = g.exponent();
  std::vector<std::size_t> order(rows.size());
  std::vector<std::size_t> degrees;
  std::vector<char> trivial;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    order[i] = i;
    degrees.push_back(degree_of(rows[i]));
    trivial.push_back(is_trivial_row(rows[i]) ? 1 : 0);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
    if (trivial[a] != trivial[b]) return trivial[a] > trivial[b];
    for (std::size_t c = 0; c < rows[a].size(); ++c) {
      const int cmp = cyclo::compare_at(rows[a][c], rows[b][c], e);
      if (cmp != 0) return cmp < 0;
    }
    return false;
  });

  CharacterTable t{g, std::move(d.classes), {}, {}, std::move(d.inverse_class)};
  for (auto i : order) {
    t.rows.push_back(std::move(rows[i]));
    t.degrees.push_back(degrees[i]);
  }
  if (!check_orthogonality(t).rows_ok) fail(ErrorCode::Internal, "computed table fails row orthogonality");
  return t;
}

Cyclotomic inner_product_value(const CharacterTable& t, std::span<const Cyclotomic> phi,
                               std::span<const Cyclotomic> psi) {
  if (phi.size() != t.classes.size() || psi.size() != t.classes.size())
    fail(ErrorCode::ShapeMismatch, "class function length differs from class count");
  Cyclotomic acc;
  for (std::size_t c = 0; c < phi.size(); ++c) {
    const auto size = static_cast<long long>(t.classes[c].members.size());
    acc += Cyclotomic(size) * phi[c] * conj(psi[c]);
  }
  return acc * Cyclotomic(cyclo::make_rational(1, static_cast<long>(t.group.order())));
}

Rational inner_product(const CharacterTable& t, std::span<const Cyclotomic> phi,
                       std::span<const Cyclotomic> psi) {
  const Cyclotomic v = inner_product_value(t, phi, psi);
  if (!v.is_rational()) fail(ErrorCode::NotRational, "inner product " + v.to_string() + " is not rational");
  return v.rational_part();
}

std::vector<Cyclotomic> permutation_character(const CharacterTable& t) {
  std::vector<Cyclotomic> out;
  for (const auto& cls : t.classes) {
    long long fixed = 0;
    for (std::size_t i = 0; i < cls.representative.degree(); ++i)
      if (cls.representative(i) == i) ++fixed;
    out.emplace_back(fixed);
  }
  return out;
}

OrthogonalityReport check_orthogonality(const CharacterTable& t) {
  OrthogonalityReport rep;
  const std::size_t r = t.rows.size();
  rep.rows_ok = r == t.classes.size();
  for (std::size_t i = 0; i < r && rep.rows_ok; ++i)
    for (std::size_t j = i; j < r; ++j) {
      const Cyclotomic ip = inner_product_value(t, t.rows[i], t.rows[j]);
      if (!(ip == Cyclotomic(i == j ? 1 : 0))) {
        rep.rows_ok = false;
        break;
      }
    }
  rep.columns_ok = r == t.classes.size();
  for (std::size_t a = 0; a < r && rep.columns_ok; ++a)
    for (std::size_t b = a; b < r; ++b) {
      Cyclotomic s;
      for (std::size_t i = 0; i < r; ++i) s += t.rows[i][a] * conj(t.rows[i][b]);
      const Cyclotomic expect =
          a == b ? Cyclotomic(cyclo::make_rational(static_cast<long>(t.group.order()),
                                                  static_cast<long>(t.classes[a].members.size())))
                 : Cyclotomic(0);
      if (!(s == expect)) {
        rep.columns_ok = false;
        break;
      }
    }
  std::size_t sum = 0;
  for (auto d : t.degrees) sum += d * d;
  rep.degrees_ok = sum == t.group.order();
  return rep;
}

}  // namespace stacky::chars
