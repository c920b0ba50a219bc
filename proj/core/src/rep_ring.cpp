#include "stacky/character_table.hpp"
#include "stacky/error.hpp"

namespace stacky::chars {

RepRing::RepRing(CharacterTable table, std::vector<long> constants)
    : table_(std::move(table)), constants_(std::move(constants)) {
  const std::size_t r = table_.size();
  if (constants_.size() != r * r * r) fail(ErrorCode::ShapeMismatch, "structure tensor has wrong size");
}

long RepRing::constant(std::size_t i, std::size_t j, std::size_t k) const {
  const std::size_t r = rank();
  return constants_.at((i * r + j) * r + k);
}

std::vector<std::vector<long>> RepRing::product_matrix() const {
  const std::size_t r = rank();
  std::vector<std::vector<long>> out(r * r, std::vector<long>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) out[i * r + j][k] = constant(i, j, k);
  return out;
}

RepRing rep_ring(const CharacterTable& t) {
  const std::size_t r = t.size();
  const std::size_t ncls = t.classes.size();
  std::vector<long> constants(r * r * r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      std::vector<Cyclotomic> product(ncls);
      for (std::size_t c = 0; c < ncls; ++c) product[c] = t.rows[i][c] * t.rows[j][c];
      for (std::size_t k = 0; k < r; ++k) {
        const Rational n = inner_product(t, product, t.rows[k]);
        if (n.get_den() != 1 || sgn(n) < 0 || !n.get_num().fits_slong_p()) {
          fail(ErrorCode::NonIntegralConstant, "n^{" + std::to_string(i) + "," + std::to_string(j) + "}_" +
                                                   std::to_string(k) + " = " + n.get_str());
        }
        constants[(i * r + j) * r + k] = n.get_num().get_si();
        constants[(j * r + i) * r + k] = n.get_num().get_si();
      }
      // The decomposition must reproduce the product pointwise.
      for (std::size_t c = 0; c < ncls; ++c) {
        Cyclotomic sum;
        for (std::size_t k = 0; k < r; ++k) {
          const long n = constants[(i * r + j) * r + k];
          if (n != 0) sum += Cyclotomic(static_cast<long long>(n)) * t.rows[k][c];
        }
        if (!(sum == product[c]))
          fail(ErrorCode::NonIntegralConstant, "pointwise product identity fails on class " + std::to_string(c));
      }
    }
  }
  return RepRing(t, std::move(constants));
}

bool rep_ring_axioms_hold(const RepRing& ring) {
  const std::size_t r = ring.rank();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        if (ring.constant(i, j, k) != ring.constant(j, i, k)) return false;
        if (ring.constant(i, j, k) < 0) return false;
      }
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = 0; k < r; ++k)
      if (ring.constant(0, j, k) != (j == k ? 1 : 0)) return false;
  // (a b) c = a (b c) as tensors: sum_m n^{ab}_m n^{mc}_k = sum_m n^{bc}_m n^{am}_k
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t c = 0; c < r; ++c)
        for (std::size_t k = 0; k < r; ++k) {
          long lhs = 0;
          long rhs = 0;
          for (std::size_t m = 0; m < r; ++m) {
            lhs += ring.constant(a, b, m) * ring.constant(m, c, k);
            rhs += ring.constant(b, c, m) * ring.constant(a, m, k);
          }
          if (lhs != rhs) return false;
        }
  return true;
}

}  // namespace stacky::chars
