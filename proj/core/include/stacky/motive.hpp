#pragma once

// Formal motives: finite direct sums of twisted atoms. The unit atom at
// twist m is the Tate motive L^m; the other atoms are indivisible symbols
// (the weight-one part of a curve, an etale cover, a named opaque piece).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace stacky::motive {

enum class AtomKind { Unit, H1, Cover, Opaque };

class Atom {
public:
  static Atom unit() { return Atom(); }
  /// Weight-one part of a genus-g curve, rank 2g. Requires g >= 1.
  static Atom h1(std::size_t genus);
  /// Degree-d connected etale cover of the motive labelled `base`; d >= 2.
  static Atom cover(std::string base, std::size_t degree);
  static Atom opaque(std::string label);

  AtomKind kind() const noexcept { return kind_; }
  bool is_unit() const noexcept { return kind_ == AtomKind::Unit; }
  std::size_t genus() const noexcept { return number_; }
  std::size_t degree() const noexcept { return number_; }
  const std::string& label() const noexcept { return label_; }
  /// Annotated rank: 1 for the unit, 2g for H1(g), 0 when unknown.
  std::size_t rank_annotation() const noexcept;

  /// "1", "H1_2", "Cover(X,2)" or the opaque label.
  std::string symbol() const;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;

private:
  Atom() = default;
  AtomKind kind_ = AtomKind::Unit;
  std::string label_;
  std::size_t number_ = 0;
};

struct Term {
  Atom atom;
  int twist = 0;
  std::uint64_t multiplicity = 1;

  friend bool operator==(const Term&, const Term&) = default;
};

/// A canonical multiset of twisted atoms: terms sorted by (twist, atom),
/// equal pairs merged, multiplicities positive.
class Motive {
public:
  Motive() = default;
  explicit Motive(std::vector<Term> terms);

  /// L^twist repeated `multiplicity` times.
  static Motive tate(int twist = 0, std::uint64_t multiplicity = 1);
  static Motive atom(Atom a, int twist = 0, std::uint64_t multiplicity = 1);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  bool is_tate() const noexcept;

  std::uint64_t multiplicity(const Atom& a, int twist) const;
  /// Unit multiplicity per twist (twists with zero multiplicity omitted).
  std::map<int, std::uint64_t> tate_ranks() const;
  std::uint64_t total_tate_rank() const;

  friend bool operator==(const Motive&, const Motive&) = default;

private:
  std::vector<Term> terms_;
};

Motive direct_sum(const Motive& a, const Motive& b);
/// a repeated n times.
Motive repeat(const Motive& a, std::uint64_t n);
/// Tensor product. One side must be a pure sum of units; a product of two
/// non-unit atoms raises OpaqueTensor.
Motive tensor(const Motive& a, const Motive& b);
/// Tensor with L^k.
Motive twist(const Motive& a, int k);

/// "4 + L", "1 + [H1_1] + L", "0" for the zero motive.
std::string poincare_polynomial(const Motive& m);
/// One term as it appears in poincare_polynomial, e.g. "[Cover(X,2)]·L".
std::string render_term(const Term& t);

struct ChowDim {
  std::uint64_t tate_dim = 0;
  /// Non-unit terms at twist <= m; their Chow groups are not determined
  /// by the Tate data and are reported rather than counted.
  std::vector<Term> opaque_terms;
};

/// dim Hom(L^m, M) from the unit part, plus the opaque contributions.
ChowDim chow_dim(const Motive& m, int codim);

/// h(C) = 1 + H1(g) + L for a smooth projective curve of genus g.
Motive curve_motive(std::size_t genus);

}  // namespace stacky::motive
