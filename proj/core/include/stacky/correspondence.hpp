#pragma once

// Correspondences between Tate motives. Hom(L^a, L^b) is Q when a = b and
// zero otherwise, so a correspondence is one rational matrix per twist:
// block(m) has shape (target multiplicity at m) x (source multiplicity at m).

#include <cstddef>
#include <map>
#include <span>

#include "stacky/motive.hpp"
#include "stacky/rational_matrix.hpp"

namespace stacky::corr {

class Correspondence {
public:
  /// Both motives must be Tate; blocks missing from `blocks` are zero.
  /// Throws ShapeMismatch on a non-Tate motive or a misshapen block.
  Correspondence(motive::Motive source, motive::Motive target, std::map<int, QMatrix> blocks);

  static Correspondence identity(const motive::Motive& m);
  static Correspondence zero(const motive::Motive& source, const motive::Motive& target);

  const motive::Motive& source() const noexcept { return source_; }
  const motive::Motive& target() const noexcept { return target_; }
  /// One block for every twist occurring in source or target.
  const std::map<int, QMatrix>& blocks() const noexcept { return blocks_; }
  const QMatrix& block(int twist) const;

  bool is_endomorphism() const { return source_ == target_; }
  Correspondence scaled(const Rational& s) const;

  friend bool operator==(const Correspondence&, const Correspondence&) = default;

private:
  motive::Motive source_;
  motive::Motive target_;
  std::map<int, QMatrix> blocks_;
};

/// x o y: apply y first, then x. Requires x.source() == y.target()
/// (ShapeMismatch otherwise); the result maps y.source() to x.target().
Correspondence compose(const Correspondence& x, const Correspondence& y);
Correspondence transpose(const Correspondence& x);

struct GraphCorrespondences {
  Correspondence pullback;     // [f^*] : 1^k -> 1^n
  Correspondence pushforward;  // [f_*] = [f^*]^t : 1^n -> 1^k
};

/// Graph correspondences of a map f : {0..n-1} -> {0..k-1}, given as the
/// image array. [f^*] has a 1 at (a, f(a)). Throws NotTotal for an image out
/// of range.
GraphCorrespondences graph_correspondences(std::span<const std::size_t> f, std::size_t target_size);

struct SplitFactor {
  motive::Motive image;
  Correspondence inclusion;   // image -> ambient
  Correspondence retraction;  // ambient -> image
};

bool is_idempotent(const Correspondence& p);

/// Factors an idempotent p = i o r with r o i = id, block by block: i spans
/// the column space of p in reduced form and r reads off the coordinates at
/// the pivot rows. Both identities are checked before returning. Throws
/// NotIdempotent unless p o p = p.
SplitFactor split_idempotent(const Correspondence& p);

/// For a finite cover f with every fibre of size m, (1/m)[f_*] is a left
/// inverse of [f^*], so h(target) is a direct factor of h(source) through
/// i = [f^*], r = (1/m)[f_*]. Throws NotEquidegree when some fibre has a
/// different size (including empty fibres).
SplitFactor splitting_certificate(std::span<const std::size_t> f, std::size_t target_size, std::size_t m);

}  // namespace stacky::corr
