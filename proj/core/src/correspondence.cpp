#include "stacky/correspondence.hpp"

#include <set>

#include "stacky/error.hpp"

namespace stacky::corr {

using motive::Motive;

namespace {

std::size_t mult_at(const Motive& m, int twist) {
  auto ranks = m.tate_ranks();
  auto it = ranks.find(twist);
  return it == ranks.end() ? 0 : static_cast<std::size_t>(it->second);
}

}  // namespace

Correspondence::Correspondence(Motive source, Motive target, std::map<int, QMatrix> blocks)
    : source_(std::move(source)), target_(std::move(target)) {
  if (!source_.is_tate() || !target_.is_tate())
    fail(ErrorCode::ShapeMismatch, "correspondences are only defined between Tate motives");
  std::set<int> twists;
  for (const auto& t : source_.terms()) twists.insert(t.twist);
  for (const auto& t : target_.terms()) twists.insert(t.twist);
  for (const auto& [tw, b] : blocks) {
    if (!twists.count(tw) && !b.is_zero())
      fail(ErrorCode::ShapeMismatch, "nonzero block at twist " + std::to_string(tw) + " outside both motives");
  }
  for (int tw : twists) {
    const std::size_t rows = mult_at(target_, tw);
    const std::size_t cols = mult_at(source_, tw);
    auto it = blocks.find(tw);
    if (it == blocks.end()) {
      blocks_.emplace(tw, QMatrix(rows, cols));
      continue;
    }
    if (it->second.rows() != rows || it->second.cols() != cols) {
      fail(ErrorCode::ShapeMismatch, "block at twist " + std::to_string(tw) + " is " +
                                         std::to_string(it->second.rows()) + "x" + std::to_string(it->second.cols()) +
                                         ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
    }
    blocks_.emplace(tw, it->second);
  }
}

Correspondence Correspondence::identity(const Motive& m) {
  std::map<int, QMatrix> blocks;
  for (const auto& [tw, n] : m.tate_ranks()) blocks.emplace(tw, QMatrix::identity(n));
  return Correspondence(m, m, std::move(blocks));
}

Correspondence Correspondence::zero(const Motive& source, const Motive& target) {
  return Correspondence(source, target, {});
}

const QMatrix& Correspondence::block(int twist) const {
  auto it = blocks_.find(twist);
  if (it == blocks_.end()) fail(ErrorCode::ShapeMismatch, "no block at twist " + std::to_string(twist));
  return it->second;
}

Correspondence Correspondence::scaled(const Rational& s) const {
  std::map<int, QMatrix> blocks;
  for (const auto& [tw, b] : blocks_) blocks.emplace(tw, b.scaled(s));
  return Correspondence(source_, target_, std::move(blocks));
}

Correspondence compose(const Correspondence& x, const Correspondence& y) {
  if (!(x.source() == y.target())) {
    fail(ErrorCode::ShapeMismatch, "cannot compose: source " + motive::poincare_polynomial(x.source()) +
                                       " differs from target " + motive::poincare_polynomial(y.target()));
  }
  std::map<int, QMatrix> blocks;
  std::set<int> twists;
  for (const auto& t : y.source().terms()) twists.insert(t.twist);
  for (const auto& t : x.target().terms()) twists.insert(t.twist);
  for (int tw : twists) {
    const std::size_t rows = mult_at(x.target(), tw);
    const std::size_t cols = mult_at(y.source(), tw);
    auto xi = x.blocks().find(tw);
    auto yi = y.blocks().find(tw);
    if (xi == x.blocks().end() || yi == y.blocks().end()) {
      blocks.emplace(tw, QMatrix(rows, cols));
    } else {
      blocks.emplace(tw, xi->second * yi->second);
    }
  }
  return Correspondence(y.source(), x.target(), std::move(blocks));
}

Correspondence transpose(const Correspondence& x) {
  std::map<int, QMatrix> blocks;
  for (const auto& [tw, b] : x.blocks()) blocks.emplace(tw, b.transpose());
  return Correspondence(x.target(), x.source(), std::move(blocks));
}

GraphCorrespondences graph_correspondences(std::span<const std::size_t> f, std::size_t target_size) {
  QMatrix pull(f.size(), target_size);
  for (std::size_t a = 0; a < f.size(); ++a) {
    if (f[a] >= target_size) {
      fail(ErrorCode::NotTotal, "point " + std::to_string(a) + " maps to " + std::to_string(f[a]) +
                                    ", outside target of size " + std::to_string(target_size));
    }
    pull(a, f[a]) = 1;
  }
  const Motive src = Motive::tate(0, f.size());
  const Motive tgt = Motive::tate(0, target_size);
  Correspondence pullback(tgt, src, {{0, pull}});
  return GraphCorrespondences{pullback, transpose(pullback)};
}

bool is_idempotent(const Correspondence& p) {
  return p.is_endomorphism() && compose(p, p) == p;
}

SplitFactor split_idempotent(const Correspondence& p) {
  if (!p.is_endomorphism()) fail(ErrorCode::NotIdempotent, "not an endomorphism");
  if (!(compose(p, p) == p)) fail(ErrorCode::NotIdempotent, "p o p differs from p");

  std::vector<motive::Term> image_terms;
  std::map<int, QMatrix> incl;
  std::map<int, QMatrix> retr;
  for (const auto& [tw, b] : p.blocks()) {
    // Rows of rref(p^t) are a basis of the column space of p with an
    // identity in the pivot positions.
    const Echelon e = row_echelon(b.transpose());
    const std::size_t k = e.pivots.size();
    image_terms.push_back(motive::Term{motive::Atom::unit(), tw, k});
    incl.emplace(tw, e.reduced.transpose());
    QMatrix r(k, b.cols());
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) = b(e.pivots[i], j);
    retr.emplace(tw, std::move(r));
  }
  Motive image(std::move(image_terms));
  SplitFactor out{image, Correspondence(image, p.source(), std::move(incl)),
                  Correspondence(p.source(), image, std::move(retr))};
  if (!(compose(out.inclusion, out.retraction) == p))
    fail(ErrorCode::Internal, "split factor fails i o r = p");
  if (!(compose(out.retraction, out.inclusion) == Correspondence::identity(image)))
    fail(ErrorCode::Internal, "split factor fails r o i = id");
  return out;
}

SplitFactor splitting_certificate(std::span<const std::size_t> f, std::size_t target_size, std::size_t m) {
  if (m == 0) fail(ErrorCode::NotEquidegree, "degree must be positive");
  std::vector<std::size_t> fibre(target_size, 0);
  for (std::size_t a = 0; a < f.size(); ++a) {
    if (f[a] >= target_size) fail(ErrorCode::NotTotal, "point " + std::to_string(a) + " maps outside the target");
    ++fibre[f[a]];
  }
  for (std::size_t b = 0; b < target_size; ++b)
    if (fibre[b] != m)
      fail(ErrorCode::NotEquidegree, "fibre over " + std::to_string(b) + " has " + std::to_string(fibre[b]) +
                                         " points, expected " + std::to_string(m));

  auto [pull, push] = graph_correspondences(f, target_size);
  const Correspondence retraction = push.scaled(Rational(1, static_cast<unsigned long>(m)));
  const Motive image = pull.source();
  if (!(compose(retraction, pull) == Correspondence::identity(image)))
    fail(ErrorCode::Internal, "(1/m)[f_*] is not a left inverse of [f^*]");
  const Correspondence projector = compose(pull, retraction);
  if (!is_idempotent(projector)) fail(ErrorCode::Internal, "(1/m)[f^*][f_*] is not idempotent");
  return SplitFactor{image, pull, retraction};
}

}  // namespace stacky::corr
