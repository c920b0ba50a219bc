#include "stacky/verify.hpp"

#include <cstdio>

#include "stacky/character_table.hpp"
#include "stacky/correspondence.hpp"
#include "stacky/error.hpp"

namespace stacky::verify {

using motive::EquivariantModel;

namespace {

class Fnv {
public:
  void add(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h_ ^= (v >> (8 * i)) & 0xff;
      h_ *= 0x100000001b3ULL;
    }
  }
  void add_group(const groups::FiniteGroup& g) {
    add(g.degree());
    add(g.generators().size());
    for (const auto& s : g.generators())
      for (auto x : s.images()) add(x);
  }
  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h_));
    return buf;
  }

private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

std::map<int, std::uint64_t> ranks_of(const motive::Motive& m) { return m.tate_ranks(); }

VerificationReport make(std::string name, std::string digest, std::string lhs, std::string rhs) {
  const bool pass = lhs == rhs;
  return VerificationReport{std::move(name), std::move(digest), std::move(lhs), std::move(rhs), pass};
}

}  // namespace

std::string render_ranks(const std::map<int, std::uint64_t>& ranks) {
  std::vector<motive::Term> terms;
  for (const auto& [tw, n] : ranks) terms.push_back(motive::Term{motive::Atom::unit(), tw, n});
  return motive::poincare_polynomial(motive::Motive(std::move(terms)));
}

std::string model_digest(const EquivariantModel& x, std::size_t p) {
  Fnv f;
  f.add_group(x.group());
  f.add(x.kind() == motive::ModelKind::HSet ? 0 : 1);
  f.add(x.size());
  for (const auto& c : x.cells()) {
    f.add(static_cast<std::uint64_t>(c.dim));
    if (c.fixed_locus) {
      f.add(c.fixed_locus->size() + 1);
      for (int d : *c.fixed_locus) f.add(static_cast<std::uint64_t>(d));
    } else {
      f.add(0);
    }
  }
  for (const auto& img : x.generator_images())
    for (auto v : img) f.add(v);
  return f.hex() + ";p=" + std::to_string(p);
}

std::string group_digest(const groups::FiniteGroup& g) {
  Fnv f;
  f.add_group(g);
  return f.hex();
}

VerificationReport check_inertia_dimension(const EquivariantModel& x, std::size_t p, stack::ExecPolicy policy) {
  const auto chi = stack::motive_chi_quotient(x, p, policy);
  const auto inertia = stack::inertia_motive(x, p, policy);
  return make("inertia-dim", model_digest(x, p), render_ranks(ranks_of(chi.total)), render_ranks(ranks_of(inertia)));
}

VerificationReport check_kunneth(const EquivariantModel& x, const groups::FiniteGroup& h, std::size_t p,
                                 stack::ExecPolicy policy) {
  const auto product = stack::times_classifying(x, h);
  const auto lhs = ranks_of(stack::motive_chi_quotient(product, p, policy).total);
  const auto a = ranks_of(stack::motive_chi_quotient(x, p, policy).total);
  const auto b = ranks_of(stack::motive_chi_BH(h, p).motive);
  std::map<int, std::uint64_t> conv;
  for (const auto& [i, ni] : a)
    for (const auto& [j, nj] : b) conv[i + j] += ni * nj;
  return make("kunneth", model_digest(x, p) + ";H=" + group_digest(h), render_ranks(lhs), render_ranks(conv));
}

VerificationReport check_rep_ring_vs_classes(const groups::FiniteGroup& h) {
  const std::string digest = group_digest(h);
  const std::size_t bh = stack::motive_chi_BH(h, 0).motive.total_tate_rank();
  std::string lhs;
  try {
    // rep_ring re-evaluates chi_i chi_j = sum_k n^{i,j}_k chi_k on every class
    // and refuses the table if any identity fails.
    const auto ring = chars::rep_ring(chars::character_table(h));
    lhs = std::to_string(ring.rank());
    if (!chars::rep_ring_axioms_hold(ring)) lhs += " (ring axioms fail)";
  } catch (const Error& e) {
    lhs = std::string("error: ") + e.what();
  }
  return make("rep-ring", digest, lhs, std::to_string(bh));
}

VerificationReport check_degree_splitting(std::span<const std::size_t> f, std::size_t target_size, std::size_t m) {
  Fnv fnv;
  fnv.add(target_size);
  fnv.add(m);
  for (auto v : f) fnv.add(v);
  std::string lhs;
  const std::string rhs = corr::QMatrix::identity(target_size).scaled(corr::Rational(static_cast<unsigned long>(m))).to_string();
  try {
    const auto g = corr::graph_correspondences(f, target_size);
    lhs = corr::compose(g.pushforward, g.pullback).block(0).to_string();
    const auto cert = corr::splitting_certificate(f, target_size, m);
    const auto p = corr::compose(cert.inclusion, cert.retraction);
    if (!corr::is_idempotent(p)) lhs += " (projector not idempotent)";
    if (!(corr::compose(cert.retraction, cert.inclusion) == corr::Correspondence::identity(cert.image)))
      lhs += " (r o i differs from id)";
    const auto split = corr::split_idempotent(p);
    if (!(corr::compose(split.inclusion, split.retraction) == p)) lhs += " (split i o r differs from p)";
    if (split.image.total_tate_rank() != target_size) lhs += " (image rank differs from target size)";
  } catch (const Error& e) {
    lhs = std::string("error: ") + e.what();
  }
  return make("splitting", fnv.hex(), lhs, rhs);
}

}  // namespace stacky::verify
