#include "stacky/motive.hpp"

#include <algorithm>
#include <sstream>

#include "stacky/error.hpp"

namespace stacky::motive {

Atom Atom::h1(std::size_t genus) {
  if (genus == 0) fail(ErrorCode::ValidationError, "H1 atom needs genus >= 1");
  Atom a;
  a.kind_ = AtomKind::H1;
  a.number_ = genus;
  return a;
}

Atom Atom::cover(std::string base, std::size_t degree) {
  if (degree < 2) fail(ErrorCode::ValidationError, "cover degree must be >= 2");
  if (base.empty()) fail(ErrorCode::ValidationError, "cover needs a base label");
  Atom a;
  a.kind_ = AtomKind::Cover;
  a.label_ = std::move(base);
  a.number_ = degree;
  return a;
}

Atom Atom::opaque(std::string label) {
  if (label.empty()) fail(ErrorCode::ValidationError, "opaque atom needs a label");
  Atom a;
  a.kind_ = AtomKind::Opaque;
  a.label_ = std::move(label);
  return a;
}

std::size_t Atom::rank_annotation() const noexcept {
  switch (kind_) {
    case AtomKind::Unit: return 1;
    case AtomKind::H1: return 2 * number_;
    default: return 0;
  }
}

std::string Atom::symbol() const {
  switch (kind_) {
    case AtomKind::Unit: return "1";
    case AtomKind::H1: return "H1_" + std::to_string(number_);
    case AtomKind::Cover: return "Cover(" + label_ + "," + std::to_string(number_) + ")";
    case AtomKind::Opaque: return label_;
  }
  return "?";
}

Motive::Motive(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    if (a.twist != b.twist) return a.twist < b.twist;
    return a.atom < b.atom;
  });
  for (auto& t : terms) {
    if (t.multiplicity == 0) continue;
    if (!terms_.empty() && terms_.back().twist == t.twist && terms_.back().atom == t.atom) {
      terms_.back().multiplicity += t.multiplicity;
    } else {
      terms_.push_back(std::move(t));
    }
  }
}

Motive Motive::tate(int twist, std::uint64_t multiplicity) {
  return Motive({Term{Atom::unit(), twist, multiplicity}});
}

Motive Motive::atom(Atom a, int twist, std::uint64_t multiplicity) {
  return Motive({Term{std::move(a), twist, multiplicity}});
}

bool Motive::is_tate() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.atom.is_unit(); });
}

std::uint64_t Motive::multiplicity(const Atom& a, int twist) const {
  for (const auto& t : terms_)
    if (t.twist == twist && t.atom == a) return t.multiplicity;
  return 0;
}

std::map<int, std::uint64_t> Motive::tate_ranks() const {
  std::map<int, std::uint64_t> out;
  for (const auto& t : terms_)
    if (t.atom.is_unit()) out[t.twist] += t.multiplicity;
  return out;
}

std::uint64_t Motive::total_tate_rank() const {
  std::uint64_t n = 0;
  for (const auto& t : terms_)
    if (t.atom.is_unit()) n += t.multiplicity;
  return n;
}

Motive direct_sum(const Motive& a, const Motive& b) {
  std::vector<Term> all = a.terms();
  all.insert(all.end(), b.terms().begin(), b.terms().end());
  return Motive(std::move(all));
}

Motive repeat(const Motive& a, std::uint64_t n) {
  std::vector<Term> out = a.terms();
  for (auto& t : out) t.multiplicity *= n;
  return Motive(std::move(out));
}

Motive tensor(const Motive& a, const Motive& b) {
  if (!a.is_tate() && !b.is_tate())
    fail(ErrorCode::OpaqueTensor, "both factors contain non-unit atoms");
  const Motive& units = a.is_tate() ? a : b;
  const Motive& other = a.is_tate() ? b : a;
  std::vector<Term> out;
  for (const auto& u : units.terms())
    for (const auto& t : other.terms())
      out.push_back(Term{t.atom, t.twist + u.twist, t.multiplicity * u.multiplicity});
  return Motive(std::move(out));
}

Motive twist(const Motive& a, int k) {
  std::vector<Term> out = a.terms();
  for (auto& t : out) t.twist += k;
  return Motive(std::move(out));
}

namespace {

std::string lefschetz_power(int twist) {
  if (twist == 1) return "L";
  return "L^" + std::to_string(twist);
}

}  // namespace

std::string render_term(const Term& t) {
  std::ostringstream os;
  if (t.atom.is_unit()) {
    if (t.twist == 0) {
      os << t.multiplicity;
    } else {
      if (t.multiplicity != 1) os << t.multiplicity << "·";
      os << lefschetz_power(t.twist);
    }
    return os.str();
  }
  if (t.multiplicity != 1) os << t.multiplicity << "·";
  os << '[' << t.atom.symbol() << ']';
  if (t.twist != 0) os << "·" << lefschetz_power(t.twist);
  return os.str();
}

std::string poincare_polynomial(const Motive& m) {
  if (m.empty()) return "0";
  std::string out;
  for (const auto& t : m.terms()) {
    if (!out.empty()) out += " + ";
    out += render_term(t);
  }
  return out;
}

ChowDim chow_dim(const Motive& m, int codim) {
  ChowDim d;
  for (const auto& t : m.terms()) {
    if (t.atom.is_unit()) {
      if (t.twist == codim) d.tate_dim += t.multiplicity;
    } else if (t.twist <= codim) {
      d.opaque_terms.push_back(t);
    }
  }
  return d;
}

Motive curve_motive(std::size_t genus) {
  std::vector<Term> terms{Term{Atom::unit(), 0, 1}, Term{Atom::unit(), 1, 1}};
  if (genus > 0) terms.push_back(Term{Atom::h1(genus), 0, 1});
  return Motive(std::move(terms));
}

}  // namespace stacky::motive
