#include "stacky/equivariant_model.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "stacky/error.hpp"

namespace stacky::motive {

EquivariantModel::EquivariantModel(ModelKind kind, groups::FiniteGroup group, std::vector<Cell> cells,
                                   std::vector<std::vector<std::size_t>> generator_images)
    : kind_(kind),
      group_(std::move(group)),
      cells_(std::move(cells)),
      generator_images_(std::move(generator_images)) {
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const auto& c = cells_[i];
    if (c.dim < 0) fail(ErrorCode::InconsistentAction, "cell " + std::to_string(i) + " has negative dimension");
    if (c.fixed_locus) {
      for (int d : *c.fixed_locus)
        if (d < 0 || d > c.dim)
          fail(ErrorCode::InconsistentAction,
               "fixed piece of cell " + std::to_string(i) + " has dimension outside [0, " + std::to_string(c.dim) + "]");
    }
    if (kind_ == ModelKind::HSet && (c.dim != 0 || c.fixed_locus))
      fail(ErrorCode::InconsistentAction, "H-set points must be plain 0-cells");
  }
  element_action_ = groups::extend_action(group_, generator_images_, cells_.size());
  for (std::size_t s = 0; s < generator_images_.size(); ++s)
    for (std::size_t i = 0; i < cells_.size(); ++i)
      if (!(cells_[generator_images_[s][i]] == cells_[i]))
        fail(ErrorCode::InconsistentAction, "generator " + std::to_string(s) + " maps cell " + std::to_string(i) +
                                                " to a cell of different shape");
}

EquivariantModel EquivariantModel::hset(groups::FiniteGroup group, std::size_t size,
                                        std::vector<std::vector<std::size_t>> generator_images) {
  return EquivariantModel(ModelKind::HSet, std::move(group), std::vector<Cell>(size), std::move(generator_images));
}

EquivariantModel EquivariantModel::cell_complex(groups::FiniteGroup group, std::vector<Cell> cells,
                                                std::vector<std::vector<std::size_t>> generator_images) {
  return EquivariantModel(ModelKind::CellComplex, std::move(group), std::move(cells),
                          std::move(generator_images));
}

EquivariantModel EquivariantModel::point(groups::FiniteGroup group) {
  std::vector<std::vector<std::size_t>> images(group.generators().size(), std::vector<std::size_t>{0});
  return hset(std::move(group), 1, std::move(images));
}

std::vector<Piece> EquivariantModel::fixed_pieces(const std::vector<std::size_t>& subgroup) const {
  std::vector<Piece> out;
  const bool trivial = std::all_of(subgroup.begin(), subgroup.end(), [](std::size_t x) { return x == 0; });
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (trivial) {
      out.push_back(Piece{i, std::nullopt, cells_[i].dim});
      continue;
    }
    const bool stable = std::all_of(subgroup.begin(), subgroup.end(),
                                    [&](std::size_t x) { return element_action_[x][i] == i; });
    if (!stable) continue;
    if (!cells_[i].fixed_locus) {
      out.push_back(Piece{i, std::nullopt, cells_[i].dim});
    } else {
      const auto& fl = *cells_[i].fixed_locus;
      for (std::size_t j = 0; j < fl.size(); ++j) out.push_back(Piece{i, j, fl[j]});
    }
  }
  return out;
}

Piece EquivariantModel::act_on_piece(std::size_t element, const Piece& piece) const {
  return Piece{element_action_[element][piece.cell], piece.sub, piece.dim};
}

EquivariantModel EquivariantModel::restrict_to(const std::vector<std::size_t>& subgroup,
                                               const groups::Subgroup& acting) const {
  const auto pieces = fixed_pieces(subgroup);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> position;
  auto key = [](const Piece& p) { return std::make_pair(p.cell, p.sub ? *p.sub + 1 : std::size_t{0}); };
  for (std::size_t k = 0; k < pieces.size(); ++k) position.emplace(key(pieces[k]), k);

  std::vector<Cell> cells;
  for (const auto& p : pieces) {
    Cell c{p.dim, std::nullopt};
    if (!p.sub) c.fixed_locus = cells_[p.cell].fixed_locus;
    cells.push_back(std::move(c));
  }
  groups::FiniteGroup sub_group = acting.as_group();
  std::vector<std::vector<std::size_t>> images;
  for (const auto& s : sub_group.generators()) {
    const std::size_t idx = group_.require_index(s);
    std::vector<std::size_t> img;
    for (const auto& p : pieces) {
      auto it = position.find(key(act_on_piece(idx, p)));
      if (it == position.end()) fail(ErrorCode::Internal, "acting subgroup does not preserve the fixed locus");
      img.push_back(it->second);
    }
    images.push_back(std::move(img));
  }
  return EquivariantModel(kind_, std::move(sub_group), std::move(cells), std::move(images));
}

GroupActionOnMotive::GroupActionOnMotive(Motive motive, groups::FiniteGroup group,
                                         std::vector<std::vector<std::size_t>> generator_perms)
    : motive_(std::move(motive)), group_(std::move(group)), perms_(std::move(generator_perms)) {
  std::vector<std::size_t> block;
  for (std::size_t t = 0; t < motive_.terms().size(); ++t) {
    offsets_.push_back(index_count_);
    index_count_ += motive_.terms()[t].multiplicity;
    block.resize(index_count_, t);
  }
  // Validates lengths, bijectivity and the group relations.
  groups::extend_action(group_, perms_, index_count_);
  for (std::size_t s = 0; s < perms_.size(); ++s)
    for (std::size_t i = 0; i < index_count_; ++i)
      if (block[perms_[s][i]] != block[i])
        fail(ErrorCode::InconsistentAction, "generator " + std::to_string(s) + " mixes different summands");
}

Motive invariants(const GroupActionOnMotive& action) {
  const std::size_t n = action.index_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& perm : action.generator_perms())
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t a = find(i);
      const std::size_t b = find(perm[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<Term> out;
  const auto& terms = action.motive().terms();
  for (std::size_t t = 0; t < terms.size(); ++t) {
    std::uint64_t orbits = 0;
    const std::size_t lo = action.offset(t);
    for (std::size_t i = lo; i < lo + terms[t].multiplicity; ++i)
      if (find(i) == i) ++orbits;
    out.push_back(Term{terms[t].atom, terms[t].twist, orbits});
  }
  return Motive(std::move(out));
}

GroupActionOnMotive model_motive(const EquivariantModel& x) {
  std::map<int, std::uint64_t> per_dim;
  for (const auto& c : x.cells()) ++per_dim[c.dim];
  std::vector<Term> terms;
  for (const auto& [dim, count] : per_dim) terms.push_back(Term{Atom::unit(), dim, count});
  Motive m(std::move(terms));

  // Terms of a Tate motive are ordered by twist, so copies are numbered by
  // dimension first and cell index second.
  std::map<int, std::size_t> next;
  std::size_t offset = 0;
  for (const auto& [dim, count] : per_dim) {
    next[dim] = offset;
    offset += count;
  }
  std::vector<std::size_t> flat(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) flat[i] = next[x.cells()[i].dim]++;

  std::vector<std::vector<std::size_t>> perms;
  for (const auto& img : x.generator_images()) {
    std::vector<std::size_t> p(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) p[flat[i]] = flat[img[i]];
    perms.push_back(std::move(p));
  }
  return GroupActionOnMotive(std::move(m), x.group(), std::move(perms));
}

}  // namespace stacky::motive
