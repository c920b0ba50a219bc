#include "stacky/gerbe.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "stacky/error.hpp"
#include "stacky/stack_decomp.hpp"

namespace stacky::stack {

using groups::FiniteGroup;
using groups::Perm;

std::vector<std::size_t> automorphism_table(const FiniteGroup& h, const std::vector<Perm>& generator_images) {
  const auto& gens = h.generators();
  if (generator_images.size() != gens.size()) {
    fail(ErrorCode::NotAnAutomorphism, "expected " + std::to_string(gens.size()) + " generator images, got " +
                                           std::to_string(generator_images.size()));
  }
  std::vector<std::size_t> image_idx;
  for (std::size_t s = 0; s < generator_images.size(); ++s) {
    auto idx = h.index_of(generator_images[s]);
    if (!idx) fail(ErrorCode::NotAnAutomorphism, "image of generator " + std::to_string(s) + " is not in the group");
    image_idx.push_back(*idx);
  }
  std::vector<std::size_t> gen_idx;
  for (const auto& g : gens) gen_idx.push_back(h.require_index(g));

  // Breadth-first along the Cayley graph: alpha(s x) = alpha(s) alpha(x).
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> table(h.order(), unset);
  table[0] = 0;
  std::vector<std::size_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t x = queue[head];
    for (std::size_t s = 0; s < gen_idx.size(); ++s) {
      const std::size_t y = h.multiply(gen_idx[s], x);
      const std::size_t img = h.multiply(image_idx[s], table[x]);
      if (table[y] == unset) {
        table[y] = img;
        queue.push_back(y);
      } else if (table[y] != img) {
        fail(ErrorCode::NotAnAutomorphism, "generator images do not define a homomorphism (conflict at element " +
                                               h.element(y).to_string() + ")");
      }
    }
  }
  std::vector<bool> hit(h.order(), false);
  for (std::size_t x = 0; x < h.order(); ++x) {
    if (hit[table[x]]) fail(ErrorCode::NotAnAutomorphism, "map is not injective");
    hit[table[x]] = true;
  }
  for (std::size_t a = 0; a < h.order(); ++a)
    for (std::size_t b = 0; b < h.order(); ++b)
      if (table[h.multiply(a, b)] != h.multiply(table[a], table[b]))
        fail(ErrorCode::NotAnAutomorphism, "map is not multiplicative on " + h.element(a).to_string() + ", " +
                                               h.element(b).to_string());
  return table;
}

RSet gerbe_rset(const FiniteGroup& h, std::size_t p, const std::vector<std::vector<Perm>>& monodromy) {
  RSet out;
  out.classes = groups::cyclic_subgroup_classes(h, p);
  const std::size_t nc = out.classes.size();

  std::vector<CharSet> chars;
  std::vector<std::set<std::size_t>> members(nc);
  // orbit_rep[ci][j % m] = smallest index in the N_c-orbit of j.
  std::vector<std::map<std::size_t, std::size_t>> orbit_rep(nc);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> element_of;
  for (std::size_t ci = 0; ci < nc; ++ci) {
    const auto& c = out.classes[ci];
    chars.push_back(char_set(c));
    const CharSet& cs = chars.back();
    for (const auto& e : c.subgroup_elements) members[ci].insert(h.require_index(e));
    const std::size_t k = cs.indices.size();
    std::vector<std::size_t> parent(k);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& act : cs.generator_action)
      for (std::size_t pos = 0; pos < k; ++pos) {
        const std::size_t a = find(pos), b = find(act[pos]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    for (std::size_t pos = 0; pos < k; ++pos) {
      const std::size_t rep = cs.indices[find(pos)];
      orbit_rep[ci][cs.indices[pos] % c.order] = rep;
      if (find(pos) == pos) {
        element_of[{ci, rep}] = out.elements.size();
        out.elements.push_back(RSetElement{ci, rep});
      }
    }
  }
  out.distinguished = element_of.at({0, 1});

  for (std::size_t k = 0; k < monodromy.size(); ++k) {
    std::vector<std::size_t> table;
    try {
      table = automorphism_table(h, monodromy[k]);
    } catch (const Error& e) {
      fail(ErrorCode::NotAnAutomorphism, "monodromy[" + std::to_string(k) + "]: " + e.what());
    }
    std::vector<std::size_t> inv(table.size());
    for (std::size_t x = 0; x < table.size(); ++x) inv[table[x]] = x;

    // Per class: the class of alpha(c), a conjugator x with x alpha(c) x^-1 = c',
    // and t with alpha^-1(x^-1 g' x) = g^t.
    std::vector<std::pair<std::size_t, std::size_t>> class_map(nc);
    for (std::size_t ci = 0; ci < nc; ++ci) {
      const auto& c = out.classes[ci];
      const std::size_t ag = table[h.require_index(c.generator)];
      bool found = false;
      for (std::size_t cj = 0; cj < nc && !found; ++cj) {
        if (out.classes[cj].order != c.order) continue;
        for (std::size_t x = 0; x < h.order() && !found; ++x) {
          const std::size_t conj = h.multiply(h.multiply(x, ag), h.inverse(x));
          if (!members[cj].count(conj)) continue;
          const std::size_t gp = h.require_index(out.classes[cj].generator);
          const std::size_t back = inv[h.multiply(h.multiply(h.inverse(x), gp), x)];
          std::size_t t = 0;
          while (t < c.order && h.require_index(c.subgroup_elements[t]) != back) ++t;
          if (t == c.order) fail(ErrorCode::Internal, "conjugate generator not found in the cyclic subgroup");
          class_map[ci] = {cj, t};
          found = true;
        }
      }
      if (!found) fail(ErrorCode::Internal, "image of a cyclic subgroup matches no class");
    }

    std::vector<std::size_t> perm(out.elements.size());
    std::vector<bool> hit(out.elements.size(), false);
    for (std::size_t e = 0; e < out.elements.size(); ++e) {
      const auto& el = out.elements[e];
      const auto [cj, t] = class_map[el.cyclic_class];
      const std::size_t m = out.classes[cj].order;
      const std::size_t rep = orbit_rep[cj].at((el.character * t) % m);
      perm[e] = element_of.at({cj, rep});
      if (hit[perm[e]]) fail(ErrorCode::Internal, "induced action on R(H) is not a bijection");
      hit[perm[e]] = true;
    }
    if (perm[out.distinguished] != out.distinguished)
      fail(ErrorCode::Internal, "automorphism moves the distinguished element of R(H)");
    out.aut_action.push_back(std::move(perm));
  }
  return out;
}

GerbeMotive motive_chi_gerbe(const GerbeDatum& gerbe, std::size_t p) {
  const RSet r = gerbe_rset(gerbe.group, p, gerbe.monodromy);
  const std::size_t n = r.elements.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& perm : r.aut_action)
    for (std::size_t e = 0; e < n; ++e) {
      const std::size_t a = find(e), b = find(perm[e]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<std::size_t, std::vector<std::size_t>> orbits;
  for (std::size_t e = 0; e < n; ++e) orbits[find(e)].push_back(e);

  GerbeMotive out;
  for (auto& [root, orbit] : orbits) {
    GerbePiece piece;
    piece.orbit = std::move(orbit);
    if (piece.orbit.size() == 1) {
      piece.motive = gerbe.base;
    } else {
      piece.motive = motive::Motive::atom(motive::Atom::cover(gerbe.base_label, piece.orbit.size()));
    }
    piece.is_h_of_f = piece.orbit.front() == r.distinguished;
    out.total = motive::direct_sum(out.total, piece.motive);
    out.pieces.push_back(std::move(piece));
  }
  return out;
}

}  // namespace stacky::stack
