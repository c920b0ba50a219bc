#include "stacky/stack_decomp.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>

#include "stacky/character_table.hpp"
#include "stacky/error.hpp"

namespace stacky::stack {

namespace {

template <typename Out, typename In, typename Fn>
std::vector<Out> map_components(const std::vector<In>& items, ExecPolicy policy, Fn fn) {
  std::vector<Out> out;
  out.reserve(items.size());
  if (!policy.parallel || items.size() < 2) {
    for (const auto& item : items) out.push_back(fn(item));
    return out;
  }
  std::vector<std::future<Out>> futures;
  futures.reserve(items.size());
  for (const auto& item : items) futures.push_back(std::async(std::launch::async, [&fn, &item] { return fn(item); }));
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

std::vector<std::size_t> subgroup_indices(const FiniteGroup& g, const std::vector<groups::Perm>& elems) {
  std::vector<std::size_t> out;
  for (const auto& e : elems) out.push_back(g.require_index(e));
  std::sort(out.begin(), out.end());
  return out;
}

// Orbits of the model's group on (cells) x (extra points), counted per cell
// dimension. extra_action[s] is the permutation of the extra points induced
// by the s-th generator of the model's group.
Motive orbit_motive(const EquivariantModel& model, std::size_t extra,
                    const std::vector<std::vector<std::size_t>>& extra_action) {
  const std::size_t n = model.size() * extra;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const auto& cell_images = model.generator_images();
  for (std::size_t s = 0; s < cell_images.size(); ++s)
    for (std::size_t cell = 0; cell < model.size(); ++cell)
      for (std::size_t e = 0; e < extra; ++e) {
        const std::size_t a = find(cell * extra + e);
        const std::size_t b = find(cell_images[s][cell] * extra + extra_action[s][e]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  std::vector<motive::Term> terms;
  for (std::size_t i = 0; i < n; ++i)
    if (find(i) == i) terms.push_back(motive::Term{motive::Atom::unit(), model.cells()[i / extra].dim, 1});
  return Motive(std::move(terms));
}

}  // namespace

CharSet char_set(const CyclicClass& c) {
  CharSet cs{c, {}, c.normalizer.as_group(), {}};
  const std::size_t m = c.order;
  for (std::size_t j = 1; j <= m; ++j)
    if (std::gcd(j, m) == 1) cs.indices.push_back(j);
  std::map<std::size_t, std::size_t> position;
  for (std::size_t k = 0; k < cs.indices.size(); ++k) position[cs.indices[k] % m] = k;
  for (const auto& n : cs.acting.generators()) {
    const std::size_t a = groups::conjugation_exponent(n, c);
    std::vector<std::size_t> perm;
    for (auto j : cs.indices) perm.push_back(position.at((j * a) % m));
    cs.generator_action.push_back(std::move(perm));
  }
  return cs;
}

std::vector<CycloInertiaComponent> cyclotomic_inertia(const EquivariantModel& x, std::size_t p,
                                                      ExecPolicy policy) {
  const auto classes = groups::cyclic_subgroup_classes(x.group(), p);
  return map_components<CycloInertiaComponent>(classes, policy, [&](const CyclicClass& c) {
    auto fixed = x.restrict_to(subgroup_indices(x.group(), c.subgroup_elements), c.normalizer);
    return CycloInertiaComponent{c, std::move(fixed), char_set(c)};
  });
}

std::vector<InertiaComponent> inertia(const EquivariantModel& x, std::size_t p, ExecPolicy policy) {
  groups::check_characteristic(p);
  const FiniteGroup& g = x.group();
  std::vector<groups::ConjClassOfElements> classes;
  for (auto& cls : groups::conjugacy_classes(g))
    if (groups::order_prime_to(cls.order, p)) classes.push_back(std::move(cls));
  return map_components<InertiaComponent>(classes, policy, [&](const groups::ConjClassOfElements& cls) {
    const auto& h = cls.representative;
    groups::Subgroup z = groups::centralizer(g, h);
    std::vector<groups::Perm> powers;
    for (std::size_t k = 0; k < cls.order; ++k) powers.push_back(h.pow(static_cast<long long>(k)));
    auto fixed = x.restrict_to(subgroup_indices(g, powers), z);
    return InertiaComponent{h, std::move(z), cls.members.size(), std::move(fixed)};
  });
}

Motive motive_quotient(const EquivariantModel& x) { return motive::invariants(motive::model_motive(x)); }

Motive component_motive(const CycloInertiaComponent& component) {
  const EquivariantModel& fixed = component.fixed_model;
  if (fixed.group().generators() != component.chars.acting.generators())
    fail(ErrorCode::Internal, "fixed-locus model and character set use different generators");
  return orbit_motive(fixed, component.chars.indices.size(), component.chars.generator_action);
}

Motive component_motive(const InertiaComponent& component) {
  return motive::invariants(motive::model_motive(component.fixed_model));
}

ChiQuotient motive_chi_quotient(const EquivariantModel& x, std::size_t p, ExecPolicy policy) {
  const auto comps = cyclotomic_inertia(x, p, policy);
  ChiQuotient out;
  out.components = map_components<ComponentMotive>(comps, policy, [](const CycloInertiaComponent& c) {
    return ComponentMotive{c.c.generator, c.c.order, component_motive(c)};
  });
  for (const auto& c : out.components) out.total = motive::direct_sum(out.total, c.motive);
  return out;
}

Motive inertia_motive(const EquivariantModel& x, std::size_t p, ExecPolicy policy) {
  const auto comps = inertia(x, p, policy);
  const auto parts = map_components<Motive>(comps, policy,
                                            [](const InertiaComponent& c) { return component_motive(c); });
  Motive total;
  for (const auto& m : parts) total = motive::direct_sum(total, m);
  return total;
}

BHMotive motive_chi_BH(const FiniteGroup& h, std::size_t p) {
  BHMotive out;
  out.breakdown = motive_chi_quotient(EquivariantModel::point(h), p);
  out.motive = out.breakdown.total;
  if (p == 0) out.product_matrix = chars::rep_ring(chars::character_table(h)).product_matrix();
  return out;
}

EquivariantModel times_classifying(const EquivariantModel& x, const FiniteGroup& h) {
  FiniteGroup product = FiniteGroup::direct_product(x.group(), h);
  std::vector<std::vector<std::size_t>> images = x.generator_images();
  std::vector<std::size_t> id(x.size());
  std::iota(id.begin(), id.end(), std::size_t{0});
  for (std::size_t s = 0; s < h.generators().size(); ++s) images.push_back(id);
  if (x.kind() == motive::ModelKind::HSet) return EquivariantModel::hset(std::move(product), x.size(), std::move(images));
  return EquivariantModel::cell_complex(std::move(product), x.cells(), std::move(images));
}

CurveMotive orbifold_curve_motive(std::size_t genus, const std::vector<std::size_t>& orders) {
  std::uint64_t extra = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 2)
      fail(ErrorCode::BadOrder, "orders[" + std::to_string(i) + "] = " + std::to_string(orders[i]) + " is below 2");
    extra += orders[i] - 1;
  }
  CurveMotive out;
  out.coarse = motive::curve_motive(genus);
  out.total = motive::direct_sum(out.coarse, Motive::tate(0, extra));
  return out;
}

}  // namespace stacky::stack
