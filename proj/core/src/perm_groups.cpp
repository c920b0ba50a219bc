#include "stacky/perm_groups.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "stacky/error.hpp"

namespace stacky::groups {

// ---------------------------------------------------------------------------
// Perm

Perm Perm::from_images(std::span<const std::size_t> images) {
  if (images.empty()) fail(ErrorCode::NonBijection, "permutation of degree 0");
  if (images.size() > 256) fail(ErrorCode::GroupTooLarge, "degree above 256");
  std::vector<bool> seen(images.size(), false);
  std::vector<std::uint8_t> out(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    const std::size_t v = images[i];
    if (v >= images.size() || seen[v]) {
      fail(ErrorCode::NonBijection,
           "image " + std::to_string(v) + " at position " + std::to_string(i) +
               " breaks bijectivity on " + std::to_string(images.size()) + " points");
    }
    seen[v] = true;
    out[i] = static_cast<std::uint8_t>(v);
  }
  return Perm(std::move(out));
}

Perm Perm::from_images(std::initializer_list<std::size_t> images) {
  return from_images(std::span<const std::size_t>(images.begin(), images.size()));
}

Perm Perm::identity(std::size_t degree) {
  std::vector<std::size_t> id(degree);
  std::iota(id.begin(), id.end(), std::size_t{0});
  return from_images(id);
}

Perm Perm::from_cycles(std::size_t degree,
                       std::initializer_list<std::initializer_list<std::size_t>> cycles) {
  std::vector<std::size_t> img(degree);
  std::iota(img.begin(), img.end(), std::size_t{0});
  for (const auto& cycle : cycles) {
    std::vector<std::size_t> pts(cycle);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i] >= degree) fail(ErrorCode::NonBijection, "cycle point out of range");
      img[pts[i]] = pts[(i + 1) % pts.size()];
    }
  }
  return from_images(img);
}

std::vector<std::size_t> Perm::image_vector() const {
  return {images_.begin(), images_.end()};
}

Perm Perm::operator*(const Perm& rhs) const {
  std::vector<std::uint8_t> out(images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = images_[rhs.images_[i]];
  return Perm(std::move(out));
}

Perm Perm::inverse() const {
  std::vector<std::uint8_t> out(images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[images_[i]] = static_cast<std::uint8_t>(i);
  return Perm(std::move(out));
}

Perm Perm::pow(long long exponent) const {
  Perm base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-exponent)
                                      : static_cast<unsigned long long>(exponent);
  std::vector<std::uint8_t> id(images_.size());
  std::iota(id.begin(), id.end(), std::uint8_t{0});
  Perm result(std::move(id));
  while (e > 0) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::size_t Perm::order() const {
  std::size_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Perm::to_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    os << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) os << ' ';
      os << j;
      first = false;
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  // FNV-1a over the image bytes.
  std::size_t h = 1469598103934665603ULL;
  for (auto b : p.images()) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

// ---------------------------------------------------------------------------
// FiniteGroup

struct FiniteGroup::Impl {
  std::size_t degree = 1;
  std::vector<Perm> generators;
  std::vector<Perm> elements;
  std::unordered_map<Perm, std::size_t, PermHash> index;
  std::vector<std::size_t> inverse;
  std::vector<std::size_t> order;
  std::size_t exponent = 1;
  bool abelian = true;
};

FiniteGroup FiniteGroup::from_closed(std::size_t degree, std::vector<Perm> generators,
                                     std::vector<Perm> elements) {
  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  impl->generators = std::move(generators);
  std::sort(elements.begin(), elements.end());
  impl->elements = std::move(elements);
  impl->index.reserve(impl->elements.size() * 2);
  for (std::size_t i = 0; i < impl->elements.size(); ++i) impl->index.emplace(impl->elements[i], i);
  impl->inverse.resize(impl->elements.size());
  impl->order.resize(impl->elements.size());
  for (std::size_t i = 0; i < impl->elements.size(); ++i) {
    impl->inverse[i] = impl->index.at(impl->elements[i].inverse());
    impl->order[i] = impl->elements[i].order();
    impl->exponent = std::lcm(impl->exponent, impl->order[i]);
  }
  for (std::size_t a = 0; a < impl->generators.size() && impl->abelian; ++a)
    for (std::size_t b = a + 1; b < impl->generators.size(); ++b)
      if (impl->generators[a] * impl->generators[b] != impl->generators[b] * impl->generators[a]) {
        impl->abelian = false;
        break;
      }
  return FiniteGroup(std::move(impl));
}

FiniteGroup FiniteGroup::generate(std::size_t degree, std::vector<Perm> generators,
                                  const GroupLimits& limits) {
  if (degree == 0) fail(ErrorCode::NonBijection, "group degree must be positive");
  if (degree > limits.max_degree) {
    fail(ErrorCode::GroupTooLarge, "degree " + std::to_string(degree) + " exceeds cap " +
                                       std::to_string(limits.max_degree));
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].degree() != degree) {
      fail(ErrorCode::NonBijection, "generator " + std::to_string(i) + " has degree " +
                                        std::to_string(generators[i].degree()) + ", expected " +
                                        std::to_string(degree));
    }
  }
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> elements{Perm::identity(degree)};
  seen.insert(elements.front());
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : generators) {
      Perm next = s * elements[head];
      if (seen.insert(next).second) {
        elements.push_back(std::move(next));
        if (elements.size() > limits.max_order) {
          fail(ErrorCode::GroupTooLarge,
               "closure exceeds element cap " + std::to_string(limits.max_order));
        }
      }
    }
  }
  return from_closed(degree, std::move(generators), std::move(elements));
}

FiniteGroup FiniteGroup::trivial(std::size_t degree) { return generate(degree, {}); }

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                        const GroupLimits& limits) {
  const std::size_t da = a.degree();
  const std::size_t db = b.degree();
  auto embed = [&](const Perm& p, std::size_t offset) {
    std::vector<std::size_t> img(da + db);
    std::iota(img.begin(), img.end(), std::size_t{0});
    for (std::size_t i = 0; i < p.degree(); ++i) img[offset + i] = offset + p(i);
    return Perm::from_images(img);
  };
  std::vector<Perm> gens;
  for (const auto& g : a.generators()) gens.push_back(embed(g, 0));
  for (const auto& g : b.generators()) gens.push_back(embed(g, da));
  return generate(da + db, std::move(gens), limits);
}

std::size_t FiniteGroup::degree() const { return impl_->degree; }
std::size_t FiniteGroup::order() const { return impl_->elements.size(); }
const std::vector<Perm>& FiniteGroup::generators() const { return impl_->generators; }
const std::vector<Perm>& FiniteGroup::elements() const { return impl_->elements; }
const Perm& FiniteGroup::element(std::size_t index) const { return impl_->elements.at(index); }

std::optional<std::size_t> FiniteGroup::index_of(const Perm& p) const {
  auto it = impl_->index.find(p);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGroup::require_index(const Perm& p) const {
  auto idx = index_of(p);
  if (!idx) fail(ErrorCode::NotASubgroup, "permutation " + p.to_string() + " is not in the group");
  return *idx;
}

std::size_t FiniteGroup::multiply(std::size_t a, std::size_t b) const {
  return impl_->index.at(impl_->elements[a] * impl_->elements[b]);
}

std::size_t FiniteGroup::inverse(std::size_t a) const { return impl_->inverse.at(a); }
std::size_t FiniteGroup::element_order(std::size_t a) const { return impl_->order.at(a); }
std::size_t FiniteGroup::exponent() const { return impl_->exponent; }
bool FiniteGroup::is_abelian() const { return impl_->abelian; }

// ---------------------------------------------------------------------------
// Subgroup

namespace {

// Closure of `candidates` in `parent`, built by adding the first element not
// yet reached as a new generator. Records the chosen generators in `gens`.
std::vector<std::size_t> greedy_closure(const FiniteGroup& parent,
                                        const std::vector<std::size_t>& candidates,
                                        std::vector<std::size_t>& gens,
                                        std::size_t give_up_above) {
  std::vector<char> in(parent.order(), 0);
  std::vector<std::size_t> members{0};
  in[0] = 1;
  for (auto candidate : candidates) {
    if (in[candidate]) continue;
    gens.push_back(candidate);
    // Words ending in the new generator: multiply everything reached so far.
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (auto s : gens) {
        const std::size_t next = parent.multiply(s, members[head]);
        if (!in[next]) {
          in[next] = 1;
          members.push_back(next);
          if (members.size() > give_up_above) return members;
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

Subgroup::Subgroup(FiniteGroup parent, std::vector<std::size_t> indices)
    : parent_(std::move(parent)), indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  if (indices_.empty() || indices_.front() != 0)
    fail(ErrorCode::NotASubgroup, "subset does not contain the identity");
  if (indices_.back() >= parent_.order()) fail(ErrorCode::NotASubgroup, "index out of range");
  std::vector<std::size_t> gens;
  if (greedy_closure(parent_, indices_, gens, indices_.size()) != indices_)
    fail(ErrorCode::NotASubgroup, "subset not closed under products");
}

std::vector<Perm> Subgroup::elements() const {
  std::vector<Perm> out;
  out.reserve(indices_.size());
  for (auto i : indices_) out.push_back(parent_.element(i));
  return out;
}

bool Subgroup::contains_index(std::size_t parent_index) const {
  return std::binary_search(indices_.begin(), indices_.end(), parent_index);
}

bool Subgroup::contains(const Perm& p) const {
  auto idx = parent_.index_of(p);
  return idx && contains_index(*idx);
}

FiniteGroup Subgroup::as_group() const {
  std::vector<std::size_t> gen_idx;
  greedy_closure(parent_, indices_, gen_idx, indices_.size());
  std::vector<Perm> gens;
  for (auto i : gen_idx) gens.push_back(parent_.element(i));
  return FiniteGroup::from_closed(parent_.degree(), std::move(gens), elements());
}

// ---------------------------------------------------------------------------
// Conjugacy

void check_characteristic(std::size_t p) {
  if (p == 0) return;
  bool prime = p >= 2;
  for (std::size_t d = 2; d * d <= p && prime; ++d)
    if (p % d == 0) prime = false;
  if (!prime) fail(ErrorCode::BadCharacteristic, "characteristic " + std::to_string(p) + " is not 0 or a prime");
}

bool order_prime_to(std::size_t n, std::size_t p) { return p == 0 || n % p != 0; }

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

std::vector<std::size_t> generator_indices(const FiniteGroup& g) {
  std::vector<std::size_t> out;
  for (const auto& s : g.generators()) out.push_back(g.require_index(s));
  return out;
}

}  // namespace

std::vector<ConjClassOfElements> conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  const auto gens = generator_indices(g);
  std::vector<std::size_t> class_id(n, SIZE_MAX);
  std::vector<ConjClassOfElements> classes;
  for (std::size_t start = 0; start < n; ++start) {
    if (class_id[start] != SIZE_MAX) continue;
    const std::size_t id = classes.size();
    std::vector<std::size_t> members{start};
    class_id[start] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (auto s : gens) {
        std::size_t c = g.multiply(g.multiply(s, members[head]), g.inverse(s));
        if (class_id[c] == SIZE_MAX) {
          class_id[c] = id;
          members.push_back(c);
        }
      }
    }
    std::sort(members.begin(), members.end());
    ConjClassOfElements cls;
    cls.member_indices = members;
    for (auto m : members) cls.members.push_back(g.element(m));
    cls.representative = cls.members.front();
    cls.order = g.element_order(members.front());
    classes.push_back(std::move(cls));
  }
  std::stable_sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.representative < b.representative;
  });
  return classes;
}

std::vector<std::size_t> class_lookup(const FiniteGroup& g,
                                      const std::vector<ConjClassOfElements>& classes) {
  std::vector<std::size_t> out(g.order(), SIZE_MAX);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (auto i : classes[c].member_indices) out[i] = c;
  return out;
}

std::vector<CyclicClass> cyclic_subgroup_classes(const FiniteGroup& g, std::size_t p) {
  check_characteristic(p);
  const std::size_t n = g.order();

  // Enumerate the distinct cyclic subgroups as sorted index sets.
  std::vector<std::vector<std::size_t>> subgroups;
  std::unordered_map<std::string, std::size_t> subgroup_id;
  auto key_of = [](const std::vector<std::size_t>& v) {
    std::string k;
    for (auto x : v) k.append(std::to_string(x)).push_back(',');
    return k;
  };
  auto powers = [&](std::size_t x) {
    std::vector<std::size_t> out{0};
    for (std::size_t y = x; y != 0; y = g.multiply(x, y)) out.push_back(y);
    std::sort(out.begin(), out.end());
    return out;
  };
  for (std::size_t x = 0; x < n; ++x) {
    if (!order_prime_to(g.element_order(x), p)) continue;
    auto sub = powers(x);
    auto key = key_of(sub);
    if (!subgroup_id.count(key)) {
      subgroup_id.emplace(key, subgroups.size());
      subgroups.push_back(std::move(sub));
    }
  }

  UnionFind uf(subgroups.size());
  const auto gens = generator_indices(g);
  for (std::size_t s = 0; s < subgroups.size(); ++s) {
    for (auto t : gens) {
      std::vector<std::size_t> conj;
      conj.reserve(subgroups[s].size());
      for (auto x : subgroups[s]) conj.push_back(g.multiply(g.multiply(t, x), g.inverse(t)));
      std::sort(conj.begin(), conj.end());
      uf.unite(s, subgroup_id.at(key_of(conj)));
    }
  }

  std::vector<std::vector<std::size_t>> members(subgroups.size());
  for (std::size_t s = 0; s < subgroups.size(); ++s) members[uf.find(s)].push_back(s);

  std::vector<CyclicClass> out;
  for (std::size_t root = 0; root < subgroups.size(); ++root) {
    if (members[root].empty()) continue;
    // Index vectors compare like the underlying sorted element lists.
    std::size_t best = members[root].front();
    for (auto s : members[root])
      if (subgroups[s] < subgroups[best]) best = s;
    const auto& sub = subgroups[best];
    const std::size_t m = sub.size();
    std::size_t gen = 0;
    for (auto x : sub) {
      if (g.element_order(x) == m) {
        gen = x;
        break;
      }
    }
    std::vector<Perm> elems;
    for (std::size_t k = 0, y = 0; k < m; ++k, y = g.multiply(gen, y)) elems.push_back(g.element(y));
    std::vector<Perm> sub_elems;
    for (auto x : sub) sub_elems.push_back(g.element(x));
    CyclicClass cc{g.element(gen), m, std::move(elems), normalizer(g, sub_elems),
                   members[root].size()};
    out.push_back(std::move(cc));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.generator < b.generator;
  });
  return out;
}

Subgroup normalizer(const FiniteGroup& g, std::span<const Perm> subset) {
  std::vector<std::size_t> idx;
  for (const auto& p : subset) idx.push_back(g.require_index(p));
  Subgroup c(g, idx);  // validates closure
  std::vector<std::size_t> norm;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const std::size_t xinv = g.inverse(x);
    bool ok = true;
    for (auto y : c.indices()) {
      if (!c.contains_index(g.multiply(g.multiply(x, y), xinv))) {
        ok = false;
        break;
      }
    }
    if (ok) norm.push_back(x);
  }
  return Subgroup(g, std::move(norm));
}

Subgroup centralizer(const FiniteGroup& g, const Perm& h) {
  const std::size_t hi = g.require_index(h);
  std::vector<std::size_t> cent;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (g.multiply(x, hi) == g.multiply(hi, x)) cent.push_back(x);
  return Subgroup(g, std::move(cent));
}

std::size_t conjugation_exponent(const Perm& n, const CyclicClass& c) {
  if (!c.normalizer.contains(n))
    fail(ErrorCode::NotInNormalizer, n.to_string() + " does not normalize <" + c.generator.to_string() + ">");
  if (c.order == 1) return 1;
  const Perm conj = n.inverse() * c.generator * n;
  for (std::size_t a = 1; a < c.order; ++a)
    if (c.subgroup_elements[a] == conj) return a;
  fail(ErrorCode::Internal, "conjugate of generator is not a power of it");
}

std::vector<std::vector<std::uint32_t>> extend_action(
    const FiniteGroup& g, const std::vector<std::vector<std::size_t>>& generator_images,
    std::size_t points) {
  if (generator_images.size() != g.generators().size()) {
    fail(ErrorCode::InconsistentAction, std::to_string(generator_images.size()) + " generator images for " +
                                            std::to_string(g.generators().size()) + " generators");
  }
  std::vector<std::vector<std::uint32_t>> gen_perm;
  for (std::size_t s = 0; s < generator_images.size(); ++s) {
    const auto& img = generator_images[s];
    if (img.size() != points) {
      fail(ErrorCode::InconsistentAction, "generator image " + std::to_string(s) + " has length " +
                                              std::to_string(img.size()) + ", expected " + std::to_string(points));
    }
    std::vector<char> seen(points, 0);
    std::vector<std::uint32_t> perm(points);
    for (std::size_t i = 0; i < points; ++i) {
      if (img[i] >= points || seen[img[i]])
        fail(ErrorCode::InconsistentAction, "generator image " + std::to_string(s) + " is not a permutation");
      seen[img[i]] = 1;
      perm[i] = static_cast<std::uint32_t>(img[i]);
    }
    gen_perm.push_back(std::move(perm));
  }
  const auto gens = generator_indices(g);
  std::vector<std::vector<std::uint32_t>> table(g.order());
  std::vector<std::uint32_t> id(points);
  std::iota(id.begin(), id.end(), 0U);
  table[0] = id;
  std::vector<char> done(g.order(), 0);
  done[0] = 1;
  std::vector<std::size_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t x = queue[head];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const std::size_t sx = g.multiply(gens[s], x);
      std::vector<std::uint32_t> img(points);
      for (std::size_t i = 0; i < points; ++i) img[i] = gen_perm[s][table[x][i]];
      if (!done[sx]) {
        done[sx] = 1;
        table[sx] = std::move(img);
        queue.push_back(sx);
      } else if (table[sx] != img) {
        fail(ErrorCode::InconsistentAction, "generator images violate a relation of the group");
      }
    }
  }
  return table;
}

std::size_t orbit_count(const FiniteGroup& g, const PointAction& act, std::size_t points) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(points));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t pt = 0; pt < points; ++pt) {
      const std::size_t img = act(g.element(x), pt);
      if (img >= points) fail(ErrorCode::NotAnAction, "image point out of range");
      table[x][pt] = img;
    }
  }
  for (std::size_t pt = 0; pt < points; ++pt)
    if (table[0][pt] != pt) fail(ErrorCode::NotAnAction, "identity moves point " + std::to_string(pt));
  const auto gens = generator_indices(g);
  for (auto s : gens) {
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t sx = g.multiply(s, x);
      for (std::size_t pt = 0; pt < points; ++pt) {
        if (table[sx][pt] != table[s][table[x][pt]]) {
          fail(ErrorCode::NotAnAction, "composition law fails at point " + std::to_string(pt));
        }
      }
    }
  }

  UnionFind uf(points);
  for (auto s : gens)
    for (std::size_t pt = 0; pt < points; ++pt) uf.unite(pt, table[s][pt]);
  std::size_t flood = 0;
  for (std::size_t pt = 0; pt < points; ++pt)
    if (uf.find(pt) == pt) ++flood;

  std::size_t fixed_total = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t pt = 0; pt < points; ++pt)
      if (table[x][pt] == pt) ++fixed_total;
  if (fixed_total % n != 0 || fixed_total / n != flood)
    fail(ErrorCode::Internal, "Burnside average disagrees with orbit flood fill");
  return flood;
}

}  // namespace stacky::groups
