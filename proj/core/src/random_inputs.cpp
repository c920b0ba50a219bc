#include "stacky/random_inputs.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <random>

#include "stacky/error.hpp"

namespace stacky::verify {

using groups::FiniteGroup;
using groups::Perm;

namespace {

Perm cycle_perm(std::size_t n) {
  std::vector<std::size_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return Perm::from_images(img);
}

Perm reflection(std::size_t n) {
  std::vector<std::size_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = (n - i) % n;
  return Perm::from_images(img);
}

Perm transposition(std::size_t n, std::size_t a, std::size_t b) {
  std::vector<std::size_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = i;
  std::swap(img[a], img[b]);
  return Perm::from_images(img);
}

FiniteGroup quaternion_regular() {
  // Elements +-1, +-i, +-j, +-k numbered 0..7 as (sign, unit) with index
  // 2 * unit + (sign < 0). Left multiplication by i and j.
  static constexpr std::size_t table[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  // Sign of unit products: i*i = -1, i*j = k, i*k = -j, j*i = -k, j*j = -1,
  // j*k = i, k*i = j, k*j = -i, k*k = -1.
  static constexpr int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  auto left = [](std::size_t u) {
    std::vector<std::size_t> img(8);
    for (std::size_t e = 0; e < 8; ++e) {
      const std::size_t v = e / 2;
      const bool neg = (e % 2) != 0;
      const std::size_t w = table[u][v];
      const bool s = (sign[u][v] < 0) != neg;
      img[e] = 2 * w + (s ? 1 : 0);
    }
    return Perm::from_images(img);
  };
  return FiniteGroup::generate(8, {left(1), left(2)});
}

}  // namespace

FiniteGroup named_group(const std::string& name) {
  auto bad = [&] { fail(ErrorCode::ValidationError, "unknown group name '" + name + "'"); };
  if (name == "Q8") return quaternion_regular();
  if (name.size() < 2) bad();
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    n = std::stoul(name.substr(1), &used);
    if (used != name.size() - 1) bad();
  } catch (const std::logic_error&) {
    bad();
  }
  switch (name[0]) {
    case 'C':
      if (n < 1) bad();
      return n == 1 ? FiniteGroup::trivial(1) : FiniteGroup::generate(n, {cycle_perm(n)});
    case 'D':
      if (n < 3) bad();
      return FiniteGroup::generate(n, {cycle_perm(n), reflection(n)});
    case 'S':
      if (n < 1) bad();
      if (n == 1) return FiniteGroup::trivial(1);
      if (n == 2) return FiniteGroup::generate(2, {transposition(2, 0, 1)});
      return FiniteGroup::generate(n, {cycle_perm(n), transposition(n, 0, 1)});
    case 'A': {
      if (n < 1) bad();
      if (n < 3) return FiniteGroup::trivial(n);
      std::vector<Perm> gens;
      for (std::size_t k = 2; k < n; ++k) {
        std::vector<std::size_t> img(n);
        for (std::size_t i = 0; i < n; ++i) img[i] = i;
        img[0] = 1;
        img[1] = k;
        img[k] = 0;
        gens.push_back(Perm::from_images(img));
      }
      return FiniteGroup::generate(n, gens);
    }
    default:
      bad();
  }
  return FiniteGroup::trivial(1);
}

std::vector<std::vector<std::size_t>> coset_action(const FiniteGroup& g, const groups::Subgroup& k) {
  // Coset x K labelled by its smallest element index, numbered in order of
  // first appearance.
  std::vector<std::size_t> label(g.order());
  std::map<std::size_t, std::size_t> number;
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::size_t m = x;
    for (auto kk : k.indices()) m = std::min(m, g.multiply(x, kk));
    label[x] = m;
    number.emplace(m, number.size());
  }
  std::vector<std::size_t> rep(number.size());
  for (const auto& [m, i] : number) rep[i] = m;
  std::vector<std::vector<std::size_t>> images;
  for (const auto& s : g.generators()) {
    const std::size_t si = g.require_index(s);
    std::vector<std::size_t> img(rep.size());
    for (std::size_t i = 0; i < rep.size(); ++i) img[i] = number.at(label[g.multiply(si, rep[i])]);
    images.push_back(std::move(img));
  }
  return images;
}

std::vector<SuiteCase> random_suite(std::uint64_t seed, std::size_t count) {
  std::vector<std::string> names;
  for (int n = 1; n <= 12; ++n) names.push_back("C" + std::to_string(n));
  for (int n = 3; n <= 6; ++n) names.push_back("D" + std::to_string(n));
  for (const char* s : {"S3", "S4", "A4", "Q8"}) names.emplace_back(s);
  const std::vector<std::string> partners{"C1", "C2", "C3", "S3"};
  const std::size_t primes[] = {0, 2, 3};

  std::map<std::string, FiniteGroup> cache;
  auto group = [&](const std::string& name) -> const FiniteGroup& {
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, named_group(name)).first;
    return it->second;
  };

  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

  std::vector<SuiteCase> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::string& name = names[pick(names.size())];
    const FiniteGroup& g = group(name);
    std::size_t budget = 20;
    std::size_t size = 0;
    std::vector<std::vector<std::size_t>> images(g.generators().size());
    const std::size_t pieces = 1 + pick(3);
    for (std::size_t piece = 0; piece < pieces; ++piece) {
      // Random subgroups until the coset space fits the remaining budget;
      // the whole group (one point) always does.
      for (int attempt = 0;; ++attempt) {
        std::vector<Perm> gens;
        const std::size_t ngens = attempt < 8 ? pick(3) : g.generators().size();
        for (std::size_t k = 0; k < ngens; ++k) gens.push_back(g.element(pick(g.order())));
        if (attempt >= 8) gens = g.generators();
        const FiniteGroup sub = FiniteGroup::generate(g.degree(), gens);
        std::vector<std::size_t> idx;
        for (const auto& e : sub.elements()) idx.push_back(g.require_index(e));
        std::sort(idx.begin(), idx.end());
        const std::size_t index = g.order() / idx.size();
        if (index > budget) continue;
        const auto act = coset_action(g, groups::Subgroup(g, idx));
        for (std::size_t s = 0; s < act.size(); ++s)
          for (auto v : act[s]) images[s].push_back(v + size);
        size += index;
        budget -= index;
        break;
      }
      if (budget == 0) break;
    }
    const std::string& partner = partners[pick(partners.size())];
    const std::size_t p = primes[pick(3)];
    out.push_back(SuiteCase{name, motive::EquivariantModel::hset(g, size, std::move(images)), group(partner),
                            partner, p});
  }
  return out;
}

SuiteResult run_suite(std::uint64_t seed, std::size_t count, stack::ExecPolicy policy) {
  const auto cases = random_suite(seed, count);
  auto run = [](const SuiteCase& c, std::size_t i, std::uint64_t s) {
    const std::string tag = ";seed=" + std::to_string(s) + ";case=" + std::to_string(i);
    std::vector<VerificationReport> out{check_inertia_dimension(c.model, c.p), check_kunneth(c.model, c.partner, c.p)};
    for (auto& r : out) r.input_digest += tag;
    return out;
  };
  std::vector<std::vector<VerificationReport>> per_case;
  if (policy.parallel) {
    std::vector<std::future<std::vector<VerificationReport>>> futures;
    for (std::size_t i = 0; i < cases.size(); ++i)
      futures.push_back(std::async(std::launch::async, run, std::cref(cases[i]), i, seed));
    for (auto& f : futures) per_case.push_back(f.get());
  } else {
    for (std::size_t i = 0; i < cases.size(); ++i) per_case.push_back(run(cases[i], i, seed));
  }
  SuiteResult result;
  for (auto& reports : per_case)
    for (auto& r : reports) {
      if (!r.pass) ++result.failures;
      result.reports.push_back(std::move(r));
    }
  return result;
}

}  // namespace stacky::verify
