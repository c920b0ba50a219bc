// One line per acceptance criterion; exit status is the number of failures.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "linear_oracles.hpp"
#include "oracles.hpp"
#include "stacky/character_table.hpp"
#include "stacky/cli/commands.hpp"
#include "stacky/correspondence.hpp"
#include "stacky/gerbe.hpp"
#include "stacky/random_inputs.hpp"
#include "stacky/stack_decomp.hpp"
#include "stacky/verify.hpp"

using namespace stacky;
using motive::Atom;
using motive::EquivariantModel;
using motive::Motive;

namespace {

struct Named {
  const char* name;
  std::size_t classes;
};
const std::vector<Named> kBH = {{"C2", 2}, {"S3", 3}, {"A4", 4}, {"S4", 5}, {"Q8", 5}, {"D4", 5}};

std::set<oracle::Images> brute_group(const groups::FiniteGroup& g) {
  std::vector<oracle::Images> gens;
  for (const auto& s : g.generators()) gens.push_back(s.image_vector());
  return oracle::closure(g.degree(), gens);
}

std::size_t bh_rank(const groups::FiniteGroup& g, std::size_t p) {
  return stack::motive_chi_BH(g, p).motive.total_tate_rank();
}

// Every check appends a note on failure so that the printed line says what
// went wrong.
class Criterion {
public:
  void expect(bool ok, const std::string& what) {
    if (!ok && notes_.size() < 3) notes_.push_back(what);
    ok_ = ok_ && ok;
  }
  bool ok() const { return ok_; }
  std::string notes() const {
    std::string s;
    for (const auto& n : notes_) s += "; " + n;
    return s;
  }

private:
  bool ok_ = true;
  std::vector<std::string> notes_;
};

void criterion_1(Criterion& c) {
  for (const auto& [name, expected] : kBH) {
    const auto g = verify::named_group(name);
    const auto brute = brute_group(g);
    const std::string n = name;
    c.expect(bh_rank(g, 0) == expected, n + " rank h_chi(BH)");
    c.expect(oracle::classes(brute).size() == expected, n + " brute-force class count");
    c.expect(oracle::character_orbit_total(brute, 0) == expected, n + " orbit count on s(c)");
    c.expect(chars::character_table(g).size() == expected, n + " character table rows");
  }
}

void criterion_2(Criterion& c) {
  using chars::Cyclotomic;
  const auto z2 = chars::rep_ring(chars::character_table(verify::named_group("C2")));
  // sign^2 = trivial
  c.expect(z2.constant(1, 1, 0) == 1 && z2.constant(1, 1, 1) == 0, "Z/2 sign^2");

  const auto s3 = chars::rep_ring(chars::character_table(verify::named_group("S3")));
  const auto& t = s3.table();
  std::size_t sign = 0, standard = 0;
  for (std::size_t i = 1; i < t.size(); ++i) (t.degrees[i] == 1 ? sign : standard) = i;
  c.expect(sign != 0 && standard != 0, "S3 rows");
  c.expect(s3.constant(standard, standard, 0) == 1 && s3.constant(standard, standard, sign) == 1 &&
               s3.constant(standard, standard, standard) == 1,
           "S3 std^2");

  for (const auto& [name, expected] : kBH) {
    const auto ring = chars::rep_ring(chars::character_table(verify::named_group(name)));
    const auto& tab = ring.table();
    const long order = static_cast<long>(tab.group.order());
    for (std::size_t i = 0; i < ring.rank(); ++i)
      for (std::size_t j = 0; j < ring.rank(); ++j) {
        for (std::size_t k = 0; k < ring.rank(); ++k) {
          // n^{ij}_k = (1/|G|) sum_c |c| chi_i chi_j conj(chi_k)
          Cyclotomic s;
          for (std::size_t cl = 0; cl < tab.classes.size(); ++cl)
            s += Cyclotomic(static_cast<long long>(tab.classes[cl].members.size())) * tab.rows[i][cl] *
                 tab.rows[j][cl] * conj(tab.rows[k][cl]);
          c.expect(s == Cyclotomic(static_cast<long long>(ring.constant(i, j, k) * order)),
                   std::string(name) + " constant by inner product");
        }
        for (std::size_t cl = 0; cl < tab.classes.size(); ++cl) {
          Cyclotomic rhs;
          for (std::size_t k = 0; k < ring.rank(); ++k)
            rhs += Cyclotomic(static_cast<long long>(ring.constant(i, j, k))) * tab.rows[k][cl];
          c.expect(tab.rows[i][cl] * tab.rows[j][cl] == rhs, std::string(name) + " pointwise identity");
        }
      }
  }
}

void criterion_3(Criterion& c) {
  const auto c3 = verify::named_group("C3");
  const auto mu3 =
      EquivariantModel::cell_complex(c3, {motive::Cell{0, {}}, motive::Cell{1, std::vector<int>{0}}}, {{0, 1}});
  const Motive expected = motive::direct_sum(motive::direct_sum(Motive::tate(0), Motive::tate(1)), Motive::tate(0, 4));
  const Motive route1 = stack::motive_chi_quotient(mu3, 0).total;
  const Motive route2 = stack::orbifold_curve_motive(0, {3, 3}).total;
  c.expect(route1 == expected, "cell model gives " + motive::poincare_polynomial(route1));
  c.expect(route2 == expected, "curve formula gives " + motive::poincare_polynomial(route2));
  c.expect(route1.terms() == route2.terms(), "term lists differ");
}

const verify::SuiteResult& suite() {
  static const auto r = verify::run_suite(2024, 120);
  return r;
}

void criterion_4(Criterion& c) {
  std::size_t n = 0;
  for (const auto& r : suite().reports) {
    if (r.check_name != "inertia-dim") continue;
    ++n;
    c.expect(r.pass, r.input_digest + ": " + r.lhs + " vs " + r.rhs);
  }
  c.expect(n >= 100, "only " + std::to_string(n) + " suite inputs");
}

void criterion_5(Criterion& c) {
  std::size_t n = 0;
  for (const auto& r : suite().reports) {
    if (r.check_name != "kunneth") continue;
    ++n;
    c.expect(r.pass, r.input_digest + ": " + r.lhs + " vs " + r.rhs);
  }
  c.expect(n >= 100, "only " + std::to_string(n) + " suite inputs");
  for (const auto& a : kBH)
    for (const auto& b : kBH) {
      const auto ga = verify::named_group(a.name), gb = verify::named_group(b.name);
      const std::string pair = std::string(a.name) + "x" + b.name;
      const auto product = groups::FiniteGroup::direct_product(ga, gb);
      c.expect(bh_rank(product, 0) == a.classes * b.classes, pair + " rank");
      const auto k = verify::check_kunneth(EquivariantModel::point(ga), gb, 0);
      c.expect(k.pass && k.lhs == std::to_string(a.classes * b.classes), pair + " check");
    }
}

bool is_free(const EquivariantModel& x) {
  for (std::size_t e = 1; e < x.group().order(); ++e)
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x.act(e, i) == i) return false;
  return true;
}

void criterion_6(Criterion& c) {
  std::size_t free_seen = 0;
  auto check = [&](const EquivariantModel& x, std::size_t p, const std::string& label) {
    const auto chi = stack::motive_chi_quotient(x, p);
    const Motive h = stack::motive_quotient(x);
    c.expect(!chi.components.empty() && chi.components.front().order == 1, label + ": no trivial component");
    if (!chi.components.empty()) c.expect(chi.components.front().motive == h, label + ": trivial component");
    if (is_free(x)) {
      ++free_seen;
      c.expect(chi.total == h, label + ": free action");
    }
  };
  const auto cases = verify::random_suite(2024, 120);
  for (std::size_t i = 0; i < cases.size(); ++i) check(cases[i].model, cases[i].p, "case " + std::to_string(i));
  // Regular actions are free.
  for (const char* name : {"C2", "C6", "S3", "A4", "Q8", "D4"}) {
    const auto g = verify::named_group(name);
    const groups::Subgroup trivial(g, std::vector<std::size_t>{0});
    check(EquivariantModel::hset(g, g.order(), verify::coset_action(g, trivial)), 0, std::string("regular ") + name);
  }
  c.expect(free_seen >= 6, "too few free actions");
}

void criterion_7(Criterion& c) {
  using corr::Correspondence;
  std::mt19937_64 rng(77);
  for (std::size_t k = 1; k <= 12; ++k)
    for (std::size_t m = 1; k * m <= 12; ++m)
      for (int shuffle = 0; shuffle < 4; ++shuffle) {
        std::vector<std::size_t> f(k * m);
        for (std::size_t i = 0; i < f.size(); ++i) f[i] = i % k;
        if (shuffle) std::shuffle(f.begin(), f.end(), rng);
        const std::string label = std::to_string(k * m) + "->" + std::to_string(k);
        c.expect(verify::check_degree_splitting(f, k, m).pass, label + " report");
        const auto g = corr::graph_correspondences(f, k);
        const auto composite = corr::compose(g.pushforward, g.pullback);
        c.expect(composite.block(0) == corr::QMatrix::identity(k).scaled(static_cast<long>(m)), label + " f_* f^*");
      }
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + rng() % 6, r = rng() % (n + 1);
    const Motive m = Motive::tate(0, n);
    const Correspondence p(m, m, {{0, oracle::random_idempotent(rng, n, r)}});
    const auto s = corr::split_idempotent(p);
    c.expect(corr::compose(s.inclusion, s.retraction) == p, "i o r = p");
    c.expect(corr::compose(s.retraction, s.inclusion) == Correspondence::identity(s.image), "r o i = id");
    c.expect(s.image.total_tate_rank() == r, "image rank");
  }
}

void criterion_8(Criterion& c) {
  const auto s3 = verify::named_group("S3"), a4 = verify::named_group("A4");
  const auto bs3 = brute_group(s3), ba4 = brute_group(a4);
  c.expect(groups::cyclic_subgroup_classes(s3, 3).size() == 2, "|c(S3, 3)|");
  c.expect(oracle::cyclic_class_count(bs3, 3) == 2, "brute |c(S3, 3)|");
  c.expect(bh_rank(s3, 0) == 3 && bh_rank(s3, 3) == 2, "S3 rank 3 -> 2");
  c.expect(oracle::element_class_count(bs3, 3) == 2, "brute S3 classes prime to 3");
  c.expect(bh_rank(a4, 0) == 4 && bh_rank(a4, 3) == 2, "A4 rank 4 -> 2");
  c.expect(oracle::element_class_count(ba4, 3) == 2, "brute A4 classes prime to 3");
  for (const auto& cl : groups::cyclic_subgroup_classes(a4, 3))
    c.expect(cl.order == 1 || cl.order == 2, "A4 class of order " + std::to_string(cl.order));
}

void criterion_9(Criterion& c) {
  const auto h = verify::named_group("C3");
  const Motive base = motive::direct_sum(Motive::tate(0), Motive::tate(1));
  std::vector<groups::Perm> inv;
  for (const auto& s : h.generators()) inv.push_back(s.inverse());

  const auto twisted = stack::motive_chi_gerbe(stack::GerbeDatum{h, {inv}, base, "X"}, 0).total;
  c.expect(twisted == motive::direct_sum(base, Motive::atom(Atom::cover("X", 2))),
           "inversion gives " + motive::poincare_polynomial(twisted));
  const auto plain = stack::motive_chi_gerbe(stack::GerbeDatum{h, {h.generators()}, base, "X"}, 0).total;
  c.expect(plain == motive::repeat(base, 3), "trivial monodromy gives " + motive::poincare_polynomial(plain));
  const auto none = stack::motive_chi_gerbe(stack::GerbeDatum{h, {}, base, "X"}, 0).total;
  c.expect(none == motive::repeat(base, 3), "empty monodromy");
  const std::size_t r = stack::gerbe_rset(h, 0, {inv}).elements.size();
  c.expect(r == 3 && r == bh_rank(h, 0) && r == oracle::classes(brute_group(h)).size(), "|R(Z/3)|");
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void criterion_10(Criterion& c) {
  std::vector<std::filesystem::path> docs;
  for (const auto& e : std::filesystem::directory_iterator(STACKY_SAMPLES_DIR))
    if (e.path().extension() == ".json") docs.push_back(e.path());
  std::sort(docs.begin(), docs.end());
  c.expect(docs.size() >= 4, "sample documents missing");

  for (const auto& path : docs) {
    const auto d = cli::parse_document(slurp(path));
    auto outputs = [&](bool parallel) {
      cli::Options o;
      o.parallel = parallel;
      o.chars = true;
      std::vector<std::string> out;
      if (d.group) {
        out.push_back(cli::render_json(cli::cmd_group_info(d, o).output));
        out.push_back(cli::render_json(cli::cmd_motive_bh(d, o).output));
        out.push_back(cli::render_json(cli::cmd_verify(d, o).output));
      }
      if (d.hset || d.cells) out.push_back(cli::render_json(cli::cmd_motive_quotient(d, o).output));
      if (d.gerbe) out.push_back(cli::render_json(cli::cmd_motive_gerbe(d, o).output));
      if (d.curve) out.push_back(cli::render_json(cli::cmd_motive_curve(*d.curve, o).output));
      o.seed = 5;
      o.suite_count = 40;
      out.push_back(cli::render_json(cli::cmd_verify(d.group ? std::optional(d) : std::nullopt, o).output));
      return out;
    };
    const auto first = outputs(false);
    c.expect(outputs(false) == first, path.filename().string() + " repeated run");
    c.expect(outputs(true) == first, path.filename().string() + " parallel run");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Criterion&)>>> criteria = {
      {"BH ranks by three routes", criterion_1},
      {"representation ring products", criterion_2},
      {"mu3 on P1 against the (0;3,3) curve", criterion_3},
      {"inertia double count on the random suite", criterion_4},
      {"Kunneth on the suite and on all BH pairs", criterion_5},
      {"trivial component is h([X/H])", criterion_6},
      {"splitting certificates", criterion_7},
      {"characteristic filter", criterion_8},
      {"Z/3 gerbe", criterion_9},
      {"byte-identical JSON", criterion_10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::printf("criterion %2zu %s  %s%s\n", i + 1, c.ok() ? "PASS" : "FAIL", criteria[i].first, c.notes().c_str());
    if (!c.ok()) ++failures;
  }
  return failures;
}
