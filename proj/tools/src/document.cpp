#include "stacky/cli/document.hpp"

#include <algorithm>
#include <initializer_list>
#include <limits>

#include "stacky/error.hpp"

namespace stacky::cli {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& path, const std::string& msg) {
  fail(ErrorCode::ValidationError, path + ": " + msg);
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string field(const std::string& path, const std::string& name) {
  return path.empty() ? name : path + "." + name;
}

void only_keys(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  for (const auto& [k, v] : j.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; }))
      invalid(field(path, k), "unknown field");
  }
}

const json& object(const json& j, const std::string& path) {
  if (!j.is_object()) invalid(path, "expected an object");
  return j;
}

const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) invalid(path, "expected an array");
  return j;
}

const json& required(const json& j, const std::string& path, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) invalid(field(path, name), "missing");
  return *it;
}

std::size_t natural(const json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  if (j.is_number_integer()) {
    if (j.get<long long>() < 0) invalid(path, "must be nonnegative");
    return j.get<std::size_t>();
  }
  invalid(path, "expected a nonnegative integer");
}

int integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) invalid(path, "expected an integer");
  const auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) invalid(path, "out of range");
  return static_cast<int>(v);
}

std::vector<std::size_t> naturals(const json& j, const std::string& path) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) out.push_back(natural(j[i], at(path, i)));
  return out;
}

std::vector<std::size_t> permutation(const json& j, const std::string& path, std::size_t n) {
  auto img = naturals(j, path);
  if (img.size() != n) invalid(path, "expected " + std::to_string(n) + " entries, got " + std::to_string(img.size()));
  std::vector<char> hit(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (img[i] >= n) invalid(at(path, i), "index " + std::to_string(img[i]) + " out of range");
    if (hit[img[i]]) invalid(at(path, i), "repeated image " + std::to_string(img[i]));
    hit[img[i]] = 1;
  }
  return img;
}

Images permutations(const json& j, const std::string& path, std::size_t n, std::optional<std::size_t> count) {
  Images out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) out.push_back(permutation(j[i], at(path, i), n));
  if (count && out.size() != *count)
    invalid(path, "expected one entry per group generator (" + std::to_string(*count) + "), got " +
                      std::to_string(out.size()));
  return out;
}

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

GroupSpec parse_group(const json& j, const std::string& path) {
  only_keys(object(j, path), path, {"degree", "generators"});
  GroupSpec g;
  g.degree = natural(required(j, path, "degree"), field(path, "degree"));
  if (g.degree == 0) invalid(field(path, "degree"), "must be positive");
  if (j.contains("generators")) g.generators = permutations(j["generators"], field(path, "generators"), g.degree, {});
  return g;
}

motive::Motive parse_motive(const json& j, const std::string& path) {
  std::vector<motive::Term> terms;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) {
    const std::string p = at(path, i);
    only_keys(object(j[i], p), p, {"atom", "twist", "mult"});
    const json& a = required(j[i], p, "atom");
    if (!a.is_string()) invalid(field(p, "atom"), "expected a string");
    motive::Term t{motive::Atom::unit(), 0, 1};
    try {
      t.atom = parse_atom(a.get<std::string>());
    } catch (const Error& e) {
      invalid(field(p, "atom"), e.what());
    }
    if (j[i].contains("twist")) t.twist = integer(j[i]["twist"], field(p, "twist"));
    if (j[i].contains("mult")) t.multiplicity = natural(j[i]["mult"], field(p, "mult"));
    if (t.multiplicity == 0) invalid(field(p, "mult"), "must be positive");
    terms.push_back(std::move(t));
  }
  return motive::Motive(std::move(terms));
}

json motive_json(const motive::Motive& m) {
  json out = json::array();
  for (const auto& t : m.terms()) out.push_back({{"atom", t.atom.symbol()}, {"twist", t.twist}, {"mult", t.multiplicity}});
  return out;
}

std::size_t require_generators(const InputDocument& d, const std::string& path) {
  if (!d.group) invalid(path, "needs a group");
  return d.group->generators.size();
}

}  // namespace

motive::Atom parse_atom(const std::string& s) {
  if (s == "1") return motive::Atom::unit();
  auto number = [&](const std::string& digits) -> std::optional<std::size_t> {
    if (digits.empty() || digits.size() > 9 || !std::all_of(digits.begin(), digits.end(), ::isdigit)) return {};
    return std::stoul(digits);
  };
  if (s.rfind("H1_", 0) == 0) {
    if (auto g = number(s.substr(3))) return motive::Atom::h1(*g);
  }
  if (s.rfind("Cover(", 0) == 0 && s.back() == ')') {
    const auto comma = s.rfind(',');
    if (comma != std::string::npos && comma > 6) {
      if (auto d = number(s.substr(comma + 1, s.size() - comma - 2)))
        return motive::Atom::cover(s.substr(6, comma - 6), *d);
    }
  }
  return motive::Atom::opaque(s);
}

InputDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  return parse_document(j);
}

InputDocument parse_document(const json& j) {
  only_keys(object(j, "document"), "", {"characteristic", "group", "model", "gerbe", "curve", "kunneth", "cover"});
  InputDocument d;
  if (j.contains("characteristic")) {
    d.characteristic = natural(j["characteristic"], "characteristic");
    if (d.characteristic != 0 && !is_prime(d.characteristic))
      invalid("characteristic", std::to_string(d.characteristic) + " is neither 0 nor prime");
  }
  if (j.contains("group")) d.group = parse_group(j["group"], "group");
  if (j.contains("kunneth")) d.kunneth = parse_group(j["kunneth"], "kunneth");

  if (j.contains("model")) {
    const json& m = j["model"];
    only_keys(object(m, "model"), "model", {"hset", "cells"});
    if (m.contains("hset") == m.contains("cells")) invalid("model", "expected exactly one of hset, cells");
    const std::size_t gens = require_generators(d, "model");
    if (m.contains("hset")) {
      const json& h = m["hset"];
      only_keys(object(h, "model.hset"), "model.hset", {"size", "generatorImages"});
      HSetSpec s;
      s.size = natural(required(h, "model.hset", "size"), "model.hset.size");
      s.generator_images =
          permutations(required(h, "model.hset", "generatorImages"), "model.hset.generatorImages", s.size, gens);
      d.hset = std::move(s);
    } else {
      const json& c = m["cells"];
      only_keys(object(c, "model.cells"), "model.cells", {"cells", "generatorImages"});
      CellsSpec s;
      const json& list = required(c, "model.cells", "cells");
      for (std::size_t i = 0; i < array(list, "model.cells.cells").size(); ++i) {
        const std::string p = at("model.cells.cells", i);
        only_keys(object(list[i], p), p, {"dim", "fixedLocus"});
        motive::Cell cell;
        cell.dim = static_cast<int>(natural(required(list[i], p, "dim"), field(p, "dim")));
        if (list[i].contains("fixedLocus")) {
          std::vector<int> pieces;
          const json& fl = list[i]["fixedLocus"];
          for (std::size_t k = 0; k < array(fl, field(p, "fixedLocus")).size(); ++k) {
            const std::size_t v = natural(fl[k], at(field(p, "fixedLocus"), k));
            if (v > static_cast<std::size_t>(cell.dim))
              invalid(at(field(p, "fixedLocus"), k), "piece dimension exceeds the cell dimension");
            pieces.push_back(static_cast<int>(v));
          }
          cell.fixed_locus = std::move(pieces);
        }
        s.cells.push_back(std::move(cell));
      }
      s.generator_images = permutations(required(c, "model.cells", "generatorImages"),
                                        "model.cells.generatorImages", s.cells.size(), gens);
      d.cells = std::move(s);
    }
  }

  if (j.contains("gerbe")) {
    const json& g = j["gerbe"];
    only_keys(object(g, "gerbe"), "gerbe", {"monodromy", "base", "baseLabel"});
    const std::size_t gens = require_generators(d, "gerbe");
    GerbeSpec s;
    const json& mono = required(g, "gerbe", "monodromy");
    for (std::size_t k = 0; k < array(mono, "gerbe.monodromy").size(); ++k)
      s.monodromy.push_back(permutations(mono[k], at("gerbe.monodromy", k), d.group->degree, gens));
    s.base = g.contains("base") ? parse_motive(g["base"], "gerbe.base") : motive::Motive::tate(0);
    if (g.contains("baseLabel")) {
      if (!g["baseLabel"].is_string() || g["baseLabel"].get<std::string>().empty())
        invalid("gerbe.baseLabel", "expected a nonempty string");
      s.base_label = g["baseLabel"].get<std::string>();
    }
    d.gerbe = std::move(s);
  }

  if (j.contains("curve")) {
    const json& c = j["curve"];
    only_keys(object(c, "curve"), "curve", {"genus", "orders"});
    CurveSpec s;
    if (c.contains("genus")) s.genus = natural(c["genus"], "curve.genus");
    if (c.contains("orders")) s.orders = naturals(c["orders"], "curve.orders");
    for (std::size_t i = 0; i < s.orders.size(); ++i)
      if (s.orders[i] < 2) invalid(at("curve.orders", i), "stabiliser order must be at least 2");
    d.curve = std::move(s);
  }

  if (j.contains("cover")) {
    const json& c = j["cover"];
    only_keys(object(c, "cover"), "cover", {"map", "targetSize", "degree"});
    CoverSpec s;
    s.map = naturals(required(c, "cover", "map"), "cover.map");
    s.target_size = natural(required(c, "cover", "targetSize"), "cover.targetSize");
    s.degree = natural(required(c, "cover", "degree"), "cover.degree");
    if (s.degree == 0) invalid("cover.degree", "must be positive");
    for (std::size_t i = 0; i < s.map.size(); ++i)
      if (s.map[i] >= s.target_size) invalid(at("cover.map", i), "index out of range");
    d.cover = std::move(s);
  }
  return d;
}

json render_document(const InputDocument& d) {
  json j = json::object();
  j["characteristic"] = d.characteristic;
  auto group_json = [](const GroupSpec& g) { return json{{"degree", g.degree}, {"generators", g.generators}}; };
  if (d.group) j["group"] = group_json(*d.group);
  if (d.kunneth) j["kunneth"] = group_json(*d.kunneth);
  if (d.hset) j["model"] = {{"hset", {{"size", d.hset->size}, {"generatorImages", d.hset->generator_images}}}};
  if (d.cells) {
    json cells = json::array();
    for (const auto& c : d.cells->cells) {
      json cj{{"dim", c.dim}};
      if (c.fixed_locus) cj["fixedLocus"] = *c.fixed_locus;
      cells.push_back(std::move(cj));
    }
    j["model"] = {{"cells", {{"cells", cells}, {"generatorImages", d.cells->generator_images}}}};
  }
  if (d.gerbe)
    j["gerbe"] = {{"monodromy", d.gerbe->monodromy}, {"base", motive_json(d.gerbe->base)}, {"baseLabel", d.gerbe->base_label}};
  if (d.curve) j["curve"] = {{"genus", d.curve->genus}, {"orders", d.curve->orders}};
  if (d.cover) j["cover"] = {{"map", d.cover->map}, {"targetSize", d.cover->target_size}, {"degree", d.cover->degree}};
  return j;
}

groups::FiniteGroup build_group(const GroupSpec& g) {
  std::vector<groups::Perm> gens;
  for (const auto& img : g.generators) gens.push_back(groups::Perm::from_images(img));
  return groups::FiniteGroup::generate(g.degree, std::move(gens));
}

motive::EquivariantModel build_model(const InputDocument& d) {
  if (!d.group) invalid("group", "missing");
  auto g = build_group(*d.group);
  if (d.hset) return motive::EquivariantModel::hset(std::move(g), d.hset->size, d.hset->generator_images);
  if (d.cells) return motive::EquivariantModel::cell_complex(std::move(g), d.cells->cells, d.cells->generator_images);
  return motive::EquivariantModel::point(std::move(g));
}

}  // namespace stacky::cli
