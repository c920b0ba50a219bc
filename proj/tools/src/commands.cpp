#include "stacky/cli/commands.hpp"

#include <algorithm>
#include <sstream>

#include "stacky/character_table.hpp"
#include "stacky/error.hpp"
#include "stacky/gerbe.hpp"
#include "stacky/random_inputs.hpp"
#include "stacky/stack_decomp.hpp"
#include "stacky/verify.hpp"

namespace stacky::cli {

namespace {

using motive::Motive;

std::size_t characteristic(const InputDocument& d, const Options& o) {
  const std::size_t p = o.characteristic.value_or(d.characteristic);
  groups::check_characteristic(p);
  return p;
}

const GroupSpec& need_group(const InputDocument& d) {
  if (!d.group) fail(ErrorCode::ValidationError, "group: missing");
  return *d.group;
}

Output perm_json(const groups::Perm& p) { return Output(p.image_vector()); }

Output terms_json(const Motive& m) {
  Output out = Output::array();
  for (const auto& t : m.terms())
    out.push_back(Output{{"atom", t.atom.symbol()}, {"twist", t.twist}, {"mult", t.multiplicity}});
  return out;
}

Output chow_json(const Motive& m) {
  Output out = Output::object();
  if (m.empty()) return out;
  int lo = 0, hi = 0;
  for (const auto& t : m.terms()) {
    lo = std::min(lo, t.twist);
    hi = std::max(hi, t.twist);
  }
  for (int k = lo; k <= hi; ++k) {
    const auto d = motive::chow_dim(m, k);
    Output opaque = Output::array();
    for (const auto& t : d.opaque_terms) opaque.push_back(motive::render_term(t));
    out[std::to_string(k)] = Output{{"tateDim", d.tate_dim}, {"opaque", opaque}};
  }
  return out;
}

Output head(const std::string& command, std::size_t p) {
  return Output{{"command", command}, {"characteristic", p}};
}

void put_motive(Output& out, const Motive& m) {
  out["motive"] = terms_json(m);
  out["poincare"] = motive::poincare_polynomial(m);
  out["chowDims"] = chow_json(m);
}

Output components_json(const std::vector<stack::ComponentMotive>& cs) {
  Output out = Output::array();
  for (const auto& c : cs)
    out.push_back(Output{{"generator", perm_json(c.generator)},
                         {"order", c.order},
                         {"motive", terms_json(c.motive)},
                         {"poincare", motive::poincare_polynomial(c.motive)}});
  return out;
}

Output report_json(const verify::VerificationReport& r) {
  return Output{{"checkName", r.check_name},
                {"inputDigest", r.input_digest},
                {"lhs", r.lhs},
                {"rhs", r.rhs},
                {"pass", r.pass}};
}

std::string images_text(const Output& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? " " : "") + std::to_string(a[i].get<std::size_t>());
  return s + "]";
}

}  // namespace

CommandResult cmd_group_info(const InputDocument& d, const Options& o) {
  const std::size_t p = characteristic(d, o);
  const auto g = build_group(need_group(d));
  Output out = head("group", p);
  out["degree"] = g.degree();
  out["order"] = g.order();
  out["exponent"] = g.exponent();
  out["abelian"] = g.is_abelian();

  const auto classes = groups::conjugacy_classes(g);
  Output cj = Output::array();
  for (const auto& c : classes)
    cj.push_back(Output{{"representative", perm_json(c.representative)}, {"size", c.members.size()}, {"order", c.order}});
  out["conjugacyClasses"] = cj;

  Output cyc = Output::array();
  for (const auto& c : groups::cyclic_subgroup_classes(g, p))
    cyc.push_back(Output{{"generator", perm_json(c.generator)},
                         {"order", c.order},
                         {"conjugates", c.conjugate_count},
                         {"normalizerOrder", c.normalizer.order()}});
  out["cyclicClasses"] = cyc;

  if (o.chars) {
    const auto t = chars::character_table(g);
    Output rows = Output::array();
    for (const auto& r : t.rows) {
      Output row = Output::array();
      for (const auto& v : r) row.push_back(v.to_string());
      rows.push_back(std::move(row));
    }
    out["characterTable"] = Output{{"degrees", t.degrees}, {"rows", rows}};
  }
  return {out, Success};
}

CommandResult cmd_motive_bh(const InputDocument& d, const Options& o) {
  const std::size_t p = characteristic(d, o);
  const auto bh = stack::motive_chi_BH(build_group(need_group(d)), p);
  Output out = head("motive bh", p);
  put_motive(out, bh.motive);
  out["components"] = components_json(bh.breakdown.components);
  if (bh.product_matrix) out["productMatrix"] = *bh.product_matrix;
  return {out, Success};
}

CommandResult cmd_motive_quotient(const InputDocument& d, const Options& o) {
  const std::size_t p = characteristic(d, o);
  if (!d.hset && !d.cells) fail(ErrorCode::ValidationError, "model: missing");
  const auto x = build_model(d);
  const auto chi = stack::motive_chi_quotient(x, p, stack::ExecPolicy{o.parallel});
  const Motive coarse = stack::motive_quotient(x);
  Output out = head("motive quotient", p);
  put_motive(out, chi.total);
  out["coarse"] = Output{{"motive", terms_json(coarse)}, {"poincare", motive::poincare_polynomial(coarse)}};
  out["components"] = components_json(chi.components);
  return {out, Success};
}

CommandResult cmd_motive_gerbe(const InputDocument& d, const Options& o) {
  const std::size_t p = characteristic(d, o);
  if (!d.gerbe) fail(ErrorCode::ValidationError, "gerbe: missing");
  const auto h = build_group(need_group(d));
  stack::GerbeDatum datum{h, {}, d.gerbe->base, d.gerbe->base_label};
  for (std::size_t k = 0; k < d.gerbe->monodromy.size(); ++k) {
    std::vector<groups::Perm> images;
    for (const auto& img : d.gerbe->monodromy[k]) images.push_back(groups::Perm::from_images(img));
    datum.monodromy.push_back(std::move(images));
  }
  const auto r = stack::gerbe_rset(h, p, datum.monodromy);
  const auto gm = stack::motive_chi_gerbe(datum, p);

  Output out = head("motive gerbe", p);
  put_motive(out, gm.total);
  out["rSetSize"] = r.elements.size();
  Output pieces = Output::array();
  for (const auto& piece : gm.pieces) {
    Output orbit = Output::array();
    for (auto e : piece.orbit) {
      const auto& el = r.elements[e];
      const auto& c = r.classes[el.cyclic_class];
      orbit.push_back(Output{{"generator", perm_json(c.generator)}, {"order", c.order}, {"character", el.character}});
    }
    pieces.push_back(Output{{"orbit", orbit},
                            {"motive", terms_json(piece.motive)},
                            {"poincare", motive::poincare_polynomial(piece.motive)},
                            {"isHofF", piece.is_h_of_f}});
  }
  out["components"] = pieces;
  return {out, Success};
}

CommandResult cmd_motive_curve(const CurveSpec& c, const Options& o) {
  const std::size_t p = o.characteristic.value_or(0);
  groups::check_characteristic(p);
  const auto cm = stack::orbifold_curve_motive(c.genus, c.orders);
  Output out = head("motive curve", p);
  out["genus"] = c.genus;
  out["orders"] = c.orders;
  put_motive(out, cm.total);
  out["coarse"] = Output{{"motive", terms_json(cm.coarse)}, {"poincare", motive::poincare_polynomial(cm.coarse)}};
  return {out, Success};
}

CommandResult cmd_verify(const std::optional<InputDocument>& d, const Options& o) {
  static const std::vector<std::string> known{"all", "inertia-dim", "kunneth", "rep-ring", "splitting"};
  if (std::find(known.begin(), known.end(), o.check) == known.end())
    fail(ErrorCode::ValidationError, "--check: unknown check '" + o.check + "'");
  if (!d && !o.seed) fail(ErrorCode::ValidationError, "--input: required unless --seed is given");

  const stack::ExecPolicy policy{o.parallel};
  const std::size_t p = d ? characteristic(*d, o) : o.characteristic.value_or(0);
  groups::check_characteristic(p);
  std::vector<verify::VerificationReport> reports;
  auto wants = [&](const char* name) { return o.check == "all" || o.check == name; };

  if (d) {
    const bool all = o.check == "all";
    if (wants("inertia-dim") || wants("kunneth") || wants("rep-ring")) need_group(*d);
    if (wants("inertia-dim")) reports.push_back(verify::check_inertia_dimension(build_model(*d), p, policy));
    if (wants("kunneth")) {
      const auto partner = d->kunneth ? build_group(*d->kunneth) : verify::named_group("C2");
      reports.push_back(verify::check_kunneth(build_model(*d), partner, p, policy));
    }
    if (wants("rep-ring")) reports.push_back(verify::check_rep_ring_vs_classes(build_group(*d->group)));
    if (wants("splitting")) {
      if (d->cover) {
        reports.push_back(verify::check_degree_splitting(d->cover->map, d->cover->target_size, d->cover->degree));
      } else if (!all) {
        fail(ErrorCode::ValidationError, "cover: missing");
      }
    }
  }
  if (o.seed) {
    auto suite = verify::run_suite(*o.seed, o.suite_count, policy);
    for (auto& r : suite.reports) reports.push_back(std::move(r));
  }

  Output out = head("verify", p);
  out["check"] = o.check;
  if (o.seed) out["seed"] = *o.seed;
  Output rj = Output::array();
  std::size_t failed = 0;
  for (const auto& r : reports) {
    rj.push_back(report_json(r));
    if (!r.pass) ++failed;
  }
  out["reports"] = rj;
  out["passed"] = reports.size() - failed;
  out["failed"] = failed;
  return {out, failed ? VerificationFailed : Success};
}

std::string render_json(const Output& out) { return out.dump(2) + "\n"; }

std::string render_text(const Output& out) {
  std::ostringstream s;
  const std::string cmd = out.at("command").get<std::string>();
  s << cmd << " (characteristic " << out.at("characteristic").get<std::size_t>() << ")\n";

  if (cmd == "group") {
    s << "order " << out["order"].get<std::size_t>() << ", degree " << out["degree"].get<std::size_t>()
      << ", exponent " << out["exponent"].get<std::size_t>() << (out["abelian"].get<bool>() ? ", abelian" : "")
      << "\n";
    s << "conjugacy classes: " << out["conjugacyClasses"].size() << "\n";
    for (const auto& c : out["conjugacyClasses"])
      s << "  " << images_text(c["representative"]) << "  order " << c["order"].get<std::size_t>() << "  size "
        << c["size"].get<std::size_t>() << "\n";
    s << "cyclic subgroup classes: " << out["cyclicClasses"].size() << "\n";
    for (const auto& c : out["cyclicClasses"])
      s << "  " << images_text(c["generator"]) << "  order " << c["order"].get<std::size_t>() << "  conjugates "
        << c["conjugates"].get<std::size_t>() << "  |N| " << c["normalizerOrder"].get<std::size_t>() << "\n";
    if (out.contains("characterTable")) {
      s << "character table:\n";
      for (const auto& row : out["characterTable"]["rows"]) {
        s << " ";
        for (const auto& v : row) s << "  " << v.get<std::string>();
        s << "\n";
      }
    }
    return s.str();
  }

  if (cmd == "verify") {
    for (const auto& r : out["reports"])
      s << (r["pass"].get<bool>() ? "PASS " : "FAIL ") << r["checkName"].get<std::string>() << "  "
        << r["lhs"].get<std::string>() << " | " << r["rhs"].get<std::string>() << "  ("
        << r["inputDigest"].get<std::string>() << ")\n";
    s << out["passed"].get<std::size_t>() << " passed, " << out["failed"].get<std::size_t>() << " failed\n";
    return s.str();
  }

  s << "poincare: " << out["poincare"].get<std::string>() << "\n";
  if (out.contains("coarse")) s << "coarse: " << out["coarse"]["poincare"].get<std::string>() << "\n";
  if (out.contains("rSetSize")) s << "|R(H)|: " << out["rSetSize"].get<std::size_t>() << "\n";
  s << "chow dimensions:\n";
  for (const auto& [k, v] : out["chowDims"].items()) {
    s << "  A^" << k << ": " << v["tateDim"].get<std::uint64_t>();
    for (const auto& t : v["opaque"]) s << " + " << t.get<std::string>();
    s << "\n";
  }
  if (out.contains("components")) {
    s << "components:\n";
    for (const auto& c : out["components"]) {
      if (c.contains("orbit")) {
        s << "  orbit of " << c["orbit"].size() << (c["isHofF"].get<bool>() ? " (h(F))" : "") << ": "
          << c["poincare"].get<std::string>() << "\n";
      } else {
        s << "  " << images_text(c["generator"]) << " order " << c["order"].get<std::size_t>() << ": "
          << c["poincare"].get<std::string>() << "\n";
      }
    }
  }
  if (out.contains("productMatrix")) {
    s << "product matrix:\n";
    for (const auto& row : out["productMatrix"]) {
      s << " ";
      for (const auto& v : row) s << " " << v.get<long>();
      s << "\n";
    }
  }
  return s.str();
}

}  // namespace stacky::cli
