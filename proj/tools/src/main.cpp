#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "stacky/cli/commands.hpp"
#include "stacky/error.hpp"

using namespace stacky;
using namespace stacky::cli;

namespace {

struct Common {
  std::string input;
  std::string format = "text";
  Options options;
};

void add_common(CLI::App* cmd, Common& c, bool input_required) {
  auto* in = cmd->add_option("--input", c.input, "input JSON document");
  if (input_required) in->required();
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--characteristic", c.options.characteristic, "characteristic (0 or a prime)");
  cmd->add_flag("--parallel", c.options.parallel, "compute independent components concurrently");
}

InputDocument load(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_document(buf.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chow motives of finite quotient stacks, gerbes and orbifold curves"};
  app.require_subcommand(1);
  Common c;
  std::size_t genus = 0;
  std::vector<std::size_t> orders;

  auto* group = app.add_subcommand("group", "order, conjugacy classes and cyclic subgroup classes");
  add_common(group, c, true);
  group->add_flag("--chars", c.options.chars, "include the character table");

  auto* motive = app.add_subcommand("motive", "h_chi of a stack");
  motive->require_subcommand(1);
  auto* bh = motive->add_subcommand("bh", "classifying stack BH");
  auto* quotient = motive->add_subcommand("quotient", "global quotient [X/H]");
  auto* gerbe = motive->add_subcommand("gerbe", "gerbe with band H");
  auto* curve = motive->add_subcommand("curve", "orbifold curve");
  for (auto* s : {bh, quotient, gerbe}) add_common(s, c, true);
  add_common(curve, c, false);
  auto* genus_opt = curve->add_option("--genus", genus, "genus of the coarse curve");
  auto* orders_opt = curve->add_option("--orders", orders, "stabiliser orders")->delimiter(',');

  auto* verify = app.add_subcommand("verify", "run verification checks");
  add_common(verify, c, false);
  verify->add_option("--check", c.options.check, "inertia-dim|kunneth|rep-ring|splitting|all");
  verify->add_option("--seed", c.options.seed, "also run the seeded random suite");
  verify->add_option("--count", c.options.suite_count, "number of random suite inputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return InputError;
  }

  try {
    CommandResult r;
    if (group->parsed()) {
      r = cmd_group_info(load(c.input), c.options);
    } else if (bh->parsed()) {
      r = cmd_motive_bh(load(c.input), c.options);
    } else if (quotient->parsed()) {
      r = cmd_motive_quotient(load(c.input), c.options);
    } else if (gerbe->parsed()) {
      r = cmd_motive_gerbe(load(c.input), c.options);
    } else if (curve->parsed()) {
      CurveSpec spec;
      if (!c.input.empty()) {
        const auto d = load(c.input);
        if (!d.curve) fail(ErrorCode::ValidationError, "curve: missing");
        spec = *d.curve;
        if (!c.options.characteristic) c.options.characteristic = d.characteristic;
      }
      if (genus_opt->count()) spec.genus = genus;
      if (orders_opt->count()) spec.orders = orders;
      r = cmd_motive_curve(spec, c.options);
    } else {
      std::optional<InputDocument> d;
      if (!c.input.empty()) d = load(c.input);
      r = cmd_verify(d, c.options);
    }
    std::cout << (c.format == "json" ? render_json(r.output) : render_text(r.output));
    return r.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return InputError;
  }
}
