#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

#include "scrollkit/error.hpp"
#include "scrollkit/report.hpp"

namespace {

struct Flags {
  scrollkit::ExperimentConfig cfg;
  int n = 0, d = 0, k = 0, h = 0, node = 0, trials = 0;
  std::vector<int> a;
  std::string field, lambda, input, out;
};

void add_options(CLI::App* sub, Flags& f) {
  sub->add_option("--n", f.n, "ambient dimension");
  sub->add_option("--d", f.d, "scroll dimension");
  sub->add_option("--a", f.a, "splitting type, comma separated")->delimiter(',');
  sub->add_option("--k", f.k, "induced degree of a curve");
  sub->add_option("--h", f.h, "induced degree of the second component");
  sub->add_option("--field", f.field, "q or fp:PRIME");
  sub->add_option("--seed", f.cfg.seed, "64-bit seed");
  sub->add_option("--trials", f.trials, "number of trials");
  sub->add_option("--format", f.cfg.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--out", f.out, "write the report to FILE");
  sub->add_option("--node", f.node, "node index for project");
  sub->add_option("--lambda", f.lambda, "family parameter for degenerate");
  sub->add_option("--input", f.input, "binary curve JSON");
  sub->add_flag("--positive-control", f.cfg.positive_control, "use the constructed positive control");
  sub->add_flag("--repeat-t", f.cfg.repeat_t, "unisecant: frames with a repeated t-value");
  sub->add_flag("--omit-clock", f.cfg.omit_clock, "leave out wall_clock_ms");
}

const std::map<std::string, std::string> kDescriptions = {
    {"dims", "dimension table of scroll families and curves in them"},
    {"rnc", "rational normal curves through n+3 points"},
    {"unisecant", "interpolate unisecant curves through scroll points"},
    {"incidence", "measured dimension of scrolls containing a curve through random points"},
    {"degenerate", "degeneration of a scroll family"},
    {"gonality", "low-degree map from a binary curve to P^1"},
    {"hyperelliptic", "test whether the nodes are Moebius related"},
    {"quadrics", "quadrics containing a binary curve"},
    {"containment", "search for a scroll containing a binary curve"},
    {"project", "project a binary curve from one of its nodes"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact experiments on rational normal scrolls and binary curves"};
  app.set_version_flag("--version", std::string("scrollkit ") + SCROLLKIT_VERSION);
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  Flags f;
  for (const auto& name : scrollkit::command_names()) add_options(app.add_subcommand(name, kDescriptions.at(name)), f);

  CLI11_PARSE(app, argc, argv);

  CLI::App* sub = app.get_subcommands().front();
  auto& cfg = f.cfg;
  cfg.command = sub->get_name();
  auto set = [&](const char* flag, int value, std::optional<int>& slot) {
    if (sub->count(flag) > 0) slot = value;
  };
  set("--n", f.n, cfg.n);
  set("--d", f.d, cfg.d);
  set("--k", f.k, cfg.k);
  set("--h", f.h, cfg.h);
  set("--node", f.node, cfg.node);
  set("--trials", f.trials, cfg.trials);
  if (sub->count("--a") > 0) cfg.a = f.a;
  if (sub->count("--field") > 0) cfg.field = f.field;
  if (sub->count("--lambda") > 0) cfg.lambda = f.lambda;
  if (sub->count("--input") > 0) cfg.input = f.input;

  try {
    std::string text = scrollkit::render(scrollkit::run(cfg), cfg.format);
    if (f.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream os(f.out);
      if (!os) {
        std::cerr << "error: cannot write " << f.out << "\n";
        return 2;
      }
      os << text;
    }
  } catch (const scrollkit::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
