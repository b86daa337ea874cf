#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "liesplit/report.hpp"

using namespace liesplit;

namespace {

void add_options(CLI::App* sub, RunConfig& cfg, std::vector<std::string>& f_text, std::optional<int>& e) {
  sub->add_option("--p", cfg.p, "characteristic");
  sub->add_option("--e", e, "field degree, GF(p^e)");
  sub->add_option("--m", cfg.m, "dim V (generators)");
  sub->add_option("--n", cfg.n, "degree");
  sub->add_option("--cap", cfg.cap, "degree cap");
  sub->add_option("--target", cfg.target, "target degree (hilton)");
  sub->add_option("--gens", cfg.gens, "generating or letter degrees")->delimiter(',');
  sub->add_option("--M", cfg.M, "integers prime to p (report-1-1)")->delimiter(',');
  sub->add_option("--f", f_text, "p-power bounds, 'inf' for none")->delimiter(',');
  sub->add_option("--functor", cfg.functor, "functor expression, e.g. L(3) or L2oL(3)");
  sub->add_option("--mode", cfg.mode, "hilton mode: dims or explicit");
  sub->add_option("--seed", cfg.seed, "seed for randomized decomposition");
  sub->add_option("--jobs", cfg.jobs, "worker threads");
  sub->add_option("--out", cfg.out, "write the report here instead of stdout");
  sub->add_option("--format", cfg.format, "json or csv");
  sub->add_flag("--dry-run", cfg.dry_run, "validate bounds without computing");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"liesplit: natural coalgebra splittings of tensor algebras over finite fields"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::vector<std::string> f_text;
  std::optional<int> e;
  for (const auto& name : commands()) add_options(app.add_subcommand(name), cfg, f_text, e);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& h) {
    return app.exit(h);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.e = e;
  for (const auto& s : f_text) {
    if (s == "inf") {
      cfg.f.push_back(-1);
      continue;
    }
    try {
      cfg.f.push_back(std::stoi(s));
    } catch (const std::exception&) {
      std::cerr << "--f: expected an integer or 'inf', got '" << s << "'\n";
      return 2;
    }
  }
  RunOutcome out = run(cfg);
  std::string text = render(out.report, cfg.format);
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(cfg.out);
    if (!os) {
      std::cerr << "cannot write " << cfg.out << "\n";
      return 2;
    }
    os << text;
  }
  return out.exit_code;
}
