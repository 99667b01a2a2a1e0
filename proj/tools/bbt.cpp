// Command-line surface of the black-box testing workbench. One
// subcommand per core operation; reports are line oriented key=value
// records. Exit codes: 0 affirmative, 1 negative, 2 usage or validation
// error, 3 inconclusive.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bbt/assumptions.hpp"
#include "bbt/subprocess.hpp"
#include "bbt/workbench.hpp"

namespace {

using namespace bbt;

std::string join_members(const SystemModel& model, const Bits& members) {
  std::string out;
  for (std::size_t i = members.find_first(); i != Bits::npos;
       i = members.find_next(i)) {
    if (!out.empty()) out += " ";
    out += model.id(i);
  }
  return out;
}

void print_report(const RefutabilityReport& rep) {
  for (const auto& [system, obs] : rep.witnesses)
    std::cout << "witness system=" << system << " observation=" << obs << "\n";
  for (const auto& b : rep.blockers)
    std::cout << "blocker system=" << b << "\n";
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, sep))
    if (!tok.empty()) out.push_back(tok);
  return out;
}

// Enumerates the irremediable observations {(1,0)}, {(3,0)}, ... of the
// never-output-zero-for-odd-input prohibition.
class OddZeroEnumerator : public Enumerator {
 public:
  StepResult step() override {
    StepResult r = StepResult::yielded("{(" + std::to_string(2 * i_ + 1) +
                                       ",0)}");
    ++i_;
    return r;
  }
  std::string id() const override { return "odd-zero"; }

 private:
  int i_ = 0;
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
}

struct Options {
  std::string file, req, setup_name, assumption, direction = "up";
  std::string system, prop, cmd, omega = "odd-zero", inputs = "0,1,2,3";
  std::string out, alphabet = "ab";
  std::string setup2;
  int bound = 2, k_max = 2, quantum_ms = 10;
  std::size_t stem = 1, loop = 1, depth = 2, budget = 1000, cap = 12;
};

int run(CLI::App& app, Options& o) {
  auto verdict = [&](bool affirmative, const std::string& label) {
    std::cout << "verdict=" << label << "\n";
    return affirmative ? 0 : 1;
  };

  if (auto* c = app.get_subcommand("classify"); c->parsed()) {
    Workbench wb = parse_file(o.file);
    const Classification cls = classify(wb.model(), wb.requirement(o.req));
    std::cout << "universe=" << wb.universe_label << "\n"
              << "obligation=" << cls.is_obligation << "\n"
              << "prohibition=" << cls.is_prohibition << "\n"
              << "trivial=" << cls.is_trivial << "\n"
              << "semi_monotone=" << cls.is_semi_monotone << "\n"
              << "verdict=classified\n";
    return 0;
  }
  if (auto* c = app.get_subcommand("closure"); c->parsed()) {
    Workbench wb = parse_file(o.file);
    const Requirement& r = wb.requirement(o.req);
    Requirement out = o.direction == "down" ? down_closure(wb.model(), r)
                                            : up_closure(wb.model(), r);
    std::cout << "universe=" << wb.universe_label << "\n"
              << "members=" << join_members(wb.model(), out.members) << "\n"
              << "verdict=closed\n";
    return 0;
  }
  if (auto* c = app.get_subcommand("refutable"); c->parsed()) {
    Workbench wb = parse_file(o.file);
    auto rep = is_refutable(wb.model(), wb.setup(o.setup_name),
                            wb.requirement(o.req));
    std::cout << "universe=" << wb.universe_label << "\n";
    print_report(rep);
    return verdict(rep.holds, rep.holds ? "refutable" : "irrefutable");
  }
  if (auto* c = app.get_subcommand("verifiable"); c->parsed()) {
    Workbench wb = parse_file(o.file);
    auto rep = is_verifiable(wb.model(), wb.setup(o.setup_name),
                             wb.requirement(o.req));
    std::cout << "universe=" << wb.universe_label << "\n";
    print_report(rep);
    return verdict(rep.holds, rep.holds ? "verifiable" : "non-verifiable");
  }
  if (auto* c = app.get_subcommand("omega"); c->parsed()) {
    Workbench wb = parse_file(o.file);
    auto omega = omega_set(wb.model(), wb.setup(o.setup_name),
                           wb.requirement(o.req));
    std::cout << "universe=" << wb.universe_label << "\n";
    for (const auto& t : omega) std::cout << "irremediable observation=" << t << "\n";
    std::cout << "verdict=computed\n";
    return 0;
  }
  if (auto* c = app.get_subcommand("permissive"); c->parsed()) {
    Workbench wb = parse_file(o.file);
    const bool more = is_more_permissive(wb.model(), wb.setup(o.setup_name),
                                         wb.setup(o.setup2), o.cap);
    std::cout << "universe=" << wb.universe_label << "\n";
    return verdict(more, more ? "more-permissive" : "not-more-permissive");
  }
  if (auto* c = app.get_subcommand("refutable-under"); c->parsed()) {
    Workbench wb = parse_file(o.file);
    auto rep = refutable_under(wb.model(), wb.setup(o.setup_name),
                               wb.requirement(o.req),
                               wb.assumption(o.assumption));
    std::cout << "universe=" << wb.universe_label << "\n"
              << "assumption=" << o.assumption << "\n";
    print_report(rep);
    return verdict(rep.holds, rep.holds ? "refutable-under" : "irrefutable-under");
  }
  if (auto* c = app.get_subcommand("residual"); c->parsed()) {
    Workbench wb = parse_file(o.file);
    Requirement res = residual_prohibition(wb.model(), wb.requirement(o.req),
                                           wb.assumption(o.assumption));
    std::cout << "universe=" << wb.universe_label << "\n"
              << "members=" << join_members(wb.model(), res.members) << "\n"
              << "verdict=computed\n";
    return 0;
  }
  if (auto* c = app.get_subcommand("campaign-reduce"); c->parsed()) {
    Workbench wb = parse_file(o.file);
    auto rep = reduction_campaign(wb.model(), wb.setup(o.setup_name),
                                  wb.requirement(o.req),
                                  wb.assumption(o.assumption), o.system);
    std::cout << "universe=" << wb.universe_label << "\n"
              << "assumption=" << rep.assumption_name << "\n"
              << "assumption_verifiable=" << rep.assumption_verifiable << "\n";
    if (rep.refutation_witness)
      std::cout << "refutation_witness=" << *rep.refutation_witness << "\n";
    if (rep.verification_witness)
      std::cout << "verification_witness=" << *rep.verification_witness << "\n";
    switch (rep.conclusion) {
      case CampaignReport::Conclusion::UnconditionalViolation:
        std::cout << "verdict=violates-unconditionally\n";
        return 0;
      case CampaignReport::Conclusion::ConditionalViolation:
        std::cout << "verdict=violates-under-" << rep.assumption_name << "\n";
        return 0;
      case CampaignReport::Conclusion::Inconclusive:
        std::cout << "verdict=inconclusive\n";
        return 3;
    }
    return 2;
  }
  if (auto* c = app.get_subcommand("campaign"); c->parsed()) {
    SubprocessConfig cfg;
    cfg.command = split(o.cmd, ' ');
    for (const auto& i : split(o.inputs, ',')) cfg.inputs.push_back(std::stoi(i));
    cfg.quantum_ms = o.quantum_ms;

    OmegaOracle oracle;
    if (o.omega == "odd-zero") {
      oracle = OmegaOracle{"odd-zero",
                           [] { return std::make_unique<OddZeroEnumerator>(); }};
    } else if (o.omega.rfind("set:", 0) == 0) {
      auto items = split(o.omega.substr(4), ';');
      oracle = OmegaOracle::from_set(
          "set", std::set<std::string>(items.begin(), items.end()));
    } else {
      throw ValidationError("unknown omega oracle: " + o.omega);
    }

    auto verdict_run =
        algorithm1(subprocess_enumerator(std::move(cfg)), oracle, o.budget);
    for (const auto& entry : verdict_run.log)
      std::cout << entry.render() << "\n";
    std::cout << "seed=0\n"
              << "steps=" << verdict_run.steps_used << "\n";
    if (verdict_run.outcome == CampaignVerdict::Outcome::Refuted) {
      std::cout << "witness=" << *verdict_run.witness << "\n"
                << "verdict=refuted\n";
      return 0;
    }
    std::cout << "verdict=budget-exhausted\n";
    return 3;
  }

  if (auto* eio_cmd = app.get_subcommand("eio"); eio_cmd->parsed()) {
    if (eio_cmd->get_subcommand("gen")->parsed()) {
      write_output(o.out, render_eio_workbench(o.bound, o.k_max));
      return 0;
    }
  }
  if (auto* t = app.get_subcommand("temporal"); t->parsed()) {
    if (t->get_subcommand("gen")->parsed()) {
      write_output(o.out,
                   render_temporal_workbench(o.alphabet, o.stem, o.loop,
                                             o.depth));
      return 0;
    }
    Workbench wb = parse_file(o.file);
    const auto* u = wb.temporal();
    if (!u) throw ValidationError("file does not define a temporal universe");
    std::cout << "universe=" << wb.universe_label << "\n";
    if (t->get_subcommand("safety")->parsed()) {
      auto cert = is_safety(*u, wb.property(o.prop));
      for (const auto& [pi, sigma] : cert.bad_prefixes)
        std::cout << "bad_prefix behavior=" << pi << " prefix=" << sigma << "\n";
      for (const auto& pi : cert.undetectable)
        std::cout << "undetectable behavior=" << pi << "\n";
      return verdict(cert.holds, cert.holds ? "safety" : "not-safety");
    }
    if (t->get_subcommand("liveness")->parsed()) {
      auto cert = is_liveness(*u, wb.property(o.prop));
      if (!cert.holds)
        std::cout << "stuck_prefix=" << cert.stuck_prefix << "\n";
      return verdict(cert.holds, cert.holds ? "liveness" : "not-liveness");
    }
    if (t->get_subcommand("decompose")->parsed()) {
      auto [safe, live] = decompose(*u, wb.property(o.prop));
      auto render = [&](const TemporalProperty& p) {
        std::string out;
        for (std::size_t b = p.members.find_first(); b != Bits::npos;
             b = p.members.find_next(b)) {
          if (!out.empty()) out += " ";
          out += u->behaviors[b].id();
        }
        return out;
      };
      std::cout << "safety_part=" << render(safe) << "\n"
                << "liveness_part=" << render(live) << "\n"
                << "verdict=decomposed\n";
      return 0;
    }
    if (t->get_subcommand("hypersafety")->parsed()) {
      const bool hs =
          is_hyper_safety(*u, property_requirement(*u, wb.property(o.prop)));
      return verdict(hs, hs ? "hyper-safety" : "not-hyper-safety");
    }
    if (t->get_subcommand("nabla")->parsed()) {
      for (const auto& sigma : nabla(*u, wb.property(o.prop)))
        std::cout << "irremediable sequence=" << sigma << "\n";
      std::cout << "verdict=computed\n";
      return 0;
    }
  }
  std::cerr << app.help();
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"black-box testing workbench"};
  app.require_subcommand(0, 1);
  Options o;

  auto add_file_req = [&](CLI::App* c, bool with_setup) {
    c->add_option("--file", o.file, "workbench file")->required();
    c->add_option("--req", o.req, "requirement name");
    if (with_setup)
      c->add_option("--setup", o.setup_name, "setup name")->required();
  };

  add_file_req(app.add_subcommand("classify", "requirement type flags"), false);
  auto* closure = app.add_subcommand("closure", "up or down closure");
  add_file_req(closure, false);
  closure->add_option("--direction", o.direction, "up|down");
  add_file_req(app.add_subcommand("refutable", "T-refutability with witnesses"),
               true);
  add_file_req(
      app.add_subcommand("verifiable", "T-verifiability with witnesses"), true);
  add_file_req(app.add_subcommand("omega", "irremediable observations"), true);

  auto* perm = app.add_subcommand("permissive", "compare two setups");
  perm->add_option("--file", o.file)->required();
  perm->add_option("--setup1", o.setup_name, "candidate finer setup")->required();
  perm->add_option("--setup2", o.setup2, "candidate coarser setup")->required();
  perm->add_option("--cap", o.cap, "element cap for exhaustive enumeration");

  auto* runder = app.add_subcommand("refutable-under",
                                    "refutability under an assumption");
  add_file_req(runder, true);
  runder->add_option("--assume", o.assumption)->required();

  auto* residual = app.add_subcommand("residual", "residual prohibition");
  add_file_req(residual, false);
  residual->add_option("--assume", o.assumption)->required();

  auto* reduce = app.add_subcommand("campaign-reduce",
                                    "refute-then-verify reduction");
  add_file_req(reduce, true);
  reduce->add_option("--assume", o.assumption)->required();
  reduce->add_option("--system", o.system, "system under test")->required();

  auto* campaign =
      app.add_subcommand("campaign", "dovetailed refutation of a black box");
  campaign->add_option("--cmd", o.cmd, "black-box command line")->required();
  campaign->add_option("--omega", o.omega,
                       "oracle: odd-zero or set:<obs;obs;...>");
  campaign->add_option("--inputs", o.inputs, "comma-separated input schedule");
  campaign->add_option("--budget", o.budget, "scheduler step budget");
  campaign->add_option("--quantum", o.quantum_ms, "quantum per step, ms");

  auto* eio_cmd = app.add_subcommand("eio", "EIO universe commands");
  auto* eio_gen = eio_cmd->add_subcommand("gen", "emit an EIO workbench file");
  eio_gen->add_option("--bound", o.bound, "grid bound (1..4)");
  eio_gen->add_option("--k-max", o.k_max, "largest T_k setup to include");
  eio_gen->add_option("-o,--out", o.out, "output path (default stdout)");

  auto* temporal = app.add_subcommand("temporal", "temporal universe commands");
  auto* tgen = temporal->add_subcommand("gen", "emit a temporal workbench file");
  tgen->add_option("--alphabet", o.alphabet);
  tgen->add_option("--stem", o.stem);
  tgen->add_option("--loop", o.loop);
  tgen->add_option("--depth", o.depth);
  tgen->add_option("-o,--out", o.out, "output path (default stdout)");
  for (const char* name :
       {"safety", "liveness", "decompose", "hypersafety", "nabla"}) {
    auto* c = temporal->add_subcommand(name, "");
    c->add_option("--file", o.file)->required();
    c->add_option("--prop", o.prop)->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors are exit 2; --help is 0
  }
  try {
    return run(app, o);
  } catch (const bbt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
