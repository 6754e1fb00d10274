// Copyright 2026 The aplab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "aplab/bohr.hpp"
#include "aplab/density.hpp"
#include "aplab/error.hpp"
#include "aplab/group.hpp"
#include "aplab/increment.hpp"
#include "aplab/parallel.hpp"
#include "aplab/record.hpp"
#include "config.hpp"
#include "verify/suites.hpp"

namespace {

using namespace aplab;
using cli::ExperimentConfig;
using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kSizeLimit:
    case ErrorKind::kUnsupportedKind:
    case ErrorKind::kGroupMismatch:
    case ErrorKind::kInvalidDilate:
    case ErrorKind::kDomain:
    case ErrorKind::kContract:
    case ErrorKind::kEmptySet:
    case ErrorKind::kFormat:
      return kExitUsage;
    default:
      return kExitFalsified;
  }
}

// Destination for records: the output file when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw Error(ErrorKind::kFormat, "cannot write " + path);
    }
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

SubsetG load_set(const std::string& path) {
  if (path.empty()) throw Error(ErrorKind::kInvalidArgument, "missing set file");
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kFormat, "cannot open " + path);
  return read_set(in);
}

SubsetG doubled(const SubsetG& a) {
  std::vector<Index> m;
  for (Index x : a.members()) m.push_back(a.group().scale(2, x));
  return SubsetG(a.group(), std::move(m));
}

SiftConfig sift_config(const ExperimentConfig& c, std::uint64_t seed) {
  SiftConfig s;
  s.strategy = parse_sift_strategy(c.strategy);
  s.seed = seed;
  s.trials = c.trials;
  return s;
}

std::uint64_t instance_seed(const ExperimentConfig& c, int i) {
  return c.seed + 1000 * static_cast<std::uint64_t>(i);
}

// ---------------------------------------------------------------------------

int cmd_count3ap(const ExperimentConfig& c) {
  const SubsetG a = load_set(c.input);
  const ThreeAPReport r = count_3aps(a);
  ordered_json j;
  j["group"] = a.group().descriptor();
  j["size"] = a.size();
  j["raw"] = r.raw_triples;
  j["nontrivial"] = r.nontrivial_triples;
  j["normalized"] = std::to_string(r.normalized_num) + "/" + std::to_string(r.normalized_den);
  Sink sink(c.output);
  sink.out() << j.dump() << "\n";
  return kExitPass;
}

int cmd_behrend(const ExperimentConfig& c) {
  const SubsetG b = behrend_set(c.n);
  Sink sink(c.output);
  write_set(sink.out(), b);
  return kExitPass;
}

int cmd_bohr(const ExperimentConfig& c) {
  const Group g = make_group(c.group);
  std::vector<Index> freqs;
  for (std::int64_t f : c.freqs) {
    const auto n = static_cast<std::int64_t>(g.order());
    freqs.push_back(static_cast<Index>(((f % n) + n) % n));
  }
  BohrSet b = bohr_set(g, freqs, c.width);
  if (c.shrink != 1.0) b = shrink(b, c.shrink);
  if (c.regular) b = find_regular(b);
  const RegularityReport reg = is_regular(b);
  ordered_json j;
  j["descriptor"] = b.descriptor();
  j["rank"] = b.rank();
  j["size"] = b.size();
  j["density"] = b.density();
  j["regular"] = reg.regular;
  Sink sink(c.output);
  sink.out() << j.dump() << "\n";
  return kExitPass;
}

int cmd_bootstrap(const ExperimentConfig& c) {
  if (c.instances < 1) throw Error(ErrorKind::kInvalidArgument, "instances must be >= 1");
  const Group g = make_group(c.group);
  const bool bohr = c.ambient == "bohr";
  if (!bohr && c.ambient != "ffq") {
    throw Error(ErrorKind::kInvalidArgument, "ambient must be ffq or bohr");
  }
  if (c.fixture != "planted" && c.fixture != "files") {
    throw Error(ErrorKind::kInvalidArgument, "bootstrap fixture must be planted or files");
  }
  if (c.fixture == "files" && bohr) {
    throw Error(ErrorKind::kUnsupportedKind, "file fixtures are supported for ffq only");
  }
  const int count = c.fixture == "files" ? 1 : c.instances;
  std::vector<std::string> lines(static_cast<std::size_t>(count));
  parallel_for(lines.size(), [&](std::size_t idx) {
    const int i = static_cast<int>(idx);
    BootstrapOptions opts;
    std::optional<BootstrapResult> r;
    std::uint64_t seed = instance_seed(c, i);
    if (c.fixture == "files") {
      opts.seed = seed;
      r = bootstrap_ffq(load_set(c.a), load_set(c.a1), load_set(c.a2), load_set(c.s), c.eps, opts);
    } else if (bohr) {
      const PlantedBohrInstance inst =
          planted_bohr_instance(g, static_cast<std::size_t>(c.rank), c.noise, c.eps, seed);
      seed = inst.seed;
      opts.seed = seed;
      r = bootstrap_bohr(inst.a, inst.a1, inst.a2, inst.shift, inst.s, inst.b, inst.b1, inst.b2,
                         c.eps, opts);
    } else {
      const PlantedInstance inst =
          planted_instance(g, static_cast<std::size_t>(c.codim0), c.noise, c.eps, seed);
      seed = inst.seed;
      opts.seed = seed;
      r = bootstrap_ffq(inst.a, inst.a1, inst.a2, inst.s, c.eps, opts);
    }
    lines[idx] = to_json_line(bootstrap_record(i, bohr ? "bootstrap-bohr" : "bootstrap-ffq", *r, seed));
  });
  Sink sink(c.output);
  for (const auto& line : lines) sink.out() << line << "\n";
  return kExitPass;
}

int cmd_iterate(const ExperimentConfig& c) {
  if (c.max_steps == 0 || c.max_steps < -1) {
    throw Error(ErrorKind::kInvalidArgument, "max_steps must be >= 1");
  }
  const Group g = make_group(c.group);
  std::optional<SubsetG> a, cset;
  if (c.fixture == "planted") {
    const PlantedInstance inst =
        planted_instance(g, static_cast<std::size_t>(c.codim0), c.noise, 0.1, c.seed);
    a = inst.a;
    cset = doubled(inst.a);
  } else if (c.fixture == "full") {
    a = SubsetG::full(g);
    cset = a;
  } else if (c.fixture == "files") {
    a = load_set(c.a);
    cset = load_set(c.c);
  } else {
    throw Error(ErrorKind::kInvalidArgument, "iterate fixture must be planted, full or files");
  }
  if (a->empty()) throw Error(ErrorKind::kEmptySet, "A is empty");
  const int steps = c.max_steps > 0
                        ? c.max_steps
                        : static_cast<int>(iteration_step_bound(a->density(), c.eps));
  const IncrementTrace t = iterate_ffq(*a, *cset, c.eps, std::max(steps, 1), sift_config(c, c.seed));
  Sink sink(c.output);
  for (const Record& r : trace_records(t, c.seed)) sink.out() << to_json_line(r) << "\n";
  std::cerr << "outcome: " << to_string(t.outcome)
            << (t.note.empty() ? "" : " (" + t.note + ")") << "\n";
  return kExitPass;
}

int cmd_increment_int(const ExperimentConfig& c) {
  const Group g = make_group(c.group);
  std::optional<SubsetG> a;
  std::optional<BohrSet> b, b1, b2;
  std::uint64_t seed = c.seed;
  if (c.fixture == "interval") {
    const auto len = static_cast<Index>(std::llround(c.alpha * static_cast<double>(g.order())));
    std::vector<Index> m;
    for (Index x = 0; x < std::max<Index>(len, 1); ++x) m.push_back(x);
    a = SubsetG(g, std::move(m));
    b = b1 = b2 = BohrSet(g, {}, {});
  } else if (c.fixture == "planted") {
    const PlantedBohrInstance inst =
        planted_bohr_instance(g, static_cast<std::size_t>(c.rank), c.noise, 0.05, c.seed);
    seed = inst.seed;
    a = inst.a;
    b = b1 = inst.b;
    b2 = inst.b.rank() == 0 ? inst.b
                            : find_regular(shrink(inst.b, 0.01 / static_cast<double>(inst.b.rank())));
  } else {
    throw Error(ErrorKind::kInvalidArgument, "increment-int fixture must be interval or planted");
  }
  IntStepParams params;
  params.p = c.p;
  params.k = c.k;
  params.eps = c.eps;
  BootstrapOptions opts;
  opts.seed = seed;
  const IntStepResult res = increment_step_int(*a, *b, *b1, *b2, params, sift_config(c, seed), opts);
  Record rec;
  rec.step = 1;
  rec.seed = seed;
  rec.alpha = static_cast<double>(a->size()) / static_cast<double>(b->size());
  rec.codim_or_rank = b->rank();
  if (const auto* nv = std::get_if<NoViolation>(&res)) {
    rec.kind = "no-violation";
    rec.witness = nv->norm;
  } else if (const auto* inc = std::get_if<IntIncrement>(&res)) {
    rec.kind = "increment";
    rec.codim_or_rank = inc->b3.rank();
    rec.k_used = inc->bootstrap.k_used;
    rec.witness = inc->witness;
    rec.bound_ratio = inc->prop_bound.ratio;
  } else {
    const auto& oi = std::get<OracleIncomplete>(res);
    rec.kind = "oracle-incomplete";
    rec.witness = oi.best.achieved;
    std::cerr << "warning: " << oi.message << "\n";
  }
  Sink sink(c.output);
  sink.out() << to_json_line(rec) << "\n";
  return kExitPass;
}

int cmd_verify(const ExperimentConfig& c) {
  if (!verify::is_suite(c.suite)) {
    std::cerr << "error: unknown suite '" << c.suite << "'\n";
    return kExitUsage;
  }
  verify::SuiteOptions o;
  o.seed = c.seed;
  Sink sink(c.output);
  bool all = true;
  verify::run_suite(c.suite, o, [&](const verify::CriterionResult& r) {
    sink.out() << verify::format_line(r) << "\n" << std::flush;
    all = all && r.pass;
  });
  return all ? kExitPass : kExitFalsified;
}

// Looks for --config before CLI11 runs so that file values act as defaults
// and explicit flags override them.
std::optional<std::string> prescan_config(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--config" && i + 1 < argc) return std::string(argv[i + 1]);
    if (arg.rfind("--config=", 0) == 0) return arg.substr(9);
  }
  return std::nullopt;
}

int run(int argc, char** argv) {
  ExperimentConfig cfg;
  if (const auto path = prescan_config(argc, argv)) cfg = cli::load_config(*path);

  CLI::App app{"Density increment workbench"};
  app.set_help_all_flag("--help-all");
  std::string config_path, save_path;
  app.add_option("--config", config_path, "Load an experiment config (JSON)");
  app.add_option("--save-config", save_path, "Write the effective config (JSON)");
  app.add_option("-o,--output", cfg.output, "Write records here instead of stdout");

  auto* count3ap = app.add_subcommand("count3ap", "Count 3-term progressions in a set file");
  count3ap->add_option("input", cfg.input, "Set file")->required();

  auto* behrend = app.add_subcommand("behrend", "Emit a progression-free set in {1..N}");
  behrend->add_option("-n,--n", cfg.n, "N");

  auto* bohr = app.add_subcommand("bohr", "Build a Bohr set and report size and regularity");
  bohr->add_option("-g,--group", cfg.group, "Cyclic group z:N");
  bohr->add_option("--freqs", cfg.freqs, "Frequencies")->delimiter(',');
  bohr->add_option("--width", cfg.width, "Width in (0, 2]");
  bohr->add_option("--shrink", cfg.shrink, "Scale the widths by this factor");
  bohr->add_flag("--regular", cfg.regular, "Search for a regular scale");

  auto* bootstrap = app.add_subcommand("bootstrap", "Run the subspace or Bohr bootstrap");
  auto* iterate = app.add_subcommand("iterate", "Iterate the increment step on F_q^n");
  auto* inc_int = app.add_subcommand("increment-int", "One increment step on Z/N");
  for (auto* sub : {bootstrap, iterate, inc_int}) {
    sub->add_option("-g,--group", cfg.group, "Group descriptor");
    sub->add_option("--eps", cfg.eps, "Epsilon");
    sub->add_option("--seed", cfg.seed, "Base seed");
    sub->add_option("--fixture", cfg.fixture, "Instance source");
    sub->add_option("--noise", cfg.noise, "Planted noise fraction");
    sub->add_option("--strategy", cfg.strategy, "Sift strategy");
    sub->add_option("--trials", cfg.trials, "Sift trials");
  }
  for (auto* sub : {bootstrap, iterate}) {
    sub->add_option("--codim0", cfg.codim0, "Planted codimension");
    sub->add_option("--a", cfg.a, "Set file for A");
  }
  bootstrap->add_option("--instances", cfg.instances, "Number of planted instances");
  bootstrap->add_option("--ambient", cfg.ambient, "ffq or bohr");
  bootstrap->add_option("--rank", cfg.rank, "Ambient Bohr rank");
  bootstrap->add_option("--a1", cfg.a1, "Set file for A1");
  bootstrap->add_option("--a2", cfg.a2, "Set file for A2");
  bootstrap->add_option("--s", cfg.s, "Set file for S");
  iterate->add_option("--max-steps", cfg.max_steps, "Step limit");
  iterate->add_option("--c", cfg.c, "Set file for C");
  inc_int->add_option("-p,--p", cfg.p, "Norm exponent");
  inc_int->add_option("-k,--k", cfg.k, "Dilation");
  inc_int->add_option("--rank", cfg.rank, "Ambient Bohr rank");
  inc_int->add_option("--alpha", cfg.alpha, "Interval density");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", cfg.suite, "Suite name")->required();
  verify->add_option("--seed", cfg.seed, "Base seed");

  for (auto* sub : {count3ap, behrend, bohr, bootstrap, iterate, inc_int, verify}) {
    sub->add_option("-o,--output", cfg.output, "Write records here instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitUsage;
  }

  for (const auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  if (cfg.command.empty()) {
    std::cerr << app.help();
    return kExitUsage;
  }
  if (!save_path.empty()) cli::save_config(save_path, cfg);

  if (cfg.command == "count3ap") return cmd_count3ap(cfg);
  if (cfg.command == "behrend") return cmd_behrend(cfg);
  if (cfg.command == "bohr") return cmd_bohr(cfg);
  if (cfg.command == "bootstrap") return cmd_bootstrap(cfg);
  if (cfg.command == "iterate") return cmd_iterate(cfg);
  if (cfg.command == "increment-int") return cmd_increment_int(cfg);
  if (cfg.command == "verify") return cmd_verify(cfg);
  std::cerr << "error: unknown command '" << cfg.command << "'\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const aplab::Error& e) {
    std::cerr << "error (" << aplab::to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFalsified;
  }
}
