/*
 * Copyright (c) 2026, The gscbench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
*/

#include "gsc/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "gsc/axioms.hpp"
#include "gsc/composer.hpp"
#include "gsc/derived.hpp"
#include "gsc/equivalence.hpp"
#include "gsc/generate.hpp"
#include "gsc/io.hpp"
#include "gsc/synthesizer.hpp"

namespace gsc {

namespace {

struct Flags {
  std::string model = "gsc";
  bool apply_preset = false;
  std::string semantics;
  std::size_t max_events = 9;
  std::size_t max_schedules = 0;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  std::string path = "auto";
};

const ObjectSemantics& pick_semantics(const Flags& f, const std::string& from_file) {
  return semantics_by_name(f.semantics.empty() ? from_file : f.semantics);
}

void maybe_write(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") out << text;
  else write_text_file(path, text);
}

int cmd_check(const Flags& f, const std::string& file, const std::string& witness_out,
              std::ostream& out) {
  HistoryDoc doc = parse_history(read_text_file(file), file);
  const ObjectSemantics& sem = pick_semantics(f, doc.semantics);
  const Model m = parse_model(f.model);
  History h = doc.history;
  if (m != Model::Gsc) {
    if (f.apply_preset) h = apply_fence_preset(h, m, sem);
    else if (!check_fence_preset(h, m, sem))
      throw ModelError("fence preset violated for model " + std::string(model_name(m)) +
                       " (use --apply-preset to rewrite fences)");
  }
  if (m == Model::Lin || m == Model::Osc) {
    const LinResult r = m == Model::Lin ? check_lin(h, sem) : check_osc(h, sem);
    out << (r.ok ? "member" : "non-member") << " (" << model_name(m) << ", " << r.explored
        << " linearizations tried)\n";
    if (r.ok) {
      out << "lin:";
      for (EventIdx e : r.witness->lin.sequence()) out << " " << h[e].id;
      out << "\n";
    }
    return r.ok ? kExitMember : kExitNonMember;
  }
  GscOptions o;
  o.max_events = f.max_events;
  o.path = f.path == "fast" ? SearchPath::Fast : f.path == "slow" ? SearchPath::Slow
                                                                 : SearchPath::Auto;
  if (f.path != "auto" && f.path != "fast" && f.path != "slow")
    throw ModelError("unknown search path '" + f.path + "'");
  const MembershipResult r = is_gsc(h, sem, o);
  out << (r.member ? "member" : "non-member") << " (" << model_name(m) << ", "
      << (r.stats.fast_path ? "fast" : "slow") << " path, " << r.stats.arbitrations
      << " arbitrations)\n";
  if (r.member) {
    out << check_axioms(*r.witness, sem).summary(h);
    if (!witness_out.empty()) write_text_file(witness_out, emit_execution(*r.witness, sem.name()));
  } else {
    for (const std::string& line : r.refutation) out << "  " << line << "\n";
  }
  return r.member ? kExitMember : kExitNonMember;
}

int cmd_simulate(const Flags& f, const std::string& file, const std::string& hist_out,
                 const std::string& exec_out, std::ostream& out) {
  const Schedule s = parse_schedule(read_text_file(file), file);
  const ObjectSemantics& sem = pick_semantics(f, "sequence");
  World w = run_schedule(s, sem);
  const History h = extract_history(w);
  if (!w.is_quiescent()) {
    for (const Token& t : flush_suffix(w)) step(w, t, sem);
    out << "note: appended a flush suffix to reach quiescence\n";
  }
  const AbstractExecution a = extract_execution(w);
  for (const Event& e : h.events) out << describe(e) << "\n";
  if (!hist_out.empty()) write_text_file(hist_out, emit_history(h, sem.name()));
  if (!exec_out.empty()) write_text_file(exec_out, emit_execution(a, sem.name()));
  return kExitMember;
}

int cmd_synthesize(const Flags& f, const std::string& file, const std::string& sched_out,
                   std::ostream& out) {
  ExecutionDoc doc = parse_execution(read_text_file(file), file);
  const ObjectSemantics& sem = pick_semantics(f, doc.semantics);
  const Schedule s = synthesize_schedule(doc.execution, sem);
  out << "round-trip verified: " << s.size() << " steps reproduce the history, vis and ar\n";
  maybe_write(sched_out, emit_schedule(s), out);
  return kExitMember;
}

int cmd_compose(const Flags& f, const std::string& file, const std::vector<std::string>& execs,
                const std::string& exec_out, std::ostream& out) {
  HistoryDoc doc = parse_history(read_text_file(file), file);
  const ObjectSemantics& sem = pick_semantics(f, doc.semantics);
  PerObjectWitnesses w;
  w.history = doc.history;
  for (const std::string& p : execs) {
    ExecutionDoc ed = parse_execution(read_text_file(p), p);
    const auto objs = ed.execution.history.objects();
    if (objs.size() != 1) throw ModelError(p + ": a per-object execution must cover one object");
    w.per_object[objs.front()] = std::move(ed.execution);
  }
  const AbstractExecution a = compose_witnesses(w, sem);
  out << "composed " << w.per_object.size() << " objects; all axioms hold\n";
  maybe_write(exec_out, emit_execution(a, sem.name()), out);
  return kExitMember;
}

int cmd_equiv(const Flags& f, const std::string& file, const std::string& push_out,
              const std::string& pull_out, std::ostream& out) {
  ExecutionDoc doc = parse_execution(read_text_file(file), file);
  const ObjectSemantics& sem = pick_semantics(f, doc.semantics);
  const AbstractExecution dual = to_dual_tso(doc.execution, sem);
  const AbstractExecution tso = to_tso(doc.execution, sem);
  out << "dual TSO form: all axioms hold\nTSO form: all axioms hold\n";
  if (!push_out.empty()) write_text_file(push_out, emit_execution(dual, sem.name()));
  if (!pull_out.empty()) write_text_file(pull_out, emit_execution(tso, sem.name()));
  return kExitMember;
}

struct EnumerateRow {
  std::string pattern;
  std::size_t states = 0;
  std::vector<History> histories;
  std::size_t executions = 0;
  std::size_t failing = 0;
};

int cmd_enumerate(const Flags& f, std::size_t ops, std::size_t objects,
                  const std::vector<std::string>& patterns, std::size_t sample,
                  const std::string& dir, std::ostream& out) {
  if (objects < 1 || objects > 2) throw ModelError("--objects must be 1 or 2");
  CorpusOptions co;
  co.ops_per_client = ops;
  co.objects = objects == 1 ? std::vector<std::string>{"x"} : std::vector<std::string>{"x", "y"};
  if (!patterns.empty()) {
    co.fences.clear();
    for (const std::string& p : patterns) {
      auto all = all_fence_patterns();
      auto it = std::find_if(all.begin(), all.end(),
                             [&](FencePattern fp) { return fence_pattern_name(fp) == p; });
      if (it == all.end()) throw ModelError("unknown fence pattern '" + p + "'");
      co.fences.push_back(*it);
    }
  }
  std::vector<Program> progs = corpus_programs(co);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < progs.size(); ++i)
    names.emplace_back(fence_pattern_name(co.fences[i % co.fences.size()]));
  if (sample && sample < progs.size()) {
    Rng rng(f.seed);
    std::vector<std::size_t> idx(progs.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(sample);
    std::sort(idx.begin(), idx.end());
    std::vector<Program> p2;
    std::vector<std::string> n2;
    for (std::size_t i : idx) {
      p2.push_back(progs[i]);
      n2.push_back(names[i]);
    }
    progs = std::move(p2);
    names = std::move(n2);
  }
  const ObjectSemantics& sem = pick_semantics(f, "sequence");
  std::vector<EnumerateRow> rows(progs.size());
  std::vector<std::string> errors(progs.size());
  auto work = [&](std::size_t start) {
    for (std::size_t i = start; i < progs.size(); i += std::max<std::size_t>(f.jobs, 1)) {
      try {
        EnumerateOptions eo;
        eo.max_states = f.max_schedules;
        EnumerationResult r = enumerate_histories(progs[i], sem, eo);
        rows[i].pattern = names[i];
        rows[i].states = r.states;
        rows[i].executions = r.executions.size();
        for (const auto& a : r.executions)
          if (!check_axioms(a, sem).all_pass()) ++rows[i].failing;
        rows[i].histories = std::move(r.histories);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < f.jobs; ++j) pool.emplace_back(work, j);
  work(0);
  for (auto& t : pool) t.join();
  for (const std::string& e : errors)
    if (!e.empty()) throw ModelError(e);
  if (!dir.empty()) std::filesystem::create_directories(dir);
  out << std::left << std::setw(6) << "prog" << std::setw(26) << "fences" << std::setw(10)
      << "states" << std::setw(11) << "histories" << std::setw(12) << "executions"
      << "failing\n";
  std::size_t file_no = 0, failing = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const EnumerateRow& r = rows[i];
    out << std::setw(6) << i << std::setw(26) << r.pattern << std::setw(10) << r.states
        << std::setw(11) << r.histories.size() << std::setw(12) << r.executions << r.failing
        << "\n";
    failing += r.failing;
    if (dir.empty()) continue;
    for (const History& h : r.histories) {
      std::ostringstream name;
      name << dir << "/h" << std::setw(5) << std::setfill('0') << file_no++ << ".json";
      write_text_file(name.str(), emit_history(h, sem.name()));
    }
  }
  out << "executions failing an axiom: " << failing << "\n";
  return failing ? kExitInvariant : kExitMember;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"gscbench: global sequence consistency workbench"};
  app.require_subcommand(1);
  Flags f;
  auto common = [&f](CLI::App* c) {
    c->add_option("--semantics", f.semantics, "sequence or register (default: from file)");
  };

  std::string file, out1, out2;
  std::vector<std::string> execs, patterns;
  std::size_t ops = 2, objects = 2, sample = 0;

  auto* check = app.add_subcommand("check", "decide membership of a history");
  check->add_option("history", file, "history file")->required();
  check->add_option("--model", f.model, "gsc, gsp, tso, dual-tso, osc or lin");
  check->add_flag("--apply-preset", f.apply_preset, "rewrite fences to the model's preset");
  check->add_option("--max-events", f.max_events, "refuse larger histories");
  check->add_option("--path", f.path, "auto, fast or slow search");
  check->add_option("--witness-out", out1, "write the witness execution here");
  common(check);

  auto* sim = app.add_subcommand("simulate", "replay a schedule on the protocol");
  sim->add_option("schedule", file, "schedule file")->required();
  sim->add_option("--history-out", out1, "write the history here");
  sim->add_option("--execution-out", out2, "write the execution here");
  common(sim);

  auto* syn = app.add_subcommand("synthesize", "schedule that realizes an execution");
  syn->add_option("execution", file, "execution file")->required();
  syn->add_option("-o,--out", out1, "write the schedule here (default stdout)");
  common(syn);

  auto* comp = app.add_subcommand("compose", "global execution from per-object ones");
  comp->add_option("history", file, "global history file")->required();
  comp->add_option("executions", execs, "per-object execution files");
  comp->add_option("-o,--out", out1, "write the composed execution here (default stdout)");
  common(comp);

  auto* eq = app.add_subcommand("equiv", "all-push and all-pull forms of a plain execution");
  eq->add_option("execution", file, "execution file")->required();
  eq->add_option("--push-out", out1, "write the all-push execution here");
  eq->add_option("--pull-out", out2, "write the all-pull execution here");
  common(eq);

  auto* en = app.add_subcommand("enumerate", "enumerate protocol histories of small programs");
  en->add_option("--ops", ops, "ops per client");
  en->add_option("--objects", objects, "1 or 2 objects");
  en->add_option("--fences", patterns, "fence patterns to include");
  en->add_option("--max-schedules", f.max_schedules, "state cap per program (0: none)");
  en->add_option("--sample", sample, "enumerate a random subset of programs");
  en->add_option("--seed", f.seed, "seed for --sample");
  en->add_option("--jobs", f.jobs, "worker threads");
  en->add_option("--out", out1, "directory for history files");
  common(en);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInputError;
  }
  try {
    if (check->parsed()) return cmd_check(f, file, out1, out);
    if (sim->parsed()) return cmd_simulate(f, file, out1, out2, out);
    if (syn->parsed()) return cmd_synthesize(f, file, out1, out);
    if (comp->parsed()) return cmd_compose(f, file, execs, out1, out);
    if (eq->parsed()) return cmd_equiv(f, file, out1, out2, out);
    if (en->parsed()) return cmd_enumerate(f, ops, objects, patterns, sample, out1, out);
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const ModelError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace gsc
