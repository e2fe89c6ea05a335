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

#include "gsc/axioms.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "gsc/error.hpp"

namespace gsc {

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::RetVal: return "RETVAL";
    case Axiom::Ryw: return "RYW";
    case Axiom::MonotonicView: return "MONOTONICVIEW";
    case Axiom::ObservedVis: return "OBSERVEDVIS";
    case Axiom::PushedVis: return "PUSHEDVIS";
    case Axiom::ObservedAr: return "OBSERVEDAR";
    case Axiom::PushedAr: return "PUSHEDAR";
    case Axiom::Eventual: return "EVENTUAL";
  }
  return "?";
}

std::string_view vis_rule_name(VisRule r) {
  switch (r) {
    case VisRule::None: return "none";
    case VisRule::Seed: return "seed";
    case VisRule::Ryw: return "RYW";
    case VisRule::MonotonicView: return "MONOTONICVIEW";
    case VisRule::ObservedVis: return "OBSERVEDVIS";
    case VisRule::PushedVis: return "PUSHEDVIS";
  }
  return "?";
}

bool AxiomReport::all_pass() const {
  if (!structural.empty() || verdicts.empty()) return false;
  return std::all_of(verdicts.begin(), verdicts.end(), [](const AxiomVerdict& v) { return v.ok; });
}

const AxiomVerdict& AxiomReport::at(Axiom a) const {
  for (const auto& v : verdicts)
    if (v.axiom == a) return v;
  throw ModelError("axiom " + std::string(axiom_name(a)) + " was not evaluated");
}

std::string AxiomReport::summary(const History& h) const {
  std::ostringstream os;
  for (const auto& s : structural) os << "structural: " << s << "\n";
  for (const auto& v : verdicts) {
    os << axiom_name(v.axiom) << ": " << (v.ok ? (v.vacuous ? "vacuous" : "ok") : "FAIL");
    if (!v.ok) {
      os << " (";
      for (std::size_t i = 0; i < v.counterexample.size(); ++i)
        os << (i ? "," : "") << h[v.counterexample[i]].id;
      os << ")";
      if (!v.detail.empty()) os << " " << v.detail;
    }
    os << "\n";
  }
  return os.str();
}

std::vector<Op> ctxt(const AbstractExecution& a, EventIdx e) {
  const History& h = a.history;
  std::vector<EventIdx> preds;
  for (EventIdx f = 0; f < h.size(); ++f)
    if (f != e && a.vis.contains(f, e) && h[f].obj == h[e].obj) preds.push_back(f);
  std::sort(preds.begin(), preds.end(),
            [&](EventIdx x, EventIdx y) { return a.ar.position(x) < a.ar.position(y); });
  std::vector<Op> ops;
  for (EventIdx f : preds) ops.push_back(h[f].op);
  return ops;
}

namespace {

AxiomVerdict inclusion(Axiom ax, const std::vector<const Relation*>& chain, const Relation& rhs,
                       const History& h) {
  AxiomVerdict v{ax};
  Relation lhs = *chain.front();
  for (std::size_t i = 1; i < chain.size(); ++i) lhs = compose(lhs, *chain[i]);
  for (auto [a, b] : (lhs - rhs).pairs()) {
    v.ok = false;
    v.counterexample = find_chain(std::span<const Relation* const>(chain), a, b);
    v.detail = "missing (" + h[a].id + "," + h[b].id + ")";
    break;
  }
  return v;
}

}  // namespace

AxiomReport check_axioms(const AbstractExecution& a, const ObjectSemantics& sem) {
  AxiomReport rep;
  const History& h = a.history;
  rep.structural = validate_history(h);
  for (auto& s : validate_execution(a)) rep.structural.push_back(std::move(s));
  if (!rep.structural.empty()) return rep;

  const std::size_t n = h.size();
  const Relation so = h.so();
  const Relation ar = a.ar.to_relation();
  const Relation id = Relation::identity(n);
  const Relation arq = ar | id;
  const Relation visns = a.vis - so;
  const EventSet all = EventSet::all(n);
  const EventSet push = h.epush(), pull = h.epull();
  const Relation rtpull_q = h.rt.restrict(all, pull) | id;
  const Relation pushpull = (h.rt | id).restrict(push, pull);
  const Relation rtbar = h.rt.restrict(push, all);

  AxiomVerdict retval{Axiom::RetVal};
  for (EventIdx e = 0; e < n && retval.ok; ++e) {
    Value got = sem.eval(ctxt(a, e), h[e].op);
    if (got != h[e].rval) {
      retval.ok = false;
      retval.counterexample = {e};
      retval.detail = h[e].id + " returns " + to_string(h[e].rval) + " but its context evaluates to " +
                      to_string(got);
    }
  }
  rep.verdicts.push_back(retval);
  rep.verdicts.push_back(inclusion(Axiom::Ryw, {&so}, a.vis, h));
  rep.verdicts.push_back(inclusion(Axiom::MonotonicView, {&a.vis, &so}, a.vis, h));
  rep.verdicts.push_back(inclusion(Axiom::ObservedVis, {&arq, &visns, &rtpull_q}, a.vis, h));
  rep.verdicts.push_back(inclusion(Axiom::PushedVis, {&arq, &pushpull}, a.vis | id, h));
  rep.verdicts.push_back(inclusion(Axiom::ObservedAr, {&visns, &h.rt}, ar, h));
  rep.verdicts.push_back(inclusion(Axiom::PushedAr, {&rtbar}, ar, h));
  AxiomVerdict eventual{Axiom::Eventual};
  eventual.vacuous = true;
  rep.verdicts.push_back(eventual);
  return rep;
}

ForcedVisibility forced_visibility(const History& h, EventIdx e, const ObjectSemantics& sem) {
  if (sem.name() != "sequence" || !sem.rval_determines_visibility(h))
    throw ModelError("return values do not determine visibility for this history");
  ForcedVisibility fv;
  const Event& ev = h[e];
  if (ev.op.kind == OpKind::Append) {
    if (!std::holds_alternative<std::monostate>(ev.rval)) {
      fv.satisfiable = false;
      fv.reason = ev.id + ": append must return unit";
    }
    return fv;
  }
  const auto* xs = std::get_if<std::vector<std::int64_t>>(&ev.rval);
  if (!xs) {
    fv.satisfiable = false;
    fv.reason = ev.id + ": read must return a sequence";
    return fv;
  }
  for (std::int64_t v : *xs) {
    std::optional<EventIdx> src;
    for (EventIdx f = 0; f < h.size(); ++f)
      if (f != e && h[f].obj == ev.obj && h[f].op == Op::append(v)) src = f;
    if (!src) {
      fv.satisfiable = false;
      fv.reason = ev.id + " returns " + std::to_string(v) + " but no " + ev.obj + ".append(" +
                  std::to_string(v) + ") exists";
      return fv;
    }
    if (std::find(fv.visible.begin(), fv.visible.end(), *src) != fv.visible.end()) {
      fv.satisfiable = false;
      fv.reason = ev.id + " returns " + std::to_string(v) + " twice";
      return fv;
    }
    if (!fv.visible.empty()) fv.order.emplace_back(fv.visible.back(), *src);
    fv.visible.push_back(*src);
  }
  // RYW: earlier appends of the same session must appear.
  for (const auto& [client, idxs] : h.sessions) {
    if (client != ev.client) continue;
    for (EventIdx f : idxs) {
      if (f == e) break;
      if (h[f].obj == ev.obj && h[f].op.kind == OpKind::Append &&
          std::find(fv.visible.begin(), fv.visible.end(), f) == fv.visible.end()) {
        fv.satisfiable = false;
        fv.reason = ev.id + " misses its own session's " + h[f].id + " (RYW)";
        return fv;
      }
    }
  }
  return fv;
}

std::string MinimalVis::explain(const History& h, EventIdx a, EventIdx b) const {
  const std::size_t n = vis.domain_size();
  std::string s = h[a].id + "→" + h[b].id;
  for (std::size_t depth = 0; depth <= n * n; ++depth) {
    VisRule r = rule_of(a, b);
    auto p = parent[a * n + b];
    if (r == VisRule::Seed) return s + " (return value)";
    if (r == VisRule::Ryw) return s + " (session order)";
    if (r == VisRule::PushedVis) return s + " (PUSHEDVIS)";
    if (r == VisRule::None || !p) return s;
    std::tie(a, b) = *p;
    s += " by " + std::string(vis_rule_name(r)) + " from " + h[a].id + "→" + h[b].id;
  }
  return s;
}

MinimalVis minimal_vis(const History& h, const TotalOrder& ar, const Relation& seed) {
  const std::size_t n = h.size();
  for (auto [a, b] : seed.pairs())
    if (a == b || !ar.before(a, b)) throw ModelError("seed is not contained in ar");
  MinimalVis m;
  m.vis = Relation(n);
  m.rule.assign(n * n, VisRule::None);
  m.parent.assign(n * n, std::nullopt);
  auto add = [&](EventIdx a, EventIdx b, VisRule r, std::optional<EventPair> p) {
    if (m.vis.contains(a, b)) return false;
    m.vis.insert(a, b);
    m.rule[a * n + b] = r;
    m.parent[a * n + b] = p;
    return true;
  };
  const Relation so = h.so();
  for (auto [a, b] : seed.pairs()) add(a, b, VisRule::Seed, std::nullopt);
  for (auto [a, b] : so.pairs()) add(a, b, VisRule::Ryw, std::nullopt);

  const EventSet push = h.epush(), pull = h.epull();
  auto ar_q = [&](EventIdx a, EventIdx b) { return a == b || ar.before(a, b); };
  for (EventIdx b : push.members())
    for (EventIdx d : pull.members())
      if (b == d || h.rt.contains(b, d))
        for (EventIdx a = 0; a < n; ++a)
          if (a != d && ar_q(a, b)) add(a, d, VisRule::PushedVis, std::nullopt);

  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : m.vis.pairs()) {
      for (EventIdx c : so.successors(b).members())
        changed |= add(a, c, VisRule::MonotonicView, EventPair{a, b});
      if (so.contains(a, b)) continue;
      // (a, b) in vis \ so: every x ar? a reaches b and its pull rt-successors.
      for (EventIdx x = 0; x < n; ++x) {
        if (!ar_q(x, a)) continue;
        changed |= add(x, b, VisRule::ObservedVis, EventPair{a, b});
        for (EventIdx d : h.rt.successors(b).members())
          if (pull.contains(d)) changed |= add(x, d, VisRule::ObservedVis, EventPair{a, b});
      }
    }
  }
  for (auto [a, b] : m.vis.pairs()) {
    if (a == b || !ar.before(a, b)) {
      m.conflict = true;
      m.escape = EventPair{a, b};
      break;
    }
  }
  return m;
}

namespace {

std::string ar_text(const History& h, const TotalOrder& ar) {
  std::string s = "[";
  for (std::size_t i = 0; i < ar.size(); ++i) s += (i ? " " : "") + h[ar.sequence()[i]].id;
  return s + "]";
}

bool retval_holds(const AbstractExecution& a, const ObjectSemantics& sem, EventIdx* bad,
                  Value* got) {
  for (EventIdx e = 0; e < a.history.size(); ++e) {
    Value v = sem.eval(ctxt(a, e), a.history[e].op);
    if (v != a.history[e].rval) {
      *bad = e;
      *got = v;
      return false;
    }
  }
  return true;
}

/// Explains the first same-object visible event that breaks RETVAL at e.
std::string retval_story(const History& h, const MinimalVis& m, EventIdx e, const Value& got) {
  std::string s = "RETVAL fails at " + h[e].id + " (returns " + to_string(h[e].rval) +
                  ", context gives " + to_string(got) + ")";
  for (EventIdx f = 0; f < h.size(); ++f) {
    VisRule r = m.rule_of(f, e);
    if (f != e && m.vis.contains(f, e) && h[f].obj == h[e].obj && r != VisRule::Seed &&
        r != VisRule::Ryw && h[f].op.kind != OpKind::Read)
      return s + ": " + m.explain(h, f, e);
  }
  return s;
}

struct Search {
  const History& h;
  const ObjectSemantics& sem;
  const GscOptions& opts;
  MembershipResult res;
  Relation so;
  Relation rtbar;

  void note(const TotalOrder& ar, const std::string& why) {
    ++res.stats.pruned;
    if (res.refutation.size() < opts.narrative_limit)
      res.refutation.push_back("ar " + ar_text(h, ar) + ": " + why);
  }

  /// Checks the least vis above `seed` for the given ar. Returns true on acceptance.
  bool try_seed(const TotalOrder& ar, const Relation& seed, bool narrate) {
    MinimalVis m = minimal_vis(h, ar, seed);
    if (m.conflict) {
      if (narrate) {
        auto [a, b] = *m.escape;
        note(ar, m.explain(h, a, b) + " contradicts vis ⊆ ar");
      }
      return false;
    }
    AbstractExecution a{h, m.vis, ar};
    const Relation arr = ar.to_relation();
    const Relation bad = compose(m.vis - so, h.rt) - arr;
    if (!bad.empty()) {
      if (narrate) {
        auto [x, y] = bad.pairs().front();
        note(ar, "OBSERVEDAR requires " + h[x].id + " ar " + h[y].id);
      }
      return false;
    }
    EventIdx e = 0;
    Value got;
    if (!retval_holds(a, sem, &e, &got)) {
      if (narrate) note(ar, retval_story(h, m, e, got));
      return false;
    }
    if (!check_axioms(a, sem).all_pass()) return false;
    res.member = true;
    res.witness = std::move(a);
    return true;
  }

  void fast() {
    res.stats.fast_path = true;
    const std::size_t n = h.size();
    Relation seed(n);
    Relation decoded(n);
    for (EventIdx e = 0; e < n; ++e) {
      ForcedVisibility fv = forced_visibility(h, e, sem);
      if (!fv.satisfiable) {
        res.refutation.push_back(fv.reason + "; RETVAL cannot hold");
        return;
      }
      for (EventIdx f : fv.visible) seed.insert(f, e);
      for (auto [x, y] : fv.order) decoded.insert(x, y);
    }
    Relation p = so | rtbar | decoded | seed | compose(seed - so, h.rt);
    if (!is_acyclic(p)) {
      res.refutation.push_back(
          "arbitration constraints from session order, PUSHEDAR, read orders and OBSERVEDAR "
          "on forced visibility are cyclic");
      return;
    }
    for_each_linear_extension(p, [&](const std::vector<EventIdx>& seq) {
      ++res.stats.arbitrations;
      ++res.stats.seeds;
      return try_seed(TotalOrder(seq), seed, true);
    });
  }

  void slow() {
    const std::size_t n = h.size();
    Relation p = so | rtbar;
    for_each_linear_extension(p, [&](const std::vector<EventIdx>& seq) {
      ++res.stats.arbitrations;
      TotalOrder ar(seq);
      // Per event, every admissible same-object visible set.
      std::vector<std::vector<std::vector<EventIdx>>> cands(n);
      for (EventIdx e = 0; e < n; ++e) {
        std::vector<EventIdx> pool, forced;
        for (EventIdx f = 0; f < n; ++f) {
          if (f == e || h[f].obj != h[e].obj || !ar.before(f, e)) continue;
          if (sem.has_classify() && !sem.is_update(h[f].op)) continue;
          (so.contains(f, e) ? forced : pool).push_back(f);
        }
        std::sort(pool.begin(), pool.end(),
                  [&](EventIdx x, EventIdx y) { return ar.position(x) < ar.position(y); });
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool.size()); ++mask) {
          std::vector<EventIdx> s = forced;
          for (std::size_t i = 0; i < pool.size(); ++i)
            if (mask >> i & 1U) s.push_back(pool[i]);
          std::sort(s.begin(), s.end(),
                    [&](EventIdx x, EventIdx y) { return ar.position(x) < ar.position(y); });
          std::vector<Op> ctx;
          for (EventIdx f : s) ctx.push_back(h[f].op);
          if (sem.eval(ctx, h[e].op) == h[e].rval) cands[e].push_back(std::move(s));
        }
        if (cands[e].empty()) {
          note(ar, "no visible set for " + h[e].id + " satisfies RETVAL");
          return false;
        }
      }
      std::vector<std::size_t> pick(n, 0);
      while (true) {
        ++res.stats.seeds;
        Relation seed(n);
        for (EventIdx e = 0; e < n; ++e)
          for (EventIdx f : cands[e][pick[e]]) seed.insert(f, e);
        if (try_seed(ar, seed, false)) return true;
        std::size_t i = 0;
        while (i < n && ++pick[i] == cands[i].size()) pick[i++] = 0;
        if (i == n) break;
      }
      note(ar, "every RETVAL-consistent visibility choice violates a closure or order axiom");
      return false;
    });
  }
};

}  // namespace

MembershipResult is_gsc(const History& h, const ObjectSemantics& sem, const GscOptions& opts) {
  auto problems = validate_history(h);
  if (!problems.empty()) throw ModelError("invalid history: " + problems.front());
  if (h.size() > opts.max_events)
    throw ModelError("history has " + std::to_string(h.size()) + " events; the cap is " +
                     std::to_string(opts.max_events));
  for (const Event& e : h.events) sem.check_op(e.op);
  Search s{h, sem, opts, {}, h.so(), h.rt.restrict(h.epush(), EventSet::all(h.size()))};
  bool fast = false;
  switch (opts.path) {
    case SearchPath::Auto:
      fast = sem.name() == "sequence" && sem.rval_determines_visibility(h);
      break;
    case SearchPath::Fast:
      if (sem.name() != "sequence" || !sem.rval_determines_visibility(h))
        throw ModelError("fast path needs distinct append values per object");
      fast = true;
      break;
    case SearchPath::Slow:
      break;
  }
  if (fast)
    s.fast();
  else
    s.slow();
  if (s.res.member) {
    GSC_ASSERT(check_axioms(*s.res.witness, sem).all_pass(), "accepted witness fails an axiom");
    s.res.refutation.clear();
  } else if (s.res.refutation.empty()) {
    s.res.refutation.push_back("no arbitration extends the forced order constraints");
  }
  return std::move(s.res);
}

}  // namespace gsc
