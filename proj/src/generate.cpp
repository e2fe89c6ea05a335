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

#include "gsc/generate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gsc/error.hpp"

namespace gsc {

namespace {

bool coin(double p, Rng& rng) { return std::bernoulli_distribution(p)(rng); }

std::size_t pick(std::size_t n, Rng& rng) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

std::string client_name(std::size_t i) { return std::string(1, static_cast<char>('A' + i)); }

/// All orderings of all subsets of `vals`.
std::vector<std::vector<std::int64_t>> arrangements(std::vector<std::int64_t> vals) {
  std::vector<std::vector<std::int64_t>> out;
  const std::size_t n = vals.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::int64_t> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(vals[i]);
    std::sort(sub.begin(), sub.end());
    do out.push_back(sub);
    while (std::next_permutation(sub.begin(), sub.end()));
  }
  return out;
}

std::vector<std::int64_t> appended_values(const History& h, const std::string& obj) {
  std::vector<std::int64_t> vals;
  for (const Event& e : h.events)
    if (e.obj == obj && e.op.kind == OpKind::Append) vals.push_back(*e.op.value);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

}  // namespace

std::vector<Interval> random_intervals(std::size_t n, Rng& rng) {
  std::vector<Interval> iv(n);
  if (n == 0) return iv;
  std::uniform_int_distribution<int> d(0, static_cast<int>(2 * n) - 1);
  for (auto& i : iv) {
    int a = d(rng), b = d(rng);
    while (a == b) b = d(rng);
    if (a > b) std::swap(a, b);
    i = {static_cast<double>(a), static_cast<double>(b)};
  }
  return iv;
}

Relation random_relation(std::size_t n, double density, Rng& rng) {
  Relation r(n);
  for (EventIdx a = 0; a < n; ++a)
    for (EventIdx b = 0; b < n; ++b)
      if (coin(density, rng)) r.insert(a, b);
  return r;
}

Program random_program(const RandomProgramOptions& opts, Rng& rng) {
  Program p;
  std::map<std::string, std::int64_t> next_value;
  for (std::size_t c = 0; c < opts.clients; ++c) {
    auto& ops = p[client_name(c)];
    const std::size_t k =
        opts.min_ops + pick(opts.max_ops - opts.min_ops + 1, rng);
    for (std::size_t i = 0; i < k; ++i) {
      const std::string& obj = opts.objects[pick(opts.objects.size(), rng)];
      const Op op = coin(opts.p_append, rng) ? Op::append(++next_value[obj]) : Op::read();
      ops.push_back({obj, op, Fences{coin(opts.p_push, rng), coin(opts.p_pull, rng)}});
    }
  }
  return p;
}

World random_run(const Program& p, const ObjectSemantics& sem, Rng& rng) {
  World w;
  for (const auto& [name, ops] : p) w.clients[name];
  while (true) {
    std::vector<Token> tokens;
    for (const auto& [name, ops] : p) {
      const ClientState& c = w.clients.at(name);
      if (!c.in_progress && c.counter < ops.size()) {
        const ProgramOp& po = ops[c.counter];
        tokens.push_back(Token::call(name, po.obj, po.op, po.fences));
      }
      if (c.in_progress) tokens.push_back(c.body_done ? Token::ret(name) : Token::body(name));
      if (w.push_enabled(name)) tokens.push_back(Token::push(name));
      if (w.pull_enabled(name)) tokens.push_back(Token::pull(name));
    }
    const bool work_left = std::any_of(tokens.begin(), tokens.end(), [](const Token& t) {
      return t.kind == TokenKind::Call || t.kind == TokenKind::Body || t.kind == TokenKind::Ret;
    });
    if (!work_left) break;
    step(w, tokens[pick(tokens.size(), rng)], sem);
  }
  for (const Token& t : flush_suffix(w)) step(w, t, sem);
  return w;
}

std::vector<History> rval_variants(const History& h) {
  std::vector<History> out;
  for (EventIdx e = 0; e < h.size(); ++e) {
    if (h[e].op.kind != OpKind::Read) continue;
    for (auto& xs : arrangements(appended_values(h, h[e].obj))) {
      Value v = seq(xs);
      if (v == h[e].rval) continue;
      History g = h;
      g.events[e].rval = std::move(v);
      out.push_back(std::move(g));
    }
  }
  return out;
}

History mutate_rvals(const History& h, double p_mutate, Rng& rng) {
  if (!coin(p_mutate, rng)) return h;
  std::vector<EventIdx> reads;
  for (EventIdx e = 0; e < h.size(); ++e)
    if (h[e].op.kind == OpKind::Read) reads.push_back(e);
  if (reads.empty()) return h;
  const EventIdx e = reads[pick(reads.size(), rng)];
  const auto cands = arrangements(appended_values(h, h[e].obj));
  History g = h;
  g.events[e].rval = seq(cands[pick(cands.size(), rng)]);
  return g;
}

PerObjectWitnesses random_well_fenced_instance(const RandomProgramOptions& opts,
                                               const ObjectSemantics& sem, Rng& rng) {
  Program p = random_program(opts, rng);
  for (auto& [name, ops] : p)
    for (std::size_t i = 0; i + 1 < ops.size(); ++i)
      if (ops[i].obj != ops[i + 1].obj) {
        ops[i].fences.push = true;
        ops[i + 1].fences.pull = true;
      }

  std::map<std::string, World> worlds;
  for (const std::string& x : opts.objects) worlds[x];
  struct Slot {
    std::size_t next = 0;
    bool open = false;
    bool body = false;
  };
  std::map<std::string, Slot> slots;
  std::vector<Event> events;
  std::vector<Interval> iv;
  std::map<std::string, std::size_t> open_event;
  std::size_t t = 0;
  auto world_event = [&](const std::string& x, const std::string& id) -> const Event& {
    for (const SimEvent& se : worlds[x].events)
      if (se.event.id == id) return se.event;
    throw InvariantViolation("lost event " + id);
  };
  while (true) {
    struct Choice {
      TokenKind kind;
      std::string client;
      std::string obj;
    };
    std::vector<Choice> cs;
    for (const auto& [name, ops] : p) {
      const Slot& s = slots[name];
      if (!s.open && s.next < ops.size()) cs.push_back({TokenKind::Call, name, ops[s.next].obj});
      if (s.open) cs.push_back({s.body ? TokenKind::Ret : TokenKind::Body, name,
                                ops[s.next - 1].obj});
      for (auto& [x, w] : worlds) {
        if (w.push_enabled(name)) cs.push_back({TokenKind::Push, name, x});
        if (w.pull_enabled(name)) cs.push_back({TokenKind::Pull, name, x});
      }
    }
    const bool work_left = std::any_of(cs.begin(), cs.end(), [](const Choice& c) {
      return c.kind != TokenKind::Push && c.kind != TokenKind::Pull;
    });
    if (!work_left) break;
    const Choice c = cs[pick(cs.size(), rng)];
    Slot& s = slots[c.client];
    World& w = worlds[c.obj];
    switch (c.kind) {
      case TokenKind::Call: {
        const ProgramOp& po = p[c.client][s.next];
        const std::string id = c.client + std::to_string(++s.next);
        step(w, Token::call(c.client, po.obj, po.op, po.fences, id), sem);
        s.open = true;
        s.body = false;
        open_event[c.client] = events.size();
        events.push_back(Event{id, c.client, po.obj, po.op, unit(), po.fences});
        iv.push_back({static_cast<double>(t), 0});
        break;
      }
      case TokenKind::Body:
        step(w, Token::body(c.client), sem);
        s.body = true;
        break;
      case TokenKind::Ret: {
        step(w, Token::ret(c.client), sem);
        s.open = false;
        const std::size_t e = open_event[c.client];
        iv[e].end = static_cast<double>(t);
        events[e].rval = world_event(c.obj, events[e].id).rval;
        break;
      }
      case TokenKind::Push:
        step(w, Token::push(c.client), sem);
        break;
      case TokenKind::Pull:
        step(w, Token::pull(c.client), sem);
        break;
    }
    ++t;
  }
  PerObjectWitnesses out;
  out.history = make_history(std::move(events), iv);
  for (auto& [x, w] : worlds) {
    for (const Token& tok : flush_suffix(w)) step(w, tok, sem);
    if (!w.events.empty()) out.per_object[x] = extract_execution(w);
  }
  GSC_ASSERT(is_well_fenced(out.history).ok, "generated history is not well-fenced");
  return out;
}

std::string_view fence_pattern_name(FencePattern p) {
  switch (p) {
    case FencePattern::None: return "none";
    case FencePattern::AllPush: return "all-push";
    case FencePattern::AllPull: return "all-pull";
    case FencePattern::AllBoth: return "all-both";
    case FencePattern::AppendsPushReadsPull: return "appends-push-reads-pull";
    case FencePattern::AppendsPullReadsPush: return "appends-pull-reads-push";
    case FencePattern::FirstPushSecondPull: return "first-push-second-pull";
    case FencePattern::Osc: return "osc";
  }
  return "?";
}

std::vector<FencePattern> all_fence_patterns() {
  return {FencePattern::None,
          FencePattern::AllPush,
          FencePattern::AllPull,
          FencePattern::AllBoth,
          FencePattern::AppendsPushReadsPull,
          FencePattern::AppendsPullReadsPush,
          FencePattern::FirstPushSecondPull,
          FencePattern::Osc};
}

Program with_pattern(const Program& p, FencePattern f) {
  Program out = p;
  bool first = true;
  for (auto& [name, ops] : out) {
    for (ProgramOp& po : ops) {
      const bool upd = po.op.kind != OpKind::Read;
      switch (f) {
        case FencePattern::None: po.fences = {}; break;
        case FencePattern::AllPush: po.fences = {true, false}; break;
        case FencePattern::AllPull: po.fences = {false, true}; break;
        case FencePattern::AllBoth: po.fences = Fences::both(); break;
        case FencePattern::AppendsPushReadsPull: po.fences = {upd, !upd}; break;
        case FencePattern::AppendsPullReadsPush: po.fences = {!upd, upd}; break;
        case FencePattern::FirstPushSecondPull: po.fences = {first, !first}; break;
        case FencePattern::Osc: po.fences = {true, upd}; break;
      }
    }
    first = false;
  }
  return out;
}

namespace {

/// Slot kind: object index times two, plus one for reads.
using Shape = std::vector<std::vector<int>>;

Program shape_program(const Shape& shape, const std::vector<std::string>& objects) {
  Program p;
  std::map<std::string, std::int64_t> next_value;
  for (std::size_t c = 0; c < shape.size(); ++c) {
    auto& ops = p[client_name(c)];
    for (int s : shape[c]) {
      const std::string& obj = objects[static_cast<std::size_t>(s / 2)];
      ops.push_back({obj, s % 2 ? Op::read() : Op::append(++next_value[obj]), {}});
    }
  }
  return p;
}

bool values_fit(const Shape& shape, std::size_t n_objects) {
  std::vector<int> appends(n_objects, 0);
  for (const auto& ops : shape)
    for (int s : ops)
      if (s % 2 == 0 && ++appends[static_cast<std::size_t>(s / 2)] > 2) return false;
  return true;
}

std::vector<Shape> all_shapes(std::size_t na, std::size_t nb, std::size_t n_objects) {
  const int kinds = static_cast<int>(2 * n_objects);
  std::vector<Shape> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < na + nb; ++i) total *= static_cast<std::size_t>(kinds);
  for (std::size_t code = 0; code < total; ++code) {
    Shape s(2);
    std::size_t rest = code;
    for (std::size_t i = 0; i < na + nb; ++i) {
      s[i < na ? 0 : 1].push_back(static_cast<int>(rest % static_cast<std::size_t>(kinds)));
      rest /= static_cast<std::size_t>(kinds);
    }
    if (values_fit(s, n_objects)) out.push_back(std::move(s));
  }
  return out;
}

/// Least image of `s` under client swaps and object permutations.
Shape canonical(const Shape& s, std::size_t n_objects) {
  std::vector<std::size_t> perm(n_objects);
  for (std::size_t i = 0; i < n_objects; ++i) perm[i] = i;
  Shape best = s;
  do {
    Shape t = s;
    for (auto& ops : t)
      for (int& k : ops) k = static_cast<int>(2 * perm[static_cast<std::size_t>(k / 2)]) + k % 2;
    best = std::min(best, t);
    if (t[0].size() == t[1].size()) best = std::min(best, Shape{t[1], t[0]});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<Program> program_shapes(std::size_t ops_a, std::size_t ops_b,
                                    const std::vector<std::string>& objects) {
  std::vector<Program> out;
  for (const Shape& s : all_shapes(ops_a, ops_b, objects.size()))
    out.push_back(shape_program(s, objects));
  return out;
}

std::vector<Program> distinct_program_shapes(std::size_t ops_a, std::size_t ops_b,
                                             const std::vector<std::string>& objects) {
  std::set<Shape> seen;
  std::vector<Program> out;
  for (const Shape& s : all_shapes(ops_a, ops_b, objects.size()))
    if (seen.insert(canonical(s, objects.size())).second) out.push_back(shape_program(s, objects));
  return out;
}

std::vector<Program> corpus_programs(const CorpusOptions& opts) {
  std::set<Shape> seen;
  std::vector<Program> out;
  const std::size_t k = opts.ops_per_client;
  for (const Shape& s : all_shapes(k, k, opts.objects.size())) {
    if (!seen.insert(canonical(s, opts.objects.size())).second) continue;
    const Program base = shape_program(s, opts.objects);
    for (FencePattern f : opts.fences) out.push_back(with_pattern(base, f));
  }
  return out;
}

}  // namespace gsc
