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

#include "gsc/fixtures.hpp"

#include "gsc/error.hpp"
#include "gsc/semantics.hpp"

namespace gsc {

namespace {

Event ev(std::string id, std::string client, std::string obj, Op op, Value rval = unit(),
         Fences f = {}) {
  return Event{std::move(id), std::move(client), std::move(obj), op, std::move(rval), f};
}

Relation pairs_by_id(const History& h, std::initializer_list<std::pair<const char*, const char*>> ps) {
  Relation r(h.size());
  for (auto [a, b] : ps) r.insert(h.index_of(a), h.index_of(b));
  return r;
}

TotalOrder order_by_id(const History& h, std::initializer_list<const char*> ids) {
  std::vector<EventIdx> seq;
  for (const char* id : ids) seq.push_back(h.index_of(id));
  return TotalOrder(std::move(seq));
}

const Fences kPush{true, false};
const Fences kPull{false, true};

}  // namespace

History set_fences(const History& h, const std::map<std::string, Fences>& fences) {
  History out = h;
  for (const auto& [id, f] : fences) out.events[out.index_of(id)].fences = f;
  return out;
}

// e1 and f1 overlap; e2 follows both; f2 starts after e2 finishes.
History fig3a() {
  return make_history(
      {ev("e1", "A", "x", Op::append(1)), ev("e2", "A", "x", Op::read(), seq({1, 2})),
       ev("f1", "B", "x", Op::append(2)), ev("f2", "B", "x", Op::read(), seq({2}))},
      {{0, 2}, {4, 5}, {1, 3}, {6, 7}});
}

History fig3b() {
  return make_history({ev("e1", "A", "x", Op::append(1)), ev("f1", "B", "x", Op::append(2)),
                       ev("f2", "B", "x", Op::read(), seq({2, 1}))},
                      {{0, 1}, {2, 3}, {4, 5}});
}

History fig3c() {
  return make_history(
      {ev("e1", "A", "x", Op::append(1)), ev("e2", "A", "y", Op::read(), seq({})),
       ev("f1", "B", "y", Op::append(1)), ev("f2", "B", "x", Op::read(), seq({}))},
      {{0, 1}, {2, 3}, {0, 1}, {2, 3}});
}

History fig3d() {
  return make_history(
      {ev("a", "C1", "x", Op::append(1)), ev("b", "C2", "y", Op::append(1)),
       ev("c1", "C3", "x", Op::read(), seq({1})), ev("c2", "C3", "y", Op::read(), seq({})),
       ev("d1", "C4", "y", Op::read(), seq({1})), ev("d2", "C4", "x", Op::read(), seq({}))},
      {{0, 1}, {0, 1}, {2, 3}, {4, 5}, {2, 3}, {4, 5}});
}

// r sees e on x and then pulls on y at g; f on y stays invisible to g.
History fig5() {
  return make_history(
      {ev("e", "C1", "x", Op::append(1)), ev("r", "C2", "x", Op::read(), seq({1}), kPush),
       ev("g", "C2", "y", Op::read(), seq({}), kPull), ev("f", "C3", "y", Op::append(2))},
      {{0, 1}, {2, 3}, {4, 5}, {0, 6}});
}

Schedule trace_a1() {
  return {Token::call("A", "x", Op::append(1), {}, "e1"),
          Token::body("A"),
          Token::call("B", "x", Op::append(2), {}, "f1"),
          Token::body("B"),
          Token::ret("A"),
          Token::ret("B"),
          Token::push("A"),
          Token::push("B"),
          Token::pull("A"),
          Token::pull("A"),
          Token::call("A", "x", Op::read(), {}, "e2"),
          Token::body("A"),
          Token::ret("A"),
          Token::call("B", "x", Op::read(), {}, "f2"),
          Token::body("B"),
          Token::ret("B"),
          Token::pull("B"),
          Token::pull("B")};
}

Schedule trace_a2() {
  return {Token::call("A", "x", Op::append(1), {}, "e1"),
          Token::body("A"),
          Token::ret("A"),
          Token::call("B", "x", Op::append(2), {}, "f1"),
          Token::body("B"),
          Token::ret("B"),
          Token::push("B"),
          Token::push("A"),
          Token::pull("B"),
          Token::pull("B"),
          Token::pull("A"),
          Token::pull("A"),
          Token::call("B", "x", Op::read(), {}, "f2"),
          Token::body("B"),
          Token::ret("B")};
}

Schedule trace_a3() {
  return {Token::call("A", "x", Op::append(1), {}, "e1"),
          Token::call("B", "y", Op::append(1), {}, "f1"),
          Token::body("A"),
          Token::body("B"),
          Token::ret("A"),
          Token::ret("B"),
          Token::call("A", "y", Op::read(), {}, "e2"),
          Token::call("B", "x", Op::read(), {}, "f2"),
          Token::body("A"),
          Token::body("B"),
          Token::ret("A"),
          Token::ret("B"),
          Token::push("A"),
          Token::push("B"),
          Token::pull("A"),
          Token::pull("A"),
          Token::pull("B"),
          Token::pull("B")};
}

std::vector<std::string> fixture_names() { return {"fig3a", "fig3b", "fig3c", "fig3d", "fig5"}; }

Fixture fixture(std::string_view name) {
  Fixture fx;
  fx.name = std::string(name);
  const auto& seqsem = sequence_semantics();
  auto row = [&](std::string label, std::string checker, History h, bool member) {
    fx.verdicts.push_back({std::move(label), std::move(checker), std::move(h), member});
  };
  if (name == "fig3a") {
    History h = fig3a();
    fx.history = h;
    fx.witness = AbstractExecution{
        h, h.so() | pairs_by_id(h, {{"f1", "e2"}}), order_by_id(h, {"e1", "f1", "e2", "f2"})};
    fx.schedule = trace_a1();
    row("no fences", "gsc", h, true);
    row("pull on f2", "gsc", set_fences(h, {{"f2", kPull}}), false);
    row("all push", "gsc", mk_fence_transform(h, FenceKind::Push), true);
    row("all pull", "gsc", mk_fence_transform(h, FenceKind::Pull), false);
    row("full fences", "lin", apply_fence_preset(h, Model::Lin, seqsem), false);
    row("osc fences", "osc", apply_fence_preset(h, Model::Osc, seqsem), false);
  } else if (name == "fig3b") {
    History h = fig3b();
    fx.history = h;
    fx.witness = AbstractExecution{h, h.so() | pairs_by_id(h, {{"e1", "f2"}}),
                                   order_by_id(h, {"f1", "e1", "f2"})};
    fx.schedule = trace_a2();
    row("no fences", "gsc", h, true);
    row("push on e1", "gsc", set_fences(h, {{"e1", kPush}}), false);
    row("all pull", "gsc", mk_fence_transform(h, FenceKind::Pull), true);
    row("all push", "gsc", mk_fence_transform(h, FenceKind::Push), false);
    row("full fences", "lin", apply_fence_preset(h, Model::Lin, seqsem), false);
  } else if (name == "fig3c") {
    History h = fig3c();
    fx.history = h;
    fx.witness = AbstractExecution{h, h.so(), order_by_id(h, {"e1", "f1", "e2", "f2"})};
    fx.schedule = trace_a3();
    row("no fences", "gsc", h, true);
    row("push appends, pull reads", "gsc",
        set_fences(h, {{"e1", kPush}, {"f1", kPush}, {"e2", kPull}, {"f2", kPull}}), false);
    row("full fences", "lin", apply_fence_preset(h, Model::Lin, seqsem), false);
  } else if (name == "fig3d") {
    History h = fig3d();
    fx.history = h;
    row("no fences", "gsc", h, false);
    row("projection to x", "gsc", project(h, "x"), true);
    row("projection to y", "gsc", project(h, "y"), true);
    row("upper reads push, lower reads pull", "gsc",
        set_fences(h, {{"c1", kPush}, {"d1", kPush}, {"c2", kPull}, {"d2", kPull}}), false);
  } else if (name == "fig5") {
    History h = fig5();
    fx.history = h;
    History hx = project(h, "x");
    History hy = project(h, "y");
    fx.per_object["x"] =
        AbstractExecution{hx, hx.so() | pairs_by_id(hx, {{"e", "r"}}), order_by_id(hx, {"e", "r"})};
    fx.per_object["y"] = AbstractExecution{hy, hy.so(), order_by_id(hy, {"f", "g"})};
    row("well-fenced", "gsc", h, true);
  } else {
    throw ModelError("unknown fixture '" + std::string(name) + "'");
  }
  return fx;
}

}  // namespace gsc
