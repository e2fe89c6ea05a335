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

#include "gsc/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace gsc {

using json = nlohmann::json;

namespace {

json number(double d) {
  if (std::floor(d) == d && std::abs(d) < 1e15) return static_cast<std::int64_t>(d);
  return d;
}

json op_json(const Op& op) {
  json j;
  j["kind"] = op.kind == OpKind::Append ? "append" : op.kind == OpKind::Write ? "write" : "read";
  if (op.value) j["value"] = *op.value;
  return j;
}

json value_json(const Value& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
  if (const auto* xs = std::get_if<std::vector<std::int64_t>>(&v)) return *xs;
  return nullptr;
}

json fences_json(Fences f) {
  json j = json::array();
  if (f.push) j.push_back("push");
  if (f.pull) j.push_back("pull");
  return j;
}

json id_pairs(const History& h, const Relation& r) {
  std::vector<std::pair<std::string, std::string>> ps;
  for (auto [a, b] : r.pairs()) ps.emplace_back(h[a].id, h[b].id);
  std::sort(ps.begin(), ps.end());
  json j = json::array();
  for (auto& [a, b] : ps) j.push_back({a, b});
  return j;
}

json history_json(const History& h, std::string_view semantics) {
  json j;
  j["objects"] = h.objects();
  j["semantics"] = std::string(semantics);
  json evs = json::array();
  for (const Event& e : h.events) {
    evs.push_back({{"id", e.id},
                   {"client", e.client},
                   {"obj", e.obj},
                   {"op", op_json(e.op)},
                   {"rval", value_json(e.rval)},
                   {"fences", fences_json(e.fences)}});
  }
  j["events"] = std::move(evs);
  json sessions = json::object();
  for (const auto& [c, idxs] : h.sessions) {
    json ids = json::array();
    for (EventIdx e : idxs) ids.push_back(h[e].id);
    sessions[c] = std::move(ids);
  }
  j["sessions"] = std::move(sessions);
  if (h.intervals) {
    json map = json::object();
    for (EventIdx e = 0; e < h.size(); ++e)
      map[h[e].id] = {number((*h.intervals)[e].start), number((*h.intervals)[e].end)};
    j["rt"] = {{"kind", "intervals"}, {"map", std::move(map)}};
  } else {
    j["rt"] = {{"kind", "pairs"}, {"pairs", id_pairs(h, h.rt)}};
  }
  return j;
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json parse_json(std::string_view text, std::string_view source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [l, c] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    // Drop nlohmann's own "[json.exception...] parse error at line L, column C: " prefix.
    std::string what = e.what();
    const auto col = what.find("column ");
    const auto pos = what.find(": ", col == std::string::npos ? 0 : col);
    throw ParseError(std::string(source) + ":" + std::to_string(l) + ":" + std::to_string(c) +
                     ": " + (pos == std::string::npos ? what : what.substr(pos + 2)));
  }
}

/// Typed access that reports the document path on failure.
struct Reader {
  std::string source;

  [[noreturn]] void fail(const std::string& path, const std::string& msg) const {
    throw ParseError(source + ": " + path + ": " + msg);
  }
  const json& at(const json& j, const std::string& path, const char* key) const {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path, std::string("missing '") + key + "'");
    return *it;
  }
  std::string str(const json& j, const std::string& path) const {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
  }
  std::int64_t integer(const json& j, const std::string& path) const {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<std::int64_t>();
  }
  double real(const json& j, const std::string& path) const {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
  }
  const json& array(const json& j, const std::string& path) const {
    if (!j.is_array()) fail(path, "expected an array");
    return j;
  }

  Op op(const json& j, const std::string& path) const {
    const std::string kind = str(at(j, path, "kind"), path + ".kind");
    const bool has = j.contains("value");
    if (kind == "read") {
      if (has) fail(path, "read takes no value");
      return Op::read();
    }
    if (kind != "append" && kind != "write") fail(path + ".kind", "unknown op '" + kind + "'");
    if (!has) fail(path, kind + " needs a value");
    const std::int64_t v = integer(j["value"], path + ".value");
    return kind == "append" ? Op::append(v) : Op::write(v);
  }

  Value value(const json& j, const std::string& path) const {
    if (j.is_null()) return unit();
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_array()) {
      std::vector<std::int64_t> xs;
      for (std::size_t i = 0; i < j.size(); ++i)
        xs.push_back(integer(j[i], path + "[" + std::to_string(i) + "]"));
      return xs;
    }
    fail(path, "expected null, an integer or an array of integers");
  }

  Fences fences(const json& j, const std::string& path) const {
    Fences f;
    array(j, path);
    for (std::size_t i = 0; i < j.size(); ++i) {
      const std::string s = str(j[i], path + "[" + std::to_string(i) + "]");
      if (s == "push") f.push = true;
      else if (s == "pull") f.pull = true;
      else fail(path, "unknown fence '" + s + "'");
    }
    return f;
  }

  EventPair pair(const History& h, const json& j, const std::string& path) const {
    if (!j.is_array() || j.size() != 2) fail(path, "expected an [id, id] pair");
    auto a = h.find(str(j[0], path + "[0]"));
    auto b = h.find(str(j[1], path + "[1]"));
    if (!a) fail(path + "[0]", "unknown event '" + j[0].get<std::string>() + "'");
    if (!b) fail(path + "[1]", "unknown event '" + j[1].get<std::string>() + "'");
    return {*a, *b};
  }

  HistoryDoc history(const json& j) const {
    HistoryDoc doc;
    if (j.contains("semantics")) doc.semantics = str(j["semantics"], "semantics");
    History& h = doc.history;
    const json& evs = array(at(j, "", "events"), "events");
    for (std::size_t i = 0; i < evs.size(); ++i) {
      const std::string p = "events[" + std::to_string(i) + "]";
      const json& e = evs[i];
      Event ev;
      ev.id = str(at(e, p, "id"), p + ".id");
      ev.client = str(at(e, p, "client"), p + ".client");
      ev.obj = str(at(e, p, "obj"), p + ".obj");
      ev.op = op(at(e, p, "op"), p + ".op");
      ev.rval = e.contains("rval") ? value(e["rval"], p + ".rval") : unit();
      ev.fences = e.contains("fences") ? fences(e["fences"], p + ".fences") : Fences{};
      if (h.find(ev.id)) fail(p + ".id", "duplicate event id '" + ev.id + "'");
      h.events.push_back(std::move(ev));
    }
    const std::size_t n = h.size();
    if (j.contains("sessions")) {
      const json& ss = j["sessions"];
      if (!ss.is_object()) fail("sessions", "expected an object");
      std::set<EventIdx> used;
      for (auto it = ss.begin(); it != ss.end(); ++it) {
        const std::string p = "sessions." + it.key();
        std::vector<EventIdx> idxs;
        array(it.value(), p);
        for (std::size_t i = 0; i < it.value().size(); ++i) {
          const std::string id = str(it.value()[i], p + "[" + std::to_string(i) + "]");
          auto e = h.find(id);
          if (!e) fail(p, "unknown event '" + id + "'");
          if (h[*e].client != it.key()) fail(p, "event '" + id + "' belongs to " + h[*e].client);
          if (!used.insert(*e).second) fail(p, "event '" + id + "' listed twice");
          idxs.push_back(*e);
        }
        h.sessions[it.key()] = std::move(idxs);
      }
      if (used.size() != n) fail("sessions", "every event must appear in exactly one session");
    } else {
      for (EventIdx e = 0; e < n; ++e) h.sessions[h[e].client].push_back(e);
    }
    const json& rt = at(j, "", "rt");
    const std::string kind = str(at(rt, "rt", "kind"), "rt.kind");
    if (kind == "intervals") {
      const json& map = at(rt, "rt", "map");
      if (!map.is_object()) fail("rt.map", "expected an object");
      std::vector<Interval> iv(n);
      for (EventIdx e = 0; e < n; ++e) {
        const std::string p = "rt.map." + h[e].id;
        auto it = map.find(h[e].id);
        if (it == map.end()) fail("rt.map", "no interval for '" + h[e].id + "'");
        if (!it->is_array() || it->size() != 2) fail(p, "expected [start, end]");
        iv[e] = {real((*it)[0], p + "[0]"), real((*it)[1], p + "[1]")};
      }
      for (auto it = map.begin(); it != map.end(); ++it)
        if (!h.find(it.key())) fail("rt.map", "unknown event '" + it.key() + "'");
      try {
        h.rt = rt_from_intervals(iv);
      } catch (const ModelError& e) {
        fail("rt.map", e.what());
      }
      h.intervals = std::move(iv);
    } else if (kind == "pairs") {
      const json& ps = array(at(rt, "rt", "pairs"), "rt.pairs");
      h.rt = Relation(n);
      for (std::size_t i = 0; i < ps.size(); ++i) {
        auto [a, b] = pair(h, ps[i], "rt.pairs[" + std::to_string(i) + "]");
        h.rt.insert(a, b);
      }
    } else {
      fail("rt.kind", "expected 'intervals' or 'pairs'");
    }
    const auto problems = validate_history(h);
    if (!problems.empty()) throw ParseError(source + ": invalid history: " + problems.front());
    return doc;
  }
};

}  // namespace

std::string emit_history(const History& h, std::string_view semantics) {
  return history_json(h, semantics).dump(2) + "\n";
}

std::string emit_execution(const AbstractExecution& a, std::string_view semantics) {
  json j = history_json(a.history, semantics);
  j["vis"] = id_pairs(a.history, a.vis);
  json ar = json::array();
  for (EventIdx e : a.ar.sequence()) ar.push_back(a.history[e].id);
  j["ar"] = std::move(ar);
  return j.dump(2) + "\n";
}

std::string emit_schedule(const Schedule& s) {
  json steps = json::array();
  for (const Token& t : s) {
    json j{{"kind", std::string(token_kind_name(t.kind))}, {"client", t.client}};
    if (t.kind == TokenKind::Call) {
      j["obj"] = t.obj;
      j["op"] = op_json(t.op);
      j["fences"] = fences_json(t.fences);
      if (t.id) j["id"] = *t.id;
    }
    steps.push_back(std::move(j));
  }
  return json{{"steps", std::move(steps)}}.dump(2) + "\n";
}

HistoryDoc parse_history(std::string_view text, std::string_view source) {
  const json j = parse_json(text, source);
  return Reader{std::string(source)}.history(j);
}

ExecutionDoc parse_execution(std::string_view text, std::string_view source) {
  const json j = parse_json(text, source);
  Reader r{std::string(source)};
  HistoryDoc hd = r.history(j);
  ExecutionDoc doc;
  doc.semantics = hd.semantics;
  AbstractExecution& a = doc.execution;
  a.history = std::move(hd.history);
  const History& h = a.history;
  a.vis = Relation(h.size());
  const json& vis = r.array(r.at(j, "", "vis"), "vis");
  for (std::size_t i = 0; i < vis.size(); ++i) {
    auto [x, y] = r.pair(h, vis[i], "vis[" + std::to_string(i) + "]");
    a.vis.insert(x, y);
  }
  const json& ar = r.array(r.at(j, "", "ar"), "ar");
  std::vector<EventIdx> seq;
  for (std::size_t i = 0; i < ar.size(); ++i) {
    const std::string p = "ar[" + std::to_string(i) + "]";
    auto e = h.find(r.str(ar[i], p));
    if (!e) r.fail(p, "unknown event '" + ar[i].get<std::string>() + "'");
    seq.push_back(*e);
  }
  try {
    a.ar = TotalOrder(std::move(seq));
  } catch (const ModelError& e) {
    r.fail("ar", e.what());
  }
  if (a.ar.size() != h.size()) r.fail("ar", "must list every event exactly once");
  const auto problems = validate_execution(a);
  if (!problems.empty()) throw ParseError(std::string(source) + ": invalid execution: " + problems.front());
  return doc;
}

Schedule parse_schedule(std::string_view text, std::string_view source) {
  const json j = parse_json(text, source);
  Reader r{std::string(source)};
  const json& steps = r.array(r.at(j, "", "steps"), "steps");
  Schedule s;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string p = "steps[" + std::to_string(i) + "]";
    const json& st = steps[i];
    const std::string kind = r.str(r.at(st, p, "kind"), p + ".kind");
    const std::string client = r.str(r.at(st, p, "client"), p + ".client");
    if (kind == "call") {
      std::optional<std::string> id;
      if (st.contains("id")) id = r.str(st["id"], p + ".id");
      const Fences f = st.contains("fences") ? r.fences(st["fences"], p + ".fences") : Fences{};
      s.push_back(Token::call(client, r.str(r.at(st, p, "obj"), p + ".obj"),
                              r.op(r.at(st, p, "op"), p + ".op"), f, id));
    } else if (kind == "body") {
      s.push_back(Token::body(client));
    } else if (kind == "ret") {
      s.push_back(Token::ret(client));
    } else if (kind == "push") {
      s.push_back(Token::push(client));
    } else if (kind == "pull") {
      s.push_back(Token::pull(client));
    } else {
      r.fail(p + ".kind", "unknown step kind '" + kind + "'");
    }
  }
  return s;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ModelError("cannot write " + path);
  out << text;
}

}  // namespace gsc
