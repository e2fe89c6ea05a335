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

#include "gsc/properties.hpp"

#include "gsc/axioms.hpp"
#include "gsc/synthesizer.hpp"

namespace gsc {

namespace {

LawCheck subset_law(std::string name, const Relation& lhs, const Relation& rhs) {
  LawCheck c{std::move(name), lhs.subset_of(rhs), ""};
  if (!c.ok) {
    auto [a, b] = (lhs - rhs).pairs().front();
    c.detail = "(" + std::to_string(a) + "," + std::to_string(b) + ") escapes";
  }
  return c;
}

LawCheck equal_law(std::string name, const Relation& lhs, const Relation& rhs) {
  LawCheck c = subset_law(name, lhs, rhs);
  if (c.ok) c = subset_law(std::move(name), rhs, lhs);
  return c;
}

Relation seq(std::initializer_list<const Relation*> rs) { return compose(rs); }

}  // namespace

std::vector<LawCheck> composer_laws(const History& h, const UnionRelations& u,
                                    const TotalOrder& ar) {
  std::vector<LawCheck> out;
  const Relation so = h.so();
  const Relation prec = compute_prec(h, u.vis0, u.so0);
  out.push_back(equal_law("prec forms agree", prec, compute_prec_folded(h, u.vis0, u.so0)));

  const Relation rtb = rt_bar(h);
  const Relation vr = compose(u.vis0 - so, h.rt);
  const Relation base = rtb | so | u.ar0 | vr;
  const Relation r = base | prec;
  out.push_back({"R acyclic", is_acyclic(r), ""});

  const Relation base_plus = transitive_closure(base);
  const Relation head = prec | compose(u.ar0, prec);
  out.push_back(equal_law("closed form of R+", transitive_closure(r),
                          base_plus | compose(head, reflexive_transitive_closure(base))));

  const Relation& a0 = u.ar0;
  Relation bound = rtb | a0 | compose(a0, rtb) | compose(rtb, a0) | seq({&a0, &rtb, &a0}) | vr |
                   compose(a0, vr) | compose(vr, a0) | seq({&a0, &vr, &a0});
  out.push_back(subset_law("bound on the prec-free part of R+", base_plus, bound));

  const Relation a0q = optional(a0);
  out.push_back(subset_law("so within ar0 and ar0?;rt-bar", so, a0 | compose(a0q, rtb)));
  out.push_back(subset_law("prec;ar0?;prec within prec", seq({&prec, &a0q, &prec}), prec));
  out.push_back({"ar0?;prec irreflexive", is_irreflexive(compose(a0q, prec)), ""});
  out.push_back({"prec strict partial order", is_strict_partial_order(prec), ""});

  const Relation vis5 = lemma5_vis(h, u.vis0, ar, u.ar0);
  out.push_back(equal_law("closed-form vis is the least fixpoint", vis5,
                          minimal_vis(h, ar, u.vis0).vis));
  return out;
}

std::vector<LawCheck> synthesis_laws(const AbstractExecution& a) {
  std::vector<LawCheck> out;
  const History& h = a.history;
  const Relation so = h.so();
  const Relation lt = compute_lt(a);
  const Relation arb = ar_bar(a);
  const Relation ve = a.vis - so;
  out.push_back({"< strict partial order", is_strict_partial_order(lt), ""});
  out.push_back(subset_law("<;ar-bar within <", compose(lt, arb), lt));
  out.push_back(subset_law("<;(vis \\ so) within <", compose(lt, ve), lt));

  const Relation& rt = h.rt;
  const Relation s = rt | ve | arb | compose(rt, ve) | compose(ve, rt) | compose(rt, arb) |
                     compose(arb, rt);
  out.push_back({"S transitive", is_transitive(s), ""});
  const Relation u = rt | a.vis | arb | lt;
  out.push_back(subset_law("bound on (rt ∪ vis ∪ ar-bar ∪ <)+", transitive_closure(u),
                           s | lt | compose(s, lt) | compose(lt, s) | seq({&s, &lt, &s})));
  out.push_back({"rt ∪ vis ∪ ar-bar ∪ < acyclic", is_acyclic(u), ""});
  return out;
}

std::vector<LawCheck> execution_laws(const AbstractExecution& a) {
  std::vector<LawCheck> out;
  const History& h = a.history;
  const std::size_t n = h.size();
  out.push_back({"vis transitive", is_transitive(a.vis), ""});
  out.push_back({"vis ∪ rt acyclic", is_acyclic(a.vis | h.rt), ""});
  const EventSet all = EventSet::all(n);
  const Relation widest = Relation::product(all, all) - h.rt.inverse();
  out.push_back(subset_law("rt;S;rt within rt", seq({&h.rt, &widest, &h.rt}), h.rt));
  if ((a.vis & h.rt.inverse()).empty())
    out.push_back(subset_law("rt;vis;rt within rt", seq({&h.rt, &a.vis, &h.rt}), h.rt));
  return out;
}

std::string failed_laws(const std::vector<LawCheck>& checks) {
  std::string s;
  for (const LawCheck& c : checks) {
    if (c.ok) continue;
    if (!s.empty()) s += "; ";
    s += c.name;
    if (!c.detail.empty()) s += " " + c.detail;
  }
  return s;
}

}  // namespace gsc
