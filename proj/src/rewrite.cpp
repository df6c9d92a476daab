#include "operad/rewrite.hpp"

#include <algorithm>
#include <set>

namespace operad {

completion_bound bound_for_arity(const generator_set& gs, int max_arity) {
  auto w = max_weight_at_arity(gs, max_arity);
  if (!w) throw error("cannot bound weight: unary generators present");
  return completion_bound{max_arity, *w};
}

namespace {

bool divisible_at_root_impl(const generator_set& gs, const tree_mono& divisor,
                            const tree_mono& tree) {
  if (divisor.is_unit() || tree.is_unit()) return false;
  if (divisor.num_vertices() > tree.num_vertices()) return false;
  auto occs = divisor_occurrences(gs, divisor, tree);
  for (const auto& o : occs)
    if (!o.vertices.empty() && o.vertices.front() == 0) return true;
  return false;
}

// m is congruent to the returned polynomial modulo the ideal, rewriting the
// given occurrence of g's leading term.
opoly rewrite_via(const generator_set& gs, operad_kind kind, const order_spec& os,
                  const tree_mono& m, const occurrence& occ, const opoly& g) {
  std::vector<std::pair<tree_mono, rational>> terms;
  const rational& lc = g.lead_coeff();
  for (size_t j = 1; j < g.terms().size(); ++j) {
    const auto& [t, c] = g.terms()[j];
    signed_tree st = replace_occurrence(gs, kind, m, occ, t);
    terms.emplace_back(st.mono, -c * st.sign / lc);
  }
  return opoly(os, std::move(terms));
}

struct reducer {
  const generator_set& gs;
  operad_kind kind;
  const order_spec& os;
  const std::vector<opoly>& basis;
  int skip = -1;

  // first (basis, occurrence) whose lead divides m
  bool find(const tree_mono& m, int& which, occurrence& occ) const {
    for (size_t b = 0; b < basis.size(); ++b) {
      if (static_cast<int>(b) == skip) continue;
      if (basis[b].zero()) continue;
      const tree_mono& lm = basis[b].lead();
      if (lm.num_vertices() > m.num_vertices() || lm.weight() > m.weight()) continue;
      auto occs = divisor_occurrences(gs, lm, m);
      if (!occs.empty()) {
        which = static_cast<int>(b);
        occ = occs.front();
        return true;
      }
    }
    return false;
  }

  opoly reduce(opoly p) const {
    while (!p.zero()) {
      bool changed = false;
      for (const auto& [m, c] : p.terms()) {
        int which;
        occurrence occ;
        if (find(m, which, occ)) {
          opoly repl = rewrite_via(gs, kind, os, m, occ, basis[which]);
          opoly delta = axpy(os, repl, rational(-1), opoly(os, {{m, rational(1)}}));
          p = axpy(os, p, c, delta);
          changed = true;
          break;  // restart from the (new) largest term
        }
      }
      if (!changed) break;
    }
    return p;
  }
};

bool basis_order_less(const order_spec& os, const opoly& a, const opoly& b) {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  if (a.arity() != b.arity()) return a.arity() < b.arity();
  cmp c = compare(os, a.lead(), b.lead());
  if (c != cmp::equal) return c == cmp::less;
  return false;
}

void interreduce(const generator_set& gs, operad_kind kind, const order_spec& os,
                 std::vector<opoly>& basis) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(basis.begin(), basis.end(),
              [&](const opoly& a, const opoly& b) { return basis_order_less(os, a, b); });
    for (size_t i = 0; i < basis.size(); ++i) {
      reducer rd{gs, kind, os, basis, static_cast<int>(i)};
      opoly r = rd.reduce(basis[i]);
      if (!(r == basis[i])) {
        changed = true;
        if (r.zero()) {
          basis.erase(basis.begin() + i);
        } else {
          basis[i] = r.scaled(rational(1) / r.lead_coeff());
        }
        break;
      }
      if (basis[i].lead_coeff() != 1) {
        basis[i] = basis[i].scaled(rational(1) / basis[i].lead_coeff());
        changed = true;
      }
    }
  }
}

}  // namespace

bool groebner_data::reducible_at_root(const tree_mono& t) const {
  for (const auto& g : basis_) {
    const tree_mono& lm = g.lead();
    if (lm.num_vertices() > t.num_vertices()) continue;
    if (divisible_at_root_impl(pres_.gens, lm, t)) return true;
  }
  return false;
}

namespace {

// Memoized bottom-up assembly of normal monomials: the normal list on a block
// depends only on the block size, since every relabelling is order-preserving.
struct normal_lists {
  const groebner_data& g;
  std::map<std::pair<int, int>, std::vector<tree_mono>> memo;  // (size, weight)

  int min_weight(int s) const {
    if (s <= 1) return 0;
    const generator_set& gs = g.gens();
    int v = (s - 1 + gs.max_arity() - 2) / (gs.max_arity() - 1);
    int mw = 1 << 28;
    for (int i = 0; i < gs.size(); ++i) mw = std::min(mw, gs[i].weight);
    return v * mw;
  }
  int max_weight(int s) const {
    if (s <= 1) return 0;
    const generator_set& gs = g.gens();
    int v = (s - 1) / (gs.min_arity() - 1);
    int mw = 1;
    for (int i = 0; i < gs.size(); ++i) mw = std::max(mw, gs[i].weight);
    return v * mw;
  }

  const std::vector<tree_mono>& list(int size, int weight) {
    auto key = std::make_pair(size, weight);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<tree_mono> out;
    const generator_set& gs = g.gens();
    operad_kind kind = g.kind();
    if (size == 1) {
      if (weight == 0) out.push_back(tree_mono::unit());
      return memo.emplace(key, std::move(out)).first->second;
    }
    if (weight < min_weight(size) || weight > max_weight(size))
      return memo.emplace(key, std::move(out)).first->second;
    std::vector<int> block(size);
    for (int j = 0; j < size; ++j) block[j] = j + 1;
    for (int g0 = 0; g0 < gs.size(); ++g0) {
      int k = gs[g0].arity;
      if (k < 2 || k > size || gs[g0].weight > weight) continue;
      for_each_partition(block, k, kind, [&](const std::vector<std::vector<int>>& parts) {
        // distribute the remaining weight over the children
        std::vector<tree_node> kids(k);
        std::function<void(int, int)> rec = [&](int j, int wleft) {
          if (j == k) {
            if (wleft != 0) return;
            tree_node root;
            root.gen = g0;
            root.kids = kids;
            tree_mono cand(gs, kind, std::move(root));
            if (!g.reducible_at_root(cand)) out.push_back(std::move(cand));
            return;
          }
          int s = static_cast<int>(parts[j].size());
          int lo = 0, hi = 0;
          for (int t = j + 1; t < k; ++t) {
            lo += min_weight(static_cast<int>(parts[t].size()));
            hi += max_weight(static_cast<int>(parts[t].size()));
          }
          int wlo = std::max(min_weight(s), wleft - hi);
          int whi = std::min(max_weight(s), wleft - lo);
          for (int w = wlo; w <= whi; ++w) {
            // relabel the memoized subtrees into the block
            std::vector<int> map(s + 1, 0);
            for (int t = 0; t < s; ++t) map[t + 1] = parts[j][t];
            for (const auto& sub : list(s, w)) {
              if (sub.is_unit()) {
                tree_node lf;
                lf.leaf = parts[j][0];
                kids[j] = std::move(lf);
              } else {
                kids[j] = relabel_tree(sub.root(), map);
              }
              rec(j + 1, wleft - w);
            }
          }
        };
        rec(0, weight - gs[g0].weight);
      });
    }
    return memo.emplace(key, std::move(out)).first->second;
  }
};

}  // namespace

std::vector<tree_mono> groebner_data::normal_monomials(int arity, std::optional<int> weight) const {
  auto wmax = max_weight_at_arity(pres_.gens, arity);
  require_completed(arity, weight ? *weight : (wmax ? *wmax : bound_.max_weight + 1));
  normal_lists nl{*this, {}};
  std::vector<tree_mono> out;
  if (arity == 1) {
    if (!weight || *weight == 0) out.push_back(tree_mono::unit());
    return out;
  }
  int wlo = weight ? *weight : nl.min_weight(arity);
  int whi = weight ? *weight : (wmax ? *wmax : 0);
  for (int w = wlo; w <= whi; ++w)
    for (const auto& m : nl.list(arity, w)) out.push_back(m);
  std::sort(out.begin(), out.end(),
            [&](const tree_mono& a, const tree_mono& b) { return order_less(os_, a, b); });
  return out;
}

long groebner_data::count_normal(int arity) const {
  auto wmax = max_weight_at_arity(pres_.gens, arity);
  require_completed(arity, wmax ? *wmax : bound_.max_weight + 1);
  if (arity == 1) return 1;
  normal_lists nl{*this, {}};
  long n = 0;
  for (int w = nl.min_weight(arity); w <= (wmax ? *wmax : 0); ++w)
    n += static_cast<long>(nl.list(arity, w).size());
  return n;
}

groebner_data buchberger(const presentation& p, const order_spec& os, completion_bound bound) {
  groebner_data g;
  g.source_ = p;
  g.pres_ = (p.kind == presentation_kind::symmetric_input) ? symmetric_to_shuffle(p, os) : p;
  validate_presentation(g.pres_);
  g.os_ = os;
  g.bound_ = bound;

  const generator_set& gs = g.pres_.gens;
  operad_kind kind = g.pres_.tree_kind();
  std::vector<opoly>& basis = g.basis_;
  basis = g.pres_.relations;
  for (auto& b : basis)
    if (!b.zero() && b.lead_coeff() != 1) b = b.scaled(rational(1) / b.lead_coeff());
  interreduce(gs, kind, os, basis);

  auto pair_window_allows = [&](int w) {
    for (size_t i = 0; i < basis.size(); ++i)
      for (size_t j = i; j < basis.size(); ++j) {
        int wi = basis[i].weight(), wj = basis[j].weight();
        if (std::max(wi, wj) <= w && w <= wi + wj - 1) return true;
      }
    return false;
  };

  for (int w = 1; w <= bound.max_weight; ++w) {
    if (!pair_window_allows(w)) continue;
    for (int arity = 2; arity <= bound.max_arity; ++arity) {
      bool slice_changed = true;
      while (slice_changed) {
        slice_changed = false;
        std::vector<opoly> additions;
        for_each_tree_monomial(gs, kind, arity, w, [&](const tree_mono& u) {
          // collect all lead occurrences in u
          std::vector<std::pair<int, occurrence>> occs;
          for (size_t b = 0; b < basis.size(); ++b) {
            if (basis[b].lead().num_vertices() > u.num_vertices()) continue;
            for (auto& o : divisor_occurrences(gs, basis[b].lead(), u))
              occs.emplace_back(static_cast<int>(b), std::move(o));
          }
          int total = u.num_vertices();
          for (size_t a = 0; a < occs.size(); ++a)
            for (size_t b = a + 1; b < occs.size(); ++b) {
              const auto& oa = occs[a].second;
              const auto& ob = occs[b].second;
              std::set<int> uni(oa.vertices.begin(), oa.vertices.end());
              size_t before = uni.size();
              uni.insert(ob.vertices.begin(), ob.vertices.end());
              bool overlap = uni.size() < before + ob.vertices.size();
              if (!overlap) continue;
              if (static_cast<int>(uni.size()) != total) continue;  // not a minimal common multiple
              opoly ra = rewrite_via(gs, kind, os, u, oa, basis[occs[a].first]);
              opoly rb = rewrite_via(gs, kind, os, u, ob, basis[occs[b].first]);
              opoly s = axpy(os, ra, rational(-1), rb);
              reducer rd{gs, kind, os, basis, -1};
              opoly r = rd.reduce(s);
              if (!r.zero()) {
                r = r.scaled(rational(1) / r.lead_coeff());
                additions.push_back(r);
                // make it visible to further reductions in this slice
                basis.push_back(r);
              }
            }
          return true;
        });
        if (!additions.empty()) {
          interreduce(gs, kind, os, basis);
          slice_changed = true;
        }
      }
    }
  }
  interreduce(gs, kind, os, basis);
  return g;
}

opoly normal_form(const groebner_data& g, const opoly& p) {
  if (p.zero()) return p;
  g.require_completed(p.arity(), p.weight());
  reducer rd{g.pres().gens, g.kind(), g.order(), g.basis(), -1};
  return rd.reduce(p);
}

opoly reduce_full(const generator_set& gs, operad_kind kind, const order_spec& os,
                  const std::vector<opoly>& basis, const opoly& p) {
  reducer rd{gs, kind, os, basis, -1};
  return rd.reduce(p);
}

span_result span_reduce(const presentation& input, const order_spec& os, int arity) {
  presentation p = (input.kind == presentation_kind::symmetric_input)
                       ? symmetric_to_shuffle(input, os)
                       : input;
  validate_presentation(p);
  const generator_set& gs = p.gens;
  operad_kind kind = p.tree_kind();

  span_result out;
  if (arity == 1) {
    out.normals.push_back(tree_mono::unit());
    out.normal_by_weight[0] = 1;
    out.dim = 1;
    return out;
  }

  auto wmax = max_weight_at_arity(gs, arity);
  if (!wmax) throw error("span_reduce needs bounded weight at fixed arity");

  // relation classes by (arity, weight, parity): shared marker generator
  struct rel_class {
    int arity, weight, parity;
    std::vector<const opoly*> rels;
  };
  std::vector<rel_class> classes;
  for (const auto& r : p.relations) {
    bool found = false;
    for (auto& c : classes)
      if (c.arity == r.arity() && c.weight == r.weight() && c.parity == r.parity()) {
        c.rels.push_back(&r);
        found = true;
      }
    if (!found) classes.push_back({r.arity(), r.weight(), r.parity(), {&r}});
  }

  for (int w = 1; w <= *wmax; ++w) {
    // column index: descending monomial order
    std::vector<tree_mono> monos = enumerate_tree_monomials(gs, kind, arity, w, os);
    if (monos.empty()) continue;
    std::reverse(monos.begin(), monos.end());  // largest first
    std::map<std::vector<int>, int> col_of;
    for (size_t j = 0; j < monos.size(); ++j) col_of[monos[j].encoding()] = static_cast<int>(j);

    echelon ech;
    for (const auto& cls : classes) {
      if (cls.weight > w || cls.arity > arity) continue;
      // extended generator set with one marker of the class's shape
      std::vector<generator_info> gi;
      for (int i = 0; i < gs.size(); ++i) gi.push_back(gs[i]);
      generator_info marker;
      marker.id = "@R";
      marker.arity = cls.arity;
      marker.parity = cls.parity;
      marker.weight = cls.weight;
      gi.push_back(marker);
      generator_set ext(gi);
      int marker_id = ext.size() - 1;
      tree_mono marker_vertex = tree_mono::vertex(ext, kind, marker_id);

      auto count_markers = [&](const tree_node& n, auto&& self) -> int {
        if (n.is_leaf()) return 0;
        int c = n.gen == marker_id ? 1 : 0;
        for (const auto& k : n.kids) c += self(k, self);
        return c;
      };

      for_each_tree_monomial(
          ext, kind, arity, w,
          [&](const tree_mono& ctx) {
            if (count_markers(ctx.root(), count_markers) != 1) return true;
            auto occs = divisor_occurrences(ext, marker_vertex, ctx);
            if (occs.size() != 1) return true;
            for (const opoly* r : cls.rels) {
              std::vector<std::pair<tree_mono, rational>> terms;
              for (const auto& [t, c] : r->terms()) {
                signed_tree st = replace_occurrence(ext, kind, ctx, occs.front(), t);
                tree_node copy = st.mono.root();
                terms.emplace_back(tree_mono(gs, kind, std::move(copy)), c * rational(st.sign));
              }
              opoly row(os, std::move(terms));
              if (row.zero()) continue;
              sparse_vec v;
              for (const auto& [m, c] : row.terms()) v.emplace_back(col_of.at(m.encoding()), c);
              std::sort(v.begin(), v.end(),
                        [](const auto& a, const auto& b) { return a.first < b.first; });
              ech.add(std::move(v));
            }
            return true;
          },
          [&](const tree_mono& sub) {
            return count_markers(sub.root(), count_markers) >= 2;
          });
    }
    ech.normalize();
    long normal_here = 0;
    for (size_t j = 0; j < monos.size(); ++j) {
      if (ech.has_pivot(static_cast<int>(j)))
        out.leads.push_back(monos[j]);
      else {
        out.normals.push_back(monos[j]);
        ++normal_here;
      }
    }
    for (const auto& [piv, row] : ech.rows()) {
      std::vector<std::pair<tree_mono, rational>> terms;
      for (const auto& [col, c] : row) terms.emplace_back(monos[col], c);
      out.reduced_basis.emplace_back(os, std::move(terms));
    }
    out.normal_by_weight[w] = normal_here;
    out.dim += normal_here;
  }
  return out;
}

std::vector<long> dims(const groebner_data& g, int max_arity) {
  std::vector<long> out;
  for (int a = 1; a <= max_arity; ++a) out.push_back(a == 1 ? 1 : g.count_normal(a));
  return out;
}

quadratic_report is_quadratic_up_to(const groebner_data& g) {
  quadratic_report rep;
  for (const auto& b : g.basis()) {
    int v = b.lead().num_vertices();
    if (v == 1)
      rep.linear.push_back(b);
    else if (v > 2) {
      rep.quadratic = false;
      rep.offending.push_back(b);
    }
  }
  return rep;
}

}  // namespace operad
