#include "operad/veronese.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace operad {

veronese_basis veronese_generators(const groebner_data& g, int d) {
  if (d < 1) throw error("Veronese power needs d >= 1");
  const generator_set& gs = g.gens();
  veronese_basis out;
  out.d = d;
  int amin = d * (gs.min_arity() - 1) + 1;
  int amax = d * (gs.max_arity() - 1) + 1;
  for (int a = std::max(2, amin); a <= amax; ++a)
    for (const auto& m : g.normal_monomials(a, d)) out.elements.push_back(m);
  std::stable_sort(out.elements.begin(), out.elements.end(),
                   [&](const tree_mono& x, const tree_mono& y) {
                     if (x.arity() != y.arity()) return x.arity() < y.arity();
                     return order_less(g.order(), x, y);
                   });
  std::vector<generator_info> ygens;
  for (size_t j = 0; j < out.elements.size(); ++j) {
    generator_info gi;
    gi.id = "y" + std::to_string(j + 1);
    gi.arity = out.elements[j].arity();
    gi.parity = out.elements[j].parity();
    gi.weight = d;
    ygens.push_back(gi);
  }
  out.ygens = generator_set(ygens);
  return out;
}

std::vector<long> naive_dims(const groebner_data& g, int d, int max_arity) {
  if (d < 1) throw error("Veronese power needs d >= 1");
  std::vector<long> out;
  for (int a = 1; a <= max_arity; ++a) {
    if (a == 1) {
      out.push_back(1);
      continue;
    }
    auto wmax = max_weight_at_arity(g.gens(), a);
    long total = 0;
    for (int w = d; wmax && w <= *wmax; w += d)
      total += static_cast<long>(g.normal_monomials(a, w).size());
    out.push_back(total);
  }
  return out;
}

bool free_membership(const generator_set& gs, operad_kind kind, const tree_mono& t, int d) {
  if (d < 1) throw error("free_membership needs d >= 1");
  tree_mono cur = t;
  while (true) {
    if (cur.weight() == 0) return true;
    if (cur.weight() % d != 0) return false;
    auto occs = right_divisors_weight(gs, cur, d);
    if (occs.empty()) return false;
    cur = strip_right_divisors(gs, kind, cur, occs);
  }
}

namespace {

bool brute(const generator_set& gs, operad_kind kind, const tree_mono& t, int d,
           std::map<std::vector<int>, bool>& memo) {
  if (t.weight() == 0) return true;
  if (t.weight() % d != 0) return false;
  auto it = memo.find(t.encoding());
  if (it != memo.end()) return it->second;
  bool ok = false;
  for (const auto& occ : right_divisors_weight(gs, t, d)) {
    tree_mono stripped = strip_right_divisors(gs, kind, t, {occ});
    if (brute(gs, kind, stripped, d, memo)) {
      ok = true;
      break;
    }
  }
  memo[t.encoding()] = ok;
  return ok;
}

}  // namespace

bool free_membership_bruteforce(const generator_set& gs, operad_kind kind, const tree_mono& t,
                                int d) {
  std::map<std::vector<int>, bool> memo;
  return brute(gs, kind, t, d, memo);
}

namespace {

// Reconstructs (root generator, inner generator, unshuffle) of a two-vertex
// tree over the Y generators.
struct two_vertex {
  int outer_gen = -1;
  int inner_gen = -1;
  unshuffle u;
};

two_vertex decompose_two_vertex(const generator_set& ygens, const tree_mono& t) {
  const tree_node& r = t.root();
  two_vertex out;
  out.outer_gen = r.gen;
  int pos = 0;
  const tree_node* inner = nullptr;
  for (size_t j = 0; j < r.kids.size(); ++j)
    if (!r.kids[j].is_leaf()) {
      inner = &r.kids[j];
      pos = static_cast<int>(j) + 1;
    }
  if (!inner) throw error("not a two-vertex tree");
  out.inner_gen = inner->gen;
  int m = ygens[out.inner_gen].arity;
  int n = ygens[out.outer_gen].arity;
  out.u.slot = pos;
  out.u.inner = m;
  out.u.outer = n;
  std::vector<int> inner_labels;
  for (const auto& k : inner->kids) inner_labels.push_back(k.leaf);
  std::sort(inner_labels.begin(), inner_labels.end());
  for (size_t k = 1; k < inner_labels.size(); ++k) out.u.values.push_back(inner_labels[k]);
  for (size_t j = pos; j < r.kids.size(); ++j)
    if (r.kids[j].is_leaf()) out.u.values.push_back(r.kids[j].leaf);
  return out;
}

}  // namespace

veronese_evaluation evaluate_veronese_square(const groebner_data& g, int d) {
  veronese_evaluation ev;
  ev.basis = veronese_generators(g, d);
  const generator_set& xg = g.gens();
  operad_kind kind = g.kind();

  std::set<int> arities;
  for (size_t i = 0; i < ev.basis.elements.size(); ++i)
    for (size_t j = 0; j < ev.basis.elements.size(); ++j)
      arities.insert(ev.basis.elements[i].arity() + ev.basis.elements[j].arity() - 1);

  for (int a : arities) {
    veronese_evaluation::slice sl;
    sl.arity = a;
    sl.ymonos = enumerate_tree_monomials(ev.basis.ygens, kind, a, 2 * d, g.order());
    sl.source_basis = g.normal_monomials(a, 2 * d);
    for (const auto& ym : sl.ymonos) {
      two_vertex tv = decompose_two_vertex(ev.basis.ygens, ym);
      opoly outer(g.order(), {{ev.basis.elements[tv.outer_gen], rational(1)}});
      opoly inner(g.order(), {{ev.basis.elements[tv.inner_gen], rational(1)}});
      opoly composed = substitute(xg, kind, g.order(), outer, tv.u, inner);
      sl.images.push_back(normal_form(g, composed));
    }
    ev.slices.push_back(std::move(sl));
  }
  return ev;
}

presentation quadratic_veronese(const groebner_data& g, int d) {
  veronese_evaluation ev = evaluate_veronese_square(g, d);
  presentation out;
  out.name = g.source().name + "^[" + std::to_string(d) + "]q";
  out.kind = g.kind() == operad_kind::nonsymmetric ? presentation_kind::nonsymmetric
                                                   : presentation_kind::shuffle;
  out.gens = ev.basis.ygens;

  for (const auto& sl : ev.slices) {
    std::map<std::vector<int>, int> row_of;  // source monomial -> row, descending order
    std::vector<tree_mono> rows = sl.source_basis;
    std::sort(rows.begin(), rows.end(), [&](const tree_mono& x, const tree_mono& y) {
      return compare(g.order(), x, y) == cmp::greater;
    });
    for (size_t r = 0; r < rows.size(); ++r) row_of[rows[r].encoding()] = static_cast<int>(r);

    column_solver solver;
    for (size_t j = 0; j < sl.ymonos.size(); ++j) {
      sparse_vec col;
      for (const auto& [m, c] : sl.images[j].terms()) col.emplace_back(row_of.at(m.encoding()), c);
      std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      solver.add_column(static_cast<int>(j), col);
    }
    for (const auto& k : solver.kernel()) {
      std::vector<std::pair<tree_mono, rational>> terms;
      for (const auto& [j, c] : k) terms.emplace_back(sl.ymonos[j], c);
      out.relations.emplace_back(g.order(), std::move(terms));
    }
  }
  return out;
}

std::vector<long> suboperad_dims(const groebner_data& g, int d, int max_arity) {
  veronese_basis y = veronese_generators(g, d);
  const generator_set& xg = g.gens();
  operad_kind kind = g.kind();
  const order_spec& os = g.order();

  // per weight level k (in units of d), per arity: independent span elements
  using level_map = std::map<int, std::vector<opoly>>;
  std::vector<level_map> levels(2);
  std::map<std::pair<int, int>, echelon> spans;  // (k, arity)
  std::map<std::pair<int, int>, std::map<std::vector<int>, int>> row_index;

  auto coord = [&](int k, int arity, const opoly& p, sparse_vec& v) {
    auto& idx = row_index[{k, arity}];
    std::map<int, rational> acc;
    for (const auto& [m, c] : p.terms()) {
      auto it = idx.find(m.encoding());
      int r;
      if (it == idx.end()) {
        r = static_cast<int>(idx.size());
        idx.emplace(m.encoding(), r);
      } else {
        r = it->second;
      }
      acc[r] = c;
    }
    v.assign(acc.begin(), acc.end());
  };

  auto insert = [&](int k, int arity, const opoly& p) -> bool {
    if (p.zero()) return false;
    sparse_vec v;
    coord(k, arity, p, v);
    auto& ech = spans.try_emplace({k, arity}).first->second;
    if (!ech.add(std::move(v))) return false;
    levels[k][arity].push_back(p);
    return true;
  };

  for (size_t j = 0; j < y.elements.size(); ++j) {
    if (y.elements[j].arity() > max_arity) continue;
    insert(1, y.elements[j].arity(), opoly(os, {{y.elements[j], rational(1)}}));
  }

  int kmax = 1;
  if (!y.elements.empty()) {
    int min_gen_arity = y.elements.front().arity();
    for (const auto& e : y.elements) min_gen_arity = std::min(min_gen_arity, e.arity());
    kmax = (max_arity - 1) / std::max(1, min_gen_arity - 1);
  }

  for (int k = 2; k <= kmax; ++k) {
    levels.push_back({});
    for (int a = 1; a < k; ++a) {
      int b = k - a;
      for (const auto& [na, ups] : levels[a])
        for (const auto& up : ups)
          for (const auto& [nb, vps] : levels[b])
            for (const auto& vp : vps) {
              int arity = na + nb - 1;
              if (arity > max_arity) continue;
              for (int s = 1; s <= na; ++s)
                for (const auto& u : enumerate_unshuffles(s, nb, na)) {
                  if (kind == operad_kind::nonsymmetric && !u.is_identity()) continue;
                  opoly comp = substitute(xg, kind, os, up, u, vp);
                  insert(k, arity, normal_form(g, comp));
                }
            }
    }
  }

  std::vector<long> out(max_arity, 0);
  out[0] = 1;
  for (const auto& [key, ech] : spans) out[key.second - 1] += ech.rank();
  return out;
}

pbw_report pbw_check(const groebner_data& g, int d) {
  pbw_report rep;
  rep.quadratic_gb = is_quadratic_up_to(g).quadratic;
  const generator_set& gs = g.gens();
  int amin = 2 * d * (gs.min_arity() - 1) + 1;
  int amax = 2 * d * (gs.max_arity() - 1) + 1;
  for (int a = amin; a <= amax; ++a) {
    if (a > g.bound().max_arity) throw not_completed_error(a, 2 * d);
    for (const auto& m : g.normal_monomials(a, 2 * d))
      if (!free_membership(gs, g.kind(), m, d)) rep.failing.push_back(m);
  }
  rep.pbw = rep.quadratic_gb && rep.failing.empty();
  return rep;
}

bool leftcomb_spanning(const groebner_data& g, int max_arity) {
  const generator_set& gs = g.gens();
  operad_kind kind = g.kind();
  const order_spec& os = g.order();
  const symmetric_actions& acts = g.pres().actions;

  for (int n = 2; n <= max_arity; ++n) {
    long target = g.count_normal(n);
    echelon ech;
    std::map<std::vector<int>, int> row_of;
    auto coord = [&](const opoly& p, sparse_vec& v) {
      std::map<int, rational> acc;
      for (const auto& [m, c] : p.terms()) {
        auto it = row_of.find(m.encoding());
        int r = it == row_of.end() ? (row_of[m.encoding()] = static_cast<int>(row_of.size()))
                                   : it->second;
        acc[r] = c;
      }
      v.assign(acc.begin(), acc.end());
    };

    // generator sequences with total arity n
    std::vector<std::vector<int>> seqs;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int left) {
      if (left == 0) {
        if (cur.size() >= 1) seqs.push_back(cur);
        return;
      }
      for (int gi = 0; gi < gs.size(); ++gi) {
        int step = gs[gi].arity - 1;
        if (step <= 0 || step > left) continue;
        cur.push_back(gi);
        rec(left - step);
        cur.pop_back();
      }
    };
    rec(n - 1);

    long rank = 0;
    for (const auto& seq : seqs) {
      tree_mono comb = left_comb(gs, kind, seq);
      opoly base(os, {{comb, rational(1)}});
      if (!acts.empty()) {
        std::vector<int> perm(n);
        for (int j = 0; j < n; ++j) perm[j] = j + 1;
        do {
          opoly q = act_on_leaves(gs, acts, os, base, perm);
          opoly nf = normal_form(g, q);
          if (nf.zero()) continue;
          sparse_vec v;
          coord(nf, v);
          if (ech.add(std::move(v))) ++rank;
          if (rank == target) break;
        } while (std::next_permutation(perm.begin(), perm.end()));
      } else {
        // shuffle-native: all-unshuffle left combs
        std::vector<tree_mono> combs = {tree_mono::vertex(gs, kind, seq[0])};
        for (size_t j = 1; j < seq.size(); ++j) {
          std::vector<tree_mono> next;
          tree_mono v = tree_mono::vertex(gs, kind, seq[j]);
          for (const auto& t : combs)
            for (const auto& u : enumerate_unshuffles(1, gs[seq[j]].arity, t.arity()))
              next.push_back(compose(gs, kind, t, u, v).mono);
          combs = std::move(next);
        }
        for (const auto& c : combs) {
          opoly nf = normal_form(g, opoly(os, {{c, rational(1)}}));
          if (nf.zero()) continue;
          sparse_vec v;
          coord(nf, v);
          if (ech.add(std::move(v))) ++rank;
          if (rank == target) break;
        }
      }
      if (rank == target) break;
    }
    if (rank != target) return false;
  }
  return true;
}

std::vector<long> di_dims(const std::vector<long>& dims) {
  std::vector<long> out;
  for (size_t n = 0; n < dims.size(); ++n) out.push_back(static_cast<long>(n + 1) * dims[n]);
  return out;
}

}  // namespace operad
