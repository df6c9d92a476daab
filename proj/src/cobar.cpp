#include "operad/cobar.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "operad/linalg.hpp"

namespace operad {

namespace {

int count_odd_vertices(const generator_set& gs, const tree_node& n) {
  if (n.is_leaf()) return 0;
  int c = gs[n.gen].parity;
  for (const auto& k : n.kids) c += count_odd_vertices(gs, k);
  return c;
}

}  // namespace

operad_tables operad_tables::build(const groebner_data& g, int arity_bound) {
  operad_tables t;
  t.arity_bound_ = arity_bound;
  t.kind_ = g.kind();
  t.basis_.assign(arity_bound + 1, {});

  std::vector<generator_info> cgens;
  for (int a = 2; a <= arity_bound; ++a) {
    for (const auto& m : g.normal_monomials(a)) {
      element e;
      e.mono = m;
      e.intdeg = count_odd_vertices(g.gens(), m.root());
      int index = static_cast<int>(t.basis_[a].size());
      t.basis_[a].push_back(e);
      generator_info gi;
      gi.id = "e" + std::to_string(a) + "_" + std::to_string(index + 1);
      gi.arity = a;
      gi.parity = ((e.intdeg - 1) % 2 + 2) % 2;  // chain-vertex parity
      gi.weight = 1;
      int gen = static_cast<int>(cgens.size());
      cgens.push_back(gi);
      t.gen_elem_.emplace_back(a, index);
      t.elem_gen_[{a, index}] = gen;
    }
  }
  t.chain_gens_ = generator_set(cgens);
  t.expansions_.assign(cgens.size(), {});

  // expansions: coefficient of b in (e1 o_{i,u} e2), per target b
  const order_spec& os = g.order();
  for (int a1 = 2; a1 <= arity_bound; ++a1)
    for (int a2 = 2; a2 <= arity_bound; ++a2) {
      int a = a1 + a2 - 1;
      if (a > arity_bound) continue;
      std::map<std::vector<int>, int> index_at_a;
      for (size_t j = 0; j < t.basis_[a].size(); ++j)
        index_at_a[t.basis_[a][j].mono.encoding()] = static_cast<int>(j);
      for (size_t i1 = 0; i1 < t.basis_[a1].size(); ++i1)
        for (size_t i2 = 0; i2 < t.basis_[a2].size(); ++i2) {
          opoly u1(os, {{t.basis_[a1][i1].mono, rational(1)}});
          opoly u2(os, {{t.basis_[a2][i2].mono, rational(1)}});
          for (int slot = 1; slot <= a1; ++slot)
            for (const auto& u : enumerate_unshuffles(slot, a2, a1)) {
              if (t.kind_ == operad_kind::nonsymmetric && !u.is_identity()) continue;
              opoly composed = substitute(g.gens(), t.kind_, os, u1, u, u2);
              opoly nf = normal_form(g, composed);
              for (const auto& [m, c] : nf.terms()) {
                auto it = index_at_a.find(m.encoding());
                if (it == index_at_a.end()) throw error("composition image outside basis");
                int target_gen = t.elem_gen_.at({a, it->second});
                expansion ex;
                ex.outer = t.elem_gen_.at({a1, static_cast<int>(i1)});
                ex.inner = t.elem_gen_.at({a2, static_cast<int>(i2)});
                ex.u = u;
                ex.coef = c;
                ex.pattern = compose(t.chain_gens_, t.kind_,
                                     tree_mono::vertex(t.chain_gens_, t.kind_, ex.outer), u,
                                     tree_mono::vertex(t.chain_gens_, t.kind_, ex.inner))
                                 .mono;
                t.expansions_[target_gen].push_back(std::move(ex));
              }
            }
        }
    }
  return t;
}

const std::vector<operad_tables::element>& operad_tables::basis(int arity) const {
  if (arity < 0 || arity > arity_bound_) throw not_completed_error(arity, 0);
  return basis_[arity];
}

int operad_tables::gen_of(int arity, int index) const { return elem_gen_.at({arity, index}); }

const std::pair<int, int>& operad_tables::elem_of(int gen) const { return gen_elem_[gen]; }

const std::vector<operad_tables::expansion>& operad_tables::expansions(int gen) const {
  return expansions_[gen];
}

int operad_tables::intdeg_of_gen(int gen) const {
  const auto& [a, i] = gen_elem_[gen];
  return basis_[a][i].intdeg;
}

int chain_degree(const operad_tables& t, const tree_mono& m) {
  if (m.is_unit()) return 0;
  int deg = 0;
  std::function<void(const tree_node&)> walk = [&](const tree_node& n) {
    if (n.is_leaf()) return;
    deg += t.intdeg_of_gen(n.gen) - 1;
    for (const auto& k : n.kids) walk(k);
  };
  walk(m.root());
  return deg;
}

std::vector<tree_mono> chain_basis(const operad_tables& t, int arity, int degree,
                                   const order_spec& os) {
  if (arity > t.arity_bound() && arity > 1) {
    // chain trees only use labels of arity <= bound; larger ambient arity is fine
  }
  const generator_set& cg = t.chain_gens();
  if (cg.size() == 0) return {};
  std::vector<tree_mono> out;
  if (arity == 1) {
    if (degree == 0) out.push_back(tree_mono::unit());
    return out;
  }
  // vertex-count slices; feasibility check by a small DP over
  // (vertices, arity sum, degree sum)
  int min_ar = cg.min_arity(), max_ar = cg.max_arity();
  int vmax = (arity - 1) / std::max(1, min_ar - 1);
  int vmin = (arity - 1 + max_ar - 2) / std::max(1, max_ar - 1);
  for (int v = vmin; v <= vmax; ++v) {
    // does any multiset of v labels reach (arity-1, degree+v)?
    std::set<std::pair<int, int>> reach = {{0, 0}};  // (sum of arity-1, sum of intdeg)
    for (int step = 0; step < v; ++step) {
      std::set<std::pair<int, int>> next;
      for (const auto& [sa, sd] : reach)
        for (int gi = 0; gi < cg.size(); ++gi) {
          int na = sa + cg[gi].arity - 1;
          int nd = sd + t.intdeg_of_gen(gi);
          if (na <= arity - 1) next.insert({na, nd});
        }
      reach = std::move(next);
    }
    if (!reach.count({arity - 1, degree + v})) continue;
    for_each_tree_monomial(cg, t.kind(), arity, v, [&](const tree_mono& m) {
      if (chain_degree(t, m) == degree) out.push_back(m);
      return true;
    });
  }
  std::sort(out.begin(), out.end(),
            [&](const tree_mono& a, const tree_mono& b) { return order_less(os, a, b); });
  return out;
}

namespace {

void accumulate(std::map<std::vector<int>, std::pair<tree_mono, rational>>& acc,
                const tree_mono& m, const rational& c) {
  auto it = acc.find(m.encoding());
  if (it == acc.end())
    acc.emplace(m.encoding(), std::make_pair(m, c));
  else {
    it->second.second += c;
    if (it->second.second == 0) acc.erase(it);
  }
}

chain to_chain(std::map<std::vector<int>, std::pair<tree_mono, rational>>& acc) {
  chain out;
  for (auto& [enc, mc] : acc) out.push_back(std::move(mc));
  return out;
}

struct vertex_site {
  int node_id = 0;
  int gen = -1;
  occurrence occ;
  int context_odd = 0;  // odd chain-vertices outside the vertex and its subtree
};

// Enumerates the internal vertices of a chain tree with the data needed for
// one differential expansion step.
std::vector<vertex_site> vertex_sites(const generator_set& cg, const tree_mono& m) {
  std::vector<vertex_site> out;
  struct frame {
    const tree_node* n;
    int id;
  };
  // all-node preorder walk with explicit ids
  std::vector<int> parity_by_id;
  std::vector<const tree_node*> nodes;
  std::function<void(const tree_node&)> index = [&](const tree_node& n) {
    nodes.push_back(&n);
    parity_by_id.push_back(n.is_leaf() ? 0 : cg[n.gen].parity);
    for (const auto& k : n.kids) index(k);
  };
  index(m.root());
  std::function<int(int)> subtree_end = [&](int id) {
    const tree_node* n = nodes[id];
    int end = id + 1;
    if (!n->is_leaf())
      for (size_t j = 0; j < n->kids.size(); ++j) end = subtree_end(end);
    return end;
  };
  int total_odd = 0;
  for (int id = 0; id < static_cast<int>(nodes.size()); ++id) total_odd += parity_by_id[id];
  for (int id = 0; id < static_cast<int>(nodes.size()); ++id) {
    const tree_node* n = nodes[id];
    if (n->is_leaf()) continue;
    vertex_site site;
    site.node_id = id;
    site.gen = n->gen;
    site.occ.vertices = {id};
    int child = id + 1;
    for (size_t j = 0; j < n->kids.size(); ++j) {
      site.occ.leaf_nodes.push_back(child);
      child = subtree_end(child);
    }
    site.occ.right_divisor = true;
    int sub_odd = 0;
    for (int t = id; t < subtree_end(id); ++t) sub_odd += parity_by_id[t];
    site.context_odd = total_odd - sub_odd;
    out.push_back(std::move(site));
  }
  return out;
}

}  // namespace

chain differential_of(const operad_tables& t, const tree_mono& m) {
  const generator_set& cg = t.chain_gens();
  std::map<std::vector<int>, std::pair<tree_mono, rational>> acc;
  for (const auto& site : vertex_sites(cg, m)) {
    for (const auto& ex : t.expansions(site.gen)) {
      signed_tree st = replace_occurrence(cg, t.kind(), m, site.occ, ex.pattern);
      rational c = ex.coef * rational(st.sign);
      if (site.context_odd % 2) c = -c;
      accumulate(acc, st.mono, c);
    }
  }
  return to_chain(acc);
}

chain apply_differential(const operad_tables& t, const chain& c) {
  std::map<std::vector<int>, std::pair<tree_mono, rational>> acc;
  for (const auto& [m, coef] : c)
    for (const auto& [m2, c2] : differential_of(t, m)) accumulate(acc, m2, coef * c2);
  return to_chain(acc);
}

bool d_squared_zero(const operad_tables& t, int arity, int degree, const order_spec& os) {
  for (const auto& m : chain_basis(t, arity, degree, os)) {
    chain d1 = differential_of(t, m);
    chain d2 = apply_differential(t, d1);
    if (!d2.empty()) return false;
  }
  return true;
}

std::vector<homology_slice> homology_ranks(const operad_tables& t, int arity,
                                           const order_spec& os) {
  // collect nonempty degrees
  std::map<int, std::vector<tree_mono>> bases;
  {
    // degrees range over sum of (intdeg - 1); scan a generous window
    int lo = 0, hi = 0;
    for (int g = 0; g < t.chain_gens().size(); ++g) {
      lo = std::min(lo, t.intdeg_of_gen(g) - 1);
      hi = std::max(hi, t.intdeg_of_gen(g) - 1);
    }
    int vmax = arity;  // crude vertex bound
    for (int d = lo * vmax; d <= hi * vmax; ++d) {
      auto b = chain_basis(t, arity, d, os);
      if (!b.empty()) bases[d] = std::move(b);
    }
  }
  std::map<int, long> rank_out;
  for (const auto& [deg, basis] : bases) {
    echelon ech;
    std::map<std::vector<int>, int> row_of;
    long rank = 0;
    for (const auto& m : basis) {
      chain d = differential_of(t, m);
      sparse_vec v;
      std::map<int, rational> entries;
      for (const auto& [tm, c] : d) {
        auto it = row_of.find(tm.encoding());
        int r = it == row_of.end() ? (row_of[tm.encoding()] = static_cast<int>(row_of.size()))
                                   : it->second;
        entries[r] = c;
      }
      v.assign(entries.begin(), entries.end());
      if (!v.empty() && ech.add(std::move(v))) ++rank;
    }
    rank_out[deg] = rank;
  }
  std::vector<homology_slice> out;
  for (const auto& [deg, basis] : bases) {
    homology_slice s;
    s.degree = deg;
    s.dim = static_cast<long>(basis.size());
    s.rank_out = rank_out.count(deg) ? rank_out[deg] : 0;
    s.rank_in = rank_out.count(deg + 1) ? rank_out[deg + 1] : 0;
    s.homology = s.dim - s.rank_out - s.rank_in;
    out.push_back(s);
  }
  return out;
}

boundary_solution solve_boundary(const operad_tables& t, const chain& target, int degree_of_x,
                                 const order_spec& os, unsigned long seed, int attempts) {
  boundary_solution sol;
  if (target.empty()) {
    sol.solvable = true;
    return sol;
  }
  int arity = target.front().first.arity();
  std::vector<tree_mono> cols = chain_basis(t, arity, degree_of_x, os);

  std::map<std::vector<int>, int> row_of;
  auto row_id = [&](const tree_mono& m) {
    auto it = row_of.find(m.encoding());
    if (it != row_of.end()) return it->second;
    int r = static_cast<int>(row_of.size());
    row_of.emplace(m.encoding(), r);
    return r;
  };

  column_solver solver;
  std::vector<chain> col_chains(cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    col_chains[j] = differential_of(t, cols[j]);
    std::map<int, rational> entries;
    for (const auto& [m, c] : col_chains[j]) entries[row_id(m)] = c;
    sparse_vec v(entries.begin(), entries.end());
    solver.add_column(static_cast<int>(j), v);
  }
  std::map<int, rational> tentries;
  for (const auto& [m, c] : target) tentries[row_id(m)] = c;
  sparse_vec tv(tentries.begin(), tentries.end());

  sparse_vec x;
  if (!solver.solve(tv, x)) return sol;
  sol.solvable = true;
  sol.kernel_dim = static_cast<long>(solver.kernel().size());

  // dense coefficient view for the zero-pattern report and witness search
  std::vector<rational> coeff(cols.size(), rational(0));
  for (const auto& [j, c] : x) coeff[j] = c;
  auto zeros = [&](const std::vector<rational>& cf) {
    std::vector<tree_mono> z;
    for (size_t j = 0; j < cf.size(); ++j)
      if (cf[j] == 0) z.push_back(cols[j]);
    return z;
  };
  sol.zero_coefficient = zeros(coeff);
  if (!sol.zero_coefficient.empty() && !solver.kernel().empty()) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(-3, 3);
    for (int tr = 0; tr < attempts && !sol.zero_coefficient.empty(); ++tr) {
      std::vector<rational> cand = coeff;
      for (const auto& k : solver.kernel()) {
        int w = pick(rng);
        if (w == 0) continue;
        for (const auto& [j, c] : k) cand[j] += rational(w) * c;
      }
      auto z = zeros(cand);
      if (z.size() < sol.zero_coefficient.size()) {
        coeff = cand;
        sol.zero_coefficient = z;
      }
    }
  }
  for (size_t j = 0; j < cols.size(); ++j)
    if (coeff[j] != 0) sol.preimage.emplace_back(cols[j], coeff[j]);
  return sol;
}

pure_cycle_result pure_cycle_report(const groebner_data& gb, int n, const order_spec& os,
                                    unsigned long seed) {
  if (n != 2 && n != 3) throw error("pure_cycle_report supports n = 2 and n = 3");
  pure_cycle_result res;
  res.n = n;
  res.arity = n * n + n - 1;

  operad_tables t = operad_tables::build(gb, 2 * n - 1);
  const generator_set& cg = t.chain_gens();
  if (t.basis(n).size() != 1 || t.basis(2 * n - 1).size() != 1)
    throw error("unexpected tCom^n_1 basis sizes");
  int ell = t.gen_of(n, 0);

  // target: n! * sum of the (n+1)-fold left combs of ell
  std::vector<tree_mono> combs = enumerate_left_combs(cg, t.kind(), ell, n + 1);
  chain target;
  rational nfact(factorial(static_cast<unsigned long>(n)));
  for (const auto& c : combs) target.emplace_back(c, nfact);
  std::sort(target.begin(), target.end(),
            [](const auto& a, const auto& b) { return a.first.encoding() < b.first.encoding(); });

  boundary_solution bs = solve_boundary(t, target, 1, os, seed);
  res.boundary_solved = bs.solvable;
  res.nu_all_nonzero = bs.solvable && bs.zero_coefficient.empty();
  if (!bs.solvable) {
    res.detail = "no preimage for the left-comb target";
    return res;
  }
  const chain& nu = bs.preimage;

  // alpha = sum over Sh_1(n^2-1, n-1) of ell o_{1,s} nu
  // beta  = sum over Sh_1(n-1, n^2-1) of nu o_{1,s} ell
  tree_mono vell = tree_mono::vertex(cg, t.kind(), ell);
  std::map<std::vector<int>, std::pair<tree_mono, rational>> acc;
  for (const auto& u : enumerate_unshuffles(1, n * n, n))
    for (const auto& [m, c] : nu) {
      signed_tree st = compose(cg, t.kind(), vell, u, m);
      accumulate(acc, st.mono, c * st.sign);
    }
  for (const auto& [m, c] : nu)
    for (const auto& u : enumerate_unshuffles(1, n, m.arity())) {
      signed_tree st = compose(cg, t.kind(), m, u, vell);
      accumulate(acc, st.mono, -c * st.sign);
    }
  chain cycle = to_chain(acc);

  chain boundary = apply_differential(t, cycle);
  res.cycle_closed = boundary.empty();

  // omega_n = ell o_1 gamma(xi; id, .., id, ell, .., ell)
  int xi = t.gen_of(2 * n - 1, 0);
  tree_mono inner = tree_mono::vertex(cg, t.kind(), xi);
  for (int slot = 2 * n - 1; slot >= n + 1; --slot)
    inner = compose(cg, t.kind(), inner, unshuffle::identity(slot, n, inner.arity()), vell).mono;
  tree_mono omega = compose(cg, t.kind(), vell, unshuffle::identity(1, inner.arity(), n), inner).mono;

  rational omega_in_beta(0), omega_in_cycle(0);
  for (const auto& [m, c] : cycle)
    if (m == omega) omega_in_cycle = c;
  {
    std::map<std::vector<int>, std::pair<tree_mono, rational>> beta_acc;
    for (const auto& [m, c] : nu)
      for (const auto& u : enumerate_unshuffles(1, n, m.arity())) {
        signed_tree st = compose(cg, t.kind(), m, u, vell);
        accumulate(beta_acc, st.mono, c * st.sign);
      }
    auto it = beta_acc.find(omega.encoding());
    if (it != beta_acc.end()) omega_in_beta = it->second.second;
  }
  res.omega_in_beta_zero = omega_in_beta == 0;
  res.omega_coefficient = omega_in_cycle;

  // image test against the degree-2 -> degree-1 differential
  std::vector<tree_mono> b2 = chain_basis(t, res.arity, 2, os);
  res.d_squared_ok = true;
  std::vector<chain> cols;
  cols.reserve(b2.size());
  std::set<std::vector<int>> image_support;
  for (const auto& m : b2) {
    chain d = differential_of(t, m);
    if (!apply_differential(t, d).empty()) res.d_squared_ok = false;
    for (const auto& [tm, c] : d) image_support.insert(tm.encoding());
    cols.push_back(std::move(d));
  }

  bool small = b2.size() <= 4000;
  res.full_rank_comparison = small;
  if (small) {
    std::map<std::vector<int>, int> row_of;
    auto row_id = [&](const tree_mono& m) {
      auto it = row_of.find(m.encoding());
      if (it != row_of.end()) return it->second;
      int r = static_cast<int>(row_of.size());
      row_of.emplace(m.encoding(), r);
      return r;
    };
    echelon base;
    long rank = 0;
    for (const auto& d : cols) {
      std::map<int, rational> entries;
      for (const auto& [tm, c] : d) entries[row_id(tm)] = c;
      sparse_vec v(entries.begin(), entries.end());
      if (!v.empty() && base.add(std::move(v))) ++rank;
    }
    res.image_rank = rank;
    std::map<int, rational> entries;
    for (const auto& [tm, c] : cycle) entries[row_id(tm)] = c;
    sparse_vec v(entries.begin(), entries.end());
    res.extended_rank = rank + (base.add(std::move(v)) ? 1 : 0);
    res.certificate_rows = static_cast<long>(row_of.size());
    res.nonzero_in_homology = res.cycle_closed && res.extended_rank > res.image_rank;
  } else {
    // restricted rows: cycle support away from every column's support; the
    // restriction of the image matrix to these rows is zero, so rank 0 vs 1
    std::vector<tree_mono> free_rows;
    for (const auto& [m, c] : cycle)
      if (!image_support.count(m.encoding())) free_rows.push_back(m);
    res.certificate_rows = static_cast<long>(free_rows.size());
    res.image_rank = 0;
    res.extended_rank = free_rows.empty() ? 0 : 1;
    res.nonzero_in_homology = res.cycle_closed && !free_rows.empty();
    bool omega_free = false;
    for (const auto& m : free_rows)
      if (m == omega) omega_free = true;
    res.detail = omega_free ? "omega row certifies the class" : "certificate rows exclude omega";
  }
  return res;
}

}  // namespace operad
