#include "operad/dual.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace operad {

namespace {

const char* kPairingName = "slot-unshuffle: sgn(sigma) * (-1)^((slot-1)(inner arity-1))";

struct two_vertex_view {
  int slot = 0;
  unshuffle u;
};

two_vertex_view view_two_vertex(const generator_set& gens, const tree_mono& t) {
  const tree_node& r = t.root();
  two_vertex_view out;
  const tree_node* inner = nullptr;
  int pos = 0;
  for (size_t j = 0; j < r.kids.size(); ++j)
    if (!r.kids[j].is_leaf()) {
      inner = &r.kids[j];
      pos = static_cast<int>(j) + 1;
    }
  if (!inner || t.num_vertices() != 2) throw error("pairing needs a two-vertex monomial");
  out.slot = pos;
  out.u.slot = pos;
  out.u.inner = static_cast<int>(inner->kids.size());
  out.u.outer = static_cast<int>(r.kids.size());
  std::vector<int> inner_labels;
  for (const auto& k : inner->kids) inner_labels.push_back(k.leaf);
  std::sort(inner_labels.begin(), inner_labels.end());
  for (size_t k = 1; k < inner_labels.size(); ++k) out.u.values.push_back(inner_labels[k]);
  for (size_t j = pos; j < r.kids.size(); ++j)
    if (r.kids[j].is_leaf()) out.u.values.push_back(r.kids[j].leaf);
  return out;
}

generator_set dual_generators(const generator_set& gens) {
  std::vector<generator_info> dg;
  for (int i = 0; i < gens.size(); ++i) {
    generator_info gi = gens[i];
    gi.id = gens[i].id + "!";
    gi.parity = ((gens[i].arity - 2 - gens[i].parity) % 2 + 2) % 2;
    gi.weight = 1;
    dg.push_back(gi);
  }
  return generator_set(dg);
}

// Rebuilds a monomial over the dual generator set (same indices).
tree_mono transfer(const generator_set& dual, operad_kind kind, const tree_mono& t) {
  tree_node copy = t.root();
  return tree_mono(dual, kind, std::move(copy));
}

}  // namespace

int pairing_sign(const generator_set& gens, const tree_mono& m) {
  two_vertex_view v = view_two_vertex(gens, m);
  int s = v.u.sign();
  if (((v.slot - 1) * (v.u.inner - 1)) % 2) s = -s;
  return s;
}

dual_presentation quadratic_dual(const presentation& p, const order_spec& os) {
  for (const auto& r : p.relations)
    if (r.lead().num_vertices() != 2)
      throw error("quadratic_dual: relations must be quadratic (two vertices)");
  operad_kind kind = p.tree_kind();
  generator_set dual = dual_generators(p.gens);

  dual_presentation out;
  out.pairing_convention = kPairingName;
  out.pres.name = p.name + "!";
  out.pres.kind = p.kind == presentation_kind::nonsymmetric ? presentation_kind::nonsymmetric
                                                            : presentation_kind::shuffle;
  out.pres.gens = dual;

  // group relations by arity
  std::set<int> arities;
  std::map<int, std::vector<const opoly*>> by_arity;
  for (const auto& r : p.relations) {
    arities.insert(r.arity());
    by_arity[r.arity()].push_back(&r);
  }
  // all two-vertex arities of the generator set (slices with no relations
  // still contribute: their annihilator is everything)
  for (int i = 0; i < p.gens.size(); ++i)
    for (int j = 0; j < p.gens.size(); ++j)
      arities.insert(p.gens[i].arity + p.gens[j].arity - 1);

  for (int a : arities) {
    std::vector<tree_mono> monos = enumerate_tree_monomials(p.gens, kind, a, std::nullopt, os);
    std::vector<tree_mono> two;
    for (auto& m : monos)
      if (m.num_vertices() == 2) two.push_back(m);
    if (two.empty()) continue;
    std::map<std::vector<int>, int> idx;
    for (size_t j = 0; j < two.size(); ++j) idx[two[j].encoding()] = static_cast<int>(j);

    // annihilator of the relation rows under the twisted diagonal pairing:
    // kernel of the matrix with rows r_m * eps(m)
    column_solver solver;
    std::vector<int> eps(two.size());
    for (size_t j = 0; j < two.size(); ++j) eps[j] = pairing_sign(p.gens, two[j]);
    // columns indexed by dual-monomial j; the row space is the relation space
    // evaluated against that column's pairing entry
    auto it = by_arity.find(a);
    std::vector<const opoly*> rels = it == by_arity.end() ? std::vector<const opoly*>{} : it->second;
    for (size_t j = 0; j < two.size(); ++j) {
      sparse_vec col;
      for (size_t r = 0; r < rels.size(); ++r) {
        rational c(0);
        for (const auto& [m, v] : rels[r]->terms())
          if (idx.at(m.encoding()) == static_cast<int>(j)) c = v;
        if (c != 0) col.emplace_back(static_cast<int>(r), c * eps[j]);
      }
      solver.add_column(static_cast<int>(j), col);
    }
    for (const auto& k : solver.kernel()) {
      std::vector<std::pair<tree_mono, rational>> terms;
      for (const auto& [j, c] : k) terms.emplace_back(transfer(dual, kind, two[j]), c);
      out.pres.relations.emplace_back(os, std::move(terms));
    }
  }
  return out;
}

presentation suspend_parity(const presentation& p, const order_spec& os) {
  if (p.gens.size() == 0) throw error("suspend_parity: empty generator set");
  int n = p.gens[0].arity;
  for (int i = 1; i < p.gens.size(); ++i)
    if (p.gens[i].arity != n) throw error("suspend_parity supports single-generator-arity input");

  presentation out;
  out.name = "S(" + p.name + ")";
  out.kind = p.kind;
  std::vector<generator_info> gi;
  for (int i = 0; i < p.gens.size(); ++i) {
    generator_info g = p.gens[i];
    g.parity = (g.parity + n - 1) % 2;
    gi.push_back(g);
  }
  out.gens = generator_set(gi);

  if (!p.actions.empty()) {
    // twist each adjacent-transposition action by sgn = -1
    std::vector<std::vector<action_entry>> table = p.actions.table();
    for (auto& row : table)
      for (auto& e : row) e.sign = -e.sign;
    out.actions = symmetric_actions(out.gens, std::move(table));
  }

  for (const auto& r : p.relations) {
    std::vector<std::pair<tree_mono, rational>> terms;
    for (const auto& [m, c] : r.terms()) {
      rational v = c;
      if (m.num_vertices() == 2) {
        two_vertex_view tv = view_two_vertex(p.gens, m);
        if (((tv.slot - 1) * (n - 1)) % 2) v = -v;
      } else if (m.num_vertices() > 2) {
        throw error("suspend_parity supports relations of weight at most 2");
      }
      tree_node copy = m.root();
      terms.emplace_back(tree_mono(out.gens, p.tree_kind(), std::move(copy)), v);
    }
    out.relations.emplace_back(os, std::move(terms));
  }
  return out;
}

dual_presentation pure_homotopy(const groebner_data& g, int k) {
  veronese_evaluation ev = evaluate_veronese_square(g, k);
  operad_kind kind = g.kind();
  const order_spec& os = g.order();
  generator_set dual = dual_generators(ev.basis.ygens);

  dual_presentation out;
  out.pairing_convention = kPairingName;
  out.pres.name = g.source().name + "-pure[" + std::to_string(k) + "]";
  out.pres.kind = kind == operad_kind::nonsymmetric ? presentation_kind::nonsymmetric
                                                    : presentation_kind::shuffle;
  out.pres.gens = dual;

  // Relations are the rows of the transposed evaluation matrix, twisted by
  // the pairing: one candidate relation per weight-2k normal monomial of the
  // source; the independent ones survive.
  for (const auto& sl : ev.slices) {
    std::map<std::vector<int>, int> source_row;
    for (size_t r = 0; r < sl.source_basis.size(); ++r)
      source_row[sl.source_basis[r].encoding()] = static_cast<int>(r);
    std::vector<std::vector<std::pair<tree_mono, rational>>> rows(sl.source_basis.size());
    for (size_t j = 0; j < sl.ymonos.size(); ++j) {
      int eps = pairing_sign(ev.basis.ygens, sl.ymonos[j]);
      for (const auto& [m, c] : sl.images[j].terms()) {
        int r = source_row.at(m.encoding());
        rows[r].emplace_back(transfer(dual, kind, sl.ymonos[j]), c * rational(eps));
      }
    }
    // reduce to an independent set (deterministic: row order, then echelon)
    std::map<std::vector<int>, int> col_of;
    echelon ech;
    for (auto& trms : rows) {
      if (trms.empty()) continue;
      opoly cand(os, std::move(trms));
      if (cand.zero()) continue;
      std::map<int, rational> acc;
      for (const auto& [m, c] : cand.terms()) {
        auto it = col_of.find(m.encoding());
        int idx = it == col_of.end() ? (col_of[m.encoding()] = static_cast<int>(col_of.size()))
                                     : it->second;
        acc[idx] = c;
      }
      sparse_vec v(acc.begin(), acc.end());
      if (ech.add(std::move(v))) out.pres.relations.push_back(std::move(cand));
    }
  }
  return out;
}

}  // namespace operad
