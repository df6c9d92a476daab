#include "operad/presets.hpp"

#include <algorithm>
#include <sstream>

#include "operad/dual.hpp"
#include "operad/io.hpp"
#include "operad/rewrite.hpp"
#include "operad/veronese.hpp"

namespace operad {

namespace {

const char* kCom = R"(operad com
kind symmetric
generator b arity 2 degree 0 action sign(+1)
relation b(b(1,2),3) - b(1,b(2,3))
)";

const char* kLie = R"(operad lie
kind symmetric
generator b arity 2 degree 0 action sign(-1)
relation b(b(1,2),3) - b(b(1,3),2) - b(1,b(2,3))
)";

const char* kAss = R"(operad ass
kind symmetric
generator x1 arity 2 degree 0 action table s1=+x2
generator x2 arity 2 degree 0 action table s1=+x1
relation x1(x1(1,2),3) - x1(1,x1(2,3))
)";

const char* kPerm = R"(operad perm
kind symmetric
generator x1 arity 2 degree 0 action table s1=+x2
generator x2 arity 2 degree 0 action table s1=+x1
relation x1(x1(1,2),3) - x1(1,x1(2,3))
relation x1(x1(1,2),3) - x1(x1(1,3),2)
)";

const char* kLeib = R"(operad leib
kind symmetric
generator x1 arity 2 degree 0 action table s1=+x2
generator x2 arity 2 degree 0 action table s1=+x1
relation x1(x1(1,2),3) - x1(x1(1,3),2) - x1(1,x1(2,3))
)";

const char* kPreLie = R"(operad prelie
kind symmetric
generator x1 arity 2 degree 0 action table s1=+x2
generator x2 arity 2 degree 0 action table s1=+x1
relation x1(x1(1,2),3) - x1(1,x1(2,3)) - x1(x1(1,3),2) + x1(1,x2(2,3))
)";

const char* kJord = R"(operad jord
kind symmetric
generator b arity 2 degree 0 action sign(+1)
relation b(b(b(1,2),3),4) + b(b(b(1,4),3),2) + b(b(b(2,4),3),1) - b(b(1,2),b(3,4)) - b(b(1,3),b(2,4)) - b(b(1,4),b(2,3))
)";

// regular S3 action on t1..t6 = words 123,132,213,231,312,321 with
// t_sigma . s_j = t_{s_j sigma} (the slot transposition swaps the values
// j, j+1 in the word)
const char* kRegular3 =
    "generator %1 arity 3 degree 0 action table s1=+%3 s2=+%2\n"
    "generator %2 arity 3 degree 0 action table s1=+%4 s2=+%1\n"
    "generator %3 arity 3 degree 0 action table s1=+%1 s2=+%5\n"
    "generator %4 arity 3 degree 0 action table s1=+%2 s2=+%6\n"
    "generator %5 arity 3 degree 0 action table s1=+%6 s2=+%3\n"
    "generator %6 arity 3 degree 0 action table s1=+%5 s2=+%4\n";

std::string regular3(const std::string& stem) {
  std::string out = kRegular3;
  for (int k = 6; k >= 1; --k) {
    std::string pat = "%" + std::to_string(k);
    std::string rep = stem + std::to_string(k);
    size_t pos = 0;
    while ((pos = out.find(pat, pos)) != std::string::npos) {
      out.replace(pos, pat.size(), rep);
      pos += rep.size();
    }
  }
  return out;
}

std::string lts_text() {
  std::string s = "operad lts\nkind symmetric\n";
  s += regular3("t");
  s += "relation t1(1,2,3) + t1(2,1,3)\n";
  s += "relation t1(1,2,3) + t1(2,3,1) + t1(3,1,2)\n";
  s +=
      "relation t1(1,2,t1(3,4,5)) - t1(t1(1,2,3),4,5) - t1(3,t1(1,2,4),5) - "
      "t1(3,4,t1(1,2,5))\n";
  return s;
}

std::string jts_text() {
  std::string s = "operad jts\nkind symmetric\n";
  s += regular3("u");
  s += "relation u1(1,2,3) - u1(3,2,1)\n";
  s +=
      "relation u1(1,2,u1(3,4,5)) - u1(u1(1,2,3),4,5) + u1(3,u1(2,1,4),5) - "
      "u1(3,4,u1(1,2,5))\n";
  return s;
}

std::string tass_text() {
  std::string s = "operad tass\nkind symmetric\n";
  s += regular3("s");
  s += "relation s1(s1(1,2,3),4,5) - s1(1,s1(2,3,4),5)\n";
  s += "relation s1(1,s1(2,3,4),5) - s1(1,2,s1(3,4,5))\n";
  return s;
}

const char* kExample1 = R"(operad example1
kind nonsymmetric
generator w arity 2 degree 0
relation w(1,w(2,w(3,4)))
)";

// declared so that mu > rho > nu in the letterwise order
const char* kExample2 = R"(operad example2
kind nonsymmetric
generator nu arity 2 degree 0
generator rho arity 2 degree 0
generator mu arity 2 degree 0
relation mu(nu(1,2),3) - rho(1,nu(2,3))
relation rho(nu(1,2),3)
relation mu(mu(1,2),3)
relation mu(1,mu(2,3))
relation mu(rho(1,2),3)
relation mu(1,rho(2,3))
relation rho(rho(1,2),3)
relation rho(1,rho(2,3))
relation rho(mu(1,2),3)
relation rho(1,mu(2,3))
relation nu(mu(1,2),3)
relation nu(1,mu(2,3))
relation nu(rho(1,2),3)
relation nu(1,rho(2,3))
)";

tree_node leaf(int j) {
  tree_node n;
  n.leaf = j;
  return n;
}

tree_node vertex_tree(int gen, std::vector<tree_node> kids) {
  tree_node n;
  n.gen = gen;
  n.kids = std::move(kids);
  return n;
}

// m o_i m for the single generator of arity n
tree_node circ_tree(int n, int i) {
  std::vector<tree_node> outer;
  for (int j = 1; j < i; ++j) outer.push_back(leaf(j));
  std::vector<tree_node> inner;
  for (int j = i; j < i + n; ++j) inner.push_back(leaf(j));
  outer.push_back(vertex_tree(0, std::move(inner)));
  for (int j = i + n; j <= 2 * n - 1; ++j) outer.push_back(leaf(j));
  return vertex_tree(0, std::move(outer));
}

presentation tcom_preset(int n, int d, const order_spec& os) {
  if (n < 2) throw error("tcom needs arity n >= 2");
  presentation p;
  p.name = "tcom:" + std::to_string(n) + ":" + std::to_string(d);
  p.kind = presentation_kind::symmetric_input;
  generator_info gi;
  gi.id = "m";
  gi.arity = n;
  gi.parity = ((d % 2) + 2) % 2;
  p.gens = generator_set({gi});
  std::vector<std::vector<action_entry>> table = {
      std::vector<action_entry>(n - 1, action_entry{0, 1})};
  p.actions = symmetric_actions(p.gens, std::move(table));
  for (int i = 2; i <= n; ++i) {
    signed_tree a = canonicalize(p.gens, p.actions, operad_kind::shuffle, circ_tree(n, 1));
    signed_tree b = canonicalize(p.gens, p.actions, operad_kind::shuffle, circ_tree(n, i));
    p.relations.push_back(opoly(
        os, {{a.mono, rational(a.sign)}, {b.mono, rational(-b.sign)}}));
  }
  return p;
}

presentation nlie_preset(int n, int d, bool signed_sum, const order_spec& os) {
  if (n < 2) throw error("n-Lie needs arity n >= 2");
  presentation p;
  p.name = (signed_sum ? "nlie:" : "tlie:") + std::to_string(n) + ":" + std::to_string(d);
  p.kind = presentation_kind::symmetric_input;
  generator_info gi;
  gi.id = "l";
  gi.arity = n;
  gi.parity = ((d % 2) + 2) % 2;
  p.gens = generator_set({gi});
  std::vector<std::vector<action_entry>> table = {
      std::vector<action_entry>(n - 1, action_entry{0, signed_sum ? -1 : 1})};
  p.actions = symmetric_actions(p.gens, std::move(table));

  // sum over (n, n-1)-unshuffles delta of sgn(delta) (l o_1 l) . delta
  opoly base(os, {{canonicalize(p.gens, p.actions, operad_kind::shuffle, circ_tree(n, 1)).mono,
                   rational(1)}});
  int N = 2 * n - 1;
  std::vector<int> pick(n);
  std::vector<std::pair<tree_mono, rational>> terms;
  std::function<void(int, int)> choose = [&](int from, int got) {
    if (got == n) {
      std::vector<int> perm(N);
      std::vector<bool> used(N + 1, false);
      for (int j = 0; j < n; ++j) {
        perm[j] = pick[j];
        used[pick[j]] = true;
      }
      int at = n;
      int inversions = 0;
      for (int v = 1; v <= N; ++v)
        if (!used[v]) perm[at++] = v;
      for (int x = 0; x < N; ++x)
        for (int y = x + 1; y < N; ++y)
          if (perm[x] > perm[y]) ++inversions;
      rational coef(1);
      if (signed_sum && inversions % 2) coef = -1;
      opoly moved = act_on_leaves(p.gens, p.actions, os, base, perm);
      for (const auto& [m, c] : moved.terms()) terms.emplace_back(m, c * coef);
      return;
    }
    for (int v = from; v <= N; ++v) {
      pick[got] = v;
      choose(v + 1, got + 1);
    }
  };
  choose(1, 0);
  opoly rel(os, std::move(terms));
  if (rel.zero()) throw error("n-Lie relation collapsed to zero");
  p.relations.push_back(rel);
  return p;
}

presentation cominf3_preset(const order_spec& os) {
  presentation lie = parse_presentation(kLie, os);
  groebner_data g = buchberger(lie, os, bound_for_arity(lie.gens, 5));
  presentation q = quadratic_veronese(g, 2);
  dual_presentation d = quadratic_dual(q, os);
  d.pres.name = "cominf3";
  return d.pres;
}

std::vector<std::string> split_params(const std::string& name) {
  std::vector<std::string> parts;
  std::stringstream ss(name);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  return parts;
}

}  // namespace

presentation preset(const std::string& name, const order_spec& os) {
  auto parts = split_params(name);
  const std::string& head = parts[0];
  if (parts.size() == 1) {
    if (head == "com") return parse_presentation(kCom, os);
    if (head == "lie") return parse_presentation(kLie, os);
    if (head == "ass") return parse_presentation(kAss, os);
    if (head == "perm") return parse_presentation(kPerm, os);
    if (head == "leib") return parse_presentation(kLeib, os);
    if (head == "prelie") return parse_presentation(kPreLie, os);
    if (head == "jord") return parse_presentation(kJord, os);
    if (head == "lts") return parse_presentation(lts_text(), os);
    if (head == "jts") return parse_presentation(jts_text(), os);
    if (head == "tass") return parse_presentation(tass_text(), os);
    if (head == "tcomts") return tcom_preset(3, 0, os);
    if (head == "example1") return parse_presentation(kExample1, os);
    if (head == "example2") return parse_presentation(kExample2, os);
    if (head == "cominf3") return cominf3_preset(os);
  } else if (parts.size() == 3) {
    int n = std::stoi(parts[1]);
    int d = std::stoi(parts[2]);
    if (head == "tcom") return tcom_preset(n, d, os);
    if (head == "nlie") return nlie_preset(n, d, true, os);
    if (head == "tlie") return nlie_preset(n, d, false, os);
    if (head == "stcom") {
      presentation t = tcom_preset(n, d, os);
      presentation s = suspend_parity(t, os);
      s.name = "stcom:" + std::to_string(n) + ":" + std::to_string(d);
      return s;
    }
  }
  throw error("unknown preset " + name);
}

std::vector<std::string> preset_names() {
  return {"com",  "lie",      "ass",      "perm",     "leib",     "prelie",
          "jord", "lts",      "jts",      "tass",     "tcomts",   "example1",
          "example2", "cominf3", "tcom:n:d", "nlie:n:d", "tlie:n:d", "stcom:n:d"};
}

known_dims_entry known_dims(const std::string& name) {
  auto mk = [](std::vector<long> v, const std::string& prov) {
    known_dims_entry e;
    for (long x : v) e.dims.emplace_back(x);
    e.provenance = prov;
    return e;
  };
  if (name == "lie")
    return mk({1, 1, 2, 6, 24, 120, 720, 5040}, "(n-1)!, classical");
  if (name == "com") return mk({1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, "dim Com(n) = 1");
  if (name == "ass") return mk({1, 2, 6, 24, 120, 720}, "n!, classical");
  if (name == "perm") return mk({1, 2, 3, 4, 5, 6, 7}, "dim Perm(n) = n");
  if (name == "leib") return mk({1, 2, 6, 24, 120, 720, 5040}, "n!, di-Lie");
  if (name == "prelie") return mk({1, 2, 9, 64, 625, 7776}, "n^(n-1), rooted trees");
  if (name == "lts")
    return mk({1, 0, 2, 0, 24, 0, 720, 0, 40320}, "(2n-2)! at odd arities");
  if (name == "cominf3")
    return mk({1, 0, 2, 0, 16, 0, 272, 0, 7936}, "tangent numbers 2^(2n)(2^(2n)-1)|B_2n|/(2n)");
  if (name == "linf3")
    return mk({1, 0, 1, 0, 9, 0, 225, 0, 11025}, "((2n-3)!!)^2 at odd arities");
  if (name == "tcom:2:1") return mk({1, 1, 1, 0, 0, 0, 0, 0, 0, 0}, "one-dim at k = 1, n, 2n-1");
  if (name == "tcom:3:1") return mk({1, 0, 1, 0, 1, 0, 0, 0, 0, 0}, "one-dim at k = 1, n, 2n-1");
  if (name == "tcom:4:1") return mk({1, 0, 0, 1, 0, 0, 1, 0, 0, 0}, "one-dim at k = 1, n, 2n-1");
  if (name == "tcom:2:0") return mk({1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, "one-dim at k = 1 mod n-1");
  if (name == "tcom:3:0") return mk({1, 0, 1, 0, 1, 0, 1, 0, 1, 0}, "one-dim at k = 1 mod n-1");
  if (name == "example2") return mk({1, 3, 4}, "weight-graded normal monomial count");
  throw error("no known dims for " + name);
}

std::vector<std::string> known_dims_names() {
  return {"lie",     "com",      "ass",      "perm",     "leib",     "prelie",
          "lts",     "cominf3",  "linf3",    "tcom:2:1", "tcom:3:1", "tcom:4:1",
          "tcom:2:0", "tcom:3:0", "example2"};
}

std::vector<opoly> bremner_madariaga_prelie(const presentation& prelie, const order_spec& os) {
  const generator_set& gs = prelie.gens;
  auto M = [&](tree_node a, tree_node b) {
    return vertex_tree(gs.require("x1"), {std::move(a), std::move(b)});
  };
  auto b1 = [&](tree_node a, tree_node b, tree_node c) {
    return M(M(std::move(a), std::move(b)), std::move(c));
  };
  auto b2 = [&](tree_node a, tree_node b, tree_node c) {
    return M(std::move(a), M(std::move(b), std::move(c)));
  };
  auto L = leaf;

  struct term {
    int sign;
    tree_node node;
  };
  auto build = [&](std::vector<term> terms) {
    std::vector<std::pair<tree_mono, rational>> out;
    for (auto& t : terms) {
      signed_tree st = canonicalize(gs, prelie.actions, operad_kind::shuffle, std::move(t.node));
      out.emplace_back(st.mono, rational(t.sign * st.sign));
    }
    return opoly(os, std::move(out));
  };

  std::vector<opoly> rels;
  // [1,2,3]_1 - [1,2,3]_2 - [1,3,2]_1 + [1,3,2]_2
  rels.push_back(build({{1, b1(L(1), L(2), L(3))},
                        {-1, b2(L(1), L(2), L(3))},
                        {-1, b1(L(1), L(3), L(2))},
                        {1, b2(L(1), L(3), L(2))}}));
  rels.push_back(build({{1, b2(b1(L(1), L(2), L(3)), L(4), L(5))},
                        {-1, b1(b2(L(1), L(4), L(5)), L(2), L(3))},
                        {1, b1(L(1), b1(L(4), L(5), L(2)), L(3))},
                        {-1, b1(L(1), b2(L(2), L(4), L(5)), L(3))},
                        {1, b1(L(1), L(2), b1(L(4), L(5), L(3)))},
                        {-1, b1(L(1), L(2), b2(L(3), L(4), L(5)))}}));
  rels.push_back(build({{1, b1(b1(L(1), L(2), L(3)), L(4), L(5))},
                        {-1, b1(b1(L(1), L(4), L(2)), L(3), L(5))},
                        {1, b1(b1(L(1), L(4), L(3)), L(2), L(5))},
                        {-1, b1(b1(L(1), L(3), L(2)), L(4), L(5))},
                        {-1, b1(L(1), b1(L(2), L(3), L(4)), L(5))},
                        {1, b1(L(1), b1(L(4), L(2), L(3)), L(5))},
                        {-1, b1(L(1), b1(L(4), L(3), L(2)), L(5))},
                        {1, b1(L(1), b1(L(3), L(2), L(4)), L(5))}}));
  rels.push_back(build({{1, b2(b1(L(1), L(2), L(3)), L(4), L(5))},
                        {-1, b1(b2(L(1), L(4), L(5)), L(2), L(3))},
                        {1, b2(b2(L(1), L(4), L(5)), L(2), L(3))},
                        {-1, b2(b2(L(1), L(2), L(3)), L(4), L(5))},
                        {1, b1(L(1), b1(L(4), L(5), L(2)), L(3))},
                        {1, b1(L(1), b1(L(4), L(5), L(3)), L(2))},
                        {-1, b1(L(1), b1(L(2), L(3), L(5)), L(4))},
                        {-1, b2(L(1), b1(L(4), L(5), L(3)), L(2))},
                        {1, b2(L(1), b1(L(2), L(3), L(5)), L(4))},
                        {-1, b1(L(1), b2(L(2), L(4), L(5)), L(3))},
                        {-1, b1(L(1), b2(L(3), L(4), L(5)), L(2))},
                        {-1, b2(L(1), b2(L(4), L(2), L(3)), L(5))},
                        {1, b2(L(1), b2(L(2), L(4), L(5)), L(3))},
                        {1, b2(L(1), b2(L(3), L(4), L(5)), L(2))},
                        {1, b1(L(1), L(4), b1(L(2), L(3), L(5)))},
                        {-1, b2(L(1), L(4), b2(L(5), L(2), L(3)))}}));
  return rels;
}

namespace {

unshuffle read_two_vertex(const tree_mono& m, const tree_node*& inner_out, int& outer_gen) {
  const tree_node& r = m.root();
  int pos = 0;
  const tree_node* inner = nullptr;
  for (size_t t = 0; t < r.kids.size(); ++t)
    if (!r.kids[t].is_leaf()) {
      inner = &r.kids[t];
      pos = static_cast<int>(t) + 1;
    }
  if (!inner) throw error("expected a two-vertex monomial");
  unshuffle u;
  u.slot = pos;
  u.inner = static_cast<int>(inner->kids.size());
  u.outer = static_cast<int>(r.kids.size());
  std::vector<int> labs;
  for (const auto& k : inner->kids) labs.push_back(k.leaf);
  std::sort(labs.begin(), labs.end());
  for (size_t t = 1; t < labs.size(); ++t) u.values.push_back(labs[t]);
  for (size_t t = pos; t < r.kids.size(); ++t)
    if (r.kids[t].is_leaf()) u.values.push_back(r.kids[t].leaf);
  inner_out = inner;
  outer_gen = r.gen;
  return u;
}

}  // namespace

bool triple_system_span_matches(const presentation& ts, const groebner_data& source_gb, int d,
                                int arity, const order_spec& os) {
  presentation qv = quadratic_veronese(source_gb, d);
  veronese_basis y = veronese_generators(source_gb, d);
  std::vector<opoly> embed = triple_system_embedding(ts, source_gb.pres(), os);
  std::map<std::vector<int>, int> yindex;
  for (size_t j = 0; j < y.elements.size(); ++j)
    yindex[y.elements[j].encoding()] = static_cast<int>(j);
  std::vector<std::vector<rational>> phi;
  for (auto& e : embed) {
    opoly nf = normal_form(source_gb, e);
    std::vector<rational> row(y.elements.size(), rational(0));
    for (const auto& [m, c] : nf.terms()) row[yindex.at(m.encoding())] = c;
    phi.push_back(std::move(row));
  }
  presentation ts_shuffle = symmetric_to_shuffle(ts, os);
  std::map<std::vector<int>, int> col;
  auto coords = [&](const opoly& p) {
    std::map<int, rational> acc;
    for (const auto& [m, c] : p.terms()) {
      auto it = col.find(m.encoding());
      int idx = it == col.end() ? (col[m.encoding()] = static_cast<int>(col.size())) : it->second;
      acc[idx] = c;
    }
    return sparse_vec(acc.begin(), acc.end());
  };
  echelon ets, eqv;
  for (const auto& rel : ts_shuffle.relations) {
    if (rel.arity() != arity || rel.lead().num_vertices() != 2) continue;
    std::vector<std::pair<tree_mono, rational>> out;
    for (const auto& [m, c] : rel.terms()) {
      const tree_node* inner = nullptr;
      int outer_gen = -1;
      unshuffle u = read_two_vertex(m, inner, outer_gen);
      for (size_t a = 0; a < y.elements.size(); ++a) {
        if (phi[outer_gen][a] == 0) continue;
        for (size_t b = 0; b < y.elements.size(); ++b) {
          if (phi[inner->gen][b] == 0) continue;
          signed_tree st = compose(y.ygens, operad_kind::shuffle,
                                   tree_mono::vertex(y.ygens, operad_kind::shuffle, (int)a), u,
                                   tree_mono::vertex(y.ygens, operad_kind::shuffle, (int)b));
          out.emplace_back(st.mono, c * phi[outer_gen][a] * phi[inner->gen][b] * st.sign);
        }
      }
    }
    opoly img(os, std::move(out));
    if (!img.zero()) ets.add(coords(img));
  }
  for (const auto& rel : qv.relations) {
    if (rel.arity() != arity) continue;
    eqv.add(coords(rel));
  }
  if (ets.rank() != eqv.rank()) return false;
  for (const auto& rel : qv.relations) {
    if (rel.arity() != arity) continue;
    if (!ets.reduce(coords(rel)).empty()) return false;
  }
  return true;
}

bool triple_system_relations_vanish(const presentation& ts, const groebner_data& source_gb,
                                    const order_spec& os) {
  std::vector<opoly> embed = triple_system_embedding(ts, source_gb.pres(), os);
  presentation ts_shuffle = symmetric_to_shuffle(ts, os);
  for (const auto& rel : ts_shuffle.relations) {
    std::vector<std::pair<tree_mono, rational>> terms;
    bool weight_two = rel.lead().num_vertices() == 2;
    for (const auto& [m, c] : rel.terms()) {
      if (!weight_two) {
        opoly img = embed[m.root().gen].scaled(c);
        for (const auto& [mm, cc] : img.terms()) terms.emplace_back(mm, cc);
        continue;
      }
      const tree_node* inner = nullptr;
      int outer_gen = -1;
      unshuffle u = read_two_vertex(m, inner, outer_gen);
      opoly img = substitute(source_gb.gens(), operad_kind::shuffle, os, embed[outer_gen], u,
                             embed[inner->gen]);
      for (const auto& [mm, cc] : img.terms()) terms.emplace_back(mm, cc * c);
    }
    opoly total(os, std::move(terms));
    if (!normal_form(source_gb, total).zero()) return false;
  }
  return true;
}

std::vector<opoly> triple_system_embedding(const presentation& ts, const presentation& source,
                                           const order_spec& os) {
  // base expression of the first generator inside the source
  std::string base_text;
  if (ts.name == "lts") base_text = "b(b(1,2),3)";
  else if (ts.name == "jts") base_text = "b(b(1,2),3) + b(1,b(2,3)) - b(2,b(1,3))";
  else if (ts.name == "tass") base_text = "x1(x1(1,2),3)";
  else if (ts.name.rfind("tcom", 0) == 0) base_text = "b(b(1,2),3)";
  else throw error("no embedding recipe for " + ts.name);
  opoly base = parse_polynomial(base_text, source, os);

  static const int words[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
  std::vector<opoly> out;
  if (ts.gens.size() == 1) {
    out.push_back(base);
    return out;
  }
  if (ts.gens.size() != 6) throw error("unexpected triple-system generator count");
  for (int k = 0; k < 6; ++k) {
    std::vector<int> perm = {words[k][0], words[k][1], words[k][2]};
    out.push_back(act_on_leaves(source.gens, source.actions, os, base, perm));
  }
  return out;
}

}  // namespace operad
