#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "operad/io.hpp"
#include "operad/presets.hpp"
#include "operad/rewrite.hpp"
#include "operad/veronese.hpp"

using namespace operad;

namespace {

groebner_data gb(const std::string& name, int max_arity, const order_spec& os = order_spec()) {
  presentation p = preset(name, os);
  return buchberger(p, os, bound_for_arity(p.gens, max_arity));
}

}  // namespace

TEST_CASE("preset dims match the known tables") {
  order_spec os;
  struct probe {
    const char* name;
    int max_arity;
  };
  for (const auto& [name, max_arity] : {probe{"lie", 6}, probe{"com", 7}, probe{"ass", 5},
                                        probe{"perm", 6}, probe{"leib", 5}, probe{"prelie", 5},
                                        probe{"lts", 7}, probe{"tcom:2:1", 7}, probe{"tcom:3:1", 7},
                                        probe{"tcom:2:0", 7}, probe{"tcom:3:0", 7},
                                        probe{"example2", 3}}) {
    groebner_data g = gb(name, max_arity);
    known_dims_entry kd = known_dims(name);
    std::vector<long> got = dims(g, max_arity);
    for (int a = 1; a <= max_arity; ++a) {
      if (a - 1 < static_cast<int>(kd.dims.size()) && kd.dims[a - 1].has_value())
        CHECK_MESSAGE(got[a - 1] == *kd.dims[a - 1], name, " arity ", a);
    }
  }
}

TEST_CASE("LTS via the classical axioms has the Lie-triple dims") {
  groebner_data g = gb("lts", 5);
  std::vector<long> d = dims(g, 5);
  CHECK(d == std::vector<long>{1, 0, 2, 0, 24});
}

TEST_CASE("the classical triple systems match the computed Veronese squares") {
  order_spec os;
  struct pair {
    const char* ts;
    const char* source;
  };
  for (const auto& [ts_name, source_name] : {pair{"lts", "lie"}, pair{"tcomts", "com"},
                                             pair{"tass", "ass"}}) {
    presentation ts = preset(ts_name, os);
    presentation source = preset(source_name, os);
    groebner_data gsrc = gb(source_name, 5);
    presentation qv = quadratic_veronese(gsrc, 2);
    veronese_basis y = veronese_generators(gsrc, 2);

    // express each TS generator in the Y basis via the normal form of its
    // defining expansion
    std::vector<opoly> embed = triple_system_embedding(ts, gsrc.pres(), os);
    std::map<std::vector<int>, int> yindex;
    for (size_t j = 0; j < y.elements.size(); ++j)
      yindex[y.elements[j].encoding()] = static_cast<int>(j);
    std::vector<std::vector<rational>> phi;  // phi[k][j]: TS gen k = sum over y_j
    for (auto& e : embed) {
      opoly nf = normal_form(gsrc, e);
      std::vector<rational> row(y.elements.size(), rational(0));
      for (const auto& [m, c] : nf.terms()) row[yindex.at(m.encoding())] = c;
      phi.push_back(std::move(row));
    }

    // push the TS relations through phi-hat into T(Y)_2 and compare spans at
    // the arity-5 slice
    presentation ts_shuffle = symmetric_to_shuffle(ts, os);
    auto expand = [&](const opoly& rel) {
      std::vector<std::pair<tree_mono, rational>> out;
      for (const auto& [m, c] : rel.terms()) {
        // two-vertex tree over TS generators: root gen a, inner gen b
        const tree_node& r = m.root();
        int pos = 0;
        const tree_node* inner = nullptr;
        for (size_t t = 0; t < r.kids.size(); ++t)
          if (!r.kids[t].is_leaf()) {
            inner = &r.kids[t];
            pos = static_cast<int>(t) + 1;
          }
        REQUIRE(inner != nullptr);
        // reconstruct the unshuffle of the two-vertex tree
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
        for (size_t a = 0; a < y.elements.size(); ++a) {
          if (phi[r.gen][a] == 0) continue;
          for (size_t b = 0; b < y.elements.size(); ++b) {
            if (phi[inner->gen][b] == 0) continue;
            signed_tree st =
                compose(y.ygens, operad_kind::shuffle, tree_mono::vertex(y.ygens, operad_kind::shuffle, (int)a),
                        u, tree_mono::vertex(y.ygens, operad_kind::shuffle, (int)b));
            out.emplace_back(st.mono, c * phi[r.gen][a] * phi[inner->gen][b] * st.sign);
          }
        }
      }
      return opoly(os, std::move(out));
    };

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
      if (rel.arity() != 5 || rel.lead().num_vertices() != 2) continue;
      opoly img = expand(rel);
      if (!img.zero()) ets.add(coords(img));
    }
    for (const auto& rel : qv.relations) {
      if (rel.arity() != 5) continue;
      eqv.add(coords(rel));
    }
    CHECK_MESSAGE(ets.rank() == eqv.rank(), ts_name);
    for (const auto& rel : qv.relations) {
      if (rel.arity() != 5) continue;
      CHECK(ets.reduce(coords(rel)).empty());
    }
  }
}

TEST_CASE("JTS relations evaluate to zero in the Jordan operad") {
  order_spec os;
  groebner_data jord = gb("jord", 5);
  presentation jts = preset("jts", os);
  std::vector<opoly> embed = triple_system_embedding(jts, jord.pres(), os);

  presentation jts_shuffle = symmetric_to_shuffle(jts, os);
  int checked = 0;
  for (const auto& rel : jts_shuffle.relations) {
    // evaluate the relation inside Jordan by substituting the embeddings
    std::vector<std::pair<tree_mono, rational>> terms;
    bool weight_two = rel.lead().num_vertices() == 2;
    for (const auto& [m, c] : rel.terms()) {
      const tree_node& r = m.root();
      if (!weight_two) {
        // weight-1 symmetry relations: direct combination of embeddings
        opoly img = embed[r.gen].scaled(c);
        for (const auto& [mm, cc] : img.terms()) terms.emplace_back(mm, cc);
        continue;
      }
      int pos = 0;
      const tree_node* inner = nullptr;
      for (size_t t = 0; t < r.kids.size(); ++t)
        if (!r.kids[t].is_leaf()) {
          inner = &r.kids[t];
          pos = static_cast<int>(t) + 1;
        }
      unshuffle u;
      u.slot = pos;
      u.inner = 3;
      u.outer = 3;
      std::vector<int> labs;
      for (const auto& k : inner->kids) labs.push_back(k.leaf);
      std::sort(labs.begin(), labs.end());
      for (size_t t = 1; t < labs.size(); ++t) u.values.push_back(labs[t]);
      for (size_t t = pos; t < r.kids.size(); ++t)
        if (r.kids[t].is_leaf()) u.values.push_back(r.kids[t].leaf);
      opoly img = substitute(jord.gens(), operad_kind::shuffle, os, embed[r.gen], u,
                             embed[inner->gen]);
      for (const auto& [mm, cc] : img.terms()) terms.emplace_back(mm, cc * c);
    }
    opoly total(os, std::move(terms));
    CHECK(normal_form(jord, total).zero());
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("Bremner-Madariaga pre-Lie relations vanish in pre-Lie") {
  order_spec os;
  groebner_data prelie = gb("prelie", 5);
  std::vector<opoly> rels = bremner_madariaga_prelie(prelie.pres(), os);
  REQUIRE(rels.size() == 4);
  for (const auto& r : rels) CHECK(normal_form(prelie, r).zero());
}

TEST_CASE("leibniz dims are the di-Lie dims") {
  groebner_data lie = gb("lie", 6);
  groebner_data leib = gb("leib", 6);
  CHECK(dims(leib, 6) == di_dims(dims(lie, 6)));
}

TEST_CASE("cominf3 preset has the tangent dims") {
  order_spec os;
  groebner_data g = gb("cominf3", 7);
  std::vector<long> d = dims(g, 7);
  known_dims_entry kd = known_dims("cominf3");
  for (int a = 1; a <= 7; ++a) CHECK(d[a - 1] == *kd.dims[a - 1]);
}
