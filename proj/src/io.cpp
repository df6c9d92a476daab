#include "operad/io.hpp"

#include <algorithm>
#include <sstream>

namespace operad {

namespace {

struct cursor {
  const std::string& s;
  int line;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  int col() const { return static_cast<int>(pos) + 1; }
  [[noreturn]] void fail(const std::string& what) const { throw parse_error(line, col(), what); }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '!' || c == '@' ||
           c == '.' || c == '[' || c == ']';
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && ident_char(s[pos])) ++pos;
    if (pos == start) fail("expected an identifier");
    return s.substr(start, pos - start);
  }

  long integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected an integer");
    return std::stol(s.substr(start, pos - start));
  }

  rational rational_number() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    rational r(s.substr(start, pos - start));
    r.canonicalize();
    return r;
  }
};

tree_node parse_term(cursor& c, const generator_set& gs) {
  c.skip_ws();
  if (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
    tree_node leaf;
    leaf.leaf = static_cast<int>(c.integer());
    return leaf;
  }
  std::string id = c.ident();
  int g = gs.index_of(id);
  if (g < 0) c.fail("unknown generator " + id);
  tree_node n;
  n.gen = g;
  c.expect('(');
  for (int k = 0; k < gs[g].arity; ++k) {
    if (k) c.expect(',');
    n.kids.push_back(parse_term(c, gs));
  }
  c.expect(')');
  return n;
}

opoly parse_relation_line(cursor& c, const generator_set& gs, const symmetric_actions& acts,
                          operad_kind kind, const order_spec& os) {
  std::vector<std::pair<tree_mono, rational>> terms;
  bool first = true;
  while (!c.done()) {
    rational coef(1);
    if (first) {
      if (c.eat('-')) coef = -1;
      else c.eat('+');
    } else {
      if (c.eat('-')) coef = -1;
      else if (c.eat('+')) coef = 1;
      else c.fail("expected '+' or '-'");
    }
    first = false;
    c.skip_ws();
    // optional rational coefficient followed by '*'
    size_t save = c.pos;
    if (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
      size_t probe = c.pos;
      while (probe < c.s.size() &&
             (std::isdigit(static_cast<unsigned char>(c.s[probe])) || c.s[probe] == '/'))
        ++probe;
      size_t after = probe;
      while (after < c.s.size() && (c.s[after] == ' ' || c.s[after] == '\t')) ++after;
      if (after < c.s.size() && c.s[after] == '*') {
        coef *= c.rational_number();
        c.expect('*');
      } else {
        c.pos = save;  // a bare leaf would be invalid at top level anyway
      }
    }
    tree_node raw = parse_term(c, gs);
    if (raw.is_leaf()) c.fail("a relation term must be a tree, not a bare leaf");
    signed_tree st = canonicalize(gs, acts, kind, std::move(raw));
    terms.emplace_back(st.mono, coef * st.sign);
  }
  if (terms.empty()) c.fail("empty relation");
  return opoly(os, std::move(terms));
}

}  // namespace

presentation parse_presentation(const std::string& text, const order_spec& os) {
  presentation p;
  std::vector<generator_info> gens;
  struct pending_action {
    int line;
    std::string spec;  // raw text after "action"
  };
  std::vector<pending_action> actions;
  std::vector<std::pair<int, std::string>> relation_lines;
  bool have_kind = false;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    cursor c{line, lineno};
    if (c.done()) continue;
    std::string word = c.ident();
    if (word == "operad") {
      p.name = c.ident();
    } else if (word == "kind") {
      std::string k = c.ident();
      if (k == "shuffle") p.kind = presentation_kind::shuffle;
      else if (k == "nonsymmetric") p.kind = presentation_kind::nonsymmetric;
      else if (k == "symmetric") p.kind = presentation_kind::symmetric_input;
      else c.fail("unknown kind " + k);
      have_kind = true;
    } else if (word == "generator") {
      generator_info gi;
      gi.id = c.ident();
      std::string spec;
      while (!c.done()) {
        std::string key = c.ident();
        if (key == "arity") gi.arity = static_cast<int>(c.integer());
        else if (key == "degree") gi.parity = static_cast<int>(c.integer()) % 2;
        else if (key == "weight") gi.weight = static_cast<int>(c.integer());
        else if (key == "action") {
          spec = c.s.substr(c.pos);
          c.pos = c.s.size();
        } else c.fail("unknown generator attribute " + key);
      }
      gens.push_back(gi);
      actions.push_back({lineno, spec});
    } else if (word == "relation") {
      relation_lines.emplace_back(lineno, c.s.substr(c.pos));
    } else {
      c.fail("unknown directive " + word);
    }
  }
  if (!have_kind) throw parse_error(1, 1, "missing kind line");
  p.gens = generator_set(gens);

  // actions
  bool any_action = false;
  for (const auto& a : actions)
    if (!a.spec.empty()) any_action = true;
  if (any_action || p.kind == presentation_kind::symmetric_input) {
    std::vector<std::vector<action_entry>> table(gens.size());
    for (size_t g = 0; g < gens.size(); ++g) {
      int k = gens[g].arity;
      table[g].assign(std::max(0, k - 1), action_entry{static_cast<int>(g), 1});
      const std::string& spec = actions[g].spec;
      if (spec.empty()) {
        if (p.kind == presentation_kind::symmetric_input && k >= 2)
          throw parse_error(actions[g].line, 1,
                            "symmetric kind: generator " + gens[g].id + " needs an action");
        continue;
      }
      cursor c{spec, actions[g].line};
      std::string head = c.ident();
      if (head == "sign") {
        c.expect('(');
        long v = c.integer();
        c.expect(')');
        if (v != 1 && v != -1) c.fail("sign must be +1 or -1");
        for (auto& e : table[g]) e.sign = static_cast<int>(v);
      } else if (head == "table") {
        while (!c.done()) {
          std::string slot = c.ident();
          if (slot.size() < 2 || slot[0] != 's') c.fail("expected s<j>=...");
          int j = std::stoi(slot.substr(1));
          if (j < 1 || j > k - 1) c.fail("transposition index out of range");
          c.expect('=');
          int sign = 1;
          if (c.eat('-')) sign = -1;
          else c.eat('+');
          std::string target = c.ident();
          int tg = p.gens.index_of(target);
          if (tg < 0) c.fail("unknown generator " + target);
          table[g][j - 1] = action_entry{tg, sign};
        }
      } else {
        c.fail("unknown action form " + head);
      }
    }
    p.actions = symmetric_actions(p.gens, std::move(table));
  }

  for (const auto& [ln, text_line] : relation_lines) {
    cursor c{text_line, ln};
    p.relations.push_back(parse_relation_line(c, p.gens, p.actions, p.tree_kind(), os));
  }
  validate_presentation(p);
  return p;
}

opoly parse_polynomial(const std::string& text, const presentation& p, const order_spec& os) {
  cursor c{text, 1};
  return parse_relation_line(c, p.gens, p.actions, p.tree_kind(), os);
}

std::string serialize_presentation(const presentation& p) {
  std::string out;
  out += "operad " + (p.name.empty() ? std::string("unnamed") : p.name) + "\n";
  out += "kind ";
  switch (p.kind) {
    case presentation_kind::shuffle: out += "shuffle"; break;
    case presentation_kind::nonsymmetric: out += "nonsymmetric"; break;
    case presentation_kind::symmetric_input: out += "symmetric"; break;
  }
  out += "\n";
  for (int g = 0; g < p.gens.size(); ++g) {
    const auto& gi = p.gens[g];
    out += "generator " + gi.id + " arity " + std::to_string(gi.arity) + " degree " +
           std::to_string(gi.parity);
    if (gi.weight != 1) out += " weight " + std::to_string(gi.weight);
    if (!p.actions.empty() && gi.arity >= 2) {
      bool all_self_plus = true, all_self_minus = true;
      for (int j = 1; j <= gi.arity - 1; ++j) {
        const auto& e = p.actions.act(g, j);
        if (e.image != g || e.sign != 1) all_self_plus = false;
        if (e.image != g || e.sign != -1) all_self_minus = false;
      }
      if (all_self_plus) out += " action sign(+1)";
      else if (all_self_minus) out += " action sign(-1)";
      else {
        out += " action table";
        for (int j = 1; j <= gi.arity - 1; ++j) {
          const auto& e = p.actions.act(g, j);
          out += " s" + std::to_string(j) + "=" + (e.sign < 0 ? "-" : "+") + p.gens[e.image].id;
        }
      }
    }
    out += "\n";
  }
  for (const auto& r : p.relations) out += "relation " + r.text(p.gens) + "\n";
  return out;
}

}  // namespace operad
