#include "famalg/script.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace famalg::script {

namespace {

// ---------------------------------------------------------------- lexing

struct Token {
  enum class Type { ident, number, punct, end };
  Type type = Type::end;
  std::string text;
  int line = 0, col = 0;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_cont(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         c == '\'';
}

std::vector<Token> lex_line(const std::string& line, int lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '#') break;
    const int col = static_cast<int>(i) + 1;
    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < line.size() && ident_cont(line[j])) ++j;
      out.push_back({Token::Type::ident, line.substr(i, j - i), lineno, col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j])))
        ++j;
      out.push_back({Token::Type::number, line.substr(i, j - i), lineno, col});
      i = j;
    } else if (std::string("={}[]()<>,+*~/").find(c) != std::string::npos) {
      out.push_back({Token::Type::punct, std::string(1, c), lineno, col});
      ++i;
    } else {
      throw parse_error(std::string("unexpected character '") + c + "'",
                        lineno, col);
    }
  }
  out.push_back({Token::Type::end, "", lineno,
                 static_cast<int>(line.size()) + 1});
  return out;
}

// ---------------------------------------------------------------- parser

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> words{
      "universe", "set",   "family",  "group", "subgroup", "weights",
      "eval",     "check", "explore", "model", "v",        "S",
      "I"};
  return words;
}

const std::set<std::string>& model_check_names() {
  static const std::set<std::string> names{
      "vitali-partition", "transversal-count", "coset-union",
      "trivial-pair",     "invariance",        "measure-lemma"};
  return names;
}

struct Parser {
  static long long to_ll(const Token& t) {
    try {
      return std::stoll(t.text);
    } catch (const std::exception&) {
      throw parse_error("number out of range", t.line, t.col);
    }
  }

  static std::uint64_t to_u64(const Token& t) {
    try {
      return std::stoull(t.text);
    } catch (const std::exception&) {
      throw parse_error("number out of range", t.line, t.col);
    }
  }

  // symbol state accumulated across statements
  bool has_universe = false;
  bool is_group = false;
  int size = 0;
  std::vector<std::string> labels;
  std::vector<int> moduli;
  std::set<std::string> sets, families, subgroups;
  std::string last_subgroup;
  bool has_weights = false;

  // per-line token cursor
  std::vector<Token> toks;
  std::size_t pos = 0;

  const Token& peek() const { return toks[pos]; }
  const Token& get() { return toks[std::min(pos++, toks.size() - 1)]; }
  bool at_end() const { return peek().type == Token::Type::end; }

  [[noreturn]] void fail(const std::string& msg, const Token& t) const {
    throw parse_error(msg, t.line, t.col);
  }

  void expect_punct(const std::string& p) {
    const Token& t = get();
    if (t.type != Token::Type::punct || t.text != p)
      fail("expected '" + p + "'", t);
  }

  bool accept_punct(const std::string& p) {
    if (peek().type == Token::Type::punct && peek().text == p) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string expect_name(const char* what) {
    const Token& t = get();
    if (t.type != Token::Type::ident) fail(std::string("expected ") + what, t);
    return t.text;
  }

  void require_universe(const Token& t) const {
    if (!has_universe) fail("no universe or group declared yet", t);
  }

  void declare_name(const std::string& n, const Token& t) const {
    if (reserved_words().count(n)) fail("'" + n + "' is a reserved word", t);
    if (sets.count(n) || families.count(n) || subgroups.count(n))
      fail("'" + n + "' is already declared", t);
    if (std::find(labels.begin(), labels.end(), n) != labels.end())
      fail("'" + n + "' shadows a universe label", t);
  }

  // ---- elements -------------------------------------------------------

  int resolve_element(const Token& t) {
    if (t.type == Token::Type::ident || t.type == Token::Type::number) {
      auto it = std::find(labels.begin(), labels.end(), t.text);
      if (it != labels.end())
        return static_cast<int>(it - labels.begin());
      if (t.type == Token::Type::number) {
        const long long v = to_ll(t);
        if (v >= 0 && v < size) return static_cast<int>(v);
      }
      fail("unknown element '" + t.text + "'", t);
    }
    fail("expected an element", t);
  }

  int parse_element() {
    if (peek().type == Token::Type::punct && peek().text == "(") {
      // mixed-radix tuple (a,b,...) for product groups
      const Token open = get();
      if (moduli.empty()) fail("tuple elements need a product group", open);
      std::vector<int> digits;
      while (true) {
        const Token& d = get();
        if (d.type != Token::Type::number) fail("expected a digit", d);
        const long long digit = to_ll(d);
        digits.push_back(digit > 64 ? 64 : static_cast<int>(digit));
        if (accept_punct(")")) break;
        expect_punct(",");
      }
      if (digits.size() != moduli.size())
        fail("tuple arity does not match the group", open);
      int idx = 0;
      for (std::size_t j = 0; j < moduli.size(); ++j) {
        if (digits[j] < 0 || digits[j] >= moduli[j])
          fail("tuple digit out of range", open);
        idx = idx * moduli[j] + digits[j];
      }
      return idx;
    }
    return resolve_element(get());
  }

  SetLiteral parse_set_literal() {
    SetLiteral lit;
    lit.line = peek().line;
    lit.col = peek().col;
    expect_punct("{");
    if (!accept_punct("}")) {
      while (true) {
        lit.elems.push_back(parse_element());
        if (accept_punct("}")) break;
        expect_punct(",");
      }
    }
    std::sort(lit.elems.begin(), lit.elems.end());
    lit.elems.erase(std::unique(lit.elems.begin(), lit.elems.end()),
                    lit.elems.end());
    return lit;
  }

  // ---- expressions ----------------------------------------------------

  bool brace_is_family() const {
    // after '{': a single ident that names a declared set means a family
    // literal like {A} or {B,D}
    if (pos >= toks.size()) return false;
    const Token& t = toks[pos];
    return t.type == Token::Type::ident && sets.count(t.text) > 0;
  }

  Expr parse_expr() {
    Expr e = parse_term();
    while (peek().type == Token::Type::punct && peek().text == "*") {
      const Token op = get();
      Expr rhs = parse_term();
      Expr node;
      node.kind = Expr::Kind::star;
      node.line = op.line;
      node.col = op.col;
      node.args.push_back(std::move(e));
      node.args.push_back(std::move(rhs));
      e = std::move(node);
    }
    return e;
  }

  Expr parse_term() {
    Expr e = parse_unary();
    while (peek().type == Token::Type::ident && peek().text == "v") {
      const Token op = get();
      Expr rhs = parse_unary();
      Expr node;
      node.kind = Expr::Kind::join;
      node.line = op.line;
      node.col = op.col;
      node.args.push_back(std::move(e));
      node.args.push_back(std::move(rhs));
      e = std::move(node);
    }
    return e;
  }

  Expr parse_unary() {
    if (peek().type == Token::Type::punct && peek().text == "~") {
      const Token op = get();
      Expr node;
      node.kind = Expr::Kind::complement;
      node.line = op.line;
      node.col = op.col;
      node.args.push_back(parse_unary());
      return node;
    }
    return parse_postfix();
  }

  Expr parse_postfix() {
    Expr e = parse_atom();
    while (peek().type == Token::Type::punct && peek().text == "+") {
      const Token op = get();
      Expr node;
      node.kind = Expr::Kind::adjoin;
      node.line = op.line;
      node.col = op.col;
      node.args.push_back(std::move(e));
      node.set = parse_set_literal();
      e = std::move(node);
    }
    return e;
  }

  Expr parse_atom() {
    const Token t = peek();
    if (t.type == Token::Type::ident && (t.text == "S" || t.text == "I")) {
      get();
      expect_punct("(");
      Expr node;
      node.kind = t.text == "S" ? Expr::Kind::closure : Expr::Kind::ideal;
      node.line = t.line;
      node.col = t.col;
      node.args.push_back(parse_expr());
      expect_punct(")");
      return node;
    }
    if (t.type == Token::Type::ident) {
      get();
      if (!sets.count(t.text) && !families.count(t.text))
        fail("unknown identifier " + t.text, t);
      Expr node;
      node.kind = Expr::Kind::name;
      node.line = t.line;
      node.col = t.col;
      node.name = t.text;
      return node;
    }
    if (t.type == Token::Type::punct && t.text == "(") {
      get();
      Expr inner = parse_expr();
      expect_punct(")");
      return inner;
    }
    if (t.type == Token::Type::punct && t.text == "{") {
      get();
      if (brace_is_family()) {
        Expr node;
        node.kind = Expr::Kind::family_lit;
        node.line = t.line;
        node.col = t.col;
        while (true) {
          const Token m = get();
          if (m.type != Token::Type::ident || !sets.count(m.text))
            fail("family literal members must be declared sets", m);
          Expr ref;
          ref.kind = Expr::Kind::name;
          ref.line = m.line;
          ref.col = m.col;
          ref.name = m.text;
          node.args.push_back(std::move(ref));
          if (accept_punct("}")) break;
          expect_punct(",");
        }
        return node;
      }
      // plain set literal (re-parse from the brace we consumed)
      Expr node;
      node.kind = Expr::Kind::set_lit;
      node.line = t.line;
      node.col = t.col;
      node.set.line = t.line;
      node.set.col = t.col;
      if (!accept_punct("}")) {
        while (true) {
          node.set.elems.push_back(parse_element());
          if (accept_punct("}")) break;
          expect_punct(",");
        }
      }
      std::sort(node.set.elems.begin(), node.set.elems.end());
      node.set.elems.erase(
          std::unique(node.set.elems.begin(), node.set.elems.end()),
          node.set.elems.end());
      return node;
    }
    if (t.type == Token::Type::punct && t.text == "[") {
      get();
      Expr node;
      node.kind = Expr::Kind::family_lit;
      node.line = t.line;
      node.col = t.col;
      if (!accept_punct("]")) {
        while (true) {
          if (peek().type == Token::Type::ident) {
            const Token m = get();
            if (!sets.count(m.text))
              fail("unknown identifier " + m.text, m);
            Expr ref;
            ref.kind = Expr::Kind::name;
            ref.line = m.line;
            ref.col = m.col;
            ref.name = m.text;
            node.args.push_back(std::move(ref));
          } else {
            Expr lit;
            lit.kind = Expr::Kind::set_lit;
            lit.line = peek().line;
            lit.col = peek().col;
            lit.set = parse_set_literal();
            node.args.push_back(std::move(lit));
          }
          if (accept_punct("]")) break;
          expect_punct(",");
        }
      }
      return node;
    }
    fail("expected an expression", t);
  }

  // ---- options --------------------------------------------------------

  std::map<std::string, std::uint64_t> parse_options(
      const std::set<std::string>& allowed) {
    std::map<std::string, std::uint64_t> opts;
    while (!at_end()) {
      const Token k = get();
      if (k.type != Token::Type::ident || !allowed.count(k.text))
        fail("unknown option '" + k.text + "'", k);
      expect_punct("=");
      const Token v = get();
      if (v.type != Token::Type::number) fail("expected a number", v);
      opts[k.text] = to_u64(v);
    }
    return opts;
  }

  // ---- statements -----------------------------------------------------

  Statement parse_statement() {
    Statement st;
    const Token head = get();
    st.line = head.line;
    st.col = head.col;
    if (head.type != Token::Type::ident) fail("expected a statement", head);

    if (head.text == "universe" || head.text == "group") {
      if (has_universe) fail("a universe or group is already declared", head);
      if (head.text == "universe") {
        st.kind = Statement::Kind::universe_decl;
        if (peek().type == Token::Type::number) {
          const Token n = get();
          if (!at_end()) fail("unexpected token after universe size", peek());
          const long long nsize = to_ll(n);
          st.universe_size = nsize > 64 ? 65 : static_cast<int>(nsize);
          if (st.universe_size < 1 || st.universe_size > 64)
            fail("universe size must be in 1..64", n);
          size = st.universe_size;
          labels.clear();
          for (int i = 0; i < size; ++i) labels.push_back(std::to_string(i));
        } else {
          std::set<std::string> seen;
          while (!at_end()) {
            const Token l = get();
            if (l.type != Token::Type::ident) fail("expected a label", l);
            if (reserved_words().count(l.text))
              fail("'" + l.text + "' is a reserved word", l);
            if (!seen.insert(l.text).second)
              fail("duplicate label '" + l.text + "'", l);
            st.labels.push_back(l.text);
          }
          if (st.labels.empty()) fail("universe needs labels or a size", head);
          if (st.labels.size() > 64) fail("universe size must be in 1..64", head);
          labels = st.labels;
          size = static_cast<int>(labels.size());
        }
        has_universe = true;
      } else {
        st.kind = Statement::Kind::group_decl;
        const Token spec = get();
        if (spec.type != Token::Type::ident) fail("expected a group spec", spec);
        if (!at_end()) fail("unexpected token after group spec", peek());
        try {
          st.moduli = parse_group_spec(spec.text);
        } catch (const std::invalid_argument& e) {
          fail(e.what(), spec);
        }
        long long order = 1;
        for (int m : st.moduli) order *= m;
        if (order > 64) fail("group order exceeds 64", spec);
        has_universe = true;
        is_group = true;
        moduli = st.moduli;
        size = static_cast<int>(order);
        labels.clear();
        const auto g = models::GroupModel::make(st.moduli);
        labels = g.universe().labels();
      }
      return st;
    }

    if (head.text == "set") {
      require_universe(head);
      st.kind = Statement::Kind::set_decl;
      const Token n = get();
      if (n.type != Token::Type::ident) fail("expected a set name", n);
      declare_name(n.text, n);
      st.name = n.text;
      expect_punct("=");
      st.set = parse_set_literal();
      if (!at_end()) fail("unexpected token after set literal", peek());
      sets.insert(st.name);
      return st;
    }

    if (head.text == "family") {
      require_universe(head);
      st.kind = Statement::Kind::family_decl;
      const Token n = get();
      if (n.type != Token::Type::ident) fail("expected a family name", n);
      declare_name(n.text, n);
      st.name = n.text;
      expect_punct("=");
      expect_punct("[");
      if (!accept_punct("]")) {
        while (true) {
          if (peek().type == Token::Type::ident) {
            const Token m = get();
            if (!sets.count(m.text)) fail("unknown identifier " + m.text, m);
            Expr ref;
            ref.kind = Expr::Kind::name;
            ref.line = m.line;
            ref.col = m.col;
            ref.name = m.text;
            st.family_members.push_back(std::move(ref));
          } else {
            Expr lit;
            lit.kind = Expr::Kind::set_lit;
            lit.line = peek().line;
            lit.col = peek().col;
            lit.set = parse_set_literal();
            st.family_members.push_back(std::move(lit));
          }
          if (accept_punct("]")) break;
          expect_punct(",");
        }
      }
      if (!at_end()) fail("unexpected token after family literal", peek());
      families.insert(st.name);
      return st;
    }

    if (head.text == "subgroup") {
      require_universe(head);
      if (!is_group) fail("subgroups need a group", head);
      st.kind = Statement::Kind::subgroup_decl;
      const Token n = get();
      if (n.type != Token::Type::ident) fail("expected a subgroup name", n);
      declare_name(n.text, n);
      st.name = n.text;
      expect_punct("=");
      expect_punct("<");
      if (!accept_punct(">")) {
        while (true) {
          st.elems.push_back(parse_element());
          if (accept_punct(">")) break;
          expect_punct(",");
        }
      }
      if (!at_end()) fail("unexpected token after generators", peek());
      subgroups.insert(st.name);
      last_subgroup = st.name;
      return st;
    }

    if (head.text == "weights") {
      require_universe(head);
      st.kind = Statement::Kind::weights_decl;
      while (!at_end()) {
        const Token num = get();
        if (num.type != Token::Type::number) fail("expected a weight", num);
        long long p = to_ll(num);
        long long q = 1;
        if (accept_punct("/")) {
          const Token den = get();
          if (den.type != Token::Type::number) fail("expected a denominator", den);
          q = to_ll(den);
          if (q == 0) fail("zero denominator", den);
        }
        st.weights.emplace_back(p, q);
      }
      if (static_cast<int>(st.weights.size()) != size)
        fail("expected " + std::to_string(size) + " weights, got " +
                 std::to_string(st.weights.size()),
             head);
      has_weights = true;
      return st;
    }

    if (head.text == "eval") {
      st.kind = Statement::Kind::eval;
      st.expr = parse_expr();
      if (!at_end()) fail("unexpected token after expression", peek());
      return st;
    }

    if (head.text == "check") {
      st.kind = Statement::Kind::check;
      const Token id = get();
      if (id.type != Token::Type::ident) fail("expected a law id", id);
      if (!laws::find_law(id.text)) fail("unknown law id " + id.text, id);
      st.target = id.text;
      if (peek().type == Token::Type::ident &&
          (peek().text == "exhaustive" || peek().text == "random"))
        st.mode = get().text;
      st.options = parse_options(
          {"universe", "maxfam", "trials", "seed", "threads", "ceiling"});
      return st;
    }

    if (head.text == "explore") {
      st.kind = Statement::Kind::explore;
      const Token id = get();
      if (id.type != Token::Type::ident || id.text != "q213")
        fail("expected 'q213'", id);
      st.target = id.text;
      st.options = parse_options({"universe", "maxfam", "ceiling"});
      return st;
    }

    if (head.text == "model") {
      st.kind = Statement::Kind::model;
      const Token id = get();
      if (id.type != Token::Type::ident || !model_check_names().count(id.text))
        fail("unknown model check '" + id.text + "'", id);
      st.target = id.text;
      const bool needs_group = id.text != "measure-lemma";
      const bool needs_subgroup =
          id.text == "vitali-partition" || id.text == "transversal-count" ||
          id.text == "coset-union" || id.text == "invariance";
      if (needs_group && !is_group) fail("this check needs a group", id);
      if (id.text == "measure-lemma" && !has_weights)
        fail("this check needs weights", id);
      if (peek().type == Token::Type::ident && subgroups.count(peek().text))
        st.subgroup_name = get().text;
      if (needs_subgroup && st.subgroup_name.empty()) {
        if (last_subgroup.empty()) fail("this check needs a subgroup", id);
        st.subgroup_name = last_subgroup;
      }
      st.options = parse_options({"ceiling"});
      return st;
    }

    fail("unknown statement '" + head.text + "'", head);
  }
};

}  // namespace

std::vector<int> parse_group_spec(const std::string& spec) {
  std::vector<int> moduli;
  std::size_t i = 0;
  while (i < spec.size()) {
    if (spec[i] != 'Z') throw std::invalid_argument(
        "group spec must look like Z6 or Z2xZ3");
    ++i;
    std::size_t j = i;
    while (j < spec.size() && std::isdigit(static_cast<unsigned char>(spec[j])))
      ++j;
    if (j == i) throw std::invalid_argument("missing modulus in group spec");
    moduli.push_back(std::stoi(spec.substr(i, j - i)));
    if (moduli.back() < 1)
      throw std::invalid_argument("group modulus must be positive");
    i = j;
    if (i < spec.size()) {
      if (spec[i] != 'x')
        throw std::invalid_argument("group factors are separated by 'x'");
      ++i;
    }
  }
  if (moduli.empty()) throw std::invalid_argument("empty group spec");
  return moduli;
}

models::Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos)
    return models::Rational(std::stoll(text));
  return models::Rational(std::stoll(text.substr(0, slash)),
                          std::stoll(text.substr(slash + 1)));
}

Script parse_script(const std::string& text) {
  Script out;
  Parser p;
  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    std::string line = nl == std::string::npos
                           ? text.substr(start)
                           : text.substr(start, nl - start);
    ++lineno;
    p.toks = lex_line(line, lineno);
    p.pos = 0;
    if (!p.at_end()) out.statements.push_back(p.parse_statement());
    if (nl == std::string::npos) break;
    start = nl + 1;
  }
  return out;
}

}  // namespace famalg::script
