#include <algorithm>
#include <cctype>
#include <set>

#include "compass/error.hpp"
#include "compass/lexer.hpp"
#include "compass/query.hpp"

namespace compass::query {

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

// Keywords that name SPARQL features outside the supported subset.
const std::set<std::string, std::less<>> kUnsupportedKeywords = {
    "OPTIONAL", "MINUS",  "GRAPH",    "SERVICE", "VALUES",   "LIMIT",       "OFFSET",
    "HAVING",   "CONSTRUCT", "ASK",   "DESCRIBE", "FROM",    "NAMED",       "BASE",
    "REDUCED",  "EXISTS", "NOT",      "SUM",     "AVG",      "MIN",         "MAX",
    "SAMPLE",   "GROUP_CONCAT", "INSERT", "DELETE", "LOAD",  "CLEAR",       "REGEX",
    "STR",      "LANG",   "BOUND",    "IF",      "COALESCE", "IN",          "DATATYPE",
    "CONTAINS", "STRSTARTS", "SUBSTR", "CONCAT", "NOW",     "YEAR",        "ISIRI",
    "ISURI",    "ISBLANK", "ISLITERAL", "SAMETERM", "LANGMATCHES", "UCASE", "LCASE"};

class Parser {
 public:
  Parser(std::string_view text, const PrefixMap& prefixes)
      : tokens_(tokenize(text, true, Errc::SyntaxError)), prefixes_(prefixes) {}

  Query run() {
    Query q;
    prologue();
    select_clause(q);
    if (is_keyword("WHERE")) ++pos_;
    q.where = group();
    modifiers(q);
    if (cur().kind != TokenKind::End) fail_expected("end of query");
    validate(q);
    return q;
  }

 private:
  const Token& cur() const { return tokens_[pos_]; }
  const Token& peek(std::size_t n = 1) const {
    return tokens_[std::min(pos_ + n, tokens_.size() - 1)];
  }

  [[noreturn]] void fail(const Token& at, const std::string& msg) const {
    throw Error(Errc::SyntaxError, msg, at.line, at.column);
  }
  [[noreturn]] void fail_expected(const std::string& expected) const {
    fail(cur(), "expected " + expected + ", found " + describe(cur()));
  }
  [[noreturn]] void unsupported(const Token& at, const std::string& what) const {
    throw Error(Errc::UnsupportedFeature, "unsupported feature: " + what, at.line, at.column);
  }

  bool is_keyword(std::string_view kw) const {
    return cur().kind == TokenKind::Word && upper(cur().text) == kw;
  }

  void check_unsupported_word() const {
    if (cur().kind != TokenKind::Word) return;
    auto kw = upper(cur().text);
    if (kUnsupportedKeywords.count(kw)) unsupported(cur(), kw);
  }

  void expect_punct(std::string_view p) {
    if (!cur().is_punct(p)) fail_expected("'" + std::string(p) + "'");
    ++pos_;
  }

  void expect_keyword(std::string_view kw) {
    if (!is_keyword(kw)) {
      check_unsupported_word();
      fail_expected(std::string(kw));
    }
    ++pos_;
  }

  void prologue() {
    while (true) {
      if (is_keyword("PREFIX")) {
        ++pos_;
        const Token& name = cur();
        if (name.kind != TokenKind::PrefixedName || name.text.back() != ':') {
          fail_expected("prefix label");
        }
        ++pos_;
        if (cur().kind != TokenKind::IriRef) fail_expected("IRI");
        prefixes_[name.text.substr(0, name.text.size() - 1)] = cur().text;
        ++pos_;
      } else if (is_keyword("BASE")) {
        unsupported(cur(), "BASE");
      } else {
        return;
      }
    }
  }

  void select_clause(Query& q) {
    check_unsupported_word();
    expect_keyword("SELECT");
    if (is_keyword("DISTINCT")) {
      q.distinct = true;
      ++pos_;
    } else {
      check_unsupported_word();
    }
    if (cur().is_punct("*")) {
      q.select_all = true;
      ++pos_;
      return;
    }
    while (true) {
      if (cur().kind == TokenKind::Var) {
        q.projections.push_back({cur().text, std::nullopt});
        ++pos_;
      } else if (cur().is_punct("(")) {
        const Token& open = cur();
        ++pos_;
        if (!is_keyword("COUNT")) {
          check_unsupported_word();
          unsupported(open, "projection expressions other than COUNT");
        }
        ++pos_;
        expect_punct("(");
        CountAggregate agg;
        if (is_keyword("DISTINCT")) {
          agg.distinct = true;
          ++pos_;
        }
        if (cur().is_punct("*")) {
          ++pos_;
        } else if (cur().kind == TokenKind::Var) {
          agg.var = cur().text;
          ++pos_;
        } else {
          unsupported(cur(), "COUNT over an expression");
        }
        expect_punct(")");
        expect_keyword("AS");
        if (cur().kind != TokenKind::Var) fail_expected("variable");
        q.projections.push_back({cur().text, agg});
        ++pos_;
        expect_punct(")");
      } else {
        break;
      }
    }
    if (q.projections.empty()) fail_expected("projection");
  }

  GroupPattern group() {
    expect_punct("{");
    GroupPattern g;
    std::set<std::string> in_scope;
    while (!cur().is_punct("}")) {
      if (cur().kind == TokenKind::End) fail_expected("'}'");
      if (cur().is_punct("{")) {
        UnionPattern u;
        u.branches.push_back(group());
        while (is_keyword("UNION")) {
          ++pos_;
          u.branches.push_back(group());
        }
        for (const auto& b : u.branches) {
          for (auto& v : pattern_variables(b)) in_scope.insert(v);
        }
        g.elements.emplace_back(std::move(u));
      } else if (is_keyword("BIND")) {
        const Token& at = cur();
        ++pos_;
        expect_punct("(");
        Expr e = expression();
        expect_keyword("AS");
        if (cur().kind != TokenKind::Var) fail_expected("variable");
        std::string var = cur().text;
        ++pos_;
        expect_punct(")");
        if (in_scope.count(var)) fail(at, "BIND target ?" + var + " is already in scope");
        in_scope.insert(var);
        g.elements.emplace_back(Bind{std::move(e), var});
      } else if (is_keyword("FILTER")) {
        ++pos_;
        expect_punct("(");
        Expr e = expression();
        expect_punct(")");
        g.elements.emplace_back(Filter{std::move(e)});
      } else if (cur().kind == TokenKind::Word && upper(cur().text) != "A" &&
                 upper(cur().text) != "TRUE" && upper(cur().text) != "FALSE") {
        check_unsupported_word();
        fail_expected("triple pattern, BIND, FILTER or group");
      } else {
        std::vector<TriplePattern> out;
        triples_same_subject(out);
        for (auto& t : out) {
          for (const Slot* s : {&t.subject, &t.predicate, &t.object}) {
            if (auto* v = std::get_if<Variable>(s)) in_scope.insert(v->name);
          }
          g.elements.emplace_back(std::move(t));
        }
        if (!cur().is_punct(".") && !cur().is_punct("}") && !cur().is_punct("{") &&
            !is_keyword("BIND") && !is_keyword("FILTER")) {
          check_unsupported_word();
          fail_expected("'.' or '}'");
        }
      }
      if (cur().is_punct(".")) ++pos_;
    }
    ++pos_;
    return g;
  }

  Variable fresh_blank() { return Variable{"_:b" + std::to_string(blank_counter_++)}; }

  void triples_same_subject(std::vector<TriplePattern>& out) {
    if (cur().is_punct("[")) {
      Slot subject = blank_property_list(out);
      if (cur().is_punct(".") || cur().is_punct("}")) return;
      property_list(subject, out);
      return;
    }
    Slot subject = term(false);
    property_list(subject, out);
  }

  void property_list(const Slot& subject, std::vector<TriplePattern>& out) {
    while (true) {
      Slot predicate = verb();
      if (cur().is_punct("/") || cur().is_punct("|") || cur().is_punct("^") ||
          cur().is_punct("*") || cur().is_punct("+")) {
        unsupported(cur(), "property paths");
      }
      while (true) {
        Slot object = object_slot(out);
        out.push_back({subject, predicate, object});
        if (!cur().is_punct(",")) break;
        ++pos_;
      }
      if (!cur().is_punct(";")) return;
      while (cur().is_punct(";")) ++pos_;
      if (cur().is_punct(".") || cur().is_punct("]") || cur().is_punct("}")) return;
    }
  }

  Slot verb() {
    if (cur().is(TokenKind::Word, "a")) {
      ++pos_;
      return vocab::rdf_type;
    }
    if (cur().is_punct("^")) unsupported(cur(), "property paths");
    if (cur().kind == TokenKind::Var) {
      Variable v{cur().text};
      ++pos_;
      return v;
    }
    if (cur().kind == TokenKind::IriRef || cur().kind == TokenKind::PrefixedName) return iri();
    fail_expected("predicate");
  }

  Slot object_slot(std::vector<TriplePattern>& out) {
    if (cur().is_punct("[")) return blank_property_list(out);
    return term(true);
  }

  Slot blank_property_list(std::vector<TriplePattern>& out) {
    expect_punct("[");
    Variable node = fresh_blank();
    if (!cur().is_punct("]")) property_list(node, out);
    expect_punct("]");
    return node;
  }

  Slot term(bool allow_literal) {
    const Token& t = cur();
    switch (t.kind) {
      case TokenKind::Var: ++pos_; return Variable{t.text};
      case TokenKind::IriRef:
      case TokenKind::PrefixedName: return iri();
      case TokenKind::BlankLabel: {
        ++pos_;
        return Variable{"_:" + t.text};
      }
      case TokenKind::String:
      case TokenKind::Integer:
      case TokenKind::Decimal:
        if (!allow_literal) fail_expected("subject");
        return literal();
      case TokenKind::Word:
        if (allow_literal && (t.text == "true" || t.text == "false")) return literal();
        check_unsupported_word();
        fail_expected("term");
      default: fail_expected(allow_literal ? "object" : "subject");
    }
  }

  Term literal() {
    const Token& t = cur();
    ++pos_;
    switch (t.kind) {
      case TokenKind::Integer: return Term::literal(t.text, xsd::integer);
      case TokenKind::Decimal: return Term::literal(t.text, xsd::decimal);
      case TokenKind::Word: return Term::literal(t.text, xsd::boolean);
      default: break;
    }
    if (cur().is_punct("^^")) {
      ++pos_;
      if (cur().kind != TokenKind::IriRef && cur().kind != TokenKind::PrefixedName) {
        fail_expected("datatype IRI");
      }
      return Term::literal(t.text, iri().value());
    }
    if (cur().kind == TokenKind::Word && cur().text.starts_with("@")) {
      unsupported(cur(), "language-tagged literals");
    }
    return Term::literal(t.text);
  }

  Term iri() {
    const Token& t = cur();
    ++pos_;
    if (t.kind == TokenKind::IriRef) {
      try {
        return Term::iri(t.text);
      } catch (const Error& e) {
        fail(t, e.what());
      }
    }
    auto colon = t.text.find(':');
    auto label = t.text.substr(0, colon);
    auto it = prefixes_.find(label);
    if (it == prefixes_.end()) fail(t, "undefined prefix '" + label + ":'");
    return Term::iri(it->second + t.text.substr(colon + 1));
  }

  // expression := or
  Expr expression() { return or_expr(); }

  Expr or_expr() {
    Expr left = and_expr();
    while (cur().is_punct("||")) {
      ++pos_;
      Expr e{Expr::Kind::Or};
      e.args.push_back(std::move(left));
      e.args.push_back(and_expr());
      left = std::move(e);
    }
    return left;
  }

  Expr and_expr() {
    Expr left = relational();
    while (cur().is_punct("&&")) {
      ++pos_;
      Expr e{Expr::Kind::And};
      e.args.push_back(std::move(left));
      e.args.push_back(relational());
      left = std::move(e);
    }
    return left;
  }

  Expr relational() {
    Expr left = unary();
    static constexpr std::string_view ops[] = {"=", "!=", "<", ">", "<=", ">="};
    for (auto op : ops) {
      if (cur().is_punct(op)) {
        ++pos_;
        Expr e{Expr::Kind::Compare};
        e.name = std::string(op);
        e.args.push_back(std::move(left));
        e.args.push_back(unary());
        return e;
      }
    }
    if (cur().is_punct("+") || cur().is_punct("*") || cur().is_punct("/")) {
      unsupported(cur(), "arithmetic expressions");
    }
    return left;
  }

  Expr unary() {
    if (cur().is_punct("!")) {
      ++pos_;
      Expr e{Expr::Kind::Not};
      e.args.push_back(unary());
      return e;
    }
    return primary();
  }

  Expr primary() {
    const Token& t = cur();
    if (t.is_punct("(")) {
      ++pos_;
      Expr e = expression();
      expect_punct(")");
      return e;
    }
    if (t.kind == TokenKind::Var) {
      ++pos_;
      Expr e{Expr::Kind::Variable};
      e.name = t.text;
      return e;
    }
    if (t.kind == TokenKind::IriRef || t.kind == TokenKind::PrefixedName) {
      Term fn = iri();
      if (!cur().is_punct("(")) {
        Expr e{Expr::Kind::Constant};
        e.constant = std::move(fn);
        return e;
      }
      if (fn.value() != functions::weeks_between && fn.value() != functions::parse_date) {
        unsupported(t, "function " + t.text);
      }
      ++pos_;
      Expr e{Expr::Kind::Call};
      e.name = fn.value();
      if (!cur().is_punct(")")) {
        e.args.push_back(expression());
        while (cur().is_punct(",")) {
          ++pos_;
          e.args.push_back(expression());
        }
      }
      expect_punct(")");
      std::size_t arity = e.name == functions::weeks_between ? 2 : 2;
      if (e.args.size() != arity) fail(t, t.text + " expects " + std::to_string(arity) + " arguments");
      return e;
    }
    if (t.kind == TokenKind::String || t.kind == TokenKind::Integer ||
        t.kind == TokenKind::Decimal ||
        (t.kind == TokenKind::Word && (t.text == "true" || t.text == "false"))) {
      Expr e{Expr::Kind::Constant};
      e.constant = literal();
      return e;
    }
    check_unsupported_word();
    fail_expected("expression");
  }

  void modifiers(Query& q) {
    if (is_keyword("GROUP")) {
      ++pos_;
      expect_keyword("BY");
      while (cur().kind == TokenKind::Var) {
        q.group_by.push_back(cur().text);
        ++pos_;
      }
      if (q.group_by.empty()) {
        if (cur().is_punct("(")) unsupported(cur(), "GROUP BY expressions");
        fail_expected("variable");
      }
    }
    if (is_keyword("HAVING")) unsupported(cur(), "HAVING");
    if (is_keyword("ORDER")) {
      ++pos_;
      expect_keyword("BY");
      while (true) {
        if (is_keyword("ASC") || is_keyword("DESC")) {
          bool desc = is_keyword("DESC");
          ++pos_;
          expect_punct("(");
          Expr e = expression();
          expect_punct(")");
          q.order_by.push_back({std::move(e), desc});
        } else if (cur().kind == TokenKind::Var) {
          Expr e{Expr::Kind::Variable};
          e.name = cur().text;
          ++pos_;
          q.order_by.push_back({std::move(e), false});
        } else if (cur().is_punct("(")) {
          ++pos_;
          Expr e = expression();
          expect_punct(")");
          q.order_by.push_back({std::move(e), false});
        } else {
          break;
        }
      }
      if (q.order_by.empty()) fail_expected("ordering condition");
    }
    check_unsupported_word();
  }

  void validate(const Query& q) const {
    auto vars = pattern_variables(q.where);
    std::set<std::string> bound(vars.begin(), vars.end());
    const Token& at = tokens_.front();

    bool has_count = false;
    std::set<std::string> names;
    for (const auto& p : q.projections) {
      if (!names.insert(p.var).second) fail(at, "duplicate projection ?" + p.var);
      if (p.count) {
        has_count = true;
        if (bound.count(p.var)) fail(at, "aggregate alias ?" + p.var + " is already bound");
      }
    }
    std::set<std::string> keys(q.group_by.begin(), q.group_by.end());
    if (!q.group_by.empty() && q.select_all) fail(at, "SELECT * cannot be combined with GROUP BY");
    for (const auto& p : q.projections) {
      if (p.count) continue;
      if (has_count || !q.group_by.empty()) {
        if (!keys.count(p.var)) {
          fail(at, "projected variable ?" + p.var + " is neither grouped nor aggregated");
        }
      } else if (!bound.count(p.var)) {
        fail(at, "projected variable ?" + p.var + " does not occur in the pattern");
      }
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  PrefixMap prefixes_;
  std::size_t blank_counter_ = 0;
};

void collect_vars(const GroupPattern& g, std::vector<std::string>& out, std::set<std::string>& seen) {
  auto add = [&](const std::string& v) {
    if (seen.insert(v).second) out.push_back(v);
  };
  for (const auto& el : g.elements) {
    if (auto* t = std::get_if<TriplePattern>(&el)) {
      for (const Slot* s : {&t->subject, &t->predicate, &t->object}) {
        if (auto* v = std::get_if<Variable>(s)) add(v->name);
      }
    } else if (auto* b = std::get_if<Bind>(&el)) {
      add(b->var);
    } else if (auto* u = std::get_if<UnionPattern>(&el)) {
      for (const auto& br : u->branches) collect_vars(br, out, seen);
    }
  }
}

}  // namespace

std::vector<std::string> pattern_variables(const GroupPattern& group) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  collect_vars(group, out, seen);
  return out;
}

bool Query::is_aggregate() const {
  if (!group_by.empty()) return true;
  return std::any_of(projections.begin(), projections.end(),
                     [](const Projection& p) { return p.count.has_value(); });
}

std::vector<std::string> Query::columns() const {
  std::vector<std::string> out;
  if (select_all) {
    for (auto& v : pattern_variables(where)) {
      if (!is_internal_var(v)) out.push_back(v);
    }
    return out;
  }
  for (const auto& p : projections) out.push_back(p.var);
  return out;
}

Query parse_query(std::string_view text, const PrefixMap& prefixes) {
  return Parser(text, prefixes).run();
}

}  // namespace compass::query
