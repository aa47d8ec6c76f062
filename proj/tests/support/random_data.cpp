#include "random_data.hpp"

#include <algorithm>
#include <set>

namespace compass::testing {

namespace {

using query::Expr;
using query::Query;
using query::Slot;
using query::TriplePattern;
using query::Variable;

std::size_t below(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }
bool coin(std::mt19937_64& rng, double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; }

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[below(rng, v.size())];
}

const std::vector<Term>& nodes() {
  static const std::vector<Term> v = [] {
    std::vector<Term> out;
    for (int i = 0; i < 8; ++i) out.push_back(cp("n" + std::to_string(i)));
    return out;
  }();
  return v;
}

const std::vector<Term>& predicates() {
  static const std::vector<Term> v = {cp("p0"), cp("p1"), cp("p2"), cp("p3")};
  return v;
}

const std::vector<Term>& classes() {
  static const std::vector<Term> v = {cp("Client"),  cids("Stakeholder"), cids("BeneficialStakeholder"),
                                      cp("Service"), cp("Application"),  cids("Organization")};
  return v;
}

const std::vector<Term>& literals() {
  static const std::vector<Term> v = {
      Term::literal("0", xsd::integer), Term::literal("1", xsd::integer), Term::literal("2", xsd::integer),
      Term::literal("5", xsd::integer), Term::literal("a"),                Term::literal("b"),
  };
  return v;
}

Term random_object(std::mt19937_64& rng) {
  switch (below(rng, 3)) {
    case 0: return pick(rng, literals());
    case 1:
      if (coin(rng, 0.3)) return Term::blank("b" + std::to_string(below(rng, 3)));
      [[fallthrough]];
    default: return pick(rng, nodes());
  }
}

Term random_subject(std::mt19937_64& rng) {
  if (coin(rng, 0.1)) return Term::blank("b" + std::to_string(below(rng, 3)));
  return pick(rng, nodes());
}

}  // namespace

TripleStore random_store(std::mt19937_64& rng, std::size_t max_triples) {
  TripleStore store;
  std::size_t n = max_triples / 4 + below(rng, max_triples - max_triples / 4 + 1);
  for (std::size_t i = 0; i < n; ++i) {
    Term s = random_subject(rng);
    if (coin(rng, 0.25)) {
      store.insert(s, vocab::rdf_type, pick(rng, classes()));
    } else {
      Term p = pick(rng, predicates());
      store.insert(s, p, random_object(rng));
    }
  }
  return store;
}

TripleStore random_rich_store(std::mt19937_64& rng, std::size_t max_triples) {
  static const std::vector<Term> odd = {
      Term::literal(""),
      Term::literal("quote \" and backslash \\"),
      Term::literal("line\nbreak\ttab\rreturn"),
      Term::literal("caf\xC3\xA9 \xE2\x82\xAC \xF0\x9F\x8F\xA0"),
      Term::literal("  padded  "),
      Term::literal("-17", xsd::integer),
      Term::literal("3.25", xsd::decimal),
      Term::literal("1.5E3", xsd::double_),
      Term::literal("true", xsd::boolean),
      Term::literal("42", xsd::non_negative_integer),
      Term::literal("2020-01-06T09:00:00.000", xsd::date_time),
      Term::literal("x", iri_of(ns::cp, "customType")),
      Term::iri("http://example.org/other/path#frag"),
      Term::iri("urn:x-local:thing"),
  };
  TripleStore store = random_store(rng, max_triples);
  std::size_t extra = below(rng, max_triples / 4 + 1);
  for (std::size_t i = 0; i < extra; ++i) {
    store.insert(random_subject(rng), pick(rng, predicates()), pick(rng, odd));
  }
  if (coin(rng, 0.5)) store.set_prefix("ex", "http://example.org/other/");
  return store;
}

namespace {

class QueryBuilder {
 public:
  explicit QueryBuilder(std::mt19937_64& rng) : rng_(rng) {}

  Query build(std::size_t max_patterns) {
    Query q;
    std::size_t patterns = 1 + below(rng_, max_patterns);
    bool with_union = patterns >= 2 && coin(rng_, 0.25);
    std::size_t union_patterns = with_union ? 1 + below(rng_, std::min<std::size_t>(patterns - 1, 2)) : 0;
    std::size_t plain = patterns - union_patterns;
    for (std::size_t i = 0; i < plain; ++i) q.where.elements.push_back(pattern());
    if (bound_.empty()) std::get<TriplePattern>(q.where.elements.front()).subject = use(fresh_var());

    if (with_union) {
      query::UnionPattern u;
      query::GroupPattern left, right;
      for (std::size_t i = 0; i < union_patterns; ++i) {
        left.elements.push_back(pattern());
        right.elements.push_back(pattern());
      }
      u.branches = {std::move(left), std::move(right)};
      q.where.elements.insert(q.where.elements.begin() + below(rng_, q.where.elements.size() + 1),
                              std::move(u));
    }

    if (coin(rng_, 0.2)) {
      query::Bind b;
      b.var = "z";
      if (coin(rng_, 0.5) && !bound_.empty()) {
        b.expr = var_expr(pick(rng_, bound_));
      } else {
        b.expr = const_expr(coin(rng_, 0.5) ? pick(rng_, nodes()) : pick(rng_, literals()));
      }
      q.where.elements.insert(q.where.elements.begin() + below(rng_, q.where.elements.size() + 1),
                              std::move(b));
      bound_.push_back("z");
    }

    if (coin(rng_, 0.3)) {
      query::Filter f{filter_expr(2)};
      q.where.elements.insert(q.where.elements.begin() + below(rng_, q.where.elements.size() + 1),
                              std::move(f));
    }

    std::vector<std::string> visible;
    double mode = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    if (mode < 0.25) {
      q.select_all = true;
      visible = bound_;
    } else if (mode < 0.45) {
      // Aggregate: optional single grouping key plus one COUNT.
      query::CountAggregate count;
      count.distinct = coin(rng_, 0.4);
      if (count.distinct || coin(rng_, 0.6)) count.var = pick(rng_, bound_);
      if (coin(rng_, 0.7)) {
        std::string key = pick(rng_, bound_);
        q.group_by.push_back(key);
        q.projections.push_back({key, std::nullopt});
        visible.push_back(key);
      }
      q.projections.push_back({"n", count});
      visible.push_back("n");
    } else {
      std::vector<std::string> pool = bound_;
      std::size_t k = 1 + below(rng_, pool.size());
      for (std::size_t i = 0; i < k; ++i) {
        std::string v = pick(rng_, pool);
        if (std::find(visible.begin(), visible.end(), v) == visible.end()) {
          visible.push_back(v);
          q.projections.push_back({v, std::nullopt});
        }
      }
    }
    q.distinct = coin(rng_, 0.3);

    if (coin(rng_, 0.35)) {
      std::size_t keys = 1 + below(rng_, 2);
      for (std::size_t i = 0; i < keys; ++i) {
        q.order_by.push_back({var_expr(pick(rng_, visible)), coin(rng_, 0.5)});
      }
    }
    return q;
  }

 private:
  std::string fresh_var() {
    static const std::vector<std::string> names = {"a", "b", "c", "d", "e"};
    for (const auto& n : names) {
      if (std::find(bound_.begin(), bound_.end(), n) == bound_.end()) return n;
    }
    return pick(rng_, names);
  }

  std::string reused_var() {
    std::vector<std::string> reusable;
    for (const auto& v : bound_) {
      if (v != "z") reusable.push_back(v);
    }
    return reusable.empty() ? fresh_var() : pick(rng_, reusable);
  }

  Slot use(std::string v) {
    if (std::find(bound_.begin(), bound_.end(), v) == bound_.end()) bound_.push_back(v);
    return Variable{std::move(v)};
  }

  // Mostly chains: the subject joins on an earlier variable, the object
  // introduces a new one.
  TriplePattern pattern() {
    TriplePattern tp;
    std::string subject;
    if (coin(rng_, 0.9)) {
      subject = coin(rng_, 0.75) ? reused_var() : fresh_var();
      tp.subject = use(subject);
    } else {
      tp.subject = pick(rng_, nodes());
    }
    bool typed = false;
    if (coin(rng_, 0.9)) {
      typed = coin(rng_, 0.25);
      tp.predicate = typed ? vocab::rdf_type : pick(rng_, predicates());
    } else {
      tp.predicate = use(fresh_var());
    }
    double r = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    if (r < 0.55) {
      tp.object = use(fresh_var());
    } else if (r < 0.7) {
      std::string v = reused_var();
      tp.object = use(v == subject && coin(rng_, 0.8) ? fresh_var() : v);
    } else if (typed) {
      tp.object = pick(rng_, classes());
    } else {
      tp.object = coin(rng_, 0.4) ? pick(rng_, literals()) : pick(rng_, nodes());
    }
    return tp;
  }

  static Expr var_expr(const std::string& v) {
    Expr e(Expr::Kind::Variable);
    e.name = v;
    return e;
  }

  static Expr const_expr(const Term& t) {
    Expr e(Expr::Kind::Constant);
    e.constant = t;
    return e;
  }

  Expr operand() {
    if (!bound_.empty() && coin(rng_, 0.6)) return var_expr(pick(rng_, bound_));
    return const_expr(coin(rng_, 0.6) ? pick(rng_, literals()) : pick(rng_, nodes()));
  }

  Expr filter_expr(int depth) {
    double r = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    if (depth > 0 && r < 0.15) {
      Expr e(Expr::Kind::Not);
      e.args.push_back(filter_expr(depth - 1));
      return e;
    }
    if (depth > 0 && r < 0.35) {
      Expr e(coin(rng_, 0.5) ? Expr::Kind::And : Expr::Kind::Or);
      e.args.push_back(filter_expr(depth - 1));
      e.args.push_back(filter_expr(depth - 1));
      return e;
    }
    static const std::vector<std::string> ops = {"=", "!=", "<", ">", "<=", ">="};
    Expr e(Expr::Kind::Compare);
    e.name = pick(rng_, ops);
    e.args.push_back(operand());
    e.args.push_back(operand());
    return e;
  }

  std::mt19937_64& rng_;
  std::vector<std::string> bound_;
};

std::string term_text(const Term& t) {
  if (t.is_iri()) return "<" + t.value() + ">";
  if (t.is_blank()) return "_:" + t.value();
  return "\"" + escape_string(t.value()) + "\"^^<" + t.datatype() + ">";
}

std::string slot_text(const Slot& s) {
  if (auto* v = std::get_if<Variable>(&s)) return "?" + v->name;
  return term_text(std::get<Term>(s));
}

std::string expr_text(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Constant: return term_text(e.constant);
    case Expr::Kind::Variable: return "?" + e.name;
    case Expr::Kind::Not: return "!(" + expr_text(e.args[0]) + ")";
    case Expr::Kind::And: return "(" + expr_text(e.args[0]) + " && " + expr_text(e.args[1]) + ")";
    case Expr::Kind::Or: return "(" + expr_text(e.args[0]) + " || " + expr_text(e.args[1]) + ")";
    case Expr::Kind::Compare:
      return "(" + expr_text(e.args[0]) + " " + e.name + " " + expr_text(e.args[1]) + ")";
    case Expr::Kind::Call: {
      std::string out = "<" + e.name + ">(";
      for (std::size_t i = 0; i < e.args.size(); ++i) out += (i ? ", " : "") + expr_text(e.args[i]);
      return out + ")";
    }
  }
  return {};
}

void group_text(const query::GroupPattern& g, std::string& out, const std::string& indent) {
  for (const auto& el : g.elements) {
    if (auto* tp = std::get_if<TriplePattern>(&el)) {
      out += indent + slot_text(tp->subject) + " " + slot_text(tp->predicate) + " " +
             slot_text(tp->object) + " .\n";
    } else if (auto* b = std::get_if<query::Bind>(&el)) {
      out += indent + "BIND(" + expr_text(b->expr) + " AS ?" + b->var + ")\n";
    } else if (auto* f = std::get_if<query::Filter>(&el)) {
      out += indent + "FILTER(" + expr_text(f->expr) + ")\n";
    } else if (auto* u = std::get_if<query::UnionPattern>(&el)) {
      for (std::size_t i = 0; i < u->branches.size(); ++i) {
        out += indent + (i ? "UNION {\n" : "{\n");
        group_text(u->branches[i], out, indent + "  ");
        out += indent + "}\n";
      }
    }
  }
}

}  // namespace

RandomQuery random_query(std::mt19937_64& rng, std::size_t max_patterns) {
  RandomQuery out;
  out.ast = QueryBuilder(rng).build(max_patterns);
  out.text = render_query(out.ast);
  return out;
}

std::string render_query(const Query& q) {
  std::string out = "SELECT ";
  if (q.distinct) out += "DISTINCT ";
  if (q.select_all) {
    out += "*";
  } else {
    for (std::size_t i = 0; i < q.projections.size(); ++i) {
      const auto& p = q.projections[i];
      if (i) out += ' ';
      if (!p.count) {
        out += "?" + p.var;
        continue;
      }
      out += "(COUNT(";
      if (p.count->distinct) out += "DISTINCT ";
      out += p.count->var ? "?" + *p.count->var : "*";
      out += ") AS ?" + p.var + ")";
    }
  }
  out += " WHERE {\n";
  group_text(q.where, out, "  ");
  out += "}";
  if (!q.group_by.empty()) {
    out += "\nGROUP BY";
    for (const auto& g : q.group_by) out += " ?" + g;
  }
  if (!q.order_by.empty()) {
    out += "\nORDER BY";
    for (const auto& k : q.order_by) out += std::string(k.descending ? " DESC(" : " ASC(") + expr_text(k.expr) + ")";
  }
  return out + "\n";
}

}  // namespace compass::testing
