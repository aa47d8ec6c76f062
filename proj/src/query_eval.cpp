#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "compass/datetime.hpp"
#include "compass/error.hpp"
#include "compass/query.hpp"

namespace compass::query {

namespace {

constexpr TermId kUnbound = std::numeric_limits<TermId>::max();

using Row = std::vector<TermId>;

bool is_numeric_type(const std::string& dt) {
  return dt == xsd::integer || dt == xsd::decimal || dt == xsd::double_ ||
         dt == xsd::non_negative_integer || dt == iri_of(ns::xsd, "int") ||
         dt == iri_of(ns::xsd, "long") || dt == iri_of(ns::xsd, "float");
}

std::optional<double> numeric_value(const Term& t) {
  if (!t.is_literal() || !is_numeric_type(t.datatype())) return std::nullopt;
  const std::string& s = t.value();
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return std::nullopt;
  return v;
}

std::optional<DateTime> date_value(const Term& t) {
  if (!t.is_literal() || t.datatype() != xsd::date_time) return std::nullopt;
  std::string_view s = t.value();
  if (s.ends_with("Z")) s.remove_suffix(1);
  if (auto d = try_parse_date(s, kTimestampPattern)) return d;
  return try_parse_date(s, "yyyy-MM-dd'T'HH:mm:ss");
}

int rank(const std::optional<Term>& t) {
  if (!t) return 0;
  if (t->is_blank()) return 1;
  if (t->is_iri()) return 2;
  if (numeric_value(*t)) return 3;
  if (date_value(*t)) return 4;
  return 5;
}

int three_way(auto a, auto b) { return a < b ? -1 : (b < a ? 1 : 0); }

Term boolean(bool b) { return Term::literal(b ? "true" : "false", xsd::boolean); }

// Effective boolean value; nullopt is a type error.
std::optional<bool> ebv(const Term& t) {
  if (!t.is_literal()) return std::nullopt;
  if (t.datatype() == xsd::boolean) {
    if (t.value() == "true" || t.value() == "1") return true;
    if (t.value() == "false" || t.value() == "0") return false;
    return std::nullopt;
  }
  if (is_numeric_type(t.datatype())) {
    auto v = numeric_value(t);
    if (!v) return false;
    return *v != 0 && !std::isnan(*v);
  }
  if (t.datatype() == xsd::string) return !t.value().empty();
  return std::nullopt;
}

// -1/0/1, or nullopt when the operands are not comparable.
std::optional<int> value_compare(const Term& a, const Term& b) {
  auto na = numeric_value(a), nb = numeric_value(b);
  if (na && nb) return three_way(*na, *nb);
  auto da = date_value(a), db = date_value(b);
  if (da && db) return three_way(da->millis, db->millis);
  if (a.is_literal() && b.is_literal() && a.datatype() == b.datatype() &&
      (a.datatype() == xsd::string || a.datatype() == xsd::boolean)) {
    return three_way(a.value(), b.value());
  }
  return std::nullopt;
}

std::optional<Term> compare(const std::string& op, const Term& a, const Term& b) {
  auto c = value_compare(a, b);
  if (op == "=" || op == "!=") {
    bool eq;
    if (c) {
      eq = *c == 0;
    } else if (a == b) {
      eq = true;
    } else if (a.is_literal() && b.is_literal()) {
      return std::nullopt;
    } else {
      eq = false;
    }
    return boolean(op == "=" ? eq : !eq);
  }
  if (!c) return std::nullopt;
  if (op == "<") return boolean(*c < 0);
  if (op == ">") return boolean(*c > 0);
  if (op == "<=") return boolean(*c <= 0);
  return boolean(*c >= 0);
}

class Evaluator {
 public:
  Evaluator(const TripleStore& store, const Schema& schema, const Query& q, EvalOptions options)
      : store_(store), schema_(schema), q_(q), options_(options) {
    vars_ = pattern_variables(q.where);
    for (std::size_t i = 0; i < vars_.size(); ++i) var_index_[vars_[i]] = i;
    if (auto id = store_.lookup(vocab::rdf_type)) type_id_ = *id;
    if (options_.subclass_closure && type_id_) materialize_entailed_types();
  }

  SolutionTable run() {
    std::vector<Row> rows = eval_group(q_.where, {Row(vars_.size(), kUnbound)});

    std::vector<std::string> row_vars = vars_;
    if (q_.is_aggregate()) {
      std::tie(row_vars, rows) = aggregate(rows);
    }

    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < row_vars.size(); ++i) index[row_vars[i]] = i;

    SolutionTable out;
    out.columns = q_.columns();
    std::vector<std::size_t> proj;
    for (const auto& c : out.columns) proj.push_back(index.at(c));

    struct Keyed {
      std::vector<std::optional<Term>> keys;
      std::vector<std::string> tie;
      Row row;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(rows.size());
    for (auto& r : rows) {
      Keyed k;
      for (const auto& ok : q_.order_by) k.keys.push_back(eval_expr(ok.expr, r, index));
      for (auto p : proj) k.tie.push_back(r[p] == kUnbound ? std::string() : render_full(term(r[p])));
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (std::find(proj.begin(), proj.end(), i) == proj.end()) {
          k.tie.push_back(r[i] == kUnbound ? std::string() : render_full(term(r[i])));
        }
      }
      k.row = std::move(r);
      keyed.push_back(std::move(k));
    }
    std::stable_sort(keyed.begin(), keyed.end(), [&](const Keyed& a, const Keyed& b) {
      for (std::size_t i = 0; i < q_.order_by.size(); ++i) {
        int c = order_compare(a.keys[i], b.keys[i]);
        if (c != 0) return q_.order_by[i].descending ? c > 0 : c < 0;
      }
      return a.tie < b.tie;
    });

    std::set<Row> seen;
    for (const auto& k : keyed) {
      Row projected;
      for (auto p : proj) projected.push_back(k.row[p]);
      if (q_.distinct && !seen.insert(projected).second) continue;
      std::vector<std::optional<Term>> values;
      for (auto id : projected) {
        values.push_back(id == kUnbound ? std::nullopt : std::optional<Term>(term(id)));
      }
      out.rows.push_back(std::move(values));
    }
    return out;
  }

 private:
  const Term& term(TermId id) const {
    if (id < store_.term_count()) return store_.term(id);
    return overlay_[id - store_.term_count()];
  }

  std::optional<TermId> find_id(const Term& t) const {
    if (auto id = store_.lookup(t)) return id;
    auto it = overlay_ids_.find(t);
    if (it != overlay_ids_.end()) return it->second;
    return std::nullopt;
  }

  TermId intern(const Term& t) {
    if (auto id = find_id(t)) return *id;
    TermId id = static_cast<TermId>(store_.term_count() + overlay_.size());
    overlay_.push_back(t);
    overlay_ids_.emplace(t, id);
    return id;
  }

  // Adds (s rdf:type E) for every superclass E of an asserted type that is
  // not itself asserted.
  void materialize_entailed_types() {
    std::map<TermId, std::vector<TermId>> supers_of;
    for (const auto& t : store_.match_ids(std::nullopt, *type_id_, std::nullopt)) {
      auto it = supers_of.find(t.o);
      if (it == supers_of.end()) {
        std::vector<TermId> ids;
        const Term& cls = store_.term(t.o);
        if (cls.is_iri()) {
          for (const auto& sup : schema_.superclasses(cls.value())) {
            if (sup == cls.value()) continue;
            ids.push_back(intern(Term::iri(sup)));
          }
        }
        it = supers_of.emplace(t.o, std::move(ids)).first;
      }
      for (TermId sup : it->second) {
        if (sup < store_.term_count() && store_.contains({store_.term(t.s), vocab::rdf_type, store_.term(sup)})) {
          continue;
        }
        if (entailed_set_.insert({t.s, sup}).second) {
          entailed_by_subject_[t.s].push_back(sup);
          entailed_by_class_[sup].push_back(t.s);
        }
      }
    }
  }

  std::optional<TermId> slot_id(const Slot& s, const Row& row, bool& unmatched) const {
    if (auto* v = std::get_if<Variable>(&s)) {
      TermId id = row[var_index_.at(v->name)];
      if (id == kUnbound) return std::nullopt;
      return id;
    }
    auto id = find_id(std::get<Term>(s));
    if (!id) unmatched = true;
    return id;
  }

  // Candidate triples for a pattern under the current row.
  std::vector<IdTriple> candidates(const TriplePattern& tp, const Row& row) const {
    bool unmatched = false;
    auto s = slot_id(tp.subject, row, unmatched);
    auto p = slot_id(tp.predicate, row, unmatched);
    auto o = slot_id(tp.object, row, unmatched);
    if (unmatched) return {};
    std::vector<IdTriple> out;
    bool store_ok = (!s || *s < store_.term_count()) && (!p || *p < store_.term_count()) &&
                    (!o || *o < store_.term_count());
    if (store_ok) out = store_.match_ids(s, p, o);
    if (!entailed_set_.empty() && (!p || *p == *type_id_)) {
      if (s && o) {
        if (entailed_set_.count({*s, *o})) out.push_back({*s, *type_id_, *o});
      } else if (s) {
        auto it = entailed_by_subject_.find(*s);
        if (it != entailed_by_subject_.end()) {
          for (TermId c : it->second) out.push_back({*s, *type_id_, c});
        }
      } else if (o) {
        auto it = entailed_by_class_.find(*o);
        if (it != entailed_by_class_.end()) {
          for (TermId x : it->second) out.push_back({x, *type_id_, *o});
        }
      } else {
        for (const auto& [x, c] : entailed_set_) out.push_back({x, *type_id_, c});
      }
    }
    return out;
  }

  int bound_positions(const TriplePattern& tp, const Row& row) const {
    int n = 0;
    for (const Slot* s : {&tp.subject, &tp.predicate, &tp.object}) {
      if (auto* v = std::get_if<Variable>(s)) {
        if (row[var_index_.at(v->name)] != kUnbound) ++n;
      } else {
        ++n;
      }
    }
    return n;
  }

  // Binds the pattern's variables to `t`; false on a conflicting repeat.
  bool bind_triple(const TriplePattern& tp, const IdTriple& t, Row& row) const {
    const Slot* slots[] = {&tp.subject, &tp.predicate, &tp.object};
    TermId ids[] = {t.s, t.p, t.o};
    for (int i = 0; i < 3; ++i) {
      if (auto* v = std::get_if<Variable>(slots[i])) {
        TermId& cell = row[var_index_.at(v->name)];
        if (cell == kUnbound) {
          cell = ids[i];
        } else if (cell != ids[i]) {
          return false;
        }
      }
    }
    return true;
  }

  void join_bgp(std::vector<const TriplePattern*> remaining, const Row& row, std::vector<Row>& out) {
    if (remaining.empty()) {
      out.push_back(row);
      return;
    }
    auto best = std::max_element(remaining.begin(), remaining.end(),
                                 [&](const TriplePattern* a, const TriplePattern* b) {
                                   return bound_positions(*a, row) < bound_positions(*b, row);
                                 });
    const TriplePattern* tp = *best;
    remaining.erase(best);
    for (const auto& t : candidates(*tp, row)) {
      Row next = row;
      if (bind_triple(*tp, t, next)) join_bgp(remaining, next, out);
    }
  }

  static bool compatible(const Row& a, const Row& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != kUnbound && b[i] != kUnbound && a[i] != b[i]) return false;
    }
    return true;
  }

  std::vector<Row> eval_group(const GroupPattern& g, std::vector<Row> input) {
    std::vector<const Filter*> filters;
    std::vector<const TriplePattern*> bgp;

    auto flush = [&] {
      if (bgp.empty()) return;
      std::vector<Row> out;
      for (const auto& r : input) join_bgp(bgp, r, out);
      input = std::move(out);
      bgp.clear();
    };

    for (const auto& el : g.elements) {
      if (auto* tp = std::get_if<TriplePattern>(&el)) {
        bgp.push_back(tp);
      } else if (auto* b = std::get_if<Bind>(&el)) {
        flush();
        std::size_t target = var_index_.at(b->var);
        for (auto& r : input) {
          auto v = eval_expr(b->expr, r, var_index_);
          r[target] = v ? intern(*v) : kUnbound;
        }
      } else if (auto* f = std::get_if<Filter>(&el)) {
        filters.push_back(f);
      } else if (auto* u = std::get_if<UnionPattern>(&el)) {
        flush();
        std::vector<Row> branch_rows;
        for (const auto& br : u->branches) {
          auto rows = eval_group(br, {Row(vars_.size(), kUnbound)});
          branch_rows.insert(branch_rows.end(), rows.begin(), rows.end());
        }
        std::vector<Row> out;
        for (const auto& a : input) {
          for (const auto& b : branch_rows) {
            if (!compatible(a, b)) continue;
            Row merged = a;
            for (std::size_t i = 0; i < merged.size(); ++i) {
              if (merged[i] == kUnbound) merged[i] = b[i];
            }
            out.push_back(std::move(merged));
          }
        }
        input = std::move(out);
      }
    }
    flush();

    if (filters.empty()) return input;
    std::vector<Row> kept;
    for (auto& r : input) {
      bool ok = true;
      for (const auto* f : filters) {
        auto v = eval_expr(f->expr, r, var_index_);
        auto b = v ? ebv(*v) : std::nullopt;
        if (!b || !*b) {
          ok = false;
          break;
        }
      }
      if (ok) kept.push_back(std::move(r));
    }
    return kept;
  }

  template <typename Index>
  std::optional<Term> eval_expr(const Expr& e, const Row& row, const Index& index) {
    switch (e.kind) {
      case Expr::Kind::Constant: return e.constant;
      case Expr::Kind::Variable: {
        auto it = index.find(e.name);
        if (it == index.end() || row[it->second] == kUnbound) return std::nullopt;
        return term(row[it->second]);
      }
      case Expr::Kind::Not: {
        auto v = eval_expr(e.args[0], row, index);
        auto b = v ? ebv(*v) : std::nullopt;
        if (!b) return std::nullopt;
        return boolean(!*b);
      }
      case Expr::Kind::And:
      case Expr::Kind::Or: {
        auto l = eval_expr(e.args[0], row, index);
        auto r = eval_expr(e.args[1], row, index);
        // -1 error, 0 false, 1 true
        auto tri = [](const std::optional<Term>& v) {
          auto b = v ? ebv(*v) : std::nullopt;
          return b ? static_cast<int>(*b) : -1;
        };
        int lb = tri(l), rb = tri(r);
        if (e.kind == Expr::Kind::And) {
          if (lb == 0 || rb == 0) return boolean(false);
          if (lb == 1 && rb == 1) return boolean(true);
        } else {
          if (lb == 1 || rb == 1) return boolean(true);
          if (lb == 0 && rb == 0) return boolean(false);
        }
        return std::nullopt;
      }
      case Expr::Kind::Compare: {
        auto l = eval_expr(e.args[0], row, index);
        auto r = eval_expr(e.args[1], row, index);
        if (!l || !r) return std::nullopt;
        return compare(e.name, *l, *r);
      }
      case Expr::Kind::Call: {
        std::vector<Term> args;
        for (const auto& a : e.args) {
          auto v = eval_expr(a, row, index);
          if (!v) return std::nullopt;
          args.push_back(std::move(*v));
        }
        return call(e.name, args);
      }
    }
    return std::nullopt;
  }

  static std::optional<Term> call(const std::string& fn, const std::vector<Term>& args) {
    if (fn == functions::parse_date) {
      if (!args[0].is_literal() || !args[1].is_literal()) return std::nullopt;
      auto d = try_parse_date(args[0].value(), args[1].value());
      if (!d) return std::nullopt;
      return Term::literal(format_date(*d), xsd::date_time);
    }
    if (fn == functions::weeks_between) {
      auto end = date_value(args[0]);
      auto begin = date_value(args[1]);
      if (!end || !begin) return std::nullopt;
      return Term::literal(std::to_string(compass::weeks_between(*end, *begin)), xsd::integer);
    }
    return std::nullopt;
  }

  std::pair<std::vector<std::string>, std::vector<Row>> aggregate(const std::vector<Row>& rows) {
    std::vector<std::size_t> key_idx;
    for (const auto& g : q_.group_by) key_idx.push_back(var_index_.at(g));

    std::map<Row, std::vector<const Row*>> groups;
    for (const auto& r : rows) {
      Row key;
      for (auto i : key_idx) key.push_back(r[i]);
      groups[key].push_back(&r);
    }
    if (q_.group_by.empty() && groups.empty()) groups[Row{}];

    std::vector<std::string> out_vars = q_.group_by;
    std::vector<const CountAggregate*> counts;
    for (const auto& p : q_.projections) {
      if (p.count) {
        out_vars.push_back(p.var);
        counts.push_back(&*p.count);
      }
    }

    std::vector<Row> out;
    for (const auto& [key, members] : groups) {
      Row r = key;
      for (const auto* c : counts) {
        std::size_t n = 0;
        if (c->var) {
          std::size_t vi = var_index_.at(*c->var);
          std::set<TermId> distinct;
          for (const auto* m : members) {
            if ((*m)[vi] == kUnbound) continue;
            if (c->distinct) {
              distinct.insert((*m)[vi]);
            } else {
              ++n;
            }
          }
          if (c->distinct) n = distinct.size();
        } else if (c->distinct) {
          std::set<Row> distinct;
          for (const auto* m : members) distinct.insert(*m);
          n = distinct.size();
        } else {
          n = members.size();
        }
        r.push_back(intern(Term::literal(std::to_string(n), xsd::integer)));
      }
      out.push_back(std::move(r));
    }
    return {out_vars, out};
  }

  const TripleStore& store_;
  const Schema& schema_;
  const Query& q_;
  EvalOptions options_;

  std::vector<std::string> vars_;
  std::unordered_map<std::string, std::size_t> var_index_;
  std::optional<TermId> type_id_;

  std::vector<Term> overlay_;
  std::unordered_map<Term, TermId, TermHash> overlay_ids_;

  std::set<std::pair<TermId, TermId>> entailed_set_;
  std::unordered_map<TermId, std::vector<TermId>> entailed_by_subject_;
  std::unordered_map<TermId, std::vector<TermId>> entailed_by_class_;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const std::optional<Term>& t, const PrefixMap& prefixes) {
  if (!t) return "";
  if (t->is_literal()) return t->value();
  return render(*t, prefixes);
}

}  // namespace

std::size_t SolutionTable::column_index(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  return std::string::npos;
}

const std::optional<Term>& SolutionTable::at(std::size_t row, std::string_view column) const {
  auto i = column_index(column);
  if (i == std::string::npos) throw std::out_of_range("no column " + std::string(column));
  return rows.at(row).at(i);
}

int order_compare(const std::optional<Term>& a, const std::optional<Term>& b) {
  int ra = rank(a), rb = rank(b);
  if (ra != rb) return three_way(ra, rb);
  if (ra == 0) return 0;
  if (ra == 3) {
    int c = three_way(*numeric_value(*a), *numeric_value(*b));
    if (c != 0) return c;
  } else if (ra == 4) {
    int c = three_way(date_value(*a)->millis, date_value(*b)->millis);
    if (c != 0) return c;
  }
  return three_way(render_full(*a), render_full(*b));
}

SolutionTable evaluate(const TripleStore& store, const Schema& schema, const Query& q,
                       EvalOptions options) {
  return Evaluator(store, schema, q, options).run();
}

SolutionTable run_query(const TripleStore& store, const Schema& schema, std::string_view text,
                        EvalOptions options) {
  PrefixMap prefixes = default_prefixes();
  for (const auto& [k, v] : store.prefixes()) prefixes[k] = v;
  return evaluate(store, schema, parse_query(text, prefixes), options);
}

std::string to_csv(const SolutionTable& table, const PrefixMap& prefixes) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_field(table.columns[i]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_field(cell_text(row[i], prefixes));
    }
    out += '\n';
  }
  return out;
}

std::string to_text_table(const SolutionTable& table, const PrefixMap& prefixes) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back(table.columns);
  for (const auto& row : table.rows) {
    std::vector<std::string> line;
    for (const auto& c : row) line.push_back(cell_text(c, prefixes));
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(table.columns.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  }
  auto rule = [&] {
    std::string r = "+";
    for (auto w : width) r += std::string(w + 2, '-') + "+";
    return r + "\n";
  };
  std::string out = rule();
  for (std::size_t li = 0; li < cells.size(); ++li) {
    out += "|";
    for (std::size_t i = 0; i < cells[li].size(); ++i) {
      out += " " + cells[li][i] + std::string(width[i] - cells[li][i].size(), ' ') + " |";
    }
    out += "\n";
    if (li == 0) out += rule();
  }
  out += rule();
  out += std::to_string(table.rows.size()) + (table.rows.size() == 1 ? " row\n" : " rows\n");
  return out;
}

}  // namespace compass::query
