#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "compass/ontology.hpp"
#include "compass/store.hpp"
#include "compass/term.hpp"

namespace compass::query {

struct Variable {
  std::string name;  // without '?'; desugared blank nodes use "_:<n>"
  bool operator==(const Variable&) const = default;
};

using Slot = std::variant<Term, Variable>;

struct TriplePattern {
  Slot subject;
  Slot predicate;
  Slot object;
};

struct Expr {
  enum class Kind { Constant, Variable, Not, And, Or, Compare, Call };

  Expr() = default;
  explicit Expr(Kind k) : kind(k) {}

  Kind kind = Kind::Constant;
  Term constant;           // Constant
  std::string name;        // variable name, comparison operator or function IRI
  std::vector<Expr> args;  // operands / call arguments
};

struct Bind {
  Expr expr;
  std::string var;
};

struct Filter {
  Expr expr;
};

struct GroupPattern;

// A braced sub-group is a union with one branch.
struct UnionPattern {
  std::vector<GroupPattern> branches;
};

using PatternElement = std::variant<TriplePattern, Bind, Filter, UnionPattern>;

struct GroupPattern {
  std::vector<PatternElement> elements;
};

struct CountAggregate {
  bool distinct = false;
  std::optional<std::string> var;  // nullopt for COUNT(*)
};

struct Projection {
  std::string var;                      // output column name
  std::optional<CountAggregate> count;  // set for (COUNT(...) AS ?var)
};

struct OrderKey {
  Expr expr;
  bool descending = false;
};

struct Query {
  bool distinct = false;
  bool select_all = false;
  std::vector<Projection> projections;
  GroupPattern where;
  std::vector<std::string> group_by;
  std::vector<OrderKey> order_by;

  bool is_aggregate() const;
  // Output columns; for SELECT * the visible pattern variables in order of
  // first appearance.
  std::vector<std::string> columns() const;
};

inline bool is_internal_var(std::string_view name) { return name.starts_with("_:"); }

// Variables bound by the pattern, in order of first appearance (including
// desugared blank-node variables).
std::vector<std::string> pattern_variables(const GroupPattern& group);

// Parses the supported SELECT subset. `prefixes` seeds the prefix table;
// PREFIX declarations in the text extend it. Throws Error(SyntaxError) with
// position and expected tokens, or Error(UnsupportedFeature) naming the
// construct (OPTIONAL, LIMIT, property paths, ...).
Query parse_query(std::string_view text, const PrefixMap& prefixes = default_prefixes());

struct SolutionTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<Term>>> rows;

  std::size_t column_index(std::string_view name) const;  // npos if absent
  const std::optional<Term>& at(std::size_t row, std::string_view column) const;
  bool operator==(const SolutionTable&) const = default;
};

struct EvalOptions {
  // rdf:type patterns see the schema's subclass closure.
  bool subclass_closure = true;
};

// Evaluates with bag semantics, then group -> aggregate -> order -> project
// -> distinct. Row order: ORDER BY keys, ties (and queries without ORDER BY)
// broken by the full-IRI rendering of the projected values. Builtin errors
// leave BIND targets unbound and make FILTERs false.
SolutionTable evaluate(const TripleStore& store, const Schema& schema, const Query& q,
                       EvalOptions options = {});

// Parses with the store's prefixes and evaluates.
SolutionTable run_query(const TripleStore& store, const Schema& schema, std::string_view text,
                        EvalOptions options = {});

// Total order used by ORDER BY: unbound < blank < IRI < numeric literal <
// dateTime literal < other literal.
int order_compare(const std::optional<Term>& a, const std::optional<Term>& b);

std::string to_csv(const SolutionTable& table, const PrefixMap& prefixes);
std::string to_text_table(const SolutionTable& table, const PrefixMap& prefixes);

namespace functions {
inline const std::string weeks_between = iri_of(ns::ofn, "weeksBetween");
inline const std::string parse_date = iri_of(ns::spif, "parseDate");
}  // namespace functions

}  // namespace compass::query
