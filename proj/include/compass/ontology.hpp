#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "compass/store.hpp"
#include "compass/term.hpp"

namespace compass {

struct ClassRange {
  std::string iri;
  bool operator==(const ClassRange&) const = default;
};
struct CodeClassRange {
  std::string iri;
  bool operator==(const CodeClassRange&) const = default;
};
struct EnumerationRange {
  std::vector<std::string> values;
  bool operator==(const EnumerationRange&) const = default;
};
struct DatatypeRange {
  std::string iri;
  bool operator==(const DatatypeRange&) const = default;
};

using PropertyRange = std::variant<ClassRange, CodeClassRange, EnumerationRange, DatatypeRange>;

/// One declaration of a property. A property IRI may carry several
/// declarations with disjoint domains (cp:hasStatus on Client vs ServiceEvent).
/// An empty domain means "any subject".
struct PropertyDecl {
  std::string iri;
  std::set<std::string> domain;
  PropertyRange range;
  bool coded = false;  // true iff range is a CodeClassRange
  bool functional = false;

  bool operator==(const PropertyDecl&) const = default;
};

class Schema {
 public:
  void add_class(const std::string& iri, std::initializer_list<std::string_view> supers = {});
  // Throws Error(UnknownClass) if the edge would create a cycle.
  void add_subclass(const std::string& sub, const std::string& super);
  void add_property(PropertyDecl decl);

  bool has_class(std::string_view iri) const { return classes_.count(iri) > 0; }
  const std::set<std::string, std::less<>>& classes() const { return classes_; }
  const std::vector<PropertyDecl>& properties() const { return properties_; }
  std::vector<const PropertyDecl*> declarations(std::string_view iri) const;

  std::vector<std::string> direct_superclasses(std::string_view iri) const;

  // Reflexive-transitive closures. For an unknown IRI, just {iri}.
  std::set<std::string> superclasses(std::string_view iri) const;
  std::set<std::string> subclasses(std::string_view iri) const;
  bool is_subclass_of(std::string_view sub, std::string_view super) const;

  bool operator==(const Schema&) const = default;

 private:
  std::set<std::string, std::less<>> classes_;
  std::map<std::string, std::set<std::string>, std::less<>> supers_;
  std::map<std::string, std::set<std::string>, std::less<>> subs_;
  std::vector<PropertyDecl> properties_;
};

// Fixed Compass + minimal CIDS schema, including the client, service and
// need code classes. Pure and deterministic.
Schema build_compass_schema();

// Shared instance of build_compass_schema().
const Schema& compass_schema();

struct TaxonomyCode {
  std::string instance;
  std::string code_class;
  std::string label;
  std::optional<std::string> external_ref;

  bool operator==(const TaxonomyCode&) const = default;
};

// CSV with header "instance,codeClass,label,externalRef". Names without a
// prefix are in the cp: namespace. Throws Error(UnknownCodeClass) for a
// class that is not a code class of `schema`, Error(DuplicateInstance), or
// Error(ParseError) for malformed rows.
std::vector<TaxonomyCode> load_taxonomy(const Schema& schema, std::string_view table);

// Adds (instance rdf:type codeClass) and (instance rdfs:label label).
void apply_taxonomy(TripleStore& store, const std::vector<TaxonomyCode>& codes);

// The taxonomy shipped with the project (data/taxonomy.csv).
std::string_view default_taxonomy_csv();

// True iff the store types `node` with some class C where C is a subclass
// (reflexively, transitively) of `class_iri`. Throws Error(UnknownClass)
// when `class_iri` is not a schema class.
bool is_instance_of(const TripleStore& store, const Schema& schema, const Term& node,
                    const Term& class_iri);

// Same check without the schema membership precondition.
bool has_type(const TripleStore& store, const Schema& schema, const Term& node,
              std::string_view class_iri);

}  // namespace compass
