#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>

namespace compass {

namespace ns {
inline constexpr std::string_view rdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view rdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view xsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view cp = "http://helpseeker.co/compass#";
inline constexpr std::string_view cids = "http://ontology.eil.utoronto.ca/cids/cids#";
inline constexpr std::string_view ic = "http://ontology.eil.utoronto.ca/tove/icontact#";
inline constexpr std::string_view i72 = "http://ontology.eil.utoronto.ca/ISO21972/iso21972#";
inline constexpr std::string_view oep =
    "http://www.w3.org/2001/sw/BestPractices/OEP/SimplePartWhole/part.owl#";
inline constexpr std::string_view time = "http://www.w3.org/2006/time#";
inline constexpr std::string_view schema = "http://schema.org/";
inline constexpr std::string_view iso5087 = "http://ontology.eil.utoronto.ca/5087/2/City/";
inline constexpr std::string_view ofn = "http://www.ontotext.com/sparql/functions/";
inline constexpr std::string_view spif = "http://spinrdf.org/spif#";
}  // namespace ns

inline std::string iri_of(std::string_view ns, std::string_view local) {
  std::string out(ns);
  out += local;
  return out;
}

namespace xsd {
inline const std::string string = iri_of(ns::xsd, "string");
inline const std::string integer = iri_of(ns::xsd, "integer");
inline const std::string decimal = iri_of(ns::xsd, "decimal");
inline const std::string double_ = iri_of(ns::xsd, "double");
inline const std::string boolean = iri_of(ns::xsd, "boolean");
inline const std::string date_time = iri_of(ns::xsd, "dateTime");
inline const std::string non_negative_integer = iri_of(ns::xsd, "nonNegativeInteger");
}  // namespace xsd

enum class TermKind : unsigned char { Iri, Literal, Blank };

/// An RDF term. IRIs hold absolute IRI text, literals a lexical form plus
/// datatype IRI, blank nodes a store-scoped label. Equality is lexical.
class Term {
 public:
  Term() = default;

  // Throws Error(MalformedTerm) for empty IRIs or IRIs containing whitespace.
  static Term iri(std::string value);
  static Term literal(std::string lexical, std::string datatype = xsd::string);
  static Term blank(std::string label);

  TermKind kind() const noexcept { return kind_; }
  bool is_iri() const noexcept { return kind_ == TermKind::Iri; }
  bool is_literal() const noexcept { return kind_ == TermKind::Literal; }
  bool is_blank() const noexcept { return kind_ == TermKind::Blank; }

  // IRI text, literal lexical form, or blank label.
  const std::string& value() const noexcept { return value_; }
  // Empty unless this is a literal.
  const std::string& datatype() const noexcept { return datatype_; }

  auto operator<=>(const Term&) const = default;
  bool operator==(const Term&) const = default;

 private:
  Term(TermKind kind, std::string value, std::string datatype)
      : kind_(kind), value_(std::move(value)), datatype_(std::move(datatype)) {}

  TermKind kind_ = TermKind::Iri;
  std::string value_;
  std::string datatype_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept {
    std::size_t h = std::hash<std::string>{}(t.value());
    h ^= std::hash<std::string>{}(t.datatype()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h ^ static_cast<std::size_t>(t.kind());
  }
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  auto operator<=>(const Triple&) const = default;
  bool operator==(const Triple&) const = default;
};

// Throws Error(MalformedTerm) unless subject is an IRI/blank and predicate an IRI.
void check_well_formed(const Triple& t);

/// Prefix label (without colon) to namespace IRI.
using PrefixMap = std::map<std::string, std::string, std::less<>>;

// cp, cids, ic, i72, oep, rdf, rdfs, xsd, time, schema, iso5087-2, ofn, spif.
const PrefixMap& default_prefixes();

// Shorthand for Term::iri(iri_of(ns, local)).
Term make_iri(std::string_view ns, std::string_view local);
inline Term cp(std::string_view local) { return make_iri(ns::cp, local); }
inline Term cids(std::string_view local) { return make_iri(ns::cids, local); }

namespace vocab {
extern const Term rdf_type;
extern const Term rdfs_label;
extern const Term rdfs_sub_class_of;
}  // namespace vocab

// True when `local` may follow "prefix:" in a Turtle/SPARQL prefixed name.
bool is_valid_local_name(std::string_view local);

// Prefixed name using the longest matching namespace, or "<iri>".
std::string compact_iri(std::string_view iri, const PrefixMap& prefixes);

// Turtle rendering: prefixed/bracketed IRIs, quoted literals with "^^dt"
// unless the datatype is xsd:string, "_:label" for blank nodes.
std::string render(const Term& t, const PrefixMap& prefixes);

// N-Triples style rendering with full IRIs; used for deterministic ordering.
std::string render_full(const Term& t);

// Expands "cp:Client16", "<http://...>" or an absolute IRI into a Term.
// Throws Error(UndefinedPrefix) for unknown prefixes.
Term resolve_iri(std::string_view text, const PrefixMap& prefixes);

std::string escape_string(std::string_view raw);

}  // namespace compass
