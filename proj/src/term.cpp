#include "compass/term.hpp"

#include <cctype>

#include "compass/error.hpp"

namespace compass {

std::string_view to_token(Errc code) noexcept {
  switch (code) {
    case Errc::MalformedTerm: return "malformed-term";
    case Errc::ParseError: return "parse-error";
    case Errc::UndefinedPrefix: return "undefined-prefix";
    case Errc::UnknownCodeClass: return "unknown-code-class";
    case Errc::DuplicateInstance: return "duplicate-instance";
    case Errc::UnknownClass: return "unknown-class";
    case Errc::SyntaxError: return "syntax-error";
    case Errc::UnsupportedFeature: return "unsupported-feature";
    case Errc::UnparseableDate: return "unparseable-date";
    case Errc::UnknownClient: return "unknown-client";
    case Errc::UnknownSatisfier: return "unknown-satisfier";
    case Errc::UnknownService: return "unknown-service";
    case Errc::Io: return "io-error";
  }
  return "error";
}

Term Term::iri(std::string value) {
  if (value.empty()) throw Error(Errc::MalformedTerm, "empty IRI");
  for (unsigned char c : value) {
    if (std::isspace(c)) throw Error(Errc::MalformedTerm, "IRI contains whitespace: " + value);
  }
  return Term(TermKind::Iri, std::move(value), {});
}

Term Term::literal(std::string lexical, std::string datatype) {
  if (datatype.empty()) datatype = xsd::string;
  return Term(TermKind::Literal, std::move(lexical), std::move(datatype));
}

Term Term::blank(std::string label) {
  if (label.empty()) throw Error(Errc::MalformedTerm, "empty blank node label");
  return Term(TermKind::Blank, std::move(label), {});
}

void check_well_formed(const Triple& t) {
  if (t.subject.is_literal()) throw Error(Errc::MalformedTerm, "literal in subject position");
  if (!t.predicate.is_iri()) throw Error(Errc::MalformedTerm, "predicate must be an IRI");
}

const PrefixMap& default_prefixes() {
  static const PrefixMap prefixes{
      {"cids", std::string(ns::cids)},      {"cp", std::string(ns::cp)},
      {"i72", std::string(ns::i72)},        {"ic", std::string(ns::ic)},
      {"iso5087-2", std::string(ns::iso5087)}, {"oep", std::string(ns::oep)},
      {"ofn", std::string(ns::ofn)},        {"rdf", std::string(ns::rdf)},
      {"rdfs", std::string(ns::rdfs)},      {"schema", std::string(ns::schema)},
      {"spif", std::string(ns::spif)},      {"time", std::string(ns::time)},
      {"xsd", std::string(ns::xsd)},
  };
  return prefixes;
}

Term make_iri(std::string_view ns, std::string_view local) { return Term::iri(iri_of(ns, local)); }

namespace vocab {
const Term rdf_type = make_iri(ns::rdf, "type");
const Term rdfs_label = make_iri(ns::rdfs, "label");
const Term rdfs_sub_class_of = make_iri(ns::rdfs, "subClassOf");
}  // namespace vocab

namespace {

bool is_name_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '-' || c >= 0x80;
}

}  // namespace

bool is_valid_local_name(std::string_view local) {
  if (local.empty()) return true;
  unsigned char first = static_cast<unsigned char>(local.front());
  if (first == '-' || first == '.') return false;
  if (local.back() == '.') return false;
  for (unsigned char c : local) {
    if (!is_name_char(c) && c != '.') return false;
  }
  return true;
}

std::string compact_iri(std::string_view iri, const PrefixMap& prefixes) {
  const std::string* best_label = nullptr;
  std::size_t best_len = 0;
  for (const auto& [label, base] : prefixes) {
    if (base.size() < best_len || base.size() > iri.size()) continue;
    if (iri.compare(0, base.size(), base) != 0) continue;
    if (!is_valid_local_name(iri.substr(base.size()))) continue;
    // Map iteration is label-ordered, so ties keep the smallest label.
    if (best_label == nullptr || base.size() > best_len) {
      best_label = &label;
      best_len = base.size();
    }
  }
  if (best_label == nullptr) return "<" + std::string(iri) + ">";
  return *best_label + ":" + std::string(iri.substr(best_len));
}

std::string escape_string(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

std::string render(const Term& t, const PrefixMap& prefixes) {
  switch (t.kind()) {
    case TermKind::Iri: return compact_iri(t.value(), prefixes);
    case TermKind::Blank: return "_:" + t.value();
    case TermKind::Literal: {
      std::string out = "\"" + escape_string(t.value()) + "\"";
      if (t.datatype() != xsd::string) out += "^^" + compact_iri(t.datatype(), prefixes);
      return out;
    }
  }
  return {};
}

std::string render_full(const Term& t) {
  switch (t.kind()) {
    case TermKind::Iri: return "<" + t.value() + ">";
    case TermKind::Blank: return "_:" + t.value();
    case TermKind::Literal:
      return "\"" + escape_string(t.value()) + "\"^^<" + t.datatype() + ">";
  }
  return {};
}

Term resolve_iri(std::string_view text, const PrefixMap& prefixes) {
  if (text.size() >= 2 && text.front() == '<' && text.back() == '>') {
    return Term::iri(std::string(text.substr(1, text.size() - 2)));
  }
  if (text.find("://") != std::string_view::npos || text.rfind("urn:", 0) == 0) {
    return Term::iri(std::string(text));
  }
  auto colon = text.find(':');
  if (colon == std::string_view::npos) return cp(text);
  auto label = text.substr(0, colon);
  auto it = prefixes.find(label);
  if (it == prefixes.end()) {
    throw Error(Errc::UndefinedPrefix, "undefined prefix '" + std::string(label) + ":'");
  }
  return Term::iri(it->second + std::string(text.substr(colon + 1)));
}

}  // namespace compass
