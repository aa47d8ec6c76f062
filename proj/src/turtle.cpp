#include "compass/turtle.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>
#include <vector>

#include "compass/error.hpp"
#include "compass/lexer.hpp"

namespace compass {

namespace {

class TurtleParser {
 public:
  TurtleParser(TripleStore& store, std::string_view doc)
      : store_(store), tokens_(tokenize(doc, false, Errc::ParseError)) {}

  std::size_t run() {
    while (cur().kind != TokenKind::End) {
      if (is_directive()) {
        directive();
      } else {
        statement();
      }
    }
    return added_;
  }

 private:
  const Token& cur() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const Token& at, const std::string& msg) const {
    throw Error(Errc::ParseError, msg + ", found " + describe(at), at.line, at.column);
  }

  void expect_punct(std::string_view p) {
    if (!cur().is_punct(p)) fail(cur(), "expected '" + std::string(p) + "'");
    ++pos_;
  }

  bool is_directive() const {
    if (cur().kind != TokenKind::Word) return false;
    return cur().text == "@prefix" || cur().text == "PREFIX" || cur().text == "prefix";
  }

  void directive() {
    bool sparql_style = cur().text != "@prefix";
    ++pos_;
    const Token& name = next();
    if (name.kind != TokenKind::PrefixedName || name.text.back() != ':') {
      fail(name, "expected prefix label");
    }
    const Token& iri = next();
    if (iri.kind != TokenKind::IriRef) fail(iri, "expected IRI");
    store_.set_prefix(name.text.substr(0, name.text.size() - 1), iri.text);
    if (!sparql_style) expect_punct(".");
  }

  void statement() {
    Term subject;
    if (cur().is_punct("[")) {
      subject = blank_property_list();
      if (cur().is_punct(".")) {
        ++pos_;
        return;
      }
    } else {
      subject = subject_term();
    }
    predicate_object_list(subject);
    expect_punct(".");
  }

  Term subject_term() {
    const Token& t = cur();
    switch (t.kind) {
      case TokenKind::IriRef:
      case TokenKind::PrefixedName: return iri();
      case TokenKind::BlankLabel: ++pos_; return blank(t.text);
      default: fail(t, "expected subject");
    }
  }

  void predicate_object_list(const Term& subject) {
    while (true) {
      Term predicate = verb();
      while (true) {
        Term object = object_term();
        if (store_.insert(subject, predicate, object)) ++added_;
        if (!cur().is_punct(",")) break;
        ++pos_;
      }
      if (!cur().is_punct(";")) return;
      while (cur().is_punct(";")) ++pos_;
      if (cur().is_punct(".") || cur().is_punct("]")) return;
    }
  }

  Term verb() {
    if (cur().is(TokenKind::Word, "a")) {
      ++pos_;
      return vocab::rdf_type;
    }
    if (cur().kind != TokenKind::IriRef && cur().kind != TokenKind::PrefixedName) {
      fail(cur(), "expected predicate");
    }
    return iri();
  }

  Term object_term() {
    const Token& t = cur();
    switch (t.kind) {
      case TokenKind::IriRef:
      case TokenKind::PrefixedName: return iri();
      case TokenKind::BlankLabel: ++pos_; return blank(t.text);
      case TokenKind::String: {
        ++pos_;
        if (cur().is_punct("^^")) {
          ++pos_;
          if (cur().kind != TokenKind::IriRef && cur().kind != TokenKind::PrefixedName) {
            fail(cur(), "expected datatype IRI");
          }
          return Term::literal(t.text, iri().value());
        }
        if (cur().kind == TokenKind::Word && cur().text.starts_with("@")) {
          fail(cur(), "language tags are not supported");
        }
        return Term::literal(t.text);
      }
      case TokenKind::Integer: ++pos_; return Term::literal(t.text, xsd::integer);
      case TokenKind::Decimal: ++pos_; return Term::literal(t.text, xsd::decimal);
      case TokenKind::Word:
        if (t.text == "true" || t.text == "false") {
          ++pos_;
          return Term::literal(t.text, xsd::boolean);
        }
        fail(t, "expected object");
      case TokenKind::Punct:
        if (t.text == "[") return blank_property_list();
        fail(t, "expected object");
      default: fail(t, "expected object");
    }
  }

  Term blank_property_list() {
    expect_punct("[");
    Term node = Term::blank(store_.fresh_blank_label("genid"));
    if (!cur().is_punct("]")) predicate_object_list(node);
    expect_punct("]");
    return node;
  }

  Term iri() {
    const Token& t = next();
    if (t.kind == TokenKind::IriRef) {
      try {
        return Term::iri(t.text);
      } catch (const Error& e) {
        fail(t, e.what());
      }
    }
    auto colon = t.text.find(':');
    std::string label = t.text.substr(0, colon);
    const auto& prefixes = store_.prefixes();
    auto it = prefixes.find(label);
    if (it == prefixes.end()) {
      throw Error(Errc::UndefinedPrefix, "undefined prefix '" + label + ":'", t.line, t.column);
    }
    return Term::iri(it->second + t.text.substr(colon + 1));
  }

  Term blank(const std::string& label) {
    auto it = blank_map_.find(label);
    if (it != blank_map_.end()) return Term::blank(it->second);
    std::string fresh = store_.fresh_blank_label(label);
    blank_map_.emplace(label, fresh);
    return Term::blank(fresh);
  }

  TripleStore& store_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t added_ = 0;
  std::map<std::string, std::string> blank_map_;
};

}  // namespace

std::size_t load_text(TripleStore& store, std::string_view document) {
  return TurtleParser(store, document).run();
}

std::size_t load_file(TripleStore& store, const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_text(store, buf.str());
}

std::string serialize(const TripleStore& store) {
  const auto& prefixes = store.prefixes();
  std::ostringstream out;
  for (const auto& [label, base] : prefixes) {
    out << "@prefix " << label << ": <" << base << "> .\n";
  }

  using Row = std::tuple<std::string, std::string, std::string>;
  std::vector<Row> rows;
  rows.reserve(store.size());
  for (const auto& t : store.triples()) {
    rows.emplace_back(render(t.subject, prefixes), render(t.predicate, prefixes),
                      render(t.object, prefixes));
  }
  std::sort(rows.begin(), rows.end());
  if (!rows.empty()) out << "\n";
  for (const auto& [s, p, o] : rows) out << s << " " << p << " " << o << " .\n";
  return out.str();
}

}  // namespace compass
