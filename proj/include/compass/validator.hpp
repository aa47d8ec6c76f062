#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "compass/ontology.hpp"
#include "compass/store.hpp"
#include "compass/term.hpp"

namespace compass {

enum class ViolationKind {
  CodedRange,
  EnumerationRange,
  Datatype,
  MissingRequiredLink,
  EventChainBroken,
  EventOrder,
  DomainMismatch,
};

inline constexpr ViolationKind kAllViolationKinds[] = {
    ViolationKind::CodedRange,          ViolationKind::EnumerationRange,
    ViolationKind::Datatype,            ViolationKind::MissingRequiredLink,
    ViolationKind::EventChainBroken,    ViolationKind::EventOrder,
    ViolationKind::DomainMismatch,
};

// "coded-range", "enumeration-range", ...
std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  Term focus;
  std::optional<std::string> property;
  std::string message;

  bool operator==(const Violation&) const = default;
};

// Violations sorted by (kind, focus, property, message). Subjects without any
// rdf:type are not checked against property domains, and a property with
// several declarations is range-checked only when the subject's type selects
// among them.
std::vector<Violation> validate(const TripleStore& store, const Schema& schema);

// One line: "<kind> <focus> [<property>]: <message>".
std::string explain(const Violation& v, const PrefixMap& prefixes = default_prefixes());

}  // namespace compass
