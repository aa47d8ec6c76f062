#pragma once

#include "compass/store.hpp"
#include "compass/validator.hpp"

namespace compass::testing {

// Adds one self-contained fault of `kind` under fresh cp:Fault-* nodes. On a
// clean store the result has exactly one violation, of that kind.
void inject_fault(TripleStore& store, ViolationKind kind);

}  // namespace compass::testing
