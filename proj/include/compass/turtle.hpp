#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "compass/store.hpp"

namespace compass {

// Parses a Turtle-subset document into `store`: @prefix/PREFIX directives,
// prefixed names, <absolute IRIs>, plain and ^^typed literals, bare
// integers/decimals, `a`, `,`/`;` abbreviation, [ ] property lists, _:labels
// and # comments. Blank labels are remapped to store-fresh labels per
// document. Returns the number of new distinct triples.
//
// Throws Error(ParseError) with line/column, or Error(UndefinedPrefix).
std::size_t load_text(TripleStore& store, std::string_view document);

std::size_t load_file(TripleStore& store, const std::filesystem::path& path);

// Prefix declarations followed by one fully expanded statement per line,
// sorted by subject, predicate, object rendering.
std::string serialize(const TripleStore& store);

}  // namespace compass
