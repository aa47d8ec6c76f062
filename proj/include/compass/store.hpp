#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "compass/term.hpp"

namespace compass {

using TermId = std::uint32_t;

struct IdTriple {
  TermId s;
  TermId p;
  TermId o;
};

/// In-memory triple store with dictionary-encoded terms and three sorted
/// indexes (SPO, POS, OSP). Set semantics; no deletion.
///
/// Many concurrent readers or one writer. Once loading is finished a store
/// is treated as an immutable snapshot.
class TripleStore {
 public:
  enum class IndexOrder { Spo, Pos, Osp };

  TripleStore();

  // Returns true iff the triple was absent. Throws Error(MalformedTerm).
  bool insert(const Triple& t);
  bool insert(const Term& s, const Term& p, const Term& o) { return insert(Triple{s, p, o}); }

  std::size_t size() const noexcept { return spo_.size(); }
  bool empty() const noexcept { return spo_.empty(); }

  std::optional<TermId> lookup(const Term& t) const;
  const Term& term(TermId id) const { return terms_.at(id); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  bool contains(const Triple& t) const;

  // Triples matching every bound position, in the order of the index with
  // the longest bound prefix.
  std::vector<Triple> match(const std::optional<Term>& s, const std::optional<Term>& p,
                            const std::optional<Term>& o) const;

  std::vector<IdTriple> match_ids(std::optional<TermId> s, std::optional<TermId> p,
                                  std::optional<TermId> o) const;

  // Same result set as match_ids, scanning a caller-chosen index.
  std::vector<IdTriple> match_ids_using(IndexOrder order, std::optional<TermId> s,
                                        std::optional<TermId> p, std::optional<TermId> o) const;

  template <typename Fn>
  void for_each_match(std::optional<TermId> s, std::optional<TermId> p, std::optional<TermId> o,
                      Fn&& fn) const {
    for (const auto& t : match_ids(s, p, o)) fn(t);
  }

  // Term-level convenience used throughout the competency layer.
  std::vector<Term> objects(const Term& s, const Term& p) const;
  std::vector<Term> subjects(const Term& p, const Term& o) const;
  bool has(const Term& s, const Term& p, const Term& o) const { return contains({s, p, o}); }

  std::vector<Triple> triples() const;

  const PrefixMap& prefixes() const noexcept { return prefixes_; }
  void set_prefix(std::string label, std::string base);

  // Returns `hint` if no blank node of that label exists and it has not been
  // reserved yet, otherwise a derived fresh label. The result is reserved.
  std::string fresh_blank_label(std::string_view hint);

  // Equal iff both hold the same triple set (prefix maps are not compared).
  friend bool operator==(const TripleStore& a, const TripleStore& b);

 private:
  using Key = std::array<TermId, 3>;

  TermId intern(const Term& t);
  IdTriple from_key(IndexOrder order, const Key& k) const;

  std::vector<Term> terms_;
  std::unordered_map<Term, TermId, TermHash> ids_;
  std::set<Key> spo_;
  std::set<Key> pos_;
  std::set<Key> osp_;
  PrefixMap prefixes_;
  std::set<std::string, std::less<>> blank_labels_;
  std::size_t blank_counter_ = 0;
};

}  // namespace compass
