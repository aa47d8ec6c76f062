#include "compass/store.hpp"

#include <algorithm>

#include "compass/error.hpp"

namespace compass {

TripleStore::TripleStore() : prefixes_(default_prefixes()) {}

TermId TripleStore::intern(const Term& t) {
  auto it = ids_.find(t);
  if (it != ids_.end()) return it->second;
  auto id = static_cast<TermId>(terms_.size());
  terms_.push_back(t);
  ids_.emplace(t, id);
  if (t.is_blank()) blank_labels_.insert(t.value());
  return id;
}

bool TripleStore::insert(const Triple& t) {
  check_well_formed(t);
  TermId s = intern(t.subject);
  TermId p = intern(t.predicate);
  TermId o = intern(t.object);
  if (!spo_.insert({s, p, o}).second) return false;
  pos_.insert({p, o, s});
  osp_.insert({o, s, p});
  return true;
}

std::optional<TermId> TripleStore::lookup(const Term& t) const {
  auto it = ids_.find(t);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

bool TripleStore::contains(const Triple& t) const {
  auto s = lookup(t.subject);
  auto p = lookup(t.predicate);
  auto o = lookup(t.object);
  return s && p && o && spo_.count({*s, *p, *o}) > 0;
}

IdTriple TripleStore::from_key(IndexOrder order, const Key& k) const {
  switch (order) {
    case IndexOrder::Spo: return {k[0], k[1], k[2]};
    case IndexOrder::Pos: return {k[2], k[0], k[1]};
    case IndexOrder::Osp: return {k[1], k[2], k[0]};
  }
  return {};
}

std::vector<IdTriple> TripleStore::match_ids_using(IndexOrder order, std::optional<TermId> s,
                                                   std::optional<TermId> p,
                                                   std::optional<TermId> o) const {
  const std::set<Key>* index = nullptr;
  std::array<std::optional<TermId>, 3> bound;
  switch (order) {
    case IndexOrder::Spo: index = &spo_; bound = {s, p, o}; break;
    case IndexOrder::Pos: index = &pos_; bound = {p, o, s}; break;
    case IndexOrder::Osp: index = &osp_; bound = {o, s, p}; break;
  }

  std::size_t prefix_len = 0;
  while (prefix_len < 3 && bound[prefix_len]) ++prefix_len;

  Key low{0, 0, 0};
  for (std::size_t i = 0; i < prefix_len; ++i) low[i] = *bound[i];

  std::vector<IdTriple> out;
  for (auto it = index->lower_bound(low); it != index->end(); ++it) {
    const Key& k = *it;
    bool in_prefix = true;
    for (std::size_t i = 0; i < prefix_len; ++i) {
      if (k[i] != low[i]) {
        in_prefix = false;
        break;
      }
    }
    if (!in_prefix) break;
    bool ok = true;
    for (std::size_t i = prefix_len; i < 3; ++i) {
      if (bound[i] && k[i] != *bound[i]) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(from_key(order, k));
  }
  return out;
}

std::vector<IdTriple> TripleStore::match_ids(std::optional<TermId> s, std::optional<TermId> p,
                                             std::optional<TermId> o) const {
  // Index whose leading positions cover the most bound components.
  IndexOrder order = IndexOrder::Spo;
  if (s && !p && o) {
    order = IndexOrder::Osp;
  } else if (!s && p) {
    order = IndexOrder::Pos;
  } else if (!s && !p && o) {
    order = IndexOrder::Osp;
  }
  return match_ids_using(order, s, p, o);
}

std::vector<Triple> TripleStore::match(const std::optional<Term>& s, const std::optional<Term>& p,
                                       const std::optional<Term>& o) const {
  std::optional<TermId> sid, pid, oid;
  if (s) {
    sid = lookup(*s);
    if (!sid) return {};
  }
  if (p) {
    pid = lookup(*p);
    if (!pid) return {};
  }
  if (o) {
    oid = lookup(*o);
    if (!oid) return {};
  }
  std::vector<Triple> out;
  for (const auto& t : match_ids(sid, pid, oid)) {
    out.push_back({terms_[t.s], terms_[t.p], terms_[t.o]});
  }
  return out;
}

std::vector<Term> TripleStore::objects(const Term& s, const Term& p) const {
  std::vector<Term> out;
  for (auto& t : match(s, p, std::nullopt)) out.push_back(std::move(t.object));
  return out;
}

std::vector<Term> TripleStore::subjects(const Term& p, const Term& o) const {
  std::vector<Term> out;
  for (auto& t : match(std::nullopt, p, o)) out.push_back(std::move(t.subject));
  return out;
}

std::vector<Triple> TripleStore::triples() const { return match(std::nullopt, std::nullopt, std::nullopt); }

void TripleStore::set_prefix(std::string label, std::string base) {
  prefixes_[std::move(label)] = std::move(base);
}

std::string TripleStore::fresh_blank_label(std::string_view hint) {
  std::string label(hint.empty() ? "b" : hint);
  if (blank_labels_.count(label) == 0) {
    blank_labels_.insert(label);
    return label;
  }
  std::string base = label;
  do {
    label = base + "_" + std::to_string(blank_counter_++);
  } while (blank_labels_.count(label) != 0);
  blank_labels_.insert(label);
  return label;
}

bool operator==(const TripleStore& a, const TripleStore& b) {
  if (a.size() != b.size()) return false;
  for (const auto& k : a.spo_) {
    Triple t{a.terms_[k[0]], a.terms_[k[1]], a.terms_[k[2]]};
    if (!b.contains(t)) return false;
  }
  return true;
}

}  // namespace compass
