#include "utt/prop.hpp"

#include <algorithm>
#include <iterator>

#include "utt/error.hpp"

namespace utt {

Prop Prop::of(Atom a) {
  Prop p;
  p.atoms_.push_back(a);
  return p;
}

Prop Prop::of(std::initializer_list<Atom> atoms) {
  Prop p;
  p.atoms_.assign(atoms.begin(), atoms.end());
  std::sort(p.atoms_.begin(), p.atoms_.end());
  p.atoms_.erase(std::unique(p.atoms_.begin(), p.atoms_.end()), p.atoms_.end());
  return p;
}

bool Prop::operator<(const Prop& other) const {
  if (atoms_.size() != other.atoms_.size()) return atoms_.size() < other.atoms_.size();
  return atoms_ < other.atoms_;
}

Prop meet(const Prop& p, const Prop& q) {
  if (p.is_top()) return q;
  if (q.is_top()) return p;
  Prop r;
  r.atoms_.reserve(p.atoms_.size() + q.atoms_.size());
  std::set_union(p.atoms_.begin(), p.atoms_.end(), q.atoms_.begin(), q.atoms_.end(),
                 std::back_inserter(r.atoms_));
  return r;
}

bool entails(const Prop& p, const Prop& q) {
  return std::includes(p.atoms_.begin(), p.atoms_.end(), q.atoms_.begin(), q.atoms_.end());
}

Prop meet_all(std::span<const Prop> props) {
  Prop r;
  for (const auto& p : props) r = meet(r, p);
  return r;
}

Frontier frontier_or(Frontier f, const Prop& p) {
  for (const auto& d : f.disjuncts_)
    if (entails(p, d)) return f;  // p ∨ d = d
  std::erase_if(f.disjuncts_, [&](const Prop& d) { return entails(d, p); });
  f.disjuncts_.insert(std::upper_bound(f.disjuncts_.begin(), f.disjuncts_.end(), p), p);
  return f;
}

Frontier frontier_join(Frontier f, const Frontier& g) {
  for (const auto& d : g.disjuncts_) f = frontier_or(std::move(f), d);
  return f;
}

bool frontier_true(const Prop& hyps, const Frontier& f) {
  return std::any_of(f.disjuncts().begin(), f.disjuncts().end(),
                     [&](const Prop& d) { return entails(hyps, d); });
}

const Prop& PropTable::bind(std::string name, Prop value, bool hidden, bool fresh) {
  if (index_.contains(name)) throw Error(ErrorCode::DuplicateProp, "proposition `" + name + "` is already declared");
  index_.emplace(name, entries_.size());
  entries_.push_back(Entry{std::move(name), std::move(value), hidden, fresh});
  return entries_.back().value;
}

const Prop& PropTable::extend_le(std::string name, const Prop& q, bool hidden) {
  if (index_.contains(name)) throw Error(ErrorCode::DuplicateProp, "proposition `" + name + "` is already declared");
  Atom fresh{next_atom_++};
  hidden_atoms_.push_back(hidden);
  return bind(std::move(name), meet(Prop::of(fresh), q), hidden, true);
}

const Prop& PropTable::extend_eq(std::string name, const Prop& q, bool hidden) {
  return bind(std::move(name), q, hidden, false);
}

const PropTable::Entry* PropTable::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

const Prop& PropTable::lookup(std::string_view name) const {
  if (const auto* e = find(name)) return e->value;
  throw Error(ErrorCode::UnknownProp, "unknown proposition `" + std::string(name) + "`");
}

bool PropTable::is_hidden(Atom a) const { return a.id < hidden_atoms_.size() && hidden_atoms_[a.id]; }

bool PropTable::declares(const Prop& p) const {
  return std::all_of(p.atoms().begin(), p.atoms().end(), [&](Atom a) { return a.id < next_atom_; });
}

std::vector<std::string> PropTable::cover(const Prop& p) const {
  std::vector<Atom> remaining(p.atoms().begin(), p.atoms().end());
  std::vector<std::size_t> picked;
  while (!remaining.empty()) {
    std::size_t best = entries_.size();
    std::size_t best_gain = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      const auto& e = entries_[i];
      if (e.value.is_top() || !entails(p, e.value)) continue;
      std::size_t gain = 0;
      for (Atom a : e.value.atoms())
        if (std::binary_search(remaining.begin(), remaining.end(), a)) ++gain;
      if (gain > best_gain) {
        best = i;
        best_gain = gain;
      }
    }
    if (best == entries_.size()) break;
    picked.push_back(best);
    std::erase_if(remaining, [&](Atom a) {
      auto atoms = entries_[best].value.atoms();
      return std::binary_search(atoms.begin(), atoms.end(), a);
    });
  }
  std::sort(picked.begin(), picked.end());
  std::vector<std::string> names;
  for (auto i : picked) names.push_back(entries_[i].name);
  for (Atom a : remaining) names.push_back("%atom." + std::to_string(a.id));
  return names;
}

std::string PropTable::render(const Prop& p) const {
  if (p.is_top()) return "⊤";
  auto names = cover(p);
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += " ∧ ";
    out += names[i];
  }
  return out;
}

}  // namespace utt
