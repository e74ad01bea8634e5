#ifndef UTT_PROP_HPP
#define UTT_PROP_HPP

// The free bounded meet semilattice of unfolding propositions.
//
// A proposition is a finite set of atoms read as their conjunction; meet is
// union and entailment is reverse inclusion. Named propositions live in a
// PropTable: `prop p <= q` allocates a fresh atom conjoined with q, while
// `prop p = q` reuses q's atoms.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace utt {

struct Atom {
  std::uint32_t id = 0;

  auto operator<=>(const Atom&) const = default;
};

class Prop {
 public:
  /// ⊤, the empty conjunction.
  Prop() = default;

  static Prop top() { return Prop{}; }
  static Prop of(Atom a);
  static Prop of(std::initializer_list<Atom> atoms);

  bool is_top() const noexcept { return atoms_.empty(); }
  std::span<const Atom> atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }

  bool operator==(const Prop&) const = default;
  /// Total order used for deterministic antichains: by size, then atom ids.
  bool operator<(const Prop& other) const;

  friend Prop meet(const Prop& p, const Prop& q);
  friend bool entails(const Prop& p, const Prop& q);

 private:
  std::vector<Atom> atoms_;  // sorted, unique
};

inline Prop top() { return Prop::top(); }
Prop meet(const Prop& p, const Prop& q);
/// p ≤ q, i.e. atoms(q) ⊆ atoms(p).
bool entails(const Prop& p, const Prop& q);
Prop meet_all(std::span<const Prop> props);

/// A disjunction of propositions kept as an antichain under entailment.
/// The empty frontier is ⊥.
class Frontier {
 public:
  Frontier() = default;

  static Frontier never() { return Frontier{}; }

  bool is_never() const noexcept { return disjuncts_.empty(); }
  std::span<const Prop> disjuncts() const noexcept { return disjuncts_; }

  bool operator==(const Frontier&) const = default;

  friend Frontier frontier_or(Frontier f, const Prop& p);
  friend Frontier frontier_join(Frontier f, const Frontier& g);

 private:
  std::vector<Prop> disjuncts_;  // antichain, sorted by Prop::operator<
};

Frontier frontier_or(Frontier f, const Prop& p);
Frontier frontier_join(Frontier f, const Frontier& g);
/// True iff some disjunct is entailed by `hyps`.
bool frontier_true(const Prop& hyps, const Frontier& f);

/// Named propositions of one session. Names are unique; atoms are allocated
/// by a monotone counter and never renumbered.
class PropTable {
 public:
  struct Entry {
    std::string name;
    Prop value;
    bool hidden = false;
    bool fresh = false;  // introduced by extend_le
  };

  /// Binds `name` to a fresh atom conjoined with `q`. Throws DuplicateProp.
  const Prop& extend_le(std::string name, const Prop& q, bool hidden = false);
  /// Binds `name` to exactly `q`. Throws DuplicateProp.
  const Prop& extend_eq(std::string name, const Prop& q, bool hidden = false);

  /// Throws UnknownProp for undeclared names; never defaults to ⊤.
  const Prop& lookup(std::string_view name) const;
  const Entry* find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }

  bool is_hidden(Atom a) const;
  std::uint32_t atom_count() const noexcept { return next_atom_; }
  /// Every atom of `p` has been allocated by this table.
  bool declares(const Prop& p) const;

  std::span<const Entry> entries() const noexcept { return entries_; }

  /// Names whose meet is exactly `p`, chosen greedily (largest first, ties by
  /// declaration order) and listed in declaration order. Atoms that no named
  /// proposition covers are rendered as `%atom.N`.
  std::vector<std::string> cover(const Prop& p) const;
  std::string render(const Prop& p) const;

 private:
  const Prop& bind(std::string name, Prop value, bool hidden, bool fresh);

  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<bool> hidden_atoms_;
  std::uint32_t next_atom_ = 0;
};

}  // namespace utt

#endif  // UTT_PROP_HPP
