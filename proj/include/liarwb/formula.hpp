#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace liarwb {

// Object-language formulas. Negation is not a constructor: ~A is stored as
// A -> false, verum as false -> false, and A <-> B as (A -> B) & (B -> A).
// Parsers desugar; the printer may resugar.
//
// Values are immutable and share subterms; copying a Formula copies a
// pointer. Structural equality is memoized through a per-node hash.
class Formula {
 public:
  enum class Kind : std::uint8_t {
    Falsum,   // false
    Atom,     // base fact or sentence name used assertorically
    TruthOf,  // T(name)        - unindexed truth predicate
    TruthAt,  // Tk(name)/T?(name) - indexed truth predicate, k >= 1
    Box,      // box A          - "A is provable"
    And,
    Or,
    Imp,
  };

  Formula() : node_(falsum().node_) {}

  static Formula falsum() {
    static const Formula f{std::make_shared<Node>(Kind::Falsum)};
    return f;
  }
  static Formula atom(std::string name) {
    auto n = std::make_shared<Node>(Kind::Atom);
    n->name = std::move(name);
    n->finish();
    return Formula{std::move(n)};
  }
  static Formula truth(std::string target) {
    auto n = std::make_shared<Node>(Kind::TruthOf);
    n->name = std::move(target);
    n->finish();
    return Formula{std::move(n)};
  }
  // level == nullopt encodes the to-be-inferred marker T?.
  static Formula truth_at(std::optional<unsigned> level, std::string target) {
    auto n = std::make_shared<Node>(Kind::TruthAt);
    n->name = std::move(target);
    n->level = level;
    n->finish();
    return Formula{std::move(n)};
  }
  static Formula box(Formula body) {
    auto n = std::make_shared<Node>(Kind::Box);
    n->lhs = std::move(body);
    n->finish();
    return Formula{std::move(n)};
  }
  static Formula conj(Formula l, Formula r) { return binary(Kind::And, std::move(l), std::move(r)); }
  static Formula disj(Formula l, Formula r) { return binary(Kind::Or, std::move(l), std::move(r)); }
  static Formula imp(Formula l, Formula r) { return binary(Kind::Imp, std::move(l), std::move(r)); }

  // Sugar.
  static Formula neg(Formula f) { return imp(std::move(f), falsum()); }
  static Formula verum() { return imp(falsum(), falsum()); }
  static Formula iff(const Formula& l, const Formula& r) {
    return conj(imp(l, r), imp(r, l));
  }

  Kind kind() const { return node_->kind; }
  // Atom name or truth-predicate target.
  const std::string& name() const { return node_->name; }
  // TruthAt index; nullopt for the T? marker.
  std::optional<unsigned> level() const { return node_->level; }
  const Formula& left() const { return node_->lhs; }
  const Formula& right() const { return node_->rhs; }
  const Formula& body() const { return node_->lhs; }  // Box

  bool is(Kind k) const { return node_->kind == k; }
  bool is_falsum() const { return is(Kind::Falsum); }
  bool is_negation() const {
    return is(Kind::Imp) && right().is_falsum();
  }
  bool is_verum() const { return is_negation() && left().is_falsum(); }
  // Matches (A -> B) & (B -> A); yields A and B.
  std::optional<std::pair<Formula, Formula>> as_iff() const {
    if (!is(Kind::And) || !left().is(Kind::Imp) || !right().is(Kind::Imp)) return std::nullopt;
    if (left().left() == right().right() && left().right() == right().left())
      return std::make_pair(left().left(), left().right());
    return std::nullopt;
  }

  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->hash != b.node_->hash) return false;
    return equal_nodes(*a.node_, *b.node_);
  }
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

  // Total structural order, used for deterministic sets and reports.
  static int compare(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return 0;
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    switch (a.kind()) {
      case Kind::Falsum:
        return 0;
      case Kind::Atom:
      case Kind::TruthOf:
        return a.name().compare(b.name());
      case Kind::TruthAt: {
        if (int c = a.name().compare(b.name())) return c < 0 ? -1 : 1;
        unsigned la = a.level().value_or(0), lb = b.level().value_or(0);
        return la == lb ? 0 : (la < lb ? -1 : 1);
      }
      case Kind::Box:
        return compare(a.body(), b.body());
      default: {
        if (int c = compare(a.left(), b.left())) return c;
        return compare(a.right(), b.right());
      }
    }
  }
  friend bool operator<(const Formula& a, const Formula& b) { return compare(a, b) < 0; }

  // Node count, counting every constructor occurrence.
  std::size_t size() const {
    switch (kind()) {
      case Kind::Falsum:
      case Kind::Atom:
      case Kind::TruthOf:
      case Kind::TruthAt:
        return 1;
      case Kind::Box:
        return 1 + body().size();
      default:
        return 1 + left().size() + right().size();
    }
  }

  bool contains_box() const {
    switch (kind()) {
      case Kind::Box:
        return true;
      case Kind::And:
      case Kind::Or:
      case Kind::Imp:
        return left().contains_box() || right().contains_box();
      default:
        return false;
    }
  }
  bool contains_truth_of() const {
    switch (kind()) {
      case Kind::TruthOf:
        return true;
      case Kind::Box:
        return body().contains_truth_of();
      case Kind::And:
      case Kind::Or:
      case Kind::Imp:
        return left().contains_truth_of() || right().contains_truth_of();
      default:
        return false;
    }
  }
  bool contains_truth_at() const {
    switch (kind()) {
      case Kind::TruthAt:
        return true;
      case Kind::Box:
        return body().contains_truth_at();
      case Kind::And:
      case Kind::Or:
      case Kind::Imp:
        return left().contains_truth_at() || right().contains_truth_at();
      default:
        return false;
    }
  }

  // All subformulas including the formula itself.
  void collect_subformulas(std::set<Formula>& out) const {
    if (!out.insert(*this).second) return;
    switch (kind()) {
      case Kind::Box:
        body().collect_subformulas(out);
        break;
      case Kind::And:
      case Kind::Or:
      case Kind::Imp:
        left().collect_subformulas(out);
        right().collect_subformulas(out);
        break;
      default:
        break;
    }
  }

 private:
  struct Node {
    explicit Node(Kind k) : kind(k) { finish(); }
    Kind kind;
    std::string name;
    std::optional<unsigned> level;
    Formula lhs{empty_tag{}};
    Formula rhs{empty_tag{}};
    std::size_t hash = 0;

    void finish() {
      std::size_t h = static_cast<std::size_t>(kind) * 0x9e3779b97f4a7c15ull;
      h ^= std::hash<std::string>{}(name) + 0x9e3779b9 + (h << 6) + (h >> 2);
      if (level) h ^= (*level + 1) * 0x100000001b3ull;
      if (lhs.node_) h ^= lhs.node_->hash + 0x9e3779b9 + (h << 6) + (h >> 2);
      if (rhs.node_) h ^= rhs.node_->hash + 0x9e3779b9 + (h << 6) + (h >> 2);
      hash = h;
    }
  };

  struct empty_tag {};
  explicit Formula(empty_tag) : node_(nullptr) {}
  explicit Formula(std::shared_ptr<Node> n) : node_(std::move(n)) {}

  static Formula binary(Kind k, Formula l, Formula r) {
    auto n = std::make_shared<Node>(k);
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    n->finish();
    return Formula{std::move(n)};
  }

  static bool equal_nodes(const Node& a, const Node& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case Kind::Falsum:
        return true;
      case Kind::Atom:
      case Kind::TruthOf:
        return a.name == b.name;
      case Kind::TruthAt:
        return a.name == b.name && a.level == b.level;
      case Kind::Box:
        return a.lhs == b.lhs;
      default:
        return a.lhs == b.lhs && a.rhs == b.rhs;
    }
  }

  std::shared_ptr<const Node> node_;
};

using FormulaSet = std::set<Formula>;

}  // namespace liarwb

template <>
struct std::hash<liarwb::Formula> {
  std::size_t operator()(const liarwb::Formula& f) const noexcept { return f.hash(); }
};
