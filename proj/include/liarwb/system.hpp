#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "liarwb/errors.hpp"
#include "liarwb/formula.hpp"

namespace liarwb {

// A finite set of named self-referential definitions plus the base-fact
// valuation, axioms, labeled goals and per-scenario options. Definitions may
// be mutually and self-referential; sentence names and base-atom names live
// in disjoint namespaces.
class SentenceSystem {
 public:
  void add_definition(std::string name, Formula body) {
    if (def_index_.count(name))
      throw ValidationError("sentence '" + name + "' defined twice");
    def_index_[name] = defs_.size();
    defs_.emplace_back(std::move(name), std::move(body));
  }
  void add_base_fact(std::string name, bool value) {
    if (base_index_.count(name))
      throw ValidationError("atom '" + name + "' declared twice");
    base_index_[name] = value;
    base_order_.emplace_back(std::move(name), value);
  }
  void add_axiom(Formula f) { axioms_.push_back(std::move(f)); }
  void add_goal(std::string label, Formula f) {
    for (const auto& [l, g] : goals_)
      if (l == label) throw ValidationError("goal '" + label + "' defined twice");
    goals_.emplace_back(std::move(label), std::move(f));
  }
  void add_option(std::string key, std::string value) {
    if (options_map_.count(key))
      throw ValidationError("option '" + key + "' set twice");
    options_map_[key] = value;
    options_order_.emplace_back(std::move(key), std::move(value));
  }

  // Definitions in file order.
  std::span<const std::pair<std::string, Formula>> definitions() const { return defs_; }
  const Formula* find_definition(const std::string& name) const {
    auto it = def_index_.find(name);
    return it == def_index_.end() ? nullptr : &defs_[it->second].second;
  }
  bool defines(const std::string& name) const { return def_index_.count(name) > 0; }

  const std::map<std::string, bool>& base_facts() const { return base_index_; }
  std::span<const std::pair<std::string, bool>> base_facts_in_order() const { return base_order_; }
  std::span<const Formula> axioms() const { return axioms_; }
  std::span<const std::pair<std::string, Formula>> goals() const { return goals_; }
  const Formula* find_goal(const std::string& label) const {
    for (const auto& [l, g] : goals_)
      if (l == label) return &g;
    return nullptr;
  }
  std::span<const std::pair<std::string, std::string>> options() const { return options_order_; }
  std::optional<std::string> option(const std::string& key) const {
    auto it = options_map_.find(key);
    if (it == options_map_.end()) return std::nullopt;
    return it->second;
  }

  bool reflection_enabled() const { return option("reflection") == "on"; }
  unsigned enumeration_cap() const { return natural_option("cap", 12); }
  unsigned unfold_depth() const { return natural_option("depth", 1); }
  std::size_t node_budget() const { return natural_option("budget", 2'000'000); }

  // Enforces the type invariants: disjoint namespaces, defined T-targets,
  // known option values. Called by the scenario parser after construction.
  void validate() const {
    for (const auto& [name, value] : base_order_)
      if (def_index_.count(name))
        throw ValidationError("'" + name + "' is declared both as an atom and as a sentence");
    for (const auto& [name, body] : defs_) check_targets(body, "definition of " + name);
    for (const auto& f : axioms_) check_targets(f, "axiom");
    for (const auto& [label, f] : goals_) check_targets(f, "goal " + label);
    if (auto r = option("reflection"); r && *r != "on" && *r != "off")
      throw ValidationError("option reflection must be 'on' or 'off', got '" + *r + "'");
    for (const char* key : {"cap", "depth", "budget"})
      if (auto v = option(key)) {
        if (v->empty() || v->find_first_not_of("0123456789") != std::string::npos)
          throw ValidationError(std::string("option ") + key + " must be a natural number, got '" + *v + "'");
      }
  }

 private:
  unsigned natural_option(const std::string& key, unsigned fallback) const {
    auto v = option(key);
    if (!v) return fallback;
    return static_cast<unsigned>(std::stoul(*v));
  }

  void check_targets(const Formula& f, const std::string& where) const {
    switch (f.kind()) {
      case Formula::Kind::TruthOf:
      case Formula::Kind::TruthAt:
        if (!def_index_.count(f.name()))
          throw ValidationError("undefined sentence name '" + f.name() + "' in " + where);
        break;
      case Formula::Kind::Box:
        check_targets(f.body(), where);
        break;
      case Formula::Kind::And:
      case Formula::Kind::Or:
      case Formula::Kind::Imp:
        check_targets(f.left(), where);
        check_targets(f.right(), where);
        break;
      default:
        break;
    }
  }

  std::vector<std::pair<std::string, Formula>> defs_;
  std::map<std::string, std::size_t> def_index_;
  std::map<std::string, bool> base_index_;
  std::vector<std::pair<std::string, bool>> base_order_;
  std::vector<Formula> axioms_;
  std::vector<std::pair<std::string, Formula>> goals_;
  std::map<std::string, std::string> options_map_;
  std::vector<std::pair<std::string, std::string>> options_order_;
};

// Subformula closure used by the calculus for schema instantiation: every
// definition is unfolded once into its defining biconditional name <-> body,
// falsum is seeded, all subformulas are collected, and the single negation
// ~F of every member F is added on top.
inline FormulaSet closure_of(std::span<const std::pair<std::string, Formula>> definitions,
                             std::span<const Formula> axioms,
                             std::span<const Formula> extra) {
  FormulaSet sub;
  Formula::falsum().collect_subformulas(sub);
  for (const auto& [name, body] : definitions)
    Formula::iff(Formula::atom(name), body).collect_subformulas(sub);
  for (const auto& f : axioms) f.collect_subformulas(sub);
  for (const auto& f : extra) f.collect_subformulas(sub);
  FormulaSet out = sub;
  for (const auto& f : sub) out.insert(Formula::neg(f));
  return out;
}

inline FormulaSet closure(const SentenceSystem& sys, std::span<const Formula> extra) {
  return closure_of(sys.definitions(), sys.axioms(), extra);
}

}  // namespace liarwb
