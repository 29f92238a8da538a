#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "liarwb/errors.hpp"
#include "liarwb/formula.hpp"
#include "liarwb/system.hpp"

namespace liarwb::tarski {

// Hierarchy placement: level 0 means no truth predicate is involved; the
// level of a sentence is the largest index occurring in its definition.
struct LevelMap {
  std::map<std::string, unsigned> levels;
  friend bool operator==(const LevelMap&, const LevelMap&) = default;
};

// The circularity the hierarchy excludes. index is empty for a T? occurrence.
struct LevelViolation {
  enum class Reason { IndexTooLow, CyclicDependency };
  std::string offending_name;
  std::optional<unsigned> index;
  std::string target;
  Reason reason;
};

using LevelResult = std::variant<LevelMap, LevelViolation>;

namespace detail {

struct Occurrence {
  std::optional<unsigned> index;  // empty: to be inferred
  std::string target;
};

inline void collect_occurrences(const Formula& f, std::vector<Occurrence>& out,
                                bool allow_unindexed) {
  switch (f.kind()) {
    case Formula::Kind::TruthOf:
      throw EvalError("unindexed truth occurrence T(" + f.name() +
                      "); the hierarchy requires an index (or T? for inference)");
    case Formula::Kind::TruthAt:
      if (!f.level() && !allow_unindexed)
        throw EvalError("unresolved index marker T?(" + f.name() + ")");
      out.push_back({f.level(), f.name()});
      break;
    case Formula::Kind::Box:
      throw EvalError("box present; the hierarchy interprets only indexed truth");
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Imp:
      collect_occurrences(f.left(), out, allow_unindexed);
      collect_occurrences(f.right(), out, allow_unindexed);
      break;
    default:
      break;
  }
}

}  // namespace detail

// Checks the lower-index restriction for a fully indexed system: every
// occurrence T_k(s) inside a definition requires level(s) < k. On success
// returns the induced level map, otherwise the first violation in file order.
inline LevelResult check_levels(const SentenceSystem& sys) {
  std::map<std::string, std::vector<detail::Occurrence>> occs;
  LevelMap lm;
  for (const auto& [name, body] : sys.definitions()) {
    auto& v = occs[name];
    detail::collect_occurrences(body, v, /*allow_unindexed=*/false);
    unsigned level = 0;
    for (const auto& o : v) level = std::max(level, *o.index);
    lm.levels[name] = level;
  }
  for (const auto& [name, body] : sys.definitions())
    for (const auto& o : occs[name])
      if (lm.levels.at(o.target) >= *o.index)
        return LevelViolation{name, o.index, o.target, LevelViolation::Reason::IndexTooLow};
  return lm;
}

// Assigns the pointwise-minimal indices satisfying the lower-index
// restriction; T? markers are free, written indices are fixed. Minimal
// levels are longest paths in the T-dependency graph, so any cycle through
// a truth occurrence is unsatisfiable and is reported as such.
inline LevelResult infer_levels(const SentenceSystem& sys) {
  const auto defs = sys.definitions();
  std::map<std::string, std::vector<detail::Occurrence>> occs;
  for (const auto& [name, body] : defs)
    detail::collect_occurrences(body, occs[name], /*allow_unindexed=*/true);

  // Cycle check over edges target -> container.
  std::map<std::string, int> state;  // 0 unvisited, 1 on stack, 2 done
  auto on_cycle = [&](auto&& self, const std::string& n) -> bool {
    state[n] = 1;
    for (const auto& o : occs[n]) {
      int s = state[o.target];
      if (s == 1) return true;
      if (s == 0 && self(self, o.target)) return true;
    }
    state[n] = 2;
    return false;
  };
  for (const auto& [name, body] : defs) {
    if (state[name] == 0 && on_cycle(on_cycle, name)) {
      // Report the first definition in file order that references a name on
      // its own dependency cycle.
      for (const auto& [n2, b2] : defs)
        for (const auto& o : occs[n2])
          if (state[o.target] == 1 || o.target == n2)
            return LevelViolation{n2, o.index, o.target,
                                  LevelViolation::Reason::CyclicDependency};
      return LevelViolation{name, std::nullopt, name,
                            LevelViolation::Reason::CyclicDependency};
    }
  }

  // Acyclic: relax to the least fixed point of
  //   level(n) = max over occurrences (k fixed, or level(target)+1).
  LevelMap lm;
  for (const auto& [name, body] : defs) lm.levels[name] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [name, body] : defs) {
      unsigned level = 0;
      for (const auto& o : occs[name]) {
        unsigned k = o.index ? *o.index : lm.levels.at(o.target) + 1;
        level = std::max(level, k);
      }
      if (level > lm.levels.at(name)) {
        lm.levels[name] = level;
        changed = true;
      }
    }
  }
  for (const auto& [name, body] : defs)
    for (const auto& o : occs[name])
      if (o.index && lm.levels.at(o.target) >= *o.index)
        return LevelViolation{name, o.index, o.target, LevelViolation::Reason::IndexTooLow};
  return lm;
}

// Rewrites every T? occurrence to its minimal admissible index,
// level(target) + 1. Levels must come from a successful infer_levels.
inline Formula resolve_indices(const Formula& f, const LevelMap& lm) {
  switch (f.kind()) {
    case Formula::Kind::TruthAt:
      if (!f.level()) return Formula::truth_at(lm.levels.at(f.name()) + 1, f.name());
      return f;
    case Formula::Kind::Box:
      return Formula::box(resolve_indices(f.body(), lm));
    case Formula::Kind::And:
      return Formula::conj(resolve_indices(f.left(), lm), resolve_indices(f.right(), lm));
    case Formula::Kind::Or:
      return Formula::disj(resolve_indices(f.left(), lm), resolve_indices(f.right(), lm));
    case Formula::Kind::Imp:
      return Formula::imp(resolve_indices(f.left(), lm), resolve_indices(f.right(), lm));
    default:
      return f;
  }
}

inline SentenceSystem resolve_indices(const SentenceSystem& sys, const LevelMap& lm) {
  SentenceSystem out;
  for (const auto& [name, body] : sys.definitions())
    out.add_definition(name, resolve_indices(body, lm));
  for (const auto& [name, value] : sys.base_facts_in_order()) out.add_base_fact(name, value);
  for (const auto& f : sys.axioms()) out.add_axiom(f);
  for (const auto& [label, f] : sys.goals()) out.add_goal(label, f);
  for (const auto& [k, v] : sys.options()) out.add_option(k, v);
  return out;
}

// Erases the hierarchy back into the single unindexed predicate,
// T_k(s) -> T(s). Links the stratified reading to the staged one.
inline Formula erase_indices(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::TruthAt:
      return Formula::truth(f.name());
    case Formula::Kind::Box:
      return Formula::box(erase_indices(f.body()));
    case Formula::Kind::And:
      return Formula::conj(erase_indices(f.left()), erase_indices(f.right()));
    case Formula::Kind::Or:
      return Formula::disj(erase_indices(f.left()), erase_indices(f.right()));
    case Formula::Kind::Imp:
      return Formula::imp(erase_indices(f.left()), erase_indices(f.right()));
    default:
      return f;
  }
}

inline SentenceSystem erase_indices(const SentenceSystem& sys) {
  SentenceSystem out;
  for (const auto& [name, body] : sys.definitions())
    out.add_definition(name, erase_indices(body));
  for (const auto& [name, value] : sys.base_facts_in_order()) out.add_base_fact(name, value);
  return out;
}

namespace detail {

inline bool eval_classical(const Formula& f, const std::map<std::string, bool>& computed,
                           const std::map<std::string, bool>& base) {
  switch (f.kind()) {
    case Formula::Kind::Falsum:
      return false;
    case Formula::Kind::Atom: {
      auto it = base.find(f.name());
      if (it == base.end())
        throw EvalError("atom '" + f.name() + "' has no base-fact value");
      return it->second;
    }
    case Formula::Kind::TruthAt: {
      auto it = computed.find(f.name());
      if (it == computed.end())
        throw EvalError("internal: sentence '" + f.name() + "' not yet evaluated");
      return it->second;
    }
    case Formula::Kind::TruthOf:
      throw EvalError("unindexed truth occurrence in stratified evaluation");
    case Formula::Kind::Box:
      throw EvalError("box present in stratified evaluation");
    case Formula::Kind::And:
      return eval_classical(f.left(), computed, base) && eval_classical(f.right(), computed, base);
    case Formula::Kind::Or:
      return eval_classical(f.left(), computed, base) || eval_classical(f.right(), computed, base);
    case Formula::Kind::Imp:
      return !eval_classical(f.left(), computed, base) || eval_classical(f.right(), computed, base);
  }
  throw EvalError("unreachable formula kind");
}

}  // namespace detail

// Classical two-valued evaluation by level strata: level-0 sentences from
// the base facts, level-k sentences reading already computed lower-level
// values through the indexed predicate. Every sentence gets exactly one
// boolean.
inline std::map<std::string, bool> tarski_eval(const SentenceSystem& sys, const LevelMap& lm) {
  std::vector<std::pair<std::string, Formula>> order(sys.definitions().begin(),
                                                     sys.definitions().end());
  std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    return lm.levels.at(a.first) < lm.levels.at(b.first);
  });
  std::map<std::string, bool> values;
  for (const auto& [name, body] : order)
    values[name] = detail::eval_classical(body, values, sys.base_facts());
  return values;
}

// --- report line formats ---

// `levels: name=k ...`
inline std::string format_levels(const LevelMap& lm) {
  std::string out = "levels:";
  for (const auto& [name, k] : lm.levels) out += " " + name + "=" + std::to_string(k);
  return out;
}

// `violation: <name> T<k>(<target>) <reason>`
inline std::string format_violation(const LevelViolation& v) {
  std::string idx = v.index ? std::to_string(*v.index) : "?";
  std::string reason = v.reason == LevelViolation::Reason::IndexTooLow
                           ? "index-too-low"
                           : "cyclic-dependency";
  return "violation: " + v.offending_name + " T" + idx + "(" + v.target + ") " + reason;
}

}  // namespace liarwb::tarski
