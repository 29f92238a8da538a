#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liarwb/errors.hpp"
#include "liarwb/formula.hpp"
#include "liarwb/system.hpp"

namespace liarwb::kripke {

// Three-valued truth value; U means "no value assigned yet", not a third
// truth value.
enum class Tv : std::uint8_t { F, T, U };

inline char tv_letter(Tv v) { return v == Tv::T ? 't' : v == Tv::F ? 'f' : 'u'; }

// A partial assignment of the truth predicate over sentence names. Names
// mapped to T form the extension, names mapped to F the anti-extension; the
// two are disjoint by representation.
struct Interpretation {
  std::map<std::string, Tv> values;

  Tv at(const std::string& name) const {
    auto it = values.find(name);
    if (it == values.end()) throw EvalError("no sentence named '" + name + "'");
    return it->second;
  }
  std::size_t determined_count() const {
    std::size_t n = 0;
    for (const auto& [k, v] : values)
      if (v != Tv::U) ++n;
    return n;
  }
  friend bool operator==(const Interpretation&, const Interpretation&) = default;
};

inline Interpretation all_unknown(const SentenceSystem& sys) {
  Interpretation i;
  for (const auto& [name, body] : sys.definitions()) i.values[name] = Tv::U;
  return i;
}

// Information order: i1 is below i2 when i2 preserves every value i1 has
// already determined.
inline bool below(const Interpretation& i1, const Interpretation& i2) {
  if (i1.values.size() != i2.values.size()) throw DomainMismatchError("interpretation domains differ");
  auto it2 = i2.values.begin();
  for (auto it1 = i1.values.begin(); it1 != i1.values.end(); ++it1, ++it2) {
    if (it1->first != it2->first) throw DomainMismatchError("interpretation domains differ");
    if (it1->second != Tv::U && it1->second != it2->second) return false;
  }
  return true;
}

enum class Order { Subordinate, Extends, Equal, Incomparable };

inline Order compare(const Interpretation& i1, const Interpretation& i2) {
  bool le = below(i1, i2);
  bool ge = below(i2, i1);
  if (le && ge) return Order::Equal;
  if (le) return Order::Subordinate;
  if (ge) return Order::Extends;
  return Order::Incomparable;
}

inline const char* order_name(Order o) {
  switch (o) {
    case Order::Subordinate: return "subordinate";
    case Order::Extends: return "extends";
    case Order::Equal: return "equal";
    default: return "incomparable";
  }
}

// Strong Kleene evaluation. The formula must be free of box and indexed
// truth; this module does not interpret them.
inline Tv sk_eval(const Formula& f, const Interpretation& i,
                  const std::map<std::string, bool>& base) {
  switch (f.kind()) {
    case Formula::Kind::Falsum:
      return Tv::F;
    case Formula::Kind::Atom: {
      auto it = base.find(f.name());
      if (it == base.end())
        throw EvalError("atom '" + f.name() + "' has no base-fact value");
      return it->second ? Tv::T : Tv::F;
    }
    case Formula::Kind::TruthOf:
      return i.at(f.name());
    case Formula::Kind::TruthAt:
      throw EvalError("indexed truth predicate has no staged three-valued reading; use the level checker");
    case Formula::Kind::Box:
      throw EvalError("box has no three-valued reading; use the provability calculus");
    case Formula::Kind::And: {
      Tv l = sk_eval(f.left(), i, base), r = sk_eval(f.right(), i, base);
      if (l == Tv::F || r == Tv::F) return Tv::F;
      if (l == Tv::T && r == Tv::T) return Tv::T;
      return Tv::U;
    }
    case Formula::Kind::Or: {
      Tv l = sk_eval(f.left(), i, base), r = sk_eval(f.right(), i, base);
      if (l == Tv::T || r == Tv::T) return Tv::T;
      if (l == Tv::F && r == Tv::F) return Tv::F;
      return Tv::U;
    }
    case Formula::Kind::Imp: {
      Tv l = sk_eval(f.left(), i, base), r = sk_eval(f.right(), i, base);
      if (l == Tv::F || r == Tv::T) return Tv::T;
      if (l == Tv::T && r == Tv::F) return Tv::F;
      return Tv::U;
    }
  }
  throw EvalError("unreachable formula kind");
}

// One stage of the construction: re-evaluate every definition under the
// current partial interpretation, synchronously.
inline Interpretation jump(const SentenceSystem& sys, const Interpretation& i) {
  Interpretation next;
  for (const auto& [name, body] : sys.definitions())
    next.values[name] = sk_eval(body, i, sys.base_facts());
  return next;
}

// The stages of the least-fixed-point iteration, starting from all-unknown.
struct StageTrace {
  std::vector<Interpretation> stages;
};

// Iterates the jump from the all-unknown interpretation until it stabilizes.
// The trace stops at the first fixed point; when stage 0 itself is already
// fixed (and there is anything to evaluate) the confirming equal stage is
// recorded so the trace witnesses at least one jump.
inline std::pair<Interpretation, StageTrace> least_fixed_point(const SentenceSystem& sys) {
  StageTrace trace;
  trace.stages.push_back(all_unknown(sys));
  while (true) {
    Interpretation next = jump(sys, trace.stages.back());
    if (next == trace.stages.back()) {
      if (trace.stages.size() == 1 && !next.values.empty()) trace.stages.push_back(next);
      break;
    }
    trace.stages.push_back(std::move(next));
  }
  return {trace.stages.back(), trace};
}

// Brute-force enumeration of every fixed point of the jump over {t,f,u}^names,
// in lexicographic order (names ascending, values ordered f < t < u). The
// oracle behind the classification; infeasible beyond the cap.
inline std::vector<Interpretation> enumerate_fixed_points(const SentenceSystem& sys,
                                                          unsigned cap = 12) {
  const auto defs = sys.definitions();
  if (defs.size() > cap)
    throw CapExceededError("fixed-point enumeration over " + std::to_string(defs.size()) +
                           " names exceeds cap " + std::to_string(cap));
  std::vector<std::string> names;
  for (const auto& [name, body] : defs) names.push_back(name);
  std::sort(names.begin(), names.end());

  static constexpr Tv order[] = {Tv::F, Tv::T, Tv::U};
  std::vector<unsigned> digits(names.size(), 0);
  std::vector<Interpretation> out;
  while (true) {
    Interpretation i;
    for (std::size_t k = 0; k < names.size(); ++k) i.values[names[k]] = order[digits[k]];
    if (jump(sys, i) == i) out.push_back(i);
    // odometer: last name varies fastest
    std::size_t k = names.size();
    while (k > 0 && digits[k - 1] == 2) digits[--k] = 0;
    if (k == 0) break;
    ++digits[k - 1];
  }
  return out;
}

struct Classification {
  enum class Kind { GroundedTrue, GroundedFalse, Paradoxical, UngroundedNonParadoxical };
  Kind kind;
  // Present for UngroundedNonParadoxical: two fixed points, the first
  // determining the name and the second giving it a different value.
  std::optional<Interpretation> witness_determined;
  std::optional<Interpretation> witness_other;
};

// Verdict for one name: grounded from the least fixed point alone, otherwise
// paradoxical when every fixed point leaves it unknown. Throws CapExceeded
// when the name is ungrounded and the enumeration oracle is infeasible;
// callers may then report the groundedness-only verdict.
inline Classification classify(const SentenceSystem& sys, const std::string& name,
                               unsigned cap = 12) {
  if (!sys.defines(name)) throw ValidationError("no sentence named '" + name + "'");
  auto [lfp, trace] = least_fixed_point(sys);
  Tv v = lfp.at(name);
  if (v == Tv::T) return {Classification::Kind::GroundedTrue, {}, {}};
  if (v == Tv::F) return {Classification::Kind::GroundedFalse, {}, {}};

  auto fps = enumerate_fixed_points(sys, cap);
  const Interpretation* determined = nullptr;
  for (const auto& fp : fps)
    if (fp.at(name) != Tv::U) {
      determined = &fp;
      break;
    }
  if (!determined) return {Classification::Kind::Paradoxical, {}, {}};
  for (const auto& fp : fps)
    if (fp.at(name) != determined->at(name))
      return {Classification::Kind::UngroundedNonParadoxical, *determined, fp};
  throw EvalError("unreachable: least fixed point disagrees with enumeration");
}

// --- report line formats ---

inline std::string format_stage(const Interpretation& i) {
  std::string out;
  for (const auto& [name, v] : i.values) {
    if (!out.empty()) out += ' ';
    out += name;
    out += '=';
    out += tv_letter(v);
  }
  return out;
}

// `stage k: name1=t name2=u ...`
inline std::string format_stage_line(std::size_t index, const Interpretation& i) {
  return "stage " + std::to_string(index) + ": " + format_stage(i);
}

// `NAME: grounded-true | grounded-false | paradoxical | ungrounded (witnesses: ...)`
inline std::string format_classification(const std::string& name, const Classification& c) {
  switch (c.kind) {
    case Classification::Kind::GroundedTrue:
      return name + ": grounded-true";
    case Classification::Kind::GroundedFalse:
      return name + ": grounded-false";
    case Classification::Kind::Paradoxical:
      return name + ": paradoxical";
    default:
      return name + ": ungrounded (witnesses: {" + format_stage(*c.witness_determined) +
             "}, {" + format_stage(*c.witness_other) + "})";
  }
}

}  // namespace liarwb::kripke
