#pragma once

#include <string>

#include "liarwb/formula.hpp"

namespace liarwb {

struct PrintOptions {
  // When set, false -> false prints as "true", A -> false as "~A" and
  // (A -> B) & (B -> A) as "A <-> B". Either way parse(format(f)) == f.
  bool resugar = true;
};

namespace detail {

// Binding strength: imp 0 < or 1 < and 2 < unary 3 < primary 4.
inline int precedence_of(const Formula& f, bool resugar) {
  if (resugar) {
    if (f.is_verum()) return 4;
    if (f.as_iff()) return 0;
    if (f.is_negation()) return 3;
  }
  switch (f.kind()) {
    case Formula::Kind::Imp:
      return 0;
    case Formula::Kind::Or:
      return 1;
    case Formula::Kind::And:
      return 2;
    case Formula::Kind::Box:
      return 3;
    default:
      return 4;
  }
}

inline void print_into(const Formula& f, const PrintOptions& opt, int min_prec,
                       std::string& out) {
  const int prec = precedence_of(f, opt.resugar);
  const bool parens = prec < min_prec;
  if (parens) out += '(';

  if (opt.resugar && f.is_verum()) {
    out += "true";
  } else if (opt.resugar && f.as_iff()) {
    auto [a, b] = *f.as_iff();
    // <-> is printed non-associatively: both sides one level up.
    print_into(a, opt, 1, out);
    out += " <-> ";
    print_into(b, opt, 1, out);
  } else if (opt.resugar && f.is_negation()) {
    out += '~';
    print_into(f.left(), opt, 3, out);
  } else {
    switch (f.kind()) {
      case Formula::Kind::Falsum:
        out += "false";
        break;
      case Formula::Kind::Atom:
        out += f.name();
        break;
      case Formula::Kind::TruthOf:
        out += "T(" + f.name() + ")";
        break;
      case Formula::Kind::TruthAt:
        out += 'T';
        if (f.level())
          out += std::to_string(*f.level());
        else
          out += '?';
        out += "(" + f.name() + ")";
        break;
      case Formula::Kind::Box:
        out += "box ";
        print_into(f.body(), opt, 3, out);
        break;
      case Formula::Kind::And:
        print_into(f.left(), opt, 2, out);
        out += " & ";
        print_into(f.right(), opt, 3, out);
        break;
      case Formula::Kind::Or:
        print_into(f.left(), opt, 1, out);
        out += " | ";
        print_into(f.right(), opt, 2, out);
        break;
      case Formula::Kind::Imp:
        print_into(f.left(), opt, 1, out);
        out += " -> ";
        print_into(f.right(), opt, 0, out);
        break;
    }
  }
  if (parens) out += ')';
}

}  // namespace detail

// Minimal-parenthesis concrete syntax; inverse of parse_formula.
inline std::string format(const Formula& f, const PrintOptions& opt = {}) {
  std::string out;
  detail::print_into(f, opt, 0, out);
  return out;
}

}  // namespace liarwb
