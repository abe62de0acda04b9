#pragma once

#include <string>

#include "sinv/s2.hpp"

namespace sinv {

// Canonical text form.  Terms appear in the map's lexicographic
// (a1, a2, b1, b2) order, joined by " + " / " - "; per term the coefficient
// comes first and unit factors (power 0, coefficient 1) are omitted, e.g.
//   "2*x1*y2^3 - x2 + 1/2".
// This form is the CLI output and the element syntax accepted back by the
// parser, so print -> parse is the identity on elements.
template <class F>
std::string to_text(const Element2<F>& a) {
  const F& f = a.field();
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    typename F::Elem v = c;
    if (first) {
      if (f.is_negative(c)) {
        out += "-";
        v = f.abs_value(c);
      }
    } else {
      if (f.is_negative(c)) {
        out += " - ";
        v = f.abs_value(c);
      } else {
        out += " + ";
      }
    }
    first = false;
    std::string vars;
    auto emit = [&](const char* name, unsigned e) {
      if (e == 0) return;
      if (!vars.empty()) vars += "*";
      vars += name;
      if (e != 1) vars += "^" + std::to_string(e);
    };
    emit("x1", m.a1);
    emit("x2", m.a2);
    emit("y1", m.b1);
    emit("y2", m.b2);
    if (vars.empty()) {
      out += f.str(v);
    } else {
      if (!f.is_one(v)) out += f.str(v) + "*";
      out += vars;
    }
  }
  return out;
}

template <class F>
std::string to_text(const Element1<F>& a, int factor) {
  return to_text(embed1(factor, a));
}

}  // namespace sinv
