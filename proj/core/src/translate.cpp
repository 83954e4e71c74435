#include "incompat/translate.hpp"

namespace incompat {

Formula translate_T(const Formula& f) {
  switch (f.kind()) {
    case Kind::Var:
      return f;
    case Kind::Neg:
      return neg(translate_T(f.child()));
    case Kind::Circ: {
      Formula t = translate_T(f.child());
      return inc(t, neg(t));
    }
    default:
      return Formula::binary(f.kind(), translate_T(f.left()), translate_T(f.right()));
  }
}

std::optional<Formula> invert_T(const Formula& f) {
  switch (f.kind()) {
    case Kind::Var:
      return f;
    case Kind::Neg: {
      auto c = invert_T(f.child());
      if (!c) return std::nullopt;
      return neg(std::move(*c));
    }
    case Kind::Circ:
      return std::nullopt;  // not a NBI formula
    case Kind::Inc: {
      if (f.right().kind() != Kind::Neg || f.right().child() != f.left()) return std::nullopt;
      auto b = invert_T(f.left());
      if (!b) return std::nullopt;
      return circ(std::move(*b));
    }
    default: {
      auto l = invert_T(f.left());
      if (!l) return std::nullopt;
      auto r = invert_T(f.right());
      if (!r) return std::nullopt;
      return Formula::binary(f.kind(), std::move(*l), std::move(*r));
    }
  }
}

}  // namespace incompat
