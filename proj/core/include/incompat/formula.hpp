#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace incompat {

// Connectives. Inc is the binary incompatibility connective (written `#`),
// Circ the unary consistency connective (written `@`).
enum class Kind : std::uint8_t { Var, And, Or, Imp, Inc, Neg, Circ };

constexpr bool is_binary(Kind k) {
  return k == Kind::And || k == Kind::Or || k == Kind::Imp || k == Kind::Inc;
}
constexpr bool is_unary(Kind k) { return k == Kind::Neg || k == Kind::Circ; }

// The three signatures in play:
//   LFI = {|, &, ->, !, @}    BI = {|, &, ->, #}    NBI = BI + {!}
enum class Sig : std::uint8_t { LFI, BI, NBI };

std::string_view sig_name(Sig s);
bool sig_allows(Sig s, Kind k);

// Immutable formula tree with shared subterms. Copying is cheap (shared_ptr).
// Complexity and a structural hash are cached per node.
class Formula {
 public:
  Formula() = default;

  static Formula variable(std::string name);
  static Formula binary(Kind k, Formula left, Formula right);
  static Formula unary(Kind k, Formula child);

  Kind kind() const { return node_->kind; }
  const std::string& var_name() const { return node_->name; }
  const Formula& left() const { return node_->left; }
  const Formula& right() const { return node_->right; }
  const Formula& child() const { return node_->left; }

  // Variables have complexity 0; every connective adds 1 (binary: l+r+1,
  // unary: c+1).
  int complexity() const { return node_->complexity; }
  std::size_t hash() const { return node_->hash; }

  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }

  explicit operator bool() const { return node_ != nullptr; }

  bool in_signature(Sig s) const;

 private:
  struct Node {
    Kind kind;
    std::string name;  // Var only
    Formula left, right;
    int complexity = 0;
    std::size_t hash = 0;
  };
  std::shared_ptr<const Node> node_;
};

// Terse builders used throughout the code base and the tests.
inline Formula var(std::string name) { return Formula::variable(std::move(name)); }
inline Formula conj(Formula a, Formula b) { return Formula::binary(Kind::And, std::move(a), std::move(b)); }
inline Formula disj(Formula a, Formula b) { return Formula::binary(Kind::Or, std::move(a), std::move(b)); }
inline Formula imp(Formula a, Formula b) { return Formula::binary(Kind::Imp, std::move(a), std::move(b)); }
inline Formula inc(Formula a, Formula b) { return Formula::binary(Kind::Inc, std::move(a), std::move(b)); }
inline Formula neg(Formula a) { return Formula::unary(Kind::Neg, std::move(a)); }
inline Formula circ(Formula a) { return Formula::unary(Kind::Circ, std::move(a)); }

// Duplicate-free subformula list, sorted by ascending complexity; ties keep
// the order of first occurrence in a left-to-right post-order walk. The last
// element is the formula itself.
std::vector<Formula> subformulas(const Formula& f);

using Substitution = std::unordered_map<std::string, Formula>;

// Homomorphic replacement of variables.
Formula substitute(const Formula& f, const Substitution& s);

// Minimal-parenthesis concrete syntax; parse(render(f), sig) == f.
std::string render(const Formula& f);

}  // namespace incompat

template <>
struct std::hash<incompat::Formula> {
  std::size_t operator()(const incompat::Formula& f) const { return f.hash(); }
};
