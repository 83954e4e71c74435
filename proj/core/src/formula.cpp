#include "incompat/formula.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_set>

namespace incompat {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  // splitmix-style combine
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::size_t hash_string(const std::string& s) {
  std::size_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::string_view sig_name(Sig s) {
  switch (s) {
    case Sig::LFI: return "LFI";
    case Sig::BI: return "BI";
    case Sig::NBI: return "NBI";
  }
  return "?";
}

bool sig_allows(Sig s, Kind k) {
  switch (k) {
    case Kind::Var:
    case Kind::And:
    case Kind::Or:
    case Kind::Imp:
      return true;
    case Kind::Inc:
      return s == Sig::BI || s == Sig::NBI;
    case Kind::Neg:
      return s == Sig::LFI || s == Sig::NBI;
    case Kind::Circ:
      return s == Sig::LFI;
  }
  return false;
}

Formula Formula::variable(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->name = std::move(name);
  n->complexity = 0;
  n->hash = mix(static_cast<std::size_t>(Kind::Var), hash_string(n->name));
  Formula f;
  f.node_ = std::move(n);
  return f;
}

Formula Formula::binary(Kind k, Formula left, Formula right) {
  assert(is_binary(k) && left && right);
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->complexity = left.complexity() + right.complexity() + 1;
  n->hash = mix(mix(static_cast<std::size_t>(k) + 17, left.hash()), right.hash());
  n->left = std::move(left);
  n->right = std::move(right);
  Formula f;
  f.node_ = std::move(n);
  return f;
}

Formula Formula::unary(Kind k, Formula child) {
  assert(is_unary(k) && child);
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->complexity = child.complexity() + 1;
  n->hash = mix(static_cast<std::size_t>(k) + 31, child.hash());
  n->left = std::move(child);
  Formula f;
  f.node_ = std::move(n);
  return f;
}

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  if (!node_ || !o.node_) return false;
  if (node_->hash != o.node_->hash || node_->kind != o.node_->kind ||
      node_->complexity != o.node_->complexity)
    return false;
  switch (node_->kind) {
    case Kind::Var:
      return node_->name == o.node_->name;
    case Kind::Neg:
    case Kind::Circ:
      return node_->left == o.node_->left;
    default:
      return node_->left == o.node_->left && node_->right == o.node_->right;
  }
}

bool Formula::in_signature(Sig s) const {
  if (!sig_allows(s, kind())) return false;
  switch (kind()) {
    case Kind::Var:
      return true;
    case Kind::Neg:
    case Kind::Circ:
      return child().in_signature(s);
    default:
      return left().in_signature(s) && right().in_signature(s);
  }
}

namespace {

void postorder_collect(const Formula& f, std::vector<Formula>& out,
                       std::unordered_set<Formula>& seen) {
  switch (f.kind()) {
    case Kind::Var:
      break;
    case Kind::Neg:
    case Kind::Circ:
      postorder_collect(f.child(), out, seen);
      break;
    default:
      postorder_collect(f.left(), out, seen);
      postorder_collect(f.right(), out, seen);
      break;
  }
  if (seen.insert(f).second) out.push_back(f);
}

}  // namespace

std::vector<Formula> subformulas(const Formula& f) {
  std::vector<Formula> out;
  std::unordered_set<Formula> seen;
  postorder_collect(f, out, seen);
  // stable sort keeps first-occurrence order within equal complexity
  std::stable_sort(out.begin(), out.end(), [](const Formula& a, const Formula& b) {
    return a.complexity() < b.complexity();
  });
  return out;
}

Formula substitute(const Formula& f, const Substitution& s) {
  switch (f.kind()) {
    case Kind::Var: {
      auto it = s.find(f.var_name());
      return it == s.end() ? f : it->second;
    }
    case Kind::Neg:
    case Kind::Circ:
      return Formula::unary(f.kind(), substitute(f.child(), s));
    default:
      return Formula::binary(f.kind(), substitute(f.left(), s), substitute(f.right(), s));
  }
}

namespace {

// precedence, tightest to loosest: unary(5), #(4), &(3), |(2), ->(1)
int prec(Kind k) {
  switch (k) {
    case Kind::Var:
    case Kind::Neg:
    case Kind::Circ:
      return 5;
    case Kind::Inc: return 4;
    case Kind::And: return 3;
    case Kind::Or: return 2;
    case Kind::Imp: return 1;
  }
  return 0;
}

const char* op_token(Kind k) {
  switch (k) {
    case Kind::And: return "&";
    case Kind::Or: return "|";
    case Kind::Imp: return "->";
    case Kind::Inc: return "#";
    case Kind::Neg: return "!";
    case Kind::Circ: return "@";
    default: return "";
  }
}

void render_rec(const Formula& f, std::string& out) {
  auto bracketed = [&](const Formula& g, bool need) {
    if (need) out += '(';
    render_rec(g, out);
    if (need) out += ')';
  };
  switch (f.kind()) {
    case Kind::Var:
      out += f.var_name();
      return;
    case Kind::Neg:
    case Kind::Circ:
      out += op_token(f.kind());
      bracketed(f.child(), prec(f.child().kind()) < 5);
      return;
    case Kind::Imp:
      // right-associative
      bracketed(f.left(), prec(f.left().kind()) <= 1);
      out += " -> ";
      bracketed(f.right(), prec(f.right().kind()) < 1);
      return;
    default: {
      // left-associative binary
      int p = prec(f.kind());
      bracketed(f.left(), prec(f.left().kind()) < p);
      out += ' ';
      out += op_token(f.kind());
      out += ' ';
      bracketed(f.right(), prec(f.right().kind()) <= p);
      return;
    }
  }
}

}  // namespace

std::string render(const Formula& f) {
  std::string out;
  render_rec(f, out);
  return out;
}

}  // namespace incompat
