#include "incompat/parser.hpp"

#include <cctype>

namespace incompat {

namespace {

class Parser {
 public:
  Parser(std::string_view text, Sig sig) : text_(text), sig_(sig) {}

  Formula run() {
    Formula f = formula();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  std::string_view text_;
  Sig sig_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool eat(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void require_connective(Kind k, const char* tok) {
    if (!sig_allows(sig_, k))
      fail(std::string("connective `") + tok + "` is not in signature " + std::string(sig_name(sig_)));
  }

  Formula formula() { return implication(); }

  Formula implication() {
    Formula l = disjunction();
    if (eat("->")) {
      Formula r = implication();  // right-associative
      return imp(std::move(l), std::move(r));
    }
    return l;
  }

  Formula disjunction() {
    Formula l = conjunction();
    while (true) {
      skip_ws();
      // `|` but not the sequent separator `|-`
      if (pos_ < text_.size() && text_[pos_] == '|' &&
          (pos_ + 1 >= text_.size() || text_[pos_ + 1] != '-')) {
        ++pos_;
        l = disj(std::move(l), conjunction());
      } else {
        return l;
      }
    }
  }

  Formula conjunction() {
    Formula l = incompatibility();
    while (eat('&')) l = conj(std::move(l), incompatibility());
    return l;
  }

  Formula incompatibility() {
    Formula l = unary_level();
    while (peek() == '#') {
      require_connective(Kind::Inc, "#");
      eat('#');
      l = inc(std::move(l), unary_level());  // left-associative
    }
    return l;
  }

  Formula expand_bot(Formula a, Formula b) {
    Formula ab = inc(a, b);
    return conj(conj(std::move(a), std::move(b)), std::move(ab));
  }

  Formula unary_level() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '!') {
      require_connective(Kind::Neg, "!");
      ++pos_;
      return neg(unary_level());
    }
    if (c == '@') {
      require_connective(Kind::Circ, "@");
      ++pos_;
      return circ(unary_level());
    }
    if (c == '~') {
      // ~a = a -> bot(a,a); definable only where # exists
      if (!sig_allows(sig_, Kind::Inc))
        fail("`~` abbreviates a #-formula and needs a signature containing #");
      ++pos_;
      Formula a = unary_level();
      return imp(a, expand_bot(a, a));
    }
    if (c == '(') {
      ++pos_;
      Formula f = formula();
      if (!eat(')')) fail("expected `)`");
      return f;
    }
    if (std::islower(static_cast<unsigned char>(c))) return atom_or_sugar();
    fail(std::string("unexpected character `") + c + "`");
  }

  Formula atom_or_sugar() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::islower(static_cast<unsigned char>(text_[pos_])) ||
            std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    // bot( / top( are sugar only when directly applied
    if (name == "bot" && pos_ < text_.size() && text_[pos_] == '(') {
      if (!sig_allows(sig_, Kind::Inc))
        fail("`bot` abbreviates a #-formula and needs a signature containing #");
      ++pos_;
      Formula a = formula();
      if (!eat(',')) fail("expected `,` in bot(...)");
      Formula b = formula();
      if (!eat(')')) fail("expected `)`");
      return expand_bot(std::move(a), std::move(b));
    }
    if (name == "top" && pos_ < text_.size() && text_[pos_] == '(') {
      if (!sig_allows(sig_, Kind::Inc))
        fail("`top` abbreviates a #-definable formula and needs a signature containing #");
      ++pos_;
      Formula a = formula();
      if (!eat(')')) fail("expected `)`");
      return imp(a, a);
    }
    return var(std::move(name));
  }
};

}  // namespace

Formula parse(std::string_view text, Sig sig) { return Parser(text, sig).run(); }

}  // namespace incompat
