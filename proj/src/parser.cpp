#include "bvcheck/parser.hpp"

#include <cctype>

namespace bvcheck {

namespace {

struct Parser {
  const ConstUniversePtr& u;
  const std::string& s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void die(const std::string& what) {
    fail("parse error at position " + std::to_string(pos) + " of '" + s +
         "': " + what);
  }

  long integer() {
    skip();
    bool neg = eat('-');
    skip();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      die("expected integer");
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      v = v * 10 + (s[pos++] - '0');
    return neg ? -v : v;
  }

  Poly atom() {
    skip();
    if (eat('(')) {
      Poly p = sum();
      if (!eat(')')) die("expected ')'");
      return p;
    }
    if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])))) {
      long num = integer();
      long den = 1;
      if (eat('/')) den = integer();
      Rational c(num, den);
      c.canonicalize();
      return Poly::constant(u, c);
    }
    if (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) ||
                           s[pos] == '_')) {
      std::size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) ||
              s[pos] == '_' || s[pos] == '\''))
        ++pos;
      std::string name = s.substr(start, pos - start);
      GenId g = u->find(name);
      if (g < 0) die("unknown generator '" + name + "'");
      return Poly::gen(u, g);
    }
    die("expected atom");
  }

  Poly power() {
    Poly base = atom();
    if (eat('^')) {
      long e = integer();
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  Poly product() {
    Poly p = power();
    for (;;) {
      skip();
      if (eat('*')) {
        p *= power();
        continue;
      }
      // implicit product before '(' or a name
      if (pos < s.size() &&
          (s[pos] == '(' || std::isalpha(static_cast<unsigned char>(s[pos])) ||
           s[pos] == '_')) {
        p *= power();
        continue;
      }
      return p;
    }
  }

  Poly sum() {
    skip();
    bool neg = eat('-');
    Poly p = product();
    if (neg) p = -p;
    for (;;) {
      skip();
      if (eat('+')) {
        p += product();
      } else if (eat('-')) {
        p -= product();
      } else {
        return p;
      }
    }
  }
};

}  // namespace

Poly parse_poly(const ConstUniversePtr& u, const std::string& text) {
  Parser p{u, text};
  Poly result = p.sum();
  p.skip();
  if (p.pos != text.size()) p.die("trailing input");
  return result;
}

}  // namespace bvcheck
