#include "jv/parse.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "jv/error.hpp"

namespace jv {

namespace {

enum class Tok { Number, Var, Gen, Unit, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  mpz_class number;
  std::size_t var = 0;
  Generator gen;
};

std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

class Lexer {
 public:
  // n <= 0 disables generator tokens.
  Lexer(std::string_view src, int n) : src_(src), n_(n) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (pos_ >= src_.size()) break;
      out.push_back(next());
    }
    Token end;
    end.kind = Tok::End;
    end.text = "end of input";
    out.push_back(end);
    return out;
  }

 private:
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  char peek(std::size_t k = 0) const { return pos_ + k < src_.size() ? src_[pos_ + k] : '\0'; }
  static bool digit(char c) { return c >= '0' && c <= '9'; }

  int read_int(std::size_t start) {
    std::size_t b = pos_;
    while (digit(peek())) ++pos_;
    if (b == pos_) fail(start, "expected an index");
    return std::stoi(std::string(src_.substr(b, pos_ - b)));
  }

  [[noreturn]] void fail(std::size_t start, const std::string& why) const {
    std::size_t end = start;
    while (end < src_.size() && !std::isspace(static_cast<unsigned char>(src_[end]))) ++end;
    throw ParseError(why + " at " + quoted(src_.substr(start, std::max<std::size_t>(end - start, 1))));
  }

  int check_index(int i, std::size_t start) const {
    if (n_ > 0 && (i < 1 || i > n_)) fail(start, "index " + std::to_string(i) + " out of range 1.." + std::to_string(n_));
    if (i < 1) fail(start, "index must be positive");
    return i;
  }

  // One index (a+/b+/h) in bracket or plain-digit form.
  int read_single(std::size_t start) {
    if (peek() == '[') {
      ++pos_;
      const int i = read_int(start);
      if (peek() != ']') fail(start, "expected ']'");
      ++pos_;
      return check_index(i, start);
    }
    return check_index(read_int(start), start);
  }

  std::pair<int, int> read_pair(std::size_t start) {
    if (peek() == '[') {
      ++pos_;
      const int i = read_int(start);
      skip_space();
      if (peek() != ',') fail(start, "expected ','");
      ++pos_;
      skip_space();
      const int j = read_int(start);
      if (peek() != ']') fail(start, "expected ']'");
      ++pos_;
      return {check_index(i, start), check_index(j, start)};
    }
    if (!digit(peek()) || !digit(peek(1))) fail(start, "expected two index digits or [i,j]");
    const int i = peek() - '0', j = peek(1) - '0';
    pos_ += 2;
    return {check_index(i, start), check_index(j, start)};
  }

  Token make_gen(std::size_t start, Generator g) {
    if (n_ <= 0) fail(start, "generators are not allowed here");
    Token t;
    t.kind = Tok::Gen;
    t.gen = g;
    t.text = std::string(src_.substr(start, pos_ - start));
    return t;
  }

  Token next() {
    const std::size_t start = pos_;
    const char c = peek();
    Token t;
    auto simple = [&](Tok k) {
      ++pos_;
      t.kind = k;
      t.text = std::string(1, c);
      return t;
    };
    switch (c) {
      case '+': return simple(Tok::Plus);
      case '-': return simple(Tok::Minus);
      case '*': return simple(Tok::Star);
      case '/': return simple(Tok::Slash);
      case '^': return simple(Tok::Caret);
      case '(': return simple(Tok::LParen);
      case ')': return simple(Tok::RParen);
      default: break;
    }
    if (digit(c)) {
      while (digit(peek())) ++pos_;
      t.kind = Tok::Number;
      t.text = std::string(src_.substr(start, pos_ - start));
      t.number = mpz_class(t.text);
      return t;
    }
    const char s = peek(1);
    const bool sign = s == '+' || s == '-';
    if (c == 'L' && digit(s)) {
      ++pos_;
      t.kind = Tok::Var;
      t.var = static_cast<std::size_t>(read_int(start));
      if (t.var == 0) fail(start, "variables start at L1");
      t.text = std::string(src_.substr(start, pos_ - start));
      return t;
    }
    if (c == 'v' && s == '0') {
      pos_ += 2;
      t.kind = Tok::Unit;
      t.text = "v0";
      return t;
    }
    if (c == 'a' && sign) {
      pos_ += 2;
      const int i = read_single(start);
      return make_gen(start, s == '+' ? Generator::a_plus(i) : Generator::a_minus(i));
    }
    if (c == 'b' && sign) {
      pos_ += 2;
      const int i = read_single(start);
      return make_gen(start, s == '+' ? Generator::k_plus(i, i) : Generator::k_minus(i, i));
    }
    if (c == 'h' && (digit(s) || s == '[')) {
      ++pos_;
      const int i = read_single(start);
      return make_gen(start, Generator::k_zero(i, i));
    }
    if (c == 'K' && (sign || s == '0')) {
      pos_ += 2;
      const auto [i, j] = read_pair(start);
      if (s == '+') return make_gen(start, Generator::k_plus(i, j));
      if (s == '-') return make_gen(start, Generator::k_minus(i, j));
      return make_gen(start, Generator::k_zero(i, j));
    }
    if ((c == 'c' || c == 'd') && sign) {
      pos_ += 2;
      if (n_ > 0 && n_ != 2) fail(start, "short name is only defined for n = 2");
      if (c == 'c') return make_gen(start, s == '+' ? Generator::k_plus(1, 2) : Generator::k_minus(1, 2));
      return make_gen(start, s == '+' ? Generator::k_zero(1, 2) : Generator::k_zero(2, 1));
    }
    fail(start, "unexpected token");
  }

  std::string_view src_;
  int n_;
  std::size_t pos_ = 0;
};

// Recursive-descent evaluator over U(g_n) with RatFunc coefficients.
class Evaluator {
 public:
  Evaluator(std::vector<Token> toks, const JacobiAlgebra* alg)
      : toks_(std::move(toks)), alg_(alg) {
    if (alg_) orderer_.emplace(*alg_);
  }

  UElement parse_all() {
    if (cur().kind == Tok::End) throw ParseError("empty expression");
    UElement e = expr();
    if (cur().kind != Tok::End) throw ParseError("unexpected token " + quoted(cur().text));
    return e;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }

  static bool starts_atom(Tok k) {
    return k == Tok::Number || k == Tok::Var || k == Tok::Gen || k == Tok::Unit || k == Tok::LParen;
  }

  static std::optional<RatFunc> as_scalar(const UElement& u) {
    if (u.is_zero()) return RatFunc(0);
    if (u.terms().size() == 1 && u.terms().begin()->first.empty()) return u.terms().begin()->second;
    return std::nullopt;
  }

  UElement mul(const UElement& a, const UElement& b) {
    if (auto s = as_scalar(a)) return b * *s;
    if (auto s = as_scalar(b)) return a * *s;
    return multiply(*orderer_, a, b);
  }

  UElement expr() {
    UElement acc;
    bool negate = false;
    if (cur().kind == Tok::Plus || cur().kind == Tok::Minus) {
      negate = cur().kind == Tok::Minus;
      ++pos_;
    }
    acc = term();
    if (negate) acc *= RatFunc(-1);
    while (cur().kind == Tok::Plus || cur().kind == Tok::Minus) {
      const bool minus = cur().kind == Tok::Minus;
      ++pos_;
      UElement t = term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  UElement term() {
    UElement acc = power();
    while (true) {
      const Tok k = cur().kind;
      if (k == Tok::Star) {
        ++pos_;
        acc = mul(acc, power());
      } else if (k == Tok::Slash) {
        const std::string at = toks_[pos_ + 1].text;
        ++pos_;
        const UElement d = power();
        const auto s = as_scalar(d);
        if (!s) throw ParseError("can only divide by a scalar, not " + quoted(at));
        if (s->is_zero()) throw ParseError("division by zero at " + quoted(at));
        acc *= s->inverse();
      } else if (starts_atom(k)) {
        acc = mul(acc, power());
      } else {
        return acc;
      }
    }
  }

  UElement power() {
    UElement base = atom();
    if (cur().kind != Tok::Caret) return base;
    ++pos_;
    if (cur().kind != Tok::Number) throw ParseError("expected an integer exponent at " + quoted(cur().text));
    if (cur().number > 64) throw ParseError("exponent too large: " + quoted(cur().text));
    const unsigned e = static_cast<unsigned>(cur().number.get_ui());
    ++pos_;
    UElement r = UElement::one();
    for (unsigned k = 0; k < e; ++k) r = mul(r, base);
    return r;
  }

  UElement atom() {
    const Token& t = cur();
    switch (t.kind) {
      case Tok::Number:
        ++pos_;
        return UElement::scalar(RatFunc(Rat(t.number)));
      case Tok::Var:
        ++pos_;
        return UElement::scalar(RatFunc(Poly::lambda(t.var)));
      case Tok::Unit:
        ++pos_;
        return UElement::one();
      case Tok::Gen: {
        ++pos_;
        if (!alg_->contains(t.gen)) throw ParseError("not a basis generator: " + quoted(t.text));
        return UElement::generator(alg_->index(t.gen));
      }
      case Tok::LParen: {
        ++pos_;
        UElement e = expr();
        if (cur().kind != Tok::RParen) throw ParseError("expected ')' at " + quoted(cur().text));
        ++pos_;
        return e;
      }
      default:
        throw ParseError("unexpected token " + quoted(t.text));
    }
  }

  std::vector<Token> toks_;
  const JacobiAlgebra* alg_;
  std::optional<NormalOrderer> orderer_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Generator parse_generator(std::string_view text, int n) {
  const auto toks = Lexer(trim(text), n).run();
  if (toks.size() != 2 || toks[0].kind != Tok::Gen) throw ParseError("not a generator: " + quoted(text));
  JacobiAlgebra alg(n);
  if (!alg.contains(toks[0].gen)) throw ParseError("not a basis generator: " + quoted(text));
  return toks[0].gen;
}

Weight parse_weight(std::string_view text, int n) {
  const std::string s = trim(text);
  if (s.empty()) throw ParseError("empty weight");
  Weight w = zero_weight(n);
  if (s.find(',') != std::string::npos) {
    std::size_t start = 0;
    int k = 0;
    while (true) {
      const auto comma = s.find(',', start);
      const std::string part = trim(s.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
      if (k >= n) throw ParseError("weight " + quoted(s) + " has more than " + std::to_string(n) + " coordinates");
      w[k++] = Rat::parse(part);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (k != n) throw ParseError("weight " + quoted(s) + " needs " + std::to_string(n) + " coordinates");
    return w;
  }
  if (s == "0") return w;
  // Sum of [sign][rational][*]d<i> terms.
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    while (pos < s.size() && s[pos] == ' ') ++pos;
    Rat sign(1);
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = Rat(-1);
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' in weight at " + quoted(s.substr(pos)));
    }
    while (pos < s.size() && s[pos] == ' ') ++pos;
    const std::size_t dpos = s.find('d', pos);
    if (dpos == std::string::npos) throw ParseError("expected d<i> in weight at " + quoted(s.substr(pos)));
    std::string coeff = trim(s.substr(pos, dpos - pos));
    if (!coeff.empty() && coeff.back() == '*') coeff = trim(coeff.substr(0, coeff.size() - 1));
    const Rat c = coeff.empty() ? Rat(1) : Rat::parse(coeff);
    std::size_t q = dpos + 1;
    const std::size_t digits = q;
    while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
    if (q == digits) throw ParseError("expected an index after 'd' in " + quoted(s));
    const int i = std::stoi(s.substr(digits, q - digits));
    if (i < 1 || i > n)
      throw ParseError("index d" + std::to_string(i) + " out of range for n = " + std::to_string(n));
    w[i - 1] += sign * c;
    pos = q;
    while (pos < s.size() && s[pos] == ' ') ++pos;
    first = false;
  }
  return w;
}

Poly parse_poly(std::string_view text) {
  const UElement u = Evaluator(Lexer(text, 0).run(), nullptr).parse_all();
  if (u.is_zero()) return Poly();
  const auto& c = u.terms().begin()->second;
  if (!c.is_polynomial()) throw ParseError("not a polynomial: " + quoted(text));
  return c.num() * c.den().constant_term().inverse();
}

UElement parse_element(std::string_view text, const JacobiAlgebra& alg) {
  return Evaluator(Lexer(text, alg.n()).run(), &alg).parse_all();
}

VermaVector parse_vector(std::string_view text, const JacobiAlgebra& alg) {
  const UElement u = parse_element(text, alg);
  try {
    return apply(alg, u, VermaVector::lowest());
  } catch (const DomainError& e) {
    throw ParseError(std::string("vector ") + quoted(text) + ": " + e.what());
  }
}

PbwMonomial parse_monomial(std::string_view text, const JacobiAlgebra& alg) {
  const UElement u = parse_element(text, alg);
  if (u.terms().size() != 1 || !(u.terms().begin()->second == RatFunc(1)))
    throw ParseError("not a single PBW monomial: " + quoted(text));
  return u.terms().begin()->first;
}

ConstraintSet parse_constraints(std::string_view text) {
  std::vector<Poly> eqs;
  std::string cur;
  auto flush = [&] {
    const std::string piece = trim(cur);
    cur.clear();
    if (piece.empty()) return;
    const auto eq = piece.find('=');
    if (eq == std::string::npos) {
      eqs.push_back(parse_poly(piece));
    } else {
      eqs.push_back(parse_poly(piece.substr(0, eq)) - parse_poly(piece.substr(eq + 1)));
    }
  };
  for (char c : text) {
    if (c == ',' || c == ';')
      flush();
    else
      cur += c;
  }
  flush();
  try {
    return ConstraintSet(std::move(eqs));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace jv
