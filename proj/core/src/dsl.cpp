#include "jl/dsl.hpp"

#include <cctype>
#include <charconv>

#include "jl/error.hpp"
#include "jl/structure.hpp"

namespace jl {

bool operator==(const GroupExpr& x, const GroupExpr& y) {
  if (x.kind != y.kind) return false;
  if (x.kind == GroupExpr::Kind::Atom) return x.atom == y.atom;
  return *x.left == *y.left && *x.right == *y.right && x.action == y.action;
}

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  GroupExpr parse() {
    GroupExpr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }
  void expect(std::string_view tok) {
    if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
  }

  unsigned integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (ec != std::errc() || v > 1000000) fail_at("integer out of range", start);
    (void)ptr;
    return v;
  }

  GroupExpr expr() {
    GroupExpr lhs = term();
    for (;;) {
      skip();
      if (pos_ >= s_.size()) break;
      char op = s_[pos_];
      if (op != '*' && op != ':') break;
      ++pos_;
      GroupExpr rhs = term();
      GroupExpr node;
      node.left = std::make_shared<const GroupExpr>(std::move(lhs));
      node.right = std::make_shared<const GroupExpr>(std::move(rhs));
      skip();
      bool annotated = pos_ < s_.size() && s_[pos_] == '[';
      if (op == '*') {
        if (annotated) fail("an action annotation needs ':'");
        node.kind = GroupExpr::Kind::Product;
      } else {
        if (!annotated) fail("':' requires an action annotation");
        node.kind = GroupExpr::Kind::Semidirect;
        node.action = action(node);
      }
      lhs = std::move(node);
    }
    return lhs;
  }

  Action action(const GroupExpr& node) {
    std::size_t at = pos_;
    expect("[");
    Action a;
    skip();
    if (eat("swap")) {
      a.kind = Action::Kind::Swap;
      const GroupExpr& l = *node.left;
      bool ok = l.kind == GroupExpr::Kind::Product && *l.left == *l.right &&
                *node.right == GroupExpr{GroupExpr::Kind::Atom, {Atom::Kind::Cyclic, 2, 0}, {}, {}, {}};
      if (!ok) fail_at("'swap' needs the form (X * X) : C2", at);
    } else if (eat("inv")) {
      a.kind = Action::Kind::Inv;
      if (!(*node.right == GroupExpr{GroupExpr::Kind::Atom, {Atom::Kind::Cyclic, 2, 0}, {}, {}, {}}))
        fail_at("'inv' needs C2 as the acting group", at);
    } else if (eat("explicit")) {
      a.kind = Action::Kind::Explicit;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                  s_[pos_] == '_' || s_[pos_] == '-'))
        ++pos_;
      if (start == pos_) fail("expected an action identifier");
      a.id = std::string(s_.substr(start, pos_ - start));
    } else {
      fail("expected 'swap', 'inv' or 'explicit'");
    }
    expect("]");
    return a;
  }

  GroupExpr term() {
    skip();
    if (eat("(")) {
      GroupExpr e = expr();
      expect(")");
      return e;
    }
    GroupExpr e;
    e.kind = GroupExpr::Kind::Atom;
    e.atom = atom();
    return e;
  }

  Atom atom() {
    skip();
    std::size_t at = pos_;
    Atom a;
    if (eat("Heis(")) {
      a.kind = Atom::Kind::Heis;
      a.a = integer();
      expect(")");
      if (!is_prime(a.a)) fail_at("Heis(p) needs p prime", at);
      return a;
    }
    if (eat("PSL(")) {
      a.kind = Atom::Kind::PSL2;
      if (integer() != 2) fail_at("only PSL(2,q) is supported", at);
      expect(",");
      a.a = integer();
      expect(")");
      if (a.a != 5 && a.a != 7) fail_at("PSL(2,q) needs q in {5, 7}", at);
      return a;
    }
    if (eat("E(")) {
      a.kind = Atom::Kind::ElemAbelian;
      a.a = integer();
      expect(",");
      a.b = integer();
      expect(")");
      if (!is_prime(a.a)) fail_at("E(p,k) needs p prime", at);
      if (a.b < 1) fail_at("E(p,k) needs k >= 1", at);
      return a;
    }
    if (pos_ >= s_.size()) fail("expected a group");
    switch (s_[pos_]) {
      case 'C': a.kind = Atom::Kind::Cyclic; break;
      case 'D': a.kind = Atom::Kind::Dihedral; break;
      case 'S': a.kind = Atom::Kind::Sym; break;
      case 'A': a.kind = Atom::Kind::Alt; break;
      default: fail("expected a group");
    }
    ++pos_;
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected an integer");
    a.a = integer();
    if (a.a < 1) fail_at("group parameter must be >= 1", at);
    return a;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string print_atom(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::Cyclic: return "C" + std::to_string(a.a);
    case Atom::Kind::Dihedral: return "D" + std::to_string(a.a);
    case Atom::Kind::Sym: return "S" + std::to_string(a.a);
    case Atom::Kind::Alt: return "A" + std::to_string(a.a);
    case Atom::Kind::ElemAbelian: return "E(" + std::to_string(a.a) + "," + std::to_string(a.b) + ")";
    case Atom::Kind::Heis: return "Heis(" + std::to_string(a.a) + ")";
    case Atom::Kind::PSL2: return "PSL(2," + std::to_string(a.a) + ")";
  }
  return "?";
}

std::string operand(const GroupExpr& e) {
  return e.kind == GroupExpr::Kind::Atom ? print(e) : "(" + print(e) + ")";
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw BuildError("group order overflows 64 bits");
  return r;
}

Permutation cycle_from(std::size_t degree, std::size_t first, std::size_t length) {
  std::vector<Point> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i < length; ++i)
    img[first + i] = static_cast<Point>(first + (i + 1) % length);
  return Permutation::from_images(img);
}

void check_degree(std::size_t degree, const Atom& a) {
  if (degree > kMaxDegree)
    throw BuildError(print_atom(a) + " needs " + std::to_string(degree) + " points");
}

}  // namespace

GroupExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string print(const GroupExpr& e) {
  switch (e.kind) {
    case GroupExpr::Kind::Atom: return print_atom(e.atom);
    case GroupExpr::Kind::Product: return operand(*e.left) + " * " + operand(*e.right);
    case GroupExpr::Kind::Semidirect: {
      std::string act;
      switch (e.action->kind) {
        case Action::Kind::Swap: act = "swap"; break;
        case Action::Kind::Inv: act = "inv"; break;
        case Action::Kind::Explicit: act = "explicit " + e.action->id; break;
      }
      return operand(*e.left) + " : " + operand(*e.right) + " [" + act + "]";
    }
  }
  return "?";
}

std::uint64_t expected_order(const GroupExpr& e) {
  if (e.kind != GroupExpr::Kind::Atom)
    return mul(expected_order(*e.left), expected_order(*e.right));
  const Atom& a = e.atom;
  switch (a.kind) {
    case Atom::Kind::Cyclic: return a.a;
    case Atom::Kind::Dihedral: return mul(2, a.a);
    case Atom::Kind::Sym:
    case Atom::Kind::Alt: {
      std::uint64_t f = 1;
      for (unsigned i = 2; i <= a.a; ++i) f = mul(f, i);
      return a.kind == Atom::Kind::Alt && a.a >= 2 ? f / 2 : f;
    }
    case Atom::Kind::ElemAbelian: {
      std::uint64_t r = 1;
      for (unsigned i = 0; i < a.b; ++i) r = mul(r, a.a);
      return r;
    }
    case Atom::Kind::Heis: return mul(mul(a.a, a.a), a.a);
    case Atom::Kind::PSL2: return std::uint64_t{a.a} * (a.a * a.a - 1) / 2;
  }
  return 0;
}

PermGroup build_atom(const Atom& a) {
  const std::size_t n = a.a;
  switch (a.kind) {
    case Atom::Kind::Cyclic:
      check_degree(n, a);
      return PermGroup({cycle_from(n, 0, n)});
    case Atom::Kind::Dihedral: {
      if (n == 1) return PermGroup({Permutation::parse(2, "(0 1)")});
      if (n == 2) return PermGroup({Permutation::parse(4, "(0 1)(2 3)"), Permutation::parse(4, "(0 2)(1 3)")});
      check_degree(n, a);
      std::vector<Point> s(n);
      for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<Point>((n - i) % n);
      return PermGroup({cycle_from(n, 0, n), Permutation::from_images(s)});
    }
    case Atom::Kind::Sym:
      check_degree(n, a);
      if (n <= 2) return PermGroup({cycle_from(n, 0, n)});
      return PermGroup({cycle_from(n, 0, 2), cycle_from(n, 0, n)});
    case Atom::Kind::Alt:
      check_degree(n, a);
      if (n <= 2) return PermGroup::trivial(n);
      if (n == 3) return PermGroup({cycle_from(3, 0, 3)});
      return PermGroup({cycle_from(n, 0, 3), n % 2 ? cycle_from(n, 0, n) : cycle_from(n, 1, n - 1)});
    case Atom::Kind::ElemAbelian: {
      std::size_t degree = static_cast<std::size_t>(a.a) * a.b;
      check_degree(degree, a);
      std::vector<Permutation> gens;
      for (unsigned i = 0; i < a.b; ++i) gens.push_back(cycle_from(degree, i * a.a, a.a));
      return PermGroup(std::move(gens));
    }
    case Atom::Kind::Heis: {
      const std::size_t p = a.a, deg = p * p * p;
      check_degree(deg, a);
      // Regular left action; (a,b,c) is point a + p b + p^2 c and
      // (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
      auto left = [&](std::size_t x, std::size_t y) {
        std::vector<Point> img(deg);
        for (std::size_t i = 0; i < deg; ++i) {
          std::size_t a1 = i % p, b1 = i / p % p, c1 = i / (p * p);
          std::size_t a2 = (x + a1) % p, b2 = (y + b1) % p, c2 = (c1 + x * b1) % p;
          img[i] = static_cast<Point>(a2 + p * b2 + p * p * c2);
        }
        return Permutation::from_images(img);
      };
      return PermGroup({left(1, 0), left(0, 1)});
    }
    case Atom::Kind::PSL2: {
      const std::size_t q = a.a;
      std::vector<Point> t(q + 1), s(q + 1);
      for (std::size_t x = 0; x < q; ++x) t[x] = static_cast<Point>((x + 1) % q);
      t[q] = static_cast<Point>(q);
      // x -> -1/x, with 0 <-> infinity
      s[0] = static_cast<Point>(q);
      s[q] = 0;
      for (std::size_t x = 1; x < q; ++x) {
        std::size_t inv = 1;
        while (inv * x % q != 1) ++inv;
        s[x] = static_cast<Point>((q - inv) % q);
      }
      return PermGroup({Permutation::from_images(t), Permutation::from_images(s)});
    }
  }
  throw BuildError("unknown atom");
}

Permutation evaluate_word(std::string_view word, const std::vector<Permutation>& gens) {
  if (gens.empty()) throw BuildError("word over an empty generator list");
  Permutation acc(gens.front().degree());
  std::size_t pos = 0;
  auto bad = [&](const std::string& why) {
    throw BuildError("bad word '" + std::string(word) + "': " + why);
  };
  while (pos < word.size()) {
    while (pos < word.size() && std::isspace(static_cast<unsigned char>(word[pos]))) ++pos;
    if (pos >= word.size()) break;
    std::size_t end = pos;
    while (end < word.size() && !std::isspace(static_cast<unsigned char>(word[end]))) ++end;
    std::string_view tok = word.substr(pos, end - pos);
    pos = end;
    if (tok == "1") continue;
    if (tok.size() < 2 || tok[0] != 'n') bad("expected n<i>[^e]");
    std::size_t caret = tok.find('^');
    std::string_view idx = tok.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1);
    std::size_t i = 0;
    if (std::from_chars(idx.data(), idx.data() + idx.size(), i).ec != std::errc() || i >= gens.size())
      bad("generator index out of range");
    long long e = 1;
    if (caret != std::string_view::npos) {
      std::string_view ex = tok.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(ex.data(), ex.data() + ex.size(), e);
      if (ec != std::errc() || ptr != ex.data() + ex.size()) bad("bad exponent");
    }
    acc = compose(acc, power(gens[i], e));
  }
  return acc;
}

PermGroup build(const GroupExpr& e, const ActionRegistry& actions, std::size_t degree_cap) {
  PermGroup g = [&]() -> PermGroup {
    switch (e.kind) {
      case GroupExpr::Kind::Atom: return build_atom(e.atom);
      case GroupExpr::Kind::Product:
        return direct_product(build(*e.left, actions, degree_cap), build(*e.right, actions, degree_cap));
      case GroupExpr::Kind::Semidirect: break;
    }
    if (e.action->kind == Action::Kind::Swap)
      return swap_extension(build(*e.left->left, actions, degree_cap));
    PermGroup n = build(*e.left, actions, degree_cap);
    PermGroup h = build(*e.right, actions, degree_cap);
    std::vector<std::vector<Permutation>> images;
    if (e.action->kind == Action::Kind::Inv) {
      std::vector<Permutation> inv;
      for (const Permutation& x : n.generators()) inv.push_back(x.inverse());
      images.push_back(std::move(inv));
    } else {
      auto it = actions.find(e.action->id);
      if (it == actions.end()) throw BuildError("unknown action '" + e.action->id + "'");
      if (it->second.size() != h.generators().size())
        throw BuildError("action '" + e.action->id + "' lists " + std::to_string(it->second.size()) +
                         " acting generators, the acting group has " +
                         std::to_string(h.generators().size()));
      for (const auto& row : it->second) {
        std::vector<Permutation> im;
        for (const std::string& w : row) im.push_back(evaluate_word(w, n.generators()));
        images.push_back(std::move(im));
      }
    }
    return semidirect_product(n, h, images, degree_cap);
  }();
  if (g.degree() > degree_cap)
    throw CapExceeded(print(e) + " needs " + std::to_string(g.degree()) + " points, above the degree cap " +
                      std::to_string(degree_cap));
  std::uint64_t want = expected_order(e);
  if (g.order() != want)
    throw BuildError(print(e) + " built with order " + std::to_string(g.order()) + ", expected " +
                     std::to_string(want));
  return g;
}

std::vector<ExprLine> parse_expr_lines(std::string_view text) {
  std::vector<ExprLine> out;
  std::size_t line = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line;
    std::string_view l = text.substr(pos, end - pos);
    std::size_t hash = l.find('#');
    if (hash != std::string_view::npos) l = l.substr(0, hash);
    if (l.find_first_not_of(" \t\r") != std::string_view::npos) {
      try {
        out.push_back({line, parse_expr(l)});
      } catch (const ParseError& err) {
        throw ParseError("line " + std::to_string(line) + ": " + err.message(), pos + err.offset());
      }
    }
    pos = end + 1;
  }
  return out;
}

}  // namespace jl
