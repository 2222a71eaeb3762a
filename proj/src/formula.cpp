#include "henkin/formula.hpp"

#include <cctype>
#include <sstream>

namespace henkin {

struct Formula::Node {
  Op op;
  std::string var;
  int arity = 0;
  std::vector<std::string> args;
  std::vector<Formula> kids;
};

Formula Formula::eq(std::string x, std::string y) {
  auto n = std::make_shared<Node>();
  n->op = Op::IndEq;
  n->args = {std::move(x), std::move(y)};
  return Formula(std::move(n));
}

Formula Formula::app(std::string pred, std::vector<std::string> args) {
  if (args.empty()) throw ArityError("predicate application needs at least one argument");
  auto n = std::make_shared<Node>();
  n->op = Op::PredApp;
  n->var = std::move(pred);
  n->arity = static_cast<int>(args.size());
  n->args = std::move(args);
  return Formula(std::move(n));
}

Formula Formula::negation(Formula f) {
  auto n = std::make_shared<Node>();
  n->op = Op::Not;
  n->kids = {std::move(f)};
  return Formula(std::move(n));
}

namespace {

template <typename NodeT>
std::shared_ptr<NodeT> binary_node(Op op, Formula a, Formula b) {
  auto n = std::make_shared<NodeT>();
  n->op = op;
  n->kids = {std::move(a), std::move(b)};
  return n;
}

}  // namespace

Formula Formula::conj(Formula a, Formula b) { return Formula(binary_node<Node>(Op::And, std::move(a), std::move(b))); }
Formula Formula::disj(Formula a, Formula b) { return Formula(binary_node<Node>(Op::Or, std::move(a), std::move(b))); }
Formula Formula::implies(Formula a, Formula b) {
  return Formula(binary_node<Node>(Op::Implies, std::move(a), std::move(b)));
}
Formula Formula::iff(Formula a, Formula b) { return Formula(binary_node<Node>(Op::Iff, std::move(a), std::move(b))); }

Formula Formula::conj(const std::vector<Formula>& parts) {
  if (parts.empty()) throw Error("empty conjunction");
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = conj(acc, parts[i]);
  return acc;
}

Formula Formula::disj(const std::vector<Formula>& parts) {
  if (parts.empty()) throw Error("empty disjunction");
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = disj(acc, parts[i]);
  return acc;
}

namespace {

template <typename NodeT>
std::shared_ptr<NodeT> quant_node(Op op, std::string var, int arity, Formula body) {
  auto n = std::make_shared<NodeT>();
  n->op = op;
  n->var = std::move(var);
  n->arity = arity;
  n->kids = {std::move(body)};
  return n;
}

}  // namespace

Formula Formula::forall(std::string x, Formula body) {
  return Formula(quant_node<Node>(Op::ForallInd, std::move(x), 0, std::move(body)));
}
Formula Formula::exists(std::string x, Formula body) {
  return Formula(quant_node<Node>(Op::ExistsInd, std::move(x), 0, std::move(body)));
}
Formula Formula::forall_pred(std::string pred, int arity, Formula body) {
  if (arity < 1) throw ArityError("predicate variables have arity >= 1");
  return Formula(quant_node<Node>(Op::ForallPred, std::move(pred), arity, std::move(body)));
}
Formula Formula::exists_pred(std::string pred, int arity, Formula body) {
  if (arity < 1) throw ArityError("predicate variables have arity >= 1");
  return Formula(quant_node<Node>(Op::ExistsPred, std::move(pred), arity, std::move(body)));
}

Op Formula::op() const { return node_->op; }
const std::string& Formula::var() const { return node_->var; }
int Formula::arity() const { return node_->arity; }
const std::vector<std::string>& Formula::args() const { return node_->args; }
const Formula& Formula::lhs() const { return node_->kids.at(0); }
const Formula& Formula::rhs() const { return node_->kids.at(1); }
const Formula& Formula::body() const { return node_->kids.at(0); }

bool Formula::is_quantifier() const {
  switch (op()) {
    case Op::ForallInd:
    case Op::ExistsInd:
    case Op::ForallPred:
    case Op::ExistsPred:
      return true;
    default:
      return false;
  }
}

bool Formula::is_pred_quantifier() const { return op() == Op::ForallPred || op() == Op::ExistsPred; }

bool Formula::is_binary() const {
  return op() == Op::And || op() == Op::Or || op() == Op::Implies || op() == Op::Iff;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.op == y.op && x.var == y.var && x.arity == y.arity && x.args == y.args && x.kids == y.kids;
}

namespace {

void collect_free(const Formula& f, std::vector<std::string>& bound_ind, std::vector<std::string>& bound_pred,
                  FreeVariables& out) {
  auto is_bound = [](const std::vector<std::string>& v, const std::string& n) {
    for (const auto& b : v)
      if (b == n) return true;
    return false;
  };
  switch (f.op()) {
    case Op::IndEq:
      for (const auto& a : f.args())
        if (!is_bound(bound_ind, a)) out.individuals.insert(a);
      break;
    case Op::PredApp: {
      for (const auto& a : f.args())
        if (!is_bound(bound_ind, a)) out.individuals.insert(a);
      if (!is_bound(bound_pred, f.var())) {
        auto [it, inserted] = out.predicates.emplace(f.var(), f.arity());
        if (!inserted && it->second != f.arity())
          throw ArityError("predicate variable " + f.var() + " used with arities " + std::to_string(it->second) +
                           " and " + std::to_string(f.arity()));
      }
      break;
    }
    case Op::Not:
      collect_free(f.body(), bound_ind, bound_pred, out);
      break;
    case Op::And:
    case Op::Or:
    case Op::Implies:
    case Op::Iff:
      collect_free(f.lhs(), bound_ind, bound_pred, out);
      collect_free(f.rhs(), bound_ind, bound_pred, out);
      break;
    case Op::ForallInd:
    case Op::ExistsInd:
      bound_ind.push_back(f.var());
      collect_free(f.body(), bound_ind, bound_pred, out);
      bound_ind.pop_back();
      break;
    case Op::ForallPred:
    case Op::ExistsPred:
      bound_pred.push_back(f.var());
      collect_free(f.body(), bound_ind, bound_pred, out);
      bound_pred.pop_back();
      break;
  }
}

void collect_names(const Formula& f, std::set<std::string>& out) {
  switch (f.op()) {
    case Op::IndEq:
      out.insert(f.args().begin(), f.args().end());
      break;
    case Op::PredApp:
      out.insert(f.var());
      out.insert(f.args().begin(), f.args().end());
      break;
    case Op::Not:
      collect_names(f.body(), out);
      break;
    case Op::And:
    case Op::Or:
    case Op::Implies:
    case Op::Iff:
      collect_names(f.lhs(), out);
      collect_names(f.rhs(), out);
      break;
    default:
      out.insert(f.var());
      collect_names(f.body(), out);
      break;
  }
}

}  // namespace

FreeVariables free_variables(const Formula& f) {
  std::vector<std::string> bi, bp;
  FreeVariables out;
  collect_free(f, bi, bp, out);
  return out;
}

std::set<std::string> all_names(const Formula& f) {
  std::set<std::string> out;
  collect_names(f, out);
  return out;
}

int quantifier_depth(const Formula& f) {
  switch (f.op()) {
    case Op::IndEq:
    case Op::PredApp:
      return 0;
    case Op::Not:
    case Op::ForallPred:
    case Op::ExistsPred:
      return quantifier_depth(f.body());
    case Op::ForallInd:
    case Op::ExistsInd:
      return 1 + quantifier_depth(f.body());
    default:
      return std::max(quantifier_depth(f.lhs()), quantifier_depth(f.rhs()));
  }
}

bool binds(const Formula& f, const std::string& name) {
  switch (f.op()) {
    case Op::IndEq:
    case Op::PredApp:
      return false;
    case Op::Not:
      return binds(f.body(), name);
    case Op::And:
    case Op::Or:
    case Op::Implies:
    case Op::Iff:
      return binds(f.lhs(), name) || binds(f.rhs(), name);
    default:
      return f.var() == name || binds(f.body(), name);
  }
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { Ident, Number, Dot, Colon, LParen, RParen, Comma, Bang, Amp, Bar, Arrow, DArrow, Eq, Neq, Semi, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      int l = line_, c = col_;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", l, c});
        return out;
      }
      char ch = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::string id;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' ||
                                      src_[pos_] == '\''))
          id += advance();
        out.push_back({Tok::Ident, id, l, c});
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::string num;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) num += advance();
        out.push_back({Tok::Number, num, l, c});
      } else if (match("<->")) {
        out.push_back({Tok::DArrow, "<->", l, c});
      } else if (match("->")) {
        out.push_back({Tok::Arrow, "->", l, c});
      } else if (match("!=")) {
        out.push_back({Tok::Neq, "!=", l, c});
      } else {
        Tok k;
        switch (ch) {
          case '.': k = Tok::Dot; break;
          case ':': k = Tok::Colon; break;
          case '(': k = Tok::LParen; break;
          case ')': k = Tok::RParen; break;
          case ',': k = Tok::Comma; break;
          case '!': k = Tok::Bang; break;
          case '&': k = Tok::Amp; break;
          case '|': k = Tok::Bar; break;
          case '=': k = Tok::Eq; break;
          case ';': k = Tok::Semi; break;
          default:
            throw ParseError(std::string("unexpected character '") + ch + "'", l, c);
        }
        advance();
        out.push_back({k, std::string(1, ch), l, c});
      }
    }
  }

 private:
  char advance() {
    char ch = src_[pos_++];
    if (ch == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return ch;
  }

  bool match(const char* s) {
    std::string_view sv(s);
    if (src_.compare(pos_, sv.size(), sv) != 0) return false;
    for (std::size_t i = 0; i < sv.size(); ++i) advance();
    return true;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char ch = src_[pos_];
      if (ch == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else {
        return;
      }
    }
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

bool is_keyword(const std::string& s) {
  return s == "forall" || s == "exists" || s == "Forall" || s == "Exists";
}

class Parser {
 public:
  Parser(std::vector<Token> toks, std::size_t start, std::size_t stop)
      : toks_(std::move(toks)), pos_(start), stop_(stop) {}

  Formula parse_all() {
    Formula f = parse_iff();
    if (pos_ != stop_) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek() const { return toks_[std::min(pos_, stop_)]; }
  bool at(Tok k) const { return pos_ < stop_ && toks_[pos_].kind == k; }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw ParseError(msg, t.line, t.col);
  }

  const Token& expect(Tok k, const char* what) {
    if (!at(k)) fail(std::string("expected ") + what);
    return toks_[pos_++];
  }

  std::string ident(const char* what) {
    const Token& t = expect(Tok::Ident, what);
    if (is_keyword(t.text)) throw ParseError(std::string("keyword used as ") + what, t.line, t.col);
    return t.text;
  }

  Formula parse_iff() {
    Formula f = parse_imp();
    while (at(Tok::DArrow)) {
      ++pos_;
      f = Formula::iff(f, parse_imp());
    }
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_or();
    if (at(Tok::Arrow)) {
      ++pos_;
      return Formula::implies(f, parse_imp());
    }
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (at(Tok::Bar)) {
      ++pos_;
      f = Formula::disj(f, parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (at(Tok::Amp)) {
      ++pos_;
      f = Formula::conj(f, parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    if (at(Tok::Bang)) {
      ++pos_;
      return Formula::negation(parse_unary());
    }
    if (at(Tok::LParen)) {
      ++pos_;
      Formula f = parse_iff();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (at(Tok::Ident) && is_keyword(peek().text)) return parse_quant();
    return parse_atom();
  }

  Formula parse_quant() {
    std::string kw = toks_[pos_++].text;
    // A `:n` annotation makes any quantifier a predicate quantifier.
    bool pred = kw == "Forall" || kw == "Exists" || (pos_ + 1 < stop_ && toks_[pos_ + 1].kind == Tok::Colon);
    bool universal = kw == "forall" || kw == "Forall";
    if (!pred) {
      std::string x = ident("individual variable");
      expect(Tok::Dot, "'.'");
      Formula body = parse_iff();
      return universal ? Formula::forall(x, body) : Formula::exists(x, body);
    }
    std::string a = ident("predicate variable");
    expect(Tok::Colon, "':' and an arity");
    const Token& num = expect(Tok::Number, "arity");
    int arity = std::stoi(num.text);
    if (arity < 1) throw ParseError("predicate variables have arity >= 1", num.line, num.col);
    expect(Tok::Dot, "'.'");
    scopes_.emplace_back(a, arity);
    Formula body = parse_iff();
    scopes_.pop_back();
    return universal ? Formula::forall_pred(a, arity, body) : Formula::exists_pred(a, arity, body);
  }

  Formula parse_atom() {
    const Token& head = peek();
    std::string name = ident("variable");
    if (at(Tok::LParen)) {
      ++pos_;
      std::vector<std::string> args{ident("individual variable")};
      while (at(Tok::Comma)) {
        ++pos_;
        args.push_back(ident("individual variable"));
      }
      expect(Tok::RParen, "')'");
      check_arity(name, static_cast<int>(args.size()), head);
      return Formula::app(name, std::move(args));
    }
    if (at(Tok::Eq)) {
      ++pos_;
      return Formula::eq(name, ident("individual variable"));
    }
    if (at(Tok::Neq)) {
      ++pos_;
      return Formula::negation(Formula::eq(name, ident("individual variable")));
    }
    fail("expected '=', '!=' or '(' after " + name);
  }

  void check_arity(const std::string& name, int arity, const Token& at_tok) {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      if (it->first == name) {
        if (it->second != arity)
          throw ParseError("arity mismatch: " + name + " declared with arity " + std::to_string(it->second) +
                               " applied to " + std::to_string(arity) + " arguments",
                           at_tok.line, at_tok.col);
        return;
      }
    }
    auto [it, inserted] = free_arity_.emplace(name, arity);
    if (!inserted && it->second != arity)
      throw ParseError("arity mismatch: free predicate " + name + " used with arities " + std::to_string(it->second) +
                           " and " + std::to_string(arity),
                       at_tok.line, at_tok.col);
  }

  std::vector<Token> toks_;
  std::size_t pos_;
  std::size_t stop_;
  std::vector<std::pair<std::string, int>> scopes_;
  std::map<std::string, int> free_arity_;
};

}  // namespace

Formula parse(const std::string& text) {
  auto toks = Lexer(text).run();
  std::size_t stop = toks.size() - 1;
  for (std::size_t i = 0; i < stop; ++i)
    if (toks[i].kind == Tok::Semi) throw ParseError("unexpected ';' (use parse_corpus for several formulas)", toks[i].line, toks[i].col);
  if (stop == 0) throw ParseError("empty formula", toks[0].line, toks[0].col);
  return Parser(std::move(toks), 0, stop).parse_all();
}

std::vector<Formula> parse_corpus(const std::string& text) {
  auto toks = Lexer(text).run();
  std::vector<Formula> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (toks[i].kind == Tok::Semi || toks[i].kind == Tok::End) {
      if (i > start) out.push_back(Parser(toks, start, i).parse_all());
      start = i + 1;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Printer

namespace {

// Binding strength; quantifiers bind weakest and extend to the right.
int level(Op op) {
  switch (op) {
    case Op::Iff: return 1;
    case Op::Implies: return 2;
    case Op::Or: return 3;
    case Op::And: return 4;
    case Op::Not: return 5;
    case Op::IndEq:
    case Op::PredApp: return 6;
    default: return 0;
  }
}

void print_rec(const Formula& f, int ctx, std::ostream& os) {
  int lvl = level(f.op());
  bool parens = lvl < ctx;
  if (parens) os << '(';
  switch (f.op()) {
    case Op::IndEq:
      os << f.args()[0] << " = " << f.args()[1];
      break;
    case Op::PredApp:
      os << f.var() << '(';
      for (std::size_t i = 0; i < f.args().size(); ++i) os << (i ? ", " : "") << f.args()[i];
      os << ')';
      break;
    case Op::Not:
      os << '!';
      // `!x = y` parses, but the parenthesized form reads better.
      print_rec(f.body(), f.body().op() == Op::IndEq ? 7 : 5, os);
      break;
    case Op::Iff:
      print_rec(f.lhs(), 1, os);
      os << " <-> ";
      print_rec(f.rhs(), 2, os);
      break;
    case Op::Implies:
      print_rec(f.lhs(), 3, os);
      os << " -> ";
      print_rec(f.rhs(), 2, os);
      break;
    case Op::Or:
      print_rec(f.lhs(), 3, os);
      os << " | ";
      print_rec(f.rhs(), 4, os);
      break;
    case Op::And:
      print_rec(f.lhs(), 4, os);
      os << " & ";
      print_rec(f.rhs(), 5, os);
      break;
    case Op::ForallInd:
      os << "forall " << f.var() << ". ";
      print_rec(f.body(), 0, os);
      break;
    case Op::ExistsInd:
      os << "exists " << f.var() << ". ";
      print_rec(f.body(), 0, os);
      break;
    case Op::ForallPred:
      os << "Forall " << f.var() << ':' << f.arity() << ". ";
      print_rec(f.body(), 0, os);
      break;
    case Op::ExistsPred:
      os << "Exists " << f.var() << ':' << f.arity() << ". ";
      print_rec(f.body(), 0, os);
      break;
  }
  if (parens) os << ')';
}

}  // namespace

std::string print(const Formula& f) {
  std::ostringstream os;
  print_rec(f, 0, os);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << print(f); }

// ---------------------------------------------------------------------------
// Schemata

namespace {

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
  if (!taken.count(base)) return base;
  for (int i = 1;; ++i) {
    std::string cand = base + std::to_string(i);
    if (!taken.count(cand)) return cand;
  }
}

std::vector<std::string> tuple_vars(const std::string& base, int n) {
  if (n == 1) return {base};
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(base + std::to_string(i));
  return out;
}

std::vector<std::string> cat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Formula tuple_eq(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < a.size(); ++i) parts.push_back(Formula::eq(a[i], b[i]));
  return Formula::conj(parts);
}

Formula forall_all(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = Formula::forall(*it, body);
  return body;
}

Formula exists_all(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = Formula::exists(*it, body);
  return body;
}

}  // namespace

Formula choice_consequent_body(const Formula& h, const std::string& x, const std::string& d,
                               std::string* s_name) {
  if (binds(h, x)) throw Error("choice axiom: " + x + " must occur only free in H");
  if (binds(h, d)) throw Error("choice axiom: " + d + " must occur only free in H");
  auto fv = free_variables(h);
  if (auto it = fv.predicates.find(d); it != fv.predicates.end() && it->second != 1)
    throw ArityError("choice axiom: " + d + " must be unary in H");
  std::set<std::string> taken = all_names(h);
  taken.insert(x);
  taken.insert(d);
  std::string s = fresh_name("S", taken);
  taken.insert(s);
  std::string y = fresh_name("y", taken);
  if (s_name) *s_name = s;
  Formula link = Formula::forall(y, Formula::iff(Formula::app(d, {y}), Formula::app(s, {x, y})));
  return Formula::forall(x, Formula::exists_pred(d, 1, Formula::conj(link, h)));
}

Formula mk_choice_axiom(const Formula& h, const std::string& x, const std::string& d) {
  std::string s;
  Formula body = choice_consequent_body(h, x, d, &s);
  Formula antecedent = Formula::forall(x, Formula::exists_pred(d, 1, h));
  return Formula::implies(antecedent, Formula::exists_pred(s, 2, body));
}

Formula mk_injection(const std::string& a, const std::string& b, int n, const std::string& f) {
  if (n < 1) throw ArityError("injection needs n >= 1");
  auto xs = tuple_vars("x", n);
  auto ys = tuple_vars("y", n);
  auto zs = tuple_vars("z", n);
  Formula total = forall_all(
      xs, Formula::implies(Formula::app(a, xs),
                           exists_all(ys, Formula::conj(Formula::app(b, ys), Formula::app(f, cat(xs, ys))))));
  Formula functional = forall_all(
      cat(cat(xs, ys), zs),
      Formula::implies(Formula::conj(Formula::app(f, cat(xs, ys)), Formula::app(f, cat(xs, zs))), tuple_eq(ys, zs)));
  Formula injective = forall_all(
      cat(cat(xs, zs), ys),
      Formula::implies(Formula::conj(Formula::app(f, cat(xs, ys)), Formula::app(f, cat(zs, ys))), tuple_eq(xs, zs)));
  Formula contained = forall_all(
      cat(xs, ys), Formula::implies(Formula::app(f, cat(xs, ys)),
                                    Formula::conj(Formula::app(a, xs), Formula::app(b, ys))));
  return Formula::exists_pred(f, 2 * n, Formula::conj({total, functional, injective, contained}));
}

Formula mk_trichotomy(int n) {
  if (n < 1) throw ArityError("TR^n needs n >= 1");
  Formula body = Formula::disj(mk_injection("A", "B", n), mk_injection("B", "A", n));
  return Formula::forall_pred("A", n, Formula::forall_pred("B", n, body));
}

Formula well_order_body(const std::string& t, int n) {
  if (n < 1) throw ArityError("WO^n needs n >= 1");
  auto xs = tuple_vars("x", n);
  auto ys = tuple_vars("y", n);
  auto zs = tuple_vars("z", n);
  auto T = [&](const std::vector<std::string>& u, const std::vector<std::string>& v) {
    return Formula::app(t, cat(u, v));
  };
  Formula total = forall_all(cat(xs, ys), Formula::disj(T(xs, ys), T(ys, xs)));
  Formula antisym =
      forall_all(cat(xs, ys), Formula::implies(Formula::conj(T(xs, ys), T(ys, xs)), tuple_eq(xs, ys)));
  Formula trans = forall_all(cat(cat(xs, ys), zs),
                             Formula::implies(Formula::conj(T(xs, ys), T(ys, zs)), T(xs, zs)));
  std::string a = t == "A" ? "B" : "A";
  Formula least = Formula::forall_pred(
      a, n,
      Formula::implies(exists_all(xs, Formula::app(a, xs)),
                       exists_all(xs, Formula::conj(Formula::app(a, xs),
                                                    forall_all(ys, Formula::implies(Formula::app(a, ys), T(xs, ys)))))));
  return Formula::conj({total, antisym, trans, least});
}

Formula mk_well_ordering(int n) { return Formula::exists_pred("T", 2 * n, well_order_body("T", n)); }

}  // namespace henkin
