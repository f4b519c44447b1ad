#include "og6/expr.hpp"

#include <cctype>
#include <charconv>
#include <map>

namespace og6 {

ParseError::ParseError(const std::string& message, std::size_t offset)
    : LatticeError("parse error at offset " + std::to_string(offset) + ": " + message),
      message_(message),
      offset_(offset) {}

bool operator==(const LatticeExpr& a, const LatticeExpr& b) {
  return a.kind == b.kind && a.name == b.name && a.param == b.param && a.value == b.value &&
         a.children == b.children;
}

namespace {

constexpr long kMaxPower = 64;

const std::map<std::string, NamedLattice, std::less<>>& names() {
  static const std::map<std::string, NamedLattice, std::less<>> table = {
      {"U", NamedLattice::U},         {"A", NamedLattice::A},
      {"D", NamedLattice::D},         {"E", NamedLattice::E},
      {"h5", NamedLattice::H5},       {"K7", NamedLattice::K7},
      {"OG6", NamedLattice::OG6},     {"Mukai", NamedLattice::Mukai},
      {"Lambda10", NamedLattice::Lambda10},
  };
  return table;
}

bool takes_parameter(NamedLattice n) {
  return n == NamedLattice::A || n == NamedLattice::D || n == NamedLattice::E;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  LatticeExpr parse() {
    LatticeExpr e = expr();
    skip();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  [[noreturn]] static void fail_at(const std::string& msg, std::size_t at) {
    throw ParseError(msg, at);
  }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      if (pos_ == src_.size()) fail(std::string("expected '") + c + "' at end of input");
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  bool integer_ahead() {
    skip();
    if (pos_ >= src_.size()) return false;
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
    return c == '-' && pos_ + 1 < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]));
  }

  long integer(bool allow_negative) {
    skip();
    const std::size_t start = pos_;
    if (!integer_ahead()) fail("expected an integer");
    if (src_[pos_] == '-' && !allow_negative) fail("negative integer not allowed here");
    std::size_t end = pos_ + (src_[pos_] == '-' ? 1 : 0);
    while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
    long value = 0;
    const auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + end, value);
    if (ec != std::errc() || ptr != src_.data() + end) fail_at("integer out of range", start);
    pos_ = end;
    return value;
  }

  LatticeExpr expr() {
    skip();
    LatticeExpr first = term();
    if (!peek('+')) return first;
    LatticeExpr sum;
    sum.kind = LatticeExpr::Kind::Sum;
    sum.offset = first.offset;
    sum.children.push_back(std::move(first));
    while (peek('+')) {
      ++pos_;
      sum.children.push_back(term());
    }
    return sum;
  }

  LatticeExpr term() {
    LatticeExpr base = atom();
    if (!peek('^')) return base;
    const std::size_t at = pos_;
    ++pos_;
    skip();
    const std::size_t num_at = pos_;
    const long k = integer(false);
    if (k < 1) fail_at("power must be at least 1", num_at);
    if (k > kMaxPower) fail_at("power above " + std::to_string(kMaxPower), num_at);
    LatticeExpr p;
    p.kind = LatticeExpr::Kind::Power;
    p.value = k;
    p.offset = at;
    p.children.push_back(std::move(base));
    return p;
  }

  LatticeExpr atom() {
    LatticeExpr e = primary();
    bool parameter_pending =
        e.kind == LatticeExpr::Kind::Named && takes_parameter(e.name);
    while (peek('(')) {
      const std::size_t at = pos_;
      ++pos_;
      skip();
      const std::size_t num_at = pos_;
      const long n = integer(true);
      expect(')');
      if (parameter_pending) {
        e.param = n;
        parameter_pending = false;
        continue;
      }
      if (n == 0) fail_at("twist by 0 is degenerate", num_at);
      LatticeExpr t;
      t.kind = LatticeExpr::Kind::Twist;
      t.value = n;
      t.offset = at;
      t.children.push_back(std::move(e));
      e = std::move(t);
    }
    if (parameter_pending) fail("expected '(' with the rank of " + print(e));
    return e;
  }

  LatticeExpr primary() {
    skip();
    const std::size_t at = pos_;
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (c == '[') {
      ++pos_;
      skip();
      const std::size_t num_at = pos_;
      const long m = integer(true);
      expect(']');
      if (m % 2 != 0) fail_at("odd diagonal entry " + std::to_string(m) + " (lattice must be even)", num_at);
      if (m == 0) fail_at("[0] is degenerate", num_at);
      LatticeExpr e;
      e.kind = LatticeExpr::Kind::Rank1;
      e.value = m;
      e.offset = at;
      return e;
    }
    if (c == '(') {
      ++pos_;
      LatticeExpr e = expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < src_.size() && std::isalnum(static_cast<unsigned char>(src_[end]))) ++end;
      const std::string_view word = src_.substr(pos_, end - pos_);
      const auto it = names().find(word);
      if (it == names().end()) fail("unknown lattice name '" + std::string(word) + "'");
      pos_ = end;
      LatticeExpr e;
      e.kind = LatticeExpr::Kind::Named;
      e.name = it->second;
      e.offset = at;
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

std::string name_text(NamedLattice n) {
  for (const auto& [text, value] : names()) {
    if (value == n) return text;
  }
  return "?";
}

}  // namespace

LatticeExpr parse_lattice(std::string_view src) { return Parser(src).parse(); }

std::string print(const LatticeExpr& e) {
  using K = LatticeExpr::Kind;
  switch (e.kind) {
    case K::Named: {
      std::string out = name_text(e.name);
      if (e.param) out += "(" + std::to_string(*e.param) + ")";
      return out;
    }
    case K::Rank1:
      return "[" + std::to_string(e.value) + "]";
    case K::Sum: {
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += " + ";
        const LatticeExpr& c = e.children[i];
        out += c.kind == K::Sum ? "(" + print(c) + ")" : print(c);
      }
      return out;
    }
    case K::Power: {
      const LatticeExpr& c = e.children.front();
      const bool wrap = c.kind == K::Sum || c.kind == K::Power;
      return (wrap ? "(" + print(c) + ")" : print(c)) + "^" + std::to_string(e.value);
    }
    case K::Twist: {
      const LatticeExpr& c = e.children.front();
      const bool wrap = c.kind == K::Sum || c.kind == K::Power;
      return (wrap ? "(" + print(c) + ")" : print(c)) + "(" + std::to_string(e.value) + ")";
    }
  }
  return {};
}

Lattice elaborate(const LatticeExpr& e) {
  using K = LatticeExpr::Kind;
  try {
    switch (e.kind) {
      case K::Named:
        return make_named(e.name, e.param).with_label(print(e));
      case K::Rank1:
        return make_named(NamedLattice::Rank1, e.value);
      case K::Sum: {
        std::vector<Lattice> parts;
        for (const LatticeExpr& c : e.children) parts.push_back(elaborate(c));
        return direct_sum(parts).with_label(print(e));
      }
      case K::Power:
        return power(elaborate(e.children.front()), static_cast<int>(e.value)).with_label(print(e));
      case K::Twist:
        return twist(elaborate(e.children.front()), e.value).with_label(print(e));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const LatticeError& err) {
    throw ParseError(err.what(), e.offset);
  }
  throw ParseError("unknown expression node", e.offset);
}

Lattice lattice_from_expression(std::string_view src) { return elaborate(parse_lattice(src)); }

}  // namespace og6
