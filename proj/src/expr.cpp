#include "korovkin/expr.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <vector>

namespace korovkin {

namespace {

enum class NodeKind { number, var_x, var_y, unary, binary };

struct Node {
  NodeKind kind;
  char op = 0; // - s(in) c(os) q(sqrt) a(bs) e(xp) for unary; + - * / ^ binary
  double value = 0.0;
  int lhs = -1;
  int rhs = -1;
  std::size_t offset = 0;
};

} // namespace

struct FunctionExpr::Impl {
  std::vector<Node> nodes;
  int root = -1;
  int arity = 1;
  std::string source;
};

namespace {

class Parser {
public:
  explicit Parser(std::string_view src) : src_(src) {}

  FunctionExpr::Impl run() {
    impl_.source = std::string(src_);
    impl_.root = parse_expr();
    skip_ws();
    if (pos_ != src_.size())
      throw parse_error("unexpected character", pos_);
    return std::move(impl_);
  }

private:
  std::string_view src_;
  std::size_t pos_ = 0;
  FunctionExpr::Impl impl_;

  void skip_ws() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t'))
      ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  int add(Node n) {
    impl_.nodes.push_back(n);
    return static_cast<int>(impl_.nodes.size()) - 1;
  }

  int parse_expr() {
    int lhs = parse_term();
    for (;;) {
      skip_ws();
      if (pos_ >= src_.size() || (src_[pos_] != '+' && src_[pos_] != '-'))
        return lhs;
      const char op = src_[pos_];
      const std::size_t at = pos_++;
      const int rhs = parse_term();
      lhs = add({NodeKind::binary, op, 0.0, lhs, rhs, at});
    }
  }

  int parse_term() {
    int lhs = parse_unary();
    for (;;) {
      skip_ws();
      if (pos_ >= src_.size() || (src_[pos_] != '*' && src_[pos_] != '/'))
        return lhs;
      const char op = src_[pos_];
      const std::size_t at = pos_++;
      const int rhs = parse_unary();
      lhs = add({NodeKind::binary, op, 0.0, lhs, rhs, at});
    }
  }

  int parse_unary() {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == '-') {
      const std::size_t at = pos_++;
      const int child = parse_unary();
      return add({NodeKind::unary, '-', 0.0, child, -1, at});
    }
    return parse_power();
  }

  int parse_power() {
    const int base = parse_primary();
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == '^') {
      const std::size_t at = pos_++;
      const int exp = parse_unary(); // right-assoc, allows negative exponents
      return add({NodeKind::binary, '^', 0.0, base, exp, at});
    }
    return base;
  }

  int parse_primary() {
    skip_ws();
    if (pos_ >= src_.size()) throw parse_error("unexpected end of input", pos_);
    const char c = src_[pos_];

    if (c == '(') {
      ++pos_;
      const int inner = parse_expr();
      if (!peek_is(')')) throw parse_error("expected ')'", pos_);
      ++pos_;
      return inner;
    }

    if ((c >= '0' && c <= '9') || c == '.') {
      double value = 0.0;
      const char* begin = src_.data() + pos_;
      const char* end = src_.data() + src_.size();
      const auto [ptr, ec] = std::from_chars(begin, end, value);
      if (ec != std::errc())
        throw parse_error("malformed number", pos_);
      const std::size_t at = pos_;
      pos_ += static_cast<std::size_t>(ptr - begin);
      return add({NodeKind::number, 0, value, -1, -1, at});
    }

    if (c >= 'a' && c <= 'z') {
      const std::size_t at = pos_;
      std::size_t len = 0;
      while (pos_ + len < src_.size() && src_[pos_ + len] >= 'a' &&
             src_[pos_ + len] <= 'z')
        ++len;
      const std::string_view word = src_.substr(pos_, len);
      pos_ += len;
      if (word == "x") return add({NodeKind::var_x, 0, 0.0, -1, -1, at});
      if (word == "y") {
        impl_.arity = 2;
        return add({NodeKind::var_y, 0, 0.0, -1, -1, at});
      }
      char tag = 0;
      if (word == "sin") tag = 's';
      else if (word == "cos") tag = 'c';
      else if (word == "sqrt") tag = 'q';
      else if (word == "abs") tag = 'a';
      else if (word == "exp") tag = 'e';
      if (tag == 0)
        throw parse_error("unknown identifier '" + std::string(word) + "'", at);
      if (!peek_is('(')) throw parse_error("expected '(' after function", pos_);
      ++pos_;
      const int arg = parse_expr();
      if (!peek_is(')')) throw parse_error("expected ')'", pos_);
      ++pos_;
      return add({NodeKind::unary, tag, 0.0, arg, -1, at});
    }

    throw parse_error("unexpected character", pos_);
  }
};

double eval_node(const std::vector<Node>& nodes, int idx,
                 std::span<const double> p) {
  const Node& n = nodes[idx];
  switch (n.kind) {
    case NodeKind::number: return n.value;
    case NodeKind::var_x: return p[0];
    case NodeKind::var_y: return p[1];
    case NodeKind::unary: {
      const double v = eval_node(nodes, n.lhs, p);
      double out = 0.0;
      switch (n.op) {
        case '-': out = -v; break;
        case 's': out = std::sin(v); break;
        case 'c': out = std::cos(v); break;
        case 'a': out = std::abs(v); break;
        case 'e': out = std::exp(v); break;
        case 'q':
          if (v < 0.0) throw eval_error("sqrt of negative value", n.offset);
          out = std::sqrt(v);
          break;
      }
      if (!std::isfinite(out))
        throw eval_error("non-finite result", n.offset);
      return out;
    }
    case NodeKind::binary: {
      const double a = eval_node(nodes, n.lhs, p);
      const double b = eval_node(nodes, n.rhs, p);
      double out = 0.0;
      switch (n.op) {
        case '+': out = a + b; break;
        case '-': out = a - b; break;
        case '*': out = a * b; break;
        case '/':
          if (b == 0.0) throw eval_error("division by zero", n.offset);
          out = a / b;
          break;
        case '^': out = std::pow(a, b); break;
      }
      if (!std::isfinite(out))
        throw eval_error("non-finite result", n.offset);
      return out;
    }
  }
  throw eval_error("corrupt expression", 0);
}

void print_node(const std::vector<Node>& nodes, int idx, std::string& out) {
  const Node& n = nodes[idx];
  switch (n.kind) {
    case NodeKind::number: {
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.17g", n.value);
      out += buf;
      return;
    }
    case NodeKind::var_x: out += 'x'; return;
    case NodeKind::var_y: out += 'y'; return;
    case NodeKind::unary: {
      const char* name = nullptr;
      switch (n.op) {
        case '-': name = "-"; break;
        case 's': name = "sin"; break;
        case 'c': name = "cos"; break;
        case 'q': name = "sqrt"; break;
        case 'a': name = "abs"; break;
        case 'e': name = "exp"; break;
      }
      out += name;
      out += '(';
      print_node(nodes, n.lhs, out);
      out += ')';
      return;
    }
    case NodeKind::binary: {
      out += '(';
      print_node(nodes, n.lhs, out);
      out += n.op;
      print_node(nodes, n.rhs, out);
      out += ')';
      return;
    }
  }
}

} // namespace

FunctionExpr::FunctionExpr(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

FunctionExpr FunctionExpr::parse(std::string_view src) {
  if (src.empty()) throw parse_error("empty expression", 0);
  Parser parser(src);
  return FunctionExpr(std::make_shared<const Impl>(parser.run()));
}

double FunctionExpr::evaluate(std::span<const double> point) const {
  if (static_cast<int>(point.size()) < impl_->arity)
    throw eval_error("point dimension below expression arity", 0);
  return eval_node(impl_->nodes, impl_->root, point);
}

double FunctionExpr::evaluate(double x) const {
  return evaluate(std::span<const double>(&x, 1));
}

double FunctionExpr::evaluate(double x, double y) const {
  const double p[2] = {x, y};
  return evaluate(std::span<const double>(p, 2));
}

std::string FunctionExpr::to_string() const {
  std::string out;
  print_node(impl_->nodes, impl_->root, out);
  return out;
}

int FunctionExpr::arity() const { return impl_->arity; }

const std::string& FunctionExpr::source() const { return impl_->source; }

RealFunction FunctionExpr::to_function() const {
  auto impl = impl_;
  return RealFunction(impl->source, impl->arity,
                      [impl](std::span<const double> p) {
                        return eval_node(impl->nodes, impl->root, p);
                      });
}

} // namespace korovkin
