#include "mvis/genlang.hpp"

#include "mvis/errors.hpp"
#include "mvis/generators.hpp"
#include "mvis/io.hpp"

#include <cctype>
#include <map>

namespace mvis {

namespace {

using Kind = GraphExpr::Kind;

constexpr long kMaxParam = kMaxVertices;

struct AtomShape
{
  Kind kind;
  int ints;
  int exprs;
};

class Parser
{
public:
  explicit Parser(std::string_view text) : text_(text) {}

  auto parse() -> GraphExpr
  {
    GraphExpr e = expr();
    skip_ws();
    if (pos_ != text_.size())
      fail("unexpected trailing input", {"+", "u", "end of input"});
    return e;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] auto fail(const std::string &what, std::vector<std::string> expected, std::size_t at) const -> void
  {
    std::string msg = what;
    if (!expected.empty()) {
      msg += " (expected ";
      for (std::size_t i = 0; i < expected.size(); ++i)
        msg += (i ? " or " : "") + expected[i];
      msg += ")";
    }
    throw ParseError(msg, at, std::move(expected));
  }
  [[noreturn]] auto fail(const std::string &what, std::vector<std::string> expected) const -> void
  {
    fail(what, std::move(expected), pos_);
  }

  auto skip_ws() -> void
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  auto peek() -> int
  {
    skip_ws();
    return pos_ < text_.size() ? static_cast<unsigned char>(text_[pos_]) : -1;
  }

  auto expect(char c) -> void
  {
    if (peek() != c)
      fail(pos_ < text_.size() ? "unexpected character" : "unexpected end of input", {std::string(1, c)});
    ++pos_;
  }

  auto word_at(std::size_t at) const -> std::string_view
  {
    std::size_t end = at;
    while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
      ++end;
    return text_.substr(at, end - at);
  }

  /// The union keyword: a standalone "u".
  auto at_union() -> bool
  {
    skip_ws();
    return word_at(pos_) == "u";
  }

  auto integer() -> int
  {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail(pos_ < text_.size() ? "unexpected character" : "unexpected end of input", {"integer"});
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > kMaxParam)
        fail("integer out of range (max " + std::to_string(kMaxParam) + ")", {}, start);
      ++pos_;
    }
    return static_cast<int>(value);
  }

  auto expr() -> GraphExpr
  {
    GraphExpr left = term();
    while (peek() == '+') {
      std::size_t at = pos_++;
      GraphExpr right = term();
      left = GraphExpr{Kind::Join, {}, {std::move(left), std::move(right)}, {}, at};
    }
    return left;
  }

  auto term() -> GraphExpr
  {
    GraphExpr left = atom();
    while (at_union()) {
      std::size_t at = pos_++;
      GraphExpr right = atom();
      left = GraphExpr{Kind::Union, {}, {std::move(left), std::move(right)}, {}, at};
    }
    return left;
  }

  auto atom() -> GraphExpr
  {
    static const std::vector<std::string> kAtoms{"K(", "C(", "T(", "petersen", "c5(", "g7(", "line(",
                                                 "cart(", "dir(", "file(", "("};
    int c = peek();
    std::size_t start = pos_;
    if (c == '(') {
      ++pos_;
      GraphExpr inner = expr();
      expect(')');
      return inner;
    }
    if (c < 0)
      fail("unexpected end of input", kAtoms);
    std::string_view word = word_at(pos_);
    if (word.empty())
      fail("unexpected character", kAtoms);

    static const std::map<std::string_view, AtomShape> kShapes{
        {"C", {Kind::Cycle, 1, 0}},       {"T", {Kind::Turan, 2, 0}},     {"c5", {Kind::C5Family, 2, 0}},
        {"g7", {Kind::G7Family, 3, 0}},   {"line", {Kind::Line, 0, 1}},   {"cart", {Kind::Cartesian, 0, 2}},
        {"dir", {Kind::Direct, 0, 2}},    {"petersen", {Kind::Petersen, 0, 0}},
    };

    pos_ += word.size();
    GraphExpr node;
    node.offset = start;

    if (word == "file") {
      node.kind = Kind::File;
      expect('(');
      std::size_t end = text_.find(')', pos_);
      if (end == std::string_view::npos)
        fail("unterminated file path", {")"}, text_.size());
      std::string_view path = text_.substr(pos_, end - pos_);
      while (!path.empty() && std::isspace(static_cast<unsigned char>(path.front())))
        path.remove_prefix(1);
      while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back())))
        path.remove_suffix(1);
      if (path.empty())
        fail("empty file path", {"path"});
      node.path = std::string(path);
      pos_ = end + 1;
      return node;
    }

    if (word == "K") {
      expect('(');
      node.params.push_back(integer());
      if (peek() == ',') {
        ++pos_;
        node.params.push_back(integer());
        node.kind = Kind::CompleteBipartite;
      } else {
        node.kind = Kind::Complete;
      }
      expect(')');
      check_params(node);
      return node;
    }

    auto it = kShapes.find(word);
    if (it == kShapes.end())
      fail("unknown identifier '" + std::string(word) + "'", kAtoms, start);
    node.kind = it->second.kind;
    if (node.kind == Kind::Petersen)
      return node;

    expect('(');
    for (int i = 0; i < it->second.ints; ++i) {
      if (i > 0)
        arity_separator(word, it->second.ints);
      node.params.push_back(integer());
    }
    for (int i = 0; i < it->second.exprs; ++i) {
      if (i > 0)
        arity_separator(word, it->second.exprs);
      node.children.push_back(expr());
    }
    if (peek() != ')')
      fail("arity mismatch: '" + std::string(word) + "' takes " +
               std::to_string(it->second.ints + it->second.exprs) + " argument(s)",
           {")"});
    ++pos_;
    check_params(node);
    return node;
  }

  auto arity_separator(std::string_view word, int arity) -> void
  {
    if (peek() != ',')
      fail("arity mismatch: '" + std::string(word) + "' takes " + std::to_string(arity) + " arguments", {","});
    ++pos_;
  }

  auto check_params(const GraphExpr &node) const -> void
  {
    auto bad = [&](const std::string &what) { fail("integer out of range: " + what, {}, node.offset); };
    const auto &p = node.params;
    switch (node.kind) {
    case Kind::Complete:
      if (p[0] < 1)
        bad("K(n) needs n >= 1");
      break;
    case Kind::CompleteBipartite:
      if (p[0] < 1 || p[1] < 1)
        bad("K(m,n) needs m, n >= 1");
      break;
    case Kind::Cycle:
      if (p[0] < 3)
        bad("C(n) needs n >= 3");
      break;
    case Kind::Turan:
      if (p[1] < 1)
        bad("T(n,r) needs r >= 1");
      break;
    default:
      break;
    }
  }
};

auto print_into(const GraphExpr &e, std::string &out) -> void;

auto print_child(const GraphExpr &child, bool wrap, std::string &out) -> void
{
  if (wrap)
    out += "(";
  print_into(child, out);
  if (wrap)
    out += ")";
}

auto print_into(const GraphExpr &e, std::string &out) -> void
{
  auto ints = [&](const char *name) {
    out += name;
    out += "(";
    for (std::size_t i = 0; i < e.params.size(); ++i)
      out += (i ? "," : "") + std::to_string(e.params[i]);
    out += ")";
  };
  auto calls = [&](const char *name) {
    out += name;
    out += "(";
    for (std::size_t i = 0; i < e.children.size(); ++i) {
      if (i)
        out += ",";
      print_into(e.children[i], out);
    }
    out += ")";
  };
  switch (e.kind) {
  case Kind::Complete:
  case Kind::CompleteBipartite:
    ints("K");
    break;
  case Kind::Cycle:
    ints("C");
    break;
  case Kind::Petersen:
    out += "petersen";
    break;
  case Kind::Turan:
    ints("T");
    break;
  case Kind::C5Family:
    ints("c5");
    break;
  case Kind::G7Family:
    ints("g7");
    break;
  case Kind::Line:
    calls("line");
    break;
  case Kind::Cartesian:
    calls("cart");
    break;
  case Kind::Direct:
    calls("dir");
    break;
  case Kind::File:
    out += "file(" + e.path + ")";
    break;
  case Kind::Join:
    // Left-associative: only a right-hand join needs parentheses.
    print_child(e.children[0], false, out);
    out += " + ";
    print_child(e.children[1], e.children[1].kind == Kind::Join, out);
    break;
  case Kind::Union:
    print_child(e.children[0], e.children[0].kind == Kind::Join, out);
    out += " u ";
    print_child(e.children[1], e.children[1].kind == Kind::Join || e.children[1].kind == Kind::Union, out);
    break;
  }
}

} // namespace

auto parse_spec(std::string_view text) -> GraphExpr
{
  return Parser(text).parse();
}

auto print(const GraphExpr &expr) -> std::string
{
  std::string out;
  print_into(expr, out);
  return out;
}

auto eval(const GraphExpr &e) -> Graph
{
  const auto &p = e.params;
  try {
    switch (e.kind) {
    case Kind::Complete:
      return complete(p[0]);
    case Kind::CompleteBipartite:
      return complete_bipartite(p[0], p[1]);
    case Kind::Cycle:
      return cycle(p[0]);
    case Kind::Petersen:
      return petersen();
    case Kind::Turan:
      return turan_graph(p[0], p[1]);
    case Kind::C5Family:
      return c5_family(p[0], p[1]);
    case Kind::G7Family:
      return g7_family(p[0], p[1], p[2]);
    case Kind::Line:
      return line_graph(eval(e.children[0])).first;
    case Kind::Cartesian:
      return cartesian_product(eval(e.children[0]), eval(e.children[1]));
    case Kind::Direct:
      return direct_product(eval(e.children[0]), eval(e.children[1]));
    case Kind::Join:
      return join(eval(e.children[0]), eval(e.children[1]));
    case Kind::Union:
      return disjoint_union(eval(e.children[0]), eval(e.children[1]));
    case Kind::File:
      return io::load_graph(e.path);
    }
  } catch (const EvalError &) {
    throw;
  } catch (const CeilingError &) {
    throw;
  } catch (const IoError &) {
    throw;
  } catch (const std::invalid_argument &err) {
    throw EvalError(err.what(), e.offset);
  }
  throw EvalError("unknown expression kind", e.offset);
}

} // namespace mvis
