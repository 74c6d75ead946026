#include "cutgk/spec_parser.hpp"

#include <cctype>
#include <limits>
#include <string>

namespace cutgk {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec s = expr();
    skip_ws();
    if (i_ < text_.size()) fail("unexpected trailing input");
    return s;
  }

 private:
  std::string_view text_;
  std::size_t i_ = 0;
  SourcePos pos_{};

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError,
                what + " at " + std::to_string(pos_.line) + ":" + std::to_string(pos_.column), pos_);
  }

  void advance() {
    if (text_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  void skip_ws() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) advance();
  }

  bool peek(char c) {
    skip_ws();
    return i_ < text_.size() && text_[i_] == c;
  }

  void expect(char c) {
    skip_ws();
    if (i_ >= text_.size()) fail(std::string("expected '") + c + "' but input ended");
    if (text_[i_] != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  std::string identifier() {
    skip_ws();
    std::string out;
    while (i_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[i_]))) {
      out.push_back(text_[i_]);
      advance();
    }
    if (out.empty()) fail(i_ >= text_.size() ? "expected a group expression but input ended"
                                              : "expected a group expression");
    return out;
  }

  long long integer() {
    skip_ws();
    bool neg = false;
    if (i_ < text_.size() && text_[i_] == '-') {
      neg = true;
      advance();
    }
    if (i_ >= text_.size()) fail("expected an integer but input ended");
    if (!std::isdigit(static_cast<unsigned char>(text_[i_]))) fail("expected an integer");
    long long v = 0;
    while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
      if (v > (std::numeric_limits<long long>::max() - 9) / 10) fail("integer too large");
      v = v * 10 + (text_[i_] - '0');
      advance();
    }
    return neg ? -v : v;
  }

  template <class Item>
  auto bracketed_list(Item item) {
    std::vector<decltype(item())> out;
    expect('[');
    if (peek(']')) {
      advance();
      return out;
    }
    out.push_back(item());
    while (peek(',')) {
      advance();
      out.push_back(item());
    }
    expect(']');
    return out;
  }

  SdAction action() {
    const std::string key = identifier();
    expect('=');
    SdAction a;
    if (key == "pow") {
      a.kind = SdAction::Kind::Pow;
      a.power = integer();
    } else if (key == "mats") {
      a.kind = SdAction::Kind::Mats;
      a.matrices = bracketed_list([&] {
        return bracketed_list([&] { return bracketed_list([&] { return integer(); }); });
      });
    } else {
      fail("unknown action '" + key + "' (expected pow or mats)");
    }
    return a;
  }

  GroupSpec expr() {
    skip_ws();
    const SourcePos begin = pos_;
    const std::string name = identifier();
    GroupSpec s;
    auto integer_args = [&](std::size_t count) {
      expect('(');
      for (std::size_t k = 0; k < count; ++k) {
        if (k) expect(',');
        s.params.push_back(integer());
      }
      expect(')');
    };
    if (name == "Cyc") { s.kind = SpecKind::Cyc; integer_args(1); }
    else if (name == "Dih") { s.kind = SpecKind::Dih; integer_args(1); }
    else if (name == "Quat") { s.kind = SpecKind::Quat; integer_args(1); }
    else if (name == "Sym") { s.kind = SpecKind::Sym; integer_args(1); }
    else if (name == "Alt") { s.kind = SpecKind::Alt; integer_args(1); }
    else if (name == "EA") { s.kind = SpecKind::EA; integer_args(2); }
    else if (name == "MM") { s.kind = SpecKind::MM; }
    else if (name == "W4200") { s.kind = SpecKind::W4200; }
    else if (name == "DP" || name == "Wr" || name == "SD") {
      s.kind = name == "DP" ? SpecKind::DP : name == "Wr" ? SpecKind::Wr : SpecKind::SD;
      expect('(');
      s.children.push_back(expr());
      expect(',');
      s.children.push_back(expr());
      if (s.kind == SpecKind::SD) {
        expect(',');
        s.action = action();
      }
      expect(')');
    } else {
      pos_ = begin;
      fail("unknown group constructor '" + name + "'");
    }
    s.span = {begin, pos_};
    return s;
  }
};

}  // namespace

GroupSpec parse_spec(std::string_view text) {
  GroupSpec s = Parser(text).parse();
  validate(s);
  return s;
}

}  // namespace cutgk
