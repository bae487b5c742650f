#include "obr/parser.hpp"

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "obr/error.hpp"

namespace obr {

namespace {

std::string describe(std::size_t offset, const std::vector<std::string>& expected) {
  std::ostringstream os;
  os << "parse error at offset " << offset << ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) os << (i + 1 == expected.size() ? " or " : ", ");
    os << expected[i];
  }
  return os.str();
}

enum class Tok { kAtom, kTrue, kFalse, kNot, kAnd, kOr, kImplies, kIff, kLParen, kRParen, kEnd, kBad };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

const std::vector<std::string>& operand_start() {
  static const std::vector<std::string> v = {"atom", "'true'", "'false'", "'!'", "'('"};
  return v;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { advance(); }

  Formula parse_all() {
    Formula f = parse_iff();
    if (tok_.kind != Tok::kEnd) {
      fail({"'&'", "'|'", "'->'", "'<->'", "end of input"});
    }
    return f;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(tok_.offset, std::move(expected));
  }

  void advance() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
    tok_ = Token{Tok::kEnd, pos_, {}};
    if (pos_ >= text_.size()) return;
    const char c = text_[pos_];
    auto take = [&](Tok kind, std::size_t len) {
      tok_ = Token{kind, pos_, std::string(text_.substr(pos_, len))};
      pos_ += len;
    };
    if (c >= 'a' && c <= 'z') {
      std::size_t end = pos_ + 1;
      while (end < text_.size() &&
             ((text_[end] >= 'a' && text_[end] <= 'z') ||
              (text_[end] >= '0' && text_[end] <= '9') || text_[end] == '_')) {
        ++end;
      }
      std::string_view word = text_.substr(pos_, end - pos_);
      Tok kind = word == "true" ? Tok::kTrue : word == "false" ? Tok::kFalse : Tok::kAtom;
      take(kind, end - pos_);
      return;
    }
    switch (c) {
      case '!': take(Tok::kNot, 1); return;
      case '&': take(Tok::kAnd, 1); return;
      case '|': take(Tok::kOr, 1); return;
      case '(': take(Tok::kLParen, 1); return;
      case ')': take(Tok::kRParen, 1); return;
      case '-':
        if (text_.substr(pos_, 2) == "->") { take(Tok::kImplies, 2); return; }
        break;
      case '<':
        if (text_.substr(pos_, 3) == "<->") { take(Tok::kIff, 3); return; }
        break;
      default: break;
    }
    tok_ = Token{Tok::kBad, pos_, std::string(1, c)};
  }

  Formula parse_iff() {
    Formula f = parse_implies();
    while (tok_.kind == Tok::kIff) {
      advance();
      f = Formula::equivalence(f, parse_implies());
    }
    return f;
  }

  Formula parse_implies() {
    Formula f = parse_or();
    if (tok_.kind == Tok::kImplies) {
      advance();
      return Formula::implication(f, parse_implies());
    }
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (tok_.kind == Tok::kOr) {
      advance();
      f = Formula::disjunction(f, parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (tok_.kind == Tok::kAnd) {
      advance();
      f = Formula::conjunction(f, parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    switch (tok_.kind) {
      case Tok::kNot:
        advance();
        return Formula::negation(parse_unary());
      case Tok::kAtom: {
        Formula f = Formula::atom(tok_.text);
        advance();
        return f;
      }
      case Tok::kTrue: advance(); return Formula::top();
      case Tok::kFalse: advance(); return Formula::bottom();
      case Tok::kLParen: {
        advance();
        Formula f = parse_iff();
        if (tok_.kind != Tok::kRParen) {
          fail({"'&'", "'|'", "'->'", "'<->'", "')'"});
        }
        advance();
        return f;
      }
      default:
        fail(operand_start());
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token tok_{Tok::kEnd, 0, {}};
};

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected)
    : Error(ErrorCode::kParse, describe(offset, expected)),
      offset_(offset),
      expected_(std::move(expected)) {}

Formula parse(std::string_view text) {
  return canonicalize(Parser(text).parse_all());
}

}  // namespace obr
