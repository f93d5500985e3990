#include <array>
#include <cctype>

#include "saga/polynomial.hpp"

namespace saga {

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, const VariableContext& ctx) : text_(text), ctx_(ctx) {}

  std::vector<RawTerm> run() {
    std::vector<RawTerm> out;
    skip_space();
    if (at_end()) error("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
      skip_space();
    }
    out.push_back(term(negative));
    while (true) {
      skip_space();
      if (at_end()) break;
      char c = get();
      if (c != '+' && c != '-') error(std::string("expected '+' or '-' but found '") + c + "'");
      skip_space();
      out.push_back(term(c == '-'));
    }
    return out;
  }

 private:
  RawTerm term(bool negative) {
    RawTerm t;
    t.negative = negative;
    std::array<unsigned, kMaxVariables> exps{};
    bool need_factor = true;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coefficient = digits();
      skip_space();
      if (!at_end() && peek() == '/') {
        get();
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) error("expected denominator");
        t.coefficient += "/" + digits();
        skip_space();
      }
      if (!at_end() && peek() == '*') {
        get();
        skip_space();
      } else {
        need_factor = false;
      }
    }
    if (need_factor) {
      factor(exps);
      skip_space();
      while (!at_end() && peek() == '*') {
        get();
        skip_space();
        factor(exps);
        skip_space();
      }
    }
    t.monomial = Monomial(std::span<const unsigned>(exps.data(), ctx_.size()));
    return t;
  }

  void factor(std::array<unsigned, kMaxVariables>& exps) {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    if (start == pos_) error("expected a variable");
    std::string_view name = text_.substr(start, pos_ - start);
    std::size_t index = ctx_.index_of(name);
    if (index == ctx_.size()) error("unknown variable '" + std::string(name) + "'");
    unsigned e = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      get();
      skip_space();
      std::string d = digits();
      if (d.size() > 3) error("exponent too large");
      e = static_cast<unsigned>(std::stoul(d));
    }
    exps[index] += e;
    if (exps[index] > 255) error("exponent too large");
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) error("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  const VariableContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<RawTerm> parse_raw_terms(std::string_view text, const VariableContext& ctx) {
  return TermParser(text, ctx).run();
}

}  // namespace saga
