#include "monreg/document.hpp"

#include <cctype>
#include <limits>
#include <optional>

namespace monreg {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  IdealDocument document() {
    IdealDocument doc;
    skip_blank_lines();
    if (!keyword("ring")) fail("expected 'ring <n>' declaration");
    require_space();
    auto [line, col] = position();
    long n = integer("variable count");
    if (n < 1 || n > kMaxVariables) {
      fail_at(line, col, "variable count must be between 1 and " + std::to_string(kMaxVariables));
    }
    doc.num_vars = static_cast<int>(n);
    end_of_line();
    skip_blank_lines();

    while (keyword("dseq")) {
      require_space();
      std::string name = identifier();
      skip_space();
      auto [dl, dc] = position();
      std::vector<int> entries{static_cast<int>(integer("d-sequence entry"))};
      skip_space();
      while (accept(',')) {
        skip_space();
        entries.push_back(static_cast<int>(integer("d-sequence entry")));
        skip_space();
      }
      try {
        doc.dsequences.emplace_back(std::move(name), DSequence(std::move(entries)));
      } catch (const std::invalid_argument& e) {
        fail_at(dl, dc, e.what());
      }
      end_of_line();
      skip_blank_lines();
    }

    if (at_end()) fail("empty generator list");
    doc.generators.push_back(monomial(doc.num_vars));
    skip_space();
    while (accept(',')) {
      skip_blank_lines();
      doc.generators.push_back(monomial(doc.num_vars));
      skip_space();
    }
    skip_blank_lines();
    if (!at_end()) fail(std::string("expected ',' between generators, found '") + peek() + "'");
    return doc;
  }

  Monomial single_monomial(int num_vars) {
    skip_space();
    Monomial u = monomial(num_vars);
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "' after monomial");
    return u;
  }

 private:
  // monomial := "1" | factor (("*" | WS) factor)*
  Monomial monomial(int num_vars) {
    skip_space();
    auto [line, col] = position();
    if (peek() == '1' && !std::isdigit(static_cast<unsigned char>(peek(1)))) {
      advance();
      return Monomial(num_vars == 0 ? 1 : num_vars);
    }
    if (peek() != 'x') fail(at_end() || peek() == '\n' ? "expected a monomial" :
                                std::string("expected a monomial, found '") + peek() + "'");
    std::vector<std::pair<int, long>> factors;
    while (true) {
      factors.push_back(factor(num_vars));
      std::size_t save = pos_;
      int save_line = line_, save_col = col_;
      skip_space();
      bool star = accept('*');
      if (star) skip_space();
      if (peek() == 'x') continue;
      if (star) fail("expected a factor after '*'");
      pos_ = save;
      line_ = save_line;
      col_ = save_col;
      break;
    }
    int n = num_vars;
    if (n == 0) {
      for (const auto& [var, e] : factors) n = std::max(n, var);
    }
    std::vector<Exponent> exps(static_cast<std::size_t>(n), 0);
    for (const auto& [var, e] : factors) {
      long total = exps[static_cast<std::size_t>(var - 1)] + e;
      if (total > std::numeric_limits<Exponent>::max()) fail_at(line, col, "exponent overflow");
      exps[static_cast<std::size_t>(var - 1)] = static_cast<Exponent>(total);
    }
    return Monomial(n, std::span<const Exponent>(exps));
  }

  // factor := "x" INT ("^" INT)?
  std::pair<int, long> factor(int num_vars) {
    auto [line, col] = position();
    advance();  // 'x'
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a variable index after 'x'");
    long var = integer("variable index");
    if (var < 1 || (num_vars > 0 && var > num_vars) || var > kMaxVariables) {
      fail_at(line, col, "unknown variable x" + std::to_string(var) +
                             (num_vars > 0 ? " (ring has " + std::to_string(num_vars) + " variables)"
                                           : std::string()));
    }
    long exponent = 1;
    if (accept('^')) {
      auto [el, ec] = position();
      if (peek() == '-') fail_at(el, ec, "negative exponent");
      exponent = integer("exponent");
      if (exponent == 0) fail_at(el, ec, "zero exponent");
    }
    return {static_cast<int>(var), exponent};
  }

  long integer(const char* what) {
    auto [line, col] = position();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("expected ") + what);
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > std::numeric_limits<Exponent>::max()) fail_at(line, col, std::string(what) + " too large");
      advance();
    }
    return value;
  }

  std::string identifier() {
    if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a name");
    std::string out;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
      out += peek();
      advance();
    }
    return out;
  }

  bool keyword(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    char after = pos_ + word.size() < text_.size() ? text_[pos_ + word.size()] : '\0';
    if (std::isalnum(static_cast<unsigned char>(after))) return false;
    for (std::size_t k = 0; k < word.size(); ++k) advance();
    return true;
  }

  void require_space() {
    if (peek() != ' ' && peek() != '\t') fail("expected whitespace");
    skip_space();
  }

  // Spaces, tabs and a trailing comment; never consumes a newline.
  void skip_space() {
    while (peek() == ' ' || peek() == '\t' || peek() == '\r') advance();
    if (peek() == '#') {
      while (!at_end() && peek() != '\n') advance();
    }
  }

  void skip_blank_lines() {
    while (true) {
      skip_space();
      if (peek() != '\n') return;
      advance();
    }
  }

  void end_of_line() {
    skip_space();
    if (at_end()) return;
    if (peek() != '\n') fail(std::string("unexpected '") + peek() + "' before end of line");
    advance();
  }

  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool at_end() const { return pos_ >= text_.size(); }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::pair<int, int> position() const { return {line_, col_}; }

  [[noreturn]] void fail(const std::string& message) const { fail_at(line_, col_, message); }
  [[noreturn]] void fail_at(int line, int col, const std::string& message) const {
    throw ParseError(line, col, message);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

ParseError::ParseError(int line, int column, const std::string& message)
    : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) +
                            ": " + message),
      line_(line),
      column_(column) {}

const DSequence* IdealDocument::find_dsequence(std::string_view name) const {
  for (const auto& [n, d] : dsequences) {
    if (n == name) return &d;
  }
  return nullptr;
}

IdealDocument parse_document(std::string_view text) { return Parser(text).document(); }

MonomialIdeal parse_ideal(std::string_view text) { return parse_document(text).ideal(); }

Monomial parse_monomial(std::string_view text, int num_vars) {
  return Parser(text).single_monomial(num_vars);
}

IdealDocument canonicalize(const IdealDocument& doc) {
  IdealDocument out = doc;
  out.generators = doc.ideal().generators();
  return out;
}

std::string format_document(const IdealDocument& doc) {
  std::string out = "ring " + std::to_string(doc.num_vars) + "\n";
  for (const auto& [name, d] : doc.dsequences) {
    out += "dseq " + name + " ";
    for (std::size_t t = 0; t < d.entries().size(); ++t) {
      if (t > 0) out += ',';
      out += std::to_string(d.entries()[t]);
    }
    out += '\n';
  }
  for (std::size_t k = 0; k < doc.generators.size(); ++k) {
    if (k > 0) out += ", ";
    out += to_string(doc.generators[k]);
  }
  out += '\n';
  return out;
}

}  // namespace monreg
