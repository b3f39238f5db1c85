#include "hv/expr.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "hv/error.hpp"

namespace hv {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Element element() {
    Element out;
    skip_ws();
    bool negative = false;
    if (peek('+') || peek('-')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    accumulate(out, negative);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      if (!peek('+') && !peek('-')) fail({"'+'", "'-'", "end of input"});
      negative = text_[pos_] == '-';
      ++pos_;
      accumulate(out, negative);
    }
    return out;
  }

  BasisSymbol lone_symbol() {
    skip_ws();
    BasisSymbol s = atom();
    skip_ws();
    if (!at_end()) fail({"end of input"});
    return s;
  }

 private:
  void accumulate(Element& out, bool negative) {
    skip_ws();
    Coefficient c = 1;
    std::optional<BasisSymbol> sym;
    if (peek_digit()) {
      const std::size_t start = pos_;
      c = coeff();
      skip_ws();
      if (peek('*')) {
        ++pos_;
        skip_ws();
        sym = atom();
      } else if (!c.is_zero()) {
        throw ParseError(start, {"'*'"}, where(start) + "nonzero scalar term needs '*' and a basis symbol");
      }
    } else {
      sym = atom();
    }
    if (negative) c = -c;
    if (sym) out.add_term(*sym, c);
  }

  Coefficient coeff() {
    const std::string_view num = digits();
    skip_ws();
    if (!peek('/')) return Coefficient::parse(num);
    ++pos_;
    skip_ws();
    const std::size_t den_at = pos_;
    const std::string_view den = digits();
    if (den.find_first_not_of('0') == std::string_view::npos)
      throw ParseError(den_at, {"positive integer"}, where(den_at) + "zero denominator");
    return Coefficient::parse(std::string(num) + "/" + std::string(den));
  }

  BasisSymbol atom() {
    if (peek('L') || peek('I')) {
      const SymbolKind kind = text_[pos_] == 'L' ? SymbolKind::L : SymbolKind::I;
      ++pos_;
      skip_ws();
      expect('[');
      skip_ws();
      const std::int64_t n = index();
      skip_ws();
      expect(']');
      return {kind, n};
    }
    if (text_.substr(pos_).starts_with("C_LI")) {
      pos_ += 4;
      return BasisSymbol::C_LI();
    }
    if (text_.substr(pos_).starts_with("C_L")) {
      pos_ += 3;
      return BasisSymbol::C_L();
    }
    if (text_.substr(pos_).starts_with("C_I")) {
      pos_ += 3;
      return BasisSymbol::C_I();
    }
    fail({"coefficient", "'L['", "'I['", "'C_L'", "'C_LI'", "'C_I'"});
  }

  std::int64_t index() {
    const std::size_t start = pos_;
    bool negative = false;
    if (peek('+') || peek('-')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const std::string_view d = digits();
    std::uint64_t magnitude = 0;
    auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), magnitude);
    const std::uint64_t limit = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) + (negative ? 1 : 0);
    if (ec != std::errc() || magnitude > limit)
      throw ParseError(start, {"64-bit index"}, where(start) + "index out of range");
    if (negative) return static_cast<std::int64_t>(0 - magnitude);
    return static_cast<std::int64_t>(magnitude);
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (peek_digit()) ++pos_;
    if (pos_ == start) fail({"digit"});
    return text_.substr(start, pos_ - start);
  }

  void expect(char c) {
    if (!peek(c)) fail({std::string("'") + c + "'"});
    ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  bool peek(char c) const { return !at_end() && text_[pos_] == c; }
  bool peek_digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string where(std::size_t at) const { return "parse error at byte " + std::to_string(at) + ": "; }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string msg = where(pos_) + "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) msg += (i ? ", " : "") + expected[i];
    msg += at_end() ? " but input ended" : std::string(" but found '") + text_[pos_] + "'";
    throw ParseError(pos_, std::move(expected), msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse(std::string_view text) { return Parser(text).element(); }

BasisSymbol parse_symbol(std::string_view text) { return Parser(text).lone_symbol(); }

std::string format(const Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : x.terms()) {
    const bool negative = c.sign() < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const Coefficient mag = c.abs();
    if (!mag.is_one()) out += mag.to_string() + "*";
    out += s.to_string();
    first = false;
  }
  return out;
}

}  // namespace hv
