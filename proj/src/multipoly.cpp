#include "lieeq/multipoly.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "lieeq/sequence_io.hpp"

namespace lieeq {

RealPoly to_real(const RationalPoly& p) {
  RealPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) out.add_term(e, c.get_d());
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, int nvars) : text_(text), nvars_(nvars) {}

  RealPoly parse() {
    RealPoly out(nvars_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      double sign = 1.0;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1.0 : 1.0;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      RealPoly term = parse_term();
      out += term * sign;
      first = false;
      skip_ws();
    }
    return out;
  }

 private:
  RealPoly parse_term() {
    RealPoly term = parse_factor();
    skip_ws();
    while (!at_end() && peek() == '*') {
      ++pos_;
      skip_ws();
      term = term * parse_factor();
      skip_ws();
    }
    return term;
  }

  RealPoly parse_factor() {
    if (at_end()) fail("expected a factor");
    if (peek() == 'x' || peek() == 'X') {
      ++pos_;
      const long idx = parse_integer("variable index");
      if (idx < 1 || idx > nvars_) fail("variable x" + std::to_string(idx) + " out of range 1.." + std::to_string(nvars_));
      long power = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        power = parse_integer("exponent");
        if (power < 0 || power > 64) fail("exponent must be in 0..64");
      }
      std::vector<int> e(static_cast<std::size_t>(nvars_), 0);
      e[static_cast<std::size_t>(idx - 1)] = static_cast<int>(power);
      return RealPoly::monomial(nvars_, e, 1.0);
    }
    double value = 0.0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) fail("expected a number or x<i>");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return RealPoly::constant(nvars_, value);
  }

  long parse_integer(const char* what) {
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    long v = 0;
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr == begin) fail(std::string("expected ") + what);
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError, "polynomial column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  std::string_view text_;
  int nvars_;
  std::size_t pos_ = 0;
};

template <class C>
std::string render(const MultiPoly<C>& p, auto coeff_to_string) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << coeff_to_string(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*x" << i + 1;
      if (e[i] > 1) os << '^' << e[i];
    }
  }
  return os.str();
}

}  // namespace

RealPoly parse_poly(std::string_view text, int nvars) {
  if (nvars < 1) throw Error(ErrorKind::InvalidArgument, "polynomial needs at least one variable");
  return PolyParser(text, nvars).parse();
}

std::string to_string(const RealPoly& p) {
  return render(p, [](double c) { return format_double(c); });
}

std::string to_string(const RationalPoly& p) {
  return render(p, [](const mpq_class& c) { return "(" + c.get_str() + ")"; });
}

}  // namespace lieeq
