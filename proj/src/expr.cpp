#include "alphacalc/expr.hpp"

#include <cctype>
#include <cstdio>
#include <map>
#include <sstream>

#include "alphacalc/errors.hpp"

namespace alphacalc {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  ExprAst parse() {
    std::map<Rat, Rat> sums;
    ExprAst ast;
    skip_ws();
    if (at_end()) fail("empty expression");

    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      skip_ws();
      if (peek() == 'O') {
        ast.order = parse_tail();
        skip_ws();
        if (!at_end()) fail("the O(...) tail must be the last term");
        if (negative) fail("the O(...) tail cannot be negated");
        break;
      }
      auto [exponent, coeff] = parse_term();
      if (negative) coeff = -coeff;
      sums[exponent] += coeff;
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }

    for (auto& [e, c] : sums) {
      if (!c.is_zero()) ast.terms.push_back(ExprTerm{e, c});
    }
    return ast;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("syntax error at byte " + std::to_string(pos_) + ": " + what);
  }

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    return std::string(src_.substr(start, pos_ - start));
  }

  Rat parse_rat() {
    skip_ws();
    std::string text;
    if (peek() == '-') {
      text = "-";
      ++pos_;
    }
    text += parse_int();
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      const std::size_t den_pos = pos_;
      const std::string den = parse_int();
      if (mpz_class(den) == 0) {
        pos_ = den_pos;
        fail("zero denominator");
      }
      text += "/" + den;
    }
    return Rat::parse(text);
  }

  // 'z' ['^' '(' rat ')']
  Rat parse_pow() {
    skip_ws();
    if (peek() != 'z') fail("expected 'z'");
    ++pos_;
    skip_ws();
    if (peek() != '^') return Rat(1);
    ++pos_;
    expect('(');
    Rat e = parse_rat();
    expect(')');
    return e;
  }

  std::pair<Rat, Rat> parse_term() {
    skip_ws();
    if (peek() == 'z') return {parse_pow(), Rat(1)};
    const char c = peek();
    if (c != '-' && !std::isdigit(static_cast<unsigned char>(c))) fail("expected a coefficient or 'z'");
    Rat coeff = parse_rat();
    skip_ws();
    if (peek() != '*') return {Rat(0), coeff};
    ++pos_;
    return {parse_pow(), coeff};
  }

  Rat parse_tail() {
    ++pos_;  // 'O'
    expect('(');
    Rat e = parse_pow();
    expect(')');
    return e;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

std::string abs_str(const Rat& c) { return (c.sign() < 0 ? -c : c).str(); }

std::string abs_str(double c) { return format_double(c < 0 ? -c : c); }

template <typename Coeff>
std::string series_text(const Series<Coeff>& f, std::string_view var) {
  std::string out;
  bool first = true;
  for (const auto& [k, c] : f.terms()) {
    const bool negative = c < Coeff(0);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    out += abs_str(c);
    if (k != 0) out += " * " + std::string(var) + "^(" + Rat(k, f.ramification()).fraction_str() + ")";
  }
  if (first) out = "0";
  out += " + O(" + std::string(var) + "^(" + f.truncation_order().fraction_str() + "))";
  return out;
}

}  // namespace

ExprAst parse_expression(std::string_view src) { return Parser(src).parse(); }

PuiseuxSeries to_series(const ExprAst& ast, const Rat& default_order) {
  std::vector<SeriesTerm<Rat>> terms;
  terms.reserve(ast.terms.size());
  for (const auto& t : ast.terms) terms.push_back(SeriesTerm<Rat>{t.exponent, t.coeff});
  return make_series<Rat>(terms, ast.order.value_or(default_order));
}

std::string format_text(const PuiseuxSeries& f, std::string_view var) { return series_text(f, var); }

std::string format_text(const RealSeries& f) { return series_text(f, "z"); }

std::string format_text(const MultiSeries& f) {
  std::string out;
  bool first = true;
  const long n = f.ramification();
  for (const auto& [k, c] : f.terms()) {
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    out += abs_str(c);
    for (std::size_t v = 0; v < k.size(); ++v) {
      if (k[v] != 0) out += " * x" + std::to_string(v + 1) + "^(" + Rat(k[v], n).fraction_str() + ")";
    }
  }
  if (first) out = "0";
  for (std::size_t v = 0; v < f.num_vars(); ++v) {
    if (const auto& b = f.truncation()[v]) {
      out += " + O(x" + std::to_string(v + 1) + "^(" + Rat(*b, n).fraction_str() + "))";
    }
  }
  return out;
}

std::string format_csv(const PuiseuxSeries& f) {
  std::ostringstream os;
  os << "exponent,num,den\n";
  for (const auto& [k, c] : f.terms()) {
    os << Rat(k, f.ramification()).fraction_str() << ',' << c.num().get_str() << ',' << c.den().get_str() << '\n';
  }
  return os.str();
}

std::string format_csv(const RealSeries& f) {
  std::ostringstream os;
  os << "exponent,value\n";
  for (const auto& [k, c] : f.terms()) {
    os << Rat(k, f.ramification()).fraction_str() << ',' << format_double(c) << '\n';
  }
  return os.str();
}

std::string format_grid_csv(std::span<const double> zs, std::span<const double> values) {
  std::ostringstream os;
  os << "z,f(z)\n";
  for (std::size_t i = 0; i < zs.size() && i < values.size(); ++i) {
    os << format_double(zs[i]) << ',' << format_double(values[i]) << '\n';
  }
  return os.str();
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<double> linear_grid(double start, double stop, long steps) {
  if (steps < 1) throw InputError("grid needs at least one step");
  std::vector<double> out(static_cast<std::size_t>(steps));
  if (steps == 1) {
    out[0] = start;
    return out;
  }
  for (long i = 0; i < steps; ++i) {
    out[static_cast<std::size_t>(i)] =
        i == steps - 1 ? stop : start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  return out;
}

}  // namespace alphacalc
