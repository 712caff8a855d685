#include "homnambu/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace homnambu {

ParameterContext::ParameterContext(std::vector<std::string> names)
    : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_name(names_[i]))
      throw std::invalid_argument("invalid parameter name: " + names_[i]);
    for (std::size_t j = 0; j < i; ++j)
      if (names_[j] == names_[i])
        throw std::invalid_argument("duplicate parameter name: " + names_[i]);
  }
}

std::optional<std::size_t> ParameterContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool ParameterContext::valid_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
    return false;
  for (char ch : name)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
      return false;
  return true;
}

ScalarParseError::ScalarParseError(const std::string& what, std::size_t pos)
    : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"),
      position(pos) {}

Scalar Scalar::from_int(long long v) {
  Scalar s;
  s.rat_ = Rational(v);
  return s;
}

Scalar Scalar::from_rational(Rational r) {
  Scalar s;
  s.rat_ = std::move(r);
  return s;
}

Scalar Scalar::parameter(const ParameterContext& ctx, std::string_view name) {
  auto idx = ctx.index_of(name);
  if (!idx)
    throw std::invalid_argument("unknown parameter: " + std::string(name));
  ExponentVec e(ctx.size(), 0);
  e[*idx] = 1;
  TermMap t;
  t.emplace(std::move(e), Rational(1));
  return make_poly(ctx.size(), std::move(t));
}

bool Scalar::is_zero() const { return terms_.empty() && rat_ == 0; }

bool Scalar::is_one() const { return terms_.empty() && rat_ == 1; }

const Rational& Scalar::rational_value() const {
  if (!is_rational())
    throw std::logic_error("rational_value on polynomial scalar");
  return rat_;
}

Scalar Scalar::make_poly(std::size_t width, TermMap terms) {
  Scalar s;
  s.width_ = width;
  s.terms_ = std::move(terms);
  s.normalize();
  return s;
}

void Scalar::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
  if (terms_.empty()) {
    width_ = 0;
    return;
  }
  if (terms_.size() == 1) {
    const auto& [e, c] = *terms_.begin();
    bool constant = std::all_of(e.begin(), e.end(),
                                [](std::uint32_t x) { return x == 0; });
    if (constant) {
      rat_ = c;
      terms_.clear();
      width_ = 0;
      return;
    }
  }
  rat_ = 0;
}

namespace {

/* Lifts a rational onto a constant term of the given width. */
void add_term(Scalar::TermMap& t, Scalar::ExponentVec e, const Rational& c) {
  auto [it, fresh] = t.emplace(std::move(e), c);
  if (!fresh) it->second += c;
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
  if (terms_.empty() && o.terms_.empty()) {
    rat_ += o.rat_;
    return *this;
  }
  std::size_t w = terms_.empty() ? o.width_ : width_;
  if (!terms_.empty() && !o.terms_.empty() && width_ != o.width_)
    throw std::logic_error("scalars from different parameter contexts");
  TermMap sum = terms_;
  if (terms_.empty() && rat_ != 0)
    add_term(sum, ExponentVec(w, 0), rat_);
  if (o.terms_.empty()) {
    if (o.rat_ != 0) add_term(sum, ExponentVec(w, 0), o.rat_);
  } else {
    for (const auto& [e, c] : o.terms_) add_term(sum, e, c);
  }
  *this = make_poly(w, std::move(sum));
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (r.terms_.empty()) {
    r.rat_ = -r.rat_;
  } else {
    for (auto& [e, c] : r.terms_) c = -c;
  }
  return r;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (terms_.empty() && o.terms_.empty()) {
    rat_ *= o.rat_;
    return *this;
  }
  if (is_zero() || o.is_zero()) {
    *this = Scalar();
    return *this;
  }
  if (terms_.empty()) {
    Rational f = rat_;
    TermMap prod;
    for (const auto& [e, c] : o.terms_) prod.emplace(e, c * f);
    *this = make_poly(o.width_, std::move(prod));
    return *this;
  }
  if (o.terms_.empty()) {
    for (auto& [e, c] : terms_) c *= o.rat_;
    normalize();
    return *this;
  }
  if (width_ != o.width_)
    throw std::logic_error("scalars from different parameter contexts");
  TermMap prod;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      ExponentVec e(width_);
      for (std::size_t i = 0; i < width_; ++i) e[i] = ea[i] + eb[i];
      add_term(prod, std::move(e), ca * cb);
    }
  }
  *this = make_poly(width_, std::move(prod));
  return *this;
}

bool Scalar::operator==(const Scalar& o) const {
  return rat_ == o.rat_ && width_ == o.width_ && terms_ == o.terms_;
}

Scalar Scalar::pow(std::uint32_t e) const {
  Scalar acc = Scalar::one();
  for (std::uint32_t i = 0; i < e; ++i) acc *= *this;
  return acc;
}

std::optional<Scalar> try_divide(const Scalar& num, const Scalar& den) {
  if (den.is_zero()) throw std::domain_error("division by zero scalar");
  if (den.is_rational()) {
    Scalar inv = Scalar::from_rational(Rational(1) / den.rational_value());
    return num * inv;
  }
  if (num.is_zero()) return Scalar::zero();
  if (num.is_rational()) return std::nullopt;  // constant / nonconstant
  if (num.width() != den.width())
    throw std::logic_error("scalars from different parameter contexts");

  // Long division by leading terms in lexicographic order.  For exact
  // quotients the leading term of the remainder stays divisible; any
  // failure means the division is inexact.
  const std::size_t w = num.width();
  Scalar::TermMap rem = num.terms();
  Scalar::TermMap quot;
  const auto& dlead = *den.terms().rbegin();
  while (!rem.empty()) {
    const auto& rlead = *rem.rbegin();
    Scalar::ExponentVec qe(w);
    for (std::size_t i = 0; i < w; ++i) {
      if (rlead.first[i] < dlead.first[i]) return std::nullopt;
      qe[i] = rlead.first[i] - dlead.first[i];
    }
    Rational qc = rlead.second / dlead.second;
    quot.emplace(qe, qc);
    // rem -= (qe, qc) * den
    for (const auto& [e, c] : den.terms()) {
      Scalar::ExponentVec pe(w);
      for (std::size_t i = 0; i < w; ++i) pe[i] = e[i] + qe[i];
      auto [it, fresh] = rem.emplace(pe, -qc * c);
      if (!fresh) {
        it->second -= qc * c;
        if (it->second == 0) rem.erase(it);
      } else if (it->second == 0) {
        rem.erase(it);
      }
    }
  }
  return Scalar::make_poly(w, std::move(quot));
}

namespace {

std::string rational_text(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

/* One monomial in canonical text: coefficient magnitude, then variables
 * with exponents; the sign is handled by the caller. */
std::string term_text(const Scalar::ExponentVec& e, const Rational& mag,
                      const ParameterContext& ctx) {
  std::string vars;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!vars.empty()) vars += "*";
    vars += ctx.names()[i];
    if (e[i] > 1) vars += "^" + std::to_string(e[i]);
  }
  if (vars.empty()) return rational_text(mag);
  if (mag == 1) return vars;
  return rational_text(mag) + "*" + vars;
}

}  // namespace

std::string to_string(const Scalar& s, const ParameterContext& ctx) {
  if (s.is_rational()) return rational_text(s.rational_value());
  if (s.width() != ctx.size())
    throw std::logic_error("scalar printed against wrong parameter context");
  std::string out;
  // highest lexicographic exponent first
  for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += term_text(e, mag, ctx);
  }
  return out;
}

namespace {

/* Recursive-descent parser for the scalar grammar. */
class Parser {
public:
  Parser(std::string_view text, const ParameterContext& ctx)
      : text_(text), ctx_(ctx) {}

  Scalar parse() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ScalarParseError("unexpected trailing input", pos_);
    return v;
  }

private:
  std::string_view text_;
  const ParameterContext& ctx_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(char ch) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == ch;
  }

  bool consume(char ch) {
    if (peek(ch)) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    bool neg = false;
    skip_ws();
    if (consume('-'))
      neg = true;
    else
      consume('+');
    Scalar acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (consume('+'))
        acc += term();
      else if (consume('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  Scalar term() {
    Scalar acc = factor();
    while (consume('*')) acc *= factor();
    return acc;
  }

  Scalar factor() {
    Scalar base = atom();
    if (consume('^')) {
      skip_ws();
      std::size_t at = pos_;
      if (pos_ >= text_.size() ||
          !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ScalarParseError("expected nonnegative integer exponent", at);
      std::uint64_t e = 0;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
        if (e > 100000)
          throw ScalarParseError("exponent too large", at);
        ++pos_;
      }
      return base.pow(static_cast<std::uint32_t>(e));
    }
    return base;
  }

  Scalar atom() {
    skip_ws();
    if (pos_ >= text_.size())
      throw ScalarParseError("unexpected end of input", pos_);
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Scalar v = expr();
      if (!consume(')'))
        throw ScalarParseError("expected ')'", pos_);
      return v;
    }
    if (ch == '-') {
      ++pos_;
      return -atom();
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return number();
    if (std::isalpha(static_cast<unsigned char>(ch))) return name();
    throw ScalarParseError("unexpected character", pos_);
  }

  boost::multiprecision::cpp_int integer() {
    std::size_t at = pos_;
    std::string digits;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits += text_[pos_];
      ++pos_;
    }
    if (digits.empty())
      throw ScalarParseError("expected integer", at);
    return boost::multiprecision::cpp_int(digits);
  }

  Scalar number() {
    auto num = integer();
    if (consume('/')) {
      skip_ws();
      std::size_t at = pos_;
      auto den = integer();
      if (den == 0)
        throw ScalarParseError("zero denominator", at);
      return Scalar::from_rational(Rational(num, den));
    }
    return Scalar::from_rational(Rational(num));
  }

  Scalar name() {
    std::size_t at = pos_;
    std::string id;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      id += text_[pos_];
      ++pos_;
    }
    if (!ctx_.index_of(id))
      throw ScalarParseError("unknown parameter '" + id + "'", at);
    return Scalar::parameter(ctx_, id);
  }
};

}  // namespace

Scalar parse_scalar(std::string_view text, const ParameterContext& ctx) {
  return Parser(text, ctx).parse();
}

}  // namespace homnambu
