#include "cfrenorm/exact.hpp"

#include <array>
#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace cfr {

namespace {

int signum(const BigInt& v) { return mpz_sgn(v.get_mpz_t()); }

BigInt isqrt(const BigInt& v) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

bool is_square(const BigInt& v) { return mpz_perfect_square_p(v.get_mpz_t()) != 0; }

BigInt gcd(const BigInt& x, const BigInt& y) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return g;
}

BigInt floor_div(const BigInt& n, const BigInt& d) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

// radicand = square^2 * squarefree
std::pair<BigInt, BigInt> split_square(const BigInt& radicand, std::uint64_t bound) {
  BigInt rest = radicand;
  BigInt square = 1;
  BigInt free = 1;
  std::uint64_t p = 2;
  for (; p <= bound; p += (p == 2 ? 1 : 2)) {
    BigInt pp(static_cast<unsigned long>(p));
    if (pp * pp > rest) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    for (unsigned j = 0; j < e / 2; ++j) square *= pp;
    if (e % 2) free *= pp;
  }
  if (rest == 1) return {square, free};
  BigInt b(static_cast<unsigned long>(bound));
  BigInt next(static_cast<unsigned long>(p));
  if (next * next > rest || rest < b * b) return {square, free * rest};
  if (is_square(rest)) return {square * isqrt(rest), free};
  if (rest < b * b * b) return {square, free * rest};
  throw std::domain_error("radicand too large for squarefree reduction: " + radicand.get_str());
}

}  // namespace

int sign_of_surd(const BigInt& a, const BigInt& b, const BigInt& d) {
  int sa = signum(a);
  int sb = signum(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  BigInt lhs = a * a;
  BigInt rhs = b * b * d;
  return lhs > rhs ? sa : sb;
}

ExactNumber::ExactNumber(BigInt a, BigInt b, BigInt d, BigInt c)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)), c_(std::move(c)) {
  normalize();
}

void ExactNumber::normalize() {
  if (c_ == 0) throw std::domain_error("division by zero");
  if (b_ == 0) d_ = 1;
  BigInt g = gcd(gcd(a_, b_), c_);
  if (signum(c_) < 0) g = -g;
  if (g != 1) {
    mpz_divexact(a_.get_mpz_t(), a_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b_.get_mpz_t(), b_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(c_.get_mpz_t(), c_.get_mpz_t(), g.get_mpz_t());
  }
}

ExactNumber ExactNumber::rational(const BigInt& num, const BigInt& den) {
  return ExactNumber(num, 0, 1, den);
}

ExactNumber ExactNumber::quadratic(const BigInt& a, const BigInt& b, const BigInt& radicand,
                                   const BigInt& c, std::uint64_t squarefree_bound) {
  if (signum(radicand) < 0) throw std::domain_error("negative radicand");
  if (b == 0 || radicand == 0) return ExactNumber(a, 0, 1, c);
  auto [square, free] = split_square(radicand, squarefree_bound);
  if (free == 1) return ExactNumber(a + b * square, 0, 1, c);
  return ExactNumber(a, b * square, free, c);
}

ExactNumber ExactNumber::sqrt(const BigInt& radicand, std::uint64_t squarefree_bound) {
  return quadratic(0, 1, radicand, 1, squarefree_bound);
}

int ExactNumber::sign() const { return sign_of_surd(a_, b_, d_); }

BigInt ExactNumber::floor() const {
  if (b_ == 0) return floor_div(a_, c_);
  BigInt f = isqrt(b_ * b_ * d_);
  if (signum(b_) < 0) f = -f - 1;
  return floor_div(a_ + f, c_);
}

ExactNumber ExactNumber::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  if (b_ == 0) {
    ExactNumber r;
    r.a_ = c_;
    r.c_ = a_;
    if (signum(r.c_) < 0) {
      r.a_ = -r.a_;
      r.c_ = -r.c_;
    }
    return r;
  }
  // c / (a + b√d) = c (a − b√d) / (a² − b²d)
  return ExactNumber(c_ * a_, -c_ * b_, d_, a_ * a_ - b_ * b_ * d_);
}

ExactNumber ExactNumber::conjugate() const {
  ExactNumber r = *this;
  r.b_ = -r.b_;
  return r;
}

double ExactNumber::to_double() const {
  if (b_ == 0) return mpq_class(a_, c_).get_d();
  mp_bitcnt_t prec = 128 + mpz_sizeinbase(a_.get_mpz_t(), 2) + mpz_sizeinbase(b_.get_mpz_t(), 2);
  mpf_class root(d_, prec);
  mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
  mpf_class v(a_, prec);
  v += mpf_class(b_, prec) * root;
  v /= mpf_class(c_, prec);
  return v.get_d();
}

std::string ExactNumber::str() const {
  if (b_ == 0) return c_ == 1 ? a_.get_str() : a_.get_str() + "/" + c_.get_str();
  std::string out = "(" + a_.get_str();
  out += signum(b_) < 0 ? "-" : "+";
  BigInt mag = abs(b_);
  if (mag != 1) out += mag.get_str() + "*";
  out += "sqrt(" + d_.get_str() + "))";
  if (c_ != 1) out += "/" + c_.get_str();
  return out;
}

std::ostream& operator<<(std::ostream& os, const ExactNumber& x) { return os << x.str(); }

ExactNumber ExactNumber::operator-() const {
  ExactNumber r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

namespace {

const BigInt& common_radicand(const ExactNumber& x, const ExactNumber& y) {
  if (x.is_rational()) return y.radicand();
  if (y.is_rational()) return x.radicand();
  if (x.radicand() != y.radicand()) throw std::domain_error("mixing different quadratic fields");
  return x.radicand();
}

}  // namespace

ExactNumber operator+(const ExactNumber& x, const ExactNumber& y) {
  const BigInt& d = common_radicand(x, y);
  if (y.is_integer()) {
    ExactNumber r = x;
    r.a_ += y.a_ * x.c_;
    return r;
  }
  if (x.is_integer()) return y + x;
  return ExactNumber(x.a_ * y.c_ + y.a_ * x.c_, x.b_ * y.c_ + y.b_ * x.c_, d, x.c_ * y.c_);
}

ExactNumber operator-(const ExactNumber& x, const ExactNumber& y) { return x + (-y); }

ExactNumber operator*(const ExactNumber& x, const ExactNumber& y) {
  const BigInt& d = common_radicand(x, y);
  return ExactNumber(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d, x.c_ * y.c_);
}

ExactNumber operator/(const ExactNumber& x, const ExactNumber& y) { return x * y.reciprocal(); }

bool operator==(const ExactNumber& x, const ExactNumber& y) {
  return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && (x.b_ == 0 || x.d_ == y.d_);
}

std::strong_ordering operator<=>(const ExactNumber& x, const ExactNumber& y) {
  int s;
  if (x.is_rational() && y.is_rational()) {
    s = cmp(x.a_ * y.c_, y.a_ * x.c_);
  } else {
    const BigInt& d = common_radicand(x, y);
    s = sign_of_surd(x.a_ * y.c_ - y.a_ * x.c_, x.b_ * y.c_ - y.b_ * x.c_, d);
  }
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExactNumber run() {
    ExactNumber v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse number '" + std::string(text_) + "': " + what +
                                " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char ch) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExactNumber expr() {
    ExactNumber v = term();
    for (;;) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - term();
      else return v;
    }
  }

  ExactNumber term() {
    ExactNumber v = unary();
    for (;;) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        ExactNumber d = unary();
        if (d.is_zero()) fail("division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }

  ExactNumber unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return atom();
  }

  BigInt integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  ExactNumber atom() {
    if (eat('(')) {
      ExactNumber v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    skip();
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      if (!eat('(')) fail("expected '(' after sqrt");
      ExactNumber r = expr();
      if (!eat(')')) fail("expected ')'");
      if (!r.is_integer() || r.sign() < 0) fail("sqrt needs a nonnegative integer");
      return ExactNumber::sqrt(r.a());
    }
    BigInt whole = integer();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected digits after '.'");
      BigInt scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, pos_ - start);
      BigInt frac(std::string(text_.substr(start, pos_ - start)));
      return ExactNumber::rational(whole * scale + frac, scale);
    }
    return ExactNumber(whole);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ExactNumber ExactNumber::parse(std::string_view text) { return Parser(text).run(); }

SidedPoint::SidedPoint(ExactNumber value)
    : SidedPoint(value, value == ExactNumber(1) ? Side::left : Side::right) {}

SidedPoint::SidedPoint(ExactNumber value, Side side) : value_(std::move(value)), side_(side) {
  if (value_.sign() < 0 || value_ > ExactNumber(1))
    throw std::domain_error("sided point outside [0,1]: " + value_.str());
  if (value_.is_zero() && side_ == Side::left) value_ = ExactNumber(1);
  else if (side_ == Side::right && value_ == ExactNumber(1)) value_ = ExactNumber(0);
}

SidedPoint SidedPoint::rotated(const ExactNumber& t) const {
  ExactNumber v = value_ + t;
  auto c = v <=> ExactNumber(1);
  if (c > 0 || (c == 0 && side_ == Side::right)) v -= ExactNumber(1);
  return SidedPoint(std::move(v), side_);
}

std::string SidedPoint::str() const { return value_.str() + (side_ == Side::left ? "-" : "+"); }

std::strong_ordering operator<=>(const SidedPoint& p, const SidedPoint& q) {
  if (auto c = p.value_ <=> q.value_; c != 0) return c;
  return static_cast<int>(p.side_) <=> static_cast<int>(q.side_);
}

bool in_interval(const SidedPoint& y, const ExactNumber& lo, const ExactNumber& hi) {
  auto c = y.value() <=> lo;
  if (c < 0 || (c == 0 && y.side() == Side::left)) return false;
  c = y.value() <=> hi;
  return c < 0 || (c == 0 && y.side() == Side::left);
}

GaussStep gauss_step(const ExactNumber& x) {
  if (x.sign() <= 0 || x >= ExactNumber(1))
    throw std::domain_error("gauss_step needs 0 < x < 1, got " + x.str());
  ExactNumber inv = x.reciprocal();
  BigInt digit = inv.floor();
  return {digit, inv - ExactNumber(digit)};
}

std::vector<BigInt> regular_cf_digits(const ExactNumber& x, std::size_t k) {
  std::vector<BigInt> digits;
  ExactNumber t = x;
  if (t.sign() <= 0 || t >= ExactNumber(1))
    throw std::domain_error("regular_cf_digits needs 0 < x < 1, got " + x.str());
  while (digits.size() < k && !t.is_zero()) {
    GaussStep s = gauss_step(t);
    digits.push_back(std::move(s.digit));
    t = std::move(s.remainder);
  }
  return digits;
}

void normalize_terminating(std::vector<BigInt>& digits) {
  if (digits.size() > 1 && digits.back() == 1) {
    digits.pop_back();
    digits.back() += 1;
  }
}

std::vector<BigInt> complement_digits(std::span<const BigInt> digits) {
  if (digits.empty()) throw std::invalid_argument("complement_digits: empty digit list");
  for (const BigInt& d : digits)
    if (d < 1) throw std::invalid_argument("complement_digits: digits must be positive");
  std::vector<BigInt> in(digits.begin(), digits.end());
  normalize_terminating(in);
  std::vector<BigInt> out;
  if (in.front() == 1) {
    if (in.size() == 1) return out;
    out.push_back(in[1] + 1);
    out.insert(out.end(), in.begin() + 2, in.end());
  } else {
    out.push_back(1);
    out.push_back(in.front() - 1);
    out.insert(out.end(), in.begin() + 1, in.end());
  }
  normalize_terminating(out);
  return out;
}

ExactNumber evaluate_regular_cf(std::span<const BigInt> digits) {
  BigInt p = 0, q = 1;  // tail value p/q, starting from 0
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    // 1 / (d + p/q) = q / (d q + p)
    BigInt np = q;
    q = *it * q + p;
    p = std::move(np);
  }
  return ExactNumber::rational(p, q);
}

ExactNumber periodic_cf_value(std::span<const BigInt> preperiod, std::span<const BigInt> period) {
  if (period.empty()) throw std::invalid_argument("periodic_cf_value: empty period");
  auto convergents = [](std::span<const BigInt> ds) {
    BigInt p0 = 1, p1 = 0, q0 = 0, q1 = 1;  // p_{-1}, p_0, q_{-1}, q_0
    for (const BigInt& d : ds) {
      if (d < 1) throw std::invalid_argument("continued fraction digits must be positive");
      BigInt p2 = d * p1 + p0;
      BigInt q2 = d * q1 + q0;
      p0 = std::move(p1);
      p1 = std::move(p2);
      q0 = std::move(q1);
      q1 = std::move(q2);
    }
    return std::array<BigInt, 4>{p0, p1, q0, q1};
  };
  auto [pm1, pm, qm1, qm] = convergents(period);
  // z = (pm + pm1 z) / (qm + qm1 z)
  BigInt lin = qm - pm1;
  ExactNumber z = ExactNumber::quadratic(-lin, 1, lin * lin + 4 * qm1 * pm, 2 * qm1);
  auto [rp1, rp, rq1, rq] = convergents(preperiod);
  return (ExactNumber(rp) + ExactNumber(rp1) * z) / (ExactNumber(rq) + ExactNumber(rq1) * z);
}

ExactNumber golden_mean() { return ExactNumber::quadratic(-1, 1, 5, 2); }

}  // namespace cfr
