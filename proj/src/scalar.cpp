#include "lieosc/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>

namespace lieosc {

namespace {

using i128 = __int128;

constexpr std::int64_t kSmallMax = std::numeric_limits<std::int64_t>::max();

bool fits(i128 v) { return v <= kSmallMax && v >= -kSmallMax; }

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(std::int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) fail(ErrorCode::InvalidScalar, "rational with zero denominator");
  mpq_class q(to_mpz(n), to_mpz(d));
  q.canonicalize();
  assign(q);
}

Rational::Rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  assign(c);
}

void Rational::assign(const mpq_class& q) {
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (mpz_fits_slong_p(n.get_mpz_t()) && mpz_fits_slong_p(d.get_mpz_t())) {
    long nn = mpz_get_si(n.get_mpz_t());
    long dd = mpz_get_si(d.get_mpz_t());
    if (fits(nn) && fits(dd)) {
      num_ = nn;
      den_ = dd;
      big_.reset();
      return;
    }
  }
  big_ = std::make_shared<const mpq_class>(q);
  num_ = 0;
  den_ = 1;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string ns = slash == std::string::npos ? s : s.substr(0, slash);
  std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(ns) || !valid_int(ds) || ds[0] == '-' || ds[0] == '+')
    fail(ErrorCode::InvalidScalar, "malformed rational '" + std::string(text) + "'");
  if (ns[0] == '+') ns.erase(0, 1);
  mpz_class n(ns, 10), d(ds, 10);
  if (d == 0) fail(ErrorCode::InvalidScalar, "rational with zero denominator");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(to_mpz(num_), to_mpz(den_));
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (o.num_ == 0) return *this;
    if (num_ == 0) return *this = o;
    if (den_ == 1 && o.den_ == 1) {
      i128 s = static_cast<i128>(num_) + o.num_;
      if (fits(s)) {
        num_ = static_cast<std::int64_t>(s);
        return *this;
      }
    }
    i128 g = std::gcd(den_, o.den_);
    i128 n = static_cast<i128>(num_) * (o.den_ / g) + static_cast<i128>(o.num_) * (den_ / g);
    i128 d = static_cast<i128>(den_) * (o.den_ / g);
    i128 r = gcd128(n, d);
    if (r > 1) {
      n /= r;
      d /= r;
    }
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
  }
  assign(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    std::int64_t g1 = std::gcd(num_, o.den_);
    std::int64_t g2 = std::gcd(o.num_, den_);
    i128 n = static_cast<i128>(num_ / g1) * (o.num_ / g2);
    i128 d = static_cast<i128>(den_ / g2) * (o.den_ / g1);
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
  }
  assign(to_mpq() * o.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorCode::InvalidScalar, "division by zero");
  if (!o.big_) {
    Rational inv;
    inv.num_ = o.num_ < 0 ? -o.den_ : o.den_;
    inv.den_ = o.num_ < 0 ? -o.num_ : o.num_;
    return *this *= inv;
  }
  assign(to_mpq() / o.to_mpq());
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical: a big value never equals a small one
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_)
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  return a.to_mpq() < b.to_mpq();
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator_string();
  return numerator_string() + "/" + denominator_string();
}

std::string Rational::numerator_string() const {
  return big_ ? big_->get_num().get_str() : std::to_string(num_);
}

std::string Rational::denominator_string() const {
  return big_ ? big_->get_den().get_str() : std::to_string(den_);
}

std::int64_t Rational::as_int64() const {
  if (!fits_int64()) fail(ErrorCode::InvalidScalar, "rational " + to_string() + " is not a small integer");
  return num_;
}

// ---------------------------------------------------------------------------

SquarefreeSplit squarefree_split(std::uint64_t n) {
  std::uint64_t square = 1, core = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) square *= p;
    if (e % 2) core *= p;
  }
  core *= n;
  return {square, core};
}

Surd::Surd(const Rational& q) {
  if (!q.is_zero()) terms_.push_back({1, q, Rational(0)});
}

Surd::Surd(const Rational& re, const Rational& im) {
  if (!re.is_zero() || !im.is_zero()) terms_.push_back({1, re, im});
}

Surd Surd::normalize(const std::vector<RawTerm>& raw) {
  Surd out;
  for (const auto& t : raw) {
    if (t.radicand <= 0)
      fail(ErrorCode::InvalidScalar, "radicand must be positive, got " + std::to_string(t.radicand));
    auto [sq, core] = squarefree_split(static_cast<std::uint64_t>(t.radicand));
    Rational s(static_cast<std::int64_t>(sq));
    Surd term;
    if (!t.re.is_zero() || !t.im.is_zero()) term.terms_.push_back({core, t.re * s, t.im * s});
    out += term;
  }
  return out;
}

Surd Surd::sqrt(const Rational& q) {
  if (q.sign() < 0) fail(ErrorCode::InvalidScalar, "square root of negative rational " + q.to_string());
  if (q.is_zero()) return {};
  // sqrt(p/d) = sqrt(p d) / d
  mpq_class v = q.to_mpq();
  mpz_class pd = v.get_num() * v.get_den();
  if (!mpz_fits_ulong_p(pd.get_mpz_t()))
    fail(ErrorCode::InvalidScalar, "radicand too large in sqrt(" + q.to_string() + ")");
  auto [sq, core] = squarefree_split(mpz_get_ui(pd.get_mpz_t()));
  Rational coeff = Rational(mpq_class(mpz_class(static_cast<unsigned long>(sq)), v.get_den()));
  Surd out;
  out.terms_.push_back({core, coeff, Rational(0)});
  return out;
}

bool Surd::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.im.is_zero(); });
}

bool Surd::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].radicand == 1 && terms_[0].im.is_zero());
}

Rational Surd::rational() const {
  if (!is_rational()) fail(ErrorCode::InvalidScalar, "value " + to_string() + " is not rational");
  return terms_.empty() ? Rational(0) : terms_[0].re;
}

Surd Surd::conj() const {
  Surd out(*this);
  for (auto& t : out.terms_) t.im = -t.im;
  return out;
}

Surd Surd::real_part() const {
  Surd out;
  for (const auto& t : terms_)
    if (!t.re.is_zero()) out.terms_.push_back({t.radicand, t.re, Rational(0)});
  return out;
}

Surd Surd::imag_part() const {
  Surd out;
  for (const auto& t : terms_)
    if (!t.im.is_zero()) out.terms_.push_back({t.radicand, t.im, Rational(0)});
  return out;
}

Surd Surd::times_i() const {
  Surd out(*this);
  for (auto& t : out.terms_) {
    Rational re = -t.im;
    t.im = t.re;
    t.re = re;
  }
  return out;
}

Surd Surd::operator-() const {
  Surd out(*this);
  for (auto& t : out.terms_) {
    t.re = -t.re;
    t.im = -t.im;
  }
  return out;
}

Surd& Surd::operator+=(const Surd& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = o.terms_.begin(), be = o.terms_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->radicand < b->radicand)) {
      merged.push_back(std::move(*a++));
    } else if (a == ae || b->radicand < a->radicand) {
      merged.push_back(*b++);
    } else {
      Term t{a->radicand, a->re + b->re, a->im + b->im};
      if (!t.re.is_zero() || !t.im.is_zero()) merged.push_back(std::move(t));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Surd& Surd::operator-=(const Surd& o) { return *this += -o; }

Surd operator*(const Surd& a, const Surd& b) {
  Surd out;
  if (a.terms_.empty() || b.terms_.empty()) return out;
  if (a.terms_.size() == 1 && b.terms_.size() == 1 && (a.terms_[0].radicand == 1 || b.terms_[0].radicand == 1)) {
    const auto& x = a.terms_[0];
    const auto& y = b.terms_[0];
    Rational re = x.re * y.re - x.im * y.im;
    Rational im = x.re * y.im + x.im * y.re;
    if (!re.is_zero() || !im.is_zero())
      out.terms_.push_back({x.radicand * y.radicand, std::move(re), std::move(im)});
    return out;
  }
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      std::uint64_t g = std::gcd(x.radicand, y.radicand);
      std::uint64_t d = (x.radicand / g) * (y.radicand / g);
      Rational s(static_cast<std::int64_t>(g));
      Rational re = (x.re * y.re - x.im * y.im) * s;
      Rational im = (x.re * y.im + x.im * y.re) * s;
      Surd t;
      if (!re.is_zero() || !im.is_zero()) t.terms_.push_back({d, std::move(re), std::move(im)});
      out += t;
    }
  }
  return out;
}

Surd& Surd::operator*=(const Surd& o) { return *this = *this * o; }

Surd& Surd::operator*=(const Rational& q) {
  if (q.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) {
    t.re *= q;
    t.im *= q;
  }
  return *this;
}

Surd& Surd::operator/=(const Rational& q) {
  if (q.is_zero()) fail(ErrorCode::InvalidScalar, "division of a surd by zero");
  for (auto& t : terms_) {
    t.re /= q;
    t.im /= q;
  }
  return *this;
}

std::complex<double> Surd::to_complex() const {
  double re = 0.0, im = 0.0;
  for (const auto& t : terms_) {
    double r = std::sqrt(static_cast<double>(t.radicand));
    re += t.re.to_double() * r;
    im += t.im.to_double() * r;
  }
  return {re, im};
}

std::string Surd::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  auto emit = [&out](const Rational& c, bool imaginary, std::uint64_t d) {
    std::string mag = c.abs().to_string();
    bool unit = mag == "1";
    std::string body;
    if (!unit || (!imaginary && d == 1)) body = mag;
    if (imaginary) body += body.empty() ? "i" : "*i";
    if (d != 1) body += (body.empty() ? "" : "*") + std::string("sqrt(") + std::to_string(d) + ")";
    if (c.sign() < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    out += body;
  };
  for (const auto& t : terms_) {
    if (!t.re.is_zero()) emit(t.re, false, t.radicand);
    if (!t.im.is_zero()) emit(t.im, true, t.radicand);
  }
  return out;
}

Surd Surd::parse(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) fail(ErrorCode::InvalidScalar, "empty surd text");
  std::vector<RawTerm> raw;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
      neg = s[pos] == '-';
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string token = s.substr(pos, end - pos);
    pos = end;
    if (token.empty()) fail(ErrorCode::InvalidScalar, "malformed surd '" + std::string(text) + "'");
    Rational coeff(1);
    bool imaginary = false;
    std::int64_t radicand = 1;
    std::size_t p = 0;
    while (p <= token.size()) {
      std::size_t star = token.find('*', p);
      std::string factor = token.substr(p, star == std::string::npos ? std::string::npos : star - p);
      if (factor == "i") {
        imaginary = true;
      } else if (factor.rfind("sqrt(", 0) == 0 && factor.back() == ')') {
        radicand = Rational::parse(factor.substr(5, factor.size() - 6)).as_int64();
      } else {
        coeff = Rational::parse(factor);
      }
      if (star == std::string::npos) break;
      p = star + 1;
    }
    if (neg) coeff = -coeff;
    raw.push_back(imaginary ? RawTerm{radicand, 0, coeff} : RawTerm{radicand, coeff, 0});
  }
  return normalize(raw);
}

}  // namespace lieosc
