#include "hermsos/scalar.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>

#include "hermsos/errors.hpp"

namespace hermsos {

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  if (o.is_zero()) throw std::domain_error("GaussRational: division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Rational den = o.norm2();
  Rational re = (re_ * o.re_ + im_ * o.im_) / den;
  Rational im = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw InputError("malformed rational literal '" + std::string(whole) + "'");
  mpz_class v(std::string(s), 10);
  return neg ? mpz_class(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw InputError("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(s.substr(0, slash), text);
    std::string_view den_text = s.substr(slash + 1);
    if (!all_digits(den_text)) throw InputError("malformed rational literal '" + std::string(text) + "'");
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  // Decimal: [sign] int [. frac] [e [sign] exp]
  bool neg = false;
  if (s.front() == '+' || s.front() == '-') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    auto [ptr, ec] = std::from_chars(exp_text.data() + (exp_text.starts_with('+') ? 1 : 0),
                                     exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc() || ptr != exp_text.data() + exp_text.size())
      throw InputError("malformed rational literal '" + std::string(text) + "'");
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw InputError("malformed rational literal '" + std::string(text) + "'");
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(s)) throw InputError("malformed rational literal '" + std::string(text) + "'");
    digits = std::string(s);
  }
  if (digits.empty()) digits = "0";
  if (exponent > 4096 || exponent < -4096) throw InputError("exponent out of range in '" + std::string(text) + "'");
  mpz_class num(digits, 10);
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational q = exponent >= 0 ? Rational(num * pow10) : Rational(num, pow10);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

GaussRational parse_gauss(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw InputError("empty complex literal");
  if (s.back() != 'i') return GaussRational(parse_rational(s));
  s.remove_suffix(1);
  // Split at the last sign that is not a leading sign or exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_of = [&](std::string_view t) -> Rational {
    if (t.empty() || t == "+") return Rational(1);
    if (t == "-") return Rational(-1);
    return parse_rational(t);
  };
  if (split == std::string_view::npos) return {Rational(0), imag_of(s)};
  return {parse_rational(s.substr(0, split)), imag_of(s.substr(split))};
}

std::string format_gauss(const GaussRational& z) {
  if (z.is_real()) return format_rational(z.re());
  std::string im = format_rational(z.im());
  if (sgn(z.re()) == 0) return im + "i";
  if (sgn(z.im()) > 0) im = "+" + im;
  return format_rational(z.re()) + im + "i";
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Rational factorial(unsigned k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return Rational(r);
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

}  // namespace hermsos
