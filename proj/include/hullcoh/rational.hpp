#ifndef HULLCOH_RATIONAL_HPP
#define HULLCOH_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

#include "error.hpp"

namespace hullcoh {

// Arbitrary-precision rational, always canonical: lowest terms, positive
// denominator, zero is 0/1.  Serialized as "p" or "p/q", never as a decimal.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}                    // NOLINT(google-explicit-constructor)
  Rational(long n, long d) : v_(n, d) { normalize_(); }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  static Rational parse(const std::string& text) {
    if (text.empty()) fail(errc::inconsistent, "empty rational literal");
    try {
      mpq_class q(text, 10);
      if (q.get_den() == 0) fail(errc::inconsistent, "zero denominator in '" + text + "'");
      Rational r;
      r.v_ = q;
      r.normalize_();
      return r;
    } catch (const std::invalid_argument&) {
      fail(errc::inconsistent, "bad rational literal '" + text + "'");
    }
  }

  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }
  const mpq_class& raw() const { return v_; }

  // Total height max(|num|, den); used by the small-coefficient searches.
  unsigned long height_ulong() const {
    mpz_class a = ::abs(v_.get_num());
    mpz_class h = a > v_.get_den() ? a : v_.get_den();
    return h.fits_ulong_p() ? h.get_ui() : ~0ul;
  }

  // Rounds toward zero; only valid when the value is an integer fitting long.
  long to_long() const {
    require(is_integer(), errc::inconsistent, "not an integer: " + str());
    mpz_class n = v_.get_num();
    require(n.fits_slong_p(), errc::inconsistent, "integer out of range: " + str());
    return n.get_si();
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    require(!o.is_zero(), errc::inconsistent, "division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  Rational inv() const {
    require(!is_zero(), errc::inconsistent, "inverse of zero");
    return Rational(mpq_class(1 / v_));
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

 private:
  void normalize_() {
    require(sgn(v_.get_den()) != 0, errc::inconsistent, "zero denominator");
    v_.canonicalize();
  }

  mpq_class v_;
};

inline Rational factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

// lcm of denominators of a range of rationals (via iterators); 1 for empty.
template <typename It>
Rational denominator_lcm(It first, It last) {
  mpz_class l = 1;
  for (It it = first; it != last; ++it) {
    mpz_class d = it->raw().get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    l = l / g * d;
  }
  return Rational(mpq_class(l));
}

}  // namespace hullcoh

#endif
