#pragma once

// Arbitrary-precision integers and exact rationals.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace gavkit {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

// lcm of absolute values; lcm(0, x) = 0.
inline BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a) / gcd(a, b) * abs(b);
}

// Quotient rounded towards negative infinity (b != 0).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline BigInt floor_mod(const BigInt& a, const BigInt& b) { return a - floor_div(a, b) * b; }

// Bezout: returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
inline std::tuple<BigInt, BigInt, BigInt> ext_gcd(const BigInt& a, const BigInt& b) {
  BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(int v) : num_(v), den_(1) {}                // NOLINT(google-explicit-constructor)
  Rat(long v) : num_(v), den_(1) {}               // NOLINT(google-explicit-constructor)
  Rat(long long v) : num_(v), den_(1) {}          // NOLINT(google-explicit-constructor)
  Rat(BigInt v) : num_(std::move(v)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

  Rat operator-() const { return Rat(BigInt(-num_), den_, raw_tag{}); }

  Rat& operator+=(const Rat& o) {
    if (den_ == o.den_) {
      num_ += o.num_;
    } else {
      num_ = num_ * o.den_ + o.num_ * den_;
      den_ *= o.den_;
    }
    normalize();
    return *this;
  }
  Rat& operator-=(const Rat& o) { return *this += -o; }
  Rat& operator*=(const Rat& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rat& operator/=(const Rat& o) {
    if (o.num_ == 0) throw std::domain_error("Rat: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    BigInt l = a.num_ * b.den_;
    BigInt r = b.num_ * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  /// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed text.
  static Rat parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) -> BigInt {
      if (s.empty()) throw std::invalid_argument("empty integer in rational '" + std::string(text) + "'");
      std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
      if (start == s.size()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
      for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
      }
      BigInt v(std::string(s[0] == '+' ? s.substr(1) : s));
      return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text));
    BigInt d = parse_int(text.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rat(parse_int(text.substr(0, slash)), d);
  }

 private:
  struct raw_tag {};
  Rat(BigInt n, BigInt d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize() {
    if (den_ == 0) throw std::domain_error("Rat: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    if (den_ == 1) return;
    BigInt g = gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

using IntVec = std::vector<BigInt>;
using RatVec = std::vector<Rat>;

inline RatVec to_rat(const IntVec& v) { return RatVec(v.begin(), v.end()); }

inline IntVec make_int_vec(std::initializer_list<long long> xs) {
  IntVec v;
  v.reserve(xs.size());
  for (long long x : xs) v.emplace_back(x);
  return v;
}

inline RatVec make_rat_vec(std::initializer_list<Rat> xs) { return RatVec(xs); }

inline Rat dot(const RatVec& a, const RatVec& b) {
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline BigInt dot(const IntVec& a, const IntVec& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const RatVec& a, const IntVec& b) {
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
  return s;
}

inline bool is_zero(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline bool is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

/// gcd of all entries (0 for the zero vector).
inline BigInt content(const IntVec& v) {
  BigInt g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

/// The primitive integer vector on the ray through v (v != 0).
inline IntVec primitive(const IntVec& v) {
  BigInt g = content(v);
  if (g == 0 || g == 1) return v;
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

/// Least common multiple of the denominators.
inline BigInt common_denominator(const RatVec& v) {
  BigInt m = 1;
  for (const auto& x : v) m = lcm(m, x.den());
  return m;
}

/// Positive integer multiple of v that is primitive (v != 0).
inline IntVec primitive(const RatVec& v) {
  BigInt m = common_denominator(v);
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].num() * (m / v[i].den());
  return primitive(out);
}

inline std::string to_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

inline std::string to_string(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace gavkit
