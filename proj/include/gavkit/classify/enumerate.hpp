#pragma once

// Candidate tuples from the necessary conditions on each setting at a fixed
// Gorenstein index. The output is a superset of the tuples that verify; every
// tuple is given in normal form.

#include "gavkit/classify/settings.hpp"

#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace gavkit {

struct EnumerationLog {
  std::vector<std::string> skipped;  // division guards that fired
};

namespace detail {

inline std::vector<long long> positive_divisors(long long n) {
  n = n < 0 ? -n : n;
  std::vector<long long> small, large;
  for (long long a = 1; a * a <= n; ++a)
    if (n % a == 0) {
      small.push_back(a);
      if (a != n / a) large.push_back(n / a);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline std::vector<long long> signed_divisors(long long n) {
  std::vector<long long> out;
  for (auto a : positive_divisors(n)) {
    out.push_back(a);
    out.push_back(-a);
  }
  return out;
}

// Exact quotient a / b if b divides a.
inline bool exact_div(long long a, long long b, long long& q) {
  if (b == 0 || a % b != 0) return false;
  q = a / b;
  return true;
}

class TupleSink {
 public:
  explicit TupleSink(int id) : id_(id) {}
  void add(const Params& p) {
    if (satisfies_inequalities(id_, p)) out_.insert(normal_form(id_, p));
  }
  std::vector<Params> take() { return {out_.begin(), out_.end()}; }

 private:
  int id_;
  std::set<Params> out_;
};

inline void enumerate_s1(long long iota, TupleSink& sink, EnumerationLog& log) {
  for (long long d12 = 3; d12 <= 3 * iota; ++d12)
    for (long long k = -iota; k < 0; ++k) {
      long long a = k * d12 + iota;
      if (a == 0) {
        log.skipped.push_back("setting 1: k*d12 + iota = 0 at d12=" + std::to_string(d12) + ", k=" + std::to_string(k));
        continue;
      }
      // (k d12 + iota) l21 + iota divides iota k^2 d12
      for (long long delta : signed_divisors(iota * k * k * d12)) {
        long long l21, d21;
        if (!exact_div(delta - iota, a, l21)) continue;
        if (!exact_div(iota * (l21 + 1), k, d21)) continue;
        sink.add({l21, d12, d21});
      }
    }
}

// (i) d01 = 0, l21 = l22 | iota, 2 | iota
inline void enumerate_s2_equal(long long iota, TupleSink& sink) {
  if (iota % 2 == 0)
    for (long long l : positive_divisors(iota)) {
      if (l <= 1) continue;
      for (long long d21 : signed_divisors((2 + l) * iota / 2))
        for (long long d22 : signed_divisors((2 + l) * iota / 2)) sink.add({l, l, 0, d21, d22});
    }
}

// (ii) d01 = 0, l21 > l22
inline void enumerate_s2_unequal(long long iota, TupleSink& sink) {
  if (iota % 2 == 0)
    for (long long l22 = 2; l22 < iota; ++l22)
      for (long long d22 = 1; d22 < iota; ++d22)
        for (long long k = 1; k < iota; ++k)
          for (long long g : positive_divisors(d22))
            for (long long dt : signed_divisors(iota / 2 + k)) {
              long long d21 = g * dt;
              if ((iota / 2 + k) % (d21 / std::gcd(d21, d22)) != 0) continue;
              // k (l21 d22 - d21 l22) = iota (d22 - d21)
              long long num, l21;
              if (!exact_div(iota * (d22 - d21), k, num)) continue;
              if (!exact_div(num + d21 * l22, d22, l21)) continue;
              if (l21 <= l22) continue;
              sink.add({l21, l22, 0, d21, d22});
            }
}

// (iii) d01 = -1 with sp = l21 - 2 d21, tp = 2 d22 - l22, and the variant
// with (sp, l21) and (tp, l22) exchanged.
inline void enumerate_s2_odd(long long iota, TupleSink& sink) {
  for (int swap = 0; swap < 2; ++swap)
    for (long long la = 2; la < 4 * iota; ++la)
      for (long long a : positive_divisors(iota * (la + 2)))
        for (long long k = 1; k <= iota; ++k)
          for (long long b : positive_divisors(2 * iota * iota * a + 2 * k * a * iota)) {
            // k (b la + a lb) = 2 iota (a + b)
            long long num, lb;
            if (!exact_div(2 * iota * (a + b), k, num)) continue;
            if (!exact_div(num - b * la, a, lb)) continue;
            long long l21 = swap ? lb : la, l22 = swap ? la : lb;
            long long sp = swap ? b : a, tp = swap ? a : b;
            if ((l21 - sp) % 2 != 0 || (l22 + tp) % 2 != 0) continue;
            sink.add({l21, l22, -1, (l21 - sp) / 2, (l22 + tp) / 2});
          }
}

inline void enumerate_s2(long long iota, TupleSink& sink) {
  enumerate_s2_equal(iota, sink);
  enumerate_s2_unequal(iota, sink);
  enumerate_s2_odd(iota, sink);
}

inline void enumerate_s3(long long iota, TupleSink& sink, EnumerationLog& log) {
  for (long long d01p : positive_divisors(3 * iota)) {
    long long d01 = -d01p, k01 = 3 * iota / d01;
    for (long long k22 = 1; k22 < iota; ++k22) {
      long long N = 6 * iota * (k22 + k01);
      if (N == 0) {
        log.skipped.push_back("setting 3: k22 + k01 = 0 at d01=" + std::to_string(d01) + ", k22=" + std::to_string(k22));
        continue;
      }
      long long den = d01 * k22 + 2 * iota;
      if (den == 0) {
        log.skipped.push_back("setting 3: d01*k22 + 2*iota = 0 at d01=" + std::to_string(d01) +
                              ", k22=" + std::to_string(k22));
        continue;
      }
      for (long long b : signed_divisors(N)) {
        long long l22, d22;
        if (!exact_div(b * k22 + 2 * iota, den, l22)) continue;
        if (!exact_div(iota * (l22 - 1), k22, d22)) continue;
        sink.add({l22, d01, 0, d22});
      }
    }
  }
}

inline void enumerate_s4(long long iota, TupleSink& sink, EnumerationLog& log) {
  for (long long d01 = -2 * iota; d01 <= 0; ++d01)
    for (long long k = 1; k < 2 * iota; ++k) {
      long long den = d01 * k + 2 * iota;
      if (den == 0) {
        log.skipped.push_back("setting 4: d01*k + 2*iota = 0 at d01=" + std::to_string(d01) + ", k=" + std::to_string(k));
        continue;
      }
      long long N = 2 * iota * (d01 * k + 3 * iota);
      if (N == 0) {
        log.skipped.push_back("setting 4: d01*k + 3*iota = 0 at d01=" + std::to_string(d01) + ", k=" + std::to_string(k));
        continue;
      }
      for (long long b : signed_divisors(N)) {
        long long l22, d22;
        if (!exact_div(b * k + 2 * iota, den, l22)) continue;
        if (!exact_div(iota * (l22 - 1), k, d22)) continue;
        sink.add({l22, d01, 0, d22});
      }
    }
}

inline void enumerate_s5(long long iota, TupleSink& sink, EnumerationLog&) {
  for (long long k = -iota; 2 * k < -iota; ++k) {
    long long a = 2 * k + iota;
    // l21 (2k + iota)/iota + 2 = b divides 4 k iota
    for (long long b : signed_divisors(4 * k * iota)) {
      long long l21, t;
      if (!exact_div((b - 2) * iota, a, l21) || l21 <= 1) continue;
      if (!exact_div(k * l21, iota, t)) continue;
      sink.add({l21, t + 1});
    }
  }
}

}  // namespace detail

/// Normal-form tuples satisfying the setting's inequalities and the
/// necessary conditions for Gorenstein index iota. Not yet verified.
inline std::vector<Params> enumerate_setting(int id, long long iota, EnumerationLog* log = nullptr) {
  if (iota < 1) throw PreconditionViolation("enumerate_setting: iota must be positive");
  EnumerationLog local;
  EnumerationLog& lg = log ? *log : local;
  detail::TupleSink sink(id);
  switch (id) {
    case 1: detail::enumerate_s1(iota, sink, lg); break;
    case 2: detail::enumerate_s2(iota, sink); break;
    case 3: detail::enumerate_s3(iota, sink, lg); break;
    case 4: detail::enumerate_s4(iota, sink, lg); break;
    case 5: detail::enumerate_s5(iota, sink, lg); break;
    default: throw PreconditionViolation("unknown setting " + std::to_string(id));
  }
  return sink.take();
}

}  // namespace gavkit
