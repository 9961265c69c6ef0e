#pragma once
// Exact arithmetic primitives: arbitrary-precision integers, exact reduced
// rationals, and a rational extended by +infinity (used as the default value
// of a lattice function outside its effective domain).

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace dca {

using Int = mpz_class;
using Rat = mpq_class;

struct value_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rational with +infinity.  -infinity is deliberately unrepresentable: the
// function model only ever needs the upper extension.
class ExtVal {
 public:
  ExtVal() : inf_(true) {}  // default: +infinity
  ExtVal(Rat v) : inf_(false), v_(std::move(v)) { v_.canonicalize(); }
  ExtVal(long v) : inf_(false), v_(v) {}
  static ExtVal infinity() { return ExtVal(); }

  bool is_inf() const { return inf_; }
  bool is_finite() const { return !inf_; }
  const Rat& finite() const {
    if (inf_) throw value_error("finite() on +inf");
    return v_;
  }

  ExtVal operator+(const ExtVal& o) const {
    if (inf_ || o.inf_) return infinity();
    return ExtVal(v_ + o.v_);
  }
  ExtVal operator-(const Rat& r) const {
    if (inf_) return infinity();
    return ExtVal(v_ - r);
  }
  ExtVal operator*(const Rat& r) const {  // r must be > 0
    if (sgn(r) <= 0) throw value_error("ExtVal scaling needs positive factor");
    if (inf_) return infinity();
    return ExtVal(v_ * r);
  }

  bool operator==(const ExtVal& o) const {
    if (inf_ != o.inf_) return false;
    return inf_ || v_ == o.v_;
  }
  bool operator<(const ExtVal& o) const {
    if (inf_) return false;
    if (o.inf_) return true;
    return v_ < o.v_;
  }
  bool operator<=(const ExtVal& o) const { return *this < o || *this == o; }
  bool operator>(const ExtVal& o) const { return o < *this; }
  bool operator>=(const ExtVal& o) const { return o <= *this; }

 private:
  bool inf_;
  Rat v_;
};

inline ExtVal min(const ExtVal& a, const ExtVal& b) { return a <= b ? a : b; }

// Parses "p/q" or "k"; rejects "inf", empty strings, zero denominators and
// any non-canonical junk.  This is the only accepted wire format for values.
inline Rat parse_rational(const std::string& s) {
  if (s.empty()) throw value_error("empty rational literal");
  std::string::size_type slash = s.find('/');
  auto check_int = [](const std::string& t) {
    if (t.empty()) throw value_error("empty integer literal");
    std::string::size_type i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw value_error("sign without digits: " + t);
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9')
        throw value_error("bad integer literal: " + t);
  };
  if (slash == std::string::npos) {
    check_int(s);
    return Rat(Int(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  check_int(num);
  check_int(den);
  Int d(den);
  if (sgn(d) == 0) throw value_error("zero denominator: " + s);
  Rat r(Int(num), d);
  r.canonicalize();
  return r;
}

// Canonical textual form: "k" when the denominator is 1, else "p/q" reduced.
inline std::string rational_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace dca
