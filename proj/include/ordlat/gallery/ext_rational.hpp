#pragma once

#include "ordlat/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

namespace ordlat::gallery {

using Rational = boost::multiprecision::cpp_rational;

/// A rational number or one of ±∞.
class ExtRational {
 public:
  enum class Kind { neg_inf = -1, finite = 0, pos_inf = 1 };

  ExtRational() = default;
  ExtRational(Rational v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  ExtRational(int v) : value_(v) {}                 // NOLINT(google-explicit-constructor)

  static ExtRational neg_inf() { return ExtRational(Kind::neg_inf); }
  static ExtRational pos_inf() { return ExtRational(Kind::pos_inf); }
  static ExtRational ratio(long long num, long long den) { return ExtRational(Rational(num, den)); }

  /// Accepts "inf", "+inf", "-inf", integers and "p/q".
  static ExtRational parse(const std::string& s) {
    if (s == "inf" || s == "+inf") return pos_inf();
    if (s == "-inf") return neg_inf();
    try {
      return ExtRational(Rational(s));
    } catch (const std::exception&) {
      throw InputError("not an extended rational: '" + s + "'");
    }
  }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  const Rational& value() const { return value_; }

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::finite || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    if (a.kind_ != Kind::finite || a.value_ == b.value_) return std::strong_ordering::equal;
    return a.value_ < b.value_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  ExtRational operator-() const {
    if (kind_ == Kind::neg_inf) return pos_inf();
    if (kind_ == Kind::pos_inf) return neg_inf();
    return ExtRational(Rational(-value_));
  }

  std::string str() const {
    if (kind_ == Kind::neg_inf) return "-inf";
    if (kind_ == Kind::pos_inf) return "inf";
    return value_.str();
  }

 private:
  explicit ExtRational(Kind k) : kind_(k) {}

  Kind kind_ = Kind::finite;
  Rational value_ = 0;
};

inline const ExtRational& min(const ExtRational& a, const ExtRational& b) { return b < a ? b : a; }
inline const ExtRational& max(const ExtRational& a, const ExtRational& b) { return a < b ? b : a; }

}  // namespace ordlat::gallery
