#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace neutro {

using BigInt = boost::multiprecision::cpp_int;

// Scalar of the indeterminacy semiring: a + b*I where I stands for an
// indeterminate quantity with I*I = I.  Parts are unbounded nonnegative
// integers; the semiring has no subtraction.
class Num {
 public:
  Num() = default;
  Num(BigInt real) : Num(std::move(real), 0) {}  // NOLINT: 3 means 3 + 0I
  Num(BigInt real, BigInt indet);
  Num(int real) : Num(BigInt(real)) {}           // NOLINT

  // The unit indeterminate, or b*I.
  static Num I(BigInt coeff = 1) { return Num(0, std::move(coeff)); }

  const BigInt& real_part() const { return real_; }
  const BigInt& indet_part() const { return indet_; }
  bool is_zero() const { return real_ == 0 && indet_ == 0; }

  Num& operator+=(const Num& o) {
    real_ += o.real_;
    indet_ += o.indet_;
    return *this;
  }
  friend Num operator+(Num a, const Num& b) {
    a += b;
    return a;
  }
  // (a+bI)(c+dI) = ac + (ad+bc+bd)I — the cross terms and I*I collapse onto I.
  friend Num operator*(const Num& a, const Num& b) {
    return Num(a.real_ * b.real_,
               a.real_ * b.indet_ + a.indet_ * b.real_ + a.indet_ * b.indet_);
  }
  Num& operator*=(const Num& o) { return *this = *this * o; }
  friend bool operator==(const Num&, const Num&) = default;

  // Canonical text: "0", "3", "I", "2I", "1+2I".
  std::string str() const;
  // Accepts the same grammar; nullopt on anything else.
  static std::optional<Num> parse(std::string_view text);

 private:
  BigInt real_ = 0;
  BigInt indet_ = 0;
};

}  // namespace neutro
