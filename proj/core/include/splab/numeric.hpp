#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace splab {

using BigInt = boost::multiprecision::cpp_int;

/// num / 2^log2_den, kept in lowest terms.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(BigInt num, int log2_den = 0) : num_(std::move(num)), log2_den_(log2_den) { normalize(); }

  const BigInt& num() const noexcept { return num_; }
  int log2_den() const noexcept { return log2_den_; }
  bool is_zero() const { return num_ == 0; }

  Dyadic& operator+=(const Dyadic& o) {
    const int k = std::max(log2_den_, o.log2_den_);
    num_ = (num_ << (k - log2_den_)) + (o.num_ << (k - o.log2_den_));
    log2_den_ = k;
    normalize();
    return *this;
  }
  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  bool operator==(const Dyadic&) const = default;

  /// `p/2^k`; `p` when k = 0.
  std::string to_string() const {
    std::string s = num_.str();
    if (log2_den_ > 0) s += "/2^" + std::to_string(log2_den_);
    return s;
  }

 private:
  void normalize() {
    if (num_ == 0) {
      log2_den_ = 0;
      return;
    }
    while (log2_den_ > 0 && (num_ & 1) == 0) {
      num_ >>= 1;
      --log2_den_;
    }
    while (log2_den_ < 0) {
      num_ <<= 1;
      ++log2_den_;
    }
  }

  BigInt num_ = 0;
  int log2_den_ = 0;
};

}  // namespace splab
