#pragma once

#include <stdexcept>
#include <string>

namespace rsac {

// Largest sequence order accepted by default: 2^30 one-byte terms.
inline constexpr int kMaxOrder = 30;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OrderTooLarge : public Error {
 public:
  OrderTooLarge(int order, int cap)
      : Error("order " + std::to_string(order) + " outside [0, " +
              std::to_string(cap) + "]"),
        order_(order),
        cap_(cap) {}
  int order() const noexcept { return order_; }
  int cap() const noexcept { return cap_; }

 private:
  int order_;
  int cap_;
};

class InvalidShift : public Error {
 public:
  using Error::Error;
};

class NonFiniteInput : public Error {
 public:
  using Error::Error;
};

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class DepthCapExceeded : public Error {
 public:
  using Error::Error;
};

class InsufficientQuadrature : public Error {
 public:
  using Error::Error;
};

// Raised when regrouping a factor word does not land in {MA, MB}.
class NormalFormError : public Error {
 public:
  using Error::Error;
};

inline void check_order(int order, int cap = kMaxOrder, int min_order = 0) {
  if (order < min_order || order > cap) throw OrderTooLarge(order, cap);
}

}  // namespace rsac
