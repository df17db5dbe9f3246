#pragma once

// Rudin-Shapiro sequences, the generalized family built from a sign
// pattern f, and evaluation of the associated Littlewood polynomials.

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rsac/error.hpp"

namespace rsac {

/// A +/-1 sequence of length 2^order with first term +1.
class BinarySeq {
 public:
  /// Validates the invariants; throws rsac::Error on violation.
  BinarySeq(int order, std::vector<std::int8_t> terms);

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const std::int8_t> terms() const noexcept { return terms_; }
  std::int8_t operator[](std::size_t i) const { return terms_[i]; }

  friend bool operator==(const BinarySeq&, const BinarySeq&) = default;

 private:
  int order_;
  std::vector<std::int8_t> terms_;
};

/// (-1)^t where t counts the (overlapping) "11" bit pairs of i.
int rs_term(std::uint64_t i) noexcept;

BinarySeq rs_sequence(int m, int cap = kMaxOrder);

/// Sign pattern that makes generalized_sequence reproduce rs_sequence:
/// f(0) = 0, f(odd) = 0, f(even >= 2) = 1.
std::vector<std::uint8_t> rudin_shapiro_pattern(int m);

/// a_0 = 1, a_{2^i + j} = (-1)^{j + f(i)} a_{2^i - j - 1}. `f` needs m entries.
BinarySeq generalized_sequence(int m, std::span<const std::uint8_t> f, int cap = kMaxOrder);

/// Parses a pattern such as "001" into f(0), f(1), ...
std::vector<std::uint8_t> parse_pattern(const std::string& bits);

/// Horner evaluation of sum_j a_j e^{i j theta}.
std::complex<double> shapiro_eval(const BinarySeq& seq, double theta);
std::complex<double> shapiro_eval(int m, double theta, int cap = kMaxOrder);

enum class SeqFormat {
  signs,    // "+ + + -"
  ints,     // "1 1 1 -1"
  compact,  // "+++-"
};

std::string format_sequence(const BinarySeq& seq, SeqFormat fmt);

}  // namespace rsac
