#include "rsac/sequence.hpp"

#include <bit>

namespace rsac {

BinarySeq::BinarySeq(int order, std::vector<std::int8_t> terms)
    : order_(order), terms_(std::move(terms)) {
  if (order_ < 0 || order_ > 62) throw Error("sequence order out of range");
  if (terms_.size() != (std::size_t{1} << order_))
    throw Error("sequence length must be 2^order");
  for (auto t : terms_)
    if (t != 1 && t != -1) throw Error("sequence entries must be +1 or -1");
  if (terms_.front() != 1) throw Error("sequence must start with +1");
}

int rs_term(std::uint64_t i) noexcept {
  return (std::popcount(i & (i >> 1)) & 1) ? -1 : 1;
}

BinarySeq rs_sequence(int m, int cap) {
  check_order(m, cap);
  std::vector<std::int8_t> terms(std::size_t{1} << m);
  for (std::size_t i = 0; i < terms.size(); ++i) terms[i] = static_cast<std::int8_t>(rs_term(i));
  return BinarySeq(m, std::move(terms));
}

std::vector<std::uint8_t> rudin_shapiro_pattern(int m) {
  std::vector<std::uint8_t> f(static_cast<std::size_t>(m > 0 ? m : 0), 0);
  for (int i = 2; i < m; i += 2) f[static_cast<std::size_t>(i)] = 1;
  return f;
}

BinarySeq generalized_sequence(int m, std::span<const std::uint8_t> f, int cap) {
  check_order(m, cap);
  if (f.size() < static_cast<std::size_t>(m))
    throw Error("sign pattern needs " + std::to_string(m) + " entries");
  std::vector<std::int8_t> a(std::size_t{1} << m);
  a[0] = 1;
  for (int i = 0; i < m; ++i) {
    const std::size_t half = std::size_t{1} << i;
    const int sign_f = (f[static_cast<std::size_t>(i)] & 1) ? -1 : 1;
    for (std::size_t j = 0; j < half; ++j) {
      const int sign_j = (j & 1) ? -1 : 1;
      a[half + j] = static_cast<std::int8_t>(sign_j * sign_f * a[half - j - 1]);
    }
  }
  return BinarySeq(m, std::move(a));
}

std::vector<std::uint8_t> parse_pattern(const std::string& bits) {
  std::vector<std::uint8_t> f;
  f.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') throw Error("pattern must contain only '0' and '1'");
    f.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return f;
}

std::complex<double> shapiro_eval(const BinarySeq& seq, double theta) {
  const std::complex<double> z = std::polar(1.0, theta);
  std::complex<double> acc = 0.0;
  const auto terms = seq.terms();
  for (std::size_t i = terms.size(); i-- > 0;) acc = acc * z + static_cast<double>(terms[i]);
  return acc;
}

std::complex<double> shapiro_eval(int m, double theta, int cap) {
  return shapiro_eval(rs_sequence(m, cap), theta);
}

std::string format_sequence(const BinarySeq& seq, SeqFormat fmt) {
  std::string out;
  bool first = true;
  for (auto t : seq.terms()) {
    if (fmt != SeqFormat::compact && !first) out += ' ';
    first = false;
    switch (fmt) {
      case SeqFormat::signs:
      case SeqFormat::compact:
        out += t > 0 ? '+' : '-';
        break;
      case SeqFormat::ints:
        out += t > 0 ? "1" : "-1";
        break;
    }
  }
  return out;
}

}  // namespace rsac
