#include "cfstat/cfe.hpp"

#include <charconv>
#include <numeric>
#include <string>

namespace cfstat {

namespace {

Int parse_int(std::string_view text, std::string_view what) {
  Int value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    throw OverflowError("integer out of range in " + std::string(what) + ": '" + std::string(text) + "'");
  }
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw InvalidArgument("malformed integer in " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

ReducedFraction::ReducedFraction(Int num, Int den) : num_(num), den_(den) {
  if (den < 2) throw InvalidArgument("denominator must be at least 2, got " + std::to_string(den));
  if (num <= 0 || num >= den) {
    throw InvalidArgument("fraction " + std::to_string(num) + "/" + std::to_string(den) +
                          " is not inside (0, 1)");
  }
  if (std::gcd(num, den) != 1) {
    throw NotCoprime(std::to_string(num) + "/" + std::to_string(den) + " is not in lowest terms");
  }
}

ReducedFraction ReducedFraction::reduce(Int num, Int den) {
  if (den <= 0) throw InvalidArgument("denominator must be positive");
  const Int g = std::gcd(num, den);
  if (g == 0) throw InvalidArgument("0/0 is not a fraction");
  return ReducedFraction(num / g, den / g);
}

ReducedFraction ReducedFraction::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw InvalidArgument("expected a fraction p/q, got '" + std::string(text) + "'");
  }
  return ReducedFraction(parse_int(text.substr(0, slash), "numerator"),
                         parse_int(text.substr(slash + 1), "denominator"));
}

std::string ReducedFraction::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

CfDigits::CfDigits(std::vector<Int> digits) : digits_(std::move(digits)) {
  if (digits_.empty()) throw InvalidArgument("digit string must be nonempty");
  for (Int a : digits_) {
    if (a < 1) throw InvalidArgument("digits must be positive, got " + std::to_string(a));
  }
  if (digits_.back() < 2) throw InvalidArgument("canonical expansion cannot end in 1");
}

CfDigits CfDigits::parse(std::string_view text) { return CfDigits(parse_digit_list(text)); }

std::string CfDigits::to_string() const { return format_digit_list(digits_); }

std::vector<Int> parse_digit_list(std::string_view text) {
  std::vector<Int> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    const Int a = parse_int(piece, "digit list");
    if (a < 1) throw InvalidArgument("digits must be positive, got " + std::to_string(a));
    out.push_back(a);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_digit_list(std::span<const Int> digits) {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(digits[i]);
  }
  return out;
}

CfDigits expand(const ReducedFraction& f) {
  std::vector<Int> digits;
  expand_into(f.num(), f.den(), digits);
  return CfDigits(std::move(digits));
}

Convergents convergents(std::span<const Int> digits) {
  Convergents out;
  out.reserve(digits.size() + 1);
  Convergent prev{1, 0};
  Convergent cur{0, 1};
  out.push_back(cur);
  for (Int a : digits) {
    if (a < 1) throw InvalidArgument("digits must be positive, got " + std::to_string(a));
    const Convergent next{checked::add(checked::mul(a, cur.p), prev.p),
                          checked::add(checked::mul(a, cur.q), prev.q)};
    prev = cur;
    cur = next;
    out.push_back(cur);
  }
  return out;
}

ReducedFraction evaluate(std::span<const Int> digits) {
  if (digits.empty()) throw InvalidArgument("digit string must be nonempty");
  const Convergents c = convergents(digits);
  return ReducedFraction(c.back().p, c.back().q);
}

CfDigits canonicalize(std::span<const Int> digits) {
  std::vector<Int> out(digits.begin(), digits.end());
  if (out.size() >= 2 && out.back() == 1) {
    out.pop_back();
    out.back() = checked::add(out.back(), 1);
  }
  return CfDigits(std::move(out));
}

ReducedFraction mirror(const ReducedFraction& f) { return ReducedFraction(f.den() - f.num(), f.den()); }

Int neg_mod_inverse(Int p, Int q) {
  if (q < 2) throw InvalidArgument("modulus must be at least 2");
  Int a = ((p % q) + q) % q;
  // Extended Euclid on (a, q); tracks the coefficient of a.
  Int old_r = a, r = q;
  Int old_s = 1, s = 0;
  while (r != 0) {
    const Int quot = old_r / r;
    Int tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw NotCoprime(std::to_string(p) + " is not invertible modulo " + std::to_string(q));
  }
  const Int inv = ((old_s % q) + q) % q;
  return q - inv;
}

}  // namespace cfstat
