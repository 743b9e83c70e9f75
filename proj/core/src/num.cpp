#include "neutro/num.hpp"

#include <stdexcept>

namespace neutro {

Num::Num(BigInt real, BigInt indet)
    : real_(std::move(real)), indet_(std::move(indet)) {
  if (real_ < 0 || indet_ < 0) {
    throw std::invalid_argument("negative parts are not representable");
  }
}

std::string Num::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (real_ != 0) out = real_.str();
  if (indet_ != 0) {
    if (!out.empty()) out += '+';
    if (indet_ != 1) out += indet_.str();
    out += 'I';
  }
  return out;
}

namespace {

std::optional<BigInt> parse_digits(std::string_view s) {
  if (s.empty()) return std::nullopt;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
  }
  return BigInt(std::string(s));
}

// "I", "2I" — the coefficient defaults to 1.
std::optional<BigInt> parse_indet_term(std::string_view s) {
  if (s.empty() || s.back() != 'I') return std::nullopt;
  s.remove_suffix(1);
  if (s.empty()) return BigInt(1);
  return parse_digits(s);
}

}  // namespace

std::optional<Num> Num::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (auto plus = text.find('+'); plus != std::string_view::npos) {
    auto real = parse_digits(text.substr(0, plus));
    auto indet = parse_indet_term(text.substr(plus + 1));
    if (!real || !indet) return std::nullopt;
    return Num(*real, *indet);
  }
  if (text.back() == 'I') {
    auto indet = parse_indet_term(text);
    if (!indet) return std::nullopt;
    return Num(0, *indet);
  }
  auto real = parse_digits(text);
  if (!real) return std::nullopt;
  return Num(*real, 0);
}

}  // namespace neutro
