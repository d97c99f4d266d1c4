// SPDX-License-Identifier: Apache-2.0
#include "twobridge/fraction.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace twobridge {
namespace {

Int parse_int(std::string_view text, std::string_view what) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  Int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw DomainError("malformed " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Fraction normalize(Int numerator, Int denominator, Parity parity) {
  if (numerator == 0) throw DomainError("zero numerator is not a knot or link fraction");
  const bool negative = (numerator < 0) != (denominator < 0) && denominator != 0;
  Int num = abs_checked(numerator);
  Int den = abs_checked(denominator);
  const Int g = std::gcd(num, den);
  num /= g;
  den /= g;
  if (num % 2 == 0 && parity == Parity::KnotOnly) {
    throw DomainError("two-bridge link, not a knot (determinant " + std::to_string(num) + ")");
  }
  if (num == 1) return Fraction::unknot();
  Int q = den % num;
  if (negative) q = num - q;
  return Fraction(num, q);
}

std::string Fraction::str() const { return std::to_string(p_) + "/" + std::to_string(q_); }

Fraction Fraction::parse(std::string_view text, Parity parity) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw DomainError("fraction must have the form p/q: '" + std::string(text) + "'");
  }
  return normalize(parse_int(text.substr(0, slash), "numerator"),
                   parse_int(text.substr(slash + 1), "denominator"), parity);
}

ConwayWord::ConwayWord(std::vector<Int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("Conway word must be nonempty");
  if (std::ranges::find(entries_, 0) != entries_.end()) {
    throw DomainError("Conway word entries must be nonzero");
  }
}

Int ConwayWord::entry_sum() const {
  Int sum = 0;
  for (Int a : entries_) sum = checked_add(sum, a);
  return sum;
}

ConwayWord ConwayWord::reversed() const {
  return ConwayWord(std::vector<Int>(entries_.rbegin(), entries_.rend()));
}

std::string ConwayWord::str() const {
  std::string out = "C(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out + ")";
}

ConwayWord ConwayWord::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (!text.starts_with("C(") || !text.ends_with(")")) {
    throw DomainError("Conway word must have the form C(a1,...): '" + std::string(text) + "'");
  }
  std::vector<Int> entries;
  std::string_view body = text.substr(2, text.size() - 3);
  while (true) {
    const auto comma = body.find(',');
    entries.push_back(parse_int(body.substr(0, comma), "Conway entry"));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return ConwayWord(std::move(entries));
}

Fraction cf_eval(const ConwayWord& word, Parity parity) {
  // Running product of [[a, 1], [1, 0]]; the value is top/bottom of the
  // first column. Zero intermediate values need no special case here.
  Int top = 1, top_prev = 0, bottom = 0, bottom_prev = 1;
  for (Int a : word.entries()) {
    const Int next_top = checked_add(checked_mul(top, a), top_prev);
    const Int next_bottom = checked_add(checked_mul(bottom, a), bottom_prev);
    top_prev = top;
    bottom_prev = bottom;
    top = next_top;
    bottom = next_bottom;
  }
  if (bottom == 0 || top == 0) {
    throw DomainError("degenerate word (not a knot or link fraction): " + word.str());
  }
  return normalize(top, bottom, parity);
}

ConwayWord cf_expand(const Fraction& f) {
  if (f.is_unknot()) throw DomainError("the unknot has an empty Conway word");
  std::vector<Int> entries;
  Int num = f.p(), den = f.q();
  while (den != 0) {
    entries.push_back(num / den);
    const Int rem = num % den;
    num = den;
    den = rem;
  }
  if (entries.size() > 1 && entries.back() == 1) {
    entries.pop_back();
    ++entries.back();
  }
  return ConwayWord(std::move(entries));
}

std::vector<Int> orbit(const Fraction& f, MirrorPolicy policy) {
  if (f.is_unknot()) return {0};
  const Int p = f.p(), q = f.q();
  const Int inv = mod_inverse(q, p);
  std::vector<Int> out{q, inv};
  if (policy == MirrorPolicy::Identify) {
    out.push_back(p - q);
    out.push_back(p - inv);
  }
  std::ranges::sort(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool same_knot(const Fraction& a, const Fraction& b, MirrorPolicy policy) {
  if (a.p() != b.p()) return false;
  return std::ranges::binary_search(orbit(a, policy), b.q());
}

Fraction mirror(const Fraction& f) {
  if (f.is_unknot()) return f;
  return normalize(f.p(), f.p() - f.q(), Parity::AllowEven);
}

bool is_amphicheiral(const Fraction& f) {
  if (f.is_unknot()) return true;
  return mod(checked_mul(f.q(), f.q()) + 1, f.p()) == 0;
}

KnotClass canonical_class(const Fraction& f, MirrorPolicy policy) {
  KnotClass out;
  if (f.is_unknot()) return out;
  out.canonical = normalize(f.p(), orbit(f, policy).front(), Parity::AllowEven);
  out.determinant = f.p();
  out.crossing = cf_expand(out.canonical).entry_sum();
  out.amphicheiral = is_amphicheiral(f);
  return out;
}

}  // namespace twobridge
