#include "gdd/label.hpp"

#include <charconv>
#include <numeric>

namespace gdd {

namespace {
long long mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}
}  // namespace

Label Label::make(ParamOrder ord, bool negative, long long exp) {
  Label l;
  l.ord_ = ord;
  if (ord.is_generic()) {
    l.k_ = exp;
    l.neg_ = negative;
  } else {
    const long long m = ord.group_order();
    const long long step = m / ord.value();  // q = zeta_m^step
    long long k = mod(exp, ord.value()) * step;
    if (negative) k += m / 2;
    l.k_ = mod(k, m);
    l.neg_ = false;
  }
  return l;
}

bool Label::is_one() const {
  return ord_.is_generic() ? (k_ == 0 && !neg_) : k_ == 0;
}

bool Label::is_minus_one() const {
  if (ord_.is_generic()) return k_ == 0 && neg_;
  return k_ == ord_.group_order() / 2;
}

Label Label::operator*(const Label& rhs) const {
  if (!(ord_ == rhs.ord_))
    throw LabelError("label multiplication across different parameter orders");
  Label l;
  l.ord_ = ord_;
  if (ord_.is_generic()) {
    l.k_ = k_ + rhs.k_;
    l.neg_ = neg_ != rhs.neg_;
  } else {
    l.k_ = mod(k_ + rhs.k_, ord_.group_order());
  }
  return l;
}

Label Label::inverse() const {
  Label l;
  l.ord_ = ord_;
  if (ord_.is_generic()) {
    l.k_ = -k_;
    l.neg_ = neg_;
  } else {
    l.k_ = mod(-k_, ord_.group_order());
  }
  return l;
}

Label Label::pow(long long m) const {
  Label l;
  l.ord_ = ord_;
  if (ord_.is_generic()) {
    l.k_ = k_ * m;
    l.neg_ = neg_ && (m % 2 != 0);
  } else {
    l.k_ = mod(k_ * m, ord_.group_order());
  }
  return l;
}

std::optional<long long> Label::multiplicative_order() const {
  if (ord_.is_generic()) {
    if (k_ != 0) return std::nullopt;
    return neg_ ? 2 : 1;
  }
  const long long m = ord_.group_order();
  return m / std::gcd(k_, m);
}

bool Label::qnumber_is_zero(long long m) const {
  if (m < 0) throw LabelError("q-number index must be >= 0");
  if (m == 0) return true;  // (0)_a is the empty sum
  if (is_one()) return false;
  return pow(m).is_one();
}

bool Label::negative() const {
  if (ord_.is_generic()) return neg_;
  const long long m = ord_.group_order();
  const long long step = m / ord_.value();
  // candidates: k = e*step (positive sign) or k = e*step + m/2 (negative);
  // prefer minimal |e|, ties toward positive sign
  long long best_abs = m + 1;
  bool best_neg = false;
  for (int s = 0; s < 2; ++s) {
    const long long rem = mod(k_ - (s ? m / 2 : 0), m);
    if (rem % step != 0) continue;
    long long e = rem / step;           // 0 <= e < n
    if (2 * e > ord_.value()) e -= ord_.value();  // balanced residue
    const long long a = e < 0 ? -e : e;
    if (a < best_abs || (a == best_abs && !s && best_neg)) {
      best_abs = a;
      best_neg = s;
    }
  }
  return best_neg;
}

long long Label::exponent() const {
  if (ord_.is_generic()) return k_;
  const long long m = ord_.group_order();
  const long long step = m / ord_.value();
  long long best_abs = m + 1, best_e = 0;
  bool best_neg = false;
  for (int s = 0; s < 2; ++s) {
    const long long rem = mod(k_ - (s ? m / 2 : 0), m);
    if (rem % step != 0) continue;
    long long e = rem / step;
    if (2 * e > ord_.value()) e -= ord_.value();
    const long long a = e < 0 ? -e : e;
    if (a < best_abs || (a == best_abs && !s && best_neg)) {
      best_abs = a;
      best_e = e;
      best_neg = s;
    }
  }
  return best_e;
}

std::string Label::str() const {
  const bool neg = negative();
  const long long e = exponent();
  std::string out = neg ? "-" : "";
  if (e == 0) return out + "1";
  if (e == 1) return out + "q";
  return out + "q^" + std::to_string(e);
}

std::optional<Label> Label::parse(std::string_view text, ParamOrder ord) {
  bool neg = false;
  if (!text.empty() && text.front() == '-') {
    neg = true;
    text.remove_prefix(1);
  }
  if (text == "1") return make(ord, neg, 0);
  if (text.empty() || text.front() != 'q') return std::nullopt;
  text.remove_prefix(1);
  if (text.empty()) return make(ord, neg, 1);
  if (text.front() != '^') return std::nullopt;
  text.remove_prefix(1);
  long long e = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), e);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return make(ord, neg, e);
}

}  // namespace gdd
