#include "spanwright/types.hpp"

#include <charconv>
#include <numeric>

namespace spanwright {

namespace {

__extension__ typedef __int128 i128;

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw Error("rational overflow");
  return static_cast<std::int64_t>(v);
}

Ratio make(i128 n, i128 d) {
  if (d == 0) throw Error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 a = n < 0 ? -n : n;
  i128 b = d;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    n /= a;
    d /= a;
  }
  Ratio r;
  r.num = narrow(n);
  r.den = narrow(d);
  return r;
}

}  // namespace

Ratio::Ratio(std::int64_t n, std::int64_t d) { *this = make(n, d); }

Ratio Ratio::parse(std::string_view text) {
  auto bad = [&] { return Error("not a number: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t n = 0, d = 0;
    auto a = text.substr(0, slash), b = text.substr(slash + 1);
    if (std::from_chars(a.data(), a.data() + a.size(), n).ptr != a.data() + a.size()) throw bad();
    if (std::from_chars(b.data(), b.data() + b.size(), d).ptr != b.data() + b.size()) throw bad();
    if (d == 0) throw bad();
    return Ratio(n, d);
  }
  auto dot = text.find('.');
  auto whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (frac.size() > 15) throw bad();
  std::int64_t w = 0, f = 0, scale = 1;
  if (!whole.empty() &&
      std::from_chars(whole.data(), whole.data() + whole.size(), w).ptr != whole.data() + whole.size())
    throw bad();
  for (char c : frac) {
    if (c < '0' || c > '9') throw bad();
    f = f * 10 + (c - '0');
    scale *= 10;
  }
  if (whole.empty() && frac.empty()) throw bad();
  if (w < 0) throw bad();
  return make(static_cast<i128>(w) * scale + f, scale);
}

std::string Ratio::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Ratio operator+(Ratio a, Ratio b) {
  return make(static_cast<i128>(a.num) * b.den + static_cast<i128>(b.num) * a.den,
              static_cast<i128>(a.den) * b.den);
}
Ratio operator-(Ratio a, Ratio b) {
  return make(static_cast<i128>(a.num) * b.den - static_cast<i128>(b.num) * a.den,
              static_cast<i128>(a.den) * b.den);
}
Ratio operator*(Ratio a, Ratio b) {
  return make(static_cast<i128>(a.num) * b.num, static_cast<i128>(a.den) * b.den);
}
Ratio operator/(Ratio a, Ratio b) {
  return make(static_cast<i128>(a.num) * b.den, static_cast<i128>(a.den) * b.num);
}
bool operator==(Ratio a, Ratio b) { return a.num == b.num && a.den == b.den; }
bool operator<(Ratio a, Ratio b) {
  return static_cast<i128>(a.num) * b.den < static_cast<i128>(b.num) * a.den;
}
Ratio pow(Ratio base, int exponent) {
  Ratio r(1);
  for (int i = 0; i < exponent; ++i) r = r * base;
  return r;
}
Ratio max(Ratio a, Ratio b) { return a < b ? b : a; }

bool within_stretch(Weight d, Ratio t, Weight w) {
  if (d == kInfinity) return false;
  return static_cast<i128>(d) * t.den <= static_cast<i128>(t.num) * w;
}

Weight scale_up(Ratio t, Weight w) {
  if (w == kInfinity) return kInfinity;
  i128 p = static_cast<i128>(t.num) * w;
  i128 q = (p + t.den - 1) / t.den;
  if (q >= kInfinity) return kInfinity;
  return static_cast<Weight>(q);
}

}  // namespace spanwright
