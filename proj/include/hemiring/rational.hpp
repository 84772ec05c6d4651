#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <string>

namespace hemiring {

// Exact rational, always normalized with den > 0. Membership degrees live on
// a fixed grid {0, 1/D, ..., 1}; keeping them as reduced fractions makes
// min/max/equality exact regardless of the denominators that show up.
struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rat() = default;

  Rat(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  static Rat zero() { return Rat(); }
  static Rat one() { return Rat(1, 1); }

  bool is_zero() const { return num == 0; }

  friend bool operator==(const Rat&, const Rat&) = default;
  friend bool operator<(const Rat& x, const Rat& y) {
    return x.num * y.den < y.num * x.den;
  }
  friend bool operator>(const Rat& x, const Rat& y) { return y < x; }
  friend bool operator<=(const Rat& x, const Rat& y) { return !(y < x); }
  friend bool operator>=(const Rat& x, const Rat& y) { return !(x < y); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  // Accepts "p" or "p/q" with q > 0. Anything else yields nullopt.
  static std::optional<Rat> parse(const std::string& s) {
    if (s.empty()) return std::nullopt;
    const auto slash = s.find('/');
    const std::string ns = slash == std::string::npos ? s : s.substr(0, slash);
    const std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (ns.empty() || ds.empty()) return std::nullopt;
    auto digits = [](const std::string& t, std::size_t from) {
      for (std::size_t i = from; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9') return false;
      return true;
    };
    const std::size_t nfrom = ns[0] == '-' ? 1 : 0;
    if (ns.size() == nfrom || !digits(ns, nfrom) || !digits(ds, 0)) return std::nullopt;
    const std::int64_t d = std::strtoll(ds.c_str(), nullptr, 10);
    if (d == 0) return std::nullopt;
    return Rat(std::strtoll(ns.c_str(), nullptr, 10), d);
  }
};

inline Rat rat_min(const Rat& x, const Rat& y) { return x <= y ? x : y; }
inline Rat rat_max(const Rat& x, const Rat& y) { return x >= y ? x : y; }

} // namespace hemiring

template <>
struct std::hash<hemiring::Rat> {
  std::size_t operator()(const hemiring::Rat& r) const noexcept {
    return std::hash<std::int64_t>{}(r.num) * 1000003u ^
           std::hash<std::int64_t>{}(r.den);
  }
};
