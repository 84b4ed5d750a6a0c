#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "cubicfold/exactnum/arith.hpp"

namespace cubicfold {

/// Element of F_p with a runtime modulus.
///
/// A modulus of 0 marks an unbound integer constant (the default-constructed zero,
/// or a small literal produced by generic code); it adopts the modulus of the other
/// operand on first contact.
struct PrimeFieldElement {
  std::uint64_t modulus = 0;
  std::int64_t value = 0;  // in [0, modulus) when bound

  PrimeFieldElement() = default;
  PrimeFieldElement(long v) : value(v) {}
  PrimeFieldElement(std::uint64_t p, std::int64_t v) : modulus(p), value(arith::mod_floor(v, static_cast<std::int64_t>(p))) {
    if (p < 2) throw std::invalid_argument("prime field modulus must be at least 2");
  }

  bool bound() const { return modulus != 0; }

  PrimeFieldElement bind(std::uint64_t p) const { return bound() ? *this : PrimeFieldElement(p, value); }

  friend PrimeFieldElement operator+(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    auto p = common(a, b);
    if (p == 0) return PrimeFieldElement(a.value + b.value);
    return PrimeFieldElement(p, a.bind(p).value + b.bind(p).value);
  }
  friend PrimeFieldElement operator-(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    auto p = common(a, b);
    if (p == 0) return PrimeFieldElement(a.value - b.value);
    return PrimeFieldElement(p, a.bind(p).value - b.bind(p).value);
  }
  friend PrimeFieldElement operator*(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    auto p = common(a, b);
    if (p == 0) return PrimeFieldElement(a.value * b.value);
    auto x = static_cast<std::uint64_t>(a.bind(p).value), y = static_cast<std::uint64_t>(b.bind(p).value);
    return PrimeFieldElement(p, static_cast<std::int64_t>(arith::mulmod(x, y, p)));
  }
  friend PrimeFieldElement operator/(const PrimeFieldElement& a, const PrimeFieldElement& b) { return a * b.inverse(); }
  PrimeFieldElement operator-() const { return bound() ? PrimeFieldElement(modulus, -value) : PrimeFieldElement(-value); }

  PrimeFieldElement& operator+=(const PrimeFieldElement& b) { return *this = *this + b; }
  PrimeFieldElement& operator-=(const PrimeFieldElement& b) { return *this = *this - b; }
  PrimeFieldElement& operator*=(const PrimeFieldElement& b) { return *this = *this * b; }

  PrimeFieldElement inverse() const {
    if (!bound()) {
      if (value == 1 || value == -1) return *this;
      throw std::domain_error("inverse of an unbound prime-field constant");
    }
    if (value == 0) throw std::domain_error("inversion of zero");
    return PrimeFieldElement(modulus, static_cast<std::int64_t>(arith::invmod(static_cast<std::uint64_t>(value), modulus)));
  }

  friend bool operator==(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    auto p = common(a, b);
    if (p == 0) return a.value == b.value;
    return a.bind(p).value == b.bind(p).value;
  }

 private:
  static std::uint64_t common(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    if (a.bound() && b.bound() && a.modulus != b.modulus) throw std::invalid_argument("prime field moduli differ");
    return a.bound() ? a.modulus : b.modulus;
  }
};

inline bool is_zero(const PrimeFieldElement& a) { return a.value == 0; }
inline PrimeFieldElement inverse(const PrimeFieldElement& a) { return a.inverse(); }
inline std::string to_string(const PrimeFieldElement& a) { return std::to_string(a.value); }

}  // namespace cubicfold
