#ifndef HSRG_FIELDS_HPP
#define HSRG_FIELDS_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hsrg {

/// Element of GF(4) = GF(2)[w]/(w^2 + w + 1).
///
/// Encoding: 0 -> 0, 1 -> 1, w -> 2, w^2 -> 3. Under this encoding addition
/// is bitwise xor (basis {1, w}); multiplication goes through a table.
/// The encoding order 0 < 1 < w < w^2 is the canonical order used by every
/// lexicographic enumeration in the library.
class Gf4 {
 public:
  constexpr Gf4() = default;
  constexpr explicit Gf4(std::uint8_t code) : code_(code & 3u) {}

  static constexpr Gf4 zero() { return Gf4{0}; }
  static constexpr Gf4 one() { return Gf4{1}; }
  static constexpr Gf4 w() { return Gf4{2}; }
  static constexpr Gf4 w2() { return Gf4{3}; }

  constexpr std::uint8_t code() const { return code_; }
  constexpr bool is_zero() const { return code_ == 0; }
  constexpr bool in_prime_field() const { return code_ < 2; }

  friend constexpr bool operator==(Gf4, Gf4) = default;
  friend constexpr auto operator<=>(Gf4, Gf4) = default;

 private:
  std::uint8_t code_ = 0;
};

namespace detail {

inline constexpr std::array<std::array<std::uint8_t, 4>, 4> kGf4Mul{{
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
}};
inline constexpr std::array<std::uint8_t, 4> kGf4Conj{0, 1, 3, 2};
inline constexpr std::array<std::uint8_t, 4> kGf4Inv{0, 1, 3, 2};

}  // namespace detail

constexpr Gf4 add(Gf4 a, Gf4 b) { return Gf4(a.code() ^ b.code()); }
constexpr Gf4 mul(Gf4 a, Gf4 b) { return Gf4(detail::kGf4Mul[a.code()][b.code()]); }

/// Frobenius map x -> x^2; the involutory automorphism fixing GF(2).
constexpr Gf4 conj(Gf4 a) { return Gf4(detail::kGf4Conj[a.code()]); }

inline Gf4 inv(Gf4 a) {
  if (a.is_zero()) throw std::domain_error("GF(4): inverse of zero");
  return Gf4(detail::kGf4Inv[a.code()]);
}

constexpr Gf4 operator+(Gf4 a, Gf4 b) { return add(a, b); }
constexpr Gf4 operator-(Gf4 a, Gf4 b) { return add(a, b); }
constexpr Gf4 operator*(Gf4 a, Gf4 b) { return mul(a, b); }
constexpr Gf4& operator+=(Gf4& a, Gf4 b) { return a = add(a, b); }
constexpr Gf4& operator*=(Gf4& a, Gf4 b) { return a = mul(a, b); }
inline Gf4 operator/(Gf4 a, Gf4 b) { return mul(a, inv(b)); }

/// x^3, which is 1 on nonzero elements and 0 on zero.
constexpr Gf4 norm(Gf4 a) { return mul(a, conj(a)); }

inline constexpr std::array<Gf4, 4> kGf4Elements{Gf4{0}, Gf4{1}, Gf4{2}, Gf4{3}};
inline constexpr std::array<Gf4, 3> kGf4Units{Gf4{1}, Gf4{2}, Gf4{3}};

inline std::string_view to_string(Gf4 a) {
  static constexpr std::array<std::string_view, 4> names{"0", "1", "w", "w2"};
  return names[a.code()];
}

inline Gf4 gf4_from_string(std::string_view s) {
  if (s == "0") return Gf4::zero();
  if (s == "1") return Gf4::one();
  if (s == "w") return Gf4::w();
  if (s == "w2") return Gf4::w2();
  throw std::invalid_argument("GF(4): unknown element name '" + std::string(s) + "'");
}

inline std::ostream& operator<<(std::ostream& os, Gf4 a) { return os << to_string(a); }

}  // namespace hsrg

#endif  // HSRG_FIELDS_HPP
