#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gdta/scalar.hpp"

namespace gdta {

inline constexpr std::size_t kMaxFactors = 62;

/// One group divisible factor: `groups` groups of `group_size` points each.
struct Factor {
  std::uint64_t groups = 2;      // number of groups, >= 2
  std::uint64_t group_size = 2;  // size of each group, >= 2
  bool operator==(const Factor&) const = default;
};

/// Relation label of the product scheme: an n-tuple over {0,1,2} stored as
/// two disjoint bitmasks. Entry i is 0 (equal), 1 (same group, distinct) or
/// 2 (different group) in the i-th factor.
struct Color {
  std::uint64_t ones = 0;
  std::uint64_t twos = 0;

  int entry(std::size_t i) const {
    return static_cast<int>((ones >> i) & 1u) + 2 * static_cast<int>((twos >> i) & 1u);
  }
  bool is_zero() const { return ones == 0 && twos == 0; }
  bool operator==(const Color&) const = default;
};

/// Tuple-lexicographic order, coordinate 0 most significant.
bool color_less(const Color& a, const Color& b);

struct ColorLess {
  bool operator()(const Color& a, const Color& b) const { return color_less(a, b); }
};

/// The three index sets of a color; they partition [0, n).
struct IndexProfile {
  std::uint64_t zeros = 0;
  std::uint64_t ones = 0;
  std::uint64_t twos = 0;
};

/// Parameters of a direct product of group divisible schemes over a prime
/// field (characteristic 0 means the rationals).
class GDParams {
 public:
  GDParams(std::vector<Factor> factors, std::uint64_t characteristic);

  std::size_t n() const { return factors_.size(); }
  const std::vector<Factor>& factors() const { return factors_; }
  std::uint64_t characteristic() const { return p_; }

  std::uint64_t full_mask() const { return full_; }
  /// {a : l_a > 2}; V & ell_gt2_mask() is the bullet restriction of V.
  std::uint64_t ell_gt2_mask() const { return ell_gt2_; }
  /// {a : m_a > 2}; V & m_gt2_mask() is the circle restriction of V.
  std::uint64_t m_gt2_mask() const { return m_gt2_; }
  /// {a : p | m_a - 1}
  std::uint64_t div_m_minus1_mask() const { return div_m1_; }
  /// {a : p | (l_a - 1) m_a}
  std::uint64_t div_ellm_mask() const { return div_lm_; }
  /// {a : p | m_a}
  std::uint64_t div_m_mask() const { return div_m_; }

  mpz_class vertex_count() const;

  /// Counts of factors with (l=m=2, l>m=2, m>l=2, min>2), summing to n.
  std::array<std::size_t, 4> shape_counts() const;

  IndexProfile profile(const Color& c) const {
    return IndexProfile{full_ & ~(c.ones | c.twos), c.ones, c.twos};
  }

  bool operator==(const GDParams&) const = default;

 private:
  std::vector<Factor> factors_;
  std::uint64_t p_ = 0;
  std::uint64_t full_ = 0;
  std::uint64_t ell_gt2_ = 0;
  std::uint64_t m_gt2_ = 0;
  std::uint64_t div_m1_ = 0;
  std::uint64_t div_lm_ = 0;
  std::uint64_t div_m_ = 0;
};

/// "2x3,3x3" -> factors (l,m) = (2,3),(3,3). Throws std::invalid_argument.
std::vector<Factor> parse_factors(const std::string& text);
std::string format_factors(const std::vector<Factor>& factors);

/// Intersection number p^k_{i,j} of a single group divisible scheme.
mpz_class gd_intersection_number(std::uint64_t ell, std::uint64_t m, int i, int j, int k);

/// Product-scheme intersection number, one factor at a time.
mpz_class intersection_number(const GDParams& params, const Color& i, const Color& j,
                              const Color& k);

/// k_g: the common size of every g-sphere.
mpz_class valency(const GDParams& params, const Color& g);

/// True when no valency is divisible by the characteristic.
bool is_p_prime_valenced(const GDParams& params);

/// True exactly when intersection_number(g, h, i) > 0 as an integer.
bool support_nonzero(const GDParams& params, const Color& g, const Color& h, const Color& i);

/// All 3^n colors in tuple-lexicographic order. Guards against 3^n > limit.
std::vector<Color> enumerate_colors(const GDParams& params, std::size_t limit = 1u << 22);

/// Colors a with intersection_number(g, h, a) > 0, in enumeration order.
std::vector<Color> enumerate_P(const GDParams& params, const Color& g, const Color& h);

}  // namespace gdta
