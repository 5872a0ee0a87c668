#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gdta/triples.hpp"

namespace gdta {

/// Aggregated basis element: the sum of all E*_row A_a E*_col whose color a
/// is collected under the triple `agg`.
struct B2Label {
  Color row;
  Color col;
  TripleSet agg;
  bool operator==(const B2Label&) const = default;
};

bool b2_less(const B2Label& a, const B2Label& b);

struct B2Less {
  bool operator()(const B2Label& a, const B2Label& b) const { return b2_less(a, b); }
};

/// Elementary basis element E*_row A_rel E*_col; requires nonzero support.
struct B1Label {
  Color row;
  Color rel;
  Color col;
  bool operator==(const B1Label&) const = default;
};

bool b1_less(const B1Label& a, const B1Label& b);

struct B1Less {
  bool operator()(const B1Label& a, const B1Label& b) const { return b1_less(a, b); }
};

/// Finite field-linear combination of aggregated basis elements. Zero
/// coefficients are never stored; the empty map is the zero element.
class AlgebraElement {
 public:
  using TermMap = std::map<B2Label, Scalar, B2Less>;

  explicit AlgebraElement(std::uint64_t characteristic) : p_(characteristic) {}

  std::uint64_t characteristic() const { return p_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add(const B2Label& label, const Scalar& coeff);
  Scalar coeff(const B2Label& label) const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement scaled(const Scalar& c) const;

  bool operator==(const AlgebraElement& o) const {
    return p_ == o.p_ && terms_ == o.terms_;
  }

 private:
  std::uint64_t p_;
  TermMap terms_;
};

/// Product of two aggregated basis elements: zero or a single scaled term.
AlgebraElement multiply_b2(const GDParams& params, const B2Label& a, const B2Label& b);

/// Bilinear extension of multiply_b2.
AlgebraElement multiply(const GDParams& params, const AlgebraElement& x, const AlgebraElement& y);

/// Two-sided identity: the sum of all diagonal idempotent labels.
AlgebraElement identity(const GDParams& params);

/// Swaps the anchors of every term.
AlgebraElement transpose(const AlgebraElement& x);

/// Dimension of the full algebra (product of per-factor dimensions).
mpz_class dim_T(const GDParams& params);

/// All aggregated labels, grouped by anchor pair in enumeration order.
std::vector<B2Label> enumerate_b2(const GDParams& params);

/// All elementary labels (row, rel, col) with nonzero support.
std::vector<B1Label> enumerate_b1(const GDParams& params);

/// Characteristic-vector expansion of an aggregated element (coefficients 1).
std::map<B1Label, Scalar, B1Less> b2_expand_in_b1(const GDParams& params, const B2Label& a);

/// Inverse expansion: solves the triangular aggregation system.
std::map<B2Label, Scalar, B2Less> b1_expand_in_b2(const GDParams& params, const B1Label& b);

/// A center label is a triple realizable over some diagonal anchor; it is
/// identified by its set data alone.
using CenterLabel = TripleSet;

bool is_center_label(const GDParams& params, const CenterLabel& t);
std::vector<CenterLabel> enumerate_center_labels(const GDParams& params);

/// The central element attached to a center label.
AlgebraElement center_element(const GDParams& params, const CenterLabel& t);

std::vector<std::pair<CenterLabel, AlgebraElement>> center_basis(const GDParams& params);

/// Closed-form center dimension; independent of the characteristic.
mpz_class center_dim(const GDParams& params);

/// True when x commutes with every aggregated basis element.
bool is_central(const GDParams& params, const AlgebraElement& x);

// JSON renderings of labels and elements (colors as entry arrays, index sets
// as sorted 1-based arrays, scalars as strings).
std::string color_json(const GDParams& params, const Color& c);
std::string triple_json(const GDParams& params, const TripleSet& t);
std::string b2_label_json(const GDParams& params, const B2Label& l);
std::string element_json(const GDParams& params, const AlgebraElement& x);

}  // namespace gdta
