#pragma once

#include <optional>

#include "gdta/algebra.hpp"

namespace gdta {

/// Label of a layered alternating-sum element; a member of the quotient
/// basis when the three attached weights are all units.
struct DLabel {
  Color row;
  Color col;
  TripleSet agg;
  bool operator==(const DLabel&) const = default;
};

bool d_less(const DLabel& a, const DLabel& b);

struct DLess {
  bool operator()(const DLabel& a, const DLabel& b) const { return d_less(a, b); }
};

/// Diagonal-corner radical: labels (g,g,t) whose weight k_t vanishes mod p.
std::vector<B2Label> corner_radical_basis(const GDParams& params, const Color& g);

/// Dimension of the semisimple quotient of the corner at g; counts the
/// triples over (g,g) with unit weight, one coordinate at a time.
mpz_class corner_quotient_dim(const GDParams& params, const Color& g);

/// Nilpotency index of the corner radical.
std::size_t corner_nilpotency_index(const GDParams& params, const Color& g);

/// The alternating layered sum over [t, ceiling]; requires the middle weight
/// of (row, col, row) to be a unit.
AlgebraElement d_element(const GDParams& params, const Color& g, const Color& h,
                         const TripleSet& t);

/// Aggregated labels spanning the radical: those whose asymmetry set is
/// nonempty. Empty in characteristic 0.
std::vector<B2Label> radical_basis(const GDParams& params);

mpz_class radical_dim(const GDParams& params);

/// Smallest t such that every t-fold product of radical elements vanishes.
std::size_t radical_nilpotency_index(const GDParams& params);

bool is_semisimple(const GDParams& params);

bool in_quotient_basis(const GDParams& params, const DLabel& d);

/// Labels of the basis of the semisimple quotient.
std::vector<DLabel> quotient_basis(const GDParams& params);

/// Product in the quotient: nullopt encodes zero, otherwise the single basis
/// label with coefficient one.
std::optional<DLabel> quotient_multiply(const GDParams& params, const DLabel& a, const DLabel& b);

/// Class key: the residual anchor sets; equal keys define the equivalence.
struct ClassKey {
  std::uint64_t r1 = 0, r2 = 0, r3 = 0;
  auto operator<=>(const ClassKey&) const = default;
};

ClassKey class_key(const GDParams& params, const DLabel& d);

struct WedderburnClass {
  DLabel representative;               // least label of the class
  std::vector<Color> member_colors;    // colors appearing diagonally; block size
  std::vector<DLabel> members;
};

struct WedderburnReport {
  std::vector<WedderburnClass> classes;
  mpz_class quotient_dim = 0;  // sum of block sizes squared

  std::size_t n_classes() const { return classes.size(); }
  /// (block size, multiplicity), largest blocks first.
  std::vector<std::pair<std::size_t, std::size_t>> blocks() const;
};

WedderburnReport wedderburn(const GDParams& params);

std::size_t irreducible_module_count(const GDParams& params);

}  // namespace gdta
