#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gdta/structure.hpp"

namespace gdta {

/// The actual vertex set of the product scheme, with relation lookup and the
/// spheres around a fixed base vertex. Vertex i has coordinate c_a in
/// [0, l_a * m_a); group = c_a / m_a, position in group = c_a % m_a.
class VertexSpace {
 public:
  explicit VertexSpace(GDParams params, std::size_t max_vertices = 256,
                       std::size_t base_vertex = 0);

  const GDParams& params() const { return params_; }
  std::size_t vertex_count() const { return n_vertices_; }
  std::size_t base_vertex() const { return base_; }

  std::size_t color_count() const { return colors_.size(); }
  const std::vector<Color>& colors() const { return colors_; }
  const Color& color_at(std::size_t idx) const { return colors_[idx]; }
  std::size_t color_index(const Color& c) const;

  Color relation(std::size_t y, std::size_t z) const { return colors_[rel_index(y, z)]; }
  std::size_t rel_index(std::size_t y, std::size_t z) const {
    return rel_[y * n_vertices_ + z];
  }

  /// Vertices in relation `color_at(idx)` with the base vertex.
  const std::vector<std::uint32_t>& sphere(std::size_t color_idx) const {
    return spheres_[color_idx];
  }
  std::size_t sphere_of(std::size_t vertex) const { return sphere_of_[vertex]; }
  std::size_t sphere_pos(std::size_t vertex) const { return pos_in_sphere_[vertex]; }

 private:
  GDParams params_;
  std::size_t n_vertices_ = 0;
  std::size_t base_ = 0;
  std::vector<Color> colors_;
  std::vector<std::uint16_t> rel_;
  std::vector<std::vector<std::uint32_t>> spheres_;
  std::vector<std::uint32_t> sphere_of_;
  std::vector<std::uint32_t> pos_in_sphere_;
};

/// Dense square matrix of exact field scalars, indexed by vertices.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols, std::uint64_t p);
  static ExactMatrix identity(std::size_t n, std::uint64_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t characteristic() const { return p_; }

  Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix transposed() const;
  bool is_zero() const;
  bool operator==(const ExactMatrix& o) const;

 private:
  std::size_t rows_, cols_;
  std::uint64_t p_;
  std::vector<Scalar> a_;
};

/// Sparse block form of an algebra element: one dense block per anchor pair
/// with any nonzero entry. Same entries as the dense realization.
struct BlockMatrix {
  std::uint64_t p = 0;
  // (row sphere, col sphere) -> row-major k_r x k_c block
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<Scalar>> blocks;

  bool is_zero() const { return blocks.empty(); }
};

ExactMatrix adjacency_matrix(const VertexSpace& sp, const Color& g);
ExactMatrix dual_idempotent(const VertexSpace& sp, const Color& g);

BlockMatrix realize_blocks(const VertexSpace& sp, const AlgebraElement& x);
BlockMatrix realize_b2_label(const VertexSpace& sp, const B2Label& l);
ExactMatrix to_dense(const VertexSpace& sp, const BlockMatrix& m);
ExactMatrix realize(const VertexSpace& sp, const AlgebraElement& x);

BlockMatrix block_multiply(const VertexSpace& sp, const BlockMatrix& a, const BlockMatrix& b);
BlockMatrix block_add(const BlockMatrix& a, const BlockMatrix& b);
BlockMatrix block_sub(const BlockMatrix& a, const BlockMatrix& b);
BlockMatrix block_transpose(const VertexSpace& sp, const BlockMatrix& a);
bool block_equal(const BlockMatrix& a, const BlockMatrix& b);

/// |yR_h ∩ xR_i ∩ zR_j| for the base vertex x.
std::uint64_t triple_intersection(const VertexSpace& sp, std::size_t y, std::size_t z,
                                  const Color& h, const Color& i, const Color& j);

/// Dimension of the subalgebra generated by the adjacency matrices and the
/// dual idempotents, by span closure in block form.
std::size_t generated_algebra_dimension(const VertexSpace& sp);

/// Same closure over dense matrices; small inputs only, used to cross-check
/// the block representation.
std::size_t generated_algebra_dimension_dense(const VertexSpace& sp);

/// The characteristic-0 closure forced onto big integers; this is the
/// overflow fallback of generated_algebra_dimension, pinned by tests.
std::size_t generated_algebra_dimension_bigint(const VertexSpace& sp);

struct CheckResult {
  bool ok = true;
  std::string detail;
};

CheckResult verify_axioms(const VertexSpace& sp, bool exhaustive, std::uint64_t seed = 1);
CheckResult verify_dimension(const VertexSpace& sp);
CheckResult verify_basis_rank(const VertexSpace& sp);
CheckResult verify_products(const VertexSpace& sp, std::size_t sample_pairs, std::uint64_t seed);
CheckResult verify_center(const VertexSpace& sp);
CheckResult verify_ideal(const VertexSpace& sp);
CheckResult verify_nilpotency(const VertexSpace& sp);
CheckResult verify_corners(const VertexSpace& sp);
CheckResult verify_matrix_units(const VertexSpace& sp);
CheckResult verify_triple_regularity(const VertexSpace& sp, bool exhaustive,
                                     std::uint64_t seed = 1);

/// Row-major dump, scalars as decimal strings, header with the parameters.
void dump_matrix_csv(std::ostream& os, const VertexSpace& sp, const ExactMatrix& m,
                     const std::string& name);

}  // namespace gdta
