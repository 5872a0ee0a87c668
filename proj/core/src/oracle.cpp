#include "gdta/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace gdta {

namespace {

std::string describe_label(const GDParams& params, const B2Label& l) {
  return b2_label_json(params, l);
}

}  // namespace

// ---------------------------------------------------------------------------
// VertexSpace

VertexSpace::VertexSpace(GDParams params, std::size_t max_vertices, std::size_t base_vertex)
    : params_(std::move(params)) {
  mpz_class total = params_.vertex_count();
  if (total > static_cast<unsigned long>(max_vertices))
    throw ResourceLimitError("vertex count " + total.get_str() + " exceeds the cap of " +
                             std::to_string(max_vertices));
  n_vertices_ = static_cast<std::size_t>(total.get_ui());
  colors_ = enumerate_colors(params_, 65535);
  base_ = base_vertex;
  if (base_ >= n_vertices_) throw std::invalid_argument("base vertex out of range");

  const std::size_t n = params_.n();
  std::vector<std::uint32_t> sizes(n);
  for (std::size_t a = 0; a < n; ++a)
    sizes[a] = static_cast<std::uint32_t>(params_.factors()[a].groups *
                                          params_.factors()[a].group_size);
  // coordinate a of vertex v, coordinate 0 most significant
  std::vector<std::vector<std::uint32_t>> coords(n_vertices_, std::vector<std::uint32_t>(n));
  for (std::size_t v = 0; v < n_vertices_; ++v) {
    std::size_t rest = v;
    for (std::size_t a = n; a-- > 0;) {
      coords[v][a] = static_cast<std::uint32_t>(rest % sizes[a]);
      rest /= sizes[a];
    }
  }

  rel_.resize(n_vertices_ * n_vertices_);
  for (std::size_t y = 0; y < n_vertices_; ++y) {
    for (std::size_t z = 0; z < n_vertices_; ++z) {
      Color c;
      for (std::size_t a = 0; a < n; ++a) {
        std::uint32_t cy = coords[y][a], cz = coords[z][a];
        if (cy == cz) continue;
        std::uint32_t m = static_cast<std::uint32_t>(params_.factors()[a].group_size);
        if (cy / m == cz / m)
          c.ones |= 1ull << a;
        else
          c.twos |= 1ull << a;
      }
      rel_[y * n_vertices_ + z] = static_cast<std::uint16_t>(color_index(c));
    }
  }

  spheres_.resize(colors_.size());
  sphere_of_.resize(n_vertices_);
  pos_in_sphere_.resize(n_vertices_);
  for (std::size_t v = 0; v < n_vertices_; ++v) {
    std::size_t ci = rel_index(base_, v);
    sphere_of_[v] = static_cast<std::uint32_t>(ci);
    pos_in_sphere_[v] = static_cast<std::uint32_t>(spheres_[ci].size());
    spheres_[ci].push_back(static_cast<std::uint32_t>(v));
  }
}

std::size_t VertexSpace::color_index(const Color& c) const {
  std::size_t idx = 0;
  for (std::size_t a = 0; a < params_.n(); ++a) idx = idx * 3 + static_cast<std::size_t>(c.entry(a));
  return idx;
}

// ---------------------------------------------------------------------------
// ExactMatrix

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::uint64_t p)
    : rows_(rows), cols_(cols), p_(p), a_(rows * cols, Scalar::zero(p)) {}

ExactMatrix ExactMatrix::identity(std::size_t n, std::uint64_t p) {
  ExactMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(p);
  return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_ || p_ != o.p_) throw std::invalid_argument("matrix shape mismatch");
  ExactMatrix r(rows_, o.cols_, p_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& y = o.at(k, j);
        if (!y.is_zero()) r.at(i, j) += x * y;
      }
    }
  }
  return r;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
    throw std::invalid_argument("matrix shape mismatch");
  ExactMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
    throw std::invalid_argument("matrix shape mismatch");
  ExactMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix r(cols_, rows_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && a_ == o.a_;
}

// ---------------------------------------------------------------------------
// Realization

ExactMatrix adjacency_matrix(const VertexSpace& sp, const Color& g) {
  const std::size_t n = sp.vertex_count();
  ExactMatrix m(n, n, sp.params().characteristic());
  std::size_t gi = sp.color_index(g);
  Scalar one = Scalar::one(sp.params().characteristic());
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z)
      if (sp.rel_index(y, z) == gi) m.at(y, z) = one;
  return m;
}

ExactMatrix dual_idempotent(const VertexSpace& sp, const Color& g) {
  const std::size_t n = sp.vertex_count();
  ExactMatrix m(n, n, sp.params().characteristic());
  Scalar one = Scalar::one(sp.params().characteristic());
  for (std::uint32_t v : sp.sphere(sp.color_index(g))) m.at(v, v) = one;
  return m;
}

namespace {

// Membership of each color in the aggregation class of (row, col, agg).
std::vector<char> member_mask(const VertexSpace& sp, const B2Label& l) {
  const GDParams& params = sp.params();
  UAnchor u = u_anchor(params, l.row, l.col);
  std::vector<char> mask(sp.color_count(), 0);
  for (std::size_t ci = 0; ci < sp.color_count(); ++ci) {
    const Color& a = sp.color_at(ci);
    if (!support_nonzero(params, l.row, l.col, a)) continue;
    if ((a.ones & u.ones_circ & ~l.agg.s1) != 0) continue;
    if ((a.twos & u.twos_bull & ~l.agg.s2) != 0) continue;
    if ((a.ones & u.twos & ~l.agg.s3) != 0) continue;
    mask[ci] = 1;
  }
  return mask;
}

}  // namespace

BlockMatrix realize_b2_label(const VertexSpace& sp, const B2Label& l) {
  const std::uint64_t p = sp.params().characteristic();
  BlockMatrix out;
  out.p = p;
  std::vector<char> mask = member_mask(sp, l);
  std::uint32_t gi = static_cast<std::uint32_t>(sp.color_index(l.row));
  std::uint32_t hi = static_cast<std::uint32_t>(sp.color_index(l.col));
  const auto& rows = sp.sphere(gi);
  const auto& cols = sp.sphere(hi);
  std::vector<Scalar> block(rows.size() * cols.size(), Scalar::zero(p));
  Scalar one = Scalar::one(p);
  bool any = false;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (mask[sp.rel_index(rows[r], cols[c])]) {
        block[r * cols.size() + c] = one;
        any = true;
      }
  if (any) out.blocks.emplace(std::make_pair(gi, hi), std::move(block));
  return out;
}

BlockMatrix realize_blocks(const VertexSpace& sp, const AlgebraElement& x) {
  const std::uint64_t p = sp.params().characteristic();
  BlockMatrix out;
  out.p = p;
  for (const auto& [l, coeff] : x.terms()) {
    BlockMatrix lb = realize_b2_label(sp, l);
    for (auto& [key, block] : lb.blocks) {
      auto [it, inserted] = out.blocks.try_emplace(
          key, std::vector<Scalar>(block.size(), Scalar::zero(p)));
      for (std::size_t i = 0; i < block.size(); ++i)
        if (!block[i].is_zero()) it->second[i] += block[i] * coeff;
    }
  }
  for (auto it = out.blocks.begin(); it != out.blocks.end();) {
    bool zero = std::all_of(it->second.begin(), it->second.end(),
                            [](const Scalar& s) { return s.is_zero(); });
    it = zero ? out.blocks.erase(it) : std::next(it);
  }
  return out;
}

ExactMatrix to_dense(const VertexSpace& sp, const BlockMatrix& m) {
  const std::size_t n = sp.vertex_count();
  ExactMatrix out(n, n, m.p);
  for (const auto& [key, block] : m.blocks) {
    const auto& rows = sp.sphere(key.first);
    const auto& cols = sp.sphere(key.second);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c)
        out.at(rows[r], cols[c]) = block[r * cols.size() + c];
  }
  return out;
}

ExactMatrix realize(const VertexSpace& sp, const AlgebraElement& x) {
  return to_dense(sp, realize_blocks(sp, x));
}

BlockMatrix block_multiply(const VertexSpace& sp, const BlockMatrix& a, const BlockMatrix& b) {
  if (a.p != b.p) throw std::invalid_argument("mixed characteristics");
  BlockMatrix out;
  out.p = a.p;
  for (const auto& [ka, va] : a.blocks) {
    std::size_t kr = sp.sphere(ka.first).size();
    std::size_t km = sp.sphere(ka.second).size();
    for (const auto& [kb, vb] : b.blocks) {
      if (kb.first != ka.second) continue;
      std::size_t kc = sp.sphere(kb.second).size();
      auto key = std::make_pair(ka.first, kb.second);
      auto [it, inserted] =
          out.blocks.try_emplace(key, std::vector<Scalar>(kr * kc, Scalar::zero(a.p)));
      for (std::size_t r = 0; r < kr; ++r)
        for (std::size_t m = 0; m < km; ++m) {
          const Scalar& x = va[r * km + m];
          if (x.is_zero()) continue;
          for (std::size_t c = 0; c < kc; ++c) {
            const Scalar& y = vb[m * kc + c];
            if (!y.is_zero()) it->second[r * kc + c] += x * y;
          }
        }
    }
  }
  for (auto it = out.blocks.begin(); it != out.blocks.end();) {
    bool zero = std::all_of(it->second.begin(), it->second.end(),
                            [](const Scalar& s) { return s.is_zero(); });
    it = zero ? out.blocks.erase(it) : std::next(it);
  }
  return out;
}

namespace {

BlockMatrix block_combine(const BlockMatrix& a, const BlockMatrix& b, bool subtract) {
  if (a.p != b.p) throw std::invalid_argument("mixed characteristics");
  BlockMatrix out = a;
  for (const auto& [key, block] : b.blocks) {
    auto [it, inserted] =
        out.blocks.try_emplace(key, std::vector<Scalar>(block.size(), Scalar::zero(a.p)));
    if (it->second.size() != block.size()) throw std::logic_error("block shape mismatch");
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (subtract)
        it->second[i] -= block[i];
      else
        it->second[i] += block[i];
    }
  }
  for (auto it = out.blocks.begin(); it != out.blocks.end();) {
    bool zero = std::all_of(it->second.begin(), it->second.end(),
                            [](const Scalar& s) { return s.is_zero(); });
    it = zero ? out.blocks.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace

BlockMatrix block_add(const BlockMatrix& a, const BlockMatrix& b) {
  return block_combine(a, b, false);
}

BlockMatrix block_sub(const BlockMatrix& a, const BlockMatrix& b) {
  return block_combine(a, b, true);
}

BlockMatrix block_transpose(const VertexSpace& sp, const BlockMatrix& a) {
  BlockMatrix out;
  out.p = a.p;
  for (const auto& [key, block] : a.blocks) {
    std::size_t kr = sp.sphere(key.first).size();
    std::size_t kc = sp.sphere(key.second).size();
    std::vector<Scalar> t(kc * kr, Scalar::zero(a.p));
    for (std::size_t r = 0; r < kr; ++r)
      for (std::size_t c = 0; c < kc; ++c) t[c * kr + r] = block[r * kc + c];
    out.blocks.emplace(std::make_pair(key.second, key.first), std::move(t));
  }
  return out;
}

bool block_equal(const BlockMatrix& a, const BlockMatrix& b) {
  return a.p == b.p && a.blocks == b.blocks;
}

std::uint64_t triple_intersection(const VertexSpace& sp, std::size_t y, std::size_t z,
                                  const Color& h, const Color& i, const Color& j) {
  std::size_t hi = sp.color_index(h), ji = sp.color_index(j);
  std::uint64_t count = 0;
  for (std::uint32_t w : sp.sphere(sp.color_index(i)))
    if (sp.rel_index(y, w) == hi && sp.rel_index(z, w) == ji) ++count;
  return count;
}

// ---------------------------------------------------------------------------
// Span closure over the generator blocks

namespace {

struct FpPolicy {
  std::uint64_t p;
  using Elem = std::uint64_t;

  void accumulate(std::vector<Elem>& w, const std::vector<Elem>& v,
                  const std::vector<std::vector<std::uint32_t>>& adj, std::size_t kc) const {
    for (std::size_t r = 0; r < adj.size(); ++r) {
      for (std::uint32_t z : adj[r]) {
        const Elem* src = v.data() + static_cast<std::size_t>(z) * kc;
        Elem* dst = w.data() + r * kc;
        for (std::size_t c = 0; c < kc; ++c) dst[c] += src[c];  // sums stay below 2^64
      }
      Elem* dst = w.data() + r * kc;
      for (std::size_t c = 0; c < kc; ++c) dst[c] %= p;
    }
  }

  // v has leading one at pivot; removes w's component there. Residues stay
  // below p < 2^31, so plain 64-bit products suffice.
  void eliminate(std::vector<Elem>& w, const std::vector<Elem>& v, std::size_t pivot) const {
    Elem c = w[pivot] % p;
    if (c == 0) return;
    for (std::size_t i = pivot; i < w.size(); ++i) {
      Elem sub = (c * v[i]) % p;
      w[i] = (w[i] + p - sub) % p;
    }
  }

  // Returns the pivot and scales it to one, or npos when w is zero.
  std::size_t normalize(std::vector<Elem>& w) const {
    std::size_t pivot = w.size();
    for (std::size_t i = 0; i < w.size(); ++i) {
      w[i] %= p;
      if (pivot == w.size() && w[i] != 0) pivot = i;
    }
    if (pivot == w.size()) return SIZE_MAX;
    Elem inv = invmod_u64(w[pivot], p);
    for (std::size_t i = pivot; i < w.size(); ++i) w[i] = mulmod_u64(w[i], inv, p);
    return pivot;
  }
};

struct OverflowSignal {};

// Integer fast path for characteristic zero; falls back to the big-integer
// policy through OverflowSignal when entries leave the 64-bit range.
struct I64Policy {
  using Elem = long long;

  void accumulate(std::vector<Elem>& w, const std::vector<Elem>& v,
                  const std::vector<std::vector<std::uint32_t>>& adj, std::size_t kc) const {
    for (std::size_t r = 0; r < adj.size(); ++r)
      for (std::uint32_t z : adj[r]) {
        const Elem* src = v.data() + static_cast<std::size_t>(z) * kc;
        Elem* dst = w.data() + r * kc;
        for (std::size_t c = 0; c < kc; ++c)
          if (__builtin_add_overflow(dst[c], src[c], &dst[c])) throw OverflowSignal{};
      }
  }

  void eliminate(std::vector<Elem>& w, const std::vector<Elem>& v, std::size_t pivot) const {
    if (w[pivot] == 0) return;
    __int128 a = v[pivot], b = w[pivot];
    scratch_.resize(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      __int128 r = a * static_cast<__int128>(w[i]);
      if (i >= pivot) r -= b * static_cast<__int128>(v[i]);
      scratch_[i] = r;
    }
    unsigned __int128 g = 0;
    for (const __int128& e : scratch_) {
      if (e != 0) g = gcd128(g, e < 0 ? static_cast<unsigned __int128>(-e)
                                      : static_cast<unsigned __int128>(e));
      if (g == 1) break;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      __int128 e = scratch_[i];
      if (g > 1) e /= static_cast<__int128>(g);
      // keep strictly inside the 64-bit range so negation stays safe
      if (e >= std::numeric_limits<long long>::max() ||
          e <= std::numeric_limits<long long>::min())
        throw OverflowSignal{};
      w[i] = static_cast<Elem>(e);
    }
  }

  std::size_t normalize(std::vector<Elem>& w) const {
    std::size_t pivot = SIZE_MAX;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] != 0) {
        pivot = i;
        break;
      }
    if (pivot == SIZE_MAX) return SIZE_MAX;
    unsigned long long g = 0;
    for (Elem e : w) {
      g = std::gcd(g, static_cast<unsigned long long>(e < 0 ? -e : e));
      if (g == 1) break;
    }
    if (g > 1)
      for (Elem& e : w) e /= static_cast<Elem>(g);
    if (w[pivot] < 0)
      for (Elem& e : w) e = -e;
    return pivot;
  }

 private:
  static unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
    while (b) {
      unsigned __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  mutable std::vector<__int128> scratch_;
};

struct ZPolicy {
  using Elem = mpz_class;

  void accumulate(std::vector<Elem>& w, const std::vector<Elem>& v,
                  const std::vector<std::vector<std::uint32_t>>& adj, std::size_t kc) const {
    for (std::size_t r = 0; r < adj.size(); ++r)
      for (std::uint32_t z : adj[r]) {
        const Elem* src = v.data() + static_cast<std::size_t>(z) * kc;
        Elem* dst = w.data() + r * kc;
        for (std::size_t c = 0; c < kc; ++c)
          if (src[c] != 0) dst[c] += src[c];
      }
  }

  void eliminate(std::vector<Elem>& w, const std::vector<Elem>& v, std::size_t pivot) const {
    if (w[pivot] == 0) return;
    mpz_class a = v[pivot], b = w[pivot];
    for (std::size_t i = 0; i < w.size(); ++i) {
      w[i] *= a;
      if (i >= pivot && v[i] != 0) w[i] -= b * v[i];
    }
    strip_content(w);
  }

  std::size_t normalize(std::vector<Elem>& w) const {
    std::size_t pivot = SIZE_MAX;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] != 0) {
        pivot = i;
        break;
      }
    if (pivot == SIZE_MAX) return SIZE_MAX;
    strip_content(w);
    if (w[pivot] < 0)
      for (std::size_t i = pivot; i < w.size(); ++i) w[i] = -w[i];
    return pivot;
  }

 private:
  static void strip_content(std::vector<Elem>& w) {
    mpz_class g = 0;
    for (const Elem& e : w) {
      if (e != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
      if (g == 1) return;
    }
    if (g <= 1) return;
    for (Elem& e : w)
      if (e != 0) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
  }
};

template <class Policy>
std::size_t closure_rank(const VertexSpace& sp, const Policy& pol) {
  using Elem = typename Policy::Elem;
  const std::size_t C = sp.color_count();
  const std::size_t N = sp.vertex_count();

  struct BasisVec {
    std::vector<Elem> v;
    std::size_t pivot;
  };
  // pair (g,h) -> echelon basis ordered by pivot
  std::vector<std::vector<BasisVec>> basis(C * C);

  // adjacency of the generator blocks: key (j, g_row, g_col)
  std::map<std::array<std::uint32_t, 3>, std::vector<std::vector<std::uint32_t>>> gen;
  for (std::size_t y = 0; y < N; ++y) {
    std::uint32_t gr = static_cast<std::uint32_t>(sp.sphere_of(y));
    for (std::size_t z = 0; z < N; ++z) {
      std::uint32_t j = static_cast<std::uint32_t>(sp.rel_index(y, z));
      std::uint32_t gc = static_cast<std::uint32_t>(sp.sphere_of(z));
      auto& adj = gen[{j, gr, gc}];
      if (adj.empty()) adj.resize(sp.sphere(gr).size());
      adj[sp.sphere_pos(y)].push_back(static_cast<std::uint32_t>(sp.sphere_pos(z)));
    }
  }
  // left-multiplication sources grouped by the middle sphere
  std::vector<std::vector<const std::pair<const std::array<std::uint32_t, 3>,
                                          std::vector<std::vector<std::uint32_t>>>*>>
      by_mid(C);
  for (const auto& entry : gen) by_mid[entry.first[2]].push_back(&entry);

  std::deque<std::pair<std::size_t, std::size_t>> work;  // (pair index, basis position)

  auto insert_vec = [&](std::size_t g, std::size_t h, std::vector<Elem>&& w) {
    auto& b = basis[g * C + h];
    // Basis vectors are zero before their pivot and sorted by pivot, so one
    // ascending elimination pass clears every pivot coordinate of w.
    for (const BasisVec& bv : b)
      if (w[bv.pivot] != Elem(0)) pol.eliminate(w, bv.v, bv.pivot);
    std::size_t pivot = pol.normalize(w);
    if (pivot == SIZE_MAX) return false;
    BasisVec nv{std::move(w), pivot};
    auto pos = std::lower_bound(b.begin(), b.end(), pivot,
                                [](const BasisVec& x, std::size_t pv) { return x.pivot < pv; });
    std::size_t at = static_cast<std::size_t>(pos - b.begin());
    b.insert(pos, std::move(nv));
    // positions after `at` shifted; queued indices must stay valid, so queue
    // records are (pair, pivot) instead of raw positions
    work.emplace_back(g * C + h, b[at].pivot);
    return true;
  };

  // seeds: dual idempotents and the generator blocks themselves
  for (std::size_t g = 0; g < C; ++g) {
    std::size_t k = sp.sphere(g).size();
    if (k == 0) continue;
    std::vector<Elem> id(k * k, Elem(0));
    for (std::size_t i = 0; i < k; ++i) id[i * k + i] = Elem(1);
    insert_vec(g, g, std::move(id));
  }
  for (const auto& [key, adj] : gen) {
    std::size_t kr = sp.sphere(key[1]).size();
    std::size_t kc = sp.sphere(key[2]).size();
    std::vector<Elem> w(kr * kc, Elem(0));
    for (std::size_t r = 0; r < adj.size(); ++r)
      for (std::uint32_t z : adj[r]) w[r * kc + z] = Elem(1);
    insert_vec(key[1], key[2], std::move(w));
  }

  while (!work.empty()) {
    auto [pairidx, pivot] = work.front();
    work.pop_front();
    std::size_t g = pairidx / C, h = pairidx % C;
    const auto& b = basis[pairidx];
    auto it = std::lower_bound(b.begin(), b.end(), pivot,
                               [](const BasisVec& x, std::size_t pv) { return x.pivot < pv; });
    if (it == b.end() || it->pivot != pivot) throw std::logic_error("lost a queued vector");
    std::vector<Elem> v = it->v;  // copy; the basis may reallocate below
    std::size_t kh = sp.sphere(h).size();
    for (const auto* entry : by_mid[g]) {
      const auto& key = entry->first;
      const auto& adj = entry->second;
      std::size_t kr = sp.sphere(key[1]).size();
      std::vector<Elem> w(kr * kh, Elem(0));
      pol.accumulate(w, v, adj, kh);
      insert_vec(key[1], h, std::move(w));
    }
  }

  std::size_t rank = 0;
  for (const auto& b : basis) rank += b.size();
  return rank;
}

}  // namespace

std::size_t generated_algebra_dimension(const VertexSpace& sp) {
  const std::uint64_t p = sp.params().characteristic();
  if (p == 0) {
    try {
      return closure_rank(sp, I64Policy{});
    } catch (const OverflowSignal&) {
      return generated_algebra_dimension_bigint(sp);
    }
  }
  if (p >= (1ull << 31)) throw ResourceLimitError("oracle characteristic must be below 2^31");
  return closure_rank(sp, FpPolicy{p});
}

std::size_t generated_algebra_dimension_bigint(const VertexSpace& sp) {
  if (sp.params().characteristic() != 0)
    throw std::logic_error("big-integer closure is the characteristic-0 path");
  return closure_rank(sp, ZPolicy{});
}

std::size_t generated_algebra_dimension_dense(const VertexSpace& sp) {
  const std::size_t N = sp.vertex_count();
  if (N > 40) throw ResourceLimitError("dense closure is for small vertex sets");

  struct Vec {
    std::vector<Scalar> v;
    std::size_t pivot;
  };
  std::vector<Vec> basis;  // echelon, by pivot
  std::vector<ExactMatrix> gens;
  for (const Color& c : sp.colors()) gens.push_back(adjacency_matrix(sp, c));
  for (const Color& c : sp.colors()) gens.push_back(dual_idempotent(sp, c));

  std::deque<ExactMatrix> work;
  auto insert_mat = [&](const ExactMatrix& m) {
    std::vector<Scalar> w;
    w.reserve(N * N);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) w.push_back(m.at(i, j));
    for (const Vec& b : basis)
      if (!w[b.pivot].is_zero()) {
        Scalar c = w[b.pivot];
        for (std::size_t i = b.pivot; i < w.size(); ++i) w[i] -= c * b.v[i];
      }
    std::size_t pivot = SIZE_MAX;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (!w[i].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot == SIZE_MAX) return false;
    Scalar inv = w[pivot].inverse();
    for (std::size_t i = pivot; i < w.size(); ++i) w[i] *= inv;
    auto pos = std::lower_bound(basis.begin(), basis.end(), pivot,
                                [](const Vec& x, std::size_t pv) { return x.pivot < pv; });
    basis.insert(pos, Vec{std::move(w), pivot});
    work.push_back(m);
    return true;
  };

  for (const ExactMatrix& g : gens) insert_mat(g);
  while (!work.empty()) {
    ExactMatrix m = work.front();
    work.pop_front();
    for (const ExactMatrix& g : gens) insert_mat(g * m);
  }
  return basis.size();
}

// ---------------------------------------------------------------------------
// Rank bookkeeping over block vectors with exact field scalars

namespace {

struct BlockCoord {
  std::pair<std::uint32_t, std::uint32_t> key;
  std::size_t offset;
  bool operator<(const BlockCoord& o) const {
    return key != o.key ? key < o.key : offset < o.offset;
  }
  bool operator==(const BlockCoord& o) const = default;
};

class BlockVectorBasis {
 public:
  explicit BlockVectorBasis(std::uint64_t p) : p_(p) {}

  // Reduces m against the basis; returns the residue.
  BlockMatrix reduce(BlockMatrix m) const {
    for (const Entry& e : basis_) {
      Scalar c = coord(m, e.pivot);
      if (!c.is_zero()) m = block_sub(m, scale(e.vec, c));
    }
    return m;
  }

  // Returns true when m enlarges the span.
  bool insert(const BlockMatrix& m) {
    BlockMatrix r = reduce(m);
    if (r.is_zero()) return false;
    BlockCoord pivot = first_coord(r);
    Scalar inv = coord(r, pivot).inverse();
    Entry e{scale(r, inv), pivot};
    auto pos = std::lower_bound(basis_.begin(), basis_.end(), e,
                                [](const Entry& a, const Entry& b) { return a.pivot < b.pivot; });
    basis_.insert(pos, std::move(e));
    return true;
  }

  std::size_t rank() const { return basis_.size(); }
  std::vector<BlockMatrix> vectors() const {
    std::vector<BlockMatrix> out;
    for (const Entry& e : basis_) out.push_back(e.vec);
    return out;
  }

 private:
  struct Entry {
    BlockMatrix vec;
    BlockCoord pivot;
  };

  static Scalar coord(const BlockMatrix& m, const BlockCoord& c) {
    auto it = m.blocks.find(c.key);
    if (it == m.blocks.end()) return Scalar::zero(m.p);
    return it->second[c.offset];
  }

  static BlockCoord first_coord(const BlockMatrix& m) {
    for (const auto& [key, block] : m.blocks)
      for (std::size_t i = 0; i < block.size(); ++i)
        if (!block[i].is_zero()) return BlockCoord{key, i};
    throw std::logic_error("first_coord on the zero vector");
  }

  static BlockMatrix scale(const BlockMatrix& m, const Scalar& c) {
    BlockMatrix out;
    out.p = m.p;
    for (const auto& [key, block] : m.blocks) {
      std::vector<Scalar> s(block.size(), Scalar::zero(m.p));
      for (std::size_t i = 0; i < block.size(); ++i)
        if (!block[i].is_zero()) s[i] = block[i] * c;
      out.blocks.emplace(key, std::move(s));
    }
    return out;
  }

  std::uint64_t p_;
  std::vector<Entry> basis_;
};

std::vector<BlockMatrix> realized_generators(const VertexSpace& sp) {
  std::vector<BlockMatrix> gens;
  const std::uint64_t p = sp.params().characteristic();
  Scalar one = Scalar::one(p);
  for (std::size_t j = 0; j < sp.color_count(); ++j) {
    // adjacency matrix of color j in block form
    BlockMatrix a;
    a.p = p;
    for (std::size_t g = 0; g < sp.color_count(); ++g) {
      const auto& rows = sp.sphere(g);
      if (rows.empty()) continue;
      for (std::size_t h = 0; h < sp.color_count(); ++h) {
        const auto& cols = sp.sphere(h);
        if (cols.empty()) continue;
        std::vector<Scalar> block(rows.size() * cols.size(), Scalar::zero(p));
        bool any = false;
        for (std::size_t r = 0; r < rows.size(); ++r)
          for (std::size_t c = 0; c < cols.size(); ++c)
            if (sp.rel_index(rows[r], cols[c]) == j) {
              block[r * cols.size() + c] = one;
              any = true;
            }
        if (any)
          a.blocks.emplace(std::make_pair(static_cast<std::uint32_t>(g),
                                          static_cast<std::uint32_t>(h)),
                           std::move(block));
      }
    }
    gens.push_back(std::move(a));
  }
  for (std::size_t g = 0; g < sp.color_count(); ++g) {
    const auto& rows = sp.sphere(g);
    if (rows.empty()) continue;
    BlockMatrix e;
    e.p = p;
    std::vector<Scalar> block(rows.size() * rows.size(), Scalar::zero(p));
    for (std::size_t r = 0; r < rows.size(); ++r) block[r * rows.size() + r] = one;
    e.blocks.emplace(
        std::make_pair(static_cast<std::uint32_t>(g), static_cast<std::uint32_t>(g)),
        std::move(block));
    gens.push_back(std::move(e));
  }
  return gens;
}

CheckResult fail(std::string detail) { return CheckResult{false, std::move(detail)}; }

}  // namespace

// ---------------------------------------------------------------------------
// Verification reports

CheckResult verify_axioms(const VertexSpace& sp, bool exhaustive, std::uint64_t seed) {
  const GDParams& params = sp.params();
  const std::size_t N = sp.vertex_count();
  const std::size_t C = sp.color_count();
  std::size_t zero_idx = sp.color_index(Color{});

  for (std::size_t v = 0; v < N; ++v)
    if (sp.rel_index(v, v) != zero_idx) return fail("diagonal pair not in the identity relation");
  for (std::size_t y = 0; y < N; ++y)
    for (std::size_t z = 0; z < N; ++z)
      if (sp.rel_index(y, z) != sp.rel_index(z, y)) return fail("relation table not symmetric");

  // sphere sizes against the closed-form valencies
  mpz_class total = 0;
  for (std::size_t ci = 0; ci < C; ++ci) {
    mpz_class k = valency(params, sp.color_at(ci));
    if (k != static_cast<unsigned long>(sp.sphere(ci).size()))
      return fail("sphere size disagrees with the valency of color " +
                  color_json(params, sp.color_at(ci)));
    total += k;
  }
  if (total != static_cast<unsigned long>(N)) return fail("valencies do not sum to |X|");

  // constant intersection numbers, equal to the closed form
  std::vector<std::uint64_t> table(C * C * C);
  for (std::size_t g = 0; g < C; ++g)
    for (std::size_t h = 0; h < C; ++h)
      for (std::size_t i = 0; i < C; ++i)
        table[(g * C + h) * C + i] =
            intersection_number(params, sp.color_at(g), sp.color_at(h), sp.color_at(i)).get_ui();

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (exhaustive) {
    pairs.reserve(N * N);
    for (std::size_t y = 0; y < N; ++y)
      for (std::size_t z = 0; z < N; ++z) pairs.emplace_back(y, z);
  } else {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 512; ++t) pairs.emplace_back(rng() % N, rng() % N);
  }
  std::vector<std::uint32_t> cnt(C * C);
  for (auto [y, z] : pairs) {
    std::fill(cnt.begin(), cnt.end(), 0);
    for (std::size_t a = 0; a < N; ++a) ++cnt[sp.rel_index(y, a) * C + sp.rel_index(a, z)];
    std::size_t i = sp.rel_index(y, z);
    for (std::size_t g = 0; g < C; ++g)
      for (std::size_t h = 0; h < C; ++h)
        if (cnt[g * C + h] != table[(g * C + h) * C + i])
          return fail("intersection count mismatch at colors (" +
                      color_json(params, sp.color_at(g)) + ", " +
                      color_json(params, sp.color_at(h)) + ", " +
                      color_json(params, sp.color_at(i)) + ")");
  }
  return CheckResult{};
}

CheckResult verify_dimension(const VertexSpace& sp) {
  std::size_t rank = generated_algebra_dimension(sp);
  mpz_class expect = dim_T(sp.params());
  if (expect != static_cast<unsigned long>(rank))
    return fail("generated dimension " + std::to_string(rank) + " != closed form " +
                expect.get_str());
  return CheckResult{};
}

CheckResult verify_basis_rank(const VertexSpace& sp) {
  const GDParams& params = sp.params();
  BlockVectorBasis basis(params.characteristic());
  std::size_t labels = 0;
  for (const B2Label& l : enumerate_b2(params)) {
    ++labels;
    BlockMatrix m = realize_b2_label(sp, l);
    if (m.is_zero()) return fail("aggregated label realizes to zero: " + describe_label(params, l));
    if (!basis.insert(m))
      return fail("aggregated labels are dependent at " + describe_label(params, l));
  }
  mpz_class expect = dim_T(params);
  if (expect != static_cast<unsigned long>(labels))
    return fail("label count disagrees with the dimension formula");
  if (basis.rank() != labels) return fail("realized basis rank mismatch");
  return CheckResult{};
}

CheckResult verify_products(const VertexSpace& sp, std::size_t sample_pairs, std::uint64_t seed) {
  const GDParams& params = sp.params();
  std::vector<B2Label> labels = enumerate_b2(params);
  std::vector<BlockMatrix> realized;
  realized.reserve(labels.size());
  for (const B2Label& l : labels) realized.push_back(realize_b2_label(sp, l));

  auto check_pair = [&](std::size_t i, std::size_t j) -> bool {
    AlgebraElement prod = multiply_b2(params, labels[i], labels[j]);
    BlockMatrix lhs = block_multiply(sp, realized[i], realized[j]);
    return block_equal(lhs, realize_blocks(sp, prod));
  };

  if (sample_pairs == 0 || sample_pairs >= labels.size() * labels.size()) {
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = 0; j < labels.size(); ++j)
        if (!check_pair(i, j))
          return fail("structure constant mismatch at (" + describe_label(params, labels[i]) +
                      ") * (" + describe_label(params, labels[j]) + ")");
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < sample_pairs; ++t) {
      std::size_t i = rng() % labels.size(), j = rng() % labels.size();
      if (!check_pair(i, j))
        return fail("structure constant mismatch at (" + describe_label(params, labels[i]) +
                    ") * (" + describe_label(params, labels[j]) + ")");
    }
  }
  return CheckResult{};
}

CheckResult verify_center(const VertexSpace& sp) {
  const GDParams& params = sp.params();
  auto basis = center_basis(params);
  if (center_dim(params) != static_cast<unsigned long>(basis.size()))
    return fail("center label count disagrees with the closed form");
  std::vector<BlockMatrix> gens = realized_generators(sp);
  BlockVectorBasis rank_basis(params.characteristic());
  for (const auto& [label, elem] : basis) {
    BlockMatrix m = realize_blocks(sp, elem);
    if (!rank_basis.insert(m)) return fail("center elements are dependent");
    for (const BlockMatrix& g : gens)
      if (!block_equal(block_multiply(sp, m, g), block_multiply(sp, g, m)))
        return fail("center element fails to commute with a generator");
  }
  return CheckResult{};
}

CheckResult verify_ideal(const VertexSpace& sp) {
  const GDParams& params = sp.params();
  std::vector<B2Label> rad = radical_basis(params);
  if (rad.empty()) return CheckResult{};
  BlockVectorBasis span(params.characteristic());
  std::vector<BlockMatrix> vecs;
  for (const B2Label& l : rad) {
    vecs.push_back(realize_b2_label(sp, l));
    if (!span.insert(vecs.back())) return fail("radical labels are dependent");
  }
  std::vector<BlockMatrix> gens = realized_generators(sp);
  for (const BlockMatrix& v : vecs)
    for (const BlockMatrix& g : gens) {
      if (!span.reduce(block_multiply(sp, g, v)).is_zero())
        return fail("radical span is not closed under left multiplication");
      if (!span.reduce(block_multiply(sp, v, g)).is_zero())
        return fail("radical span is not closed under right multiplication");
    }
  return CheckResult{};
}

namespace {

// Nilpotency index of the span of `seed` under products, bounded by `cap`.
std::size_t power_index(const VertexSpace& sp, const std::vector<BlockMatrix>& seed,
                        std::size_t cap) {
  if (seed.empty()) return 1;
  const std::uint64_t p = sp.params().characteristic();
  std::vector<BlockMatrix> current = seed;
  std::size_t k = 1;
  while (!current.empty()) {
    if (k > cap) return k;  // caller reports the overshoot
    BlockVectorBasis next(p);
    for (const BlockMatrix& v : current)
      for (const BlockMatrix& w : seed) next.insert(block_multiply(sp, v, w));
    current = next.vectors();
    ++k;
  }
  return k;
}

}  // namespace

CheckResult verify_nilpotency(const VertexSpace& sp) {
  const GDParams& params = sp.params();
  std::vector<BlockMatrix> rad;
  for (const B2Label& l : radical_basis(params)) rad.push_back(realize_b2_label(sp, l));
  std::size_t expect = radical_nilpotency_index(params);
  std::size_t got = power_index(sp, rad, expect + 1);
  if (got != expect)
    return fail("radical nilpotency index " + std::to_string(got) + " != predicted " +
                std::to_string(expect));
  return CheckResult{};
}

CheckResult verify_corners(const VertexSpace& sp) {
  const GDParams& params = sp.params();
  const std::uint64_t p = params.characteristic();
  for (const Color& g : enumerate_colors(params)) {
    std::vector<TripleSet> us = enumerate_U(params, g, g);
    BlockVectorBasis corner(p);
    for (const TripleSet& t : us)
      if (!corner.insert(realize_b2_label(sp, B2Label{g, g, t})))
        return fail("corner labels are dependent at color " + color_json(params, g));

    std::vector<BlockMatrix> rad;
    for (const B2Label& l : corner_radical_basis(params, g))
      rad.push_back(realize_b2_label(sp, l));
    mpz_class quotient = mpz_class(static_cast<unsigned long>(us.size())) -
                         static_cast<unsigned long>(rad.size());
    if (quotient != corner_quotient_dim(params, g))
      return fail("corner quotient dimension mismatch at color " + color_json(params, g));

    std::size_t expect = corner_nilpotency_index(params, g);
    std::size_t got = power_index(sp, rad, expect + 1);
    if (got != expect)
      return fail("corner nilpotency index mismatch at color " + color_json(params, g));

    // orthogonal idempotent family over the unit-weight triples
    std::vector<BlockMatrix> ds;
    std::vector<TripleSet> unit;
    for (const TripleSet& t : us)
      if (bad_set(params, t) == 0) {
        unit.push_back(t);
        ds.push_back(realize_blocks(sp, d_element(params, g, g, t)));
      }
    for (std::size_t i = 0; i < ds.size(); ++i)
      for (std::size_t j = 0; j < ds.size(); ++j) {
        BlockMatrix prod = block_multiply(sp, ds[i], ds[j]);
        bool ok = (i == j) ? block_equal(prod, ds[i]) : prod.is_zero();
        if (!ok) return fail("idempotent family fails at color " + color_json(params, g));
      }
  }
  return CheckResult{};
}

CheckResult verify_matrix_units(const VertexSpace& sp) {
  const GDParams& params = sp.params();
  const std::uint64_t p = params.characteristic();
  std::vector<DLabel> db = quotient_basis(params);
  std::vector<BlockMatrix> lifted;
  lifted.reserve(db.size());
  for (const DLabel& d : db)
    lifted.push_back(realize_blocks(sp, d_element(params, d.row, d.col, d.agg)));

  BlockVectorBasis rad_span(p);
  for (const B2Label& l : radical_basis(params)) rad_span.insert(realize_b2_label(sp, l));

  std::map<DLabel, std::size_t, DLess> index;
  for (std::size_t i = 0; i < db.size(); ++i) index.emplace(db[i], i);

  for (std::size_t i = 0; i < db.size(); ++i) {
    for (std::size_t j = 0; j < db.size(); ++j) {
      BlockMatrix prod = block_multiply(sp, lifted[i], lifted[j]);
      std::optional<DLabel> q = quotient_multiply(params, db[i], db[j]);
      BlockMatrix diff = q ? block_sub(prod, lifted[index.at(*q)]) : prod;
      if (!rad_span.reduce(diff).is_zero())
        return fail("quotient product disagrees with the lifted product modulo the radical");
    }
  }
  return CheckResult{};
}

CheckResult verify_triple_regularity(const VertexSpace& sp, bool exhaustive, std::uint64_t seed) {
  const std::size_t N = sp.vertex_count();
  const std::size_t C = sp.color_count();
  const std::size_t C3 = C * C * C;
  // reference counts per (rel(x,y), rel(x,z), rel(y,z)), set by the first witness
  std::vector<std::int64_t> ref(C3 * C3, -1);
  std::vector<std::uint32_t> cnt(C3);

  auto run_pair = [&](std::size_t y, std::size_t z) -> bool {
    std::fill(cnt.begin(), cnt.end(), 0);
    const std::size_t x = sp.base_vertex();
    for (std::size_t a = 0; a < N; ++a)
      ++cnt[(sp.rel_index(y, a) * C + sp.rel_index(x, a)) * C + sp.rel_index(z, a)];
    std::size_t cls = (sp.rel_index(x, y) * C + sp.rel_index(x, z)) * C + sp.rel_index(y, z);
    for (std::size_t t = 0; t < C3; ++t) {
      std::int64_t& r = ref[cls * C3 + t];
      if (r < 0)
        r = cnt[t];
      else if (r != cnt[t])
        return false;
    }
    return true;
  };

  if (exhaustive) {
    for (std::size_t y = 0; y < N; ++y)
      for (std::size_t z = 0; z < N; ++z)
        if (!run_pair(y, z)) return fail("triple count depends on the witness pair");
  } else {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 2048; ++t)
      if (!run_pair(rng() % N, rng() % N)) return fail("triple count depends on the witness pair");
  }
  return CheckResult{};
}

void dump_matrix_csv(std::ostream& os, const VertexSpace& sp, const ExactMatrix& m,
                     const std::string& name) {
  os << "# name=" << name << " params=" << format_factors(sp.params().factors())
     << " char=" << sp.params().characteristic() << " rows=" << m.rows() << " cols=" << m.cols()
     << " layout=row-major\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      const Scalar& s = m.at(r, c);
      os << (sp.params().characteristic() ? std::to_string(s.residue()) : s.rational().get_str());
    }
    os << '\n';
  }
}

}  // namespace gdta
