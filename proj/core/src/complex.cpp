#include "latpd/complex.hpp"

#include <algorithm>
#include <string>

namespace latpd {

namespace {

std::string simplex_str(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

} // namespace

SimplicialComplex SimplicialComplex::from_simplices(const std::vector<Simplex>& raw) {
  SimplicialComplex out;
  std::vector<Simplex> stack;
  for (const Simplex& s : raw) {
    if (s.empty()) fail(errc::empty_simplex, "simplices must be nonempty vertex lists");
    Simplex sorted = s;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
      if (sorted[i] == sorted[i + 1])
        fail(errc::duplicate_vertex_in_simplex, "repeated vertex in " + simplex_str(s));
    for (int v : sorted)
      if (v < 0) fail(errc::parse_error, "vertex ids must be non-negative");
    stack.push_back(std::move(sorted));
  }
  // Face closure by repeated boundary expansion.
  std::map<Simplex, int>& index = out.index_;
  while (!stack.empty()) {
    Simplex s = std::move(stack.back());
    stack.pop_back();
    if (index.count(s)) continue;
    index.emplace(s, 0);
    if (s.size() > 1)
      for (std::size_t skip = 0; skip < s.size(); ++skip) {
        Simplex face;
        face.reserve(s.size() - 1);
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != skip) face.push_back(s[i]);
        if (!index.count(face)) stack.push_back(std::move(face));
      }
  }
  // Canonical numbering: dimension first, lexicographic inside a dimension.
  std::vector<Simplex> all;
  all.reserve(index.size());
  for (const auto& [s, _] : index) all.push_back(s);
  std::sort(all.begin(), all.end(), [](const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  out.simplices_ = std::move(all);
  out.dim_position_.resize(out.simplices_.size());
  for (int id = 0; id < out.count(); ++id) {
    const Simplex& s = out.simplices_[id];
    out.index_[s] = id;
    int d = static_cast<int>(s.size()) - 1;
    out.dim_ = std::max(out.dim_, d);
    if (d >= static_cast<int>(out.by_dim_.size())) out.by_dim_.resize(d + 1);
    out.dim_position_[id] = static_cast<int>(out.by_dim_[d].size());
    out.by_dim_[d].push_back(id);
  }
  return out;
}

int SimplicialComplex::find(const Simplex& sorted_vertices) const {
  auto it = index_.find(sorted_vertices);
  return it == index_.end() ? -1 : it->second;
}

const std::vector<int>& SimplicialComplex::of_dimension(int dim) const {
  static const std::vector<int> none;
  if (dim < 0 || dim >= static_cast<int>(by_dim_.size())) return none;
  return by_dim_[dim];
}

std::vector<int> SimplicialComplex::faces(int id) const {
  const Simplex& s = simplices_[id];
  std::vector<int> out;
  if (s.size() <= 1) return out;
  for (std::size_t skip = 0; skip < s.size(); ++skip) {
    Simplex face;
    face.reserve(s.size() - 1);
    for (std::size_t i = 0; i < s.size(); ++i)
      if (i != skip) face.push_back(s[i]);
    out.push_back(find(face));
  }
  return out;
}

SimplicialComplex validate_complex(const std::vector<Simplex>& raw) {
  return SimplicialComplex::from_simplices(raw);
}

SimplexMask full_mask(const SimplicialComplex& complex) {
  return SimplexMask(complex.count(), 1);
}

SimplexMask mask_from_simplices(const SimplicialComplex& complex, const std::vector<Simplex>& raw) {
  SimplicialComplex sub = SimplicialComplex::from_simplices(raw);
  SimplexMask mask(complex.count(), 0);
  for (int id = 0; id < sub.count(); ++id) {
    int host = complex.find(sub.simplex(id));
    if (host < 0)
      fail(errc::not_a_subcomplex,
           "simplex " + simplex_str(sub.simplex(id)) + " is not in the ambient complex");
    mask[host] = 1;
  }
  return mask;
}

void require_subcomplex(const SimplicialComplex& complex, const SimplexMask& mask) {
  if (static_cast<int>(mask.size()) != complex.count())
    fail(errc::not_a_subcomplex, "mask size does not match the ambient complex");
  for (int id = 0; id < complex.count(); ++id) {
    if (!mask[id]) continue;
    for (int f : complex.faces(id))
      if (!mask[f])
        fail(errc::not_a_subcomplex, "face " + simplex_str(complex.simplex(f)) +
                                         " of " + simplex_str(complex.simplex(id)) + " is missing");
  }
}

bool mask_subset(const SimplexMask& inner, const SimplexMask& outer) {
  if (inner.size() != outer.size()) return false;
  for (std::size_t i = 0; i < inner.size(); ++i)
    if (inner[i] && !outer[i]) return false;
  return true;
}

GFMatrix::GFMatrix(int rows, int cols, int p) : rows_(rows), cols_(cols), p_(p) {
  data_.assign(static_cast<std::size_t>(rows_) * cols_, 0);
}

void GFMatrix::set(int r, int c, int64_t value) {
  int64_t v = value % p_;
  if (v < 0) v += p_;
  data_[static_cast<std::size_t>(c) * rows_ + r] = static_cast<int32_t>(v);
}

namespace {

int32_t mod_inverse(int32_t a, int32_t p) {
  // Fermat: p is prime and a != 0 mod p.
  int64_t result = 1, base = a % p, exp = p - 2;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<int32_t>(result);
}

// Column echelon elimination. Returns the pivot row of every column
// (-1 for dependent columns) and leaves `cols` reduced in place.
std::vector<int> eliminate_columns(std::vector<std::vector<int32_t>>& cols, int rows, int p) {
  std::vector<int> pivot_of_col(cols.size(), -1);
  std::vector<int> pivot_col_of_row(rows, -1);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    auto& col = cols[c];
    for (int r = 0; r < rows; ++r) {
      if (col[r] == 0) continue;
      int known = pivot_col_of_row[r];
      if (known < 0) {
        // Normalise so the pivot entry becomes 1.
        int32_t inv = mod_inverse(col[r], p);
        for (int i = 0; i < rows; ++i)
          col[i] = static_cast<int32_t>(static_cast<int64_t>(col[i]) * inv % p);
        pivot_of_col[c] = r;
        pivot_col_of_row[r] = static_cast<int>(c);
        break;
      }
      const auto& basis = cols[known];
      int64_t factor = col[r];
      for (int i = 0; i < rows; ++i)
        col[i] = static_cast<int32_t>(((col[i] - factor * basis[i]) % p + p) % p);
    }
  }
  return pivot_of_col;
}

} // namespace

int GFMatrix::rank() const {
  std::vector<std::vector<int32_t>> cols(cols_);
  for (int c = 0; c < cols_; ++c)
    cols[c].assign(data_.begin() + static_cast<std::size_t>(c) * rows_,
                   data_.begin() + static_cast<std::size_t>(c + 1) * rows_);
  auto pivots = eliminate_columns(cols, rows_, p_);
  int rank = 0;
  for (int p : pivots)
    if (p >= 0) ++rank;
  return rank;
}

GFMatrix GFMatrix::kernel_basis() const {
  // Reduce while tracking the combination that produced each column.
  std::vector<std::vector<int32_t>> cols(cols_), combo(cols_);
  for (int c = 0; c < cols_; ++c) {
    cols[c].assign(data_.begin() + static_cast<std::size_t>(c) * rows_,
                   data_.begin() + static_cast<std::size_t>(c + 1) * rows_);
    combo[c].assign(cols_, 0);
    combo[c][c] = 1;
  }
  std::vector<int> pivot_col_of_row(rows_, -1);
  std::vector<int> kernel_cols;
  for (int c = 0; c < cols_; ++c) {
    bool zeroed = true;
    for (int r = 0; r < rows_; ++r) {
      if (cols[c][r] == 0) continue;
      int known = pivot_col_of_row[r];
      if (known < 0) {
        int32_t inv = mod_inverse(cols[c][r], p_);
        for (int i = 0; i < rows_; ++i)
          cols[c][i] = static_cast<int32_t>(static_cast<int64_t>(cols[c][i]) * inv % p_);
        for (int i = 0; i < cols_; ++i)
          combo[c][i] = static_cast<int32_t>(static_cast<int64_t>(combo[c][i]) * inv % p_);
        pivot_col_of_row[r] = c;
        zeroed = false;
        break;
      }
      int64_t factor = cols[c][r];
      for (int i = 0; i < rows_; ++i)
        cols[c][i] = static_cast<int32_t>(((cols[c][i] - factor * cols[known][i]) % p_ + p_) % p_);
      for (int i = 0; i < cols_; ++i)
        combo[c][i] = static_cast<int32_t>(((combo[c][i] - factor * combo[known][i]) % p_ + p_) % p_);
    }
    if (zeroed) kernel_cols.push_back(c);
  }
  GFMatrix out(cols_, static_cast<int>(kernel_cols.size()), p_);
  for (std::size_t k = 0; k < kernel_cols.size(); ++k)
    for (int i = 0; i < cols_; ++i) out.set(i, static_cast<int>(k), combo[kernel_cols[k]][i]);
  return out;
}

GFMatrix GFMatrix::column_space_basis() const {
  std::vector<std::vector<int32_t>> cols(cols_);
  for (int c = 0; c < cols_; ++c)
    cols[c].assign(data_.begin() + static_cast<std::size_t>(c) * rows_,
                   data_.begin() + static_cast<std::size_t>(c + 1) * rows_);
  auto pivots = eliminate_columns(cols, rows_, p_);
  std::vector<int> keep;
  for (int c = 0; c < cols_; ++c)
    if (pivots[c] >= 0) keep.push_back(c);
  GFMatrix out(rows_, static_cast<int>(keep.size()), p_);
  for (std::size_t k = 0; k < keep.size(); ++k)
    for (int r = 0; r < rows_; ++r) out.set(r, static_cast<int>(k), at(r, keep[k]));
  return out;
}

GFMatrix GFMatrix::hstack(const GFMatrix& other) const {
  if (other.rows_ != rows_ || other.p_ != p_)
    fail(errc::dimension_mismatch, "cannot stack matrices over different ambient spaces");
  GFMatrix out(rows_, cols_ + other.cols_, p_);
  for (int c = 0; c < cols_; ++c)
    for (int r = 0; r < rows_; ++r) out.set(r, c, at(r, c));
  for (int c = 0; c < other.cols_; ++c)
    for (int r = 0; r < rows_; ++r) out.set(r, cols_ + c, other.at(r, c));
  return out;
}

GFMatrix GFMatrix::multiply(const GFMatrix& other) const {
  if (cols_ != other.rows_ || p_ != other.p_)
    fail(errc::dimension_mismatch, "matrix product shape mismatch");
  GFMatrix out(rows_, other.cols_, p_);
  for (int c = 0; c < other.cols_; ++c)
    for (int r = 0; r < rows_; ++r) {
      int64_t acc = 0;
      for (int k = 0; k < cols_; ++k) acc += static_cast<int64_t>(at(r, k)) * other.at(k, c);
      out.set(r, c, acc % p_);
    }
  return out;
}

bool GFMatrix::is_zero() const {
  for (int32_t v : data_)
    if (v != 0) return false;
  return true;
}

int dim_intersection(const GFMatrix& u, const GFMatrix& v) {
  if (u.rows() != v.rows() || u.modulus() != v.modulus())
    fail(errc::dimension_mismatch, "subspaces live in different ambient spaces");
  return u.rank() + v.rank() - u.hstack(v).rank();
}

FieldConfig validate_field(int p) {
  if (p < 2) fail(errc::not_prime, std::to_string(p) + " is not a prime");
  for (int d = 2; static_cast<int64_t>(d) * d <= p; ++d)
    if (p % d == 0) fail(errc::not_prime, std::to_string(p) + " is not a prime");
  if (p > 32749) fail(errc::not_prime, "primes above 32749 are not supported");
  return FieldConfig{p};
}

ChainContext::ChainContext(SimplicialComplex complex, FieldConfig field)
    : complex_(std::move(complex)), field_(field) {
  const int top_dim = complex_.dimension();
  boundaries_.resize(top_dim + 1);
  for (int d = 0; d <= top_dim; ++d) {
    const auto& here = complex_.of_dimension(d);
    const int rows = static_cast<int>(complex_.of_dimension(d - 1).size());
    GFMatrix m(rows, static_cast<int>(here.size()), field_.p);
    if (d > 0) {
      for (std::size_t c = 0; c < here.size(); ++c) {
        const Simplex& s = complex_.simplex(here[c]);
        // d-th face drops the vertex at position `skip`; sign alternates
        // with the canonical (sorted) vertex order.
        int sign = 1;
        for (std::size_t skip = 0; skip < s.size(); ++skip) {
          Simplex face;
          face.reserve(s.size() - 1);
          for (std::size_t i = 0; i < s.size(); ++i)
            if (i != skip) face.push_back(s[i]);
          int row = complex_.position_in_dimension(complex_.find(face));
          m.set(row, static_cast<int>(c), sign);
          sign = -sign;
        }
      }
    }
    boundaries_[d] = std::move(m);
  }
}

int ChainContext::chain_dim(int dim) const {
  return static_cast<int>(complex_.of_dimension(dim).size());
}

const GFMatrix& ChainContext::boundary(int dim) const {
  static const GFMatrix empty;
  if (dim < 0 || dim > complex_.dimension()) return empty;
  return boundaries_[dim];
}

GFMatrix ChainContext::cycle_basis(const SimplexMask& subcomplex, int dim) const {
  require_subcomplex(complex_, subcomplex);
  const auto& simplices = complex_.of_dimension(dim);
  std::vector<int> present;
  for (std::size_t pos = 0; pos < simplices.size(); ++pos)
    if (subcomplex[simplices[pos]]) present.push_back(static_cast<int>(pos));
  if (dim < 0 || dim > complex_.dimension() || present.empty())
    return GFMatrix(std::max(0, chain_dim(dim)), 0, field_.p);

  const GFMatrix& full = boundaries_[dim];
  GFMatrix restricted(full.rows(), static_cast<int>(present.size()), field_.p);
  for (std::size_t c = 0; c < present.size(); ++c)
    for (int r = 0; r < full.rows(); ++r) restricted.set(r, static_cast<int>(c), full.at(r, present[c]));
  GFMatrix kernel = restricted.kernel_basis(); // coordinates over `present`
  GFMatrix out(chain_dim(dim), kernel.cols(), field_.p);
  for (int c = 0; c < kernel.cols(); ++c)
    for (std::size_t k = 0; k < present.size(); ++k)
      out.set(present[k], c, kernel.at(static_cast<int>(k), c));
  return out;
}

GFMatrix ChainContext::boundary_basis(const SimplexMask& subcomplex, int dim) const {
  require_subcomplex(complex_, subcomplex);
  if (dim < 0 || dim + 1 > complex_.dimension())
    return GFMatrix(std::max(0, chain_dim(dim)), 0, field_.p);
  const auto& above = complex_.of_dimension(dim + 1);
  std::vector<int> present;
  for (std::size_t pos = 0; pos < above.size(); ++pos)
    if (subcomplex[above[pos]]) present.push_back(static_cast<int>(pos));
  const GFMatrix& full = boundaries_[dim + 1];
  GFMatrix image(full.rows(), static_cast<int>(present.size()), field_.p);
  for (std::size_t c = 0; c < present.size(); ++c)
    for (int r = 0; r < full.rows(); ++r) image.set(r, static_cast<int>(c), full.at(r, present[c]));
  return image.column_space_basis();
}

} // namespace latpd
