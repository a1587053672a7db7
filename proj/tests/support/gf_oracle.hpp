#pragma once

// Naive row-reduction oracle over GF(p), written independently of the column
// elimination used by the library. Only the complex's simplex enumeration is
// shared; boundary entries, ranks and kernels are rebuilt from scratch here.

#include <vector>

#include "latpd/complex.hpp"

namespace latpd::oracle {

using Rows = std::vector<std::vector<int>>;

inline int inverse_mod(int a, int p) {
  a = ((a % p) + p) % p;
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  return 0;
}

inline int row_rank_mod_p(Rows rows, int p) {
  const int n_rows = static_cast<int>(rows.size());
  const int n_cols = n_rows == 0 ? 0 : static_cast<int>(rows[0].size());
  int rank = 0;
  for (int col = 0; col < n_cols && rank < n_rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < n_rows; ++r)
      if (((rows[r][col] % p) + p) % p != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    int inv = inverse_mod(rows[rank][col], p);
    for (int c = 0; c < n_cols; ++c) rows[rank][c] = ((rows[rank][c] * inv) % p + p) % p;
    for (int r = 0; r < n_rows; ++r) {
      if (r == rank) continue;
      int factor = ((rows[r][col] % p) + p) % p;
      if (factor == 0) continue;
      for (int c = 0; c < n_cols; ++c)
        rows[r][c] = (((rows[r][c] - factor * rows[rank][c]) % p) + p) % p;
    }
    ++rank;
  }
  return rank;
}

// Boundary matrix of the dim-simplices present in `sub`; rows are indexed by
// all (dim-1)-simplices of the ambient complex, columns by the present
// simplices in canonical order.
inline Rows boundary_columns(const SimplicialComplex& complex, const SimplexMask& sub, int dim,
                             int p) {
  std::vector<int> cols;
  for (int id : complex.of_dimension(dim))
    if (sub[id]) cols.push_back(id);
  const int n_rows = static_cast<int>(complex.of_dimension(dim - 1).size());
  Rows rows(n_rows, std::vector<int>(cols.size(), 0));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Simplex& s = complex.simplex(cols[c]);
    if (s.size() == 1) continue;
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
      Simplex face;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != skip) face.push_back(s[i]);
      int row = complex.position_in_dimension(complex.find(face));
      int sign = skip % 2 == 0 ? 1 : p - 1;
      rows[row][c] = (rows[row][c] + sign) % p;
    }
  }
  return rows;
}

inline int count_in_dimension(const SimplicialComplex& complex, const SimplexMask& sub, int dim) {
  int n = 0;
  for (int id : complex.of_dimension(dim))
    if (sub[id]) ++n;
  return n;
}

// Kernel of the restricted boundary as row vectors over the ambient
// dim-simplex coordinates, one per free column of the reduced echelon form.
inline Rows cycle_vectors(const SimplicialComplex& complex, const SimplexMask& sub, int dim,
                          int p) {
  std::vector<int> ambient_pos;
  for (int id : complex.of_dimension(dim))
    if (sub[id]) ambient_pos.push_back(complex.position_in_dimension(id));
  Rows rows = boundary_columns(complex, sub, dim, p);
  const int n_cols = static_cast<int>(ambient_pos.size());
  const int width = static_cast<int>(complex.of_dimension(dim).size());

  std::vector<int> pivot_row_of_col(n_cols, -1);
  int rank = 0;
  for (int col = 0; col < n_cols && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (((rows[r][col] % p) + p) % p != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    int inv = inverse_mod(rows[rank][col], p);
    for (int c = 0; c < n_cols; ++c) rows[rank][c] = ((rows[rank][c] * inv) % p + p) % p;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank) continue;
      int factor = ((rows[r][col] % p) + p) % p;
      if (factor == 0) continue;
      for (int c = 0; c < n_cols; ++c)
        rows[r][c] = (((rows[r][c] - factor * rows[rank][c]) % p) + p) % p;
    }
    pivot_row_of_col[col] = rank;
    ++rank;
  }
  Rows kernel;
  for (int col = 0; col < n_cols; ++col) {
    if (pivot_row_of_col[col] >= 0) continue;
    std::vector<int> vec(width, 0);
    vec[ambient_pos[col]] = 1;
    for (int other = 0; other < col; ++other) {
      int r = pivot_row_of_col[other];
      if (r >= 0) vec[ambient_pos[other]] = ((-rows[r][col]) % p + p) % p;
    }
    kernel.push_back(std::move(vec));
  }
  return kernel;
}

// Boundary images of the (dim+1)-simplices of `sub` as row vectors over the
// ambient dim-simplex coordinates.
inline Rows boundary_vectors(const SimplicialComplex& complex, const SimplexMask& sub, int dim,
                             int p) {
  Rows matrix = boundary_columns(complex, sub, dim + 1, p);
  const int width = static_cast<int>(matrix.size());
  const std::size_t n_cols = matrix.empty() ? 0 : matrix[0].size();
  Rows out;
  for (std::size_t c = 0; c < n_cols; ++c) {
    std::vector<int> vec(width, 0);
    for (int r = 0; r < width; ++r) vec[r] = matrix[r][c];
    out.push_back(std::move(vec));
  }
  return out;
}

inline int cycle_rank(const SimplicialComplex& complex, const SimplexMask& sub, int dim, int p) {
  if (dim < 0) return 0;
  return count_in_dimension(complex, sub, dim) -
         row_rank_mod_p(boundary_columns(complex, sub, dim, p), p);
}

inline int boundary_rank(const SimplicialComplex& complex, const SimplexMask& sub, int dim,
                         int p) {
  return row_rank_mod_p(boundary_columns(complex, sub, dim + 1, p), p);
}

// dim(Z_dim(a_sub) cap B_dim(b_sub)) = dim Z + dim B - dim(Z + B)
inline int intersection_rank(const SimplicialComplex& complex, const SimplexMask& a_sub,
                             const SimplexMask& b_sub, int dim, int p) {
  Rows z = cycle_vectors(complex, a_sub, dim, p);
  Rows b = boundary_vectors(complex, b_sub, dim, p);
  const int z_rank = row_rank_mod_p(z, p);
  const int b_rank = row_rank_mod_p(b, p);
  Rows joint = z;
  joint.insert(joint.end(), b.begin(), b.end());
  return z_rank + b_rank - row_rank_mod_p(joint, p);
}

// The birth-death value of one interval, assembled entirely from oracle parts.
inline int64_t bd_value(const SimplicialComplex& complex, const SimplexMask& a_sub,
                        const SimplexMask& b_sub, bool hi_is_top, int dim, int p) {
  if (hi_is_top) return cycle_rank(complex, a_sub, dim, p);
  return intersection_rank(complex, a_sub, b_sub, dim, p);
}

} // namespace latpd::oracle
