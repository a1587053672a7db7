#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "latpd/errors.hpp"

namespace latpd {

using Simplex = std::vector<int>; // sorted vertex ids

// A finite simplicial complex, closed under taking faces. Simplices are
// numbered 0..count()-1 in canonical order: by dimension, then
// lexicographically by vertex tuple. A subcomplex is a char mask over that
// numbering.
class SimplicialComplex {
public:
  SimplicialComplex() = default;

  // Face closure of the given simplices (maximal simplices suffice).
  static SimplicialComplex from_simplices(const std::vector<Simplex>& raw);

  int count() const { return static_cast<int>(simplices_.size()); }
  int dimension() const { return dim_; }
  const Simplex& simplex(int id) const { return simplices_[id]; }
  int find(const Simplex& sorted_vertices) const; // -1 when absent
  // ids of all simplices of one dimension, in canonical order
  const std::vector<int>& of_dimension(int dim) const;
  // position of a simplex within its dimension block
  int position_in_dimension(int id) const { return dim_position_[id]; }

  std::vector<int> faces(int id) const; // codimension-1 faces

  bool operator==(const SimplicialComplex& o) const { return simplices_ == o.simplices_; }

private:
  std::vector<Simplex> simplices_;
  std::map<Simplex, int> index_;
  std::vector<std::vector<int>> by_dim_;
  std::vector<int> dim_position_;
  int dim_ = -1;
};

SimplicialComplex validate_complex(const std::vector<Simplex>& raw);

using SimplexMask = std::vector<char>; // size == complex.count()

SimplexMask full_mask(const SimplicialComplex& complex);
SimplexMask mask_from_simplices(const SimplicialComplex& complex, const std::vector<Simplex>& raw);
// Throws not_a_subcomplex unless the mask is face-closed.
void require_subcomplex(const SimplicialComplex& complex, const SimplexMask& mask);
bool mask_subset(const SimplexMask& inner, const SimplexMask& outer);

// Dense matrix over GF(p). Columns are vectors; all bases produced below
// are column collections in the ambient chain coordinates of the full
// complex.
class GFMatrix {
public:
  GFMatrix() = default;
  GFMatrix(int rows, int cols, int p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int modulus() const { return p_; }
  int32_t at(int r, int c) const { return data_[static_cast<std::size_t>(c) * rows_ + r]; }
  void set(int r, int c, int64_t value);

  int rank() const;
  // Columns spanning the kernel, one per free column of the echelon form.
  GFMatrix kernel_basis() const;
  // A maximal independent subset of the columns.
  GFMatrix column_space_basis() const;
  GFMatrix hstack(const GFMatrix& other) const;
  GFMatrix multiply(const GFMatrix& other) const;
  bool is_zero() const;

private:
  int rows_ = 0, cols_ = 0, p_ = 2;
  std::vector<int32_t> data_; // column major
};

// dim(U cap V) = rank U + rank V - rank [U|V]; both in the same ambient space.
int dim_intersection(const GFMatrix& u, const GFMatrix& v);

struct FieldConfig {
  int p = 2;
};

FieldConfig validate_field(int p); // throws not_prime

// Chain-level data of a fixed complex over GF(p): per-dimension bases and
// boundary matrices. Immutable; rank queries allocate locally and can run
// concurrently.
class ChainContext {
public:
  ChainContext(SimplicialComplex complex, FieldConfig field);

  const SimplicialComplex& complex() const { return complex_; }
  int prime() const { return field_.p; }
  int chain_dim(int dim) const; // number of dim-simplices of the full complex

  // boundary operator C_dim -> C_{dim-1} of the full complex
  const GFMatrix& boundary(int dim) const;

  // Basis of the i-cycles of the subcomplex, ambient coordinates.
  GFMatrix cycle_basis(const SimplexMask& subcomplex, int dim) const;
  // Basis of the i-boundaries of the subcomplex, ambient coordinates.
  GFMatrix boundary_basis(const SimplexMask& subcomplex, int dim) const;

private:
  SimplicialComplex complex_;
  FieldConfig field_;
  std::vector<GFMatrix> boundaries_; // boundaries_[i] : C_i -> C_{i-1}
};

} // namespace latpd
