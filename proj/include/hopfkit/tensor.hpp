#pragma once

// Sparse linear maps and tensor elements. Structure constants of the large
// base-level doubles (dim 256) are produced by pushing basis elements through
// fixed compositions of small maps; this is the engine for that.

#include <cstdint>
#include <functional>
#include <vector>

#include "hopfkit/linalg.hpp"

namespace hk {

struct Term {
  std::uint64_t idx;
  Scalar c;
  bool operator==(const Term&) const = default;
};
using SparseVec = std::vector<Term>;  // sorted by idx, no zeros

// Column-sparse map: col(j) is the image of the j-th basis vector.
class LinMap {
 public:
  LinMap() = default;
  LinMap(std::size_t in, std::size_t out) : in_(in), out_(out), cols_(in) {}
  static LinMap from_matrix(const Matrix& m);
  Matrix to_matrix(const Field& F) const;

  std::size_t in_dim() const { return in_; }
  std::size_t out_dim() const { return out_; }
  const SparseVec& col(std::size_t j) const { return cols_[j]; }
  SparseVec& col(std::size_t j) { return cols_[j]; }
  Scalar entry(std::size_t i, std::size_t j) const;

 private:
  std::size_t in_ = 0, out_ = 0;
  std::vector<SparseVec> cols_;
};

// Element of V_1⊗...⊗V_k; the last factor varies fastest.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<std::size_t> dims) : dims_(std::move(dims)) {}
  static Tensor basis(const Field& F, std::vector<std::size_t> dims, std::uint64_t idx);
  static Tensor from_vector(const Vector& v);
  static Tensor from_sparse(std::size_t dim, const SparseVec& v);

  const std::vector<std::size_t>& dims() const { return dims_; }
  const SparseVec& terms() const { return terms_; }
  SparseVec& terms() { return terms_; }
  std::uint64_t total() const;
  bool empty() const { return terms_.empty(); }
  Vector dense() const;

  // Replace slots [pos, pos+count) by f (whose input is their tensor product)
  // with output factors out_dims (possibly none, for maps to k).
  Tensor& apply(const Field& F, std::size_t pos, std::size_t count, const LinMap& f,
                const std::vector<std::size_t>& out_dims);
  // Exchange slots pos and pos+1.
  Tensor& swap(const Field& F, std::size_t pos);
  // Insert new slots at pos holding the fixed element v (e.g. a unit or db).
  Tensor& insert(const Field& F, std::size_t pos, const Tensor& v);

  friend Tensor tensor_product(const Field& F, const Tensor& a, const Tensor& b);

 private:
  std::vector<std::size_t> dims_;
  SparseVec terms_;
};

Tensor tensor_product(const Field& F, const Tensor& a, const Tensor& b);

// Sorts, merges duplicate indices and drops zeros.
void normalize(const Field& F, SparseVec& v);

// Column-by-column evaluation of a morphism built by `body` on basis tensors.
LinMap eval_map(const Field& F, const std::vector<std::size_t>& in_dims, std::size_t out_dim,
                const std::function<void(Tensor&)>& body);
Matrix eval_matrix(const Field& F, const std::vector<std::size_t>& in_dims, std::size_t out_dim,
                   const std::function<void(Tensor&)>& body);

LinMap compose(const Field& F, const LinMap& a, const LinMap& b);  // a∘b
LinMap kron(const Field& F, const LinMap& a, const LinMap& b);
SparseVec apply(const Field& F, const LinMap& f, const SparseVec& v);

}  // namespace hk
