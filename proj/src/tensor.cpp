#include "hopfkit/tensor.hpp"

#include <algorithm>

namespace hk {

void normalize(const Field& F, SparseVec& v) {
  std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.idx < b.idx; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < v.size();) {
    Term t = v[r++];
    while (r < v.size() && v[r].idx == t.idx) t.c = F.add(t.c, v[r++].c);
    if (!t.c.is_zero()) v[w++] = t;
  }
  v.resize(w);
}

LinMap LinMap::from_matrix(const Matrix& m) {
  LinMap f(m.cols(), m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!m.at(i, j).is_zero()) f.cols_[j].push_back({i, m.at(i, j)});
  return f;
}

Matrix LinMap::to_matrix(const Field& F) const {
  Matrix m(F, out_, in_);
  for (std::size_t j = 0; j < in_; ++j)
    for (auto& t : cols_[j]) m.at(t.idx, j) = t.c;
  return m;
}

Scalar LinMap::entry(std::size_t i, std::size_t j) const {
  for (auto& t : cols_[j])
    if (t.idx == i) return t.c;
  return {0, 1};
}

Tensor Tensor::basis(const Field& F, std::vector<std::size_t> dims, std::uint64_t idx) {
  Tensor t(std::move(dims));
  t.terms_.push_back({idx, F.one()});
  return t;
}

Tensor Tensor::from_vector(const Vector& v) {
  Tensor t({v.size()});
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) t.terms_.push_back({i, v[i]});
  return t;
}

Tensor Tensor::from_sparse(std::size_t dim, const SparseVec& v) {
  Tensor t({dim});
  t.terms_ = v;
  return t;
}

std::uint64_t Tensor::total() const {
  std::uint64_t n = 1;
  for (auto d : dims_) n *= d;
  return n;
}

Vector Tensor::dense() const {
  Vector v(total(), Scalar{0, 1});
  for (auto& t : terms_) v[t.idx] = t.c;
  return v;
}

Tensor& Tensor::apply(const Field& F, std::size_t pos, std::size_t count, const LinMap& f,
                      const std::vector<std::size_t>& out_dims) {
  if (pos + count > dims_.size()) throw Error(Error::Code::DimensionMismatch, "slot range");
  std::uint64_t mid = 1, right = 1, out_mid = 1;
  for (std::size_t i = pos; i < pos + count; ++i) mid *= dims_[i];
  for (std::size_t i = pos + count; i < dims_.size(); ++i) right *= dims_[i];
  for (auto d : out_dims) out_mid *= d;
  if (mid != f.in_dim() || out_mid != f.out_dim())
    throw Error(Error::Code::DimensionMismatch, "map does not fit the slots");
  SparseVec out;
  out.reserve(terms_.size() * 2);
  for (auto& t : terms_) {
    std::uint64_t r = t.idx % right;
    std::uint64_t m = (t.idx / right) % mid;
    std::uint64_t l = t.idx / (right * mid);
    for (auto& u : f.col(m)) out.push_back({(l * out_mid + u.idx) * right + r, F.mul(t.c, u.c)});
  }
  normalize(F, out);
  terms_ = std::move(out);
  std::vector<std::size_t> nd(dims_.begin(), dims_.begin() + pos);
  nd.insert(nd.end(), out_dims.begin(), out_dims.end());
  nd.insert(nd.end(), dims_.begin() + pos + count, dims_.end());
  dims_ = std::move(nd);
  return *this;
}

Tensor& Tensor::swap(const Field& F, std::size_t pos) {
  if (pos + 2 > dims_.size()) throw Error(Error::Code::DimensionMismatch, "slot range");
  const std::uint64_t a = dims_[pos], b = dims_[pos + 1];
  std::uint64_t right = 1;
  for (std::size_t i = pos + 2; i < dims_.size(); ++i) right *= dims_[i];
  for (auto& t : terms_) {
    std::uint64_t r = t.idx % right, m = (t.idx / right) % (a * b), l = t.idx / (right * a * b);
    t.idx = (l * a * b + (m % b) * a + m / b) * right + r;
  }
  normalize(F, terms_);
  std::swap(dims_[pos], dims_[pos + 1]);
  return *this;
}

Tensor& Tensor::insert(const Field& F, std::size_t pos, const Tensor& v) {
  std::uint64_t right = 1;
  for (std::size_t i = pos; i < dims_.size(); ++i) right *= dims_[i];
  const std::uint64_t vt = v.total();
  SparseVec out;
  for (auto& t : terms_) {
    std::uint64_t r = t.idx % right, l = t.idx / right;
    for (auto& u : v.terms_) out.push_back({(l * vt + u.idx) * right + r, F.mul(t.c, u.c)});
  }
  normalize(F, out);
  terms_ = std::move(out);
  dims_.insert(dims_.begin() + pos, v.dims_.begin(), v.dims_.end());
  return *this;
}

Tensor tensor_product(const Field& F, const Tensor& a, const Tensor& b) {
  Tensor t(a.dims_);
  t.dims_.insert(t.dims_.end(), b.dims_.begin(), b.dims_.end());
  const std::uint64_t bt = b.total();
  for (auto& x : a.terms_)
    for (auto& y : b.terms_) t.terms_.push_back({x.idx * bt + y.idx, F.mul(x.c, y.c)});
  normalize(F, t.terms_);
  return t;
}

LinMap eval_map(const Field& F, const std::vector<std::size_t>& in_dims, std::size_t out_dim,
                const std::function<void(Tensor&)>& body) {
  std::uint64_t n = 1;
  for (auto d : in_dims) n *= d;
  LinMap f(n, out_dim);
  for (std::uint64_t j = 0; j < n; ++j) {
    Tensor t = Tensor::basis(F, in_dims, j);
    body(t);
    if (t.total() != out_dim) throw Error(Error::Code::DimensionMismatch, "diagram output size");
    f.col(j) = t.terms();
  }
  return f;
}

Matrix eval_matrix(const Field& F, const std::vector<std::size_t>& in_dims, std::size_t out_dim,
                   const std::function<void(Tensor&)>& body) {
  return eval_map(F, in_dims, out_dim, body).to_matrix(F);
}

SparseVec apply(const Field& F, const LinMap& f, const SparseVec& v) {
  SparseVec out;
  for (auto& t : v)
    for (auto& u : f.col(t.idx)) out.push_back({u.idx, F.mul(t.c, u.c)});
  normalize(F, out);
  return out;
}

LinMap compose(const Field& F, const LinMap& a, const LinMap& b) {
  if (a.in_dim() != b.out_dim()) throw Error(Error::Code::DimensionMismatch, "compose shapes");
  LinMap c(b.in_dim(), a.out_dim());
  for (std::size_t j = 0; j < b.in_dim(); ++j) c.col(j) = apply(F, a, b.col(j));
  return c;
}

LinMap kron(const Field& F, const LinMap& a, const LinMap& b) {
  LinMap c(a.in_dim() * b.in_dim(), a.out_dim() * b.out_dim());
  for (std::size_t i = 0; i < a.in_dim(); ++i)
    for (std::size_t j = 0; j < b.in_dim(); ++j) {
      auto& col = c.col(i * b.in_dim() + j);
      for (auto& x : a.col(i))
        for (auto& y : b.col(j)) col.push_back({x.idx * b.out_dim() + y.idx, F.mul(x.c, y.c)});
      normalize(F, col);
    }
  return c;
}

}  // namespace hk
