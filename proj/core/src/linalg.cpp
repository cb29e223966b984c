// Copyright 2026 The wvphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "wvphase/linalg.hpp"

#include <cmath>
#include <random>
#include <string>

#include "wvphase/errors.hpp"

namespace wvphase {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw ValidationError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                          " vs " + std::to_string(b) + ")");
  }
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

Ket Ket::normalize(std::span<const Complex> raw) {
  if (raw.empty()) throw ValidationError("state has no amplitudes");
  for (const auto& z : raw) {
    if (!finite(z)) throw ValidationError("state has non-finite amplitude");
  }
  const double n = wvphase::norm(raw);
  if (!(n > kExactTol)) throw DomainError("degenerate state: norm below 1e-12");
  std::vector<Complex> out(raw.begin(), raw.end());
  for (auto& z : out) z /= n;
  return Ket(std::move(out));
}

Ket Ket::with_phase(double chi) const {
  const Complex phase = std::polar(1.0, chi);
  std::vector<Complex> out = amplitudes_;
  for (auto& z : out) z *= phase;
  return Ket(std::move(out));
}

Ket Ket::conjugated() const {
  std::vector<Complex> out = amplitudes_;
  for (auto& z : out) z = std::conj(z);
  return Ket(std::move(out));
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Complex>>& rows) {
  Matrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw ValidationError("operator matrix is not square");
    for (std::size_t c = 0; c < rows.size(); ++c) {
      if (!finite(rows[r][c])) throw ValidationError("operator has non-finite entry");
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

Complex Matrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::max_abs_diff(const Matrix& other) const {
  require_same_dim(dim_, other.dim_, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
  return worst;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_dim(a.dim_, b.dim_, "matrix sum");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_dim(a.dim_, b.dim_, "matrix difference");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_dim(a.dim_, b.dim_, "matrix product");
  const std::size_t d = a.dim_;
  Matrix out(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t k = 0; k < d; ++k) {
      const Complex ark = a(r, k);
      for (std::size_t c = 0; c < d; ++c) out(r, c) += ark * b(k, c);
    }
  return out;
}

Matrix operator*(Complex s, const Matrix& a) {
  Matrix out = a;
  for (auto& z : out.data_) z *= s;
  return out;
}

std::vector<Complex> apply(const Matrix& m, std::span<const Complex> v) {
  require_same_dim(m.dim(), v.size(), "operator application");
  std::vector<Complex> out(v.size());
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < m.dim(); ++c) acc += m(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

Matrix outer(const Ket& a, const Ket& b) {
  require_same_dim(a.dim(), b.dim(), "outer product");
  Matrix m(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < b.dim(); ++c) m(r, c) = a[r] * std::conj(b[c]);
  return m;
}

HermitianOperator::HermitianOperator(Matrix m, double tol) : matrix_(std::move(m)) {
  if (matrix_.dim() == 0) throw ValidationError("operator has dimension 0");
  for (std::size_t r = 0; r < matrix_.dim(); ++r)
    for (std::size_t c = r; c < matrix_.dim(); ++c) {
      if (std::abs(matrix_(r, c) - std::conj(matrix_(c, r))) > tol) {
        throw ValidationError("operator is not Hermitian at entry (" + std::to_string(r) + "," +
                              std::to_string(c) + ")");
      }
    }
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  require_same_dim(a.size(), b.size(), "inner product");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

Complex inner(const Ket& a, const Ket& b) { return inner(a.amplitudes(), b.amplitudes()); }

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

double expectation(const HermitianOperator& a, const Ket& psi) {
  const Complex value = inner(psi.amplitudes(), apply(a.matrix(), psi));
  if (std::abs(value.imag()) > 1e-10) {
    throw Error("expectation value has imaginary residue " + std::to_string(value.imag()));
  }
  return value.real();
}

Ket haar_random_ket(int d, std::uint64_t seed) {
  if (d < 2) throw ValidationError("haar_random_ket requires d >= 2");
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> v(static_cast<std::size_t>(d));
  for (auto& z : v) {
    const double re = gauss(engine);
    const double im = gauss(engine);
    z = Complex(re, im);
  }
  return Ket::normalize(v);
}

std::vector<Ket> random_orthonormal_basis(int d, std::uint64_t seed) {
  std::vector<Ket> basis;
  basis.reserve(static_cast<std::size_t>(d));
  std::uint64_t stream = seed * 0x9E3779B97F4A7C15ULL + 1;
  while (basis.size() < static_cast<std::size_t>(d)) {
    const Ket candidate = haar_random_ket(d, stream++);
    std::vector<Complex> v(candidate.begin(), candidate.end());
    // Two Gram-Schmidt passes keep orthogonality at roundoff level.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        const Complex c = inner(b.amplitudes(), v);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * b[i];
      }
    }
    if (norm(v) < 1e-6) continue;
    basis.push_back(Ket::normalize(v));
  }
  return basis;
}

HermitianOperator random_hermitian(int d, std::uint64_t seed) {
  if (d < 1) throw ValidationError("random_hermitian requires d >= 1");
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(static_cast<std::size_t>(d));
  for (std::size_t r = 0; r < m.dim(); ++r) {
    m(r, r) = gauss(engine);
    for (std::size_t c = r + 1; c < m.dim(); ++c) {
      const double re = gauss(engine);
      const double im = gauss(engine);
      m(r, c) = Complex(re, im);
      m(c, r) = std::conj(m(r, c));
    }
  }
  return HermitianOperator(std::move(m));
}

Ket transform(const Matrix& u, const Ket& psi) { return Ket::normalize(apply(u, psi)); }

Ket ket_from_bloch(double x, double y, double z) {
  const double r = std::sqrt(x * x + y * y + z * z);
  if (!(r > kExactTol)) throw ValidationError("Bloch vector has zero length");
  x /= r;
  y /= r;
  z /= r;
  // (1+z, x+iy) has Bloch vector n except at the south pole.
  if (z < -1.0 + 1e-9) return basis_ket(2, 1);
  return Ket::normalize({Complex(1.0 + z, 0.0), Complex(x, y)});
}

std::vector<double> bloch_vector(const Ket& psi) {
  if (psi.dim() != 2) throw ValidationError("Bloch vector requires a qubit state");
  const Complex cross = std::conj(psi[0]) * psi[1];
  return {2.0 * cross.real(), 2.0 * cross.imag(), std::norm(psi[0]) - std::norm(psi[1])};
}

Ket basis_ket(int d, int index) {
  if (d < 1 || index < 0 || index >= d) {
    throw ValidationError("basis index " + std::to_string(index) + " out of range for d=" + std::to_string(d));
  }
  std::vector<Complex> v(static_cast<std::size_t>(d));
  v[static_cast<std::size_t>(index)] = 1.0;
  return Ket::normalize(v);
}

HermitianOperator pauli_x() { return HermitianOperator(Matrix::from_rows({{0.0, 1.0}, {1.0, 0.0}})); }

HermitianOperator pauli_y() {
  return HermitianOperator(Matrix::from_rows({{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}}));
}

HermitianOperator pauli_z() { return HermitianOperator(Matrix::from_rows({{1.0, 0.0}, {0.0, -1.0}})); }

}  // namespace wvphase
