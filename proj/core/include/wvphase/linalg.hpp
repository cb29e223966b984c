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
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace wvphase {

using Complex = std::complex<double>;

/// Tolerance for identities that hold exactly in exact arithmetic.
inline constexpr double kExactTol = 1e-12;

/// Unit-norm state vector in C^d.
///
/// The only way to obtain a Ket is through normalization, so every Ket in
/// circulation has Euclidean norm 1 within kExactTol and finite amplitudes.
class Ket {
 public:
  /// Normalizes \p raw. Throws DomainError("degenerate state") when the norm
  /// is below kExactTol and ValidationError for empty or non-finite input.
  static Ket normalize(std::span<const Complex> raw);
  static Ket normalize(std::initializer_list<Complex> raw) {
    return normalize(std::span<const Complex>(raw.begin(), raw.size()));
  }

  std::size_t dim() const { return amplitudes_.size(); }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  auto begin() const { return amplitudes_.begin(); }
  auto end() const { return amplitudes_.end(); }

  /// e^{i chi} |this>; same ray.
  Ket with_phase(double chi) const;
  /// Componentwise complex conjugate in the computational basis.
  Ket conjugated() const;

 private:
  explicit Ket(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {}
  std::vector<Complex> amplitudes_;
};

/// Dense square complex matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  static Matrix identity(std::size_t dim);
  /// Builds from nested rows; throws ValidationError unless square.
  static Matrix from_rows(const std::vector<std::vector<Complex>>& rows);

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  Matrix adjoint() const;
  Complex trace() const;
  /// Largest entrywise modulus of (this - other).
  double max_abs_diff(const Matrix& other) const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(Complex s, const Matrix& a);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// M v for a raw vector; result is not normalized.
std::vector<Complex> apply(const Matrix& m, std::span<const Complex> v);
inline std::vector<Complex> apply(const Matrix& m, const Ket& v) { return apply(m, v.amplitudes()); }

/// |a><b|.
Matrix outer(const Ket& a, const Ket& b);

/// Matrix whose Hermiticity has been checked at construction.
class HermitianOperator {
 public:
  /// Throws ValidationError if |m(j,k) - conj(m(k,j))| exceeds \p tol.
  explicit HermitianOperator(Matrix m, double tol = kExactTol);

  std::size_t dim() const { return matrix_.dim(); }
  const Matrix& matrix() const { return matrix_; }

 private:
  Matrix matrix_;
};

/// Rank-1 projector |axis><axis|.
struct Projector {
  Ket axis;

  Matrix matrix() const { return outer(axis, axis); }
  HermitianOperator as_operator() const { return HermitianOperator(matrix()); }
};

/// <a|b>, conjugate-linear in the first argument. Throws ValidationError on a
/// dimension mismatch.
Complex inner(const Ket& a, const Ket& b);
Complex inner(std::span<const Complex> a, std::span<const Complex> b);

double norm(std::span<const Complex> v);

inline Ket normalize(std::span<const Complex> raw) { return Ket::normalize(raw); }

/// <psi|A|psi>. The imaginary residue must be below 1e-10 and is dropped.
double expectation(const HermitianOperator& a, const Ket& psi);

/// Haar-distributed ket: normalized vector of i.i.d. standard complex
/// Gaussians drawn from a generator seeded with \p seed. Requires d >= 2.
Ket haar_random_ket(int d, std::uint64_t seed);

/// Columns of a Haar-random unitary, as an orthonormal basis (Gram-Schmidt on
/// Haar kets).
std::vector<Ket> random_orthonormal_basis(int d, std::uint64_t seed);

/// Random Hermitian matrix with i.i.d. Gaussian entries (GUE-like).
HermitianOperator random_hermitian(int d, std::uint64_t seed);

/// U|psi> for a unitary U; renormalized against roundoff.
Ket transform(const Matrix& u, const Ket& psi);

/// Qubit ket with Bloch vector proportional to (x, y, z).
Ket ket_from_bloch(double x, double y, double z);

/// Bloch vector <sigma_x, sigma_y, sigma_z> of a qubit ket.
std::vector<double> bloch_vector(const Ket& psi);

Ket basis_ket(int d, int index);

HermitianOperator pauli_x();
HermitianOperator pauli_y();
HermitianOperator pauli_z();

}  // namespace wvphase
