#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <random>
#include <span>

namespace rsb {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Rng = std::mt19937_64;

/// Solves A x = b for symmetric positive-definite A via Cholesky.
/// Throws InvalidArgument on shape mismatch or when A is not positive definite.
Vector solve_linear_system(const Matrix& a, const Vector& b);

/// Numerically stable softmax (max-subtracted). Throws on empty input.
Vector softmax(const Vector& v);

/// Index of the largest entry; ties go to the lowest index.
std::size_t argmax(std::span<const double> values);
std::size_t argmax(const Vector& values);

bool all_finite(const Matrix& m);

}  // namespace rsb
