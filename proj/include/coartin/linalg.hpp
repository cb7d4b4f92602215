#pragma once

#include <optional>
#include <vector>

#include "coartin/field.hpp"

namespace coartin {

using Matrix = std::vector<std::vector<Scalar>>;

/// Rank by Gauss-Jordan elimination; the input is copied.
std::size_t rank(Matrix rows, const FieldSpec& field);

/// Some solution of M x = rhs, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<std::vector<Scalar>> solve(const Matrix& M, const std::vector<Scalar>& rhs, const FieldSpec& field);

Matrix identity(std::size_t n, const FieldSpec& field);
Matrix multiply(const Matrix& a, const Matrix& b, const FieldSpec& field);

}  // namespace coartin
