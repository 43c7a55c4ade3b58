#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <vector>

namespace exem {

// All numerics are double precision; 32-bit floats appear only in file I/O
// with explicit widening on load.
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// Class labels are strings at every public surface; modules map them to
// dense indices internally where needed.
using ClassId = std::string;

/// Throws std::invalid_argument if any entry is NaN or infinite.
void require_finite(const Matrix& m, const char* name);
void require_finite(const Vector& v, const char* name);

/// Throws std::invalid_argument unless u and v have equal length.
void require_same_length(const Vector& u, const Vector& v, const char* where);

}  // namespace exem
