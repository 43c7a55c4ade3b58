#include "exem/types.hpp"

#include <cmath>
#include <sstream>

namespace exem {

namespace {

template <typename Mat>
void check_finite(const Mat& m, const char* name) {
    if (m.allFinite()) return;
    for (Index j = 0; j < m.cols(); ++j) {
        for (Index i = 0; i < m.rows(); ++i) {
            if (!std::isfinite(m(i, j))) {
                std::ostringstream msg;
                msg << name << ": non-finite entry at (" << i << ", " << j << ")";
                throw std::invalid_argument(msg.str());
            }
        }
    }
}

}  // namespace

void require_finite(const Matrix& m, const char* name) { check_finite(m, name); }

void require_finite(const Vector& v, const char* name) { check_finite(v, name); }

void require_same_length(const Vector& u, const Vector& v, const char* where) {
    if (u.size() != v.size()) {
        std::ostringstream msg;
        msg << where << ": length mismatch (" << u.size() << " vs " << v.size() << ")";
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace exem
