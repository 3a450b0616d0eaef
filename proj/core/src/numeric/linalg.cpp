#include "rsbandit/numeric/linalg.hpp"

#include "rsbandit/errors.hpp"

#include <cmath>
#include <string>

namespace rsb {

Vector solve_linear_system(const Matrix& a, const Vector& b) {
    if (a.rows() != a.cols()) {
        throw InvalidArgument("solve_linear_system: matrix is " + std::to_string(a.rows()) + "x" +
                              std::to_string(a.cols()) + ", expected square");
    }
    if (a.rows() != b.size()) {
        throw InvalidArgument("solve_linear_system: dimension mismatch");
    }
    Eigen::LLT<Matrix> llt(a);
    if (llt.info() != Eigen::Success) {
        throw InvalidArgument("solve_linear_system: matrix is not positive definite");
    }
    return llt.solve(b);
}

Vector softmax(const Vector& v) {
    if (v.size() == 0) {
        throw InvalidArgument("softmax: empty input");
    }
    const double shift = v.maxCoeff();
    Vector e = (v.array() - shift).exp().matrix();
    return e / e.sum();
}

std::size_t argmax(std::span<const double> values) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] > values[best]) best = i;
    }
    return best;
}

std::size_t argmax(const Vector& values) {
    return argmax(std::span<const double>(values.data(), static_cast<std::size_t>(values.size())));
}

bool all_finite(const Matrix& m) { return m.allFinite(); }

}  // namespace rsb
