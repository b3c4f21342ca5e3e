#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "spinchain/errors.hpp"

namespace spinchain {

// Physical coordinate of every computation: coupling J (inverse transverse
// field), anisotropy gamma, DM strength D.
struct ModelParams {
    double J = 0.0;
    double gamma = 0.0;
    double D = 0.0;

    ModelParams() = default;
    ModelParams(double J, double gamma, double D) : J(J), gamma(gamma), D(D) { validate(); }

    void validate() const {
        if (!(std::isfinite(J) && std::isfinite(gamma) && std::isfinite(D)))
            throw Error("model parameters must be finite");
        if (gamma < -1.0 || gamma > 1.0)
            throw Error("anisotropy gamma must lie in [-1, 1], got " + std::to_string(gamma));
    }
};

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_subdivisions = 2000;
    std::vector<double> breakpoints;  // strictly increasing, inside (0, pi)

    void validate() const {
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
            throw Error("quadrature tolerances must be positive");
        if (max_subdivisions < 1)
            throw Error("max_subdivisions must be >= 1");
        for (std::size_t i = 1; i < breakpoints.size(); ++i)
            if (!(breakpoints[i] > breakpoints[i - 1]))
                throw Error("breakpoints must be strictly increasing");
    }
};

// Magnetization and the three two-point correlators at separation r.
struct CorrelationSet {
    int r = 1;
    double mz = 0.0;
    double xx = 0.0;
    double yy = 0.0;
    double zz = 0.0;
};

// Two-spin X-state in the basis (uu, ud, du, dd), u = +1 eigenstate of sigma^z.
//
//   [ a_plus   .       .      c_minus ]
//   [ .        b       c_plus .       ]
//   [ .        c_plus  b      .       ]
//   [ c_minus  .       .      a_minus ]
struct SpinPairState {
    double a_plus = 0.0;
    double a_minus = 0.0;
    double b = 0.0;
    double c_plus = 0.0;
    double c_minus = 0.0;

    Eigen::Matrix4cd matrix() const {
        Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
        m(0, 0) = a_plus;
        m(1, 1) = b;
        m(2, 2) = b;
        m(3, 3) = a_minus;
        m(0, 3) = c_minus;
        m(3, 0) = c_minus;
        m(1, 2) = c_plus;
        m(2, 1) = c_plus;
        return m;
    }

    double trace() const { return a_plus + a_minus + 2.0 * b; }

    // Analytic eigenvalues: two from the inner block, two from the outer.
    std::array<double, 4> eigenvalues() const {
        const double outer = std::sqrt(0.25 * (a_plus - a_minus) * (a_plus - a_minus) +
                                       c_minus * c_minus);
        const double mid = 0.5 * (a_plus + a_minus);
        return {mid + outer, mid - outer, b + c_plus, b - c_plus};
    }
};

struct MeasureSet {
    double qfi = 0.0;
    double c_l1 = 0.0;
    double c_rec = 0.0;  // bits
};

}  // namespace spinchain
