#include "optobec/random_states.hpp"

#include <cmath>

namespace optobec {

Eigen::MatrixXd expm(const Eigen::MatrixXd& a) {
    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    double s = 1.0;
    while (norm * s > 0.5) {
        s *= 0.5;
        ++squarings;
    }
    const Eigen::MatrixXd t = a * s;
    Eigen::MatrixXd term = Eigen::MatrixXd::Identity(a.rows(), a.cols());
    Eigen::MatrixXd sum = term;
    for (int k = 1; k <= 20; ++k) {
        term = (term * t) / double(k);
        sum += term;
    }
    for (int k = 0; k < squarings; ++k) sum = sum * sum;
    return sum;
}

Eigen::MatrixXd random_symplectic(std::mt19937_64& rng, int n_modes, double scale) {
    const int dim = 2 * n_modes;
    std::uniform_real_distribution<double> u(-scale, scale);
    Eigen::MatrixXd h(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) h(i, j) = h(j, i) = u(rng);
    Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(dim, dim);
    for (int k = 0; k < n_modes; ++k) {
        sigma(2 * k, 2 * k + 1) = 1.0;
        sigma(2 * k + 1, 2 * k) = -1.0;
    }
    return expm(sigma * h);
}

Eigen::MatrixXd random_physical_covariance(std::mt19937_64& rng, int n_modes,
                                           double nu_max, double squeeze) {
    const int dim = 2 * n_modes;
    std::uniform_real_distribution<double> unu(0.5, nu_max);
    Eigen::VectorXd d(dim);
    for (int k = 0; k < n_modes; ++k) d(2 * k) = d(2 * k + 1) = unu(rng);
    const Eigen::MatrixXd s = random_symplectic(rng, n_modes, squeeze);
    return s * d.asDiagonal() * s.transpose();
}

} // namespace optobec
