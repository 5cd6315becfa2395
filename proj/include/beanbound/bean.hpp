#pragma once

#include <complex>
#include <vector>

namespace beanbound {

/// The generator B(z) = sqrt(1 + tanh z) evaluated through complex
/// elementary functions (principal branch).
std::complex<double> bean_map(std::complex<double> z);

struct BeanPoint {
    double theta;
    std::complex<double> w; // B(e^{i theta})
};

/// Boundary curve of the bean domain: B(e^{i theta}) at `resolution` angles,
/// evaluated with the closed form (the Taylor series loses accuracy at
/// |z| = 1). Throws if resolution < 2.
std::vector<BeanPoint> bean_boundary(int resolution);

/// max over the curve of | |log(w^2 / (2 - w^2))| - 2 |; the boundary
/// characterization says the defining modulus equals 2 exactly on |z| = 1.
double bean_boundary_identity_dev(const std::vector<BeanPoint>& curve);

/// Series self-check: evaluate the order-`order` float Taylor series of B at
/// |z| = 0.99 over `angles` angles and return
/// max |B(z)^2 / (2 - B(z)^2) - e^{2z}|.
double bean_series_residual(int order = 64, int angles = 256);

} // namespace beanbound
