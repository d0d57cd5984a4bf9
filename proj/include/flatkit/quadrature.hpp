#pragma once

#include <functional>

namespace flatkit {

// Recursive adaptive Simpson with Richardson correction; tol is absolute.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth = 48);

}  // namespace flatkit
