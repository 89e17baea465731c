#include "contractions.hpp"

namespace tanlift::detail {

RiemannContractions contract_riemann(const BaseGeometry& geom, const Vec& y) {
    const int n = geom.n;
    RiemannContractions c{Ten3(n), Ten3(n)};
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double acc = 0.0, acc_low = 0.0;
                for (int m = 0; m < n; ++m) {
                    acc += y(m) * geom.riemann(a, m, i, j);
                    acc_low += y(m) * geom.riemann_low(a, m, i, j);
                }
                c.r0(a, i, j) = acc;
                c.r0_low(a, i, j) = acc_low;
            }
    return c;
}

NablaRiemannContractions contract_nabla_riemann(const BaseGeometry& geom, const Vec& y) {
    const int n = geom.n;
    NablaRiemannContractions c{Ten4(n), Ten4(n)};
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    double acc = 0.0, acc_low = 0.0;
                    for (int m = 0; m < n; ++m) {
                        acc += y(m) * geom.nabla_riemann(i, a, m, k, l);
                        double low = 0.0;
                        for (int b = 0; b < n; ++b)
                            low += geom.g(a, b) * geom.nabla_riemann(i, b, m, k, l);
                        acc_low += y(m) * low;
                    }
                    c.nr0(i, a, k, l) = acc;
                    c.nr0_low(i, a, k, l) = acc_low;
                }
    return c;
}

}  // namespace tanlift::detail
