#pragma once

namespace tanlift {

// Value and first three derivatives of a scalar function at a point,
// propagated exactly through arithmetic (truncated Taylor algebra).
struct Jet3 {
    double v = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
    double d3 = 0.0;

    static Jet3 constant(double a) { return {a, 0.0, 0.0, 0.0}; }
    static Jet3 variable(double t) { return {t, 1.0, 0.0, 0.0}; }
};

inline Jet3 operator+(const Jet3& a, const Jet3& b) {
    return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2, a.d3 + b.d3};
}

inline Jet3 operator-(const Jet3& a, const Jet3& b) {
    return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2, a.d3 - b.d3};
}

inline Jet3 operator-(const Jet3& a) { return {-a.v, -a.d1, -a.d2, -a.d3}; }

// Leibniz rule up to third order: (fg)''' = f'''g + 3f''g' + 3f'g'' + fg'''.
inline Jet3 operator*(const Jet3& a, const Jet3& b) {
    return {a.v * b.v,
            a.d1 * b.v + a.v * b.d1,
            a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2,
            a.d3 * b.v + 3.0 * a.d2 * b.d1 + 3.0 * a.d1 * b.d2 + a.v * b.d3};
}

inline Jet3 operator*(double s, const Jet3& a) { return {s * a.v, s * a.d1, s * a.d2, s * a.d3}; }
inline Jet3 operator*(const Jet3& a, double s) { return s * a; }

// Quotient q = f/g from f = q g, solved order by order.
inline Jet3 operator/(const Jet3& f, const Jet3& g) {
    Jet3 q;
    q.v = f.v / g.v;
    q.d1 = (f.d1 - q.v * g.d1) / g.v;
    q.d2 = (f.d2 - 2.0 * q.d1 * g.d1 - q.v * g.d2) / g.v;
    q.d3 = (f.d3 - 3.0 * q.d2 * g.d1 - 3.0 * q.d1 * g.d2 - q.v * g.d3) / g.v;
    return q;
}

inline Jet3 operator/(const Jet3& f, double s) { return {f.v / s, f.d1 / s, f.d2 / s, f.d3 / s}; }

}  // namespace tanlift
