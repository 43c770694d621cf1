#include "qdd/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace qdd {

namespace {

// 15-point Kronrod nodes on [-1, 1], positive half. xgk[7] = 0.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

constexpr double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

// Embedded 7-point Gauss weights; wg[3] belongs to the central node.
constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double a;
    double b;
    double result;
    double err;
};

// Worst error first; ties resolved toward the leftmost interval so the
// refinement order, and hence the arithmetic, is reproducible.
bool lower_priority(const Panel& x, const Panel& y) {
    if (x.err != y.err) return x.err < y.err;
    return x.a > y.a;
}

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double centr = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);
    const double eps = std::numeric_limits<double>::epsilon();

    double fv1[8];
    double fv2[8];
    const double fc = f(centr);
    double resg = fc * wg[3];
    double resk = fc * wgk[7];
    double resabs = std::abs(resk);
    fv1[7] = fc;
    fv2[7] = fc;

    for (int j = 0; j < 7; ++j) {
        const double absc = hlgth * xgk[j];
        const double f1 = f(centr - absc);
        const double f2 = f(centr + absc);
        fv1[j] = f1;
        fv2[j] = f2;
        resk += wgk[j] * (f1 + f2);
        resabs += wgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) resg += wg[j / 2] * (f1 + f2);  // j = 1, 3, 5 are Gauss nodes
    }

    const double reskh = resk * 0.5;
    double resasc = wgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += wgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

    const double dhlgth = std::abs(hlgth);
    resabs *= dhlgth;
    resasc *= dhlgth;
    double abserr = std::abs((resk - resg) * hlgth);
    if (resasc != 0.0 && abserr != 0.0)
        abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
    const double uflow = std::numeric_limits<double>::min();
    if (resabs > uflow / (50.0 * eps)) abserr = std::max(eps * 50.0 * resabs, abserr);

    return Panel{a, b, resk * hlgth, abserr};
}

double ordered_sum(std::vector<Panel>& panels) {
    std::sort(panels.begin(), panels.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    double sum = 0.0;
    double comp = 0.0;
    for (const Panel& p : panels) {
        const double y = p.result - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

double bessel_j_series(int n, double x) {
    // J_n(x) = sum_k (-1)^k (x/2)^{n+2k} / (k! (n+k)!), fast for |x| < 2
    const double h = 0.5 * x;
    double term = 1.0;
    for (int k = 1; k <= n; ++k) term *= h / k;
    double sum = term;
    for (int k = 1; k <= 60; ++k) {
        term *= -(h * h) / (k * (n + k));
        sum += term;
        if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

double bessel_j_miller(int n, double x) {
    const int scale_base = std::max(n, static_cast<int>(std::ceil(x)));
    const int m0 = scale_base + 20 + static_cast<int>(std::ceil(std::sqrt(40.0 * scale_base)));

    double jkp1 = 0.0;   // J_{k+1} trial
    double jk = 1e-30;   // J_k trial
    double norm = 0.0;   // accumulates J_0 + 2 sum_m J_{2m}
    double result = 0.0;
    if (m0 == n) result = jk;
    if (m0 % 2 == 0) norm += 2.0 * jk;

    for (int k = m0; k >= 1; --k) {
        const double jkm1 = (2.0 * k / x) * jk - jkp1;
        jkp1 = jk;
        jk = jkm1;
        const int idx = k - 1;
        if (idx == n) result = jk;
        if (idx % 2 == 0) norm += (idx == 0) ? jk : 2.0 * jk;
        if (std::abs(jk) > 1e250) {
            jk *= 1e-250;
            jkp1 *= 1e-250;
            norm *= 1e-250;
            result *= 1e-250;
        }
    }
    return result / norm;
}

}  // namespace

double bessel_jn(int order, double x) {
    if (order < 0) throw std::invalid_argument("bessel_jn: order must be >= 0");
    if (!(x >= 0.0)) throw std::domain_error("bessel_jn: x must be >= 0");
    if (x == 0.0) return order == 0 ? 1.0 : 0.0;
    if (x < 2.0) return bessel_j_series(order, x);
    return bessel_j_miller(order, x);
}

double integrate(const std::function<double(double)>& f, double lower, double upper,
                 const QuadratureSpec& spec, double oscillation_hint) {
    if (!(lower <= upper)) throw std::invalid_argument("integrate: requires lower <= upper");
    if (lower == upper) return 0.0;
    if (!(spec.rel_tol > 0.0) || !(spec.abs_tol > 0.0) || spec.max_subdivisions < 1)
        throw std::invalid_argument("integrate: bad quadrature spec");

    // Roughly three panels per expected oscillation, so the Kronrod rule
    // resolves each lobe before any refinement happens.
    int initial = 1;
    if (oscillation_hint > 0.0) {
        const double want = std::ceil(3.0 * oscillation_hint);
        initial = static_cast<int>(std::min(want, 4096.0));
        initial = std::max(initial, 1);
    }
    initial = std::min(initial, spec.max_subdivisions);

    std::vector<Panel> heap;
    heap.reserve(static_cast<std::size_t>(initial) + 64);
    double total = 0.0;
    double total_err = 0.0;
    const double width = (upper - lower) / initial;
    for (int i = 0; i < initial; ++i) {
        const double a = lower + i * width;
        const double b = (i + 1 == initial) ? upper : lower + (i + 1) * width;
        Panel p = gk15(f, a, b);
        if (!std::isfinite(p.result) || !std::isfinite(p.err))
            throw std::domain_error("integrate: integrand produced a non-finite value");
        total += p.result;
        total_err += p.err;
        heap.push_back(p);
    }
    std::make_heap(heap.begin(), heap.end(), lower_priority);

    int evaluations = initial;
    while (true) {
        const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
        if (total_err <= tol) break;
        if (evaluations + 2 > spec.max_subdivisions) {
            const double best = ordered_sum(heap);
            throw ConvergenceError("integrate: subdivision budget exhausted", best, total_err);
        }

        std::pop_heap(heap.begin(), heap.end(), lower_priority);
        const Panel worst = heap.back();
        heap.pop_back();

        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            heap.push_back(worst);
            const double best = ordered_sum(heap);
            throw ConvergenceError("integrate: interval too small to split further", best,
                                   total_err);
        }

        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        evaluations += 2;
        if (!std::isfinite(left.result) || !std::isfinite(right.result))
            throw std::domain_error("integrate: integrand produced a non-finite value");

        total += left.result + right.result - worst.result;
        total_err += left.err + right.err - worst.err;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), lower_priority);
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), lower_priority);
    }

    return ordered_sum(heap);
}

}  // namespace qdd
