#include "ostrowski/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

#include "ostrowski/error.hpp"

namespace ostrowski {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

// Kronrod abscissae on [0, 1]; odd indices are the Gauss nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Cell {
    double lo;
    double hi;
    double value;
    double err;
    double floor;  // rounding floor, 50 eps * integral of |f|
};

struct ByError {
    bool operator()(const Cell& x, const Cell& y) const {
        if (x.err != y.err) return x.err < y.err;
        return x.lo > y.lo;
    }
};

Cell gauss_kronrod(const Integrand& f, double lo, double hi) {
    const double centre = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    double fv1[7];
    double fv2[7];
    const double fc = f(centre);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::fabs(resk);
    for (int j = 0; j < 7; ++j) {
        const double absc = half * kXgk[j];
        fv1[j] = f(centre - absc);
        fv2[j] = f(centre + absc);
        const double sum = fv1[j] + fv2[j];
        resk += kWgk[j] * sum;
        resabs += kWgk[j] * (std::fabs(fv1[j]) + std::fabs(fv2[j]));
        if (j % 2 == 1) resg += kWg[j / 2] * sum;
    }
    const double reskh = 0.5 * resk;
    double resasc = kWgk[7] * std::fabs(fc - reskh);
    for (int j = 0; j < 7; ++j) {
        resasc += kWgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));
    }

    const double ahalf = std::fabs(half);
    resabs *= ahalf;
    resasc *= ahalf;
    double err = std::fabs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    double floor = 0.0;
    if (resabs > kTiny / (50.0 * kEps)) {
        floor = 50.0 * kEps * resabs;
        err = std::max(floor, err);
    }
    if (!std::isfinite(resk) || !std::isfinite(err)) {
        std::ostringstream os;
        os << "non-finite integrand on [" << lo << ", " << hi << "]";
        throw ConvergenceError(os.str(), lo, hi);
    }
    return {lo, hi, resk * half, err, floor};
}

double neumaier_sum(const std::vector<double>& xs) {
    double sum = 0.0;
    double comp = 0.0;
    for (double x : xs) {
        const double t = sum + x;
        comp += std::fabs(sum) >= std::fabs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    return sum + comp;
}

Integrand wrap(const FunctionSpec& f) {
    return [&f](double t) {
        try {
            return f.eval(t);
        } catch (const DomainError& e) {
            std::ostringstream os;
            os << "integrand domain violation at t=" << t;
            throw DomainError(os.str(), e.subexpression());
        }
    };
}

}  // namespace

QuadResult integrate(const Integrand& f, double a, double b, const QuadOptions& opts,
                     std::span<const double> breakpoints) {
    if (!std::isfinite(a) || !std::isfinite(b) || a > b) {
        throw PreconditionError("integration requires finite a <= b");
    }
    if (a == b) return {0.0, 0.0, 0};

    std::vector<double> edges{a};
    for (double p : breakpoints) {
        if (p > a && p < b) edges.push_back(p);
    }
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::priority_queue<Cell, std::vector<Cell>, ByError> heap;
    double total = 0.0;
    double total_err = 0.0;
    double total_floor = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        Cell c = gauss_kronrod(f, edges[i], edges[i + 1]);
        total += c.value;
        total_err += c.err;
        total_floor += c.floor;
        heap.push(c);
    }

    auto converged = [&] {
        const double tol = std::max(opts.rel_tol * std::fabs(total), opts.abs_floor);
        return total_err <= tol || total_err <= 2.0 * total_floor;
    };

    while (!converged()) {
        const Cell worst = heap.top();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (heap.size() + 1 > opts.max_cells || !(mid > worst.lo && mid < worst.hi)) {
            std::ostringstream os;
            os.precision(17);
            os << "quadrature did not converge (estimate " << total_err << " after " << heap.size()
               << " cells); worst cell [" << worst.lo << ", " << worst.hi << "]";
            throw ConvergenceError(os.str(), worst.lo, worst.hi);
        }
        heap.pop();
        const Cell left = gauss_kronrod(f, worst.lo, mid);
        const Cell right = gauss_kronrod(f, mid, worst.hi);
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        total_floor += left.floor + right.floor - worst.floor;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum in a deterministic left-to-right order to shed the incremental drift.
    std::vector<Cell> cells;
    cells.reserve(heap.size());
    while (!heap.empty()) {
        cells.push_back(heap.top());
        heap.pop();
    }
    std::sort(cells.begin(), cells.end(), [](const Cell& x, const Cell& y) { return x.lo < y.lo; });
    std::vector<double> values;
    std::vector<double> errs;
    values.reserve(cells.size());
    errs.reserve(cells.size());
    for (const Cell& c : cells) {
        values.push_back(c.value);
        errs.push_back(c.err);
    }
    return {neumaier_sum(values), neumaier_sum(errs), cells.size()};
}


namespace {

// Appends sign changes and exact zeros of h on (lo, hi), refined by bisection.
// Samples where h throws are skipped.
void scan_sign_changes(const std::function<double(double)>& h, double lo, double hi, int samples,
                       std::vector<double>& out) {
    if (!(hi > lo)) return;
    auto safe = [&](double t) {
        try {
            return h(t);
        } catch (const Error&) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    };
    double t_prev = lo;
    double h_prev = safe(lo);
    for (int i = 1; i <= samples; ++i) {
        const double t = i == samples ? hi : lo + (hi - lo) * i / samples;
        const double h_t = safe(t);
        if (h_t == 0.0 && t != lo && t != hi) {
            out.push_back(t);
        } else if ((h_prev < 0.0 && h_t > 0.0) || (h_prev > 0.0 && h_t < 0.0)) {
            double l = t_prev;
            double r = t;
            const bool left_negative = h_prev < 0.0;
            for (int it = 0; it < 200; ++it) {
                const double m = 0.5 * (l + r);
                if (!(m > l && m < r)) break;
                const double hm = safe(m);
                if (hm == 0.0) {
                    l = r = m;
                    break;
                }
                if (std::isnan(hm)) break;
                if ((hm < 0.0) == left_negative) {
                    l = m;
                } else {
                    r = m;
                }
            }
            out.push_back(0.5 * (l + r));
        }
        t_prev = t;
        h_prev = h_t;
    }
}

void collect_abs_arguments(const Node& node, std::vector<NodePtr>& out) {
    if (node.op == Op::Abs) out.push_back(node.lhs);
    if (node.lhs) collect_abs_arguments(*node.lhs, out);
    if (node.rhs) collect_abs_arguments(*node.rhs, out);
}

std::vector<double> merged(std::vector<double> points, std::span<const double> extra) {
    points.insert(points.end(), extra.begin(), extra.end());
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

}  // namespace

std::vector<double> kink_points(const FunctionSpec& f, double a, double b) {
    std::vector<NodePtr> args;
    collect_abs_arguments(f.root(), args);
    std::vector<double> points;
    for (const auto& arg : args) {
        const FunctionSpec h = FunctionSpec::from_node(arg);
        scan_sign_changes([&](double t) { return h.eval(t); }, a, b, 1024, points);
    }
    return merged(std::move(points), {});
}

std::vector<double> abs_diff_breakpoints(const FunctionSpec& g, double x, double a, double b) {
    std::vector<double> points{x};
    const double gx = g.eval(x);
    auto h = [&](double t) { return t == x ? 0.0 : gx - g.eval(t); };
    scan_sign_changes(h, a, x, 256, points);
    scan_sign_changes(h, x, b, 256, points);
    return merged(std::move(points), kink_points(g, a, b));
}

QuadResult integrate_abs_diff(const FunctionSpec& g, double x, double a, double b, double rel_tol) {
    if (!(a <= x && x <= b)) throw PreconditionError("integrate_abs_diff requires a <= x <= b");
    const std::vector<double> breaks = abs_diff_breakpoints(g, x, a, b);
    const double gx = g.eval(x);
    const Integrand gw = wrap(g);
    QuadOptions opts;
    opts.rel_tol = rel_tol;
    return integrate([&](double t) { return std::fabs(gx - gw(t)); }, a, b, opts, breaks);
}

QuadResult integrate_weighted_abs_diff(const FunctionSpec& g, const FunctionSpec& w, double x, double a, double b,
                                       double rel_tol) {
    if (!(a <= x && x <= b)) throw PreconditionError("integrate_weighted_abs_diff requires a <= x <= b");
    const std::vector<double> breaks = merged(abs_diff_breakpoints(g, x, a, b), kink_points(w, a, b));
    const double gx = g.eval(x);
    const Integrand gw = wrap(g);
    const Integrand ww = wrap(w);
    QuadOptions opts;
    opts.rel_tol = rel_tol;
    return integrate([&](double t) { return std::max(ww(t), 0.0) * std::fabs(gx - gw(t)); }, a, b, opts, breaks);
}

QuadResult integrate(const FunctionSpec& f, double a, double b, double rel_tol, std::span<const double> breakpoints) {
    QuadOptions opts;
    opts.rel_tol = rel_tol;
    const std::vector<double> breaks = merged(kink_points(f, a, b), breakpoints);
    return integrate(wrap(f), a, b, opts, breaks);
}

}  // namespace ostrowski
