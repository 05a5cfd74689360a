#include "hh/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "hh/errors.hpp"

namespace hh {

namespace {

// Gauss-Kronrod 15-point abscissae (descending, last is the centre) and
// weights; the Gauss 7-point rule uses every second Kronrod node.
constexpr std::array<double, 8> kXgk{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kGradingRatio = 0.25;
constexpr double kSmallestPanel = 1e-300;

struct Panel {
    double lo;
    double hi;
    double value;
    double error;
};

struct ByError {
    bool operator()(const Panel& x, const Panel& y) const noexcept {
        if (x.error != y.error) {
            return x.error < y.error;
        }
        return x.lo > y.lo;
    }
};

class Kronrod {
public:
    explicit Kronrod(const std::function<double(double)>& f) : f_(f) {}

    Panel apply(double lo, double hi) {
        const double centre = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        const double fc = sample(centre);
        double kronrod = fc * kWgk[7];
        double gauss = fc * kWg[3];
        for (std::size_t j = 0; j < 7; ++j) {
            const double dx = half * kXgk[j];
            const double pair = sample(centre - dx) + sample(centre + dx);
            kronrod += kWgk[j] * pair;
            if (j % 2 == 1) {
                gauss += kWg[j / 2] * pair;
            }
        }
        kronrod *= half;
        gauss *= half;
        return Panel{lo, hi, kronrod, std::fabs(kronrod - gauss)};
    }

    std::size_t evaluations() const noexcept { return evaluations_; }

private:
    double sample(double x) {
        ++evaluations_;
        const double v = f_(x);
        if (!std::isfinite(v)) {
            throw QuadratureError("non-finite integrand sample at t = " + std::to_string(x));
        }
        return v;
    }

    const std::function<double(double)>& f_;
    std::size_t evaluations_ = 0;
};

// Points lo < ... < hi clustering geometrically toward `toward` (either lo or hi).
std::vector<double> graded_points(double lo, double hi, bool toward_lo) {
    std::vector<double> pts;
    const double anchor = toward_lo ? lo : hi;
    double w = (hi - lo) * kGradingRatio;
    while (w > kSmallestPanel) {
        const double x = toward_lo ? anchor + w : anchor - w;
        if (x == anchor) {
            break;
        }
        pts.push_back(x);
        w *= kGradingRatio;
    }
    return pts;
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadOptions& options) {
    if (!std::isfinite(a) || !std::isfinite(b) || a > b) {
        throw ParameterError("integrate: need finite a <= b");
    }
    if (!(options.rel_tol > 0.0) || !(options.abs_tol >= 0.0) ||
        !std::isfinite(options.rel_tol)) {
        throw ParameterError("integrate: invalid tolerance");
    }
    if (options.max_panels < 1) {
        throw ParameterError("integrate: max_panels must be positive");
    }
    for (double bp : options.breakpoints) {
        if (!(bp >= a && bp <= b)) {
            throw ParameterError("integrate: breakpoint " + std::to_string(bp) +
                                 " outside [a, b]");
        }
    }
    QuadResult result;
    if (a == b) {
        result.converged = true;
        return result;
    }

    std::vector<double> cuts{a, b};
    for (double bp : options.breakpoints) {
        if (bp > a && bp < b) {
            cuts.push_back(bp);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    if (options.singular_lo) {
        auto extra = graded_points(cuts[0], cuts[1], true);
        cuts.insert(cuts.end(), extra.begin(), extra.end());
    }
    if (options.singular_hi) {
        const std::size_t n = cuts.size();
        auto extra = graded_points(cuts[n - 2], cuts[n - 1], false);
        cuts.insert(cuts.end(), extra.begin(), extra.end());
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    Kronrod rule(f);
    std::priority_queue<Panel, std::vector<Panel>, ByError> heap;
    std::vector<Panel> frozen;
    double total = 0.0;
    double error = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Panel p = rule.apply(cuts[i], cuts[i + 1]);
        total += p.value;
        error += p.error;
        heap.push(p);
    }

    auto target = [&] { return std::max(options.rel_tol * std::fabs(total), options.abs_tol); };
    std::size_t panels = heap.size();
    while (error > target() && !heap.empty() && panels < options.max_panels) {
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi)) {
            frozen.push_back(worst);
            continue;
        }
        Panel left = rule.apply(worst.lo, mid);
        Panel right = rule.apply(mid, worst.hi);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++panels;
    }

    // Re-sum in position order so the result does not depend on heap history.
    std::vector<Panel> all = std::move(frozen);
    all.reserve(all.size() + heap.size());
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.lo < y.lo; });
    double value = 0.0;
    double err = 0.0;
    for (const Panel& p : all) {
        value += p.value;
        err += p.error;
    }
    result.value = value;
    result.err_estimate = err;
    result.evaluations = rule.evaluations();
    result.converged = err <= std::max(options.rel_tol * std::fabs(value), options.abs_tol);
    return result;
}

QuadResult integrate(const std::function<double(double)>& f, double a, double b, double tol,
                     std::span<const double> breakpoints) {
    QuadOptions options;
    options.rel_tol = tol;
    options.breakpoints.assign(breakpoints.begin(), breakpoints.end());
    return integrate(f, a, b, options);
}

double mean_integral(const FunctionSpec& f, double a, double b, double tol) {
    if (!(a < b)) {
        throw ParameterError("mean_integral: degenerate interval (need a < b)");
    }
    if (!f.domain().contains(Interval{a, b})) {
        throw DomainError("mean_integral: [a, b] outside the domain of '" + f.id() + "'");
    }
    const QuadResult r = integrate([&f](double x) { return f.eval(x); }, a, b, tol);
    if (!r.converged) {
        throw QuadratureError("mean_integral: quadrature did not converge for '" + f.id() + "'");
    }
    return r.value / (b - a);
}

}  // namespace hh
