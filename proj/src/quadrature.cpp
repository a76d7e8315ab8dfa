#include "intspace/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "intspace/errors.hpp"
#include "intspace/rational.hpp"
#include "intspace/specfun.hpp"

namespace intspace {

namespace {

// Kronrod abscissae; every other one (odd index) is also a Gauss-7 node.
const double XGK[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000,
};
const double WGK[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
};
const double WG[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
};

struct Panel {
    double a;
    double b;
    double value;
    double err;
};

struct ByError {
    bool operator()(const Panel& lhs, const Panel& rhs) const { return lhs.err < rhs.err; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    const double fc = f(mid);
    double resk = WGK[7] * fc;
    double resg = WG[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double f1 = f(mid - half * XGK[j]);
        const double f2 = f(mid + half * XGK[j]);
        resk += WGK[j] * (f1 + f2);
        if (j % 2 == 1) resg += WG[(j - 1) / 2] * (f1 + f2);
    }
    if (!std::isfinite(resk))
        throw domain_error("integrate: integrand produced a non-finite value");
    return Panel{a, b, resk * half, std::abs(resk - resg) * half};
}

double density_core(const IntervalSpec& spec, const VariateModel& model, double s1, double y,
                    const QuadratureConfig& cfg) {
    if (!std::isfinite(y)) throw domain_error("generic_density: y must be finite");
    if (y < 0.0) return 0.0;
    const long n = spec.n, i = spec.i, w = spec.w;
    auto integrand = [&](double u) -> double {
        if (u <= 0.0 || u >= 1.0) return 0.0;
        const double x = quantile(model, u) + y;
        const double fx = pdf(model, x);
        if (fx == 0.0) return 0.0;
        double base = cdf(model, x) - u;
        if (base < 0.0) base = 0.0;
        return s1 * std::pow(u, static_cast<double>(i - w - 1)) *
               std::pow(base, static_cast<double>(w - 1)) *
               std::pow(1.0 - cdf(model, x), static_cast<double>(n - i)) * fx;
    };
    // Bounded support puts a kink at the u where Q(u) + y crosses the upper
    // edge; when it falls between a rule's last node and the panel edge the
    // Gauss and Kronrod sums agree on the smooth piece and the error estimate
    // goes blind.  Splitting there keeps both pieces smooth.
    if (model.family == Family::uniform) {
        const double width = model.p2 - model.p1;
        const double split = 1.0 - y / width;
        if (split > 0.0 && split < 1.0) {
            return integrate(integrand, 0.0, split, cfg).value +
                   integrate(integrand, split, 1.0, cfg).value;
        }
        if (split <= 0.0) return 0.0;
    }
    return integrate(integrand, 0.0, 1.0, cfg).value;
}

double ordering_prefactor(const IntervalSpec& spec) {
    Rational s1 = Rational::factorial(spec.n);
    s1 /= Rational::factorial(spec.i - spec.w - 1);
    s1 /= Rational::factorial(spec.w - 1);
    s1 /= Rational::factorial(spec.n - spec.i);
    return to_real(s1, specfun::precision_bits_from_env());
}

}  // namespace

void QuadratureConfig::validate() const {
    if (!(abs_tol > 0.0) || abs_tol > 1e-2)
        throw domain_error("quadrature: abs_tol must lie in (0, 1e-2]");
    if (!(rel_tol > 0.0) || rel_tol > 1e-2)
        throw domain_error("quadrature: rel_tol must lie in (0, 1e-2]");
    if (max_subdivisions < 10)
        throw domain_error("quadrature: max_subdivisions must be at least 10");
}

QuadratureOutcome integrate(const std::function<double(double)>& f, double lo, double hi,
                            const QuadratureConfig& cfg) {
    cfg.validate();
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi)
        throw domain_error("integrate: interval must be finite with lo <= hi");
    if (lo == hi) return QuadratureOutcome{0.0, 0.0, 0};

    std::priority_queue<Panel, std::vector<Panel>, ByError> active;
    double total_value = 0.0;
    double total_err = 0.0;
    auto push = [&](Panel p) {
        total_value += p.value;
        total_err += p.err;
        active.push(p);
    };
    push(gk15(f, lo, hi));
    int splits = 0;
    while (total_err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total_value))) {
        if (active.empty() || splits >= cfg.max_subdivisions)
            throw convergence_error("integrate: subdivision budget exhausted", total_value,
                                    total_err);
        Panel worst = active.top();
        active.pop();
        total_value -= worst.value;
        total_err -= worst.err;
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) {
            // Panel too narrow to split; its error is irreducible.
            total_value += worst.value;
            total_err += worst.err;
            continue;
        }
        ++splits;
        push(gk15(f, worst.a, mid));
        push(gk15(f, mid, worst.b));
    }
    return QuadratureOutcome{total_value, total_err, 1 + splits};
}

double spacing_upper_bound(const VariateModel& model, long n, double eps) {
    if (n < 1) throw domain_error("spacing_upper_bound: n must be positive");
    if (!(eps > 0.0) || eps >= 0.5)
        throw domain_error("spacing_upper_bound: eps must lie in (0, 0.5)");
    switch (model.family) {
        case Family::uniform:
            return model.p2 - model.p1;
        case Family::exponential:
            return -std::log(eps) / model.p1;
        case Family::logistic: {
            const double hi = model.p2 * (std::log1p(-eps) - std::log(eps));
            return 2.0 * hi;
        }
    }
    throw domain_error("spacing_upper_bound: unknown family");
}

double generic_density(const IntervalSpec& spec, const VariateModel& model, double y,
                       const QuadratureConfig& cfg) {
    validate(spec);
    validate(model);
    cfg.validate();
    return density_core(spec, model, ordering_prefactor(spec), y, cfg);
}

QuadratureOutcome generic_moment(const IntervalSpec& spec, const VariateModel& model, int order,
                                 const QuadratureConfig& cfg) {
    validate(spec);
    validate(model);
    cfg.validate();
    if (order != 1 && order != 2) throw domain_error("generic_moment: order must be 1 or 2");

    const double eps = cfg.abs_tol / (20.0 * static_cast<double>(spec.n));
    const double y_max = spacing_upper_bound(model, spec.n, eps);
    const double scale = std::max(1.0, std::pow(y_max, order + 1));
    // The outer rule sees inner results as exact, so inner noise must sit far
    // below the outer tolerance.  A relative inner component would scale with
    // the density peak and lift the outer error floor above its target, hence
    // the near-machine rel_tol.
    QuadratureConfig inner = cfg;
    inner.abs_tol = cfg.abs_tol / (10.0 * scale);
    inner.rel_tol = 1e-14;

    const double s1 = ordering_prefactor(spec);
    auto integrand = [&](double y) -> double {
        return std::pow(y, order) * density_core(spec, model, s1, y, inner);
    };
    QuadratureOutcome outer = integrate(integrand, 0.0, y_max, cfg);
    outer.error_estimate += inner.abs_tol * scale;
    return outer;
}

}  // namespace intspace
