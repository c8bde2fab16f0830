#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <vector>

#include "deltaprod/exactnum.hpp"

namespace deltaprod {

// Result of one numerical integration.  converged == true guarantees
// abs_error_estimate <= the tolerance that was requested.
struct QuadResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

inline constexpr long kDefaultEvalBudget = 10'000'000;

namespace detail {

// 15-point Kronrod / 7-point Gauss pair (QUADPACK dqk15 abscissas/weights).
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, err;
};

template <class F>
Panel gk15(F& f, double a, double b, long& evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    evals += 15;
    return Panel{a, b, resk * h, std::abs((resk - resg) * h)};
}

inline bool panel_less(const Panel& x, const Panel& y) {
    if (x.err != y.err) return x.err < y.err;
    return x.a < y.a;  // deterministic tie-break: larger a splits first
}

}  // namespace detail

// Cleans a breakpoint list: sorts, deduplicates, requires >= 2 distinct points.
inline std::vector<double> sanitize_breaks(std::vector<double> breaks) {
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    if (breaks.size() < 2)
        throw std::invalid_argument("integrate_adaptive: need at least two breakpoints");
    return breaks;
}

// Globally adaptive 1D quadrature on [breaks.front(), breaks.back()] with the
// interior breakpoints as the initial panel grid.  The worst panel (largest
// error estimate, deterministic tie-break) is bisected until the summed error
// estimate drops below tol or the evaluation budget runs out.  When
// shared_evals is given the budget is checked against that counter, so nested
// integrals share one global budget.
template <class F>
QuadResult integrate_adaptive(F&& f, std::vector<double> breaks, double tol,
                              long max_evals = kDefaultEvalBudget,
                              long* shared_evals = nullptr) {
    if (!(tol > 0.0)) throw std::invalid_argument("integrate_adaptive: tol must be > 0");
    breaks = sanitize_breaks(std::move(breaks));

    long local_evals = 0;
    long& evals = shared_evals ? *shared_evals : local_evals;
    const long evals_at_entry = evals;
    const double span = breaks.back() - breaks.front();

    std::vector<detail::Panel> heap;
    std::vector<detail::Panel> frozen;  // panels too narrow to split further
    double total_err = 0.0;
    for (size_t i = 0; i + 1 < breaks.size(); ++i) {
        auto p = detail::gk15(f, breaks[i], breaks[i + 1], evals);
        total_err += p.err;
        heap.push_back(p);
    }
    std::make_heap(heap.begin(), heap.end(), detail::panel_less);

    while (total_err > tol && !heap.empty() && evals + 30 <= max_evals) {
        std::pop_heap(heap.begin(), heap.end(), detail::panel_less);
        detail::Panel worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.b - worst.a > 1e-15 * span) || mid <= worst.a || mid >= worst.b) {
            frozen.push_back(worst);  // cannot be resolved further
            continue;
        }
        auto left = detail::gk15(f, worst.a, mid, evals);
        auto right = detail::gk15(f, mid, worst.b, evals);
        total_err += left.err + right.err - worst.err;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), detail::panel_less);
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), detail::panel_less);
    }

    // Final sums in canonical (left-to-right) order; avoids drift from the
    // incremental bookkeeping above.
    std::vector<detail::Panel> all;
    all.reserve(heap.size() + frozen.size());
    all.insert(all.end(), heap.begin(), heap.end());
    all.insert(all.end(), frozen.begin(), frozen.end());
    std::sort(all.begin(), all.end(),
              [](const detail::Panel& x, const detail::Panel& y) { return x.a < y.a; });
    QuadResult r;
    for (const auto& p : all) {
        r.value += p.value;
        r.abs_error_estimate += p.err;
    }
    r.evaluations = evals - evals_at_entry;
    r.converged = r.abs_error_estimate <= tol;
    return r;
}

// Nested adaptive 2D quadrature: adaptive outer integral over x whose
// integrand is an adaptive inner integral over y.  inner_breaks(x) supplies
// the inner seed grid (it may depend on x, e.g. to straddle a moving peak).
// The tolerance is split so that outer error and accumulated inner error stay
// below tol together; the reported estimate bounds both parts.
template <class F2, class InnerBreaks>
QuadResult integrate_nested(F2&& f, std::vector<double> outer_breaks, InnerBreaks&& inner_breaks,
                            double tol, long max_evals = kDefaultEvalBudget) {
    if (!(tol > 0.0)) throw std::invalid_argument("integrate_nested: tol must be > 0");
    outer_breaks = sanitize_breaks(std::move(outer_breaks));
    const double span = outer_breaks.back() - outer_breaks.front();
    const double outer_tol = 0.5 * tol;
    const double inner_tol = 0.25 * tol / span;

    long evals = 0;
    bool inner_ok = true;
    auto g = [&](double x) {
        auto inner = integrate_adaptive([&](double y) { return f(x, y); }, inner_breaks(x),
                                        inner_tol, max_evals, &evals);
        if (!inner.converged) inner_ok = false;
        return inner.value;
    };
    QuadResult outer = integrate_adaptive(g, std::move(outer_breaks), outer_tol, max_evals, &evals);

    QuadResult r;
    r.value = outer.value;
    r.abs_error_estimate = outer.abs_error_estimate + span * inner_tol;
    r.evaluations = evals;
    r.converged = outer.converged && inner_ok && r.abs_error_estimate <= tol;
    return r;
}

// ---------------------------------------------------------------------------
// Integrals and constants of the product formula
// ---------------------------------------------------------------------------

enum class AHatMethod { ClosedForm, Formula, Direct, Recursion };

// One evaluation of the normalized product constant A-hat(n) = rho * A(1,n).
// Every formula for A(1,n) carries exactly one factor 1/rho, so A-hat is
// rho-free and finite; Theorem 1 predicts A-hat(n) = 1/(2 pi) for all n.
struct AHatEvaluation {
    int n = 0;
    AHatMethod method = AHatMethod::Formula;
    double value = 0.0;
    std::optional<PiScaled> exact;    // set for exact methods
    std::optional<QuadResult> quad;   // set for numeric methods
};

// Exact integral of sin^j over [0, pi]: pi (j-1)!!/j!! for even j,
// 2 (j-1)!!/j!! for odd j.
PiScaled wallis(long j);

// c_n = pi^((n+1)/2) / Gamma((n+1)/2), the Poisson kernel normalizer.
PiScaled c_constant(long n);

// Exact check of c_n = (2 pi / (n-1)) c_{n-2}.
bool c_recursion_check(long n);

// Surface area of the unit m-sphere, 2 pi^((m+1)/2) / Gamma((m+1)/2).
PiScaled sphere_area(long m);

// I_n = int_0^inf int_0^pi t^(n-1) sin^(n-2)(xi)
//         / ((1+t^2)^((n+1)/2) (1 + t^2 cos^2 xi)) dt dxi  for n >= 3.
// The t axis is compactified by t = tan(u) before adaptive integration.
QuadResult inner_txi_integral(int n, double tol, long max_evals = kDefaultEvalBudget);

// A-hat(n) = (2 pi / (c_1 c_n)) prod_{j=1}^{n-3} wallis(j) * I_n, n >= 3.
AHatEvaluation a_hat_formula(int n, double tol, long max_evals = kDefaultEvalBudget);

// A-hat(n) = (1/(c_1 c_n)) int_{R^n} du / ((|u|^2+1)^((n+1)/2) (u_1^2+1))
// by direct adaptive quadrature; n in {1, 2}.
AHatEvaluation a_hat_direct(int n, double tol, long max_evals = kDefaultEvalBudget);

// Checks int_{R^2} du dv / (s + u^2 + v^2)^((n+1)/2)
//        = 2 pi / ((n-1) s^((n-1)/2))  numerically, n >= 3, s > 0.
bool reduction_lemma_check(int n, double s, double tol, QuadResult* detail = nullptr,
                           long max_evals = kDefaultEvalBudget);

// A-hat(n) by the descent of the proof: peel two coordinates at a time with
// the reduction lemma and the c_n recursion (kept as explicit exact factors),
// then evaluate the 1- or 2-dimensional base integral directly.
AHatEvaluation a_hat_recursion(int n, double tol, long max_evals = kDefaultEvalBudget);

}  // namespace deltaprod
