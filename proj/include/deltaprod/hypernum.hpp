#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>

namespace deltaprod {

// Order-of-magnitude class of a rho-series, by its leading (lowest) exponent.
enum class SeriesKind { Zero, Infinitesimal, Appreciable, Infinite };

// Finite Laurent polynomial in a positive infinitesimal rho.  Models the
// sub-ring of rho-moderate numbers that every computation here lives in:
// each element is bounded by rho^(-n) for some finite n.
//
// truncation_order semantics: coefficients at exponents > truncation_order
// are UNKNOWN, not zero.  Exact elements use kExact.  Stored terms always
// satisfy exponent <= truncation_order and carry nonzero coefficients.
template <class Coeff = double>
class BasicRhoSeries {
public:
    static constexpr int kExact = std::numeric_limits<int>::max();

    BasicRhoSeries() : trunc_(kExact) {}

    static BasicRhoSeries monomial(int exponent, Coeff c, int trunc = kExact) {
        BasicRhoSeries s;
        s.trunc_ = trunc;
        if (c != Coeff{} && exponent <= trunc) s.terms_[exponent] = c;
        return s;
    }

    static BasicRhoSeries from_terms(std::map<int, Coeff> terms, int trunc = kExact) {
        BasicRhoSeries s;
        s.trunc_ = trunc;
        for (auto& [e, c] : terms) {
            if (e > trunc)
                throw std::invalid_argument("RhoSeries: term exponent above truncation order");
            if (c != Coeff{}) s.terms_.emplace(e, c);
        }
        return s;
    }

    const std::map<int, Coeff>& terms() const { return terms_; }
    int truncation_order() const { return trunc_; }
    bool exact() const { return trunc_ == kExact; }
    bool is_zero() const { return terms_.empty(); }

    Coeff coeff(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Coeff{} : it->second;
    }

    friend BasicRhoSeries add(const BasicRhoSeries& a, const BasicRhoSeries& b) {
        BasicRhoSeries r;
        r.trunc_ = std::min(a.trunc_, b.trunc_);
        for (auto& [e, c] : a.terms_)
            if (e <= r.trunc_) r.terms_[e] = c;
        for (auto& [e, c] : b.terms_) {
            if (e > r.trunc_) continue;
            auto [it, fresh] = r.terms_.emplace(e, c);
            if (!fresh) it->second += c;
        }
        r.drop_zeros();
        return r;
    }

    friend BasicRhoSeries mul(const BasicRhoSeries& a, const BasicRhoSeries& b) {
        BasicRhoSeries r;
        r.trunc_ = mul_trunc(a, b);
        if (a.terms_.empty() || b.terms_.empty()) return r;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) {
                int e = ea + eb;
                if (e > r.trunc_) continue;
                auto [it, fresh] = r.terms_.emplace(e, ca * cb);
                if (!fresh) it->second += ca * cb;
            }
        r.drop_zeros();
        return r;
    }

    friend BasicRhoSeries operator+(const BasicRhoSeries& a, const BasicRhoSeries& b) {
        return add(a, b);
    }
    friend BasicRhoSeries operator*(const BasicRhoSeries& a, const BasicRhoSeries& b) {
        return mul(a, b);
    }

    friend bool operator==(const BasicRhoSeries& a, const BasicRhoSeries& b) {
        return a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const BasicRhoSeries& a, const BasicRhoSeries& b) {
        return !(a == b);
    }

    // Classification by leading exponent.  Empty but inexact series are
    // indeterminate (the value hides above the truncation order): nullopt.
    std::optional<SeriesKind> classify() const {
        if (terms_.empty()) {
            if (exact()) return SeriesKind::Zero;
            return std::nullopt;
        }
        int lead = terms_.begin()->first;
        if (lead > 0) return SeriesKind::Infinitesimal;
        if (lead == 0) return SeriesKind::Appreciable;
        return SeriesKind::Infinite;
    }

    // Canonical representative modulo infinitesimals: drops every term with
    // exponent > 0.  When trunc >= 0 all unknown terms were infinitesimal
    // too, so the result is exact; otherwise the truncation gap survives.
    BasicRhoSeries psi() const {
        BasicRhoSeries r;
        r.trunc_ = trunc_ >= 0 ? kExact : trunc_;
        for (auto& [e, c] : terms_)
            if (e <= 0) r.terms_.emplace(e, c);
        return r;
    }

    // Exponent-0 coefficient.  Throws on Infinite input (no standard part
    // exists) and when the constant term is hidden above the truncation.
    Coeff standard_part() const {
        if (!terms_.empty() && terms_.begin()->first < 0)
            throw std::domain_error("standard_part: infinite element");
        if (trunc_ < 0)
            throw std::domain_error("standard_part: constant term above truncation order");
        return coeff(0);
    }

private:
    static int mul_trunc(const BasicRhoSeries& a, const BasicRhoSeries& b) {
        return std::min(sat_add(a.trunc_, b.min_known_exp()),
                        sat_add(b.trunc_, a.min_known_exp()));
    }
    // Lowest exponent that can carry a nonzero coefficient.
    int min_known_exp() const {
        if (!terms_.empty()) return terms_.begin()->first;
        return trunc_ == kExact ? kExact : trunc_ + 1;
    }
    static int sat_add(int a, int b) {
        if (a == kExact || b == kExact) return kExact;
        long s = static_cast<long>(a) + b;
        if (s >= kExact) return kExact;
        if (s <= std::numeric_limits<int>::min()) return std::numeric_limits<int>::min();
        return static_cast<int>(s);
    }
    void drop_zeros() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = (it->second == Coeff{}) ? terms_.erase(it) : std::next(it);
    }

    std::map<int, Coeff> terms_;
    int trunc_;
};

using RhoSeries = BasicRhoSeries<double>;

// Coefficient-wise comparison with tolerance, for series carrying fitted
// (numeric) coefficients.  Truncation orders must agree on the compared span.
template <class Coeff>
bool approx_equal(const BasicRhoSeries<Coeff>& a, const BasicRhoSeries<Coeff>& b, double tol) {
    int hi = std::min(a.truncation_order(), b.truncation_order());
    auto ita = a.terms().begin();
    auto itb = b.terms().begin();
    int lo = std::min(ita == a.terms().end() ? 0 : ita->first,
                      itb == b.terms().end() ? 0 : itb->first);
    for (int e = lo; e <= hi && e <= std::max(a.terms().empty() ? 0 : a.terms().rbegin()->first,
                                              b.terms().empty() ? 0 : b.terms().rbegin()->first);
         ++e) {
        if (std::abs(a.coeff(e) - b.coeff(e)) > tol) return false;
    }
    return true;
}

// The value of the product delta(x_1,...,x_n) o delta(x_1) on a test function
// with phi(0) = phi_at_0, as an exact one-term rho-series:
// (phi(0)/(2 pi)) * rho^-1.
inline RhoSeries theorem1_series(double phi_at_0) {
    return RhoSeries::monomial(-1, phi_at_0 / (2.0 * M_PI));
}

}  // namespace deltaprod
