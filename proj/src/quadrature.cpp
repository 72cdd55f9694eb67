#include "bintrans/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace bintrans {

namespace {

struct LegendreValue {
    BigReal p;     // P_n(x)
    BigReal dp;    // P_n'(x)
};

LegendreValue legendre(int n, const BigReal& x) {
    const Bits bits = x.precision();
    BigReal prev(1, bits);
    BigReal cur = x;
    for (int j = 1; j < n; ++j) {
        BigReal next = (x * cur * static_cast<long>(2 * j + 1) - prev * static_cast<long>(j)) / static_cast<long>(j + 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    BigReal dp = (x * cur - prev) * static_cast<long>(n) / (x * x - 1L);
    return {cur, dp};
}

GaussLegendreRule build_rule(int order, Bits bits) {
    const Bits wp = bits + 16;
    const BigReal tolerance = pow2(-(wp - 4), 64);
    GaussLegendreRule rule;
    rule.order = order;
    const int half = (order + 1) / 2;
    for (int i = 1; i <= half; ++i) {
        const double guess = std::cos(std::numbers::pi * (i - 0.25) / (order + 0.5));
        BigReal x(wp);
        mpfr_set_d(x.get(), guess, MPFR_RNDN);
        if (order % 2 == 1 && i == half)
            x = BigReal(wp);
        LegendreValue v = legendre(order, x);
        for (int iter = 0; iter < 200; ++iter) {
            BigReal dx = v.p / v.dp;
            x -= dx;
            v = legendre(order, x);
            if (abs(dx) < tolerance || dx.is_zero())
                break;
        }
        BigReal w = BigReal(2, wp) / ((BigReal(1, wp) - x * x) * v.dp * v.dp);
        rule.nodes.push_back(x.rounded(bits));
        rule.weights.push_back(w.rounded(bits));
    }
    return rule;
}

std::mutex rule_mutex;
std::map<std::pair<int, Bits>, std::unique_ptr<GaussLegendreRule>> rule_cache;

BigReal apply_rule(const GaussLegendreRule& rule, const RealFunction& f, const BigReal& center,
                   const BigReal& half_width, Bits bits) {
    BigReal sum(bits);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const BigReal offset = half_width * rule.nodes[i];
        if (offset.is_zero()) {
            sum += rule.weights[i] * f(center);
        } else {
            sum += rule.weights[i] * (f(center + offset) + f(center - offset));
        }
    }
    return sum * half_width;
}

constexpr int kLowOrder = 40;
constexpr int kHighOrder = 60;
constexpr int kMaxDepth = 48;

void integrate_panel(const RealFunction& f, const BigReal& a, const BigReal& b, Bits bits, const BigReal& tolerance,
                     int depth, QuadratureResult& out) {
    const BigReal center = (a + b) / 2L;
    const BigReal half_width = (b - a) / 2L;
    const BigReal low = apply_rule(gauss_legendre(kLowOrder, bits), f, center, half_width, bits);
    const BigReal high = apply_rule(gauss_legendre(kHighOrder, bits), f, center, half_width, bits);
    const BigReal diff = abs(high - low);
    if (diff <= tolerance) {
        out.value += high;
        out.error_estimate += diff;
        ++out.panels;
        return;
    }
    if (depth >= kMaxDepth)
        throw std::runtime_error("integrate_adaptive: maximum subdivision depth reached");
    const BigReal half_tol = tolerance / 2L;
    integrate_panel(f, a, center, bits, half_tol, depth + 1, out);
    integrate_panel(f, center, b, bits, half_tol, depth + 1, out);
}

} // namespace

const GaussLegendreRule& gauss_legendre(int order, Bits bits) {
    if (order < 1)
        throw std::invalid_argument("gauss_legendre: order must be >= 1");
    std::lock_guard<std::mutex> lock(rule_mutex);
    auto& slot = rule_cache[{order, bits}];
    if (!slot)
        slot = std::make_unique<GaussLegendreRule>(build_rule(order, bits));
    return *slot;
}

QuadratureResult integrate_adaptive(const RealFunction& f, const BigReal& a, const BigReal& b, Bits bits,
                                    const BigReal& tolerance) {
    QuadratureResult out{BigReal(bits), BigReal(64), 0};
    integrate_panel(f, a.rounded(bits), b.rounded(bits), bits, tolerance, 0, out);
    return out;
}

} // namespace bintrans
