// One PASS/FAIL line per acceptance criterion. `--only N` runs a single one.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "bintrans/cli.hpp"
#include "bintrans/conjectures.hpp"
#include "bintrans/reference.hpp"
#include "bintrans/transform.hpp"

using namespace bintrans;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome lemma_sweeps() {
    const auto start = Clock::now();
    int failures = 0;
    for (const auto& z : {ExactRational(1), ExactRational(2), ExactRational(1, 2), ExactRational(3, 7), ExactRational(10)})
        for (Order m = 1; m <= 50; ++m)
            failures += !lemma7_check(m, z).equal();
    for (Order m = 1; m <= 100; ++m)
        for (Order k = 1; k <= m; ++k)
            failures += !lemma9_check(m, k).equal();
    for (Order j = 1; j <= 100; ++j)
        for (Order n = 1; n <= j; ++n)
            failures += !lemma10_check(j, n).equal();
    const double t = seconds_since(start);
    std::ostringstream d;
    d << failures << " mismatches, " << t << " s";
    return {failures == 0 && t < 10.0, d.str()};
}

Outcome thm1_residual() {
    const PrecisionPolicy policy(128);
    int failures = 0, checks = 0;
    for (const auto& u : {ExactRational(1), ExactRational(2), ExactRational(1, 2), ExactRational(3), ExactRational(7, 3)})
        for (Order m = 1; m <= 40; ++m) {
            const PartialResult r = thm1_partial(u, m, policy);
            ++checks;
            failures += !(*r.exact_value + g_m(1 / u, m) == 1);
        }
    return {failures == 0, std::to_string(checks) + " exact checks, " + std::to_string(failures) + " failures"};
}

Outcome thm4_sandwich() {
    const auto start = Clock::now();
    const PrecisionPolicy policy(256);
    const BigReal gamma = gamma_reference(256);
    int failures = 0;
    for (Order m = 2; m <= 200; ++m) {
        const PartialResult r = thm4_partial(m, policy);
        const BigReal diff = gamma - r.value;
        const BigReal bound = gamma * 2L / static_cast<long>(m + 1);
        failures += !(diff.sign() > 0 && diff < bound);
    }
    const PartialResult far = thm4_partial(1150, PrecisionPolicy(128));
    const BigReal err = abs(gamma - far.value);
    const bool close = err < BigReal::from_string("1e-3", 64);
    const double t = seconds_since(start);
    std::ostringstream d;
    d << failures << " sandwich violations for 2<=m<=200; |gamma - value(1150)| = " << err.to_decimal(4) << "; " << t
      << " s";
    return {failures == 0 && close && t < 60.0, d.str()};
}

Outcome cor3_factors() {
    const PrecisionPolicy policy(128);
    const std::vector<std::pair<long, std::vector<ExactRational>>> displayed = {
        {1, {ExactRational(2, 1), ExactRational(2, 3), ExactRational(8, 9), ExactRational(128, 135)}},
        {2, {ExactRational(3, 1), ExactRational(3, 4), ExactRational(15, 16), ExactRational(125, 128)}},
        {3, {ExactRational(4, 1), ExactRational(4, 5), ExactRational(24, 25), ExactRational(864, 875)}},
    };
    int failures = 0;
    for (const auto& [u, want] : displayed) {
        const ProductResult p = cor3_product_double(ExactRational(u), 3, policy);
        for (std::size_t i = 0; i < want.size(); ++i)
            failures += !(i < p.factors.size() && p.factors[i].to_rational() == want[i]);
    }
    return {failures == 0, "12 factors, " + std::to_string(failures) + " mismatches"};
}

Outcome remainder_identity() {
    // Signed sum with (-1)^(k+1) weights equals -gamma + S_m.
    const PrecisionPolicy policy(128);
    const BigReal gamma = gamma_reference(256);
    const BigReal tol = BigReal::from_string("1e-8", 64);
    bool ok = true;
    std::ostringstream d;
    for (Order m : {2ul, 5ul, 10ul}) {
        const BigReal signed_sum = -thm4_partial(m, policy).value;
        const RemainderSeries s = gamma_remainder_series(m, 0, policy);
        const BigReal diff = abs(signed_sum - (s.total() - gamma));
        ok = ok && diff < tol;
        d << "m=" << m << " diff=" << diff.to_decimal(3) << " S_m=" << s.total().to_decimal(12) << "; ";
    }
    return {ok, d.str()};
}

Outcome cor5_trend() {
    const PrecisionPolicy policy(128);
    const BigReal e10 = abs(*cor5_partial(10, policy).reference_error);
    const BigReal e50 = abs(*cor5_partial(50, policy).reference_error);
    return {e50 < e10, "err(10)=" + e10.to_decimal(4) + " err(50)=" + e50.to_decimal(4)};
}

Outcome anchors() {
    const PrecisionPolicy policy(128);
    std::ostringstream d;
    bool conj2 = true;
    for (Order m = 1; m <= 50; ++m)
        conj2 = conj2 && conj2_partial(BigReal(0, 64), m, policy).value == 1;
    bool conj1 = true;
    for (Order m = 1; m <= 30; ++m) {
        const BigReal u = BigReal::from_rational(ExactRational(5, 3), policy.working_bits(m));
        conj1 = conj1 && bit_identical(conj1_partial(NestedLogArgs({u}), m, policy).value,
                                       remark2_single(u, m, policy).value);
    }
    const BigReal r4 = conj4_residual(NodeSet{1}, policy, BigReal::from_string("1e-12", 64)).residual;
    const bool conj4 = abs(r4) < BigReal::from_string("1e-10", 64);
    const BigReal y1 = y_k(1, policy, BigReal::from_string("1e-13", 64)).total();
    const BigReal ey = abs(y1 - gamma_reference(128));
    const bool y = ey < BigReal::from_string("1e-12", 64);
    bool quad = true;
    for (const NodeSet& nodes : {NodeSet{1}, NodeSet{2}, NodeSet{1, 2}, NodeSet{1, 2, 3}, NodeSet{2, 5, 7}})
        for (Order n : {1ul, 2ul, 10ul}) {
            const Bits bits = remainder_bits(nodes, policy);
            const BigReal diff = abs(remainder_integral(nodes, n, policy) - remainder_integral_quadrature(nodes, n, policy).value);
            quad = quad && diff < pow2(8 - bits, 64);
        }
    d << "conj2(0,m)=1:" << conj2 << " conj1=remark2:" << conj1 << " |conj4((1))|=" << abs(r4).to_decimal(3)
      << " |y1-gamma|=" << ey.to_decimal(3) << " quadrature:" << quad;
    return {conj2 && conj1 && conj4 && y && quad, d.str()};
}

Outcome conjecture_evidence() {
    const PrecisionPolicy policy(128);
    const Order lo = 10, hi = 40;
    std::ostringstream d;
    auto shrinks = [&](const char* name, const BigReal& a, const BigReal& b) {
        const bool ok = abs(b) < abs(a);
        d << name << ": " << a.to_decimal(6) << " -> " << b.to_decimal(6) << (ok ? " shrinks" : " does not shrink")
          << "; ";
        return ok;
    };
    auto conj1 = [&](Order m) {
        const Bits bits = policy.working_bits(m);
        return *conj1_partial(NestedLogArgs({BigReal(1, bits), BigReal(1, bits)}), m, policy).reference_error;
    };
    auto conj2 = [&](Order m) { return *conj2_partial(BigReal(1, policy.working_bits(m)), m, policy).reference_error; };
    auto conj4 = [&](Order n) { return *conj4_truncated(NodeSet{1, 2}, n, policy).reference_error; };
    const bool ok1 = shrinks("conj1(1,1)", conj1(lo), conj1(hi));
    const bool ok2 = shrinks("conj2(z=1)", conj2(lo), conj2(hi));
    const bool ok4 = shrinks("conj4(1,2)", conj4(lo), conj4(hi));
    d << "conj3 residual m=10: " << conj3_partial(10, policy).reference_error->to_decimal(4)
      << " m=30: " << conj3_partial(30, policy).reference_error->to_decimal(4) << " (reported only)";
    return {ok1 && ok2 && ok4, d.str()};
}

Outcome determinism() {
    auto converge = [](unsigned threads) {
        std::ostringstream out, err;
        const int code = cli::run({"converge", "--formula", "thm4", "--from", "2", "--to", "100", "--threads",
                                   std::to_string(threads)},
                                  out, err);
        return code == 0 ? out.str() : std::string("exit ") + std::to_string(code);
    };
    const unsigned n = std::max(4u, std::thread::hardware_concurrency());
    const std::string a = converge(1);
    const std::string b = converge(n);
    const std::string c = converge(1);
    const std::string e = converge(n);
    const bool ok = a.rfind("m,value", 0) == 0 && a == b && a == c && a == e;
    return {ok, std::to_string(a.size()) + " bytes, 1 vs " + std::to_string(n) + " threads, two runs each"};
}

} // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"exact lemma sweeps", lemma_sweeps},
        {"thm1 residual identity", thm1_residual},
        {"thm4 sandwich and m=1150", thm4_sandwich},
        {"cor3 factor match", cor3_factors},
        {"remainder-series identity", remainder_identity},
        {"cor5 trend", cor5_trend},
        {"conjecture anchors", anchors},
        {"conjecture evidence", conjecture_evidence},
        {"converge determinism", determinism},
    };
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--only" && i + 1 < argc)
            only = std::atoi(argv[++i]);
    }
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i + 1);
        if (only && only != id)
            continue;
        Outcome o{false, ""};
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << criteria[i].first << ": " << o.detail
                  << std::endl;
        failed += !o.pass;
    }
    return failed ? 1 : 0;
}
