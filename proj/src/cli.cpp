#include "bintrans/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "bintrans/conjectures.hpp"
#include "bintrans/reference.hpp"
#include "bintrans/report.hpp"
#include "bintrans/transform.hpp"

namespace bintrans::cli {

namespace {

const std::set<std::string> kFormulas = {"thm1", "remark2a", "remark2b", "cor3a", "cor3b", "thm4",
                                         "cor5", "conj1",    "conj2",    "conj3", "conj4", "y"};

bool needs_u(const std::string& f) {
    return f == "thm1" || f == "remark2a" || f == "remark2b" || f == "cor3a" || f == "cor3b";
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        parts.push_back(item);
    return parts;
}

std::vector<ExactRational> parse_rational_list(const std::string& text, const char* flag) {
    std::vector<ExactRational> out;
    try {
        for (const auto& part : split_list(text))
            out.push_back(parse_rational(part));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
    if (out.empty())
        throw UsageError(std::string(flag) + " must not be empty");
    return out;
}

std::vector<unsigned long> parse_node_list(const std::string& text) {
    std::vector<unsigned long> out;
    for (const auto& q : parse_rational_list(text, "--nodes")) {
        if (q.get_den() != 1 || q < 1 || !q.get_num().fits_ulong_p())
            throw UsageError("--nodes must be positive integers");
        out.push_back(q.get_num().get_ui());
    }
    return out;
}

BigReal tail_target(const RunConfig& config) {
    try {
        const ExactRational t = parse_rational(config.tail);
        if (t <= 0)
            throw UsageError("--tail must be > 0");
        return BigReal::from_rational(t, 64);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--tail: ") + e.what());
    }
}

std::string render_factor(const FactoredRational& f, int digits, Bits bits) {
    if (auto q = f.to_rational(4096))
        return format_fraction(*q);
    return f.to_bigreal(bits).to_decimal(digits);
}

} // namespace

void validate(const RunConfig& config) {
    if (!kFormulas.contains(config.formula))
        throw UsageError("unknown formula '" + config.formula + "'");
    if (config.digits < 1)
        throw UsageError("digits must be >= 1");
    if (config.bits && *config.bits < 16)
        throw UsageError("bits must be >= 16");
    const auto& f = config.formula;
    if (needs_u(f)) {
        if (!config.u)
            throw UsageError(f + " needs --u");
        if (*config.u <= 0)
            throw UsageError("u must be > 0");
    }
    if (f == "conj1") {
        if (config.z.empty())
            throw UsageError("conj1 needs --z z1,z2,...");
        for (const auto& zi : config.z)
            if (zi <= 0)
                throw UsageError("every z must be > 0");
    }
    if (f == "conj2") {
        if (config.z.size() != 1)
            throw UsageError("conj2 needs a single --z");
        if (config.z.front() < 0)
            throw UsageError("z must be >= 0");
    }
    if (f == "conj4") {
        if (config.nodes.empty())
            throw UsageError("conj4 needs --nodes a1,a2,...");
        try {
            NodeSet check(config.nodes);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    if (f == "y" && (!config.k || *config.k < 1))
        throw UsageError("y needs --k >= 1");
    if (f == "conj4" || f == "y")
        tail_target(config);
}

PrecisionPolicy policy_for(const RunConfig& config) {
    if (config.bits)
        return PrecisionPolicy(*config.bits);
    const auto bits = static_cast<Bits>(std::ceil((config.digits + 8) * std::log2(10.0)));
    return PrecisionPolicy(std::max<Bits>(bits, 16));
}

Evaluation evaluate(const RunConfig& config, std::optional<Order> m, const PrecisionPolicy& policy) {
    const auto& f = config.formula;
    const bool series_tail = (f == "conj4" || f == "y");
    if (!m && !series_tail)
        throw UsageError(f + " needs --m");
    if (m && *m == 0 && f != "cor3b")
        throw UsageError("m must be >= 1");
    const Order order = m.value_or(0);
    const Bits bits = policy.working_bits(order);

    Evaluation ev;
    if (f == "thm1") {
        ev.result = thm1_partial(*config.u, order, policy);
    } else if (f == "remark2a") {
        ev.result = remark2_single(BigReal::from_rational(*config.u, bits), order, policy);
    } else if (f == "remark2b") {
        ev.result = remark2_double(BigReal::from_rational(*config.u, bits), order, policy);
    } else if (f == "cor3a") {
        ev.result = cor3_product_single(*config.u, order, policy).result;
    } else if (f == "cor3b") {
        ProductResult p = cor3_product_double(*config.u, order, policy);
        for (const auto& factor : p.factors)
            ev.factors.push_back(render_factor(factor, config.digits, bits));
        ev.result = std::move(p.result);
    } else if (f == "thm4") {
        ev.result = thm4_partial(order, policy);
    } else if (f == "cor5") {
        ev.result = cor5_partial(order, policy);
    } else if (f == "conj1") {
        std::vector<BigReal> z;
        for (const auto& zi : config.z)
            z.push_back(BigReal::from_rational(zi, bits));
        ev.result = conj1_partial(NestedLogArgs(std::move(z)), order, policy);
    } else if (f == "conj2") {
        ev.result = conj2_partial(BigReal::from_rational(config.z.front(), bits), order, policy);
    } else if (f == "conj3") {
        ev.result = conj3_partial(order, policy);
    } else if (f == "conj4") {
        const NodeSet nodes(config.nodes);
        if (m) {
            ev.result = conj4_truncated(nodes, order, policy);
        } else {
            Conj4Report rep = conj4_residual(nodes, policy, tail_target(config));
            ev.result.order = 0;
            ev.result.value = rep.finite_part + rep.series.total();
            ev.result.reference_error = -rep.residual;
            ev.tail_bound = rep.series.tail_error_bound;
        }
    } else if (f == "y") {
        if (m) {
            RemainderSeries s = remainder_series(NodeSet{*config.k}, order, policy, tail_target(config));
            ev.result.order = order;
            ev.result.value = s.partial;
            ev.result.reference_error = s.tail_estimate;
            ev.tail_bound = s.tail_error_bound;
        } else {
            RemainderSeries s = y_k(*config.k, policy, tail_target(config));
            ev.result.order = 0;
            ev.result.value = s.total();
            ev.tail_bound = s.tail_error_bound;
        }
    }
    return ev;
}

BigReal reference_value(const RunConfig& config, const PrecisionPolicy& policy) {
    const Bits bits = policy.working_bits(0);
    const auto& f = config.formula;
    if (f == "thm1")
        return BigReal(1, bits);
    if (needs_u(f))
        return BigReal::from_rational(*config.u, bits);
    if (f == "thm4" || f == "cor5" || f == "conj4")
        return gamma_reference(bits);
    if (f == "conj1") {
        ExactRational p = 1;
        for (const auto& zi : config.z)
            p *= zi;
        return BigReal::from_rational(p, bits);
    }
    if (f == "conj2")
        return conj2_reference(BigReal::from_rational(config.z.front(), bits), bits);
    if (f == "conj3")
        return ln_pi_half_reference(bits);
    return y_k(*config.k, policy, tail_target(config)).total();
}

ConvergenceTable build_table(const RunConfig& config, Order lo, Order hi, Order step, unsigned threads) {
    const PrecisionPolicy policy = policy_for(config);
    std::vector<Order> orders;
    for (Order m = lo; m <= hi; m += step)
        orders.push_back(m);

    std::vector<std::optional<PartialResult>> rows(orders.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= orders.size())
                break;
            try {
                rows[i] = evaluate(config, orders[i], policy).result;
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
        mpfr_free_cache();
    };
    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(orders.size())));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    std::optional<std::string> parameter;
    if (config.u)
        parameter = "u=" + format_fraction(*config.u);
    else if (!config.z.empty()) {
        std::string p = "z=";
        for (std::size_t i = 0; i < config.z.size(); ++i)
            p += (i ? "," : "") + format_fraction(config.z[i]);
        parameter = p;
    } else if (!config.nodes.empty()) {
        std::string p = "nodes=";
        for (std::size_t i = 0; i < config.nodes.size(); ++i)
            p += (i ? "," : "") + std::to_string(config.nodes[i]);
        parameter = p;
    } else if (config.k) {
        parameter = "k=" + std::to_string(*config.k);
    }

    ConvergenceTable table(config.formula, parameter, reference_value(config, policy));
    for (auto& row : rows)
        table.append(std::move(*row));
    return table;
}

namespace {

void print_evaluation(const RunConfig& config, const Evaluation& ev, std::ostream& out) {
    const PartialResult& r = ev.result;
    const int digits = config.digits;
    if (config.format == "plain") {
        out << "formula: " << config.formula << "\n";
        out << "order: " << r.order << "\n";
        out << "value: " << r.value.to_decimal(digits) << "\n";
        if (r.exact_value && rational_size_bits(*r.exact_value) <= 4096)
            out << "exact: " << format_fraction(*r.exact_value) << "\n";
        if (r.exact_residual && rational_size_bits(*r.exact_residual) <= 4096)
            out << "residual: " << format_fraction(*r.exact_residual) << "\n";
        if (r.reference_error)
            out << "abs_error: " << abs(*r.reference_error).to_decimal(digits) << "\n";
        if (r.proven_bound)
            out << "bound: " << r.proven_bound->to_decimal(digits) << "\n";
        if (ev.tail_bound)
            out << "tail_bound: " << ev.tail_bound->to_decimal(3) << "\n";
        if (!ev.factors.empty()) {
            out << "factors:";
            for (const auto& f : ev.factors)
                out << " " << f;
            out << "\n";
        }
        return;
    }
    const TableRow row = render_row(r, digits);
    if (config.format == "csv") {
        out << "m,value,abs_error,bound\n"
            << row.m << ',' << row.value << ',' << row.abs_error << ',' << row.bound.value_or("") << '\n';
        return;
    }
    nlohmann::ordered_json obj;
    obj["m"] = row.m;
    obj["value"] = row.value;
    obj["abs_error"] = row.abs_error.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(row.abs_error);
    obj["bound"] = row.bound ? nlohmann::ordered_json(*row.bound) : nlohmann::ordered_json(nullptr);
    if (r.exact_value && rational_size_bits(*r.exact_value) <= 4096)
        obj["exact"] = format_fraction(*r.exact_value);
    if (r.exact_residual && rational_size_bits(*r.exact_residual) <= 4096)
        obj["residual"] = format_fraction(*r.exact_residual);
    if (ev.tail_bound)
        obj["tail_bound"] = ev.tail_bound->to_decimal(3);
    if (!ev.factors.empty())
        obj["factors"] = ev.factors;
    out << obj.dump(2) << "\n";
}

// ---- verify -------------------------------------------------------------

struct Tally {
    int checks = 0;
    int failures = 0;
    void record(bool ok) {
        ++checks;
        if (!ok)
            ++failures;
    }
};

void report_tally(std::ostream& out, const std::string& name, const Tally& t) {
    out << (t.failures == 0 ? "PASS " : "FAIL ") << name << ": " << t.checks << " checks, " << t.failures
        << " failures\n";
}

int verify_lemmas(Order max, std::ostream& out) {
    const std::vector<ExactRational> zs = {ExactRational(1), ExactRational(2), ExactRational(1, 2), ExactRational(3, 7),
                                           ExactRational(10)};
    Tally l7, l9, l10;
    for (Order m = 1; m <= max; ++m)
        for (const auto& z : zs)
            l7.record(lemma7_check(m, z).equal());
    for (Order m = 1; m <= max; ++m)
        for (Order k = 1; k <= m; ++k)
            l9.record(lemma9_check(m, k).equal());
    for (Order j = 1; j <= max; ++j)
        for (Order n = 1; n <= j; ++n)
            l10.record(lemma10_check(j, n).equal());
    report_tally(out, "lemma7 (partial fractions of the finite difference of 1/(k+z))", l7);
    report_tally(out, "lemma9 (C(m,k)/k = sum_{n=k}^m C(n,k)/n)", l9);
    report_tally(out, "lemma10 (alternating tail of row j = C(j-1,n-1))", l10);
    return l7.failures + l9.failures + l10.failures == 0 ? kSuccess : kVerificationFailed;
}

int verify_theorems(Order max_m, Bits bits, std::ostream& out) {
    const PrecisionPolicy policy(bits);
    Tally residual;
    for (const auto& u : {ExactRational(1), ExactRational(2), ExactRational(1, 2), ExactRational(3), ExactRational(7, 3)})
        for (Order m = 1; m <= max_m; ++m) {
            const PartialResult r = thm1_partial(u, m, policy);
            residual.record(*r.exact_value + *r.exact_residual == 1);
        }
    report_tally(out, "thm1 exact residual value + g_m(1/u) = 1", residual);

    Tally sandwich;
    for (Order m = 2; m <= max_m; ++m) {
        const PartialResult r = thm4_partial(m, policy);
        sandwich.record(r.reference_error->sign() > 0 && *r.reference_error < *r.proven_bound);
    }
    report_tally(out, "thm4 sandwich 0 < gamma - value < 2 gamma/(m+1)", sandwich);

    Tally s1;
    {
        const RemainderSeries s = gamma_remainder_series(1, 0, policy);
        const BigReal diff = abs(s.total() - gamma_reference(policy.working_bits(1)));
        s1.record(diff < pow2(-(bits - 8), 64));
    }
    report_tally(out, "S_1 = gamma (constant of the thm4 bound)", s1);

    Tally factors;
    const std::vector<std::pair<long, std::vector<ExactRational>>> expected = {
        {1, {ExactRational(2, 1), ExactRational(2, 3), ExactRational(8, 9), ExactRational(128, 135)}},
        {2, {ExactRational(3, 1), ExactRational(3, 4), ExactRational(15, 16), ExactRational(125, 128)}},
        {3, {ExactRational(4, 1), ExactRational(4, 5), ExactRational(24, 25), ExactRational(864, 875)}},
    };
    for (const auto& [u, want] : expected) {
        const ProductResult p = cor3_product_double(ExactRational(u), 3, policy);
        for (std::size_t i = 0; i < want.size(); ++i)
            factors.record(p.factors[i].to_rational() == want[i]);
    }
    report_tally(out, "cor3 displayed factors for u = 1, 2, 3", factors);

    Tally consistency;
    for (long u = 1; u <= 3; ++u)
        for (Order m = 1; m <= std::min<Order>(max_m, 30); ++m) {
            const Bits wb = policy.working_bits(m);
            const ProductResult p = cor3_product_single(ExactRational(u), m, policy);
            TransformKernel<BigReal> kernel;
            for (Order k = 1; k <= m; ++k)
                kernel.terms.push_back(log(BigReal(static_cast<long>(k) + u, wb)));
            const BigReal direct = alt_binom_sum(kernel, wb);
            consistency.record(abs(p.exact.log(wb) - direct) < pow2(-(bits + 32), 64));
        }
    report_tally(out, "cor3 ln(product) = alternating sum of ln(k+u)", consistency);

    const int failures = residual.failures + sandwich.failures + s1.failures + factors.failures + consistency.failures;
    return failures == 0 ? kSuccess : kVerificationFailed;
}

struct ConjectureOptions {
    int id = 0; // 0: all
    std::vector<unsigned long> nodes;
    std::vector<ExactRational> z;
    double tolerance = 1e-3;
    Bits bits = 128;
};

void print_trail(std::ostream& out, const std::string& label, const ResidualTrail& trail, double tol) {
    std::ostringstream limit;
    limit << std::setprecision(6) << aitken_limit(trail);
    out << label << ": " << to_string(classify(trail, tol)) << "  extrapolated_limit=" << limit.str() << "\n";
    for (const auto& [order, r] : trail)
        out << "  order=" << order << " residual=" << r.to_decimal(10) << "\n";
}

int verify_conjectures(const ConjectureOptions& opt, std::ostream& out) {
    const PrecisionPolicy policy(opt.bits);
    const std::vector<Order> orders = {25, 50, 100, 200};
    Tally anchors;
    auto wants = [&](int id) { return opt.id == 0 || opt.id == id; };

    if (wants(1)) {
        std::vector<ExactRational> zq = opt.z.empty() ? std::vector<ExactRational>{1, 1} : opt.z;
        ResidualTrail trail;
        for (Order m : orders) {
            std::vector<BigReal> z;
            for (const auto& q : zq)
                z.push_back(BigReal::from_rational(q, policy.working_bits(m)));
            trail.emplace_back(m, *conj1_partial(NestedLogArgs(std::move(z)), m, policy).reference_error);
        }
        std::string label = "conj1 z=(";
        for (std::size_t i = 0; i < zq.size(); ++i)
            label += (i ? "," : "") + format_fraction(zq[i]);
        print_trail(out, label + ")", trail, opt.tolerance);
        for (Order m = 1; m <= 30; ++m) {
            const BigReal u = BigReal::from_rational(ExactRational(3, 2), policy.working_bits(m));
            anchors.record(bit_identical(conj1_partial(NestedLogArgs({u}), m, policy).value,
                                         remark2_single(u, m, policy).value));
        }
    }
    if (wants(2)) {
        const ExactRational zq = opt.z.empty() ? ExactRational(1) : opt.z.front();
        ResidualTrail trail;
        for (Order m : orders)
            trail.emplace_back(m, *conj2_partial(BigReal::from_rational(zq, policy.working_bits(m)), m, policy)
                                       .reference_error);
        print_trail(out, "conj2 z=" + format_fraction(zq), trail, opt.tolerance);
        for (Order m = 1; m <= 50; ++m)
            anchors.record(conj2_partial(BigReal(0, 64), m, policy).value == 1);
    }
    if (wants(3)) {
        ResidualTrail trail;
        for (Order m : {5ul, 10ul, 20ul, 40ul})
            trail.emplace_back(m, *conj3_partial(m, policy).reference_error);
        print_trail(out, "conj3 (literal weight k*W_m)", trail, opt.tolerance);
    }
    if (wants(4)) {
        const NodeSet nodes(opt.nodes.empty() ? std::vector<unsigned long>{1, 2} : opt.nodes);
        ResidualTrail trail;
        for (Order n : orders)
            trail.emplace_back(n, -*conj4_truncated(nodes, n, policy).reference_error);
        std::string label = "conj4 nodes=(";
        for (std::size_t i = 0; i < nodes.size(); ++i)
            label += (i ? "," : "") + std::to_string(nodes[i]);
        print_trail(out, label + ")", trail, opt.tolerance);
        const Conj4Report full = conj4_residual(nodes, policy, BigReal::from_string("1e-20", 64));
        out << "  full series residual=" << full.residual.to_decimal(10)
            << " tail_bound=" << full.series.tail_error_bound.to_decimal(3) << "\n";
        const Conj4Report anchor = conj4_residual(NodeSet{1}, policy, BigReal::from_string("1e-12", 64));
        anchors.record(abs(anchor.residual) < BigReal::from_string("1e-10", 64));
        ExactRational weight_sum = 0;
        for (const auto& w : lagrange_weights(nodes).weights)
            weight_sum += w;
        anchors.record(weight_sum == 1);
    }
    if (wants(5)) {
        out << "conj5 values y_k (linear independence is not tested):\n";
        for (Order k = 1; k <= 5; ++k) {
            const RemainderSeries y = y_k(k, policy, BigReal::from_string("1e-20", 64));
            out << "  y_" << k << "=" << y.total().to_decimal(25) << " tail_bound=" << y.tail_error_bound.to_decimal(3)
                << "\n";
        }
        const RemainderSeries y1 = y_k(1, policy, BigReal::from_string("1e-13", 64));
        anchors.record(abs(y1.total() - gamma_reference(policy.working_bits(1))) < BigReal::from_string("1e-12", 64));
    }
    report_tally(out, "conjecture anchors (exact and proven checks)", anchors);
    return anchors.failures == 0 ? kSuccess : kVerificationFailed;
}

void add_parameter_options(CLI::App& cmd, RunConfig& config, std::string& u, std::string& z, std::string& nodes) {
    cmd.add_option("--formula", config.formula, "thm1|remark2a|remark2b|cor3a|cor3b|thm4|cor5|conj1|conj2|conj3|conj4|y")
        ->required();
    cmd.add_option("--u", u, "positive rational or decimal, e.g. 1/2");
    cmd.add_option("--z", z, "z value(s), comma separated");
    cmd.add_option("--nodes", nodes, "distinct positive integers, comma separated");
    cmd.add_option("--k", config.k, "index for y");
    cmd.add_option("--digits", config.digits, "significant decimal digits")->capture_default_str();
    cmd.add_option("--bits", config.bits, "target precision in bits (overrides --digits)");
    cmd.add_option("--tail", config.tail, "tail target for conj4 / y")->capture_default_str();
}

void finish_parameters(RunConfig& config, const std::string& u, const std::string& z, const std::string& nodes) {
    if (!u.empty())
        config.u = parse_rational_list(u, "--u").front();
    if (!z.empty())
        config.z = parse_rational_list(z, "--z");
    if (!nodes.empty())
        config.nodes = parse_node_list(nodes);
    validate(config);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Binomial-transform series: evaluation, convergence tables, verification", "bintrans"};
    app.require_subcommand(1);

    RunConfig eval_config;
    std::string eval_u, eval_z, eval_nodes;
    std::optional<Order> eval_m;
    auto* eval = app.add_subcommand("eval", "evaluate one formula at one order");
    add_parameter_options(*eval, eval_config, eval_u, eval_z, eval_nodes);
    eval->add_option("--m", eval_m, "order (outer truncation for remark2b, cor3b, cor5, conj4, y)");
    eval->add_option("--format", eval_config.format, "plain|csv|json")
        ->check(CLI::IsMember({"plain", "csv", "json"}))
        ->capture_default_str();

    RunConfig conv_config;
    conv_config.format = "csv";
    std::string conv_u, conv_z, conv_nodes;
    Order from = 1, to = 0, step = 1;
    unsigned threads = 1;
    auto* converge = app.add_subcommand("converge", "convergence table over a range of orders");
    add_parameter_options(*converge, conv_config, conv_u, conv_z, conv_nodes);
    converge->add_option("--from", from, "first order")->required();
    converge->add_option("--to", to, "last order")->required();
    converge->add_option("--step", step, "order increment")->capture_default_str();
    converge->add_option("--threads", threads, "worker threads")->capture_default_str();
    converge->add_option("--format", conv_config.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    std::string scope;
    Order lemma_max = 50;
    Order theorem_max = 100;
    Bits verify_bits = 256;
    ConjectureOptions conj;
    std::string conj_nodes, conj_z;
    auto* verify = app.add_subcommand("verify", "exact identity sweeps, theorem checks, conjecture evidence");
    verify->add_option("scope", scope, "lemmas|theorems|conjectures")
        ->required()
        ->check(CLI::IsMember({"lemmas", "theorems", "conjectures"}));
    verify->add_option("--max", lemma_max, "largest m, j for lemma sweeps")->capture_default_str();
    verify->add_option("--max-m", theorem_max, "largest order for theorem checks")->capture_default_str();
    verify->add_option("--bits", verify_bits, "target precision in bits")->capture_default_str();
    verify->add_option("--id", conj.id, "conjecture 1-5 (default all)");
    verify->add_option("--nodes", conj_nodes, "node set for conjecture 4");
    verify->add_option("--z", conj_z, "z values for conjectures 1 and 2");
    verify->add_option("--tol", conj.tolerance, "residual tolerance for the status verdict")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (eval->parsed()) {
            finish_parameters(eval_config, eval_u, eval_z, eval_nodes);
            const Evaluation ev = evaluate(eval_config, eval_m, policy_for(eval_config));
            print_evaluation(eval_config, ev, out);
            return kSuccess;
        }
        if (converge->parsed()) {
            finish_parameters(conv_config, conv_u, conv_z, conv_nodes);
            if (step < 1)
                throw UsageError("step must be >= 1");
            if (from > to)
                throw UsageError("empty range: --from " + std::to_string(from) + " > --to " + std::to_string(to));
            if (from < 1 && conv_config.formula != "cor3b")
                throw UsageError("m must be >= 1");
            const ConvergenceTable table = build_table(conv_config, from, to, step, threads);
            out << (conv_config.format == "csv" ? to_csv(table, conv_config.digits) : to_json(table, conv_config.digits));
            return kSuccess;
        }
        if (scope == "lemmas")
            return verify_lemmas(lemma_max, out);
        if (verify_bits < 16)
            throw UsageError("bits must be >= 16");
        if (scope == "theorems")
            return verify_theorems(theorem_max, verify_bits, out);
        if (conj.id < 0 || conj.id > 5)
            throw UsageError("--id must be 1-5");
        if (!conj_nodes.empty())
            conj.nodes = parse_node_list(conj_nodes);
        if (!conj_z.empty())
            conj.z = parse_rational_list(conj_z, "--z");
        conj.bits = std::min<Bits>(verify_bits, 128);
        return verify_conjectures(conj, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
}

} // namespace bintrans::cli
