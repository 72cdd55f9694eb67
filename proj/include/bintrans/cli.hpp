#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bintrans/bignum.hpp"
#include "bintrans/constants.hpp"

namespace bintrans::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Bad flags or parameters; reported as one line and exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string formula;
    std::optional<ExactRational> u;
    std::vector<ExactRational> z;
    std::vector<unsigned long> nodes;
    std::optional<Order> k;
    int digits = 15;
    std::optional<Bits> bits;
    std::string format = "plain";
    /// Remainder-series tail target for conj4 / y, as a decimal literal.
    std::string tail = "1e-20";
};

/// Throws UsageError when a parameter the formula needs is missing or out
/// of range.
void validate(const RunConfig& config);

/// Precision policy for a config: --bits if given, otherwise enough bits for
/// digits + 8 decimal digits.
PrecisionPolicy policy_for(const RunConfig& config);

/// One evaluation plus the extras the CLI prints.
struct Evaluation {
    PartialResult result;
    std::vector<std::string> factors;
    std::optional<BigReal> tail_bound;
};

/// Evaluates the configured formula at order m. For conj4 and y an absent m
/// means "full series with tail".
Evaluation evaluate(const RunConfig& config, std::optional<Order> m, const PrecisionPolicy& policy);

/// The value a convergence table for this formula is measured against.
BigReal reference_value(const RunConfig& config, const PrecisionPolicy& policy);

/// Builds the table for orders lo, lo+step, ..., <= hi on `threads` workers.
/// Row contents do not depend on the number of workers.
ConvergenceTable build_table(const RunConfig& config, Order lo, Order hi, Order step, unsigned threads);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bintrans::cli
