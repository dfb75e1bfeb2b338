#include "minrank/estimator.hpp"

#include "minrank/error.hpp"

#include <sstream>

namespace minrank {

void ParameterSet::validate() const {
    if (m == 0 || n == 0 || K == 0) throw InvalidArgument("parameters: m, n, K must be positive");
    if (r == 0 || r > n) throw InvalidArgument("parameters: need 1 <= r <= n");
}

BigInt eqs_b1(const ParameterSet& p) {
    BigInt rows = BigInt(p.m) * binom_big(p.n, p.r + 1);
    BigInt cols = BigInt(p.K) * binom_big(p.n, p.r);
    return rows < cols ? rows : cols;
}

BigInt syzygy_count_b2(const ParameterSet& p) { return binom_big(p.m + 1, 2) * binom_big(p.n, p.r + 2); }

B2Count eqs_b2(const ParameterSet& p) {
    BigInt eqs = BigInt(p.m) * binom_big(p.n, p.r + 1);
    BigInt rows = BigInt(p.K) * eqs - syzygy_count_b2(p);
    BigInt cols = binom_big(p.K + 1, 2) * binom_big(p.n, p.r);
    bool pre = eqs <= BigInt(p.K) * binom_big(p.n, p.r);
    return {rows < cols ? rows : cols, pre};
}

bool solvable(const ParameterSet& p, unsigned b) {
    const BigInt eqs = BigInt(p.m) * binom_big(p.n, p.r + 1);
    if (b == 1) return eqs >= BigInt(p.K) * binom_big(p.n, p.r) - 1;
    if (b == 2)
        return BigInt(p.K) * eqs - syzygy_count_b2(p) >= binom_big(p.K + 1, 2) * binom_big(p.n, p.r) - 1;
    throw InvalidArgument("solvable: only b = 1 and b = 2 are covered");
}

MacaulayDims macaulay_dims(const ParameterSet& p, unsigned b) {
    if (b == 0) throw InvalidArgument("macaulay_dims: b must be >= 1");
    return {binom_big(p.K + b - 2, b - 1) * p.m * binom_big(p.n, p.r + 1), binom_big(p.K + b - 1, b) * binom_big(p.n, p.r)};
}

CostEstimate cost_estimate(const ParameterSet& p, unsigned b) {
    auto d = macaulay_dims(p, b);
    BigInt mn = d.rows < d.cols ? d.rows : d.cols;
    BigInt dense = d.rows * d.cols * mn;
    BigInt sparse = d.rows == 0 ? BigInt(0) : 3 * d.cols * d.cols * BigInt(p.K) * (p.r + 1);
    return {dense, sparse};
}

ComplexityReport complexity_report(const ParameterSet& p, unsigned max_b) {
    ComplexityReport rep{p, {}};
    for (unsigned b = 1; b <= max_b; ++b) {
        ComplexityEntry e;
        e.b = b;
        auto d = macaulay_dims(p, b);
        e.rows = d.rows;
        e.cols = d.cols;
        if (b == 1) {
            e.predicted = eqs_b1(p);
            e.solvable = solvable(p, 1);
        } else if (b == 2) {
            auto c = eqs_b2(p);
            e.predicted = c.count;
            e.precondition = c.precondition_met;
            e.solvable = solvable(p, 2);
        }
        auto cost = cost_estimate(p, b);
        e.cost_dense = cost.dense;
        e.cost_sparse = cost.sparse;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

std::string format_report(const ComplexityReport& report) {
    std::ostringstream os;
    const auto& p = report.params;
    os << "m=" << p.m << "\nn=" << p.n << "\nK=" << p.K << "\nr=" << p.r << "\n";
    auto opt_bool = [](const std::optional<bool>& v) -> std::string {
        return v ? (*v ? "true" : "false") : "none";
    };
    for (const auto& e : report.entries) {
        os << "\nb=" << e.b << "\n";
        os << "rows=" << e.rows << "\n";
        os << "cols=" << e.cols << "\n";
        os << "predicted=" << (e.predicted ? e.predicted->str() : std::string("none")) << "\n";
        os << "precondition=" << opt_bool(e.precondition) << "\n";
        os << "solvable=" << opt_bool(e.solvable) << "\n";
        os << "cost_dense=" << e.cost_dense << "\n";
        os << "cost_sparse=" << e.cost_sparse << "\n";
    }
    return os.str();
}

}  // namespace minrank
