#include "minrank/cli.hpp"

#include "minrank/error.hpp"
#include "minrank/estimator.hpp"
#include "minrank/instance.hpp"
#include "minrank/support_minors.hpp"
#include "minrank/syzygy.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace minrank::cli {

namespace {

struct RunConfig {
    std::string command;
    std::string in_path, out_path;
    std::uint32_t q = 32003;
    std::uint32_t m = 4, n = 4, K = 3, r = 2;
    std::optional<std::uint32_t> b;
    std::uint64_t seed = 0;
    std::uint32_t count = 1;
    bool planted = false;
    bool machine = false;
    bool assert_mode = false;
    std::uint64_t cap_enum = kDefaultEnumerationCap;
    std::uint64_t cap_matrix = kDefaultMatrixCap;
    std::optional<std::uint64_t> fix_pluecker;
};

// key=value in machine mode, "key: value" otherwise.
class Report {
public:
    Report(std::ostream& os, bool machine) : os_(os), machine_(machine) {}

    template <class T>
    void kv(const std::string& key, const T& value) {
        if (machine_)
            os_ << key << '=' << value << '\n';
        else
            os_ << key << ": " << value << '\n';
    }
    void text(const std::string& line) {
        if (!machine_) os_ << line << '\n';
    }
    bool machine() const { return machine_; }

private:
    std::ostream& os_;
    bool machine_;
};

std::string join(std::span<const Fq> x) {
    std::string s;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(x[i]);
    }
    return s;
}

const char* yes_no(bool v) { return v ? "true" : "false"; }

MinRankInstance load_instance(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InvalidArgument("cannot open instance file '" + path + "'");
    return read_instance(f);
}

std::optional<Vector> load_witness(const std::string& instance_path, const PrimeField& F) {
    const std::string path = instance_path + ".witness";
    if (instance_path.empty() || !std::filesystem::exists(path)) return std::nullopt;
    std::ifstream f(path);
    return read_witness(f, F);
}

// Instance from --in, or generated from the parameter flags and seed.
struct Loaded {
    MinRankInstance instance;
    std::optional<Vector> witness;
};

Loaded obtain_instance(const RunConfig& cfg, std::uint64_t seed) {
    if (!cfg.in_path.empty()) {
        auto inst = load_instance(cfg.in_path);
        auto w = load_witness(cfg.in_path, inst.field());
        return {std::move(inst), std::move(w)};
    }
    PrimeField F(cfg.q);
    if (cfg.planted) {
        auto p = gen_planted(F, cfg.m, cfg.n, cfg.K, cfg.r, seed);
        return {std::move(p.instance), std::move(p.witness)};
    }
    return {gen_random(F, cfg.m, cfg.n, cfg.K, cfg.r, seed), std::nullopt};
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
    PrimeField F(cfg.q);
    std::optional<MinRankInstance> inst;
    Vector witness;
    if (cfg.planted) {
        auto p = gen_planted(F, cfg.m, cfg.n, cfg.K, cfg.r, cfg.seed);
        inst.emplace(std::move(p.instance));
        witness = std::move(p.witness);
    } else {
        inst.emplace(gen_random(F, cfg.m, cfg.n, cfg.K, cfg.r, cfg.seed));
    }
    if (cfg.out_path.empty()) {
        if (cfg.planted) throw InvalidArgument("--planted needs --out to place the witness sidecar");
        write_instance(out, *inst);
        return kOk;
    }
    {
        std::ofstream f(cfg.out_path, std::ios::binary);
        if (!f) throw InvalidArgument("cannot write '" + cfg.out_path + "'");
        write_instance(f, *inst);
    }
    if (cfg.planted) {
        std::ofstream f(cfg.out_path + ".witness", std::ios::binary);
        write_witness(f, F, witness);
    }
    return kOk;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
    const unsigned b = cfg.b.value_or(1);
    auto loaded = obtain_instance(cfg, cfg.seed);
    const auto& inst = loaded.instance;

    SolveConfig sc;
    sc.enumeration_cap = cfg.cap_enum;
    sc.cell_cap = cfg.cap_matrix;
    sc.fix_pluecker = cfg.fix_pluecker;
    auto res = solve_linearization(inst, b, sc);
    const auto& d = res.diagnostics;

    Report rep(out, cfg.machine);
    rep.kv("q", inst.field().q());
    rep.kv("m", inst.m());
    rep.kv("n", inst.n());
    rep.kv("K", inst.K());
    rep.kv("r", inst.r());
    rep.kv("b", b);
    rep.kv("rows", d.rows);
    rep.kv("cols", d.cols);
    rep.kv("rank", d.rank);
    rep.kv("kernel_dim", d.kernel_dim);
    rep.kv("strategy", d.strategy);
    rep.kv("complete", yes_no(d.complete));
    rep.kv("solutions", res.solutions.size());
    for (std::size_t i = 0; i < res.solutions.size(); ++i) {
        const auto& s = res.solutions[i];
        rep.kv("solution." + std::to_string(i + 1), join(s.x));
        rep.kv("solution." + std::to_string(i + 1) + ".rank", s.achieved_rank);
        rep.kv("solution." + std::to_string(i + 1) + ".verified", yes_no(verify_solution(inst, s.x, inst.r())));
    }
    if (!d.message.empty()) rep.kv("message", d.message);

    std::string outcome = res.solutions.empty() ? "no_solution" : "solved";
    rep.kv("outcome", outcome);
    if (res.solutions.empty()) rep.text("no solution extracted at b=" + std::to_string(b));

    if (loaded.witness) {
        auto w = normalize_projective(inst.field(), *loaded.witness);
        bool found = std::any_of(res.solutions.begin(), res.solutions.end(),
                                 [&](const SolutionCandidate& s) { return s.x == w; });
        rep.kv("witness", found ? "recovered" : "missed");
        if (res.solutions.empty()) return kMismatch;
        if (cfg.assert_mode && !found) return kMismatch;
    }
    return kOk;
}

int cmd_brute(const RunConfig& cfg, std::ostream& out) {
    auto loaded = obtain_instance(cfg, cfg.seed);
    const auto& inst = loaded.instance;
    auto sols = brute_force_solve(inst, inst.r(), cfg.cap_enum);
    Report rep(out, cfg.machine);
    rep.kv("points", projective_point_count(inst.field().q(), inst.K()));
    rep.kv("solutions", sols.size());
    for (std::size_t i = 0; i < sols.size(); ++i) {
        rep.kv("solution." + std::to_string(i + 1), join(sols[i].x));
        rep.kv("solution." + std::to_string(i + 1) + ".rank", sols[i].achieved_rank);
    }
    return kOk;
}

int cmd_estimate(const RunConfig& cfg, std::ostream& out) {
    ParameterSet p{cfg.m, cfg.n, cfg.K, cfg.r, cfg.q};
    p.validate();
    auto report = complexity_report(p, cfg.b.value_or(2));
    if (cfg.machine) {
        out << format_report(report);
        return kOk;
    }
    out << "parameters: m=" << p.m << " n=" << p.n << " K=" << p.K << " r=" << p.r << "\n";
    for (const auto& e : report.entries) {
        out << "b=" << e.b << ": macaulay " << e.rows << " x " << e.cols;
        if (e.predicted) out << ", independent equations " << *e.predicted;
        if (e.precondition) out << ", precondition " << (*e.precondition ? "met" : "NOT met");
        if (e.solvable) out << ", " << (*e.solvable ? "solvable" : "not solvable");
        out << "\n      cost model: dense " << e.cost_dense << ", sparse " << e.cost_sparse << "\n";
    }
    if (p.r == p.n) out << "degenerate: r = n, no (r+1)-minors\n";
    return kOk;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
    Report rep(out, cfg.machine);
    bool mismatch = false;
    auto verdict = [&](const std::string& key, bool match, bool asserted) {
        rep.kv(key, match ? "MATCH" : (asserted ? "MISMATCH" : "MISMATCH(unasserted)"));
        if (!match && asserted) mismatch = true;
    };

    for (std::uint32_t i = 0; i < cfg.count; ++i) {
        const std::uint64_t seed = cfg.seed + i;
        auto loaded = obtain_instance(cfg, seed);
        const auto& inst = loaded.instance;
        const std::string pre = cfg.count > 1 ? "seed." + std::to_string(seed) + "." : "";
        if (cfg.count > 1) rep.text("seed " + std::to_string(seed));

        std::vector<unsigned> bs;
        if (cfg.b) {
            if (*cfg.b <= 2) bs.push_back(*cfg.b);
        } else {
            bs = {1, 2};
        }
        if (inst.r() < inst.n()) {
            for (unsigned b : bs) {
                auto rc = rank_check(inst, b, {}, cfg.cap_matrix);
                const std::string k = pre + "rank.b" + std::to_string(b);
                rep.kv(k + ".observed", rc.observed_rank);
                rep.kv(k + ".predicted", rc.predicted);
                rep.kv(k + ".precondition", yes_no(rc.precondition_met));
                verdict(k, rc.match, rc.precondition_met && !loaded.witness);
            }

            // x-only syzygies of degree 1 against the generator count
            const std::uint64_t expected = binom(inst.m() + 1, 2) * binom(inst.n(), inst.r() + 2);
            const bool applies = inst.K() >= inst.m() * (inst.n() - inst.r()) && !loaded.witness;
            auto dim = xonly_syzygy_dim(inst, 1, {}, cfg.cap_matrix);
            rep.kv(pre + "syzygy.d1.observed", dim);
            rep.kv(pre + "syzygy.d1.predicted", expected);
            rep.kv(pre + "syzygy.d1.generic_regime", yes_no(applies));
            verdict(pre + "syzygy.d1", dim == expected, applies);
            if (applies) {
                auto span = sprime_span_check(inst);
                rep.kv(pre + "syzygy.generators", span.generators);
                rep.kv(pre + "syzygy.generators_rank", span.stacked_rank);
                verdict(pre + "syzygy.span", span.spans(), true);
            }
        }

        if (inst.r() + 1 == inst.n()) {
            const std::uint32_t b = cfg.b.value_or(inst.n() + 1);
            auto formula = submax_dim_formula(inst.m(), inst.n(), inst.K(), b);
            auto observed = submax_dim_empirical(inst, b, {}, cfg.cap_matrix);
            const bool applies = inst.K() >= inst.m() && !loaded.witness;
            const std::string k = pre + "submax.b" + std::to_string(b);
            rep.kv(k + ".observed", observed);
            rep.kv(k + ".predicted", formula);
            verdict(k, BigInt(observed) == formula, applies);
        }
    }
    return (mismatch && cfg.assert_mode) ? kMismatch : kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"SupportMinors toolkit for MinRank over prime fields", "minrank"};
    app.require_subcommand(1);

    auto add_params = [&](CLI::App* sub) {
        sub->add_option("--q", cfg.q, "prime field size")->capture_default_str();
        sub->add_option("--m", cfg.m, "matrix rows")->capture_default_str();
        sub->add_option("--n", cfg.n, "matrix columns")->capture_default_str();
        sub->add_option("--K", cfg.K, "number of matrices")->capture_default_str();
        sub->add_option("--r", cfg.r, "target rank")->capture_default_str();
    };
    auto add_common = [&](CLI::App* sub) {
        add_params(sub);
        sub->add_option("--seed", cfg.seed, "64-bit generator seed")->capture_default_str();
        sub->add_flag("--planted", cfg.planted, "plant a rank-r solution");
        sub->add_option("--in", cfg.in_path, "instance file");
        sub->add_flag("--machine", cfg.machine, "key=value output");
        sub->add_flag("--assert", cfg.assert_mode, "exit 3 on a mismatch");
        sub->add_option("--cap-enum", cfg.cap_enum, "enumeration cap (projective points)")->capture_default_str();
        sub->add_option("--cap-matrix", cfg.cap_matrix, "matrix cap (cells)")->capture_default_str();
    };

    auto* gen = app.add_subcommand("gen", "generate an instance file");
    add_params(gen);
    gen->add_option("--seed", cfg.seed, "64-bit generator seed");
    gen->add_flag("--planted", cfg.planted, "plant a rank-r solution and write <out>.witness");
    gen->add_option("--out", cfg.out_path, "output file (stdout if omitted)");

    auto* solve = app.add_subcommand("solve", "solve by linearization at b = 1 or 2");
    add_common(solve);
    solve->add_option("--b", cfg.b, "x-degree of the Macaulay matrix");
    solve->add_option("--fix-pluecker", cfg.fix_pluecker, "set c_T = 1 for the T of this colex rank");

    auto* check = app.add_subcommand("check", "compare observed ranks and syzygy dimensions with closed forms");
    add_common(check);
    check->add_option("--b", cfg.b, "restrict to this b");
    check->add_option("--count", cfg.count, "number of consecutive seeds")->capture_default_str();

    auto* estimate = app.add_subcommand("estimate", "evaluate the counting formulas");
    add_params(estimate);
    estimate->add_option("--b", cfg.b, "largest b to report (default 2)");
    estimate->add_flag("--machine", cfg.machine, "key=value output");

    auto* brute = app.add_subcommand("brute", "enumerate all rank <= r pencils");
    add_common(brute);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*gen) return cmd_gen(cfg, out);
        if (*solve) {
            if (cfg.b && *cfg.b != 1 && *cfg.b != 2) throw InvalidArgument("solve: --b must be 1 or 2");
            return cmd_solve(cfg, out);
        }
        if (*check) return cmd_check(cfg, out);
        if (*estimate) return cmd_estimate(cfg, out);
        if (*brute) return cmd_brute(cfg, out);
    } catch (const CapExceeded& e) {
        err << "refused: " << e.what() << "\n";
        return kCapRefused;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace minrank::cli
