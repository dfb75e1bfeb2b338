#include "minrank/instance.hpp"

#include "minrank/error.hpp"
#include "minrank/rng.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace minrank {

MinRankInstance::MinRankInstance(PrimeField field, std::uint32_t m, std::uint32_t n, std::uint32_t r,
                                 std::vector<DenseMatrix> matrices)
    : field_(field), m_(m), n_(n), r_(r), matrices_(std::move(matrices)) {
    if (m == 0 || n == 0) throw InvalidArgument("instance: m and n must be positive");
    if (r == 0 || r > n) throw InvalidArgument("instance: need 1 <= r <= n");
    if (matrices_.empty()) throw InvalidArgument("instance: need K >= 1 matrices");
    for (const auto& M : matrices_) {
        if (M.rows() != m || M.cols() != n) throw InvalidArgument("instance: matrix is not m x n");
        if (!(M.field() == field)) throw InvalidArgument("instance: matrix over a different field");
    }
}

Vector normalize_projective(const PrimeField& field, Vector x) {
    std::size_t i = 0;
    while (i < x.size() && x[i] == 0) ++i;
    if (i == x.size()) throw InvalidArgument("cannot normalize the zero vector");
    Fq s = field.inv(x[i]);
    for (auto& v : x) v = field.mul(v, s);
    return x;
}

DenseMatrix evaluate_pencil(const MinRankInstance& inst, std::span<const Fq> x) {
    if (x.size() != inst.K()) throw InvalidArgument("pencil: expected " + std::to_string(inst.K()) + " coefficients");
    const auto& F = inst.field();
    DenseMatrix out(F, inst.m(), inst.n());
    for (std::size_t l = 0; l < x.size(); ++l) {
        if (x[l] == 0) continue;
        const auto& M = inst.matrix(l);
        for (std::size_t k = 0; k < inst.m(); ++k)
            for (std::size_t j = 0; j < inst.n(); ++j) out(k, j) = F.mul_add(out(k, j), x[l], M(k, j));
    }
    return out;
}

namespace {

DenseMatrix random_matrix(const PrimeField& F, ChaChaRng& rng, std::size_t rows, std::size_t cols) {
    DenseMatrix M(F, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) M(i, j) = rng.uniform(F.q());
    return M;
}

}  // namespace

PlantedInstance gen_planted(const PrimeField& field, std::uint32_t m, std::uint32_t n, std::uint32_t K,
                            std::uint32_t r, std::uint64_t seed) {
    if (K == 0) throw InvalidArgument("gen_planted: K must be >= 1");
    if (r == 0 || r > std::min(m, n)) throw InvalidArgument("gen_planted: need 1 <= r <= min(m, n)");
    ChaChaRng rng(seed);
    std::vector<DenseMatrix> mats;
    mats.reserve(K);
    for (std::uint32_t l = 0; l + 1 < K; ++l) mats.push_back(random_matrix(field, rng, m, n));

    Vector x(K);
    for (std::uint32_t l = 0; l + 1 < K; ++l) x[l] = rng.uniform(field.q());
    x[K - 1] = 1 + rng.uniform(field.q() - 1);

    DenseMatrix U = random_matrix(field, rng, m, r);
    DenseMatrix V = random_matrix(field, rng, r, n);
    DenseMatrix target = U * V;

    // M_K = x_K^{-1} (U V - sum_{l<K} x_l M_l)
    DenseMatrix last = target;
    for (std::uint32_t l = 0; l + 1 < K; ++l) last = last + scale(mats[l], field.neg(x[l]));
    mats.push_back(scale(last, field.inv(x[K - 1])));

    return {MinRankInstance(field, m, n, r, std::move(mats)), std::move(x)};
}

MinRankInstance gen_random(const PrimeField& field, std::uint32_t m, std::uint32_t n, std::uint32_t K,
                           std::uint32_t r, std::uint64_t seed) {
    ChaChaRng rng(seed);
    std::vector<DenseMatrix> mats;
    mats.reserve(K);
    for (std::uint32_t l = 0; l < K; ++l) mats.push_back(random_matrix(field, rng, m, n));
    return MinRankInstance(field, m, n, r, std::move(mats));
}

bool verify_solution(const MinRankInstance& inst, std::span<const Fq> x, std::uint32_t r) {
    DenseMatrix Mx = evaluate_pencil(inst, x);
    if (Mx.is_zero()) return false;
    return rank(Mx) <= r;
}

std::uint64_t projective_point_count(std::uint32_t q, std::uint32_t K) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 0, power = 1;
    for (std::uint32_t i = 0; i < K; ++i) {
        if (total > kMax - power) return kMax;
        total += power;
        if (i + 1 < K) {
            if (power > kMax / q) return kMax;
            power *= q;
        }
    }
    return total;
}

std::vector<SolutionCandidate> brute_force_solve(const MinRankInstance& inst, std::uint32_t r, std::uint64_t cap) {
    const auto& F = inst.field();
    const std::uint32_t K = inst.K();
    const std::uint64_t points = projective_point_count(F.q(), K);
    if (points > cap)
        throw CapExceeded("brute force: " + std::to_string(points) + " projective points exceed cap " +
                          std::to_string(cap));

    std::vector<SolutionCandidate> out;
    // Leading 1 at position p, free tail after it. Larger p sorts first, and
    // the odometer walks the tail in lexicographic order.
    for (std::uint32_t p = K; p-- > 0;) {
        Vector x(K, 0);
        x[p] = 1;
        for (;;) {
            DenseMatrix Mx = evaluate_pencil(inst, x);
            if (!Mx.is_zero()) {
                std::size_t rk = rank(Mx);
                if (rk <= r) out.push_back({x, rk});
            }
            bool carry = true;
            for (std::uint32_t i = K; carry && i > p + 1;) {
                --i;
                if (++x[i] == F.q())
                    x[i] = 0;
                else
                    carry = false;
            }
            if (carry) break;
        }
    }
    return out;
}

MinRankInstance decoding_to_minrank(const DenseMatrix& received, const std::vector<DenseMatrix>& basis,
                                    std::uint32_t radius) {
    std::vector<DenseMatrix> mats;
    mats.reserve(basis.size() + 1);
    for (const auto& B : basis) {
        if (B.rows() != received.rows() || B.cols() != received.cols())
            throw InvalidArgument("decoding: code basis and received matrix differ in shape");
        mats.push_back(B);
    }
    mats.push_back(received);
    return MinRankInstance(received.field(), static_cast<std::uint32_t>(received.rows()),
                           static_cast<std::uint32_t>(received.cols()), radius, std::move(mats));
}

std::optional<Vector> decoding_coefficients(const PrimeField& field, std::span<const Fq> solution) {
    if (solution.empty()) throw InvalidArgument("decoding: empty solution");
    Fq lambda = solution.back();
    if (lambda == 0) return std::nullopt;
    Fq s = field.neg(field.inv(lambda));
    Vector c(solution.begin(), solution.end() - 1);
    for (auto& v : c) v = field.mul(v, s);
    return c;
}

void write_instance(std::ostream& os, const MinRankInstance& inst) {
    os << "minrank v1\n";
    os << "q " << inst.field().q() << "\n";
    os << "m " << inst.m() << " n " << inst.n() << " K " << inst.K() << " r " << inst.r() << "\n";
    for (std::uint32_t l = 0; l < inst.K(); ++l) {
        os << "matrix " << (l + 1) << "\n";
        const auto& M = inst.matrix(l);
        for (std::size_t i = 0; i < M.rows(); ++i) {
            for (std::size_t j = 0; j < M.cols(); ++j) {
                if (j) os << ' ';
                os << M(i, j);
            }
            os << "\n";
        }
    }
}

std::string format_instance(const MinRankInstance& inst) {
    std::ostringstream os;
    write_instance(os, inst);
    return os.str();
}

namespace {

class LineReader {
public:
    explicit LineReader(std::istream& is) : is_(is) {}

    std::istringstream next(const char* what) {
        std::string line;
        if (!std::getline(is_, line)) fail(std::string("unexpected end of input, expected ") + what);
        ++lineno_;
        if (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t'))
            fail("trailing whitespace");
        return std::istringstream(line);
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw InvalidArgument("instance file line " + std::to_string(lineno_) + ": " + msg);
    }

    void expect_word(std::istringstream& ls, const std::string& word) const {
        std::string w;
        if (!(ls >> w) || w != word) fail("expected '" + word + "'");
    }

    std::uint64_t read_uint(std::istringstream& ls) const {
        std::string tok;
        if (!(ls >> tok) || tok.empty() || tok.size() > 19 ||
            tok.find_first_not_of("0123456789") != std::string::npos)
            fail("expected a base-10 nonnegative integer");
        return std::stoull(tok);
    }

    void expect_end(std::istringstream& ls) const {
        std::string extra;
        if (ls >> extra) fail("unexpected token '" + extra + "'");
    }

private:
    std::istream& is_;
    std::size_t lineno_ = 0;
};

std::uint32_t to_u32(const LineReader& rd, std::uint64_t v) {
    if (v > std::numeric_limits<std::uint32_t>::max()) rd.fail("value out of range");
    return static_cast<std::uint32_t>(v);
}

}  // namespace

MinRankInstance read_instance(std::istream& is) {
    LineReader rd(is);
    auto l = rd.next("header");
    rd.expect_word(l, "minrank");
    rd.expect_word(l, "v1");
    rd.expect_end(l);

    l = rd.next("q line");
    rd.expect_word(l, "q");
    PrimeField F(to_u32(rd, rd.read_uint(l)));
    rd.expect_end(l);

    l = rd.next("dimension line");
    rd.expect_word(l, "m");
    auto m = to_u32(rd, rd.read_uint(l));
    rd.expect_word(l, "n");
    auto n = to_u32(rd, rd.read_uint(l));
    rd.expect_word(l, "K");
    auto K = to_u32(rd, rd.read_uint(l));
    rd.expect_word(l, "r");
    auto r = to_u32(rd, rd.read_uint(l));
    rd.expect_end(l);
    if (m == 0 || n == 0 || K == 0) rd.fail("m, n, K must be positive");

    std::vector<DenseMatrix> mats;
    for (std::uint32_t idx = 1; idx <= K; ++idx) {
        l = rd.next("matrix header");
        rd.expect_word(l, "matrix");
        if (rd.read_uint(l) != idx) rd.fail("matrices out of order");
        rd.expect_end(l);
        DenseMatrix M(F, m, n);
        for (std::uint32_t i = 0; i < m; ++i) {
            auto row = rd.next("matrix row");
            for (std::uint32_t j = 0; j < n; ++j) {
                auto v = rd.read_uint(row);
                if (v >= F.q()) rd.fail("entry not in [0, q)");
                M(i, j) = static_cast<Fq>(v);
            }
            rd.expect_end(row);
        }
        mats.push_back(std::move(M));
    }
    std::string rest;
    while (std::getline(is, rest))
        if (!rest.empty()) rd.fail("trailing content after last matrix");
    return MinRankInstance(F, m, n, r, std::move(mats));
}

MinRankInstance parse_instance(const std::string& text) {
    std::istringstream is(text);
    return read_instance(is);
}

void write_witness(std::ostream& os, const PrimeField& field, std::span<const Fq> x) {
    os << "minrank-witness v1\nq " << field.q() << "\nK " << x.size() << "\nx";
    for (Fq v : x) os << ' ' << v;
    os << "\n";
}

Vector read_witness(std::istream& is, const PrimeField& field) {
    LineReader rd(is);
    auto l = rd.next("witness header");
    rd.expect_word(l, "minrank-witness");
    rd.expect_word(l, "v1");
    l = rd.next("q line");
    rd.expect_word(l, "q");
    if (rd.read_uint(l) != field.q()) rd.fail("witness field does not match instance");
    l = rd.next("K line");
    rd.expect_word(l, "K");
    auto K = rd.read_uint(l);
    l = rd.next("x line");
    rd.expect_word(l, "x");
    Vector x;
    for (std::uint64_t i = 0; i < K; ++i) {
        auto v = rd.read_uint(l);
        if (v >= field.q()) rd.fail("witness entry not in [0, q)");
        x.push_back(static_cast<Fq>(v));
    }
    rd.expect_end(l);
    return x;
}

}  // namespace minrank
