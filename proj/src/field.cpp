#include "minrank/field.hpp"

#include "minrank/error.hpp"

#include <string>

namespace minrank {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1U) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1U;
    }
    return r;
}

}  // namespace

// Deterministic Miller-Rabin; these bases are exact for all 64-bit inputs.
bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
    if (q < 2 || q >= (1U << 31)) throw InvalidArgument("field modulus out of range: " + std::to_string(q));
    if (!is_prime(q)) throw InvalidArgument("field modulus is not prime: " + std::to_string(q));
}

Fq PrimeField::pow(Fq a, std::uint64_t e) const {
    return static_cast<Fq>(powmod64(a, e, q_));
}

std::optional<Fq> PrimeField::try_inv(Fq a) const {
    if (a % q_ == 0) return std::nullopt;
    return pow(a, q_ - 2);
}

Fq PrimeField::inv(Fq a) const {
    auto r = try_inv(a);
    if (!r) throw InvalidArgument("inverse of zero");
    return *r;
}

Fq PrimeField::reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(q_);
    if (r < 0) r += q_;
    return static_cast<Fq>(r);
}

}  // namespace minrank

namespace minrank {

std::optional<Fq> sqrt(const PrimeField& F, Fq a) {
    const std::uint32_t q = F.q();
    if (a == 0) return Fq{0};
    if (q == 2) return a;
    if (F.pow(a, (q - 1) / 2) != 1) return std::nullopt;
    std::uint32_t s = 0, d = q - 1;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    Fq z = 2;
    while (F.pow(z, (q - 1) / 2) != q - 1) ++z;
    Fq c = F.pow(z, d), t = F.pow(a, d), root = F.pow(a, (d + 1) / 2);
    std::uint32_t mexp = s;
    while (t != 1) {
        std::uint32_t i = 0;
        Fq tt = t;
        while (tt != 1) {
            tt = F.mul(tt, tt);
            ++i;
        }
        Fq bpow = c;
        for (std::uint32_t k = 0; k + 1 < mexp - i; ++k) bpow = F.mul(bpow, bpow);
        root = F.mul(root, bpow);
        c = F.mul(bpow, bpow);
        t = F.mul(t, c);
        mexp = i;
    }
    return root;
}

}  // namespace minrank
