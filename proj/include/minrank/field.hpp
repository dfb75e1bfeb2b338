#pragma once

#include <cstdint>
#include <optional>

namespace minrank {

// Field elements are plain residues in [0, q).
using Fq = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Prime field GF(q), 2 <= q < 2^31.
///
/// Elements are stored as canonical residues; all operations take and return
/// reduced values. Construction throws InvalidArgument on a composite or
/// out-of-range modulus.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t q);

    std::uint32_t q() const { return q_; }

    Fq add(Fq a, Fq b) const {
        std::uint32_t s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    Fq sub(Fq a, Fq b) const { return a >= b ? a - b : a + q_ - b; }
    Fq neg(Fq a) const { return a == 0 ? 0 : q_ - a; }
    Fq mul(Fq a, Fq b) const {
        return static_cast<Fq>(static_cast<std::uint64_t>(a) * b % q_);
    }
    // a + b*c
    Fq mul_add(Fq a, Fq b, Fq c) const {
        return static_cast<Fq>((a + static_cast<std::uint64_t>(b) * c) % q_);
    }
    Fq pow(Fq a, std::uint64_t e) const;

    // Inverse of zero has no value.
    std::optional<Fq> try_inv(Fq a) const;
    // Throws InvalidArgument when a == 0.
    Fq inv(Fq a) const;

    // Reduce an arbitrary signed integer into [0, q).
    Fq reduce(std::int64_t v) const;

    // (-1)^k
    Fq sign(std::size_t k) const { return (k & 1U) ? q_ - 1 : 1; }

    bool operator==(const PrimeField& o) const { return q_ == o.q_; }

private:
    std::uint32_t q_;
};

}  // namespace minrank

namespace minrank {

// Square root in GF(q) (Tonelli-Shanks); none for non-residues.
std::optional<Fq> sqrt(const PrimeField& field, Fq a);

}  // namespace minrank
