#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace tspgap {

// ---------------------------------------------------------------------------
// Error types.  Construction errors derive from std::invalid_argument,
// runtime/verification errors from std::runtime_error.
// ---------------------------------------------------------------------------

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonSymmetricCirculant : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RowSumError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonzeroDiagonal : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Eigensolver did not reduce the off-diagonal norm within its rotation budget.
struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simplex exceeded its pivot budget.
struct IterationLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A closed-form identity and its direct evaluation disagree; signals a
// corrupted input or an implementation bug.
struct IdentityViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal cross-check failed (these should never fire on valid inputs).
struct VerificationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A constructed certificate failed its own feasibility verification.
struct InfeasibleWitness : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The direct and reduced forms of a PSD test returned different verdicts.
struct VerdictMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Tolerances.
// ---------------------------------------------------------------------------

inline constexpr double kDefaultTol = 1e-8;

// ---------------------------------------------------------------------------
// Deterministic, splittable random source.  All randomness flows from a
// single 64-bit seed; child streams are derived with splitmix64 so that
// adding a consumer never perturbs existing streams.
// ---------------------------------------------------------------------------

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed) {
        std::uint64_t s = seed;
        gen_.seed(splitmix64(s));
    }

    std::uint64_t seed() const { return seed_; }

    // Independent child stream; deterministic in (seed, tag).
    Rng split(std::uint64_t tag) const {
        std::uint64_t s = seed_ ^ (0xa0761d6478bd642fULL * (tag + 1));
        return Rng(splitmix64(s));
    }

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0,1); 53-bit mantissa, identical on every platform.
    double uniform() { return double(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n).
    std::size_t index(std::size_t n) {
        return std::size_t(uniform() * double(n)) % n;
    }

  private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

}  // namespace tspgap
