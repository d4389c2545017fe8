#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ocijac {

// Binomial coefficient as a signed 64-bit count. Returns 0 for k < 0 or
// k > n, and 0 for n < 0 (no negative upper arguments arise in this code
// base; graded pieces with negative degree are empty).
inline long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned long long acc = 1;
    for (long long i = 1; i <= k; ++i) {
        // exact at every step: acc * (n-k+i) is divisible by i
        unsigned __int128 t = (unsigned __int128)acc * (unsigned long long)(n - k + i);
        t /= (unsigned long long)i;
        if (t > (unsigned __int128)INT64_MAX)
            throw std::overflow_error("binomial: result does not fit in 64 bits");
        acc = (unsigned long long)t;
    }
    return (long long)acc;
}

// Deterministic splitmix64 generator. Used wherever reproducible pseudo-random
// draws are needed (random subspaces, test instances); output is identical
// across platforms for a given seed.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n) via rejection-free modulo (bias negligible for the
    // small ranges used here, and determinism is what matters)
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    long long int_in(long long lo, long long hi) {  // inclusive bounds
        return lo + (long long)below((std::uint64_t)(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

// FNV-1a 64-bit digest, rendered as 16 lowercase hex characters.
inline std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[(size_t)i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

// Syntax error in polynomial or config text; position is a 0-based offset
// into the parsed string.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Raised when a computation that presumes a smooth transversal configuration
// detects evidence against it (for example a trace piece of dimension != 1).
class SmoothnessDiagnosticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ocijac
