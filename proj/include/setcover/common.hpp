#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace setcover {

/// Malformed input document; message names the offending line.
class parse_error : public std::runtime_error {
  public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

/// A caller violated an operation's precondition.
class contract_error : public std::logic_error {
  public:
    explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

/// A parameter is outside its accepted range.
class param_error : public std::invalid_argument {
  public:
    explicit param_error(const std::string& what) : std::invalid_argument(what) {}
};

// ---------------------------------------------------------------------------
// Work instrumentation
// ---------------------------------------------------------------------------

/// Counts element-touches: one unit per visit to a membership-list entry.
/// All time-bound checks in the test suites are stated in this unit, so the
/// counter is compiled into every solver path. Define SETCOVER_NO_TOUCH to
/// compile the hook out entirely.
struct TouchCounter {
#ifdef SETCOVER_NO_TOUCH
    void add(std::uint64_t = 1) {}
    std::uint64_t count() const { return 0; }
    void reset() {}
#else
    std::uint64_t n = 0;
    void add(std::uint64_t k = 1) { n += k; }
    std::uint64_t count() const { return n; }
    void reset() { n = 0; }
#endif
};

// ---------------------------------------------------------------------------
// Epsilon parameter
// ---------------------------------------------------------------------------

/// The approximation parameter epsilon, kept both as the double the caller
/// supplied and as the exact dyadic rational num/2^shift equal to it.
///
/// The deleted-pivot trigger and the critical-level search compare integer
/// counters against epsilon-fractions; doing those comparisons in rounded
/// floating point could (in principle) break the existence guarantee for a
/// critical level. The exact form makes every comparison a 128-bit integer
/// compare instead.
class EpsilonParam {
  public:
    EpsilonParam() = default;

    explicit EpsilonParam(double value) : value_(value) {
        if (!(value >= kMinEpsilon) || !(value < 1.0))
            throw param_error("epsilon must lie in [1e-6, 1), got " + std::to_string(value));
        // Decompose the double exactly: value = num * 2^-shift with num odd.
        double v = value;
        int shift = 0;
        while (v != static_cast<double>(static_cast<std::uint64_t>(v)) || v == 0.0) {
            v *= 2.0;
            ++shift;
            if (shift > 1100) throw param_error("epsilon decomposition failed");
        }
        num_ = static_cast<std::uint64_t>(v);
        while ((num_ & 1ULL) == 0ULL && shift > 0) {
            num_ >>= 1;
            --shift;
        }
        shift_ = shift;
        // For epsilon >= 1e-6 the shift stays <= 73, so d << shift fits in
        // 128 bits for any counter below 2^54.
    }

    double value() const { return value_; }

    /// d >= epsilon * p, exactly.
    bool at_least_fraction(std::uint64_t d, std::uint64_t p) const {
        return (static_cast<unsigned __int128>(d) << shift_) >=
               static_cast<unsigned __int128>(num_) * p;
    }

    /// d < epsilon * p, exactly.
    bool below_fraction(std::uint64_t d, std::uint64_t p) const { return !at_least_fraction(d, p); }

    static constexpr double kMinEpsilon = 1e-6;

  private:
    double value_ = 0.0;
    std::uint64_t num_ = 0;
    int shift_ = 0;
};

/// Level of a pivot sampled from a set with `size` uncovered elements:
/// the integer i with size in [2^i, 2^{i+1}).
inline int level_of_size(int size) {
    return std::bit_width(static_cast<unsigned>(size)) - 1;
}

/// Number of levels 0..floor(log2 n) for a universe of n elements.
inline int level_count(int n) {
    return n <= 1 ? 1 : std::bit_width(static_cast<unsigned>(n));
}

}  // namespace setcover
