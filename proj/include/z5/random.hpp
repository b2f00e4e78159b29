#pragma once

#include <cstdint>
#include <string_view>

#include "z5/group_color.hpp"
#include "z5/plane_graph.hpp"

namespace z5 {

/// splitmix64; the whole stream is a function of the seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /// Independent stream for (seed, tag, index).
    static Rng derive(std::uint64_t seed, std::string_view tag, std::uint64_t index);

    std::uint64_t next();
    /// Uniform in [0, n); n > 0. Rejection sampling, so platform independent.
    std::uint64_t below(std::uint64_t n);
    int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::uint64_t state_;
};

enum class PhiMode { Uniform, Zero, Sparse };

/// Each edge gets a random stored orientation and a value: uniform in Z_m,
/// always 0, or nonzero with probability 1/4.
PhiAssignment random_phi(const Graph& g, Rng& rng, PhiMode mode = PhiMode::Uniform, int modulus = kDefaultModulus);

/// Stacked triangulation: K3, then each new vertex goes into a uniformly
/// chosen inner face and is joined to its corners. n >= 3.
PlaneGraph random_triangulation(int n, Rng& rng);
PlaneGraph random_triangulation(int n, std::uint64_t seed);

/// Near-triangulation grown from K3 by stacking into inner faces, adding
/// ears on outer edges (which leaves a chord) and subdividing outer edges
/// towards their apex, then diversified by edge flips. Labels are shuffled
/// and the outer cycle starts at a random vertex. n >= 3.
PlaneGraph random_near_triangulation(int n, Rng& rng);

/// Random subset of Z_m of the given size.
ColorSet random_subset(int size, Rng& rng, int modulus = kDefaultModulus);

}  // namespace z5
