#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "z5/gcg.hpp"
#include "z5/random.hpp"

namespace z5 {

/// Knobs shared by every check. `samples` counts (phi, F) draws per
/// structure, `instances` counts randomly generated structures; each check
/// documents which of them it reads.
struct CheckConfig {
    int n_max = 10;
    int samples = 100;
    int instances = 100;
    std::uint64_t seed = 1;
    int jobs = 1;
    PhiMode phi_mode = PhiMode::Uniform;
};

struct Counterexample {
    std::string note;
    /// One instance, or one per part for wheel strings.
    std::vector<Instance> instances;
};

struct CheckReport {
    std::string property;
    CheckConfig config;
    std::uint64_t instances_tested = 0;
    std::uint64_t excluded = 0;
    std::uint64_t counterexample_count = 0;
    /// The first few counterexamples, in instance order.
    std::vector<Counterexample> counterexamples;
    /// Interpretation flags printed in the header.
    std::vector<std::string> flags;
    double wall_seconds = 0;
    std::string started;

    bool passed() const { return counterexample_count == 0; }
};

/// Property ids accepted by run_check, in suite order.
const std::vector<std::string>& check_ids();

/// Default scale for a property id; throws std::invalid_argument on an unknown id.
CheckConfig default_config(const std::string& id);

/// Throws std::invalid_argument on an unknown id or a config beyond the
/// desk-scale caps (n_max <= 14, positive counts).
CheckReport run_check(const std::string& id, const CheckConfig& cfg);

/// Header lines start with '#' and carry the timestamp, wall clock and
/// flags; everything after them depends only on the config. The last line
/// is `PASS` or `FAIL <count>`.
void write_report(std::ostream& out, const CheckReport& report);
/// The seed-determined part of the report (no '#' lines).
std::string report_body(const CheckReport& report);

CheckReport check_calculus(const CheckConfig& cfg);
CheckReport check_prop1(const CheckConfig& cfg);
CheckReport check_theorem2(const CheckConfig& cfg);
CheckReport check_short_cycle(const CheckConfig& cfg);
CheckReport check_theorem3(const CheckConfig& cfg);
CheckReport check_lemma1(const CheckConfig& cfg);
CheckReport check_lemma2(const CheckConfig& cfg);
CheckReport check_lemma3a(const CheckConfig& cfg);
CheckReport check_lemma3b(const CheckConfig& cfg);
CheckReport check_corollary1(const CheckConfig& cfg);
CheckReport check_lemma4(const CheckConfig& cfg);
CheckReport check_lemma5(const CheckConfig& cfg);
CheckReport check_theorem4_bound(const CheckConfig& cfg);
CheckReport check_corollary(const CheckConfig& cfg);

/// The two-inner-vertex near-triangulations of the extendability lemma:
/// outer cycle 0..k-1 (v1 = 0), u = k, v = k+1. `split` is the index i of
/// the statement (1-based outer labels). Shape a: u on v1..vi, v on vi..vk,v1.
/// Shape b: u on v2..vi, v on v1,v2,vi..vk. Throws std::invalid_argument
/// when i is out of range.
PlaneGraph two_inner_vertices_a(int k, int split);
PlaneGraph two_inner_vertices_b(int k, int split);

}  // namespace z5
