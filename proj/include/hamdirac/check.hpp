#pragma once

#include "hamdirac/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hamdirac::check {

/// Tallies for one vertex count of the exhaustive solver-vs-oracle run.
struct Counts {
    std::size_t n = 0;
    std::uint64_t graphs = 0;  // labeled graphs with δ ≥ ⌊n/2⌋
    std::uint64_t agree_hamiltonian = 0;
    std::uint64_t agree_none = 0;
    std::uint64_t disagree = 0;
    std::uint64_t none_cut_vertex = 0;
    std::uint64_t none_independent_set = 0;
    std::uint64_t none_rotation_exhausted = 0;
    std::uint64_t family_a = 0;       // NONE graphs recognised as family A
    std::uint64_t family_b = 0;       // ... and as family B
    std::uint64_t unclassified_none = 0;
    std::uint64_t bad_cycles = 0;        // returned cycles failing verification
    std::uint64_t bad_certificates = 0;  // certificates failing validation
    std::uint64_t rotation_failures = 0; // make_cycle absent after prechecks passed
    /// graph6 lines of every graph with a problem, in enumeration order.
    std::vector<std::string> offending;

    bool clean() const;
    Counts& operator+=(const Counts& other);
};

struct Report {
    std::vector<Counts> per_order;

    Counts total() const;
    bool clean() const { return total().clean(); }
};

/// Runs the solver and the brute-force oracle on every labeled graph with
/// n in [n_min, n_max] and δ ≥ ⌊n/2⌋. Work is split into fixed index
/// ranges so the report does not depend on `threads`.
Report exhaustive(std::size_t n_min, std::size_t n_max, unsigned threads = 1);

/// The fixed-format text report printed by the CLI.
std::string format_report(const Report& report);

}  // namespace hamdirac::check
