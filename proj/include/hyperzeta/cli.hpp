#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hyperzeta {

// Process exit codes shared by the CLI and its tests.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failure = 1;
inline constexpr int exit_usage_error = 2;
inline constexpr int exit_divergent = 3;

// One table cell: the sum S(r, m) with its renderings and oracle comparison.
// Divergent keys keep the key and set divergent = true; the numeric fields
// are then meaningless and render as "div".
struct OutputRecord {
    int r = 0;
    int m = 0;
    bool divergent = false;
    std::string closed_zeta;   // zeta-only rendering
    std::string closed_pi;     // pi-power rendering
    double approx_value = 0.0; // closed form evaluated numerically
    double oracle_value = 0.0; // accelerated_sum at terms_used
    double discrepancy = 0.0;
    std::uint64_t terms_used = 0;
};

OutputRecord make_record(int r, int m, std::uint64_t oracle_terms);

// The verification checklist behind `hyperzeta verify`. Each check prints one
// "PASS name" / "FAIL name" line to out; returns true iff all passed. `full`
// extends the quick sweep with the 10^5..10^6-term oracle runs.
bool run_verification(bool full, std::ostream& out, double oracle_tolerance);

// Entry point used by both main() and the tests: args excludes argv[0].
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hyperzeta
