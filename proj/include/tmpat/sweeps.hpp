// sweeps.hpp -- exhaustive verification sweeps over word and morphism
// spaces. Every sweep has a serial reference driver and an OpenMP-parallel
// kernel selected by Mode; both produce identical, deterministically
// ordered reports, and the test suite holds them to that.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tmpat/word.hpp"

namespace tmpat::sweeps {

enum class Mode { serial, parallel };

struct Report {
    std::uint64_t checked = 0;
    std::vector<std::string> violations; ///< empty means the sweep passed
    bool ok() const noexcept { return violations.empty(); }
};

/// Exhaustive over all binary words of length <= max_len: the generation
/// oracle (factor of the min_generation iterate) must agree with substring
/// search in tm_prefix(prefix_len). The prefix side is aggregated into
/// per-length factor tables and spot-checked against literal searches.
Report oracle_equivalence_sweep(std::size_t max_len, std::size_t prefix_len, Mode mode);

/// minimality_witness(n) for n in [min_n, max_n] must be a segment yet not
/// occur in the previous iterate, and have length 2^(n-3) + 2.
Report minimality_sweep(int min_n, int max_n);

struct EquivalenceReport : Report {
    /// Words that are unavoidable by the ideal route yet not segments;
    /// must be exactly aabaa and bbabb.
    std::vector<std::string> nonsegment_unavoidable;
};

/// Exhaustive over all binary words of length <= max_len: the closed-form
/// unavoidability test must be the complement of ideal membership.
EquivalenceReport unavoidability_equivalence_sweep(std::size_t max_len, Mode mode);

/// Frozen generator family values plus: no generator of length <= max_len
/// is a segment, and each generator is minimal against the others.
Report generator_sweep(std::size_t max_len);

/// Every special segment of length <= max_len stays special under the
/// Thue-Morse substitution.
Report special_propagation_sweep(std::size_t max_len, Mode mode);

struct SquareReport : Report {
    std::vector<std::string> roots_found; ///< all u with u*u a segment
};

/// Exhaustive over all binary u with |u| <= max_root_len: u*u is a segment
/// iff u has the iterate-of-{a,b,aba,bab} shape (decided by letter parity,
/// independently of the substring route), and classification round-trips.
SquareReport square_root_sweep(std::size_t max_root_len, Mode mode);

/// Occurrences of the (n+1)-th iterate images in tm_prefix(prefix_len)
/// start only at multiples of 2^n, for 0 <= n <= max_n; both letters.
Report synchronization_sweep(int max_n, std::size_t prefix_len);

/// For k in [min_k, max_k]: every segment of length recurrence_window(k)
/// contains every length-k segment, and some segment one letter shorter
/// misses one.
Report recurrence_sweep(std::size_t min_k, std::size_t max_k, Mode mode);

/// Length-10 saturation (every length-10 segment satisfies the length-3
/// criterion) and criterion soundness: every segment of length <= max_len
/// satisfying the criterion is typical and admits no atypicality witness
/// with images bounded by image_bound.
Report criterion_soundness_sweep(std::size_t max_len, int image_bound, Mode mode);

/// For every segment of length <= max_word_len: the bounded witness search
/// (images <= image_bound) finds a non-monoid morphism iff the word is in
/// the closed-form atypical set.
Report atypical_completeness_sweep(std::size_t max_word_len, int image_bound, Mode mode);

/// Among all binary endomorphisms with images <= image_bound, exactly the
/// monoid members mu^n / xi o mu^n preserve every segment up to
/// max_seg_len.
Report monoid_preservation_sweep(int image_bound, std::size_t max_seg_len, Mode mode);

/// The windows of t and its letter exchange diverge within `horizon`
/// positions for all start shifts i, j <= max_shift.
Report divergence_sweep(std::size_t max_shift, std::size_t horizon, Mode mode);

struct RepetitionReport {
    std::size_t prefix_len = 0;
    bool cube_found = false;
    bool overlap_found = false;
    bool ok() const noexcept { return !cube_found && !overlap_found; }
};

/// Cube- and overlap-freeness of tm_prefix(prefix_len). Serial mode uses
/// the reference scanners from word.hpp; parallel mode distributes shift
/// periods across threads.
RepetitionReport repetition_sweep(std::size_t prefix_len, Mode mode);

/// Structural invariants of the segment language: letter parity of the
/// prefix, palindromic even iterates, and closure of segment-ness under
/// exchange and reversal (exhaustive over words of length <= closure_len).
Report segment_closure_sweep(std::size_t closure_len, std::size_t parity_len, Mode mode);

} // namespace tmpat::sweeps
