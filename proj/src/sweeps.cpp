#include "tmpat/sweeps.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <stdexcept>
#include <utility>

#include "tmpat/avoidance.hpp"
#include "tmpat/morphism.hpp"
#include "tmpat/thue_morse.hpp"
#include "tmpat/typicality.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tmpat::sweeps {

namespace {

// Findings produced out of order by worker threads, merged into a stable
// report sorted by case key.
class Findings {
public:
    void add(std::uint64_t key, std::string text) {
#pragma omp critical(tmpat_sweep_findings)
        entries_.emplace_back(key, std::move(text));
    }

    std::vector<std::string> take_sorted() {
        std::sort(entries_.begin(), entries_.end());
        std::vector<std::string> out;
        out.reserve(entries_.size());
        for (auto& [key, text] : entries_) out.push_back(std::move(text));
        return out;
    }

private:
    std::vector<std::pair<std::uint64_t, std::string>> entries_;
};

void fill_word(char* buf, int len, std::uint64_t bits) {
    for (int i = 0; i < len; ++i)
        buf[i] = ((bits >> (len - 1 - i)) & 1) ? 'b' : 'a';
}

// Runs `item(checker, buf, bits)` for every bits in [0, 2^len); buf has room
// for 128 characters. The serial driver is the reference; the parallel one
// must produce the same findings.
template <typename PerItem>
void drive_words_of_length(int len, Mode mode, std::size_t checker_len, PerItem item) {
    const std::int64_t count = std::int64_t{1} << len;
    if (mode == Mode::serial) {
        SegmentChecker checker(checker_len);
        char buf[128];
        for (std::int64_t bits = 0; bits < count; ++bits)
            item(checker, buf, static_cast<std::uint64_t>(bits));
        return;
    }
#pragma omp parallel
    {
        SegmentChecker checker(checker_len);
        char buf[128];
#pragma omp for schedule(dynamic, 1024)
        for (std::int64_t bits = 0; bits < count; ++bits)
            item(checker, buf, static_cast<std::uint64_t>(bits));
    }
}

// Index-space driver for precomputed item lists.
template <typename PerItem>
void drive_indices(std::size_t count, Mode mode, PerItem item) {
    const std::int64_t n = static_cast<std::int64_t>(count);
    if (mode == Mode::serial) {
        for (std::int64_t i = 0; i < n; ++i) item(static_cast<std::size_t>(i));
        return;
    }
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i) item(static_cast<std::size_t>(i));
}

std::uint64_t words_below_length(int len) {
    return (std::uint64_t{1} << len) - 2; // count of nonempty words shorter than len
}

char iterate_char(std::size_t i) noexcept {
    return (std::popcount(i) & 1) ? 'b' : 'a';
}

// Letter-parity decision of "u = n-th iterate image of a, b, aba or bab",
// deliberately independent of the substring route.
bool matches_iterate_shape(std::string_view u) noexcept {
    const std::size_t len = u.size();
    if (std::has_single_bit(len)) {
        bool as_a = true;
        bool as_b = true;
        for (std::size_t i = 0; i < len && (as_a || as_b); ++i) {
            const bool eq = u[i] == iterate_char(i);
            as_a = as_a && eq;
            as_b = as_b && !eq;
        }
        return as_a || as_b;
    }
    if (len % 3 == 0 && std::has_single_bit(len / 3)) {
        const std::size_t q = len / 3;
        bool as_aba = true;
        bool as_bab = true;
        for (std::size_t i = 0; i < len && (as_aba || as_bab); ++i) {
            const bool eq = u[i] == iterate_char(i % q);
            const bool middle = (i / q) == 1;
            as_aba = as_aba && (eq != middle);
            as_bab = as_bab && (eq == middle);
        }
        return as_aba || as_bab;
    }
    return false;
}

std::vector<std::string> segment_texts_upto(std::size_t max_len) {
    std::vector<std::string> out;
    for (std::size_t k = 1; k <= max_len; ++k)
        for (std::string& s : segment_texts_of_length(k)) out.push_back(std::move(s));
    return out;
}

} // namespace

Report oracle_equivalence_sweep(std::size_t max_len, std::size_t prefix_len, Mode mode) {
    if (max_len < 1 || max_len > 63)
        throw std::invalid_argument("oracle_equivalence_sweep: bad max_len");
    Report report;
    const TmPrefix big = tm_prefix(prefix_len);
    const std::string_view text = big.view();

    // Per-length factor tables over the whole prefix: the aggregate result
    // of substring search for every candidate of that length at once.
    std::vector<std::vector<std::string>> factors(max_len + 1);
    {
        const std::int64_t top = static_cast<std::int64_t>(max_len);
        const bool par = mode == Mode::parallel;
#pragma omp parallel for schedule(dynamic, 1) if (par)
        for (std::int64_t k = 1; k <= top; ++k) {
            std::vector<std::string>& table = factors[static_cast<std::size_t>(k)];
            const std::size_t klen = static_cast<std::size_t>(k);
            for (std::size_t i = 0; i + klen <= text.size(); ++i) {
                const std::string_view w = text.substr(i, klen);
                auto it = std::lower_bound(table.begin(), table.end(), w);
                if (it == table.end() || std::string_view(*it) != w)
                    table.insert(it, std::string(w));
            }
        }
    }

    Findings findings;
    constexpr std::uint64_t kSpotStride = 997; // literal-search subsample
    for (int len = 1; len <= static_cast<int>(max_len); ++len) {
        const std::vector<std::string>& table = factors[static_cast<std::size_t>(len)];
        const std::uint64_t key_base = words_below_length(len);
        drive_words_of_length(len, mode, max_len,
                              [&, len](const SegmentChecker& checker, char* buf,
                                       std::uint64_t bits) {
            fill_word(buf, len, bits);
            const std::string_view w(buf, static_cast<std::size_t>(len));
            const bool via_generation = checker.is_segment(w);
            auto it = std::lower_bound(table.begin(), table.end(), w);
            const bool via_prefix = it != table.end() && std::string_view(*it) == w;
            if (via_generation != via_prefix)
                findings.add(key_base + bits,
                             std::string(w) + ": generation oracle says " +
                                 (via_generation ? "segment" : "non-segment") +
                                 ", prefix search disagrees");
            if (bits % kSpotStride == 0) {
                const bool literal = text.find(w) != std::string_view::npos;
                if (literal != via_prefix)
                    findings.add(key_base + bits,
                                 std::string(w) + ": factor table disagrees with literal search");
            }
        });
        report.checked += std::uint64_t{1} << len;
    }
    report.violations = findings.take_sorted();
    return report;
}

Report minimality_sweep(int min_n, int max_n) {
    Report report;
    for (int n = min_n; n <= max_n; ++n) {
        const Word w = minimality_witness(n);
        ++report.checked;
        if (w.size() != (std::size_t{1} << (n - 3)) + 2)
            report.violations.push_back("witness for n=" + std::to_string(n) + " has wrong length");
        if (!is_segment(w))
            report.violations.push_back("witness for n=" + std::to_string(n) + " is not a segment");
        const std::string_view previous = tm_prefix(std::size_t{1} << (n - 1)).view();
        if (previous.find(w.view()) != std::string_view::npos)
            report.violations.push_back("witness for n=" + std::to_string(n) +
                                        " occurs in the previous iterate");
    }
    return report;
}

EquivalenceReport unavoidability_equivalence_sweep(std::size_t max_len, Mode mode) {
    if (max_len < 1 || max_len > 63)
        throw std::invalid_argument("unavoidability_equivalence_sweep: bad max_len");
    EquivalenceReport report;

    std::vector<std::string> generators;
    for (const Word& g : shur_generators(std::max<std::size_t>(max_len, 3)).all())
        generators.push_back(g.text());

    Findings mismatches;
    Findings nonsegment;
    for (int len = 1; len <= static_cast<int>(max_len); ++len) {
        const std::uint64_t key_base = words_below_length(len);
        drive_words_of_length(len, mode, max_len,
                              [&, len](const SegmentChecker& checker, char* buf,
                                       std::uint64_t bits) {
            fill_word(buf, len, bits);
            const std::string_view w(buf, static_cast<std::size_t>(len));
            const bool segment = checker.is_segment(w);
            const bool unavoidable = segment || w == "aabaa" || w == "bbabb";
            const bool avoided = is_avoided_via_ideal_text(w, generators);
            if (avoided == unavoidable)
                mismatches.add(key_base + bits,
                               std::string(w) + ": ideal membership = " +
                                   (avoided ? "avoided" : "not avoided") +
                                   " but closed-form test = " +
                                   (unavoidable ? "unavoidable" : "avoided"));
            if (!avoided && !segment) nonsegment.add(key_base + bits, std::string(w));
        });
        report.checked += std::uint64_t{1} << len;
    }
    report.violations = mismatches.take_sorted();
    report.nonsegment_unavoidable = nonsegment.take_sorted();
    return report;
}

Report generator_sweep(std::size_t max_len) {
    Report report;
    const GeneratorSet set = shur_generators(max_len);

    const auto expect = [&](const std::vector<Word>& family, std::size_t index,
                            std::string_view text, const char* name) {
        ++report.checked;
        if (family.size() <= index || family[index].view() != text)
            report.violations.push_back(std::string("generator ") + name + " is not " +
                                        std::string(text));
    };
    expect(set.family_k, 0, "babbaaba", "k=1");
    expect(set.family_k, 1, "aabbabaababbaa", "k=2");
    expect(set.family_m, 0, "abaababbabaaba", "m=2");

    const std::vector<Word> all = set.all();
    for (const Word& g : all) {
        ++report.checked;
        if (is_segment(g))
            report.violations.push_back("generator " + g.text() + " is a segment");
        if (!is_avoided_via_ideal(g))
            report.violations.push_back("generator " + g.text() + " not avoided by its own ideal");
        if (find_witness(g, 3, std::size_t{1} << 18))
            report.violations.push_back("generator " + g.text() + " has a bounded witness");
    }

    // Minimality: no generator embeds an instance of a different one.
    for (const Word& g : all) {
        for (const Word& other : all) {
            if (other == g || other.size() > g.size()) continue;
            if (has_binary_pattern_instance(g.view(), other.view()))
                report.violations.push_back("generator " + g.text() +
                                            " contains an instance of generator " + other.text());
        }
    }

    // Family lengths follow 3*2^k + 2.
    for (std::size_t i = 0; i < set.family_k.size(); ++i)
        if (set.family_k[i].size() != (std::size_t{3} << (i + 1)) + 2)
            report.violations.push_back("family k generator #" + std::to_string(i + 1) +
                                        " has wrong length");
    for (std::size_t i = 0; i < set.family_m.size(); ++i)
        if (set.family_m[i].size() != (std::size_t{3} << (i + 2)) + 2)
            report.violations.push_back("family m generator #" + std::to_string(i + 2) +
                                        " has wrong length");
    return report;
}

Report special_propagation_sweep(std::size_t max_len, Mode mode) {
    Report report;

    std::vector<std::string> specials;
    {
        const SegmentChecker checker(max_len + 1);
        std::string probe;
        for (std::size_t k = 1; k <= max_len; ++k) {
            for (std::string& s : segment_texts_of_length(k)) {
                probe.assign(s);
                probe += 'a';
                if (!checker.is_segment(probe)) continue;
                probe.back() = 'b';
                if (!checker.is_segment(probe)) continue;
                specials.push_back(std::move(s));
            }
        }
    }
    report.checked = specials.size();

    Findings findings;
    const SegmentChecker image_checker(2 * max_len + 1);
    drive_indices(specials.size(), mode, [&](std::size_t i) {
        const std::string& u = specials[i];
        std::string image;
        image.reserve(2 * u.size() + 1);
        for (char c : u) {
            image += c;
            image += (c == 'a') ? 'b' : 'a';
        }
        image += 'a';
        const bool ext_a = image_checker.is_segment(image);
        image.back() = 'b';
        const bool ext_b = image_checker.is_segment(image);
        if (!ext_a || !ext_b)
            findings.add(i, "special segment " + u + " maps to a non-special segment");
    });
    report.violations = findings.take_sorted();
    return report;
}

SquareReport square_root_sweep(std::size_t max_root_len, Mode mode) {
    if (max_root_len < 1 || max_root_len > 63)
        throw std::invalid_argument("square_root_sweep: bad max_root_len");
    SquareReport report;
    Findings findings;
    Findings roots;

    for (int len = 1; len <= static_cast<int>(max_root_len); ++len) {
        const std::uint64_t key_base = words_below_length(len);
        drive_words_of_length(len, mode, 2 * max_root_len,
                              [&, len](const SegmentChecker& checker, char* buf,
                                       std::uint64_t bits) {
            fill_word(buf, len, bits);
            std::memcpy(buf + len, buf, static_cast<std::size_t>(len));
            const std::string_view root(buf, static_cast<std::size_t>(len));
            const std::string_view square(buf, static_cast<std::size_t>(2 * len));
            const bool square_is_segment = checker.is_segment(square);
            const bool shaped = matches_iterate_shape(root);
            if (square_is_segment != shaped) {
                findings.add(key_base + bits,
                             std::string(root) + ": square segment-ness and iterate shape disagree");
                return;
            }
            if (!square_is_segment) return;
            roots.add(key_base + bits, std::string(root));
            const auto cls = classify_square_root(Word::binary(root));
            if (!cls) {
                findings.add(key_base + bits,
                             std::string(root) + ": classification absent for a square segment");
                return;
            }
            const std::string rebuilt = mu_power(cls->exponent).apply_text(cls->base.view());
            if (rebuilt != root)
                findings.add(key_base + bits,
                             std::string(root) + ": classification does not round-trip");
        });
        report.checked += std::uint64_t{1} << len;
    }
    report.violations = findings.take_sorted();
    report.roots_found = roots.take_sorted();
    return report;
}

Report synchronization_sweep(int max_n, std::size_t prefix_len) {
    Report report;
    for (int n = 0; n <= max_n; ++n) {
        for (char x : {'a', 'b'}) {
            ++report.checked;
            try {
                const std::vector<std::size_t> positions = aligned_occurrences(n, x, prefix_len);
                if (positions.empty()) {
                    report.violations.push_back("iterate image of " + std::string(1, x) +
                                                " at n=" + std::to_string(n) +
                                                " never occurs in the prefix");
                    continue;
                }
                const std::size_t step = std::size_t{1} << n;
                for (std::size_t pos : positions)
                    if (pos % step != 0)
                        report.violations.push_back("unaligned occurrence at " +
                                                    std::to_string(pos));
            } catch (const std::logic_error& e) {
                report.violations.push_back(e.what());
            }
        }
    }
    return report;
}

Report recurrence_sweep(std::size_t min_k, std::size_t max_k, Mode mode) {
    Report report;
    Findings findings;
    for (std::size_t k = min_k; k <= max_k; ++k) {
        const std::size_t window = recurrence_window(k);
        const std::vector<std::string> short_segments = segment_texts_of_length(k);
        const std::vector<std::string> long_segments = segment_texts_of_length(window);
        const std::vector<std::string> shorter_windows = segment_texts_of_length(window - 1);
        report.checked += long_segments.size() + shorter_windows.size();

        drive_indices(long_segments.size(), mode, [&](std::size_t i) {
            const std::string& host = long_segments[i];
            for (const std::string& s : short_segments) {
                if (host.find(s) == std::string::npos) {
                    findings.add(k * 1000000 + i,
                                 "k=" + std::to_string(k) + ": window segment misses " + s);
                    break;
                }
            }
        });

        bool tight = false;
        const std::int64_t n_shorter = static_cast<std::int64_t>(shorter_windows.size());
        if (mode == Mode::serial) {
            for (std::int64_t i = 0; i < n_shorter && !tight; ++i) {
                for (const std::string& s : short_segments) {
                    if (shorter_windows[static_cast<std::size_t>(i)].find(s) ==
                        std::string::npos) {
                        tight = true;
                        break;
                    }
                }
            }
        } else {
            bool found = false;
#pragma omp parallel for schedule(static) reduction(|| : found)
            for (std::int64_t i = 0; i < n_shorter; ++i) {
                for (const std::string& s : short_segments) {
                    if (shorter_windows[static_cast<std::size_t>(i)].find(s) ==
                        std::string::npos) {
                        found = true;
                        break;
                    }
                }
            }
            tight = found;
        }
        if (!tight)
            findings.add(k * 1000000 + 999999,
                         "k=" + std::to_string(k) + ": window " + std::to_string(window) +
                             " is not tight");
    }
    report.violations = findings.take_sorted();
    return report;
}

Report criterion_soundness_sweep(std::size_t max_len, int image_bound, Mode mode) {
    Report report;
    Findings findings;

    if (max_len >= 10) {
        for (const std::string& s : segment_texts_of_length(10)) {
            ++report.checked;
            if (!satisfies_length3_criterion(std::string_view(s)))
                findings.add(0, "length-10 segment " + s + " fails the length-3 criterion");
        }
    }

    std::vector<std::string> candidates;
    for (std::string& s : segment_texts_upto(max_len))
        if (satisfies_length3_criterion(std::string_view(s))) candidates.push_back(std::move(s));
    report.checked += candidates.size();

    atypical_words(); // warm the cache before going parallel
    const std::vector<std::string> images = binary_words_upto(image_bound);
    const SegmentChecker checker(max_len * static_cast<std::size_t>(image_bound));
    drive_indices(candidates.size(), mode, [&](std::size_t i) {
        const std::string& w = candidates[i];
        if (is_atypical(w))
            findings.add(1 + i, "criterion word " + w + " is in the atypical list");
        if (first_atypicality_witness(w, images, checker))
            findings.add(1 + i, "criterion word " + w + " has an atypicality witness");
    });
    report.violations = findings.take_sorted();
    return report;
}

Report atypical_completeness_sweep(std::size_t max_word_len, int image_bound, Mode mode) {
    Report report;
    Findings findings;

    const std::vector<std::string> words = segment_texts_upto(max_word_len);
    report.checked = words.size();

    atypical_words(); // warm the cache before going parallel
    const std::vector<std::string> images = binary_words_upto(image_bound);
    const SegmentChecker checker(max_word_len * static_cast<std::size_t>(image_bound));
    drive_indices(words.size(), mode, [&](std::size_t i) {
        const std::string& w = words[i];
        const bool expected = is_atypical(w);
        const bool found = first_atypicality_witness(w, images, checker).has_value();
        if (found != expected)
            findings.add(i, w + (found ? ": witness found for a word outside the atypical list"
                                       : ": no witness found for a listed atypical word"));
    });
    report.violations = findings.take_sorted();
    return report;
}

Report monoid_preservation_sweep(int image_bound, std::size_t max_seg_len, Mode mode) {
    Report report;
    Findings findings;

    const std::vector<std::string> images = binary_words_upto(image_bound);
    const std::vector<std::string> segments = segment_texts_upto(max_seg_len);
    const std::size_t n = images.size();
    report.checked = n * n;

    const SegmentChecker checker(max_seg_len * static_cast<std::size_t>(image_bound));
    drive_indices(n * n, mode, [&](std::size_t idx) {
        const std::string& image_a = images[idx / n];
        const std::string& image_b = images[idx % n];
        const bool in_monoid = images_in_mu_xi_monoid(image_a, image_b).has_value();

        const std::string* broken = nullptr;
        std::string buffer;
        buffer.reserve(max_seg_len * static_cast<std::size_t>(image_bound));
        for (const std::string& s : segments) {
            buffer.clear();
            for (char c : s) buffer += (c == 'a') ? image_a : image_b;
            if (!checker.is_segment(buffer)) {
                broken = &s;
                break;
            }
        }
        if (in_monoid && broken)
            findings.add(idx, "monoid morphism a->" + image_a + ",b->" + image_b +
                                  " breaks segment " + *broken);
        if (!in_monoid && !broken)
            findings.add(idx, "non-monoid morphism a->" + image_a + ",b->" + image_b +
                                  " preserves all segments up to the bound");
    });
    report.violations = findings.take_sorted();
    return report;
}

Report divergence_sweep(std::size_t max_shift, std::size_t horizon, Mode mode) {
    Report report;
    Findings findings;
    const std::string_view t = tm_prefix(max_shift + horizon).view();
    const std::size_t shifts = max_shift + 1;
    report.checked = shifts * shifts;

    drive_indices(shifts * shifts, mode, [&](std::size_t idx) {
        const std::size_t i = idx / shifts;
        const std::size_t j = idx % shifts;
        // the windows differ at d iff t[i+d] equals t[j+d] (the second word
        // is the letterwise exchange)
        for (std::size_t d = 0; d < horizon; ++d)
            if (t[i + d] == t[j + d]) return;
        findings.add(idx, "no divergence within horizon for shifts i=" + std::to_string(i) +
                              ", j=" + std::to_string(j));
    });
    report.violations = findings.take_sorted();
    return report;
}

RepetitionReport repetition_sweep(std::size_t prefix_len, Mode mode) {
    RepetitionReport report;
    report.prefix_len = prefix_len;
    const std::string_view text = tm_prefix(prefix_len).view();

    if (mode == Mode::serial) {
        report.cube_found = has_cube(text);
        report.overlap_found = has_overlap(text);
        return report;
    }

    bool cube = false;
    bool overlap = false;
    const char* s = text.data();
    const std::int64_t max_period = static_cast<std::int64_t>((text.size() - 1) / 2);
#pragma omp parallel for schedule(dynamic, 8) reduction(|| : cube, overlap)
    for (std::int64_t p = 1; p <= max_period; ++p) {
        const std::size_t period = static_cast<std::size_t>(p);
        const std::size_t limit = text.size() - period;
        std::size_t run = 0;
        std::size_t best = 0;
        for (std::size_t j = 0; j < limit; ++j) {
            run = (s[j] == s[j + period]) ? run + 1 : 0;
            if (run > best) {
                best = run;
                if (best >= 2 * period) break;
            }
        }
        overlap = overlap || best >= period + 1;
        cube = cube || best >= 2 * period;
    }
    report.cube_found = cube;
    report.overlap_found = overlap;
    return report;
}

Report segment_closure_sweep(std::size_t closure_len, std::size_t parity_len, Mode mode) {
    Report report;
    Findings findings;

    // Letter parity: position i of the prefix holds 'a' iff popcount(i) is
    // even. This cross-checks the doubling construction.
    const std::string_view t = tm_prefix(parity_len).view();
    {
        const std::int64_t n = static_cast<std::int64_t>(t.size());
        const bool par = mode == Mode::parallel;
#pragma omp parallel for schedule(static) if (par)
        for (std::int64_t i = 0; i < n; ++i) {
            if (t[static_cast<std::size_t>(i)] != iterate_char(static_cast<std::size_t>(i)))
                findings.add(static_cast<std::uint64_t>(i),
                             "prefix letter at " + std::to_string(i) + " fails letter parity");
        }
        report.checked += t.size();
    }

    // Even iterates are palindromes.
    for (int g = 0; 2 * g <= tm_prefix(parity_len).generation(); ++g) {
        const std::string_view w = tm_prefix(std::size_t{1} << (2 * g)).view();
        ++report.checked;
        bool palindrome = true;
        for (std::size_t i = 0, j = w.size(); i < j--; ++i)
            if (w[i] != w[j]) {
                palindrome = false;
                break;
            }
        if (!palindrome)
            findings.add(std::uint64_t{1} << 62,
                         "even iterate of length " + std::to_string(w.size()) +
                             " is not a palindrome");
    }

    // Segment-ness is closed under letter exchange and reversal.
    for (int len = 1; len <= static_cast<int>(closure_len); ++len) {
        const std::uint64_t key_base = words_below_length(len);
        drive_words_of_length(len, mode, closure_len,
                              [&, len](const SegmentChecker& checker, char* buf,
                                       std::uint64_t bits) {
            fill_word(buf, len, bits);
            const std::size_t length = static_cast<std::size_t>(len);
            const std::string_view w(buf, length);
            const bool segment = checker.is_segment(w);
            char other[128];
            for (std::size_t i = 0; i < length; ++i)
                other[i] = (buf[i] == 'a') ? 'b' : 'a';
            if (checker.is_segment(std::string_view(other, length)) != segment)
                findings.add(key_base + bits,
                             std::string(w) + ": exchange closure violated");
            for (std::size_t i = 0; i < length; ++i) other[i] = buf[length - 1 - i];
            if (checker.is_segment(std::string_view(other, length)) != segment)
                findings.add(key_base + bits,
                             std::string(w) + ": reversal closure violated");
        });
        report.checked += std::uint64_t{1} << len;
    }

    report.violations = findings.take_sorted();
    return report;
}

} // namespace tmpat::sweeps
