#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "tmpat/typicality.hpp"

using namespace tmpat;

namespace {

Word bw(std::string_view text) { return Word::binary(text); }

Morphism endo(std::string_view literal) {
    return Morphism::parse(literal, Alphabet::binary(), Alphabet::binary());
}

bool in_atypical_list(std::string_view text) {
    for (const Word& w : atypical_words())
        if (w.view() == text) return true;
    return false;
}

} // namespace

TEST_CASE("atypical word list") {
    const std::vector<Word>& words = atypical_words();
    CHECK(!words.empty());
    CHECK(std::is_sorted(words.begin(), words.end(),
                         [](const Word& a, const Word& b) { return length_lex_less(a, b); }));

    CHECK(in_atypical_list("aabab"));
    CHECK(in_atypical_list("abaaba"));
    CHECK(in_atypical_list("aabbaab"));
    CHECK(in_atypical_list("babaa"));   // reverse of aabab
    CHECK(in_atypical_list("babbab"));  // exchange of abaaba
    CHECK(in_atypical_list("bbaabba")); // exchange of aabbaab
    CHECK(in_atypical_list("a"));

    CHECK(!in_atypical_list("aababb"));
    CHECK(!in_atypical_list("aabbab"));
    CHECK(!in_atypical_list("abbaabba"));
    CHECK(!in_atypical_list("ababba"));

    for (const Word& w : words) {
        CHECK(w.size() <= 7);
        CHECK(is_segment(w));
        CHECK(is_atypical(w.view()));
    }
    CHECK(!is_atypical("aabaa"));
}

TEST_CASE("atypical set is closed under factors and variants") {
    for (const Word& w : atypical_words()) {
        for (const Word& v : variants(w)) CHECK(is_atypical(v.view()));
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t len = 1; i + len <= w.size(); ++len)
                CHECK(is_atypical(w.view().substr(i, len)));
    }
}

TEST_CASE("length-3 criterion") {
    CHECK(satisfies_length3_criterion(bw("abbaaba")));
    CHECK(!satisfies_length3_criterion(bw("aababbaba"))); // misses baa
    CHECK(!satisfies_length3_criterion(bw("aab")));
    // shortest possible satisfying length is 7
    for (std::size_t k = 1; k <= 6; ++k)
        for (const std::string& s : segment_texts_of_length(k))
            CHECK(!satisfies_length3_criterion(std::string_view(s)));
}

TEST_CASE("classify") {
    const TypicalityVerdict atypical = classify(bw("aabab"));
    CHECK(atypical.verdict == Typicality::atypical);
    REQUIRE(atypical.atypical_container.has_value());
    CHECK(*atypical.atypical_container == bw("aabab"));
    CHECK(atypical.container_variant == "identity");
    CHECK(atypical.container_position == 0);

    const TypicalityVerdict nested = classify(bw("babbab"));
    CHECK(nested.verdict == Typicality::atypical);
    REQUIRE(nested.atypical_container.has_value());
    CHECK(*nested.atypical_container == bw("abaaba"));

    const TypicalityVerdict typical = classify(bw("aababb"));
    CHECK(typical.verdict == Typicality::typical);
    CHECK(!typical.criterion_met); // typical via the complete list, not the criterion

    const TypicalityVerdict with_criterion = classify(bw("abbaaba"));
    CHECK(with_criterion.verdict == Typicality::typical);
    CHECK(with_criterion.criterion_met);
    CHECK(with_criterion.length3_found.size() >= 5);

    const TypicalityVerdict nonsegment = classify(bw("aabaa"));
    CHECK(nonsegment.verdict == Typicality::not_a_segment);

    CHECK(std::string(to_string(Typicality::not_a_segment)) == "not-a-segment");
}

TEST_CASE("classify never contradicts the criterion on small segments") {
    for (std::size_t k = 1; k <= 10; ++k) {
        for (const Word& w : segments_of_length(k)) {
            const TypicalityVerdict verdict = classify(w); // throws on inconsistency
            if (verdict.criterion_met) CHECK(verdict.verdict == Typicality::typical);
        }
    }
}

TEST_CASE("every segment of length at most 5 is atypical") {
    for (std::size_t k = 1; k <= 5; ++k)
        for (const Word& w : segments_of_length(k)) CHECK(is_atypical(w.view()));
}

TEST_CASE("bounded witness search") {
    // independent replay of the enumeration order
    const Word target = bw("abaaba");
    std::optional<std::string> expected;
    MorphismEnumerator candidates(Alphabet::binary(), 2);
    while (auto phi = candidates.next()) {
        if (in_mu_xi_monoid(*phi)) continue;
        if (is_segment(apply(*phi, target))) {
            expected = phi->format();
            break;
        }
    }
    REQUIRE(expected.has_value());
    CHECK(*expected == "a->a,b->bb");

    const auto found = brute_force_atypical_check(target, 2);
    REQUIRE(found.has_value());
    CHECK(found->format() == *expected);

    CHECK(!brute_force_atypical_check(bw("abbaabba"), 6).has_value());
    CHECK_THROWS_AS(brute_force_atypical_check(bw("aabaa"), 4), std::invalid_argument);
}

TEST_CASE("witness morphisms for the three maximal words validate") {
    const std::pair<const char*, const char*> witnesses[] = {
        {"aabab", "a->a,b->bbabaab"},
        {"abaaba", "a->a,b->bb"},
        {"aabbaab", "a->a,b->bab"},
    };
    for (const auto& [word, literal] : witnesses) {
        const Morphism phi = endo(literal);
        CHECK(!in_mu_xi_monoid(phi).has_value());
        CHECK(is_segment(apply(phi, bw(word))));
    }
}

TEST_CASE("brute force witness exists for aabab within bound 8") {
    const auto phi = brute_force_atypical_check(bw("aabab"), 8);
    REQUIRE(phi.has_value());
    CHECK(!in_mu_xi_monoid(*phi).has_value());
    CHECK(is_segment(apply(*phi, bw("aabab"))));
}

TEST_CASE("semigroup structure") {
    const AtypicalSemigroup& s = build_s0();
    CHECK(s.size() == s.word_count() + 1);
    CHECK(s.word_count() == atypical_words().size());

    const std::size_t a = *s.element_of("a");
    const std::size_t ab = *s.element_of("ab");
    const std::size_t aab = *s.element_of("aab");
    CHECK(s.product(a, ab) == aab);

    const std::size_t aabab = *s.element_of("aabab");
    CHECK(s.product(aabab, a) == AtypicalSemigroup::kZero);

    for (std::size_t x = 0; x < s.size(); ++x) {
        CHECK(s.product(x, AtypicalSemigroup::kZero) == AtypicalSemigroup::kZero);
        CHECK(s.product(AtypicalSemigroup::kZero, x) == AtypicalSemigroup::kZero);
    }

    CHECK(!s.element_of("ababa").has_value());
    CHECK_THROWS_AS(s.word(0), std::out_of_range);
}

TEST_CASE("semigroup product is associative") {
    const AtypicalSemigroup& s = build_s0();
    for (std::size_t x = 0; x < s.size(); ++x)
        for (std::size_t y = 0; y < s.size(); ++y)
            for (std::size_t z = 0; z < s.size(); ++z)
                REQUIRE(s.product(s.product(x, y), z) == s.product(x, s.product(y, z)));
}

TEST_CASE("factor order") {
    const AtypicalSemigroup& s = build_s0();
    for (std::size_t x = 1; x < s.size(); ++x) {
        CHECK(s.above(x, AtypicalSemigroup::kZero));
        CHECK(!s.above(AtypicalSemigroup::kZero, x));
        for (std::size_t y = 1; y < s.size(); ++y) {
            const bool factor = contains_factor(s.word(y), s.word(x)).has_value();
            CHECK(s.above(x, y) == factor);
        }
    }
    CHECK(s.above(AtypicalSemigroup::kZero, AtypicalSemigroup::kZero));
}

TEST_CASE("cover edges form the transitive reduction") {
    const AtypicalSemigroup& s = build_s0();
    const auto edges = jorder_cover_edges(s);
    const std::set<std::pair<std::size_t, std::size_t>> edge_set(edges.begin(), edges.end());

    // reachability through covers must reproduce the order relation
    const std::size_t n = s.size();
    std::vector<bool> reach(n * n, false);
    for (std::size_t x = 0; x < n; ++x) reach[x * n + x] = true;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [upper, lower] : edges)
            for (std::size_t x = 0; x < n; ++x)
                if (reach[x * n + upper] && !reach[x * n + lower]) {
                    reach[x * n + lower] = true;
                    changed = true;
                }
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            CHECK(reach[x * n + y] == s.above(x, y));

    // no cover edge is implied by two others
    for (const auto& [upper, lower] : edge_set)
        for (std::size_t mid = 0; mid < n; ++mid)
            if (mid != upper && mid != lower)
                CHECK(!(s.above(upper, mid) && s.above(mid, lower)));
}

TEST_CASE("dot export") {
    const std::string dot = export_jorder_dot(build_s0());
    CHECK(dot.starts_with("digraph S0 {"));
    CHECK(dot.find("\"aabab\" [style=bold, peripheries=2];") != std::string::npos);
    CHECK(dot.find("\"abaaba\" [style=bold, peripheries=2];") != std::string::npos);
    CHECK(dot.find("\"aabbaab\" [style=bold, peripheries=2];") != std::string::npos);
    CHECK(dot.find("\"babaa\" [style") == std::string::npos); // not a lex minimum
    CHECK(dot.find("\"0\";") != std::string::npos);
    CHECK(dot.find("\"aabab\" -> \"0\";") != std::string::npos);
    CHECK(dot.find("\"a\" -> \"aa\";") != std::string::npos);

    // node lines: one per word plus the zero node
    std::size_t node_lines = 0;
    for (std::size_t pos = 0; (pos = dot.find(";\n", pos)) != std::string::npos; ++pos)
        ++node_lines;
    const std::size_t edge_lines = jorder_cover_edges(build_s0()).size();
    CHECK(node_lines == atypical_words().size() + 1 + edge_lines);
}

TEST_CASE("segment preservation") {
    CHECK(!segment_preservation_check(mu(), 12).has_value());
    CHECK(!segment_preservation_check(compose(xi(), mu_power(2)), 12).has_value());

    const auto broken = segment_preservation_check(endo("a->a,b->bb"), 10);
    REQUIRE(broken.has_value());
    CHECK(is_segment(*broken));
    CHECK(!is_segment(apply(endo("a->a,b->bb"), *broken)));

    // first counterexample in length-then-lex order
    bool earlier_all_fine = true;
    for (std::size_t k = 1; k <= broken->size() && earlier_all_fine; ++k) {
        for (const Word& s : segments_of_length(k)) {
            if (k == broken->size() && !length_lex_less(s, *broken)) break;
            if (!is_segment(apply(endo("a->a,b->bb"), s))) {
                earlier_all_fine = false;
                break;
            }
        }
    }
    CHECK(earlier_all_fine);
}

TEST_CASE("monoid membership characterizes preservation at image bound 3") {
    MorphismEnumerator candidates(Alphabet::binary(), 3);
    while (auto phi = candidates.next()) {
        const bool preserves = !segment_preservation_check(*phi, 12).has_value();
        CHECK(preserves == in_mu_xi_monoid(*phi).has_value());
    }
}
