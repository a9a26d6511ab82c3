#include "abelian/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "abelian/closure.hpp"
#include "abelian/subshift.hpp"

namespace abelian {

namespace {

using Clock = std::chrono::steady_clock;

QuadExt fib_slope() { return QuadExt(Rational(3, 2), Rational(-1, 2), 5); }   // (3-sqrt(5))/2
QuadExt golden() { return QuadExt(Rational(-1, 2), Rational(1, 2), 5); }      // (sqrt(5)-1)/2
QuadExt sqrt2_slope() { return QuadExt(Rational(-1), Rational(1), 2); }       // sqrt(2)-1

TorusPoint orbit_point(const QuadExt& alpha, long n) {
    return TorusPoint(QuadExt(Rational(n)) * alpha);
}

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
    void note(const std::string& what) {
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

// 1. Thue-Morse abelian complexity: 2 odd / 3 even for n <= 200 on a
// stabilized window, under 5 seconds.
CriterionResult criterion_tm_abelian() {
    auto t0 = Clock::now();
    Check c;
    auto stable = stabilized_index(thue_morse(), 200, 4096, 1 << 18);
    c.expect(stable.stabilized, "window did not stabilize");
    for (std::size_t n = 1; n <= 200; ++n) {
        std::size_t want = n % 2 == 1 ? 2 : 3;
        if (stable.index.abelian_complexity(n) != want) {
            c.expect(false, "abelian complexity wrong at n=" + std::to_string(n));
            break;
        }
    }
    double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    c.expect(elapsed < 5.0, "runtime limit exceeded");
    if (c.ok) c.note("n=1..200 on window " + std::to_string(stable.window));
    return {1, "thue-morse-abelian-complexity", c.ok, c.detail};
}

// 2. Sturmian signature for three slopes in Q(sqrt 5) and Q(sqrt 2).
CriterionResult criterion_sturmian_signature() {
    auto t0 = Clock::now();
    Check c;
    for (const QuadExt& alpha : {fib_slope(), sqrt2_slope(), golden()}) {
        auto word = binary_rotation_word({alpha, TorusPoint{alpha}, EndpointConvention::Underline});
        auto stable = stabilized_index(word, 100, 2048, 1 << 17);
        c.expect(stable.stabilized, "window did not stabilize");
        auto profile = factor_complexity_profile(word.prefix(stable.window), 100);
        for (std::size_t n = 1; n <= 100; ++n) {
            bool good_ab = stable.index.abelian_complexity(n) == 2;
            bool good_fc = profile[n] == n + 1;
            Int floor_na = (QuadExt(Rational(static_cast<long>(n))) * alpha).floor();
            bool good_min = Int(stable.index.corridor(n, 1).min) == floor_na;
            if (!(good_ab && good_fc && good_min)) {
                c.expect(false, "signature broken at n=" + std::to_string(n) + " for alpha=" +
                                    alpha.to_string());
                break;
            }
        }
    }
    double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    c.expect(elapsed < 10.0, "runtime limit exceeded");
    if (c.ok) c.note("3 slopes, n=1..100, corridor min = floor(n*alpha) exactly");
    return {2, "sturmian-signature", c.ok, c.detail};
}

// 3. Corridor-criterion oracle equivalence on 20 binary fixture pairs.
CriterionResult criterion_corridor_oracle() {
    Check c;
    std::vector<InfiniteWord> fixtures = {
        thue_morse(),
        fibonacci_word(),
        periodic_word("01"),
        periodic_word("00101"),
        preperiodic_word("0011", "001101"),
    };
    int pairs = 0, agreements = 0;
    for (std::size_t i = 0; i < fixtures.size(); ++i)
        for (std::size_t j = 0; j < fixtures.size(); ++j) {
            if (i == j) continue;
            ++pairs;
            bool a = abelian_member(fixtures[i], fixtures[j], 30, 3000).member;
            bool k = corridor_member(fixtures[i], fixtures[j], 30, 3000).member;
            if (a == k) ++agreements;
        }
    c.expect(pairs == 20, "expected 20 ordered pairs");
    c.expect(agreements == pairs, "criteria disagree on some pair");
    if (c.ok) c.note("20 pairs, L=30, zero disagreements");
    return {3, "corridor-criterion-oracle", c.ok, c.detail};
}

// 4. The ultimately periodic example, both directions, plus the rejected
// 00(10)^k 0 witness family. The word 00(10)^w itself is 0(01)^w and is a
// genuine member, so the rejected fixture repeats 00 without a separating
// 11, which is what the witness family describes.
CriterionResult criterion_periodic_huge() {
    Check c;
    auto tm = thue_morse();
    auto x = preperiodic_word("0011", "001101");
    c.expect(abelian_member(tm, x, 60, 4000).member, "TM not accepted by the preperiodic word");
    c.expect(abelian_member(x, tm, 60, 4000).member, "preperiodic word not accepted by TM");

    auto rejected = abelian_member(periodic_word("00101"), tm, 60, 4000);
    c.expect(!rejected.member, "(00101)^w unexpectedly accepted");
    bool shape = false;
    if (rejected.witness) {
        const Word& w = *rejected.witness;
        shape = w.size() >= 3 && w.size() % 2 == 1 && w.substr(0, 2) == "00" && w.back() == '0';
        for (std::size_t i = 2; i + 1 < w.size(); i += 2)
            shape = shape && w[i] == '1' && w[i + 1] == '0';
    }
    c.expect(shape, "witness not of the 00(10)^k 0 shape");

    c.expect(abelian_member(preperiodic_word("00", "10"), tm, 60, 4000).member,
             "00(10)^w = 0(01)^w should be a member");
    if (c.ok) c.note("witness " + *rejected.witness);
    return {4, "ultimately-periodic-closure", c.ok, c.detail};
}

// 5. Periodic census for z_k = (0^{2k-1} 1 1)^w, k = 1..5.
CriterionResult criterion_census() {
    auto t0 = Clock::now();
    Check c;
    for (std::size_t k = 1; k <= 5; ++k) {
        Word block(2 * k - 1, '0');
        block += "11";
        auto census = periodic_census(periodic_word(block), std::max<std::size_t>(600, 40 * k));
        std::vector<Word> want;
        for (std::size_t i = 0; i < k; ++i) {
            Word v(2 * k - 1 - i, '0');
            v += '1';
            v += Word(i, '0');
            v += '1';
            want.push_back(v);
        }
        std::sort(want.begin(), want.end());
        if (census != want) {
            c.expect(false, "census mismatch at k=" + std::to_string(k));
            break;
        }
    }
    double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    c.expect(elapsed < 30.0, "runtime limit exceeded");
    if (c.ok) c.note("k=1..5, exhaustive over all periods up to 2k+1");
    return {5, "k-minimal-subshifts-census", c.ok, c.detail};
}

// 6. The section-3 interleaving fixture.
CriterionResult criterion_interleaving() {
    Check c;
    auto u = interleave({fibonacci_word(), periodic_word("0102"), periodic_word("ab")});
    c.expect(u.prefix(20) == "0a10b2a01b02a0b10a2b", "prefix(20) mismatch");
    c.expect(is_balanced(u, 60, 6000).balanced, "interleaving should be balanced to L=60");

    auto shifted_z0 = interleave({fibonacci_word(), shifted(periodic_word("0102"), 1),
                                  periodic_word("ab")});
    c.expect(abelian_member(shifted_z0, u, 30, 4000).member,
             "variant with shifted z0 should be a member");

    auto wrong_slope = interleave({binary_rotation_word({golden(), TorusPoint{golden()},
                                                         EndpointConvention::Underline}),
                                   periodic_word("0102"), periodic_word("ab")});
    c.expect(!abelian_member(wrong_slope, u, 30, 4000).member,
             "variant over a different slope should be rejected");
    if (c.ok) c.note("prefix byte-exact, balanced to 60, member/reject probes as expected");
    return {6, "balanced-interleaving", c.ok, c.detail};
}

// 7. Heavy/light geometry against brute-force scans, all m <= 40, for specs
// covering every branch including the exact boundary offsets.
CriterionResult criterion_hl_geometry() {
    auto t0 = Clock::now();
    Check c;
    QuadExt a = sqrt2_slope();
    std::vector<std::pair<std::string, TernaryRotationSpec>> specs = {
        {"interior", {a, TorusPoint{QuadExt(Rational(9, 20))}, TorusPoint{QuadExt(0)}, false, false}},
        {"half", {a, TorusPoint{QuadExt(Rational(1, 2))}, TorusPoint{a}, true, false}},
        {"tight", {a, TorusPoint{a}, TorusPoint{a}, false, false}},
        {"tight-closed", {a, TorusPoint{a}, TorusPoint{QuadExt(0)}, true, true}},
        {"heavy-boundary-word", {a, orbit_point(a, -6), orbit_point(a, -8), false, true}},
        {"heavy-boundary-word-2", {a, orbit_point(a, 6), orbit_point(a, -4), true, false}},
        {"light-boundary-word", {a, orbit_point(a, -11), orbit_point(a, -13), true, false}},
        {"light-boundary-miss", {a, orbit_point(a, -11), orbit_point(a, -13), false, false}},
    };
    const std::size_t window = 20000;
    int comparisons = 0;
    for (const auto& [label, spec] : specs) {
        auto word = ternary_rotation_word(spec);
        word.prefix(window);
        for (std::size_t m = 1; m <= 40 && c.ok; ++m) {
            for (HlKind kind : {HlKind::OneHeavyTwoLight, HlKind::TwoHeavyOneLight,
                                HlKind::BothHeavy, HlKind::BothLight}) {
                bool geometry = exists_hl_factor(kind, spec, m, window).exists;
                bool scan = scan_hl_exists(kind, word, m, window);
                ++comparisons;
                if (geometry != scan) {
                    c.expect(false, "disagreement: spec=" + label + " kind=" + to_string(kind) +
                                        " m=" + std::to_string(m));
                    break;
                }
            }
        }
    }
    double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    c.expect(elapsed < 60.0, "runtime limit exceeded");
    if (c.ok)
        c.note(std::to_string(specs.size()) + " specs, " + std::to_string(comparisons) +
               " comparisons, zero disagreements");
    return {7, "heavy-light-geometry-vs-scan", c.ok, c.detail};
}

// 8. Offset-order membership chain over alpha = sqrt(2)-1.
CriterionResult criterion_offset_chain() {
    Check c;
    QuadExt a = sqrt2_slope();
    // Norms: ||9/20|| = 0.45 < ||{6a}|| = 6 sqrt(2) - 8 ~ 0.4853 < ||1/2||.
    std::vector<TernaryRotationSpec> chain = {
        {a, TorusPoint{QuadExt(Rational(9, 20))}, TorusPoint{QuadExt(0)}, false, false},
        {a, orbit_point(a, 6), TorusPoint{QuadExt(Rational(1, 5))}, false, false},
        {a, TorusPoint{QuadExt(Rational(1, 2))}, TorusPoint{QuadExt(0)}, false, false},
    };
    std::string witness_lengths;
    for (std::size_t lo = 0; lo < chain.size(); ++lo) {
        for (std::size_t hi = lo + 1; hi < chain.size(); ++hi) {
            // L = 70: the smallest length separating the 1/2 and {6a}
            // offsets is 35, beyond the reach of shorter probes.
            auto rep = offset_order_member(chain[hi], chain[lo], 70, 12000);
            if (!rep.a_in_b.member) {
                c.expect(false, "upward membership failed at (" + std::to_string(hi) + "," +
                                    std::to_string(lo) + ")");
                continue;
            }
            if (rep.b_in_a.member) {
                c.expect(false, "downward membership unexpectedly passed");
                continue;
            }
            // The light-side gap witness ||hi|| > {-m a} > ||lo||, verified
            // exactly.
            QuadExt hi_norm = chain[hi].zeta.distance_to_zero();
            QuadExt lo_norm = chain[lo].zeta.distance_to_zero();
            bool gap_ok = false;
            if (rep.gap_witness_m) {
                QuadExt mu = orbit_point(a, -static_cast<long>(*rep.gap_witness_m)).value();
                gap_ok = lo_norm < mu && mu < hi_norm;
            }
            c.expect(gap_ok, "no exact gap witness for the light side");
            // The rejection itself may fire earlier, on the heavy side or at
            // a boundary length; its circle norm still lies between the two
            // offset norms (inclusively at boundary hits).
            std::size_t m = rep.b_in_a.witness_length();
            QuadExt point_norm = orbit_point(a, static_cast<long>(m)).distance_to_zero();
            c.expect(lo_norm < point_norm && point_norm <= hi_norm,
                     "rejection witness length outside the exact norm range");
            witness_lengths += (witness_lengths.empty() ? "" : ",") + std::to_string(m) + "/" +
                               std::to_string(*rep.gap_witness_m);
        }
    }
    if (c.ok)
        c.note("3 offsets, upward member, downward rejected; witness/gap lengths " +
               witness_lengths);
    return {8, "offset-order-asymmetry", c.ok, c.detail};
}

// 9. Minimal-complexity trichotomy at finite scale.
CriterionResult criterion_trichotomy() {
    Check c;

    // Case (2): every second letter is 2; the closure is the shift orbit.
    auto u2 = substituted(fibonacci_word(), {{'0', "02"}, {'1', "12"}});
    auto same_slope = substituted(
        binary_rotation_word({fib_slope(), TorusPoint{QuadExt(Rational(1, 3))},
                              EndpointConvention::Bar}),
        {{'0', "02"}, {'1', "12"}});
    auto wrong_slope = substituted(
        binary_rotation_word({golden(), TorusPoint{golden()}, EndpointConvention::Underline}),
        {{'0', "02"}, {'1', "12"}});
    std::vector<ClosureProbe> probes2 = {
        {"u-itself", u2, true},
        {"shift-1", shifted(u2, 1), true},
        {"shift-2", shifted(u2, 2), true},
        {"same-slope-image", same_slope, true},
        {"prepended-2", prepend("2", u2), true},
        {"wrong-slope-image", wrong_slope, false},
        {"(02)^w", periodic_word("02"), false},
        {"(012)^w", periodic_word("012"), false},
        {"(0212)^w", periodic_word("0212"), false},
        {"swapped-image", substituted(fibonacci_word(), {{'0', "12"}, {'1', "02"}}), false},
    };
    int accepted = 0, rejected = 0;
    for (const auto& row : probe_membership(probes2, u2, 30, 4000)) {
        if (!row.as_expected()) c.expect(false, "case-2 probe '" + row.label + "' unexpected");
        (row.expect_member ? accepted : rejected) += row.as_expected();
    }
    c.expect(accepted == 5 && rejected == 5, "case-2 probe tally should be 5 accept / 5 reject");

    // Case (3): zeta = alpha; sampled offsets across [alpha, 1-alpha] are
    // members, as is the non-recurrent 02u; other slopes are not. The 02u
    // example prepends to the characteristic image phi(s_{beta,beta}) with
    // beta = alpha/(1-alpha) = 1/sqrt(2), whose language coincides with the
    // tight ternary coding's.
    QuadExt a = sqrt2_slope();
    QuadExt beta(Rational(0), Rational(1, 2), 2);
    TernaryRotationSpec u3{a, TorusPoint{a}, TorusPoint{a}, false, false};
    auto u3_word = ternary_rotation_word(u3);
    auto u3_char = substituted(
        binary_rotation_word({beta, TorusPoint{beta}, EndpointConvention::Underline}),
        {{'0', "0"}, {'1', "12"}});
    for (std::size_t n = 1; n <= 20; ++n)
        if (factor_set(u3_word, n, 6000) != factor_set(u3_char, n, 6000)) {
            c.expect(false, "coding and characteristic image disagree at n=" + std::to_string(n));
            break;
        }
    std::vector<ClosureProbe> probes3 = {
        {"zeta=alpha", ternary_rotation_word({a, TorusPoint{a}, orbit_point(a, -3), false, false}),
         true},
        {"zeta=9/20",
         ternary_rotation_word({a, TorusPoint{QuadExt(Rational(9, 20))}, TorusPoint{QuadExt(0)},
                                false, false}),
         true},
        {"zeta={6a}",
         ternary_rotation_word({a, orbit_point(a, 6), TorusPoint{QuadExt(Rational(1, 5))}, false,
                                false}),
         true},
        {"zeta=1/2",
         ternary_rotation_word({a, TorusPoint{QuadExt(Rational(1, 2))}, TorusPoint{QuadExt(0)},
                                false, false}),
         true},
        {"zeta=1-alpha",
         ternary_rotation_word({a, TorusPoint{QuadExt(1) - a}, TorusPoint{QuadExt(0)}, true, true}),
         true},
        {"non-recurrent-02u", prepend("02", u3_char), true},
        {"wrong-slope",
         ternary_rotation_word({fib_slope(), TorusPoint{fib_slope()}, TorusPoint{fib_slope()},
                                false, false}),
         false},
        {"(012)^w", periodic_word("012"), false},
    };
    for (const auto& row : np2_closure_probe(u3, probes3, 40, 6000))
        if (!row.as_expected()) c.expect(false, "case-3 probe '" + row.label + "' unexpected");

    // Four letters: the reversal approximant is accepted, block mutants are not.
    auto rep4 = minimal_subshift_probe_4letter({{"23"}, {"0"}, {"1"}, fibonacci_word()}, 30, 4000);
    for (const auto& row : rep4.rows)
        if (!row.as_expected()) c.expect(false, "4-letter probe '" + row.label + "' unexpected");

    if (c.ok) c.note("case-2 5/5, case-3 offsets + 02u member, 4-letter reversal/mutants as stated");
    return {9, "minimal-complexity-trichotomy", c.ok, c.detail};
}

// 10. Arnoux-Rauzy facts for the Tribonacci directive.
CriterionResult criterion_arnoux_rauzy() {
    Check c;
    auto psi = arnoux_rauzy(periodic_word("012"));
    Word psi_window = psi.prefix(1000);
    Word trib_window = tribonacci_word().prefix(1000);
    for (std::size_t n = 1; n <= 20; ++n)
        if (factor_set(psi_window, n) != factor_set(trib_window, n)) {
            c.expect(false, "factor sets differ at n=" + std::to_string(n));
            break;
        }
    auto rep = ar_closure_probe(periodic_word("012"), 50, 3000);
    c.expect(rep.twenty_c.member, "20c should be accepted at L=50");
    c.expect(rep.missing_factor.has_value(), "a factor of 20c must be absent from L(c)");
    if (c.ok) c.note("factor sets equal to length 20; 20c member; missing factor " +
                     *rep.missing_factor);
    return {10, "arnoux-rauzy-closure", c.ok, c.detail};
}

// 11. The section-6 subshift fixtures.
CriterionResult criterion_subshifts() {
    Check c;
    // Golden mean: abelian-legal coincides with legal up to length 10.
    {
        auto gm = golden_mean();
        BoundedLanguage lang(gm, 10);
        std::vector<Word> level = {""};
        for (std::size_t n = 1; n <= 10 && c.ok; ++n) {
            std::vector<Word> next;
            for (const Word& w : level)
                for (Letter x : {'0', '1'}) {
                    Word v = w + x;
                    if (abelian_legal(v, lang) != lang.is_legal(v))
                        c.expect(false, "golden-mean mismatch at " + v);
                    next.push_back(v);
                }
            level = std::move(next);
        }
    }
    for (std::size_t n : {std::size_t(4), std::size_t(10)}) {
        auto rep = sft_counterexample_report(n);
        c.expect(rep.pass(), "sft counterexample failed at n=" + std::to_string(n));
    }
    {
        auto witnesses = nonsofic_witness(8);
        std::size_t total = 0;
        bool shape_ok = true;
        std::vector<std::size_t> per_length(9, 0);
        for (const Word& w : witnesses) {
            Word inner = w.substr(1, w.size() - 2);
            auto as = std::count(inner.begin(), inner.end(), 'a');
            auto bs = std::count(inner.begin(), inner.end(), 'b');
            shape_ok = shape_ok && w.front() == 'c' && w.back() == 'd' && as != bs;
            ++per_length[inner.size()];
            ++total;
        }
        c.expect(shape_ok, "a witness is not an unbalanced cwd");
        std::size_t want_total = 0;
        auto binom = [](std::size_t n, std::size_t k) {
            std::size_t r = 1;
            for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
            return r;
        };
        for (std::size_t n = 0; n <= 8; ++n) {
            std::size_t unbalanced = (std::size_t(1) << n) - (n % 2 == 0 ? binom(n, n / 2) : 0);
            if (n % 2 == 1) unbalanced = std::size_t(1) << n;
            want_total += unbalanced;
            if (per_length[n] != unbalanced)
                c.expect(false, "witness count wrong at |w|=" + std::to_string(n));
        }
        c.expect(total == want_total, "witness total wrong");
    }
    {
        auto rep = binary_order6_report();
        c.expect(rep.pass(), "binary order-6 fragment check failed");
    }
    if (c.ok) c.note("golden mean fixed point, SFT fragments n=4,10, nonsofic census to |w|=8");
    return {11, "subshift-counterexamples", c.ok, c.detail};
}

using CriterionFn = CriterionResult (*)();

const std::vector<CriterionFn> kCriteria = {
    criterion_tm_abelian,     criterion_sturmian_signature, criterion_corridor_oracle,
    criterion_periodic_huge,  criterion_census,             criterion_interleaving,
    criterion_hl_geometry,    criterion_offset_chain,       criterion_trichotomy,
    criterion_arnoux_rauzy,   criterion_subshifts,
};

std::vector<CriterionResult> run_base(int workers) {
    std::vector<CriterionResult> results(kCriteria.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < kCriteria.size(); ++i) results[i] = kCriteria[i]();
        return results;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= kCriteria.size()) return;
            results[i] = kCriteria[i]();
        }
    };
    std::vector<std::thread> pool;
    int n = std::min<int>(workers, static_cast<int>(kCriteria.size()));
    pool.reserve(n);
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return results;
}

// 12. Determinism: the suite output is byte-identical across consecutive
// runs and across worker counts 1 and 8.
CriterionResult criterion_determinism(const std::vector<CriterionResult>& own) {
    Check c;
    auto single = run_base(1);
    auto parallel = run_base(8);
    std::string own_report = format_report(own);
    c.expect(format_report(single) == own_report, "re-run with 1 worker differs");
    c.expect(format_report(parallel) == own_report, "re-run with 8 workers differs");
    if (c.ok) c.note("three full runs byte-identical (workers 1 and 8)");
    return {12, "deterministic-output", c.ok, c.detail};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options) {
    std::vector<CriterionResult> results = run_base(options.workers);
    results.push_back(criterion_determinism(results));
    if (!options.suite.empty()) {
        std::vector<CriterionResult> filtered;
        for (auto& r : results)
            if (r.name == options.suite || std::to_string(r.id) == options.suite)
                filtered.push_back(r);
        if (filtered.empty())
            throw std::invalid_argument("no criterion named '" + options.suite + "'");
        return filtered;
    }
    return results;
}

std::string format_report(const std::vector<CriterionResult>& results) {
    std::string out;
    for (const auto& r : results) {
        out += r.pass ? "PASS" : "FAIL";
        out += " criterion-" + std::to_string(r.id) + " " + r.name;
        if (!r.detail.empty()) out += ": " + r.detail;
        out += "\n";
    }
    return out;
}

bool all_pass(const std::vector<CriterionResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CriterionResult& r) { return r.pass; });
}

}  // namespace abelian
