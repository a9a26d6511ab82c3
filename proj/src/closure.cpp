#include "abelian/closure.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace abelian {

namespace {

MembershipVerdict member_of_index(const Word& y_window, const AbelianIndex& x_index,
                                  std::size_t L) {
    for (Letter c : y_window)
        if (!x_index.alphabet().contains(c))
            throw std::invalid_argument(std::string("alphabet mismatch: letter '") + c +
                                        "' does not occur in the reference word");
    MembershipVerdict v;
    v.max_len = L;
    v.window_y = y_window.size();
    v.window_x = x_index.window();
    if (L > x_index.max_len()) throw std::invalid_argument("L exceeds the reference index");
    const Alphabet& a = x_index.alphabet();
    const std::size_t k = a.size();
    for (std::size_t n = 1; n <= std::min(L, y_window.size()); ++n) {
        ParikhVector counts(k);
        for (std::size_t i = 0; i < n; ++i) ++counts[a.index(y_window[i])];
        for (std::size_t start = 0;; ++start) {
            if (!x_index.contains(n, counts)) {
                v.member = false;
                v.witness = y_window.substr(start, n);
                return v;
            }
            if (start + n >= y_window.size()) break;
            --counts[a.index(y_window[start])];
            ++counts[a.index(y_window[start + n])];
        }
    }
    v.member = true;
    return v;
}

}  // namespace

MembershipVerdict abelian_member(const Word& y_window, const AbelianIndex& x_index, std::size_t L) {
    return member_of_index(y_window, x_index, L);
}

MembershipVerdict abelian_member(const InfiniteWord& y, const InfiniteWord& x, std::size_t L,
                                 std::size_t window) {
    AbelianIndex idx(x, L, window);
    return member_of_index(y.prefix(window), idx, L);
}

namespace {

void require_binary(const Word& w) {
    for (Letter c : w)
        if (c != '0' && c != '1')
            throw std::invalid_argument("corridor criterion is binary-only");
}

Corridor ones_corridor(const Word& w, std::size_t n) {
    Corridor c{UINT32_MAX, 0};
    std::uint32_t ones = 0;
    for (std::size_t i = 0; i < n; ++i) ones += w[i] == '1';
    for (std::size_t start = 0;; ++start) {
        c.min = std::min(c.min, ones);
        c.max = std::max(c.max, ones);
        if (start + n >= w.size()) break;
        ones -= w[start] == '1';
        ones += w[start + n] == '1';
    }
    return c;
}

}  // namespace

MembershipVerdict corridor_member(const Word& y_window, const Word& x_window, std::size_t L) {
    require_binary(y_window);
    require_binary(x_window);
    MembershipVerdict v;
    v.max_len = L;
    v.window_y = y_window.size();
    v.window_x = x_window.size();
    for (std::size_t n = 1; n <= std::min({L, y_window.size(), x_window.size()}); ++n) {
        Corridor cy = ones_corridor(y_window, n);
        Corridor cx = ones_corridor(x_window, n);
        if (cy.min >= cx.min && cy.max <= cx.max) continue;
        v.member = false;
        std::uint32_t ones = 0;
        for (std::size_t i = 0; i < n; ++i) ones += y_window[i] == '1';
        for (std::size_t start = 0;; ++start) {
            if (ones < cx.min || ones > cx.max) {
                v.witness = y_window.substr(start, n);
                return v;
            }
            if (start + n >= y_window.size()) break;
            ones -= y_window[start] == '1';
            ones += y_window[start + n] == '1';
        }
        return v;  // unreachable: a violating window exists by construction
    }
    v.member = true;
    return v;
}

MembershipVerdict corridor_member(const InfiniteWord& y, const InfiniteWord& x, std::size_t L,
                                  std::size_t window) {
    return corridor_member(y.prefix(window), x.prefix(window), L);
}

HeavyLightClass heavy_light_classify(const Word& v, const InfiniteWord& x, std::size_t window) {
    if (v.empty()) throw std::invalid_argument("cannot classify the empty factor");
    Word w = x.prefix(window);
    if (w.find(v) == Word::npos)
        throw std::invalid_argument("factor does not occur in the window language");
    AbelianIndex idx(w, x.alphabet(), v.size());
    auto count = [&](Letter c) {
        return static_cast<std::uint32_t>(std::count(v.begin(), v.end(), c));
    };
    HeavyLightClass out;
    out.heavy1 = count('1') == idx.corridor(v.size(), x.alphabet().index('1')).max;
    out.heavy2 = count('2') == idx.corridor(v.size(), x.alphabet().index('2')).max;
    return out;
}

const char* to_string(HlKind k) {
    switch (k) {
        case HlKind::OneHeavyTwoLight: return "1heavy2light";
        case HlKind::TwoHeavyOneLight: return "2heavy1light";
        case HlKind::BothHeavy: return "12heavy";
        case HlKind::BothLight: return "12light";
    }
    return "?";
}

HlKind hl_kind_from_string(const std::string& s) {
    if (s == "1heavy2light") return HlKind::OneHeavyTwoLight;
    if (s == "2heavy1light") return HlKind::TwoHeavyOneLight;
    if (s == "12heavy") return HlKind::BothHeavy;
    if (s == "12light") return HlKind::BothLight;
    throw std::invalid_argument("unknown heavy/light kind '" + s +
                                "' (expected 12heavy, 12light, 1heavy2light, 2heavy1light)");
}

namespace {

/// {-m alpha} as a torus point.
TorusPoint backward_orbit_point(const QuadExt& alpha, std::size_t m) {
    return TorusPoint(QuadExt(Rational(-static_cast<long>(m))) * alpha);
}

/// Whether rho = {-n alpha} for some n in [n_min, n_min + steps].
bool in_backward_orbit(const TorusPoint& rho, const QuadExt& alpha, std::size_t n_min,
                       std::size_t steps) {
    TorusPoint p = backward_orbit_point(alpha, n_min);
    QuadExt minus_alpha = -alpha;
    for (std::size_t i = 0; i <= steps; ++i) {
        if (p == rho) return true;
        p = p.rotated(minus_alpha);
    }
    return false;
}

}  // namespace

HlVerdict exists_hl_factor(HlKind kind, const TernaryRotationSpec& spec, std::size_t m,
                           std::size_t orbit_bound) {
    ternary_intervals(spec);  // validate
    if (spec.alpha.is_rational())
        throw std::invalid_argument("heavy/light geometry requires an irrational slope");
    if (m == 0) throw std::invalid_argument("factor length must be positive");

    if (kind == HlKind::OneHeavyTwoLight || kind == HlKind::TwoHeavyOneLight)
        return HlVerdict{true, "always"};

    QuadExt mu = backward_orbit_point(spec.alpha, m).value();
    QuadExt zeta_norm = spec.zeta.distance_to_zero();
    TorusPoint m_forward{QuadExt(Rational(static_cast<long>(m))) * spec.alpha};  // {m alpha}
    TorusPoint m_backward = backward_orbit_point(spec.alpha, m);                 // {-m alpha}

    if (kind == HlKind::BothHeavy) {
        QuadExt threshold = QuadExt(1) - zeta_norm;
        if (mu < threshold) return HlVerdict{true, "mu < 1 - ||zeta||"};
        if (mu > threshold) return HlVerdict{false, "mu > 1 - ||zeta||"};
        // Boundary: only the enumerated words carry the factor.
        if (spec.one_in_j1 && !spec.zeta_in_j2 && spec.zeta == m_forward &&
            in_backward_orbit(spec.rho, spec.alpha, 0, orbit_bound))
            return HlVerdict{true, "boundary word t(bar,under,{m a}) with rho = {-n a}"};
        if (!spec.one_in_j1 && spec.zeta_in_j2 && spec.zeta == m_backward &&
            in_backward_orbit(spec.rho, spec.alpha, m, orbit_bound))
            return HlVerdict{true, "boundary word t(under,bar,{-m a}) with rho = {-(m+n) a}"};
        return HlVerdict{false, "boundary, not an enumerated word"};
    }

    // BothLight
    if (mu > zeta_norm) return HlVerdict{true, "mu > ||zeta||"};
    if (mu < zeta_norm) return HlVerdict{false, "mu < ||zeta||"};
    if (spec.one_in_j1 && !spec.zeta_in_j2 && spec.zeta == m_backward &&
        in_backward_orbit(spec.rho, spec.alpha, m, orbit_bound))
        return HlVerdict{true, "boundary word t(bar,under,{-m a}) with rho = {-(m+n) a}"};
    if (!spec.one_in_j1 && spec.zeta_in_j2 && spec.zeta == m_forward &&
        in_backward_orbit(spec.rho, spec.alpha, 0, orbit_bound))
        return HlVerdict{true, "boundary word t(under,bar,{m a}) with rho = {-n a}"};
    return HlVerdict{false, "boundary, not an enumerated word"};
}

bool scan_hl_exists(HlKind kind, const InfiniteWord& x, std::size_t m, std::size_t window) {
    if (m == 0 || m > window) throw std::invalid_argument("factor length out of window range");
    Word w = x.prefix(window);
    Corridor c1{UINT32_MAX, 0}, c2{UINT32_MAX, 0};
    std::uint32_t n1 = 0, n2 = 0;
    for (std::size_t i = 0; i < m; ++i) {
        n1 += w[i] == '1';
        n2 += w[i] == '2';
    }
    auto slide = [&](auto&& visit) {
        std::uint32_t a = n1, b = n2;
        for (std::size_t start = 0;; ++start) {
            visit(a, b);
            if (start + m >= w.size()) break;
            a -= w[start] == '1';
            b -= w[start] == '2';
            a += w[start + m] == '1';
            b += w[start + m] == '2';
        }
    };
    slide([&](std::uint32_t a, std::uint32_t b) {
        c1.min = std::min(c1.min, a);
        c1.max = std::max(c1.max, a);
        c2.min = std::min(c2.min, b);
        c2.max = std::max(c2.max, b);
    });
    bool found = false;
    slide([&](std::uint32_t a, std::uint32_t b) {
        bool h1 = a == c1.max, h2 = b == c2.max;
        switch (kind) {
            case HlKind::OneHeavyTwoLight: found |= h1 && !h2; break;
            case HlKind::TwoHeavyOneLight: found |= h2 && !h1; break;
            case HlKind::BothHeavy: found |= h1 && h2; break;
            case HlKind::BothLight: found |= !h1 && !h2; break;
        }
    });
    return found;
}

bool heavy_prefix_predicate(const BinaryRotationSpec& spec, std::size_t m) {
    if (m == 0) throw std::invalid_argument("prefix length must be positive");
    TorusPoint start(QuadExt(Rational(-static_cast<long>(m))) * spec.alpha);
    TorusPoint one{QuadExt(0)};
    if (start == one) return true;  // rational slope, interval wraps the whole circle
    bool one_in_i1 = spec.convention == EndpointConvention::Bar;
    CircleInterval interval{start, one, /*include_start=*/!one_in_i1, /*include_end=*/one_in_i1};
    return interval.contains(spec.rho);
}

OffsetOrderReport offset_order_member(const TernaryRotationSpec& a, const TernaryRotationSpec& b,
                                      std::size_t L, std::size_t window,
                                      std::size_t gap_search_bound) {
    bool same_slope = false;
    try {
        same_slope = a.alpha == b.alpha;
    } catch (const IncompatibleFieldError&) {
        same_slope = false;
    }
    if (!same_slope) throw std::invalid_argument("offset comparison requires equal slopes");
    InfiniteWord wa = ternary_rotation_word(a);
    InfiniteWord wb = ternary_rotation_word(b);
    OffsetOrderReport rep{abelian_member(wa, wb, L, window), abelian_member(wb, wa, L, window), {}};
    QuadExt na = a.zeta.distance_to_zero();
    QuadExt nb = b.zeta.distance_to_zero();
    if (na == nb) return rep;
    const QuadExt& hi = na > nb ? na : nb;
    const QuadExt& lo = na > nb ? nb : na;
    for (std::size_t m = 1; m <= gap_search_bound; ++m) {
        QuadExt mu = TorusPoint(QuadExt(Rational(-static_cast<long>(m))) * a.alpha).value();
        if (lo < mu && mu < hi) {
            rep.gap_witness_m = m;
            break;
        }
    }
    return rep;
}

namespace {

bool is_primitive(const Word& v) {
    return (v + v).find(v, 1) == v.size();
}

Word least_rotation(const Word& v) {
    Word best = v;
    Word doubled = v + v;
    for (std::size_t i = 1; i < v.size(); ++i) best = std::min(best, doubled.substr(i, v.size()));
    return best;
}

}  // namespace

std::vector<Word> periodic_census(const InfiniteWord& z, std::size_t window) {
    Word w = z.prefix(window);
    auto period = least_period(w);
    if (!period)
        throw std::invalid_argument("census requires a word that is purely periodic on the window");
    const Alphabet& a = z.alphabet();
    auto n0 = abelian_periodicity_length(w, a, window / 2);
    if (!n0) throw std::invalid_argument("no abelian periodicity length found on the window");
    const std::size_t L = 2 * *n0;
    if (L > w.size()) throw std::invalid_argument("window too small for the census length bound");
    AbelianIndex idx(w, a, L);

    double work = 0;
    for (std::size_t q = 1; q <= *n0; ++q) work += std::pow(double(a.size()), double(q));
    if (work > double(1 << 22)) throw std::invalid_argument("census candidate space too large");

    std::set<Word> orbits;
    for (std::size_t q = 1; q <= *n0; ++q) {
        std::vector<std::size_t> odo(q, 0);
        while (true) {
            Word v;
            for (std::size_t i = 0; i < q; ++i) v += a.letter(odo[i]);
            if (is_primitive(v) && least_rotation(v) == v) {
                Word y;
                while (y.size() < L + q) y += v;
                if (member_of_index(y, idx, L).member) orbits.insert(v);
            }
            std::size_t i = q;
            while (i > 0 && ++odo[i - 1] == a.size()) odo[--i] = 0;
            if (i == 0) break;
        }
    }
    return std::vector<Word>(orbits.begin(), orbits.end());
}

std::vector<ProbeOutcome> probe_membership(const std::vector<ClosureProbe>& probes,
                                           const InfiniteWord& x, std::size_t L,
                                           std::size_t window) {
    AbelianIndex idx(x, L, window);
    std::vector<ProbeOutcome> out;
    out.reserve(probes.size());
    for (const auto& probe : probes) {
        ProbeOutcome row;
        row.label = probe.label;
        row.expect_member = probe.expect_member;
        row.verdict = member_of_index(probe.word.prefix(window), idx, L);
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<ProbeOutcome> np2_closure_probe(const TernaryRotationSpec& u,
                                            const std::vector<ClosureProbe>& candidates,
                                            std::size_t L, std::size_t window) {
    if (!(u.zeta == TorusPoint(u.alpha)))
        throw std::invalid_argument("np2 probe requires a minimal-complexity fixture (zeta = alpha)");
    return probe_membership(candidates, ternary_rotation_word(u), L, window);
}

namespace {

std::optional<BlockDecomposition> parse_blocks_forward(const Word& w, const Word& s0,
                                                       const Word& s1) {
    const std::size_t n = w.size();
    auto starts_with = [&](std::size_t i, const Word& b) {
        return i + b.size() <= n && w.compare(i, b.size(), b) == 0;
    };
    auto proper_prefix_to_end = [&](std::size_t i) {
        std::size_t len = n - i;
        auto pref = [&](const Word& b) {
            return len < b.size() && w.compare(i, len, b, 0, len) == 0;
        };
        return len == 0 || pref(s0) || pref(s1);
    };
    std::vector<char> dp(n + 1, 0);
    for (std::size_t i = n + 1; i-- > 0;) {
        if (proper_prefix_to_end(i)) {
            dp[i] = 1;
            continue;
        }
        dp[i] = (starts_with(i, s0) && dp[i + s0.size()]) || (starts_with(i, s1) && dp[i + s1.size()]);
    }
    auto proper_suffix = [&](std::size_t len, const Word& b) {
        return len < b.size() && w.compare(0, len, b, b.size() - len, len) == 0;
    };
    for (std::size_t lead = 0; lead <= std::min(n, std::max(s0.size(), s1.size())); ++lead) {
        if (lead > 0 && !proper_suffix(lead, s0) && !proper_suffix(lead, s1)) continue;
        if (!dp[lead]) continue;
        BlockDecomposition d;
        d.lead = w.substr(0, lead);
        std::size_t i = lead;
        while (!proper_prefix_to_end(i)) {
            if (starts_with(i, s0) && dp[i + s0.size()]) {
                d.blocks.push_back(0);
                i += s0.size();
            } else if (starts_with(i, s1) && dp[i + s1.size()]) {
                d.blocks.push_back(1);
                i += s1.size();
            } else {
                break;  // cannot happen: dp[i] certified one of the steps
            }
        }
        d.trail = w.substr(i);
        return d;
    }
    return std::nullopt;
}

}  // namespace

std::optional<BlockDecomposition> blocks_decompose(const Word& w, const Word& sigma0,
                                                   const Word& sigma1) {
    if (sigma0.empty() || sigma1.empty())
        throw std::invalid_argument("blocks must be non-empty");
    if (auto fwd = parse_blocks_forward(w, sigma0, sigma1)) {
        fwd->reversed = false;
        return fwd;
    }
    Word rev(w.rbegin(), w.rend());
    if (auto bwd = parse_blocks_forward(rev, sigma0, sigma1)) {
        bwd->reversed = true;
        return bwd;
    }
    return std::nullopt;
}

bool FourLetterProbeReport::all_as_expected() const {
    return std::all_of(rows.begin(), rows.end(), [](const ProbeOutcome& r) { return r.as_expected(); });
}

FourLetterProbeReport minimal_subshift_probe_4letter(const FmSpec& fixture, std::size_t L,
                                                     std::size_t window) {
    auto [b0, b1] = fm_blocks(fixture);
    if ((fixture.g + fixture.e + fixture.f).size() < 4)
        throw std::invalid_argument("four-letter probe needs an alphabet of size at least 4");
    InfiniteWord u = fm_min_complexity_word(fixture);
    AbelianIndex idx(u, L, window);

    FourLetterProbeReport rep;
    auto run = [&](const std::string& label, const Word& y_window, bool expect) {
        ProbeOutcome row;
        row.label = label;
        row.expect_member = expect;
        row.verdict = member_of_index(y_window, idx, L);
        rep.rows.push_back(std::move(row));
    };

    run("u-itself", u.prefix(window), true);
    run("reversal-approximant", reversal_prefix(u, window), true);

    // Mutant 1: forward sigma(0) blocks mixed with reversed sigma(1) blocks.
    {
        Word backbone = fixture.backbone.prefix(window / b0.size() + 2);
        Word rb1(b1.rbegin(), b1.rend());
        Word y;
        for (Letter c : backbone) {
            y += c == '0' ? b0 : rb1;
            if (y.size() >= window) break;
        }
        run("mutant-reversed-1-blocks", y.substr(0, window), false);
    }

    // Mutant 2: blocks rearranged along a non-member backbone.
    {
        Word y;
        while (y.size() < window) y += b0 + b1;
        run("mutant-alternating-backbone", y.substr(0, window), false);
    }

    // Mutant 3: a mid-block chunk of u reversed in place.
    {
        Word y = u.prefix(window);
        std::size_t blk = b0.size();
        std::size_t from = (window / 3 / blk) * blk + blk - 1;
        std::size_t to = std::min(from + 20 * blk, y.size());
        std::reverse(y.begin() + static_cast<long>(from), y.begin() + static_cast<long>(to));
        run("mutant-partial-reversal", y, false);
    }

    return rep;
}

ArClosureReport ar_closure_probe(const InfiniteWord& directive, std::size_t L,
                                 std::size_t window) {
    if (window < 16) throw std::invalid_argument("window too small for the probe");
    ArClosureReport rep;
    Word d = directive.prefix(64);
    auto first2 = d.find('2');
    rep.directive_ok = !d.empty() && d[0] == '0' && first2 != Word::npos &&
                       d.find('1') != Word::npos && d.find('1') < first2 &&
                       d.substr(0, first2).find_first_not_of("01") == Word::npos;
    if (!rep.directive_ok)
        throw std::invalid_argument(
            "directive must start with a prefix of the form 0{0,1}*1{0,1}*2");

    InfiniteWord c = arnoux_rauzy(directive);
    Word c_window = c.prefix(window);
    AbelianIndex idx(c_window, c.alphabet(), L);
    rep.c_itself = member_of_index(c_window, idx, L);
    Word twenty_c = "20" + c.prefix(window - 2);
    rep.twenty_c = member_of_index(twenty_c, idx, L);

    for (std::size_t n = 1; n <= 10 && !rep.missing_factor; ++n) {
        auto have = factor_set(c_window, n);
        std::set<Word> missing;
        for (std::size_t i = 0; i + n <= twenty_c.size(); ++i) {
            Word f = twenty_c.substr(i, n);
            if (!have.count(f)) missing.insert(f);
        }
        if (!missing.empty()) rep.missing_factor = *missing.begin();
    }
    return rep;
}

}  // namespace abelian
