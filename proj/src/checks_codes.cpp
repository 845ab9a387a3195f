#include "checks.hpp"

#include "wpb/errors.hpp"

#include <algorithm>

namespace wpb::checks {

namespace {

// Largest n with q^n <= cap.
std::size_t length_cap(unsigned q, double cap)
{
    std::size_t n = 0;
    while (space_size(q, n + 1) <= cap)
        ++n;
    return n;
}

BlockSpace chain_space(Rng& rng, const VerifyOptions& opts)
{
    const unsigned q = pick_q(rng, opts, {2, 3, 5});
    const auto field = make_field(q);
    const WeightFn w = q == 5 && rng.chance(50) ? lee_weight(field) : pick_weight(rng, field);
    const std::size_t max_n = std::min(length_cap(q, 1024), max_length(q));
    const std::size_t s = rng.between(1, std::min<std::size_t>(max_n, 5));
    return random_space(rng, Poset::chain(s), w, 2, max_n);
}

// First v (odometer order) lying within `radius` of two codewords.
json collision(const Code& code, unsigned radius, const Limits& limits)
{
    const auto& space = code.space();
    const auto& words = code.codewords();
    const auto total = space.space_size(limits);
    for (std::uint64_t i = 0; i < total; ++i) {
        const auto v = space.vector_at(i);
        const BlockVector* first = nullptr;
        for (const auto& c : words) {
            if (space.distance(v, c) > radius)
                continue;
            if (first == nullptr) {
                first = &c;
                continue;
            }
            return {{"radius", radius}, {"v", to_json(v)}, {"c1", to_json(*first)}, {"c2", to_json(c)}};
        }
    }
    return nullptr;
}

json lightest_word(const Code& code)
{
    const auto& space = code.space();
    const BlockVector* best = nullptr;
    unsigned best_w = 0;
    for (const auto& c : code.codewords()) {
        const unsigned w = space.weight(c);
        if (w != 0 && (best == nullptr || w < best_w)) {
            best = &c;
            best_w = w;
        }
    }
    if (best == nullptr)
        return nullptr;
    return {{"word", to_json(*best)}, {"weight", best_w}};
}

} // namespace

void packing_checks(Recorder& rec, const std::vector<Code>& codes, const VerifyOptions& opts)
{
    const Code& code = codes.at(0);
    if (!code.space().poset().is_chain()) {
        rec.not_applicable("packing-lower-bound", "poset is not a chain");
        rec.not_applicable("packing-equality-criterion", "poset is not a chain");
        return;
    }
    if (!code.is_linear()) {
        rec.not_applicable("packing-lower-bound", "code is not linear");
        rec.not_applicable("packing-equality-criterion", "code is not linear");
        return;
    }
    if (code.size() < 2) {
        rec.not_applicable("packing-lower-bound", "code has fewer than two words");
        rec.not_applicable("packing-equality-criterion", "code has fewer than two words");
        return;
    }
    const auto& wf = code.space().weight_fn();
    const unsigned M = wf.max_weight(), m = wf.min_weight();
    const unsigned rho = packing_radius(code, opts.limits);
    const unsigned dh = hamming_min_distance(code);
    const unsigned dw = min_distance(code);
    const unsigned bound = (dh - 1) * M;
    json detail = {{"rho", rho}, {"d_block", dh}, {"d_weighted", dw}, {"M_w", M}, {"m_w", m},
                   {"weight", wf.name()}, {"bound", bound}};

    json lower = detail;
    if (rho < bound)
        lower["witness"] = collision(code, rho + 1, opts.limits);
    rec.hard("packing-lower-bound", rho >= bound, lower);

    const bool lhs = rho == bound;
    const bool rhs = dw == m + bound;
    json eq = detail;
    eq["radius_equals_bound"] = lhs;
    eq["distance_condition"] = rhs;
    if (lhs != rhs) {
        eq["lightest_codeword"] = lightest_word(code);
        eq["witness"] = collision(code, rho + 1, opts.limits);
    }
    rec.hard("packing-equality-criterion", lhs == rhs, eq);
}

void packing_trial(Recorder& rec, std::uint64_t seed, std::size_t, const VerifyOptions& opts)
{
    Rng rng(seed);
    const BlockSpace space = chain_space(rng, opts);
    const Code code = random_code(rng, space, 1);
    rec.set_instance(instance_digest(code));
    packing_checks(rec, {code}, opts);
}

void chain_covering_checks(Recorder& rec, const std::vector<Code>& codes, const VerifyOptions& opts)
{
    const Code& code = codes.at(0);
    if (!code.space().poset().is_chain() || !code.is_linear()) {
        rec.not_applicable("chain-covering-bounds", "needs a linear code over a chain");
        rec.not_applicable("chain-covering-hamming", "needs a linear code over a chain");
        return;
    }
    const unsigned M = code.space().weight_fn().max_weight();
    const std::size_t r = trailing_full_index(code);
    const unsigned rho = cover(rec, code, opts.limits);
    const long lo = (static_cast<long>(r) - 1) * M, hi = static_cast<long>(r) * M;
    rec.hard("chain-covering-bounds", lo < static_cast<long>(rho) && static_cast<long>(rho) <= hi,
             {{"r", r}, {"covering_radius", rho}, {"M_w", M}, {"lower_exclusive", lo}, {"upper", hi}});
    const unsigned big_r = hamming_covering_radius(code, opts.limits);
    rec.hard("chain-covering-hamming", big_r == r, {{"r", r}, {"hamming_covering_radius", big_r}});
}

void chain_covering_trial(Recorder& rec, std::uint64_t seed, std::size_t, const VerifyOptions& opts)
{
    Rng rng(seed);
    const BlockSpace space = chain_space(rng, opts);
    const Code code = random_code(rng, space, 0);
    rec.set_instance(instance_digest(code));
    chain_covering_checks(rec, {code}, opts);
}

void codes_checks(Recorder& rec, const std::vector<Code>& codes, const VerifyOptions& opts)
{
    const Code& code = codes.at(0);
    const auto& space = code.space();
    if (code.is_linear())
        cover(rec, code, opts.limits);
    else
        rec.not_applicable("coset-covering-crosscheck", "code is not linear");
    if (code.size() < 2) {
        for (const char* check : {"mindist-crosscheck", "packing-below-mindist",
                                  "packing-disjoint-balls", "perfect-consistency"})
            rec.not_applicable(check, "code has fewer than two words");
        return;
    }
    const unsigned d = min_distance(code);
    const unsigned pairwise = min_distance_pairwise(code);
    rec.hard("mindist-crosscheck", d == pairwise, {{"min_distance", d}, {"pairwise", pairwise}});

    const unsigned rho = packing_radius(code, opts.limits);
    rec.hard("packing-below-mindist", rho < d, {{"packing_radius", rho}, {"min_distance", d}});

    // Largest r with disjoint radius-r balls: for each pair, the smallest
    // radius at which their balls meet is min_v max(d(v, c1), d(v, c2)).
    const auto table = space.weight_table(opts.limits);
    const auto& words = code.codewords();
    unsigned meet = ~0u;
    const Field& f = space.field();
    std::vector<std::uint64_t> place(space.length(), 1);
    for (std::size_t k = place.size(); k-- > 1;)
        place[k - 1] = place[k] * f.q();
    auto meet_radius = [&](const BlockVector& c1, const BlockVector& c2) {
        const auto diff = space.sub(c1, c2);
        BlockVector v(space.length(), 0);
        unsigned best = ~0u;
        for (std::uint64_t i = 0; i < table.size(); ++i, next_vector(v, f.q())) {
            std::uint64_t j = 0;
            for (std::size_t k = 0; k < v.size(); ++k)
                j += place[k] * f.sub(v[k], diff[k]);
            best = std::min(best, std::max(table[i], table[j]));
        }
        return best;
    };
    if (code.is_linear()) {
        // Translation invariance: pairs (c, 0) suffice.
        const auto zero = space.zero();
        for (const auto& c : words)
            if (c != zero)
                meet = std::min(meet, meet_radius(c, zero));
    } else {
        for (std::size_t a = 0; a < words.size(); ++a)
            for (std::size_t b = a + 1; b < words.size(); ++b)
                meet = std::min(meet, meet_radius(words[a], words[b]));
    }
    rec.hard("packing-disjoint-balls", meet - 1 == rho, {{"packing_radius", rho}, {"oracle", meet - 1}});

    const bool perfect = is_perfect(code, opts.limits);
    const std::uint64_t covered = space.ball_size(space.zero(), rho, opts.limits) * words.size();
    const bool tiles = covered == table.size();
    rec.hard("perfect-consistency", perfect == tiles,
             {{"is_perfect", perfect}, {"ball_volume_times_size", covered}, {"space", table.size()}});
}

void codes_trial(Recorder& rec, std::uint64_t seed, std::size_t, const VerifyOptions& opts)
{
    Rng rng(seed);
    const unsigned q = pick_q(rng, opts, {2, 3, 4, 5});
    const auto field = make_field(q);
    const auto roll = rng.below(3);
    const WeightFn w = roll == 0 ? hamming_weight(field)
                       : roll == 1 && field->is_prime() ? lee_weight(field)
                                                        : random_weight(rng, field);
    const std::size_t max_n = std::min(length_cap(q, 1024), max_length(q));
    const std::size_t s = rng.between(1, std::min<std::size_t>(max_n, 4));
    const BlockSpace space = random_space(rng, pick_poset(rng, s, true), w, 2, max_n);
    const Code code = random_code(rng, space, 1);
    rec.set_instance(instance_digest(code));
    codes_checks(rec, {code}, opts);
}

} // namespace wpb::checks
