#include "checks.hpp"

#include "wpb/constructions.hpp"

#include <algorithm>
#include <climits>

namespace wpb::checks {

namespace {

// Largest n1 * n2 per field size; keeps q^(n1 n2) near 2^12.
std::size_t product_budget(unsigned q)
{
    switch (q) {
    case 2:
        return 12;
    case 3:
        return 7;
    case 5:
        return 5;
    default:
        return 4;
    }
}

Poset tensor_poset(Rng& rng, std::size_t s)
{
    const auto roll = rng.below(20);
    if (roll < 9)
        return Poset::chain(s);
    if (roll < 18)
        return Poset::antichain(s);
    return random_poset(rng, s);
}

std::vector<std::size_t> tensor_sizes(Rng& rng, std::size_t n, bool trivial)
{
    if (trivial)
        return std::vector<std::size_t>(n, 1);
    std::vector<std::size_t> sizes;
    while (n > 0) {
        const std::size_t k = rng.between(1, std::min<std::size_t>(n, 2));
        sizes.push_back(k);
        n -= k;
    }
    return sizes;
}

json closest_pair(const Code& code)
{
    const auto& words = code.codewords();
    const auto& space = code.space();
    json best;
    unsigned best_d = ~0u;
    for (std::size_t a = 0; a < words.size(); ++a)
        for (std::size_t b = a + 1; b < words.size(); ++b) {
            const unsigned d = space.distance(words[a], words[b]);
            if (d < best_d) {
                best_d = d;
                best = {{"c1", to_json(words[a])}, {"c2", to_json(words[b])}, {"distance", d}};
            }
        }
    return best;
}

json deep_hole(const Code& code, const Limits& limits)
{
    const auto& space = code.space();
    const auto total = space.space_size(limits);
    unsigned best = 0;
    std::uint64_t where = 0;
    for (std::uint64_t i = 0; i < total; ++i) {
        const auto v = space.vector_at(i);
        unsigned near = ~0u;
        for (const auto& c : code.codewords())
            near = std::min(near, space.distance(v, c));
        if (near > best) {
            best = near;
            where = i;
        }
    }
    return {{"v", to_json(space.vector_at(where))}, {"distance_to_code", best}};
}

std::size_t top_block(const BlockSpace& space, std::span<const Element> u)
{
    const ElementSet support = space.block_support(u);
    std::size_t top = 0;
    for (std::size_t i = 0; i < space.blocks(); ++i)
        if (contains(support, i))
            top = i + 1;
    return top;
}

struct Params {
    long s, t, M, m;
    long d1, d2, d1w, d2w;
    long rho1, rho2, R1, R2, D1, D2;
    long alpha_s, beta_t;
    bool p_chain, p_anti, q_chain, q_anti, trivial, lee;
    unsigned q;
};

json params_json(const Params& p)
{
    return {{"s", p.s},         {"t", p.t},         {"M_w", p.M},       {"m_w", p.m},
            {"d1", p.d1},       {"d2", p.d2},       {"d1_w", p.d1w},    {"d2_w", p.d2w},
            {"rho1", p.rho1},   {"rho2", p.rho2},   {"R1", p.R1},       {"R2", p.R2},
            {"D1", p.D1},       {"D2", p.D2},       {"alpha_s", p.alpha_s}, {"beta_t", p.beta_t}};
}

// One reported statement: `ok` decides pass vs. soft discrepancy.
struct Soft {
    Recorder& rec;
    const Params& p;
    const Code& code;
    const Limits& limits;
    long d;
    long rho;

    void distance(const std::string& check, bool applies, const char* why, long lo, long hi)
    {
        if (!applies) {
            rec.not_applicable(check, why);
            return;
        }
        json detail = params_json(p);
        detail["d"] = d;
        detail["lower"] = lo;
        detail["upper"] = hi;
        const bool ok = lo <= d && d <= hi;
        if (!ok)
            detail["witness"] = closest_pair(code);
        rec.soft(check, ok, detail);
    }

    void distance_equal(const std::string& check, bool applies, const char* why,
                        std::initializer_list<long> values)
    {
        if (!applies) {
            rec.not_applicable(check, why);
            return;
        }
        json detail = params_json(p);
        detail["d"] = d;
        detail["expected"] = std::vector<long>(values);
        const bool ok = std::all_of(values.begin(), values.end(), [&](long x) { return x == d; });
        if (!ok)
            detail["witness"] = closest_pair(code);
        rec.soft(check, ok, detail);
    }

    void radius(const std::string& check, bool applies, const char* why, long lo, long hi)
    {
        if (!applies) {
            rec.not_applicable(check, why);
            return;
        }
        json detail = params_json(p);
        detail["rho"] = rho;
        if (lo > LONG_MIN)
            detail["lower"] = lo;
        if (hi < LONG_MAX)
            detail["upper"] = hi;
        const bool ok = lo <= rho && rho <= hi;
        if (!ok)
            detail["witness"] = deep_hole(code, limits);
        rec.soft(check, ok, detail);
    }
};

constexpr long lo_none = LONG_MIN;
constexpr long hi_none = LONG_MAX;

void cartesian_statements(Soft& x, const Params& p)
{
    const char* chain_anti = "needs P a chain and Q an antichain";
    const char* anti_chain = "needs P an antichain and Q a chain";
    const char* antis = "needs two antichains";
    const char* chains = "needs two chains";
    const char* trivial_chains = "needs two chains with trivial labelings";
    const long dd = p.d1 * p.d2;

    x.distance("tensor-car-chain-antichain", p.p_chain && p.q_anti, chain_anti,
               p.d2 * (p.d1 - 1) * p.M + p.d2w, dd * p.M);
    x.distance("tensor-car-antichain-chain", p.p_anti && p.q_chain, anti_chain,
               p.d1 * (p.d2 - 1) * p.M + p.d1w, dd * p.M);
    x.distance("tensor-car-antichains", p.p_anti && p.q_anti, antis, dd * p.m, dd * p.M);
    x.distance("tensor-car-chains", p.p_chain && p.q_chain, chains, (dd - 1) * p.M + p.m, dd * p.M);
    x.distance_equal("tensor-car-chains-trivial", p.p_chain && p.q_chain && p.trivial, trivial_chains,
                     {(dd - 1) * p.M + p.m, (p.d1w - p.m) * p.d2 + p.d2w, (p.d2w - p.m) * p.d1 + p.d1w});

    const char* lee = "needs the Lee weight with trivial labelings";
    const long half = static_cast<long>(p.q / 2);
    x.distance("tensor-lee-antichains", p.lee && p.trivial && p.p_anti && p.q_anti, lee, dd, dd * half);
    x.distance("tensor-lee-chain-antichain", p.lee && p.trivial && p.p_chain && p.q_anti, lee,
               p.d2 * (p.d1 - 1) * half + p.d2w, dd * half);
    x.distance_equal("tensor-lee-chains", p.lee && p.trivial && p.p_chain && p.q_chain, lee,
                     {(p.d1w - 1) * p.d2 + p.d2w, (p.d2w - 1) * p.d1 + p.d1w});

    const long full = p.s * p.t * p.M;
    const bool ca = p.p_chain && p.q_anti, cc = p.p_chain && p.q_chain;
    x.radius("tensor-car-covering-1a", ca && p.D1 < p.s, "needs P chain, Q antichain, D1 < s", full, full);
    x.radius("tensor-car-covering-1b", ca, chain_anti, p.R2 * (p.s - 1) * p.M + p.R2 * p.m, hi_none);
    x.radius("tensor-car-covering-1c", ca && p.D1 == p.s && p.alpha_s == 1,
             "needs P chain, Q antichain, D1 = s, alpha_s = 1", lo_none, (p.s - 1) * p.t * p.M + p.rho2);
    x.radius("tensor-car-covering-2a", cc && (p.D1 < p.s || p.D2 < p.t),
             "needs two chains with D1 < s or D2 < t", full, full);
    const bool top = cc && p.D1 == p.s && p.D2 == p.t;
    x.radius("tensor-car-covering-2b", top && p.alpha_s == 1,
             "needs two chains, D1 = s, D2 = t, alpha_s = 1", lo_none, (p.s - 1) * p.t * p.M + p.rho2);
    x.radius("tensor-car-covering-2c", top && p.beta_t == 1,
             "needs two chains, D1 = s, D2 = t, beta_t = 1", lo_none, (p.t - 1) * p.s * p.M + p.rho1);
    x.radius("tensor-car-covering-2d", top && p.alpha_s == 1 && p.beta_t == 1,
             "needs two chains, D1 = s, D2 = t, alpha_s = beta_t = 1", lo_none,
             std::min((p.s - 1) * p.t * p.M + p.rho2, (p.t - 1) * p.s * p.M + p.rho1));
    x.radius("tensor-car-covering-2e", cc, chains,
             std::max((p.s * p.R2 - 1) * p.M + p.m, (p.t * p.R1 - 1) * p.M + p.m), hi_none);
}

void lex_statements(Soft& x, const Params& p)
{
    const long dd = p.d1 * p.d2;
    const bool ca = p.p_chain && p.q_anti, cc = p.p_chain && p.q_chain;
    const bool aa = p.p_anti && p.q_anti, ac = p.p_anti && p.q_chain;
    x.distance("tensor-lex-chain-antichain", ca, "needs P a chain and Q an antichain",
               (p.d1 - 1) * p.t * p.M + p.d2w, (p.d1 - 1) * p.t * p.M + p.d2 * p.M);
    x.distance("tensor-lex-chains", cc, "needs two chains",
               p.m + (p.d1 - 1) * p.t * p.M + (p.d2 - 1) * p.M, (p.d1 - 1) * p.t * p.M + p.d2 * p.M);
    x.distance("tensor-lex-antichains", aa, "needs two antichains", dd * p.m, dd * p.M);
    x.distance("tensor-lex-antichain-chain", ac, "needs P an antichain and Q a chain",
               p.d1w + p.d1 * (p.d2 - 1) * p.M, dd * p.M);
    x.distance_equal("tensor-lex-chain-antichain-trivial", ca && p.trivial,
                     "needs P chain, Q antichain, trivial labelings",
                     {(p.d1 - 1) * p.t * p.M + p.d2w, (p.d1w - p.m) * p.t + p.d2w});
    x.distance_equal("tensor-lex-chains-trivial", cc && p.trivial, "needs two chains with trivial labelings",
                     {p.m + (p.d1 - 1) * p.t * p.M + (p.d2 - 1) * p.M, (p.d1w - p.m) * p.t + p.d2w});

    const long full = p.s * p.t * p.M;
    x.radius("tensor-lex-covering-1a", p.p_chain && p.D1 < p.s, "needs P chain and D1 < s", full, full);
    x.radius("tensor-lex-covering-1a-chains", cc && (p.D1 < p.s || p.D2 < p.t),
             "needs two chains with D1 < s or D2 < t", full, full);
    x.radius("tensor-lex-covering-1b", p.p_chain && p.D1 == p.s && p.D2 == p.t && p.alpha_s == 1,
             "needs P chain, D1 = s, D2 = t, alpha_s = 1", lo_none, (p.s - 1) * p.t * p.M + p.rho2);
    x.radius("tensor-lex-covering-1c", p.p_chain, "needs P a chain",
             std::max((p.s - 1) * p.t * p.M + p.rho2, p.t * p.rho1), hi_none);
    x.radius("tensor-lex-covering-2a", ac && p.D2 < p.t, "needs P antichain, Q chain, D2 < t", full, full);
    x.radius("tensor-lex-covering-2b", ac && p.D2 == p.t && p.beta_t == 1,
             "needs P antichain, Q chain, D2 = t, beta_t = 1", lo_none, (p.t - 1) * p.s * p.M + p.rho1);
}

} // namespace

void tensor_checks(Recorder& rec, const std::vector<Code>& codes, const VerifyOptions& opts)
{
    const Code& c1 = codes.at(0);
    const Code& c2 = codes.at(1);
    const auto& sp1 = c1.space();
    const auto& sp2 = c2.space();
    const auto& wf = sp1.weight_fn();
    const WeightFn ham = hamming_weight(sp1.field_ptr());

    if (!c1.is_linear() || !c2.is_linear() || c1.size() < 2 || c2.size() < 2) {
        rec.fail("tensor-error", "tensor statements need linear component codes with two or more words");
        return;
    }

    Params p{};
    p.s = static_cast<long>(sp1.blocks());
    p.t = static_cast<long>(sp2.blocks());
    p.M = wf.max_weight();
    p.m = wf.min_weight();
    p.d1 = hamming_min_distance(c1);
    p.d2 = hamming_min_distance(c2);
    p.d1w = min_distance(c1);
    p.d2w = min_distance(c2);
    p.rho1 = cover(rec, c1, opts.limits);
    p.rho2 = cover(rec, c2, opts.limits);
    p.R1 = hamming_covering_radius(c1, opts.limits);
    p.R2 = hamming_covering_radius(c2, opts.limits);
    p.D1 = max_poset_weight(c1, ham);
    p.D2 = max_poset_weight(c2, ham);
    p.alpha_s = static_cast<long>(sp1.labeling().size(sp1.blocks() - 1));
    p.beta_t = static_cast<long>(sp2.labeling().size(sp2.blocks() - 1));
    p.p_chain = sp1.poset().is_chain();
    p.p_anti = sp1.poset().is_antichain();
    p.q_chain = sp2.poset().is_chain();
    p.q_anti = sp2.poset().is_antichain();
    p.trivial = sp1.labeling().is_trivial() && sp2.labeling().is_trivial();
    p.lee = wf.kind() == WeightFn::Kind::lee;
    p.q = sp1.field().q();

    for (ProductOrder order : {ProductOrder::cartesian, ProductOrder::lex}) {
        const Code code = tensor_code(c1, c2, order).code;
        const auto& space = code.space();
        const std::string sfx = order == ProductOrder::cartesian ? "-cartesian" : "-lex";
        const long rho = covering_radius(code, opts.limits);
        const long d = code.size() >= 2 ? static_cast<long>(min_distance(code)) : 0;

        const long lower = std::max(p.s * p.rho2, p.t * p.rho1);
        json low = params_json(p);
        low["rho"] = rho;
        low["lower"] = lower;
        if (rho < lower)
            low["witness"] = deep_hole(code, opts.limits);
        rec.hard("tensor-covering-lower" + sfx, rho >= lower, low);

        if (p.p_chain && p.q_chain) {
            json witness;
            std::size_t words = 0;
            const auto zero1 = sp1.zero(), zero2 = sp2.zero();
            for (const auto& u : c1.codewords()) {
                if (u == zero1)
                    continue;
                for (const auto& v : c2.codewords()) {
                    if (v == zero2)
                        continue;
                    ++words;
                    const auto uv = tensor_vector(sp1.field(), sp1.labeling(), u, sp2.labeling(), v);
                    const long lambda = static_cast<long>(top_block(sp1, u));
                    const long delta = static_cast<long>(top_block(sp2, v));
                    const long W = space.block_max_weight(
                        uv, product_index(static_cast<std::size_t>(lambda - 1),
                                          static_cast<std::size_t>(delta - 1), sp2.blocks()));
                    const long expected = order == ProductOrder::cartesian
                                              ? W + (lambda * delta - 1) * p.M
                                              : W + (lambda - 1) * p.t * p.M + (delta - 1) * p.M;
                    const long actual = space.weight(uv);
                    if (actual != expected) {
                        witness = {{"u", to_json(u)}, {"v", to_json(v)}, {"weight", actual},
                                   {"formula", expected}, {"lambda", lambda}, {"delta", delta}};
                        break;
                    }
                }
                if (!witness.is_null())
                    break;
            }
            json detail = {{"pairs", words}};
            if (!witness.is_null())
                detail["witness"] = witness;
            rec.hard("tensor-chain-weight" + sfx, witness.is_null(), detail);
        } else {
            rec.not_applicable("tensor-chain-weight" + sfx, "needs two chains");
        }

        Soft soft{rec, p, code, opts.limits, d, rho};
        if (order == ProductOrder::cartesian)
            cartesian_statements(soft, p);
        else
            lex_statements(soft, p);
    }
}

void tensor_trial(Recorder& rec, std::uint64_t seed, std::size_t, const VerifyOptions& opts)
{
    Rng rng(seed);
    const unsigned q = pick_q(rng, opts, {2, 3, 5, 7});
    const auto field = make_field(q);
    const bool lee = field->is_prime() && q > 2 && rng.chance(30);
    const WeightFn w = lee ? lee_weight(field) : pick_weight(rng, field);
    const bool trivial = lee || rng.chance(40);

    const std::size_t budget = product_budget(q);
    const std::size_t n1 = rng.between(1, std::min<std::size_t>(budget, 4));
    const std::size_t n2 = rng.between(1, std::min<std::size_t>(budget / n1, 4));
    auto make = [&](std::size_t n) {
        auto sizes = tensor_sizes(rng, n, trivial);
        const std::size_t s = sizes.size();
        const BlockSpace space(tensor_poset(rng, s), Labeling(std::move(sizes)), w);
        return random_linear_code(rng, space, rng.between(1, std::min<std::size_t>(n, 3)));
    };
    const Code c1 = make(n1);
    const Code c2 = make(n2);
    rec.set_instance(pair_digest(c1, c2));
    tensor_checks(rec, {c1, c2}, opts);
}

} // namespace wpb::checks
