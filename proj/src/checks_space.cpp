#include "checks.hpp"

#include <algorithm>

namespace wpb::checks {

namespace {

// Index arithmetic over an enumerated space: digits of every vector plus
// the odometer place values, so u - v can be looked up without allocating.
class IndexedSpace {
public:
    IndexedSpace(const BlockSpace& space, const Limits& limits)
        : field_(space.field()), n_(space.length()), size_(space.space_size(limits)),
          weights_(space.weight_table(limits)), digits_(size_ * n_), place_(n_, 1)
    {
        for (std::size_t k = n_; k-- > 1;)
            place_[k - 1] = place_[k] * field_.q();
        BlockVector v(n_, 0);
        for (std::uint64_t i = 0; i < size_; ++i, next_vector(v, field_.q()))
            std::copy(v.begin(), v.end(), digits_.begin() + static_cast<std::ptrdiff_t>(i * n_));
    }

    std::uint64_t size() const { return size_; }
    unsigned weight(std::uint64_t i) const { return weights_[i]; }
    std::span<const Element> at(std::uint64_t i) const { return {&digits_[i * n_], n_}; }

    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const
    {
        std::uint64_t out = 0;
        for (std::size_t k = 0; k < n_; ++k)
            out += place_[k] * field_.sub(digits_[a * n_ + k], digits_[b * n_ + k]);
        return out;
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const
    {
        std::uint64_t out = 0;
        for (std::size_t k = 0; k < n_; ++k)
            out += place_[k] * field_.add(digits_[a * n_ + k], digits_[b * n_ + k]);
        return out;
    }

    std::uint64_t neg(std::uint64_t a) const
    {
        std::uint64_t out = 0;
        for (std::size_t k = 0; k < n_; ++k)
            out += place_[k] * field_.neg(digits_[a * n_ + k]);
        return out;
    }

private:
    const Field& field_;
    std::size_t n_;
    std::uint64_t size_;
    std::vector<unsigned> weights_;
    std::vector<Element> digits_;
    std::vector<std::uint64_t> place_;
};

json describe(const BlockSpace& space)
{
    json covers = json::array();
    for (auto [a, b] : space.poset().cover_relations())
        covers.push_back({a + 1, b + 1});
    return {{"q", space.field().q()},
            {"weight", space.weight_fn().name()},
            {"weight_table", space.weight_fn().table()},
            {"poset_elements", space.poset().size()},
            {"cover", covers},
            {"labeling", space.labeling().sizes()}};
}

std::string space_digest(const BlockSpace& space) { return digest_of(describe(space).dump()); }

// Metric axioms and weight bounds on one space. Spaces up to 625 vectors
// are scanned over all pairs (triangle inequality in its translated form
// w(a + b) <= w(a) + w(b)), and over all triples up to 64 vectors; larger
// spaces get `samples` random triples.
void check_axioms(Recorder& rec, const BlockSpace& space, Rng& rng, std::size_t samples,
                  const Limits& limits)
{
    rec.set_instance(space_digest(space));
    const unsigned cap = static_cast<unsigned>(space.blocks()) * space.weight_fn().max_weight();
    json detail = describe(space);

    if (space_size(space.field().q(), space.length()) <= 625) {
        const IndexedSpace ix(space, limits);
        json witness;
        std::uint64_t pairs = 0, triples = 0;
        // Weight bounds: w(0) = 0, 0 < w(u) <= s M_w, w(u) = w(-u).
        for (std::uint64_t a = 0; a < ix.size() && witness.is_null(); ++a) {
            const unsigned wa = ix.weight(a);
            const bool ok = a == 0 ? wa == 0 : (wa > 0 && wa <= cap && wa == ix.weight(ix.neg(a)));
            if (!ok)
                witness = {{"kind", "weight-bounds"}, {"u", to_json(ix.at(a))}, {"weight", wa}};
        }
        const bool bounds_ok = witness.is_null();
        rec.hard("weight-bounds", bounds_ok,
                 bounds_ok ? json{{"vectors", ix.size()}, {"cap", cap}} : witness);
        witness = nullptr;
        for (std::uint64_t a = 0; a < ix.size() && witness.is_null(); ++a) {
            for (std::uint64_t b = 0; b < ix.size(); ++b, ++pairs) {
                const unsigned dab = ix.weight(ix.sub(a, b));
                if ((dab == 0) != (a == b) || dab != ix.weight(ix.sub(b, a))) {
                    witness = {{"kind", "identity-or-symmetry"}, {"u", to_json(ix.at(a))},
                               {"v", to_json(ix.at(b))}};
                    break;
                }
                if (ix.weight(ix.add(a, b)) > ix.weight(a) + ix.weight(b)) {
                    witness = {{"kind", "subadditivity"}, {"a", to_json(ix.at(a))},
                               {"b", to_json(ix.at(b))}};
                    break;
                }
            }
        }
        if (witness.is_null() && ix.size() <= 64) {
            for (std::uint64_t a = 0; a < ix.size() && witness.is_null(); ++a)
                for (std::uint64_t b = 0; b < ix.size() && witness.is_null(); ++b)
                    for (std::uint64_t c = 0; c < ix.size(); ++c, ++triples) {
                        if (ix.weight(ix.sub(a, c)) >
                            ix.weight(ix.sub(a, b)) + ix.weight(ix.sub(b, c))) {
                            witness = {{"kind", "triangle"}, {"u", to_json(ix.at(a))},
                                       {"v", to_json(ix.at(b))}, {"x", to_json(ix.at(c))}};
                            break;
                        }
                    }
        }
        detail["pairs"] = pairs;
        detail["triples"] = triples;
        if (!witness.is_null())
            detail["witness"] = witness;
        rec.hard("metric-axioms", witness.is_null(), detail);
        return;
    }

    const unsigned q = space.field().q();
    auto draw = [&] {
        BlockVector v(space.length());
        for (auto& x : v)
            x = static_cast<Element>(rng.below(q));
        return v;
    };
    json witness;
    for (std::size_t t = 0; t < samples && witness.is_null(); ++t) {
        const auto u = draw(), v = draw(), x = draw();
        const unsigned wu = space.weight(u);
        if ((wu == 0) != (u == space.zero()) || wu > cap || wu != space.weight(space.neg(u)))
            witness = {{"kind", "weight-bounds"}, {"u", to_json(u)}};
        else if ((space.distance(u, v) == 0) != (u == v) ||
                 space.distance(u, v) != space.distance(v, u))
            witness = {{"kind", "identity-or-symmetry"}, {"u", to_json(u)}, {"v", to_json(v)}};
        else if (space.distance(u, x) > space.distance(u, v) + space.distance(v, x))
            witness = {{"kind", "triangle"}, {"u", to_json(u)}, {"v", to_json(v)}, {"x", to_json(x)}};
    }
    const bool bounds_ok = witness.is_null() || witness["kind"] != "weight-bounds";
    rec.hard("weight-bounds", bounds_ok, bounds_ok ? json{{"samples", samples}} : witness);
    detail["triples"] = samples;
    if (!witness.is_null())
        detail["witness"] = witness;
    rec.hard("metric-axioms", witness.is_null(), detail);
}

// Every labeled order on s <= 3 elements: each pair i < j is incomparable,
// i < j or j < i, closed transitively and deduplicated.
std::vector<Poset> small_posets(std::size_t s)
{
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j)
            pairs.emplace_back(i, j);
    std::size_t states = 1;
    for (std::size_t k = 0; k < pairs.size(); ++k)
        states *= 3;
    std::vector<Poset> out;
    for (std::size_t code = 0; code < states; ++code) {
        std::vector<std::vector<bool>> leq(s, std::vector<bool>(s, false));
        for (std::size_t i = 0; i < s; ++i)
            leq[i][i] = true;
        std::size_t c = code;
        for (auto [i, j] : pairs) {
            if (c % 3 == 1)
                leq[i][j] = true;
            else if (c % 3 == 2)
                leq[j][i] = true;
            c /= 3;
        }
        // Keep only relations that are already transitive, so each order
        // appears exactly once.
        bool transitive = true;
        for (std::size_t a = 0; a < s; ++a)
            for (std::size_t b = 0; b < s; ++b)
                for (std::size_t d = 0; d < s; ++d)
                    if (leq[a][b] && leq[b][d] && !leq[a][d])
                        transitive = false;
        if (transitive)
            out.push_back(Poset::from_relation(leq));
    }
    return out;
}

struct EnvelopeCase {
    Poset poset;
    std::vector<std::size_t> sizes;
    unsigned q;
    bool lee;
};

const std::vector<EnvelopeCase>& envelope_cases()
{
    static const std::vector<EnvelopeCase> cases = [] {
        std::vector<EnvelopeCase> out;
        for (unsigned q : {2u, 3u})
            for (bool lee : {false, true})
                for (std::size_t s = 1; s <= 3; ++s)
                    for (const auto& poset : small_posets(s))
                        for (std::size_t mask = 0; mask < (std::size_t{1} << s); ++mask) {
                            std::vector<std::size_t> sizes(s);
                            for (std::size_t i = 0; i < s; ++i)
                                sizes[i] = 1 + ((mask >> i) & 1u);
                            out.push_back({poset, sizes, q, lee});
                        }
        return out;
    }();
    return cases;
}

} // namespace

void metric_axioms_trial(Recorder& rec, std::uint64_t seed, std::size_t, const VerifyOptions& opts)
{
    Rng rng(seed);
    const unsigned q = pick_q(rng, opts, {2, 3, 4, 5});
    const auto field = make_field(q);
    const auto roll = rng.below(3);
    const WeightFn w = roll == 0 ? hamming_weight(field)
                       : roll == 1 && field->is_prime() ? lee_weight(field)
                                                        : random_weight(rng, field);
    const std::size_t s = rng.between(1, 3);
    const BlockSpace space(random_poset(rng, s), random_labeling(rng, s, 2), w);
    check_axioms(rec, space, rng, 2000, opts.limits);
}

std::size_t metric_envelope_count() { return envelope_cases().size(); }

void metric_envelope_trial(Recorder& rec, std::uint64_t, std::size_t index, const VerifyOptions& opts)
{
    const auto& c = envelope_cases().at(index);
    const auto field = make_field(c.q);
    const BlockSpace space(c.poset, Labeling(c.sizes), c.lee ? lee_weight(field) : hamming_weight(field));
    Rng rng(index);
    check_axioms(rec, space, rng, 0, opts.limits);
}

namespace {

enum class Reduction { hamming, lee, poset_block, nrt };

struct ReductionCase {
    Reduction kind;
    unsigned q;
    Poset poset;
    std::vector<std::size_t> sizes;
};

const std::vector<ReductionCase>& reduction_cases()
{
    static const std::vector<ReductionCase> cases = [] {
        std::vector<ReductionCase> out;
        const std::pair<unsigned, std::size_t> plain[] = {{2, 10}, {3, 6}, {4, 5}, {5, 4}, {7, 3}};
        for (auto [q, n] : plain)
            out.push_back({Reduction::hamming, q, Poset::antichain(n), std::vector<std::size_t>(n, 1)});
        const std::pair<unsigned, std::size_t> lee[] = {{3, 6}, {5, 4}, {7, 3}, {11, 2}};
        for (auto [q, n] : lee)
            out.push_back({Reduction::lee, q, Poset::antichain(n), std::vector<std::size_t>(n, 1)});
        // Poset-block and NRT cases over a fixed family of orders and labelings.
        Rng rng(0x5eed);
        for (unsigned q : {2u, 3u, 4u, 5u}) {
            const std::size_t max_n = q == 2 ? 10 : q == 3 ? 6 : q == 4 ? 5 : 4;
            for (int rep = 0; rep < 6; ++rep) {
                const std::size_t s = rng.between(1, std::min<std::size_t>(max_n, 5));
                std::vector<std::size_t> sizes(s, 1);
                std::size_t n = s;
                for (auto& k : sizes) {
                    const std::size_t extra = rng.below(std::min<std::size_t>(2, max_n - n) + 1);
                    k += extra;
                    n += extra;
                }
                out.push_back({Reduction::poset_block, q, random_poset(rng, s), sizes});
                out.push_back({Reduction::nrt, q, Poset::chain(s), sizes});
            }
        }
        return out;
    }();
    return cases;
}

const char* reduction_check(Reduction r)
{
    switch (r) {
    case Reduction::hamming:
        return "reduction-hamming";
    case Reduction::lee:
        return "reduction-lee";
    case Reduction::poset_block:
        return "reduction-poset-block";
    case Reduction::nrt:
        return "reduction-nrt";
    }
    return "";
}

// Independent oracles. None of them goes through BlockSpace::weight.
unsigned oracle_weight(const ReductionCase& c, std::span<const Element> u)
{
    const std::size_t s = c.sizes.size();
    std::vector<bool> nonzero(s, false);
    for (std::size_t i = 0, pos = 0; i < s; pos += c.sizes[i], ++i)
        for (std::size_t k = 0; k < c.sizes[i]; ++k)
            if (u[pos + k] != 0)
                nonzero[i] = true;
    switch (c.kind) {
    case Reduction::hamming:
        return static_cast<unsigned>(std::count_if(u.begin(), u.end(), [](Element x) { return x != 0; }));
    case Reduction::lee: {
        unsigned total = 0;
        for (Element x : u)
            total += std::min<unsigned>(x, c.q - x);
        return total;
    }
    case Reduction::poset_block: {
        // |I_u| by fixed-point closure over the relation.
        std::vector<bool> in = nonzero;
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t i = 0; i < s; ++i)
                for (std::size_t j = 0; j < s; ++j)
                    if (in[j] && !in[i] && c.poset.leq(i, j))
                        in[i] = changed = true;
        }
        return static_cast<unsigned>(std::count(in.begin(), in.end(), true));
    }
    case Reduction::nrt:
        for (std::size_t i = s; i-- > 0;)
            if (nonzero[i])
                return static_cast<unsigned>(i + 1);
        return 0;
    }
    return 0;
}

} // namespace

std::size_t reductions_count() { return reduction_cases().size(); }

void reductions_trial(Recorder& rec, std::uint64_t, std::size_t index, const VerifyOptions& opts)
{
    const auto& c = reduction_cases().at(index);
    const auto field = make_field(c.q);
    const WeightFn w = c.kind == Reduction::lee ? lee_weight(field) : hamming_weight(field);
    const BlockSpace space(c.poset, Labeling(c.sizes), w);
    rec.set_instance(space_digest(space));
    const auto table = space.weight_table(opts.limits);
    BlockVector v(space.length(), 0);
    json detail = describe(space);
    detail["vectors"] = table.size();
    for (std::uint64_t i = 0; i < table.size(); ++i, next_vector(v, c.q)) {
        const unsigned expected = oracle_weight(c, v);
        if (table[i] != expected) {
            detail["witness"] = {{"u", to_json(v)}, {"weight", table[i]}, {"oracle", expected}};
            rec.hard(reduction_check(c.kind), false, detail);
            return;
        }
    }
    rec.hard(reduction_check(c.kind), true, detail);
}

namespace {

struct BallCase {
    std::vector<std::size_t> sizes;
    unsigned q;
    bool lee;
};

const std::vector<BallCase>& ball_cases()
{
    static const std::vector<BallCase> cases = [] {
        std::vector<std::vector<std::size_t>> labelings;
        for (std::size_t s = 1; s <= 3; ++s)
            for (std::size_t mask = 0; mask < (std::size_t{1} << s); ++mask) {
                std::vector<std::size_t> sizes(s);
                for (std::size_t i = 0; i < s; ++i)
                    sizes[i] = 1 + ((mask >> i) & 1u);
                labelings.push_back(sizes);
            }
        std::vector<BallCase> out;
        for (const auto& sizes : labelings) {
            std::size_t n = 0;
            for (auto k : sizes)
                n += k;
            out.push_back({sizes, 2, false});
            out.push_back({sizes, 3, false});
            out.push_back({sizes, 5, false});
            out.push_back({sizes, 5, true});
            if (n <= 3)
                out.push_back({sizes, 7, true});
        }
        return out;
    }();
    return cases;
}

} // namespace

std::size_t ball_lemma_count() { return ball_cases().size(); }

void ball_lemma_trial(Recorder& rec, std::uint64_t, std::size_t index, const VerifyOptions& opts)
{
    const auto& c = ball_cases().at(index);
    const auto field = make_field(c.q);
    const std::size_t s = c.sizes.size();
    const BlockSpace space(Poset::chain(s), Labeling(c.sizes), c.lee ? lee_weight(field) : hamming_weight(field));
    const BlockSpace nrt = space.with_weight(hamming_weight(field));
    rec.set_instance(space_digest(space));
    const auto wt = space.weight_table(opts.limits);
    const auto ht = nrt.weight_table(opts.limits);
    const unsigned M = space.weight_fn().max_weight();

    json inclusion_fail, criterion_fail;
    json cases = json::array();
    // The stated range is i >= 0; for i >= s both balls are the whole
    // space, so the equality criterion is only meaningful for i < s.
    for (unsigned i = 0; i < s; ++i) {
        for (unsigned sigma = 1; sigma <= M; ++sigma) {
            const unsigned r = sigma + i * M;
            std::uint64_t inner = 0, outer = 0;
            json escapee;
            for (std::uint64_t v = 0; v < wt.size(); ++v) {
                const bool in_w = wt[v] <= r;
                const bool in_h = ht[v] <= i + 1;
                inner += in_w;
                outer += in_h;
                if (in_w && !in_h && escapee.is_null())
                    escapee = to_json(space.vector_at(v));
            }
            const bool equal = inner == outer && escapee.is_null();
            cases.push_back({{"i", i}, {"sigma", sigma}, {"weighted", inner}, {"block", outer}});
            if (!escapee.is_null() && inclusion_fail.is_null())
                inclusion_fail = {{"i", i}, {"sigma", sigma}, {"u", escapee}};
            if (equal != (sigma == M) && criterion_fail.is_null())
                criterion_fail = {{"i", i}, {"sigma", sigma}, {"weighted", inner}, {"block", outer}};
        }
    }
    json detail = describe(space);
    detail["cases"] = cases;
    json d1 = detail, d2 = detail;
    if (!inclusion_fail.is_null())
        d1["witness"] = inclusion_fail;
    if (!criterion_fail.is_null())
        d2["witness"] = criterion_fail;
    rec.hard("ball-inclusion", inclusion_fail.is_null(), d1);
    rec.hard("ball-equality-criterion", criterion_fail.is_null(), d2);
}

} // namespace wpb::checks
