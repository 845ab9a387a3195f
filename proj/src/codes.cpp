#include "wpb/codes.hpp"

#include "wpb/errors.hpp"
#include "wpb/parallel.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <set>
#include <unordered_set>

namespace wpb {

namespace {

// Gauss-Jordan over GF(q); returns the nonzero rows with pivot 1 and
// zeros above and below every pivot.
std::vector<BlockVector> row_reduce(const Field& f, std::vector<BlockVector> rows,
                                    std::vector<std::size_t>& pivots)
{
    pivots.clear();
    if (rows.empty())
        return rows;
    const std::size_t n = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t pick = rank;
        while (pick < rows.size() && rows[pick][col] == 0)
            ++pick;
        if (pick == rows.size())
            continue;
        std::swap(rows[rank], rows[pick]);
        const Element scale = f.inv(rows[rank][col]);
        for (auto& x : rows[rank])
            x = f.mul(scale, x);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0)
                continue;
            const Element c = rows[r][col];
            for (std::size_t k = 0; k < n; ++k)
                rows[r][k] = f.sub(rows[r][k], f.mul(c, rows[rank][k]));
        }
        pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    return rows;
}

// Distances through a precomputed weight table: d(v, c) = table[index(v - c)].
class Scanner {
public:
    Scanner(const Code& code, const Limits& limits)
        : space_(code.space()), words_(code.codewords()), table_(space_.weight_table(limits)),
          total_(table_.size()), place_(space_.length())
    {
        std::uint64_t p = 1;
        for (std::size_t k = place_.size(); k-- > 0;) {
            place_[k] = p;
            p *= space_.field().q();
        }
    }

    std::uint64_t total() const { return total_; }
    const std::vector<BlockVector>& words() const { return words_; }
    const BlockSpace& space() const { return space_; }

    unsigned distance(const BlockVector& v, const BlockVector& c) const
    {
        const Field& f = space_.field();
        std::uint64_t idx = 0;
        for (std::size_t k = 0; k < v.size(); ++k)
            idx += f.sub(v[k], c[k]) * place_[k];
        return table_[idx];
    }

    unsigned weight_at(std::uint64_t index) const { return table_[index]; }

private:
    const BlockSpace& space_;
    const std::vector<BlockVector>& words_;
    std::vector<unsigned> table_;
    std::uint64_t total_;
    std::vector<std::uint64_t> place_;
};

} // namespace

Code Code::linear(BlockSpace space, std::vector<BlockVector> rows, const Limits& limits)
{
    Code code;
    for (const auto& r : rows)
        if (r.size() != space.length())
            throw LengthMismatch("generator row of length " + std::to_string(r.size()) +
                                 " in a space of length " + std::to_string(space.length()));
    code.kind_ = Kind::linear;
    code.rows_ = row_reduce(space.field(), std::move(rows), code.pivots_);
    code.space_ = std::make_shared<const BlockSpace>(std::move(space));

    const Field& f = code.space_->field();
    const std::size_t k = code.rows_.size();
    const double count = std::pow(static_cast<double>(f.q()), static_cast<double>(k));
    if (count > static_cast<double>(limits.max_space))
        return code;
    std::vector<Element> coeff(k, 0);
    do {
        BlockVector w = code.space_->zero();
        for (std::size_t i = 0; i < k; ++i) {
            if (coeff[i] == 0)
                continue;
            for (std::size_t j = 0; j < w.size(); ++j)
                w[j] = f.add(w[j], f.mul(coeff[i], code.rows_[i][j]));
        }
        code.words_.push_back(std::move(w));
    } while (next_vector(coeff, f.q()));
    code.materialized_ = true;
    return code;
}

Code Code::from_words(BlockSpace space, std::vector<BlockVector> words)
{
    if (words.empty())
        throw TooFewWords();
    for (const auto& w : words) {
        if (w.size() != space.length())
            throw LengthMismatch("word of length " + std::to_string(w.size()) +
                                 " in a space of length " + std::to_string(space.length()));
        for (Element x : w)
            if (x >= space.field().q())
                throw OutOfRange("symbol " + std::to_string(x) + " outside GF(" +
                                 std::to_string(space.field().q()) + ")");
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    Code code;
    code.kind_ = Kind::list;
    code.words_ = std::move(words);
    code.materialized_ = true;
    code.space_ = std::make_shared<const BlockSpace>(std::move(space));
    return code;
}

std::size_t Code::dimension() const
{
    if (!is_linear())
        throw NotLinear();
    return rows_.size();
}

const std::vector<BlockVector>& Code::generator() const
{
    if (!is_linear())
        throw NotLinear();
    return rows_;
}

const std::vector<std::size_t>& Code::pivots() const
{
    if (!is_linear())
        throw NotLinear();
    return pivots_;
}

const std::vector<BlockVector>& Code::codewords() const
{
    if (!materialized_)
        throw SpaceTooLarge(std::pow(static_cast<double>(space_->field().q()),
                                     static_cast<double>(rows_.size())),
                            static_cast<double>(Limits{}.max_space));
    return words_;
}

BlockVector Code::reduce(std::span<const Element> v) const
{
    if (!is_linear())
        throw NotLinear();
    if (v.size() != space_->length())
        throw LengthMismatch("vector of length " + std::to_string(v.size()) +
                             " in a space of length " + std::to_string(space_->length()));
    const Field& f = space_->field();
    BlockVector out(v.begin(), v.end());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Element c = out[pivots_[r]];
        if (c == 0)
            continue;
        for (std::size_t k = 0; k < out.size(); ++k)
            out[k] = f.sub(out[k], f.mul(c, rows_[r][k]));
    }
    return out;
}

bool Code::contains(std::span<const Element> v) const
{
    if (is_linear()) {
        const BlockVector r = reduce(v);
        return std::all_of(r.begin(), r.end(), [](Element x) { return x == 0; });
    }
    return std::binary_search(words_.begin(), words_.end(), BlockVector(v.begin(), v.end()));
}

Code Code::with_weight(const WeightFn& weight) const
{
    Code out = *this;
    out.space_ = std::make_shared<const BlockSpace>(space_->with_weight(weight));
    return out;
}

unsigned min_distance(const Code& code)
{
    if (!code.is_linear())
        return min_distance_pairwise(code);
    const auto& words = code.codewords();
    if (words.size() < 2)
        throw TooFewWords();
    unsigned best = UINT_MAX;
    for (const auto& w : words) {
        const unsigned wt = code.space().weight(w);
        if (wt != 0)
            best = std::min(best, wt);
    }
    return best;
}

unsigned min_distance_pairwise(const Code& code)
{
    const auto& words = code.codewords();
    if (words.size() < 2)
        throw TooFewWords();
    unsigned best = UINT_MAX;
    for (std::size_t a = 0; a < words.size(); ++a)
        for (std::size_t b = a + 1; b < words.size(); ++b)
            best = std::min(best, code.space().distance(words[a], words[b]));
    return best;
}

unsigned covering_radius(const Code& code, const Limits& limits)
{
    const Scanner scan(code, limits);
    auto chunk = [&](std::uint64_t begin, std::uint64_t end) {
        unsigned best = 0;
        BlockVector v = scan.space().vector_at(begin);
        for (std::uint64_t idx = begin; idx < end; ++idx, next_vector(v, scan.space().field().q())) {
            unsigned nearest = UINT_MAX;
            for (const auto& c : scan.words()) {
                nearest = std::min(nearest, scan.distance(v, c));
                if (nearest <= best)
                    break; // v cannot raise the maximum
            }
            best = std::max(best, nearest);
        }
        return best;
    };
    return parallel_reduce(scan.total(), limits.threads, 0u, chunk,
                           [](unsigned a, unsigned b) { return std::max(a, b); });
}

unsigned packing_radius(const Code& code, const Limits& limits)
{
    if (code.codewords().size() < 2)
        throw TooFewWords();
    const Scanner scan(code, limits);
    auto chunk = [&](std::uint64_t begin, std::uint64_t end) {
        unsigned best = UINT_MAX;
        BlockVector v = scan.space().vector_at(begin);
        for (std::uint64_t idx = begin; idx < end; ++idx, next_vector(v, scan.space().field().q())) {
            unsigned first = UINT_MAX, second = UINT_MAX;
            for (const auto& c : scan.words()) {
                const unsigned d = scan.distance(v, c);
                if (d < first) {
                    second = first;
                    first = d;
                } else if (d < second) {
                    second = d;
                }
            }
            best = std::min(best, second);
        }
        return best;
    };
    const unsigned second = parallel_reduce(scan.total(), limits.threads, UINT_MAX, chunk,
                                            [](unsigned a, unsigned b) { return std::min(a, b); });
    return second - 1;
}

bool is_r_perfect(const Code& code, unsigned r, const Limits& limits)
{
    const Scanner scan(code, limits);
    auto chunk = [&](std::uint64_t begin, std::uint64_t end) {
        BlockVector v = scan.space().vector_at(begin);
        for (std::uint64_t idx = begin; idx < end; ++idx, next_vector(v, scan.space().field().q())) {
            unsigned hits = 0;
            for (const auto& c : scan.words())
                if (scan.distance(v, c) <= r && ++hits > 1)
                    return false;
            if (hits != 1)
                return false;
        }
        return true;
    };
    return parallel_reduce(scan.total(), limits.threads, true, chunk,
                           [](bool a, bool b) { return a && b; });
}

bool is_perfect(const Code& code, const Limits& limits)
{
    return is_r_perfect(code, packing_radius(code, limits), limits);
}

std::uint64_t coset_index(const Code& code, std::span<const Element> v)
{
    const BlockVector r = code.reduce(v);
    const auto& pivots = code.pivots();
    std::uint64_t index = 0;
    std::size_t next_pivot = 0;
    for (std::size_t k = 0; k < r.size(); ++k) {
        if (next_pivot < pivots.size() && pivots[next_pivot] == k) {
            ++next_pivot;
            continue;
        }
        index = index * code.space().field().q() + r[k];
    }
    return index;
}

CosetTable coset_table(const Code& code, const Limits& limits)
{
    if (!code.is_linear())
        throw NotLinear();
    const BlockSpace& space = code.space();
    const std::uint64_t total = space.space_size(limits);
    const std::size_t free = space.length() - code.dimension();
    const auto cosets = static_cast<std::uint64_t>(
        std::llround(std::pow(static_cast<double>(space.field().q()), static_cast<double>(free))));

    CosetTable table;
    table.leaders.resize(cosets);
    table.weights.assign(cosets, UINT_MAX);
    BlockVector v = space.zero();
    for (std::uint64_t idx = 0; idx < total; ++idx, next_vector(v, space.field().q())) {
        const std::uint64_t key = coset_index(code, v);
        const unsigned w = space.weight(v);
        if (w < table.weights[key]) {
            table.weights[key] = w;
            table.leaders[key] = v;
        }
    }
    table.max_weight = *std::max_element(table.weights.begin(), table.weights.end());
    return table;
}

std::vector<BlockVector> project(const Code& code, std::size_t block)
{
    const Labeling& lab = code.space().labeling();
    if (block >= lab.blocks())
        throw OutOfRange("block " + std::to_string(block + 1) + " outside " +
                         std::to_string(lab.blocks()) + " blocks");
    std::set<BlockVector> values;
    const auto begin = static_cast<std::ptrdiff_t>(lab.offset(block));
    const auto end = begin + static_cast<std::ptrdiff_t>(lab.size(block));
    for (const auto& w : code.codewords())
        values.emplace(w.begin() + begin, w.begin() + end);
    return {values.begin(), values.end()};
}

std::size_t trailing_full_index(const Code& code)
{
    const BlockSpace& space = code.space();
    if (!space.poset().is_chain())
        throw NotAChain();
    const auto& words = code.codewords();
    const unsigned q = space.field().q();
    const std::size_t s = space.blocks();

    auto tail_is_full = [&](std::size_t l) {
        const std::size_t from = space.labeling().offset(l);
        const double needed = std::pow(static_cast<double>(q), static_cast<double>(space.length() - from));
        if (needed > static_cast<double>(words.size()))
            return false;
        std::unordered_set<std::uint64_t> seen;
        for (const auto& w : words) {
            std::uint64_t idx = 0;
            for (std::size_t k = from; k < w.size(); ++k)
                idx = idx * q + w[k];
            seen.insert(idx);
        }
        return static_cast<double>(seen.size()) == needed;
    };

    std::size_t l = s;
    while (l > 0 && tail_is_full(l - 1))
        --l;
    return l;
}

unsigned max_poset_weight(const Code& code, const WeightFn& alt)
{
    const BlockSpace sibling = code.space().with_weight(alt);
    unsigned best = 0;
    for (const auto& w : code.codewords())
        best = std::max(best, sibling.weight(w));
    return best;
}

} // namespace wpb
