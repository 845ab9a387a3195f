#include "wpb/poset.hpp"

#include "wpb/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

namespace wpb {

int popcount(ElementSet set) { return std::popcount(set); }

namespace {

void check_size(std::size_t s)
{
    if (s > max_poset_size)
        throw OutOfRange("posets are limited to " + std::to_string(max_poset_size) + " elements");
}

std::string describe_cycle(std::size_t s, const std::vector<Poset::Cover>& covers)
{
    std::vector<std::vector<std::size_t>> next(s);
    for (const auto& [a, b] : covers)
        next[a].push_back(b);
    std::vector<int> state(s, 0); // 0 unseen, 1 on stack, 2 done
    std::vector<std::size_t> stack;
    std::string found;
    std::function<bool(std::size_t)> visit = [&](std::size_t v) {
        state[v] = 1;
        stack.push_back(v);
        for (std::size_t w : next[v]) {
            if (state[w] == 1) {
                auto start = std::find(stack.begin(), stack.end(), w);
                for (auto it = start; it != stack.end(); ++it)
                    found += std::to_string(*it + 1) + " -> ";
                found += std::to_string(w + 1);
                return true;
            }
            if (state[w] == 0 && visit(w))
                return true;
        }
        stack.pop_back();
        state[v] = 2;
        return false;
    };
    for (std::size_t v = 0; v < s; ++v)
        if (state[v] == 0 && visit(v))
            return found;
    return "?";
}

} // namespace

Poset::Poset(std::vector<ElementSet> down) : down_(std::move(down)), up_(down_.size(), 0)
{
    for (std::size_t j = 0; j < down_.size(); ++j)
        for (std::size_t i = 0; i < down_.size(); ++i)
            if (i != j && contains(down_[j], i))
                up_[i] |= singleton(j);
}

Poset Poset::from_cover_relations(std::size_t s, const std::vector<Cover>& covers)
{
    check_size(s);
    std::vector<ElementSet> down(s);
    for (std::size_t i = 0; i < s; ++i)
        down[i] = singleton(i);
    for (const auto& [a, b] : covers) {
        if (a >= s || b >= s)
            throw OutOfRange("cover relation names an element outside the poset");
        if (a == b)
            throw CycleDetected(std::to_string(a + 1) + " -> " + std::to_string(b + 1));
        down[b] |= singleton(a);
    }
    // Warshall closure on down-sets.
    for (std::size_t k = 0; k < s; ++k)
        for (std::size_t j = 0; j < s; ++j)
            if (contains(down[j], k))
                down[j] |= down[k];
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j)
            if (contains(down[j], i) && contains(down[i], j))
                throw CycleDetected(describe_cycle(s, covers));
    return Poset(std::move(down));
}

Poset Poset::from_relation(const std::vector<std::vector<bool>>& leq)
{
    const std::size_t s = leq.size();
    check_size(s);
    std::vector<Cover> pairs;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            if (i != j && leq[i][j])
                pairs.emplace_back(i, j);
    return from_cover_relations(s, pairs);
}

Poset Poset::chain(std::size_t s)
{
    check_size(s);
    std::vector<ElementSet> down(s);
    for (std::size_t i = 0; i < s; ++i)
        down[i] = all_elements(i + 1);
    return Poset(std::move(down));
}

Poset Poset::antichain(std::size_t s)
{
    check_size(s);
    std::vector<ElementSet> down(s);
    for (std::size_t i = 0; i < s; ++i)
        down[i] = singleton(i);
    return Poset(std::move(down));
}

ElementSet Poset::ideal(ElementSet generators) const
{
    ElementSet out = 0;
    while (generators) {
        const int i = std::countr_zero(generators);
        out |= down_[i];
        generators &= generators - 1;
    }
    return out;
}

bool Poset::is_ideal(ElementSet set) const
{
    if (set & ~all_elements(size()))
        return false;
    return ideal(set) == set;
}

ElementSet Poset::maximal_unchecked(ElementSet set) const
{
    ElementSet out = 0;
    ElementSet rest = set;
    while (rest) {
        const int i = std::countr_zero(rest);
        if ((up_[i] & set) == 0)
            out |= singleton(i);
        rest &= rest - 1;
    }
    return out;
}

ElementSet Poset::maximal_elements(ElementSet ideal) const
{
    if (!is_ideal(ideal))
        throw NotAnIdeal();
    return maximal_unchecked(ideal);
}

bool Poset::is_chain() const
{
    for (std::size_t i = 0; i < size(); ++i)
        if ((down_[i] | up_[i]) != all_elements(size()))
            return false;
    return true;
}

bool Poset::is_antichain() const
{
    return std::all_of(up_.begin(), up_.end(), [](ElementSet u) { return u == 0; });
}

std::vector<Poset::Cover> Poset::cover_relations() const
{
    std::vector<Cover> out;
    for (std::size_t a = 0; a < size(); ++a)
        for (std::size_t b = 0; b < size(); ++b) {
            if (!less(a, b))
                continue;
            // a < b is a cover iff nothing sits strictly between them.
            if ((up_[a] & down_[b] & ~singleton(b)) == 0)
                out.emplace_back(a, b);
        }
    return out;
}

bool Poset::satisfies_axioms() const
{
    const std::size_t s = size();
    for (std::size_t i = 0; i < s; ++i) {
        if (!leq(i, i))
            return false;
        for (std::size_t j = 0; j < s; ++j) {
            if (i != j && leq(i, j) && leq(j, i))
                return false;
            for (std::size_t k = 0; k < s; ++k)
                if (leq(i, j) && leq(j, k) && !leq(i, k))
                    return false;
        }
    }
    return true;
}

Poset disjoint_union(const Poset& p, const Poset& q)
{
    const std::size_t s = p.size();
    const std::size_t n = s + q.size();
    check_size(n);
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            leq[i][j] = p.leq(i, j);
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j)
            leq[s + i][s + j] = q.leq(i, j);
    return Poset::from_relation(leq);
}

Poset linear_sum(const Poset& p, const Poset& q)
{
    const std::size_t s = p.size();
    const std::size_t n = s + q.size();
    check_size(n);
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            leq[i][j] = p.leq(i, j);
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j)
            leq[s + i][s + j] = q.leq(i, j);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = s; j < n; ++j)
            leq[i][j] = true;
    return Poset::from_relation(leq);
}

Poset cartesian_product(const Poset& p, const Poset& q)
{
    const std::size_t s = p.size(), t = q.size();
    check_size(s * t);
    std::vector<std::vector<bool>> leq(s * t, std::vector<bool>(s * t));
    for (std::size_t x = 0; x < s; ++x)
        for (std::size_t y = 0; y < t; ++y)
            for (std::size_t x2 = 0; x2 < s; ++x2)
                for (std::size_t y2 = 0; y2 < t; ++y2)
                    leq[product_index(x, y, t)][product_index(x2, y2, t)] =
                        p.leq(x, x2) && q.leq(y, y2);
    return Poset::from_relation(leq);
}

Poset lex_product(const Poset& p, const Poset& q)
{
    const std::size_t s = p.size(), t = q.size();
    check_size(s * t);
    std::vector<std::vector<bool>> leq(s * t, std::vector<bool>(s * t));
    for (std::size_t x = 0; x < s; ++x)
        for (std::size_t y = 0; y < t; ++y)
            for (std::size_t x2 = 0; x2 < s; ++x2)
                for (std::size_t y2 = 0; y2 < t; ++y2)
                    leq[product_index(x, y, t)][product_index(x2, y2, t)] =
                        p.less(x, x2) || (x == x2 && q.leq(y, y2));
    return Poset::from_relation(leq);
}

Poset puncture(const Poset& p, std::size_t z)
{
    if (z >= p.size())
        throw OutOfRange("puncture position " + std::to_string(z + 1) + " outside poset of size " +
                         std::to_string(p.size()));
    const std::size_t n = p.size() - 1;
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    auto old = [z](std::size_t i) { return i < z ? i : i + 1; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            leq[i][j] = p.leq(old(i), old(j));
    return Poset::from_relation(leq);
}

Poset extend(const Poset& p)
{
    return disjoint_union(p, Poset::antichain(1));
}

} // namespace wpb
