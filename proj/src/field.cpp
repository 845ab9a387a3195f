#include "wpb/field.hpp"

#include "wpb/errors.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace wpb {

bool is_prime(unsigned n)
{
    if (n < 2)
        return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::pair<unsigned, unsigned> prime_power(unsigned q)
{
    if (q < 2)
        return {0, 0};
    unsigned p = 2;
    while (q % p != 0)
        ++p;
    unsigned e = 0;
    unsigned rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1)
        return {0, 0};
    return {p, e};
}

namespace {

using Poly = std::vector<unsigned>; // coefficients, lowest degree first

Poly digits(unsigned value, unsigned p, unsigned len)
{
    Poly out(len);
    for (unsigned i = 0; i < len; ++i) {
        out[i] = value % p;
        value /= p;
    }
    return out;
}

unsigned encode(const Poly& poly, unsigned p)
{
    unsigned value = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it)
        value = value * p + *it;
    return value;
}

int degree(const Poly& a)
{
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0)
            return i;
    return -1;
}

unsigned inverse_mod(unsigned a, unsigned p)
{
    for (unsigned x = 1; x < p; ++x)
        if (a * x % p == 1)
            return x;
    throw std::logic_error("no inverse mod p");
}

// Remainder of a modulo b over GF(p); b must be nonzero.
Poly poly_mod(Poly a, const Poly& b, unsigned p)
{
    const int db = degree(b);
    const unsigned lead_inv = inverse_mod(b[db], p);
    for (int da = degree(a); da >= db; da = degree(a)) {
        const unsigned factor = a[da] * lead_inv % p;
        const int shift = da - db;
        for (int i = 0; i <= db; ++i)
            a[i + shift] = (a[i + shift] + p * p - factor * b[i] % p) % p;
    }
    a.resize(db > 0 ? db : 1);
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& modulus, unsigned p)
{
    Poly prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    return poly_mod(prod, modulus, p);
}

bool is_irreducible(const Poly& f, unsigned p)
{
    const unsigned e = static_cast<unsigned>(degree(f));
    for (unsigned d = 1; 2 * d <= e; ++d) {
        unsigned count = 1;
        for (unsigned i = 0; i < d; ++i)
            count *= p;
        for (unsigned low = 0; low < count; ++low) {
            Poly g = digits(low, p, d);
            g.push_back(1);
            if (degree(poly_mod(f, g, p)) < 0)
                return false;
        }
    }
    return true;
}

Poly smallest_irreducible(unsigned p, unsigned e)
{
    unsigned count = 1;
    for (unsigned i = 0; i < e; ++i)
        count *= p;
    // Increasing encodings of the lower coefficients enumerate monic
    // polynomials in lexicographic order from the top coefficient down.
    for (unsigned low = 0; low < count; ++low) {
        Poly f = digits(low, p, e);
        f.push_back(1);
        if (is_irreducible(f, p))
            return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

} // namespace

Field::Field(unsigned p, unsigned e) : q_(1), p_(p), e_(e)
{
    for (unsigned i = 0; i < e; ++i)
        q_ *= p;
    add_.resize(q_ * q_);
    sub_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);

    for (unsigned a = 0; a < q_; ++a) {
        const Poly da = digits(a, p, e);
        Poly n(e);
        for (unsigned i = 0; i < e; ++i)
            n[i] = (p - da[i]) % p;
        neg_[a] = static_cast<Element>(encode(n, p));
        for (unsigned b = 0; b < q_; ++b) {
            const Poly db = digits(b, p, e);
            Poly s(e), d(e);
            for (unsigned i = 0; i < e; ++i) {
                s[i] = (da[i] + db[i]) % p;
                d[i] = (da[i] + p - db[i]) % p;
            }
            add_[a * q_ + b] = static_cast<Element>(encode(s, p));
            sub_[a * q_ + b] = static_cast<Element>(encode(d, p));
        }
    }

    if (e == 1) {
        modulus_ = {0, 1};
        for (unsigned a = 0; a < q_; ++a)
            for (unsigned b = 0; b < q_; ++b)
                mul_[a * q_ + b] = static_cast<Element>(a * b % p);
        for (unsigned a = 1; a < q_; ++a)
            inv_[a] = static_cast<Element>(inverse_mod(a, p));
        for (unsigned g = 1; g < q_; ++g) {
            unsigned x = 1, order = 0;
            do {
                x = x * g % p;
                ++order;
            } while (x != 1);
            if (order == q_ - 1) {
                primitive_ = static_cast<Element>(g);
                break;
            }
        }
        return;
    }

    modulus_ = smallest_irreducible(p, e);
    for (unsigned g = 2; g < q_; ++g) {
        const Poly pg = digits(g, p, e);
        Poly x = digits(1, p, e);
        std::vector<Element> powers;
        powers.reserve(q_ - 1);
        do {
            powers.push_back(static_cast<Element>(encode(x, p)));
            x = poly_mulmod(x, pg, modulus_, p);
            x.resize(e, 0);
        } while (encode(x, p) != 1 && powers.size() < q_);
        if (powers.size() == q_ - 1) {
            primitive_ = static_cast<Element>(g);
            exp_ = std::move(powers);
            break;
        }
    }
    if (exp_.empty())
        throw std::logic_error("no primitive element found");
    log_.assign(q_, 0);
    for (unsigned i = 0; i < q_ - 1; ++i)
        log_[exp_[i]] = i;
    for (unsigned a = 1; a < q_; ++a) {
        for (unsigned b = 1; b < q_; ++b)
            mul_[a * q_ + b] = exp_[(log_[a] + log_[b]) % (q_ - 1)];
        inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }
}

Element Field::inv(Element a) const
{
    if (a == 0)
        throw DivisionByZero();
    return inv_[a];
}

void Field::check_axioms() const
{
    auto fail = [this](const std::string& what) {
        throw std::logic_error("GF(" + std::to_string(q_) + ") violates " + what);
    };
    for (unsigned a = 0; a < q_; ++a) {
        const auto ea = static_cast<Element>(a);
        if (add(ea, 0) != ea || mul(ea, 1) != ea)
            fail("identities");
        if (add(ea, neg(ea)) != 0)
            fail("additive inverse");
        if (a != 0 && mul(ea, inv(ea)) != 1)
            fail("multiplicative inverse");
        for (unsigned b = 0; b < q_; ++b) {
            const auto eb = static_cast<Element>(b);
            if (add(ea, eb) != add(eb, ea) || mul(ea, eb) != mul(eb, ea))
                fail("commutativity");
            if (sub(ea, eb) != add(ea, neg(eb)))
                fail("subtraction");
            for (unsigned c = 0; c < q_; ++c) {
                const auto ec = static_cast<Element>(c);
                if (add(add(ea, eb), ec) != add(ea, add(eb, ec)))
                    fail("additive associativity");
                if (mul(mul(ea, eb), ec) != mul(ea, mul(eb, ec)))
                    fail("multiplicative associativity");
                if (mul(ea, add(eb, ec)) != add(mul(ea, eb), mul(ea, ec)))
                    fail("distributivity");
            }
        }
    }
}

FieldPtr make_field(unsigned q)
{
    const auto [p, e] = prime_power(q);
    if (p == 0 || q > 256)
        throw NotAPrimePower(q);
    // Fields are immutable, so one instance per q is shared process-wide.
    static std::mutex mutex;
    static std::map<unsigned, FieldPtr> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find(q); it != cache.end())
        return it->second;
    std::shared_ptr<const Field> field(new Field(p, e));
    if (q <= 16)
        field->check_axioms();
    cache.emplace(q, field);
    return field;
}

} // namespace wpb
