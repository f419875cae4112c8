#include "wcc/bitpoly.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "wcc/znsets.hpp"

namespace wcc {

namespace {
std::size_t words_for(std::uint64_t bits) { return std::size_t((bits + 63) / 64); }
}

BinaryPolynomial BinaryPolynomial::monomial(std::uint64_t degree) {
    BinaryPolynomial p;
    p.words_.assign(words_for(degree + 1), 0);
    p.words_[degree >> 6] = std::uint64_t(1) << (degree & 63);
    p.degree_ = std::int64_t(degree);
    return p;
}

BinaryPolynomial BinaryPolynomial::xn_plus_1(std::uint64_t n) {
    BinaryPolynomial p = monomial(n);
    p.words_[0] |= 1;
    return p;
}

BinaryPolynomial BinaryPolynomial::from_exponents(const std::vector<std::uint64_t>& exps) {
    BinaryPolynomial p;
    for (auto e : exps) {
        if (p.words_.size() < words_for(e + 1)) p.words_.resize(words_for(e + 1), 0);
        p.words_[e >> 6] ^= std::uint64_t(1) << (e & 63);
    }
    p.recompute_degree();
    return p;
}

BinaryPolynomial BinaryPolynomial::from_mask(std::uint64_t mask) {
    BinaryPolynomial p;
    if (mask) p.words_.push_back(mask);
    p.recompute_degree();
    return p;
}

BinaryPolynomial BinaryPolynomial::from_bit_string(const std::string& bits) {
    BinaryPolynomial p;
    p.words_.assign(words_for(bits.size()), 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') p.words_[i >> 6] |= std::uint64_t(1) << (i & 63);
        else if (bits[i] != '0') throw std::invalid_argument("from_bit_string: not a bit string");
    }
    p.recompute_degree();
    return p;
}

bool BinaryPolynomial::coeff(std::uint64_t i) const {
    if ((i >> 6) >= words_.size()) return false;
    return (words_[i >> 6] >> (i & 63)) & 1;
}

void BinaryPolynomial::set_coeff(std::uint64_t i) {
    if (words_.size() < words_for(i + 1)) words_.resize(words_for(i + 1), 0);
    words_[i >> 6] |= std::uint64_t(1) << (i & 63);
}

void BinaryPolynomial::recompute_degree() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
    if (words_.empty()) {
        degree_ = -1;
    } else {
        degree_ = std::int64_t(words_.size()) * 64 - std::countl_zero(words_.back()) - 1;
    }
}

BinaryPolynomial add(const BinaryPolynomial& p, const BinaryPolynomial& q) {
    BinaryPolynomial r;
    r.words_.assign(std::max(p.words_.size(), q.words_.size()), 0);
    for (std::size_t i = 0; i < p.words_.size(); ++i) r.words_[i] ^= p.words_[i];
    for (std::size_t i = 0; i < q.words_.size(); ++i) r.words_[i] ^= q.words_[i];
    r.recompute_degree();
    return r;
}

BinaryPolynomial mul(const BinaryPolynomial& p, const BinaryPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return BinaryPolynomial::zero();
    BinaryPolynomial r;
    // one spare word so the shifted-out (zero) high parts can be XORed in
    r.words_.assign(words_for(std::uint64_t(p.degree() + q.degree()) + 1) + 1, 0);
    for (std::size_t wi = 0; wi < p.words_.size(); ++wi) {
        std::uint64_t w = p.words_[wi];
        while (w) {
            int b = std::countr_zero(w);
            w &= w - 1;
            std::size_t shift = wi * 64 + std::size_t(b);
            std::size_t word_shift = shift >> 6;
            int bit_shift = int(shift & 63);
            for (std::size_t i = 0; i < q.words_.size(); ++i) {
                r.words_[i + word_shift] ^= q.words_[i] << bit_shift;
                if (bit_shift)
                    r.words_[i + word_shift + 1] ^= q.words_[i] >> (64 - bit_shift);
            }
        }
    }
    r.recompute_degree();
    return r;
}

std::pair<BinaryPolynomial, BinaryPolynomial> divmod(const BinaryPolynomial& p,
                                                     const BinaryPolynomial& q) {
    if (q.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
    BinaryPolynomial rem = p;
    BinaryPolynomial quot;
    std::int64_t dq = q.degree();
    while (rem.degree() >= dq) {
        std::uint64_t shift = std::uint64_t(rem.degree() - dq);
        quot.set_coeff(shift);
        // rem ^= q << shift
        std::size_t word_shift = shift >> 6;
        int bit_shift = int(shift & 63);
        if (rem.words_.size() < q.words_.size() + word_shift + 1)
            rem.words_.resize(q.words_.size() + word_shift + 1, 0);
        for (std::size_t i = 0; i < q.words_.size(); ++i) {
            rem.words_[i + word_shift] ^= q.words_[i] << bit_shift;
            if (bit_shift)
                rem.words_[i + word_shift + 1] ^= q.words_[i] >> (64 - bit_shift);
        }
        rem.recompute_degree();
    }
    quot.recompute_degree();
    return {quot, rem};
}

BinaryPolynomial gcd(BinaryPolynomial p, BinaryPolynomial q) {
    while (!q.is_zero()) {
        BinaryPolynomial r = divmod(p, q).second;
        p = std::move(q);
        q = std::move(r);
    }
    return p;
}

bool divides(const BinaryPolynomial& d, const BinaryPolynomial& p) {
    if (d.is_zero()) return p.is_zero();
    return divmod(p, d).second.is_zero();
}

BinaryPolynomial minimal_polynomial(const std::vector<std::uint32_t>& coset,
                                    const FieldSpec& f) {
    // Expand prod (x - alpha^j) with coefficients in GF(2^m), then check the
    // result landed in GF(2). A non-binary coefficient means the input was
    // not closed under doubling.
    std::vector<FieldElement> c{1};  // constant polynomial 1
    c.reserve(coset.size() + 1);
    for (std::uint32_t j : coset) {
        FieldElement root = alpha_power(j, f);
        c.push_back(0);
        for (std::size_t i = c.size() - 1; i > 0; --i)
            c[i] = add(c[i - 1], mul(c[i], root, f));
        c[0] = mul(c[0], root, f);
    }
    std::vector<std::uint64_t> exps;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] > 1)
            throw std::invalid_argument(
                "minimal_polynomial: set is not a union of 2-cyclotomic cosets "
                "(coefficient left GF(2))");
        if (c[i] == 1) exps.push_back(i);
    }
    return BinaryPolynomial::from_exponents(exps);
}

BinaryPolynomial generator_from_defining_set(const DefiningSet& T, const FieldSpec& f) {
    if (!is_coset_closed(T))
        throw std::invalid_argument(
            "generator_from_defining_set: defining set is not closed under doubling");
    BinaryPolynomial g = BinaryPolynomial::one();
    std::vector<bool> seen(T.n(), false);
    for (std::uint32_t s : T.members()) {
        if (seen[s]) continue;
        auto coset = cyclotomic_coset(s, T.n());
        for (std::uint32_t x : coset) seen[x] = true;
        g = mul(g, minimal_polynomial(coset, f));
    }
    return g;
}

BinaryPolynomial check_polynomial(const BinaryPolynomial& g, std::uint64_t n) {
    auto [quot, rem] = divmod(BinaryPolynomial::xn_plus_1(n), g);
    if (!rem.is_zero())
        throw std::invalid_argument("check_polynomial: g does not divide x^n + 1");
    return quot;
}

std::string to_bit_string(const BinaryPolynomial& p) {
    if (p.is_zero()) return "";
    std::string s(std::size_t(p.degree()) + 1, '0');
    for (std::size_t i = 0; i < s.size(); ++i)
        if (p.coeff(i)) s[i] = '1';
    return s;
}

std::string to_monomial_string(const BinaryPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::int64_t i = p.degree(); i >= 0; --i) {
        if (!p.coeff(std::uint64_t(i))) continue;
        if (!s.empty()) s += '+';
        if (i == 0) s += '1';
        else if (i == 1) s += 'x';
        else s += "x^" + std::to_string(i);
    }
    return s;
}

}  // namespace wcc
