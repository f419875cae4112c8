#include "wcc/field.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "wcc/bitpoly.hpp"

namespace wcc {

namespace {

constexpr int kTableLimit = 20;  // log/antilog tables up to 2^20 entries

// Pinned catalog for small m; beyond it the smallest-mask primitive
// polynomial of the right degree is selected at construction.
std::uint64_t catalog_poly(int m) {
    switch (m) {
        case 2: return 0b111;        // x^2+x+1
        case 3: return 0b1011;       // x^3+x+1
        case 4: return 0b10011;      // x^4+x+1
        case 5: return 0b100101;     // x^5+x^2+1
        case 6: return 0b1011011;    // x^6+x^4+x^3+x+1
        case 7: return 0b10000011;   // x^7+x+1
        default: return 0;
    }
}

// Multiply in GF(2)[x]/(poly) without tables; poly has degree m <= 32.
std::uint64_t mul_mod_poly(std::uint64_t a, std::uint64_t b, std::uint64_t poly, int m) {
    std::uint64_t acc = 0;
    while (b) {
        if (b & 1) acc ^= a;
        b >>= 1;
        a <<= 1;
        if (a >> m) a ^= poly;
    }
    return acc;
}

std::uint64_t pow_mod_poly(std::uint64_t a, std::uint64_t e, std::uint64_t poly, int m) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul_mod_poly(r, a, poly, m);
        a = mul_mod_poly(a, a, poly, m);
        e >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

bool poly_is_irreducible(std::uint64_t poly, int m) {
    // Rabin: x^(2^m) = x mod poly, and x^(2^(m/q)) - x coprime to poly
    // for every prime q dividing m.
    BinaryPolynomial f = BinaryPolynomial::from_mask(poly);
    auto frob = [&](int k) {
        // x^(2^k) mod f by repeated squaring of the residue.
        BinaryPolynomial r = BinaryPolynomial::monomial(1);
        for (int i = 0; i < k; ++i) r = divmod(mul(r, r), f).second;
        return r;
    };
    BinaryPolynomial x = BinaryPolynomial::monomial(1);
    if (frob(m) != x) return false;
    for (std::uint64_t q : prime_factors(std::uint64_t(m))) {
        BinaryPolynomial h = add(frob(int(m / q)), x);
        if (gcd(h, f).degree() > 0) return false;
    }
    return true;
}

bool alpha_is_primitive(std::uint64_t poly, int m) {
    // alpha = x encodes as 2; primitive iff its order is exactly n.
    std::uint64_t n = (std::uint64_t(1) << m) - 1;
    if (pow_mod_poly(2, n, poly, m) != 1) return false;
    for (std::uint64_t p : prime_factors(n)) {
        if (pow_mod_poly(2, n / p, poly, m) == 1) return false;
    }
    return true;
}

std::uint64_t smallest_primitive_poly(int m) {
    std::uint64_t top = std::uint64_t(1) << m;
    for (std::uint64_t mask = top | 1; mask < (top << 1); mask += 2) {
        if (std::popcount(mask) % 2 == 0) continue;  // even term count => root 1
        if (poly_is_irreducible(mask, m) && alpha_is_primitive(mask, m)) return mask;
    }
    throw std::logic_error("no primitive polynomial of degree " + std::to_string(m));
}

}  // namespace

FieldSpec make_field(int m, std::optional<std::uint64_t> poly) {
    if (m < 2 || m > 32) throw std::invalid_argument("make_field: m must be in [2, 32]");
    std::uint64_t p;
    if (poly) {
        p = *poly;
    } else if (std::uint64_t c = catalog_poly(m)) {
        p = c;
    } else {
        p = smallest_primitive_poly(m);
    }

    if (std::bit_width(p) != unsigned(m + 1) || (p & 1) == 0)
        throw std::invalid_argument(
            "make_field: polynomial must have degree exactly m and constant term 1");
    if (!poly_is_irreducible(p, m))
        throw std::invalid_argument("make_field: polynomial is reducible");
    if (!alpha_is_primitive(p, m))
        throw std::invalid_argument("make_field: alpha is not primitive (order of x < 2^m - 1)");

    FieldSpec f;
    f.m = m;
    f.primitive_poly = p;
    f.n = (std::uint64_t(1) << m) - 1;

    if (m <= kTableLimit) {
        f.antilog.assign(f.n, 0);
        f.log.assign(std::size_t(1) << m, 0);
        std::uint64_t a = 1;
        for (std::uint64_t e = 0; e < f.n; ++e) {
            if (a == 1 && e > 0)
                throw std::invalid_argument("make_field: alpha is not primitive");
            f.antilog[e] = std::uint32_t(a);
            f.log[a] = std::uint32_t(e);
            a <<= 1;
            if (a >> m) a ^= p;
        }
    }
    return f;
}

FieldElement add(FieldElement a, FieldElement b) { return a ^ b; }

FieldElement mul(FieldElement a, FieldElement b, const FieldSpec& f) {
    if (a == 0 || b == 0) return 0;
    if (f.has_tables()) {
        std::uint64_t s = std::uint64_t(f.log[a]) + f.log[b];
        if (s >= f.n) s -= f.n;
        return f.antilog[s];
    }
    return FieldElement(mul_mod_poly(a, b, f.primitive_poly, f.m));
}

FieldElement pow(FieldElement a, std::uint64_t e, const FieldSpec& f) {
    if (a == 0) return e == 0 ? 1 : 0;
    if (f.has_tables()) {
        std::uint64_t le = (std::uint64_t(f.log[a]) * (e % f.n)) % f.n;
        return f.antilog[le];
    }
    return FieldElement(pow_mod_poly(a, e, f.primitive_poly, f.m));
}

FieldElement inv(FieldElement a, const FieldSpec& f) {
    if (a == 0) throw std::domain_error("inv: zero has no inverse");
    if (f.has_tables()) {
        std::uint64_t e = f.log[a];
        return f.antilog[e == 0 ? 0 : f.n - e];
    }
    return pow(a, f.n - 1, f);
}

std::uint64_t element_order(FieldElement a, const FieldSpec& f) {
    if (a == 0) throw std::domain_error("element_order: zero element");
    std::uint64_t ord = f.n;
    for (std::uint64_t p : prime_factors(f.n)) {
        while (ord % p == 0 && pow(a, ord / p, f) == 1) ord /= p;
    }
    return ord;
}

FieldElement alpha_power(std::uint64_t e, const FieldSpec& f) {
    if (f.has_tables()) return f.antilog[e % f.n];
    return pow(2, e, f);
}

}  // namespace wcc
