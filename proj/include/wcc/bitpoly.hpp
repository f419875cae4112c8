#ifndef WCC_BITPOLY_HPP
#define WCC_BITPOLY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wcc/field.hpp"

namespace wcc {

class DefiningSet;  // znsets.hpp

/// Dense polynomial over GF(2), bit i of word storage = coefficient of x^i.
/// The zero polynomial has an empty word vector and degree() == -1; nonzero
/// polynomials keep their leading word trimmed so degree() is exact.
class BinaryPolynomial {
public:
    BinaryPolynomial() = default;

    static BinaryPolynomial zero() { return {}; }
    static BinaryPolynomial one() { return monomial(0); }
    static BinaryPolynomial monomial(std::uint64_t degree);
    /// x^n + 1 (equal to x^n - 1 over GF(2)).
    static BinaryPolynomial xn_plus_1(std::uint64_t n);
    static BinaryPolynomial from_exponents(const std::vector<std::uint64_t>& exps);
    /// Low 64 coefficients from a mask, bit i = coefficient of x^i.
    static BinaryPolynomial from_mask(std::uint64_t mask);
    /// Ascending-degree bit string, e.g. "1101" = 1 + x + x^3.
    static BinaryPolynomial from_bit_string(const std::string& bits);

    std::int64_t degree() const { return degree_; }
    bool is_zero() const { return degree_ < 0; }
    bool coeff(std::uint64_t i) const;
    std::span<const std::uint64_t> words() const { return words_; }

    bool operator==(const BinaryPolynomial& o) const = default;

private:
    std::vector<std::uint64_t> words_;
    std::int64_t degree_ = -1;

    void set_coeff(std::uint64_t i);
    void recompute_degree();
    friend BinaryPolynomial add(const BinaryPolynomial&, const BinaryPolynomial&);
    friend BinaryPolynomial mul(const BinaryPolynomial&, const BinaryPolynomial&);
    friend std::pair<BinaryPolynomial, BinaryPolynomial> divmod(
        const BinaryPolynomial&, const BinaryPolynomial&);
};

BinaryPolynomial add(const BinaryPolynomial& p, const BinaryPolynomial& q);
BinaryPolynomial mul(const BinaryPolynomial& p, const BinaryPolynomial& q);
/// (quotient, remainder) with p = q*quot + rem and deg rem < deg q. q != 0.
std::pair<BinaryPolynomial, BinaryPolynomial> divmod(const BinaryPolynomial& p,
                                                     const BinaryPolynomial& q);
BinaryPolynomial gcd(BinaryPolynomial p, BinaryPolynomial q);
bool divides(const BinaryPolynomial& d, const BinaryPolynomial& p);

/// Product of (x - alpha^j) over one complete 2-cyclotomic coset mod n,
/// expanded in GF(2^m) and projected back to GF(2). Throws if the expansion
/// leaves GF(2), i.e. the set was not closed under doubling.
BinaryPolynomial minimal_polynomial(const std::vector<std::uint32_t>& coset,
                                    const FieldSpec& f);

/// Generator polynomial of the cyclic code with defining set T: the product
/// of the minimal polynomials of T's cosets. deg = |T|; divides x^n + 1.
BinaryPolynomial generator_from_defining_set(const DefiningSet& T, const FieldSpec& f);

/// (x^n + 1) / g. Throws if g does not divide x^n + 1.
BinaryPolynomial check_polynomial(const BinaryPolynomial& g, std::uint64_t n);

/// Ascending-degree bit string ("" for the zero polynomial). Canonical text form.
std::string to_bit_string(const BinaryPolynomial& p);
/// Human-readable monomial form, e.g. "x^3+x+1"; "0" for the zero polynomial.
std::string to_monomial_string(const BinaryPolynomial& p);

}  // namespace wcc

#endif
