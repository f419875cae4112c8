#ifndef WCC_FIELD_HPP
#define WCC_FIELD_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace wcc {

/// Element of GF(2^m) in the polynomial basis {1, x, ..., x^{m-1}};
/// bit i of the integer is the coefficient of x^i. 0 is the zero element,
/// 1 is the multiplicative identity.
using FieldElement = std::uint32_t;

/// GF(2^m) with a fixed primitive polynomial. alpha denotes the class of x;
/// its multiplicative order is verified to be exactly n = 2^m - 1 at
/// construction. Immutable after make_field; all operations are pure.
struct FieldSpec {
    int m = 0;
    std::uint64_t primitive_poly = 0;  // bit i = coefficient of x^i
    std::uint64_t n = 0;               // 2^m - 1
    // log/antilog tables, present for m <= 20. antilog[e] = alpha^e for
    // 0 <= e < n; log[a] = e with antilog[e] = a, for 1 <= a < 2^m.
    std::vector<std::uint32_t> antilog;
    std::vector<std::uint32_t> log;

    bool has_tables() const { return !antilog.empty(); }
};

/// Builds GF(2^m). With no polynomial given, uses the pinned catalog for
/// m in [2,7] and otherwise the primitive polynomial of degree m with the
/// smallest mask value (bit i = coefficient of x^i). A supplied polynomial
/// is rejected if it is reducible or if alpha is not primitive.
FieldSpec make_field(int m, std::optional<std::uint64_t> poly = std::nullopt);

FieldElement add(FieldElement a, FieldElement b);
FieldElement mul(FieldElement a, FieldElement b, const FieldSpec& f);
FieldElement pow(FieldElement a, std::uint64_t e, const FieldSpec& f);
FieldElement inv(FieldElement a, const FieldSpec& f);  // a != 0
std::uint64_t element_order(FieldElement a, const FieldSpec& f);  // a != 0

/// alpha^e for 0 <= e < n.
FieldElement alpha_power(std::uint64_t e, const FieldSpec& f);

}  // namespace wcc

#endif
