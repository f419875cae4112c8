#ifndef WCC_BIGINT_HPP
#define WCC_BIGINT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace wcc {

/// Unsigned big integer, base 2^32 limbs, least significant first.
/// Just enough arithmetic for exact binomial-sum identities.
class UBig {
public:
    UBig() = default;
    UBig(std::uint64_t v);

    static UBig pow2(unsigned e);

    UBig& operator+=(const UBig& o);
    UBig& operator-=(const UBig& o);  // requires *this >= o
    UBig operator+(const UBig& o) const;
    UBig operator-(const UBig& o) const;
    UBig operator*(const UBig& o) const;

    bool operator==(const UBig& o) const { return limbs_ == o.limbs_; }
    std::strong_ordering operator<=>(const UBig& o) const;

    bool is_zero() const { return limbs_.empty(); }
    std::string to_string() const;  // decimal

private:
    std::vector<std::uint32_t> limbs_;
    void trim();
};

}  // namespace wcc

#endif
