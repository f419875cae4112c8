#ifndef WCC_ZNSETS_HPP
#define WCC_ZNSETS_HPP

#include <cstdint>
#include <vector>

namespace wcc {

/// Subset of Z_n, n = 2^m - 1, kept as a sorted member list plus a bitset
/// for O(1) membership. The weight-class constructors always produce unions
/// of 2-cyclotomic cosets; arbitrary subsets can be represented too (needed
/// to report a failed splitting instead of throwing).
class DefiningSet {
public:
    DefiningSet() = default;
    DefiningSet(std::uint64_t n, std::vector<std::uint32_t> members);

    static DefiningSet empty_set(std::uint64_t n) { return DefiningSet(n, {}); }
    static DefiningSet full_set(std::uint64_t n);

    std::uint64_t n() const { return n_; }
    std::size_t size() const { return members_.size(); }
    bool contains(std::uint64_t x) const {
        return (bits_[x >> 6] >> (x & 63)) & 1;
    }
    const std::vector<std::uint32_t>& members() const { return members_; }
    const std::vector<std::uint64_t>& bits() const { return bits_; }

    bool operator==(const DefiningSet& o) const {
        return n_ == o.n_ && members_ == o.members_;
    }

private:
    std::uint64_t n_ = 0;
    std::vector<std::uint32_t> members_;  // sorted, deduplicated
    std::vector<std::uint64_t> bits_;
};

/// Weight classes mod r: selects {1 <= j <= n-1 : w2(j) mod r in S}.
struct WeightClassSpec {
    int r = 0;                   // >= 2
    std::vector<int> S;          // nonempty proper subset of Z_r
    int m = 0;                   // n = 2^m - 1
};

struct SplittingSpec {
    DefiningSet S1;
    DefiningSet S2;
    std::uint64_t mu = 0;
};

struct CyclicRun {
    std::uint32_t start = 0;
    std::uint32_t length = 0;
};

/// Number of ones in the binary expansion (the 2-adic weight).
int w2(std::uint64_t i);

/// Orbit of s under doubling mod n, sorted.
std::vector<std::uint32_t> cyclotomic_coset(std::uint64_t s, std::uint64_t n);

DefiningSet weight_class_set(const WeightClassSpec& spec);

/// Defining set of the punctured Reed-Muller code PRM_2(r, m):
/// {1 <= j <= n-1 : w2(j) <= m-r-1}. Requires 0 <= r < m.
DefiningSet prm_defining_set(int r, int m);

/// {(n - t) mod n : t in T}; an involution.
DefiningSet negate_set(const DefiningSet& T);

/// {u*t mod n : t in T}; requires gcd(u, n) = 1.
DefiningSet scale_set(const DefiningSet& T, std::uint64_t u);

/// Z_n \ T.
DefiningSet complement_set(const DefiningSet& T);

/// T with one extra member (no-op if already present).
DefiningSet with_member(const DefiningSet& T, std::uint32_t x);

/// Longest run of consecutive residues mod n inside T, wrap through 0
/// permitted; length n iff T = Z_n. Ties broken by smallest start.
CyclicRun longest_cyclic_run(const DefiningSet& T);

bool is_coset_closed(const DefiningSet& T);

/// True iff S1, S2 partition Z_n \ {0} into coset-closed halves swapped by
/// the unit mu.
bool is_splitting(const SplittingSpec& s);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
/// Multiplicative inverse of u mod n; requires gcd(u, n) = 1.
std::uint64_t inv_mod(std::uint64_t u, std::uint64_t n);

}  // namespace wcc

#endif
