#include "wcc/znsets.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace wcc {

DefiningSet::DefiningSet(std::uint64_t n, std::vector<std::uint32_t> members)
    : n_(n), members_(std::move(members)) {
    if (n_ == 0) throw std::invalid_argument("DefiningSet: modulus must be positive");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && members_.back() >= n_)
        throw std::invalid_argument("DefiningSet: member out of range");
    bits_.assign((n_ + 63) / 64, 0);
    for (std::uint32_t x : members_) bits_[x >> 6] |= std::uint64_t(1) << (x & 63);
}

DefiningSet DefiningSet::full_set(std::uint64_t n) {
    std::vector<std::uint32_t> all(n);
    for (std::uint64_t i = 0; i < n; ++i) all[i] = std::uint32_t(i);
    return DefiningSet(n, std::move(all));
}

int w2(std::uint64_t i) { return std::popcount(i); }

std::vector<std::uint32_t> cyclotomic_coset(std::uint64_t s, std::uint64_t n) {
    std::vector<std::uint32_t> orbit;
    std::uint64_t x = s % n;
    do {
        orbit.push_back(std::uint32_t(x));
        x = (x * 2) % n;
    } while (x != s % n);
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

DefiningSet weight_class_set(const WeightClassSpec& spec) {
    if (spec.r < 2) throw std::invalid_argument("weight_class_set: r must be >= 2");
    if (spec.m < 2) throw std::invalid_argument("weight_class_set: m must be >= 2");
    std::uint64_t in_S = 0;
    for (int s : spec.S) {
        if (s < 0 || s >= spec.r) throw std::invalid_argument("weight_class_set: S not in Z_r");
        in_S |= std::uint64_t(1) << s;
    }
    if (in_S == 0) throw std::invalid_argument("weight_class_set: S is empty");
    if (std::popcount(in_S) == spec.r)
        throw std::invalid_argument("weight_class_set: S must be a proper subset of Z_r");

    std::uint64_t n = (std::uint64_t(1) << spec.m) - 1;
    std::vector<std::uint32_t> members;
    for (std::uint64_t j = 1; j <= n - 1; ++j) {
        if ((in_S >> (w2(j) % spec.r)) & 1) members.push_back(std::uint32_t(j));
    }
    return DefiningSet(n, std::move(members));
}

DefiningSet prm_defining_set(int r, int m) {
    if (r < 0 || r >= m) throw std::invalid_argument("prm_defining_set: need 0 <= r < m");
    std::uint64_t n = (std::uint64_t(1) << m) - 1;
    std::vector<std::uint32_t> members;
    for (std::uint64_t j = 1; j <= n - 1; ++j) {
        if (w2(j) <= m - r - 1) members.push_back(std::uint32_t(j));
    }
    return DefiningSet(n, std::move(members));
}

DefiningSet negate_set(const DefiningSet& T) {
    std::vector<std::uint32_t> out;
    out.reserve(T.size());
    for (std::uint32_t t : T.members()) out.push_back(std::uint32_t((T.n() - t) % T.n()));
    return DefiningSet(T.n(), std::move(out));
}

DefiningSet scale_set(const DefiningSet& T, std::uint64_t u) {
    if (gcd_u64(u % T.n(), T.n()) != 1)
        throw std::invalid_argument("scale_set: u is not a unit of Z_n");
    std::vector<std::uint32_t> out;
    out.reserve(T.size());
    for (std::uint32_t t : T.members()) out.push_back(std::uint32_t((u * t) % T.n()));
    return DefiningSet(T.n(), std::move(out));
}

DefiningSet complement_set(const DefiningSet& T) {
    std::vector<std::uint32_t> out;
    out.reserve(T.n() - T.size());
    for (std::uint64_t x = 0; x < T.n(); ++x)
        if (!T.contains(x)) out.push_back(std::uint32_t(x));
    return DefiningSet(T.n(), std::move(out));
}

DefiningSet with_member(const DefiningSet& T, std::uint32_t x) {
    auto members = T.members();
    members.push_back(x);
    return DefiningSet(T.n(), std::move(members));
}

CyclicRun longest_cyclic_run(const DefiningSet& T) {
    std::uint64_t n = T.n();
    if (T.size() == 0) return {0, 0};
    if (T.size() == n) return {0, std::uint32_t(n)};
    // Start scanning just past some non-member so wrap runs are seen whole.
    std::uint64_t anchor = 0;
    while (T.contains(anchor)) ++anchor;
    CyclicRun best{0, 0};
    std::uint64_t run_start = 0, run_len = 0;
    for (std::uint64_t i = 1; i <= n; ++i) {
        std::uint64_t pos = anchor + i >= n ? anchor + i - n : anchor + i;
        if (T.contains(pos)) {
            if (run_len == 0) run_start = pos;
            ++run_len;
        } else {
            if (run_len > best.length ||
                (run_len == best.length && run_start < best.start))
                best = {std::uint32_t(run_start), std::uint32_t(run_len)};
            run_len = 0;
        }
    }
    if (run_len > best.length || (run_len == best.length && run_start < best.start))
        best = {std::uint32_t(run_start), std::uint32_t(run_len)};
    return best;
}

bool is_coset_closed(const DefiningSet& T) {
    for (std::uint32_t t : T.members())
        if (!T.contains((std::uint64_t(t) * 2) % T.n())) return false;
    return true;
}

bool is_splitting(const SplittingSpec& s) {
    const auto& S1 = s.S1;
    const auto& S2 = s.S2;
    std::uint64_t n = S1.n();
    if (S2.n() != n) return false;
    if (S1.size() + S2.size() != n - 1) return false;
    if (S1.contains(0) || S2.contains(0)) return false;
    for (std::uint32_t x : S1.members())
        if (S2.contains(x)) return false;
    if (!is_coset_closed(S1) || !is_coset_closed(S2)) return false;
    std::uint64_t mu = s.mu % n;
    if (gcd_u64(mu, n) != 1) return false;
    if (!(scale_set(S1, mu) == S2)) return false;
    if (!(scale_set(S2, mu) == S1)) return false;
    return true;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t inv_mod(std::uint64_t u, std::uint64_t n) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = std::int64_t(n), new_r = std::int64_t(u % n);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t; new_t = tmp;
        tmp = r - q * new_r;
        r = new_r; new_r = tmp;
    }
    if (r != 1) throw std::invalid_argument("inv_mod: u is not a unit of Z_n");
    if (t < 0) t += std::int64_t(n);
    return std::uint64_t(t);
}

}  // namespace wcc
