#include "wcc/families.hpp"

#include <array>
#include <stdexcept>

#include <json.hpp>

namespace wcc {

SClassCounts s_class_counts(int m) {
    if (m < 1) throw std::invalid_argument("s_class_counts: m must be >= 1");
    // Pascal row m, then the binomial sums by residue of the index mod 3.
    std::vector<UBig> row{UBig(1)};
    for (int i = 1; i <= m; ++i) {
        std::vector<UBig> next(std::size_t(i) + 1);
        next[0] = UBig(1);
        next[std::size_t(i)] = UBig(1);
        for (int j = 1; j < i; ++j)
            next[std::size_t(j)] = row[std::size_t(j - 1)] + row[std::size_t(j)];
        row = std::move(next);
    }
    SClassCounts s;
    s.m = m;
    for (int i = 0; i <= m; ++i) {
        UBig& dst = (i % 3 == 0) ? s.s0 : (i % 3 == 1) ? s.s1 : s.s2;
        dst += row[std::size_t(i)];
    }
    return s;
}

// ------------------------------------------------------------ catalog ----

namespace {

using u64 = std::uint64_t;

// v = 2^{(m+off)/2} - 1
IntFormula vf(int off) {
    return [off](int m) { return (u64(1) << ((m + off) / 2)) - 1; };
}
// constant-in-m values
IntFormula cf(u64 c) {
    return [c](int) { return c; };
}
// a = 2^{(m+off)/2} + add
IntFormula af(int off, long add) {
    return [off, add](int m) { return u64(std::int64_t(u64(1) << ((m + off) / 2)) + add); };
}
// a = 2^{m-1} + 2^{(m-1)/2} + add  (the high primal ranges)
IntFormula ahf(long add) {
    return [add](int m) {
        return u64(std::int64_t((u64(1) << (m - 1)) + (u64(1) << ((m - 1) / 2))) + add);
    };
}
// a = 2^{m-1} + 2^{(m-1)/2} + 2^{(m-3)/2} + add
IntFormula ahwf(long add) {
    return [add](int m) {
        return u64(std::int64_t((u64(1) << (m - 1)) + (u64(1) << ((m - 1) / 2)) +
                                (u64(1) << ((m - 3) / 2))) + add);
    };
}
// a = 2^m - 2^{(m+off)/2} + add  (wrap starts of the dual ranges)
IntFormula awf(int off, long add) {
    return [off, add](int m) {
        return u64(std::int64_t((u64(1) << m) - (u64(1) << ((m + off) / 2))) + add);
    };
}

// dim = (2^{m+1} + c) / 3
IntFormula dim3(long c) {
    return [c](int m) { return u64((std::int64_t(u64(1) << (m + 1)) + c) / 3); };
}
// dim = (2^m + c) / 3
IntFormula dimd(long c) {
    return [c](int m) { return u64((std::int64_t(u64(1) << m) + c) / 3); };
}
// bound = 2^{(m+off)/2} + add
IntFormula bnd(int off, long add) {
    return [off, add](int m) { return u64(std::int64_t(u64(1) << ((m + off) / 2)) + add); };
}
IntFormula half_dim(long add) {
    return [add](int m) { return u64(std::int64_t(u64(1) << (m - 1)) + add); };
}

std::vector<LemmaClaim> build_lemma_catalog() {
    std::vector<LemmaClaim> L;
    auto prim3 = [&](std::string id, Applicability ap, IntFormula v, IntFormula a0,
                     IntFormula a1, int cls) {
        L.push_back({std::move(id), ap, std::move(v), std::move(a0), std::move(a1),
                     3, {cls}, false});
    };
    auto comp3 = [&](std::string id, Applicability ap, IntFormula v, IntFormula a0,
                     IntFormula a1, int cls) {
        L.push_back({std::move(id), ap, std::move(v), std::move(a0), std::move(a1),
                     3, {cls}, true});
    };
    auto prim4 = [&](std::string id, Applicability ap, IntFormula v, IntFormula a0,
                     IntFormula a1, int c1, int c2) {
        L.push_back({std::move(id), ap, std::move(v), std::move(a0), std::move(a1),
                     4, {c1, c2}, false});
    };

    Applicability m61{6, 1, 7}, m63{6, 3, 9}, m65{6, 5, 5};
    prim3("L2.1", m61, vf(-1), cf(1), af(-1, 2), 0);
    prim3("L2.2", m61, vf(+1), cf(1), af(-1, 2), 1);
    prim3("L2.3", m61, vf(-1), ahf(1), ahwf(1), 2);
    prim3("L3.1", m63, vf(-1), ahf(1), ahwf(0), 0);
    prim3("L3.2", m63, vf(-1), cf(1), af(-1, 0), 1);
    prim3("L3.3", m63, vf(+1), cf(1), af(-1, 0), 2);
    prim3("L4.1", m65, vf(+1), cf(1), af(-1, 0), 0);
    prim3("L4.2", m65, vf(+1), ahf(1), ahwf(0), 1);
    prim3("L4.3", m65, vf(-1), cf(1), af(-1, 0), 2);

    prim3("L5", {12, 0, 12}, vf(-2), cf(1), af(-2, 0), 2);
    prim3("L5", {12, 8, 8}, vf(-2), cf(1), af(-2, 0), 0);
    prim3("L5", {12, 4, 4}, vf(-2), cf(1), af(-2, 0), 1);
    prim3("L6", {12, 6, 6}, vf(-4), cf(1), af(-4, 0), 1);
    prim3("L6", {12, 2, 14}, vf(-4), cf(1), af(-4, 0), 2);
    prim3("L6", {12, 10, 10}, vf(-4), cf(1), af(-4, 0), 0);

    comp3("L8.1", m61, vf(+1), cf(0), af(-1, 2), 0);
    comp3("L8.2", m61, vf(-1), cf(0), af(-1, 2), 1);
    comp3("L8.3", m61, vf(+1), awf(-1, -5), af(-1, 4), 2);
    comp3("L9.1", m63, vf(-1), awf(-1, -5), af(-1, 4), 0);
    comp3("L9.2", m63, vf(+1), cf(0), af(-1, 0), 1);
    comp3("L9.3", m63, vf(-1), cf(0), af(-1, 0), 2);
    comp3("L10.1", m65, vf(-1), cf(0), af(-1, 2), 0);
    comp3("L10.2", m65, vf(-1), awf(-1, -1), af(-1, 0), 1);
    comp3("L10.3", m65, vf(+1), cf(0), af(-1, 2), 2);

    comp3("L11.1", {12, 0, 12}, vf(-2), cf(0), af(-2, 0), 1);
    comp3("L11.1", {12, 8, 8}, vf(-2), cf(0), af(-2, 4), 2);
    comp3("L11.1", {12, 4, 4}, vf(-2), cf(0), af(-2, 4), 0);
    comp3("L11.2", {12, 0, 12}, vf(-2), awf(-2, -3), af(-2, 2), 0);
    comp3("L11.2", {12, 8, 8}, vf(-2), awf(-2, -3), af(-2, 2), 1);
    comp3("L11.2", {12, 4, 4}, vf(-2), awf(-2, -1), af(-2, 0), 2);
    comp3("L11.3", {12, 0, 12}, vf(+2), cf(0), af(-2, 0), 2);
    comp3("L11.3", {12, 8, 8}, vf(+2), cf(0), af(-2, 4), 0);
    comp3("L11.3", {12, 4, 4}, vf(+2), cf(0), af(-2, 4), 1);

    comp3("L12.1", {12, 6, 6}, vf(-4), cf(0), af(-4, 0), 2);
    comp3("L12.1", {12, 2, 14}, vf(-4), cf(0), af(-4, 2), 0);
    comp3("L12.1", {12, 10, 10}, vf(-4), cf(0), af(-4, 2), 1);
    comp3("L12.2", {12, 6, 6}, vf(-4), awf(-4, -5), af(-4, 4), 0);
    comp3("L12.2", {12, 2, 14}, vf(-4), awf(-4, -1), af(-4, 0), 1);
    comp3("L12.2", {12, 10, 10}, vf(-4), awf(-4, -5), af(-4, 4), 2);
    comp3("L12.3", {12, 6, 6}, vf(+4), cf(0), af(-4, 0), 1);
    comp3("L12.3", {12, 2, 14}, vf(+4), cf(0), af(-4, 2), 2);
    comp3("L12.3", {12, 10, 10}, vf(+4), cf(0), af(-4, 2), 0);

    prim4("L13.1", {8, 1, 9}, vf(-1), cf(1), af(-1, 2), 0, 3);
    prim4("L13.2", {8, 1, 9}, vf(+1), cf(1), af(-1, 2), 1, 2);
    prim4("L14.1", {8, 3, 3}, vf(-1), cf(1), af(-1, 0), 0, 1);
    prim4("L14.2", {8, 3, 3}, vf(+1), cf(1), af(-1, 0), 2, 3);
    prim4("L15.1", {8, 5, 5}, vf(+1), cf(1), af(-1, 0), 0, 3);
    prim4("L15.2", {8, 5, 5}, vf(-1), cf(1), af(-1, 0), 1, 2);
    prim4("L16.1", {8, 7, 7}, vf(+1), cf(1), af(-1, 2), 0, 1);
    prim4("L16.2", {8, 7, 7}, vf(-1), cf(1), af(-1, 2), 2, 3);
    return L;
}

std::vector<TheoremClaim> build_theorem_catalog() {
    std::vector<TheoremClaim> T;
    auto mod3 = [&](std::string id, Applicability ap, int i, CodeVariant var,
                    IntFormula dim, IntFormula bound) {
        T.push_back({id + "[i=" + std::to_string(i) + "]", ap, 3, {i}, var,
                     std::move(dim), std::move(bound)});
    };
    auto mod4 = [&](std::string id, Applicability ap, int c1, int c2, CodeVariant var,
                    IntFormula dim, IntFormula bound) {
        T.push_back({id + "[" + std::to_string(c1) + std::to_string(c2) + "]", ap, 4,
                     {c1, c2}, var, std::move(dim), std::move(bound)});
    };
    constexpr auto primal = CodeVariant::primal;
    constexpr auto dualv = CodeVariant::dual;
    constexpr auto extended = CodeVariant::extended;

    Applicability m61{6, 1, 7}, m63{6, 3, 9}, m65{6, 5, 5};
    mod3("T4.1", m61, 0, primal, dim3(-1), bnd(-1, 3));
    mod3("T4.1", m61, 1, primal, dim3(-1), bnd(-1, 3));
    mod3("T4.1", m61, 2, primal, dim3(-1), bnd(-3, 2));
    mod3("T4.2", m63, 0, primal, dim3(+5), bnd(-3, 1));
    mod3("T4.2", m63, 1, primal, dim3(-4), bnd(-1, 1));
    mod3("T4.2", m63, 2, primal, dim3(-4), bnd(-1, 1));
    mod3("T4.3", m65, 0, primal, dim3(-1), bnd(-1, 1));
    mod3("T4.3", m65, 1, primal, dim3(-1), bnd(-3, 1));
    mod3("T4.3", m65, 2, primal, dim3(-1), bnd(-1, 1));

    Applicability e0{12, 0, 12}, e8{12, 8, 8}, e4{12, 4, 4};
    mod3("T4.5", e0, 0, primal, dim3(+1), bnd(-2, 1));
    mod3("T4.5", e0, 1, primal, dim3(-2), bnd(-2, 1));
    mod3("T4.5", e0, 2, primal, dim3(-2), bnd(-2, 1));
    mod3("T4.5", e8, 0, primal, dim3(+1), bnd(-2, 1));
    mod3("T4.5", e8, 1, primal, dim3(-5), bnd(-2, 1));
    mod3("T4.5", e8, 2, primal, dim3(+1), bnd(-2, 1));
    mod3("T4.5", e4, 0, primal, dim3(+1), bnd(-2, 1));
    mod3("T4.5", e4, 1, primal, dim3(+1), bnd(-2, 1));
    mod3("T4.5", e4, 2, primal, dim3(-5), bnd(-2, 1));

    Applicability e6{12, 6, 6}, e2{12, 2, 14}, e10{12, 10, 10};
    mod3("T4.6", e6, 0, primal, dim3(+1), bnd(-4, 1));
    mod3("T4.6", e6, 1, primal, dim3(-2), bnd(-4, 1));
    mod3("T4.6", e6, 2, primal, dim3(-2), bnd(-4, 1));
    mod3("T4.6", e2, 0, primal, dim3(+1), bnd(-4, 1));
    mod3("T4.6", e2, 1, primal, dim3(-5), bnd(-4, 1));
    mod3("T4.6", e2, 2, primal, dim3(+1), bnd(-4, 1));
    mod3("T4.6", e10, 0, primal, dim3(+1), bnd(-4, 1));
    mod3("T4.6", e10, 1, primal, dim3(+1), bnd(-4, 1));
    mod3("T4.6", e10, 2, primal, dim3(-5), bnd(-4, 1));

    mod3("T5.4", m61, 0, dualv, dimd(-2), bnd(-1, 4));
    mod3("T5.4", m61, 1, dualv, dimd(-2), bnd(-1, 4));
    mod3("T5.4", m61, 2, dualv, dimd(-2), bnd(+1, 10));
    mod3("T5.4", m63, 0, dualv, dimd(-8), bnd(+1, 10));
    mod3("T5.4", m63, 1, dualv, dimd(+1), bnd(-1, 2));
    mod3("T5.4", m63, 2, dualv, dimd(+1), bnd(-1, 2));
    mod3("T5.4", m65, 0, dualv, dimd(-2), bnd(-1, 4));
    mod3("T5.4", m65, 1, dualv, dimd(-2), bnd(+1, 2));
    mod3("T5.4", m65, 2, dualv, dimd(-2), bnd(-1, 4));

    mod3("T5.7", e0, 0, dualv, dimd(-4), bnd(0, 6));
    mod3("T5.7", e0, 1, dualv, dimd(-1), bnd(-2, 2));
    mod3("T5.7", e0, 2, dualv, dimd(-1), bnd(-2, 2));
    mod3("T5.7", e6, 0, dualv, dimd(-4), bnd(-2, 10));
    mod3("T5.7", e6, 1, dualv, dimd(-1), bnd(-4, 2));
    mod3("T5.7", e6, 2, dualv, dimd(-1), bnd(-4, 2));
    mod3("T5.7", e8, 0, dualv, dimd(-4), bnd(-2, 6));
    mod3("T5.7", e8, 1, dualv, dimd(+2), bnd(0, 6));
    mod3("T5.7", e8, 2, dualv, dimd(-4), bnd(-2, 6));
    mod3("T5.7", e2, 0, dualv, dimd(-4), bnd(-4, 4));
    mod3("T5.7", e2, 1, dualv, dimd(+2), bnd(-2, 2));
    mod3("T5.7", e2, 2, dualv, dimd(-4), bnd(-4, 4));
    mod3("T5.7", e4, 0, dualv, dimd(-4), bnd(-2, 6));
    mod3("T5.7", e4, 1, dualv, dimd(-4), bnd(-2, 6));
    mod3("T5.7", e4, 2, dualv, dimd(+2), bnd(0, 2));
    mod3("T5.7", e10, 0, dualv, dimd(-4), bnd(-4, 4));
    mod3("T5.7", e10, 1, dualv, dimd(-4), bnd(-4, 4));
    mod3("T5.7", e10, 2, dualv, dimd(+2), bnd(-2, 10));

    Applicability d81{8, 1, 9}, d85{8, 5, 5}, d83{8, 3, 3}, d87{8, 7, 7};
    Applicability d41{4, 1, 5}, d43{4, 3, 7};
    for (auto [c1, c2] : {std::pair{0, 3}, std::pair{1, 2}}) {
        mod4("T3.2", d81, c1, c2, primal, half_dim(0), bnd(-1, 3));
        mod4("T3.2", d85, c1, c2, primal, half_dim(0), bnd(-1, 1));
        mod4("T3.3", d81, c1, c2, dualv, half_dim(-1), bnd(-1, 4));
        mod4("T3.3", d85, c1, c2, dualv, half_dim(-1), bnd(-1, 2));
        mod4("T3.4", d41, c1, c2, extended, half_dim(0), bnd(-1, 4));
    }
    for (auto [c1, c2] : {std::pair{0, 1}, std::pair{2, 3}}) {
        mod4("T3.5", d83, c1, c2, primal, half_dim(0), bnd(-1, 1));
        mod4("T3.5", d87, c1, c2, primal, half_dim(0), bnd(-1, 3));
        mod4("T3.6", d83, c1, c2, dualv, half_dim(-1), bnd(-1, 2));
        mod4("T3.6", d87, c1, c2, dualv, half_dim(-1), bnd(-1, 4));
        mod4("T3.7", d43, c1, c2, extended, half_dim(0), bnd(-1, 4));
    }
    return T;
}

}  // namespace

const std::vector<LemmaClaim>& lemma_catalog() {
    static const std::vector<LemmaClaim> catalog = build_lemma_catalog();
    return catalog;
}

const std::vector<TheoremClaim>& theorem_catalog() {
    static const std::vector<TheoremClaim> catalog = build_theorem_catalog();
    return catalog;
}

// ------------------------------------------------------------ verifiers ----

std::uint64_t expected_dimension(const TheoremClaim& claim, int m) {
    if (!claim.when.applies(m))
        throw std::domain_error("expected_dimension: claim " + claim.id +
                                " does not apply at m = " + std::to_string(m));
    return claim.dim(m);
}

std::uint64_t expected_bound(const TheoremClaim& claim, int m) {
    if (!claim.when.applies(m))
        throw std::domain_error("expected_bound: claim " + claim.id +
                                " does not apply at m = " + std::to_string(m));
    return claim.bound(m);
}

bool verify_lemma(const LemmaClaim& claim, int m, std::uint64_t* witness) {
    if (!claim.when.applies(m))
        throw std::domain_error("verify_lemma: claim " + claim.id +
                                " does not apply at m = " + std::to_string(m));
    u64 n = (u64(1) << m) - 1;
    u64 v = claim.v(m) % n;
    if (gcd_u64(v, n) != 1) {
        if (witness) *witness = ~u64(0);
        return false;
    }
    u64 mask = 0;
    for (int s : claim.target_S) mask |= u64(1) << s;
    u64 a0 = claim.a_begin(m) % n;
    u64 a1 = claim.a_end(m) % n;
    u64 count = a1 >= a0 ? a1 - a0 + 1 : n - a0 + a1 + 1;
    u64 a = a0;
    for (u64 i = 0; i < count; ++i) {
        u64 x = (a * v) % n;
        bool in_T = x != 0 && ((mask >> (w2(x) % claim.target_r)) & 1);
        if (claim.in_complement ? in_T : !in_T) {
            if (witness) *witness = a;
            return false;
        }
        ++a;
        if (a == n) a = 0;
    }
    return true;
}

DefiningSet claim_defining_set(const TheoremClaim& claim, int m) {
    if (claim.variant == CodeVariant::extended)
        throw std::invalid_argument("claim_defining_set: extended codes are not cyclic");
    DefiningSet T = weight_class_set({claim.r, claim.classes, m});
    if (claim.variant == CodeVariant::dual) return complement_set(negate_set(T));
    return T;
}

CyclicCode build_mod3_code(int i, int m, const FieldSpec& f) {
    if (i < 0 || i > 2) throw std::invalid_argument("build_mod3_code: i in {0,1,2}");
    if (m < 2) throw std::invalid_argument("build_mod3_code: m >= 2");
    return from_defining_set(weight_class_set({3, {i}, m}), f);
}

CyclicCode build_mod4_code(int i1, int i2, int m, const FieldSpec& f) {
    if (i1 == i2 || i1 < 0 || i1 > 3 || i2 < 0 || i2 > 3)
        throw std::invalid_argument("build_mod4_code: need distinct i1, i2 in {0,..,3}");
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("build_mod4_code: m odd >= 3");
    return from_defining_set(weight_class_set({4, {i1, i2}, m}), f);
}

std::pair<std::pair<int, int>, std::pair<int, int>> duadic_pair_classes(int m) {
    if (m % 2 == 0) throw std::invalid_argument("duadic_pair: m must be odd");
    if (m < 3) throw std::invalid_argument("duadic_pair: m >= 3");
    if (m % 4 == 1) return {{0, 3}, {1, 2}};
    return {{0, 1}, {2, 3}};
}

std::pair<CyclicCode, CyclicCode> duadic_pair(int m, const FieldSpec& f) {
    auto [a, b] = duadic_pair_classes(m);
    return {build_mod4_code(a.first, a.second, m, f),
            build_mod4_code(b.first, b.second, m, f)};
}

namespace {

// Class-size census: one scan of Z_n counts both mod-3 and mod-4
// weight classes over 1..n-1.
struct ClassCounts {
    std::array<u64, 3> mod3{};
    std::array<u64, 4> mod4{};
};

ClassCounts measure_classes(int m) {
    ClassCounts c;
    u64 n = (u64(1) << m) - 1;
    for (u64 j = 1; j <= n - 1; ++j) {
        int w = w2(j);
        ++c.mod3[std::size_t(w % 3)];
        ++c.mod4[std::size_t(w % 4)];
    }
    return c;
}

u64 measured_set_size(const TheoremClaim& claim, const ClassCounts& c) {
    u64 t = 0;
    for (int s : claim.classes)
        t += claim.r == 3 ? c.mod3[std::size_t(s)] : c.mod4[std::size_t(s)];
    return t;
}

}  // namespace

std::vector<CheckResult> verify_all_lemmas(int m_max) {
    std::vector<CheckResult> out;
    for (const auto& claim : lemma_catalog()) {
        for (int m = claim.when.min_m; m <= m_max; ++m) {
            if (!claim.when.applies(m)) continue;
            u64 witness = 0;
            bool ok = verify_lemma(claim, m, &witness);
            out.push_back({claim.id, m, ok ? CheckStatus::pass : CheckStatus::fail,
                           ok ? "" : "first failing a = " + std::to_string(witness)});
        }
    }
    return out;
}

std::vector<CheckResult> verify_all_dimensions(int m_max, int m_min) {
    std::vector<CheckResult> out;
    for (int m = m_min; m <= m_max; ++m) {
        ClassCounts census = measure_classes(m);
        u64 n = (u64(1) << m) - 1;
        for (const auto& claim : theorem_catalog()) {
            if (claim.variant == CodeVariant::extended) continue;
            if (!claim.when.applies(m)) continue;
            u64 t = measured_set_size(claim, census);
            u64 measured = claim.variant == CodeVariant::primal ? n - t : t;
            u64 expected = claim.dim(m);
            bool ok = measured == expected;
            out.push_back({claim.id, m, ok ? CheckStatus::pass : CheckStatus::fail,
                           ok ? ""
                              : "measured dim " + std::to_string(measured) +
                                    " != formula " + std::to_string(expected)});
        }
    }
    return out;
}

std::vector<CheckResult> verify_certificate_dominance(int m_max, int m_min) {
    std::vector<CheckResult> out;
    for (int m = m_min; m <= m_max; ++m) {
        for (const auto& claim : theorem_catalog()) {
            if (claim.variant == CodeVariant::extended) continue;
            if (!claim.when.applies(m)) continue;
            DefiningSet T = claim_defining_set(claim, m);
            BchCertificate cert = best_bch_certificate(T);
            u64 expected = claim.bound(m);
            bool ok = verify_certificate(cert, T) && u64(cert.bound()) >= expected;
            out.push_back({claim.id, m, ok ? CheckStatus::pass : CheckStatus::fail,
                           ok ? ""
                              : "certificate bound " + std::to_string(cert.bound()) +
                                    " < theorem bound " + std::to_string(expected)});
        }
    }
    return out;
}

std::vector<CheckResult> verify_duadic_structure(int m) {
    if (m < 5 || m % 2 == 0)
        throw std::invalid_argument("verify_duadic_structure: m odd >= 5");
    std::vector<CheckResult> out;
    FieldSpec f = make_field(m);
    auto [c1, c2] = duadic_pair(m, f);
    u64 n = f.n;

    bool split = is_splitting({c1.T, c2.T, n - 1});
    out.push_back({"duadic.splitting(mu=-1)", m,
                   split ? CheckStatus::pass : CheckStatus::fail,
                   split ? "" : "sets do not split Z_n under mu = -1"});

    const CyclicCode* codes[2] = {&c1, &c2};
    for (int i = 0; i < 2; ++i) {
        const CyclicCode& c = *codes[i];
        std::string tag = "[" + std::to_string(i) + "]";

        DefiningSet dual_T = complement_set(negate_set(c.T));
        DefiningSet even_T = with_member(c.T, 0);
        bool same = dual_T == even_T;
        out.push_back({"duadic.dual-is-even-like" + tag, m,
                       same ? CheckStatus::pass : CheckStatus::fail,
                       same ? "" : "dual defining set differs from T u {0}"});

        BitMatrix E = extend(c);
        bool sd = is_self_dual(E);
        out.push_back({"duadic.extended-self-dual" + tag, m,
                       sd ? CheckStatus::pass : CheckStatus::fail,
                       sd ? "" : "G G^T != 0 or k != (n+1)/2"});
        bool de = true;
        for (int r = 0; r < E.rows() && de; ++r)
            if (E.row_weight(r) % 4 != 0) de = false;
        out.push_back({"duadic.extended-doubly-even-basis" + tag, m,
                       de ? CheckStatus::pass : CheckStatus::fail,
                       de ? "" : "a basis row has weight not divisible by 4"});

        if (c.k <= 26) {
            auto d_o = min_odd_weight(c);
            bool ok = d_o && u64(*d_o) * u64(*d_o) - u64(*d_o) + 1 >= n;
            out.push_back({"duadic.square-root-bound" + tag, m,
                           ok ? CheckStatus::pass : CheckStatus::fail,
                           ok ? "d_o = " + std::to_string(*d_o)
                              : "square-root bound fails"});
        } else {
            out.push_back({"duadic.square-root-bound" + tag, m, CheckStatus::skip,
                           "k = " + std::to_string(c.k) + " above the exhaustive limit"});
        }
    }
    return out;
}

bool all_passed(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (c.status == CheckStatus::fail) return false;
    return true;
}

std::string checks_to_json(const std::vector<CheckResult>& checks) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json j;
        j["claim_id"] = c.claim_id;
        j["m"] = c.m;
        j["status"] = c.status == CheckStatus::pass ? "pass"
                      : c.status == CheckStatus::fail ? "fail" : "skip";
        if (!c.witness.empty()) j["witness"] = c.witness;
        arr.push_back(std::move(j));
    }
    return arr.dump();
}

}  // namespace wcc
