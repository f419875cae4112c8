#include <doctest.h>

#include <cstdlib>
#include <random>

#include "wcc/cycliccode.hpp"
#include "wcc/families.hpp"

using namespace wcc;

namespace {

bool in_code(const CyclicCode& c, const BitVec& word) {
    BitMatrix H = null_space(generator_matrix(c));
    for (int i = 0; i < H.rows(); ++i) {
        int acc = 0;
        for (int j = 0; j < c.n; ++j)
            if (H.get(i, j) && word.get(j)) acc ^= 1;
        if (acc) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("construction from defining sets") {
    FieldSpec f3 = make_field(3);
    CyclicCode universe = from_defining_set(DefiningSet::empty_set(7), f3);
    CHECK(universe.k == 7);
    CHECK(min_distance_exhaustive(universe) == 1);

    CyclicCode ham = from_defining_set(DefiningSet(7, {1, 2, 4}), f3);
    CHECK(ham.k == 4);
    CHECK(ham.g.degree() == 3);

    FieldSpec f4 = make_field(4);
    CyclicCode c24 = from_defining_set(weight_class_set({3, {2}, 4}), f4);
    CHECK(c24.n == 15);
    CHECK(c24.k == 9);
    CHECK(rank(generator_matrix(c24)) == c24.k);
    CHECK(rank(generator_matrix(ham)) == ham.k);

    CyclicCode rep = from_defining_set(complement_set(DefiningSet(15, {0})), f4);
    CHECK(rep.k == 1);
    CHECK(min_distance_exhaustive(rep) == 15);
}

TEST_CASE("duals by defining set") {
    FieldSpec f3 = make_field(3);
    CyclicCode universe = from_defining_set(DefiningSet::empty_set(7), f3);
    CyclicCode zero = dual(universe);
    CHECK(zero.k == 0);
    CHECK(min_distance_exhaustive(zero) == 0);
    CHECK(dual(zero).k == 7);  // involution

    FieldSpec f4 = make_field(4);
    CyclicCode c04 = build_mod3_code(0, 4, f4);
    CyclicCode d04 = dual(c04);
    CHECK(d04.k == 4);
    CHECK(min_distance_exhaustive(d04) == 8);
    CHECK(dual(d04).T == c04.T);
}

TEST_CASE("defining-set dual equals the linear-algebra dual") {
    for (int m = 3; m <= 7; ++m) {
        FieldSpec f = make_field(m);
        for (int i = 0; i < 3; ++i) {
            CyclicCode c = build_mod3_code(i, m, f);
            if (c.k == 0 || c.k == c.n) continue;
            CyclicCode d = dual(c);
            CHECK(same_row_space(null_space(generator_matrix(c)), generator_matrix(d)));
        }
        if (m % 2 == 1 && m >= 5) {
            auto [c1, c2] = duadic_pair(m, f);
            CHECK(same_row_space(null_space(generator_matrix(c1)), generator_matrix(dual(c1))));
            CHECK(same_row_space(null_space(generator_matrix(c2)), generator_matrix(dual(c2))));
        }
    }
}

TEST_CASE("even-like subcodes") {
    FieldSpec f4 = make_field(4);
    CyclicCode universe = from_defining_set(DefiningSet::empty_set(15), f4);
    CyclicCode even = even_like_subcode(universe);
    CHECK(even.k == 14);
    CHECK(min_distance_exhaustive(even) == 2);
    CHECK_THROWS_AS(even_like_subcode(even), std::invalid_argument);

    FieldSpec f3 = make_field(3);
    CyclicCode ham = from_defining_set(DefiningSet(7, {1, 2, 4}), f3);
    CyclicCode hamEven = even_like_subcode(ham);
    CHECK(hamEven.k == 3);
    CHECK(min_distance_exhaustive(hamEven) == 4);

    FieldSpec f5 = make_field(5);
    CyclicCode c035 = build_mod4_code(0, 3, 5, f5);
    CHECK(even_like_subcode(c035).T == dual(c035).T);
    CHECK(dual(c035).k == 15);
    CHECK(min_distance_exhaustive(dual(c035)) == 8);
}

TEST_CASE("extended codes") {
    FieldSpec f3 = make_field(3);
    CyclicCode ham = from_defining_set(DefiningSet(7, {1, 2, 4}), f3);
    BitMatrix ext = extend(ham);
    CHECK(ext.cols() == 8);
    CHECK(min_distance_exhaustive(ext) == 4);

    FieldSpec f5 = make_field(5);
    CyclicCode c035 = build_mod4_code(0, 3, 5, f5);
    BitMatrix E = extend(c035);
    CHECK(E.cols() == 32);
    CHECK(E.rows() == 16);
    CHECK(is_self_dual(E));
    CHECK(min_distance_exhaustive(E) == 8);

    CyclicCode rep = from_defining_set(complement_set(DefiningSet(7, {0})), f3);
    BitMatrix extRep = extend(rep);
    CHECK(extRep.rows() == 1);
    CHECK(extRep.row_weight(0) == 8);  // all-ones plus parity stays even
}

TEST_CASE("exhaustive distances") {
    FieldSpec f3 = make_field(3);
    CHECK(min_distance_exhaustive(from_defining_set(DefiningSet(7, {1, 2, 4}), f3)) == 3);
    FieldSpec f5 = make_field(5);
    CHECK(min_distance_exhaustive(build_mod3_code(0, 5, f5)) == 5);
    CHECK(min_distance_exhaustive(build_mod4_code(0, 3, 5, f5)) == 7);
    CHECK_THROWS_AS(min_distance_exhaustive(build_mod3_code(0, 5, f5), 10), EngineLimitError);
}

TEST_CASE("meet-in-the-middle distances") {
    FieldSpec f6 = make_field(6);
    CyclicCode c06 = build_mod3_code(0, 6, f6);
    CHECK(min_distance_mitm(c06, 8) == 6);

    FieldSpec f3 = make_field(3);
    CHECK(min_distance_mitm(from_defining_set(DefiningSet(7, {1, 2, 4}), f3), 3) == 3);

    FieldSpec f4 = make_field(4);
    CyclicCode rep = from_defining_set(complement_set(DefiningSet(15, {0})), f4);
    CHECK(!min_distance_mitm(rep, 8).has_value());
}

TEST_CASE("MITM engine limits are explicit") {
    FieldSpec f3 = make_field(3);
    CyclicCode ham = from_defining_set(DefiningSet(7, {1, 2, 4}), f3);
    // a 10-byte budget cannot hold even the singleton table
    CHECK_THROWS_WITH_AS(min_distance_mitm(ham, 3, 10),
                         doctest::Contains("memory budget"), EngineLimitError);

    FieldSpec f9 = make_field(9);
    CyclicCode even9 = from_defining_set(DefiningSet(511, {0}), f9);
    CHECK_THROWS_WITH_AS(min_distance_mitm(even9, 2),
                         doctest::Contains("n <= 255"), EngineLimitError);
}

TEST_CASE("MITM agrees with the exhaustive engine on the small suite") {
    for (int m = 3; m <= 6; ++m) {
        FieldSpec f = make_field(m);
        for (int i = 0; i < 3; ++i) {
            for (CyclicCode c : {build_mod3_code(i, m, f), dual(build_mod3_code(i, m, f))}) {
                if (c.k == 0 || c.k > 22) continue;
                int d = min_distance_exhaustive(c);
                auto mm = min_distance_mitm(c, 8);
                if (d <= 8) {
                    CHECK(mm == d);
                } else {
                    CHECK(!mm.has_value());
                }
            }
        }
    }
}

TEST_CASE("randomized low-weight search") {
    FieldSpec f3 = make_field(3);
    CyclicCode ham = from_defining_set(DefiningSet(7, {1, 2, 4}), f3);
    auto any = low_weight_search(ham, 7, 1, 1);  // target n: first thing found
    REQUIRE(any.has_value());
    CHECK(in_code(ham, *any));

    auto w3 = low_weight_search(ham, 3, 200, 1);
    REQUIRE(w3.has_value());
    CHECK(w3->weight() == 3);
    CHECK(in_code(ham, *w3));

    // deterministic for a fixed seed
    FieldSpec f7 = make_field(7);
    CyclicCode c = build_mod4_code(0, 1, 7, f7);
    auto a = low_weight_search(c, 15, 5000, 42);
    auto b = low_weight_search(c, 15, 5000, 42);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->weight() == 15);
    CHECK(*a == *b);
    CHECK(in_code(c, *a));
}

TEST_CASE("BCH certificates") {
    FieldSpec f5 = make_field(5);
    CyclicCode c05 = build_mod3_code(0, 5, f5);
    BchCertificate cert = best_bch_certificate(c05);
    CHECK(verify_certificate(cert, c05));
    CHECK(cert.bound() >= 5);  // 2^((m-1)/2)+1 at m = 5
    CHECK(cert.bound() <= min_distance_exhaustive(c05));

    FieldSpec f4 = make_field(4);
    CyclicCode rep = from_defining_set(complement_set(DefiningSet(15, {0})), f4);
    CHECK(best_bch_certificate(rep).bound() == 15);

    CHECK(best_bch_certificate(DefiningSet::empty_set(31)).bound() == 1);

    // bound <= exact d wherever d is known
    for (int m = 3; m <= 5; ++m) {
        FieldSpec f = make_field(m);
        for (int i = 0; i < 3; ++i) {
            for (CyclicCode c : {build_mod3_code(i, m, f), dual(build_mod3_code(i, m, f))}) {
                if (c.k == 0) continue;
                BchCertificate ct = best_bch_certificate(c);
                CHECK(verify_certificate(ct, c));
                CHECK(ct.bound() <= min_distance_exhaustive(c));
            }
        }
    }
}

TEST_CASE("certificate search matches the all-units oracle") {
    std::mt19937_64 rng(31);
    for (int m : {4, 5}) {
        std::uint64_t n = (std::uint64_t(1) << m) - 1;
        for (int t = 0; t < 15; ++t) {
            std::vector<std::uint32_t> members;
            for (std::uint64_t s = 1; s < n; ++s)
                if (rng() % 3 == 0)
                    for (std::uint32_t x : cyclotomic_coset(s, n)) members.push_back(x);
            DefiningSet T(n, members);
            if (T.size() == 0 || T.size() == n) continue;

            // oracle: every unit, via the set-level scale + run scan
            std::uint32_t best_len = 0, best_start = 0;
            std::uint64_t best_u = 1;
            for (std::uint64_t u = 1; u < n; ++u) {
                if (gcd_u64(u, n) != 1) continue;
                CyclicRun r = longest_cyclic_run(scale_set(T, u));
                if (r.length > best_len ||
                    (r.length == best_len &&
                     (u < best_u || (u == best_u && r.start < best_start)))) {
                    best_len = r.length;
                    best_u = u;
                    best_start = r.start;
                }
            }
            BchCertificate cert = best_bch_certificate(T);
            CHECK(cert.length == best_len);
            CHECK(cert.u == best_u);
            CHECK(cert.start == best_start);
        }
    }
}

TEST_CASE("MITM agrees with exhaustive on random coset-closed codes") {
    std::mt19937_64 rng(37);
    FieldSpec f = make_field(5);
    for (int t = 0; t < 12; ++t) {
        std::vector<std::uint32_t> members;
        for (std::uint64_t s = 1; s < 31; ++s)
            if (rng() % 2 == 0)
                for (std::uint32_t x : cyclotomic_coset(s, 31)) members.push_back(x);
        DefiningSet T(31, members);
        if (T.size() == 31) continue;
        CyclicCode c = from_defining_set(T, f);
        if (c.k == 0) continue;
        int d = min_distance_exhaustive(c);
        auto mm = min_distance_mitm(c, 8);
        if (d <= 8) {
            CHECK(mm == d);
        } else {
            CHECK(!mm.has_value());
        }
    }
}

TEST_CASE("certificate search is schedule independent") {
    FieldSpec f7 = make_field(7);
    CyclicCode c = build_mod4_code(0, 1, 7, f7);
    setenv("WCC_THREADS", "1", 1);
    BchCertificate serial = best_bch_certificate(c);
    setenv("WCC_THREADS", "4", 1);
    BchCertificate parallel = best_bch_certificate(c);
    unsetenv("WCC_THREADS");
    CHECK(serial.u == parallel.u);
    CHECK(serial.start == parallel.start);
    CHECK(serial.length == parallel.length);
    CHECK(serial.bound() == 11);  // Thm 3.5 value at m = 7
}

TEST_CASE("minimum odd weight") {
    FieldSpec f5 = make_field(5);
    CyclicCode c035 = build_mod4_code(0, 3, 5, f5);
    CHECK(min_odd_weight(c035) == 7);
    CHECK(!min_odd_weight(even_like_subcode(c035)).has_value());
    FieldSpec f3 = make_field(3);
    CHECK(min_odd_weight(from_defining_set(DefiningSet(7, {1, 2, 4}), f3)) == 3);
}

TEST_CASE("weight distributions") {
    FieldSpec f3 = make_field(3);
    CyclicCode ham = from_defining_set(DefiningSet(7, {1, 2, 4}), f3);
    CHECK(weight_distribution(ham) ==
          std::vector<std::uint64_t>{1, 0, 0, 7, 7, 0, 0, 1});

    CyclicCode rep = from_defining_set(complement_set(DefiningSet(7, {0})), f3);
    auto wd = weight_distribution(rep);
    CHECK(wd[0] == 1);
    CHECK(wd[7] == 1);

    FieldSpec f5 = make_field(5);
    auto wext = weight_distribution(extend(build_mod4_code(0, 3, 5, f5)));
    std::uint64_t total = 0;
    for (std::size_t w = 0; w < wext.size(); ++w) {
        total += wext[w];
        if (w % 4 != 0) CHECK(wext[w] == 0);  // doubly-even
    }
    CHECK(total == std::uint64_t(1) << 16);
}

TEST_CASE("doubly-even basis criterion matches enumeration at m = 5") {
    FieldSpec f5 = make_field(5);
    for (auto classes : {std::pair{0, 3}, std::pair{1, 2}}) {
        BitMatrix E = extend(build_mod4_code(classes.first, classes.second, 5, f5));
        bool basis_ok = is_self_dual(E);
        for (int r = 0; r < E.rows(); ++r)
            if (E.row_weight(r) % 4 != 0) basis_ok = false;
        auto wd = weight_distribution(E);
        bool enum_ok = true;
        for (std::size_t w = 0; w < wd.size(); ++w)
            if (wd[w] && w % 4 != 0) enum_ok = false;
        CHECK(basis_ok);
        CHECK(enum_ok == basis_ok);
    }
}

TEST_CASE("code records serialize to JSON and CSV") {
    CodeRecord rec;
    rec.family = "mod3:1";
    rec.m = 3;
    rec.n = 7;
    rec.k = 4;
    rec.d_lower = 3;
    rec.d_exact = 3;
    rec.method = "exhaustive";
    rec.certificate = BchCertificate{1, 1, 2};
    CHECK(to_json(rec) ==
          R"({"family":"mod3:1","m":3,"n":7,"k":4,"d_lower":3,"d_exact":3,)"
          R"("method":"exhaustive","certificate":{"u":1,"start":1,"length":2}})");
    CHECK(to_csv(rec) == "mod3:1,3,7,4,3,3,,exhaustive,,1,1,2");

    CodeRecord zero;
    zero.family = "mod3-dual:0";
    zero.m = 3;
    zero.n = 7;
    zero.k = 0;
    zero.method = "none";
    CHECK(to_json(zero) == R"({"family":"mod3-dual:0","m":3,"n":7,"k":0,"method":"none"})");
    CHECK(to_csv(zero) == "mod3-dual:0,3,7,0,,,,none,,,,");
}

TEST_CASE("representation independence of code parameters up to m = 6") {
    auto next_primitive = [](int m, std::uint64_t skip) {
        std::uint64_t top = std::uint64_t(1) << m;
        for (std::uint64_t mask = top | 1; mask < (top << 1); mask += 2) {
            if (mask == skip) continue;
            try {
                make_field(m, mask);
                return mask;
            } catch (const std::invalid_argument&) {
            }
        }
        return std::uint64_t(0);
    };
    for (int m = 3; m <= 6; ++m) {
        FieldSpec f = make_field(m);
        std::uint64_t alt = next_primitive(m, f.primitive_poly);
        REQUIRE(alt != 0);
        FieldSpec g = make_field(m, alt);
        for (int i = 0; i < 3; ++i) {
            CyclicCode a = build_mod3_code(i, m, f);
            CyclicCode b = build_mod3_code(i, m, g);
            CHECK(a.n == b.n);
            CHECK(a.k == b.k);
            if (a.k > 0 && a.k <= 26)
                CHECK(min_distance_exhaustive(a) == min_distance_exhaustive(b));
            CyclicCode da = dual(a), db = dual(b);
            CHECK(da.k == db.k);
            if (da.k > 0 && da.k <= 26)
                CHECK(min_distance_exhaustive(da) == min_distance_exhaustive(db));
        }
    }
}
