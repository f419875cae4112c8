#include "wcc/cycliccode.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>

#include "wcc/parallel.hpp"

#include <json.hpp>

namespace wcc {

CyclicCode from_defining_set(const DefiningSet& T, const FieldSpec& f) {
    if (T.n() != f.n)
        throw std::invalid_argument("from_defining_set: set modulus does not match field");
    CyclicCode c;
    c.field = f;
    c.T = T;
    c.g = generator_from_defining_set(T, f);
    c.n = int(T.n());
    c.k = int(T.n() - T.size());
    if (c.g.degree() != std::int64_t(T.size()))
        throw std::logic_error("from_defining_set: generator degree != |T|");
    return c;
}

CyclicCode dual(const CyclicCode& c) {
    return from_defining_set(complement_set(negate_set(c.T)), c.field);
}

CyclicCode even_like_subcode(const CyclicCode& c) {
    if (c.T.contains(0))
        throw std::invalid_argument("even_like_subcode: 0 already in the defining set");
    return from_defining_set(with_member(c.T, 0), c.field);
}

BitMatrix generator_matrix(const CyclicCode& c) {
    BitMatrix G(c.k, c.n);
    for (int i = 0; i < c.k; ++i)
        for (std::int64_t j = 0; j <= c.g.degree(); ++j)
            if (c.g.coeff(std::uint64_t(j))) G.set(i, i + int(j));
    return G;
}

BitMatrix extend(const CyclicCode& c) {
    BitMatrix G = generator_matrix(c);
    BitMatrix E(c.k, c.n + 1);
    for (int i = 0; i < c.k; ++i) {
        for (int w = 0; w < G.stride(); ++w) E.row(i)[w] = G.row(i)[w];
        if (G.row_weight(i) & 1) E.set(i, c.n);
    }
    return E;
}

namespace {

// Rank basis of G's row space (rref with zero rows dropped).
BitMatrix row_basis(const BitMatrix& G) {
    BitMatrix R = rref(G);
    int rk = 0;
    for (int i = 0; i < R.rows(); ++i)
        if (R.row_weight(i) > 0) ++rk;
    BitMatrix B(rk, G.cols());
    for (int i = 0; i < rk; ++i)
        for (int w = 0; w < R.stride(); ++w) B.row(i)[w] = R.row(i)[w];
    return B;
}

// Calls f(weight) for every nonzero codeword of the row space of `basis`
// (full-rank!), enumerated in Gray-code order.
template <typename F>
void for_each_nonzero_weight(const BitMatrix& basis, F&& f) {
    int kk = basis.rows();
    int stride = basis.stride();
    std::vector<std::uint64_t> cur(stride, 0);
    std::uint64_t total = std::uint64_t(1) << kk;
    for (std::uint64_t i = 1; i < total; ++i) {
        const std::uint64_t* r = basis.row(std::countr_zero(i));
        int w = 0;
        for (int j = 0; j < stride; ++j) {
            cur[j] ^= r[j];
            w += std::popcount(cur[j]);
        }
        f(w);
    }
}

void require_k_limit(int kk, int k_limit) {
    if (kk > k_limit)
        throw EngineLimitError("dimension " + std::to_string(kk) +
                               " exceeds the exhaustive limit k = " + std::to_string(k_limit) +
                               "; use the MITM or randomized engine");
}

}  // namespace

int min_distance_exhaustive(const BitMatrix& G, int k_limit) {
    BitMatrix B = row_basis(G);
    if (B.rows() == 0) return 0;
    require_k_limit(B.rows(), k_limit);
    int best = std::numeric_limits<int>::max();
    for_each_nonzero_weight(B, [&](int w) {
        if (w < best) best = w;
    });
    return best;
}

int min_distance_exhaustive(const CyclicCode& c, int k_limit) {
    return min_distance_exhaustive(generator_matrix(c), k_limit);
}

std::optional<int> min_odd_weight(const BitMatrix& G, int k_limit) {
    BitMatrix B = row_basis(G);
    if (B.rows() == 0) return std::nullopt;
    require_k_limit(B.rows(), k_limit);
    int best = std::numeric_limits<int>::max();
    for_each_nonzero_weight(B, [&](int w) {
        if ((w & 1) && w < best) best = w;
    });
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

std::optional<int> min_odd_weight(const CyclicCode& c, int k_limit) {
    return min_odd_weight(generator_matrix(c), k_limit);
}

std::vector<std::uint64_t> weight_distribution(const BitMatrix& G, int k_limit) {
    BitMatrix B = row_basis(G);
    require_k_limit(B.rows(), k_limit);
    std::vector<std::uint64_t> counts(std::size_t(G.cols()) + 1, 0);
    counts[0] = 1;
    for_each_nonzero_weight(B, [&](int w) { ++counts[std::size_t(w)]; });
    return counts;
}

std::vector<std::uint64_t> weight_distribution(const CyclicCode& c, int k_limit) {
    return weight_distribution(generator_matrix(c), k_limit);
}

// ---------------------------------------------------------------- MITM ----

namespace {

struct Syndrome {
    std::uint64_t lo = 0, hi = 0;
    friend auto operator<=>(const Syndrome&, const Syndrome&) = default;
    Syndrome operator^(const Syndrome& o) const { return {lo ^ o.lo, hi ^ o.hi}; }
};

struct MitmEntry {
    Syndrome syn;
    std::uint64_t idx;  // up to 8 column indices, 8 bits each
};

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// All w-subsets of [0, n); calls f(syndrome, packed indices).
template <typename F>
void for_each_subset(const std::vector<Syndrome>& cols, int w, F&& f) {
    int n = int(cols.size());
    if (w > n) return;
    std::vector<int> idx(static_cast<std::size_t>(w));
    for (int i = 0; i < w; ++i) idx[std::size_t(i)] = i;
    while (true) {
        Syndrome s;
        std::uint64_t packed = 0;
        for (int i = 0; i < w; ++i) {
            s = s ^ cols[std::size_t(idx[std::size_t(i)])];
            packed |= std::uint64_t(idx[std::size_t(i)]) << (8 * i);
        }
        f(s, packed);
        int i = w - 1;
        while (i >= 0 && idx[std::size_t(i)] == n - w + i) --i;
        if (i < 0) break;
        ++idx[std::size_t(i)];
        for (int j = i + 1; j < w; ++j) idx[std::size_t(j)] = idx[std::size_t(j - 1)] + 1;
    }
}

bool packed_disjoint(std::uint64_t a, int wa, std::uint64_t b, int wb) {
    for (int i = 0; i < wa; ++i) {
        std::uint64_t ai = (a >> (8 * i)) & 0xff;
        for (int j = 0; j < wb; ++j)
            if (ai == ((b >> (8 * j)) & 0xff)) return false;
    }
    return true;
}

}  // namespace

std::optional<int> min_distance_mitm(const BitMatrix& G, int w_max,
                                     std::size_t memory_budget) {
    BitMatrix B = row_basis(G);
    int n = G.cols();
    int kk = B.rows();
    if (kk == 0) return std::nullopt;       // zero code: no nonzero codewords
    if (kk == n) return 1;                  // whole space contains weight-1 words
    if (n > 255)
        throw EngineLimitError("MITM engine supports n <= 255 (got n = " + std::to_string(n) + ")");
    BitMatrix H = null_space(B);
    int r = H.rows();
    if (r > 128)
        throw EngineLimitError("MITM engine supports n - k <= 128 (got " + std::to_string(r) + ")");

    std::vector<Syndrome> cols(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        Syndrome s;
        for (int i = 0; i < r; ++i)
            if (H.get(i, j)) {
                if (i < 64) s.lo |= std::uint64_t(1) << i;
                else        s.hi |= std::uint64_t(1) << (i - 64);
            }
        cols[std::size_t(j)] = s;
    }

    for (int w = 1; w <= w_max; ++w) {
        int w1 = (w + 1) / 2;
        int w2 = w - w1;
        if (w1 > 8)
            throw EngineLimitError("MITM engine caps half-subset size at 8 (w = " +
                                   std::to_string(w) + ")");
        std::uint64_t count = binomial_u64(std::uint64_t(n), std::uint64_t(w1));
        if (count * sizeof(MitmEntry) > memory_budget)
            throw EngineLimitError("MITM syndrome table of " + std::to_string(count) +
                                   " subsets exceeds the memory budget");
        std::vector<MitmEntry> table;
        table.reserve(std::size_t(count));
        for_each_subset(cols, w1, [&](Syndrome s, std::uint64_t packed) {
            table.push_back({s, packed});
        });
        std::sort(table.begin(), table.end(), [](const MitmEntry& a, const MitmEntry& b) {
            return a.syn < b.syn || (a.syn == b.syn && a.idx < b.idx);
        });

        bool found = false;
        auto probe = [&](Syndrome s, std::uint64_t packed) {
            if (found) return;
            auto lo = std::lower_bound(table.begin(), table.end(), s,
                                       [](const MitmEntry& e, const Syndrome& t) { return e.syn < t; });
            for (auto it = lo; it != table.end() && it->syn == s; ++it) {
                if (w2 == w1 && it->idx == packed) continue;
                if (packed_disjoint(it->idx, w1, packed, w2)) {
                    found = true;
                    return;
                }
            }
        };
        if (w2 == 0) {
            probe(Syndrome{}, 0);  // weight w = w1 alone: syndrome must vanish
        } else {
            for_each_subset(cols, w2, probe);
        }
        if (found) return w;
    }
    return std::nullopt;
}

std::optional<int> min_distance_mitm(const CyclicCode& c, int w_max,
                                     std::size_t memory_budget) {
    return min_distance_mitm(generator_matrix(c), w_max, memory_budget);
}

// ------------------------------------------------- randomized search ----

namespace {

// Pinned Fisher-Yates so results do not depend on the standard library.
void shuffle_perm(std::vector<int>& perm, std::mt19937_64& rng) {
    for (std::size_t i = perm.size() - 1; i > 0; --i) {
        std::size_t j = std::size_t(rng() % (i + 1));
        std::swap(perm[i], perm[std::size_t(j)]);
    }
}

}  // namespace

std::optional<BitVec> low_weight_search(const BitMatrix& G, int target_w,
                                        long iterations, std::uint64_t seed) {
    if (iterations < 1) throw std::invalid_argument("low_weight_search: iterations >= 1");
    BitMatrix B = row_basis(G);
    int kk = B.rows();
    int n = G.cols();
    if (kk == 0) return std::nullopt;

    std::mt19937_64 rng(seed);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[std::size_t(i)] = i;

    std::optional<BitVec> best;
    int best_w = std::numeric_limits<int>::max();
    int stride = (n + 63) / 64;
    auto consider = [&](const std::uint64_t* permuted, int w) {
        if (w == 0 || w >= best_w) return;
        BitVec orig(n);
        for (int c = 0; c < n; ++c)
            if ((permuted[c >> 6] >> (c & 63)) & 1) orig.set(perm[std::size_t(c)]);
        best = orig;
        best_w = w;
    };

    BitMatrix W(kk, n);
    std::vector<std::uint64_t> tmp(static_cast<std::size_t>(stride));
    for (long it = 0; it < iterations && best_w > target_w; ++it) {
        shuffle_perm(perm, rng);
        for (int i = 0; i < kk; ++i) {
            std::fill(W.row(i), W.row(i) + W.stride(), 0);
            for (int c = 0; c < n; ++c)
                if (B.get(i, perm[std::size_t(c)])) W.set(i, c);
        }
        // Reduced echelon form over the permuted columns: each row is a
        // codeword with a single 1 on its pivot; pairs give the p = 2 window.
        int rrow = 0;
        for (int c = 0; c < n && rrow < kk; ++c) {
            int pr = -1;
            for (int i = rrow; i < kk; ++i)
                if (W.get(i, c)) { pr = i; break; }
            if (pr < 0) continue;
            W.swap_rows(rrow, pr);
            for (int i = 0; i < kk; ++i)
                if (i != rrow && W.get(i, c)) W.xor_rows(i, rrow);
            ++rrow;
        }
        for (int i = 0; i < kk && best_w > target_w; ++i) {
            const std::uint64_t* ri = W.row(i);
            consider(ri, W.row_weight(i));
            for (int j = i + 1; j < kk && best_w > target_w; ++j) {
                const std::uint64_t* rj = W.row(j);
                int w = 0;
                for (int t = 0; t < stride; ++t) {
                    tmp[std::size_t(t)] = ri[t] ^ rj[t];
                    w += std::popcount(tmp[std::size_t(t)]);
                }
                consider(tmp.data(), w);
            }
        }
    }
    if (best_w <= target_w) return best;
    return std::nullopt;
}

std::optional<BitVec> low_weight_search(const CyclicCode& c, int target_w,
                                        long iterations, std::uint64_t seed) {
    return low_weight_search(generator_matrix(c), target_w, iterations, seed);
}

// ------------------------------------------------- BCH certificates ----

namespace {

// Units of Z_n, one representative (the smallest) per doubling orbit.
// scale_set(T, u) = scale_set(T, 2u) for coset-closed T, so these suffice.
std::vector<std::uint32_t> unit_orbit_leaders(std::uint64_t n) {
    std::vector<std::uint32_t> leaders;
    for (std::uint64_t u = 1; u < n; ++u) {
        if (gcd_u64(u, n) != 1) continue;
        bool minimal = true;
        for (std::uint64_t x = (u * 2) % n; x != u; x = (x * 2) % n)
            if (x < u) { minimal = false; break; }
        if (minimal) leaders.push_back(std::uint32_t(u));
    }
    return leaders;
}

struct CertBest {
    std::uint32_t length = 0;
    std::uint64_t u = 1;
    std::uint32_t start = 0;
    bool better_than(const CertBest& o) const {
        if (length != o.length) return length > o.length;
        if (u != o.u) return u < o.u;
        return start < o.start;
    }
};

// Longest cyclic run of set bits in `bits` (length n, not all ones).
// Scans one full lap starting just past a clear position, so wrap runs are
// seen whole; ties keep the smallest start.
CertBest longest_run_bits(const std::vector<std::uint64_t>& bits, std::uint64_t n) {
    auto test = [&](std::uint64_t i) { return (bits[i >> 6] >> (i & 63)) & 1; };
    std::uint64_t anchor = 0;
    while (test(anchor)) ++anchor;
    CertBest best;
    std::uint64_t run_start = 0, run_len = 0;
    std::uint64_t pos = anchor;
    for (std::uint64_t i = 0; i < n; ++i) {
        ++pos;
        if (pos == n) pos = 0;
        if (test(pos)) {
            if (run_len == 0) run_start = pos;
            ++run_len;
        } else {
            if (run_len > best.length ||
                (run_len == best.length && run_start < best.start)) {
                best.length = std::uint32_t(run_len);
                best.start = std::uint32_t(run_start);
            }
            run_len = 0;
        }
    }
    return best;
}

}  // namespace

BchCertificate best_bch_certificate(const DefiningSet& T) {
    std::uint64_t n = T.n();
    if (T.size() == 0) return {1, 0, 0};
    if (T.size() == n) return {1, 0, std::uint32_t(n)};

    std::vector<std::uint32_t> leaders = unit_orbit_leaders(n);
    std::size_t stride = std::size_t((n + 63) / 64);

    auto work = [&](std::size_t, std::size_t lo, std::size_t hi) {
        std::vector<std::uint64_t> bits(stride, 0);
        CertBest local;
        for (std::size_t i = lo; i < hi; ++i) {
            std::uint64_t u = leaders[i];
            std::fill(bits.begin(), bits.end(), 0);
            for (std::uint32_t t : T.members()) {
                std::uint64_t pos = (u * t) % n;
                bits[pos >> 6] |= std::uint64_t(1) << (pos & 63);
            }
            CertBest cand = longest_run_bits(bits, n);
            cand.u = u;
            if (cand.better_than(local)) local = cand;
        }
        return local;
    };
    CertBest best = parallel_chunked<CertBest>(
        0, leaders.size(), CertBest{}, work,
        [](CertBest a, CertBest b) { return b.better_than(a) ? b : a; });
    return {best.u, best.start, best.length};
}

BchCertificate best_bch_certificate(const CyclicCode& c) {
    return best_bch_certificate(c.T);
}

bool verify_certificate(const BchCertificate& cert, const DefiningSet& T) {
    std::uint64_t n = T.n();
    if (cert.length > n) return false;
    if (gcd_u64(cert.u % n, n) != 1) return false;
    // run in scale_set(T, u)  <=>  u^{-1} * run in T
    std::uint64_t uinv = inv_mod(cert.u, n);
    for (std::uint64_t j = 0; j < cert.length; ++j) {
        std::uint64_t pos = (cert.start + j) % n;
        if (!T.contains((uinv * pos) % n)) return false;
    }
    return true;
}

bool verify_certificate(const BchCertificate& cert, const CyclicCode& c) {
    return verify_certificate(cert, c.T);
}

// ------------------------------------------------------- records ----

std::string to_json(const CodeRecord& rec) {
    nlohmann::ordered_json j;
    j["family"] = rec.family;
    j["m"] = rec.m;
    j["n"] = rec.n;
    j["k"] = rec.k;
    if (rec.d_lower) j["d_lower"] = *rec.d_lower;
    if (rec.d_exact) j["d_exact"] = *rec.d_exact;
    if (rec.d_upper) j["d_upper"] = *rec.d_upper;
    j["method"] = rec.method;
    if (rec.seed) j["seed"] = *rec.seed;
    if (rec.certificate) {
        j["certificate"] = {{"u", rec.certificate->u},
                            {"start", rec.certificate->start},
                            {"length", rec.certificate->length}};
    }
    return j.dump();
}

std::string csv_header() {
    return "family,m,n,k,d_lower,d_exact,d_upper,method,seed,cert_u,cert_start,cert_length";
}

std::string to_csv(const CodeRecord& rec) {
    auto opt = [](const auto& o) { return o ? std::to_string(*o) : std::string(); };
    std::string s = rec.family + "," + std::to_string(rec.m) + "," + std::to_string(rec.n) +
                    "," + std::to_string(rec.k) + "," + opt(rec.d_lower) + "," +
                    opt(rec.d_exact) + "," + opt(rec.d_upper) + "," + rec.method + "," +
                    opt(rec.seed);
    if (rec.certificate) {
        s += "," + std::to_string(rec.certificate->u) + "," +
             std::to_string(rec.certificate->start) + "," +
             std::to_string(rec.certificate->length);
    } else {
        s += ",,,";
    }
    return s;
}

}  // namespace wcc
