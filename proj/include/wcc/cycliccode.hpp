#ifndef WCC_CYCLICCODE_HPP
#define WCC_CYCLICCODE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wcc/bitpoly.hpp"
#include "wcc/field.hpp"
#include "wcc/gf2linalg.hpp"
#include "wcc/znsets.hpp"

namespace wcc {

/// Thrown when a distance engine is asked to exceed its configured limit
/// (dimension, memory, or length). The CLI maps this to exit code 3.
struct EngineLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Binary cyclic code of length n = 2^m - 1 given by its defining set T
/// with respect to alpha: g(x) = prod over T's cosets of their minimal
/// polynomials, k = n - |T|.
struct CyclicCode {
    FieldSpec field;
    DefiningSet T;
    BinaryPolynomial g;
    int n = 0;
    int k = 0;
};

/// Witness for the BCH bound after rescaling: the run
/// {start, ..., start+length-1} (cyclically, mod n) lies in scale_set(T, u),
/// so the code has minimum distance >= length + 1.
struct BchCertificate {
    std::uint64_t u = 1;
    std::uint32_t start = 0;
    std::uint32_t length = 0;
    int bound() const { return int(length) + 1; }
};

/// One table/engine result row. d_exact is set when an engine proved the
/// exact distance; d_upper when only a codeword was exhibited. For k = 0
/// codes all distance fields stay empty.
struct CodeRecord {
    std::string family;
    int m = 0;
    int n = 0;
    int k = 0;
    std::optional<int> d_lower;
    std::optional<int> d_exact;
    std::optional<int> d_upper;
    std::string method;
    std::optional<std::uint64_t> seed;
    std::optional<BchCertificate> certificate;
};

std::string to_json(const CodeRecord& rec);
std::string csv_header();
std::string to_csv(const CodeRecord& rec);

CyclicCode from_defining_set(const DefiningSet& T, const FieldSpec& f);

/// Dual code: defining set = Z_n \ (-T); dim = n - k. The construction is
/// cross-checked against null_space of the generator matrix in the tests.
CyclicCode dual(const CyclicCode& c);

/// Even-weight subcode: defining set T u {0}, dimension k - 1. Requires 0 not in T.
CyclicCode even_like_subcode(const CyclicCode& c);

/// k x n generator matrix with row i = x^i * g(x).
BitMatrix generator_matrix(const CyclicCode& c);

/// Generator of the extended code: every row of generator_matrix(c) with an
/// overall parity bit appended (length n + 1).
BitMatrix extend(const CyclicCode& c);

// ---- distance engines (general linear codes; cyclic overloads below) ----

/// Exact minimum distance by Gray-code enumeration of all 2^k codewords.
/// Returns 0 for the zero code (k = 0). Refuses k > k_limit.
int min_distance_exhaustive(const BitMatrix& G, int k_limit = 26);
int min_distance_exhaustive(const CyclicCode& c, int k_limit = 26);

/// Exact minimum distance if d <= w_max, via meet-in-the-middle over
/// syndromes of ceil(w/2)-column subsets; std::nullopt if d > w_max.
/// Supports n - k <= 128 and n <= 255; the syndrome table is capped at
/// memory_budget bytes.
std::optional<int> min_distance_mitm(const BitMatrix& G, int w_max,
                                     std::size_t memory_budget = std::size_t(2) << 30);
std::optional<int> min_distance_mitm(const CyclicCode& c, int w_max,
                                     std::size_t memory_budget = std::size_t(2) << 30);

/// Randomized low-weight codeword search (information-set reduction with
/// Lee-Brickell window p <= 2). Deterministic for a given seed; stops as
/// soon as a codeword of weight <= target_w appears and returns it.
/// std::nullopt when no such word was found - absence proves nothing.
std::optional<BitVec> low_weight_search(const BitMatrix& G, int target_w,
                                        long iterations, std::uint64_t seed);
std::optional<BitVec> low_weight_search(const CyclicCode& c, int target_w,
                                        long iterations, std::uint64_t seed);

/// Best BCH-bound certificate over all units u of Z_n (one representative
/// per doubling orbit suffices: scale_set(T, 2u) = scale_set(T, u)). Ties
/// broken by smallest u, then smallest start. For empty T the certificate
/// has length 0 (bound 1).
BchCertificate best_bch_certificate(const DefiningSet& T);
BchCertificate best_bch_certificate(const CyclicCode& c);

bool verify_certificate(const BchCertificate& cert, const DefiningSet& T);
bool verify_certificate(const BchCertificate& cert, const CyclicCode& c);

/// Minimum weight among odd-weight codewords; std::nullopt if every
/// codeword has even weight. Enumerates, so k <= k_limit.
std::optional<int> min_odd_weight(const BitMatrix& G, int k_limit = 26);
std::optional<int> min_odd_weight(const CyclicCode& c, int k_limit = 26);

/// counts[w] = number of codewords of weight w; counts sum to 2^k.
std::vector<std::uint64_t> weight_distribution(const BitMatrix& G, int k_limit = 26);
std::vector<std::uint64_t> weight_distribution(const CyclicCode& c, int k_limit = 26);

}  // namespace wcc

#endif
