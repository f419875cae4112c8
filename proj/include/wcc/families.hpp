#ifndef WCC_FAMILIES_HPP
#define WCC_FAMILIES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wcc/bigint.hpp"
#include "wcc/cycliccode.hpp"
#include "wcc/znsets.hpp"

namespace wcc {

/// Binomial-coefficient sums over 2-adic-weight classes mod 3;
/// s0 + s1 + s2 = 2^m and the quadratic form
/// s0^2+s1^2+s2^2-s0s1-s0s2-s1s2 equals 1.
struct SClassCounts {
    int m = 0;
    UBig s0, s1, s2;
};

SClassCounts s_class_counts(int m);

/// Congruence condition on m: m % modulus == residue and m >= min_m.
struct Applicability {
    int modulus = 1;
    int residue = 0;
    int min_m = 2;
    bool applies(int m) const { return m >= min_m && m % modulus == residue; }
};

using IntFormula = std::function<std::uint64_t(int m)>;

/// One containment claim: with v = v_formula(m) (a unit of Z_n), every
/// a in the cyclic range [a_begin(m), a_end(m)] has a*v mod n inside the
/// target weight-class set (in_complement = false) or inside its complement
/// (in_complement = true). The range may wrap through 0.
struct LemmaClaim {
    std::string id;
    Applicability when;
    IntFormula v;
    IntFormula a_begin;
    IntFormula a_end;
    int target_r = 3;
    std::vector<int> target_S;
    bool in_complement = false;
};

enum class CodeVariant { primal, dual, extended };

/// One dimension/bound claim for a family member. classes are the weight
/// classes of the member's defining set (one value: mod-3 family,
/// two values: mod-4 duadic family).
struct TheoremClaim {
    std::string id;
    Applicability when;
    int r = 3;
    std::vector<int> classes;
    CodeVariant variant = CodeVariant::primal;
    IntFormula dim;
    IntFormula bound;
};

const std::vector<LemmaClaim>& lemma_catalog();
const std::vector<TheoremClaim>& theorem_catalog();

/// Evaluated claim formulas; throw std::domain_error when m is inapplicable.
std::uint64_t expected_dimension(const TheoremClaim& claim, int m);
std::uint64_t expected_bound(const TheoremClaim& claim, int m);

/// Brute-force check of one lemma claim at one m. The failing a (if any) is
/// reported through *witness.
bool verify_lemma(const LemmaClaim& claim, int m,
                  std::uint64_t* witness = nullptr);

/// Defining set of the claim's code at m (primal or dual; extended claims
/// have no defining set and throw).
DefiningSet claim_defining_set(const TheoremClaim& claim, int m);

CyclicCode build_mod3_code(int i, int m, const FieldSpec& f);
CyclicCode build_mod4_code(int i1, int i2, int m, const FieldSpec& f);

/// The odd-like duadic pair: ((0,3),(1,2)) codes for m = 1 mod 4 and
/// ((0,1),(2,3)) codes for m = 3 mod 4. Throws for even m.
std::pair<CyclicCode, CyclicCode> duadic_pair(int m, const FieldSpec& f);
/// Weight classes of the pair members without building the codes.
std::pair<std::pair<int, int>, std::pair<int, int>> duadic_pair_classes(int m);

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
    std::string claim_id;
    int m = 0;
    CheckStatus status = CheckStatus::fail;
    std::string witness;  // empty when pass
};

/// True when no check failed (skips are fine).
bool all_passed(const std::vector<CheckResult>& checks);

/// Structural checks of the duadic machinery at odd m >= 5:
/// the mu = -1 splitting, dual = even-like subcode, self-dual doubly-even
/// extended generators, and (for k within the exhaustive limit) the
/// square-root bound d_o^2 - d_o + 1 >= n.
std::vector<CheckResult> verify_duadic_structure(int m);

/// All lemma claims applicable at m <= m_max.
std::vector<CheckResult> verify_all_lemmas(int m_max);

/// Dimension formulas vs measured n - |T| for all applicable m <= m_max.
std::vector<CheckResult> verify_all_dimensions(int m_max, int m_min = 4);

/// best_bch_certificate bound >= theorem bound for all applicable m <= m_max
/// (primal and dual claims; extended claims are not cyclic and are skipped).
std::vector<CheckResult> verify_certificate_dominance(int m_max, int m_min = 3);

std::string checks_to_json(const std::vector<CheckResult>& checks);

}  // namespace wcc

#endif
