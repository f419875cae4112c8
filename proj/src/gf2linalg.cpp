#include "wcc/gf2linalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace wcc {

void BitVec::xor_with(const BitVec& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
}

int BitVec::weight() const {
    int s = 0;
    for (auto w : w_) s += std::popcount(w);
    return s;
}

bool BitVec::any() const {
    for (auto w : w_)
        if (w) return true;
    return false;
}

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64),
      data_(std::size_t(rows) * std::size_t((cols + 63) / 64), 0) {}

BitMatrix BitMatrix::identity(int k) {
    BitMatrix I(k, k);
    for (int i = 0; i < k; ++i) I.set(i, i);
    return I;
}

void BitMatrix::xor_rows(int dst, int src) {
    std::uint64_t* d = row(dst);
    const std::uint64_t* s = row(src);
    for (int i = 0; i < stride_; ++i) d[i] ^= s[i];
}

void BitMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    std::uint64_t* ra = row(a);
    std::uint64_t* rb = row(b);
    for (int i = 0; i < stride_; ++i) std::swap(ra[i], rb[i]);
}

int BitMatrix::row_weight(int r) const {
    const std::uint64_t* p = row(r);
    int s = 0;
    for (int i = 0; i < stride_; ++i) s += std::popcount(p[i]);
    return s;
}

BitVec BitMatrix::row_vec(int r) const {
    BitVec v(cols_);
    const std::uint64_t* p = row(r);
    std::copy(p, p + stride_, v.words().begin());
    return v;
}

void BitMatrix::set_row(int r, const BitVec& v) {
    std::copy(v.words().begin(), v.words().end(), row(r));
}

namespace {

// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref_in_place(BitMatrix& M) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < M.cols() && r < M.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < M.rows(); ++i)
            if (M.get(i, c)) { pr = i; break; }
        if (pr < 0) continue;
        M.swap_rows(r, pr);
        for (int i = 0; i < M.rows(); ++i)
            if (i != r && M.get(i, c)) M.xor_rows(i, r);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(const BitMatrix& M) {
    BitMatrix W = M;
    return int(rref_in_place(W).size());
}

BitMatrix rref(const BitMatrix& M) {
    BitMatrix W = M;
    rref_in_place(W);
    return W;
}

BitMatrix null_space(const BitMatrix& M) {
    BitMatrix W = M;
    std::vector<int> pivots = rref_in_place(W);
    std::vector<bool> is_pivot(M.cols(), false);
    for (int c : pivots) is_pivot[c] = true;

    int nullity = M.cols() - int(pivots.size());
    BitMatrix N(nullity, M.cols());
    int out = 0;
    for (int fc = 0; fc < M.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        N.set(out, fc);
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            if (W.get(int(pi), fc)) N.set(out, pivots[pi]);
        ++out;
    }
    return N;
}

BitMatrix matmul_t(const BitMatrix& A, const BitMatrix& B) {
    if (A.cols() != B.cols())
        throw std::invalid_argument("matmul_t: inner dimensions do not match");
    BitMatrix R(A.rows(), B.rows());
    for (int i = 0; i < A.rows(); ++i) {
        const std::uint64_t* ra = A.row(i);
        for (int j = 0; j < B.rows(); ++j) {
            const std::uint64_t* rb = B.row(j);
            std::uint64_t acc = 0;
            for (int w = 0; w < A.stride(); ++w) acc ^= ra[w] & rb[w];
            if (std::popcount(acc) & 1) R.set(i, j);
        }
    }
    return R;
}

bool is_zero(const BitMatrix& M) {
    for (int i = 0; i < M.rows(); ++i) {
        const std::uint64_t* r = M.row(i);
        for (int w = 0; w < M.stride(); ++w)
            if (r[w]) return false;
    }
    return true;
}

bool same_row_space(const BitMatrix& A, const BitMatrix& B) {
    if (A.cols() != B.cols()) return false;
    BitMatrix ra = rref(A), rb = rref(B);
    int rka = rank(A), rkb = rank(B);
    if (rka != rkb) return false;
    for (int i = 0; i < rka; ++i) {
        BitVec va = (i < ra.rows()) ? ra.row_vec(i) : BitVec(A.cols());
        BitVec vb = (i < rb.rows()) ? rb.row_vec(i) : BitVec(B.cols());
        if (!(va == vb)) return false;
    }
    return true;
}

bool is_self_dual(const BitMatrix& G) {
    if (rank(G) != G.rows())
        throw std::invalid_argument("is_self_dual: generator matrix is rank-deficient");
    if (G.cols() != 2 * G.rows()) return false;
    return is_zero(matmul_t(G, G));
}

}  // namespace wcc
