#ifndef WCC_GF2LINALG_HPP
#define WCC_GF2LINALG_HPP

#include <cstdint>
#include <vector>

namespace wcc {

/// Bit vector of fixed length, packed 64 bits per word.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }
    bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i, bool v = true) {
        if (v) w_[i >> 6] |= std::uint64_t(1) << (i & 63);
        else   w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }
    void xor_with(const BitVec& o);
    int weight() const;
    bool any() const;
    const std::vector<std::uint64_t>& words() const { return w_; }
    std::vector<std::uint64_t>& words() { return w_; }

    bool operator==(const BitVec& o) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Row-major packed bit matrix over GF(2). Matrices are plain values;
/// elimination routines work on private copies.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols);

    static BitMatrix identity(int k);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int stride() const { return stride_; }

    bool get(int r, int c) const {
        return (data_[std::size_t(r) * stride_ + (c >> 6)] >> (c & 63)) & 1;
    }
    void set(int r, int c, bool v = true) {
        auto& w = data_[std::size_t(r) * stride_ + (c >> 6)];
        if (v) w |= std::uint64_t(1) << (c & 63);
        else   w &= ~(std::uint64_t(1) << (c & 63));
    }

    const std::uint64_t* row(int r) const { return data_.data() + std::size_t(r) * stride_; }
    std::uint64_t* row(int r) { return data_.data() + std::size_t(r) * stride_; }

    void xor_rows(int dst, int src);  // row[dst] ^= row[src]
    void swap_rows(int a, int b);
    int row_weight(int r) const;
    BitVec row_vec(int r) const;
    void set_row(int r, const BitVec& v);

    bool operator==(const BitMatrix& o) const = default;

private:
    int rows_ = 0, cols_ = 0, stride_ = 0;
    std::vector<std::uint64_t> data_;
};

int rank(const BitMatrix& M);

/// Reduced row echelon form (same shape; zero rows sink to the bottom).
BitMatrix rref(const BitMatrix& M);

/// Basis of {v : M v^T = 0}, one row per basis vector ((cols - rank) rows).
BitMatrix null_space(const BitMatrix& M);

/// A * B^T; requires A.cols() == B.cols().
BitMatrix matmul_t(const BitMatrix& A, const BitMatrix& B);

bool is_zero(const BitMatrix& M);

/// Row spaces compared via rref.
bool same_row_space(const BitMatrix& A, const BitMatrix& B);

/// True iff cols = 2*rows and G G^T = 0. Throws if G is rank-deficient.
bool is_self_dual(const BitMatrix& G);

}  // namespace wcc

#endif
