#ifndef GIESEKER_GF_HPP
#define GIESEKER_GF_HPP

#include <cstdint>
#include <vector>

namespace gieseker::gf {

bool is_prime(int q);

/// Dense row-major matrix over F_q with entries 0..q-1.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<uint8_t> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    uint8_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    uint8_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    const uint8_t* row(int r) const { return a.data() + static_cast<size_t>(r) * cols; }
};

/// Incremental span of vectors in F_q^n, kept as a reduced row-echelon basis.
class Span {
public:
    Span(int n, int q) : n_(n), q_(q) {}

    /// Add v to the span; returns true if the dimension grew.
    bool insert(const uint8_t* v);
    bool contains(const uint8_t* v) const;

    int dim() const { return static_cast<int>(rows_.size()); }
    int ambient() const { return n_; }

    /// Basis as a dim x n matrix in reduced row-echelon form.
    Mat basis() const;

private:
    int n_, q_;
    std::vector<std::vector<uint8_t>> rows_; // echelon rows, pivots strictly increasing
    std::vector<int> pivots_;
};

/// All subspaces of F_q^n as reduced row-echelon bases, ordered by dimension,
/// then lexicographically by pivot pattern, then by free entries.
std::vector<Mat> subspaces(int n, int q);

} // namespace gieseker::gf

#endif
