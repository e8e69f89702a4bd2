#pragma once

#include "cobalt/scalar.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace cobalt {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void append_row(std::span<const Integer> values);
    IntMatrix transposed() const;
    bool is_zero() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

std::vector<Integer> row_times(std::span<const Integer> v, const IntMatrix& m);

struct SmithForm {
    /// Nonzero elementary divisors d_1 | d_2 | ... (all positive).
    std::vector<Integer> divisors;
    IntMatrix left;       ///< U, unimodular, rows x rows
    IntMatrix right;      ///< V, unimodular, cols x cols
    IntMatrix right_inv;  ///< V^{-1}
    std::size_t rank() const { return divisors.size(); }
};

/// U * M * V = diag(divisors, 0, ...). Deterministic for a given input.
SmithForm smith_normal_form(const IntMatrix& m);

/// Basis of {x in Z^cols : M x = 0}, one vector per entry.
std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& m);

/// Determinant via fraction-free elimination; square input only.
Integer determinant(const IntMatrix& m);

/// Inverse of a unimodular matrix; throws IllFormed if |det| != 1.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Quotient Z^n / L of the ambient lattice by the row span L of a relation
/// matrix, with units of the ground ring inverted.
class LatticeQuotient {
public:
    LatticeQuotient(const IntMatrix& relation_rows, std::size_t ambient, Scalars scalars);

    std::size_t ambient() const { return ambient_; }
    std::size_t free_rank() const { return ambient_ - smith_.rank(); }
    /// Non-unit invariant factors (already reduced to their non-unit part).
    const std::vector<Integer>& torsion() const { return torsion_; }
    bool is_zero() const { return free_rank() == 0 && torsion_.empty(); }

    /// True when w lies in L tensored with the ground ring.
    bool contains(std::span<const Integer> w) const;
    /// Coordinates of w in the free summand (over Z).
    std::vector<Integer> free_coordinates(std::span<const Integer> w) const;
    /// Ambient vector representing the j-th free generator of the quotient.
    std::vector<Integer> free_generator(std::size_t j) const;

    /// Conditions defining the quotient map: column indices of w*V that must
    /// vanish (free part) and (column, modulus) pairs for torsion.
    const SmithForm& smith() const { return smith_; }
    const std::vector<std::size_t>& torsion_columns() const { return torsion_cols_; }

private:
    std::size_t ambient_;
    Scalars scalars_;
    SmithForm smith_;
    std::vector<Integer> torsion_;
    std::vector<std::size_t> torsion_cols_;
};

} // namespace cobalt
