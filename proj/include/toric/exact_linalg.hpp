#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

/**
 * Exact integer and rational linear algebra.
 *
 * Vectors are rows and lattices are row spans throughout: a matrix whose
 * rows are v_1, ..., v_k stands for the lattice Z v_1 + ... + Z v_k.
 */
namespace toric {

using Integer  = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

/** Dense integer matrix, row-major. Zero-sized dimensions are allowed. */
class IntMatrix
{
    public:
        IntMatrix() = default;
        IntMatrix(std::size_t rows, std::size_t cols);
        IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

        /** Build from row vectors; every row must have length `cols`. */
        static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);
        static IntMatrix identity(std::size_t n);

        std::size_t rows() const { return rows_; }
        std::size_t cols() const { return cols_; }
        bool empty() const { return rows_ == 0; }

        Integer& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
        const Integer& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

        IntVector row(std::size_t i) const;
        std::vector<IntVector> row_vectors() const;
        IntMatrix transpose() const;
        IntMatrix operator*(const IntMatrix& other) const;

        void swap_rows(std::size_t a, std::size_t b);
        void swap_cols(std::size_t a, std::size_t b);
        /** row[dst] += factor * row[src] */
        void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
        void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
        void negate_row(std::size_t i);
        void negate_col(std::size_t j);

        /** Keep only the first `n` rows. */
        IntMatrix top_rows(std::size_t n) const;
        IntMatrix drop_zero_rows() const;

        bool operator==(const IntMatrix& other) const = default;

    private:
        std::size_t rows_ = 0;
        std::size_t cols_ = 0;
        std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/** A point of Q^n; the length is fixed at construction. */
class RatVector
{
    public:
        RatVector() = default;
        explicit RatVector(std::size_t n) : coords_(n) {}
        explicit RatVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
        explicit RatVector(const IntVector& v);

        std::size_t size() const { return coords_.size(); }
        const Rational& operator[](std::size_t i) const { return coords_[i]; }
        Rational& operator[](std::size_t i) { return coords_[i]; }
        const std::vector<Rational>& coords() const { return coords_; }

        bool operator==(const RatVector& other) const = default;

    private:
        std::vector<Rational> coords_;
};

struct HermiteResult
{
    IntMatrix h;  ///< row-style Hermite normal form, zero rows last
    IntMatrix u;  ///< unimodular with u * m == h
};

struct SmithResult
{
    IntMatrix d;  ///< diagonal, d == u * m * v
    IntMatrix u;
    IntMatrix v;
    /** The min(rows, cols) diagonal entries; nonnegative, each divides the next. */
    std::vector<Integer> invariant_factors;
};

/**
 * Row-style Hermite normal form: h is in row echelon form, each pivot is
 * positive and the entries above a pivot lie in [0, pivot). The nonzero rows
 * of h are the unique reduced basis of the row lattice of m.
 */
HermiteResult hermite_normal_form(const IntMatrix& m);

SmithResult smith_normal_form(const IntMatrix& m);

/**
 * Z-basis of the left kernel {x in Z^rows : x * m == 0}, in Hermite form.
 * The basis is saturated since it is read off a unimodular transform.
 */
IntMatrix kernel_basis(const IntMatrix& m);

/** Z-basis (Hermite form) of span_Q(gens) intersected with Z^ambient_rank. */
IntMatrix saturate_sublattice(const IntMatrix& gens, std::size_t ambient_rank);

/** Extends the rows of a saturated basis to a unimodular n x n matrix. */
IntMatrix complete_to_unimodular(const IntMatrix& basis);

std::size_t rank(const IntMatrix& m);
Integer determinant(const IntMatrix& m);

/**
 * Some rational x with x * basis == v, or nothing when v is outside the
 * rational row span.
 */
std::optional<std::vector<Rational>> solve_rational(const IntMatrix& basis, const RatVector& v);

/** True iff v is an integer combination of the rows of basis. */
bool lattice_contains(const IntMatrix& basis, const IntVector& v);

/** Coefficients of v in a lattice basis, when v lies in the lattice. */
std::optional<IntVector> lattice_coordinates(const IntMatrix& basis, const IntVector& v);

/** Exact inverse of a square matrix; throws if singular. */
std::vector<std::vector<Rational>> rational_inverse(const IntMatrix& m);

// vector helpers

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Rational dot(const RatVector& a, std::span<const Integer> b);
Integer content(std::span<const Integer> v);
/** v divided by the gcd of its entries; the zero vector is returned unchanged. */
IntVector primitive(IntVector v);
/** Smallest positive integer multiple of a rational vector, made primitive. */
IntVector primitive(const std::vector<Rational>& v);
bool is_zero(std::span<const Integer> v);
IntVector negated(IntVector v);
IntVector add(std::span<const Integer> a, std::span<const Integer> b);
IntVector sub(std::span<const Integer> a, std::span<const Integer> b);
IntVector scaled(std::span<const Integer> a, const Integer& k);
IntVector int_vector(std::initializer_list<long> values);

std::string to_string(std::span<const Integer> v);

}  // namespace toric
