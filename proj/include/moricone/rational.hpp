#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace moricone {

// mpq_class keeps numerator/denominator reduced with a positive denominator
// after every arithmetic operation. Values built from raw num/den pairs must
// go through make_rational().
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q". Throws InputError on malformed text or q == 0.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Coordinates of a divisor or curve class in a fixed basis. Curves are stored
/// as their intersection vectors against the divisor basis, so the pairing of
/// a divisor with a curve is the plain dot product.
class ClassVector {
public:
    ClassVector() = default;
    explicit ClassVector(std::size_t dim) : coords_(dim) {}
    explicit ClassVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    ClassVector(std::initializer_list<long> ints);

    static ClassVector unit(std::size_t dim, std::size_t i);

    std::size_t size() const noexcept { return coords_.size(); }
    bool empty() const noexcept { return coords_.empty(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    std::span<const Rational> coords() const noexcept { return coords_; }

    auto begin() const noexcept { return coords_.begin(); }
    auto end() const noexcept { return coords_.end(); }

    bool is_zero() const;
    bool is_integral() const;

    ClassVector& operator+=(const ClassVector& o);
    ClassVector& operator-=(const ClassVector& o);
    ClassVector& operator*=(const Rational& s);

    friend ClassVector operator+(ClassVector a, const ClassVector& b) { return a += b; }
    friend ClassVector operator-(ClassVector a, const ClassVector& b) { return a -= b; }
    friend ClassVector operator*(const Rational& s, ClassVector a) { return a *= s; }
    friend ClassVector operator-(ClassVector a) { return a *= Rational(-1); }

    friend bool operator==(const ClassVector& a, const ClassVector& b) { return a.coords_ == b.coords_; }
    /// Lexicographic on coordinates; shorter vectors first.
    friend std::strong_ordering operator<=>(const ClassVector& a, const ClassVector& b);

    /// Concatenation; used to place factor classes into product bases.
    ClassVector concat(const ClassVector& tail) const;

    /// Positive rescaling to an integer vector with coprime entries. Zero stays zero.
    ClassVector primitive() const;

    std::vector<std::string> to_strings() const;

private:
    std::vector<Rational> coords_;
};

/// Throws DimensionMismatch when the lengths differ.
Rational dot(const ClassVector& a, const ClassVector& b);

std::ostream& operator<<(std::ostream& os, const ClassVector& v);

/// Row-major rational matrix; each row is a ClassVector of length cols().
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::size_t cols, std::vector<ClassVector> rows);

    static RationalMatrix identity(std::size_t n);
    /// Block-diagonal direct sum.
    static RationalMatrix block_diagonal(const RationalMatrix& a, const RationalMatrix& b);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    const ClassVector& row(std::size_t i) const { return rows_[i]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    Rational& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }

    ClassVector apply(const ClassVector& v) const;
    RationalMatrix compose_after(const RationalMatrix& first) const;  // this * first

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<ClassVector> rows_;
};

/// Rank of a set of vectors by exact Gaussian elimination.
std::size_t rank_of(std::span<const ClassVector> vectors, std::size_t dim);

}  // namespace moricone
