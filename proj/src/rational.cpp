#include "moricone/rational.hpp"

#include "moricone/errors.hpp"

#include <algorithm>
#include <cctype>

namespace moricone {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw InputError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Integer parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) throw InputError("malformed rational '" + std::string(s) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '-') throw InputError("negative denominator in '" + std::string(text) + "'");
    return make_rational(num, parse_integer(den_text));
}

std::string to_string(const Rational& value) {
    Rational q = value;
    q.canonicalize();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

ClassVector::ClassVector(std::initializer_list<long> ints) {
    coords_.reserve(ints.size());
    for (long x : ints) coords_.emplace_back(x);
}

ClassVector ClassVector::unit(std::size_t dim, std::size_t i) {
    ClassVector v(dim);
    v[i] = 1;
    return v;
}

bool ClassVector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

bool ClassVector::is_integral() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

ClassVector& ClassVector::operator+=(const ClassVector& o) {
    if (o.size() != size()) throw DimensionMismatch("vector addition: lengths differ");
    for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

ClassVector& ClassVector::operator-=(const ClassVector& o) {
    if (o.size() != size()) throw DimensionMismatch("vector subtraction: lengths differ");
    for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

ClassVector& ClassVector::operator*=(const Rational& s) {
    for (auto& c : coords_) c *= s;
    return *this;
}

std::strong_ordering operator<=>(const ClassVector& a, const ClassVector& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

ClassVector ClassVector::concat(const ClassVector& tail) const {
    std::vector<Rational> out = coords_;
    out.insert(out.end(), tail.coords_.begin(), tail.coords_.end());
    return ClassVector(std::move(out));
}

ClassVector ClassVector::primitive() const {
    Integer lcm_den = 1;
    for (const auto& c : coords_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    Integer g = 0;
    std::vector<Integer> ints;
    ints.reserve(size());
    for (const auto& c : coords_) {
        Integer v = c.get_num() * (lcm_den / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        ints.push_back(std::move(v));
    }
    ClassVector out(size());
    if (g == 0) return out;
    for (std::size_t i = 0; i < size(); ++i) out[i] = Rational(ints[i] / g);
    return out;
}

std::vector<std::string> ClassVector::to_strings() const {
    std::vector<std::string> out;
    out.reserve(size());
    for (const auto& c : coords_) out.push_back(to_string(c));
    return out;
}

Rational dot(const ClassVector& a, const ClassVector& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("pairing of vectors of length " + std::to_string(a.size()) + " and " +
                                std::to_string(b.size()));
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

std::ostream& operator<<(std::ostream& os, const ClassVector& v) {
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
    return os << ')';
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, ClassVector(cols)) {}

RationalMatrix::RationalMatrix(std::size_t cols, std::vector<ClassVector> rows) : cols_(cols), rows_(std::move(rows)) {
    for (const auto& r : rows_)
        if (r.size() != cols_) throw DimensionMismatch("matrix row length differs from column count");
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::block_diagonal(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

ClassVector RationalMatrix::apply(const ClassVector& v) const {
    if (v.size() != cols_)
        throw DimensionMismatch("matrix with " + std::to_string(cols_) + " columns applied to vector of length " +
                                std::to_string(v.size()));
    ClassVector out(rows());
    for (std::size_t i = 0; i < rows(); ++i) out[i] = dot(rows_[i], v);
    return out;
}

RationalMatrix RationalMatrix::compose_after(const RationalMatrix& first) const {
    if (first.rows() != cols_) throw DimensionMismatch("matrix composition: inner dimensions differ");
    RationalMatrix m(rows(), first.cols());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if ((*this)(i, k) == 0) continue;
            for (std::size_t j = 0; j < first.cols(); ++j) m(i, j) += (*this)(i, k) * first(k, j);
        }
    return m;
}

std::size_t rank_of(std::span<const ClassVector> vectors, std::size_t dim) {
    std::vector<ClassVector> rows(vectors.begin(), vectors.end());
    std::size_t rank = 0;
    for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Rational f = rows[r][col] / rows[rank][col];
            for (std::size_t j = col; j < dim; ++j) rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace moricone
