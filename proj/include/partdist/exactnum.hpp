#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace partdist {

using BigInt = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}       // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(value) {}        // NOLINT(google-explicit-constructor)
    Rational(const BigInt& value) : value_(value) {} // NOLINT(google-explicit-constructor)

    /// Throws std::domain_error when denominator is zero.
    Rational(const BigInt& numerator, const BigInt& denominator);
    Rational(long numerator, long denominator);

    /// Parses "p" or "p/q" (optionally signed). Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// "p/q", with "/q" omitted when q == 1.
    std::string to_string() const;
    double to_double() const { return value_.get_d(); }

    Rational abs() const;
    /// Throws std::domain_error on zero.
    Rational reciprocal() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error when rhs is zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

std::string to_string(const BigInt& value);

BigInt factorial(unsigned n);

/// (2n+1)!! = 1*3*5*...*(2n+1).
BigInt double_factorial_odd(unsigned n);

/// C(n, k); zero when k > n.
BigInt binomial(unsigned n, unsigned k);

BigInt pow(const BigInt& base, unsigned exponent);

/// Dense row-major matrix of rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix square(std::size_t n) { return RationalMatrix(n, n); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    // 0-based access.
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_symmetric() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;
    friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Outer product u * v'.
RationalMatrix outer(const std::vector<Rational>& u, const std::vector<Rational>& v);

/// Solves the square system A x = b exactly by Gaussian elimination with
/// partial pivoting on the largest-magnitude entry. Throws SingularSystemError.
std::vector<Rational> solve_exact(RationalMatrix a, std::vector<Rational> b);

class SingularSystemError : public std::exception {
public:
    explicit SingularSystemError(std::string what) : what_(std::move(what)) {}
    const char* what() const noexcept override { return what_.c_str(); }

private:
    std::string what_;
};

} // namespace partdist
