#include "partdist/exactnum.hpp"

#include <ostream>
#include <stdexcept>

namespace partdist {

Rational::Rational(const BigInt& numerator, const BigInt& denominator)
{
    if (denominator == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(long numerator, long denominator)
    : Rational(BigInt(numerator), BigInt(denominator))
{
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    const auto parse_int = [&](std::string_view digits) {
        BigInt out;
        const std::string s(digits);
        if (s.empty() || out.set_str(s, 10) != 0) {
            throw std::invalid_argument("malformed rational: " + std::string(text));
        }
        return out;
    };
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    const BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    return Rational(parse_int(text.substr(0, slash)), den);
}

std::string Rational::to_string() const
{
    if (value_.get_den() == 1) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::abs() const
{
    Rational out;
    out.value_ = ::abs(value_);
    return out;
}

Rational Rational::reciprocal() const
{
    return Rational(1) / *this;
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) {
        throw std::domain_error("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const
{
    Rational out;
    out.value_ = -value_;
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.to_string();
}

std::string to_string(const BigInt& value)
{
    return value.get_str();
}

BigInt factorial(unsigned n)
{
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

BigInt double_factorial_odd(unsigned n)
{
    BigInt out = 1;
    for (unsigned k = 3; k <= 2 * n + 1; k += 2) {
        out *= k;
    }
    return out;
}

BigInt binomial(unsigned n, unsigned k)
{
    if (k > n) {
        return 0;
    }
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

BigInt pow(const BigInt& base, unsigned exponent)
{
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

bool RationalMatrix::is_symmetric() const
{
    if (rows_ != cols_) {
        return false;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r + 1; c < cols_; ++c) {
            if ((*this)(r, c) != (*this)(c, r)) {
                return false;
            }
        }
    }
    return true;
}

namespace {

void require_same_shape(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix shape mismatch");
    }
}

} // namespace

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b)
{
    require_same_shape(a, b);
    RationalMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) {
        out.data_[i] += b.data_[i];
    }
    return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b)
{
    require_same_shape(a, b);
    RationalMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) {
        out.data_[i] -= b.data_[i];
    }
    return out;
}

RationalMatrix outer(const std::vector<Rational>& u, const std::vector<Rational>& v)
{
    RationalMatrix out(u.size(), v.size());
    for (std::size_t r = 0; r < u.size(); ++r) {
        for (std::size_t c = 0; c < v.size(); ++c) {
            out(r, c) = u[r] * v[c];
        }
    }
    return out;
}

std::vector<Rational> solve_exact(RationalMatrix a, std::vector<Rational> b)
{
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) {
        throw std::invalid_argument("solve_exact: system must be square");
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col).abs() > a(pivot, col).abs()) {
                pivot = r;
            }
        }
        if (a(pivot, col).is_zero()) {
            throw SingularSystemError("singular system: no pivot in column " + std::to_string(col));
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(pivot, c), a(col, c));
            }
            std::swap(b[pivot], b[col]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero()) {
                continue;
            }
            const Rational factor = a(r, col) / a(col, col);
            for (std::size_t c = col; c < n; ++c) {
                a(r, c) -= factor * a(col, c);
            }
            b[r] -= factor * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t k = n; k-- > 0;) {
        Rational acc = b[k];
        for (std::size_t c = k + 1; c < n; ++c) {
            acc -= a(k, c) * x[c];
        }
        x[k] = acc / a(k, k);
    }
    return x;
}

} // namespace partdist
