#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace agcd {

using cx = std::complex<double>;

/// Univariate polynomial with complex coefficients in the monomial basis,
/// stored in ascending degree order: coeffs()[i] multiplies x^i.
///
/// A Polynomial is always canonical: trailing coefficients whose magnitude is
/// at or below kTrimTol times the largest coefficient magnitude are dropped.
/// The zero polynomial has an empty coefficient vector and degree -1.
class Polynomial {
  public:
    /// Relative magnitude below which a coefficient counts as zero when
    /// canonicalizing.  Uniform with the rank tolerances used downstream.
    static constexpr double kTrimTol = 1e-12;

    Polynomial() = default;
    explicit Polynomial(std::vector<cx> coeffs);
    Polynomial(std::initializer_list<cx> coeffs);

    /// The constant polynomial c.
    static Polynomial constant(cx c);
    /// The monomial x^n.
    static Polynomial monomial(std::size_t n, cx scale = cx(1.0));
    /// Monic polynomial with the given roots, expanded by repeated
    /// multiplication with (x - root).
    static Polynomial from_roots(const std::vector<cx>& roots);

    const std::vector<cx>& coeffs() const { return coeffs_; }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    cx leading() const;
    /// Coefficient of x^i; zero outside the stored range.
    cx coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : cx(0.0); }

    /// Euclidean norm of the coefficient vector.
    double norm() const;
    /// Largest coefficient magnitude (0 for the zero polynomial).
    double max_abs() const;
    /// True if every coefficient has exactly zero imaginary part.
    bool is_real() const;

    std::string to_string() const;

  private:
    std::vector<cx> coeffs_;
};

/// Horner evaluation at x.
cx eval(const Polynomial& p, cx x);

/// Euclidean division: a = b*q + r with deg r < deg b.
/// Throws InvalidInputError if b is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Divide by the leading coefficient.  Throws InvalidInputError on zero input.
Polynomial monic(const Polynomial& p);

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial sub(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, cx c);
Polynomial mul(const Polynomial& p, const Polynomial& q);

Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const Polynomial& p, const Polynomial& q);
Polynomial operator*(cx c, const Polynomial& p);

/// Euclidean distance between coefficient vectors, the shorter one
/// zero-padded.
double distance(const Polynomial& p, const Polynomial& q);

/// Text format used by the CLI: one coefficient per line, ascending degree,
/// "re im" as two floating-point literals separated by one space.  Blank
/// lines and lines whose first non-space character is '#' are ignored.
/// Throws ParseError with a 1-based line number on malformed input.
Polynomial read_polynomial(std::istream& in);
Polynomial read_polynomial_file(const std::string& path);
void write_polynomial(std::ostream& out, const Polynomial& p);
void write_polynomial_file(const std::string& path, const Polynomial& p);

}  // namespace agcd
