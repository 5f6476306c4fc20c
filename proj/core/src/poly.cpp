#include "agcd/poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "agcd/errors.hpp"

namespace agcd {

namespace {

void trim(std::vector<cx>& c) {
    double max_mag = 0.0;
    for (const cx& v : c) max_mag = std::max(max_mag, std::abs(v));
    if (max_mag == 0.0) {
        c.clear();
        return;
    }
    const double floor = Polynomial::kTrimTol * max_mag;
    while (!c.empty() && std::abs(c.back()) <= floor) c.pop_back();
}

}  // namespace

Polynomial::Polynomial(std::vector<cx> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

Polynomial::Polynomial(std::initializer_list<cx> coeffs) : coeffs_(coeffs) { trim(coeffs_); }

Polynomial Polynomial::constant(cx c) { return Polynomial(std::vector<cx>{c}); }

Polynomial Polynomial::monomial(std::size_t n, cx scale) {
    std::vector<cx> c(n + 1, cx(0.0));
    c[n] = scale;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::from_roots(const std::vector<cx>& roots) {
    std::vector<cx> c{cx(1.0)};
    for (const cx& r : roots) {
        c.push_back(cx(0.0));
        for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - r * c[i];
        c[0] = -r * c[0];
    }
    return Polynomial(std::move(c));
}

cx Polynomial::leading() const {
    if (coeffs_.empty()) throw InvalidInputError("leading coefficient of zero polynomial");
    return coeffs_.back();
}

double Polynomial::norm() const {
    double s = 0.0;
    for (const cx& v : coeffs_) s += std::norm(v);
    return std::sqrt(s);
}

double Polynomial::max_abs() const {
    double m = 0.0;
    for (const cx& v : coeffs_) m = std::max(m, std::abs(v));
    return m;
}

bool Polynomial::is_real() const {
    for (const cx& v : coeffs_)
        if (v.imag() != 0.0) return false;
    return true;
}

std::string Polynomial::to_string() const {
    std::ostringstream os;
    write_polynomial(os, *this);
    return os.str();
}

cx eval(const Polynomial& p, cx x) {
    cx acc(0.0);
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw InvalidInputError("division by zero polynomial");
    const int db = b.degree();
    if (a.degree() < db) return {Polynomial(), a};

    // Synthetic division with extended-precision intermediates; quotient
    // coefficients can grow well beyond the input scale and the residual
    // identity b*q + r = a is only as good as the partial sums.
    using lcx = std::complex<long double>;
    std::vector<lcx> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<lcx> bc(b.coeffs().begin(), b.coeffs().end());
    std::vector<cx> quot(a.degree() - db + 1, cx(0.0));
    const lcx lead = bc.back();
    for (int k = a.degree() - db; k >= 0; --k) {
        const lcx q = rem[k + db] / lead;
        quot[k] = cx(static_cast<double>(q.real()), static_cast<double>(q.imag()));
        if (q == lcx(0.0)) continue;
        for (int i = 0; i <= db; ++i) rem[k + i] -= q * bc[i];
    }
    std::vector<cx> remd(db > 0 ? db : 0);
    for (int i = 0; i < db; ++i)
        remd[i] = cx(static_cast<double>(rem[i].real()), static_cast<double>(rem[i].imag()));
    return {Polynomial(std::move(quot)), Polynomial(std::move(remd))};
}

Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) throw InvalidInputError("monic of zero polynomial");
    if (p.leading() == cx(1.0)) return p;
    std::vector<cx> out = p.coeffs();
    const cx lead = out.back();
    for (cx& v : out) v /= lead;
    out.back() = cx(1.0);  // exact, so monic is idempotent
    return Polynomial(std::move(out));
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
    std::vector<cx> c(std::max(p.coeffs().size(), q.coeffs().size()), cx(0.0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i) + q.coeff(i);
    return Polynomial(std::move(c));
}

Polynomial sub(const Polynomial& p, const Polynomial& q) {
    std::vector<cx> c(std::max(p.coeffs().size(), q.coeffs().size()), cx(0.0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i) - q.coeff(i);
    return Polynomial(std::move(c));
}

Polynomial scale(const Polynomial& p, cx c) {
    std::vector<cx> out = p.coeffs();
    for (cx& v : out) v *= c;
    return Polynomial(std::move(out));
}

Polynomial mul(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return Polynomial();
    std::vector<cx> c(p.coeffs().size() + q.coeffs().size() - 1, cx(0.0));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        for (std::size_t j = 0; j < q.coeffs().size(); ++j) c[i + j] += p.coeffs()[i] * q.coeffs()[j];
    return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
Polynomial operator-(const Polynomial& p, const Polynomial& q) { return sub(p, q); }
Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }
Polynomial operator*(cx c, const Polynomial& p) { return scale(p, c); }

double distance(const Polynomial& p, const Polynomial& q) {
    double s = 0.0;
    const std::size_t n = std::max(p.coeffs().size(), q.coeffs().size());
    for (std::size_t i = 0; i < n; ++i) s += std::norm(p.coeff(i) - q.coeff(i));
    return std::sqrt(s);
}

Polynomial read_polynomial(std::istream& in) {
    std::vector<cx> coeffs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;

        const char* s = line.c_str() + pos;
        char* end = nullptr;
        double re = std::strtod(s, &end);
        if (end == s) throw ParseError("expected real part", lineno);
        s = end;
        double im = std::strtod(s, &end);
        if (end == s) throw ParseError("expected imaginary part", lineno);
        // Only whitespace may follow the two literals.
        for (const char* t = end; *t; ++t)
            if (*t != ' ' && *t != '\t' && *t != '\r')
                throw ParseError("trailing garbage after coefficient", lineno);
        coeffs.emplace_back(re, im);
    }
    return Polynomial(std::move(coeffs));
}

Polynomial read_polynomial_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open '" + path + "' for reading");
    return read_polynomial(in);
}

void write_polynomial(std::ostream& out, const Polynomial& p) {
    char buf[64];
    for (const cx& v : p.coeffs()) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g\n", v.real(), v.imag());
        out << buf;
    }
}

void write_polynomial_file(const std::string& path, const Polynomial& p) {
    std::ofstream out(path);
    if (!out) throw InvalidInputError("cannot open '" + path + "' for writing");
    write_polynomial(out, p);
}

}  // namespace agcd
