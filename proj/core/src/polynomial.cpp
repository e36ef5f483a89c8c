#include "szego/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "szego/binomial.hpp"
#include "szego/error.hpp"

namespace szego {

namespace {

void check_ambient(int n, const char* what) {
    if (n < 0) {
        std::ostringstream msg;
        msg << what << ": ambient degree must be nonnegative, got " << n;
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs, int ambient_degree)
    : ambient_(ambient_degree), coeffs_(std::move(coeffs)) {
    check_ambient(ambient_, "Polynomial");
    const size_t want = static_cast<size_t>(ambient_) + 1;
    if (coeffs_.size() > want) {
        std::ostringstream msg;
        msg << "Polynomial: " << coeffs_.size() << " coefficients exceed ambient degree "
            << ambient_;
        throw std::invalid_argument(msg.str());
    }
    coeffs_.resize(want);
}

Polynomial Polynomial::zero(int ambient_degree) {
    return Polynomial({}, ambient_degree);
}

Polynomial Polynomial::constant(const Rational& c, int ambient_degree) {
    return Polynomial({c}, ambient_degree);
}

Polynomial Polynomial::from_roots(const std::vector<Rational>& roots, int n) {
    check_ambient(n, "from_roots");
    if (static_cast<int>(roots.size()) != n) {
        std::ostringstream msg;
        msg << "from_roots: " << roots.size() << " roots for degree " << n;
        throw std::invalid_argument(msg.str());
    }
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    c[0] = 1;
    size_t len = 1;  // number of filled entries, product of factors so far
    for (const Rational& r : roots) {
        // multiply by (x - r) in place, high to low
        c[len] = c[len - 1];
        for (size_t i = len - 1; i >= 1; --i) {
            c[i] = c[i - 1] - r * c[i];
        }
        c[0] = -r * c[0];
        ++len;
    }
    return Polynomial(std::move(c), n);
}

Polynomial Polynomial::composition_identity(int n) {
    check_ambient(n, "composition_identity");
    const std::vector<BigInt>& row = binomial_row(n);
    std::vector<Rational> c;
    c.reserve(row.size());
    for (const BigInt& b : row) c.emplace_back(b);
    return Polynomial(std::move(c), n);
}

int Polynomial::effective_degree() const {
    for (int i = ambient_; i >= 0; --i) {
        if (!coeffs_[static_cast<size_t>(i)].is_zero()) return i;
    }
    return -1;
}

const Rational& Polynomial::leading_coeff() const {
    const int d = effective_degree();
    if (d < 0) throw std::invalid_argument("leading_coeff: zero polynomial");
    return coeffs_[static_cast<size_t>(d)];
}

int Polynomial::order_at_zero() const {
    for (int i = 0; i <= ambient_; ++i) {
        if (!coeffs_[static_cast<size_t>(i)].is_zero()) return i;
    }
    throw std::invalid_argument("order_at_zero: zero polynomial");
}

Polynomial Polynomial::with_ambient(int n) const {
    const int d = effective_degree();
    if (n < d) {
        std::ostringstream msg;
        msg << "with_ambient: degree " << d << " does not fit in Pol_" << n;
        throw std::invalid_argument(msg.str());
    }
    std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + (d + 1));
    return Polynomial(std::move(c), n);
}

Polynomial Polynomial::trimmed() const {
    const int d = effective_degree();
    return with_ambient(d < 0 ? 0 : d);
}

Rational evaluate(const Polynomial& p, const Rational& x) {
    Rational acc = 0;
    for (int i = p.ambient_degree(); i >= 0; --i) {
        acc = acc * x + p.coeff(i);
    }
    return acc;
}

Polynomial derivative(const Polynomial& p) {
    const int n = p.ambient_degree();
    std::vector<Rational> c;
    if (n >= 1) {
        c.reserve(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) {
            c.push_back(Rational(i) * p.coeff(i));
        }
    }
    return Polynomial(std::move(c), n >= 1 ? n - 1 : 0);
}

Polynomial multiply(const Polynomial& p, const Polynomial& q) {
    const int n = p.ambient_degree() + q.ambient_degree();
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= p.ambient_degree(); ++i) {
        if (p.coeff(i).is_zero()) continue;
        for (int j = 0; j <= q.ambient_degree(); ++j) {
            if (q.coeff(j).is_zero()) continue;
            c[static_cast<size_t>(i + j)] += p.coeff(i) * q.coeff(j);
        }
    }
    return Polynomial(std::move(c), n);
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
    const int n = std::max(p.ambient_degree(), q.ambient_degree());
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= p.ambient_degree(); ++i) c[static_cast<size_t>(i)] += p.coeff(i);
    for (int i = 0; i <= q.ambient_degree(); ++i) c[static_cast<size_t>(i)] += q.coeff(i);
    return Polynomial(std::move(c), n);
}

Polynomial subtract(const Polynomial& p, const Polynomial& q) {
    return add(p, negate(q));
}

Polynomial negate(const Polynomial& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const Rational& a : p.coeffs()) c.push_back(-a);
    return Polynomial(std::move(c), p.ambient_degree());
}

Polynomial scale(const Polynomial& p, const Rational& c) {
    std::vector<Rational> out;
    out.reserve(p.coeffs().size());
    for (const Rational& a : p.coeffs()) out.push_back(c * a);
    return Polynomial(std::move(out), p.ambient_degree());
}

Polynomial scale_argument(const Polynomial& p, const Rational& lambda) {
    std::vector<Rational> out;
    out.reserve(p.coeffs().size());
    Rational power = 1;
    for (const Rational& a : p.coeffs()) {
        out.push_back(a * power);
        power *= lambda;
    }
    return Polynomial(std::move(out), p.ambient_degree());
}

Polynomial pow(const Polynomial& p, int k) {
    if (k < 0) throw std::invalid_argument("pow: negative exponent");
    Polynomial acc = Polynomial::constant(1, 0);
    for (int i = 0; i < k; ++i) acc = multiply(acc, p);
    return acc.with_ambient(k * p.ambient_degree());
}

DivisionResult divmod(const Polynomial& p, const Polynomial& divisor) {
    const int dd = divisor.effective_degree();
    if (dd < 0) throw std::invalid_argument("divmod: zero divisor");
    const int dp = p.effective_degree();
    if (dp < dd) {
        return {Polynomial::zero(0), p.trimmed()};
    }
    std::vector<Rational> rem(p.coeffs().begin(), p.coeffs().begin() + (dp + 1));
    std::vector<Rational> quot(static_cast<size_t>(dp - dd) + 1);
    const Rational& lead = divisor.coeff(dd);
    for (int k = dp - dd; k >= 0; --k) {
        Rational factor = rem[static_cast<size_t>(k + dd)] / lead;
        quot[static_cast<size_t>(k)] = factor;
        if (factor.is_zero()) continue;
        for (int j = 0; j <= dd; ++j) {
            rem[static_cast<size_t>(k + j)] -= factor * divisor.coeff(j);
        }
    }
    rem.resize(static_cast<size_t>(dd));  // entries at and above dd are now zero
    Polynomial r = rem.empty() ? Polynomial::zero(0)
                               : Polynomial(std::move(rem), dd - 1).trimmed();
    return {Polynomial(std::move(quot), dp - dd), std::move(r)};
}

std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& divisor) {
    if (divisor.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
    if (p.is_zero()) return Polynomial::zero(0);
    if (p.effective_degree() < divisor.effective_degree()) return std::nullopt;
    DivisionResult d = divmod(p, divisor);
    if (!d.remainder.is_zero()) return std::nullopt;
    return d.quotient;
}

Polynomial monic_gcd(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() && q.is_zero()) {
        throw std::invalid_argument("monic_gcd: both polynomials are zero");
    }
    Polynomial a = p.trimmed();
    Polynomial b = q.trimmed();
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return scale(a, Rational(1) / a.leading_coeff());
}

Polynomial reverse(const Polynomial& p) {
    const int n = p.ambient_degree();
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        c[static_cast<size_t>(n - i)] = p.coeff(i);
    }
    return Polynomial(std::move(c), n);
}

DiagonalSequence::DiagonalSequence(std::vector<Rational> entries, int ambient_degree)
    : ambient_(ambient_degree), entries_(std::move(entries)) {
    check_ambient(ambient_, "DiagonalSequence");
    if (entries_.size() != static_cast<size_t>(ambient_) + 1) {
        std::ostringstream msg;
        msg << "DiagonalSequence: " << entries_.size() << " entries for ambient degree "
            << ambient_;
        throw std::invalid_argument(msg.str());
    }
}

DiagonalSequence diagonal_of(const Polynomial& p) {
    const int n = p.ambient_degree();
    const std::vector<BigInt>& row = binomial_row(n);
    std::vector<Rational> entries;
    entries.reserve(row.size());
    for (int i = 0; i <= n; ++i) {
        entries.push_back(p.coeff(i) / Rational(row[static_cast<size_t>(i)]));
    }
    return DiagonalSequence(std::move(entries), n);
}

Polynomial apply_diagonal(const DiagonalSequence& t, const Polynomial& p) {
    if (t.ambient_degree() != p.ambient_degree()) {
        std::ostringstream msg;
        msg << "apply_diagonal: operator on Pol_" << t.ambient_degree()
            << " applied to element of Pol_" << p.ambient_degree();
        throw std::invalid_argument(msg.str());
    }
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (int i = 0; i <= p.ambient_degree(); ++i) {
        c.push_back(t.entry(i) * p.coeff(i));
    }
    return Polynomial(std::move(c), p.ambient_degree());
}

Polynomial schur_szego(const Polynomial& p, const Polynomial& q) {
    if (p.ambient_degree() != q.ambient_degree()) {
        std::ostringstream msg;
        msg << "schur_szego: ambient degrees " << p.ambient_degree() << " and "
            << q.ambient_degree() << " differ";
        throw std::invalid_argument(msg.str());
    }
    const int n = p.ambient_degree();
    const std::vector<BigInt>& row = binomial_row(n);
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        c[static_cast<size_t>(i)] =
            p.coeff(i) * q.coeff(i) / Rational(row[static_cast<size_t>(i)]);
    }
    return Polynomial(std::move(c), n);
}

}  // namespace szego
