#ifndef PATHDET_RING_HPP
#define PATHDET_RING_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pathdet {

using Integer = mpz_class;
using Rational = mpq_class;

struct RingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown by exact_div when the divisor does not divide the dividend.
struct DivisibilityError : RingError {
    using RingError::RingError;
};

// Thrown by Polynomial::eval when an indeterminate is left unbound.
struct BindingError : RingError {
    using RingError::RingError;
};

struct ParseError : RingError {
    using RingError::RingError;
};

// Indeterminates are interned process-wide; an Indeterminate is a handle to
// a name. Canonical term order for serialization is lexicographic on names.
class Indeterminate {
public:
    explicit Indeterminate(const std::string& name);
    const std::string& name() const;
    std::uint32_t id() const { return id_; }
    friend bool operator==(Indeterminate a, Indeterminate b) { return a.id_ == b.id_; }
    friend bool operator!=(Indeterminate a, Indeterminate b) { return a.id_ != b.id_; }

private:
    std::uint32_t id_;
};

const std::string& indeterminate_name(std::uint32_t id);

// Product of indeterminate powers, kept as (id, exponent) pairs sorted by id
// with all exponents positive. The empty monomial is 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<std::uint32_t, std::uint32_t>> factors);

    bool is_one() const { return factors_.empty(); }
    unsigned degree_of(std::uint32_t id) const;
    unsigned total_degree() const;
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& factors() const { return factors_; }

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    // Requires this->divides(other) == false sense: computes *this / other.
    Monomial divided_by(const Monomial& other) const;
    // Monomial with the power of `id` removed.
    Monomial without(std::uint32_t id) const;

    // Total multiplicative order (lex over ids, earlier id = higher priority).
    int cmp(const Monomial& other) const;
    bool operator<(const Monomial& other) const { return cmp(other) < 0; }
    bool operator==(const Monomial& other) const { return factors_ == other.factors_; }
    bool operator!=(const Monomial& other) const { return !(*this == other); }

private:
    std::vector<std::pair<std::uint32_t, std::uint32_t>> factors_;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Invariant: no stored coefficient is zero; zero is the empty term map.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    Polynomial(long value);  // NOLINT: implicit by design
    Polynomial(const Integer& value);
    Polynomial(const Rational& value);
    static Polynomial variable(const std::string& name);
    static Polynomial variable(Indeterminate v);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Requires is_constant().
    Rational constant_value() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    Polynomial pow(unsigned k) const;

    // Simultaneous substitution; unbound indeterminates are left alone.
    Polynomial substitute(const std::map<std::string, Polynomial>& bindings) const;
    // Exact rational evaluation; throws BindingError on unbound indeterminates.
    Rational eval(const std::map<std::string, Rational>& bindings) const;
    // Coefficient of var^k, as a polynomial in the remaining indeterminates.
    Polynomial coefficient_of(const std::string& var, unsigned k) const;
    unsigned degree_in(const std::string& var) const;
    bool contains(const std::string& var) const;
    std::vector<std::string> variable_names() const;

    // Canonical text form: terms in descending name-lex order, coefficients
    // as integers or num/den fractions, e.g. "alpha^2 - 2*alpha + 1".
    std::string str() const;
    static Polynomial parse(const std::string& text);

    void add_term(const Monomial& m, const Rational& c);

private:
    TermMap terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

// Exact division in the polynomial ring; throws DivisibilityError if b does
// not divide a (and std::domain_error if b is zero).
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

Polynomial pow(const Polynomial& p, unsigned k);
Rational pow(const Rational& x, unsigned k);

}  // namespace pathdet

#endif
