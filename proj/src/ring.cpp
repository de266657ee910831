#include "pathdet/ring.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace pathdet {

namespace {

struct InternTable {
    std::mutex mutex;
    std::unordered_map<std::string, std::uint32_t> by_name;
    std::vector<std::string> names;
};

InternTable& intern_table() {
    static InternTable table;
    return table;
}

std::uint32_t intern(const std::string& name) {
    if (name.empty()) throw RingError("indeterminate name must be non-empty");
    InternTable& table = intern_table();
    std::lock_guard<std::mutex> lock(table.mutex);
    auto it = table.by_name.find(name);
    if (it != table.by_name.end()) return it->second;
    const auto id = static_cast<std::uint32_t>(table.names.size());
    table.names.push_back(name);
    table.by_name.emplace(name, id);
    return id;
}

}  // namespace

Indeterminate::Indeterminate(const std::string& name) : id_(intern(name)) {}

const std::string& Indeterminate::name() const { return indeterminate_name(id_); }

const std::string& indeterminate_name(std::uint32_t id) {
    InternTable& table = intern_table();
    std::lock_guard<std::mutex> lock(table.mutex);
    return table.names.at(id);
}

Monomial::Monomial(std::vector<std::pair<std::uint32_t, std::uint32_t>> factors)
    : factors_(std::move(factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].second == 0) throw RingError("monomial exponent must be positive");
        if (i > 0 && factors_[i - 1].first >= factors_[i].first)
            throw RingError("monomial factors must be sorted by indeterminate");
    }
}

unsigned Monomial::degree_of(std::uint32_t id) const {
    for (const auto& [vid, exp] : factors_)
        if (vid == id) return exp;
    return 0;
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
}

bool Monomial::divides(const Monomial& other) const {
    std::size_t j = 0;
    for (const auto& [vid, exp] : factors_) {
        while (j < other.factors_.size() && other.factors_[j].first < vid) ++j;
        if (j == other.factors_.size() || other.factors_[j].first != vid ||
            other.factors_[j].second < exp)
            return false;
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    std::size_t i = 0, j = 0;
    while (i < factors_.size() || j < other.factors_.size()) {
        if (j == other.factors_.size() ||
            (i < factors_.size() && factors_[i].first < other.factors_[j].first)) {
            out.factors_.push_back(factors_[i++]);
        } else if (i == factors_.size() || other.factors_[j].first < factors_[i].first) {
            out.factors_.push_back(other.factors_[j++]);
        } else {
            out.factors_.emplace_back(factors_[i].first, factors_[i].second + other.factors_[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

Monomial Monomial::divided_by(const Monomial& other) const {
    Monomial out;
    std::size_t j = 0;
    for (const auto& [vid, exp] : factors_) {
        unsigned sub = 0;
        while (j < other.factors_.size() && other.factors_[j].first < vid) ++j;
        if (j < other.factors_.size() && other.factors_[j].first == vid) sub = other.factors_[j].second;
        if (sub > exp) throw RingError("monomial division is not exact");
        if (exp > sub) out.factors_.emplace_back(vid, exp - sub);
    }
    return out;
}

Monomial Monomial::without(std::uint32_t id) const {
    Monomial out;
    for (const auto& f : factors_)
        if (f.first != id) out.factors_.push_back(f);
    return out;
}

int Monomial::cmp(const Monomial& other) const {
    std::size_t i = 0, j = 0;
    while (i < factors_.size() && j < other.factors_.size()) {
        if (factors_[i].first != other.factors_[j].first) {
            // The monomial with a positive power of the higher-priority
            // (smaller-id) indeterminate is the larger one.
            return factors_[i].first < other.factors_[j].first ? 1 : -1;
        }
        if (factors_[i].second != other.factors_[j].second)
            return factors_[i].second > other.factors_[j].second ? 1 : -1;
        ++i;
        ++j;
    }
    if (i < factors_.size()) return 1;
    if (j < other.factors_.size()) return -1;
    return 0;
}

Polynomial::Polynomial(long value) {
    if (value != 0) terms_.emplace(Monomial{}, Rational(value));
}

Polynomial::Polynomial(const Integer& value) {
    if (value != 0) terms_.emplace(Monomial{}, Rational(value));
}

Polynomial::Polynomial(const Rational& value) {
    if (value != 0) terms_.emplace(Monomial{}, value);
}

Polynomial Polynomial::variable(const std::string& name) {
    return variable(Indeterminate(name));
}

Polynomial Polynomial::variable(Indeterminate v) {
    Polynomial p;
    p.terms_.emplace(Monomial({{v.id(), 1}}), Rational(1));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw RingError("polynomial is not constant: " + str());
    return terms_.begin()->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial result(1L);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k > 0) base *= base;
    }
    return result;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& bindings) const {
    std::map<std::uint32_t, const Polynomial*> by_id;
    for (const auto& [name, p] : bindings) by_id.emplace(Indeterminate(name).id(), &p);
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        Polynomial term(c);
        Monomial untouched;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> kept;
        for (const auto& [vid, exp] : m.factors()) {
            auto it = by_id.find(vid);
            if (it == by_id.end())
                kept.emplace_back(vid, exp);
            else
                term *= it->second->pow(exp);
        }
        Polynomial kept_poly;
        kept_poly.add_term(Monomial(std::move(kept)), Rational(1));
        out += term * kept_poly;
    }
    return out;
}

Rational Polynomial::eval(const std::map<std::string, Rational>& bindings) const {
    std::map<std::uint32_t, Rational> by_id;
    for (const auto& [name, v] : bindings) by_id.emplace(Indeterminate(name).id(), v);
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (const auto& [vid, exp] : m.factors()) {
            auto it = by_id.find(vid);
            if (it == by_id.end())
                throw BindingError("unbound indeterminate: " + indeterminate_name(vid));
            term *= pathdet::pow(it->second, exp);
        }
        total += term;
    }
    return total;
}

Polynomial Polynomial::coefficient_of(const std::string& var, unsigned k) const {
    const std::uint32_t id = Indeterminate(var).id();
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        if (m.degree_of(id) == k) out.add_term(m.without(id), c);
    }
    return out;
}

unsigned Polynomial::degree_in(const std::string& var) const {
    const std::uint32_t id = Indeterminate(var).id();
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree_of(id));
    return d;
}

bool Polynomial::contains(const std::string& var) const {
    const std::uint32_t id = Indeterminate(var).id();
    for (const auto& [m, c] : terms_)
        if (m.degree_of(id) > 0) return true;
    return false;
}

std::vector<std::string> Polynomial::variable_names() const {
    std::vector<std::uint32_t> ids;
    for (const auto& [m, c] : terms_)
        for (const auto& f : m.factors()) ids.push_back(f.first);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<std::string> names;
    names.reserve(ids.size());
    for (auto id : ids) names.push_back(indeterminate_name(id));
    std::sort(names.begin(), names.end());
    return names;
}

namespace {

using NamedMonomial = std::vector<std::pair<std::string, unsigned>>;

NamedMonomial named_factors(const Monomial& m) {
    NamedMonomial out;
    out.reserve(m.factors().size());
    for (const auto& [vid, exp] : m.factors()) out.emplace_back(indeterminate_name(vid), exp);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

// Name-lex order, larger first: earlier names dominate, then larger exponents.
bool named_greater(const NamedMonomial& a, const NamedMonomial& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first != b[j].first) return a[i].first < b[j].first;
        if (a[i].second != b[j].second) return a[i].second > b[j].second;
        ++i;
        ++j;
    }
    return i < a.size();
}

std::string coeff_str(const Rational& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

}  // namespace

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<NamedMonomial, Rational>> items;
    items.reserve(terms_.size());
    for (const auto& [m, c] : terms_) items.emplace_back(named_factors(m), c);
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return named_greater(a.first, b.first); });

    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, coeff] : items) {
        Rational c = coeff;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (mono.empty()) {
            os << coeff_str(c);
        } else {
            bool star = false;
            if (c != 1) {
                os << coeff_str(c);
                star = true;
            }
            for (const auto& [name, exp] : mono) {
                if (star) os << "*";
                os << name;
                if (exp > 1) os << "^" << exp;
                star = true;
            }
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

namespace {

// Recursive-descent parser for the canonical grammar plus parentheses.
struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    Integer parse_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer at position " + std::to_string(pos));
        return Integer(text.substr(start, pos - start));
    }

    Polynomial parse_atom() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Polynomial inner = parse_expr();
            if (!eat(')')) throw ParseError("expected ')' at position " + std::to_string(pos));
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = parse_integer();
            if (eat('/')) {
                Integer den = parse_integer();
                if (den == 0) throw ParseError("zero denominator");
                Rational q(num, den);
                q.canonicalize();
                return Polynomial(q);
            }
            return Polynomial(num);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            return Polynomial::variable(text.substr(start, pos - start));
        }
        throw ParseError(std::string("unexpected character '") + c + "' at position " +
                         std::to_string(pos));
    }

    Polynomial parse_factor() {
        Polynomial base = parse_atom();
        if (eat('^')) {
            Integer e = parse_integer();
            if (e < 0 || !e.fits_ulong_p()) throw ParseError("unsupported exponent");
            return base.pow(static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    Polynomial parse_term() {
        Polynomial p = parse_factor();
        while (peek() == '*') {
            eat('*');
            p *= parse_factor();
        }
        return p;
    }

    Polynomial parse_expr() {
        Polynomial total;
        bool negative = false;
        if (eat('-'))
            negative = true;
        else
            eat('+');
        Polynomial term = parse_term();
        total += negative ? -term : term;
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                eat(c);
                Polynomial next = parse_term();
                total += (c == '-') ? -next : next;
            } else {
                break;
            }
        }
        return total;
    }
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text) {
    Parser parser(text);
    Polynomial p = parser.parse_expr();
    parser.skip_ws();
    if (parser.pos != text.size())
        throw ParseError("trailing input at position " + std::to_string(parser.pos));
    return p;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return Polynomial(c) * p; }

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    Polynomial quotient;
    Polynomial remainder = a;
    const auto& lead_b = *b.terms().rbegin();
    while (!remainder.is_zero()) {
        const auto& lead_r = *remainder.terms().rbegin();
        if (!lead_b.first.divides(lead_r.first))
            throw DivisibilityError("inexact polynomial division: (" + a.str() + ") / (" +
                                    b.str() + ")");
        Polynomial t;
        t.add_term(lead_r.first.divided_by(lead_b.first), lead_r.second / lead_b.second);
        quotient += t;
        remainder -= t * b;
    }
    return quotient;
}

Polynomial pow(const Polynomial& p, unsigned k) { return p.pow(k); }

Rational pow(const Rational& x, unsigned k) {
    // num and den stay coprime under powering, so no canonicalization needed.
    Rational out;
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(x.get_mpq_t()), k);
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(x.get_mpq_t()), k);
    return out;
}

}  // namespace pathdet
