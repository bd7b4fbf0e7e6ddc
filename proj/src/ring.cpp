#include "syz/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace syz {

QuotientRing::QuotientRing(std::vector<std::string> variables, FieldSpec field,
                           std::vector<Polynomial> ideal_gens, MonomialOrder order,
                           std::vector<std::vector<Polynomial>> declared_min_primes,
                           const Limits& lim)
    : names_(std::move(variables)), field_(field), ord_(order),
      ideal_(std::move(ideal_gens)), declared_primes_(std::move(declared_min_primes)) {
    field_.validate();
    if (names_.empty()) throw invariant_error("ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty() || !seen.insert(n).second)
            throw invariant_error("empty or duplicate variable name");
        if (n.size() > 1) single_letter_vars_ = false;
    }
    for (const auto& g : ideal_) {
        auto h = g.homogeneous_degree();
        if (h.is_zero) throw invariant_error("zero ideal generator");
        if (h.mixed || h.degree < 1)
            throw invariant_error("ideal generators must be homogeneous of positive degree");
        if (g.size() > 1) ideal_monomial_ = false;
    }
    gb_ = gb_of_ideal(ideal_, lim);
}

Polynomial QuotientRing::nf_mod_ideal(const Polynomial& p) const {
    return normal_form(p, gb_);
}

Polynomial QuotientRing::var(int i, int power) const {
    std::vector<int> e(nvars(), 0);
    e[i] = power;
    return Polynomial::term(Monomial(std::move(e)), Coeff::one(field_), ord_);
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    const QuotientRing& ring;
    bool juxtapose;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& why) {
        throw parse_error(why + " at position " + std::to_string(pos) + " in \"" + s + "\"");
    }

    int match_var() { // returns index or -1; longest name wins
        skip_ws();
        int best = -1;
        std::size_t best_len = 0;
        for (int i = 0; i < ring.nvars(); ++i) {
            const auto& n = ring.names()[i];
            if (n.size() > best_len && s.compare(pos, n.size(), n) == 0) {
                best = i;
                best_len = n.size();
            }
        }
        if (best >= 0) pos += best_len;
        return best;
    }

    mpz_class read_nat() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected number");
        return mpz_class(s.substr(start, pos - start));
    }

    int read_exponent() {
        mpz_class e = read_nat();
        if (e > 1000) fail("exponent too large");
        return int(e.get_si());
    }

    Polynomial base() {
        char c = peek();
        if (c == '(') {
            ++pos;
            Polynomial p = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = read_nat();
            mpz_class den = 1;
            skip_ws();
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                den = read_nat();
            }
            return Polynomial::constant(Coeff::from_fraction(num, den, ring.field()),
                                        ring.nvars(), ring.order());
        }
        int v = match_var();
        if (v >= 0) return ring.var(v);
        if (std::isalpha(static_cast<unsigned char>(c))) fail("unknown variable");
        fail("unexpected character");
    }

    Polynomial factor() {
        Polynomial p = base();
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            int e = read_exponent();
            Polynomial r = ring.one();
            for (int k = 0; k < e; ++k) r = r * p;
            return r;
        }
        return p;
    }

    bool at_juxtaposed_factor() {
        skip_ws();
        if (pos >= s.size()) return false;
        char c = s[pos];
        if (c == '(') return juxtapose;
        if (std::isalpha(static_cast<unsigned char>(c))) {
            if (!juxtapose) fail("implicit multiplication requires single-letter variables; use '*'");
            return true;
        }
        return false;
    }

    Polynomial term() {
        Polynomial p = factor();
        while (true) {
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                p = p * factor();
            } else if (at_juxtaposed_factor()) {
                p = p * factor();
            } else {
                break;
            }
        }
        return p;
    }

    Polynomial expr() {
        Polynomial p = ring.zero();
        bool neg = false;
        char c = peek();
        if (c == '+' || c == '-') {
            neg = c == '-';
            ++pos;
        }
        p = neg ? -term() : term();
        while (true) {
            c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                Polynomial t = term();
                p = c == '+' ? p + t : p - t;
            } else {
                break;
            }
        }
        return p;
    }
};

} // namespace

Polynomial QuotientRing::parse(const std::string& text) const {
    Parser p{text, 0, *this, single_letter_vars_};
    if (p.eof()) throw parse_error("empty polynomial text");
    Polynomial r = p.expr();
    if (!p.eof()) p.fail("trailing input");
    return r;
}

Polynomial parse_poly(const std::string& text, const QuotientRing& ring) {
    return ring.parse(text);
}

} // namespace syz
