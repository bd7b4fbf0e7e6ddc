#ifndef SYZ_MONOMIAL_HPP
#define SYZ_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace syz {

// Dense exponent vector. Variable counts stay small here, so dense wins on
// simplicity and comparison speed.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int nvars) : e_(nvars, 0), deg_(0) {}
    explicit Monomial(std::vector<int> exps);

    int nvars() const { return int(e_.size()); }
    int deg() const { return deg_; }
    int operator[](int i) const { return e_[i]; }
    const std::vector<int>& exponents() const { return e_; }
    bool is_one() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial div(const Monomial& o) const; // exact; caller ensures o | this
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& o) const;

    // drop/insert one variable slot (used for tag-variable ring extensions)
    Monomial insert_var_front() const;
    Monomial drop_var_front() const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    std::vector<int> e_;
    int deg_ = 0;
};

// Global monomial orders (1 is smallest, multiplicative, total).
// ElimFirstGrevlex compares the exponent of variable 0 first and breaks ties
// by grevlex on the remaining variables: an elimination order for var 0.
enum class OrderKind { Grevlex, Lex, ElimFirstGrevlex };

struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;

    // <0 if a < b, 0 if equal, >0 if a > b
    int cmp(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
    bool operator==(const MonomialOrder&) const = default;
    std::string str() const;
};

} // namespace syz

#endif
