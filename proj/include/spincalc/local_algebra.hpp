#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "spincalc/laurent.hpp"

namespace spincalc {

// Truncated polynomial algebra over Laurent coefficients: a fixed set of named
// nilpotent generators, with every monomial of total generator-degree above
// the cap identically zero. Models the degree-bounded insertions (psi, ch_1,
// lambda_1, ...) living on a single vertex moduli of known dimension.
class LocalAlgebra {
public:
    // Monomial in the generators: sorted generator indices, with repetition.
    using Mono = std::vector<int>;

    explicit LocalAlgebra(int cap);

    int add_generator(const std::string& name, int degree = 1);
    int cap() const;
    int generator_count() const;
    const std::string& generator_name(int idx) const;
    int generator_degree(int idx) const;
    int mono_degree(const Mono& m) const;

    class Element;
    Element zero() const;
    Element scalar(const LaurentPoly& c) const;
    Element gen(int idx) const;

    struct Desc {
        int cap;
        std::vector<std::string> names;
        std::vector<int> degrees;
    };

    class Element {
    public:
        Element() = default;

        bool is_zero() const { return terms_.empty(); }
        // Coefficient of a generator monomial (empty Mono = the scalar part).
        LaurentPoly coeff(const Mono& m) const;
        const std::map<Mono, LaurentPoly>& terms() const { return terms_; }
        bool constant_term_is_zero() const;

        Element operator-() const;
        Element& operator+=(const Element& o);
        Element& operator-=(const Element& o);
        Element operator*(const Element& o) const;
        Element& operator*=(const Element& o) { return *this = *this * o; }
        Element& operator*=(const LaurentPoly& c);
        Element pow(unsigned k) const;

        friend Element operator+(Element a, const Element& b) { return a += b; }
        friend Element operator-(Element a, const Element& b) { return a -= b; }
        friend Element operator*(Element a, const LaurentPoly& c) { return a *= c; }
        friend bool operator==(const Element& a, const Element& b) {
            return a.terms_ == b.terms_;
        }

        std::string str() const;

    private:
        friend class LocalAlgebra;
        friend Element geometric_inverse(const LaurentPoly& w, const Element& n);

        void insert(const Mono& m, const LaurentPoly& c);

        std::shared_ptr<const Desc> desc_;
        std::map<Mono, LaurentPoly> terms_;
    };

private:
    std::shared_ptr<Desc> desc_;
};

// Sum_{j>=0} n^j / w^{j+1}, the cap-truncated expansion of 1/(w - n).
// w must be a single nonzero Laurent term; n must have zero constant term.
LocalAlgebra::Element geometric_inverse(const LaurentPoly& w,
                                        const LocalAlgebra::Element& n);

}  // namespace spincalc
