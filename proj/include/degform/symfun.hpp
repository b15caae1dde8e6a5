#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "degform/partition.hpp"
#include "degform/rational.hpp"

namespace degform {

enum class Basis { monomial, elementary, powersum };

inline std::string basis_name(Basis b) {
    switch (b) {
    case Basis::monomial:
        return "monomial";
    case Basis::elementary:
        return "elementary";
    case Basis::powersum:
        return "powersum";
    }
    return "?";
}

/* Dense-by-monomial polynomial in a fixed number of variables, keyed by
 * exponent vector. This is the brute-force expansion representation used to
 * compute (and in tests, to verify) basis transitions. */
class ExponentPolynomial {
  public:
    explicit ExponentPolynomial(int num_vars) : num_vars_(num_vars) {
        if (num_vars < 1)
            throw invalid_operand_error(
                "ExponentPolynomial: need at least one variable");
    }

    int num_vars() const { return num_vars_; }
    const std::map<std::vector<int>, Rational>& terms() const {
        return terms_;
    }

    void add_term(const std::vector<int>& exponents, const Rational& coeff) {
        if (static_cast<int>(exponents.size()) != num_vars_)
            throw invalid_operand_error(
                "ExponentPolynomial: exponent vector length mismatch");
        Rational& slot = terms_[exponents];
        slot += coeff;
        if (slot.is_zero())
            terms_.erase(exponents);
    }

    Rational coefficient(const std::vector<int>& exponents) const {
        auto it = terms_.find(exponents);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    static ExponentPolynomial constant(const Rational& c, int num_vars) {
        ExponentPolynomial p(num_vars);
        if (!c.is_zero())
            p.terms_[std::vector<int>(num_vars, 0)] = c;
        return p;
    }

    /* Monomial symmetric function m_alpha: every distinct monomial whose
     * exponent multiset is alpha's parts, each with coefficient 1. Zero when
     * alpha has more parts than variables. */
    static ExponentPolynomial monomial_symmetric(const Partition& alpha,
                                                 int num_vars) {
        ExponentPolynomial p(num_vars);
        if (alpha.size() > num_vars)
            return p;
        std::vector<int> exps(num_vars, 0);
        std::copy(alpha.parts().begin(), alpha.parts().end(),
                  exps.begin() + (num_vars - alpha.size()));
        std::sort(exps.begin(), exps.end());
        do {
            p.terms_[exps] = Rational(1);
        } while (std::next_permutation(exps.begin(), exps.end()));
        return p;
    }

    static ExponentPolynomial elementary(int i, int num_vars) {
        if (i == 0)
            return constant(Rational(1), num_vars);
        return monomial_symmetric(Partition(std::vector<int>(i, 1)),
                                  num_vars);
    }

    static ExponentPolynomial power_sum(int k, int num_vars) {
        if (k < 1)
            throw invalid_operand_error("power_sum: k must be positive");
        ExponentPolynomial p(num_vars);
        for (int v = 0; v < num_vars; ++v) {
            std::vector<int> exps(num_vars, 0);
            exps[v] = k;
            p.terms_[exps] = Rational(1);
        }
        return p;
    }

    friend ExponentPolynomial operator+(const ExponentPolynomial& a,
                                        const ExponentPolynomial& b) {
        require_same_vars(a, b);
        ExponentPolynomial r = a;
        for (const auto& [e, c] : b.terms_)
            r.add_term(e, c);
        return r;
    }

    friend ExponentPolynomial operator*(const ExponentPolynomial& a,
                                        const ExponentPolynomial& b) {
        require_same_vars(a, b);
        ExponentPolynomial r(a.num_vars_);
        std::vector<int> e(a.num_vars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (int v = 0; v < a.num_vars_; ++v)
                    e[v] = ea[v] + eb[v];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    friend ExponentPolynomial operator*(const Rational& c,
                                        const ExponentPolynomial& a) {
        ExponentPolynomial r(a.num_vars_);
        if (c.is_zero())
            return r;
        for (const auto& [e, coeff] : a.terms_)
            r.terms_[e] = c * coeff;
        return r;
    }

    friend bool operator==(const ExponentPolynomial& a,
                           const ExponentPolynomial& b) {
        return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
    }

  private:
    static void require_same_vars(const ExponentPolynomial& a,
                                  const ExponentPolynomial& b) {
        if (a.num_vars_ != b.num_vars_)
            throw invalid_operand_error(
                "ExponentPolynomial: variable count mismatch");
    }

    int num_vars_;
    std::map<std::vector<int>, Rational> terms_;
};

/* A symmetric polynomial written in one multiplicative basis: a Rational
 * combination of basis elements indexed by partitions of a fixed degree.
 * Zero coefficients are never stored. */
struct SymPolyInBasis {
    Basis basis = Basis::monomial;
    int degree = 0;
    std::map<Partition, Rational> terms;

    friend bool operator==(const SymPolyInBasis&,
                           const SymPolyInBasis&) = default;
};

/* Product of basis elements for the parts of lambda, in num_vars variables:
 * e_{l_1}*e_{l_2}*... or p_{l_1}*p_{l_2}*.... The empty partition gives 1. */
inline ExponentPolynomial basis_element_polynomial(Basis basis,
                                                   const Partition& lambda,
                                                   int num_vars) {
    ExponentPolynomial r = ExponentPolynomial::constant(Rational(1), num_vars);
    for (int part : lambda.parts()) {
        switch (basis) {
        case Basis::elementary:
            r = r * ExponentPolynomial::elementary(part, num_vars);
            break;
        case Basis::powersum:
            r = r * ExponentPolynomial::power_sum(part, num_vars);
            break;
        case Basis::monomial:
            throw invalid_operand_error(
                "basis_element_polynomial: monomial basis is not "
                "multiplicative");
        }
    }
    return r;
}

namespace detail {

/* Representative exponent vector of a partition: parts padded with zeros to
 * num_vars entries, sorted decreasing. */
inline std::vector<int> representative_exponents(const Partition& p,
                                                 int num_vars) {
    std::vector<int> e(num_vars, 0);
    std::copy(p.parts().rbegin(), p.parts().rend(), e.begin());
    return e;
}

/* Expansions of every m_alpha of degree d in the target basis, computed by
 * brute-force expansion in exactly d variables and an exact linear solve.
 * Degree-d symmetric functions are linearly independent already in d
 * variables, so the square system below is invertible. */
inline std::map<Partition, SymPolyInBasis>
compute_monomial_expansions(int d, Basis target) {
    std::map<Partition, SymPolyInBasis> table;
    if (d == 0) {
        SymPolyInBasis one{target, 0, {{Partition{}, Rational(1)}}};
        table[Partition{}] = one;
        return table;
    }

    std::vector<Partition> parts = partitions_of(d);
    const int n = static_cast<int>(parts.size());

    /* Reverse-lexicographic order on padded exponent vectors. */
    std::sort(parts.begin(), parts.end(),
              [d](const Partition& a, const Partition& b) {
                  return representative_exponents(a, d) >
                         representative_exponents(b, d);
              });

    std::vector<ExponentPolynomial> basis_polys;
    basis_polys.reserve(n);
    for (const Partition& lambda : parts)
        basis_polys.push_back(basis_element_polynomial(target, lambda, d));

    /* M[i][j] = coefficient of the representative monomial of parts[i] in
     * the basis element of parts[j]. Any symmetric polynomial of degree d is
     * determined by these coefficients. */
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) {
        const std::vector<int> rep = representative_exponents(parts[i], d);
        for (int j = 0; j < n; ++j)
            m[i][j] = basis_polys[j].coefficient(rep);
    }

    /* Invert by exact Gauss-Jordan. inv's column a is then the expansion of
     * m_{parts[a]}, because m_alpha's coefficient vector is the unit vector
     * at alpha. */
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        inv[i][i] = Rational(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (!m[row][col].is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0)
            throw internal_inconsistency_error(
                "basis transition matrix is singular");
        std::swap(m[col], m[pivot]);
        std::swap(inv[col], inv[pivot]);
        const Rational scale = Rational(1) / m[col][col];
        for (int j = 0; j < n; ++j) {
            m[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (int row = 0; row < n; ++row) {
            if (row == col || m[row][col].is_zero())
                continue;
            const Rational f = m[row][col];
            for (int j = 0; j < n; ++j) {
                m[row][j] -= f * m[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }

    for (int a = 0; a < n; ++a) {
        SymPolyInBasis expansion{target, d, {}};
        for (int j = 0; j < n; ++j)
            if (!inv[j][a].is_zero())
                expansion.terms[parts[j]] = inv[j][a];
        table[parts[a]] = std::move(expansion);
    }
    return table;
}

} // namespace detail

/* Memoized table of all monomial expansions of a given degree. The returned
 * reference is valid for the program's lifetime. Thread-safe: concurrent
 * readers share the lock, insertion is insert-if-absent (a racing recompute
 * is discarded, never observed). */
inline const std::map<Partition, SymPolyInBasis>&
monomial_expansion_table(int d, Basis target) {
    if (target != Basis::elementary && target != Basis::powersum)
        throw invalid_operand_error(
            "monomial_in_basis: target must be elementary or powersum");
    if (d < 0)
        throw invalid_operand_error("monomial_in_basis: negative degree");

    using Table = std::map<Partition, SymPolyInBasis>;
    static std::shared_mutex mutex;
    static std::map<std::pair<int, Basis>, std::unique_ptr<const Table>>
        cache;

    const std::pair<int, Basis> key{d, target};
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end())
            return *it->second;
    }
    auto computed = std::make_unique<const Table>(
        detail::compute_monomial_expansions(d, target));
    std::unique_lock lock(mutex);
    auto [it, inserted] = cache.try_emplace(key, std::move(computed));
    return *it->second;
}

/* Exact expansion of the monomial symmetric function m_alpha in the target
 * basis (elementary or powersum), stable in >= |alpha| variables. */
inline SymPolyInBasis monomial_in_basis(const Partition& alpha, Basis target) {
    return monomial_expansion_table(alpha.degree(), target).at(alpha);
}

/* Evaluate a polynomial in a multiplicative basis (elementary or powersum)
 * given the value of each basis generator: sum of coeff * prod values[part].
 */
inline Rational
evaluate_multiplicative(const SymPolyInBasis& q,
                        const std::map<int, Rational>& values) {
    if (q.basis == Basis::monomial)
        throw invalid_operand_error(
            "evaluate_multiplicative: monomial basis is not multiplicative");
    Rational total(0);
    for (const auto& [lambda, coeff] : q.terms) {
        Rational prod(1);
        for (int part : lambda.parts()) {
            auto it = values.find(part);
            if (it == values.end())
                throw invalid_operand_error(
                    "evaluate_multiplicative: missing value for generator " +
                    std::to_string(part));
            prod *= it->second;
        }
        total += coeff * prod;
    }
    return total;
}

inline Rational
evaluate_in_powersums(const SymPolyInBasis& q,
                      const std::map<int, Rational>& power_values) {
    if (q.basis != Basis::powersum)
        throw invalid_operand_error(
            "evaluate_in_powersums: polynomial is not in the powersum basis");
    return evaluate_multiplicative(q, power_values);
}

} // namespace degform
