#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "degform/number_theory.hpp"

namespace degform {

/* Integer partition in normal form: weakly increasing positive parts.
 * The empty partition (degree 0) is allowed. */
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int a : parts_)
            if (a <= 0)
                throw invalid_operand_error(
                    "Partition: parts must be positive");
        std::sort(parts_.begin(), parts_.end());
    }

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    int degree() const {
        int d = 0;
        for (int a : parts_)
            d += a;
        return d;
    }

    friend bool operator==(const Partition& a, const Partition& b) = default;
    friend std::strong_ordering operator<=>(const Partition& a,
                                            const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
        return os << p.to_string();
    }

  private:
    std::vector<int> parts_;
};

namespace detail {

inline void extend_partitions(int remaining, int min_part,
                              std::vector<int>& prefix,
                              std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(prefix));
        return;
    }
    for (int a = min_part; a <= remaining; ++a) {
        prefix.push_back(a);
        extend_partitions(remaining - a, a, prefix, out);
        prefix.pop_back();
    }
}

/* Same recursion restricted to an allowed set of part values (sorted). */
inline void extend_partitions_from(int remaining, size_t min_idx,
                                   const std::vector<int>& allowed,
                                   std::vector<int>& prefix,
                                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(prefix));
        return;
    }
    for (size_t i = min_idx; i < allowed.size() && allowed[i] <= remaining;
         ++i) {
        prefix.push_back(allowed[i]);
        extend_partitions_from(remaining - allowed[i], i, allowed, prefix,
                               out);
        prefix.pop_back();
    }
}

} // namespace detail

/* All partitions of d in normal form, lexicographic order:
 * (1,1,1) < (1,2) < (3). d = 0 yields the empty partition alone. */
inline std::vector<Partition> partitions_of(int d) {
    if (d < 0)
        throw invalid_operand_error("partitions_of: negative degree");
    std::vector<Partition> out;
    std::vector<int> prefix;
    detail::extend_partitions(d, 1, prefix, out);
    return out;
}

/* Partitions of d whose every part has the form p^i - 1, i >= 1. */
inline std::vector<Partition> lambda_p_partitions(int d, int p) {
    if (!is_prime(p))
        throw invalid_operand_error("lambda_p_partitions: p = " +
                                    std::to_string(p) + " is not prime");
    if (d < 0)
        throw invalid_operand_error("lambda_p_partitions: negative degree");
    std::vector<int> allowed;
    for (long long q = p; q - 1 <= d; q *= p)
        allowed.push_back(static_cast<int>(q - 1));
    std::vector<Partition> out;
    std::vector<int> prefix;
    detail::extend_partitions_from(d, 0, allowed, prefix, out);
    return out;
}

} // namespace degform
