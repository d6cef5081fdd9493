#pragma once

// Exact arithmetic in Q(zeta_{p^N}) for an odd prime p.
//
// An element is stored in the power basis {1, z, ..., z^(phi(p^N)-1)} of a
// primitive p^N-th root of unity z. The roots at different levels form a
// compatible system: zeta_{p^a} = zeta_{p^b}^(p^(b-a)) for b >= a, so two
// elements at different levels are combined by rescaling exponents of the
// lower one. Reduction uses the p-term relation
//     z^(c + (p-1) p^(N-1)) = - sum_{j=0}^{p-2} z^(c + j p^(N-1)),
// which is one pass for any exponent below p^N.

#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "arith.hpp"

namespace metacyclic {

using rational = boost::multiprecision::cpp_rational;

class cyclotomic {
public:
    /// Zero of Q (level 0) for the prime p.
    explicit cyclotomic(integer p) : p_(p), level_(0), coeffs_(1) {}

    cyclotomic(integer p, rational value) : p_(p), level_(0), coeffs_{std::move(value)} {}

    /// zeta_{p^level}^e, exponent taken modulo p^level.
    static cyclotomic root_power(integer p, int level, integer e) {
        if (level < 0)
            throw std::invalid_argument("root_power: negative level");
        const integer period = checked_pow(p, level);
        const integer block = period / p;
        const integer phi = period - block;
        const integer x = mod_floor(e, period);
        std::vector<rational> coeffs(static_cast<std::size_t>(level == 0 ? 1 : phi));
        if (level == 0 || x < phi) {
            coeffs[static_cast<std::size_t>(x)] = 1;
        } else {
            for (integer j = 0; j + 1 < p; ++j)
                coeffs[static_cast<std::size_t>(x - phi + j * block)] = -1;
        }
        return cyclotomic(p, level, std::move(coeffs));
    }

    integer prime() const noexcept { return p_; }
    int level() const noexcept { return level_; }
    std::span<const rational> coefficients() const noexcept { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero())
                return false;
        return true;
    }

    bool is_rational() const { return minimal_level() == 0; }

    /// The same element expressed at a level >= the current one.
    cyclotomic at_level(int target) const {
        if (target < level_)
            throw std::invalid_argument("at_level: cannot lower level implicitly; use restrict_to_level");
        if (target == level_)
            return *this;
        const integer stretch = checked_pow(p_, target - level_);
        std::vector<rational> out(static_cast<std::size_t>(euler_phi_pow(p_, target)));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero())
                out[i * static_cast<std::size_t>(stretch)] = coeffs_[i];
        return cyclotomic(p_, target, std::move(out));
    }

    /// Least L such that the element lies in Q(zeta_{p^L}). An element of the
    /// subfield is supported exactly on basis exponents divisible by p^(N-L).
    int minimal_level() const {
        for (int candidate = 0; candidate < level_; ++candidate) {
            const integer step = checked_pow(p_, level_ - candidate);
            bool inside = true;
            for (std::size_t i = 0; i < coeffs_.size() && inside; ++i)
                if (!coeffs_[i].is_zero() && static_cast<integer>(i) % step != 0)
                    inside = false;
            if (inside)
                return candidate;
        }
        return level_;
    }

    /// Re-express at a lower level; throws if the element is not in that subfield.
    cyclotomic restrict_to_level(int target) const {
        if (target >= level_)
            return at_level(target);
        if (minimal_level() > target)
            throw std::invalid_argument("restrict_to_level: element does not lie in the requested subfield");
        const integer step = checked_pow(p_, level_ - target);
        std::vector<rational> out(static_cast<std::size_t>(euler_phi_pow(p_, target)));
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = coeffs_[i * static_cast<std::size_t>(step)];
        return cyclotomic(p_, target, std::move(out));
    }

    /// The image under zeta_{p^N} -> zeta_{p^N}^alpha, gcd(alpha, p) = 1.
    cyclotomic galois_apply(integer alpha) const {
        if (mod_floor(alpha, p_) == 0)
            throw std::invalid_argument("galois_apply: alpha must be coprime to p");
        if (level_ == 0)
            return *this;
        const integer period = checked_pow(p_, level_);
        const integer a = mod_floor(alpha, period);
        std::vector<rational> buf(static_cast<std::size_t>(period));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero())
                buf[static_cast<std::size_t>(mod_mul(static_cast<integer>(i), a, period))] += coeffs_[i];
        return cyclotomic(p_, level_, reduce(p_, level_, std::move(buf)));
    }

    /// Complex conjugate, i.e. the automorphism alpha = -1.
    cyclotomic conj() const { return galois_apply(-1); }

    cyclotomic& operator+=(const cyclotomic& rhs) {
        check_prime(rhs);
        if (rhs.level_ > level_)
            *this = at_level(rhs.level_);
        if (rhs.level_ == level_) {
            for (std::size_t i = 0; i < coeffs_.size(); ++i)
                coeffs_[i] += rhs.coeffs_[i];
        } else {
            const auto stretch = static_cast<std::size_t>(checked_pow(p_, level_ - rhs.level_));
            for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
                coeffs_[i * stretch] += rhs.coeffs_[i];
        }
        return *this;
    }

    cyclotomic& operator-=(const cyclotomic& rhs) { return *this += -rhs; }

    cyclotomic& operator*=(const rational& scalar) {
        for (auto& c : coeffs_)
            c *= scalar;
        return *this;
    }

    cyclotomic operator-() const {
        cyclotomic out = *this;
        for (auto& c : out.coeffs_)
            c = -c;
        return out;
    }

    friend cyclotomic operator+(cyclotomic lhs, const cyclotomic& rhs) { return lhs += rhs; }
    friend cyclotomic operator-(cyclotomic lhs, const cyclotomic& rhs) { return lhs -= rhs; }
    friend cyclotomic operator*(cyclotomic lhs, const rational& rhs) { return lhs *= rhs; }
    friend cyclotomic operator*(const rational& lhs, cyclotomic rhs) { return rhs *= lhs; }

    friend cyclotomic operator*(const cyclotomic& lhs, const cyclotomic& rhs) {
        lhs.check_prime(rhs);
        const int level = std::max(lhs.level_, rhs.level_);
        if (lhs.level_ != rhs.level_)
            return lhs.at_level(level) * rhs.at_level(level);
        const cyclotomic& a = lhs;
        const cyclotomic& b = rhs;
        const integer period = checked_pow(lhs.p_, level);

        std::vector<std::size_t> nz_b;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            if (!b.coeffs_[j].is_zero())
                nz_b.push_back(j);

        std::vector<rational> buf(static_cast<std::size_t>(period));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero())
                continue;
            for (std::size_t j : nz_b)
                buf[(i + j) % static_cast<std::size_t>(period)] += a.coeffs_[i] * b.coeffs_[j];
        }
        return cyclotomic(lhs.p_, level, reduce(lhs.p_, level, std::move(buf)));
    }

    cyclotomic& operator*=(const cyclotomic& rhs) { return *this = *this * rhs; }

    /// Integer powers (negative exponents are not supported).
    cyclotomic pow(integer e) const {
        if (e < 0)
            throw std::invalid_argument("cyclotomic::pow: negative exponent");
        cyclotomic result(p_, rational(1));
        cyclotomic base = *this;
        while (e > 0) {
            if (e & 1)
                result *= base;
            base *= base;
            e >>= 1;
        }
        return result;
    }

    /// Equality of field elements, independent of the ambient level.
    friend bool operator==(const cyclotomic& lhs, const cyclotomic& rhs) {
        if (lhs.p_ != rhs.p_)
            return false;
        const int level = std::max(lhs.level_, rhs.level_);
        if (lhs.level_ == rhs.level_)
            return lhs.coeffs_ == rhs.coeffs_;
        return lhs.at_level(level).coeffs_ == rhs.at_level(level).coeffs_;
    }

    /// Debug rendering, e.g. "-1 - z3" for zeta_3^2.
    std::string to_string() const {
        std::ostringstream out;
        bool first = true;
        const std::string root = "z" + std::to_string(checked_pow(p_, level_));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            rational c = coeffs_[i];
            if (c.is_zero())
                continue;
            const bool negative = c < 0;
            if (negative)
                c = -c;
            if (first)
                out << (negative ? "-" : "");
            else
                out << (negative ? " - " : " + ");
            first = false;
            if (i == 0) {
                out << c;
                continue;
            }
            if (c != 1)
                out << c << '*';
            out << root;
            if (i > 1)
                out << '^' << i;
        }
        return first ? "0" : out.str();
    }

private:
    cyclotomic(integer p, int level, std::vector<rational> coeffs)
        : p_(p), level_(level), coeffs_(std::move(coeffs)) {}

    void check_prime(const cyclotomic& other) const {
        if (other.p_ != p_)
            throw std::invalid_argument("cyclotomic: mismatched primes " + std::to_string(p_) + " and " +
                                        std::to_string(other.p_));
    }

    /// Folds a dense buffer indexed by exponents 0..p^level-1 into the power basis.
    static std::vector<rational> reduce(integer p, int level, std::vector<rational> buf) {
        if (level == 0)
            return buf;
        const auto period = buf.size();
        const auto block = period / static_cast<std::size_t>(p);
        const auto phi = period - block;
        for (std::size_t e = phi; e < period; ++e) {
            if (buf[e].is_zero())
                continue;
            const std::size_t c = e - phi;
            for (std::size_t j = 0; j + 1 < static_cast<std::size_t>(p); ++j)
                buf[c + j * block] -= buf[e];
        }
        buf.resize(phi);
        return buf;
    }

    integer p_;
    int level_;
    std::vector<rational> coeffs_;
};

inline cyclotomic root_power(integer p, int level, integer e) { return cyclotomic::root_power(p, level, e); }
inline cyclotomic galois_apply(const cyclotomic& x, integer alpha) { return x.galois_apply(alpha); }
inline int minimal_level(const cyclotomic& x) { return x.minimal_level(); }

} // namespace metacyclic
