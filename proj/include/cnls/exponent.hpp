#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cnls/rational.hpp"

namespace cnls {

// Exponent-shaped quantity: an exact rational plus a rational-linear form in
// parameter symbols. Houses t-powers (t^alpha), exp frequencies and trig
// frequencies.
class ExponentForm {
public:
    ExponentForm() = default;
    ExponentForm(const Rational& c) : c0_(c) {}
    ExponentForm(long n) : c0_(n) {}
    static ExponentForm symbol(int id, const Rational& coeff = Rational(1)) {
        ExponentForm e;
        if (coeff != 0) e.lin_.emplace_back(id, coeff);
        return e;
    }

    const Rational& rational_part() const { return c0_; }
    const std::vector<std::pair<int, Rational>>& linear_part() const { return lin_; }

    bool is_zero() const { return c0_ == 0 && lin_.empty(); }
    bool is_rational() const { return lin_.empty(); }
    bool is_integer() const { return lin_.empty() && cnls::is_integer(c0_); }
    std::optional<long> as_long() const {
        if (!is_integer()) return std::nullopt;
        BigInt n = rat_num(c0_);
        if (n > 1000000000 || n < -1000000000) return std::nullopt;
        return n.convert_to<long>();
    }
    std::optional<Rational> as_rational() const {
        if (!lin_.empty()) return std::nullopt;
        return c0_;
    }

    ExponentForm operator-() const {
        ExponentForm out;
        out.c0_ = -c0_;
        for (auto& [v, c] : lin_) out.lin_.emplace_back(v, -c);
        return out;
    }
    ExponentForm operator+(const ExponentForm& o) const {
        ExponentForm out;
        out.c0_ = c0_ + o.c0_;
        auto a = lin_.begin();
        auto b = o.lin_.begin();
        while (a != lin_.end() || b != o.lin_.end()) {
            if (b == o.lin_.end() || (a != lin_.end() && a->first < b->first))
                out.lin_.push_back(*a++);
            else if (a == lin_.end() || b->first < a->first)
                out.lin_.push_back(*b++);
            else {
                Rational c = a->second + b->second;
                if (c != 0) out.lin_.emplace_back(a->first, c);
                ++a, ++b;
            }
        }
        return out;
    }
    ExponentForm operator-(const ExponentForm& o) const { return *this + (-o); }
    ExponentForm operator*(const Rational& k) const {
        ExponentForm out;
        if (k == 0) return out;
        out.c0_ = c0_ * k;
        for (auto& [v, c] : lin_) out.lin_.emplace_back(v, c * k);
        return out;
    }

    // Product of two forms stays linear only when one side is rational.
    std::optional<ExponentForm> times(const ExponentForm& o) const {
        if (o.is_rational()) return *this * o.c0_;
        if (is_rational()) return o * c0_;
        return std::nullopt;
    }

    bool operator==(const ExponentForm& o) const { return c0_ == o.c0_ && lin_ == o.lin_; }

    static int cmp(const ExponentForm& a, const ExponentForm& b) {
        if (a.c0_ != b.c0_) return a.c0_ < b.c0_ ? -1 : 1;
        auto i = a.lin_.begin(), j = b.lin_.begin();
        while (i != a.lin_.end() && j != b.lin_.end()) {
            if (i->first != j->first) return i->first < j->first ? -1 : 1;
            if (i->second != j->second) return i->second < j->second ? -1 : 1;
            ++i, ++j;
        }
        if (i != a.lin_.end()) return 1;
        if (j != b.lin_.end()) return -1;
        return 0;
    }
    bool operator<(const ExponentForm& o) const { return cmp(*this, o) < 0; }

    // Sign of the leading entry (rational part first, then lowest symbol id);
    // used to pick the canonical representative of +/- trig frequencies.
    int leading_sign() const {
        if (c0_ != 0) return c0_ > 0 ? 1 : -1;
        if (!lin_.empty()) return lin_.front().second > 0 ? 1 : -1;
        return 0;
    }

    // Substitute rational values for a subset of the symbols.
    ExponentForm bind(const std::function<std::optional<Rational>(int)>& value_of) const {
        ExponentForm out;
        out.c0_ = c0_;
        for (auto& [v, c] : lin_) {
            if (auto val = value_of(v))
                out.c0_ += c * *val;
            else
                out.lin_.emplace_back(v, c);
        }
        return out;
    }

    double eval(const std::function<double(int)>& value_of) const {
        double acc = to_double(c0_);
        for (auto& [v, c] : lin_) acc += to_double(c) * value_of(v);
        return acc;
    }

private:
    Rational c0_;
    std::vector<std::pair<int, Rational>> lin_; // sorted by symbol id, coeffs nonzero
};

} // namespace cnls
