#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace stablekernel {

/// Exact rational order κ = num/den, stored in lowest terms with den > 0.
/// Parity questions are answered exactly; nothing here compares doubles.
class KappaOrder {
public:
    KappaOrder(std::int64_t num, std::int64_t den = 1);

    /// Parses "num/den" or a bare integer "num". Decimal strings are rejected.
    static KappaOrder parse(std::string_view text);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    bool is_integer() const noexcept { return den_ == 1; }
    bool is_even_integer() const noexcept { return den_ == 1 && num_ % 2 == 0; }
    bool is_odd_integer() const noexcept { return den_ == 1 && num_ % 2 != 0; }

    /// "num/den", always with the denominator.
    std::string to_string() const;

    KappaOrder operator+(const KappaOrder& other) const;
    KappaOrder operator-(const KappaOrder& other) const;
    KappaOrder operator-() const { return {-num_, den_}; }

    friend bool operator==(const KappaOrder&, const KappaOrder&) = default;
    /// Exact comparison by cross-multiplication.
    friend bool operator<(const KappaOrder& a, const KappaOrder& b);
    friend bool operator>(const KappaOrder& a, const KappaOrder& b) { return b < a; }
    friend bool operator<=(const KappaOrder& a, const KappaOrder& b) { return !(b < a); }
    friend bool operator>=(const KappaOrder& a, const KappaOrder& b) { return !(a < b); }

private:
    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace stablekernel
