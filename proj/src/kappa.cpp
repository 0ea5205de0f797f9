#include "stablekernel/kappa.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "stablekernel/errors.hpp"

namespace stablekernel {

namespace {

constexpr std::int64_t kLimit = std::int64_t{1} << 31;

std::int64_t parse_int(std::string_view part, std::string_view whole) {
    if (!part.empty() && part.front() == '+') part.remove_prefix(1);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
        std::string hint = "kappa must be an exact rational \"num/den\", got \"" + std::string(whole) + "\"";
        if (whole.find('.') != std::string_view::npos || whole.find('e') != std::string_view::npos) {
            hint += " (decimals are not accepted: write e.g. 1/2 instead of 0.5)";
        }
        throw DomainError(hint);
    }
    return v;
}

}  // namespace

KappaOrder::KappaOrder(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("kappa: zero denominator");
    if (num > kLimit || num < -kLimit || den > kLimit || den < -kLimit) {
        throw DomainError("kappa: numerator and denominator must stay below 2^31 in magnitude");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    num_ = num / g;
    den_ = den / g;
}

KappaOrder KappaOrder::parse(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return {parse_int(text, text), 1};
    return {parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text)};
}

std::string KappaOrder::to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

KappaOrder KappaOrder::operator+(const KappaOrder& o) const {
    const std::int64_t g = std::gcd(den_, o.den_);
    return {num_ * (o.den_ / g) + o.num_ * (den_ / g), den_ / g * o.den_};
}

KappaOrder KappaOrder::operator-(const KappaOrder& o) const {
    return *this + (-o);
}

bool operator<(const KappaOrder& a, const KappaOrder& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
}

}  // namespace stablekernel
