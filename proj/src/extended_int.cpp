#include "secant_hodge/extended_int.hpp"

#include <charconv>
#include <stdexcept>

namespace secant_hodge {

std::int64_t ExtInt::value() const {
    if (kind_ != Kind::Finite) throw std::logic_error("ExtInt::value on infinite value");
    return value_;
}

std::string ExtInt::to_string() const {
    switch (kind_) {
    case Kind::PosInf: return "inf";
    case Kind::NegInf: return "-inf";
    default: return std::to_string(value_);
    }
}

std::optional<ExtInt> ExtInt::parse(const std::string& s) {
    if (s == "inf") return inf();
    if (s == "-inf") return neg_inf();
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return ExtInt(v);
}

ExtInt operator-(std::int64_t a, const ExtInt& b) {
    if (b.is_pos_inf()) return ExtInt::neg_inf();
    if (b.is_neg_inf()) return ExtInt::inf();
    return ExtInt(a - b.value_);
}

ExtInt operator-(const ExtInt& a, std::int64_t b) {
    if (!a.is_finite()) return a;
    return ExtInt(a.value_ - b);
}

ExtInt operator+(const ExtInt& a, std::int64_t b) {
    if (!a.is_finite()) return a;
    return ExtInt(a.value_ + b);
}

} // namespace secant_hodge
