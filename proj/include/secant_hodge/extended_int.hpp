#ifndef SECANT_HODGE_EXTENDED_INT_HPP
#define SECANT_HODGE_EXTENDED_INT_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace secant_hodge {

/*
 * Integers extended by +inf and -inf.
 *
 * +inf is the value of c, HRH, w, sigma and mu when the relevant piece is
 * absent; -inf is reserved for the generation level of the zero module.
 */
class ExtInt {
public:
    enum class Kind { NegInf, Finite, PosInf };

    constexpr ExtInt() = default;
    constexpr ExtInt(std::int64_t v) : kind_(Kind::Finite), value_(v) {}

    static constexpr ExtInt inf() { return ExtInt(Kind::PosInf); }
    static constexpr ExtInt neg_inf() { return ExtInt(Kind::NegInf); }

    constexpr Kind kind() const { return kind_; }
    constexpr bool is_finite() const { return kind_ == Kind::Finite; }
    constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }

    // Throws std::logic_error on an infinite value.
    std::int64_t value() const;

    // "inf", "-inf" or the decimal value.
    std::string to_string() const;
    static std::optional<ExtInt> parse(const std::string& s);

    friend constexpr bool operator==(const ExtInt& a, const ExtInt& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
        if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
        if (a.kind_ != Kind::Finite) return std::strong_ordering::equal;
        return a.value_ <=> b.value_;
    }

    // finite - x; subtracting +inf gives -inf and vice versa.
    friend ExtInt operator-(std::int64_t a, const ExtInt& b);
    friend ExtInt operator-(const ExtInt& a, std::int64_t b);
    friend ExtInt operator+(const ExtInt& a, std::int64_t b);

private:
    constexpr explicit ExtInt(Kind k) : kind_(k) {}
    Kind kind_ = Kind::Finite;
    std::int64_t value_ = 0;
};

inline ExtInt max(const ExtInt& a, const ExtInt& b) { return a < b ? b : a; }
inline ExtInt min(const ExtInt& a, const ExtInt& b) { return a < b ? a : b; }

} // namespace secant_hodge

#endif
