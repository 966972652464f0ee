#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "pathideal/error.hpp"

namespace pathideal {

enum class FieldKind { GF2, GFp, Rationals };

/// Coefficient field for homology. GF(p) takes a prime p below 2^15 so
/// products fit in 32 bits.
struct FieldChoice
{
    FieldKind kind = FieldKind::GF2;
    std::uint32_t p = 2;

    static FieldChoice gf2() { return {FieldKind::GF2, 2}; }
    static FieldChoice rationals() { return {FieldKind::Rationals, 0}; }
    static FieldChoice gfp(std::uint32_t p)
    {
        if (p < 2 || p >= (1U << 15))
            throw Error(ErrorCode::InvalidArgument, "field characteristic " + std::to_string(p) + " out of range");
        for (std::uint32_t d = 2; d * d <= p; ++d)
            if (p % d == 0)
                throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
        if (p == 2)
            return gf2();
        return {FieldKind::GFp, p};
    }

    /// "gf2", "gf<p>" or "q".
    static FieldChoice parse(const std::string& text)
    {
        if (text == "q" || text == "Q")
            return rationals();
        if (text.size() > 2 && (text.rfind("gf", 0) == 0 || text.rfind("GF", 0) == 0)) {
            const std::string digits = text.substr(2);
            if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 6)
                return gfp(static_cast<std::uint32_t>(std::stoul(digits)));
        }
        throw Error(ErrorCode::InvalidArgument, "unknown field '" + text + "' (expected gf2, gf<p> or q)");
    }

    /// Characteristic; 0 for the rationals.
    std::uint32_t characteristic() const { return kind == FieldKind::Rationals ? 0 : p; }

    std::string to_string() const
    {
        if (kind == FieldKind::Rationals)
            return "q";
        return "gf" + std::to_string(p);
    }

    bool operator==(const FieldChoice&) const = default;
};

using Rational = boost::multiprecision::cpp_rational;

/// Arithmetic in Z/p.
struct ModP
{
    using value_type = std::uint32_t;
    std::uint32_t p;

    value_type from_int(int v) const
    {
        const long long r = v % static_cast<long long>(p);
        return static_cast<value_type>(r < 0 ? r + p : r);
    }
    bool is_zero(value_type a) const { return a == 0; }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p - b; }
    value_type mul(value_type a, value_type b) const
    {
        return static_cast<value_type>((static_cast<std::uint64_t>(a) * b) % p);
    }
    value_type inv(value_type a) const
    {
        // Fermat: a^(p-2).
        value_type result = 1;
        value_type base = a;
        for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
            if (e & 1U)
                result = mul(result, base);
            base = mul(base, base);
        }
        return result;
    }
};

/// Exact arithmetic in Q.
struct RationalOps
{
    using value_type = Rational;

    value_type from_int(int v) const { return Rational(v); }
    bool is_zero(const value_type& a) const { return a == 0; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type inv(const value_type& a) const { return 1 / a; }
};

} // namespace pathideal
