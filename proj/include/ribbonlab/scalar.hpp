#ifndef RIBBONLAB_SCALAR_HPP
#define RIBBONLAB_SCALAR_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <variant>

#include <gmpxx.h>

#include <ribbonlab/error.hpp>

namespace ribbonlab
{

// The ground field: either Q or F_p with p a prime below 2^31.
class Field
{
public:
    enum class kind { rational, prime };

    Field() = default;

    static Field rational()
    {
        return Field{};
    }

    static Field prime(std::uint64_t p)
    {
        if (p < 2 || p >= (std::uint64_t{1} << 31)) {
            throw error(errc::invalid_argument, "prime modulus must satisfy 2 <= p < 2^31, got " + std::to_string(p));
        }
        for (std::uint64_t d = 2; d * d <= p; ++d) {
            if (p % d == 0) {
                throw error(errc::invalid_argument, std::to_string(p) + " is not prime");
            }
        }
        Field f;
        f.kind_ = kind::prime;
        f.p_ = static_cast<std::uint32_t>(p);
        return f;
    }

    // Accepts "Q" or "Fp:<p>".
    static Field parse(const std::string &s)
    {
        if (s == "Q") {
            return rational();
        }
        if (s.rfind("Fp:", 0) == 0 && s.size() > 3) {
            const auto digits = s.substr(3);
            if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10) {
                throw error(errc::invalid_argument, "bad field name '" + s + "'");
            }
            return prime(std::stoull(digits));
        }
        throw error(errc::invalid_argument, "bad field name '" + s + "' (expected Q or Fp:<p>)");
    }

    kind get_kind() const noexcept
    {
        return kind_;
    }
    bool is_rational() const noexcept
    {
        return kind_ == kind::rational;
    }
    std::uint32_t modulus() const noexcept
    {
        return p_;
    }

    std::string name() const
    {
        return is_rational() ? std::string("Q") : "Fp:" + std::to_string(p_);
    }

    friend bool operator==(const Field &a, const Field &b) noexcept
    {
        return a.kind_ == b.kind_ && a.p_ == b.p_;
    }

private:
    kind kind_ = kind::rational;
    std::uint32_t p_ = 0;
};

inline void require_same_field(const Field &a, const Field &b)
{
    if (!(a == b)) {
        throw error(errc::field_mismatch, a.name() + " vs " + b.name());
    }
}

// Exact element of the active ground field.
class Scalar
{
public:
    Scalar() : value_(mpq_class(0)) {}

    static Scalar zero(const Field &f)
    {
        return from_int(f, 0);
    }
    static Scalar one(const Field &f)
    {
        return from_int(f, 1);
    }

    static Scalar from_int(const Field &f, long v)
    {
        Scalar s;
        s.field_ = f;
        if (f.is_rational()) {
            s.value_ = mpq_class(v);
        } else {
            const long p = static_cast<long>(f.modulus());
            long r = v % p;
            if (r < 0) {
                r += p;
            }
            s.value_ = static_cast<std::uint32_t>(r);
        }
        return s;
    }

    static Scalar from_rational(const Field &f, const mpq_class &q)
    {
        if (f.is_rational()) {
            Scalar s;
            s.field_ = f;
            s.value_ = q;
            return s;
        }
        const auto p = f.modulus();
        const mpz_class pz(static_cast<unsigned long>(p));
        mpz_class den = q.get_den() % pz;
        if (den == 0) {
            throw error(errc::division_by_zero, "denominator vanishes modulo " + std::to_string(p));
        }
        mpz_class num = q.get_num() % pz;
        if (num < 0) {
            num += pz;
        }
        const Scalar n = from_residue(f, static_cast<std::uint32_t>(num.get_ui()));
        const Scalar d = from_residue(f, static_cast<std::uint32_t>(den.get_ui()));
        return n / d;
    }

    // Accepts "n" or "n/d" with optional sign on n.
    static Scalar parse(const Field &f, const std::string &text)
    {
        mpq_class q;
        if (text.empty() || q.set_str(text, 10) != 0) {
            throw error(errc::malformed_input, "bad scalar literal '" + text + "'");
        }
        if (q.get_den() == 0) {
            throw error(errc::division_by_zero, "zero denominator in '" + text + "'");
        }
        q.canonicalize();
        return from_rational(f, q);
    }

    const Field &field() const noexcept
    {
        return field_;
    }

    bool is_zero() const
    {
        if (field_.is_rational()) {
            return sgn(std::get<mpq_class>(value_)) == 0;
        }
        return std::get<std::uint32_t>(value_) == 0;
    }

    bool is_one() const
    {
        if (field_.is_rational()) {
            return std::get<mpq_class>(value_) == 1;
        }
        return std::get<std::uint32_t>(value_) == 1;
    }

    // Q: "num/den" with den >= 1; F_p: the residue in [0, p).
    std::string to_string() const
    {
        if (field_.is_rational()) {
            const auto &q = std::get<mpq_class>(value_);
            return q.get_num().get_str() + "/" + q.get_den().get_str();
        }
        return std::to_string(std::get<std::uint32_t>(value_));
    }

    Scalar inverse() const
    {
        if (is_zero()) {
            throw error(errc::division_by_zero, "inverse of zero");
        }
        if (field_.is_rational()) {
            Scalar s = *this;
            s.value_ = mpq_class(1) / std::get<mpq_class>(value_);
            return s;
        }
        // Fermat: a^(p-2).
        const std::uint64_t p = field_.modulus();
        std::uint64_t base = std::get<std::uint32_t>(value_), e = p - 2, acc = 1;
        while (e != 0) {
            if (e & 1U) {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1U;
        }
        return from_residue(field_, static_cast<std::uint32_t>(acc));
    }

    Scalar operator-() const
    {
        if (field_.is_rational()) {
            Scalar s = *this;
            s.value_ = mpq_class(-std::get<mpq_class>(value_));
            return s;
        }
        const auto r = std::get<std::uint32_t>(value_);
        return from_residue(field_, r == 0 ? 0 : field_.modulus() - r);
    }

    friend Scalar operator+(const Scalar &a, const Scalar &b)
    {
        require_same_field(a.field_, b.field_);
        if (a.field_.is_rational()) {
            Scalar s = a;
            s.value_ = mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_));
            return s;
        }
        const std::uint64_t p = a.field_.modulus();
        return from_residue(a.field_, static_cast<std::uint32_t>(
                                          (std::uint64_t{std::get<std::uint32_t>(a.value_)} + std::get<std::uint32_t>(b.value_)) % p));
    }

    friend Scalar operator-(const Scalar &a, const Scalar &b)
    {
        return a + (-b);
    }

    friend Scalar operator*(const Scalar &a, const Scalar &b)
    {
        require_same_field(a.field_, b.field_);
        if (a.field_.is_rational()) {
            Scalar s = a;
            s.value_ = mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_));
            return s;
        }
        const std::uint64_t p = a.field_.modulus();
        return from_residue(a.field_, static_cast<std::uint32_t>(
                                          std::uint64_t{std::get<std::uint32_t>(a.value_)} * std::get<std::uint32_t>(b.value_) % p));
    }

    friend Scalar operator/(const Scalar &a, const Scalar &b)
    {
        require_same_field(a.field_, b.field_);
        return a * b.inverse();
    }

    Scalar &operator+=(const Scalar &o)
    {
        return *this = *this + o;
    }
    Scalar &operator-=(const Scalar &o)
    {
        return *this = *this - o;
    }
    Scalar &operator*=(const Scalar &o)
    {
        return *this = *this * o;
    }

    friend bool operator==(const Scalar &a, const Scalar &b)
    {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }
    friend bool operator!=(const Scalar &a, const Scalar &b)
    {
        return !(a == b);
    }

private:
    static Scalar from_residue(const Field &f, std::uint32_t r)
    {
        Scalar s;
        s.field_ = f;
        s.value_ = r;
        return s;
    }

    Field field_;
    std::variant<mpq_class, std::uint32_t> value_;
};

} // namespace ribbonlab

#endif
