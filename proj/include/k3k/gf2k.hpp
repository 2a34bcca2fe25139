#pragma once

// Exact arithmetic in GF(2^k), 1 <= k <= 32, polynomial-basis bit representation.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace k3k {

struct ModulusError : std::runtime_error {
    explicit ModulusError(const std::string& what) : std::runtime_error(what) {}
};
struct SpecMismatch : std::runtime_error {
    explicit SpecMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// Remainder of a mod b as F2[x] bitstrings, b != 0.
inline uint64_t poly_mod(uint64_t a, uint64_t b) {
    int db = 63 - __builtin_clzll(b);
    while (a != 0) {
        int da = 63 - __builtin_clzll(a);
        if (da < db) break;
        a ^= b << (da - db);
    }
    return a;
}

inline bool is_irreducible(uint64_t m, int k) {
    if (k == 1) return m == 0b10 || m == 0b11;
    if ((m & 1) == 0) return false;  // divisible by x
    for (int d = 1; d <= k / 2; ++d) {
        for (uint64_t f = uint64_t(1) << d; f < (uint64_t(1) << (d + 1)); ++f) {
            if (poly_mod(m, f) == 0) return false;
        }
    }
    return true;
}

}  // namespace detail

// Immutable description of GF(2^k): extension degree plus irreducible modulus.
// Prints as "2^k/0x<modulus>".
class FieldSpec {
  public:
    explicit FieldSpec(int k, std::optional<uint64_t> modulus = std::nullopt) : k_(k) {
        if (k < 1 || k > 32) throw ModulusError("extension degree must be in [1,32]");
        if (modulus) {
            uint64_t m = *modulus;
            if (m == 0 || (63 - __builtin_clzll(m)) != k)
                throw ModulusError("modulus degree != k");
            if (!detail::is_irreducible(m, k)) throw ModulusError("modulus is reducible");
            modulus_ = m;
        } else {
            modulus_ = smallest_irreducible(k);
        }
    }

    int degree() const { return k_; }
    uint64_t modulus() const { return modulus_; }
    uint64_t order() const { return uint64_t(1) << k_; }

    bool operator==(const FieldSpec&) const = default;

    std::string to_string() const;

    static uint64_t smallest_irreducible(int k) {
        for (uint64_t m = uint64_t(1) << k; m < (uint64_t(1) << (k + 1)); ++m)
            if (detail::is_irreducible(m, k)) return m;
        throw ModulusError("no irreducible polynomial found");  // unreachable
    }

  private:
    int k_;
    uint64_t modulus_;
};

// Element of GF(2^k). Immutable value; equality is bitwise within one spec.
class Fq {
  public:
    Fq(FieldSpec spec, uint64_t bits) : spec_(spec), bits_(uint32_t(bits)) {
        if (spec.degree() < 32 && bits >= spec.order())
            throw ModulusError("element bits exceed field size");
    }

    static Fq zero(FieldSpec spec) { return Fq(spec, 0); }
    static Fq one(FieldSpec spec) { return Fq(spec, 1); }

    const FieldSpec& spec() const { return spec_; }
    uint32_t bits() const { return bits_; }
    bool is_zero() const { return bits_ == 0; }

    Fq operator+(const Fq& o) const {
        check(o);
        return Fq(spec_, bits_ ^ o.bits_, 0);
    }
    Fq operator*(const Fq& o) const {
        check(o);
        uint64_t a = bits_, b = o.bits_, r = 0;
        const uint64_t top = uint64_t(1) << spec_.degree();
        const uint64_t mod = spec_.modulus();
        while (b != 0) {
            if (b & 1) r ^= a;
            b >>= 1;
            a <<= 1;
            if (a & top) a ^= mod;
        }
        return Fq(spec_, r, 0);
    }
    Fq pow(uint64_t e) const {
        Fq r = one(spec_), base = *this;
        while (e != 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }
    Fq inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero");
        return pow(spec_.order() - 2);
    }
    // Unique square root: x^(2^(k-1)). Squaring is a bijection in characteristic 2.
    Fq sqrt() const {
        if (spec_.degree() == 1) return *this;
        return pow(uint64_t(1) << (spec_.degree() - 1));
    }

    bool operator==(const Fq& o) const { return spec_ == o.spec_ && bits_ == o.bits_; }
    bool operator!=(const Fq& o) const { return !(*this == o); }

    std::string to_hex() const;
    static Fq parse_hex(FieldSpec spec, const std::string& s);

  private:
    Fq(FieldSpec spec, uint64_t bits, int /*unchecked*/) : spec_(spec), bits_(uint32_t(bits)) {}
    void check(const Fq& o) const {
        if (!(spec_ == o.spec_)) throw SpecMismatch("operands from different field specs");
    }

    FieldSpec spec_;
    uint32_t bits_;
};

inline std::string hex_of_bits(uint64_t v) {
    char buf[32];
    snprintf(buf, sizeof buf, "0x%llx", (unsigned long long)v);
    return buf;
}

inline std::string FieldSpec::to_string() const {
    return "2^" + std::to_string(k_) + "/" + hex_of_bits(modulus_);
}

inline std::string Fq::to_hex() const { return hex_of_bits(bits_); }

inline Fq Fq::parse_hex(FieldSpec spec, const std::string& s) {
    size_t pos = 0;
    unsigned long long v = std::stoull(s, &pos, 16);
    if (pos != s.size()) throw ModulusError("bad hex element: " + s);
    if (spec.degree() < 32 && v >= spec.order()) throw ModulusError("element out of range: " + s);
    return Fq(spec, v);
}

}  // namespace k3k
