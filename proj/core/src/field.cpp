// agtrellis: trellis state complexity of codes from curves
// Copyright 2026 The agtrellis authors.
// Licensed under the Apache License, Version 2.0.
#include "agtrellis/field.hpp"

#include <algorithm>
#include <sstream>

namespace agtrellis {

namespace {

constexpr unsigned kMaxOrder = 65536;

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Polynomials over GF(p) as coefficient vectors, constant term first.
using Poly = std::vector<unsigned>;

unsigned poly_degree(const Poly& a) {
    for (std::size_t i = a.size(); i > 0; --i)
        if (a[i - 1] != 0) return static_cast<unsigned>(i - 1);
    return 0;
}

Poly poly_from_index(std::uint64_t v, unsigned p, unsigned len) {
    Poly out(len, 0);
    for (unsigned i = 0; i < len; ++i) {
        out[i] = static_cast<unsigned>(v % p);
        v /= p;
    }
    return out;
}

// Remainder of a by monic divisor b.
Poly poly_rem(Poly a, const Poly& b, unsigned p) {
    unsigned db = poly_degree(b);
    while (true) {
        unsigned da = poly_degree(a);
        if (da < db || (da == 0 && a[0] == 0)) break;
        unsigned lead = a[da];
        if (lead == 0) break;
        for (unsigned i = 0; i <= db; ++i) {
            unsigned idx = da - db + i;
            a[idx] = (a[idx] + lead * (p - b[i] % p)) % p;
        }
    }
    a.resize(db);
    return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& modulus, unsigned p) {
    Poly prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    return poly_rem(std::move(prod), modulus, p);
}

bool is_irreducible(const Poly& f, unsigned p) {
    unsigned deg = poly_degree(f);
    if (deg == 0) return false;
    if (deg == 1) return true;
    // Trial division by all monic polynomials of degree 1..deg/2.
    for (unsigned d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t v = 0; v < count; ++v) {
            Poly divisor = poly_from_index(v, p, d + 1);
            divisor[d] = 1;
            Poly r = poly_rem(f, divisor, p);
            if (poly_degree(r) == 0 && r[0] == 0) return false;
        }
    }
    return true;
}

Poly canonical_modulus(unsigned p, unsigned m) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < m; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
        Poly f = poly_from_index(v, p, m + 1);
        f[m] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw Error(Errc::ReducibleModulus, "no irreducible polynomial found"); // unreachable
}

std::vector<unsigned> prime_factors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

felem index_of_poly(const Poly& a, unsigned p, unsigned m) {
    std::uint32_t v = 0;
    for (unsigned i = m; i > 0; --i) v = v * p + a[i - 1];
    return static_cast<felem>(v);
}

} // namespace

FieldPtr Field::make(unsigned p, unsigned m) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, "characteristic " + std::to_string(p));
    if (m < 1) throw Error(Errc::FieldTooLarge, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder)
            throw Error(Errc::FieldTooLarge, std::to_string(p) + "^" + std::to_string(m));
    }
    Poly mod = canonical_modulus(p, m);
    return make(p, m, mod);
}

FieldPtr Field::make(unsigned p, unsigned m, const std::vector<unsigned>& modulus) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, "characteristic " + std::to_string(p));
    if (m < 1) throw Error(Errc::FieldTooLarge, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder)
            throw Error(Errc::FieldTooLarge, std::to_string(p) + "^" + std::to_string(m));
    }
    if (modulus.size() != m + 1)
        throw Error(Errc::ReducibleModulus, "modulus must have m+1 coefficients");
    Poly mod(modulus);
    for (auto& c : mod) c %= p;
    if (mod[m] != 1) throw Error(Errc::ReducibleModulus, "modulus must be monic");
    if (!is_irreducible(mod, p))
        throw Error(Errc::ReducibleModulus, "modulus has a proper factor");

    auto field = std::shared_ptr<Field>(new Field());
    field->p_ = p;
    field->m_ = m;
    field->q_ = static_cast<unsigned>(q);
    field->modulus_ = mod;
    field->small_ = q <= 256;
    field->build_tables();
    return field;
}

void Field::build_tables() {
    const unsigned p = p_, m = m_, q = q_;

    auto to_poly = [&](felem a) { return poly_from_index(a, p, m); };
    auto raw_mul = [&](felem a, felem b) {
        return index_of_poly(poly_mul_mod(to_poly(a), to_poly(b), modulus_, p), p, m);
    };
    auto raw_pow = [&](felem a, std::uint64_t e) {
        felem acc = 1, base = a;
        while (e) {
            if (e & 1) acc = raw_mul(acc, base);
            base = raw_mul(base, base);
            e >>= 1;
        }
        return acc;
    };

    // Find a generator of the multiplicative group.
    auto factors = prime_factors(q - 1);
    for (felem cand = 1; cand < q; ++cand) {
        bool good = true;
        for (unsigned f : factors) {
            if (raw_pow(cand, (q - 1) / f) == 1) {
                good = false;
                break;
            }
        }
        if (good) {
            generator_ = cand;
            break;
        }
    }

    exp_.resize(q - 1);
    log_.assign(q, 0);
    felem cur = 1;
    for (unsigned i = 0; i + 1 < q; ++i) {
        exp_[i] = cur;
        log_[cur] = i;
        cur = raw_mul(cur, generator_);
    }

    neg_table_.resize(q);
    for (unsigned a = 0; a < q; ++a) {
        auto da = poly_from_index(a, p, m);
        for (auto& c : da) c = (p - c) % p;
        neg_table_[a] = index_of_poly(da, p, m);
    }

    inv_table_.assign(q, 0);
    for (unsigned a = 1; a < q; ++a) inv_table_[a] = exp_[(q - 1 - log_[a]) % (q - 1)];

    if (small_) {
        mul_table_.assign(std::size_t(q) * q, 0);
        add_table_.assign(std::size_t(q) * q, 0);
        for (unsigned a = 0; a < q; ++a) {
            auto da = poly_from_index(a, p, m);
            for (unsigned b = 0; b < q; ++b) {
                auto s = poly_from_index(b, p, m);
                for (unsigned i = 0; i < m; ++i) s[i] = (s[i] + da[i]) % p;
                add_table_[std::size_t(a) * q + b] = index_of_poly(s, p, m);
                mul_table_[std::size_t(a) * q + b] = (a && b) ? raw_mul(a, b) : 0;
            }
        }
    }
}

felem Field::add(felem a, felem b) const {
    if (small_) return add_table_[std::size_t(a) * q_ + b];
    if (p_ == 2) return a ^ b;
    std::uint32_t out = 0, scale = 1, x = a, y = b;
    for (unsigned i = 0; i < m_; ++i) {
        out += ((x + y) % p_) * scale;
        x /= p_;
        y /= p_;
        scale *= p_;
    }
    return static_cast<felem>(out);
}

felem Field::neg(felem a) const { return neg_table_[a]; }

felem Field::sub(felem a, felem b) const { return add(a, neg_table_[b]); }

felem Field::mul(felem a, felem b) const {
    if (small_) return mul_table_[std::size_t(a) * q_ + b];
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

felem Field::inv(felem a) const {
    if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
    return inv_table_[a];
}

felem Field::div(felem a, felem b) const { return mul(a, inv(b)); }

felem Field::pow(felem a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    std::uint64_t r = (e % (q_ - 1)) * log_[a] % (q_ - 1);
    return exp_[r];
}

std::vector<unsigned> Field::digits(felem a) const { return poly_from_index(a, p_, m_); }

bool Field::same_as(const Field& other) const {
    return this == &other ||
           (p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_);
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "GF(" << q_ << ")";
    if (m_ > 1) {
        os << " = GF(" << p_ << "^" << m_ << "), modulus";
        for (unsigned i = 0; i <= m_; ++i) os << " " << modulus_[i];
    }
    return os.str();
}

Element::Element(FieldPtr field, felem value) : field_(std::move(field)), value_(value) {
    if (value_ >= field_->order())
        throw Error(Errc::IndexOutOfRange, "element index >= field order");
}

namespace {
const Field& common_field(const Element& a, const Element& b) {
    if (!a.field()->same_as(*b.field()))
        throw Error(Errc::MixedFields, a.field()->describe() + " vs " + b.field()->describe());
    return *a.field();
}
} // namespace

Element operator+(const Element& a, const Element& b) {
    return {a.field(), common_field(a, b).add(a.index(), b.index())};
}
Element operator-(const Element& a, const Element& b) {
    return {a.field(), common_field(a, b).sub(a.index(), b.index())};
}
Element operator*(const Element& a, const Element& b) {
    return {a.field(), common_field(a, b).mul(a.index(), b.index())};
}
Element operator/(const Element& a, const Element& b) {
    return {a.field(), common_field(a, b).div(a.index(), b.index())};
}
bool operator==(const Element& a, const Element& b) {
    return common_field(a, b), a.index() == b.index();
}

std::vector<Element> enumerate_elements(const FieldPtr& field) {
    std::vector<Element> out;
    out.reserve(field->order());
    for (unsigned i = 0; i < field->order(); ++i)
        out.emplace_back(field, static_cast<felem>(i));
    return out;
}

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::FieldTooLarge: return "FieldTooLarge";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::MixedFields: return "MixedFields";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::ShapeMismatch: return "ShapeMismatch";
        case Errc::ZeroMatrix: return "ZeroMatrix";
        case Errc::SelfDualDegenerate: return "SelfDualDegenerate";
        case Errc::EnumerationTooLarge: return "EnumerationTooLarge";
        case Errc::NotAPermutation: return "NotAPermutation";
        case Errc::BudgetZero: return "BudgetZero";
        case Errc::ExhaustiveTooLarge: return "ExhaustiveTooLarge";
        case Errc::ZeroWeightEntry: return "ZeroWeightEntry";
        case Errc::DegreeTooSmall: return "DegreeTooSmall";
        case Errc::GenusTooSmall: return "GenusTooSmall";
        case Errc::NotIncreasing: return "NotIncreasing";
        case Errc::BoundsViolated: return "BoundsViolated";
        case Errc::SymmetryViolated: return "SymmetryViolated";
        case Errc::BelowDomain: return "BelowDomain";
        case Errc::OutOfDomain: return "OutOfDomain";
        case Errc::UnsupportedQ: return "UnsupportedQ";
        case Errc::AbundantRegime: return "AbundantRegime";
        case Errc::HypothesisViolated: return "HypothesisViolated";
        case Errc::ParseError: return "ParseError";
    }
    return "UnknownError";
}

} // namespace agtrellis
