// agtrellis: trellis state complexity of codes from curves
// Copyright 2026 The agtrellis authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "agtrellis/errors.hpp"

namespace agtrellis {

/// Index of a field element within its field, always < q.
using felem = std::uint16_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Exact arithmetic in GF(p^m), q = p^m <= 65536.
///
/// Elements are dense indices: the index is the base-p encoding of the
/// coefficient vector (constant term least significant) of the residue
/// polynomial modulo a monic irreducible modulus of degree m. Index 0 is
/// the zero element and index 1 is the multiplicative identity.
///
/// Fields with q <= 256 carry full q*q multiplication/addition tables;
/// larger fields use discrete-log (exp/log) tables for multiplication and
/// digit arithmetic for addition. A Field is immutable after construction
/// and safe to share across threads.
class Field {
  public:
    /// Builds GF(p^m) with the canonical modulus: the first monic
    /// irreducible of degree m in coefficient order (constant term varies
    /// fastest), so canonical fields are reproducible across runs.
    static FieldPtr make(unsigned p, unsigned m);

    /// Builds GF(p^m) with an explicit modulus, given as m+1 coefficients
    /// from the constant term upward; must be monic and irreducible.
    static FieldPtr make(unsigned p, unsigned m, const std::vector<unsigned>& modulus);

    unsigned characteristic() const { return p_; }
    unsigned degree() const { return m_; }
    unsigned order() const { return q_; }
    const std::vector<unsigned>& modulus() const { return modulus_; }

    felem zero() const { return 0; }
    felem one() const { return 1; }

    felem add(felem a, felem b) const;
    felem sub(felem a, felem b) const;
    felem neg(felem a) const;
    felem mul(felem a, felem b) const;
    felem inv(felem a) const;
    felem div(felem a, felem b) const;
    felem pow(felem a, std::uint64_t e) const;

    /// Embeds an integer via the prime subfield (v mod p).
    felem from_int(std::uint64_t v) const { return static_cast<felem>(v % p_); }

    /// Coefficient vector of an element, constant term first, length m.
    std::vector<unsigned> digits(felem a) const;

    /// Structural equality: same p, m and modulus.
    bool same_as(const Field& other) const;

    std::string describe() const;

  private:
    Field() = default;
    void build_tables();

    unsigned p_ = 0, m_ = 0, q_ = 0;
    std::vector<unsigned> modulus_;
    bool small_ = false; // q <= 256: direct tables

    std::vector<felem> mul_table_; // q*q, small fields only
    std::vector<felem> add_table_; // q*q, small fields only
    std::vector<felem> neg_table_; // q
    std::vector<felem> inv_table_; // q (entry 0 unused)
    std::vector<felem> exp_;       // exp_[i] = gen^i, i in [0, q-1)
    std::vector<std::uint32_t> log_;
    felem generator_ = 0;
};

/// Checked element handle: an index paired with its field. Arithmetic
/// between handles of different fields throws MixedFields. Inner loops
/// should use the Field methods on raw indices instead.
class Element {
  public:
    Element(FieldPtr field, felem value);

    felem index() const { return value_; }
    const FieldPtr& field() const { return field_; }

    Element inverse() const { return {field_, field_->inv(value_)}; }
    Element pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }

    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator/(const Element& a, const Element& b);
    Element operator-() const { return {field_, field_->neg(value_)}; }

    friend bool operator==(const Element& a, const Element& b);
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  private:
    FieldPtr field_;
    felem value_;
};

/// All q elements in index order: 0, 1, ..., q-1.
std::vector<Element> enumerate_elements(const FieldPtr& field);

} // namespace agtrellis
