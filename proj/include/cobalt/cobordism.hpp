#pragma once

#include "cobalt/report.hpp"

#include <json.hpp>

#include <compare>
#include <map>
#include <string>

namespace cobalt {

/// Number of partitions of m by Euler's pentagonal recurrence; 0 for m < 0.
/// Throws BoundExceeded when the value would overflow a long.
long partition_count(long m);

/// Rank of the Lazard ring in cohomological bidegree (p, q), |x_i| = (-2i, -i).
long lazard_rank(long p, long q);

struct FieldDescriptor {
    enum class Kind { FiniteField, NumberField };
    Kind kind = Kind::NumberField;
    long q = 0;
    long r1 = 1;
    long r2 = 0;

    static FieldDescriptor finite_field(long q);
    static FieldDescriptor number_field(long r1, long r2);
    static FieldDescriptor rationals() { return number_field(1, 0); }
    /// "Q", "F<q>" or "number:r1,r2".
    static FieldDescriptor parse(const std::string& text);
    std::string name() const;
};

/// q_mult copies of Q plus units_mult copies of k^* tensor Q.
struct DimExpr {
    long q_mult = 0;
    long units_mult = 0;

    bool is_zero() const { return q_mult == 0 && units_mult == 0; }
    /// Zero when the Q-dimension vanishes; k^* tensor Q = 0 for finite fields.
    bool effectively_zero(const FieldDescriptor& k) const;
    DimExpr& operator+=(const DimExpr& o);
    DimExpr scaled(long c) const { return {q_mult * c, units_mult * c}; }
    /// "0", "Q^2", "(k*⊗Q)^3" or both joined by " + ".
    std::string to_string() const;
    bool operator==(const DimExpr&) const = default;
};

struct Bidegree {
    long p = 0;
    long q = 0;
    auto operator<=>(const Bidegree&) const = default;
};

/// Rational motivic cohomology of the field, as tabulated input data.
DimExpr motivic_ranks(const FieldDescriptor& k, Bidegree bd);

struct TableWindow {
    long p_lo = -10;
    long p_hi = 10;
    long q_lo = -5;
    long q_hi = 5;
};

/// entry(p, q) = sum_m P(m) motivic_ranks(k, (p + 2m, q + m)). Throws WindowEmpty.
std::map<Bidegree, DimExpr> mgl_rational_table(const FieldDescriptor& k, const TableWindow& w);

/// Case table for MGL^{p,q}(k) tensor Q of a number field in closed form.
DimExpr number_field_closed_form(long r1, long r2, Bidegree bd);

/// Convolution against closed form on every bidegree of the window.
Check verify_number_field_corollary(long r1, long r2, const TableWindow& w);

/// Q^{P(-i)} at (2i, i) and effectively 0 elsewhere.
Check verify_finite_field_table(long q, const TableWindow& w);

std::string table_csv(const TableWindow& w, const std::map<Bidegree, DimExpr>& table);
nlohmann::json table_json(const FieldDescriptor& k, const TableWindow& w, const std::map<Bidegree, DimExpr>& table);

} // namespace cobalt
