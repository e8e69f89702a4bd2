#include "cobalt/cobordism.hpp"

#include "cobalt/error.hpp"

#include <charconv>
#include <limits>
#include <mutex>
#include <vector>

namespace cobalt {

long partition_count(long m)
{
    if (m < 0)
        return 0;
    static std::mutex mu;
    static std::vector<long> table{1};
    std::lock_guard lock(mu);
    while (static_cast<long>(table.size()) <= m) {
        long n = static_cast<long>(table.size());
        __int128 total = 0;
        for (long k = 1;; ++k) {
            long g1 = k * (3 * k - 1) / 2;
            if (g1 > n)
                break;
            long sign = k % 2 ? 1 : -1;
            total += sign * static_cast<__int128>(table[static_cast<std::size_t>(n - g1)]);
            long g2 = k * (3 * k + 1) / 2;
            if (g2 <= n)
                total += sign * static_cast<__int128>(table[static_cast<std::size_t>(n - g2)]);
        }
        if (total > std::numeric_limits<long>::max())
            throw Error(ErrorCode::BoundExceeded, "partition count of " + std::to_string(n) + " overflows");
        table.push_back(static_cast<long>(total));
    }
    return table[static_cast<std::size_t>(m)];
}

long lazard_rank(long p, long q) { return p == 2 * q && q <= 0 ? partition_count(-q) : 0; }

FieldDescriptor FieldDescriptor::finite_field(long q)
{
    long base = 0;
    for (long f = 2; f <= q; ++f)
        if (q % f == 0) {
            base = f;
            break;
        }
    long v = q;
    while (base > 1 && v % base == 0)
        v /= base;
    if (q < 2 || v != 1)
        throw Error(ErrorCode::InvalidArgument, "finite field order " + std::to_string(q) + " is not a prime power");
    FieldDescriptor k;
    k.kind = Kind::FiniteField;
    k.q = q;
    k.r1 = 0;
    k.r2 = 0;
    return k;
}

FieldDescriptor FieldDescriptor::number_field(long r1, long r2)
{
    if (r1 < 0 || r2 < 0 || r1 + 2 * r2 < 1)
        throw Error(ErrorCode::InvalidArgument, "number field needs r1, r2 >= 0 and r1 + 2 r2 >= 1");
    FieldDescriptor k;
    k.kind = Kind::NumberField;
    k.r1 = r1;
    k.r2 = r2;
    return k;
}

namespace {

long parse_long(std::string_view s, const std::string& context)
{
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw Error(ErrorCode::SyntaxError, "bad integer '" + std::string(s) + "' in " + context);
    return v;
}

} // namespace

FieldDescriptor FieldDescriptor::parse(const std::string& text)
{
    if (text == "Q")
        return rationals();
    if (text.size() > 1 && (text[0] == 'F' || text[0] == 'f'))
        return finite_field(parse_long(std::string_view(text).substr(1), "field '" + text + "'"));
    const std::string prefix = "number:";
    if (text.starts_with(prefix)) {
        std::string_view rest = std::string_view(text).substr(prefix.size());
        auto comma = rest.find(',');
        if (comma == std::string_view::npos)
            throw Error(ErrorCode::SyntaxError, "expected number:r1,r2, got '" + text + "'");
        return number_field(parse_long(rest.substr(0, comma), text), parse_long(rest.substr(comma + 1), text));
    }
    throw Error(ErrorCode::SyntaxError, "unknown field '" + text + "'; use Q, F<q> or number:r1,r2");
}

std::string FieldDescriptor::name() const
{
    if (kind == Kind::FiniteField)
        return "F" + std::to_string(q);
    if (r1 == 1 && r2 == 0)
        return "Q";
    return "number:" + std::to_string(r1) + "," + std::to_string(r2);
}

bool DimExpr::effectively_zero(const FieldDescriptor& k) const
{
    return q_mult == 0 && (units_mult == 0 || k.kind == FieldDescriptor::Kind::FiniteField);
}

DimExpr& DimExpr::operator+=(const DimExpr& o)
{
    q_mult += o.q_mult;
    units_mult += o.units_mult;
    return *this;
}

std::string DimExpr::to_string() const
{
    if (is_zero())
        return "0";
    std::string out;
    if (q_mult)
        out = "Q^" + std::to_string(q_mult);
    if (units_mult) {
        if (!out.empty())
            out += " + ";
        out += "(k*⊗Q)^" + std::to_string(units_mult);
    }
    return out;
}

DimExpr motivic_ranks(const FieldDescriptor& k, Bidegree bd)
{
    if (bd.p == 0 && bd.q == 0)
        return {1, 0};
    if (bd.p == 1 && bd.q == 1)
        return {0, 1};
    if (k.kind == FieldDescriptor::Kind::FiniteField)
        return {};
    if (bd.p == 1 && bd.q > 1 && bd.q % 2 == 1)
        return {bd.q % 4 == 3 ? k.r2 : k.r1 + k.r2, 0};
    return {};
}

std::map<Bidegree, DimExpr> mgl_rational_table(const FieldDescriptor& k, const TableWindow& w)
{
    if (w.p_lo > w.p_hi || w.q_lo > w.q_hi)
        throw Error(ErrorCode::WindowEmpty, "table window is empty");
    std::map<Bidegree, DimExpr> out;
    for (long p = w.p_lo; p <= w.p_hi; ++p)
        for (long q = w.q_lo; q <= w.q_hi; ++q) {
            DimExpr e;
            // motivic_ranks vanishes unless its first index is 0 or 1.
            for (long m = 0; p + 2 * m <= 1; ++m)
                e += motivic_ranks(k, {p + 2 * m, q + m}).scaled(partition_count(m));
            out[{p, q}] = e;
        }
    return out;
}

DimExpr number_field_closed_form(long r1, long r2, Bidegree bd)
{
    auto L = [](long two_i) { return two_i % 2 == 0 ? lazard_rank(two_i, two_i / 2) : 0; };
    if (bd.p % 2 == 0) {
        long i = bd.p / 2;
        return bd.q == i ? DimExpr{L(2 * i), 0} : DimExpr{};
    }
    long i = (bd.p - 1) / 2;
    long j = bd.q;
    long rank = L(2 * i);
    long diff = j - i;
    if (diff == 1 && i <= 0)
        return {0, rank};
    if (diff > 1 && ((diff % 4) + 4) % 4 == 3)
        return {rank * r2, 0};
    if (diff > 1 && ((diff % 4) + 4) % 4 == 1)
        return {rank * (r1 + r2), 0};
    return {};
}

Check verify_number_field_corollary(long r1, long r2, const TableWindow& w)
{
    FieldDescriptor k = FieldDescriptor::number_field(r1, r2);
    Check check{"cobordism.number_field(" + std::to_string(r1) + "," + std::to_string(r2) + ")",
                "cobordism.number_field_table", true, {}, {}};
    auto table = mgl_rational_table(k, w);
    long nonzero = 0;
    for (const auto& [bd, e] : table) {
        DimExpr closed = number_field_closed_form(r1, r2, bd);
        if (!e.is_zero())
            ++nonzero;
        if (e != closed) {
            check.pass = false;
            check.witness = {{"p", bd.p}, {"q", bd.q}, {"convolution", e.to_string()}, {"closed_form", closed.to_string()}};
            break;
        }
    }
    check.details = {{"field", k.name()},
                     {"window", {{"p", {w.p_lo, w.p_hi}}, {"q", {w.q_lo, w.q_hi}}}},
                     {"bidegrees", table.size()},
                     {"nonzero_entries", nonzero}};
    return check;
}

Check verify_finite_field_table(long q, const TableWindow& w)
{
    FieldDescriptor k = FieldDescriptor::finite_field(q);
    Check check{"cobordism.finite_field(" + std::to_string(q) + ")", "cobordism.finite_field_table", true, {}, {}};
    auto table = mgl_rational_table(k, w);
    for (const auto& [bd, e] : table) {
        bool diagonal = bd.p == 2 * bd.q;
        long expected = diagonal ? partition_count(-bd.q) : 0;
        bool ok = e.q_mult == expected && (diagonal || e.effectively_zero(k));
        if (!ok) {
            check.pass = false;
            check.witness = {{"p", bd.p}, {"q", bd.q}, {"entry", e.to_string()}, {"expected_q_mult", expected}};
            break;
        }
    }
    check.details = {{"field", k.name()}, {"bidegrees", table.size()}};
    return check;
}

std::string table_csv(const TableWindow& w, const std::map<Bidegree, DimExpr>& table)
{
    std::string out = "p\\q";
    for (long q = w.q_lo; q <= w.q_hi; ++q)
        out += "," + std::to_string(q);
    out += "\n";
    for (long p = w.p_lo; p <= w.p_hi; ++p) {
        out += std::to_string(p);
        for (long q = w.q_lo; q <= w.q_hi; ++q) {
            auto it = table.find({p, q});
            out += "," + (it == table.end() ? std::string("0") : it->second.to_string());
        }
        out += "\n";
    }
    return out;
}

nlohmann::json table_json(const FieldDescriptor& k, const TableWindow& w, const std::map<Bidegree, DimExpr>& table)
{
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [bd, e] : table) {
        if (e.is_zero())
            continue;
        nlohmann::json j = {{"p", bd.p}, {"q", bd.q}, {"q_mult", e.q_mult}, {"units_mult", e.units_mult},
                            {"text", e.to_string()}};
        if (k.kind == FieldDescriptor::Kind::FiniteField)
            j["effective_dimension"] = e.q_mult;
        else if (e.units_mult == 0)
            j["effective_dimension"] = e.q_mult;
        else
            j["effective_dimension"] = "infinite";
        entries.push_back(j);
    }
    return {{"field", k.name()},
            {"window", {{"p", {w.p_lo, w.p_hi}}, {"q", {w.q_lo, w.q_hi}}}},
            {"nonzero", entries}};
}

} // namespace cobalt
