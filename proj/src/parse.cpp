#include "cobalt/parse.hpp"

#include "cobalt/error.hpp"

#include <cctype>
#include <string>

namespace cobalt {

namespace {

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, const RingPresentation& ring) : text_(text), ring_(ring) {}

    Polynomial parse()
    {
        skip_space();
        if (at_end())
            fail("empty expression");
        Polynomial p = expr();
        skip_space();
        if (!at_end())
            fail(std::string("unexpected '") + text_[pos_] + "'");
        return p;
    }

private:
    Polynomial expr()
    {
        Polynomial acc = term();
        while (true) {
            skip_space();
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term()
    {
        Polynomial acc = unary();
        while (true) {
            skip_space();
            if (peek('*')) {
                ++pos_;
                acc *= unary();
            } else if (peek('/')) {
                fail("division is not supported");
            } else {
                return acc;
            }
        }
    }

    Polynomial unary()
    {
        skip_space();
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }

    Polynomial power()
    {
        Polynomial base = atom();
        skip_space();
        if (!peek('^'))
            return base;
        ++pos_;
        skip_space();
        std::size_t start = pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("exponent must be a positive integer literal");
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        if (digits.size() > 6)
            fail_at(start, "exponent too large");
        unsigned e = static_cast<unsigned>(std::stoul(digits));
        if (e == 0)
            fail_at(start, "exponent must be a positive integer literal");
        return base.pow(e);
    }

    Polynomial atom()
    {
        skip_space();
        if (at_end())
            fail("unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            skip_space();
            if (!peek(')'))
                fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                digits += text_[pos_++];
            return Polynomial(Rational(Integer(digits)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            std::string name;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                name += text_[pos_++];
            if (auto idx = ring_.find(name))
                return Polynomial::generator(*idx);
            const std::string suffix = "_inv";
            if (name.size() > suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0) {
                std::string stem = name.substr(0, name.size() - suffix.size());
                if (auto idx = ring_.find(stem)) {
                    if (!ring_.generators()[static_cast<std::size_t>(*idx)].invertible)
                        fail_at(start, "generator '" + stem + "' is not invertible");
                    return Polynomial::generator(*idx, -1);
                }
            }
            fail_at(start, "unknown identifier '" + name + "'");
        }
        if (c == '/')
            fail("division is not supported");
        fail(std::string("unexpected '") + c + "'");
    }

    bool at_end() const { return pos_ >= text_.size(); }
    bool peek(char c) const { return !at_end() && text_[pos_] == c; }
    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
    [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const
    {
        throw Error(ErrorCode::SyntaxError, "line 1, column " + std::to_string(pos + 1) + ": " + msg);
    }

    std::string_view text_;
    const RingPresentation& ring_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_expression(std::string_view text, const RingPresentation& ring)
{
    return ExpressionParser(text, ring).parse();
}

nlohmann::json parse_json_text(std::string_view text)
{
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
        std::size_t line = 1;
        std::size_t col = 1;
        for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw Error(ErrorCode::SyntaxError,
                    "line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
    }
}

RingPresentation presentation_from_json(const nlohmann::json& doc)
{
    if (!doc.is_object())
        throw Error(ErrorCode::SyntaxError, "ring presentation must be a JSON object");
    Scalars scalars;
    std::string base = doc.value("base", std::string("Z"));
    if (base == "Z")
        scalars.base = Base::Z;
    else if (base == "Q")
        scalars.base = Base::Q;
    else
        throw Error(ErrorCode::SyntaxError, "base must be \"Z\" or \"Q\", got \"" + base + "\"");
    if (doc.contains("p_local") && !doc["p_local"].is_null())
        scalars.local_prime = doc["p_local"].get<long>();

    std::vector<GenSpec> gens;
    for (const auto& g : doc.value("generators", nlohmann::json::array())) {
        if (!g.is_object() || !g.contains("name"))
            throw Error(ErrorCode::SyntaxError, "generator entries need a name");
        gens.push_back({g["name"].get<std::string>(), g.value("adams_degree", 0), g.value("invertible", false)});
    }
    RingPresentation bare(scalars, gens);
    std::vector<Polynomial> rels;
    const auto relations = doc.value("relations", nlohmann::json::array());
    for (std::size_t i = 0; i < relations.size(); ++i) {
        try {
            rels.push_back(parse_expression(relations[i].get<std::string>(), bare));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::SyntaxError)
                throw;
            std::string msg = e.what();
            msg = msg.substr(msg.find(": ") + 2);
            throw Error(ErrorCode::SyntaxError, "relations[" + std::to_string(i) + "], " + msg);
        }
    }
    return RingPresentation(scalars, gens, std::move(rels));
}

RingPresentation parse_presentation(std::string_view json_text) { return presentation_from_json(parse_json_text(json_text)); }

nlohmann::json presentation_to_json(const RingPresentation& ring)
{
    nlohmann::json doc;
    doc["base"] = ring.base() == Base::Q ? "Q" : "Z";
    if (ring.scalars().local_prime)
        doc["p_local"] = *ring.scalars().local_prime;
    doc["generators"] = nlohmann::json::array();
    for (const auto& g : ring.generators())
        doc["generators"].push_back({{"name", g.name}, {"adams_degree", g.adams_degree}, {"invertible", g.invertible}});
    doc["relations"] = nlohmann::json::array();
    for (const auto& r : ring.relations())
        doc["relations"].push_back(ring.format(r));
    return doc;
}

} // namespace cobalt
