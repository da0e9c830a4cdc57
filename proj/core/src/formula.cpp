#include <rado/relations.hpp>

#include <cctype>

namespace rado
{
    SpecError::SpecError(std::size_t position, const std::string & what) :
        std::runtime_error("at position " + std::to_string(position) + ": " + what),
        _position(position)
    {
    }

    auto Formula::evaluate(std::span<const Vertex> t, const Graph & g) const -> bool
    {
        switch (op) {
        case Op::True: return true;
        case Op::False: return false;
        case Op::Edge: return t[lhs] != t[rhs] && g.adjacent(t[lhs], t[rhs]);
        case Op::Equal: return t[lhs] == t[rhs];
        case Op::Not: return ! children.front().evaluate(t, g);
        case Op::And:
            for (const auto & c : children)
                if (! c.evaluate(t, g))
                    return false;
            return true;
        case Op::Or:
            for (const auto & c : children)
                if (c.evaluate(t, g))
                    return true;
            return false;
        }
        return false;
    }

    auto Formula::max_variable() const -> std::optional<unsigned>
    {
        std::optional<unsigned> result;
        if (op == Op::Edge || op == Op::Equal)
            result = std::max(lhs, rhs);
        for (const auto & c : children)
            if (auto m = c.max_variable(); m && (! result || *m > *result))
                result = m;
        return result;
    }

    auto Formula::to_string() const -> std::string
    {
        auto var = [](unsigned i) { return "x" + std::to_string(i); };
        switch (op) {
        case Op::True: return "true";
        case Op::False: return "false";
        case Op::Edge: return "E(" + var(lhs) + "," + var(rhs) + ")";
        case Op::Equal: return var(lhs) + "=" + var(rhs);
        case Op::Not: return "!" + children.front().to_string();
        case Op::And:
        case Op::Or: {
            std::string s = "(";
            for (std::size_t i = 0; i < children.size(); ++i) {
                if (i > 0)
                    s += op == Op::And ? " & " : " | ";
                s += children[i].to_string();
            }
            return s + ")";
        }
        }
        return "?";
    }

    namespace
    {
        class FormulaParser
        {
        public:
            explicit FormulaParser(std::string_view text) :
                _text(text)
            {
            }

            auto parse() -> Formula
            {
                auto f = parse_or();
                skip_space();
                if (_pos != _text.size())
                    throw SpecError(_pos, "unexpected '" + std::string(1, _text[_pos]) + "'");
                return f;
            }

        private:
            void skip_space()
            {
                while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos])))
                    ++_pos;
            }

            auto accept(std::string_view token) -> bool
            {
                skip_space();
                if (_text.substr(_pos, token.size()) == token) {
                    _pos += token.size();
                    return true;
                }
                return false;
            }

            void expect(std::string_view token)
            {
                if (! accept(token))
                    throw SpecError(_pos, "expected '" + std::string(token) + "'");
            }

            auto parse_or() -> Formula
            {
                Formula first = parse_and();
                if (! peek_is('|'))
                    return first;
                Formula f{Formula::Op::Or, 0, 0, {std::move(first)}};
                while (accept("|"))
                    f.children.push_back(parse_and());
                return f;
            }

            auto parse_and() -> Formula
            {
                Formula first = parse_unary();
                if (! peek_is('&'))
                    return first;
                Formula f{Formula::Op::And, 0, 0, {std::move(first)}};
                while (accept("&"))
                    f.children.push_back(parse_unary());
                return f;
            }

            auto peek_is(char c) -> bool
            {
                skip_space();
                return _pos < _text.size() && _text[_pos] == c;
            }

            auto parse_unary() -> Formula
            {
                skip_space();
                if (_pos < _text.size() && _text[_pos] == '!' && _text.substr(_pos, 2) != "!=") {
                    ++_pos;
                    return Formula{Formula::Op::Not, 0, 0, {parse_unary()}};
                }
                if (accept("(")) {
                    auto f = parse_or();
                    expect(")");
                    return f;
                }
                return parse_atom();
            }

            auto parse_variable() -> unsigned
            {
                skip_space();
                const auto start = _pos;
                if (_pos < _text.size() && _text[_pos] == 'x')
                    ++_pos;
                const auto digits = _pos;
                while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos])))
                    ++_pos;
                if (_pos == digits)
                    throw SpecError(start, "expected a variable");
                if (_pos - digits > 6)
                    throw SpecError(start, "variable index too large");
                return static_cast<unsigned>(std::stoul(std::string(_text.substr(digits, _pos - digits))));
            }

            auto parse_atom() -> Formula
            {
                skip_space();
                const auto start = _pos;
                if (accept("true"))
                    return Formula{Formula::Op::True, 0, 0, {}};
                if (accept("false"))
                    return Formula{Formula::Op::False, 0, 0, {}};
                if (_pos < _text.size() && (_text[_pos] == 'E' || _text[_pos] == 'N')) {
                    const bool non_edge = _text[_pos] == 'N';
                    ++_pos;
                    expect("(");
                    auto a = parse_variable();
                    expect(",");
                    auto b = parse_variable();
                    expect(")");
                    Formula edge{Formula::Op::Edge, a, b, {}};
                    if (! non_edge)
                        return edge;
                    Formula distinct{Formula::Op::Not, 0, 0, {Formula{Formula::Op::Equal, a, b, {}}}};
                    return Formula{Formula::Op::And, 0, 0,
                        {Formula{Formula::Op::Not, 0, 0, {std::move(edge)}}, std::move(distinct)}};
                }
                if (_pos < _text.size() && (_text[_pos] == 'x' || std::isdigit(static_cast<unsigned char>(_text[_pos])))) {
                    auto a = parse_variable();
                    bool negated = false;
                    if (accept("!="))
                        negated = true;
                    else if (! accept("="))
                        throw SpecError(_pos, "expected '=' or '!='");
                    auto b = parse_variable();
                    Formula eq{Formula::Op::Equal, a, b, {}};
                    if (! negated)
                        return eq;
                    return Formula{Formula::Op::Not, 0, 0, {std::move(eq)}};
                }
                throw SpecError(start, "unknown atom");
            }

            std::string_view _text;
            std::size_t _pos = 0;
        };
    }

    auto parse_formula(std::string_view text) -> Formula { return FormulaParser(text).parse(); }
}
