#include "abelian/spec_parser.hpp"

#include <algorithm>
#include <cctype>

namespace abelian {

namespace {

struct Token {
    enum class Kind { Atom, LParen, RParen, Separator, Equals, Arrow, End };
    Kind kind = Kind::End;
    std::string text;
    std::size_t column = 0;
};

const char* kind_name(Token::Kind k) {
    switch (k) {
        case Token::Kind::Atom: return "identifier or literal";
        case Token::Kind::LParen: return "'('";
        case Token::Kind::RParen: return "')'";
        case Token::Kind::Separator: return "',' or ';'";
        case Token::Kind::Equals: return "'='";
        case Token::Kind::Arrow: return "'->'";
        case Token::Kind::End: return "end of input";
    }
    return "?";
}

bool atom_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        std::size_t col = i + 1;
        if (c == '(') {
            out.push_back({Token::Kind::LParen, "(", col});
            ++i;
        } else if (c == ')') {
            out.push_back({Token::Kind::RParen, ")", col});
            ++i;
        } else if (c == ',' || c == ';') {
            out.push_back({Token::Kind::Separator, std::string(1, c), col});
            ++i;
        } else if (c == '=') {
            out.push_back({Token::Kind::Equals, "=", col});
            ++i;
        } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            out.push_back({Token::Kind::Arrow, "->", col});
            i += 2;
        } else if (atom_char(c) || c == '-' || c == '+') {
            // Atom: optionally signed run of word characters, optionally a
            // '/denominator' making a rational literal.
            std::size_t j = i;
            if (text[j] == '-' || text[j] == '+') ++j;
            if (j >= text.size() || !atom_char(text[j]))
                throw SpecError("dangling sign at column " + std::to_string(col), col);
            while (j < text.size() && atom_char(text[j])) ++j;
            if (j < text.size() && text[j] == '/') {
                std::size_t k = j + 1;
                while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
                if (k == j + 1)
                    throw SpecError("malformed rational literal at column " + std::to_string(col), col);
                j = k;
            }
            out.push_back({Token::Kind::Atom, text.substr(i, j - i), col});
            i = j;
        } else {
            throw SpecError(std::string("unexpected character '") + c + "' at column " +
                                std::to_string(col),
                            col);
        }
    }
    out.push_back({Token::Kind::End, "", text.size() + 1});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

    SpecPtr parse() {
        SpecPtr node = parse_call();
        expect(Token::Kind::End);
        return node;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }
    Token take() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }

    [[noreturn]] void fail(const std::string& expected) const {
        const Token& t = peek();
        std::string found = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
        throw SpecError("expected " + expected + " at column " + std::to_string(t.column) +
                            ", found " + found,
                        t.column);
    }

    Token expect(Token::Kind k) {
        if (peek().kind != k) fail(kind_name(k));
        return take();
    }

    SpecPtr parse_call() {
        Token head = expect(Token::Kind::Atom);
        auto node = std::make_shared<SpecNode>();
        node->head = head.text;
        if (peek().kind == Token::Kind::LParen) {
            node->is_call = true;
            take();
            if (peek().kind != Token::Kind::RParen) {
                node->args.push_back(parse_arg());
                while (peek().kind == Token::Kind::Separator) {
                    take();
                    node->args.push_back(parse_arg());
                }
            }
            expect(Token::Kind::RParen);
        }
        return node;
    }

    SpecNode::Arg parse_arg() {
        SpecNode::Arg arg;
        if (peek().kind != Token::Kind::Atom) fail("identifier, literal, or nested constructor");
        if (peek(1).kind == Token::Kind::Equals) {
            arg.name = take().text;
            take();  // '='
            arg.value = parse_call();
            return arg;
        }
        if (peek(1).kind == Token::Kind::Arrow) {
            arg.rule_from = take().text;
            take();  // '->'
            Token to = expect(Token::Kind::Atom);
            arg.value = std::make_shared<SpecNode>();
            arg.value->head = to.text;
            return arg;
        }
        arg.value = parse_call();
        return arg;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

SpecPtr parse_spec(const std::string& text) {
    return Parser(text).parse();
}

std::string render_spec(const SpecNode& node) {
    std::string s = node.head;
    if (!node.is_call) return s;
    s += "(";
    for (std::size_t i = 0; i < node.args.size(); ++i) {
        if (i) s += ",";
        const auto& arg = node.args[i];
        if (!arg.name.empty()) s += arg.name + "=";
        if (!arg.rule_from.empty()) s += arg.rule_from + "->";
        s += render_spec(*arg.value);
    }
    return s + ")";
}

namespace {

[[noreturn]] void eval_fail(const SpecNode& node, const std::string& what) {
    throw std::invalid_argument("in '" + render_spec(node) + "': " + what);
}

const SpecNode& named_arg(const SpecNode& node, const std::string& name) {
    for (const auto& a : node.args)
        if (a.name == name) return *a.value;
    eval_fail(node, "missing argument '" + name + "'");
}

const SpecNode* named_arg_opt(const SpecNode& node, const std::string& name) {
    for (const auto& a : node.args)
        if (a.name == name) return a.value.get();
    return nullptr;
}

const SpecNode& positional(const SpecNode& node, std::size_t i) {
    std::size_t seen = 0;
    for (const auto& a : node.args) {
        if (!a.name.empty() || !a.rule_from.empty()) continue;
        if (seen == i) return *a.value;
        ++seen;
    }
    eval_fail(node, "missing positional argument " + std::to_string(i + 1));
}

std::size_t positional_count(const SpecNode& node) {
    std::size_t n = 0;
    for (const auto& a : node.args)
        if (a.name.empty() && a.rule_from.empty()) ++n;
    return n;
}

void expect_arity(const SpecNode& node, std::size_t n) {
    if (positional_count(node) != n)
        eval_fail(node, "expected " + std::to_string(n) + " argument(s)");
}

Word atom_word(const SpecNode& node) {
    if (node.is_call || node.head.empty()) eval_fail(node, "expected a letter string");
    return node.head;
}

long atom_long(const SpecNode& node) {
    Rational r = Rational::parse(node.head);
    if (!r.is_integer() || !r.num().fits_slong_p()) eval_fail(node, "expected a small integer");
    return r.num().get_si();
}

bool atom_bool(const SpecNode& node) {
    if (node.head == "true") return true;
    if (node.head == "false") return false;
    eval_fail(node, "expected true or false");
}

}  // namespace

QuadExt eval_number(const SpecNode& node) {
    if (node.head == "quad") {
        expect_arity(node, 3);
        Rational a = Rational::parse(positional(node, 0).head);
        Rational b = Rational::parse(positional(node, 1).head);
        long d = atom_long(positional(node, 2));
        return QuadExt(a, b, d);
    }
    if (node.is_call) eval_fail(node, "expected a number literal (p/q or quad(...))");
    return QuadExt(Rational::parse(node.head));
}

BinaryRotationSpec binary_spec_from(const SpecNode& node) {
    BinaryRotationSpec spec;
    spec.alpha = eval_number(named_arg(node, "alpha"));
    spec.rho = TorusPoint(eval_number(named_arg(node, "rho")));
    std::string conv = named_arg(node, "conv").head;
    if (conv == "under")
        spec.convention = EndpointConvention::Underline;
    else if (conv == "bar")
        spec.convention = EndpointConvention::Bar;
    else
        eval_fail(node, "conv must be 'under' or 'bar'");
    return spec;
}

TernaryRotationSpec ternary_spec_from(const SpecNode& node) {
    TernaryRotationSpec spec;
    spec.alpha = eval_number(named_arg(node, "alpha"));
    spec.zeta = TorusPoint(eval_number(named_arg(node, "zeta")));
    spec.rho = TorusPoint(eval_number(named_arg(node, "rho")));
    spec.one_in_j1 = atom_bool(named_arg(node, "one_in_j1"));
    spec.zeta_in_j2 = atom_bool(named_arg(node, "zeta_in_j2"));
    return spec;
}

InfiniteWord eval_spec(const SpecNode& node) {
    const std::string& h = node.head;
    if (h == "tm") return thue_morse();
    if (h == "fib") return fibonacci_word();
    if (h == "trib") return tribonacci_word();
    if (h == "champ") {
        expect_arity(node, 1);
        return champernowne(static_cast<int>(atom_long(positional(node, 0))));
    }
    if (h == "periodic") {
        expect_arity(node, 1);
        return periodic_word(atom_word(positional(node, 0)));
    }
    if (h == "preperiodic") {
        expect_arity(node, 2);
        return preperiodic_word(atom_word(positional(node, 0)), atom_word(positional(node, 1)));
    }
    if (h == "sturmian") return binary_rotation_word(binary_spec_from(node));
    if (h == "ternary") return ternary_rotation_word(ternary_spec_from(node));
    if (h == "interleave") {
        expect_arity(node, 3);
        return interleave(InterleaveSpec{eval_spec(positional(node, 0)), eval_spec(positional(node, 1)),
                                         eval_spec(positional(node, 2))});
    }
    if (h == "morphic") {
        MorphismSpec spec;
        for (const auto& arg : node.args) {
            if (!arg.rule_from.empty()) {
                if (arg.rule_from.size() != 1) eval_fail(node, "rule source must be one letter");
                if (!spec.images.emplace(arg.rule_from[0], arg.value->head).second)
                    eval_fail(node, "duplicate rule for letter " + arg.rule_from);
            }
        }
        Word start = atom_word(named_arg(node, "start"));
        if (start.size() != 1) eval_fail(node, "start must be a single letter");
        spec.start = start[0];
        if (spec.images.empty()) eval_fail(node, "morphic needs at least one rule");
        return morphic_fixed_point(spec);
    }
    if (h == "ar") return arnoux_rauzy(eval_spec(named_arg(node, "directive")));
    if (h == "fm") {
        FmSpec spec{atom_word(named_arg(node, "G")),
                    named_arg_opt(node, "E") ? atom_word(named_arg(node, "E")) : Word(),
                    named_arg_opt(node, "F") ? atom_word(named_arg(node, "F")) : Word(),
                    eval_spec(named_arg(node, "s"))};
        return fm_min_complexity_word(spec);
    }
    if (h == "prepend") {
        expect_arity(node, 2);
        return prepend(atom_word(positional(node, 0)), eval_spec(positional(node, 1)));
    }
    if (h == "shift") {
        expect_arity(node, 2);
        long k = atom_long(positional(node, 0));
        if (k < 0) eval_fail(node, "shift must be non-negative");
        return shifted(eval_spec(positional(node, 1)), static_cast<std::size_t>(k));
    }
    eval_fail(node, "unknown constructor '" + h + "'");
}

InfiniteWord word_from_spec(const std::string& text) {
    return eval_spec(*parse_spec(text));
}

}  // namespace abelian
