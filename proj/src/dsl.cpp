#include "fibrous/dsl.hpp"

#include <cctype>
#include <map>

#include "fibrous/checked.hpp"

namespace fibrous {

namespace {

enum class ParamStyle { caret, underscore, parens };

struct NameInfo {
    ParamStyle style;
    int arity; // -1: variadic with at least one parameter
};

// The notation's name set is closed; new spaces enter through the catalog,
// not the grammar.
const std::map<std::string, NameInfo, std::less<>>& name_table() {
    static const std::map<std::string, NameInfo, std::less<>> table = {
        {"S", {ParamStyle::caret, 1}},        {"RP", {ParamStyle::caret, 1}},
        {"D", {ParamStyle::caret, 1}},        {"T", {ParamStyle::caret, 1}},
        {"M", {ParamStyle::underscore, 1}},   {"N", {ParamStyle::underscore, 1}},
        {"rosette", {ParamStyle::parens, 1}}, {"chain", {ParamStyle::parens, 1}},
        {"cw", {ParamStyle::parens, -1}},
    };
    return table;
}

bool is_name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c));
}

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c));
}

} // namespace

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t begin = i;
            std::int64_t value = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                try {
                    value = checked_add(checked_mul(value, 10), text[i] - '0');
                } catch (const OverflowError&) {
                    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                        ++i;
                    throw ParseError("integer literal out of range", begin, i);
                }
                ++i;
            }
            out.push_back({TokenKind::integer, begin, i,
                           std::string(text.substr(begin, i - begin)), value});
            continue;
        }
        if (is_name_start(c)) {
            const std::size_t begin = i;
            while (i < text.size() && is_name_char(text[i]))
                ++i;
            out.push_back({TokenKind::name, begin, i,
                           std::string(text.substr(begin, i - begin)), 0});
            continue;
        }
        TokenKind kind;
        switch (c) {
        case '^': kind = TokenKind::caret; break;
        case '_': kind = TokenKind::underscore; break;
        case '*': kind = TokenKind::star; break;
        case '+': kind = TokenKind::plus; break;
        case '(': kind = TokenKind::lparen; break;
        case ')': kind = TokenKind::rparen; break;
        case ',': kind = TokenKind::comma; break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", i, i + 1);
        }
        out.push_back({kind, i, i + 1, std::string(1, c), 0});
        ++i;
    }
    out.push_back({TokenKind::end, text.size(), text.size(), "", 0});
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src), toks_(lex(src)) {}

    TermPtr run() {
        if (peek().kind == TokenKind::end)
            throw ParseError("empty expression", 0, src_.size());
        TermPtr t = parse_expr(false);
        const Token& tk = peek();
        if (tk.kind == TokenKind::rparen)
            throw ParseError("unmatched ')'", tk.begin, tk.end);
        if (tk.kind != TokenKind::end)
            throw ParseError("unexpected input after a complete term; space terms cannot be "
                             "juxtaposed",
                             tk.begin, tk.end);
        return t;
    }

private:
    const Token& peek() const { return toks_[pos_]; }

    const Token& take() { return toks_[pos_++]; }

    TermPtr parse_expr(bool in_running) {
        std::vector<TermPtr> parts;
        parts.push_back(parse_fibrous(in_running));
        while (peek().kind == TokenKind::plus) {
            take();
            parts.push_back(parse_fibrous(in_running));
        }
        return parts.size() == 1 ? std::move(parts[0]) : sum(std::move(parts));
    }

    TermPtr parse_fibrous(bool in_running) {
        if (peek().kind == TokenKind::lparen && !in_running)
            throw ParseError("a decomposition cannot start with a running fiber group; a "
                             "transitional space must come first",
                             peek().begin, peek().end);
        TermPtr first = parse_atom(in_running);
        if (peek().kind != TokenKind::lparen)
            return first;

        std::vector<TermPtr> transitional{std::move(first)};
        std::vector<TermPtr> running;
        while (peek().kind == TokenKind::lparen) {
            const Token open = take();
            running.push_back(parse_expr(true));
            if (peek().kind != TokenKind::rparen)
                throw ParseError("unclosed running fiber group", open.begin,
                                 peek().kind == TokenKind::end ? src_.size() : peek().end);
            take();

            const Token& next = peek();
            if (next.kind == TokenKind::lparen)
                throw ParseError("two adjacent running fiber groups; a transitional space is "
                                 "required between them",
                                 next.begin, next.end);
            if (next.kind == TokenKind::plus || next.kind == TokenKind::end ||
                next.kind == TokenKind::rparen)
                throw ParseError("a decomposition cannot end with a running fiber group; a "
                                 "transitional space must follow",
                                 open.begin, next.begin);
            transitional.push_back(parse_atom(in_running));
        }
        return decomp(std::move(transitional), std::move(running));
    }

    TermPtr parse_atom(bool in_running) {
        const Token& t = peek();
        switch (t.kind) {
        case TokenKind::integer: {
            const Token count = take();
            const Token& next = peek();
            if (next.kind == TokenKind::name && next.text == "p") {
                take();
                return finite_space(count.value);
            }
            if (next.kind == TokenKind::star) {
                take();
                if (count.value < 1)
                    throw ParseError("a multiple needs a count of at least 1", count.begin,
                                     count.end);
                return multiple(count.value, parse_atom(in_running));
            }
            throw ParseError("expected 'p' or '*' after the integer", count.begin,
                             next.kind == TokenKind::end ? src_.size() : next.end);
        }
        case TokenKind::name: {
            const Token name = take();
            if (name.text == "p")
                return finite_space(1);
            const auto it = name_table().find(name.text);
            if (it == name_table().end())
                throw ParseError("unknown space name '" + name.text + "'", name.begin, name.end);
            return catalog_ref(name.text, parse_params(name, it->second));
        }
        case TokenKind::lparen: {
            if (!in_running)
                throw ParseError("a parenthesized group denotes a running fiber and cannot "
                                 "stand here",
                                 t.begin, t.end);
            const Token open = take();
            TermPtr inner = parse_expr(true);
            if (peek().kind != TokenKind::rparen)
                throw ParseError("unclosed group", open.begin,
                                 peek().kind == TokenKind::end ? src_.size() : peek().end);
            take();
            return inner;
        }
        default:
            throw ParseError("expected a space term", t.begin,
                             t.kind == TokenKind::end ? src_.size() : t.end);
        }
    }

    std::vector<std::int64_t> parse_params(const Token& name, NameInfo info) {
        std::vector<std::int64_t> params;
        switch (info.style) {
        case ParamStyle::caret:
        case ParamStyle::underscore: {
            const char marker = info.style == ParamStyle::caret ? '^' : '_';
            const TokenKind want =
                info.style == ParamStyle::caret ? TokenKind::caret : TokenKind::underscore;
            if (peek().kind != want)
                throw ParseError("'" + name.text + "' takes its parameter as " + name.text +
                                     marker + "<integer>",
                                 name.begin, peek().kind == TokenKind::end ? src_.size()
                                                                           : peek().end);
            take();
            params.push_back(expect_integer("parameter of '" + name.text + "'"));
            break;
        }
        case ParamStyle::parens: {
            if (peek().kind != TokenKind::lparen)
                throw ParseError("'" + name.text + "' takes parenthesized parameters: " +
                                     name.text + "(<integer>,...)",
                                 name.begin, peek().kind == TokenKind::end ? src_.size()
                                                                           : peek().end);
            const Token open = take();
            params.push_back(expect_integer("parameter of '" + name.text + "'"));
            while (peek().kind == TokenKind::comma) {
                take();
                params.push_back(expect_integer("parameter of '" + name.text + "'"));
            }
            if (peek().kind != TokenKind::rparen)
                throw ParseError("expected ')' after the parameters of '" + name.text + "'",
                                 open.begin,
                                 peek().kind == TokenKind::end ? src_.size() : peek().end);
            const Token close = take();
            if (info.arity >= 0 && params.size() != static_cast<std::size_t>(info.arity))
                throw ParseError("'" + name.text + "' expects " + std::to_string(info.arity) +
                                     " parameter(s), got " + std::to_string(params.size()),
                                 name.begin, close.end);
            break;
        }
        }
        return params;
    }

    std::int64_t expect_integer(const std::string& what) {
        const Token& t = peek();
        if (t.kind != TokenKind::integer)
            throw ParseError("expected an integer as " + what, t.begin,
                             t.kind == TokenKind::end ? src_.size() : t.end);
        return take().value;
    }

    std::string_view src_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

void render_expr(const TermPtr& t, std::string& out);

void render_atom(const TermPtr& t, std::string& out) {
    if (const auto* f = std::get_if<Finite>(&t->node)) {
        if (f->points != 1)
            out += std::to_string(f->points);
        out += 'p';
        return;
    }
    if (const auto* m = std::get_if<Multiple>(&t->node)) {
        out += std::to_string(m->count);
        out += '*';
        render_atom(m->base, out);
        return;
    }
    if (const auto* r = std::get_if<CatalogRef>(&t->node)) {
        out += r->name;
        const auto it = name_table().find(r->name);
        const ParamStyle style = it == name_table().end() ? ParamStyle::parens : it->second.style;
        switch (style) {
        case ParamStyle::caret:
        case ParamStyle::underscore:
            out += style == ParamStyle::caret ? '^' : '_';
            out += r->params.empty() ? "0" : std::to_string(r->params[0]);
            break;
        case ParamStyle::parens:
            out += '(';
            for (std::size_t i = 0; i < r->params.size(); ++i) {
                if (i)
                    out += ',';
                out += std::to_string(r->params[i]);
            }
            out += ')';
            break;
        }
        return;
    }
    // Sums and decompositions are not atoms; group them. The grammar admits
    // such groups only inside running fibers.
    out += '(';
    render_expr(t, out);
    out += ')';
}

void render_fibrous(const TermPtr& t, std::string& out) {
    if (const auto* d = std::get_if<FibrousDecomposition>(&t->node)) {
        if (d->running.empty()) {
            // no written form of its own; prints as the sole fiber
            render_fibrous(d->transitional[0], out);
            return;
        }
        render_atom(d->transitional[0], out);
        for (std::size_t j = 0; j < d->running.size(); ++j) {
            out += '(';
            render_expr(d->running[j], out);
            out += ')';
            render_atom(d->transitional[j + 1], out);
        }
        return;
    }
    if (std::get_if<Sum>(&t->node)) {
        render_atom(t, out); // parenthesized
        return;
    }
    render_atom(t, out);
}

void render_expr(const TermPtr& t, std::string& out) {
    if (const auto* s = std::get_if<Sum>(&t->node)) {
        for (std::size_t i = 0; i < s->parts.size(); ++i) {
            if (i)
                out += '+';
            render_fibrous(s->parts[i], out);
        }
        return;
    }
    render_fibrous(t, out);
}

} // namespace

TermPtr parse(std::string_view text) {
    return Parser(text).run();
}

std::string render(const TermPtr& term) {
    if (!term)
        throw TermError("cannot render a null term");
    std::string out;
    render_expr(term, out);
    return out;
}

std::string format_parse_error(std::string_view text, const ParseError& e) {
    std::string out = "error: ";
    out += e.what();
    out += "\n  ";
    out += text;
    out += "\n  ";
    const std::size_t begin = e.begin() > text.size() ? text.size() : e.begin();
    std::size_t end = e.end() > text.size() ? text.size() : e.end();
    if (end <= begin)
        end = begin + 1;
    out.append(begin, ' ');
    out.append(end - begin, '^');
    out += '\n';
    return out;
}

} // namespace fibrous
