#include "bca/parse.hpp"

#include <algorithm>
#include <cctype>

namespace bca {

namespace {

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

SpecFile parse_spec_text(const std::string& text) {
    SpecFile spec;
    bool saw_atoms = false, saw_contact = false;
    int edges_line = 0;
    std::vector<std::pair<int, int>> edge_positions;  // line, col per edge
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string line = text.substr(pos, eol == std::string::npos ? eol : eol - pos);
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);

        std::size_t i = 0;
        auto skip_ws = [&] { while (i < line.size() && std::isspace((unsigned char)line[i])) ++i; };
        skip_ws();
        if (i < line.size()) {
            std::size_t key_start = i;
            while (i < line.size() && is_name_char(line[i])) ++i;
            std::string key = line.substr(key_start, i - key_start);
            skip_ws();
            if (i >= line.size() || line[i] != ':')
                throw ParseError(line_no, static_cast<int>(i) + 1, "expected ':' after key");
            ++i;
            auto next_token = [&]() -> std::pair<std::string, int> {
                skip_ws();
                if (i >= line.size()) return {"", static_cast<int>(i) + 1};
                std::size_t start = i;
                while (i < line.size() && !std::isspace((unsigned char)line[i])) ++i;
                return {line.substr(start, i - start), static_cast<int>(start) + 1};
            };
            if (key == "name") {
                auto [tok, col] = next_token();
                if (tok.empty()) throw ParseError(line_no, col, "missing name");
                spec.name = tok;
            } else if (key == "atoms") {
                if (saw_atoms) throw ParseError(line_no, 1, "duplicate atoms: line");
                saw_atoms = true;
                while (true) {
                    auto [tok, col] = next_token();
                    if (tok.empty()) break;
                    for (char c : tok)
                        if (!is_name_char(c))
                            throw ParseError(line_no, col, "bad atom name: " + tok);
                    spec.atoms.push_back(tok);
                }
                if (spec.atoms.empty())
                    throw ParseError(line_no, static_cast<int>(i) + 1, "no atoms listed");
            } else if (key == "contact") {
                if (saw_contact) throw ParseError(line_no, 1, "duplicate contact: line");
                saw_contact = true;
                auto [tok, col] = next_token();
                if (tok != "overlap" && tok != "adjacency")
                    throw ParseError(line_no, col,
                                     "contact must be 'overlap' or 'adjacency', got '" +
                                         tok + "'");
                spec.contact_kind = tok;
            } else if (key == "edges") {
                if (edges_line == 0) edges_line = line_no;
                while (true) {
                    auto [tok, col] = next_token();
                    if (tok.empty()) break;
                    std::size_t dash = tok.find('-');
                    if (dash == std::string::npos || dash == 0 || dash + 1 >= tok.size())
                        throw ParseError(line_no, col, "edge must be of the form a-b");
                    spec.edges.emplace_back(tok.substr(0, dash), tok.substr(dash + 1));
                    edge_positions.emplace_back(line_no, col);
                }
            } else {
                throw ParseError(line_no, static_cast<int>(key_start) + 1,
                                 "unknown key: " + key);
            }
        }
        if (eol == std::string::npos) break;
        pos = eol + 1;
    }
    if (!saw_atoms) throw ParseError(1, 1, "missing atoms: line");
    if (!saw_contact) throw ParseError(1, 1, "missing contact: line");
    if (spec.contact_kind == "overlap" && !spec.edges.empty())
        throw ParseError(edges_line, 1, "overlap contact admits no edges");
    for (std::size_t k = 0; k < spec.edges.size(); ++k) {
        for (const std::string* endpoint : {&spec.edges[k].first, &spec.edges[k].second}) {
            if (std::find(spec.atoms.begin(), spec.atoms.end(), *endpoint) ==
                spec.atoms.end())
                throw ParseError(edge_positions[k].first, edge_positions[k].second,
                                 "edge endpoint is not an atom: " + *endpoint);
        }
    }
    return spec;
}

ContactStructure build_structure(const SpecFile& spec) {
    BooleanAlgebra b = BooleanAlgebra::make(spec.atoms);
    if (spec.contact_kind == "overlap")
        return ContactStructure::overlap_contact(std::move(b));
    return ContactStructure::from_atom_graph(std::move(b), spec.edges);
}

// ---------------------------------------------------------------------------
// Region expressions
// ---------------------------------------------------------------------------

namespace {

class ExprParser {
public:
    explicit ExprParser(const std::string& text) : text_(text) {}

    EvalResult parse() {
        Region lhs = parse_union();
        skip_ws();
        if (at_end()) {
            EvalResult r;
            r.region = lhs;
            return r;
        }
        bool truth;
        if (peek() == '<' && peek(1) == '<') {
            pos_ += 2;
            Region rhs = parse_union();
            truth = well_inside(lhs, rhs);
        } else if (peek() == 'C' && !is_name_char(peek(1))) {
            ++pos_;
            Region rhs = parse_union();
            truth = contact(lhs, rhs);
        } else {
            fail("expected end of expression, '<<' or 'C'");
        }
        skip_ws();
        if (!at_end()) fail("trailing input after predicate");
        EvalResult r;
        r.truth = truth;
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(1, static_cast<int>(pos_) + 1, msg);
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    void skip_ws() {
        while (!at_end() && std::isspace((unsigned char)text_[pos_])) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (peek() == c) { ++pos_; return true; }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    bool eat_word(const std::string& word) {
        skip_ws();
        if (text_.compare(pos_, word.size(), word) == 0 &&
            !is_name_char(peek(word.size()))) {
            pos_ += word.size();
            return true;
        }
        return false;
    }

    Rat parse_rational() {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (peek() == '-') { neg = true; ++pos_; }
        if (text_.compare(pos_, 3, "inf") == 0) {
            pos_ += 3;
            return neg ? Rat::neg_inf() : Rat::pos_inf();
        }
        if (!std::isdigit((unsigned char)peek())) {
            pos_ = start;
            fail("expected rational or inf");
        }
        std::int64_t num = 0;
        while (std::isdigit((unsigned char)peek())) {
            num = num * 10 + (text_[pos_++] - '0');
            if (num > (std::int64_t(1) << 50)) fail("number too large");
        }
        std::int64_t den = 1;
        if (peek() == '/') {
            ++pos_;
            if (!std::isdigit((unsigned char)peek())) fail("expected denominator");
            den = 0;
            while (std::isdigit((unsigned char)peek())) {
                den = den * 10 + (text_[pos_++] - '0');
                if (den > (std::int64_t(1) << 50)) fail("number too large");
            }
            if (den == 0) fail("zero denominator");
        }
        return Rat(neg ? -num : num, den);
    }

    Region parse_union() {
        Region acc = parse_meet();
        while (eat('|')) acc = region_union(acc, parse_meet());
        return acc;
    }

    Region parse_meet() {
        Region acc = parse_factor();
        while (eat('&')) acc = meet(acc, parse_factor());
        return acc;
    }

    Region parse_factor() {
        if (eat('~')) return complement(parse_factor());
        return parse_primary();
    }

    Region parse_tail(bool mirrored) {
        std::size_t at = pos_;
        expect('(');
        Rat period = parse_rational();
        expect(',');
        Rat threshold = parse_rational();
        expect(',');
        Region pattern = parse_union();
        expect(')');
        if (!pattern.is_plain())
            throw ParseError(1, static_cast<int>(at) + 1, "tail pattern must be plain");
        try {
            Tail tail{threshold, period, pattern.core()};
            if (mirrored)
                return Region::from_raw(IntervalSet::empty(), tail, std::nullopt);
            return Region::from_raw(IntervalSet::empty(), std::nullopt, tail);
        } catch (const std::invalid_argument& e) {
            throw ParseError(1, static_cast<int>(at) + 1, e.what());
        }
    }

    Region parse_primary() {
        skip_ws();
        if (eat_word("empty")) return Region::zero();
        if (eat_word("tail")) return parse_tail(false);
        if (eat_word("ltail")) return parse_tail(true);
        if (peek() == '(') {
            // lookahead: "(rat," starts an interval, anything else is a
            // parenthesized sub-expression
            std::size_t save = pos_;
            ++pos_;
            bool is_interval;
            {
                std::size_t probe = pos_;
                try {
                    parse_rational();
                    skip_ws();
                    is_interval = peek() == ',';
                } catch (const ParseError&) {
                    is_interval = false;
                }
                pos_ = probe;
            }
            if (is_interval) {
                Rat lo = parse_rational();
                expect(',');
                Rat hi = parse_rational();
                expect(')');
                if (!(lo < hi))
                    throw ParseError(1, static_cast<int>(save) + 1,
                                     "interval requires lower < upper");
                if (lo.is_neg_inf() && hi.is_pos_inf()) return Region::unit();
                return Region::interval(lo, hi);
            }
            pos_ = save;
            expect('(');
            Region inner = parse_union();
            expect(')');
            return inner;
        }
        fail("expected region");
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

EvalResult eval_region_expression(const std::string& text) {
    ExprParser parser(text);
    return parser.parse();
}

Region parse_region(const std::string& text) {
    EvalResult r = eval_region_expression(text);
    if (!r.region) throw ParseError(1, 1, "expected a region, got a predicate");
    return *r.region;
}

Rat parse_rational_text(const std::string& text) {
    std::size_t slash = text.find('/');
    std::string t = text;
    auto trim = [](std::string& s) {
        while (!s.empty() && std::isspace((unsigned char)s.front())) s.erase(s.begin());
        while (!s.empty() && std::isspace((unsigned char)s.back())) s.pop_back();
    };
    trim(t);
    if (t == "inf") return Rat::pos_inf();
    if (t == "-inf") return Rat::neg_inf();
    try {
        if (slash == std::string::npos) return Rat(std::stoll(t));
        std::string a = t.substr(0, slash), b = t.substr(slash + 1);
        trim(a);
        trim(b);
        return Rat(std::stoll(a), std::stoll(b));
    } catch (const std::exception&) {
        throw ParseError(1, 1, "bad rational: " + text);
    }
}

}  // namespace bca
