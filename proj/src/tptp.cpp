#include "qealm/tptp.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace qealm {

namespace {

struct Token {
    enum Kind { Ident, Var, Quoted, Punct, Number, DollarWord, End } kind = End;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    Lexer(const std::string& text, std::vector<Diagnostic>& diags)
        : text_(text), diags_(diags) {}

    Token next() {
        skip_trivia();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= text_.size()) return t;
        char c = text_[pos_];
        if (c == '\'') {
            t.kind = Token::Quoted;
            advance();
            while (pos_ < text_.size() && text_[pos_] != '\'') {
                if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) advance();
                t.text += text_[pos_];
                advance();
            }
            if (pos_ >= text_.size())
                diags_.push_back({Severity::Error, "unterminated quoted atom", t.line, t.col, -1});
            else
                advance();
            return t;
        }
        if (c == '$') {
            t.kind = Token::DollarWord;
            t.text += c;
            advance();
            while (pos_ < text_.size() && (std::isalnum((unsigned char)text_[pos_]) || text_[pos_] == '_')) {
                t.text += text_[pos_];
                advance();
            }
            return t;
        }
        if (std::isdigit((unsigned char)c) || (c == '-' && pos_ + 1 < text_.size() &&
                                               std::isdigit((unsigned char)text_[pos_ + 1]))) {
            t.kind = Token::Number;
            t.text += c;
            advance();
            while (pos_ < text_.size() && (std::isalnum((unsigned char)text_[pos_]) ||
                                           text_[pos_] == '.' || text_[pos_] == '-')) {
                t.text += text_[pos_];
                advance();
            }
            return t;
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            t.kind = (std::isupper((unsigned char)c) || c == '_') ? Token::Var : Token::Ident;
            while (pos_ < text_.size() && (std::isalnum((unsigned char)text_[pos_]) || text_[pos_] == '_')) {
                t.text += text_[pos_];
                advance();
            }
            return t;
        }
        t.kind = Token::Punct;
        if (c == '!' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
            t.text = "!=";
            advance();
            advance();
            return t;
        }
        t.text = std::string(1, c);
        advance();
        return t;
    }

private:
    void advance() {
        if (pos_ < text_.size()) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }

    void skip_trivia() {
        for (;;) {
            while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) advance();
            if (pos_ < text_.size() && text_[pos_] == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
                continue;
            }
            if (pos_ + 1 < text_.size() && text_[pos_] == '/' && text_[pos_ + 1] == '*') {
                while (pos_ + 1 < text_.size() && !(text_[pos_] == '*' && text_[pos_ + 1] == '/'))
                    advance();
                advance();
                advance();
                continue;
            }
            break;
        }
    }

    const std::string& text_;
    std::vector<Diagnostic>& diags_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

struct ParserState {
    Problem problem;
    std::vector<Diagnostic> diags;
    std::set<std::string> visited_files;
    int include_depth = 0;
};

void parse_text(const std::string& text, const std::optional<std::string>& include_dir,
                const std::optional<std::string>& base_dir, ParserState& st);

class Parser {
public:
    Parser(const std::string& text, const std::optional<std::string>& include_dir,
           const std::optional<std::string>& base_dir, ParserState& st)
        : lex_(text, st.diags), include_dir_(include_dir), base_dir_(base_dir), st_(st) {
        cur_ = lex_.next();
    }

    void run() {
        while (cur_.kind != Token::End) {
            if (cur_.kind == Token::Ident && cur_.text == "cnf") {
                parse_cnf();
            } else if (cur_.kind == Token::Ident && cur_.text == "include") {
                parse_include();
            } else if (cur_.kind == Token::Ident && (cur_.text == "fof" || cur_.text == "tff" ||
                                                     cur_.text == "thf" || cur_.text == "tcf")) {
                error("unsupported language '" + cur_.text + "' (only cnf is accepted)");
                skip_statement();
            } else {
                error("expected cnf(...) or include(...), got '" + cur_.text + "'");
                skip_statement();
            }
        }
    }

private:
    void bump() { cur_ = lex_.next(); }

    bool expect_punct(const std::string& p) {
        if (cur_.kind == Token::Punct && cur_.text == p) {
            bump();
            return true;
        }
        error("expected '" + p + "', got '" + cur_.text + "'");
        return false;
    }

    void error(const std::string& msg) {
        st_.diags.push_back({Severity::Error, msg, cur_.line, cur_.col, -1});
    }

    void warning(const std::string& msg) {
        st_.diags.push_back({Severity::Warning, msg, cur_.line, cur_.col, -1});
    }

    // Resync after a malformed statement: skip to the next '.'.
    void skip_statement() {
        while (cur_.kind != Token::End && !(cur_.kind == Token::Punct && cur_.text == ".")) bump();
        if (cur_.kind != Token::End) bump();
    }

    void parse_include() {
        bump();
        if (!expect_punct("(")) return skip_statement();
        if (cur_.kind != Token::Quoted && cur_.kind != Token::Ident) {
            error("expected file name in include");
            return skip_statement();
        }
        std::string name = cur_.text;
        bump();
        if (!(cur_.kind == Token::Punct && cur_.text == ")")) {
            error("formula selection in include is not supported");
            return skip_statement();
        }
        bump();
        expect_punct(".");
        if (st_.include_depth > 64) {
            error("include nesting too deep");
            return;
        }
        namespace fs = std::filesystem;
        std::vector<fs::path> roots;
        if (include_dir_) roots.emplace_back(*include_dir_);
        if (const char* env = std::getenv("TPTP")) roots.emplace_back(env);
        if (base_dir_) roots.emplace_back(*base_dir_);
        fs::path found;
        for (const auto& root : roots) {
            fs::path candidate = root / name;
            std::error_code ec;
            if (fs::exists(candidate, ec)) {
                found = candidate;
                break;
            }
        }
        if (found.empty()) {
            st_.diags.push_back(
                {Severity::Error, "cannot resolve include '" + name + "'", cur_.line, cur_.col, -1});
            return;
        }
        std::string canon = fs::weakly_canonical(found).string();
        if (!st_.visited_files.insert(canon).second) return;  // already included
        std::ifstream in(found);
        if (!in) {
            st_.diags.push_back(
                {Severity::Error, "cannot open include '" + found.string() + "'", cur_.line, cur_.col, -1});
            return;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        ++st_.include_depth;
        parse_text(ss.str(), include_dir_, found.parent_path().string(), st_);
        --st_.include_depth;
    }

    void parse_cnf() {
        bump();
        if (!expect_punct("(")) return skip_statement();
        if (cur_.kind != Token::Ident && cur_.kind != Token::Quoted && cur_.kind != Token::Number) {
            error("expected clause name");
            return skip_statement();
        }
        bump();
        if (!expect_punct(",")) return skip_statement();
        if (cur_.kind != Token::Ident) {
            error("expected role");
            return skip_statement();
        }
        std::string role = cur_.text;
        if (role != "axiom" && role != "hypothesis" && role != "negated_conjecture")
            warning("role '" + role + "' treated as axiom");
        bump();
        if (!expect_punct(",")) return skip_statement();

        bool wrapped = cur_.kind == Token::Punct && cur_.text == "(";
        if (wrapped) bump();
        Clause clause;
        for (;;) {
            parse_literal(clause);
            if (cur_.kind == Token::Punct && cur_.text == "|") {
                bump();
                continue;
            }
            break;
        }
        if (wrapped && !expect_punct(")")) return skip_statement();
        if (!expect_punct(")")) return skip_statement();
        expect_punct(".");
        st_.problem.clauses.push_back(std::move(clause));
    }

    void parse_literal(Clause& clause) {
        bool positive = true;
        while (cur_.kind == Token::Punct && cur_.text == "~") {
            positive = !positive;
            bump();
        }
        if (cur_.kind == Token::DollarWord) {
            if (cur_.text == "$false" && positive) {
                bump();  // falsum contributes nothing to a disjunction
                return;
            }
            error("unsupported formula constant '" + (positive ? "" : std::string("~")) + cur_.text + "'");
            bump();
            return;
        }
        if (cur_.kind == Token::Var) {
            error("a literal cannot start with variable '" + cur_.text + "' (equality is not supported)");
            bump();
            skip_equality_tail();
            return;
        }
        if (cur_.kind != Token::Ident && cur_.kind != Token::Quoted) {
            error("expected predicate, got '" + cur_.text + "'");
            bump();
            return;
        }
        Literal lit;
        lit.positive = positive;
        lit.predicate = cur_.text;
        bump();
        if (cur_.kind == Token::Punct && cur_.text == "(") {
            bump();
            for (;;) {
                if (auto t = parse_term()) lit.args.push_back(*t);
                if (cur_.kind == Token::Punct && cur_.text == ",") {
                    bump();
                    continue;
                }
                break;
            }
            expect_punct(")");
        }
        if (cur_.kind == Token::Punct && (cur_.text == "=" || cur_.text == "!=")) {
            error("equality is not supported");
            bump();
            skip_equality_tail();
            return;
        }
        auto it = st_.problem.signature.find(lit.predicate);
        if (it == st_.problem.signature.end()) {
            st_.problem.signature[lit.predicate] = lit.arity();
        } else if (it->second != lit.arity()) {
            error("predicate '" + lit.predicate + "' used with arity " + std::to_string(lit.arity()) +
                  ", previously " + std::to_string(it->second));
        }
        for (const auto& t : lit.args)
            if (t.is_const()) st_.problem.constants.insert(t.name);
        clause.literals.push_back(std::move(lit));
    }

    void skip_equality_tail() {
        if (cur_.kind == Token::Ident || cur_.kind == Token::Var || cur_.kind == Token::Quoted ||
            cur_.kind == Token::Number)
            bump();
    }

    std::optional<Term> parse_term() {
        if (cur_.kind == Token::Var) {
            Term t = var(cur_.text);
            bump();
            return t;
        }
        if (cur_.kind == Token::Ident || cur_.kind == Token::Quoted) {
            std::string name = cur_.text;
            bump();
            if (cur_.kind == Token::Punct && cur_.text == "(") {
                error("function symbol '" + name + "' is not allowed");
                int depth = 0;
                while (cur_.kind != Token::End) {
                    if (cur_.kind == Token::Punct && cur_.text == "(") ++depth;
                    if (cur_.kind == Token::Punct && cur_.text == ")" && --depth == 0) {
                        bump();
                        break;
                    }
                    bump();
                }
                return std::nullopt;
            }
            return cst(name);
        }
        if (cur_.kind == Token::Number) {
            error("numeric term '" + cur_.text + "' is not supported");
            bump();
            return std::nullopt;
        }
        error("expected term, got '" + cur_.text + "'");
        bump();
        return std::nullopt;
    }

    Lexer lex_;
    Token cur_;
    std::optional<std::string> include_dir_;
    std::optional<std::string> base_dir_;
    ParserState& st_;
};

void parse_text(const std::string& text, const std::optional<std::string>& include_dir,
                const std::optional<std::string>& base_dir, ParserState& st) {
    Parser(text, include_dir, base_dir, st).run();
}

bool plain_atom(const std::string& s) {
    if (s.empty() || !std::islower((unsigned char)s[0])) return false;
    for (char c : s)
        if (!std::isalnum((unsigned char)c) && c != '_') return false;
    return true;
}

std::string quoted(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'' || c == '\\') out += '\\';
        out += c;
    }
    return out + "'";
}

std::string atom_name(const std::string& s) { return plain_atom(s) ? s : quoted(s); }

}  // namespace

ParseResult parse_tptp(const std::string& text, const std::optional<std::string>& include_dir,
                       const std::optional<std::string>& base_dir) {
    ParserState st;
    parse_text(text, include_dir, base_dir, st);
    ParseResult result;
    result.diagnostics = std::move(st.diags);
    bool has_error = false;
    for (const auto& d : result.diagnostics)
        if (d.severity == Severity::Error) has_error = true;
    if (!has_error) result.problem = std::move(st.problem);
    return result;
}

ParseResult parse_tptp_file(const std::string& path, const std::optional<std::string>& include_dir) {
    std::ifstream in(path);
    if (!in) {
        ParseResult r;
        r.diagnostics.push_back({Severity::Error, "cannot open '" + path + "'", 0, 0, -1});
        return r;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_tptp(ss.str(), include_dir, std::filesystem::path(path).parent_path().string());
}

std::string write_tptp(const Problem& p) {
    std::ostringstream os;
    for (size_t ci = 0; ci < p.clauses.size(); ++ci) {
        const Clause& c = p.clauses[ci];
        std::map<std::string, std::string> rename;
        os << "cnf(c" << ci << ", axiom, (";
        if (c.empty()) {
            os << "$false";
        } else {
            for (int li = 0; li < c.size(); ++li) {
                if (li) os << " | ";
                const Literal& l = c.literals[li];
                if (!l.positive) os << "~";
                os << atom_name(l.predicate);
                if (!l.args.empty()) {
                    os << "(";
                    for (int ai = 0; ai < l.arity(); ++ai) {
                        if (ai) os << ",";
                        const Term& t = l.args[ai];
                        if (t.is_var()) {
                            auto it = rename.find(t.name);
                            if (it == rename.end())
                                it = rename.emplace(t.name, "X" + std::to_string(rename.size())).first;
                            os << it->second;
                        } else {
                            os << atom_name(t.name);
                        }
                    }
                    os << ")";
                }
            }
        }
        os << ")).\n";
    }
    return os.str();
}

}  // namespace qealm
