#include "qealm/qdimacs.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace qealm {

std::vector<int> QbfProblem::variables() const {
    std::vector<int> vars;
    for (const auto& block : prefix)
        vars.insert(vars.end(), block.variables.begin(), block.variables.end());
    return vars;
}

std::size_t QbfProblem::variable_count() const {
    std::size_t n = 0;
    for (const auto& block : prefix) n += block.variables.size();
    return n;
}

bool QbfProblem::leading_exists() const {
    return prefix.empty() || prefix.front().quantifier == Quantifier::Exists;
}

namespace {

struct QdimacsToken {
    std::string text;
    int line = 0;
};

// Strips comment lines and splits the rest into whitespace-separated
// tokens, remembering the line each token came from.
std::vector<QdimacsToken> tokenize(const std::string& text) {
    std::vector<QdimacsToken> tokens;
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == 'c') continue;
        std::istringstream words(line);
        std::string word;
        while (words >> word) tokens.push_back({word, line_no});
    }
    return tokens;
}

class QdimacsParser {
  public:
    explicit QdimacsParser(const std::string& text) : tokens_(tokenize(text)) {}

    QbfParseResult run() {
        parse_header();
        parse_prefix();
        parse_matrix();
        finalize();

        QbfParseResult result;
        result.diagnostics = diags_;
        bool failed = std::any_of(diags_.begin(), diags_.end(), [](const Diagnostic& d) {
            return d.severity == Severity::Error;
        });
        if (!failed) result.problem = std::move(qbf_);
        return result;
    }

  private:
    bool at_end() const { return pos_ >= tokens_.size(); }
    const QdimacsToken& peek() const { return tokens_[pos_]; }
    QdimacsToken next() { return tokens_[pos_++]; }

    void error(int line, const std::string& message) {
        diags_.push_back({Severity::Error, message, line, 0, -1});
    }

    void warn(int line, const std::string& message) {
        diags_.push_back({Severity::Warning, message, line, 0, -1});
    }

    std::optional<int> parse_int(const QdimacsToken& token) {
        const std::string& s = token.text;
        std::size_t i = (s.size() > 1 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) return std::nullopt;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
        try {
            return std::stoi(s);
        } catch (const std::exception&) {
            error(token.line, "integer out of range: " + s);
            return std::nullopt;
        }
    }

    void parse_header() {
        if (at_end()) {
            error(0, "missing problem line");
            return;
        }
        if (peek().text != "p") {
            error(peek().line, "expected problem line 'p cnf <vars> <clauses>'");
            return;
        }
        QdimacsToken p = next();
        if (at_end() || next().text != "cnf") {
            error(p.line, "problem line must have format 'p cnf <vars> <clauses>'");
            return;
        }
        for (int* field : {&declared_vars_, &declared_clauses_}) {
            if (at_end()) {
                error(p.line, "problem line must have format 'p cnf <vars> <clauses>'");
                return;
            }
            QdimacsToken token = next();
            auto value = parse_int(token);
            if (!value || *value < 0) {
                error(token.line, "problem line count is not a non-negative integer: " + token.text);
                return;
            }
            *field = *value;
        }
    }

    void parse_prefix() {
        while (!at_end() && (peek().text == "a" || peek().text == "e")) {
            QdimacsToken head = next();
            Quantifier q = head.text == "a" ? Quantifier::Forall : Quantifier::Exists;
            if (qbf_.prefix.empty() || qbf_.prefix.back().quantifier != q)
                qbf_.prefix.push_back({q, {}});
            QuantifierBlock& block = qbf_.prefix.back();

            bool terminated = false;
            while (!at_end()) {
                if (peek().text == "a" || peek().text == "e") break;
                QdimacsToken token = next();
                auto value = parse_int(token);
                if (!value) {
                    error(token.line, "expected a variable in quantifier line, found '" + token.text + "'");
                    return;
                }
                if (*value == 0) {
                    terminated = true;
                    break;
                }
                if (*value < 0) {
                    error(token.line, "quantifier line contains a negative literal: " + token.text);
                    continue;
                }
                if (!declared_.insert(*value).second) {
                    error(token.line, "variable " + std::to_string(*value) + " is quantified twice");
                    continue;
                }
                if (*value > declared_vars_)
                    warn(token.line, "variable " + std::to_string(*value) +
                                         " exceeds the declared variable count");
                block.variables.push_back(*value);
            }
            if (!terminated) error(head.line, "quantifier line is not terminated by 0");
        }
    }

    void parse_matrix() {
        std::vector<int> clause;
        int clause_line = 0;
        while (!at_end()) {
            QdimacsToken token = next();
            if (token.text == "a" || token.text == "e") {
                error(token.line, "quantifier line after the first clause");
                return;
            }
            auto value = parse_int(token);
            if (!value) {
                error(token.line, "expected a literal, found '" + token.text + "'");
                return;
            }
            if (*value == 0) {
                qbf_.matrix.push_back(clause);
                clause.clear();
                clause_line = 0;
                continue;
            }
            if (clause.empty()) clause_line = token.line;
            int var = std::abs(*value);
            if (var > declared_vars_) {
                warn(token.line, "variable " + std::to_string(var) +
                                     " exceeds the declared variable count");
                declared_vars_ = var;
            }
            used_.insert(var);
            clause.push_back(*value);
        }
        if (!clause.empty()) {
            warn(clause_line, "final clause is not terminated by 0");
            qbf_.matrix.push_back(clause);
        }
    }

    void finalize() {
        std::vector<int> free_vars;
        for (int var : used_)
            if (!declared_.count(var)) free_vars.push_back(var);
        if (!free_vars.empty()) {
            if (!qbf_.prefix.empty() && qbf_.prefix.front().quantifier == Quantifier::Exists) {
                auto& front = qbf_.prefix.front().variables;
                front.insert(front.begin(), free_vars.begin(), free_vars.end());
            } else {
                qbf_.prefix.insert(qbf_.prefix.begin(),
                                   {Quantifier::Exists, std::move(free_vars)});
            }
        }
        if (declared_clauses_ >= 0 &&
            qbf_.matrix.size() != static_cast<std::size_t>(declared_clauses_))
            warn(0, "problem line declares " + std::to_string(declared_clauses_) +
                        " clauses but " + std::to_string(qbf_.matrix.size()) + " were read");
    }

    std::vector<QdimacsToken> tokens_;
    std::size_t pos_ = 0;
    int declared_vars_ = 0;
    int declared_clauses_ = -1;
    std::set<int> declared_;
    std::set<int> used_;
    QbfProblem qbf_;
    std::vector<Diagnostic> diags_;
};

}  // namespace

QbfParseResult parse_qdimacs(const std::string& text) {
    return QdimacsParser(text).run();
}

QbfParseResult parse_qdimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        QbfParseResult result;
        result.diagnostics.push_back(
            {Severity::Error, "cannot open file: " + path, 0, 0, -1});
        return result;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_qdimacs(buffer.str());
}

std::string write_qdimacs(const QbfProblem& qbf) {
    int max_var = 0;
    for (const auto& block : qbf.prefix)
        for (int var : block.variables) max_var = std::max(max_var, var);
    for (const auto& clause : qbf.matrix)
        for (int lit : clause) max_var = std::max(max_var, std::abs(lit));

    std::ostringstream out;
    out << "p cnf " << max_var << ' ' << qbf.matrix.size() << '\n';
    for (const auto& block : qbf.prefix) {
        out << (block.quantifier == Quantifier::Forall ? 'a' : 'e');
        for (int var : block.variables) out << ' ' << var;
        out << " 0\n";
    }
    for (const auto& clause : qbf.matrix) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

}  // namespace qealm
