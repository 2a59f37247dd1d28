#pragma once

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pbwtor/algebra.hpp"
#include "pbwtor/module_vector.hpp"
#include "pbwtor/parse.hpp"

namespace pbwtor {

/// Sub-bimodule data: L is generated by `vectors` inside R^ambient.
struct BimoduleBlock {
    std::string name;
    int ambient = 0;
    bool centralizing = false;
    std::vector<ModuleVector> vectors;
};

/// Left module data. With generator_form the vectors generate a submodule of
/// R^ambient; otherwise they are the relations of the quotient R^ambient / <vectors>.
struct ModuleBlock {
    std::string name;
    int ambient = 0;
    bool generator_form = false;
    std::vector<ModuleVector> vectors;
};

struct ProblemFile {
    AlgebraSpec algebra;
    ModuleOrder module_order;
    std::map<std::string, BimoduleBlock> bimodules;
    std::map<std::string, ModuleBlock> modules;

    const BimoduleBlock& bimodule(const std::string& name) const {
        auto it = bimodules.find(name);
        if (it == bimodules.end()) throw Error("no bimodule named '" + name + "'");
        return it->second;
    }

    const ModuleBlock& module(const std::string& name) const {
        auto it = modules.find(name);
        if (it == modules.end()) throw Error("no module named '" + name + "'");
        return it->second;
    }
};

namespace detail {

/// Control-flow signal: a relation RHS referenced a pair whose defining line
/// has not been evaluated yet. Caught by the fixpoint loop, never escapes.
struct RelationPending {
    int j = 0;
    int i = 0;
};

/// Algebra view used while relation right-hand sides are still being
/// evaluated. Pairs without a `rel` line are commutative from the start;
/// declared pairs answer only once their own RHS has normalized.
struct PartialAlgebra {
    std::vector<std::string> names;
    OrderSpec order;
    std::map<int, PairRelation> defined;
    std::shared_ptr<ProductCache> cache = std::make_shared<ProductCache>();

    int nvars() const { return static_cast<int>(names.size()); }

    const PairRelation& relation(int j, int i) const {
        auto it = defined.find(pair_index(j, i));
        if (it == defined.end()) throw RelationPending{j, i};
        return it->second;
    }
};

struct PendingRelation {
    int j = 0;
    int i = 0;
    Expr rhs;
    int line = 1;
};

class ProblemParser {
  public:
    explicit ProblemParser(std::istream& in) : in_(in) {}

    ProblemFile run() {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++lineno_;
            std::string line = strip(raw);
            if (line.empty()) continue;
            if (line.front() == '[') {
                open_block(line);
            } else {
                body_line(line, static_cast<int>(raw.find_first_not_of(" \t")) + 1);
            }
        }
        finish_block();
        if (!algebra_done_) fail("missing [algebra] block");
        return std::move(out_);
    }

  private:
    enum class Section { None, Algebra, Bimodule, Module };

    [[noreturn]] void fail(const std::string& msg, int col = 1) const {
        throw ParseError(msg, lineno_, col);
    }

    static std::string strip(const std::string& s) {
        std::string t = s;
        size_t hash = t.find('#');
        if (hash != std::string::npos) t.erase(hash);
        size_t b = t.find_first_not_of(" \t\r");
        if (b == std::string::npos) return "";
        size_t e = t.find_last_not_of(" \t\r");
        return t.substr(b, e - b + 1);
    }

    static std::vector<std::string> split_commas(const std::string& s) {
        std::vector<std::string> out;
        std::string cur;
        for (char c : s) {
            if (c == ',') {
                out.push_back(strip(cur));
                cur.clear();
            } else {
                cur += c;
            }
        }
        out.push_back(strip(cur));
        return out;
    }

    static bool is_ident(const std::string& s) {
        if (s.empty()) return false;
        if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
        for (char c : s)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
        return true;
    }

    int var_index(const std::string& name) const {
        for (size_t v = 0; v < partial_.names.size(); ++v)
            if (partial_.names[v] == name) return static_cast<int>(v);
        fail("unknown variable '" + name + "'");
    }

    void open_block(const std::string& line) {
        if (line.back() != ']') fail("unterminated block header");
        std::string inner = strip(line.substr(1, line.size() - 2));
        finish_block();
        if (inner == "algebra") {
            if (algebra_seen_) fail("duplicate [algebra] block");
            algebra_seen_ = true;
            section_ = Section::Algebra;
            return;
        }
        std::istringstream ss(inner);
        std::string kind, name, extra;
        ss >> kind >> name;
        if (ss >> extra) fail("malformed block header '[" + inner + "]'");
        if (!is_ident(name)) fail("block name must be an identifier, got '" + name + "'");
        if (!algebra_seen_) fail("the [algebra] block must come first");
        if (kind == "bimodule") {
            if (out_.bimodules.count(name)) fail("duplicate bimodule '" + name + "'");
            section_ = Section::Bimodule;
            bim_ = BimoduleBlock{};
            bim_.name = name;
        } else if (kind == "module") {
            if (out_.modules.count(name)) fail("duplicate module '" + name + "'");
            section_ = Section::Module;
            mod_ = ModuleBlock{};
            mod_.name = name;
            mod_has_rel_ = mod_has_gen_ = false;
        } else {
            fail("unknown block kind '" + kind + "'");
        }
    }

    void finish_block() {
        switch (section_) {
            case Section::None:
                break;
            case Section::Algebra:
                seal_algebra();
                break;
            case Section::Bimodule:
                if (bim_.vectors.empty()) fail("bimodule '" + bim_.name + "' has no generators");
                out_.bimodules.emplace(bim_.name, std::move(bim_));
                break;
            case Section::Module:
                if (mod_.vectors.empty())
                    fail("module '" + mod_.name + "' has no gen or rel lines");
                mod_.generator_form = mod_has_gen_;
                out_.modules.emplace(mod_.name, std::move(mod_));
                break;
        }
        section_ = Section::None;
    }

    void body_line(const std::string& line, int col) {
        switch (section_) {
            case Section::None:
                fail("content outside any block");
            case Section::Algebra:
                algebra_line(line, col);
                break;
            case Section::Bimodule:
            case Section::Module:
                module_line(line, col);
                break;
        }
    }

    static bool key_value(const std::string& line, const std::string& key, std::string& value) {
        if (line.compare(0, key.size(), key) != 0) return false;
        size_t p = key.size();
        while (p < line.size() && (line[p] == ' ' || line[p] == '\t')) ++p;
        if (p >= line.size() || line[p] != '=') return false;
        value = strip(line.substr(p + 1));
        return true;
    }

    long long parse_int(const std::string& s, const std::string& what) const {
        try {
            size_t used = 0;
            long long v = std::stoll(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            fail("expected an integer for " + what + ", got '" + s + "'");
        }
    }

    void algebra_line(const std::string& line, int col) {
        std::string value;
        if (key_value(line, "vars", value)) {
            if (!partial_.names.empty()) fail("duplicate vars line");
            for (const std::string& name : split_commas(value)) {
                if (!is_ident(name)) fail("bad variable name '" + name + "'");
                for (const std::string& prev : partial_.names)
                    if (prev == name) fail("repeated variable '" + name + "'");
                partial_.names.push_back(name);
            }
            partial_.order = default_order(partial_.nvars());
            return;
        }
        if (partial_.names.empty()) fail("vars must be declared first in [algebra]");
        if (key_value(line, "weights", value)) {
            std::vector<std::string> parts = split_commas(value);
            if (static_cast<int>(parts.size()) != partial_.nvars())
                fail("expected " + std::to_string(partial_.nvars()) + " weights");
            for (int v = 0; v < partial_.nvars(); ++v)
                partial_.order.weights[v] = parse_int(parts[v], "weight");
            return;
        }
        if (key_value(line, "precedence", value)) {
            std::vector<std::string> parts = split_commas(value);
            if (static_cast<int>(parts.size()) != partial_.nvars())
                fail("precedence must list every variable exactly once");
            std::set<int> seen;
            for (int p = 0; p < partial_.nvars(); ++p) {
                int v = var_index(parts[p]);
                if (!seen.insert(v).second) fail("repeated variable in precedence");
                partial_.order.precedence[p] = v;
            }
            return;
        }
        if (key_value(line, "module_order", value)) {
            if (value == "TOP")
                out_.module_order.scheme = ModuleScheme::TermOverPosition;
            else if (value == "POT")
                out_.module_order.scheme = ModuleScheme::PositionOverTerm;
            else
                fail("module_order must be TOP or POT, got '" + value + "'");
            return;
        }
        if (line.compare(0, 4, "rel ") == 0) {
            relation_line(strip(line.substr(4)), col + 4);
            return;
        }
        fail("unrecognized line in [algebra]: '" + line + "'");
    }

    /// "rel VAR*VAR = expr" with the left factor later in declaration order.
    void relation_line(const std::string& body, int col) {
        size_t eq = body.find('=');
        if (eq == std::string::npos) fail("rel line needs '='", col);
        std::string lhs = strip(body.substr(0, eq));
        std::string rhs = strip(body.substr(eq + 1));
        size_t star = lhs.find('*');
        if (star == std::string::npos) fail("rel left side must be VAR*VAR", col);
        std::string a = strip(lhs.substr(0, star));
        std::string b = strip(lhs.substr(star + 1));
        int j = var_index(a);
        int i = var_index(b);
        if (j <= i)
            fail("rel left side must be out of order: '" + a + "' does not come after '" + b +
                     "' in the vars list",
                 col);
        if (declared_.count(pair_index(j, i)))
            fail("duplicate relation for " + a + "*" + b, col);
        declared_.insert(pair_index(j, i));
        PendingRelation p;
        p.j = j;
        p.i = i;
        p.line = lineno_;
        p.rhs = parse_expression_tree(rhs, partial_.names, lineno_,
                                      static_cast<int>(body.size() - rhs.size()) + col);
        pending_.push_back(std::move(p));
    }

    /// Evaluates relation right-hand sides to a fixpoint, then runs full
    /// algebra validation. RHS evaluation may consume other relations; rounds
    /// repeat until no line makes progress, which flags a definition cycle.
    void seal_algebra() {
        if (partial_.names.empty()) fail("[algebra] block needs a vars line");
        int n = partial_.nvars();
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (!declared_.count(pair_index(j, i)))
                    partial_.defined.emplace(pair_index(j, i),
                                             PairRelation{Rational(1), Polynomial::zero()});
        std::vector<PendingRelation> todo = std::move(pending_);
        while (!todo.empty()) {
            std::vector<PendingRelation> next;
            for (PendingRelation& p : todo) {
                try {
                    store_relation(p, eval_expr(partial_, p.rhs));
                } catch (const RelationPending&) {
                    next.push_back(std::move(p));
                }
            }
            if (next.size() == todo.size())
                throw ParseError("circular relation definitions", next.front().line, 1);
            todo = std::move(next);
        }
        std::vector<PairRelation> rels(n * (n - 1) / 2);
        for (auto& [idx, rel] : partial_.defined) rels[idx] = std::move(rel);
        out_.algebra = construct_algebra(partial_.names, partial_.order, std::move(rels));
        out_.module_order.base = out_.algebra.order;
        algebra_done_ = true;
    }

    /// Splits a normalized RHS into the x_i*x_j coefficient and the tail, and
    /// rejects inadmissible data immediately so later rounds cannot loop.
    void store_relation(const PendingRelation& p, const Polynomial& rhs) {
        int n = partial_.nvars();
        Monomial xij = Monomial::var(p.i, n) + Monomial::var(p.j, n);
        PairRelation rel;
        rel.tail = Polynomial::zero();
        std::vector<Term> tail;
        for (const Term& t : rhs.terms) {
            if (t.mono == xij) {
                rel.coeff = t.coeff;
            } else {
                if (compare(t.mono, xij, partial_.order) != Ordering::Less)
                    throw AdmissibilityViolation("relation " + partial_.names[p.j] + "*" +
                                                     partial_.names[p.i] +
                                                     " has a tail term not below " +
                                                     partial_.names[p.i] + "*" +
                                                     partial_.names[p.j],
                                                 p.j, p.i);
                tail.push_back(t);
            }
        }
        if (is_zero(rel.coeff))
            throw AdmissibilityViolation("relation " + partial_.names[p.j] + "*" +
                                             partial_.names[p.i] + " lacks the " +
                                             partial_.names[p.i] + "*" + partial_.names[p.j] +
                                             " term",
                                         p.j, p.i);
        rel.tail.terms = std::move(tail);
        partial_.defined.emplace(pair_index(p.j, p.i), std::move(rel));
    }

    void module_line(const std::string& line, int col) {
        bool bim = section_ == Section::Bimodule;
        int& ambient = bim ? bim_.ambient : mod_.ambient;
        std::string value;
        if (key_value(line, "ambient", value)) {
            long long m = parse_int(value, "ambient");
            if (m <= 0) fail("ambient must be positive");
            ambient = static_cast<int>(m);
            return;
        }
        if (bim && key_value(line, "centralizing", value)) {
            if (value == "true")
                bim_.centralizing = true;
            else if (value == "false")
                bim_.centralizing = false;
            else
                fail("centralizing must be true or false");
            return;
        }
        bool gen_line = line.compare(0, 4, "gen ") == 0;
        bool rel_line = !bim && line.compare(0, 4, "rel ") == 0;
        if (!gen_line && !rel_line)
            fail("unrecognized line in [" + std::string(bim ? "bimodule" : "module") + " " +
                 (bim ? bim_.name : mod_.name) + "]: '" + line + "'");
        if (ambient <= 0) fail("ambient must be declared before generators");
        if (!bim) {
            if (gen_line && mod_has_rel_) fail("module mixes gen and rel lines");
            if (rel_line && mod_has_gen_) fail("module mixes gen and rel lines");
            (gen_line ? mod_has_gen_ : mod_has_rel_) = true;
        }
        std::string body = strip(line.substr(4));
        std::vector<Expr> tuple = parse_tuple_tree(
            body, out_.algebra.names, lineno_, static_cast<int>(line.size() - body.size()) + col);
        if (static_cast<int>(tuple.size()) != ambient)
            fail("tuple has " + std::to_string(tuple.size()) + " entries, ambient is " +
                     std::to_string(ambient),
                 col);
        ModuleVector v = ModuleVector::zero(ambient);
        for (int pos = 0; pos < ambient; ++pos)
            v.set_component(pos, eval_expr(out_.algebra, tuple[pos]));
        (bim ? bim_.vectors : mod_.vectors).push_back(std::move(v));
    }

    std::istream& in_;
    int lineno_ = 0;
    Section section_ = Section::None;
    ProblemFile out_;

    PartialAlgebra partial_;
    std::set<int> declared_;
    std::vector<PendingRelation> pending_;
    bool algebra_seen_ = false;
    bool algebra_done_ = false;

    BimoduleBlock bim_;
    ModuleBlock mod_;
    bool mod_has_gen_ = false;
    bool mod_has_rel_ = false;
};

}  // namespace detail

inline ProblemFile parse_problem(std::istream& in) { return detail::ProblemParser(in).run(); }

inline ProblemFile parse_problem_text(const std::string& text) {
    std::istringstream ss(text);
    return parse_problem(ss);
}

inline ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file '" + path + "'");
    return parse_problem(in);
}

}  // namespace pbwtor
