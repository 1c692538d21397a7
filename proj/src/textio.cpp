#include "hodge/textio.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "hodge/errors.hpp"

namespace hodge {

namespace {

// Single-line recursive-descent scanner for the scalar/polynomial grammar.
// Column numbers are 1-based; `line` is carried through for problem files.
class Scanner {
  public:
    Scanner(const std::string& text, int line) : text_(text), line_(line) {}

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
            ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c, const std::string& what) {
        if (!accept(c))
            fail("expected '" + std::string(1, c) + "' " + what);
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg, line_, static_cast<int>(pos_) + 1);
    }

    // Unsigned integer literal.
    mpz_class integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            fail("expected an integer");
        return mpz_class(text_.substr(start, pos_ - start));
    }

    // Signed exponent after '^' (negative allowed for z(m)^-1 style input).
    long exponent() {
        bool neg = accept('-');
        mpz_class e = integer();
        if (!e.fits_slong_p())
            fail("exponent out of range");
        long v = e.get_si();
        return neg ? -v : v;
    }

    // a or a/b (no sign; signs belong to the term structure).
    Rat rational() {
        mpz_class num = integer();
        if (accept('/')) {
            mpz_class den = integer();
            if (den == 0)
                fail("zero denominator");
            Rat r(num, den);
            r.canonicalize();
            return r;
        }
        return Rat(num);
    }

    // z(m) or z(m)^k.
    Cyclo zeta_token() {
        expect('z', "before root-of-unity token");
        expect('(', "after 'z'");
        mpz_class m = integer();
        if (!m.fits_slong_p() || m.get_si() < 1)
            fail("root-of-unity order out of range");
        expect(')', "after root-of-unity order");
        long k = accept('^') ? exponent() : 1;
        return Cyclo::zeta(m.get_si(), k);
    }

    // Product of scalar atoms: rational | z(m)^k, joined by '*'.
    Cyclo scalar_product() {
        Cyclo value(1);
        while (true) {
            char c = peek();
            if (c == 'z')
                value = value * zeta_token();
            else if (std::isdigit(static_cast<unsigned char>(c)))
                value = value * Cyclo(rational());
            else
                fail("expected a rational or z(m) factor");
            if (!accept('*'))
                break;
        }
        return value;
    }

    // Sum of signed scalar products: the cyclotomic grammar.
    Cyclo scalar_sum() {
        Cyclo value(0);
        bool first = true;
        while (true) {
            bool neg = false;
            if (accept('-'))
                neg = true;
            else if (!accept('+') && !first)
                break;
            Cyclo term = scalar_product();
            value = neg ? value - term : value + term;
            first = false;
            if (done())
                break;
            char c = peek();
            if (c != '+' && c != '-')
                break;
        }
        return value;
    }

    // x<I> or x<I>^e; accumulates into the exponent vector.
    void variable_token(Exponents& exps) {
        expect('x', "before variable index");
        mpz_class i = integer();
        if (!i.fits_slong_p() || i.get_si() >= static_cast<long>(exps.size()))
            fail("variable index out of range");
        long e = accept('^') ? exponent() : 1;
        if (e < 0)
            fail("negative variable exponent");
        exps[i.get_si()] += e;
    }

    Polynomial polynomial(long nvars) {
        Polynomial p(nvars);
        bool first = true;
        while (!done()) {
            bool neg = false;
            if (accept('-'))
                neg = true;
            else if (accept('+')) {
                if (first)
                    fail("unexpected leading '+'");
            } else if (!first) {
                fail("expected '+' or '-' between terms");
            }
            Cyclo coeff(1);
            Exponents exps(nvars, 0);
            bool any = false;
            while (true) {
                char c = peek();
                if (c == '(') {
                    ++pos_;
                    coeff = coeff * scalar_sum();
                    expect(')', "after parenthesized coefficient");
                } else if (c == 'z') {
                    coeff = coeff * zeta_token();
                } else if (std::isdigit(static_cast<unsigned char>(c))) {
                    coeff = coeff * Cyclo(rational());
                } else if (c == 'x') {
                    variable_token(exps);
                } else {
                    fail("expected a coefficient or variable factor");
                }
                any = true;
                if (!accept('*'))
                    break;
            }
            if (!any)
                fail("empty term");
            if (neg)
                coeff = -coeff;
            p += Polynomial::monomial(nvars, exps, coeff);
            first = false;
        }
        if (first)
            fail("empty polynomial");
        return p;
    }

  private:
    const std::string& text_;
    int line_;
    size_t pos_ = 0;
};

void strip_comment(std::string& s) {
    size_t h = s.find('#');
    if (h != std::string::npos)
        s.erase(h);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.pop_back();
    size_t b = s.find_first_not_of(" \t");
    s.erase(0, b == std::string::npos ? s.size() : b);
}

long parse_long(const std::string& v, int line, const std::string& key) {
    try {
        size_t used = 0;
        long out = std::stol(v, &used);
        if (used != v.size())
            throw std::invalid_argument(v);
        return out;
    } catch (const std::exception&) {
        throw ParseError("invalid integer for '" + key + "': " + v, line, 1);
    }
}

const std::set<std::string> kCycleKeys = {"kind", "c", "r", "left", "right", "parts", "P"};
const std::set<std::string> kTaskKeys = {"op", "cycle", "degree"};

} // namespace

Cyclo parse_cyclo(const std::string& text) {
    Scanner sc(text, 1);
    Cyclo v = sc.scalar_sum();
    if (!sc.done())
        sc.fail("trailing input after cyclotomic value");
    return v;
}

Polynomial parse_polynomial(const std::string& text, long nvars) {
    if (nvars < 1)
        throw ParseError("polynomial needs at least one variable", 1, 1);
    Scanner sc(text, 1);
    return sc.polynomial(nvars);
}

ProblemFile parse_problem_file(std::istream& in) {
    ProblemFile pf;
    std::string section;     // current section name
    CycleBlock* cycle = nullptr;
    TaskBlock* task = nullptr;
    bool saw_ring = false, saw_hyper = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        strip_comment(line);
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError("unterminated section header", lineno, 1);
            std::string head = line.substr(1, line.size() - 2);
            std::istringstream hs(head);
            std::string name, arg, extra;
            hs >> name >> arg >> extra;
            if (!extra.empty())
                throw ParseError("malformed section header '" + head + "'", lineno, 1);
            cycle = nullptr;
            task = nullptr;
            if (name == "ring" && arg.empty()) {
                saw_ring = true;
            } else if (name == "hypersurface" && arg.empty()) {
                saw_hyper = true;
            } else if (name == "cycle" && !arg.empty()) {
                pf.cycles.push_back(CycleBlock{arg, "", {}, lineno});
                cycle = &pf.cycles.back();
            } else if (name == "task" && arg.empty()) {
                pf.tasks.push_back(TaskBlock{"", {}, lineno});
                task = &pf.tasks.back();
            } else {
                throw ParseError("unknown section '" + head + "'", lineno, 1);
            }
            section = name;
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value'", lineno, 1);
        std::string key = line.substr(0, eq), value = line.substr(eq + 1);
        strip_comment(key);
        strip_comment(value);
        if (key.empty() || value.empty())
            throw ParseError("expected 'key = value'", lineno, 1);
        if (section == "ring") {
            if (key == "nvars")
                pf.nvars = parse_long(value, lineno, key);
            else if (key == "d")
                pf.d = static_cast<int>(parse_long(value, lineno, key));
            else if (key == "order") {
                if (value == "grevlex")
                    pf.order = MonomialOrder::Grevlex;
                else if (value == "lex")
                    pf.order = MonomialOrder::Lex;
                else
                    throw ParseError("unknown monomial order '" + value + "'", lineno, 1);
            } else
                throw ParseError("unknown ring key '" + key + "'", lineno, 1);
        } else if (section == "hypersurface") {
            if (key == "F")
                pf.hypersurface = value;
            else
                throw ParseError("unknown hypersurface key '" + key + "'", lineno, 1);
        } else if (section == "cycle") {
            if (!kCycleKeys.count(key))
                throw ParseError("unknown cycle key '" + key + "'", lineno, 1);
            if (key == "kind")
                cycle->kind = value;
            else if (!cycle->entries.emplace(key, value).second)
                throw ParseError("duplicate cycle key '" + key + "'", lineno, 1);
        } else if (section == "task") {
            if (!kTaskKeys.count(key))
                throw ParseError("unknown task key '" + key + "'", lineno, 1);
            if (key == "op")
                task->op = value;
            else if (!task->params.emplace(key, value).second)
                throw ParseError("duplicate task key '" + key + "'", lineno, 1);
        } else {
            throw ParseError("key outside of any section", lineno, 1);
        }
    }
    if (!saw_ring)
        throw ParseError("missing [ring] section", lineno, 1);
    if (!saw_hyper)
        throw ParseError("missing [hypersurface] section", lineno, 1);
    if (pf.nvars < 2 || pf.d < 1)
        throw ParseError("ring block needs nvars >= 2 and d >= 1", lineno, 1);
    for (const CycleBlock& cb : pf.cycles)
        if (cb.kind.empty())
            throw ParseError("cycle '" + cb.name + "' has no kind", cb.line, 1);
    for (const TaskBlock& tb : pf.tasks)
        if (tb.op.empty())
            throw ParseError("task block has no op", tb.line, 1);
    return pf;
}

ProblemFile parse_problem_file_text(const std::string& text) {
    std::istringstream is(text);
    return parse_problem_file(is);
}

} // namespace hodge
