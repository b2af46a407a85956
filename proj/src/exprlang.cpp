#include "tenskit/exprlang.hpp"

#include "tenskit/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace tenskit {

namespace {

const char* kRing = "\xE2\x88\x98";   // the ring composition sign
const char* kTensor = "\xE2\x8A\x97"; // the forced-outer product sign

std::string span_str(std::size_t b, std::size_t e)
{
    return " (at " + std::to_string(b) + ".." + std::to_string(e) + ")";
}

bool contains(const std::vector<IndexLabel>& v, const IndexLabel& l)
{
    return std::find(v.begin(), v.end(), l) != v.end();
}

std::vector<std::pair<IndexLabel, IndexLabel>> auto_matches(const Expr& l, const Expr& r)
{
    std::vector<std::pair<IndexLabel, IndexLabel>> out;
    for (const auto& lab : l.freeSubs)
        if (contains(r.freeSupers, lab))
            out.emplace_back(lab, lab);
    return out;
}

// For a self-contracting factor like x_a^a the two occurrences must become
// distinct labels before the engine sees them; the superscript occurrence
// is bumped past every generation written in the factor. Plan building and
// execution share this rule.
struct SelfContractInfo {
    std::vector<IndexLabel> tempSupers;
    std::vector<std::pair<IndexLabel, IndexLabel>> pairs;
};

SelfContractInfo self_contract_info(const std::vector<IndexLabel>& subs,
                                    const std::vector<IndexLabel>& supers)
{
    int maxGen = 0;
    for (const auto& l : subs)
        maxGen = std::max(maxGen, l.generation);
    for (const auto& l : supers)
        maxGen = std::max(maxGen, l.generation);

    SelfContractInfo out;
    out.tempSupers = supers;
    for (auto& l : out.tempSupers)
        if (contains(subs, l))
            l.generation = maxGen + 1;
    for (const auto& l : subs) {
        if (contains(supers, l)) {
            IndexLabel t = l;
            t.generation = maxGen + 1;
            out.pairs.emplace_back(l, t);
        }
    }
    return out;
}

std::vector<IndexLabel> minus(const std::vector<IndexLabel>& v, const std::vector<IndexLabel>& drop)
{
    std::vector<IndexLabel> out;
    for (const auto& l : v)
        if (!contains(drop, l))
            out.push_back(l);
    return out;
}

std::vector<IndexLabel> concat(std::vector<IndexLabel> a, const std::vector<IndexLabel>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    ExprPtr run()
    {
        skip_ws();
        if (pos_ >= text_.size())
            err("empty expression", 0, 0);
        ExprPtr e = parse_sum();
        skip_ws();
        if (pos_ != text_.size())
            err("unexpected trailing input", pos_, text_.size());
        return e;
    }

private:
    struct Element {
        ExprPtr node;
        bool viaOuter = false;
    };

    const std::string& text_;
    std::size_t pos_ = 0;

    [[noreturn]] void err(const std::string& msg, std::size_t b, std::size_t e)
    {
        fail_usage(msg + span_str(b, e));
    }

    static bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
    static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool try_eat(const char* seq)
    {
        const std::size_t len = std::char_traits<char>::length(seq);
        if (text_.compare(pos_, len, seq) == 0) {
            pos_ += len;
            return true;
        }
        return false;
    }

    Scalar parse_scalar()
    {
        const std::size_t b = pos_;
        std::string num;
        while (pos_ < text_.size() && is_digit(text_[pos_]))
            num += text_[pos_++];
        std::string den = "1";
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            den.clear();
            while (pos_ < text_.size() && is_digit(text_[pos_]))
                den += text_[pos_++];
            if (den.empty())
                err("expected digits after '/'", b, pos_);
        }
        const Integer n(num), d(den);
        if (d == 0)
            err("zero denominator in scalar literal", b, pos_);
        return Scalar(n, d);
    }

    std::string parse_name()
    {
        std::string out;
        out += text_[pos_++];
        while (pos_ < text_.size() && (is_letter(text_[pos_]) || is_digit(text_[pos_])))
            out += text_[pos_++];
        return out;
    }

    std::vector<IndexLabel> parse_labels()
    {
        if (pos_ >= text_.size() || !is_letter(text_[pos_]))
            err("expected index labels", pos_, pos_);
        std::vector<IndexLabel> out;
        while (pos_ < text_.size() && is_letter(text_[pos_])) {
            IndexLabel l;
            l.name = text_[pos_++];
            while (pos_ < text_.size() && is_digit(text_[pos_]))
                l.name += text_[pos_++];
            if (pos_ < text_.size() && text_[pos_] == '*') {
                l.dual = true;
                ++pos_;
            }
            while (pos_ < text_.size() && text_[pos_] == '\'') {
                ++l.generation;
                ++pos_;
            }
            out.push_back(std::move(l));
        }
        return out;
    }

    ExprPtr make_factor(std::string name, std::vector<IndexLabel> subs,
                        std::vector<IndexLabel> supers, std::size_t b, std::size_t e)
    {
        auto dup = [&](const std::vector<IndexLabel>& v, const char* side) {
            for (std::size_t i = 0; i < v.size(); ++i)
                for (std::size_t j = i + 1; j < v.size(); ++j)
                    if (v[i] == v[j])
                        err("label '" + v[i].str() + "' written twice as a " + side +
                                " of '" + name + "'",
                            b, e);
        };
        dup(subs, "subscript");
        dup(supers, "superscript");

        auto node = std::make_shared<Expr>();
        node->kind = Expr::Kind::Factor;
        node->name = std::move(name);
        node->freeSubs = minus(subs, supers);
        node->freeSupers = minus(supers, subs);
        node->subs = std::move(subs);
        node->supers = std::move(supers);
        node->begin = b;
        node->end = e;
        return node;
    }

    ExprPtr parse_factor()
    {
        skip_ws();
        if (pos_ >= text_.size())
            err("expected a factor", pos_, pos_);
        const std::size_t b = pos_;
        if (try_eat("(")) {
            ExprPtr e = parse_sum();
            skip_ws();
            if (!try_eat(")"))
                err("expected ')'", b, pos_);
            return e; // grouping only; parentheses leave no node behind
        }
        if (!is_letter(text_[pos_]))
            err("expected a name or '('", pos_, pos_);
        std::string name = parse_name();
        std::vector<IndexLabel> subs, supers;
        if (pos_ < text_.size() && text_[pos_] == '_') {
            ++pos_;
            subs = parse_labels();
        }
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            supers = parse_labels();
        }
        return make_factor(std::move(name), std::move(subs), std::move(supers), b, pos_);
    }

    void chain_check(const std::vector<Element>& els)
    {
        struct Occ {
            IndexLabel label;
            std::size_t elem;
            int side; // 0 subscript, 1 superscript
        };
        std::vector<Occ> occs;
        for (std::size_t i = 0; i < els.size(); ++i) {
            const Expr& n = *els[i].node;
            const auto& subs = n.kind == Expr::Kind::Factor ? n.subs : n.freeSubs;
            const auto& sups = n.kind == Expr::Kind::Factor ? n.supers : n.freeSupers;
            for (const auto& l : subs)
                occs.push_back({l, i, 0});
            for (const auto& l : sups)
                occs.push_back({l, i, 1});
        }
        std::map<IndexLabel, std::vector<std::size_t>> byLabel;
        for (std::size_t k = 0; k < occs.size(); ++k)
            byLabel[occs[k].label].push_back(k);
        for (const auto& [label, list] : byLabel) {
            if (list.size() > 2) {
                const Expr& n = *els[occs[list[2]].elem].node;
                err("label '" + label.str() + "' occurs " + std::to_string(list.size()) +
                        " times in one chain",
                    n.begin, n.end);
            }
            if (list.size() == 2) {
                const Occ& o1 = occs[list[0]];
                const Occ& o2 = occs[list[1]];
                if (o1.elem == o2.elem)
                    continue; // self-contraction within one factor
                if (!(o1.side == 0 && o2.side == 1)) {
                    const Expr& n = *els[o2.elem].node;
                    err("repeated label '" + label.str() +
                            "' must be a subscript of the earlier factor and a superscript of the later one",
                        n.begin, n.end);
                }
            }
        }
    }

    ExprPtr fold_chain(const std::vector<Element>& els)
    {
        ExprPtr acc = els[0].node;
        for (std::size_t i = 1; i < els.size(); ++i) {
            const ExprPtr& rhs = els[i].node;
            auto node = std::make_shared<Expr>();
            node->left = acc;
            node->right = rhs;
            node->begin = acc->begin;
            node->end = rhs->end;
            if (els[i].viaOuter) {
                node->kind = Expr::Kind::Outer;
                for (const auto& l : concat(rhs->freeSubs, rhs->freeSupers))
                    if (contains(acc->freeSubs, l) || contains(acc->freeSupers, l))
                        err("label '" + l.str() + "' appears on both sides of the no-match product",
                            rhs->begin, rhs->end);
                node->freeSubs = concat(acc->freeSubs, rhs->freeSubs);
                node->freeSupers = concat(acc->freeSupers, rhs->freeSupers);
            } else {
                node->kind = Expr::Kind::Compose;
                const auto m = auto_matches(*acc, *rhs);
                std::vector<IndexLabel> matched;
                for (const auto& [a, bb] : m)
                    matched.push_back(a);
                node->freeSubs = concat(minus(acc->freeSubs, matched), rhs->freeSubs);
                node->freeSupers = concat(acc->freeSupers, minus(rhs->freeSupers, matched));
            }
            acc = node;
        }
        return acc;
    }

    std::pair<ExprPtr, bool> parse_term()
    {
        skip_ws();
        const std::size_t b = pos_;
        bool hasScalar = false;
        Scalar k(1);
        if (pos_ < text_.size() && is_digit(text_[pos_])) {
            k = parse_scalar();
            hasScalar = true;
        }

        std::vector<Element> els;
        els.push_back({parse_factor(), false});
        for (;;) {
            skip_ws();
            bool outerOp = false;
            if (try_eat(".") || try_eat(kRing)) {
                // composition sign
            } else if (try_eat(kTensor)) {
                outerOp = true;
            } else if (pos_ < text_.size() && (is_letter(text_[pos_]) || text_[pos_] == '(')) {
                // juxtaposition
            } else {
                break;
            }
            els.push_back({parse_factor(), outerOp});
        }

        chain_check(els);
        ExprPtr node = fold_chain(els);
        if (hasScalar) {
            auto s = std::make_shared<Expr>();
            s->kind = Expr::Kind::Scale;
            s->factor = k;
            s->left = node;
            s->freeSubs = node->freeSubs;
            s->freeSupers = node->freeSupers;
            s->begin = b;
            s->end = node->end;
            node = s;
        }
        return {node, hasScalar};
    }

    void check_sum_labels(const ExprPtr& l, const ExprPtr& r)
    {
        auto sorted = [](std::vector<IndexLabel> v) {
            std::sort(v.begin(), v.end());
            return v;
        };
        auto complain = [&](const std::vector<IndexLabel>& a, const std::vector<IndexLabel>& b,
                            const char* side) {
            for (const auto& x : concat(a, b))
                if (!contains(a, x) || !contains(b, x))
                    err("terms of a sum carry different " + std::string(side) + "s: label '" +
                            x.str() + "'",
                        r->begin, r->end);
        };
        if (sorted(l->freeSubs) != sorted(r->freeSubs))
            complain(l->freeSubs, r->freeSubs, "subscript");
        if (sorted(l->freeSupers) != sorted(r->freeSupers))
            complain(l->freeSupers, r->freeSupers, "superscript");
    }

    ExprPtr negate(const ExprPtr& t, bool hadScalar)
    {
        auto node = std::make_shared<Expr>();
        if (hadScalar && t->kind == Expr::Kind::Scale) {
            *node = *t;
            node->factor = -t->factor;
        } else {
            node->kind = Expr::Kind::Scale;
            node->factor = Scalar(-1);
            node->left = t;
            node->freeSubs = t->freeSubs;
            node->freeSupers = t->freeSupers;
            node->begin = t->begin;
            node->end = t->end;
        }
        return node;
    }

    ExprPtr parse_sum()
    {
        ExprPtr acc = parse_term().first;
        for (;;) {
            skip_ws();
            char op = 0;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-'))
                op = text_[pos_++];
            else
                break;
            auto [t, hadScalar] = parse_term();
            if (op == '-')
                t = negate(t, hadScalar);
            check_sum_labels(acc, t);
            auto node = std::make_shared<Expr>();
            node->kind = Expr::Kind::Sum;
            node->left = acc;
            node->right = t;
            node->freeSubs = acc->freeSubs;
            node->freeSupers = acc->freeSupers;
            node->begin = acc->begin;
            node->end = t->end;
            acc = node;
        }
        return acc;
    }
};

std::string labels_str(const std::vector<IndexLabel>& v)
{
    std::string out;
    for (const auto& l : v)
        out += l.str();
    return out;
}

std::string bracket_list(const char* tag, const std::vector<IndexLabel>& v)
{
    std::string out = std::string(tag) + "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += " ";
        out += v[i].str();
    }
    return out + "]";
}

std::string pair_list(const std::vector<std::pair<IndexLabel, IndexLabel>>& pairs)
{
    std::string out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i)
            out += " ";
        out += "(" + pairs[i].first.str() + "," + pairs[i].second.str() + ")";
    }
    return out;
}

std::string pp(const Expr& e);

// Operand position inside a chain: factors stand bare, anything else needs
// parentheses to reparse into the same tree.
std::string pp_tight(const Expr& e)
{
    if (e.kind == Expr::Kind::Factor)
        return pp(e);
    return "(" + pp(e) + ")";
}

// Left end of a chain: chains may continue bare (the grammar is
// left-associative), sums and scales need grouping.
std::string pp_chain_left(const Expr& e)
{
    if (e.kind == Expr::Kind::Factor || e.kind == Expr::Kind::Compose || e.kind == Expr::Kind::Outer)
        return pp(e);
    return "(" + pp(e) + ")";
}

std::string pp_scale_child(const Expr& e)
{
    if (e.kind == Expr::Kind::Sum || e.kind == Expr::Kind::Scale)
        return "(" + pp(e) + ")";
    return pp(e);
}

std::string pp_term(const Expr& e)
{
    if (e.kind == Expr::Kind::Sum)
        return "(" + pp(e) + ")";
    return pp(e);
}

std::string pp(const Expr& e)
{
    switch (e.kind) {
    case Expr::Kind::Factor: {
        std::string out = e.name;
        if (!e.subs.empty())
            out += "_" + labels_str(e.subs);
        if (!e.supers.empty())
            out += "^" + labels_str(e.supers);
        return out;
    }
    case Expr::Kind::Compose:
        return pp_chain_left(*e.left) + " " + pp_tight(*e.right);
    case Expr::Kind::Outer:
        return pp_chain_left(*e.left) + " " + kTensor + " " + pp_tight(*e.right);
    case Expr::Kind::Scale:
        return scalar_to_string(e.factor) + " " + pp_scale_child(*e.left);
    case Expr::Kind::Sum: {
        std::string out = pp(*e.left);
        const Expr& r = *e.right;
        if (r.kind == Expr::Kind::Scale && r.factor < 0) {
            const Scalar mag = -r.factor;
            out += " - ";
            if (mag != 1)
                out += scalar_to_string(mag) + " ";
            out += pp_scale_child(*r.left);
        } else {
            out += " + " + pp_term(r);
        }
        return out;
    }
    }
    fail_domain("unknown expression node");
}

void emit_steps(const Expr& e, std::vector<PlanStep>& steps)
{
    switch (e.kind) {
    case Expr::Kind::Factor: {
        PlanStep s;
        s.kind = PlanStep::Kind::Load;
        s.name = e.name;
        s.subs = e.subs;
        s.supers = e.supers;
        steps.push_back(std::move(s));
        const auto info = self_contract_info(e.subs, e.supers);
        if (!info.pairs.empty()) {
            PlanStep c;
            c.kind = PlanStep::Kind::Contract;
            c.pairs = info.pairs;
            c.subs = e.freeSubs;
            c.supers = e.freeSupers;
            steps.push_back(std::move(c));
        }
        return;
    }
    case Expr::Kind::Compose: {
        emit_steps(*e.left, steps);
        emit_steps(*e.right, steps);
        PlanStep s;
        s.kind = PlanStep::Kind::Compose;
        s.pairs = auto_matches(*e.left, *e.right);
        s.subs = e.freeSubs;
        s.supers = e.freeSupers;
        steps.push_back(std::move(s));
        return;
    }
    case Expr::Kind::Outer: {
        emit_steps(*e.left, steps);
        emit_steps(*e.right, steps);
        PlanStep s;
        s.kind = PlanStep::Kind::Outer;
        s.subs = e.freeSubs;
        s.supers = e.freeSupers;
        steps.push_back(std::move(s));
        return;
    }
    case Expr::Kind::Scale: {
        emit_steps(*e.left, steps);
        PlanStep s;
        s.kind = PlanStep::Kind::Scale;
        s.factor = e.factor;
        s.subs = e.freeSubs;
        s.supers = e.freeSupers;
        steps.push_back(std::move(s));
        return;
    }
    case Expr::Kind::Sum: {
        emit_steps(*e.left, steps);
        emit_steps(*e.right, steps);
        PlanStep s;
        s.kind = PlanStep::Kind::Add;
        s.subs = e.freeSubs;
        s.supers = e.freeSupers;
        steps.push_back(std::move(s));
        return;
    }
    }
    fail_domain("unknown expression node");
}

void validate_walk(const Expr& e, const Env& env, int& dim, std::string& basis)
{
    if (e.kind != Expr::Kind::Factor) {
        if (e.left)
            validate_walk(*e.left, env, dim, basis);
        if (e.right)
            validate_walk(*e.right, env, dim, basis);
        return;
    }
    const std::string at = span_str(e.begin, e.end);
    auto it = env.find(e.name);
    if (it == env.end())
        fail_usage("name '" + e.name + "' is not bound in the environment" + at);
    const TensorMap& t = it->second;
    if (t.subs().size() != e.subs.size() || t.supers().size() != e.supers.size())
        fail_usage("factor '" + e.name + "' writes " + std::to_string(e.subs.size()) +
                   " subscript(s) and " + std::to_string(e.supers.size()) +
                   " superscript(s) but the bound tensor has " + std::to_string(t.subs().size()) +
                   " and " + std::to_string(t.supers().size()) + at);
    for (std::size_t i = 0; i < e.subs.size(); ++i)
        if (e.subs[i].dual != t.subs()[i].dual)
            fail_usage("subscript '" + e.subs[i].str() + "' of '" + e.name +
                       "' disagrees with the bound slot about the dual-space star" + at);
    for (std::size_t i = 0; i < e.supers.size(); ++i)
        if (e.supers[i].dual != t.supers()[i].dual)
            fail_usage("superscript '" + e.supers[i].str() + "' of '" + e.name +
                       "' disagrees with the bound slot about the dual-space star" + at);
    if (dim == 0) {
        dim = t.dim();
        basis = t.basis();
    } else {
        if (t.dim() != dim)
            fail_usage("expression mixes dimensions " + std::to_string(dim) + " and " +
                       std::to_string(t.dim()) + at);
        if (t.basis() != basis)
            fail_usage("expression mixes bases '" + basis + "' and '" + t.basis() + "'" + at);
    }
}

} // namespace

bool expr_equal(const Expr& a, const Expr& b)
{
    if (a.kind != b.kind)
        return false;
    switch (a.kind) {
    case Expr::Kind::Factor:
        return a.name == b.name && a.subs == b.subs && a.supers == b.supers;
    case Expr::Kind::Scale:
        return a.factor == b.factor && expr_equal(*a.left, *b.left);
    case Expr::Kind::Compose:
    case Expr::Kind::Outer:
    case Expr::Kind::Sum:
        return expr_equal(*a.left, *b.left) && expr_equal(*a.right, *b.right);
    }
    return false;
}

ExprPtr parse_expr_text(const std::string& text)
{
    return Parser(text).run();
}

std::string pretty_print(const Expr& e)
{
    return pp(e);
}

Plan build_plan(const Expr& e)
{
    Plan p;
    emit_steps(e, p.steps);
    p.outSubs = e.freeSubs;
    p.outSupers = e.freeSupers;
    return p;
}

std::string plan_text(const Plan& p)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        const PlanStep& s = p.steps[i];
        os << (i + 1) << " ";
        switch (s.kind) {
        case PlanStep::Kind::Load:
            os << "load " << s.name << " " << bracket_list("subs", s.subs) << " "
               << bracket_list("supers", s.supers);
            break;
        case PlanStep::Kind::Contract:
            os << "contract pairs[" << pair_list(s.pairs) << "] -> "
               << bracket_list("subs", s.subs) << " " << bracket_list("supers", s.supers);
            break;
        case PlanStep::Kind::Compose:
            os << "compose matches[" << pair_list(s.pairs) << "] -> "
               << bracket_list("subs", s.subs) << " " << bracket_list("supers", s.supers);
            break;
        case PlanStep::Kind::Outer:
            os << "outer -> " << bracket_list("subs", s.subs) << " "
               << bracket_list("supers", s.supers);
            break;
        case PlanStep::Kind::Scale:
            os << "scale " << scalar_to_string(s.factor) << " -> "
               << bracket_list("subs", s.subs) << " " << bracket_list("supers", s.supers);
            break;
        case PlanStep::Kind::Add:
            os << "add -> " << bracket_list("subs", s.subs) << " "
               << bracket_list("supers", s.supers);
            break;
        }
        os << "\n";
    }
    os << "result " << bracket_list("subs", p.outSubs) << " " << bracket_list("supers", p.outSupers)
       << " valence (" << p.outSupers.size() << " over " << p.outSubs.size() << ")\n";
    return os.str();
}

Plan validate(const Expr& e, const Env& env)
{
    int dim = 0;
    std::string basis;
    validate_walk(e, env, dim, basis);
    return build_plan(e);
}

TensorMap evaluate(const Plan& p, const Env& env)
{
    std::vector<TensorMap> stack;
    auto pop = [&]() {
        if (stack.empty())
            fail_domain("malformed plan: empty stack");
        TensorMap t = std::move(stack.back());
        stack.pop_back();
        return t;
    };
    for (const PlanStep& s : p.steps) {
        switch (s.kind) {
        case PlanStep::Kind::Load: {
            auto it = env.find(s.name);
            if (it == env.end())
                fail_domain("name '" + s.name + "' is not bound");
            const auto info = self_contract_info(s.subs, s.supers);
            stack.push_back(relabel(it->second, s.subs,
                                    info.pairs.empty() ? s.supers : info.tempSupers));
            break;
        }
        case PlanStep::Kind::Contract: {
            const TensorMap t = pop();
            stack.push_back(contract(t, s.pairs));
            break;
        }
        case PlanStep::Kind::Compose: {
            const TensorMap r = pop();
            const TensorMap l = pop();
            stack.push_back(compose_general(l, r, MatchSpec{s.pairs}));
            break;
        }
        case PlanStep::Kind::Outer: {
            const TensorMap r = pop();
            const TensorMap l = pop();
            stack.push_back(outer(l, r));
            break;
        }
        case PlanStep::Kind::Scale: {
            const TensorMap t = pop();
            stack.push_back(tm_scale(s.factor, t));
            break;
        }
        case PlanStep::Kind::Add: {
            const TensorMap r = pop();
            const TensorMap l = pop();
            stack.push_back(tm_add(l, reorder_like(r, l.subs(), l.supers())));
            break;
        }
        }
    }
    if (stack.size() != 1)
        fail_domain("malformed plan: " + std::to_string(stack.size()) + " values left");
    return stack.back();
}

} // namespace tenskit
