#pragma once

// Bounded-depth tree construction and serialization. Output is deterministic
// byte for byte: fixed traversal order, no unordered containers, decimals
// only in the optional annotation field (never in structural output).
// JSON documents carry the schema tag "surdpath-v1".

#include <cstdint>
#include <json.hpp>
#include <memory>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "surdpath/cf.hpp"
#include "surdpath/errors.hpp"
#include "surdpath/lpp.hpp"
#include "surdpath/oracle.hpp"
#include "surdpath/surd.hpp"

namespace surdpath {

inline constexpr int kDefaultDepthCap = 12;
inline constexpr const char* kJsonSchema = "surdpath-v1";

/// Reduced positive rational, the label type of the classic Calkin-Wilf tree.
struct Rational {
    int64_t num;
    int64_t den;

    static Rational make(int64_t num, int64_t den) {
        if (num <= 0 || den <= 0) fail(Errc::NonPositiveValue, "rational must be positive");
        int64_t g = std::gcd(num, den);
        return {num / g, den / g};
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

struct TreeNode {
    std::variant<Rational, QuadraticSurd> label;  // Rational first: default state
    int depth = 0;
    bool on_lpp = false;
    std::unique_ptr<TreeNode> left;
    std::unique_ptr<TreeNode> right;
};

namespace detail {
inline std::unique_ptr<TreeNode> build_surd_node(const QuadraticSurd& x, int depth, int remaining,
                                                 bool on_lpp) {
    auto node = std::make_unique<TreeNode>();
    node->label = x;
    node->depth = depth;
    node->on_lpp = on_lpp;
    if (remaining == 0) return node;
    Step lpp_dir = Step::Left;
    if (on_lpp && x.eps() == 1) lpp_dir = lpp_step(x).first;
    node->left = build_surd_node(left_child(x), depth + 1, remaining - 1,
                                 on_lpp && x.eps() == 1 && lpp_dir == Step::Left);
    node->right = build_surd_node(right_child(x), depth + 1, remaining - 1,
                                  on_lpp && x.eps() == 1 && lpp_dir == Step::Right);
    return node;
}
}  // namespace detail

/// Complete binary tree of the given depth rooted at `root`, with the edges
/// of the left-positive path flagged.
inline TreeNode build_tree(const QuadraticSurd& root, int depth, int cap = kDefaultDepthCap) {
    if (depth < 0 || depth > cap)
        fail(Errc::DepthCapExceeded, "depth must be between 0 and " + std::to_string(cap));
    return std::move(*detail::build_surd_node(root, 0, depth, true));
}

/// First n labels of the classic Calkin-Wilf tree in breadth-first order:
/// 1, 1/2, 2, 1/3, 3/2, 2/3, 3, ...
inline std::vector<Rational> classic_cw_sequence(size_t n) {
    if (n == 0) fail(Errc::PreconditionViolated, "n must be positive");
    std::vector<Rational> out;
    out.reserve(2 * n + 2);
    out.push_back({1, 1});
    for (size_t i = 0; out.size() < 2 * n + 1; ++i) {
        const Rational x = out[i];  // children of a reduced a/b stay reduced
        out.push_back({x.num, checked_add(x.num, x.den)});
        out.push_back({checked_add(x.num, x.den), x.den});
    }
    out.resize(n);
    return out;
}

enum class EmitFormat { Text, Dot, Json };

struct EmitOptions {
    bool annotate = false;  // add truncated decimal values (via the oracle)
    int annotate_digits = 12;
};

// --- JSON views -------------------------------------------------------------

inline nlohmann::json json_of(const QuadraticSurd& x) {
    return {{"N", x.radicand()},
            {"eps", x.eps()},
            {"c", x.c()},
            {"d", x.d()},
            {"display", format_surd(x)}};
}

inline nlohmann::json json_of(const TreeNode& node, const EmitOptions& opt = {}) {
    nlohmann::json j;
    if (std::holds_alternative<QuadraticSurd>(node.label)) {
        const auto& x = std::get<QuadraticSurd>(node.label);
        j["label"] = json_of(x);
        if (opt.annotate) j["approx"] = oracle::decimal_annotation(x, opt.annotate_digits);
    } else {
        const auto& r = std::get<Rational>(node.label);
        j["label"] = {{"num", r.num}, {"den", r.den}, {"display", r.str()}};
    }
    j["depth"] = node.depth;
    j["on_lpp"] = node.on_lpp;
    if (node.left) j["left"] = json_of(*node.left, opt);
    if (node.right) j["right"] = json_of(*node.right, opt);
    return j;
}

inline nlohmann::json json_of(const LppTrace& trace, const EmitOptions& opt = {}) {
    nlohmann::json j{{"schema", kJsonSchema}, {"kind", "lpp_trace"}};
    j["root"] = json_of(trace.root);
    j["period"] = trace.period;
    if (trace.symmetry_index)
        j["symmetry_index"] = *trace.symmetry_index;
    else
        j["symmetry_index"] = nullptr;
    j["c_seq"] = trace.c_seq;
    j["d_seq"] = trace.d_seq;
    std::string steps;
    for (Step s : trace.steps) steps.push_back(step_char(s));
    j["steps"] = steps;
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& x : trace.nodes) {
        nlohmann::json nj = json_of(x);
        if (opt.annotate) nj["approx"] = oracle::decimal_annotation(x, opt.annotate_digits);
        nodes.push_back(nj);
    }
    j["nodes"] = nodes;
    return j;
}

inline nlohmann::json json_of(const CfExpansion& e) {
    nlohmann::json j{{"schema", kJsonSchema}, {"kind", "cf"}};
    j["terms"] = e.terms;
    if (e.period_start) {
        j["period_start"] = *e.period_start;
        j["period_len"] = *e.period_len;
    } else {
        j["period_start"] = nullptr;
        j["period_len"] = nullptr;
    }
    return j;
}

inline nlohmann::json json_of(const IrrationalityCertificate& cert) {
    nlohmann::json j{{"schema", kJsonSchema}, {"kind", "irrationality_certificate"}};
    j["index_a"] = cert.index_a;
    j["index_b"] = cert.index_b;
    j["repeated"] = json_of(cert.repeated);
    return j;
}

inline nlohmann::json json_of(const PalindromeReport& rep) {
    nlohmann::json j{{"schema", kJsonSchema}, {"kind", "palindrome_report"}};
    if (rep.symmetry_index) {
        j["symmetry_index"] = *rep.symmetry_index;
        j["steps_palindrome_to_m"] = rep.steps_palindrome_to_m;
        j["c_antisymmetric"] = rep.c_antisymmetric;
        j["d_symmetric"] = rep.d_symmetric;
        if (rep.even_center_zero) j["even_center_zero"] = *rep.even_center_zero;
    } else {
        j["symmetry_index"] = nullptr;
    }
    j["root_c_zero"] = rep.root_c_zero;
    if (rep.full_period_palindrome) j["full_period_palindrome"] = *rep.full_period_palindrome;
    return j;
}

inline nlohmann::json json_of(const LegendreReport& rep) {
    nlohmann::json j{{"schema", kJsonSchema}, {"kind", "legendre_report"}};
    j["r_num"] = rep.r_num;
    j["r_den"] = rep.r_den;
    j["N"] = rep.radicand;
    j["q"] = rep.q;
    j["a0"] = rep.a0;
    j["period"] = rep.period;
    j["periodic_from_one"] = rep.periodic_from_one;
    j["interior_palindrome"] = rep.interior_palindrome;
    j["terminal_twice_a0"] = rep.terminal_twice_a0;
    j["ok"] = rep.ok();
    return j;
}

inline nlohmann::json json_of(const GaloisReport& rep) {
    nlohmann::json j{{"schema", kJsonSchema}, {"kind", "galois_report"}};
    j["x"] = json_of(rep.x);
    j["recip_neg_conj"] = json_of(rep.recip_neg_conj);
    j["period"] = rep.period;
    j["recip_period"] = rep.recip_period;
    j["t_pattern"] = rep.t_pattern;
    j["m_lpp"] = rep.m_lpp;
    j["purely_periodic"] = rep.purely_periodic;
    j["m_even"] = rep.m_even;
    j["reversal_ok"] = rep.reversal_ok;
    j["a_eq_t_ok"] = rep.a_eq_t_ok;
    j["parity_chain_ok"] = rep.parity_chain_ok;
    j["reverse_reading_ok"] = rep.reverse_reading_ok;
    j["ok"] = rep.ok();
    return j;
}

// --- text / dot helpers ------------------------------------------------------

namespace detail {

inline std::string label_str(const TreeNode& node) {
    if (std::holds_alternative<QuadraticSurd>(node.label))
        return format_surd(std::get<QuadraticSurd>(node.label));
    return std::get<Rational>(node.label).str();
}

inline void tree_text(const TreeNode& node, std::ostream& os, const EmitOptions& opt,
                      const std::string& indent, const char* tag) {
    os << indent << tag << label_str(node);
    if (node.on_lpp) os << "  *";
    if (opt.annotate && std::holds_alternative<QuadraticSurd>(node.label))
        os << "  ~= "
           << oracle::decimal_annotation(std::get<QuadraticSurd>(node.label), opt.annotate_digits);
    os << "\n";
    if (node.left) tree_text(*node.left, os, opt, indent + "  ", "L: ");
    if (node.right) tree_text(*node.right, os, opt, indent + "  ", "R: ");
}

inline void tree_dot(const TreeNode& node, std::ostream& os, const std::string& path) {
    os << "  n" << path << " [label=\"" << label_str(node) << "\"];\n";
    for (const auto* child : {node.left.get(), node.right.get()}) {
        if (!child) continue;
        std::string child_path = path + (child == node.left.get() ? "L" : "R");
        tree_dot(*child, os, child_path);
        os << "  n" << path << " -> n" << child_path;
        if (node.on_lpp && child->on_lpp) os << " [penwidth=2]";
        os << ";\n";
    }
}

inline void dump_json(const nlohmann::json& j, std::ostream& os) { os << j.dump(2) << "\n"; }

inline const char* pass_fail(bool b) { return b ? "PASS" : "FAIL"; }

inline std::string int_list(const std::vector<int64_t>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += std::to_string(v[i]) + (i + 1 < v.size() ? ", " : "");
    return s + "]";
}

}  // namespace detail

// --- emit ---------------------------------------------------------------------

inline void emit(const TreeNode& tree, EmitFormat format, std::ostream& os,
                 const EmitOptions& opt = {}) {
    switch (format) {
        case EmitFormat::Text:
            detail::tree_text(tree, os, opt, "", "");
            return;
        case EmitFormat::Dot:
            os << "digraph cwtree {\n";
            detail::tree_dot(tree, os, "");
            os << "}\n";
            return;
        case EmitFormat::Json: {
            nlohmann::json j{{"schema", kJsonSchema}, {"kind", "tree"}};
            j["root"] = json_of(tree, opt);
            detail::dump_json(j, os);
            return;
        }
    }
    fail(Errc::UnsupportedFormat, "unknown format");
}

inline void emit(const LppTrace& trace, EmitFormat format, std::ostream& os,
                 const EmitOptions& opt = {}) {
    auto T = static_cast<size_t>(trace.period);
    switch (format) {
        case EmitFormat::Text: {
            for (size_t n = 0; n <= T; ++n) {
                os << "x" << n << " = " << format_surd(trace.nodes[n]);
                if (opt.annotate)
                    os << "  ~= "
                       << oracle::decimal_annotation(trace.nodes[n], opt.annotate_digits);
                os << "\n";
                if (n < T) os << "  " << step_char(trace.steps[n]) << "\n";
            }
            os << "T = " << trace.period << "\n";
            if (trace.symmetry_index)
                os << "symmetry index m = " << *trace.symmetry_index << "\n";
            else
                os << "symmetry index m = absent\n";
            return;
        }
        case EmitFormat::Dot: {
            os << "digraph lpp {\n";
            for (size_t n = 0; n <= T; ++n)
                os << "  n" << n << " [label=\"" << format_surd(trace.nodes[n]) << "\"];\n";
            for (size_t n = 0; n < T; ++n)
                os << "  n" << n << " -> n" << n + 1 << " [label=\"" << step_char(trace.steps[n])
                   << "\" penwidth=2];\n";
            os << "}\n";
            return;
        }
        case EmitFormat::Json:
            detail::dump_json(json_of(trace, opt), os);
            return;
    }
    fail(Errc::UnsupportedFormat, "unknown format");
}

inline void emit(const CfExpansion& e, EmitFormat format, std::ostream& os,
                 const EmitOptions& = {}) {
    switch (format) {
        case EmitFormat::Text: {
            os << "cf: [";
            for (size_t i = 0; i < e.terms.size(); ++i) {
                os << e.terms[i];
                if (i + 1 < e.terms.size()) os << (i == 0 ? "; " : ", ");
            }
            os << "]\n";
            if (e.period_start) {
                os << "period_start = " << *e.period_start << "\n";
                os << "period_len = " << *e.period_len << "\n";
                os << "period = " << detail::int_list(e.least_period()) << "\n";
            } else {
                os << "period: not detected\n";
            }
            return;
        }
        case EmitFormat::Json:
            detail::dump_json(json_of(e), os);
            return;
        case EmitFormat::Dot:
            fail(Errc::UnsupportedFormat, "no dot form for a continued fraction");
    }
    fail(Errc::UnsupportedFormat, "unknown format");
}

inline void emit(const IrrationalityCertificate& cert, EmitFormat format, std::ostream& os,
                 const EmitOptions& = {}) {
    switch (format) {
        case EmitFormat::Text:
            os << "certificate: x" << cert.index_a << " = x" << cert.index_b << " = "
               << format_surd(cert.repeated) << "\n";
            return;
        case EmitFormat::Json:
            detail::dump_json(json_of(cert), os);
            return;
        case EmitFormat::Dot:
            fail(Errc::UnsupportedFormat, "no dot form for a certificate");
    }
    fail(Errc::UnsupportedFormat, "unknown format");
}

inline void emit(const PalindromeReport& rep, EmitFormat format, std::ostream& os,
                 const EmitOptions& = {}) {
    switch (format) {
        case EmitFormat::Text: {
            if (rep.symmetry_index) {
                os << "symmetry index m = " << *rep.symmetry_index << "\n";
                os << "steps s_0..s_{m-1} palindrome: "
                   << detail::pass_fail(rep.steps_palindrome_to_m) << "\n";
                os << "c antisymmetric about m: " << detail::pass_fail(rep.c_antisymmetric)
                   << "\n";
                os << "d symmetric about m: " << detail::pass_fail(rep.d_symmetric) << "\n";
                if (rep.even_center_zero)
                    os << "even m: c_{m/2} = 0: " << detail::pass_fail(*rep.even_center_zero)
                       << "\n";
            } else {
                os << "symmetry index m = absent (no -root* in the period)\n";
            }
            if (rep.root_c_zero)
                os << "p = 0: full-period step palindrome: "
                   << detail::pass_fail(rep.full_period_palindrome.value_or(false)) << "\n";
            return;
        }
        case EmitFormat::Json:
            detail::dump_json(json_of(rep), os);
            return;
        case EmitFormat::Dot:
            fail(Errc::UnsupportedFormat, "no dot form for a report");
    }
    fail(Errc::UnsupportedFormat, "unknown format");
}

inline void emit(const LegendreReport& rep, EmitFormat format, std::ostream& os,
                 const EmitOptions& = {}) {
    switch (format) {
        case EmitFormat::Text:
            os << "R = " << rep.r_num << "/" << rep.r_den << ", sqrt(R) = "
               << format_surd(make_surd(rep.radicand, 1, 0, rep.q)) << "\n";
            os << "a0 = " << rep.a0 << "\n";
            os << "period = " << detail::int_list(rep.period) << "\n";
            os << "periodic from a1: " << detail::pass_fail(rep.periodic_from_one) << "\n";
            os << "interior palindrome: " << detail::pass_fail(rep.interior_palindrome) << "\n";
            os << "terminal term = 2*a0: " << detail::pass_fail(rep.terminal_twice_a0) << "\n";
            return;
        case EmitFormat::Json:
            detail::dump_json(json_of(rep), os);
            return;
        case EmitFormat::Dot:
            fail(Errc::UnsupportedFormat, "no dot form for a report");
    }
    fail(Errc::UnsupportedFormat, "unknown format");
}

inline void emit(const GaloisReport& rep, EmitFormat format, std::ostream& os,
                 const EmitOptions& = {}) {
    switch (format) {
        case EmitFormat::Text:
            os << "x = " << format_surd(rep.x) << ", -1/x* = " << format_surd(rep.recip_neg_conj)
               << "\n";
            os << "cf period of x = " << detail::int_list(rep.period) << "\n";
            os << "cf period of -1/x* = " << detail::int_list(rep.recip_period) << "\n";
            os << "t pattern of the LPP of x = " << detail::int_list(rep.t_pattern)
               << " (m = " << rep.m_lpp << ")\n";
            os << "purely periodic: " << detail::pass_fail(rep.purely_periodic) << "\n";
            os << "m even: " << detail::pass_fail(rep.m_even) << "\n";
            os << "reversal expands -1/x*: " << detail::pass_fail(rep.reversal_ok) << "\n";
            os << "a_n = t_n of the LPP of -1/x*: " << detail::pass_fail(rep.a_eq_t_ok) << "\n";
            os << "parity chain zeta_n vs -y_n*: " << detail::pass_fail(rep.parity_chain_ok)
               << "\n";
            os << "reverse reading of own t: " << detail::pass_fail(rep.reverse_reading_ok)
               << "\n";
            return;
        case EmitFormat::Json:
            detail::dump_json(json_of(rep), os);
            return;
        case EmitFormat::Dot:
            fail(Errc::UnsupportedFormat, "no dot form for a report");
    }
    fail(Errc::UnsupportedFormat, "unknown format");
}

}  // namespace surdpath
