#include "fmethod/serialize.hpp"

#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

namespace fmethod {

namespace {

// One rendered summand: sign in {+1, -1}, body without the sign. An empty
// body stands for magnitude one and only survives when no monomial follows.
struct Piece {
    int sign = 1;
    std::string body;
};

std::string join_pieces(const std::vector<Piece>& pieces) {
    if (pieces.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < pieces.size(); ++i) {
        const Piece& p = pieces[i];
        if (i == 0)
            out += p.sign < 0 ? "-" : "";
        else
            out += p.sign < 0 ? " - " : " + ";
        out += p.body.empty() ? "1" : p.body;
    }
    return out;
}

std::string exp_suffix(uint32_t e) {
    return e == 1 ? std::string() : "^{" + std::to_string(e) + "}";
}

std::string latex_monomial(const std::vector<std::string>& vars, const ExpVec& e) {
    std::string out;
    for (size_t v = 0; v < e.size(); ++v) {
        if (!e[v]) continue;
        if (!out.empty()) out += " ";
        out += latex_name(vars[v]) + exp_suffix(e[v]);
    }
    return out;
}

std::string latex_partial_monomial(const std::vector<std::string>& vars, const ExpVec& e) {
    std::string out;
    for (size_t v = 0; v < e.size(); ++v) {
        if (!e[v]) continue;
        if (!out.empty()) out += " ";
        out += "\\partial_{" + latex_name(vars[v]) + "}" + exp_suffix(e[v]);
    }
    return out;
}

// Sign-extracted coefficient: constants and single-term polynomials give up
// their sign and render bare, anything else rides inside \left( \right).
Piece latex_coeff(const RatFunc& c) {
    Piece p;
    if (c.is_constant()) {
        BigRat v = c.constant_value();
        p.sign = v.sign() < 0 ? -1 : 1;
        BigRat a = v.abs();
        p.body = a == BigRat(1) ? std::string() : latex_rational(a);
        return p;
    }
    if (c.is_polynomial() && c.num().terms().size() == 1) {
        const auto& [e, coef] = *c.num().terms().begin();
        p.sign = coef.sign() < 0 ? -1 : 1;
        MPoly mono = MPoly::monomial(c.num().vars(), e, coef.abs());
        p.body = latex_mpoly(mono);
        return p;
    }
    p.body = "\\left(" + latex_ratfunc(c) + "\\right)";
    return p;
}

Piece latex_fiber_coeff(const FiberMatrix& m) {
    if (m.is_scalar()) return latex_coeff(m.scalar_value());
    Piece p;
    std::string body = "\\begin{pmatrix}";
    for (size_t i = 0; i < m.rows(); ++i) {
        if (i) body += " \\\\ ";
        for (size_t j = 0; j < m.cols(); ++j) {
            if (j) body += " & ";
            body += latex_ratfunc(m.at(i, j));
        }
    }
    p.body = body + "\\end{pmatrix}";
    return p;
}

std::string attach(Piece coeff, const std::string& monomial) {
    if (monomial.empty()) return coeff.body;
    if (coeff.body.empty()) return monomial;
    return coeff.body + " " + monomial;
}

std::string parity_name(Parity p) {
    switch (p) {
        case Parity::Even: return "even";
        case Parity::Odd: return "odd";
        default: return "all";
    }
}

std::string weight_text(const RepWeight& w) {
    std::string out;
    for (const auto& [name, val] : w.values()) {
        if (!out.empty()) out += ", ";
        out += name + " -> " + val.to_string();
    }
    return out;
}

} // namespace

Json json_ratfunc(const RatFunc& r) { return r.to_string(); }

Json json_fiber_matrix(const FiberMatrix& m) {
    if (m.is_scalar()) return m.scalar_value().to_string();
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json json_fiber_poly(const FiberPoly& p) {
    Json j;
    j["vars"] = p.vars();
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exp"] = e;
        t["coeff"] = json_fiber_matrix(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Json json_weyl(const WeylElement& t) {
    Json j;
    j["vars"] = t.vars();
    Json terms = Json::array();
    for (const auto& [key, c] : t.terms()) {
        Json term;
        term["z"] = key.z;
        term["d"] = key.d;
        term["coeff"] = json_fiber_matrix(c);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

Json json_weight(const RepWeight& w) {
    Json values = Json::object();
    for (const auto& [name, val] : w.values()) values[name] = val.to_string();
    Json j;
    j["params"] = w.params();
    j["values"] = std::move(values);
    return j;
}

Json json_singular_vector(const SingularVector& sv) {
    Json j;
    j["degree"] = sv.degree;
    j["psi"] = json_fiber_poly(sv.psi);
    j["nu"] = json_weight(sv.nu);
    return j;
}

Json json_operator(const DiffOperator& d) {
    Json j;
    j["degree"] = d.degree;
    j["operator"] = json_weyl(d.op);
    Json restr = Json::array();
    for (const auto& im : d.restriction) restr.push_back(im.to_string());
    j["restriction"] = std::move(restr);
    j["target_vars"] = d.sub_coord_vars;
    j["nu"] = json_weight(d.nu);
    return j;
}

Json json_outcome(const FSetting& s, const SolveOptions& opt, const SolveOutcome& out) {
    Json j;
    j["schema_version"] = 1;
    j["setting"] = s.name;
    j["params"] = s.params;
    j["coordinates"] = s.coord_vars;
    j["dual_coordinates"] = s.dual_vars;
    Json search;
    if (opt.delta)
        search["delta"] = *opt.delta;
    else
        search["delta"] = nullptr;
    search["degree_max"] = opt.degree_max;
    search["parity"] = parity_name(opt.parity);
    search["reduce"] = opt.reduce;
    j["search"] = std::move(search);
    j["degrees_searched"] = out.degrees_searched;
    j["multiplicity"] = out.multiplicity;
    Json sols = Json::array();
    for (const auto& sv : out.solutions) sols.push_back(json_singular_vector(sv));
    j["solutions"] = std::move(sols);
    return j;
}

Json json_equivariance(const EquivarianceReport& rep) {
    Json j;
    j["passed"] = rep.passed;
    j["checks"] = rep.checks;
    j["controls_failed"] = rep.controls_failed;
    j["controls_expected"] = rep.controls_expected;
    j["detail"] = rep.detail;
    return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

std::string text_outcome(const FSetting& s, const SolveOutcome& out) {
    std::ostringstream os;
    os << "setting: " << s.name << "\n";
    os << "degrees searched:";
    for (uint32_t d : out.degrees_searched) os << " " << d;
    os << "\nmultiplicity:";
    for (size_t m : out.multiplicity) os << " " << m;
    os << "\nsolutions: " << out.solutions.size() << "\n";
    for (const auto& sv : out.solutions) {
        os << "[degree " << sv.degree << "] psi = " << sv.psi.to_string() << "\n";
        os << "  nu: " << weight_text(sv.nu) << "\n";
    }
    return os.str();
}

std::string text_operator(const DiffOperator& d) {
    std::ostringstream os;
    os << "[degree " << d.degree << "] D = " << d.op.to_string() << "\n";
    os << "restriction:";
    const auto& vars = d.op.vars();
    for (size_t i = 0; i < d.restriction.size(); ++i)
        os << (i ? ", " : " ") << vars[i] << " -> " << d.restriction[i].to_string();
    os << "\nnu: " << weight_text(d.nu) << "\n";
    return os.str();
}

std::string latex_name(const std::string& name) {
    static const std::set<std::string> greek = {
        "alpha", "beta",    "gamma", "delta", "epsilon", "zeta",  "eta",  "theta",
        "iota",  "kappa",   "lambda", "mu",   "nu",      "xi",    "pi",   "rho",
        "sigma", "tau",     "upsilon", "phi", "chi",     "psi",   "omega"};
    size_t cut = name.size();
    while (cut > 0 && std::isdigit(static_cast<unsigned char>(name[cut - 1]))) --cut;
    std::string base = name.substr(0, cut), digits = name.substr(cut);
    if (greek.count(base)) base = "\\" + base;
    if (digits.empty()) return base;
    return base + "_{" + digits + "}";
}

std::string latex_rational(const BigRat& c) {
    std::string sign = c.sign() < 0 ? "-" : "";
    BigRat a = c.abs();
    if (a.is_integer()) return sign + a.num_string();
    return sign + "\\frac{" + a.num_string() + "}{" + a.den_string() + "}";
}

std::string latex_mpoly(const MPoly& p) {
    std::vector<Piece> pieces;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Piece pc;
        pc.sign = it->second.sign() < 0 ? -1 : 1;
        BigRat a = it->second.abs();
        std::string mono = latex_monomial(p.vars(), it->first);
        std::string coeff = a == BigRat(1) && !mono.empty() ? std::string() : latex_rational(a);
        pc.body = attach({1, coeff}, mono);
        pieces.push_back(std::move(pc));
    }
    return join_pieces(pieces);
}

std::string latex_ratfunc(const RatFunc& r) {
    if (r.is_polynomial()) return latex_mpoly(r.num());
    return "\\frac{" + latex_mpoly(r.num()) + "}{" + latex_mpoly(r.den()) + "}";
}

std::string latex_fiber_poly(const FiberPoly& p) {
    std::vector<Piece> pieces;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Piece coeff = latex_fiber_coeff(it->second);
        Piece pc;
        pc.sign = coeff.sign;
        pc.body = attach(coeff, latex_monomial(p.vars(), it->first));
        pieces.push_back(std::move(pc));
    }
    return join_pieces(pieces);
}

std::string latex_weyl(const WeylElement& t) {
    std::vector<Piece> pieces;
    for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it) {
        Piece coeff = latex_fiber_coeff(it->second);
        std::string mono = latex_monomial(t.vars(), it->first.z);
        std::string part = latex_partial_monomial(t.vars(), it->first.d);
        std::string both = mono.empty() ? part : (part.empty() ? mono : mono + " " + part);
        Piece pc;
        pc.sign = coeff.sign;
        pc.body = attach(coeff, both);
        pieces.push_back(std::move(pc));
    }
    return join_pieces(pieces);
}

std::string latex_outcome(const FSetting& s, const SolveOutcome& out) {
    std::ostringstream os;
    os << "% setting: " << s.name << "\n";
    for (size_t i = 0; i < out.solutions.size(); ++i) {
        const auto& sv = out.solutions[i];
        os << "\\[ \\psi_{" << sv.degree << "} = " << latex_fiber_poly(sv.psi) << " \\]\n";
        os << "\\[ \\nu_{" << sv.degree << "} : ";
        bool first = true;
        for (const auto& [name, val] : sv.nu.values()) {
            if (!first) os << ",\\; ";
            first = false;
            os << latex_name(name) << " \\mapsto " << latex_mpoly(val);
        }
        os << " \\]\n";
    }
    return os.str();
}

std::string latex_operator(const DiffOperator& d) {
    std::ostringstream os;
    os << "\\[ D = " << latex_weyl(d.op) << " \\]\n";
    os << "% restriction:";
    const auto& vars = d.op.vars();
    for (size_t i = 0; i < d.restriction.size(); ++i)
        os << (i ? ", " : " ") << vars[i] << " -> " << d.restriction[i].to_string();
    os << "\n";
    return os.str();
}

} // namespace fmethod
