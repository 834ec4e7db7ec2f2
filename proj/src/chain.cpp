#include "permucell/chain.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace permucell {

ValidationReport validate(const FinChainComplex& c) {
    ValidationReport rep;
    for (int d : c.degrees) {
        auto it = c.diff.find(d);
        if (it == c.diff.end()) continue;
        const SparseMatrix& m = it->second;
        if (m.cols() != c.dim_at(d) || m.rows() != c.dim_at(d + 1)) {
            rep.ok = false;
            rep.issues.push_back({d, "", "differential shape " + std::to_string(m.rows()) + "x" +
                                             std::to_string(m.cols()) + " does not match bases"});
        }
    }
    if (!rep.ok) return rep;

    for (int d : c.degrees) {
        auto lo = c.diff.find(d);
        auto hi = c.diff.find(d + 1);
        if (lo == c.diff.end() || hi == c.diff.end()) continue;
        SparseMatrix sq = compose(hi->second, lo->second);
        if (sq.is_zero()) continue;
        rep.ok = false;
        for (int col = 0; col < sq.cols(); ++col) {
            // report one violation per source basis vector
            for (int r = 0; r < sq.rows(); ++r) {
                Rational v = sq.get(r, col);
                if (v.is_zero()) continue;
                const auto& src = c.basis.at(d);
                const auto& dst = c.basis.at(d + 2);
                rep.issues.push_back({d, src[col],
                                      "d(d(.)) has coefficient " + v.str() + " on " + dst[r]});
                break;
            }
        }
    }
    return rep;
}

BettiTable betti(const FinChainComplex& c) {
    ValidationReport rep = validate(c);
    if (!rep.ok) throw std::runtime_error("betti: complex fails validation (d^2 != 0 or bad shapes)");
    std::map<int, int> rk;
    for (const auto& [d, m] : c.diff) rk[d] = rank(m);
    BettiTable t;
    for (int d : c.degrees) {
        int r_out = rk.count(d) ? rk[d] : 0;
        int r_in = rk.count(d - 1) ? rk[d - 1] : 0;
        t[d] = c.dim_at(d) - r_out - r_in;
    }
    return t;
}

long euler(const FinChainComplex& c) {
    long e = 0;
    for (int d : c.degrees) e += (d % 2 == 0 ? 1 : -1) * static_cast<long>(c.dim_at(d));
    return e;
}

std::string complex_to_json(const FinChainComplex& c) {
    nlohmann::json j;
    j["degrees"] = c.degrees;
    nlohmann::json jb(nlohmann::json::value_t::object);
    for (const auto& [d, labels] : c.basis) jb[std::to_string(d)] = labels;
    j["basis"] = jb;
    nlohmann::json jd(nlohmann::json::value_t::object);
    for (const auto& [d, m] : c.diff) {
        nlohmann::json entries = nlohmann::json::array();
        for (int r = 0; r < m.rows(); ++r)
            for (const auto& [col, v] : m.row(r))
                entries.push_back({r, col, v.str()});
        jd[std::to_string(d)] = entries;
    }
    j["diff"] = jd;
    return j.dump(2) + "\n";
}

FinChainComplex complex_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    FinChainComplex c;
    c.degrees = j.at("degrees").get<std::vector<int>>();
    for (const auto& [key, labels] : j.at("basis").items())
        c.basis[std::stoi(key)] = labels.get<std::vector<std::string>>();
    for (const auto& [key, entries] : j.at("diff").items()) {
        int d = std::stoi(key);
        SparseMatrix m(static_cast<int>(c.basis.count(d + 1) ? c.basis[d + 1].size() : 0),
                       static_cast<int>(c.basis.count(d) ? c.basis[d].size() : 0));
        for (const auto& e : entries)
            m.add(e[0].get<int>(), e[1].get<int>(), Rational::parse(e[2].get<std::string>()));
        c.diff[d] = m;
    }
    return c;
}

std::string betti_to_json(const BettiTable& t) {
    nlohmann::json j(nlohmann::json::value_t::object);
    for (const auto& [d, b] : t) j[std::to_string(d)] = b;
    return j.dump(2) + "\n";
}

std::string betti_to_markdown(const BettiTable& t) {
    std::ostringstream os;
    os << "| degree | betti |\n|---|---|\n";
    for (const auto& [d, b] : t) os << "| " << d << " | " << b << " |\n";
    return os.str();
}

std::string betti_to_csv(const BettiTable& t) {
    std::ostringstream os;
    os << "degree,betti\n";
    for (const auto& [d, b] : t) os << d << ',' << b << '\n';
    return os.str();
}

}  // namespace permucell
