#pragma once

// Verification outcomes. A report either passes or names the first axiom
// that failed, with the basis indices of the offending arguments, the
// output coordinate, and both evaluated sides.

#include "entwine/matrix.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace entwine {

struct Witness {
    std::string axiom;
    std::vector<std::size_t> input;  // argument basis indices, one per tensor factor
    std::vector<std::size_t> output; // output coordinate, one per tensor factor
    std::string lhs;
    std::string rhs;
};

struct Report {
    std::string operation;
    bool pass = true;
    std::vector<std::string> checked;
    std::vector<std::pair<std::string, std::string>> facts;
    std::optional<Witness> witness;
    std::string message;

    explicit Report(std::string op = {}) : operation(std::move(op)) {}

    explicit operator bool() const { return pass; }

    void fact(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }

    std::optional<std::string> fact_value(const std::string &key) const
    {
        for (auto &[k, v] : facts)
            if (k == key)
                return v;
        return std::nullopt;
    }

    /// Records a failure that has no basis-level witness.
    bool fail(std::string why)
    {
        if (pass) {
            pass = false;
            message = std::move(why);
        }
        return false;
    }

    /// Folds a sub-report in, prefixing its axioms; the first failure wins.
    bool absorb(const Report &sub, const std::string &prefix = {})
    {
        for (auto &c : sub.checked)
            checked.push_back(prefix + c);
        for (auto &[k, v] : sub.facts)
            facts.emplace_back(prefix + k, v);
        if (!sub.pass && pass) {
            pass = false;
            witness = sub.witness;
            if (witness)
                witness->axiom = prefix + witness->axiom;
            message = prefix + (sub.message.empty() ? sub.operation : sub.message);
        }
        return sub.pass;
    }

    /// Compares two linear maps with the same domain and codomain. The first
    /// differing column (in domain basis order) becomes the witness.
    bool expect_equal(const std::string &axiom, const Matrix &lhs, const Matrix &rhs,
                      const TensorShape &domain, const TensorShape &codomain)
    {
        if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
            throw consistency_error(axiom + ": sides have shapes " + lhs.shape() + " and " + rhs.shape());
        if (domain.size() != lhs.cols() || codomain.size() != lhs.rows())
            throw consistency_error(axiom + ": tensor shape does not match " + lhs.shape());
        for (std::size_t j = 0; j < lhs.cols(); ++j)
            for (std::size_t i = 0; i < lhs.rows(); ++i)
                if (lhs(i, j) != rhs(i, j)) {
                    if (pass) {
                        pass = false;
                        witness = Witness{axiom, domain.decode(j), codomain.decode(i),
                                          lhs.field().format(lhs(i, j)), rhs.field().format(rhs(i, j))};
                        message = axiom + " violated";
                    }
                    return false;
                }
        checked.push_back(axiom);
        return true;
    }

    std::string to_text() const
    {
        std::ostringstream os;
        os << operation << ": " << (pass ? "PASS" : "FAIL") << '\n';
        for (auto &c : checked)
            os << "  ok   " << c << '\n';
        for (auto &[k, v] : facts)
            os << "  " << k << " = " << v << '\n';
        if (!pass) {
            os << "  fail " << message << '\n';
            if (witness) {
                auto list = [](const std::vector<std::size_t> &v) {
                    std::string s = "(";
                    for (std::size_t k = 0; k < v.size(); ++k)
                        s += (k ? "," : "") + std::to_string(v[k]);
                    return s + ")";
                };
                os << "       axiom " << witness->axiom << " at input " << list(witness->input)
                   << " output " << list(witness->output) << ": lhs = " << witness->lhs
                   << ", rhs = " << witness->rhs << '\n';
            }
        }
        return os.str();
    }
};

} // namespace entwine
