#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace coxhull {

/// A word is a sequence of 1-based generator indices.
using Word = std::vector<int>;

inline Word parse_word(const std::string& s) {
    Word w;
    std::istringstream in(s);
    int x;
    while (in >> x) w.push_back(x);
    return w;
}

inline std::string format_word(const Word& w) {
    if (w.empty()) return "e";
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(w[i]);
    }
    return out;
}

/**
 * Symmetric matrix of bond orders m(i,j) defining a Coxeter group.
 * Entry 0 encodes an infinite order (also in the JSON file format).
 * Generators are the 1-based indices 1..rank.
 */
class CoxeterMatrix {
public:
    static constexpr int kInfinity = 0;

    CoxeterMatrix(int rank, std::vector<std::vector<int>> entries)
        : rank_(rank), m_(std::move(entries)) {
        validate();
    }

    /// Named finite types: A1..A7, B2..B4, D4, F4, G2, H3.
    static CoxeterMatrix from_type(const std::string& label);

    /// Parses {"rank": r, "m": [[..]]}; rejects asymmetric matrices.
    static CoxeterMatrix from_json(const nlohmann::json& j);
    static CoxeterMatrix load_file(const std::string& path);

    int rank() const { return rank_; }

    /// Bond order, 1-based generator indices. 0 means infinity.
    int order(int i, int j) const { return m_.at(i - 1).at(j - 1); }

    /// All off-diagonal orders lie in {2, infinity}.
    bool is_right_angled() const {
        for (int i = 1; i <= rank_; ++i)
            for (int j = i + 1; j <= rank_; ++j)
                if (order(i, j) != 2 && order(i, j) != kInfinity) return false;
        return true;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["rank"] = rank_;
        j["m"] = m_;
        return j;
    }

    bool operator==(const CoxeterMatrix& o) const {
        return rank_ == o.rank_ && m_ == o.m_;
    }

private:
    void validate() const {
        if (rank_ <= 0) throw std::invalid_argument("Coxeter matrix rank must be positive");
        if (static_cast<int>(m_.size()) != rank_)
            throw std::invalid_argument("Coxeter matrix has wrong number of rows");
        for (int i = 0; i < rank_; ++i) {
            if (static_cast<int>(m_[i].size()) != rank_)
                throw std::invalid_argument("Coxeter matrix is not square");
            if (m_[i][i] != 1)
                throw std::invalid_argument("Coxeter matrix diagonal entries must be 1");
            for (int j = 0; j < rank_; ++j) {
                if (m_[i][j] != m_[j][i])
                    throw std::invalid_argument("Coxeter matrix must be symmetric");
                if (i != j && m_[i][j] != kInfinity && m_[i][j] < 2)
                    throw std::invalid_argument("off-diagonal orders must be >= 2 or 0 (= infinity)");
            }
        }
    }

    int rank_;
    std::vector<std::vector<int>> m_;
};

namespace detail {

inline std::vector<std::vector<int>> all_twos(int rank) {
    std::vector<std::vector<int>> m(rank, std::vector<int>(rank, 2));
    for (int i = 0; i < rank; ++i) m[i][i] = 1;
    return m;
}

}  // namespace detail

inline CoxeterMatrix CoxeterMatrix::from_type(const std::string& label) {
    if (label.size() < 2) throw std::invalid_argument("unknown type label: " + label);
    const char family = label[0];
    int n = 0;
    try {
        n = std::stoi(label.substr(1));
    } catch (const std::exception&) {
        throw std::invalid_argument("unknown type label: " + label);
    }
    auto chain = [](int rank) {
        auto m = detail::all_twos(rank);
        for (int i = 0; i + 1 < rank; ++i) m[i][i + 1] = m[i + 1][i] = 3;
        return m;
    };
    switch (family) {
        case 'A': case 'a': {
            if (n < 1 || n > 7) throw std::invalid_argument("type A supports ranks 1..7");
            return CoxeterMatrix(n, chain(n));
        }
        case 'B': case 'b': {
            // Generator 1 is the sign change t_{1,-1}; generator k (k >= 2) is t_{k-1,k}.
            if (n < 2 || n > 4) throw std::invalid_argument("type B supports ranks 2..4");
            auto m = chain(n);
            m[0][1] = m[1][0] = 4;
            return CoxeterMatrix(n, m);
        }
        case 'D': case 'd': {
            if (n != 4) throw std::invalid_argument("only D4 is supported");
            auto m = detail::all_twos(4);
            // Node 3 is the branch point.
            m[0][2] = m[2][0] = 3;
            m[1][2] = m[2][1] = 3;
            m[3][2] = m[2][3] = 3;
            return CoxeterMatrix(4, m);
        }
        case 'F': case 'f': {
            if (n != 4) throw std::invalid_argument("only F4 is supported");
            auto m = chain(4);
            m[1][2] = m[2][1] = 4;
            return CoxeterMatrix(4, m);
        }
        case 'G': case 'g': {
            if (n != 2) throw std::invalid_argument("only G2 is supported");
            auto m = detail::all_twos(2);
            m[0][1] = m[1][0] = 6;
            return CoxeterMatrix(2, m);
        }
        case 'H': case 'h': {
            if (n != 3) throw std::invalid_argument("only H3 is supported");
            auto m = chain(3);
            m[0][1] = m[1][0] = 5;
            return CoxeterMatrix(3, m);
        }
        default:
            throw std::invalid_argument("unknown type label: " + label);
    }
}

inline CoxeterMatrix CoxeterMatrix::from_json(const nlohmann::json& j) {
    if (!j.contains("rank") || !j.contains("m"))
        throw std::invalid_argument("matrix JSON needs \"rank\" and \"m\"");
    int rank = j.at("rank").get<int>();
    auto m = j.at("m").get<std::vector<std::vector<int>>>();
    return CoxeterMatrix(rank, std::move(m));
}

inline CoxeterMatrix CoxeterMatrix::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    nlohmann::json j;
    in >> j;
    return from_json(j);
}

}  // namespace coxhull
