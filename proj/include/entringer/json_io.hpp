#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "entringer/bintree.hpp"
#include "entringer/grword.hpp"
#include "entringer/lrcode.hpp"
#include "entringer/permutation.hpp"
#include "entringer/uword.hpp"

namespace entringer::io {

using json = nlohmann::ordered_json;

/// Raised when an input object cannot be turned into the domain value a
/// command expects (CLI exit code 3).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// -- permutations: [7,4,8,...] ----------------------------------------------

inline json to_json(const perm::Permutation& p) { return json(p.word()); }

inline perm::Permutation permutation_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected a JSON array of integers");
    std::vector<int> word;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError("expected a JSON array of integers");
        word.push_back(v.get<int>());
    }
    try {
        return perm::Permutation(std::move(word));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

inline std::string to_text(const perm::Permutation& p) {
    std::string out;
    for (std::size_t i = 0; i < p.word().size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(p.word()[i]);
    }
    return out;
}

// -- encoding sequences: [[j,i,s],...] with s in {0,1} ------------------------

inline json to_json(const lrcode::EncodingSequence& seq) {
    json arr = json::array();
    for (const auto& d : seq.entries) arr.push_back({d.j, d.i, d.starred ? 1 : 0});
    return arr;
}

inline lrcode::EncodingSequence sequence_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("expected a non-empty array of [j,i,s]");
    lrcode::EncodingSequence seq;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3) throw ParseError("expected [j,i,s] triples");
        lrcode::Domino d{t[0].get<int>(), t[1].get<int>(), t[2].get<int>() != 0};
        seq.entries.push_back(d);
        seq.n = std::max({seq.n, d.i, d.j});
    }
    if (lrcode::ValidationResult v = lrcode::validate(seq); !v)
        throw ParseError(std::string("invalid encoding sequence, clause ") +
                         lrcode::clause_name(v.clause) + ": " + v.message);
    return seq;
}

// -- trees: [[child,parent],...] sorted by child, root omitted ---------------

inline json to_json(const bintree::IncreasingBinaryTree& t) {
    json arr = json::array();
    for (auto [c, p] : t.edges()) arr.push_back({c, p});
    return arr;
}

inline bintree::IncreasingBinaryTree tree_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected an array of [child,parent] pairs");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) throw ParseError("expected [child,parent] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        // [] denotes the one-vertex tree on {1}
        return bintree::IncreasingBinaryTree::from_edges(edges, edges.empty()
                                                                    ? std::optional<int>(1)
                                                                    : std::nullopt);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

inline std::string to_text(const bintree::IncreasingBinaryTree& t) {
    if (t.size() == 1) return "(" + std::to_string(t.root()) + ")";
    std::string out;
    for (auto [c, p] : t.edges()) {
        if (!out.empty()) out += ' ';
        out += "(" + std::to_string(c) + "," + std::to_string(p) + ")";
    }
    return out;
}

// -- U-words and G/R-words: integer arrays -----------------------------------

inline json to_json(const uword::UWord& w) { return json(w.u); }

inline uword::UWord uword_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected a JSON array of integers");
    uword::UWord w{j.get<std::vector<int>>()};
    if (!uword::is_valid(w)) throw ParseError("not a valid U-word");
    return w;
}

inline json to_json(const grword::GRWord& w) { return json(w.word.word()); }

inline grword::GRWord grword_from_json(const json& j, grword::Kind kind) {
    grword::GRWord w{permutation_from_json(j), kind};
    if (!grword::satisfies_kind(w.word, kind)) throw ParseError("word fails the G/R conditions");
    return w;
}

inline std::string to_text(const uword::UWord& w) {
    std::string out;
    for (std::size_t i = 0; i < w.u.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(w.u[i]);
    }
    return out;
}

}  // namespace entringer::io
