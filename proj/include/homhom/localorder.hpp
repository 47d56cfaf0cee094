#ifndef HOMHOM_LOCALORDER_HPP
#define HOMHOM_LOCALORDER_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "homhom/digraph.hpp"

namespace homhom {

// Exact rational arithmetic for the circle model; angles in degrees.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d = 1);

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b);
};

// reduce into [0, 360)
Rational mod360(const Rational& x);

// Letters of the extended alphabet {0,1} x {1,2}, ordered letter-major.
struct SigmaLetter {
    int letter = 0; // 0 or 1
    int mult = 1;   // 1 or 2

    friend bool operator==(const SigmaLetter& a, const SigmaLetter& b) {
        return a.letter == b.letter && a.mult == b.mult;
    }
    friend bool operator<(const SigmaLetter& a, const SigmaLetter& b) {
        return a.letter != b.letter ? a.letter < b.letter : a.mult < b.mult;
    }
};

using SigmaWord = std::vector<SigmaLetter>;

// Tournament of a word over {0,1}: vertex i per letter position (0-based),
// and for i < j an arc i -> j when w[i] == w[j], else j -> i. Certified
// against the geometric construction below.
OrientedGraph word_to_tournament(const std::string& w);

// Geometric oracle: base points at strictly increasing angles inside the open
// quarter-arc below 90 degrees, letter-1 points shifted by 180 plus eps
// (signed, nonzero, default one thousandth of a degree), arcs read with the
// counter-clockwise-angle rule in exact arithmetic.
OrientedGraph word_to_tournament_geometric(const std::string& w,
                                           const Rational& eps = Rational(1, 1000));

// Lexicographically least word (0 < 1) of length t.order() whose tournament is
// isomorphic to t; nullopt when t is not a local order.
std::optional<std::string> tournament_to_word(const OrientedGraph& t);

// Every in- and out-neighbourhood induces a transitive subtournament.
bool is_local_order(const OrientedGraph& t);

// Equivalent characterization: neither D nor D* occurs.
bool is_local_order_by_forbidden(const OrientedGraph& t);

// Blow-up of the letter tournament by the per-position multiplicities.
OrientedGraph sigma_word_to_graph(const SigmaWord& w);

struct NotEncodable {
    std::string reason;
};

// Lexicographically least sigma-word whose graph is isomorphic to g. Requires
// the non-arc quotient to exist, be a local order, and have classes of size
// at most 2.
std::variant<SigmaWord, NotEncodable> graph_to_sigma_word(const OrientedGraph& g);

// CLI text forms: "0101" for words, "1:1 0:1 1:2 1:1" for sigma-words.
std::string to_string(const SigmaWord& w);
SigmaWord parse_sigma_word(const std::string& text);

} // namespace homhom

#endif
