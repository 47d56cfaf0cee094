#include "homhom/localorder.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "homhom/configurations.hpp"
#include "homhom/embedding.hpp"

namespace homhom {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) fail(Errc::bad_argument, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
}

bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
}

Rational mod360(const Rational& x) {
    long long whole = x.num / x.den; // toward zero
    long long turns = whole / 360;
    Rational r = x - Rational(turns * 360);
    if (r.num < 0) r = r + Rational(360);
    if (!(r < Rational(360))) r = r - Rational(360);
    return r;
}

namespace {

void validate_word(const std::string& w) {
    if (w.empty()) fail(Errc::parse_error, "word must be nonempty");
    for (char c : w)
        if (c != '0' && c != '1') fail(Errc::parse_error, "word letters must be 0 or 1");
}

} // namespace

OrientedGraph word_to_tournament(const std::string& w) {
    validate_word(w);
    int n = (int)w.size();
    OrientedGraph t(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (w[i] == w[j])
                t.add_arc(i, j);
            else
                t.add_arc(j, i);
        }
    return t;
}

OrientedGraph word_to_tournament_geometric(const std::string& w, const Rational& eps) {
    validate_word(w);
    if (eps.num == 0) fail(Errc::degenerate_placement, "epsilon must be nonzero");
    int n = (int)w.size();
    std::vector<Rational> angle(n);
    for (int i = 0; i < n; ++i) {
        Rational base(90LL * (i + 1), n + 1); // strictly increasing in (0, 90)
        angle[i] = w[i] == '1' ? mod360(base + Rational(180) + eps) : base;
    }
    Rational half(180);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rational d = mod360(angle[j] - angle[i]);
            if (d.num == 0 || d == half)
                fail(Errc::degenerate_placement, "coincident or antipodal points");
        }
    OrientedGraph t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Rational d = mod360(angle[j] - angle[i]);
            if (Rational(0) < d && d < half) t.add_arc(i, j);
        }
    return t;
}

std::optional<std::string> tournament_to_word(const OrientedGraph& t) {
    if (!is_tournament(t)) fail(Errc::not_a_tournament, "decoding needs a tournament");
    int n = t.order();
    if (n > 16) fail(Errc::size_cap_exceeded, "word decoding capped at order 16");
    std::string w(n, '0');
    for (long long code = 0; code < (1LL << n); ++code) {
        for (int i = 0; i < n; ++i) w[i] = (code >> (n - 1 - i)) & 1 ? '1' : '0';
        OrientedGraph cand = word_to_tournament(w);
        if (cand.arc_count() == t.arc_count() && contains_configuration(t, cand)) return w;
    }
    return std::nullopt;
}

bool is_local_order(const OrientedGraph& t) {
    if (!is_tournament(t)) fail(Errc::not_a_tournament, "local order test needs a tournament");
    for (Vertex v = 0; v < t.order(); ++v) {
        for (const VertexSet* side : {&t.out(v), &t.in(v)}) {
            std::vector<Vertex> s = side->to_vector();
            if (s.size() < 3) continue;
            if (!is_transitive_relation(induced_subgraph(t, s))) return false;
        }
    }
    return true;
}

bool is_local_order_by_forbidden(const OrientedGraph& t) {
    if (!is_tournament(t)) fail(Errc::not_a_tournament, "local order test needs a tournament");
    return !contains_configuration(t, get_config(ConfigName::D)) &&
           !contains_configuration(t, get_config(ConfigName::Dstar));
}

namespace {

void validate_sigma(const SigmaWord& w) {
    if (w.empty()) fail(Errc::parse_error, "sigma-word must be nonempty");
    for (const auto& l : w) {
        if (l.letter != 0 && l.letter != 1) fail(Errc::parse_error, "sigma letter must be 0 or 1");
        if (l.mult != 1 && l.mult != 2) fail(Errc::parse_error, "sigma multiplicity must be 1 or 2");
    }
}

} // namespace

OrientedGraph sigma_word_to_graph(const SigmaWord& w) {
    validate_sigma(w);
    std::string letters;
    Multiplicity m;
    for (const auto& l : w) {
        letters += char('0' + l.letter);
        m.push_back(l.mult);
    }
    return blowup(word_to_tournament(letters), m);
}

std::variant<SigmaWord, NotEncodable> graph_to_sigma_word(const OrientedGraph& g) {
    auto q = quotient_by_nonarc(g);
    if (std::holds_alternative<NotReducible>(q)) {
        const auto& why = std::get<NotReducible>(q).why;
        if (std::holds_alternative<NonarcViolation>(why))
            return NotEncodable{"non-arc relation is not an equivalence"};
        return NotEncodable{"arcs between two non-arc classes are not uniformly oriented"};
    }
    const Quotient& quo = std::get<Quotient>(q);
    for (int s : quo.class_sizes)
        if (s > 2) return NotEncodable{"a non-arc class has more than 2 vertices"};
    if (!is_local_order(quo.tournament)) return NotEncodable{"quotient is not a local order"};

    int k = quo.tournament.order();
    // all sigma-words of length k in lexicographic order; alphabet ordered
    // (0,1) < (0,2) < (1,1) < (1,2)
    static const SigmaLetter alphabet[4] = {{0, 1}, {0, 2}, {1, 1}, {1, 2}};
    SigmaWord w(k);
    std::vector<int> digit(k, 0);
    while (true) {
        int total = 0;
        for (int i = 0; i < k; ++i) {
            w[i] = alphabet[digit[i]];
            total += w[i].mult;
        }
        if (total == g.order()) {
            OrientedGraph cand = sigma_word_to_graph(w);
            if (cand.arc_count() == g.arc_count() && contains_configuration(g, cand)) return w;
        }
        int i = k - 1;
        while (i >= 0 && digit[i] == 3) digit[i--] = 0;
        if (i < 0) break;
        ++digit[i];
    }
    return NotEncodable{"no sigma-word of quotient length encodes the graph"};
}

std::string to_string(const SigmaWord& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(w[i].letter) + ":" + std::to_string(w[i].mult);
    }
    return s;
}

SigmaWord parse_sigma_word(const std::string& text) {
    SigmaWord w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        size_t colon = tok.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 >= tok.size())
            fail(Errc::parse_error, "sigma letter must look like a:m");
        int a, m;
        try {
            a = std::stoi(tok.substr(0, colon));
            m = std::stoi(tok.substr(colon + 1));
        } catch (const std::exception&) {
            fail(Errc::parse_error, "sigma letter must look like a:m");
        }
        w.push_back(SigmaLetter{a, m});
    }
    validate_sigma(w);
    return w;
}

} // namespace homhom
