#include "homhom/configurations.hpp"

namespace homhom {

OrientedGraph get_config(ConfigName name) {
    switch (name) {
        case ConfigName::P2:
            return new_graph(3, {{0, 1}, {1, 2}});
        case ConfigName::L1:
            return new_graph(3, {{0, 2}, {1, 2}});
        case ConfigName::L2:
            return new_graph(3, {{2, 0}, {2, 1}});
        case ConfigName::A:
            return new_graph(4, {{3, 2}, {2, 1}, {1, 3}, {2, 0}, {0, 3}});
        case ConfigName::B:
            return new_graph(3, {{0, 1}});
        case ConfigName::C1:
            return new_graph(4, {{0, 1}, {0, 2}, {3, 2}});
        case ConfigName::C2:
            return new_graph(4, {{0, 1}, {0, 2}, {3, 2}, {1, 2}});
        case ConfigName::K:
            return new_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 1}, {0, 2}});
        case ConfigName::D:
            return new_graph(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {3, 2}});
        case ConfigName::Dstar:
            return new_graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}});
        case ConfigName::X4:
            return new_graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
        case ConfigName::X5:
            return new_graph(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}, {1, 4}, {4, 2}, {4, 3}});
    }
    fail(Errc::bad_argument, "unknown configuration");
}

std::optional<ConfigName> config_from_string(const std::string& name) {
    if (name == "P2") return ConfigName::P2;
    if (name == "L1") return ConfigName::L1;
    if (name == "L2") return ConfigName::L2;
    if (name == "A") return ConfigName::A;
    if (name == "B") return ConfigName::B;
    if (name == "C1") return ConfigName::C1;
    if (name == "C2") return ConfigName::C2;
    if (name == "K") return ConfigName::K;
    if (name == "D") return ConfigName::D;
    if (name == "Dstar") return ConfigName::Dstar;
    if (name == "X4") return ConfigName::X4;
    if (name == "X5") return ConfigName::X5;
    return std::nullopt;
}

const char* to_string(ConfigName name) {
    switch (name) {
        case ConfigName::P2: return "P2";
        case ConfigName::L1: return "L1";
        case ConfigName::L2: return "L2";
        case ConfigName::A: return "A";
        case ConfigName::B: return "B";
        case ConfigName::C1: return "C1";
        case ConfigName::C2: return "C2";
        case ConfigName::K: return "K";
        case ConfigName::D: return "D";
        case ConfigName::Dstar: return "Dstar";
        case ConfigName::X4: return "X4";
        case ConfigName::X5: return "X5";
    }
    return "?";
}

OrientedGraph transitive_tournament(int n) {
    if (n < 1) fail(Errc::bad_argument, "L_n needs n >= 1");
    OrientedGraph g(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) g.add_arc(i, j);
    return g;
}

OrientedGraph cycle_c3() { return new_graph(3, {{0, 1}, {1, 2}, {2, 0}}); }

OrientedGraph circular_tournament(int m) {
    if (m < 1) fail(Errc::bad_argument, "circular tournament needs m >= 1");
    int n = 2 * m + 1;
    OrientedGraph g(n);
    for (Vertex i = 0; i < n; ++i)
        for (int d = 1; d <= m; ++d) g.add_arc(i, (i + d) % n);
    return g;
}

OrientedGraph henson_A(int n) {
    if (n < 1) fail(Errc::bad_argument, "henson_A needs n >= 1");
    int order = n + 3;
    OrientedGraph g(order);
    for (Vertex a = 0; a < order; ++a)
        for (Vertex b = 0; b < order; ++b)
            if (a != b && (b == a + 1 || b + 1 < a)) g.add_arc(a, b);
    return g;
}

OrientedGraph henson_B(int n) {
    OrientedGraph a = henson_A(n);
    int alpha = n + 3;
    OrientedGraph g(alpha + 1);
    for (const auto& [u, v] : a.arcs()) g.add_arc(u, v);
    g.add_arc(alpha, 0);
    g.add_arc(alpha, n + 2);
    for (Vertex b = 1; b < n + 2; ++b) g.add_arc(b, alpha);
    return g;
}

} // namespace homhom
