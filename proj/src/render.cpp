#include "viracomb/render.hpp"

#include "viracomb/particles.hpp"

#include <sstream>

namespace viracomb {

namespace {

// Rows run top to bottom: vertex row for level y is 2*(top-y), the edge row
// between y and y+1 sits just above it.
struct Grid {
    int top, bottom, cols;
    std::vector<std::string> rows;

    Grid(int top_, int bottom_, int points)
        : top(top_), bottom(bottom_), cols(2 * points - 1),
          rows(2 * (top_ - bottom_) + 1, std::string(2 * points - 1, ' ')) {}

    char& vertex(int i, int y) { return rows[2 * (top - y)][2 * i]; }
    char& edge(int i, int lo) { return rows[2 * (top - lo) - 1][2 * i + 1]; }

    void path(const std::vector<int>& H) {
        for (size_t i = 0; i + 1 < H.size(); ++i) {
            int lo = std::min(H[i], H[i + 1]);
            edge(static_cast<int>(i), lo) = H[i + 1] > H[i] ? '/' : '\\';
        }
    }

    std::string str(bool labels) const {
        std::ostringstream os;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (labels) {
                if (r % 2 == 0) {
                    int y = top - static_cast<int>(r) / 2;
                    os << (y < 10 ? " " : "") << y << ' ';
                } else {
                    os << "   ";
                }
            }
            std::string line = rows[r];
            while (!line.empty() && line.back() == ' ') line.pop_back();
            os << line << '\n';
        }
        return os.str();
    }
};

std::string svg_open(int width, int height) {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
       << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
       << "\" fill=\"white\"/>\n";
    return os.str();
}

}  // namespace

std::string render_ascii(const RsosPath& path) {
    const int n = path.L() + 3;
    std::vector<int> H(n);
    for (int x = 0; x < n; ++x) H[x] = height(path, x);
    Grid g(path.pp - 1, 1, n);
    for (int y = 1; y <= path.pp - 2; ++y) {
        if (!band_is_dark(path.p, path.pp, y)) continue;
        for (int i = 0; i < n - 1; ++i) g.edge(i, y) = ':';
        for (int i = 1; i < n - 1; ++i) g.rows[2 * (g.top - y) - 1][2 * i] = ':';
    }
    g.path(H);
    for (int x = 0; x < n; ++x) g.vertex(x, H[x]) = 'o';
    for (const Vertex& v : classify(path)) {
        if (v.score != Score::None) g.vertex(v.x, v.h) = '*';
    }
    return g.str(true);
}

std::string render_ascii(const HalfPath& path, bool baselines) {
    const int n = path.L2() + 3;
    std::vector<int> H(n);
    for (int i = 0; i < n; ++i) H[i] = height(path, i);
    Grid g(path.T, 2, n);
    if (baselines && path.A == 2 && path.B == 2) {
        for (const Particle& pt : dissect(path).particles) {
            for (int c = 2 * pt.origin; c <= 2 * pt.right && c < g.cols; ++c) {
                char& cell = g.rows[2 * (g.top - pt.base)][c];
                if (cell == ' ') cell = '-';
            }
        }
    }
    g.path(H);
    for (int i = 0; i < n; ++i) g.vertex(i, H[i]) = is_straight(path, i) && i <= path.L2() ? '*' : 'o';
    return g.str(true);
}

std::string render_svg(const RsosPath& path) {
    const int unit = 20;
    const int n = path.L() + 3;
    const int width = unit * (n + 1);
    const int hgt = unit * (path.pp + 1);
    auto X = [&](int x) { return unit * (x + 1); };
    auto Y = [&](int y) { return unit * (path.pp - y); };
    std::ostringstream os;
    os << svg_open(width, hgt);
    for (int y = 1; y <= path.pp - 2; ++y) {
        if (band_is_dark(path.p, path.pp, y))
            os << "<rect x=\"" << X(0) << "\" y=\"" << Y(y + 1) << "\" width=\"" << X(n - 1) - X(0)
               << "\" height=\"" << unit << "\" fill=\"#cccccc\"/>\n";
    }
    for (int y = 1; y <= path.pp - 1; ++y)
        os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(y) << "\" x2=\"" << X(n - 1) << "\" y2=\""
           << Y(y) << "\" stroke=\"#999999\" stroke-width=\"0.5\"/>\n";
    os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    for (int x = 0; x < n; ++x) os << (x ? " " : "") << X(x) << ',' << Y(height(path, x));
    os << "\"/>\n";
    for (const Vertex& v : classify(path)) {
        if (v.score == Score::None) continue;
        os << "<circle cx=\"" << X(v.x) << "\" cy=\"" << Y(v.h) << "\" r=\"4\" fill=\""
           << (v.score == Score::Up ? "black" : "white") << "\" stroke=\"black\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_svg(const HalfPath& path, bool baselines) {
    const int unit = 12;
    const int n = path.L2() + 3;
    const int width = unit * (n + 1);
    const int hgt = unit * (path.T + 1);
    auto X = [&](int i) { return unit * (i + 1); };
    auto Y = [&](int h) { return unit * (path.T + 1 - h); };
    std::ostringstream os;
    os << svg_open(width, hgt);
    for (int h = 2; h <= path.T; h += 2)
        os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(h) << "\" x2=\"" << X(n - 1) << "\" y2=\""
           << Y(h) << "\" stroke=\"#999999\" stroke-width=\"0.5\"/>\n";
    if (baselines && path.A == 2 && path.B == 2) {
        for (const Particle& pt : dissect(path).particles)
            os << "<line x1=\"" << X(pt.origin) << "\" y1=\"" << Y(pt.base) << "\" x2=\""
               << X(std::min(pt.right, n - 1)) << "\" y2=\"" << Y(pt.base)
               << "\" stroke=\"#3366cc\" stroke-width=\"1.5\"/>\n";
    }
    os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    for (int i = 0; i < n; ++i) os << (i ? " " : "") << X(i) << ',' << Y(height(path, i));
    os << "\"/>\n";
    for (int i = 0; i <= path.L2(); ++i) {
        if (is_straight(path, i))
            os << "<circle cx=\"" << X(i) << "\" cy=\"" << Y(height(path, i))
               << "\" r=\"3\" fill=\"black\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace viracomb
