#include "viracomb/textio.hpp"

#include "viracomb/errors.hpp"

#include <map>
#include <sstream>

namespace viracomb {

static std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

std::string format_path(const RsosPath& path) {
    std::ostringstream os;
    os << "rsos p=" << path.p << " pp=" << path.pp << " a=" << path.a << " b=" << path.b
       << " h=" << join(path.h);
    return os.str();
}

std::string format_path(const HalfPath& path) {
    std::ostringstream os;
    os << "half T=" << path.T << " A=" << path.A << " B=" << path.B << " H=" << join(path.H);
    return os.str();
}

static int to_int(const std::string& s) {
    size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw InvalidArgument("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw InvalidArgument("not an integer: '" + s + "'");
    return v;
}

static std::vector<int> to_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(to_int(item));
    if (out.empty()) throw InvalidArgument("empty height list");
    return out;
}

static std::map<std::string, std::string> fields(std::istringstream& is,
                                                 const std::vector<std::string>& keys) {
    std::map<std::string, std::string> kv;
    std::string tok;
    while (is >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw InvalidArgument("expected key=value, got '" + tok + "'");
        std::string k = tok.substr(0, eq);
        if (kv.count(k)) throw InvalidArgument("duplicate key '" + k + "'");
        kv[k] = tok.substr(eq + 1);
    }
    for (const auto& k : keys) {
        if (!kv.count(k)) throw InvalidArgument("missing key '" + k + "'");
    }
    if (kv.size() != keys.size()) throw InvalidArgument("unexpected key in path line");
    return kv;
}

AnyPath parse_path(const std::string& line) {
    std::istringstream is(line);
    std::string kind;
    if (!(is >> kind)) throw InvalidArgument("empty path line");
    if (kind == "rsos") {
        auto kv = fields(is, {"p", "pp", "a", "b", "h"});
        return make_rsos(to_int(kv["p"]), to_int(kv["pp"]), to_int(kv["a"]), to_int(kv["b"]),
                         to_list(kv["h"]));
    }
    if (kind == "half") {
        auto kv = fields(is, {"T", "A", "B", "H"});
        HalfPath hp = make_half(to_int(kv["T"]), to_int(kv["A"]), to_int(kv["B"]), to_list(kv["H"]));
        if (auto v = validate(hp))
            throw InvalidArgument("invalid half-lattice path at index " + std::to_string(v->index) +
                                  ": " + v->what);
        return hp;
    }
    throw InvalidArgument("unknown path kind '" + kind + "'");
}

RsosPath parse_rsos(const std::string& line) {
    auto p = parse_path(line);
    if (!std::holds_alternative<RsosPath>(p)) throw InvalidArgument("expected an rsos path");
    return std::get<RsosPath>(p);
}

HalfPath parse_half(const std::string& line) {
    auto p = parse_path(line);
    if (!std::holds_alternative<HalfPath>(p)) throw InvalidArgument("expected a half path");
    return std::get<HalfPath>(p);
}

}  // namespace viracomb
