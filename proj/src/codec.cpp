#include "rookmaze/codec.hpp"

#include <algorithm>

namespace rookmaze {

namespace {

Json cell_json(Cell c) { return Json::array({c.row, c.col}); }

const Json& field(const Json& j, const char* name, const std::string& where) {
    if (!j.is_object()) throw DomainError("parse error at " + where + ": expected object");
    auto it = j.find(name);
    if (it == j.end()) throw DomainError("parse error at " + where + ": missing field '" + name + "'");
    return *it;
}

int int_field(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) throw DomainError("parse error at " + where + ": expected integer");
    return j.get<int>();
}

Cell cell_from(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) throw DomainError("parse error at " + where + ": expected [row, col]");
    return {int_field(j[0], where + "[0]"), int_field(j[1], where + "[1]")};
}

template <class F>
auto rethrow_as_domain(F&& f) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("parse error: ") + e.what());
    }
}

}  // namespace

Json to_json(const Maze& m) {
    Json walls = Json::array();
    for (const Wall& w : m.walls()) {
        Json path = Json::array();
        if (w.kind == WallKind::IV)
            for (auto it = w.path.rbegin(); it != w.path.rend(); ++it) path.push_back(cell_json(*it));
        else
            for (Cell c : w.path) path.push_back(cell_json(c));
        Json wj;
        wj["kind"] = to_string(w.kind);
        wj["path"] = std::move(path);
        walls.push_back(std::move(wj));
    }
    Json j;
    j["m"] = m.m();
    j["n"] = m.n();
    j["walls"] = std::move(walls);
    return j;
}

Json to_json(const RookPlacement& r) {
    Json rooks = Json::array();
    for (Cell c : r.rooks()) rooks.push_back(cell_json(c));
    Json j;
    j["m"] = r.m();
    j["n"] = r.n();
    j["rooks"] = std::move(rooks);
    return j;
}

Json to_json(const ColoredPermutation& c) {
    Json j;
    j["n"] = c.size();
    j["w"] = c.w();
    j["blue"] = Json::array();
    for (int b : c.blue()) j["blue"].push_back(b);
    return j;
}

Maze maze_from_json(const Json& j) {
    int m = int_field(field(j, "m", "maze"), "m");
    int n = int_field(field(j, "n", "maze"), "n");
    const Json& wj = field(j, "walls", "maze");
    if (!wj.is_array()) throw DomainError("parse error at walls: expected array");
    std::vector<Wall> walls;
    for (std::size_t i = 0; i < wj.size(); ++i) {
        std::string where = "walls[" + std::to_string(i) + "]";
        const Json& kj = field(wj[i], "kind", where);
        if (!kj.is_string()) throw DomainError("parse error at " + where + ".kind: expected string");
        Wall w{WallKind::I, {}};
        try {
            w.kind = wall_kind_from_string(kj.get<std::string>());
        } catch (const DomainError& e) {
            throw DomainError("parse error at " + where + ".kind: " + e.what());
        }
        const Json& pj = field(wj[i], "path", where);
        if (!pj.is_array() || pj.empty()) throw DomainError("parse error at " + where + ".path: expected non-empty array");
        for (std::size_t k = 0; k < pj.size(); ++k)
            w.path.push_back(cell_from(pj[k], where + ".path[" + std::to_string(k) + "]"));
        if (w.kind == WallKind::IV) std::reverse(w.path.begin(), w.path.end());
        walls.push_back(std::move(w));
    }
    return Maze(m, n, std::move(walls));
}

RookPlacement rooks_from_json(const Json& j) {
    int m = int_field(field(j, "m", "placement"), "m");
    int n = int_field(field(j, "n", "placement"), "n");
    const Json& rj = field(j, "rooks", "placement");
    if (!rj.is_array()) throw DomainError("parse error at rooks: expected array");
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < rj.size(); ++i) cells.push_back(cell_from(rj[i], "rooks[" + std::to_string(i) + "]"));
    return RookPlacement(m, n, std::move(cells));
}

ColoredPermutation cperm_from_json(const Json& j) {
    int n = int_field(field(j, "n", "colored permutation"), "n");
    const Json& wj = field(j, "w", "colored permutation");
    const Json& bj = field(j, "blue", "colored permutation");
    if (!wj.is_array() || static_cast<int>(wj.size()) != n) throw DomainError("parse error at w: expected array of length n");
    if (!bj.is_array()) throw DomainError("parse error at blue: expected array");
    std::vector<int> w;
    for (std::size_t i = 0; i < wj.size(); ++i) w.push_back(int_field(wj[i], "w[" + std::to_string(i) + "]"));
    std::set<int> blue;
    for (std::size_t i = 0; i < bj.size(); ++i) blue.insert(int_field(bj[i], "blue[" + std::to_string(i) + "]"));
    return ColoredPermutation(std::move(w), std::move(blue));
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError("parse error at byte " + std::to_string(e.byte) + ": invalid JSON");
    }
}

std::string encode(const Maze& m) { return to_json(m).dump(); }
std::string encode(const RookPlacement& r) { return to_json(r).dump(); }
std::string encode(const ColoredPermutation& c) { return to_json(c).dump(); }

Maze decode_maze(const std::string& text) {
    return rethrow_as_domain([&] { return maze_from_json(parse_json(text)); });
}
RookPlacement decode_rooks(const std::string& text) {
    return rethrow_as_domain([&] { return rooks_from_json(parse_json(text)); });
}
ColoredPermutation decode_cperm(const std::string& text) {
    return rethrow_as_domain([&] { return cperm_from_json(parse_json(text)); });
}

}  // namespace rookmaze
