#include "tropdisc/json_io.hpp"

#include "tropdisc/errors.hpp"
#include "tropdisc/linalg.hpp"

#include <fstream>
#include <sstream>
#include <utility>

namespace tropdisc {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) {
    throw Error(Errc::invalid_input, what);
}

Int int_from_string(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        bad("not an integer: '" + s + "'");
    }
}

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        bad(std::string("missing field '") + name + "'");
    return j.at(name);
}

IntVec int_vector_from_json(const json& j) {
    if (!j.is_array()) bad("expected an array of integers");
    IntVec out;
    out.reserve(j.size());
    for (const json& e : j) out.push_back(int_from_json(e));
    return out;
}

OrderedJson int_vector_to_json(const IntVec& v) {
    OrderedJson out = OrderedJson::array();
    for (const Int& x : v) out.push_back(int_to_json(x));
    return out;
}

OrderedJson rat_vector_to_json(const RatVec& v) {
    OrderedJson out = OrderedJson::array();
    for (const Rat& x : v) out.push_back(rat_to_json(x));
    return out;
}

OrderedJson labels_to_json(const std::vector<int>& labels) {
    OrderedJson out = OrderedJson::array();
    for (int l : labels) out.push_back(l + 1); // 1-based on the wire
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) bad("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json parse_json(const std::string& text, const std::string& path) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) bad("malformed JSON in '" + path + "'");
    return j;
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '{';
    }
    return false;
}

} // namespace

// ---- scalars ----------------------------------------------------------------

OrderedJson int_to_json(const Int& v) {
    if (v.fits_slong_p()) return OrderedJson(v.get_si());
    return OrderedJson(v.get_str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return int_from_string(j.get<std::string>());
    bad("expected an integer (number or decimal string)");
}

OrderedJson rat_to_json(const Rat& v) {
    if (v.get_den() == 1) return int_to_json(v.get_num());
    return OrderedJson(v.get_str());
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        try {
            Rat r(j.get<std::string>());
            r.canonicalize();
            return r;
        } catch (const std::invalid_argument&) {
            bad("not a rational: '" + j.get<std::string>() + "'");
        }
    }
    bad("expected a rational (number, 'p', or 'p/q')");
}

// ---- matrices ---------------------------------------------------------------

IntMatrix matrix_from_text(std::istream& in) {
    long d = 0, n = 0;
    if (!(in >> d >> n)) bad("matrix header must be 'd n'");
    if (d <= 0 || n <= 0) bad("matrix dimensions must be positive");
    std::vector<IntVec> rows(static_cast<std::size_t>(d));
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < n; ++j) {
            std::string token;
            if (!(in >> token)) bad("matrix body ended early");
            rows[static_cast<std::size_t>(i)].push_back(int_from_string(token));
        }
    std::string trailing;
    if (in >> trailing) bad("trailing content after matrix body");
    return IntMatrix(std::move(rows));
}

std::string matrix_to_text(const IntMatrix& a) {
    std::ostringstream out;
    out << a.rows() << ' ' << a.cols() << '\n';
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            if (j) out << ' ';
            out << a.at(i, j).get_str();
        }
        out << '\n';
    }
    return out.str();
}

IntMatrix matrix_from_json(const json& j) {
    const long d = int_from_json(field(j, "d")).get_si();
    const long n = int_from_json(field(j, "n")).get_si();
    const json& rows = field(j, "rows");
    if (!rows.is_array() || static_cast<long>(rows.size()) != d)
        bad("'rows' must hold exactly d rows");
    std::vector<IntVec> data;
    for (const json& row : rows) {
        IntVec r = int_vector_from_json(row);
        if (static_cast<long>(r.size()) != n) bad("row of the wrong length");
        data.push_back(std::move(r));
    }
    return IntMatrix(std::move(data));
}

OrderedJson matrix_to_json(const IntMatrix& a) {
    OrderedJson j;
    j["d"] = a.rows();
    j["n"] = a.cols();
    OrderedJson rows = OrderedJson::array();
    for (int i = 0; i < a.rows(); ++i) {
        IntVec row;
        for (int k = 0; k < a.cols(); ++k) row.push_back(a.at(i, k));
        rows.push_back(int_vector_to_json(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

// ---- Cayley configurations --------------------------------------------------

CayleyConfig cayley_from_json(const json& j) {
    CayleyConfig cfg;
    cfg.r = static_cast<int>(int_from_json(field(j, "r")).get_si());
    if (cfg.r <= 0) bad("'r' must be positive");
    const json& blocks = field(j, "blocks");
    if (!blocks.is_array()) bad("'blocks' must be an array");
    for (const json& block : blocks) {
        if (!block.is_array()) bad("each block must be an array of points");
        std::vector<IntVec> pts;
        for (const json& p : block) pts.push_back(int_vector_from_json(p));
        cfg.blocks.push_back(std::move(pts));
    }
    return cfg;
}

OrderedJson cayley_to_json(const CayleyConfig& cfg) {
    OrderedJson j;
    j["r"] = cfg.r;
    OrderedJson blocks = OrderedJson::array();
    for (const auto& block : cfg.blocks) {
        OrderedJson pts = OrderedJson::array();
        for (const IntVec& p : block) pts.push_back(int_vector_to_json(p));
        blocks.push_back(std::move(pts));
    }
    j["blocks"] = std::move(blocks);
    return j;
}

// ---- weighted fans ----------------------------------------------------------

OrderedJson fan_to_json(const WeightedFan& fan) {
    OrderedJson j;
    j["ambient"] = fan.ambient;
    OrderedJson lineality = OrderedJson::array();
    for (const IntVec& v : fan.lineality) lineality.push_back(int_vector_to_json(v));
    j["lineality"] = std::move(lineality);
    OrderedJson cones = OrderedJson::array();
    for (const WeightedCone& cone : fan.cones) {
        OrderedJson c;
        OrderedJson rays = OrderedJson::array();
        for (const IntVec& r : cone.rays) rays.push_back(int_vector_to_json(r));
        c["rays"] = std::move(rays);
        c["mult"] = int_to_json(cone.mult);
        cones.push_back(std::move(c));
    }
    j["cones"] = std::move(cones);
    return j;
}

WeightedFan fan_from_json(const json& j) {
    WeightedFan fan;
    fan.ambient = static_cast<int>(int_from_json(field(j, "ambient")).get_si());
    if (fan.ambient <= 0) bad("'ambient' must be positive");
    for (const json& v : field(j, "lineality")) {
        IntVec row = int_vector_from_json(v);
        if (static_cast<int>(row.size()) != fan.ambient)
            bad("lineality vector of the wrong length");
        fan.lineality.push_back(std::move(row));
    }
    for (const json& c : field(j, "cones")) {
        WeightedCone cone;
        for (const json& r : field(c, "rays")) {
            IntVec ray = int_vector_from_json(r);
            if (static_cast<int>(ray.size()) != fan.ambient)
                bad("ray of the wrong length");
            cone.rays.push_back(std::move(ray));
        }
        cone.mult = int_from_json(field(c, "mult"));
        if (cone.mult <= 0) bad("cone multiplicity must be positive");
        fan.cones.push_back(std::move(cone));
    }
    // recompute the (purely informational) dimension from the spans
    int pure = 0;
    for (const WeightedCone& cone : fan.cones) {
        std::vector<IntVec> span = fan.lineality;
        span.insert(span.end(), cone.rays.begin(), cone.rays.end());
        if (span.empty()) continue;
        pure = std::max(pure, rank_of(IntMatrix(span)));
    }
    fan.pure_dim = pure;
    return fan;
}

// ---- reports ----------------------------------------------------------------

OrderedJson newton_to_json(const MonomialSet& monomials, const PolytopeSummary& hull,
                           const std::map<IntVec, Int>* coefficients) {
    OrderedJson j;
    j["degree"] = int_to_json(monomials.degree);
    OrderedJson list = OrderedJson::array();
    for (const auto& [exp, witnesses] : monomials.monomials) {
        OrderedJson m;
        m["exp"] = int_vector_to_json(exp);
        m["witness_w"] = witnesses.empty() ? OrderedJson::array()
                                           : int_vector_to_json(witnesses.front());
        list.push_back(std::move(m));
    }
    j["monomials"] = std::move(list);
    j["fvector"] = hull.fvector;
    if (coefficients) {
        OrderedJson coeffs = OrderedJson::array();
        for (const auto& [exp, coeff] : *coefficients) {
            OrderedJson c;
            c["exp"] = int_vector_to_json(exp);
            c["coeff"] = coeff.get_str();
            coeffs.push_back(std::move(c));
        }
        j["coefficients"] = std::move(coeffs);
    }
    return j;
}

OrderedJson subdivision_to_json(const Subdivision& sub) {
    OrderedJson j;
    j["lifting"] = rat_vector_to_json(sub.lifting);
    OrderedJson cells = OrderedJson::array();
    for (const SubdivisionCell& cell : sub.cells) {
        OrderedJson c;
        c["labels"] = labels_to_json(cell.labels);
        c["simplicial"] = cell.simplicial;
        cells.push_back(std::move(c));
    }
    j["cells"] = std::move(cells);
    j["triangulation"] = sub.is_triangulation();
    return j;
}

OrderedJson mixed_cells_to_json(const RatVec& w, const std::vector<MixedCell>& cells) {
    OrderedJson j;
    j["w"] = rat_vector_to_json(w);
    OrderedJson list = OrderedJson::array();
    for (const MixedCell& cell : cells) {
        OrderedJson c;
        std::vector<int> all;
        OrderedJson blocks = OrderedJson::array();
        for (const auto& block : cell.summands) {
            all.insert(all.end(), block.begin(), block.end());
            blocks.push_back(labels_to_json(block));
        }
        std::sort(all.begin(), all.end());
        c["labels"] = labels_to_json(all);
        c["blocks"] = std::move(blocks);
        c["volume"] = int_to_json(cell.volume);
        c["mixed"] = cell.mixed;
        c["fully_mixed"] = cell.fully_mixed;
        list.push_back(std::move(c));
    }
    j["cells"] = std::move(list);
    return j;
}

OrderedJson delta_classes_to_json(const std::vector<DeltaClass>& classes) {
    OrderedJson j;
    j["count"] = classes.size();
    OrderedJson list = OrderedJson::array();
    for (const DeltaClass& cls : classes) {
        OrderedJson c;
        c["monomial"] = int_vector_to_json(cls.monomial);
        c["witness_w"] = int_vector_to_json(cls.witness_w);
        c["hits"] = cls.hits;
        OrderedJson cells = OrderedJson::array();
        for (const SubdivisionCell& cell : cls.witness_pi.cells)
            cells.push_back(labels_to_json(cell.labels));
        c["witness_cells"] = std::move(cells);
        list.push_back(std::move(c));
    }
    j["classes"] = std::move(list);
    return j;
}

// ---- files ------------------------------------------------------------------

IntMatrix load_matrix_file(const std::string& path) {
    const std::string text = read_file(path);
    if (looks_like_json(text)) return matrix_from_json(parse_json(text, path));
    std::istringstream in(text);
    return matrix_from_text(in);
}

CayleyConfig load_cayley_file(const std::string& path) {
    return cayley_from_json(parse_json(read_file(path), path));
}

WeightedFan load_fan_file(const std::string& path) {
    return fan_from_json(parse_json(read_file(path), path));
}

} // namespace tropdisc
