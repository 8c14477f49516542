#include "hermitian/serialize.hpp"

#include <sstream>

namespace hermitian {

using nlohmann::json;

std::string matrix_csv(const GFMatrix& m) {
    std::ostringstream os;
    for (long r = 0; r < m.rows; ++r) {
        for (long c = 0; c < m.cols; ++c) {
            if (c) os << ',';
            os << static_cast<int>(m.at(r, c));
        }
        os << '\n';
    }
    return os.str();
}

std::string kind_name(SequenceKind kind) {
    return kind == SequenceKind::OnePoint ? "onepoint" : "twopoint";
}

std::string method_name(BoundMethod method) {
    return method == BoundMethod::Simple ? "simple" : "improved";
}

std::string coset_bounds_csv(const CosetBoundSequence& seq, const CurveParams& cp) {
    std::ostringstream os;
    os << "i,d,a,bound\n";
    for (long i = -1; i <= seq.i_max; ++i) {
        const auto [d, a] = sequence_decompose(i, cp);
        os << i << ',' << d << ',' << a << ',' << seq.bound(i) << '\n';
    }
    return os.str();
}

json coset_bounds_json(const CosetBoundSequence& seq) {
    json bounds = json::object();
    for (long i = -1; i <= seq.i_max; ++i)
        bounds[std::to_string(i)] = seq.bound(i);
    return json{{"q", seq.q},
                {"kind", kind_name(seq.kind)},
                {"method", method_name(seq.method)},
                {"bounds", bounds}};
}

std::string redundancy_csv(const RedundancyTable& t) {
    std::ostringstream os;
    os << "delta,onepoint_classical,onepoint_improved,twopoint_classical,"
          "twopoint_improved,diff\n";
    for (const auto& r : t.rows)
        os << r.delta << ',' << r.onepoint_classical << ',' << r.onepoint_improved
           << ',' << r.twopoint_classical << ',' << r.twopoint_improved << ','
           << r.diff << '\n';
    return os.str();
}

json redundancy_json(const RedundancyTable& t) {
    json rows = json::array();
    for (const auto& r : t.rows)
        rows.push_back({{"delta", r.delta},
                        {"onepoint_classical", r.onepoint_classical},
                        {"onepoint_improved", r.onepoint_improved},
                        {"twopoint_classical", r.twopoint_classical},
                        {"twopoint_improved", r.twopoint_improved},
                        {"diff", r.diff}});
    return json{{"q", t.q}, {"rows", rows}};
}

json monomial_json(const Monomial& mu) {
    return json{{"i", mu.i},
                {"j", mu.j},
                {"chart", mu.chart == Chart::P ? "P" : "Q"}};
}

json check_entries_json(const std::vector<CheckEntry>& entries) {
    json arr = json::array();
    for (const auto& e : entries) {
        json j = monomial_json(e.mono);
        j["pole"] = e.pole;
        j["step"] = e.step;
        j["bound"] = e.bound;
        j["removed"] = e.removed;
        arr.push_back(j);
    }
    return arr;
}

json provenance_json(const Provenance& p) {
    return json{{"construction", p.construction},
                {"q", p.q},
                {"param", p.param},
                {"designed_distance", p.designed_distance},
                {"divisor", p.divisor},
                {"support", p.support},
                {"method", p.method},
                {"note", p.note}};
}

json weight_distribution_json(const WeightDistribution& d) {
    json arr = json::array();
    for (const auto& c : d.counts) arr.push_back(c.to_string());
    return arr;
}

}  // namespace hermitian
