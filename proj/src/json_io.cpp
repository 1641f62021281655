#include "torsionlab/json_io.hpp"

#include "torsionlab/errors.hpp"

namespace torsionlab {

using nlohmann::json;

json complex_to_json(const BasedChainComplex& c) {
    json j;
    j["dims"] = c.dims;
    j["boundaries"] = json::array();
    for (const Eigen::MatrixXd& d : c.boundaries) {
        json rows = json::array();
        for (Eigen::Index r = 0; r < d.rows(); ++r) {
            json row = json::array();
            for (Eigen::Index k = 0; k < d.cols(); ++k) row.push_back(d(r, k));
            rows.push_back(std::move(row));
        }
        j["boundaries"].push_back(std::move(rows));
    }
    j["homology_bases"] = json::array();
    for (const auto& basis : c.homology_bases) {
        json vs = json::array();
        for (const Eigen::VectorXd& v : basis) {
            json vec = json::array();
            for (Eigen::Index k = 0; k < v.size(); ++k) vec.push_back(v(k));
            vs.push_back(std::move(vec));
        }
        j["homology_bases"].push_back(std::move(vs));
    }
    return j;
}

namespace {

Eigen::MatrixXd matrix_from_json(const json& j, Eigen::Index rows, Eigen::Index cols) {
    Eigen::MatrixXd m(rows, cols);
    if (!j.is_array()) throw InvalidParameter("boundary matrix must be a JSON array");
    if (j.empty()) {
        if (rows * cols != 0) throw InvalidParameter("boundary matrix has wrong size");
        return m;
    }
    if (j.front().is_array()) {  // nested rows
        if (static_cast<Eigen::Index>(j.size()) != rows)
            throw InvalidParameter("boundary matrix has wrong row count");
        for (Eigen::Index r = 0; r < rows; ++r) {
            const json& row = j[static_cast<size_t>(r)];
            if (static_cast<Eigen::Index>(row.size()) != cols)
                throw InvalidParameter("boundary matrix has wrong column count");
            for (Eigen::Index k = 0; k < cols; ++k)
                m(r, k) = row[static_cast<size_t>(k)].get<double>();
        }
    } else {  // flat row-major
        if (static_cast<Eigen::Index>(j.size()) != rows * cols)
            throw InvalidParameter("boundary matrix has wrong size");
        for (Eigen::Index r = 0; r < rows; ++r)
            for (Eigen::Index k = 0; k < cols; ++k)
                m(r, k) = j[static_cast<size_t>(r * cols + k)].get<double>();
    }
    return m;
}

}  // namespace

BasedChainComplex complex_from_json(const json& j) {
    BasedChainComplex c;
    if (!j.contains("dims") || !j["dims"].is_array())
        throw InvalidParameter("complex JSON needs a dims array");
    c.dims = j["dims"].get<std::vector<int>>();
    if (c.dims.empty()) throw InvalidParameter("complex needs at least one degree");
    for (int d : c.dims)
        if (d < 0) throw InvalidParameter("dimensions must be nonnegative");

    const json bnds = j.value("boundaries", json::array());
    if (bnds.size() + 1 != c.dims.size())
        throw InvalidParameter("complex needs dims.size()-1 boundary matrices");
    for (size_t i = 0; i < bnds.size(); ++i)
        c.boundaries.push_back(matrix_from_json(bnds[i], c.dims[i], c.dims[i + 1]));

    c.homology_bases.resize(c.dims.size());
    const json hb = j.value("homology_bases", json::array());
    if (!hb.empty() && hb.size() != c.dims.size())
        throw InvalidParameter("homology_bases needs one list per degree");
    for (size_t i = 0; i < hb.size(); ++i)
        for (const json& vec : hb[i]) {
            if (static_cast<int>(vec.size()) != c.dims[i])
                throw InvalidParameter("homology vector has wrong dimension in degree " +
                                       std::to_string(i));
            Eigen::VectorXd v(c.dims[i]);
            for (Eigen::Index k = 0; k < v.size(); ++k)
                v(k) = vec[static_cast<size_t>(k)].get<double>();
            c.homology_bases[i].push_back(std::move(v));
        }
    return c;
}

json presentation_to_json(const GroupPresentation& p) {
    json j;
    j["generators"] = p.generator_names;
    j["relators"] = json::array();
    for (const Word& r : p.relators) j["relators"].push_back(word_to_string(r, p.generator_names));
    if (p.meridian) j["meridian"] = word_to_string(*p.meridian, p.generator_names);
    if (p.longitude) j["longitude"] = word_to_string(*p.longitude, p.generator_names);
    if (!p.peripheral_identity.empty()) {
        j["peripheral"] = json::array();
        for (const PeripheralTerm& t : p.peripheral_identity)
            j["peripheral"].push_back({{"conjugator", word_to_string(t.conjugator, p.generator_names)},
                                       {"sign", t.sign},
                                       {"relator", t.relator}});
    }
    return j;
}

GroupPresentation presentation_from_json(const json& j) {
    GroupPresentation p;
    if (!j.contains("generators") || !j["generators"].is_array())
        throw InvalidParameter("presentation JSON needs a generators array");
    p.generator_names = j["generators"].get<std::vector<std::string>>();
    for (const json& r : j.value("relators", json::array()))
        p.relators.push_back(parse_word(r.get<std::string>(), p.generator_names));
    if (j.contains("meridian"))
        p.meridian = parse_word(j["meridian"].get<std::string>(), p.generator_names);
    if (j.contains("longitude"))
        p.longitude = parse_word(j["longitude"].get<std::string>(), p.generator_names);
    for (const json& t : j.value("peripheral", json::array())) {
        PeripheralTerm term;
        term.conjugator = parse_word(t.at("conjugator").get<std::string>(), p.generator_names);
        term.sign = t.at("sign").get<int>();
        if (term.sign != 1 && term.sign != -1)
            throw InvalidParameter("peripheral sign must be +1 or -1");
        term.relator = t.at("relator").get<int>();
        p.peripheral_identity.push_back(std::move(term));
    }
    validate_presentation(p);
    return p;
}

}  // namespace torsionlab
