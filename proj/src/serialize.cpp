#include "mq/serialize.hpp"
#include "mq/anomaly.hpp"

namespace mq {

Json rat_json(const Rat& r) { return rat_str(r); }

Json series_json(const QSeries& s) {
    Json j;
    j["text"] = s.str();
    Json coeffs = Json::array();
    for (int n = 0; n <= s.order(); ++n) coeffs.push_back(rat_str(s[n]));
    j["coefficients"] = coeffs;
    j["order"] = s.order();
    return j;
}

Json ratmat_json(const RatMat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json lie_basis_json(int h) {
    Json out = Json::array();
    for (const auto& b : canonical_basis(h)) {
        Json e;
        e["h"] = h;
        e["name"] = b.name;
        e["entries"] = ratmat_json(b.mat);
        out.push_back(e);
    }
    return out;
}

Json otmat_json(const OTMat& m) {
    Json rows = Json::array();
    for (int i = 0; i < 4; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 4; ++j) row.push_back(m.e[i][j].str());
        rows.push_back(row);
    }
    return rows;
}

Json Manifest::to_json() const {
    Json j;
    j["schema"] = artifact_schema;
    j["command"] = command;
    j["order"] = order;
    j["genus"] = genus;
    j["chi_a"] = rat_str(chi_a);
    j["yukawa_variant"] = yukawa_variant;
    // frozen arbitration outcomes, never silent
    Json arb;
    arb["yukawa"] = "computed Gauss-Manin entry equals 5^8 (t4-t0^5)^2/t5^3 (disc variant)";
    arb["kappa"] = "-25";
    arb["flat_coordinate_slot"] = "-1/25 log q";
    arb["flatness_sign"] = "-1";
    arb["f1_printed_scalings"] = "R_g0 F1 = -59/30, R_g11 F1 = -1/10 (printed exponents 5/12, -1/12, 1/10)";
    arb["f1_recursion_normalization"] =
        "5x the printed amplitude; genus-one equations then hold with chi_B = +200";
    arb["genus2_normalization_mu"] = "-15625";
    arb["conifold_gap_frame"] = "monic flat coordinate, leading gap (triple*mu)^(g-1) B_2g/(2g(2g-2))";
    j["arbitration"] = arb;
    return j;
}

} // namespace mq
