#ifndef MQ_SERIALIZE_HPP
#define MQ_SERIALIZE_HPP

#include "mq/fields.hpp"
#include "mq/liealg.hpp"
#include <json.hpp>
#include <string>

namespace mq {

using Json = nlohmann::ordered_json;

// schema version for every artifact this tool writes
inline constexpr const char* artifact_schema = "1";

Json rat_json(const Rat& r);              // exact "p/q" string
Json series_json(const QSeries& s);       // text form plus coefficient list
Json ratmat_json(const RatMat& m);
Json lie_basis_json(int h);               // {"h", "name", "entries"} per element
Json otmat_json(const OTMat& m);

// resolved run configuration and arbitration outcomes; embedded in every
// artifact so that typo resolutions stay visible
struct Manifest {
    std::string command;
    int order{12};
    int genus{2};
    Rat chi_a{-200};
    std::string yukawa_variant{"disc"};
    bool timings{false};
    Json to_json() const;
};

} // namespace mq

#endif
